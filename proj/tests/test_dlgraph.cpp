#include <random>
#include <set>

#include "doctest.h"
#include "dl/dlgraph.hpp"
#include "dl/lamplighter.hpp"

using namespace dl;

namespace {

DLVertex vx(std::string_view s, const GraphParams& p) { return parse_dl_vertex(s, p); }

}  // namespace

TEST_CASE("neighbour counts") {
  const GraphParams p2(2, 2), p3(3, 2), p23(2, 3);
  CHECK(neighbors(DLVertex::origin(2), p2).size() == 4);
  CHECK(neighbors(DLVertex::origin(3), p3).size() == 12);
  CHECK(neighbors(DLVertex::origin(2), p23).size() == 6);
  CHECK(p3.degree() == 12);
}

TEST_CASE("the generator at is a neighbour of the origin") {
  const GraphParams p(2, 2);
  const DLVertex at = vx("[(1; 0:1), (-1)]", p);
  CHECK(to_vertex(eval_word("at", 2), 2) == at);
  const auto ns = neighbors(DLVertex::origin(2), p);
  CHECK(std::find(ns.begin(), ns.end(), at) != ns.end());
  CHECK(bfs_distance(DLVertex::origin(2), at, p) == 1);
}

TEST_CASE("vertex parsing") {
  const GraphParams p(3, 2);
  CHECK(vx("o", p) == DLVertex::origin(3));
  CHECK(to_string(vx("[(1; 0:1), (-1), (0)]", p)) == "[(1; 0:1), (-1), (0)]");
  CHECK_THROWS_AS(vx("[(1), (0), (0)]", p), Error);  // heights do not sum to zero
  CHECK_THROWS_AS(vx("[(1), (-1)]", p), Error);      // wrong number of trees
}

TEST_CASE("balls") {
  const GraphParams p(2, 2);
  const DLVertex o = DLVertex::origin(2);
  CHECK(ball(o, 0, p).size() == 1);
  const Ball b1 = ball(o, 1, p);
  CHECK(b1.size() == 5);
  // The radius-2 neighbourhood: each radius-1 vertex keeps all 4 neighbours.
  const Ball b2 = ball(o, 2, p);
  for (const auto& v : b1.vertices) {
    const auto ns = neighbors(v, p);
    CHECK(ns.size() == 4);
    for (const auto& w : ns) CHECK(b2.contains(w));
  }
  CHECK(b2.sphere_sizes() == std::vector<std::size_t>{1, 4, 10});
}

TEST_CASE("every vertex has degree d(d-1)q and balls look alike everywhere") {
  for (auto [d, q] : {std::pair{2, 2}, {2, 3}, {3, 2}}) {
    const GraphParams p(d, q);
    const Ball b = ball(DLVertex::origin(d), 2, p);
    for (const auto& v : b.vertices) {
      const auto ns = neighbors(v, p);
      CHECK(static_cast<int>(std::set<DLVertex>(ns.begin(), ns.end()).size()) == d * (d - 1) * q);
      for (const auto& w : ns) CHECK(adjacent(v, w));
    }
    const std::size_t size3 = ball(DLVertex::origin(d), 3, p).size();
    for (std::size_t i = 0; i < b.size(); i += 5) CHECK(ball(b.vertices[i], 3, p).size() == size3);
  }
}

TEST_CASE("distance sandwich on a radius-3 ball of DL_2(2)") {
  const GraphParams p(2, 2);
  const Ball b = ball(DLVertex::origin(2), 3, p);
  for (const auto& v : b.vertices) {
    for (const auto& w : b.vertices) {
      const auto d = bfs_distance(v, w, p);
      REQUIRE(d.has_value());
      CHECK(projection_lower_bound(v, w) <= *d);
      CHECK(*d <= projection_upper_bound(v, w));
      CHECK(bfs_distance(DLVertex::origin(2), relative_to(v, w, p), p) == d);
    }
  }
}

TEST_CASE("search distance agrees with breadth-first search") {
  const GraphParams p(3, 2);
  const Ball b = ball(DLVertex::origin(3), 3, p);
  std::mt19937_64 rng(3);
  for (int n = 0; n < 60; ++n) {
    const auto& v = b.vertices[rng() % b.size()];
    const auto& w = b.vertices[rng() % b.size()];
    CHECK(search_distance(v, w, p) == bfs_distance(v, w, p));
  }
}

TEST_CASE("upper bound paths") {
  const GraphParams p2(2, 2);
  const DLVertex o2 = DLVertex::origin(2);
  CHECK(upper_bound_path(o2, o2, p2).moves.empty());
  const DLVertex at = vx("[(1; 0:1), (-1)]", p2);
  const Path pa = upper_bound_path(o2, at, p2);
  CHECK(pa.length() <= 2);
  CHECK(endpoint(pa, p2) == at);

  const GraphParams p3(3, 2);
  const Ball b = ball(DLVertex::origin(3), 5, p3);
  std::mt19937_64 rng(5);
  for (int n = 0; n < 500; ++n) {
    const DLVertex& w = b.vertices[rng() % b.size()];
    const Path path = upper_bound_path(DLVertex::origin(3), w, p3);
    const auto vs = vertices(path, p3);
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) CHECK(adjacent(vs[i], vs[i + 1]));
    CHECK(vs.back() == w);
    CHECK(path.length() <= projection_upper_bound(DLVertex::origin(3), w));
    CHECK(path.length() >= b.distance.at(w));
  }
}

TEST_CASE("moves and words") {
  const GraphParams p(3, 2);
  const auto moves = parse_word("0(1)-1 2(0)-1", p);
  REQUIRE(moves.size() == 2);
  CHECK(moves[0] == Move{0, 1, 1});
  CHECK(to_word(moves) == "0(1)-1 2(0)-1");
  CHECK(parse_word("", p).empty());
  CHECK_THROWS_AS(parse_word("0(1)-0", p), Error);
  CHECK_THROWS_AS(parse_word("0(2)-1", p), Error);
  CHECK_THROWS_AS(parse_word("3(0)-1", p), Error);
  const DLVertex o = DLVertex::origin(3);
  const DLVertex v = apply(o, moves[0], p);
  CHECK(move_between(o, v) == moves[0]);
  CHECK(path_through(vertices(Path{o, moves}, p)).moves == moves);
}

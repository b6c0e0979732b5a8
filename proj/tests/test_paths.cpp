#include <random>

#include "doctest.h"
#include "dl/paths.hpp"

using namespace dl;

namespace {

Path word_path(std::string_view word, const GraphParams& p) { return Path{DLVertex::origin(p.d()), parse_word(word, p)}; }

int bfs(const Path& path, const GraphParams& p) { return *bfs_distance(path.base, endpoint(path, p), p); }

}  // namespace

TEST_CASE("projections") {
  const GraphParams p(2, 2);
  CHECK(project(Path{DLVertex::origin(2), {}}, 0, p) == std::vector<TreeVertex>{TreeVertex::origin()});
  const auto proj = project(word_path("0(1)-1", p), 0, p);
  CHECK(proj == std::vector<TreeVertex>{parse_tree_vertex("(0)", 2), parse_tree_vertex("(1; 0:1)", 2)});
  CHECK(descent_label_at(word_path("0(1)-1 1(1)-0", p), 1, p) == 1);
}

TEST_CASE("turn counts") {
  const GraphParams p(2, 2);
  CHECK(turns_per_tree(word_path("0(0)-1 0(1)-1 0(0)-1", p)) == std::vector<int>{0, 0});
  CHECK(turns_per_tree(word_path("1(0)-0 0(0)-1", p)) == std::vector<int>{1, 0});
  // Down T_0, up, then down again: one turn in each tree.
  const auto two = two_turn_shortcut(0, 2, 2, 0, p);
  const auto turns = turns_per_tree(two.ray);
  CHECK(turns[0] + turns[1] == 2);
}

TEST_CASE("commuting") {
  const GraphParams p(3, 2);
  CHECK_FALSE(commute_adjacent(word_path("0(1)-1 1(0)-2", p), 0, p).has_value());
  const Path disjoint = word_path("0(1)-1 2(1)-0", p);
  CHECK_FALSE(commute_adjacent(disjoint, 0, p).has_value());  // T_0 shared as up and down
  const GraphParams p4(4, 2);
  const Path free = word_path("0(1)-1 2(1)-3", p4);
  const auto swapped = commute_adjacent(free, 0, p4);
  REQUIRE(swapped.has_value());
  CHECK(to_word(swapped->moves) == "2(1)-3 0(1)-1");
  CHECK(endpoint(*swapped, p4) == endpoint(free, p4));
  const Path shared_down = word_path("0(1)-2 1(1)-2", p);
  const auto s2 = commute_adjacent(shared_down, 0, p);
  REQUIRE(s2.has_value());
  CHECK(endpoint(*s2, p) == endpoint(shared_down, p));
}

TEST_CASE("shortening") {
  const GraphParams p(3, 2);
  const Path path = word_path("0(1)-1 2(0)-0", p);
  const auto s = shorten_at(path, 0, p);
  REQUIRE(s.has_value());
  CHECK(to_word(s->moves) == "2(0)-1");
  CHECK(endpoint(*s, p) == endpoint(path, p));

  // In DL_2 the only retrace along one edge is an exact backtrack; it
  // cancels outright.
  const GraphParams p2(2, 2);
  const Path back = word_path("1(0)-0 0(0)-1", p2);
  CHECK_FALSE(shorten_at(back, 0, p2).has_value());
  const auto c = cancel_at(back, 0, p2);
  REQUIRE(c.has_value());
  CHECK(c->moves.empty());
  CHECK(bfs(back, p2) == 0);

  // Down T_0 then up a different branch is no retrace.
  const Path other = word_path("1(0)-0 0(1)-1", p2);
  CHECK_FALSE(shorten_at(other, 0, p2).has_value());
  CHECK_FALSE(cancel_at(other, 0, p2).has_value());
  CHECK(retrace_patterns(other, p2).empty());
}

TEST_CASE("shorten_pass") {
  const GraphParams p(3, 2);
  const Path reduced = word_path("0(1)-1 0(0)-2", p);
  const auto r0 = shorten_pass(reduced, p);
  CHECK(r0.path == reduced);
  CHECK(r0.reductions == 0);

  // T_1 is descended, T_2 moves in between, then the same T_1 edge is climbed.
  const Path pattern = word_path("0(1)-1 2(0)-0 1(0)-2", p);
  REQUIRE(retrace_patterns(pattern, p).size() == 1);
  const auto r = shorten_pass(pattern, p);
  CHECK(r.path.length() <= pattern.length() - 1);
  CHECK(endpoint(r.path, p) == endpoint(pattern, p));
  CHECK(r.path.length() >= bfs(pattern, p));
}

TEST_CASE("shorten_pass on random DL_3(2) paths") {
  const GraphParams p(3, 2);
  std::mt19937_64 rng(17);
  const auto moves = all_moves(p);
  for (int n = 0; n < 300; ++n) {
    Path path{DLVertex::origin(3), {}};
    const int len = static_cast<int>(rng() % 11);
    for (int i = 0; i < len; ++i) path.moves.push_back(moves[rng() % moves.size()]);
    const auto r = shorten_pass(path, p);
    CHECK(endpoint(r.path, p) == endpoint(path, p));
    CHECK(r.path.length() <= path.length());
    CHECK(retrace_patterns(r.path, p).empty());
    CHECK(r.path.length() >= bfs(path, p));
  }
}

TEST_CASE("geodesity") {
  const GraphParams p(2, 2);
  CHECK(is_geodesic(Path{DLVertex::origin(2), {}}, p));
  const auto two = two_turn_shortcut(0, 2, 2, 0, p);
  Path prefix = two.ray;
  prefix.moves.resize(static_cast<std::size_t>(two.target_index));
  CHECK_FALSE(is_geodesic(prefix, p));
  CHECK(is_geodesic(two.shortcut, p));
  CHECK(turns_per_tree(two.shortcut)[0] <= 1);
  CHECK_FALSE(is_geodesic(word_path("0(1)-1 1(0)-0", p), p));
  CHECK(is_geodesic(word_path("0(1)-1 1(1)-0", p), p));  // climbs a different T_1 edge
}

TEST_CASE("geodesic enumeration") {
  const GraphParams p(2, 2);
  const DLVertex o = DLVertex::origin(2);
  const auto self = enumerate_geodesics(o, o, p);
  REQUIRE(self.size() == 1);
  CHECK(self[0].moves.empty());
  const DLVertex at = parse_dl_vertex("[(1; 0:1), (-1)]", p);
  const auto one = enumerate_geodesics(o, at, p);
  REQUIRE(one.size() == 1);
  CHECK(to_word(one[0].moves) == "0(1)-1");

  // Count check against the geodesic DAG.
  const GraphParams p3(3, 2);
  const auto dag = geodesic_dag(DLVertex::origin(3), 4, p3);
  std::vector<std::size_t> count(dag.ball.size(), 0);
  count[0] = 1;
  for (std::size_t i = 1; i < dag.ball.size(); ++i) {
    for (const auto& e : dag.incoming[i]) count[i] += count[e.from];
  }
  for (std::size_t i = 0; i < dag.ball.size(); i += 37) {
    const auto all = enumerate_geodesics(DLVertex::origin(3), dag.ball.vertices[i], p3);
    CHECK(all.size() == count[i]);
    for (const auto& g : all) {
      for (int t : turns_per_tree(g)) CHECK(t <= 1);
    }
  }
}

TEST_CASE("two-turn shortcut lengths") {
  const GraphParams p(2, 2);
  struct Case {
    int k, l, shortcut, prefix;
  };
  for (const Case c : {Case{1, 1, 1, 3}, Case{2, 1, 2, 4}, Case{1, 2, 3, 5}}) {
    const auto s = two_turn_shortcut(0, c.k, c.l, 0, p);
    CHECK(s.target_index == c.prefix);
    CHECK(s.shortcut.length() == c.shortcut);
    CHECK(endpoint(s.shortcut, p) == s.target);
    CHECK(bfs_distance(DLVertex::origin(2), s.target, p) == c.shortcut);
  }
}

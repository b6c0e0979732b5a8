#include <deque>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "dl/trees.hpp"

using namespace dl;

namespace {

TreeVertex tv(std::string_view s, int q = 2) { return parse_tree_vertex(s, q); }

// Independent oracle: breadth-first search over predecessor/successor
// adjacency, restricted to a ball around the origin.
std::map<TreeVertex, int> tree_bfs(const TreeVertex& from, int radius, int q) {
  std::map<TreeVertex, int> dist{{from, 0}};
  std::deque<TreeVertex> queue{from};
  while (!queue.empty()) {
    const TreeVertex v = queue.front();
    queue.pop_front();
    const int dv = dist[v];
    if (dv == radius) continue;
    std::vector<TreeVertex> next{predecessor(v)};
    for (Label a = 0; a < q; ++a) next.push_back(successor(v, a, q));
    for (const auto& w : next) {
      if (dist.emplace(w, dv + 1).second) queue.push_back(w);
    }
  }
  return dist;
}

// Oracle for gca: walk both vertices down to a common height and keep
// stepping until they coincide.
TreeVertex gca_by_walking(TreeVertex v, TreeVertex w) {
  while (v.height > w.height) v = predecessor(v);
  while (w.height > v.height) w = predecessor(w);
  while (!(v == w)) {
    v = predecessor(v);
    w = predecessor(w);
  }
  return v;
}

}  // namespace

TEST_CASE("predecessor drops the top label") {
  CHECK(predecessor(tv("(0)")) == tv("(-1)"));
  CHECK(predecessor(tv("(2; 1:1)")) == tv("(1)"));
  CHECK(predecessor(tv("(1; -3:1)")) == tv("(0; -3:1)"));
}

TEST_CASE("successor records nonzero labels only") {
  CHECK(successor(tv("(0)"), 0, 2) == tv("(1)"));
  CHECK(successor(tv("(0)"), 1, 2) == tv("(1; 0:1)"));
  CHECK(successor(tv("(-1)"), 1, 2) == tv("(0; -1:1)"));
  CHECK_THROWS_AS(successor(tv("(0)"), 2, 2), Error);
}

TEST_CASE("gca examples") {
  CHECK(gca(tv("(0)"), tv("(0)")) == tv("(0)"));
  CHECK(gca(tv("(1; 0:1)"), tv("(1)")) == tv("(0)"));
  CHECK(gca(tv("(2)"), tv("(-1)")) == tv("(-1)"));
}

TEST_CASE("tree distance examples") {
  CHECK(tree_distance(tv("(0)"), tv("(0)")) == 0);
  CHECK(tree_distance(tv("(1; 0:1)"), tv("(1)")) == 2);
  CHECK(tree_distance(tv("(-2)"), tv("(0)")) == 2);
}

TEST_CASE("closed-form distance and gca agree with the BFS oracle on a radius-4 ball") {
  for (int q : {2, 3}) {
    const auto ball = tree_bfs(TreeVertex::origin(), 4, q);
    std::vector<TreeVertex> vs;
    for (const auto& [v, d] : ball) vs.push_back(v);
    for (const auto& v : vs) {
      CHECK(is_canonical(v, q));
      CHECK(tree_distance(TreeVertex::origin(), v) == ball.at(v));
    }
    // Pairwise: a ball of radius 8 around v contains the whole radius-4 ball.
    for (std::size_t i = 0; i < vs.size(); i += 7) {
      const auto from_v = tree_bfs(vs[i], 8, q);
      for (const auto& w : vs) {
        REQUIRE(from_v.count(w) == 1);
        CHECK(tree_distance(vs[i], w) == from_v.at(w));
        const TreeVertex m = gca(vs[i], w);
        CHECK(m == gca_by_walking(vs[i], w));
        CHECK(m.height <= std::min(vs[i].height, w.height));
      }
    }
  }
}

TEST_CASE("predecessor inverts successor and distance is a metric") {
  std::mt19937_64 rng(11);
  const int q = 3;
  auto random_vertex = [&] {
    TreeVertex v;
    v.height = std::uniform_int_distribution<Height>(-5, 5)(rng);
    for (Height l = v.height - 6; l < v.height; ++l) v.branch.set(l, std::uniform_int_distribution<Label>(0, q - 1)(rng));
    return v;
  };
  for (int n = 0; n < 300; ++n) {
    const TreeVertex a = random_vertex(), b = random_vertex(), c = random_vertex();
    for (Label x = 0; x < q; ++x) CHECK(predecessor(successor(a, x, q)) == a);
    CHECK(tree_distance(a, b) == tree_distance(b, a));
    CHECK((tree_distance(a, b) == 0) == (a == b));
    CHECK(tree_distance(a, c) <= tree_distance(a, b) + tree_distance(b, c));
    CHECK(tree_distance(a, b) == tree_distance(TreeVertex::origin(), relative_to(a, b, q)));
    CHECK(absolute_from(a, relative_to(a, b, q), q) == b);
  }
}

TEST_CASE("text form round-trips and rejects non-canonical input") {
  for (const char* s : {"(0)", "(3; -2:1, 0:2, 2:1)", "(-4; -9:1)"}) CHECK(to_string(tv(s, 3)) == s);
  CHECK_THROWS_AS(tv("(1; 0:0)"), Error);     // explicit zero label
  CHECK_THROWS_AS(tv("(1; 1:1)"), Error);     // level not below height
  CHECK_THROWS_AS(tv("(3; 1:1, 0:1)"), Error);  // unsorted
  CHECK_THROWS_AS(tv("(1; 0:2)"), Error);     // label >= q
  CHECK_THROWS_AS(tv("(1"), Error);
}

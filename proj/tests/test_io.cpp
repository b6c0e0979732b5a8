#include "doctest.h"
#include "dl/io.hpp"

using namespace dl;

TEST_CASE("tree vertex JSON") {
  const TreeVertex v = parse_tree_vertex("(3; -2:1, 0:2)", 3);
  const Json j = to_json(v);
  CHECK(j.dump() == R"({"h":3,"branch":{"-2":1,"0":2}})");
  CHECK(tree_vertex_from_json(j, 3) == v);
  CHECK_THROWS_AS(tree_vertex_from_json(Json::parse(R"({"h":1,"branch":{"0":0}})"), 2), Error);
  CHECK_THROWS_AS(tree_vertex_from_json(Json::parse(R"({"h":1,"branch":{"1":1}})"), 2), Error);
  CHECK_THROWS_AS(tree_vertex_from_json(Json::parse(R"({"h":1,"branch":{"x":1}})"), 2), Error);
}

TEST_CASE("vertex and lamp stand JSON") {
  const GraphParams p(2, 2);
  const DLVertex v = parse_dl_vertex("[(1; 0:1), (-1)]", p);
  CHECK(dl_vertex_from_json(to_json(v), p) == v);
  CHECK_THROWS_AS(dl_vertex_from_json(Json::parse(R"([{"h":1},{"h":0}])"), p), Error);

  const LampStand g = eval_word("t^3 (at) t^-2 (at)^-2 t^-1", 2);
  CHECK(to_json(g).dump() == R"({"lamps":{"0":1,"1":1,"3":1},"pos":-1})");
  CHECK(lamp_stand_from_json(to_json(g), 2) == g);
  CHECK_THROWS_AS(lamp_stand_from_json(Json::parse(R"({"lamps":{"0":2},"pos":0})"), 2), Error);
}

TEST_CASE("boundary point JSON") {
  const BoundaryPoint x = make_point(1, LampConfig{{{2, 1}}, {1, 0}, -1}, 2);
  const Json j = to_json(x);
  // Lamp 0 continues the tail, so the canonical form starts it there.
  CHECK(j.dump() == R"({"side":1,"head":{"2":1},"tail":[0,1],"tail_from":0})");
  CHECK(boundary_point_from_json(j, 2) == x);
  CHECK(boundary_point_from_json(Json::parse(R"({"side":0,"head":{"-3":1}})"), 2) ==
        finite_point(0, {{-3, 1}}, 2));
  CHECK_THROWS_AS(boundary_point_from_json(Json::parse(R"({"side":2})"), 2), Error);
}

TEST_CASE("ray descriptor JSON") {
  const GraphParams p(3, 2);
  const Json j = Json::parse(R"({"prefix":"1(0)-0","up_tree":0,"up_labels":[1,0],"down_tree":1})");
  const RayDescriptor r = ray_from_json(j, p);
  CHECK(r.prefix.length() == 1);
  CHECK(ray_from_json(to_json(r), p) == r);
  CHECK_THROWS_AS(ray_from_json(Json::parse(R"({"up_tree":0,"up_labels":[1],"down_tree":0})"), p), Error);
}

TEST_CASE("DOT export") {
  const GraphParams p(2, 2);
  const std::string dot = to_dot(ball(DLVertex::origin(2), 2, p), p);
  auto count = [&](const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = dot.find(needle); pos != std::string::npos; pos = dot.find(needle, pos + 1)) ++n;
    return n;
  };
  CHECK(dot.rfind("graph ball {", 0) == 0);
  CHECK(count("[label=") == 15);
  // 4 edges at the origin, 4 * 3 from the first sphere outward; the second
  // sphere has no edges inside it (the graph is bipartite by parity of h_0).
  CHECK(count(" -- ") == 16);
}

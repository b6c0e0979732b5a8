#include "doctest.h"
#include "dl/boundary2.hpp"
#include "dl/paths.hpp"
#include "dl/sample.hpp"

using namespace dl;

namespace {

BoundaryPoint point(int side, std::map<std::int64_t, Label> head, std::vector<Label> tail = {0}, std::int64_t tail_from = 0,
                    int q = 2) {
  if (tail == std::vector<Label>{0} && !head.empty()) tail_from = side == 0 ? head.rbegin()->first + 1 : head.begin()->first - 1;
  return make_point(side, LampConfig{std::move(head), std::move(tail), tail_from}, q);
}

}  // namespace

TEST_CASE("periodic configurations are canonical") {
  const PeriodicConfig a({{-1, 1}}, {1, 0, 1, 0}, 2, 2);
  const PeriodicConfig b({{-1, 1}, {2, 1}, {3, 0}}, {1, 0}, 4, 2);
  CHECK(a == b);
  CHECK(a.period() == 2);
  CHECK(a.at(-1) == 1);
  CHECK(a.at(100) == 1);
  CHECK(a.at(101) == 0);
  CHECK(a.min_nonzero() == -1);
  CHECK(PeriodicConfig::finite({{3, 1}}, 2).max_nonzero() == 3);
  CHECK(PeriodicConfig::finite({}, 2).is_zero());
  CHECK(a.shifted(2).at(1) == 1);
  CHECK(a.plus({{-1, 1}}, 2).at(-1) == 0);
  CHECK(PeriodicConfig::first_difference(a, a.plus({{7, 1}}, 2)) == 7);
  CHECK_FALSE(PeriodicConfig::first_difference(a, b).has_value());
  CHECK(PeriodicConfig({}, {1}, 0, 3).negated(3).at(5) == 2);
}

TEST_CASE("classification") {
  CHECK(classify(point(0, {{-3, 1}})) == ClassIndex{0, 3});
  CHECK(classify(point(0, {})) == ClassIndex{0, 0});
  CHECK(classify(point(1, {{4, 1}})) == ClassIndex{1, 5});
  CHECK(classify(point(1, {{-4, 1}})) == ClassIndex{1, 0});
  CHECK(classify(point(0, {}, {1}, -2)) == ClassIndex{0, 2});
}

TEST_CASE("canonical rays") {
  const GraphParams p(2, 2);
  const Path zero = canonical_ray(point(0, {}), 4, 2);
  CHECK(to_word(zero.moves) == "0(0)-1 0(0)-1 0(0)-1 0(0)-1");
  const Path c2 = canonical_ray(point(0, {{-2, 1}}), 5, 2);
  CHECK(to_word(c2.moves) == "1(0)-0 1(0)-0 0(1)-1 0(0)-1 0(0)-1");
  CHECK(is_geodesic(c2, p));
  const BoundaryPoint x = point(1, {{2, 1}}, {1, 0}, -1);
  for (int len : {1, 5, 9}) {
    CHECK(canonical_ray(x, len, 2) == canonical_ray(point(1, {{2, 1}}, {1, 0}, -1), len, 2));
    CHECK(is_geodesic(canonical_ray(x, len, 2), p));
  }
}

TEST_CASE("basis neighbourhoods") {
  Rng rng(8);
  for (int n = 0; n < 50; ++n) {
    const BoundaryPoint x = random_boundary_point(rng, 2, n % 2);
    for (int k = 0; k < 10; ++k) CHECK(basis_membership(x, x, k));
  }
}

TEST_CASE("non-Hausdorff witnesses") {
  const BoundaryPoint x = point(0, {});
  const BoundaryPoint y = point(0, {{2, 1}});
  for (int k = 0; k <= 8; ++k) {
    const BoundaryPoint z = non_hausdorff_witness(x, y, k, 2);
    const ClassIndex c = classify(z);
    CHECK(c.side == 1);
    CHECK(c.n >= k);
    CHECK(basis_membership(z, x, k));
    CHECK(basis_membership(z, y, k));
  }
}

TEST_CASE("separation") {
  const BoundaryPoint x3 = point(0, {{-3, 1}});
  const BoundaryPoint y5 = point(0, {{-5, 1}});
  const auto w = separation_witness(x3, y5);
  CHECK(w.k <= 4);
  CHECK_FALSE(basis_membership(y5, x3, 4));
  CHECK_FALSE(basis_membership(x3, y5, 4));
  CHECK(clopen_separates(ClassIndex{0, 3}, x3, y5));
  REQUIRE(w.clopen.has_value());
  CHECK(clopen_separates(*w.clopen, x3, y5));

  const BoundaryPoint a = point(0, {{-2, 1}});
  const BoundaryPoint b = point(0, {{-2, 1}, {7, 1}});
  const auto wab = separation_witness(a, b);
  CHECK(wab.k <= 2 * 2 + 7 + 1);
  CHECK_FALSE(basis_membership(a, b, wab.k));
  CHECK(basis_membership(a, b, wab.k - 1));

  CHECK(separation_witness(point(0, {}), point(1, {})).k == 1);
}

TEST_CASE("generator actions") {
  const BoundaryPoint x = point(0, {{-1, 1}, {2, 1}});
  CHECK(act(lamp_t(), x, 2) == point(0, {{0, 1}, {3, 1}}));
  CHECK(act(lamp_a(), x, 2) == point(0, {{-1, 1}, {0, 1}, {2, 1}}));
  CHECK(act(lamp_at_position(2), x, 2) == point(0, {{-1, 1}}));
  const BoundaryPoint y = point(1, {{-1, 1}});
  CHECK(act(lamp_t(), y, 2) == point(1, {{0, 1}}));
  CHECK(classify(act(inverse(lamp_t(), 2), x, 2)) == ClassIndex{0, 2});
}

TEST_CASE("attracting points") {
  CHECK(power_infinity(lamp_t(), 2) == point(0, {}));
  CHECK(power_infinity(eval_word("at", 2), 2) == point(0, {}, {1}, 0));
  CHECK(power_infinity(inverse(lamp_t(), 2), 2) == point(1, {}));
  const LampStand g = eval_word("at^2", 3);
  const BoundaryPoint gi = power_infinity(g, 3);
  CHECK(act(g, gi, 3) == gi);
  CHECK_THROWS_AS(power_infinity(lamp_a(), 2), Error);
}

TEST_CASE("dynamics converge to the attractor") {
  const LampStand g = eval_word("at", 2);
  const auto r = dynamics_report(g, point(0, {}), 6, 2);
  for (int n = 1; n <= 6; ++n) CHECK(r.first_disagreement[static_cast<std::size_t>(n - 1)] == n);
}

TEST_CASE("rebasing rays") {
  const GraphParams p(2, 2);
  RayDescriptor r;
  r.prefix.base = parse_dl_vertex("[(1; 0:1), (-1)]", p);
  r.up_tree = 0;
  r.up_labels = {0};
  r.down_tree = 1;
  CHECK(rebase_ray(r, 2) == point(0, {{0, 1}}));
  const BoundaryPoint x = point(1, {{3, 1}}, {1, 1, 0}, -2);
  CHECK(rebase_ray(canonical_descriptor(x, 2), 2) == x);
  const LampStand g = eval_word("t^2 a t^-5 a", 2);
  CHECK(rebase_ray(translate(g, canonical_descriptor(x, 2), 2), 2) == act(g, x, 2));
}

#include "doctest.h"
#include "dl/boundary_d.hpp"
#include "dl/paths.hpp"
#include "dl/sample.hpp"

using namespace dl;

namespace {

RayDescriptor ray(std::string_view prefix, int up, std::vector<Label> labels, int down, const GraphParams& p) {
  RayDescriptor r;
  r.prefix = Path{DLVertex::origin(p.d()), parse_word(prefix, p)};
  r.up_tree = up;
  r.up_labels = std::move(labels);
  r.down_tree = down;
  require_valid(r, p);
  return r;
}

}  // namespace

TEST_CASE("ends of rays") {
  const GraphParams p(3, 2);
  const auto ends = ends_of(ray("", 0, {0}, 1, p), p);
  REQUIRE(ends.size() == 3);
  CHECK(ends[0].kind == TreeEnd::Kind::kAscending);
  CHECK(ends[0].labels == PeriodicConfig::finite({}, 2));
  CHECK(ends[1].kind == TreeEnd::Kind::kDescending);
  CHECK(ends[2].kind == TreeEnd::Kind::kConstant);
  CHECK(ends[2].vertex == TreeVertex::origin());

  const auto e2 = ends_of(ray("2(1)-0 0(0)-2", 0, {1}, 1, p), p);
  CHECK(e2[2].kind == TreeEnd::Kind::kConstant);
  CHECK(e2[2].vertex == TreeVertex::origin());
}

TEST_CASE("tracking ray drops excursions into other trees") {
  const GraphParams p(3, 2);
  const RayDescriptor gamma = ray("2(1)-1 2(0)-1 1(1)-2 1(0)-2", 0, {1, 0}, 1, p);
  const RayDescriptor tau = tracking_ray(gamma, p);
  for (int t = 0; t < tau.prefix_length() + 2 * tau.period() + 2; ++t) CHECK_FALSE(move_at(tau, t).touches(2));
  const auto cert = certify_asymptotic(tau, gamma, p);
  CHECK(cert.asymptotic);
  CHECK(truncations_geodesic(tau, 10, p));
}

TEST_CASE("swapping projections") {
  const GraphParams p(3, 2);
  // Empty projection to T_0, T_1 climbs forever.
  const RayDescriptor gamma = ray("", 1, {1, 0}, 2, p);
  const RayDescriptor swapped = swap_projection(gamma, 0, 1, p);
  CHECK(swapped.up_tree == 0);
  CHECK(swap_projection(swapped, 1, 0, p) == gamma);
  for (int n : {1, 3, 5}) {
    const RayDescriptor approx = swap_approximant(gamma, 0, 1, n, p);
    CHECK(common_prefix(approx, swapped, 50) >= n);
    CHECK(certify_asymptotic(approx, gamma, p).asymptotic);
  }
}

TEST_CASE("normalization") {
  const GraphParams p(3, 2);
  const RayDescriptor gamma = ray("0(1)-2", 2, {1}, 0, p);
  const RayDescriptor nrm = normalize(gamma, p);
  CHECK(is_normalized(nrm));
  // Normalizing relabels trees, so the result climbs T_0 along the end that
  // gamma climbs in T_2; the tracking ray it starts from is asymptotic.
  CHECK(ends_of(nrm, p)[0].labels == ends_of(gamma, p)[2].labels);
  CHECK(certify_asymptotic(tracking_ray(gamma, p), gamma, p).asymptotic);
  CHECK(is_normalized(ray("", 0, {0}, 1, p)));
}

TEST_CASE("indiscreteness witnesses") {
  const GraphParams p(3, 2);
  Rng rng(21);
  const RayDescriptor g1 = random_normalized_ray(rng, p, 1);
  const RayDescriptor g2 = random_normalized_ray(rng, p, 2);
  const auto w = indiscrete_witness(g1, g2, 6, p);
  CHECK(w.shared_prefix >= 6);
  CHECK(w.claimed_prefix == 6);
  CHECK(w.certificate.asymptotic);
  CHECK(w.certificate2.asymptotic);
  CHECK(truncations_geodesic(w.tau, 12, p));
  CHECK(truncations_geodesic(w.tau2, 12, p));

  const auto same = indiscrete_witness(g1, g1, 5, p);
  CHECK(same.tau == same.tau2);
  CHECK_THROWS_AS(indiscrete_witness(g1, g2, 2, p), Error);
}

#pragma once

#include "dl/rays.hpp"

namespace dl {

/// How far a climbed end reaches below height 0: the number of descents a
/// ray from the origin needs before it can climb that end.
Height end_depth(const PeriodicConfig& end);

/// A ray from the origin asymptotic to `gamma` that never touches the trees
/// in which `gamma` is eventually constant.  It descends the climbed tree as
/// far as its end requires, then climbs it, descending the same tree as
/// `gamma` throughout.  Requires d > 2.
RayDescriptor tracking_ray(const RayDescriptor& gamma, const GraphParams& params);

/// `gamma` with trees a and b exchanged.  Needs an empty projection to T_a
/// and an infinite one to T_b.  Applying it again with (b, a) undoes it.
RayDescriptor swap_projection(const RayDescriptor& gamma, int a, int b, const GraphParams& params);

/// Ray sharing its first n moves with swap_projection(gamma, a, b) but
/// asymptotic to gamma: after n moves it hands the infinite projection back
/// to T_b.  Needs n at least the prefix length of gamma.
RayDescriptor swap_approximant(const RayDescriptor& gamma, int a, int b, int n, const GraphParams& params);

/// T_0 climbs, T_1 descends and no other tree is ever touched.
bool is_normalized(const RayDescriptor& r);

/// Tracking ray followed by swaps so that T_0 climbs, T_1 descends and no
/// other tree is touched.
RayDescriptor normalize(const RayDescriptor& gamma, const GraphParams& params);

struct IndiscreteWitness {
  RayDescriptor gamma;   // inputs, normalized first unless they already are
  RayDescriptor gamma2;
  RayDescriptor tau;     // asymptotic to gamma
  RayDescriptor tau2;    // asymptotic to gamma2
  int claimed_prefix = 0;
  int shared_prefix = 0;
  AsymptoticCertificate certificate;
  AsymptoticCertificate certificate2;
};

/// Two rays agreeing on their first n moves, one asymptotic to each
/// (normalized) input: n climbs of T_2 by label 0 while T_1 descends, then
/// descents of T_0 to the depth of the input's end, then the climb to it.
/// Requires d > 2 and n greater than both end depths.
IndiscreteWitness indiscrete_witness(const RayDescriptor& gamma, const RayDescriptor& gamma2, int n,
                                     const GraphParams& params);

}  // namespace dl

#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dl/lamplighter.hpp"
#include "dl/periodic.hpp"
#include "dl/rays.hpp"

namespace dl {

/// Point of the visual boundary of DL_2(q).  Side 0 rays climb T_0 (the
/// lamplighter walks off to +inf), side 1 rays climb T_1 (to -inf).  `end`
/// holds the labels of the climbed end of T_side by level; lamp p sits at
/// level p on side 0 and at level -p-1 on side 1.
struct BoundaryPoint {
  int side = 0;
  PeriodicConfig end;

  Label lamp(std::int64_t p) const { return end.at(side == 0 ? p : -p - 1); }

  friend bool operator==(const BoundaryPoint&, const BoundaryPoint&) = default;
  friend auto operator<=>(const BoundaryPoint&, const BoundaryPoint&) = default;
};

/// "side 0 {-2:1} [1 0]@3": head lamps, then the tail from lamp 3 outward.
std::string to_string(const BoundaryPoint& x);

/// Lamp-coordinate view: head values by lamp position, tail repeating away
/// from the origin (toward +inf on side 0, -inf on side 1) starting at lamp
/// `tail_from`.
struct LampConfig {
  std::map<std::int64_t, Label> head;
  std::vector<Label> tail{0};
  std::int64_t tail_from = 0;
};

BoundaryPoint make_point(int side, const LampConfig& lamps, int q);
LampConfig lamp_config(const BoundaryPoint& x);
BoundaryPoint finite_point(int side, const std::map<std::int64_t, Label>& lamps, int q);

/// C_n^side: rays that descend exactly n edges in T_side before climbing it.
struct ClassIndex {
  int side = 0;
  Height n = 0;

  friend bool operator==(const ClassIndex&, const ClassIndex&) = default;
  friend auto operator<=>(const ClassIndex&, const ClassIndex&) = default;
};

ClassIndex classify(const BoundaryPoint& x);

/// The representative ray from the origin: n descents in T_side (climbing the
/// other tree by label 0), then up T_side along the end.
RayDescriptor canonical_descriptor(const BoundaryPoint& x, int q);
Path canonical_ray(const BoundaryPoint& x, int length, int q);

/// Membership of x in the basis neighbourhood B_[0,k] of `center`.
bool basis_membership(const BoundaryPoint& x, const BoundaryPoint& center, int k);

/// For distinct x, y in one C_0^i: a point of C_m^{1-i}, m >= k, lying in the
/// k-neighbourhoods of both.
BoundaryPoint non_hausdorff_witness(const BoundaryPoint& x, const BoundaryPoint& y, int k, int q);

struct SeparationWitness {
  int k = 0;
  /// A class C_n^i (n > 0) containing x or y but not the other.
  std::optional<ClassIndex> clopen;
};

/// Smallest k whose neighbourhoods of x and y exclude each other.
SeparationWitness separation_witness(const BoundaryPoint& x, const BoundaryPoint& y);

/// Checks that C separates: one point lies in it, the other does not, and
/// the (n+1)-neighbourhood of each point stays on its own side of C.
bool clopen_separates(const ClassIndex& c, const BoundaryPoint& x, const BoundaryPoint& y);

/// Left action of the lamplighter group.
BoundaryPoint act(const LampStand& g, const BoundaryPoint& x, int q);

/// Limit of g^n for exp_t(g) != 0.
BoundaryPoint power_infinity(const LampStand& g, int q);

struct DynamicsReport {
  BoundaryPoint attractor;
  /// Per n = 1..n_max: lowest level (in end coordinates of the attractor
  /// side) where g^n . x and the attractor differ; nullopt if equal.
  std::vector<std::optional<Height>> first_disagreement;
};

DynamicsReport dynamics_report(const LampStand& g, const BoundaryPoint& x, int n_max, int q);

/// Boundary point of a DL_2(q) ray based anywhere: the pair of ends it
/// shares with the origin-based class.
BoundaryPoint rebase_ray(const RayDescriptor& r, int q);

/// Image of a ray under left multiplication by g.
RayDescriptor translate(const LampStand& g, const RayDescriptor& r, int q);

}  // namespace dl

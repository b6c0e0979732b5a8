#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dl/dlgraph.hpp"
#include "dl/periodic.hpp"

namespace dl {

/// Finite description of an infinite ray: an explicit prefix, then forever
/// ascending in `up_tree` with labels cycling through `up_labels` while
/// descending in `down_tree`.
struct RayDescriptor {
  Path prefix;
  int up_tree = 0;
  std::vector<Label> up_labels{0};
  int down_tree = 1;

  int prefix_length() const { return prefix.length(); }
  int period() const { return static_cast<int>(up_labels.size()); }

  friend bool operator==(const RayDescriptor&, const RayDescriptor&) = default;
};

void require_valid(const RayDescriptor& r, const GraphParams& params);

/// Move number t of the ray.
Move move_at(const RayDescriptor& r, int t);
/// The first `length` moves as a path.
Path truncate(const RayDescriptor& r, int length);
DLVertex vertex_at(const RayDescriptor& r, int t, const GraphParams& params);

/// Number of leading moves two rays share (capped at `limit`).  Rays with
/// different bases share nothing.
int common_prefix(const RayDescriptor& a, const RayDescriptor& b, int limit);

/// What one tree coordinate does as t -> infinity.
struct TreeEnd {
  enum class Kind { kConstant, kAscending, kDescending };
  Kind kind = Kind::kConstant;
  TreeVertex vertex;      // kConstant: the eventual vertex
  PeriodicConfig labels;  // kAscending: labels of the end, by level

  friend bool operator==(const TreeEnd&, const TreeEnd&) = default;
};

std::vector<TreeEnd> ends_of(const RayDescriptor& r, const GraphParams& params);

/// Continues `path` by climbing tree `up` along `end` (the current T_up
/// vertex must lie on the way to it) while descending `down`.  The prefix is
/// extended until the climb reaches the periodic part of `end`.
RayDescriptor climb_toward(Path path, int up, const PeriodicConfig& end, int down, const GraphParams& params);

/// Evidence that two rays stay a bounded distance apart.  From `merge_index`
/// on, in every tree both rays either sit still, climb the same end from
/// points on it, or descend along comparable vertices; each tree distance is
/// then constant for all later t, and the distance between the rays is at
/// most `bound` (the sum).  `distances` are also re-measured over one full
/// period beyond the merge index.
struct AsymptoticCertificate {
  bool asymptotic = false;
  int merge_index = 0;
  std::vector<Height> distances;
  Height bound = 0;
  int checked_through = 0;
  std::string failure;
};

AsymptoticCertificate certify_asymptotic(const RayDescriptor& a, const RayDescriptor& b, const GraphParams& params);

/// True if the truncation of length `cap` is a geodesic (hence so are all
/// shorter ones).
bool truncations_geodesic(const RayDescriptor& r, int cap, const GraphParams& params);

std::string to_string(const RayDescriptor& r);

}  // namespace dl

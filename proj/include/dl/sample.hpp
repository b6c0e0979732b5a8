#pragma once

#include <cstdint>
#include <random>

#include "dl/boundary2.hpp"
#include "dl/rays.hpp"

namespace dl {

using Rng = std::mt19937_64;

/// Lamps in [-window, window], each lit with probability 1/2 in a uniform
/// nonzero state; position uniform in [-max_pos, max_pos].
LampStand random_lamp_stand(Rng& rng, int q, int window, int max_pos);

/// Point on the given side with a random head around the origin and a
/// random tail (zero with probability 1/3) of period 1..3.
BoundaryPoint random_boundary_point(Rng& rng, int q, int side);

/// Uniformly random moves from `base`.
Path random_path(Rng& rng, const GraphParams& params, const DLVertex& base, int length);

/// Random climbed end whose lowest nonzero level is -depth (or which is
/// nonzero only at levels >= 0 when depth is 0).
PeriodicConfig random_end(Rng& rng, int q, int depth);

/// Normalized ray from the origin: `depth` descents of T_0 while T_1 climbs
/// by random labels, then the climb of T_0 to a random end of that depth
/// while T_1 descends.
RayDescriptor random_normalized_ray(Rng& rng, const GraphParams& params, int depth);

}  // namespace dl

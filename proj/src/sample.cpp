#include "dl/sample.hpp"

namespace dl {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

LampStand random_lamp_stand(Rng& rng, int q, int window, int max_pos) {
  LampStand g;
  for (int p = -window; p <= window; ++p) {
    if (uniform(rng, 0, 1) == 1) g.lamps[p] = uniform(rng, 1, q - 1);
  }
  g.pos = uniform(rng, -max_pos, max_pos);
  return g;
}

BoundaryPoint random_boundary_point(Rng& rng, int q, int side) {
  LampConfig c;
  const int from = uniform(rng, -4, 4);
  for (int p = -6; p <= 6; ++p) {
    const bool in_head = side == 0 ? p < from : p > from;
    if (in_head && uniform(rng, 0, 2) == 0) c.head[p] = uniform(rng, 1, q - 1);
  }
  c.tail_from = from;
  if (uniform(rng, 0, 2) == 0) {
    c.tail = {0};
  } else {
    c.tail.assign(static_cast<std::size_t>(uniform(rng, 1, 3)), 0);
    for (auto& s : c.tail) s = uniform(rng, 0, q - 1);
  }
  return make_point(side, c, q);
}

Path random_path(Rng& rng, const GraphParams& params, const DLVertex& base, int length) {
  Path p{base, {}};
  const auto moves = all_moves(params);
  for (int k = 0; k < length; ++k) {
    p.moves.push_back(moves[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(moves.size()) - 1))]);
  }
  return p;
}

PeriodicConfig random_end(Rng& rng, int q, int depth) {
  std::map<Height, Label> head;
  if (depth > 0) head[-depth] = uniform(rng, 1, q - 1);
  const int from = uniform(rng, 0, 3);
  for (int level = -depth + 1; level < from; ++level) {
    if (level >= 0 || depth > 0) head[level] = uniform(rng, 0, q - 1);
  }
  std::vector<Label> tail(static_cast<std::size_t>(uniform(rng, 1, 3)));
  for (auto& s : tail) s = uniform(rng, 0, q - 1);
  return PeriodicConfig(std::move(head), std::move(tail), from, q);
}

RayDescriptor random_normalized_ray(Rng& rng, const GraphParams& params, int depth) {
  const PeriodicConfig end = random_end(rng, params.q(0), depth);
  Path path{DLVertex::origin(params.d()), {}};
  for (int s = 0; s < depth; ++s) path.moves.push_back({1, uniform(rng, 0, params.q(1) - 1), 0});
  return climb_toward(std::move(path), 0, end, 1, params);
}

}  // namespace dl

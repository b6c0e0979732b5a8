#include "dl/boundary_d.hpp"

#include <algorithm>

namespace dl {

namespace {

void require_wide(const GraphParams& params) {
  if (params.d() <= 2) throw Error("needs d > 2, got d = " + std::to_string(params.d()));
}

void require_tree(int tree, const GraphParams& params) {
  if (tree < 0 || tree >= params.d()) throw Error("tree index " + std::to_string(tree) + " out of range");
}

bool touches(const RayDescriptor& r, int tree) {
  if (r.up_tree == tree || r.down_tree == tree) return true;
  return std::any_of(r.prefix.moves.begin(), r.prefix.moves.end(), [&](const Move& m) { return m.touches(tree); });
}

int swapped(int tree, int a, int b) { return tree == a ? b : tree == b ? a : tree; }

PeriodicConfig climbed_end(const RayDescriptor& r, const GraphParams& params) {
  return ends_of(r, params)[static_cast<std::size_t>(r.up_tree)].labels;
}

// Label that keeps a T_tree coordinate on `end` if it already is on it.
Label label_along(const TreeVertex& v, const PeriodicConfig& end) {
  Height lo = std::min<Height>(v.height, end.min_nonzero().value_or(v.height));
  if (!v.branch.empty()) lo = std::min(lo, v.branch.entries().front().first);
  for (Height level = lo; level < v.height; ++level) {
    if (v.branch.at(level) != end.at(level)) return 0;
  }
  return end.at(v.height);
}

}  // namespace

Height end_depth(const PeriodicConfig& end) {
  const auto m = end.min_nonzero();
  return m && *m < 0 ? -*m : 0;
}

RayDescriptor tracking_ray(const RayDescriptor& gamma, const GraphParams& params) {
  require_wide(params);
  require_valid(gamma, params);
  const int i = gamma.up_tree;
  const int j = gamma.down_tree;
  const PeriodicConfig end = climbed_end(gamma, params);
  Path path{DLVertex::origin(params.d()), {}};
  for (Height s = 0; s < end_depth(end); ++s) path.moves.push_back({j, 0, i});
  return climb_toward(std::move(path), i, end, j, params);
}

RayDescriptor swap_projection(const RayDescriptor& gamma, int a, int b, const GraphParams& params) {
  require_valid(gamma, params);
  require_tree(a, params);
  require_tree(b, params);
  if (a == b) throw Error("swap needs two different trees");
  if (touches(gamma, a)) throw Error("swap needs an empty projection to T_" + std::to_string(a));
  if (gamma.up_tree != b && gamma.down_tree != b) {
    throw Error("swap needs an infinite projection to T_" + std::to_string(b));
  }
  RayDescriptor tau = gamma;
  for (auto& m : tau.prefix.moves) {
    m.up_tree = swapped(m.up_tree, a, b);
    m.down_tree = swapped(m.down_tree, a, b);
  }
  tau.up_tree = swapped(tau.up_tree, a, b);
  tau.down_tree = swapped(tau.down_tree, a, b);
  return tau;
}

RayDescriptor swap_approximant(const RayDescriptor& gamma, int a, int b, int n, const GraphParams& params) {
  const RayDescriptor tau = swap_projection(gamma, a, b, params);
  if (n < gamma.prefix_length()) {
    throw Error("approximant index " + std::to_string(n) + " is shorter than the prefix (" +
                std::to_string(gamma.prefix_length()) + ")");
  }
  const PeriodicConfig end = climbed_end(gamma, params);
  Path path = truncate(tau, n);
  if (gamma.down_tree == b) {
    // tau descends T_a; descend T_b instead from here on.
    return climb_toward(std::move(path), gamma.up_tree, end, b, params);
  }
  // tau climbs T_a.  Lower T_b far enough to climb gamma's end, still
  // climbing T_a meanwhile, then climb T_b.
  DLVertex cur = endpoint(path, params);
  for (Height s = 0; s < end_depth(end); ++s) {
    const Move m{a, label_along(cur[a], end), b};
    path.moves.push_back(m);
    cur = apply(cur, m, params);
  }
  return climb_toward(std::move(path), b, end, gamma.down_tree, params);
}

bool is_normalized(const RayDescriptor& r) {
  if (r.up_tree != 0 || r.down_tree != 1) return false;
  return std::all_of(r.prefix.moves.begin(), r.prefix.moves.end(),
                     [](const Move& m) { return m.up_tree < 2 && m.down_tree < 2; });
}

RayDescriptor normalize(const RayDescriptor& gamma, const GraphParams& params) {
  RayDescriptor r = tracking_ray(gamma, params);
  auto move_tree = [&](int from, int to) {
    r = swap_projection(r, to, from, params);
  };
  while (r.up_tree != 0) {
    if (r.down_tree != 0) {
      move_tree(r.up_tree, 0);
    } else {
      int free = 0;
      while (free == r.up_tree || free == r.down_tree) ++free;
      move_tree(r.down_tree, free);
    }
  }
  if (r.down_tree != 1) move_tree(r.down_tree, 1);
  return r;
}

IndiscreteWitness indiscrete_witness(const RayDescriptor& gamma, const RayDescriptor& gamma2, int n,
                                     const GraphParams& params) {
  require_wide(params);
  IndiscreteWitness w;
  w.gamma = is_normalized(gamma) ? gamma : normalize(gamma, params);
  w.gamma2 = is_normalized(gamma2) ? gamma2 : normalize(gamma2, params);
  w.claimed_prefix = n;
  const PeriodicConfig end = climbed_end(w.gamma, params);
  const PeriodicConfig end2 = climbed_end(w.gamma2, params);
  const Height depth = std::max(end_depth(end), end_depth(end2));
  if (n <= depth) {
    throw Error("n = " + std::to_string(n) + " must exceed the turn depths (" + std::to_string(depth) + ")");
  }

  auto build = [&](const PeriodicConfig& e) {
    Path path{DLVertex::origin(params.d()), {}};
    for (int s = 0; s < n; ++s) path.moves.push_back({2, 0, 1});
    for (Height s = 0; s < end_depth(e); ++s) path.moves.push_back({2, 0, 0});
    return climb_toward(std::move(path), 0, e, 1, params);
  };
  w.tau = build(end);
  w.tau2 = build(end2);
  w.shared_prefix = common_prefix(w.tau, w.tau2, n + static_cast<int>(depth) + 64);
  w.certificate = certify_asymptotic(w.tau, w.gamma, params);
  w.certificate2 = certify_asymptotic(w.tau2, w.gamma2, params);
  return w;
}

}  // namespace dl

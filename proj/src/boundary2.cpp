#include "dl/boundary2.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "dl/paths.hpp"

namespace dl {

namespace {

// Rebased rays are checked for geodesity up to this length.
constexpr int kRayCheckCap = 12;

Height level_of(int side, std::int64_t lamp) { return side == 0 ? lamp : -lamp - 1; }

void require_side(int side) {
  if (side != 0 && side != 1) throw Error("boundary side must be 0 or 1, got " + std::to_string(side));
}

// g's lamps in end coordinates of the given side.
std::map<Height, Label> lamps_as_levels(const LampStand& g, int side) {
  std::map<Height, Label> levels;
  for (const auto& [p, s] : g.lamps) levels.emplace(level_of(side, p), s);
  return levels;
}

bool agree_on(const PeriodicConfig& a, const PeriodicConfig& b, Height lo, Height hi) {
  for (Height level = lo; level <= hi; ++level) {
    if (a.at(level) != b.at(level)) return false;
  }
  return true;
}

}  // namespace

BoundaryPoint make_point(int side, const LampConfig& lamps, int q) {
  require_side(side);
  std::map<Height, Label> head;
  for (const auto& [p, s] : lamps.head) {
    const bool beyond = side == 0 ? p >= lamps.tail_from : p <= lamps.tail_from;
    if (beyond) {
      throw Error("head lamp " + std::to_string(p) + " lies in the periodic part starting at " +
                  std::to_string(lamps.tail_from));
    }
    head.emplace(level_of(side, p), s);
  }
  return BoundaryPoint{side, PeriodicConfig(std::move(head), lamps.tail, level_of(side, lamps.tail_from), q)};
}

LampConfig lamp_config(const BoundaryPoint& x) {
  LampConfig c;
  for (const auto& [level, s] : x.end.head()) c.head.emplace(level_of(x.side, level), s);
  c.tail = x.end.tail();
  c.tail_from = level_of(x.side, x.end.tail_from());
  return c;
}

BoundaryPoint finite_point(int side, const std::map<std::int64_t, Label>& lamps, int q) {
  require_side(side);
  std::map<Height, Label> levels;
  for (const auto& [p, s] : lamps) levels.emplace(level_of(side, p), s);
  return BoundaryPoint{side, PeriodicConfig::finite(std::move(levels), q)};
}

std::string to_string(const BoundaryPoint& x) {
  const LampConfig c = lamp_config(x);
  std::ostringstream out;
  out << "side " << x.side << " {";
  bool first = true;
  for (const auto& [p, s] : c.head) {
    out << (first ? "" : ", ") << p << ':' << s;
    first = false;
  }
  out << "} [";
  for (std::size_t k = 0; k < c.tail.size(); ++k) out << (k ? " " : "") << c.tail[k];
  out << "]@" << c.tail_from;
  return out.str();
}

ClassIndex classify(const BoundaryPoint& x) {
  const auto m = x.end.min_nonzero();
  return ClassIndex{x.side, m && *m < 0 ? -*m : 0};
}

RayDescriptor canonical_descriptor(const BoundaryPoint& x, int q) {
  require_side(x.side);
  const GraphParams params(2, q);
  const int i = x.side;
  const ClassIndex c = classify(x);
  Path path{DLVertex::origin(2), {}};
  for (Height s = 0; s < c.n; ++s) path.moves.push_back({1 - i, 0, i});
  return climb_toward(std::move(path), i, x.end, 1 - i, params);
}

Path canonical_ray(const BoundaryPoint& x, int length, int q) {
  return truncate(canonical_descriptor(x, q), length);
}

bool basis_membership(const BoundaryPoint& x, const BoundaryPoint& center, int k) {
  if (k < 0) throw Error("neighbourhood scale must be nonnegative");
  // B_[0,0] only constrains the base point, which every ray shares.
  if (k == 0) return true;
  const ClassIndex c = classify(center);
  const ClassIndex cx = classify(x);
  const int i = c.side;
  if (c.n > 0 && k <= c.n) {
    return (cx.side == i && cx.n >= k) || (cx.side == 1 - i && cx.n == 0);
  }
  if (c.n > 0) {
    // The T_i projection on [0,k] exposes levels -n .. k-2n-1.
    return cx == c && agree_on(x.end, center.end, -c.n, k - 2 * c.n - 1);
  }
  return (cx.side == 1 - i && cx.n >= k) || (cx == c && agree_on(x.end, center.end, 0, k - 1));
}

BoundaryPoint non_hausdorff_witness(const BoundaryPoint& x, const BoundaryPoint& y, int k, int q) {
  if (x == y) throw Error("non-Hausdorff witness needs distinct points");
  const ClassIndex cx = classify(x);
  if (cx.n != 0 || classify(y) != cx) throw Error("non-Hausdorff witness needs both points in one C_0^i");
  if (k < 0) throw Error("neighbourhood scale must be nonnegative");
  const Height m = std::max(k, 1);
  return BoundaryPoint{1 - cx.side, PeriodicConfig::finite({{-m, 1}}, q)};
}

SeparationWitness separation_witness(const BoundaryPoint& x, const BoundaryPoint& y) {
  if (x == y) throw Error("separation witness needs distinct points");
  const ClassIndex cx = classify(x);
  const ClassIndex cy = classify(y);
  Height bound = 2 * (cx.n + cy.n) + 4;
  if (x.side == y.side) {
    if (const auto diff = PeriodicConfig::first_difference(x.end, y.end)) bound += std::abs(*diff) + 1;
  }
  SeparationWitness w;
  for (Height k = 0; k <= bound; ++k) {
    const int kk = static_cast<int>(k);
    if (!basis_membership(y, x, kk) && !basis_membership(x, y, kk)) {
      w.k = kk;
      if (cx != cy) {
        if (cx.n > 0) {
          w.clopen = cx;
        } else if (cy.n > 0) {
          w.clopen = cy;
        }
      }
      return w;
    }
  }
  throw std::logic_error("separation_witness: no separating scale up to " + std::to_string(bound));
}

bool clopen_separates(const ClassIndex& c, const BoundaryPoint& x, const BoundaryPoint& y) {
  if (c.n <= 0) return false;
  if ((classify(x) == c) == (classify(y) == c)) return false;
  const int k = static_cast<int>(c.n + 1);
  return !basis_membership(y, x, k) && !basis_membership(x, y, k);
}

BoundaryPoint act(const LampStand& g, const BoundaryPoint& x, int q) {
  require_valid(g, q);
  require_side(x.side);
  const Height shift = x.side == 0 ? g.pos : -g.pos;
  return BoundaryPoint{x.side, x.end.shifted(shift).plus(lamps_as_levels(g, x.side), q)};
}

BoundaryPoint power_infinity(const LampStand& g, int q) {
  require_valid(g, q);
  if (g.pos == 0) throw Error("g^infinity needs exp_t(g) != 0");
  const int side = g.pos > 0 ? 0 : 1;
  const Height s = std::abs(g.pos);
  const auto levels = lamps_as_levels(g, side);
  if (levels.empty()) return BoundaryPoint{side, PeriodicConfig{}};

  const Height lo = levels.begin()->first;
  const Height hi = levels.rbegin()->first;
  // Sum of the copies of g's lamps shifted by multiples of s.
  auto value = [&](Height p) {
    std::int64_t sum = 0;
    for (Height x = p; x >= lo; x -= s) {
      const auto it = levels.find(x);
      if (it != levels.end()) sum += it->second;
    }
    return static_cast<Label>(sum % q);
  };
  std::map<Height, Label> head;
  for (Height p = lo; p <= hi; ++p) head.emplace(p, value(p));
  std::vector<Label> tail;
  for (Height p = hi + 1; p <= hi + s; ++p) tail.push_back(value(p));
  return BoundaryPoint{side, PeriodicConfig(std::move(head), std::move(tail), hi + 1, q)};
}

DynamicsReport dynamics_report(const LampStand& g, const BoundaryPoint& x, int n_max, int q) {
  if (g.pos == 0) throw Error("dynamics need exp_t(g) != 0");
  DynamicsReport report{power_infinity(g, q), {}};
  if (x.side != report.attractor.side) {
    throw Error("x lies on side " + std::to_string(x.side) + " but g attracts toward side " +
                std::to_string(report.attractor.side));
  }
  LampStand gn;
  for (int n = 1; n <= n_max; ++n) {
    gn = multiply(gn, g, q);
    report.first_disagreement.push_back(PeriodicConfig::first_difference(act(gn, x, q).end, report.attractor.end));
  }
  return report;
}

BoundaryPoint rebase_ray(const RayDescriptor& r, int q) {
  const GraphParams params(2, q);
  require_valid(r, params);
  if (r.prefix.base.d() != 2) throw Error("rebase_ray works in DL_2(q)");
  if (!truncations_geodesic(r, kRayCheckCap, params)) throw Error("ray descriptor is not geodesic");
  const auto ends = ends_of(r, params);
  return BoundaryPoint{r.up_tree, ends[static_cast<std::size_t>(r.up_tree)].labels};
}

RayDescriptor translate(const LampStand& g, const RayDescriptor& r, int q) {
  const GraphParams params(2, q);
  require_valid(r, params);
  require_valid(g, q);
  const int u = r.up_tree;
  const Height shift = u == 0 ? g.pos : -g.pos;
  // Once the translated climb is above every lamp of g, labels are unchanged.
  Height above = std::numeric_limits<Height>::min();
  for (const auto& [level, s] : lamps_as_levels(g, u)) above = std::max(above, level);
  const Height h = endpoint(r.prefix, params)[u].height + shift;
  const int extra = g.lamps.empty() ? 0 : static_cast<int>(std::max<Height>(0, above + 1 - h));
  const int length = r.prefix_length() + extra;

  std::vector<DLVertex> image;
  for (const auto& v : vertices(truncate(r, length), params)) {
    image.push_back(to_vertex(multiply(g, from_vertex(v, q), q), q));
  }
  RayDescriptor out{path_through(image), r.up_tree, {}, r.down_tree};
  for (int k = 0; k < r.period(); ++k) out.up_labels.push_back(move_at(r, length + k).up_label);
  return out;
}

}  // namespace dl

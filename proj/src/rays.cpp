#include "dl/rays.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "dl/paths.hpp"

namespace dl {

namespace {

bool lies_on_end(const TreeVertex& v, const PeriodicConfig& end) {
  Height lo = v.height;
  if (!v.branch.empty()) lo = std::min(lo, v.branch.entries().front().first);
  if (const auto m = end.min_nonzero()) lo = std::min(lo, *m);
  for (Height level = lo; level < v.height; ++level) {
    if (v.branch.at(level) != end.at(level)) return false;
  }
  return true;
}

}  // namespace

void require_valid(const RayDescriptor& r, const GraphParams& params) {
  require_valid(r.prefix, params);
  if (r.up_labels.empty()) throw Error("ray needs at least one eventual label");
  for (Label a : r.up_labels) require_valid(Move{r.up_tree, a, r.down_tree}, params);
}

Move move_at(const RayDescriptor& r, int t) {
  if (t < 0) throw Error("negative move index");
  if (t < r.prefix_length()) return r.prefix.moves[static_cast<std::size_t>(t)];
  const auto k = static_cast<std::size_t>(t - r.prefix_length()) % r.up_labels.size();
  return Move{r.up_tree, r.up_labels[k], r.down_tree};
}

Path truncate(const RayDescriptor& r, int length) {
  if (length < 0) throw Error("negative truncation length");
  Path p{r.prefix.base, {}};
  p.moves.reserve(static_cast<std::size_t>(length));
  for (int t = 0; t < length; ++t) p.moves.push_back(move_at(r, t));
  return p;
}

DLVertex vertex_at(const RayDescriptor& r, int t, const GraphParams& params) {
  return endpoint(truncate(r, t), params);
}

int common_prefix(const RayDescriptor& a, const RayDescriptor& b, int limit) {
  if (a.prefix.base != b.prefix.base) return 0;
  int t = 0;
  while (t < limit && move_at(a, t) == move_at(b, t)) ++t;
  return t;
}

std::vector<TreeEnd> ends_of(const RayDescriptor& r, const GraphParams& params) {
  require_valid(r, params);
  const DLVertex v = endpoint(r.prefix, params);
  std::vector<TreeEnd> ends(static_cast<std::size_t>(params.d()));
  for (int i = 0; i < params.d(); ++i) {
    TreeEnd& e = ends[static_cast<std::size_t>(i)];
    if (i == r.up_tree) {
      e.kind = TreeEnd::Kind::kAscending;
      std::map<Height, Label> head(v[i].branch.entries().begin(), v[i].branch.entries().end());
      e.labels = PeriodicConfig(std::move(head), r.up_labels, v[i].height, params.q(i));
    } else if (i == r.down_tree) {
      e.kind = TreeEnd::Kind::kDescending;
    } else {
      e.kind = TreeEnd::Kind::kConstant;
      e.vertex = v[i];
    }
  }
  return ends;
}

RayDescriptor climb_toward(Path path, int up, const PeriodicConfig& end, int down, const GraphParams& params) {
  DLVertex cur = endpoint(path, params);
  if (!lies_on_end(cur[up], end)) throw Error("T_" + std::to_string(up) + " coordinate is not on the requested end");
  while (cur[up].height < end.tail_from()) {
    const Move m{up, end.at(cur[up].height), down};
    path.moves.push_back(m);
    cur = apply(cur, m, params);
  }
  RayDescriptor r{std::move(path), up, {}, down};
  for (int k = 0; k < end.period(); ++k) r.up_labels.push_back(end.at(cur[up].height + k));
  return r;
}

AsymptoticCertificate certify_asymptotic(const RayDescriptor& a, const RayDescriptor& b, const GraphParams& params) {
  AsymptoticCertificate cert;
  const auto ea = ends_of(a, params);
  const auto eb = ends_of(b, params);
  const int d = params.d();
  for (int i = 0; i < d; ++i) {
    const auto& x = ea[static_cast<std::size_t>(i)];
    const auto& y = eb[static_cast<std::size_t>(i)];
    if (x.kind != y.kind) {
      cert.failure = "rays move differently in T_" + std::to_string(i);
      return cert;
    }
    if (x.kind == TreeEnd::Kind::kAscending && x.labels != y.labels) {
      cert.failure = "rays climb to different ends of T_" + std::to_string(i);
      return cert;
    }
  }

  // Descending coordinates become comparable once the lower one reaches
  // their common ancestor.
  const int start = std::max(a.prefix_length(), b.prefix_length());
  const DLVertex va = vertex_at(a, start, params);
  const DLVertex vb = vertex_at(b, start, params);
  Height wait = 0;
  for (int i = 0; i < d; ++i) {
    if (ea[static_cast<std::size_t>(i)].kind != TreeEnd::Kind::kDescending) continue;
    const Height meet = gca(va[i], vb[i]).height;
    wait = std::max(wait, std::min(va[i].height, vb[i].height) - meet);
  }
  cert.merge_index = start + static_cast<int>(wait);

  DLVertex x = vertex_at(a, cert.merge_index, params);
  DLVertex y = vertex_at(b, cert.merge_index, params);
  for (int i = 0; i < d; ++i) {
    const auto& e = ea[static_cast<std::size_t>(i)];
    bool ok = true;
    if (e.kind == TreeEnd::Kind::kAscending) ok = lies_on_end(x[i], e.labels) && lies_on_end(y[i], e.labels);
    if (e.kind == TreeEnd::Kind::kDescending) ok = is_ancestor(x[i], y[i]) || is_ancestor(y[i], x[i]);
    if (!ok) {
      cert.failure = "T_" + std::to_string(i) + " coordinates have not merged at index " +
                     std::to_string(cert.merge_index);
      return cert;
    }
  }

  cert.distances = tree_distances(x, y);
  cert.bound = std::accumulate(cert.distances.begin(), cert.distances.end(), Height{0});
  const int span = std::lcm(a.period(), b.period());
  cert.checked_through = cert.merge_index + span;
  for (int t = cert.merge_index; t < cert.checked_through; ++t) {
    x = apply(x, move_at(a, t), params);
    y = apply(y, move_at(b, t), params);
    if (tree_distances(x, y) != cert.distances) {
      cert.failure = "tree distances change at index " + std::to_string(t + 1);
      return cert;
    }
  }
  cert.asymptotic = true;
  return cert;
}

bool truncations_geodesic(const RayDescriptor& r, int cap, const GraphParams& params) {
  return is_geodesic(truncate(r, cap), params, cap);
}

std::string to_string(const RayDescriptor& r) {
  std::ostringstream out;
  out << to_string(r.prefix.base) << " | " << to_word(r.prefix.moves) << " | " << r.up_tree << '(';
  for (std::size_t k = 0; k < r.up_labels.size(); ++k) out << (k ? " " : "") << r.up_labels[k];
  out << ")-" << r.down_tree << '*';
  return out.str();
}

}  // namespace dl

#include "dl/paths.hpp"

#include <algorithm>
#include <functional>

namespace dl {

namespace {

void require_pair_index(const Path& p, int idx) {
  if (idx < 0 || idx + 1 >= p.length()) {
    throw Error("move pair index " + std::to_string(idx) + " outside path of length " +
                std::to_string(p.length()));
  }
}

Path replace_pair(const Path& p, int idx, std::vector<Move> with) {
  Path result{p.base, {}};
  result.moves.reserve(p.moves.size());
  result.moves.insert(result.moves.end(), p.moves.begin(), p.moves.begin() + idx);
  result.moves.insert(result.moves.end(), with.begin(), with.end());
  result.moves.insert(result.moves.end(), p.moves.begin() + idx + 2, p.moves.end());
  return result;
}

DLVertex vertex_before(const Path& p, int idx, const GraphParams& params) {
  DLVertex v = p.base;
  for (int k = 0; k < idx; ++k) v = apply(v, p.moves[static_cast<std::size_t>(k)], params);
  return v;
}

// Distances from `from` to every vertex that can lie on a geodesic to `to`
// of length `total`.  Vertices whose counting bound rules them out are not
// expanded, which leaves distances on geodesic vertices exact.
VertexMap<int> pruned_distances(const DLVertex& from, const DLVertex& to, int total,
                                const GraphParams& params) {
  auto bound = [&](const DLVertex& x) {
    Height mx = 0;
    Height sum = 0;
    for (int i = 0; i < params.d(); ++i) {
      const Height t = tree_distance(x[i], to[i]);
      mx = std::max(mx, t);
      sum += t;
    }
    return static_cast<int>(std::max(mx, (sum + 1) / 2));
  };
  VertexMap<int> dist;
  dist.emplace(from, 0);
  std::vector<DLVertex> frontier{from};
  for (int depth = 1; depth <= total; ++depth) {
    std::vector<DLVertex> next;
    for (const auto& x : frontier) {
      for (auto& y : neighbors(x, params)) {
        if (depth + bound(y) > total) continue;
        if (dist.emplace(y, depth).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return dist;
}

}  // namespace

std::vector<TreeVertex> project(const Path& p, int tree, const GraphParams& params) {
  if (tree < 0 || tree >= params.d()) throw Error("tree index " + std::to_string(tree) + " out of range");
  std::vector<TreeVertex> result;
  result.reserve(p.moves.size() + 1);
  for (const auto& v : vertices(p, params)) result.push_back(v[tree]);
  return result;
}

Label descent_label_at(const Path& p, int idx, const GraphParams& params) {
  if (idx < 0 || idx >= p.length()) throw Error("move index out of range");
  const DLVertex v = vertex_before(p, idx, params);
  return descent_label(v[p.moves[static_cast<std::size_t>(idx)].down_tree]);
}

std::vector<int> turns_per_tree(const std::vector<Move>& moves, int d) {
  std::vector<int> turns(static_cast<std::size_t>(d), 0);
  enum class Last { kNone, kUp, kDown };
  std::vector<Last> last(static_cast<std::size_t>(d), Last::kNone);
  for (const auto& m : moves) {
    const auto up = static_cast<std::size_t>(m.up_tree);
    const auto down = static_cast<std::size_t>(m.down_tree);
    if (last[up] == Last::kDown) ++turns[up];
    last[up] = Last::kUp;
    last[down] = Last::kDown;
  }
  return turns;
}

std::optional<Path> commute_adjacent(const Path& p, int idx, const GraphParams& params) {
  require_pair_index(p, idx);
  require_valid(p, params);
  const Move& a = p.moves[static_cast<std::size_t>(idx)];
  const Move& b = p.moves[static_cast<std::size_t>(idx) + 1];
  const bool disjoint = !a.touches(b.up_tree) && !a.touches(b.down_tree);
  const bool shared_descent = a.down_tree == b.down_tree && a.up_tree != b.up_tree;
  if (!disjoint && !shared_descent) return std::nullopt;
  return replace_pair(p, idx, {b, a});
}

std::optional<Path> shorten_at(const Path& p, int idx, const GraphParams& params) {
  require_pair_index(p, idx);
  require_valid(p, params);
  const Move& a = p.moves[static_cast<std::size_t>(idx)];
  const Move& b = p.moves[static_cast<std::size_t>(idx) + 1];
  // Up then down in one tree always retraces the edge.
  if (a.up_tree == b.down_tree && b.up_tree != a.down_tree) {
    return replace_pair(p, idx, {Move{b.up_tree, b.up_label, a.down_tree}});
  }
  // Down then up along the same edge.
  if (a.down_tree == b.up_tree && b.down_tree != a.up_tree &&
      b.up_label == descent_label_at(p, idx, params)) {
    return replace_pair(p, idx, {Move{a.up_tree, a.up_label, b.down_tree}});
  }
  return std::nullopt;
}

std::optional<Path> cancel_at(const Path& p, int idx, const GraphParams& params) {
  require_pair_index(p, idx);
  require_valid(p, params);
  const Move& a = p.moves[static_cast<std::size_t>(idx)];
  const Move& b = p.moves[static_cast<std::size_t>(idx) + 1];
  if (a.up_tree != b.down_tree || a.down_tree != b.up_tree) return std::nullopt;
  if (b.up_label != descent_label_at(p, idx, params)) return std::nullopt;
  return replace_pair(p, idx, {});
}

std::vector<RetracePattern> retrace_patterns(const Path& p, const GraphParams& params) {
  require_valid(p, params);
  const auto vs = vertices(p, params);
  std::vector<RetracePattern> result;
  for (int t = 0; t < p.length(); ++t) {
    const Move& down = p.moves[static_cast<std::size_t>(t)];
    const int tree = down.down_tree;
    for (int s = t + 1; s < p.length(); ++s) {
      const Move& m = p.moves[static_cast<std::size_t>(s)];
      if (!m.touches(tree)) continue;
      if (m.up_tree == tree && m.up_label == descent_label(vs[static_cast<std::size_t>(t)][tree])) {
        result.push_back({tree, t, s});
      }
      break;
    }
  }
  return result;
}

ShortenResult shorten_pass(const Path& p, const GraphParams& params) {
  require_valid(p, params);
  ShortenResult result{p, {}, 0};
  Path& path = result.path;
  auto must = [](std::optional<Path> next, const char* what) {
    if (!next) throw std::logic_error(std::string("shorten_pass: rewrite rule did not apply: ") + what);
    return std::move(*next);
  };

  for (;;) {
    const auto patterns = retrace_patterns(path, params);
    if (patterns.empty()) break;
    const RetracePattern pat = patterns.front();
    const int k = path.moves[static_cast<std::size_t>(pat.ascent)].down_tree;

    int last_k_ascent = -1;
    for (int x = pat.descent + 1; x < pat.ascent; ++x) {
      if (path.moves[static_cast<std::size_t>(x)].up_tree == k) last_k_ascent = x;
    }
    const int stop = last_k_ascent >= 0 ? last_k_ascent + 1 : pat.descent + 1;
    for (int pos = pat.ascent; pos > stop; --pos) {
      path = must(commute_adjacent(path, pos - 1, params), "commute");
      result.steps.push_back({RewriteStep::Kind::kCommute, pos - 1});
    }

    if (last_k_ascent >= 0) {
      // (k(d)-b)(i(b')-k): up then down in T_k.
      path = must(shorten_at(path, last_k_ascent, params), "shorten through T_k");
      result.steps.push_back({RewriteStep::Kind::kShorten, last_k_ascent});
    } else if (path.moves[static_cast<std::size_t>(pat.descent)].up_tree == k) {
      path = must(cancel_at(path, pat.descent, params), "cancel");
      result.steps.push_back({RewriteStep::Kind::kCancel, pat.descent});
    } else {
      path = must(shorten_at(path, pat.descent, params), "shorten");
      result.steps.push_back({RewriteStep::Kind::kShorten, pat.descent});
    }
    ++result.reductions;
  }
  return result;
}

bool is_geodesic(const Path& p, const GraphParams& params, int cap) {
  if (p.length() > cap) {
    throw Error("path length " + std::to_string(p.length()) + " exceeds geodesic cap " + std::to_string(cap));
  }
  require_valid(p, params);
  const auto dist = bfs_distance(p.base, endpoint(p, params), params, p.length());
  return dist && *dist == p.length();
}

std::vector<Path> enumerate_geodesics(const DLVertex& v, const DLVertex& w, const GraphParams& params,
                                      int cap) {
  const auto total = bfs_distance(v, w, params, cap);
  if (!total) throw Error("distance exceeds geodesic cap " + std::to_string(cap));
  const auto from_v = pruned_distances(v, w, *total, params);
  const auto from_w = pruned_distances(w, v, *total, params);
  auto on_geodesic = [&](const DLVertex& x, int dv) {
    auto it = from_v.find(x);
    auto jt = from_w.find(x);
    return it != from_v.end() && jt != from_w.end() && it->second == dv && dv + jt->second == *total;
  };

  const auto moves = all_moves(params);
  std::vector<Path> result;
  Path current{v, {}};
  std::function<void(const DLVertex&, int)> walk = [&](const DLVertex& x, int depth) {
    if (depth == *total) {
      if (x == w) result.push_back(current);
      return;
    }
    for (const auto& m : moves) {
      DLVertex y = apply(x, m, params);
      if (!on_geodesic(y, depth + 1)) continue;
      current.moves.push_back(m);
      walk(y, depth + 1);
      current.moves.pop_back();
    }
  };
  walk(v, 0);
  return result;
}

GeodesicDag geodesic_dag(const DLVertex& root, int radius, const GraphParams& params) {
  GeodesicDag dag{ball(root, radius, params), {}, {}};
  const auto& vs = dag.ball.vertices;
  dag.index.reserve(vs.size());
  for (std::size_t k = 0; k < vs.size(); ++k) dag.index.emplace(vs[k], k);
  dag.incoming.resize(vs.size());
  const auto moves = all_moves(params);
  for (std::size_t k = 0; k < vs.size(); ++k) {
    const int dx = dag.ball.distance.at(vs[k]);
    if (dx == radius) continue;
    for (const auto& m : moves) {
      const auto it = dag.index.find(apply(vs[k], m, params));
      if (it == dag.index.end()) continue;
      if (dag.ball.distance.at(vs[it->second]) == dx + 1) dag.incoming[it->second].push_back({k, m});
    }
  }
  return dag;
}

TwoTurnShortcut two_turn_shortcut(int tree, int k, int l, int tail, const GraphParams& params) {
  if (params.d() != 2) throw Error("two-turn shortcut needs d = 2");
  if (tree != 0 && tree != 1) throw Error("tree must be 0 or 1");
  if (k < 1 || l < 1 || tail < 0) throw Error("need k >= 1, l >= 1, tail >= 0");
  const int other = 1 - tree;

  TwoTurnShortcut out;
  out.ray.base = DLVertex::origin(2);
  DLVertex cur = out.ray.base;
  auto step = [&](Move m) {
    out.ray.moves.push_back(m);
    cur = apply(cur, m, params);
  };
  // A label different from the edge just descended, so the turn never
  // retraces it.
  auto turning_label = [&](int t) { return (descent_label(cur[t]) + 1) % params.q(t); };

  for (int s = 0; s < k; ++s) step({other, 0, tree});
  step({tree, turning_label(tree), other});
  for (int s = 1; s < l; ++s) step({tree, 0, other});
  step({other, turning_label(other), tree});
  for (int s = 1; s < l + tail; ++s) step({other, 0, tree});

  out.target_index = k + 2 * l;
  out.target = endpoint(Path{out.ray.base, {out.ray.moves.begin(), out.ray.moves.begin() + out.target_index}},
                        params);

  // Tree geodesic in T_other; T_tree rises and falls back onto its own
  // distinguished ray.
  out.shortcut.base = out.ray.base;
  DLVertex s = out.shortcut.base;
  const TreeVertex meet = gca(s[other], out.target[other]);
  while (s[other].height > meet.height) {
    out.shortcut.moves.push_back({tree, 0, other});
    s = apply(s, out.shortcut.moves.back(), params);
  }
  while (s[other].height < out.target[other].height) {
    out.shortcut.moves.push_back({other, out.target[other].branch.at(s[other].height), tree});
    s = apply(s, out.shortcut.moves.back(), params);
  }
  if (s != out.target) throw std::logic_error("two_turn_shortcut: shortcut missed its target");
  return out;
}

}  // namespace dl

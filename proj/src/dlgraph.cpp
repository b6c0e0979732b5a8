#include "dl/dlgraph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>
#include <unordered_set>

#include "scanner.hpp"

namespace dl {

GraphParams::GraphParams(int d, int q) : GraphParams(std::vector<int>(d < 0 ? 0 : static_cast<std::size_t>(d), q)) {}

GraphParams::GraphParams(std::vector<int> branching) : branching_(std::move(branching)) {
  if (branching_.size() < 2) throw Error("DL graph needs d >= 2 trees");
  for (int q : branching_) {
    if (q < 2) throw Error("branching number q must be >= 2");
  }
}

int GraphParams::q() const {
  for (int q : branching_) {
    if (q != branching_.front()) throw Error("trees have different branching numbers");
  }
  return branching_.front();
}

int GraphParams::degree() const {
  const int total = std::accumulate(branching_.begin(), branching_.end(), 0);
  return total * (d() - 1);
}

std::size_t hash_value(const DLVertex& v) {
  std::size_t h = v.coords.size();
  for (const auto& x : v.coords) h = h * 1000003u ^ hash_value(x);
  return h;
}

bool is_valid(const DLVertex& v, const GraphParams& params) {
  if (v.d() != params.d()) return false;
  Height sum = 0;
  for (int i = 0; i < v.d(); ++i) {
    if (!is_canonical(v[i], params.q(i))) return false;
    sum += v[i].height;
  }
  return sum == 0;
}

void require_valid(const DLVertex& v, const GraphParams& params) {
  if (v.d() != params.d()) {
    throw Error("vertex has " + std::to_string(v.d()) + " coordinates, expected " +
                std::to_string(params.d()));
  }
  if (!is_valid(v, params)) throw Error("invalid DL vertex " + to_string(v));
}

std::vector<DLVertex> neighbors(const DLVertex& v, const GraphParams& params) {
  std::vector<DLVertex> result;
  result.reserve(static_cast<std::size_t>(params.degree()));
  for (int i = 0; i < params.d(); ++i) {
    for (int j = 0; j < params.d(); ++j) {
      if (i == j) continue;
      DLVertex lowered = v;
      lowered[j] = predecessor(v[j]);
      for (Label alpha = 0; alpha < params.q(i); ++alpha) {
        DLVertex w = lowered;
        w[i] = successor(v[i], alpha, params.q(i));
        result.push_back(std::move(w));
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

bool adjacent(const DLVertex& v, const DLVertex& w) {
  if (v.d() != w.d()) return false;
  int ups = 0;
  int downs = 0;
  for (int i = 0; i < v.d(); ++i) {
    if (v[i] == w[i]) continue;
    if (w[i].height == v[i].height + 1 && predecessor(w[i]) == v[i]) {
      ++ups;
    } else if (w[i].height == v[i].height - 1 && predecessor(v[i]) == w[i]) {
      ++downs;
    } else {
      return false;
    }
  }
  return ups == 1 && downs == 1;
}

std::vector<Height> tree_distances(const DLVertex& v, const DLVertex& w) {
  std::vector<Height> result;
  result.reserve(v.coords.size());
  for (int i = 0; i < v.d(); ++i) result.push_back(tree_distance(v[i], w[i]));
  return result;
}

Height projection_lower_bound(const DLVertex& v, const DLVertex& w) {
  Height best = 0;
  for (int i = 0; i < v.d(); ++i) best = std::max(best, tree_distance(v[i], w[i]));
  return best;
}

Height projection_upper_bound(const DLVertex& v, const DLVertex& w) {
  Height sum = 0;
  for (int i = 0; i < v.d(); ++i) sum += tree_distance(v[i], w[i]);
  return sum;
}

DLVertex relative_to(const DLVertex& v, const DLVertex& w, const GraphParams& params) {
  DLVertex result = DLVertex::origin(params.d());
  for (int i = 0; i < params.d(); ++i) result[i] = relative_to(v[i], w[i], params.q(i));
  return result;
}

DLVertex absolute_from(const DLVertex& v, const DLVertex& rel, const GraphParams& params) {
  DLVertex result = DLVertex::origin(params.d());
  for (int i = 0; i < params.d(); ++i) result[i] = absolute_from(v[i], rel[i], params.q(i));
  return result;
}

std::optional<int> bfs_distance(const DLVertex& v, const DLVertex& w, const GraphParams& params,
                                int radius_cap) {
  if (radius_cap < 0) throw Error("radius cap must be nonnegative");
  require_valid(v, params);
  require_valid(w, params);
  if (v == w) return 0;

  struct Side {
    VertexMap<int> seen;
    std::vector<DLVertex> frontier;
    int depth = 0;
  };
  Side a;
  Side b;
  a.seen.emplace(v, 0);
  a.frontier.push_back(v);
  b.seen.emplace(w, 0);
  b.frontier.push_back(w);

  while (a.depth + b.depth < radius_cap) {
    Side& grow = a.frontier.size() <= b.frontier.size() ? a : b;
    const Side& other = (&grow == &a) ? b : a;
    std::optional<int> best;
    std::vector<DLVertex> next;
    const int depth = grow.depth + 1;
    for (const auto& x : grow.frontier) {
      for (auto& y : neighbors(x, params)) {
        if (grow.seen.count(y) != 0) continue;
        if (auto it = other.seen.find(y); it != other.seen.end()) {
          const int total = depth + it->second;
          if (!best || total < *best) best = total;
        }
        grow.seen.emplace(y, depth);
        next.push_back(std::move(y));
      }
    }
    grow.frontier = std::move(next);
    grow.depth = depth;
    if (best) return *best <= radius_cap ? best : std::nullopt;
    if (grow.frontier.empty()) break;
  }
  return std::nullopt;
}

std::optional<int> search_distance(const DLVertex& v, const DLVertex& w, const GraphParams& params,
                                   int radius_cap) {
  if (radius_cap < 0) throw Error("radius cap must be nonnegative");
  require_valid(v, params);
  require_valid(w, params);
  const DLVertex target = relative_to(v, w, params);
  const DLVertex start = DLVertex::origin(params.d());

  auto heuristic = [&](const DLVertex& x) {
    Height mx = 0;
    Height sum = 0;
    for (int i = 0; i < params.d(); ++i) {
      const Height t = tree_distance(x[i], target[i]);
      mx = std::max(mx, t);
      sum += t;
    }
    return static_cast<int>(std::max(mx, (sum + 1) / 2));
  };

  struct Entry {
    int f;
    int g;
    DLVertex vertex;
    bool operator>(const Entry& o) const {
      if (f != o.f) return f > o.f;
      if (g != o.g) return g < o.g;  // prefer deeper nodes on ties
      return vertex > o.vertex;
    }
  };
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
  VertexMap<int> best_g;
  std::unordered_set<DLVertex, DLVertexHash> closed;

  const int h0 = heuristic(start);
  if (h0 > radius_cap) return std::nullopt;
  open.push({h0, 0, start});
  best_g.emplace(start, 0);
  while (!open.empty()) {
    Entry e = open.top();
    open.pop();
    if (e.vertex == target) return e.g;
    if (!closed.insert(e.vertex).second) continue;
    for (auto& y : neighbors(e.vertex, params)) {
      const int g = e.g + 1;
      auto it = best_g.find(y);
      if (it != best_g.end() && it->second <= g) continue;
      const int f = g + heuristic(y);
      if (f > radius_cap) continue;
      best_g[y] = g;
      open.push({f, g, std::move(y)});
    }
  }
  return std::nullopt;
}

std::vector<std::size_t> Ball::sphere_sizes() const {
  std::vector<std::size_t> sizes(static_cast<std::size_t>(radius) + 1, 0);
  for (const auto& v : vertices) ++sizes[static_cast<std::size_t>(distance.at(v))];
  return sizes;
}

Ball ball(const DLVertex& center, int r, const GraphParams& params) {
  if (r < 0) throw Error("ball radius must be nonnegative");
  require_valid(center, params);
  Ball result;
  result.center = center;
  result.radius = r;
  result.distance.emplace(center, 0);
  result.vertices.push_back(center);
  std::vector<DLVertex> frontier{center};
  for (int depth = 1; depth <= r && !frontier.empty(); ++depth) {
    std::vector<DLVertex> next;
    for (const auto& x : frontier) {
      for (auto& y : neighbors(x, params)) {
        if (result.distance.emplace(y, depth).second) next.push_back(std::move(y));
      }
    }
    std::sort(next.begin(), next.end());
    result.vertices.insert(result.vertices.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return result;
}

std::string to_string(const DLVertex& v) {
  std::string out = "[";
  for (int i = 0; i < v.d(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(v[i]);
  }
  return out + "]";
}

DLVertex parse_dl_vertex(std::string_view text, const GraphParams& params) {
  Scanner in(text, "DL vertex");
  if (in.consume('o')) {
    if (!in.at_end()) in.fail("trailing characters");
    return DLVertex::origin(params.d());
  }
  DLVertex v;
  const bool bracketed = in.consume('[');
  while (in.peek('(')) {
    const std::size_t begin = in.position();
    const std::size_t close = text.find(')', begin);
    if (close == std::string_view::npos) in.fail("unterminated tree vertex");
    const int tree = v.d();
    if (tree >= params.d()) in.fail("too many coordinates");
    v.coords.push_back(parse_tree_vertex(text.substr(begin, close - begin + 1), params.q(tree)));
    in.seek(close + 1);
    in.consume(',');
  }
  if (bracketed) in.expect(']');
  if (!in.at_end()) in.fail("trailing characters");
  require_valid(v, params);
  return v;
}

}  // namespace dl

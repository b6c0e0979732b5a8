#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dl/trees.hpp"

namespace dl {

/// Number of trees and their branching numbers.  The external interfaces fix
/// one q for every tree; the graph code itself handles per-tree branching.
class GraphParams {
 public:
  GraphParams(int d, int q);
  explicit GraphParams(std::vector<int> branching);

  int d() const { return static_cast<int>(branching_.size()); }
  int q(int tree) const { return branching_.at(static_cast<std::size_t>(tree)); }
  /// Common branching number; throws if the trees differ.
  int q() const;
  /// Number of neighbours of any vertex: sum over ordered pairs (i, j) of q_i.
  int degree() const;

  friend bool operator==(const GraphParams&, const GraphParams&) = default;

 private:
  std::vector<int> branching_;
};

/// Vertex of DL_d(q): one tree vertex per tree, heights summing to zero.
struct DLVertex {
  std::vector<TreeVertex> coords;

  static DLVertex origin(int d) { return DLVertex{std::vector<TreeVertex>(static_cast<std::size_t>(d))}; }

  int d() const { return static_cast<int>(coords.size()); }
  const TreeVertex& operator[](int tree) const { return coords[static_cast<std::size_t>(tree)]; }
  TreeVertex& operator[](int tree) { return coords[static_cast<std::size_t>(tree)]; }

  friend bool operator==(const DLVertex&, const DLVertex&) = default;
  friend auto operator<=>(const DLVertex&, const DLVertex&) = default;
};

std::size_t hash_value(const DLVertex& v);

struct DLVertexHash {
  std::size_t operator()(const DLVertex& v) const { return hash_value(v); }
};

template <typename T>
using VertexMap = std::unordered_map<DLVertex, T, DLVertexHash>;

bool is_valid(const DLVertex& v, const GraphParams& params);
void require_valid(const DLVertex& v, const GraphParams& params);

/// All d(d-1)q neighbours, sorted.
std::vector<DLVertex> neighbors(const DLVertex& v, const GraphParams& params);
bool adjacent(const DLVertex& v, const DLVertex& w);

/// Per-tree distances d_{T_i}(v_i, w_i).
std::vector<Height> tree_distances(const DLVertex& v, const DLVertex& w);
/// max_i d_{T_i}(v_i, w_i).
Height projection_lower_bound(const DLVertex& v, const DLVertex& w);
/// sum_i d_{T_i}(v_i, w_i).
Height projection_upper_bound(const DLVertex& v, const DLVertex& w);

/// Image of `w` under the graph automorphism (product of tree automorphisms
/// fixing the distinguished ends) that sends `v` to the origin.
DLVertex relative_to(const DLVertex& v, const DLVertex& w, const GraphParams& params);
DLVertex absolute_from(const DLVertex& v, const DLVertex& rel, const GraphParams& params);

inline constexpr int kDefaultRadiusCap = 24;

/// Length of a shortest path from v to w found by plain bidirectional
/// breadth-first search, or nullopt when it exceeds `radius_cap`.
std::optional<int> bfs_distance(const DLVertex& v, const DLVertex& w, const GraphParams& params,
                                int radius_cap = kDefaultRadiusCap);

/// Exact distance by A* search guided by the counting bound
/// max(max_i d_{T_i}, ceil(sum_i d_{T_i} / 2)).  Each move changes exactly two
/// tree coordinates by one edge, so the bound is admissible and consistent.
/// Used where plain BFS is too wide (d > 2 and long paths).
std::optional<int> search_distance(const DLVertex& v, const DLVertex& w, const GraphParams& params,
                                   int radius_cap = kDefaultRadiusCap);

/// Vertices within distance r of a centre, in breadth-first order (by
/// distance, then by vertex order).
struct Ball {
  DLVertex center;
  int radius = 0;
  std::vector<DLVertex> vertices;
  VertexMap<int> distance;

  std::size_t size() const { return vertices.size(); }
  bool contains(const DLVertex& v) const { return distance.count(v) != 0; }
  /// Number of vertices at each distance 0..radius.
  std::vector<std::size_t> sphere_sizes() const;
};

Ball ball(const DLVertex& center, int r, const GraphParams& params);

/// "[(k; j:a), (k), ...]" -- one tree vertex per tree.  "o" names the origin
/// when parsing.
std::string to_string(const DLVertex& v);
DLVertex parse_dl_vertex(std::string_view text, const GraphParams& params);

/// Edge type (i(alpha) - j): ascend in T_i along the edge labelled alpha and
/// descend in T_j.  The descending label is determined by the current vertex
/// and is never stored.
struct Move {
  int up_tree = 0;
  Label up_label = 0;
  int down_tree = 1;

  bool touches(int tree) const { return up_tree == tree || down_tree == tree; }

  friend bool operator==(const Move&, const Move&) = default;
  friend auto operator<=>(const Move&, const Move&) = default;
};

void require_valid(const Move& m, const GraphParams& params);

DLVertex apply(const DLVertex& v, const Move& m, const GraphParams& params);
/// The unique move from v to an adjacent w, if any.
std::optional<Move> move_between(const DLVertex& v, const DLVertex& w);
/// All moves out of v, in (up_tree, up_label, down_tree) order.
std::vector<Move> all_moves(const GraphParams& params);

/// A base vertex and a finite sequence of moves.  Every move sequence with
/// in-range trees and labels is a valid path, since predecessors and
/// successors always exist.
struct Path {
  DLVertex base;
  std::vector<Move> moves;

  int length() const { return static_cast<int>(moves.size()); }

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;
};

void require_valid(const Path& p, const GraphParams& params);

/// (v_0, ..., v_n).
std::vector<DLVertex> vertices(const Path& p, const GraphParams& params);
DLVertex endpoint(const Path& p, const GraphParams& params);
/// Builds the path through consecutive adjacent vertices.
Path path_through(const std::vector<DLVertex>& vs);

/// "i(a)-j" tokens separated by spaces; the empty word is the empty path.
std::string to_word(const std::vector<Move>& moves);
std::vector<Move> parse_word(std::string_view text, const GraphParams& params);

/// Path from v to w of length <= sum_i d_{T_i}(v_i, w_i): pick k with the
/// smallest height change, walk every other tree's geodesic while
/// compensating in T_k (along the ray towards the distinguished end when below
/// the start height, label 0 above it), then bring T_k into place while the
/// first other tree goes up and comes back.
Path upper_bound_path(const DLVertex& v, const DLVertex& w, const GraphParams& params);

}  // namespace dl

#pragma once

#include <optional>
#include <vector>

#include "dl/dlgraph.hpp"

namespace dl {

/// Coordinates in T_tree along the path; length + 1 entries.
std::vector<TreeVertex> project(const Path& p, int tree, const GraphParams& params);

/// Label of the T_j edge descended by move `idx` (j = its down tree).
Label descent_label_at(const Path& p, int idx, const GraphParams& params);

/// Turns per tree.  A turn in T_i is a descent in T_i followed, with no move
/// touching T_i in between, by an ascent in T_i.  A trailing descent is not a
/// turn.
std::vector<int> turns_per_tree(const std::vector<Move>& moves, int d);
inline std::vector<int> turns_per_tree(const Path& p) { return turns_per_tree(p.moves, p.base.d()); }

/// Swaps moves idx and idx+1 when their types commute: trees pairwise
/// distinct, or a shared descending tree with distinct ascending trees.
std::optional<Path> commute_adjacent(const Path& p, int idx, const GraphParams& params);

/// Replaces moves idx, idx+1 by a single move:
///   (i(a)-j)(k(b)-i)          -> (k(b)-j)   when k != j
///   (j(a)-i(b))(i(b')-k)      -> (j(a)-k)   when b == b' and k != j
std::optional<Path> shorten_at(const Path& p, int idx, const GraphParams& params);

/// Removes moves idx, idx+1 when the second retraces the first exactly,
/// i.e. (i(a)-j)(j(b)-i) with b the label just descended in T_j.
std::optional<Path> cancel_at(const Path& p, int idx, const GraphParams& params);

/// A descent into T_tree at move `descent` whose edge is climbed again at
/// move `ascent`, with no move in between touching T_tree.
struct RetracePattern {
  int tree = 0;
  int descent = 0;
  int ascent = 0;

  friend bool operator==(const RetracePattern&, const RetracePattern&) = default;
};

/// All such patterns, ordered by (descent, ascent).
std::vector<RetracePattern> retrace_patterns(const Path& p, const GraphParams& params);

struct RewriteStep {
  enum class Kind { kCommute, kShorten, kCancel };
  Kind kind;
  int index;
};

struct ShortenResult {
  Path path;
  std::vector<RewriteStep> steps;
  int reductions = 0;
};

/// Removes retrace patterns one at a time, leftmost first: the ascent is
/// commuted left towards the descent; if an intervening move ascends in the
/// ascent's descending tree, the ascent stops next to the last such move and
/// that pair is shortened instead.  Each reduction shortens the path, so the
/// pass terminates after at most length reductions.
ShortenResult shorten_pass(const Path& p, const GraphParams& params);

inline constexpr int kGeodesicCap = 14;

/// length == bfs_distance(base, endpoint).  Throws if the length exceeds cap.
bool is_geodesic(const Path& p, const GraphParams& params, int cap = kGeodesicCap);

/// Every geodesic from v to w, in lexicographic move order.  Throws if the
/// distance exceeds cap.
std::vector<Path> enumerate_geodesics(const DLVertex& v, const DLVertex& w, const GraphParams& params,
                                      int cap = kGeodesicCap);

/// Geodesic DAG rooted at a vertex: for every vertex of the ball, the edges
/// that reach it from the previous sphere.  Geodesics from the root are
/// exactly the root-to-vertex paths in this DAG.
struct GeodesicDag {
  struct Edge {
    std::size_t from;
    Move move;
  };
  Ball ball;
  VertexMap<std::size_t> index;
  std::vector<std::vector<Edge>> incoming;  // parallel to ball.vertices
};
GeodesicDag geodesic_dag(const DLVertex& root, int radius, const GraphParams& params);

/// Two paths from the origin in DL_2(q) built from a ray with two turns:
/// the first descends k in T_tree, climbs l, then descends l + tail in T_tree
/// (the other tree mirrors each step).  `shortcut` reaches the vertex at index
/// k + 2l of `ray` by a tree geodesic in the other tree, in max(k, 2l - k)
/// moves.
struct TwoTurnShortcut {
  Path ray;
  Path shortcut;
  int target_index = 0;
  DLVertex target;
};
TwoTurnShortcut two_turn_shortcut(int tree, int k, int l, int tail, const GraphParams& params);

}  // namespace dl

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dl/error.hpp"

namespace dl {

using Height = std::int64_t;
using Label = int;

/// Labels of the edges below a tree vertex, keyed by level.
///
/// The edge between heights j and j+1 on the path from a vertex down to the
/// distinguished end carries the label stored at level j.  Only nonzero labels
/// are stored, sorted by level, so two branches are equal iff they are
/// structurally equal.
class Branch {
 public:
  using Entry = std::pair<Height, Label>;

  Branch() = default;

  Label at(Height level) const;
  /// Setting a zero label erases the level.
  void set(Height level, Label label);
  /// Drops every level >= `level`.
  void truncate(Height level);

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }

  /// Smallest level at which the two branches carry different labels.
  /// Returns `limit` if they agree on every level below it.
  static Height first_difference(const Branch& a, const Branch& b, Height limit);

  friend bool operator==(const Branch&, const Branch&) = default;
  friend auto operator<=>(const Branch&, const Branch&) = default;

 private:
  std::vector<Entry> entries_;
};

/// Vertex of the oriented (q+1)-regular tree in horocyclic coordinates:
/// its Busemann height and the labels of the edges below it.
struct TreeVertex {
  Height height = 0;
  Branch branch;

  static TreeVertex origin() { return {}; }

  friend bool operator==(const TreeVertex&, const TreeVertex&) = default;
  friend auto operator<=>(const TreeVertex&, const TreeVertex&) = default;
};

/// True when every stored level is below the height and every label is in
/// [1, q).
bool is_canonical(const TreeVertex& v, int q);

TreeVertex predecessor(const TreeVertex& v);
TreeVertex successor(const TreeVertex& v, Label alpha, int q);

/// Label of the edge from `v` down to its predecessor.
inline Label descent_label(const TreeVertex& v) { return v.branch.at(v.height - 1); }

/// Greatest common ancestor.
TreeVertex gca(const TreeVertex& v, const TreeVertex& w);
Height tree_distance(const TreeVertex& v, const TreeVertex& w);

/// True if `a` is `b` or an iterated predecessor of `b`.
bool is_ancestor(const TreeVertex& a, const TreeVertex& b);

/// Image of `w` under the height-shifting, label-permuting automorphism that
/// fixes the distinguished end and maps `v` to the origin.
TreeVertex relative_to(const TreeVertex& v, const TreeVertex& w, int q);
/// Inverse of `relative_to`: maps the origin back to `v`.
TreeVertex absolute_from(const TreeVertex& v, const TreeVertex& rel, int q);

/// "(k; j1:a1, j2:a2)" with increasing levels, or "(k)" for an empty branch.
std::string to_string(const TreeVertex& v);
/// Parses the textual form; rejects zero labels, levels >= height, unsorted
/// levels and labels >= q.
TreeVertex parse_tree_vertex(std::string_view text, int q);

std::size_t hash_value(const TreeVertex& v);

struct TreeVertexHash {
  std::size_t operator()(const TreeVertex& v) const { return hash_value(v); }
};

}  // namespace dl

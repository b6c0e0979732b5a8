#pragma once

#include <compare>
#include <map>
#include <optional>
#include <vector>

#include "dl/trees.hpp"

namespace dl {

/// Function from the integers to Z_q that vanishes far enough toward -inf
/// and is periodic from `tail_from` on.  Used for tree ends (labels by level)
/// and boundary lamp configurations.
///
/// The representation is canonical: the tail is primitive, `tail_from` is as
/// small as possible (for a zero tail, one past the last nonzero value, or 0
/// when there is none), and the head stores only nonzero values below
/// `tail_from`.  Equal functions therefore compare equal.
class PeriodicConfig {
 public:
  PeriodicConfig() = default;
  PeriodicConfig(std::map<Height, Label> head, std::vector<Label> tail, Height tail_from, int q);

  static PeriodicConfig finite(std::map<Height, Label> values, int q) {
    const Height from = values.empty() ? 0 : values.rbegin()->first + 1;
    return PeriodicConfig(std::move(values), {0}, from, q);
  }

  Label at(Height p) const;

  const std::map<Height, Label>& head() const { return head_; }
  const std::vector<Label>& tail() const { return tail_; }
  Height tail_from() const { return tail_from_; }
  int period() const { return static_cast<int>(tail_.size()); }
  bool is_finite() const { return tail_.size() == 1 && tail_[0] == 0; }
  bool is_zero() const { return is_finite() && head_.empty(); }

  /// Lowest position with a nonzero value.
  std::optional<Height> min_nonzero() const;
  /// Highest nonzero position; only defined for finite configs.
  std::optional<Height> max_nonzero() const;

  /// result.at(p) == at(p - by).
  PeriodicConfig shifted(Height by) const;
  /// Pointwise sum mod q with a finitely supported function.
  PeriodicConfig plus(const std::map<Height, Label>& values, int q) const;
  PeriodicConfig negated(int q) const;

  /// Lowest position where the two differ; nullopt if they are equal.
  static std::optional<Height> first_difference(const PeriodicConfig& a, const PeriodicConfig& b);

  friend bool operator==(const PeriodicConfig&, const PeriodicConfig&) = default;
  friend auto operator<=>(const PeriodicConfig&, const PeriodicConfig&) = default;

 private:
  std::map<Height, Label> head_;
  std::vector<Label> tail_{0};
  Height tail_from_ = 0;
};

}  // namespace dl

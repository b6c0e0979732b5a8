#include "dl/periodic.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace dl {

namespace {

Label mod(std::int64_t x, int q) { return static_cast<Label>(((x % q) + q) % q); }

Height floor_mod(Height x, Height m) { return ((x % m) + m) % m; }

// Values on [from, from + len) of `c`, and the tail re-anchored at `from`
// (requires from >= c.tail_from()).
std::vector<Label> rotated_tail(const PeriodicConfig& c, Height from) {
  const auto& t = c.tail();
  const auto shift = static_cast<std::size_t>(floor_mod(from - c.tail_from(), c.period()));
  std::vector<Label> r(t.size());
  for (std::size_t k = 0; k < t.size(); ++k) r[k] = t[(k + shift) % t.size()];
  return r;
}

}  // namespace

PeriodicConfig::PeriodicConfig(std::map<Height, Label> head, std::vector<Label> tail, Height tail_from, int q) {
  if (q < 2) throw Error("periodic config needs q >= 2");
  if (tail.empty()) throw Error("periodic config needs a nonempty tail");
  for (const auto& [p, s] : head) {
    if (p >= tail_from) {
      throw Error("head position " + std::to_string(p) + " is not below tail_from " + std::to_string(tail_from));
    }
    if (s < 0 || s >= q) throw Error("value " + std::to_string(s) + " outside [0, q)");
    if (s != 0) head_.emplace(p, s);
  }
  for (Label s : tail) {
    if (s < 0 || s >= q) throw Error("value " + std::to_string(s) + " outside [0, q)");
  }

  // Primitive period.
  const std::size_t n = tail.size();
  std::size_t period = n;
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (std::size_t k = 0; k < n && ok; ++k) ok = tail[k] == tail[(k + p) % n];
    if (ok) {
      period = p;
      break;
    }
  }
  tail.resize(period);
  tail_ = std::move(tail);
  tail_from_ = tail_from;

  if (tail_.size() == 1 && tail_[0] == 0) {
    tail_from_ = head_.empty() ? 0 : head_.rbegin()->first + 1;
    return;
  }
  // Pull the periodic region down as far as the values allow.  A nonzero
  // tail cannot extend past the zeros below the head, so this stops.
  for (;;) {
    const Height below = tail_from_ - 1;
    const auto it = head_.find(below);
    const Label value = it == head_.end() ? 0 : it->second;
    if (value != tail_.back()) break;
    std::rotate(tail_.rbegin(), tail_.rbegin() + 1, tail_.rend());
    if (it != head_.end()) head_.erase(it);
    tail_from_ = below;
  }
}

Label PeriodicConfig::at(Height p) const {
  if (p >= tail_from_) return tail_[static_cast<std::size_t>(floor_mod(p - tail_from_, period()))];
  const auto it = head_.find(p);
  return it == head_.end() ? 0 : it->second;
}

std::optional<Height> PeriodicConfig::min_nonzero() const {
  if (!head_.empty()) return head_.begin()->first;
  for (int k = 0; k < period(); ++k) {
    if (tail_[static_cast<std::size_t>(k)] != 0) return tail_from_ + k;
  }
  return std::nullopt;
}

std::optional<Height> PeriodicConfig::max_nonzero() const {
  if (!is_finite()) throw Error("config with a nonzero periodic tail has no highest nonzero position");
  if (head_.empty()) return std::nullopt;
  return head_.rbegin()->first;
}

PeriodicConfig PeriodicConfig::shifted(Height by) const {
  PeriodicConfig r = *this;
  r.head_.clear();
  for (const auto& [p, s] : head_) r.head_.emplace(p + by, s);
  r.tail_from_ = tail_from_ + by;
  if (r.is_finite() && r.head_.empty()) r.tail_from_ = 0;
  return r;
}

PeriodicConfig PeriodicConfig::plus(const std::map<Height, Label>& values, int q) const {
  Height from = tail_from_;
  for (const auto& [p, s] : values) {
    (void)s;
    from = std::max(from, p + 1);
  }
  std::map<Height, Label> head = head_;
  for (Height p = tail_from_; p < from; ++p) head[p] = at(p);
  for (const auto& [p, s] : values) head[p] = mod(static_cast<std::int64_t>(head[p]) + s, q);
  return PeriodicConfig(std::move(head), rotated_tail(*this, from), from, q);
}

PeriodicConfig PeriodicConfig::negated(int q) const {
  std::map<Height, Label> head;
  for (const auto& [p, s] : head_) head.emplace(p, mod(-s, q));
  std::vector<Label> tail;
  for (Label s : tail_) tail.push_back(mod(-s, q));
  return PeriodicConfig(std::move(head), std::move(tail), tail_from_, q);
}

std::optional<Height> PeriodicConfig::first_difference(const PeriodicConfig& a, const PeriodicConfig& b) {
  Height lo = std::min(a.tail_from_, b.tail_from_);
  if (!a.head_.empty()) lo = std::min(lo, a.head_.begin()->first);
  if (!b.head_.empty()) lo = std::min(lo, b.head_.begin()->first);
  const Height hi = std::max(a.tail_from_, b.tail_from_) + std::lcm(a.period(), b.period());
  for (Height p = lo; p < hi; ++p) {
    if (a.at(p) != b.at(p)) return p;
  }
  return std::nullopt;
}

}  // namespace dl

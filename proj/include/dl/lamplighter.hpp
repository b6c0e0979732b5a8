#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dl/dlgraph.hpp"

namespace dl {

/// Element of the lamplighter group Z_q wr Z: finitely many lit lamps plus the
/// lamplighter's position.  Unlit lamps are never stored.
struct LampStand {
  std::map<std::int64_t, int> lamps;
  std::int64_t pos = 0;

  int lamp(std::int64_t p) const {
    const auto it = lamps.find(p);
    return it == lamps.end() ? 0 : it->second;
  }
  bool is_identity() const { return lamps.empty() && pos == 0; }

  friend bool operator==(const LampStand&, const LampStand&) = default;
  friend auto operator<=>(const LampStand&, const LampStand&) = default;
};

void require_valid(const LampStand& g, int q);

LampStand lamp_t();
LampStand lamp_a(int m = 1);
/// t^k a t^-k: only lamp k lit.
LampStand lamp_at_position(std::int64_t k, int m = 1);

LampStand multiply(const LampStand& g, const LampStand& h, int q);
LampStand inverse(const LampStand& g, int q);
LampStand power(const LampStand& g, std::int64_t n, int q);
inline std::int64_t exp_t(const LampStand& g) { return g.pos; }

/// Order of g; nullopt means infinite, which happens exactly when exp_t != 0.
std::optional<std::int64_t> order(const LampStand& g, int q);

/// Evaluates a word such as "t^3 (at) t^-2 (at)^-2 t^-1" left to right.
/// Grammar: word = factor*, factor = primary ['^' integer],
/// primary = 't' | 'a' | '(' word ')'.
LampStand eval_word(std::string_view word, int q);

/// The 2q generators (a^m t)^{+-1}, 0 <= m < q, whose Cayley graph is DL_2(q).
std::vector<LampStand> cayley_generators(int q);

/// Word lengths of every element within `radius` of the identity, by BFS over
/// right multiplication by cayley_generators.
std::map<LampStand, int> word_length_ball(int radius, int q);

DLVertex to_vertex(const LampStand& g, int q);
LampStand from_vertex(const DLVertex& v, int q);

/// "{0:1, 3:1} @ -1".
std::string to_string(const LampStand& g);

}  // namespace dl

#include "dl/lamplighter.hpp"

#include <deque>
#include <sstream>

#include "scanner.hpp"

namespace dl {

namespace {

int mod(std::int64_t x, int q) { return static_cast<int>(((x % q) + q) % q); }

void require_q(int q) {
  if (q < 2) throw Error("lamp states need q >= 2, got " + std::to_string(q));
}

void add_lamp(LampStand& g, std::int64_t p, std::int64_t state, int q) {
  const int s = mod(g.lamp(p) + state, q);
  if (s == 0) {
    g.lamps.erase(p);
  } else {
    g.lamps[p] = s;
  }
}

LampStand parse_word(Scanner& in, int q, int depth);

LampStand parse_primary(Scanner& in, int q, int depth) {
  if (in.consume('t')) return lamp_t();
  if (in.consume('a')) return lamp_a();
  if (in.consume('(')) {
    LampStand inner = parse_word(in, q, depth + 1);
    in.expect(')');
    return inner;
  }
  in.fail("expected 't', 'a' or '('");
}

LampStand parse_word(Scanner& in, int q, int depth) {
  LampStand g;
  for (;;) {
    in.skip_space();
    if (in.at_end() || (depth > 0 && in.peek(')'))) return g;
    LampStand f = parse_primary(in, q, depth);
    if (in.consume('^')) f = power(f, in.integer(), q);
    g = multiply(g, f, q);
  }
}

}  // namespace

void require_valid(const LampStand& g, int q) {
  require_q(q);
  for (const auto& [p, s] : g.lamps) {
    if (s <= 0 || s >= q) {
      throw Error("lamp " + std::to_string(p) + " has state " + std::to_string(s) + " outside [1, q)");
    }
  }
}

LampStand lamp_t() { return LampStand{{}, 1}; }

LampStand lamp_a(int m) { return lamp_at_position(0, m); }

LampStand lamp_at_position(std::int64_t k, int m) {
  LampStand g;
  if (m != 0) g.lamps[k] = m;
  return g;
}

LampStand multiply(const LampStand& g, const LampStand& h, int q) {
  require_q(q);
  LampStand r = g;
  r.pos = g.pos + h.pos;
  for (const auto& [p, s] : h.lamps) add_lamp(r, p + g.pos, s, q);
  return r;
}

LampStand inverse(const LampStand& g, int q) {
  require_q(q);
  LampStand r;
  r.pos = -g.pos;
  for (const auto& [p, s] : g.lamps) add_lamp(r, p - g.pos, -s, q);
  return r;
}

LampStand power(const LampStand& g, std::int64_t n, int q) {
  LampStand base = n < 0 ? inverse(g, q) : g;
  std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  LampStand result;
  while (e > 0) {
    if (e & 1) result = multiply(result, base, q);
    base = multiply(base, base, q);
    e >>= 1;
  }
  return result;
}

std::optional<std::int64_t> order(const LampStand& g, int q) {
  require_q(q);
  if (g.pos != 0) return std::nullopt;
  // With exp_t = 0 every lamp just accumulates, so g^n = identity for some n <= q.
  LampStand x = g;
  for (std::int64_t n = 1; n <= q; ++n) {
    if (x.is_identity()) return n;
    x = multiply(x, g, q);
  }
  throw std::logic_error("order: exp_t = 0 element did not return to the identity within q steps");
}

LampStand eval_word(std::string_view word, int q) {
  require_q(q);
  Scanner in(word, "lamplighter word");
  LampStand g = parse_word(in, q, 0);
  if (!in.at_end()) in.fail("unbalanced ')'");
  return g;
}

std::vector<LampStand> cayley_generators(int q) {
  require_q(q);
  std::vector<LampStand> gens;
  for (int m = 0; m < q; ++m) {
    const LampStand s = multiply(lamp_a(m), lamp_t(), q);
    gens.push_back(s);
    gens.push_back(inverse(s, q));
  }
  return gens;
}

std::map<LampStand, int> word_length_ball(int radius, int q) {
  if (radius < 0) throw Error("radius must be nonnegative");
  const auto gens = cayley_generators(q);
  std::map<LampStand, int> length{{LampStand{}, 0}};
  std::deque<LampStand> queue{LampStand{}};
  while (!queue.empty()) {
    const LampStand g = queue.front();
    queue.pop_front();
    const int n = length.at(g);
    if (n == radius) continue;
    for (const auto& s : gens) {
      LampStand h = multiply(g, s, q);
      if (length.emplace(h, n + 1).second) queue.push_back(std::move(h));
    }
  }
  return length;
}

DLVertex to_vertex(const LampStand& g, int q) {
  require_valid(g, q);
  const std::int64_t k = g.pos;
  DLVertex v = DLVertex::origin(2);
  v[0].height = k;
  v[1].height = -k;
  for (const auto& [p, s] : g.lamps) {
    if (p < k) {
      v[0].branch.set(p, s);
    } else {
      v[1].branch.set(-p - 1, s);
    }
  }
  return v;
}

LampStand from_vertex(const DLVertex& v, int q) {
  if (v.d() != 2) throw Error("lamp stands correspond to DL_2 vertices, got d = " + std::to_string(v.d()));
  require_valid(v, GraphParams(2, q));
  LampStand g;
  g.pos = v[0].height;
  for (const auto& [level, s] : v[0].branch.entries()) g.lamps[level] = s;
  for (const auto& [level, s] : v[1].branch.entries()) g.lamps[-level - 1] = s;
  return g;
}

std::string to_string(const LampStand& g) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& [p, s] : g.lamps) {
    if (!first) out << ", ";
    first = false;
    out << p << ':' << s;
  }
  out << "} @ " << g.pos;
  return out.str();
}

}  // namespace dl

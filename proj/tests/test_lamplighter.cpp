#include <random>

#include "doctest.h"
#include "dl/lamplighter.hpp"
#include "dl/sample.hpp"

using namespace dl;

namespace {

LampStand stand(std::map<std::int64_t, int> lamps, std::int64_t pos) { return LampStand{std::move(lamps), pos}; }

}  // namespace

TEST_CASE("word evaluation") {
  const LampStand worked = eval_word("t^3 (at) t^-2 (at)^-2 t^-1", 2);
  CHECK(worked == stand({{0, 1}, {1, 1}, {3, 1}}, -1));
  CHECK(eval_word("(at)^2 t (at) t^-5", 2) == worked);
  CHECK(eval_word("", 2).is_identity());
  CHECK(eval_word("a^3", 3).is_identity());
  CHECK(to_string(worked) == "{0:1, 1:1, 3:1} @ -1");
  CHECK_THROWS_AS(eval_word("t^", 2), Error);
  CHECK_THROWS_AS(eval_word("(at", 2), Error);
  CHECK_THROWS_AS(eval_word("b", 2), Error);
}

TEST_CASE("multiplication") {
  const LampStand worked = eval_word("t^3 (at) t^-2 (at)^-2 t^-1", 2);
  CHECK(multiply(worked, lamp_t(), 2) == stand({{0, 1}, {1, 1}, {3, 1}}, 0));
  CHECK(multiply(worked, eval_word("t a t", 2), 2) == stand({{1, 1}, {3, 1}}, 1));
}

TEST_CASE("exp_t and order") {
  CHECK(exp_t(LampStand{}) == 0);
  CHECK(exp_t(eval_word("t^3 (at) t^-2 (at)^-2 t^-1", 2)) == -1);
  CHECK(order(LampStand{}, 2) == 1);
  CHECK(order(lamp_at_position(5), 2) == 2);
  CHECK_FALSE(order(lamp_t(), 2).has_value());
  CHECK(order(lamp_at_position(-2, 1), 3) == 3);
}

TEST_CASE("group laws on random triples") {
  for (int q : {2, 3}) {
    Rng rng(q);
    for (int n = 0; n < 200; ++n) {
      const LampStand g = random_lamp_stand(rng, q, 6, 5);
      const LampStand h = random_lamp_stand(rng, q, 6, 5);
      const LampStand k = random_lamp_stand(rng, q, 6, 5);
      CHECK(multiply(multiply(g, h, q), k, q) == multiply(g, multiply(h, k, q), q));
      CHECK(multiply(g, inverse(g, q), q).is_identity());
      CHECK(multiply(inverse(g, q), g, q).is_identity());
      CHECK(exp_t(multiply(g, h, q)) == exp_t(g) + exp_t(h));
      CHECK(power(g, 3, q) == multiply(g, multiply(g, g, q), q));
      CHECK(power(g, -2, q) == inverse(multiply(g, g, q), q));
      CHECK(from_vertex(to_vertex(g, q), q) == g);
    }
  }
}

TEST_CASE("q = 2 order dichotomy") {
  Rng rng(99);
  for (int n = 0; n < 200; ++n) {
    const LampStand g = random_lamp_stand(rng, 2, 5, 2);
    const auto o = order(g, 2);
    if (exp_t(g) != 0) {
      CHECK_FALSE(o.has_value());
    } else {
      CHECK(o == (g.is_identity() ? 1 : 2));
    }
  }
}

TEST_CASE("right multiplication by a generator moves along an edge") {
  const int q = 3;
  const GraphParams p(2, q);
  Rng rng(4);
  for (int n = 0; n < 100; ++n) {
    const LampStand g = random_lamp_stand(rng, q, 4, 3);
    for (const auto& s : cayley_generators(q)) CHECK(adjacent(to_vertex(g, q), to_vertex(multiply(g, s, q), q)));
  }
  CHECK(to_vertex(lamp_t(), 2) == parse_dl_vertex("[(1), (-1)]", GraphParams(2, 2)));
}

TEST_CASE("word lengths match graph distances") {
  const int q = 2;
  const GraphParams p(2, q);
  const auto lengths = word_length_ball(4, q);
  const Ball b = ball(DLVertex::origin(2), 4, p);
  CHECK(lengths.size() == b.size());
  for (const auto& [g, len] : lengths) CHECK(b.distance.at(to_vertex(g, q)) == len);
}

// Copyright 2026 The ncarith Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>

#include "doctest.h"
#include "ncarith/cluster.hpp"
#include "ncarith/errors.hpp"

using namespace ncarith;
using namespace ncarith::cluster;

namespace {

LaurentPoly L(const char* text, std::size_t n = 3) { return parse_laurent(text, n); }

LaurentPoly random_laurent(std::mt19937_64& rng, std::size_t n = 3) {
  LaurentPoly f(n);
  const int terms = 1 + static_cast<int>(rng() % 5);
  for (int t = 0; t < terms; ++t) {
    Exponents e(n);
    for (auto& v : e) v = static_cast<std::int32_t>(rng() % 7) - 3;
    f.add_term(e, static_cast<long>(rng() % 21) - 10);
  }
  return f;
}

// Exchange relation applied directly to rational values.
std::vector<mpq_class> mutate_values(const std::vector<mpq_class>& x, const Matrix& B, std::size_t k) {
  mpq_class plus = 1, minus = 1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const long b = B[i][k - 1];
    for (long r = 0; r < std::labs(b); ++r) (b > 0 ? plus : minus) *= x[i];
  }
  auto out = x;
  out[k - 1] = (plus + minus) / x[k - 1];
  return out;
}

bool markov_triple(const std::vector<mpq_class>& v) {
  return v[0] * v[0] + v[1] * v[1] + v[2] * v[2] == 3 * v[0] * v[1] * v[2];
}

}  // namespace

TEST_CASE("markov seed") {
  const Seed s = markov_seed();
  CHECK(s.rank() == 3);
  CHECK(is_skew_symmetric(s.exchange_matrix()));
  CHECK(s.exchange_matrix() == Matrix{{0, 2, -2}, {-2, 0, 2}, {2, -2, 0}});
  CHECK(laurent_expand(s, {}) == std::vector<LaurentPoly>{L("x1"), L("x2"), L("x3")});
  CHECK_THROWS_AS(Seed(Matrix{{0, 1}, {1, 0}}), DomainError);
}

TEST_CASE("mutate examples") {
  const Seed s = mutate(markov_seed(), 1);
  CHECK(s.exchange_matrix() == Matrix{{0, -2, 2}, {2, 0, -2}, {-2, 2, 0}});
  const auto xs = laurent_expand(markov_seed(), {1});
  CHECK(xs[0] == L("x1^-1*x2^2 + x1^-1*x3^2"));
  CHECK(to_string(xs[0]) == "x1^-1*x2^2 + x1^-1*x3^2");
  CHECK(specialize(xs[0], {1, 1, 1}) == 2);
  CHECK(same_seed(mutate(s, 1), markov_seed()));
  CHECK_THROWS_AS(mutate(s, 0), DomainError);
  CHECK_THROWS_AS(mutate(s, 4), DomainError);
}

TEST_CASE("matrix mutation on an A2 quiver") {
  const Matrix B{{0, 1}, {-1, 0}};
  CHECK(mutate_matrix(B, 1) == Matrix{{0, -1}, {1, 0}});
  // The A2 exchange pattern has period 5 on the cluster.
  Seed s(B);
  const Seed start = s;
  for (int i = 0; i < 5; ++i) s = mutate(s, 1 + i % 2);
  std::vector<LaurentPoly> vals;
  for (const auto& x : s.cluster()) vals.push_back(x.as_laurent());
  CHECK(vals == std::vector<LaurentPoly>{L("x2", 2), L("x1", 2)});
}

TEST_CASE("markov triples along the 1,2,3 cycle") {
  Seed s = markov_seed();
  const std::vector<std::vector<long>> expected{{1, 1, 2}, {1, 2, 5}, {2, 5, 29}, {5, 29, 433}};
  for (std::size_t step = 0; step < expected.size(); ++step) {
    s = mutate(s, 1 + step % 3);
    std::vector<long> triple;
    std::vector<mpq_class> values;
    for (const auto& x : s.cluster()) {
      const mpq_class v = specialize(x.as_laurent(), {1, 1, 1});
      values.push_back(v);
      triple.push_back(v.get_num().get_si());
    }
    std::sort(triple.begin(), triple.end());
    CHECK(triple == expected[step]);
    CHECK(markov_triple(values));
  }
}

TEST_CASE("Laurent phenomenon for reduced words up to length 5") {
  const auto words = reduced_words(3, 5);
  // 1 + 3 + 6 + 12 + 24 + 48
  CHECK(words.size() == 94);
  for (const auto& w : words) {
    const auto xs = laurent_expand(markov_seed(), w);
    for (const auto& x : xs) CHECK(x.has_positive_coefficients());
  }
}

TEST_CASE("Laurent phenomenon, skew-symmetry and the Markov equation up to length 8") {
  // Depth-first over reduced words so each prefix is mutated once.
  std::mt19937_64 rng(5);
  std::vector<mpq_class> point{mpq_class(2, 3), mpq_class(-5, 7), mpq_class(3)};
  struct Frame {
    Seed seed;
    std::vector<mpq_class> at_ones, at_point;
    std::size_t last;
    std::size_t depth;
  };
  std::vector<Frame> stack{{markov_seed(), {1, 1, 1}, point, 0, 0}};
  std::size_t visited = 0;
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    ++visited;
    CHECK(is_skew_symmetric(f.seed.exchange_matrix()));
    CHECK(markov_triple(f.at_ones));
    for (std::size_t i = 0; i < 3; ++i) {
      const LaurentPoly x = f.seed.cluster()[i].as_laurent();
      CHECK(x.has_positive_coefficients());
      CHECK(specialize(x, point) == f.at_point[i]);
    }
    if (f.depth == 8) continue;
    for (std::size_t k = 1; k <= 3; ++k) {
      if (k == f.last) continue;
      stack.push_back({mutate(f.seed, k), mutate_values(f.at_ones, f.seed.exchange_matrix(), k),
                       mutate_values(f.at_point, f.seed.exchange_matrix(), k), k, f.depth + 1});
    }
  }
  CHECK(visited == 766);
}

TEST_CASE("mutation is an involution") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    Seed s = markov_seed();
    const std::size_t len = rng() % 6;
    for (std::size_t j = 0; j < len; ++j) s = mutate(s, 1 + rng() % 3);
    for (std::size_t k = 1; k <= 3; ++k) CHECK(same_seed(mutate(mutate(s, k), k), s));
  }
}

TEST_CASE("coefficient growth guard") {
  mpz_class big;
  mpz_ui_pow_ui(big.get_mpz_t(), 2, 300);
  const auto n = LaurentPoly::constant(3, 1);
  const Seed s({{LaurentPoly::variable(3, 1), n}, {LaurentPoly::variable(3, 2).scaled(big), n}, {LaurentPoly::variable(3, 3), n}},
               markov_seed().exchange_matrix());
  // x1' = (x3^2 + (2^300 x2)^2) / x1 has a 601-bit coefficient.
  CHECK_THROWS_AS(mutate(s, 1), ResourceError);
  CHECK_NOTHROW(mutate(s, 2));
}

TEST_CASE("is_level_p") {
  CHECK(is_level_p(L("2*x1^-1*x2^2 + 2*x3^2"), 2));
  CHECK_FALSE(is_level_p(L("x1 + x2"), 2));
  CHECK(is_level_p(LaurentPoly(3), 7));
  std::mt19937_64 rng(13);
  for (long p : {2, 3, 5, 7, 11}) {
    for (int i = 0; i < 50; ++i) CHECK(is_level_p(random_laurent(rng).scaled(p), p));
    for (int i = 0; i < 100; ++i) {
      const LaurentPoly f = random_laurent(rng).scaled(p), g = random_laurent(rng).scaled(p);
      const LaurentPoly h = random_laurent(rng);
      CHECK(is_level_p(f + g, p));
      CHECK(is_level_p(f * h, p));
    }
  }
}

TEST_CASE("specialize") {
  CHECK(specialize(L("x1*x2^-1"), {3, 2, 1}) == mpq_class(3, 2));
  CHECK(specialize(L("5"), {7, mpq_class(1, 9), -4}) == 5);
  CHECK(specialize(L("x1^-2*x3 - 4"), {mpq_class(1, 2), 1, 3}) == 8);
  CHECK_THROWS_AS(specialize(L("x1"), {0, 1, 1}), DomainError);
  CHECK_THROWS_AS(specialize(L("x1"), {1, 1}), DomainError);
  std::mt19937_64 rng(17);
  for (int i = 0; i < 50; ++i) {
    const LaurentPoly f = random_laurent(rng), g = random_laurent(rng);
    const std::vector<mpq_class> v{mpq_class(1 + rng() % 9, 1 + rng() % 9), -mpq_class(1 + rng() % 9), 2};
    CHECK(specialize(f * g, v) == specialize(f, v) * specialize(g, v));
    CHECK(specialize(f + g, v) == specialize(f, v) + specialize(g, v));
  }
}

TEST_CASE("exact Laurent division") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 100; ++i) {
    const LaurentPoly a = random_laurent(rng), b = random_laurent(rng);
    if (b.is_zero()) continue;
    LaurentPoly q(3);
    REQUIRE(divides(b, a * b, &q));
    CHECK(q == a);
    if (!b.is_monomial() && !a.is_zero()) CHECK_FALSE(divides(b, a * b + LaurentPoly::constant(3, 1), nullptr));
  }
  CHECK(divides(L("x1^-2"), L("x2 + x3"), nullptr));
  CHECK_FALSE(divides(L("2*x1"), L("x2 + x3"), nullptr));
  CHECK_THROWS_AS(divides(LaurentPoly(3), L("x1"), nullptr), DomainError);
}

TEST_CASE("text and JSON round-trips") {
  CHECK(to_string(L("x3 + 5 - 3*x1^-1*x2^2")) == "x3 - 3*x1^-1*x2^2 + 5");
  CHECK(to_string(LaurentPoly(3)) == "0");
  CHECK(to_string(L("-x1 + x1")) == "0");
  std::mt19937_64 rng(23);
  for (int i = 0; i < 50; ++i) {
    const LaurentPoly f = random_laurent(rng);
    CHECK(parse_laurent(to_string(f), 3) == f);
  }
  CHECK_THROWS_AS(L("x4"), ParseError);
  CHECK_THROWS_AS(L("x1 +"), ParseError);
  CHECK_THROWS_AS(L("y"), ParseError);

  const Seed s = mutate(mutate(markov_seed(), 2), 3);
  const std::string json = seed_to_json(s);
  CHECK(json.rfind("{\"B\":[[0,", 0) == 0);
  CHECK(same_seed(seed_from_json(json), s));
  CHECK(seed_to_json(markov_seed()) == R"({"B":[[0,2,-2],[-2,0,2],[2,-2,0]],"cluster":["x1","x2","x3"]})");
  const Seed fraction({{L("x1"), L("x2 + 1")}, {L("x2"), L("1")}, {L("x3"), L("1")}}, markov_seed().exchange_matrix());
  CHECK(same_seed(seed_from_json(seed_to_json(fraction)), fraction));
  CHECK_THROWS_AS(seed_from_json("{\"B\": 3}"), ParseError);
  CHECK_THROWS_AS(seed_from_json("not json"), ParseError);
}

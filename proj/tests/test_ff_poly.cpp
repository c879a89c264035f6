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
#include "ncarith/errors.hpp"
#include "ncarith/ff_poly.hpp"

using namespace ncarith;
using namespace ncarith::ff;

namespace {

Poly P(const char* text, const FieldPtr& f) { return parse_poly(text, f); }

// Enumerates all polynomials of degree < n over F (including zero).
std::vector<Poly> all_below(const FieldPtr& F, std::size_t n) {
  std::vector<Poly> out;
  mpz_class count;
  mpz_pow_ui(count.get_mpz_t(), F->order().get_mpz_t(), n);
  for (mpz_class i = 0; i < count; ++i) {
    std::vector<Coords> cs(n);
    mpz_class rest = i;
    for (std::size_t k = 0; k < n; ++k) {
      cs[k] = F->element(mpz_class(rest % F->order()));
      rest /= F->order();
    }
    out.emplace_back(F, std::move(cs));
  }
  return out;
}

// Trial division by every monic polynomial of degree 1..n/2.
bool brute_irreducible(const Poly& f) {
  const std::size_t n = *f.degree();
  for (const Poly& g : all_below(f.field(), n / 2 + 1)) {
    if (g.is_constant()) continue;
    if ((f % g.monic()).is_zero()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("GF(p^e) uses the lexicographically least modulus") {
  CHECK(to_string(Poly(Field::gf(2, 2)->parent(), Field::gf(2, 2)->modulus())) == "1*T^2 + 1*T + 1 over GF(2)");
  CHECK(format_terms(Poly(Field::gf(3, 2)->parent(), Field::gf(3, 2)->modulus())) == "1*T^2 + 1");
  CHECK(format_terms(Poly(Field::gf(2, 3)->parent(), Field::gf(2, 3)->modulus())) == "1*T^3 + 1*T + 1");
  CHECK(format_terms(Poly(Field::gf(5, 2)->parent(), Field::gf(5, 2)->modulus())) == "1*T^2 + 2");
  CHECK_THROWS_AS(Field::prime(4), DomainError);
  CHECK_THROWS_AS(field_for_order(6), DomainError);
  CHECK(field_for_order(9)->order() == 9);
}

TEST_CASE("field arithmetic: every nonzero element of GF(9) and GF(8) is invertible") {
  for (auto F : {Field::gf(3, 2), Field::gf(2, 3)}) {
    for (mpz_class i = 1; i < F->order(); ++i) {
      const Coords a = F->element(i);
      CHECK(F->is_one(F->mul(a, F->inv(a))));
      CHECK(F->is_one(F->pow(a, F->order() - 1)));
    }
  }
}

TEST_CASE("poly_arith examples") {
  auto F2 = Field::prime(2);
  auto F3 = Field::prime(3);
  // (T+1)^2 = T^2 + 1 in characteristic 2.
  CHECK(P("T+1", F2) * P("T+1", F2) == P("T^2+1", F2));
  auto [q, r] = divmod(P("T^2+1", F3), P("T", F3));
  CHECK(q == P("T", F3));
  CHECK(r == P("1", F3));
  CHECK(gcd(P("T^2+T", F2), P("T", F2)) == P("T", F2));
  CHECK_THROWS_AS(divmod(P("T", F3), Poly(F3)), DomainError);
  CHECK_THROWS_AS(P("T", F2) + P("T", F3), DomainError);
  CHECK(pow_mod(P("T", F2), 3, P("T^2+T+1", F2)).is_one());
}

TEST_CASE("zero polynomial has no degree") {
  auto F = Field::prime(5);
  CHECK_FALSE(Poly(F).degree().has_value());
  CHECK(P("3", F).degree() == 0u);
  CHECK((P("T", F) - P("T", F)).is_zero());
}

TEST_CASE("is_irreducible examples and brute-force agreement") {
  auto F2 = Field::prime(2);
  CHECK(is_irreducible(P("T^2+T+1", F2)));
  CHECK_FALSE(is_irreducible(P("T^2+1", F2)));
  for (auto F : {Field::prime(2), Field::prime(3), Field::gf(2, 2)}) {
    CHECK(is_irreducible(P("T", F)));
    CHECK_THROWS_AS(is_irreducible(P("1", F)), DomainError);
    std::size_t max_deg = F->order() == 2 ? 6 : 4;
    for (std::size_t n = 1; n <= max_deg; ++n) {
      // Every monic polynomial of degree n.
      for (const Poly& low : all_below(F, n)) {
        const Poly f = low + Poly::monomial(F, F->one(), n);
        CHECK(is_irreducible(f) == brute_irreducible(f));
      }
    }
  }
}

TEST_CASE("factor examples") {
  auto F2 = Field::prime(2);
  auto fz = factor(P("T^2+T", F2));
  REQUIRE(fz.factors.size() == 2);
  CHECK(fz.factors[0].factor == P("T", F2));
  CHECK(fz.factors[1].factor == P("T+1", F2));
  CHECK(fz.factors[0].multiplicity == 1);

  const Poly g = P("T^2+T+1", F2);
  auto sq = factor(g * g);
  REQUIRE(sq.factors.size() == 1);
  CHECK(sq.factors[0].factor == g);
  CHECK(sq.factors[0].multiplicity == 2);

  auto F3 = Field::prime(3);
  auto unit = factor(P("2", F3));
  CHECK(unit.factors.empty());
  CHECK(unit.unit == F3->from_int(2));
  CHECK_THROWS_AS(factor(Poly(F3)), DomainError);
}

TEST_CASE("factor round-trips on random polynomials (q in 2,3,4,5,9)") {
  std::mt19937_64 rng(7);
  for (std::uint64_t q : {2, 3, 4, 5, 9}) {
    auto F = field_for_order(q);
    for (int trial = 0; trial < 20; ++trial) {
      Poly f = random_poly(F, 9, rng);
      if (f.is_zero()) continue;
      // Force repeated factors in a third of the cases.
      if (trial % 3 == 0) f = f * f;
      auto fz = factor(f, static_cast<std::uint64_t>(trial));
      CHECK(expand(fz, F) == f);
      for (const auto& fac : fz.factors) {
        CHECK(fac.factor.is_monic());
        CHECK(is_irreducible(fac.factor));
      }
    }
  }
}

TEST_CASE("ring axioms for random triples") {
  std::mt19937_64 rng(11);
  for (std::uint64_t q : {2, 3, 4, 5, 9}) {
    auto F = field_for_order(q);
    for (int i = 0; i < 200; ++i) {
      const Poly a = random_poly(F, 5, rng);
      const Poly b = random_poly(F, 5, rng);
      const Poly c = random_poly(F, 5, rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a + b == b + a);
    }
  }
}

TEST_CASE("fermat_check") {
  auto F3 = Field::prime(3);
  auto F2 = Field::prime(2);
  CHECK(fermat_check(P("T+1", F3), P("T", F3)));
  CHECK(fermat_check(P("T", F2), P("T^2+T+1", F2)));
  CHECK_THROWS_AS(fermat_check(P("T", F2), P("T", F2)), DomainError);
  CHECK_THROWS_AS(fermat_check(P("T", F2), P("T^2+1", F2)), DomainError);

  std::mt19937_64 rng(3);
  int checked = 0;
  for (std::uint64_t q : {2, 3, 4}) {
    auto F = field_for_order(q);
    while (checked < 50 * static_cast<int>(q == 2 ? 1 : q == 3 ? 2 : 3)) {
      Poly Pp = random_poly(F, 5, rng);
      if (Pp.is_constant() || !is_irreducible(Pp)) continue;
      Poly a = random_poly(F, 6, rng);
      if ((a % Pp).is_zero()) continue;
      CHECK(fermat_check(a, Pp));
      ++checked;
    }
  }
}

TEST_CASE("unit_group_order matches brute-force counts") {
  auto F2 = Field::prime(2);
  CHECK(unit_group_order(P("T", F2)) == 1);
  CHECK(unit_group_order(P("T^2+T+1", F2)) == 3);
  CHECK(unit_group_order(P("T^2", F2)) == 2);
  CHECK_THROWS_AS(unit_group_order(P("1", F2)), DomainError);
  for (std::uint64_t q : {2, 3}) {
    auto F = field_for_order(q);
    for (std::size_t n = 1; n <= 3; ++n) {
      for (const Poly& low : all_below(F, n)) {
        const Poly a = low + Poly::monomial(F, F->one(), n);
        long count = 0;
        for (const Poly& r : all_below(F, n)) {
          if (gcd(r, a).is_one()) ++count;
        }
        CHECK(unit_group_order(a) == count);
      }
    }
  }
}

TEST_CASE("polynomial text round-trips") {
  auto F4 = Field::gf(2, 2);
  const Poly f = parse_poly("[1,1]*T^3 + [0,1]*T + 1 over GF(2^2)");
  CHECK(same_field(f.field(), F4));
  CHECK(to_string(f) == "[1,1]*T^3 + [0,1]*T + [1,0] over GF(2^2)");
  CHECK(parse_poly(to_string(f)) == f);
  auto F5 = Field::prime(5);
  CHECK(to_string(parse_poly("T^2 - 1", F5)) == "1*T^2 + 4 over GF(5)");
  CHECK(to_string(Poly(F5)) == "0 over GF(5)");
  std::mt19937_64 rng(5);
  for (std::uint64_t q : {2, 3, 4, 9, 25}) {
    auto F = field_for_order(q);
    for (int i = 0; i < 30; ++i) {
      const Poly g = random_poly(F, 7, rng);
      CHECK(parse_poly(to_string(g)) == g);
    }
  }
  CHECK_THROWS_AS(parse_poly("T^2 +", F5), ParseError);
  CHECK_THROWS_AS(parse_poly("T^2"), ParseError);
}

TEST_CASE("residue fields print and parse with a T-polynomial modulus") {
  auto F2 = Field::prime(2);
  auto K = Field::extension(F2, P("T^2+T+1", F2));
  // T^2+T+1 is also the standard GF(4) modulus.
  CHECK(K->describe() == "GF(2^2)");
  auto F3 = Field::prime(3);
  auto R = Field::extension(F3, P("T^2+T+2", F3));
  CHECK(R->describe() == "GF(3)[T]/(1*T^2 + 1*T + 2)");
  auto S = parse_field(R->describe());
  CHECK(same_field(S, R));
  CHECK(R->format(R->element(5)) == "(1*T + 2)");
}

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
#include "ncarith/nc_torus.hpp"

using namespace ncarith;
using namespace ncarith::nc_torus;
using bignum::BigFloat;

namespace {

QuadraticSurd S(const char* text) { return QuadraticSurd::parse(text); }

std::vector<long> ints(const std::vector<mpz_class>& v) {
  std::vector<long> out;
  for (const auto& x : v) out.push_back(x.get_si());
  return out;
}

QuadraticSurd random_surd(std::mt19937_64& rng, long max_d = 500) {
  const long P = static_cast<long>(rng() % 41) - 20;
  const long Q = 1 + static_cast<long>(rng() % 15);
  const long D = 2 + static_cast<long>(rng() % (max_d - 1));
  return QuadraticSurd::from_parts(P, rng() % 2 ? 1 : -1, D, rng() % 2 ? Q : -Q);
}

// Partial quotients from a high-precision float; an independent check of
// the exact recurrence for the leading terms.
std::vector<long> float_cf(const QuadraticSurd& x, std::size_t n) {
  BigFloat v = x.to_bigfloat(2000);
  std::vector<long> out;
  for (std::size_t i = 0; i < n; ++i) {
    const mpz_class a = v.floor_to_integer();
    out.push_back(a.get_si());
    v = BigFloat(1, 2000) / (v - BigFloat(a, 2000));
  }
  return out;
}

Matrix2 M(long a, long b, long c, long d) { return Matrix2{{{a, b}, {c, d}}}; }

}  // namespace

TEST_CASE("surd arithmetic and normal form") {
  const QuadraticSurd r2 = QuadraticSurd::sqrt(2);
  CHECK(r2 * r2 == QuadraticSurd(2));
  CHECK(QuadraticSurd::sqrt(8) == QuadraticSurd(2) * r2);
  CHECK(QuadraticSurd::sqrt(9) == QuadraticSurd(3));
  CHECK(S("(1+sqrt(5))/2") * S("(1+sqrt(5))/2") == S("(1+sqrt(5))/2") + QuadraticSurd(1));
  CHECK(to_string(S("(1+sqrt(5))/2")) == "(1+sqrt(5))/2");
  CHECK(to_string(r2) == "(0+sqrt(2))/1");
  CHECK(to_string(S("7/3")) == "7/3");
  CHECK(to_string(S("(3-1*sqrt(5))/2")) == "(3-sqrt(5))/2");
  CHECK(to_string(S("1/sqrt(3)")) == "(0+sqrt(3))/3");
  CHECK(S("(3+1*sqrt(5))/2") == S("(3+sqrt(5))/2"));
  CHECK_THROWS_AS(r2 + QuadraticSurd::sqrt(3), DomainError);
  CHECK_THROWS_AS(r2 / QuadraticSurd(0), DomainError);
  CHECK_THROWS_AS(S("sqrt(2"), ParseError);
  CHECK_THROWS_AS(S("1/0"), ParseError);
  CHECK_THROWS_AS(QuadraticSurd::from_parts(1, 1, -3, 1), DomainError);
  CHECK(S("sqrt(2)") > S("1"));
  CHECK(S("sqrt(2)-1") < S("1/2"));
  CHECK(S("-sqrt(2)").floor() == -2);
  CHECK(S("(1-sqrt(5))/2").floor() == -1);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const long D = 2 + static_cast<long>(rng() % 50);
    const QuadraticSurd x = QuadraticSurd::from_parts(static_cast<long>(rng() % 21) - 10, 1, D, 1 + rng() % 7);
    const QuadraticSurd y = QuadraticSurd::from_parts(static_cast<long>(rng() % 21) - 10, -1, D, 1 + rng() % 7);
    const QuadraticSurd z = QuadraticSurd(mpq_class(static_cast<long>(rng() % 9) - 4, 1 + rng() % 5));
    CHECK((x + y) * z == x * z + y * z);
    CHECK((x * y) / y == x);
    CHECK(x - x == QuadraticSurd(0));
    const auto nf = x.normal_form();
    CHECK(nf.Q > 0);
    CHECK(mpz_divisible_p(mpz_class(nf.D - nf.P * nf.P).get_mpz_t(), nf.Q.get_mpz_t()));
    CHECK(QuadraticSurd::parse(to_string(x)) == x);
    // Ordering and floor agree with 200-bit floats.
    const BigFloat fx = x.to_bigfloat(200), fy = y.to_bigfloat(200);
    CHECK((x < y) == (fx < fy));
    CHECK(x.floor() == fx.floor_to_integer());
  }
}

TEST_CASE("cf_expand examples") {
  const auto r2 = cf_expand(S("sqrt(2)"));
  CHECK(ints(r2.preperiod) == std::vector<long>{1});
  CHECK(ints(r2.period) == std::vector<long>{2});
  CHECK(to_string(r2) == "[1; (period: 2)]");

  const auto q = cf_expand(S("7/3"));
  CHECK(ints(q.preperiod) == std::vector<long>{2, 3});
  CHECK(q.period.empty());
  CHECK(to_string(q) == "[2; 3]");

  const auto golden = cf_expand(S("(1+sqrt(5))/2"));
  CHECK(ints(golden.preperiod) == std::vector<long>{1});
  CHECK(ints(golden.period) == std::vector<long>{1});

  CHECK(to_string(cf_expand(S("sqrt(7)"))) == "[2; (period: 1, 1, 1, 4)]");
  CHECK(to_string(cf_expand(S("-7/3"))) == "[-3; 1, 2]");
  CHECK(to_string(cf_expand(S("5"))) == "[5]");
  const auto cut = cf_expand(S("sqrt(2)"), 1);
  CHECK(cut.truncated);
  CHECK(to_string(cut) == "[1; ...]");
  CHECK_THROWS_AS(cf_expand(S("sqrt(2)"), 0), DomainError);
}

TEST_CASE("cf_expand agrees with floating expansion and round-trips") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const QuadraticSurd x = random_surd(rng);
    const auto cf = cf_expand(x);
    if (!x.is_rational()) REQUIRE_FALSE(cf.period.empty());
    CHECK(cf_value(cf) == x);
    if (!x.is_rational()) {
      std::vector<long> exact;
      for (std::size_t k = 0; k < 25; ++k) exact.push_back(cf.term(k).get_si());
      CHECK(exact == float_cf(x, 25));
      for (std::size_t k = 1; k < 25; ++k) CHECK(cf.term(k) >= 1);
    }
  }
  for (int i = 0; i < 50; ++i) {
    mpq_class r(static_cast<long>(rng() % 2001) - 1000, 1 + rng() % 999);
    r.canonicalize();
    CHECK(cf_value(cf_expand(QuadraticSurd(r))).to_rational() == r);
  }
}

TEST_CASE("effros_shen") {
  const auto golden = effros_shen(cf_expand(S("(1+sqrt(5))/2")), 4);
  CHECK(golden.matrices.size() == 4);
  for (const auto& m : golden.matrices) CHECK(m == M(1, 1, 1, 0));
  CHECK(golden.stationary);
  const auto r2 = effros_shen(cf_expand(S("sqrt(2)")), 3);
  for (const auto& m : r2.matrices) CHECK(m == M(2, 1, 1, 0));
  CHECK(r2.stationary);
  CHECK_FALSE(effros_shen(cf_expand(S("sqrt(7)")), 4).stationary);
  CHECK_THROWS_AS(effros_shen(cf_expand(S("7/3")), 3), DomainError);
  CHECK_NOTHROW(effros_shen(cf_expand(S("7/3")), 1));
}

TEST_CASE("Bratteli products give alternating convergents") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    const QuadraticSurd x = random_surd(rng);
    if (x.is_rational()) continue;
    const auto cf = cf_expand(x);
    const auto data = effros_shen(cf, 12);
    Matrix2 prod = Matrix2{{{cf.term(0), 1}, {1, 0}}};
    const auto conv = convergents(cf, 13);
    for (std::size_t n = 1; n <= 12; ++n) {
      prod = prod * data.matrices[n - 1];
      const mpq_class pq(prod[0][0], prod[1][0]);
      CHECK(pq == conv[n]);
      // Even convergents below theta, odd above; errors shrink.
      const QuadraticSurd diff = QuadraticSurd(pq) - x;
      CHECK(diff.sign() == (n % 2 == 0 ? -1 : 1));
      const QuadraticSurd prev = QuadraticSurd(conv[n - 1]) - x;
      CHECK((diff.sign() < 0 ? -diff : diff) < (prev.sign() < 0 ? -prev : prev));
    }
  }
}

TEST_CASE("is_positive") {
  const QuadraticSurd r2 = S("sqrt(2)");
  CHECK(is_positive(1, 0, r2));
  CHECK(is_positive(-1, 1, r2));
  CHECK_FALSE(is_positive(1, -1, r2));
  CHECK_FALSE(is_positive(0, 0, r2));
  // Exactly one of x, -x is positive for x != 0 in Z + Z theta.
  for (long m = -30; m <= 30; ++m)
    for (long n = -30; n <= 30; ++n) {
      if (m == 0 && n == 0) continue;
      CHECK(is_positive(m, n, r2) != is_positive(-m, -n, r2));
    }
}

TEST_CASE("morita_equivalent examples") {
  const auto a = morita_equivalent(S("sqrt(2)"), S("sqrt(2)-1"));
  CHECK(a.equivalent);
  REQUIRE(a.witness);
  CHECK(mobius(*a.witness, S("sqrt(2)")) == S("sqrt(2)-1"));
  CHECK(a.sl2_equivalent);
  CHECK(det(*a.sl2_witness) == 1);

  CHECK_FALSE(morita_equivalent(S("sqrt(2)"), S("(1+sqrt(5))/2")).equivalent);
  CHECK_FALSE(morita_equivalent(S("sqrt(2)"), S("1/2")).equivalent);
  CHECK_FALSE(morita_equivalent(S("sqrt(2)"), S("sqrt(3)")).equivalent);

  const auto r = morita_equivalent(S("1/2"), S("1/3"));
  CHECK(r.equivalent);
  CHECK(r.sl2_equivalent);
  CHECK(mobius(*r.witness, S("1/2")) == S("1/3"));

  // sqrt(3) = [1; (1, 2)] has an even period and no unit of norm -1, so
  // theta and -theta are GL_2- but not SL_2-related through the tail map.
  const auto s3 = morita_equivalent(S("sqrt(3)"), S("-sqrt(3)"));
  CHECK(s3.equivalent);
  CHECK(det(*s3.witness) == -1);
  CHECK_FALSE(s3.sl2_equivalent);
  // sqrt(2) has odd period: the stabilizer flips the determinant.
  const auto s2 = morita_equivalent(S("sqrt(2)"), S("-sqrt(2)"));
  CHECK(s2.sl2_equivalent);
  CHECK(det(*s2.sl2_witness) == 1);
  CHECK(mobius(*s2.sl2_witness, S("sqrt(2)")) == S("-sqrt(2)"));
}

TEST_CASE("morita is an equivalence relation on a surd pool") {
  std::mt19937_64 rng(9);
  std::vector<QuadraticSurd> pool;
  const Matrix2 gens[] = {M(1, 1, 0, 1), M(0, 1, 1, 0), M(1, 0, 2, 1), M(2, 1, 1, 1)};
  for (const char* base : {"sqrt(2)", "sqrt(3)", "(1+sqrt(5))/2", "sqrt(7)"}) {
    QuadraticSurd x = S(base);
    pool.push_back(x);
    for (int i = 0; i < 4; ++i) {
      x = mobius(gens[rng() % 4], x);
      pool.push_back(x);
    }
  }
  REQUIRE(pool.size() == 20);
  for (const auto& x : pool) CHECK(morita_equivalent(x, x).equivalent);
  for (const auto& x : pool)
    for (const auto& y : pool) {
      const auto xy = morita_equivalent(x, y);
      CHECK(xy.equivalent == morita_equivalent(y, x).equivalent);
      CHECK(xy.equivalent == (x.d() == y.d()));
      if (xy.equivalent) {
        CHECK(mobius(*xy.witness, x) == y);
        const mpz_class dt = det(*xy.witness);
        CHECK((dt == 1 || dt == -1));
      }
      if (xy.sl2_witness) CHECK(det(*xy.sl2_witness) == 1);
      for (const auto& z : pool)
        if (xy.equivalent && morita_equivalent(y, z).equivalent) CHECK(morita_equivalent(x, z).equivalent);
    }
}

TEST_CASE("connes_invariant") {
  const auto c = connes_invariant(M(2, 1, 1, 1), bignum::bits_for_digits(60));
  CHECK(c.lambda == S("(3+sqrt(5))/2"));
  const BigFloat ref = BigFloat::parse("0.962423650119206894995517826848736846270368668771321039322036", 256);
  CHECK((c.log_lambda - ref).abs() < BigFloat::parse("1e-58", 256));
  CHECK(c.log_lambda.to_string(10) == "+9.624236501e-1");
  // [[2,1],[1,0]] has trace 2 and is rejected; its square has lambda = (1+sqrt(2))^2.
  CHECK_THROWS_AS(connes_invariant(M(2, 1, 1, 0), 200), DomainError);
  const auto silver = connes_invariant(M(5, 2, 2, 1), 200);
  CHECK(silver.lambda == S("3+2*sqrt(2)"));
  const BigFloat log_silver = BigFloat::parse("0.881373587019543025232609324979792309028160328261635410753296", 256);
  CHECK((silver.log_lambda - log_silver.ldexp(1)).abs() < BigFloat::parse("1e-55", 256));
  CHECK_THROWS_AS(connes_invariant(M(1, 1, 1, 0), 100), DomainError);
  CHECK_THROWS_AS(connes_invariant(M(0, 1, 1, 0), 100), DomainError);
  CHECK_THROWS_AS(connes_invariant(M(3, 0, 0, 1), 100), DomainError);

  std::mt19937_64 rng(11);
  const Matrix2 gens[] = {M(1, 1, 0, 1), M(1, 0, 1, 1), M(0, 1, 1, 0), M(1, -1, 0, 1)};
  for (int i = 0; i < 20; ++i) {
    Matrix2 p = M(1, 0, 0, 1);
    for (int k = 0; k < 5; ++k) p = p * gens[rng() % 4];
    const Matrix2 pinv{{{det(p) * p[1][1], -det(p) * p[0][1]}, {-det(p) * p[1][0], det(p) * p[0][0]}}};
    const Matrix2 conj = p * M(2, 1, 1, 1) * pinv;
    CHECK(connes_invariant(conj, 64).lambda == c.lambda);
  }
}

TEST_CASE("rotation scalar has modulus one") {
  const auto z = rotation_scalar(S("sqrt(2)"), 128);
  CHECK((z.abs() - BigFloat(1, 128)).abs() < BigFloat::parse("1e-35", 128));
}

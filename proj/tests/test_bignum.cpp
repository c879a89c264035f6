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
#include <string>

#include "doctest.h"
#include "ncarith/bignum.hpp"
#include "ncarith/errors.hpp"

using namespace ncarith;
using namespace ncarith::bignum;

namespace {

// floor(sqrt(n)) by integer Newton iteration.
mpz_class newton_isqrt(const mpz_class& n) {
  mpz_class x = n;
  mpz_class y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  return x;
}

// floor(pi * 10^digits) from Machin's formula in fixed point.
mpz_class machin_pi_scaled(long digits) {
  const long guard = 10;
  mpz_class unit;
  mpz_ui_pow_ui(unit.get_mpz_t(), 10, static_cast<unsigned long>(digits + guard));
  auto arctan_inv = [&](long x) {
    mpz_class sum = 0;
    mpz_class term = unit / x;
    const long x2 = x * x;
    for (long k = 0; term != 0; ++k) {
      mpz_class t = term / (2 * k + 1);
      sum += (k % 2 == 0) ? t : mpz_class(-t);
      term /= x2;
    }
    return sum;
  };
  mpz_class pi = 4 * (4 * arctan_inv(5) - arctan_inv(239));
  mpz_class drop;
  mpz_ui_pow_ui(drop.get_mpz_t(), 10, guard);
  return pi / drop;
}

// Leading `digits` decimal digits of a positive BigFloat as an integer.
mpz_class scaled_digits(const BigFloat& x, long digits) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  return (x * BigFloat(scale, x.precision())).floor_to_integer();
}

BigFloat random_in(std::mt19937_64& rng, double lo, double hi, Precision prec) {
  std::uniform_int_distribution<long> dist(0, 1L << 40);
  mpq_class u(dist(rng), 1L << 40);
  return BigFloat(mpq_class(u * (hi - lo) + lo), prec);
}

bool within_ulps(const BigFloat& a, const BigFloat& b, long ulps) {
  const BigFloat diff = (a - b).abs();
  return diff <= b.ulp() * BigFloat(ulps, b.precision());
}

}  // namespace

TEST_CASE("bf_arith basics") {
  const BigFloat one(1L, 64);
  CHECK(arith(ArithOp::kAdd, one, one) == BigFloat(2L, 64));
  const BigFloat three(3L, 64);
  const BigFloat third = arith(ArithOp::kDiv, one, three);
  CHECK(within_ulps(third * three, one, 4));
  CHECK_THROWS_AS(arith(ArithOp::kDiv, one, BigFloat(64)), DomainError);
  CHECK_THROWS_AS(sqrt(BigFloat(-1L, 64)), DomainError);
  CHECK_THROWS_AS(BigFloat(4), DomainError);
  // Result precision is the smaller operand precision.
  CHECK((BigFloat(1L, 100) + BigFloat(1L, 60)).precision() == 60);
}

TEST_CASE("sqrt(2) at 50 digits agrees with an integer Newton iteration") {
  const Precision prec = bits_for_digits(50);
  const BigFloat r = sqrt(BigFloat(2L, prec));
  mpz_class n;
  mpz_ui_pow_ui(n.get_mpz_t(), 10, 2 * 49);
  const mpz_class oracle = newton_isqrt(2 * n);  // floor(sqrt(2) * 10^49)
  const mpz_class got = scaled_digits(r, 49);
  CHECK(abs(got - oracle) <= 1);
  // 48 matching digits.
  CHECK(got / 10 == oracle / 10);
}

TEST_CASE("pi at 50 digits matches an independent Machin-series computation") {
  const BigFloat p = pi(bits_for_digits(60));
  const mpz_class oracle = machin_pi_scaled(49);
  CHECK(scaled_digits(p, 49) / 10 == oracle / 10);
  CHECK_THROWS_AS(log(BigFloat(64), 64), DomainError);
  CHECK_THROWS_AS(log(BigFloat(-2L, 64), 64), DomainError);
}

TEST_CASE("elementary identities") {
  const BigFloat zero(128);
  CHECK(exp(zero, 128) == BigFloat(1L, 128));
  CHECK(cos(zero, 128) == BigFloat(1L, 128));
  CHECK(elementary(ElementaryOp::kSin, zero, 128).is_zero());
  CHECK(elementary(ElementaryOp::kAtan, BigFloat(1L, 128), 128) == pi(128).ldexp(-2));
}

TEST_CASE("exp(log(exp(x))) stays within 8 ulp") {
  std::mt19937_64 rng(1);
  const Precision prec = 128;
  for (int i = 0; i < 100; ++i) {
    const BigFloat x = random_in(rng, -10, 10, prec);
    const BigFloat e = exp(x, prec);
    CHECK(within_ulps(exp(log(e, prec), prec), e, 8));
  }
}

TEST_CASE("cos^2 + sin^2 = 1 within 8 ulp") {
  std::mt19937_64 rng(2);
  const Precision prec = 128;
  const BigFloat one(1L, prec);
  for (int i = 0; i < 100; ++i) {
    const BigFloat x = random_in(rng, -50, 50, prec);
    const BigFloat c = cos(x, prec);
    const BigFloat s = sin(x, prec);
    CHECK(within_ulps(c * c + s * s, one, 8));
  }
}

TEST_CASE("doubling precision keeps the leading digits") {
  std::mt19937_64 rng(3);
  for (Precision prec : {64L, 128L, 256L}) {
    for (int i = 0; i < 20; ++i) {
      const BigFloat x = random_in(rng, 0.5, 10, prec);
      const BigFloat lo = log(x, prec);
      const BigFloat hi = log(BigFloat(x, 2 * prec), 2 * prec);
      const int keep = static_cast<int>(prec / 4 * 0.30103);
      CHECK(BigFloat(lo, prec).to_string(keep) == BigFloat(hi, prec).to_string(keep));
    }
  }
}

TEST_CASE("exp_2pi_i examples") {
  const Precision prec = bits_for_digits(30);
  const BigComplex one = exp_2pi_i(BigFloat(prec), BigFloat(1L, prec), prec);
  CHECK(one.re() == BigFloat(1L, prec));
  CHECK(one.im().is_zero());

  const BigComplex quarter = exp_2pi_i(BigFloat(mpq_class(1, 4), prec), BigFloat(2L, prec), prec);
  CHECK((quarter.re().abs() <= BigFloat(2L, prec).ulp().ldexp(2)));
  CHECK(within_ulps(quarter.im(), BigFloat(2L, prec), 4));

  CHECK_THROWS_AS(exp_2pi_i(BigFloat(prec), BigFloat(prec), prec), DomainError);

  // alpha = sqrt(5), scale = log golden ratio; values frozen from an
  // independent 60-digit evaluation, and checked at two precisions here.
  const BigFloat re_ref = BigFloat::parse("0.0420702925482069969578511571335645941379923211753397885374372", 300);
  const BigFloat im_ref = BigFloat::parse("0.47936928464608855383196383581703892594098571568898587681881", 300);
  for (long digits : {30L, 60L}) {
    const Precision p = bits_for_digits(digits);
    const BigFloat a = sqrt(BigFloat(5L, p + 64));
    const BigFloat s = log((BigFloat(1L, p + 64) + a).ldexp(-1), p);
    const BigComplex z = exp_2pi_i(a, s, p);
    const BigFloat tol = BigFloat::parse("1e-" + std::to_string(digits - 2), p);
    CHECK((z.re() - BigFloat(re_ref, p)).abs() < tol);
    CHECK((z.im() - BigFloat(im_ref, p)).abs() < tol);
    CHECK(within_ulps(z.abs(), s, 4));
  }
}

TEST_CASE("decimal serialization") {
  const BigFloat x = BigFloat::parse("-1.25e+3", 64);
  CHECK(x.to_string(5) == "-1.2500e+3");
  CHECK(BigFloat(64).to_string(3) == "+0.00e+0");
  CHECK(BigFloat(mpq_class(1, 8), 64).to_string(2) == "+1.2e-1");
  CHECK_THROWS_AS(BigFloat::parse("1.2.3", 64), ParseError);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 50; ++i) {
    const BigFloat v = random_in(rng, -1e6, 1e6, 200);
    const std::string s = v.to_string(70);
    CHECK(BigFloat::parse(s, 200).to_string(70) == s);
  }
  CHECK(BigFloat(12L, 64).mantissa() == 3);
  CHECK(BigFloat(12L, 64).exponent() == 2);
}

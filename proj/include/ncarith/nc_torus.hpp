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

#pragma once

// Exact real quadratic numbers, continued fractions and the invariants of
// the noncommutative torus A_theta that depend only on theta.

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ncarith/bignum.hpp"

namespace ncarith::nc_torus {

// x = (a + b sqrt(d)) / c with d > 1 squarefree (or d = 1, b = 0 for a
// rational), c > 0 and gcd(a, b, c) = 1. The representation is unique.
class QuadraticSurd {
 public:
  QuadraticSurd() : QuadraticSurd(mpz_class(0)) {}
  QuadraticSurd(const mpz_class& n);  // NOLINT: integers are surds
  QuadraticSurd(long n) : QuadraticSurd(mpz_class(n)) {}  // NOLINT
  explicit QuadraticSurd(const mpq_class& r);
  // (P + s sqrt(D)) / Q for any D >= 0 and Q != 0; perfect squares collapse
  // to rationals. Throws DomainError for D < 0, Q = 0 or |s| != 1, and
  // ResourceError when D is too large to certify its squarefree part.
  static QuadraticSurd from_parts(const mpz_class& P, int s, const mpz_class& D, const mpz_class& Q);
  static QuadraticSurd sqrt(const mpz_class& D) { return from_parts(0, 1, D, 1); }

  // Accepts integer expressions in + - * / ( ) and sqrt(n), e.g.
  // "(P+s*sqrt(D))/Q", "sqrt(2)-1", "7/3". Throws ParseError.
  static QuadraticSurd parse(std::string_view text);

  const mpz_class& a() const { return a_; }
  const mpz_class& b() const { return b_; }
  const mpz_class& c() const { return c_; }
  // Squarefree radicand, 1 for rationals.
  const mpz_class& d() const { return d_; }
  bool is_rational() const { return b_ == 0; }
  mpq_class to_rational() const;  // DomainError unless rational

  // (P, s, D, Q) with the smallest Q > 0 such that Q | D - P^2.
  struct NormalForm {
    mpz_class P;
    int s;
    mpz_class D;
    mpz_class Q;
  };
  NormalForm normal_form() const;

  int sign() const;
  mpz_class floor() const;
  QuadraticSurd conjugate() const;
  bignum::BigFloat to_bigfloat(bignum::Precision prec) const;

  QuadraticSurd operator-() const;
  // Mixing two different radicands throws DomainError; division by zero too.
  friend QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y);
  friend QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y);
  friend QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y);
  friend QuadraticSurd operator/(const QuadraticSurd& x, const QuadraticSurd& y);
  friend bool operator==(const QuadraticSurd& x, const QuadraticSurd& y) = default;
  friend std::strong_ordering operator<=>(const QuadraticSurd& x, const QuadraticSurd& y);

 private:
  QuadraticSurd(mpz_class a, mpz_class b, mpz_class d, mpz_class c);
  void canonicalize();

  mpz_class a_, b_, d_, c_;
};

// "(P+sqrt(D))/Q" / "(P-sqrt(D))/Q" from the normal form; "p/q" or "p" for
// rationals.
std::string to_string(const QuadraticSurd& x);

struct ContinuedFraction {
  std::vector<mpz_class> preperiod;  // a_0, ..., a_k
  std::vector<mpz_class> period;     // empty for rationals
  bool truncated = false;            // max_terms ran out before termination/repetition

  bool is_rational() const { return period.empty() && !truncated; }
  // Number of known partial quotients (infinite for periodic).
  std::optional<std::size_t> length() const;
  // a_k, unrolling the period. Throws DomainError past a finite end.
  const mpz_class& term(std::size_t k) const;
};

// "[a0; a1, a2, (period: p1, p2)]"; a truncated expansion ends in ", ...".
std::string to_string(const ContinuedFraction& cf);

// Exact expansion. The period of a quadratic irrational is found when a
// complete quotient repeats. Throws DomainError if max_terms < 1.
ContinuedFraction cf_expand(const QuadraticSurd& theta, std::size_t max_terms = 100000);

// Value of a complete (non-truncated) expansion.
QuadraticSurd cf_value(const ContinuedFraction& cf);

using Matrix2 = std::array<std::array<mpz_class, 2>, 2>;

mpz_class det(const Matrix2& m);
Matrix2 operator*(const Matrix2& x, const Matrix2& y);
// (a theta + b) / (c theta + d). Throws DomainError when the denominator vanishes.
QuadraticSurd mobius(const Matrix2& m, const QuadraticSurd& theta);

// Convergents p_n/q_n for n = 0..count-1 (fewer if the expansion ends).
std::vector<mpq_class> convergents(const ContinuedFraction& cf, std::size_t count);

struct BratteliData {
  std::vector<Matrix2> matrices;  // [[a_k, 1], [1, 0]], k = 1..depth
  bool stationary = false;        // all partial multiplicity matrices equal
};

// Throws DomainError when the expansion has fewer than depth terms after a_0.
BratteliData effros_shen(const ContinuedFraction& cf, std::size_t depth);

// m + n theta > 0, exactly.
bool is_positive(const mpz_class& m, const mpz_class& n, const QuadraticSurd& theta);

struct MoritaResult {
  bool equivalent = false;  // GL_2(Z)
  bool sl2_equivalent = false;
  std::optional<Matrix2> witness;      // theta' = witness . theta
  std::optional<Matrix2> sl2_witness;  // determinant 1
};

// GL_2(Z) orbit test: rationals are always equivalent; quadratic irrationals
// are equivalent iff their continued fractions share a tail. Each witness is
// verified exactly (ContractViolation if it fails).
MoritaResult morita_equivalent(const QuadraticSurd& theta, const QuadraticSurd& theta_prime);

struct ConnesInvariant {
  QuadraticSurd lambda;  // dominant eigenvalue, > 1
  bignum::BigFloat log_lambda;
};

// M with det = +-1 and |trace| > 2; DomainError otherwise.
ConnesInvariant connes_invariant(const Matrix2& m, bignum::Precision prec);

// The scalar e^{2 pi i theta} in v u = e^{2 pi i theta} u v.
bignum::BigComplex rotation_scalar(const QuadraticSurd& theta, bignum::Precision prec);

}  // namespace ncarith::nc_torus

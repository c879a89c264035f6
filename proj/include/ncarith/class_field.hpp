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

// Explicit generators of Hilbert class fields: Perron-Frobenius units, Pell
// fundamental units, the generator beta = log(eps) e^{2 pi i alpha}, the
// j-invariant and Hilbert class polynomials, and a report comparing the two.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ncarith/bignum.hpp"
#include "ncarith/lattice.hpp"
#include "ncarith/nc_torus.hpp"

namespace ncarith::class_field {

using IntMatrix = std::vector<std::vector<mpz_class>>;
using lattice::IntPoly;

struct CompanionMatrix {
  IntMatrix entries;
  bool nonnegative = false;
};

// Ones on the subdiagonal, last column a_0 .. a_{m-1}; its characteristic
// polynomial det(xI - B) is x^m - a_{m-1} x^{m-1} - ... - a_0.
CompanionMatrix companion_matrix(const std::vector<mpz_class>& coeffs);

// det(xI - M), low degree first (monic). Throws DomainError for a ragged or
// empty matrix.
IntPoly charpoly(const IntMatrix& m);

// Largest real root of p, by Sturm isolation and exact-sign bisection to
// 2^-prec. Throws DomainError when p has no real root.
bignum::BigFloat largest_real_root(const IntPoly& p, bignum::Precision prec);

struct PerronFrobenius {
  bignum::BigFloat value;
  bignum::BigFloat lower, upper;  // Collatz-Wielandt bracket
  bignum::BigFloat bisection;     // largest real root of the characteristic polynomial
  std::size_t squarings = 0;
};

// Dominant eigenvalue of a non-negative primitive matrix. Throws DomainError
// for negative entries or an imprimitive matrix, PrecisionError when the
// bracket does not close, ContractViolation when the two routes disagree.
PerronFrobenius perron_frobenius(const IntMatrix& m, bignum::Precision prec);

bool is_squarefree(const mpz_class& n);

struct PellSolution {
  mpz_class D;
  mpz_class a, b;  // a^2 - D b^2 = norm
  int norm = 0;    // +4 or -4
  nc_torus::QuadraticSurd epsilon;  // (a + b sqrt(D)) / 2
  mpz_class verified_below;  // brute force confirmed no solution with smaller b
};

// Fundamental solution of x^2 - D y^2 = +-4 from the continued fraction of
// the maximal-order generator, checked by brute force for b < min(found, cap).
PellSolution pell_fundamental(const mpz_class& D, const mpz_class& brute_force_cap = 1000000);

// Smallest b (and then smallest a) with a^2 - D b^2 = +-4, b <= cap.
std::optional<PellSolution> pell_brute_force(const mpz_class& D, const mpz_class& cap);

// log(eps) e^{2 pi i alpha}. Throws DomainError unless eps > 1.
bignum::BigComplex generator_complex(const bignum::BigFloat& alpha, const bignum::BigFloat& epsilon, long digits);
bignum::BigComplex generator_complex(const nc_torus::QuadraticSurd& alpha, const nc_torus::QuadraticSurd& epsilon,
                                     long digits);
// exp(2 pi i alpha + log log eps): the same number by the other closed form.
bignum::BigComplex generator_complex_exp_form(const bignum::BigFloat& alpha, const bignum::BigFloat& epsilon,
                                              long digits);
// cos(2 pi alpha) log(eps).
bignum::BigFloat generator_real(const bignum::BigFloat& alpha, const bignum::BigFloat& epsilon, long digits);
bignum::BigFloat generator_real(const nc_torus::QuadraticSurd& alpha, const nc_torus::QuadraticSurd& epsilon,
                                long digits);

// Working precision for an exact surd alpha possibly far from [0, 1).
bignum::BigFloat surd_value(const nc_torus::QuadraticSurd& x, long digits);

// j(tau) = E4^3 / Delta after moving tau into the fundamental domain.
// Throws DomainError unless Im tau > 0 and ResourceError above 20000 digits.
bignum::BigComplex j_invariant(const bignum::BigComplex& tau, long digits);

struct QuadraticForm {
  mpz_class a, b, c;
  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;
};

// Reduced primitive forms of discriminant disc < 0, sorted by (a, b).
// Throws DomainError unless disc < 0 and disc = 0, 1 mod 4.
std::vector<QuadraticForm> reduced_forms(const mpz_class& disc);

struct ClassPolynomial {
  mpz_class disc;
  std::vector<QuadraticForm> forms;
  IntPoly coefficients;       // monic, low degree first
  bignum::BigFloat residual;  // max distance of a computed coefficient from its integer
};

// prod (x - j((-b + sqrt(disc)) / 2a)); PrecisionError when the residual is
// not below 10^{-digits/2}.
ClassPolynomial hilbert_class_poly(const mpz_class& disc, long digits);

enum class DiscConvention { kFundamental, kFourD };

// -4D when D = 1, 2 mod 4 and -D when D = 3 mod 4 (kFundamental); -4D (kFourD).
mpz_class discriminant_for(const mpz_class& D, DiscConvention convention);
std::string to_string(DiscConvention convention);

struct GeneratorReport {
  mpz_class D;
  long digits = 0;
  std::size_t max_degree = 0;
  mpz_class height_bound;
  DiscConvention convention = DiscConvention::kFundamental;
  nc_torus::QuadraticSurd alpha;
  PellSolution pell;
  bignum::BigFloat log_epsilon;
  bignum::BigComplex beta;
  bignum::BigFloat modulus_error;  // | |beta| - log eps |
  lattice::Recognition recognition;
  ClassPolynomial class_polynomial;
  std::optional<bool> compatible;  // recognized degree in {h, 2h}
  bignum::BigFloat pf_epsilon;     // PF eigenvalue of the companion of x^2 - D
};

// The generator pipeline with alpha = sqrt(D) and eps the Pell fundamental unit.
// Throws DomainError unless D >= 2 is squarefree.
GeneratorReport corollary12_experiment(const mpz_class& D, long digits, std::size_t max_degree,
                                       const mpz_class& height_bound,
                                       DiscConvention convention = DiscConvention::kFundamental);

std::string report_to_json(const GeneratorReport& report);

}  // namespace ncarith::class_field

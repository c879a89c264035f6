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

// Integral LLL reduction and integer-relation recognition of algebraic
// numbers from high-precision approximations.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

#include "ncarith/bignum.hpp"

namespace ncarith::lattice {

using Vector = std::vector<mpz_class>;
using Basis = std::vector<Vector>;
// Coefficients c_0, c_1, ..., c_n of c_0 + c_1 x + ... + c_n x^n.
using IntPoly = std::vector<mpz_class>;

struct Reduction {
  Basis basis;      // LLL-reduced
  Basis transform;  // unimodular U with basis = U * input (rows)
};

// LLL with Lovasz parameter delta = num/den (default 99/100) using exact
// integer Gram-Schmidt data. Throws DomainError for linearly dependent or
// ragged input.
Reduction lattice_reduce(const Basis& basis, long delta_num = 99, long delta_den = 100);

mpz_class dot(const Vector& a, const Vector& b);

// c_n x^n + ... + c_0, e.g. "x^2 - x - 1"; "0" for the zero polynomial.
std::string format_poly(const IntPoly& p, std::string_view var = "x");
mpz_class height(const IntPoly& p);
std::size_t degree(const IntPoly& p);  // 0 for constants and zero

bignum::BigComplex evaluate(const IntPoly& p, const bignum::BigComplex& x);

struct Recognition {
  std::optional<IntPoly> polynomial;  // primitive, positive leading coefficient
  bignum::BigFloat residual;          // |p(x)| of the answer, or the best rejected candidate
  mpz_class height = 0;               // height of that same polynomial
  bignum::BigFloat gate;              // 10^{-digits/2}
  bool stable = false;                // same answer at the coarser scaling
  std::size_t candidates = 0;         // candidates passing the gate at the main scaling
};

// Integer-relation search on (1, x, ..., x^max_degree) scaled by 10^digits,
// with real and imaginary rows for complex x. The answer is the gcd of all
// candidates of height <= height_bound passing the residual gate, and must be
// reproduced at scale 10^{digits - ceil(digits/5)}. x must carry at least
// `digits` correct digits. Throws DomainError when digits < 8 * max_degree.
Recognition recognize_min_poly(const bignum::BigComplex& x, std::size_t max_degree, const mpz_class& height_bound,
                               long digits);
Recognition recognize_min_poly(const bignum::BigFloat& x, std::size_t max_degree, const mpz_class& height_bound,
                               long digits);

}  // namespace ncarith::lattice

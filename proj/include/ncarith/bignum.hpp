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

// Arbitrary-precision real and complex numbers.
//
// BigFloat is a thin value type around an MPFR number. Every result is
// correctly rounded at the precision of the result, which is the minimum of
// the operand precisions for binary operations. Composite routines (complex
// exponential, angle reduction) work with extra guard bits and round once.

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

namespace ncarith::bignum {

using Precision = long;  // bits

constexpr Precision kMinPrecision = 8;
constexpr Precision kGuardBits = 32;

// Bits needed to represent `digits` decimal digits.
Precision bits_for_digits(long digits);

class BigFloat {
 public:
  explicit BigFloat(Precision prec = 64);
  BigFloat(long value, Precision prec);
  BigFloat(const mpz_class& value, Precision prec);
  BigFloat(const mpq_class& value, Precision prec);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  // Rounds `other` to `prec` bits.
  BigFloat(const BigFloat& other, Precision prec);

  // Accepts the output grammar of to_string() and any decimal MPFR accepts.
  static BigFloat parse(std::string_view text, Precision prec);

  Precision precision() const;
  int sign() const;
  bool is_zero() const { return sign() == 0; }

  // value = mantissa * 2^exponent with an odd mantissa (zero: 0, 0).
  mpz_class mantissa() const;
  long exponent() const;

  double to_double() const;
  mpz_class round_to_integer() const;
  mpz_class floor_to_integer() const;
  // Exact value as a rational (MPFR numbers are dyadic).
  mpq_class to_rational() const;

  // Distance from the next representable number, in absolute terms.
  BigFloat ulp() const;

  // "+d.ddd…e+k" with exactly `digits` significant digits.
  std::string to_string(int digits) const;

  BigFloat operator-() const;
  BigFloat abs() const;

  friend BigFloat operator+(const BigFloat& x, const BigFloat& y);
  friend BigFloat operator-(const BigFloat& x, const BigFloat& y);
  friend BigFloat operator*(const BigFloat& x, const BigFloat& y);
  // Throws DomainError on a zero divisor.
  friend BigFloat operator/(const BigFloat& x, const BigFloat& y);

  BigFloat& operator+=(const BigFloat& y) { return *this = *this + y; }
  BigFloat& operator-=(const BigFloat& y) { return *this = *this - y; }
  BigFloat& operator*=(const BigFloat& y) { return *this = *this * y; }
  BigFloat& operator/=(const BigFloat& y) { return *this = *this / y; }

  friend bool operator==(const BigFloat& x, const BigFloat& y);
  friend std::partial_ordering operator<=>(const BigFloat& x, const BigFloat& y);

  // Scales by 2^k exactly.
  BigFloat ldexp(long k) const;

  mpfr_srcptr raw() const { return value_; }
  mpfr_ptr raw() { return value_; }

 private:
  mpfr_t value_;
};

enum class ArithOp { kAdd, kSub, kMul, kDiv, kSqrt };
enum class ElementaryOp { kExp, kLog, kCos, kSin, kAtan, kPi };

// Binary arithmetic dispatcher; kSqrt ignores y.
BigFloat arith(ArithOp op, const BigFloat& x, const BigFloat& y);
// Result at `prec` bits; kPi ignores x.
BigFloat elementary(ElementaryOp op, const BigFloat& x, Precision prec);

BigFloat sqrt(const BigFloat& x);
BigFloat exp(const BigFloat& x, Precision prec);
BigFloat log(const BigFloat& x, Precision prec);
BigFloat cos(const BigFloat& x, Precision prec);
BigFloat sin(const BigFloat& x, Precision prec);
BigFloat atan(const BigFloat& x, Precision prec);
BigFloat pi(Precision prec);

// Fractional part in [0, 1).
BigFloat frac(const BigFloat& x);

class BigComplex {
 public:
  explicit BigComplex(Precision prec = 64);
  BigComplex(const BigFloat& re, const BigFloat& im);
  explicit BigComplex(const BigFloat& re);

  const BigFloat& re() const { return re_; }
  const BigFloat& im() const { return im_; }
  Precision precision() const { return re_.precision(); }

  BigComplex conj() const { return {re_, -im_}; }
  BigFloat norm() const;  // |z|^2
  BigFloat abs() const;

  friend BigComplex operator+(const BigComplex& x, const BigComplex& y);
  friend BigComplex operator-(const BigComplex& x, const BigComplex& y);
  friend BigComplex operator*(const BigComplex& x, const BigComplex& y);
  friend BigComplex operator/(const BigComplex& x, const BigComplex& y);
  BigComplex operator-() const { return {-re_, -im_}; }
  BigComplex& operator+=(const BigComplex& y) { return *this = *this + y; }
  BigComplex& operator-=(const BigComplex& y) { return *this = *this - y; }
  BigComplex& operator*=(const BigComplex& y) { return *this = *this * y; }

  BigComplex scaled(const BigFloat& s) const { return {re_ * s, im_ * s}; }

 private:
  BigFloat re_;
  BigFloat im_;
};

BigComplex exp(const BigComplex& z, Precision prec);

// scale * e^{2 pi i alpha}. The angle is reduced modulo 1 in alpha before
// multiplying by 2 pi, at prec + 64 guard bits. Requires scale > 0.
BigComplex exp_2pi_i(const BigFloat& alpha, const BigFloat& scale, Precision prec);

}  // namespace ncarith::bignum

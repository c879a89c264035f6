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

#include "ncarith/bignum.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "ncarith/errors.hpp"

namespace ncarith::bignum {

namespace {

Precision checked(Precision prec) {
  if (prec < kMinPrecision) {
    throw DomainError("precision must be at least 8 bits");
  }
  return prec;
}

}  // namespace

Precision bits_for_digits(long digits) {
  // log2(10) rounded up, plus a couple of bits so the last digit is honest.
  return static_cast<Precision>(std::ceil(static_cast<double>(digits) * 3.3219280948873623)) + 4;
}

BigFloat::BigFloat(Precision prec) {
  mpfr_init2(value_, checked(prec));
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long value, Precision prec) {
  mpfr_init2(value_, checked(prec));
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const mpz_class& value, Precision prec) {
  mpfr_init2(value_, checked(prec));
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const mpq_class& value, Precision prec) {
  mpfr_init2(value_, checked(prec));
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  // Leave `other` as a valid minimal-precision zero.
  mpfr_init2(value_, kMinPrecision);
  mpfr_swap(value_, other.value_);
}

BigFloat::BigFloat(const BigFloat& other, Precision prec) {
  mpfr_init2(value_, checked(prec));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::parse(std::string_view text, Precision prec) {
  BigFloat out(prec);
  std::string buf(text);
  char* end = nullptr;
  if (buf.empty()) throw ParseError("empty number");
  mpfr_strtofr(out.value_, buf.c_str(), &end, 10, MPFR_RNDN);
  if (end != buf.c_str() + buf.size()) throw ParseError("not a decimal number: '" + buf + "'");
  if (!mpfr_number_p(out.value_)) throw ParseError("not a finite number: '" + buf + "'");
  return out;
}

Precision BigFloat::precision() const { return mpfr_get_prec(value_); }

int BigFloat::sign() const { return mpfr_sgn(value_); }

mpz_class BigFloat::mantissa() const {
  if (is_zero()) return 0;
  mpz_class m;
  mpfr_get_z_2exp(m.get_mpz_t(), value_);
  return m >> static_cast<unsigned long>(mpz_scan1(m.get_mpz_t(), 0));
}

long BigFloat::exponent() const {
  if (is_zero()) return 0;
  mpz_class m;
  long e = mpfr_get_z_2exp(m.get_mpz_t(), value_);
  return e + static_cast<long>(mpz_scan1(m.get_mpz_t(), 0));
}

double BigFloat::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

mpz_class BigFloat::round_to_integer() const {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), value_, MPFR_RNDN);
  return z;
}

mpz_class BigFloat::floor_to_integer() const {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), value_, MPFR_RNDD);
  return z;
}

mpq_class BigFloat::to_rational() const {
  if (is_zero()) return 0;
  mpz_class m;
  long e = mpfr_get_z_2exp(m.get_mpz_t(), value_);
  mpq_class q(m);
  if (e >= 0) {
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<unsigned long>(e));
  } else {
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<unsigned long>(-e));
  }
  return q;
}

BigFloat BigFloat::ulp() const {
  BigFloat out(precision());
  if (is_zero()) {
    mpfr_set_ui_2exp(out.value_, 1, mpfr_get_emin(), MPFR_RNDN);
    return out;
  }
  // Unit in the last place: 2^(EXP - prec) with MPFR's mantissa in [1/2, 1).
  mpfr_set_ui_2exp(out.value_, 1, mpfr_get_exp(value_) - precision(), MPFR_RNDN);
  return out;
}

std::string BigFloat::to_string(int digits) const {
  if (digits < 1) throw DomainError("digit count must be positive");
  const char sign_char = sign() < 0 ? '-' : '+';
  if (is_zero()) {
    std::string s = "+0";
    if (digits > 1) s += "." + std::string(static_cast<size_t>(digits - 1), '0');
    return s + "e+0";
  }
  mpfr_exp_t exp10 = 0;
  char* raw = mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(digits), value_, MPFR_RNDN);
  std::string body(raw);
  mpfr_free_str(raw);
  if (!body.empty() && body.front() == '-') body.erase(0, 1);
  std::string out(1, sign_char);
  out += body.front();
  if (body.size() > 1) {
    out += '.';
    out += body.substr(1);
  }
  const long k = static_cast<long>(exp10) - 1;
  out += k < 0 ? "e-" : "e+";
  out += std::to_string(k < 0 ? -k : k);
  return out;
}

BigFloat BigFloat::operator-() const {
  BigFloat out(precision());
  mpfr_neg(out.value_, value_, MPFR_RNDN);
  return out;
}

BigFloat BigFloat::abs() const {
  BigFloat out(precision());
  mpfr_abs(out.value_, value_, MPFR_RNDN);
  return out;
}

BigFloat operator+(const BigFloat& x, const BigFloat& y) {
  BigFloat out(std::min(x.precision(), y.precision()));
  mpfr_add(out.value_, x.value_, y.value_, MPFR_RNDN);
  return out;
}

BigFloat operator-(const BigFloat& x, const BigFloat& y) {
  BigFloat out(std::min(x.precision(), y.precision()));
  mpfr_sub(out.value_, x.value_, y.value_, MPFR_RNDN);
  return out;
}

BigFloat operator*(const BigFloat& x, const BigFloat& y) {
  BigFloat out(std::min(x.precision(), y.precision()));
  mpfr_mul(out.value_, x.value_, y.value_, MPFR_RNDN);
  return out;
}

BigFloat operator/(const BigFloat& x, const BigFloat& y) {
  if (y.is_zero()) throw DomainError("division by zero");
  BigFloat out(std::min(x.precision(), y.precision()));
  mpfr_div(out.value_, x.value_, y.value_, MPFR_RNDN);
  return out;
}

bool operator==(const BigFloat& x, const BigFloat& y) { return mpfr_equal_p(x.value_, y.value_) != 0; }

std::partial_ordering operator<=>(const BigFloat& x, const BigFloat& y) {
  if (mpfr_unordered_p(x.value_, y.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(x.value_, y.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

BigFloat BigFloat::ldexp(long k) const {
  BigFloat out(precision());
  mpfr_mul_2si(out.value_, value_, k, MPFR_RNDN);
  return out;
}

BigFloat sqrt(const BigFloat& x) {
  if (x.sign() < 0) throw DomainError("sqrt of a negative number");
  BigFloat out(x.precision());
  mpfr_sqrt(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

BigFloat arith(ArithOp op, const BigFloat& x, const BigFloat& y) {
  switch (op) {
    case ArithOp::kAdd: return x + y;
    case ArithOp::kSub: return x - y;
    case ArithOp::kMul: return x * y;
    case ArithOp::kDiv: return x / y;
    case ArithOp::kSqrt: return sqrt(x);
  }
  throw DomainError("unknown arithmetic operation");
}

BigFloat exp(const BigFloat& x, Precision prec) {
  BigFloat out(prec);
  mpfr_exp(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

BigFloat log(const BigFloat& x, Precision prec) {
  if (x.sign() <= 0) throw DomainError("log of a non-positive number");
  BigFloat out(prec);
  mpfr_log(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

BigFloat cos(const BigFloat& x, Precision prec) {
  BigFloat out(prec);
  mpfr_cos(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

BigFloat sin(const BigFloat& x, Precision prec) {
  BigFloat out(prec);
  mpfr_sin(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

BigFloat atan(const BigFloat& x, Precision prec) {
  BigFloat out(prec);
  mpfr_atan(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

BigFloat pi(Precision prec) {
  BigFloat out(prec);
  mpfr_const_pi(out.raw(), MPFR_RNDN);
  return out;
}

BigFloat elementary(ElementaryOp op, const BigFloat& x, Precision prec) {
  switch (op) {
    case ElementaryOp::kExp: return exp(x, prec);
    case ElementaryOp::kLog: return log(x, prec);
    case ElementaryOp::kCos: return cos(x, prec);
    case ElementaryOp::kSin: return sin(x, prec);
    case ElementaryOp::kAtan: return atan(x, prec);
    case ElementaryOp::kPi: return pi(prec);
  }
  throw DomainError("unknown elementary function");
}

BigFloat frac(const BigFloat& x) {
  BigFloat out(x.precision());
  mpfr_frac(out.raw(), x.raw(), MPFR_RNDN);
  if (out.sign() < 0) {
    // mpfr_frac keeps the sign of x; shift into [0, 1).
    BigFloat one(1L, x.precision());
    out = out + one;
    if (out >= one) out = BigFloat(x.precision());
  }
  return out;
}

BigComplex::BigComplex(Precision prec) : re_(prec), im_(prec) {}

BigComplex::BigComplex(const BigFloat& re, const BigFloat& im)
    : re_(re, std::min(re.precision(), im.precision())), im_(im, std::min(re.precision(), im.precision())) {}

BigComplex::BigComplex(const BigFloat& re) : re_(re), im_(re.precision()) {}

BigFloat BigComplex::norm() const { return re_ * re_ + im_ * im_; }

BigFloat BigComplex::abs() const {
  BigFloat out(precision());
  mpfr_hypot(out.raw(), re_.raw(), im_.raw(), MPFR_RNDN);
  return out;
}

BigComplex operator+(const BigComplex& x, const BigComplex& y) { return {x.re_ + y.re_, x.im_ + y.im_}; }

BigComplex operator-(const BigComplex& x, const BigComplex& y) { return {x.re_ - y.re_, x.im_ - y.im_}; }

BigComplex operator*(const BigComplex& x, const BigComplex& y) {
  return {x.re_ * y.re_ - x.im_ * y.im_, x.re_ * y.im_ + x.im_ * y.re_};
}

BigComplex operator/(const BigComplex& x, const BigComplex& y) {
  const BigFloat d = y.norm();
  if (d.is_zero()) throw DomainError("complex division by zero");
  return {(x.re_ * y.re_ + x.im_ * y.im_) / d, (x.im_ * y.re_ - x.re_ * y.im_) / d};
}

BigComplex exp(const BigComplex& z, Precision prec) {
  const Precision work = prec + kGuardBits;
  const BigFloat r = exp(z.re(), work);
  BigComplex w(r * cos(z.im(), work), r * sin(z.im(), work));
  return {BigFloat(w.re(), prec), BigFloat(w.im(), prec)};
}

BigComplex exp_2pi_i(const BigFloat& alpha, const BigFloat& scale, Precision prec) {
  if (scale.sign() <= 0) throw DomainError("exp_2pi_i: scale must be positive");
  const Precision work = prec + 64;
  const BigFloat reduced = frac(BigFloat(alpha, std::max(work, alpha.precision())));
  const BigFloat angle = BigFloat(reduced, work) * pi(work).ldexp(1);
  const BigFloat s(scale, work);
  return {BigFloat(s * cos(angle, work), prec), BigFloat(s * sin(angle, work), prec)};
}

}  // namespace ncarith::bignum

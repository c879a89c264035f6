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

// Twisted polynomial rings R<tau> with tau * a = a^t * tau.
//
// Elements are written f = a_0 + a_1 tau + ... + a_r tau^r with coefficients
// on the left. Acting on a field of characteristic p, f is the additive
// polynomial a_0 x + a_1 x^t + ... + a_r x^{t^r}, and the product in R<tau>
// is composition of those maps.
//
// Two coefficient rings are supported: the polynomial ring A = F_q[T]
// (PolyRing) and a finite field such as a residue field A/(P) (FieldRing).

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ncarith/errors.hpp"
#include "ncarith/ff_poly.hpp"

namespace ncarith::twisted {

// A = F_q[T].
struct PolyRing {
  ff::FieldPtr base;

  using Value = ff::Poly;
  Value zero() const { return ff::Poly(base); }
  Value from_base(const ff::Coords& c) const { return ff::Poly::constant(base, c); }
  bool is_zero(const Value& v) const { return v.is_zero(); }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value pow(const Value& a, const mpz_class& e) const;
  std::uint32_t characteristic() const { return base->characteristic(); }
  std::string format(const Value& v) const;
  Value parse(std::string_view text) const;
  // "GF(q)[T]"
  std::string describe() const;
  bool same(const PolyRing& o) const { return ff::same_field(base, o.base); }
};

// A finite field (prime, GF(p^e) or a residue field).
struct FieldRing {
  ff::FieldPtr field;

  using Value = ff::Coords;
  Value zero() const { return field->zero(); }
  bool is_zero(const Value& v) const { return field->is_zero(v); }
  Value add(const Value& a, const Value& b) const { return field->add(a, b); }
  Value sub(const Value& a, const Value& b) const { return field->sub(a, b); }
  Value mul(const Value& a, const Value& b) const { return field->mul(a, b); }
  Value pow(const Value& a, const mpz_class& e) const { return field->pow(a, e); }
  std::uint32_t characteristic() const { return field->characteristic(); }
  std::string format(const Value& v) const { return field->format(v); }
  Value parse(std::string_view text) const { return ff::parse_element(*field, text); }
  std::string describe() const { return field->describe(); }
  bool same(const FieldRing& o) const { return ff::same_field(field, o.field); }
};

// True when t = p^k for some k >= 1.
bool is_power_of(const mpz_class& t, std::uint32_t p);

template <class Ring>
class TwistedPoly {
 public:
  using Value = typename Ring::Value;

  TwistedPoly(Ring ring, mpz_class twist) : ring_(std::move(ring)), twist_(std::move(twist)) {
    if (!is_power_of(twist_, ring_.characteristic())) {
      throw DomainError("twist exponent must be a positive power of the characteristic");
    }
  }
  TwistedPoly(Ring ring, mpz_class twist, std::vector<Value> coeffs)
      : TwistedPoly(std::move(ring), std::move(twist)) {
    coeffs_ = std::move(coeffs);
    canonicalize();
  }

  static TwistedPoly constant(Ring ring, mpz_class twist, Value c) {
    return TwistedPoly(std::move(ring), std::move(twist), std::vector<Value>{std::move(c)});
  }
  // tau^k
  static TwistedPoly tau(Ring ring, mpz_class twist, std::size_t k, Value one) {
    std::vector<Value> cs(k + 1, ring.zero());
    cs[k] = std::move(one);
    return TwistedPoly(std::move(ring), std::move(twist), std::move(cs));
  }

  const Ring& ring() const { return ring_; }
  const mpz_class& twist() const { return twist_; }
  const std::vector<Value>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // Degree in tau; nullopt for zero.
  std::optional<std::size_t> tau_degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }
  Value coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : ring_.zero(); }

  friend TwistedPoly operator+(const TwistedPoly& f, const TwistedPoly& g) {
    f.require_compatible(g);
    std::vector<Value> cs(std::max(f.coeffs_.size(), g.coeffs_.size()), f.ring_.zero());
    for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = f.ring_.add(f.coeff(i), g.coeff(i));
    return TwistedPoly(f.ring_, f.twist_, std::move(cs));
  }

  friend TwistedPoly operator-(const TwistedPoly& f, const TwistedPoly& g) {
    f.require_compatible(g);
    std::vector<Value> cs(std::max(f.coeffs_.size(), g.coeffs_.size()), f.ring_.zero());
    for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = f.ring_.sub(f.coeff(i), g.coeff(i));
    return TwistedPoly(f.ring_, f.twist_, std::move(cs));
  }

  // (a tau^i)(b tau^j) = a b^{t^i} tau^{i+j}
  friend TwistedPoly operator*(const TwistedPoly& f, const TwistedPoly& g) {
    f.require_compatible(g);
    if (f.is_zero() || g.is_zero()) return TwistedPoly(f.ring_, f.twist_);
    const Ring& R = f.ring_;
    std::vector<Value> cs(f.coeffs_.size() + g.coeffs_.size() - 1, R.zero());
    for (std::size_t j = 0; j < g.coeffs_.size(); ++j) {
      if (R.is_zero(g.coeffs_[j])) continue;
      Value twisted = g.coeffs_[j];  // b_j^{t^i}
      for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
        if (i > 0) twisted = R.pow(twisted, f.twist_);
        if (R.is_zero(f.coeffs_[i])) continue;
        cs[i + j] = R.add(cs[i + j], R.mul(f.coeffs_[i], twisted));
      }
    }
    return TwistedPoly(f.ring_, f.twist_, std::move(cs));
  }

  friend bool operator==(const TwistedPoly& f, const TwistedPoly& g) {
    return f.ring_.same(g.ring_) && f.twist_ == g.twist_ && f.coeffs_ == g.coeffs_;
  }

  // "a_r*t^r + ... + a_1*t + a_0 [twist=p^k] over <base>"
  std::string to_string() const {
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      if (ring_.is_zero(coeffs_[k])) continue;
      if (!out.empty()) out += " + ";
      out += ring_.format(coeffs_[k]);
      if (k >= 1) out += "*t";
      if (k > 1) out += "^" + std::to_string(k);
    }
    if (out.empty()) out = "0";
    const std::uint32_t p = ring_.characteristic();
    unsigned long k = 0;
    for (mpz_class t = twist_; t > 1; t /= p) ++k;
    return out + " [twist=" + std::to_string(p) + "^" + std::to_string(k) + "] over " + ring_.describe();
  }

 private:
  void canonicalize() {
    while (!coeffs_.empty() && ring_.is_zero(coeffs_.back())) coeffs_.pop_back();
  }
  void require_compatible(const TwistedPoly& g) const {
    if (!ring_.same(g.ring_) || twist_ != g.twist_) throw DomainError("twisted polynomials have different twist specs");
  }

  Ring ring_;
  mpz_class twist_;
  std::vector<Value> coeffs_;
};

using APoly = TwistedPoly<PolyRing>;
using FieldTwistedPoly = TwistedPoly<FieldRing>;

// Evaluates the additive polynomial sum a_i x^{t^i} at x, where x lies in a
// field containing the coefficient field. Throws DomainError otherwise.
ff::Elem evaluate(const FieldTwistedPoly& f, const ff::Elem& x);
// Same, on raw coordinates of `ambient` (which must contain f's field).
ff::Coords evaluate(const FieldTwistedPoly& f, const ff::Field& ambient, const ff::Coords& x);

// Coefficientwise reduction A -> A/(P). The result keeps the twist, or uses
// |A/(P)| = q^{deg P} when `p_twist` is set. Throws DomainError when P is
// reducible.
FieldTwistedPoly reduce_mod(const APoly& f, const ff::Poly& P, bool p_twist = false);

// Parse the to_string() grammar; the base decides which overload applies.
APoly parse_over_A(std::string_view text);
FieldTwistedPoly parse_over_field(std::string_view text);

}  // namespace ncarith::twisted

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

// Finite fields and univariate polynomials over them.
//
// A Field is either a prime field Z/p or an extension of another Field by a
// monic irreducible polynomial, so towers such as
//   F_p  ⊂  F_q = F_p[y]/(g)  ⊂  F_q[T]/(P)  ⊂  ...
// are all the same type. Elements are stored flat as their coordinates over
// F_p in the tower basis; an element of an ancestor field embeds into a
// descendant by zero-padding.
//
// GF(p^e) always uses the lexicographically least monic irreducible modulus
// of degree e over Z/p, comparing (c_{e-1}, ..., c_0) with c_{e-1} most
// significant and coefficients ordered 0 < 1 < ... < p-1.

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ncarith::ff {

using Coords = std::vector<std::uint32_t>;

class Field;
class Poly;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
 public:
  static FieldPtr prime(std::uint32_t p);
  static FieldPtr gf(std::uint32_t p, unsigned e);
  // `modulus` must be monic and irreducible over `base`.
  static FieldPtr extension(const FieldPtr& base, const Poly& modulus);

  std::uint32_t characteristic() const { return p_; }
  std::size_t degree() const { return degree_; }
  std::size_t local_degree() const { return local_degree_; }
  bool is_prime_field() const { return parent_ == nullptr; }
  const FieldPtr& parent() const { return parent_; }
  // Monic modulus over the parent, lowest coefficient first.
  const std::vector<Coords>& modulus() const { return modulus_; }
  const mpz_class& order() const { return order_; }
  // Number of extension steps above F_p.
  std::size_t depth() const;

  Coords zero() const { return Coords(degree_, 0); }
  Coords one() const;
  Coords from_int(long value) const;
  bool is_zero(const Coords& a) const;
  bool is_one(const Coords& a) const;

  Coords add(const Coords& a, const Coords& b) const;
  Coords sub(const Coords& a, const Coords& b) const;
  Coords neg(const Coords& a) const;
  Coords mul(const Coords& a, const Coords& b) const;
  // Throws DomainError for zero.
  Coords inv(const Coords& a) const;
  Coords pow(const Coords& a, const mpz_class& e) const;
  // Multiplies every coordinate by an F_p scalar.
  Coords scale_fp(const Coords& a, std::uint32_t s) const;

  // Elements enumerate as base-p digit strings of their coordinates.
  Coords element(const mpz_class& index) const;
  mpz_class index(const Coords& a) const;
  Coords random(std::mt19937_64& rng) const;

  // True when `other` is this field or one of its ancestors.
  bool contains(const Field& other) const;
  // Image of an element of `from` (which must satisfy contains(from)).
  Coords embed(const Field& from, const Coords& a) const;

  // "GF(p)", "GF(p^e)" or "<parent>[T]/(modulus)".
  std::string describe() const;
  // Element text: integer for a prime field, [c0,...] over a prime field,
  // "(poly in T)" deeper in the tower.
  std::string format(const Coords& a) const;

  friend bool same_field(const Field& a, const Field& b);

 private:
  Field() = default;

  std::uint32_t p_ = 0;
  FieldPtr parent_;
  std::vector<Coords> modulus_;
  std::size_t local_degree_ = 1;
  std::size_t degree_ = 1;
  mpz_class order_;
  // GF(p^e) with the lexicographically least modulus.
  bool standard_ = false;
};

bool same_field(const Field& a, const Field& b);
bool same_field(const FieldPtr& a, const FieldPtr& b);

// An element with its field attached.
class Elem {
 public:
  Elem(FieldPtr field, Coords coords);
  static Elem from_int(const FieldPtr& field, long value);

  const FieldPtr& field() const { return field_; }
  const Coords& coords() const { return coords_; }
  bool is_zero() const { return field_->is_zero(coords_); }
  std::string to_string() const { return field_->format(coords_); }

  friend Elem operator+(const Elem& a, const Elem& b);
  friend Elem operator-(const Elem& a, const Elem& b);
  friend Elem operator*(const Elem& a, const Elem& b);
  Elem inv() const;
  Elem pow(const mpz_class& e) const;
  friend bool operator==(const Elem& a, const Elem& b);

 private:
  FieldPtr field_;
  Coords coords_;
};

// Polynomial over a Field, coefficients lowest degree first, never storing a
// zero leading coefficient. The zero polynomial has no degree (nullopt), which
// reads as "minus infinity".
class Poly {
 public:
  explicit Poly(FieldPtr field);
  Poly(FieldPtr field, std::vector<Coords> coeffs);

  static Poly constant(const FieldPtr& field, Coords c);
  static Poly monomial(const FieldPtr& field, Coords c, std::size_t k);
  static Poly x(const FieldPtr& field);
  // Coefficients as integers mod p (prime field or embedded prime subfield).
  static Poly from_ints(const FieldPtr& field, const std::vector<long>& coeffs);

  const FieldPtr& field() const { return field_; }
  const std::vector<Coords>& coeffs() const { return coeffs_; }
  std::optional<std::size_t> degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_one() const;
  bool is_monic() const;
  Coords coeff(std::size_t k) const;
  Coords leading() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& f, const Poly& g);
  friend Poly operator-(const Poly& f, const Poly& g);
  friend Poly operator*(const Poly& f, const Poly& g);
  friend Poly operator/(const Poly& f, const Poly& g);
  friend Poly operator%(const Poly& f, const Poly& g);
  Poly& operator+=(const Poly& g) { return *this = *this + g; }
  Poly& operator*=(const Poly& g) { return *this = *this * g; }
  friend bool operator==(const Poly& f, const Poly& g);

  Poly scaled(const Coords& c) const;
  Poly monic() const;
  Poly derivative() const;
  Coords evaluate(const Coords& x) const;

 private:
  void canonicalize();

  FieldPtr field_;
  std::vector<Coords> coeffs_;
};

enum class PolyOp { kAdd, kMul, kDivmod, kGcd, kPowMod };

// Throws DomainError on a zero divisor or mismatched fields.
std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g);
// Monic gcd (zero when both inputs are zero).
Poly gcd(const Poly& f, const Poly& g);
Poly pow(const Poly& f, unsigned long e);
Poly pow_mod(const Poly& f, const mpz_class& e, const Poly& modulus);

// Rabin's test. Throws DomainError for constant input.
bool is_irreducible(const Poly& f);

struct Factor {
  Poly factor;  // monic irreducible
  unsigned multiplicity;
};

struct Factorization {
  Coords unit;  // leading coefficient of the input
  std::vector<Factor> factors;
};

// Square-free split, distinct-degree split, then Cantor-Zassenhaus with a
// deterministic PRNG seeded by `seed`. Factors come back sorted by degree and
// then by coefficient index. Throws DomainError for the zero polynomial.
Factorization factor(const Poly& f, std::uint64_t seed = 0);
Poly expand(const Factorization& fz, const FieldPtr& field);

// a^{|P| - 1} == 1 (mod P) with |P| = q^{deg P}. Throws DomainError when P is
// reducible or divides a.
bool fermat_check(const Poly& a, const Poly& P);

// |(A/(a))^*| from the factorization of a. Throws DomainError for constants.
mpz_class unit_group_order(const Poly& a);

// Lexicographically least monic irreducible polynomial of the given degree.
Poly least_irreducible(const FieldPtr& field, unsigned degree);

// Uniform random polynomial of degree < bound (so possibly zero).
Poly random_poly(const FieldPtr& field, std::size_t bound, std::mt19937_64& rng);

// "c_k*T^k + ... + c_0" without the field suffix.
std::string format_terms(const Poly& f, std::string_view var = "T");
// "c_k*T^k + ... + c_0 over GF(p^e)".
std::string to_string(const Poly& f);

// Parses the to_string() grammar. A trailing "over GF(p)" / "over GF(p^e)"
// selects the field; otherwise `field` must be supplied. Coefficients may be
// omitted ("T^2 + 1") and '-' between terms is accepted.
Poly parse_poly(std::string_view text, const FieldPtr& field = nullptr, std::string_view var = "T");

// Parses one coefficient in the Field::format() grammar.
Coords parse_element(const Field& field, std::string_view text);

// Residue of `a` in `residue_field`, which must be base[T]/(P) with `a`
// defined over base.
Coords to_residue(const FieldPtr& residue_field, const Poly& a);
// Reduced representative (degree < deg P) of a residue.
Poly from_residue(const FieldPtr& residue_field, const Coords& c);

// Smallest k >= 1 with u^k == 1 (mod modulus). Throws DomainError when u is
// not a unit.
mpz_class multiplicative_order(const Poly& u, const Poly& modulus);

// "GF(p)" / "GF(p^e)" / "GF(q)" for a prime power q.
FieldPtr parse_field(std::string_view text);
// Field for a prime power q; DomainError when q is not one.
FieldPtr field_for_order(std::uint64_t q);

}  // namespace ncarith::ff

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

// Cluster algebras of geometric type with exact integer Laurent polynomials.
//
// Variables are x1..xn. Directions passed to mutate() are 1-based, matching
// the usual notation mu_1, ..., mu_n.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace ncarith::cluster {

using Exponents = std::vector<std::int32_t>;

// Graded lexicographic: larger total degree first, ties broken by the first
// differing exponent (larger first). Terms iterate from leading to trailing.
struct GradedLexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

class LaurentPoly {
 public:
  using Terms = std::map<Exponents, mpz_class, GradedLexGreater>;

  explicit LaurentPoly(std::size_t nvars) : n_(nvars) {}
  static LaurentPoly constant(std::size_t nvars, const mpz_class& c);
  // x_i, 1-based.
  static LaurentPoly variable(std::size_t nvars, std::size_t i);
  static LaurentPoly monomial(const Exponents& e, const mpz_class& c = 1);

  std::size_t nvars() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }
  // Bit length of the largest |coefficient|.
  std::size_t max_coefficient_bits() const;
  bool has_positive_coefficients() const;

  void add_term(const Exponents& e, const mpz_class& c);

  LaurentPoly operator-() const;
  LaurentPoly scaled(const mpz_class& c) const;
  // Multiply by x^e.
  LaurentPoly shifted(const Exponents& e) const;
  LaurentPoly pow(unsigned k) const;

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

 private:
  std::size_t n_;
  Terms terms_;
};

// Exact quotient a/b in the Laurent ring, or false when b does not divide a.
// Throws DomainError for b = 0 and ResourceError after `step_cap` steps.
bool divides(const LaurentPoly& b, const LaurentPoly& a, LaurentPoly* quotient, std::size_t step_cap = 1u << 22);

// Canonical text: "3*x1^-1*x2^2 - x3 + 5", terms in graded lex order.
std::string to_string(const LaurentPoly& f);
LaurentPoly parse_laurent(std::string_view text, std::size_t nvars);

bool is_level_p(const LaurentPoly& f, const mpz_class& p);

// Exact evaluation. Throws DomainError on a zero value or a size mismatch.
mpq_class specialize(const LaurentPoly& f, const std::vector<mpq_class>& values);

using Matrix = std::vector<std::vector<long>>;

bool is_skew_symmetric(const Matrix& B);
// b'_ij = -b_ij if i == k or j == k, else b_ij + (|b_ik| b_kj + b_ik |b_kj|)/2.
Matrix mutate_matrix(const Matrix& B, std::size_t k);

// numerator / denominator in the initial variables.
struct ClusterVariable {
  LaurentPoly numerator;
  LaurentPoly denominator;

  bool is_laurent() const { return denominator.is_monomial(); }
  // Folds a monomial denominator into negative exponents.
  // Throws ContractViolation otherwise.
  LaurentPoly as_laurent() const;
};

bool same_value(const ClusterVariable& a, const ClusterVariable& b);

class Seed {
 public:
  // Initial seed (x1..xn, B). Throws DomainError unless B is square and
  // skew-symmetric.
  explicit Seed(Matrix B);
  Seed(std::vector<ClusterVariable> cluster, Matrix B);

  std::size_t rank() const { return B_.size(); }
  const Matrix& exchange_matrix() const { return B_; }
  const std::vector<ClusterVariable>& cluster() const { return cluster_; }

 private:
  std::vector<ClusterVariable> cluster_;
  Matrix B_;
};

// Coefficient size at which mutation gives up with ResourceError.
inline constexpr std::size_t kCoefficientBitCap = 512;

// Exchange relation in direction k (1-based). Throws DomainError when k is out
// of range and ResourceError past the coefficient cap.
Seed mutate(const Seed& seed, std::size_t k);

bool same_seed(const Seed& a, const Seed& b);

// Once-punctured torus: B = [[0,2,-2],[-2,0,2],[2,-2,0]].
Seed markov_seed();

inline constexpr std::size_t kDefaultWordBound = 8;

// Cluster after applying `word` (directions 1-based, left to right) as
// Laurent polynomials. Throws ContractViolation if some variable is not
// Laurent and DomainError when the word is longer than `max_length`.
std::vector<LaurentPoly> laurent_expand(const Seed& seed, const std::vector<std::size_t>& word,
                                        std::size_t max_length = kDefaultWordBound);

// All words of length <= max_length over 1..n without immediate repeats,
// shortest first, then lexicographic. Includes the empty word.
std::vector<std::vector<std::size_t>> reduced_words(std::size_t n, std::size_t max_length);

// {"B": [[...]], "cluster": ["...", ...]}; a non-Laurent variable is written
// "(num)/(den)".
std::string seed_to_json(const Seed& seed);
Seed seed_from_json(std::string_view text);

}  // namespace ncarith::cluster

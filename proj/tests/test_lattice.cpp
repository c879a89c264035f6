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
#include "ncarith/lattice.hpp"
#include "oracles.hpp"

using namespace ncarith;
using namespace ncarith::lattice;
using bignum::BigComplex;
using bignum::BigFloat;

namespace {

Basis B(std::initializer_list<std::initializer_list<long>> rows) {
  Basis out;
  for (auto r : rows) {
    Vector v;
    for (long x : r) v.emplace_back(x);
    out.push_back(v);
  }
  return out;
}

mpz_class det(const std::vector<std::vector<mpz_class>>& m) { return oracles::leibniz_det(m); }

Basis transform_basis(const std::vector<std::vector<mpz_class>>& t, const Basis& b) {
  Basis out(t.size(), Vector(b[0].size(), 0));
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) out[i][j] += t[i][k] * b[k][j];
  return out;
}

}  // namespace

TEST_CASE("lattice_reduce examples") {
  const Basis id = B({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(lattice_reduce(id).basis == id);

  const Basis b = B({{12, 2}, {13, 4}});
  const Reduction r = lattice_reduce(b);
  const auto svp = oracles::shortest_sq_norm_2d(b, 20);
  REQUIRE(svp);
  const mpz_class first = dot(r.basis[0], r.basis[0]);
  // LLL guarantee with delta = 0.99: |b1|^2 <= (1/(delta - 1/4))^{n-1} lambda1^2.
  CHECK(first * 74 <= *svp * 100);
  CHECK(first == *svp);
  CHECK(abs(det(r.transform)) == 1);
  CHECK(transform_basis(r.transform, b) == r.basis);

  CHECK_THROWS_AS(lattice_reduce(B({{1, 2}, {2, 4}})), DomainError);
}

TEST_CASE("lattice_reduce on random bases: unimodular, same lattice, size-reduced, Lovasz") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> entry(-50, 50);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 4;
    Basis b(n, Vector(n));
    for (auto& v : b)
      for (auto& x : v) x = entry(rng);
    if (oracles::leibniz_det(b) == 0) continue;
    const Reduction r = lattice_reduce(b);
    CHECK(abs(det(r.transform)) == 1);
    CHECK(transform_basis(r.transform, b) == r.basis);
    CHECK(abs(oracles::leibniz_det(r.basis)) == abs(oracles::leibniz_det(b)));
    // Gram-Schmidt over Q.
    std::vector<std::vector<mpq_class>> star(n);
    std::vector<mpq_class> norms(n);
    std::vector<std::vector<mpq_class>> mu(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i) {
      star[i].assign(r.basis[i].begin(), r.basis[i].end());
      for (std::size_t j = 0; j < i; ++j) {
        mpq_class d = 0;
        for (std::size_t k = 0; k < n; ++k) d += mpq_class(r.basis[i][k]) * star[j][k];
        mu[i][j] = d / norms[j];
        for (std::size_t k = 0; k < n; ++k) star[i][k] -= mu[i][j] * star[j][k];
      }
      norms[i] = 0;
      for (const auto& x : star[i]) norms[i] += x * x;
    }
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j) CHECK(abs(mu[i][j]) <= mpq_class(1, 2));
      CHECK(norms[i] >= (mpq_class(99, 100) - mu[i][i - 1] * mu[i][i - 1]) * norms[i - 1]);
    }
  }
}

TEST_CASE("format_poly, height and degree") {
  CHECK(format_poly({-1, -1, 1}) == "x^2 - x - 1");
  CHECK(format_poly({-2, 0, 1}) == "x^2 - 2");
  CHECK(format_poly({0}) == "0");
  CHECK(format_poly({5}) == "5");
  CHECK(format_poly({1, 3}, "y") == "3*y + 1");
  CHECK(height({-7, 3, 1}) == 7);
  CHECK(degree({-7, 3, 1}) == 2);
  CHECK(degree({4}) == 0);
}

TEST_CASE("recognize_min_poly examples") {
  const auto prec = bignum::bits_for_digits(50) + 16;
  const Recognition sqrt2 = recognize_min_poly(bignum::sqrt(BigFloat(2L, prec)), 4, mpz_class(1000000), 50);
  REQUIRE(sqrt2.polynomial);
  CHECK(format_poly(*sqrt2.polynomial) == "x^2 - 2");
  CHECK(sqrt2.residual < BigFloat::parse("1e-25", 64));
  CHECK(sqrt2.stable);

  const BigFloat phi = (BigFloat(1L, prec) + bignum::sqrt(BigFloat(5L, prec))).ldexp(-1);
  const Recognition golden = recognize_min_poly(phi, 4, mpz_class(1000000), 50);
  REQUIRE(golden.polynomial);
  CHECK(format_poly(*golden.polynomial) == "x^2 - x - 1");

  const Recognition pi = recognize_min_poly(bignum::pi(prec), 6, mpz_class(100000000), 50);
  CHECK_FALSE(pi.polynomial);

  const BigComplex i(BigFloat(0L, prec), BigFloat(1L, prec));
  const Recognition gauss = recognize_min_poly(i, 3, mpz_class(100), 40);
  REQUIRE(gauss.polynomial);
  CHECK(format_poly(*gauss.polynomial) == "x^2 + 1");

  CHECK_THROWS_AS(recognize_min_poly(phi, 8, mpz_class(100), 50), DomainError);
  CHECK_THROWS_AS(recognize_min_poly(BigFloat(phi, 64), 2, mpz_class(100), 50), DomainError);
}

TEST_CASE("recognize_min_poly recovers planted algebraic numbers") {
  std::mt19937_64 rng(2024);
  const long digits = 80;
  const auto prec = bignum::bits_for_digits(digits) + 64;
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t deg = 1 + trial % 4;
    const IntPoly p = oracles::random_irreducible(rng, deg, 50);
    const auto roots = oracles::durand_kerner(p, prec);
    const BigComplex& x = roots[rng() % roots.size()];
    const Recognition r = recognize_min_poly(x, 4, mpz_class(1000000), digits);
    INFO(format_poly(p));
    REQUIRE(r.polynomial);
    CHECK(*r.polynomial == p);
    CHECK(r.residual < r.gate);
    // Soundness: the returned polynomial vanishes at x below the gate.
    CHECK(evaluate(*r.polynomial, x).abs() < r.gate);
  }
}

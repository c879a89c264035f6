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

#include "ncarith/lattice.hpp"

#include <algorithm>
#include <cmath>

#include "ncarith/errors.hpp"

namespace ncarith::lattice {

using bignum::BigComplex;
using bignum::BigFloat;

mpz_class dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DomainError("dot product of vectors of different lengths");
  mpz_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

namespace {

mpz_class round_div(const mpz_class& num, const mpz_class& den) {
  // nearest integer to num/den for den > 0, halves rounded up
  mpz_class q;
  const mpz_class twice = 2 * num + den;
  const mpz_class dd = 2 * den;
  mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), dd.get_mpz_t());
  return q;
}

void axpy(Vector& y, const mpz_class& q, const Vector& x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] -= q * x[i];
}

}  // namespace

// Integral LLL (Cohen, Algorithm 2.6.7), 1-based indices internally.
Reduction lattice_reduce(const Basis& input, long delta_num, long delta_den) {
  const std::size_t n = input.size();
  if (n == 0) return {};
  if (delta_den <= 0 || 4 * delta_num <= delta_den || delta_num > delta_den)
    throw DomainError("LLL parameter must satisfy 1/4 < delta <= 1");
  const std::size_t dim = input[0].size();
  for (const auto& v : input)
    if (v.size() != dim) throw DomainError("lattice vectors of different lengths");

  std::vector<Vector> b(n + 1), H(n + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    b[i] = input[i - 1];
    H[i] = Vector(n, 0);
    H[i][i - 1] = 1;
  }
  std::vector<mpz_class> d(n + 1, 0);
  std::vector<std::vector<mpz_class>> lam(n + 1, std::vector<mpz_class>(n + 1, 0));
  d[0] = 1;
  d[1] = dot(b[1], b[1]);
  if (d[1] == 0) throw DomainError("lattice basis is linearly dependent");

  auto red = [&](std::size_t k, std::size_t l) {
    if (abs(2 * lam[k][l]) <= d[l]) return;
    const mpz_class q = round_div(lam[k][l], d[l]);
    axpy(b[k], q, b[l]);
    axpy(H[k], q, H[l]);
    lam[k][l] -= q * d[l];
    for (std::size_t i = 1; i < l; ++i) lam[k][i] -= q * lam[l][i];
  };
  std::size_t kmax = 1;
  auto swap = [&](std::size_t k) {
    std::swap(b[k], b[k - 1]);
    std::swap(H[k], H[k - 1]);
    for (std::size_t j = 1; j + 1 < k; ++j) std::swap(lam[k][j], lam[k - 1][j]);
    const mpz_class l = lam[k][k - 1];
    const mpz_class B = (d[k - 2] * d[k] + l * l) / d[k - 1];
    for (std::size_t i = k + 1; i <= kmax; ++i) {
      const mpz_class t = lam[i][k];
      lam[i][k] = (d[k] * lam[i][k - 1] - l * t) / d[k - 1];
      lam[i][k - 1] = (B * t + l * lam[i][k]) / d[k];
    }
    d[k - 1] = B;
  };

  std::size_t k = 2;
  while (k <= n) {
    if (k > kmax) {
      kmax = k;
      for (std::size_t j = 1; j <= k; ++j) {
        mpz_class u = dot(b[k], b[j]);
        for (std::size_t i = 1; i < j; ++i) u = (d[i] * u - lam[k][i] * lam[j][i]) / d[i - 1];
        if (j < k) {
          lam[k][j] = u;
        } else {
          d[k] = u;
          if (u == 0) throw DomainError("lattice basis is linearly dependent");
        }
      }
    }
    red(k, k - 1);
    if (delta_den * d[k] * d[k - 2] < delta_num * d[k - 1] * d[k - 1] - delta_den * lam[k][k - 1] * lam[k][k - 1]) {
      swap(k);
      k = std::max<std::size_t>(2, k - 1);
      continue;
    }
    for (std::size_t l = k - 1; l-- > 1;) red(k, l);
    ++k;
  }
  Reduction out;
  for (std::size_t i = 1; i <= n; ++i) {
    out.basis.push_back(std::move(b[i]));
    out.transform.push_back(std::move(H[i]));
  }
  return out;
}

std::string format_poly(const IntPoly& p, std::string_view var) {
  std::string out;
  for (std::size_t i = p.size(); i-- > 0;) {
    const mpz_class& c = p[i];
    if (c == 0) continue;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const mpz_class mag = abs(c);
    if (i == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += std::string(var);
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

mpz_class height(const IntPoly& p) {
  mpz_class h = 0;
  for (const auto& c : p) h = std::max(h, mpz_class(abs(c)));
  return h;
}

std::size_t degree(const IntPoly& p) {
  for (std::size_t i = p.size(); i-- > 0;)
    if (p[i] != 0) return i;
  return 0;
}

BigComplex evaluate(const IntPoly& p, const BigComplex& x) {
  const bignum::Precision prec = x.precision();
  BigComplex acc{BigFloat(0L, prec), BigFloat(0L, prec)};
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + BigComplex(BigFloat(p[i], prec));
  return acc;
}

namespace {

// Drops x^k factors and the content; leading coefficient made positive.
std::optional<IntPoly> normalize(IntPoly c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  std::size_t shift = 0;
  while (shift < c.size() && c[shift] == 0) ++shift;
  c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(shift));
  if (c.size() < 2) return std::nullopt;
  mpz_class g = 0;
  for (const auto& v : c) g = gcd(g, v);
  if (c.back() < 0) g = -g;
  for (auto& v : c) v /= g;
  return c;
}

// gcd over Q, returned primitive with positive leading coefficient.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
  using QPoly = std::vector<mpq_class>;
  auto to_q = [](const IntPoly& p) {
    QPoly q(p.begin(), p.end());
    while (!q.empty() && q.back() == 0) q.pop_back();
    return q;
  };
  QPoly x = to_q(a), y = to_q(b);
  while (!y.empty()) {
    // x mod y
    while (x.size() >= y.size() && !x.empty()) {
      const mpq_class f = x.back() / y.back();
      const std::size_t off = x.size() - y.size();
      for (std::size_t i = 0; i < y.size(); ++i) x[off + i] -= f * y[i];
      x.pop_back();
      while (!x.empty() && x.back() == 0) x.pop_back();
    }
    std::swap(x, y);
  }
  mpz_class den = 1;
  for (const auto& v : x) den = lcm(den, mpz_class(v.get_den()));
  IntPoly out;
  for (const auto& v : x) out.push_back(mpz_class(v * den));
  mpz_class g = 0;
  for (const auto& v : out) g = gcd(g, v);
  if (g == 0) return {};
  if (out.back() < 0) g = -g;
  for (auto& v : out) v /= g;
  return out;
}

struct Attempt {
  std::optional<IntPoly> answer;
  BigFloat best_residual;
  mpz_class best_height = 0;
  std::size_t candidates = 0;
};

Attempt attempt(const BigComplex& x, bool real, std::size_t n, const mpz_class& height_bound, long scale_digits,
                const BigFloat& gate) {
  const bignum::Precision prec = x.precision();
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(scale_digits));
  const BigFloat S(scale, prec);
  Basis rows;
  BigComplex power{BigFloat(1L, prec), BigFloat(0L, prec)};
  for (std::size_t i = 0; i <= n; ++i) {
    Vector row(n + 1, 0);
    row[i] = 1;
    row.push_back((power.re() * S).round_to_integer());
    if (!real) row.push_back((power.im() * S).round_to_integer());
    rows.push_back(std::move(row));
    power = power * x;
  }
  const Reduction red = lattice_reduce(rows);
  Attempt out;
  out.best_residual = BigFloat(1L, prec);
  bool have_residual = false;
  std::vector<IntPoly> passing;
  for (const auto& row : red.basis) {
    auto p = normalize(IntPoly(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(n + 1)));
    if (!p) continue;
    const BigFloat r = evaluate(*p, x).abs();
    if (height(*p) <= height_bound && r < gate) {
      passing.push_back(*p);
    } else if (!have_residual || r < out.best_residual) {
      out.best_residual = r;
      out.best_height = height(*p);
      have_residual = true;
    }
  }
  out.candidates = passing.size();
  if (passing.empty()) return out;
  // Every true relation is a multiple of the minimal polynomial.
  IntPoly g = passing[0];
  for (std::size_t i = 1; i < passing.size(); ++i) g = poly_gcd(g, passing[i]);
  if (g.size() >= 2 && evaluate(g, x).abs() < gate) {
    out.answer = g;
  } else {
    std::sort(passing.begin(), passing.end(), [](const IntPoly& a, const IntPoly& b) {
      const mpz_class ha = height(a), hb = height(b);
      if (ha != hb) return ha < hb;
      return a.size() < b.size();
    });
    out.answer = passing[0];
  }
  out.best_residual = evaluate(*out.answer, x).abs();
  out.best_height = height(*out.answer);
  return out;
}

Recognition recognize(const BigComplex& x, bool real, std::size_t max_degree, const mpz_class& height_bound,
                      long digits) {
  if (max_degree < 1) throw DomainError("recognize_min_poly: max_degree must be at least 1");
  if (digits < static_cast<long>(8 * max_degree))
    throw DomainError("recognize_min_poly: need at least " + std::to_string(8 * max_degree) + " digits for degree " +
                      std::to_string(max_degree));
  if (x.precision() < bignum::bits_for_digits(digits))
    throw DomainError("recognize_min_poly: input carries fewer bits than the requested digits");
  Recognition out;
  out.gate = BigFloat::parse("1e-" + std::to_string(digits / 2), x.precision());
  const Attempt main = attempt(x, real, max_degree, height_bound, digits, out.gate);
  out.candidates = main.candidates;
  out.residual = main.best_residual;
  out.height = main.best_height;
  if (!main.answer) return out;
  const long coarse = digits - (digits + 4) / 5;
  const Attempt check = attempt(x, real, max_degree, height_bound, coarse, out.gate);
  out.stable = check.answer && *check.answer == *main.answer;
  if (out.stable) out.polynomial = main.answer;
  return out;
}

}  // namespace

Recognition recognize_min_poly(const BigComplex& x, std::size_t max_degree, const mpz_class& height_bound,
                               long digits) {
  return recognize(x, false, max_degree, height_bound, digits);
}

Recognition recognize_min_poly(const BigFloat& x, std::size_t max_degree, const mpz_class& height_bound, long digits) {
  return recognize(BigComplex(x), true, max_degree, height_bound, digits);
}

}  // namespace ncarith::lattice

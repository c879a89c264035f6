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

#include "ncarith/class_field.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"
#include "ncarith/errors.hpp"

namespace ncarith::class_field {

using bignum::BigComplex;
using bignum::BigFloat;
using bignum::Precision;
using nc_torus::QuadraticSurd;

CompanionMatrix companion_matrix(const std::vector<mpz_class>& coeffs) {
  const std::size_t m = coeffs.size();
  if (m == 0) throw DomainError("companion_matrix: need at least one coefficient");
  CompanionMatrix out;
  out.entries.assign(m, std::vector<mpz_class>(m, 0));
  for (std::size_t i = 1; i < m; ++i) out.entries[i][i - 1] = 1;
  for (std::size_t i = 0; i < m; ++i) out.entries[i][m - 1] = coeffs[i];
  out.nonnegative = std::all_of(coeffs.begin(), coeffs.end(), [](const mpz_class& c) { return c >= 0; });
  return out;
}

namespace {

std::size_t check_square(const IntMatrix& m) {
  if (m.empty()) throw DomainError("empty matrix");
  for (const auto& row : m)
    if (row.size() != m.size()) throw DomainError("matrix is not square");
  return m.size();
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  IntMatrix c(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

}  // namespace

// Faddeev-LeVerrier: M_k = A M_{k-1} + c_{m-k+1} I, c_{m-k} = -tr(A M_k)/k.
IntPoly charpoly(const IntMatrix& a) {
  const std::size_t m = check_square(a);
  IntPoly c(m + 1, 0);
  c[m] = 1;
  IntMatrix M(m, std::vector<mpz_class>(m, 0));
  for (std::size_t k = 1; k <= m; ++k) {
    M = multiply(a, M);
    for (std::size_t i = 0; i < m; ++i) M[i][i] += c[m - k + 1];
    const IntMatrix AM = multiply(a, M);
    mpz_class tr = 0;
    for (std::size_t i = 0; i < m; ++i) tr += AM[i][i];
    c[m - k] = -tr / static_cast<long>(k);
  }
  return c;
}

namespace {

using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly derivative(const QPoly& p) {
  QPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  QPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  while (!a.empty() && a.size() >= b.size()) {
    const mpq_class f = a.back() / b.back();
    const std::size_t off = a.size() - b.size();
    q[off] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return {q, a};
}

QPoly gcd(QPoly a, QPoly b) {
  while (!b.empty()) {
    QPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

mpq_class eval(const QPoly& p, const mpq_class& x) {
  mpq_class acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

int sign_changes(const std::vector<QPoly>& seq, const mpq_class& x) {
  int changes = 0, last = 0;
  for (const auto& p : seq) {
    const int s = sgn(eval(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

BigFloat largest_real_root(const IntPoly& p, Precision prec) {
  QPoly f(p.begin(), p.end());
  trim(f);
  if (f.size() < 2) throw DomainError("largest_real_root: polynomial is constant");
  // Squarefree part, so that the largest root is simple.
  const QPoly g = gcd(f, derivative(f));
  QPoly q = divmod(f, g).first;
  std::vector<QPoly> sturm{q, derivative(q)};
  while (sturm.back().size() > 1) {
    QPoly r = divmod(sturm[sturm.size() - 2], sturm.back()).second;
    for (auto& c : r) c = -c;
    if (r.empty()) break;
    sturm.push_back(std::move(r));
  }
  mpq_class bound = 0;
  for (std::size_t i = 0; i + 1 < q.size(); ++i) bound = std::max(bound, mpq_class(abs(q[i] / q.back())));
  bound += 1;
  mpq_class lo = -bound, hi = bound;
  if (sign_changes(sturm, lo) - sign_changes(sturm, hi) == 0)
    throw DomainError("largest_real_root: polynomial has no real root");
  // Shrink (lo, hi] until it holds exactly the largest root.
  while (sign_changes(sturm, lo) - sign_changes(sturm, hi) > 1) {
    const mpq_class mid = (lo + hi) / 2;
    if (sign_changes(sturm, mid) - sign_changes(sturm, hi) >= 1)
      lo = mid;
    else
      hi = mid;
  }
  if (eval(q, hi) == 0) return BigFloat(hi, prec);
  const int s_hi = sgn(eval(q, hi));
  mpq_class width;
  mpq_class tol(1);
  mpz_class two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(prec + 2));
  tol = mpq_class(std::max(mpq_class(1), mpq_class(abs(hi)))) / mpq_class(two_pow);
  while (hi - lo > tol) {
    const mpq_class mid = (lo + hi) / 2;
    const int s = sgn(eval(q, mid));
    if (s == 0) return BigFloat(mid, prec);
    if (s == s_hi)
      hi = mid;
    else
      lo = mid;
  }
  return BigFloat(mpq_class((lo + hi) / 2), prec);
}

namespace {

using Pattern = std::vector<std::vector<char>>;

Pattern bool_multiply(const Pattern& a, const Pattern& b) {
  const std::size_t n = a.size();
  Pattern c(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k])
        for (std::size_t j = 0; j < n; ++j) c[i][j] |= b[k][j];
  return c;
}

bool all_positive(const Pattern& p) {
  for (const auto& row : p)
    for (char v : row)
      if (!v) return false;
  return true;
}

using FloatMatrix = std::vector<std::vector<BigFloat>>;

FloatMatrix fmul(const FloatMatrix& a, const FloatMatrix& b, Precision prec) {
  const std::size_t n = a.size();
  FloatMatrix c(n, std::vector<BigFloat>(n, BigFloat(0L, prec)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

}  // namespace

PerronFrobenius perron_frobenius(const IntMatrix& m, Precision prec) {
  const std::size_t n = check_square(m);
  Pattern pattern(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (m[i][j] < 0) throw DomainError("perron_frobenius: matrix has a negative entry");
      pattern[i][j] = m[i][j] > 0;
    }
  bool primitive = false;
  Pattern power = pattern;
  for (std::size_t k = 1; k <= 2 * n * n && !primitive; ++k) {
    primitive = all_positive(power);
    power = bool_multiply(power, pattern);
  }
  // An irreducible but periodic matrix becomes primitive after adding I,
  // which moves every eigenvalue by 1 and leaves rho + 1 strictly dominant.
  long shift = 0;
  if (!primitive) {
    Pattern shifted = pattern;
    for (std::size_t i = 0; i < n; ++i) shifted[i][i] = 1;
    Pattern p = shifted;
    for (std::size_t k = 1; k + 1 < n; ++k) p = bool_multiply(p, shifted);
    if (!all_positive(p)) throw DomainError("perron_frobenius: matrix is reducible (not primitive)");
    shift = 1;
  }
  const Precision work = prec + 64;
  FloatMatrix base(n, std::vector<BigFloat>(n, BigFloat(0L, work)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) base[i][j] = BigFloat(mpz_class(m[i][j] + (i == j ? shift : 0)), work);

  PerronFrobenius out;
  FloatMatrix A = base;
  const BigFloat tol = BigFloat(1L, work).ldexp(-static_cast<long>(prec) + 8);
  for (std::size_t squarings = 0;; ++squarings) {
    if (squarings > 200) throw PrecisionError("perron_frobenius: power iteration did not converge");
    std::vector<BigFloat> v(n, BigFloat(0L, work));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) v[i] += A[i][j];
    bool positive = std::all_of(v.begin(), v.end(), [](const BigFloat& x) { return x.sign() > 0; });
    if (positive) {
      BigFloat lo(0L, work), hi(0L, work);
      for (std::size_t i = 0; i < n; ++i) {
        BigFloat w(0L, work);
        for (std::size_t j = 0; j < n; ++j) w += base[i][j] * v[j];
        const BigFloat r = w / v[i];
        if (i == 0 || r < lo) lo = r;
        if (i == 0 || r > hi) hi = r;
      }
      const BigFloat scale = hi > BigFloat(1L, work) ? hi : BigFloat(1L, work);
      if (hi - lo < tol * scale) {
        const BigFloat s(shift, work);
        out.lower = BigFloat(lo - s, prec);
        out.upper = BigFloat(hi - s, prec);
        out.value = BigFloat((lo + hi).ldexp(-1) - s, prec);
        out.squarings = squarings;
        break;
      }
    }
    A = fmul(A, A, work);
    BigFloat biggest(0L, work);
    for (const auto& row : A)
      for (const auto& x : row)
        if (x > biggest) biggest = x;
    for (auto& row : A)
      for (auto& x : row) x = x / biggest;
  }
  out.bisection = largest_real_root(charpoly(m), prec);
  const BigFloat gap = (out.value - out.bisection).abs();
  const BigFloat scale = out.value > BigFloat(1L, prec) ? out.value : BigFloat(1L, prec);
  if (gap > scale.ldexp(-static_cast<long>(prec) + 12))
    throw ContractViolation("perron_frobenius: power iteration and root isolation disagree");
  return out;
}

bool is_squarefree(const mpz_class& n) {
  if (n < 1) return false;
  static const mpz_class kLimit("1000000000000000000");
  if (n > kLimit) throw ResourceError("is_squarefree: argument above 10^18");
  mpz_class r = n;
  for (unsigned long p = 2; mpz_class(p) * p * p <= r; ++p) {
    if (mpz_divisible_ui_p(r.get_mpz_t(), p * p)) return false;
    while (mpz_divisible_ui_p(r.get_mpz_t(), p)) r /= p;
  }
  // At most two prime factors remain.
  return r == 1 || !mpz_perfect_square_p(r.get_mpz_t());
}

std::optional<PellSolution> pell_brute_force(const mpz_class& D, const mpz_class& cap) {
  for (mpz_class b = 1; b <= cap; ++b) {
    const mpz_class Db2 = D * b * b;
    for (int norm : {-4, 4}) {
      const mpz_class t = Db2 + norm;
      if (t <= 0 || !mpz_perfect_square_p(t.get_mpz_t())) continue;
      mpz_class a;
      mpz_sqrt(a.get_mpz_t(), t.get_mpz_t());
      PellSolution s;
      s.D = D;
      s.a = a;
      s.b = b;
      s.norm = norm;
      s.epsilon = (QuadraticSurd(a) + QuadraticSurd(b) * QuadraticSurd::sqrt(D)) / QuadraticSurd(2);
      s.verified_below = b;
      return s;
    }
  }
  return std::nullopt;
}

PellSolution pell_fundamental(const mpz_class& D, const mpz_class& brute_force_cap) {
  if (D < 2 || !is_squarefree(D)) throw DomainError("pell_fundamental: D must be squarefree and >= 2");
  const bool one_mod_four = D % 4 == 1;
  // omega generates the maximal order; units are p - q * conj(omega) for
  // convergents p/q of omega with norm +-1.
  const QuadraticSurd omega = one_mod_four ? (QuadraticSurd(1) + QuadraticSurd::sqrt(D)) / QuadraticSurd(2)
                                           : QuadraticSurd::sqrt(D);
  const nc_torus::ContinuedFraction cf = nc_torus::cf_expand(omega);
  mpz_class p1 = 1, q1 = 0, p2 = 0, q2 = 1;
  for (std::size_t k = 0; k < 4 * (cf.preperiod.size() + cf.period.size()) + 4; ++k) {
    const mpz_class& t = cf.term(k);
    const mpz_class p = t * p1 + p2, q = t * q1 + q2;
    p2 = p1;
    q2 = q1;
    p1 = p;
    q1 = q;
    const mpz_class N = one_mod_four ? mpz_class(p * p - p * q + q * q * (1 - D) / 4) : mpz_class(p * p - D * q * q);
    if (N != 1 && N != -1) continue;
    PellSolution s;
    s.D = D;
    s.a = one_mod_four ? mpz_class(2 * p - q) : mpz_class(2 * p);
    s.b = one_mod_four ? q : mpz_class(2 * q);
    s.norm = N > 0 ? 4 : -4;
    s.epsilon = (QuadraticSurd(s.a) + QuadraticSurd(s.b) * QuadraticSurd::sqrt(D)) / QuadraticSurd(2);
    const mpz_class limit = std::min(mpz_class(s.b - 1), brute_force_cap);
    if (auto smaller = pell_brute_force(D, limit))
      throw ContractViolation("pell_fundamental: brute force found a smaller solution with b = " + smaller->b.get_str());
    s.verified_below = limit + 1;
    return s;
  }
  throw ContractViolation("pell_fundamental: no unit among the convergents of one period");
}

namespace {

Precision work_bits(long digits) {
  if (digits < 1) throw DomainError("digits must be positive");
  if (digits > 20000) throw ResourceError("more than 20000 digits requested");
  return bignum::bits_for_digits(digits) + 32;
}

}  // namespace

BigFloat surd_value(const QuadraticSurd& x, long digits) {
  const mpz_class whole = abs(x.floor()) + 1;
  const Precision extra = static_cast<Precision>(mpz_sizeinbase(whole.get_mpz_t(), 2));
  return x.to_bigfloat(work_bits(digits) + 64 + extra);
}

BigComplex generator_complex(const BigFloat& alpha, const BigFloat& epsilon, long digits) {
  const Precision prec = work_bits(digits);
  if (!(epsilon > BigFloat(1L, epsilon.precision()))) throw DomainError("generator: epsilon must exceed 1");
  const BigFloat log_eps = bignum::log(BigFloat(epsilon, prec + 32), prec + 32);
  return bignum::exp_2pi_i(alpha, log_eps, prec);
}

BigComplex generator_complex(const QuadraticSurd& alpha, const QuadraticSurd& epsilon, long digits) {
  if (epsilon <= QuadraticSurd(1)) throw DomainError("generator: epsilon must exceed 1");
  return generator_complex(surd_value(alpha, digits), surd_value(epsilon, digits), digits);
}

BigComplex generator_complex_exp_form(const BigFloat& alpha, const BigFloat& epsilon, long digits) {
  const Precision prec = work_bits(digits);
  if (!(epsilon > BigFloat(1L, epsilon.precision()))) throw DomainError("generator: epsilon must exceed 1");
  const Precision work = prec + 64;
  const BigFloat loglog = bignum::log(bignum::log(BigFloat(epsilon, work), work), work);
  const BigFloat angle = bignum::frac(BigFloat(alpha, std::max(work, alpha.precision()))) * bignum::pi(work).ldexp(1);
  const BigComplex z = bignum::exp(BigComplex(loglog, BigFloat(angle, work)), work);
  return {BigFloat(z.re(), prec), BigFloat(z.im(), prec)};
}

BigFloat generator_real(const BigFloat& alpha, const BigFloat& epsilon, long digits) {
  const Precision prec = work_bits(digits);
  if (!(epsilon > BigFloat(1L, epsilon.precision()))) throw DomainError("generator: epsilon must exceed 1");
  const Precision work = prec + 64;
  const BigFloat angle = bignum::frac(BigFloat(alpha, std::max(work, alpha.precision()))) * bignum::pi(work).ldexp(1);
  return BigFloat(bignum::cos(angle, work) * bignum::log(BigFloat(epsilon, work), work), prec);
}

BigFloat generator_real(const QuadraticSurd& alpha, const QuadraticSurd& epsilon, long digits) {
  if (epsilon <= QuadraticSurd(1)) throw DomainError("generator: epsilon must exceed 1");
  return generator_real(surd_value(alpha, digits), surd_value(epsilon, digits), digits);
}

BigComplex j_invariant(const BigComplex& tau_in, long digits) {
  const Precision base = work_bits(digits);
  if (tau_in.im().sign() <= 0) throw DomainError("j_invariant: Im(tau) must be positive");
  const Precision in_prec = std::max(tau_in.precision(), base);
  BigFloat x(tau_in.re(), in_prec), y(tau_in.im(), in_prec);
  const BigFloat one(1L, in_prec);
  for (int guard = 0;; ++guard) {
    if (guard > 10000) throw PrecisionError("j_invariant: reduction to the fundamental domain did not terminate");
    x = x - BigFloat(x.round_to_integer(), in_prec);
    const BigFloat r2 = x * x + y * y;
    if (!(r2 < one)) break;
    x = -x / r2;
    y = y / r2;
  }
  // log2 |j| is about 2 pi y log2(e).
  const double yd = y.to_double();
  const Precision prec = base + static_cast<Precision>(std::ceil(9.07 * yd)) + 64;
  const std::size_t terms = static_cast<std::size_t>(std::ceil((digits + 20) * std::log(10.0) / (2 * M_PI * yd))) + 2;
  const BigFloat two_pi = bignum::pi(prec).ldexp(1);
  const BigComplex q = bignum::exp_2pi_i(BigFloat(x, prec), bignum::exp(-(two_pi * BigFloat(y, prec)), prec), prec);

  BigComplex e4_sum{BigFloat(0L, prec), BigFloat(0L, prec)};
  BigComplex product{BigFloat(1L, prec), BigFloat(0L, prec)};
  BigComplex qn = q;
  const BigComplex unit{BigFloat(1L, prec), BigFloat(0L, prec)};
  for (std::size_t n = 1; n <= terms; ++n) {
    mpz_class sigma3 = 0;
    for (std::size_t d = 1; d <= n; ++d)
      if (n % d == 0) sigma3 += mpz_class(d) * d * d;
    e4_sum += qn.scaled(BigFloat(sigma3, prec));
    product *= unit - qn;
    qn *= q;
  }
  const BigComplex e4 = unit + e4_sum.scaled(BigFloat(240L, prec));
  BigComplex p24 = product;
  for (int i = 0; i < 3; ++i) p24 *= p24;  // ^8
  p24 = p24 * p24 * p24;                   // ^24
  const BigComplex delta = q * p24;
  const BigComplex j = e4 * e4 * e4 / delta;
  return {BigFloat(j.re(), base), BigFloat(j.im(), base)};
}

std::vector<QuadraticForm> reduced_forms(const mpz_class& disc) {
  if (disc >= 0) throw DomainError("reduced_forms: discriminant must be negative");
  const mpz_class r = ((disc % 4) + 4) % 4;
  if (r != 0 && r != 1) throw DomainError("reduced_forms: discriminant must be 0 or 1 mod 4");
  std::vector<QuadraticForm> out;
  const mpz_class D = -disc;
  for (mpz_class a = 1; 3 * a * a <= D; ++a) {
    for (mpz_class b = -a + 1; b <= a; ++b) {
      if (((b - disc) % 2) != 0) continue;
      const mpz_class num = b * b - disc;
      if (!mpz_divisible_p(num.get_mpz_t(), mpz_class(4 * a).get_mpz_t())) continue;
      const mpz_class c = num / (4 * a);
      if (c < a) continue;
      if (b < 0 && a == c) continue;
      if (gcd(gcd(a, b), c) != 1) continue;
      out.push_back({a, b, c});
    }
  }
  return out;
}

ClassPolynomial hilbert_class_poly(const mpz_class& disc, long digits) {
  ClassPolynomial out;
  out.disc = disc;
  out.forms = reduced_forms(disc);
  const double root_d = std::sqrt(std::abs(disc.get_d()));
  double coeff_digits = 0;
  for (const auto& f : out.forms) coeff_digits += M_PI * root_d / f.a.get_d() / std::log(10.0) + 1.0;
  const long work_digits = digits + static_cast<long>(std::ceil(coeff_digits)) + 10;
  const Precision prec = work_bits(work_digits);
  const BigFloat sqrt_d = bignum::sqrt(BigFloat(mpz_class(-disc), prec + 64));
  std::vector<BigComplex> poly{BigComplex(BigFloat(1L, prec))};
  for (const auto& f : out.forms) {
    const BigFloat two_a(mpz_class(2 * f.a), prec + 64);
    const BigComplex tau(BigFloat(mpz_class(-f.b), prec + 64) / two_a, sqrt_d / two_a);
    const BigComplex j = j_invariant(tau, work_digits);
    // poly *= (x - j), fixed order
    std::vector<BigComplex> next(poly.size() + 1, BigComplex(BigFloat(0L, prec)));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= poly[i] * j;
    }
    poly = std::move(next);
  }
  out.residual = BigFloat(0L, prec);
  for (const auto& c : poly) {
    const mpz_class k = c.re().round_to_integer();
    out.coefficients.push_back(k);
    const BigFloat err = std::max((c.re() - BigFloat(k, prec)).abs(), c.im().abs());
    if (err > out.residual) out.residual = err;
  }
  const BigFloat gate = BigFloat::parse("1e-" + std::to_string(digits / 2), prec);
  if (!(out.residual < gate))
    throw PrecisionError("hilbert_class_poly: coefficients not integral within 10^-" + std::to_string(digits / 2) +
                         " (residual " + out.residual.to_string(6) + "); retry with more digits");
  return out;
}

mpz_class discriminant_for(const mpz_class& D, DiscConvention convention) {
  if (D < 1) throw DomainError("discriminant_for: D must be positive");
  if (convention == DiscConvention::kFourD) return -4 * D;
  return D % 4 == 3 ? mpz_class(-D) : mpz_class(-4 * D);
}

std::string to_string(DiscConvention convention) { return convention == DiscConvention::kFourD ? "4D" : "D"; }

GeneratorReport corollary12_experiment(const mpz_class& D, long digits, std::size_t max_degree,
                                       const mpz_class& height_bound, DiscConvention convention) {
  if (D < 2 || !is_squarefree(D)) throw DomainError("corollary12: D must be squarefree and >= 2");
  GeneratorReport r;
  r.D = D;
  r.digits = digits;
  r.max_degree = max_degree;
  r.height_bound = height_bound;
  r.convention = convention;
  r.alpha = QuadraticSurd::sqrt(D);
  r.pell = pell_fundamental(D);
  const Precision prec = work_bits(digits);
  r.log_epsilon = bignum::log(surd_value(r.pell.epsilon, digits), prec);
  r.beta = generator_complex(r.alpha, r.pell.epsilon, digits);
  r.modulus_error = (r.beta.abs() - BigFloat(r.log_epsilon, r.beta.precision())).abs();
  r.recognition = lattice::recognize_min_poly(r.beta, max_degree, height_bound, digits);
  r.class_polynomial = hilbert_class_poly(discriminant_for(D, convention), std::max(40L, digits / 2));
  if (r.recognition.polynomial) {
    const std::size_t deg = lattice::degree(*r.recognition.polynomial);
    const std::size_t h = r.class_polynomial.forms.size();
    r.compatible = deg == h || deg == 2 * h;
  }
  r.pf_epsilon = perron_frobenius(companion_matrix({D, 0}).entries, prec).value;
  return r;
}

std::string report_to_json(const GeneratorReport& r) {
  using nlohmann::ordered_json;
  const int shown = static_cast<int>(r.digits);
  auto num = [&](const BigFloat& x) { return x.to_string(shown); };
  auto small = [](const BigFloat& x) { return x.to_string(6); };
  ordered_json j;
  j["experiment"] = "corollary12";
  j["config"] = {{"D", r.D.get_str()},
                 {"digits", r.digits},
                 {"max_degree", r.max_degree},
                 {"height_bound", r.height_bound.get_str()},
                 {"disc_convention", to_string(r.convention)}};
  j["alpha"] = nc_torus::to_string(r.alpha);
  j["pell"] = {{"a", r.pell.a.get_str()},
               {"b", r.pell.b.get_str()},
               {"norm", r.pell.norm},
               {"epsilon", nc_torus::to_string(r.pell.epsilon)},
               {"verified_below_b", r.pell.verified_below.get_str()}};
  j["log_epsilon"] = num(r.log_epsilon);
  j["beta"] = {{"re", num(r.beta.re())}, {"im", num(r.beta.im())}};
  const BigFloat modulus_gate = BigFloat::parse("1e-" + std::to_string(r.digits - 10), 64);
  j["modulus_check"] = {{"abs_beta_minus_log_epsilon", small(r.modulus_error)},
                        {"gate", "1e-" + std::to_string(r.digits - 10)},
                        {"pass", r.modulus_error < modulus_gate}};
  ordered_json rec;
  rec["verdict"] = r.recognition.polynomial ? "recognized" : "unrecognized";
  rec["polynomial"] = r.recognition.polynomial ? ordered_json(lattice::format_poly(*r.recognition.polynomial)) : ordered_json();
  rec["degree"] = r.recognition.polynomial ? ordered_json(lattice::degree(*r.recognition.polynomial)) : ordered_json();
  rec["residual"] = small(r.recognition.residual);
  rec["height"] = r.recognition.height.get_str();
  rec["note"] = r.recognition.polynomial
                    ? "residual and height of the returned polynomial"
                    : "residual and height of the closest rejected lattice candidate (rejected by height or residual)";
  rec["residual_gate"] = "1e-" + std::to_string(r.digits / 2);
  rec["stable_under_rescaling"] = r.recognition.stable;
  rec["candidates_passing_gate"] = r.recognition.candidates;
  j["recognition"] = rec;
  const auto& cp = r.class_polynomial;
  ordered_json forms = ordered_json::array();
  for (const auto& f : cp.forms) forms.push_back({f.a.get_str(), f.b.get_str(), f.c.get_str()});
  j["class_polynomial"] = {{"disc", cp.disc.get_str()},
                           {"class_number", cp.forms.size()},
                           {"forms", forms},
                           {"polynomial", lattice::format_poly(cp.coefficients)},
                           {"residual", small(cp.residual)}};
  j["compatibility"] = {{"rule", "recognized degree in {h, 2h}"},
                        {"compatible", r.compatible ? ordered_json(*r.compatible) : ordered_json()}};
  j["epsilon_discrepancy"] = {
      {"pell_unit", nc_torus::to_string(r.pell.epsilon)},
      {"companion_matrix", {{"0", r.D.get_str()}, {"1", "0"}}},
      {"companion_det", mpz_class(-r.D).get_str()},
      {"companion_in_GL2Z", false},
      {"companion_pf_eigenvalue", num(r.pf_epsilon)},
      {"note",
       "the companion of x^2 - D is non-negative but has determinant -D, so the GL_m(Z) Perron-Frobenius "
       "route cannot produce a unit; the report uses the Pell fundamental unit instead"}};
  j["claim_asserted"] = false;
  return j.dump(2);
}

}  // namespace ncarith::class_field

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

#include "ncarith/nc_torus.hpp"

#include <cctype>
#include <map>
#include <tuple>

#include "ncarith/errors.hpp"

namespace ncarith::nc_torus {

namespace {

// D = f^2 d with d squarefree. Trial division runs to the cube root of the
// unfactored part (then at most two primes remain) or to 10^6, after which
// only a perfect-square cofactor can be certified.
std::pair<mpz_class, mpz_class> split_square(mpz_class D) {
  constexpr unsigned long kTrialLimit = 1000000;
  mpz_class f = 1, d = 1;
  unsigned long p = 2;
  for (; p <= kTrialLimit && mpz_class(p) * p * p <= D; p += (p == 2 ? 1 : 2)) {
    const mpz_class pp = mpz_class(p) * p;
    while (mpz_divisible_p(D.get_mpz_t(), pp.get_mpz_t())) {
      D /= pp;
      f *= p;
    }
    if (mpz_divisible_ui_p(D.get_mpz_t(), p)) {
      D /= p;
      d *= p;
    }
  }
  if (mpz_perfect_square_p(D.get_mpz_t())) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), D.get_mpz_t());
    f *= r;
  } else if (p > kTrialLimit && mpz_class(p) * p * p <= D) {
    throw ResourceError("cannot certify the squarefree part of the radicand " + D.get_str());
  } else {
    d *= D;
  }
  return {f, d};
}

mpz_class common_radicand(const QuadraticSurd& x, const QuadraticSurd& y) {
  if (x.is_rational()) return y.d();
  if (y.is_rational() || x.d() == y.d()) return x.d();
  throw DomainError("surds over different quadratic fields: sqrt(" + x.d().get_str() + ") and sqrt(" +
                    y.d().get_str() + ")");
}

mpz_class floor_div(const mpz_class& n, const mpz_class& d) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

}  // namespace

QuadraticSurd::QuadraticSurd(const mpz_class& n) : a_(n), b_(0), d_(1), c_(1) {}

QuadraticSurd::QuadraticSurd(const mpq_class& r) : a_(r.get_num()), b_(0), d_(1), c_(r.get_den()) { canonicalize(); }

QuadraticSurd::QuadraticSurd(mpz_class a, mpz_class b, mpz_class d, mpz_class c)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)), c_(std::move(c)) {
  canonicalize();
}

void QuadraticSurd::canonicalize() {
  if (c_ == 0) throw DomainError("surd with zero denominator");
  if (b_ == 0) d_ = 1;
  if (c_ < 0) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
  }
  mpz_class g = gcd(gcd(a_, b_), c_);
  if (g > 1) {
    a_ /= g;
    b_ /= g;
    c_ /= g;
  }
}

QuadraticSurd QuadraticSurd::from_parts(const mpz_class& P, int s, const mpz_class& D, const mpz_class& Q) {
  if (s != 1 && s != -1) throw DomainError("surd sign must be +1 or -1");
  if (D < 0) throw DomainError("surd radicand must be non-negative");
  if (Q == 0) throw DomainError("surd with zero denominator");
  if (D == 0) return QuadraticSurd(P, 0, 1, Q);
  auto [f, d] = split_square(D);
  if (d == 1) return QuadraticSurd(P + s * f, 0, 1, Q);
  return QuadraticSurd(P, s * f, d, Q);
}

mpq_class QuadraticSurd::to_rational() const {
  if (!is_rational()) throw DomainError("surd is irrational");
  mpq_class r(a_, c_);
  r.canonicalize();
  return r;
}

QuadraticSurd::NormalForm QuadraticSurd::normal_form() const {
  const mpz_class disc = b_ * b_ * d_ - a_ * a_;
  const mpz_class k = c_ / gcd(c_, disc);
  return {a_ * k, b_ < 0 ? -1 : 1, b_ * b_ * d_ * k * k, c_ * k};
}

int QuadraticSurd::sign() const {
  const int sa = sgn(a_), sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: the larger of a^2 and b^2 d wins.
  return cmp(a_ * a_, b_ * b_ * d_) > 0 ? sa : sb;
}

mpz_class QuadraticSurd::floor() const {
  if (is_rational()) return floor_div(a_, c_);
  const mpz_class N = b_ * b_ * d_;
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), N.get_mpz_t());
  // sqrt(N) is irrational, so it lies strictly between r and r + 1.
  return b_ > 0 ? floor_div(a_ + r, c_) : floor_div(a_ - r - 1, c_);
}

QuadraticSurd QuadraticSurd::conjugate() const { return QuadraticSurd(a_, -b_, d_, c_); }

bignum::BigFloat QuadraticSurd::to_bigfloat(bignum::Precision prec) const {
  const bignum::Precision work = prec + 32;
  bignum::BigFloat num(a_, work);
  if (b_ != 0) num += bignum::BigFloat(b_, work) * bignum::sqrt(bignum::BigFloat(d_, work));
  return bignum::BigFloat(num / bignum::BigFloat(c_, work), prec);
}

QuadraticSurd QuadraticSurd::operator-() const { return QuadraticSurd(-a_, -b_, d_, c_); }

QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y) {
  const mpz_class d = common_radicand(x, y);
  return QuadraticSurd(x.a_ * y.c_ + y.a_ * x.c_, x.b_ * y.c_ + y.b_ * x.c_, d, x.c_ * y.c_);
}

QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y) { return x + (-y); }

QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y) {
  const mpz_class d = common_radicand(x, y);
  return QuadraticSurd(x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, d, x.c_ * y.c_);
}

QuadraticSurd operator/(const QuadraticSurd& x, const QuadraticSurd& y) {
  if (y.sign() == 0) throw DomainError("surd division by zero");
  const mpz_class norm = y.a_ * y.a_ - y.b_ * y.b_ * y.d_;
  const QuadraticSurd inv(y.c_ * y.a_, -y.c_ * y.b_, y.d_, norm);
  return x * inv;
}

std::strong_ordering operator<=>(const QuadraticSurd& x, const QuadraticSurd& y) {
  const int s = (x - y).sign();
  return s < 0 ? std::strong_ordering::less : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string to_string(const QuadraticSurd& x) {
  if (x.is_rational()) return x.to_rational().get_str();
  const auto nf = x.normal_form();
  return "(" + nf.P.get_str() + (nf.s > 0 ? "+" : "-") + "sqrt(" + nf.D.get_str() + "))/" + nf.Q.get_str();
}

namespace {

class SurdParser {
 public:
  explicit SurdParser(std::string_view s) : s_(s) {}

  QuadraticSurd parse() {
    QuadraticSurd v = expr();
    if (peek() != '\0') fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("surd: " + what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  char peek() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  void expect(char ch) {
    if (peek() != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }
  mpz_class integer() {
    peek();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }
  QuadraticSurd expr() {
    QuadraticSurd v = term();
    for (char ch = peek(); ch == '+' || ch == '-'; ch = peek()) {
      ++pos_;
      v = ch == '+' ? v + term() : v - term();
    }
    return v;
  }
  QuadraticSurd term() {
    QuadraticSurd v = factor();
    for (char ch = peek(); ch == '*' || ch == '/'; ch = peek()) {
      ++pos_;
      const QuadraticSurd rhs = factor();
      if (ch == '/' && rhs.sign() == 0) fail("division by zero");
      v = ch == '*' ? v * rhs : v / rhs;
    }
    return v;
  }
  QuadraticSurd factor() {
    const char ch = peek();
    if (ch == '-') {
      ++pos_;
      return -factor();
    }
    if (ch == '+') {
      ++pos_;
      return factor();
    }
    if (ch == '(') {
      ++pos_;
      QuadraticSurd v = expr();
      expect(')');
      return v;
    }
    if (s_.substr(pos_, 4) == "sqrt") {
      pos_ += 4;
      expect('(');
      const mpz_class D = integer();
      expect(')');
      return QuadraticSurd::sqrt(D);
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) return QuadraticSurd(integer());
    fail("expected a number, sqrt(...) or '('");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

QuadraticSurd QuadraticSurd::parse(std::string_view text) {
  try {
    return SurdParser(text).parse();
  } catch (const ParseError&) {
    throw;
  } catch (const DomainError& e) {
    throw ParseError(std::string("surd: ") + e.what());
  }
}

std::optional<std::size_t> ContinuedFraction::length() const {
  if (!period.empty()) return std::nullopt;
  return preperiod.size();
}

const mpz_class& ContinuedFraction::term(std::size_t k) const {
  if (k < preperiod.size()) return preperiod[k];
  if (period.empty())
    throw DomainError("continued fraction has only " + std::to_string(preperiod.size()) + " known terms");
  return period[(k - preperiod.size()) % period.size()];
}

std::string to_string(const ContinuedFraction& cf) {
  std::string out = "[" + (cf.preperiod.empty() ? std::string("?") : cf.preperiod[0].get_str());
  std::vector<std::string> items;
  for (std::size_t i = 1; i < cf.preperiod.size(); ++i) items.push_back(cf.preperiod[i].get_str());
  if (!cf.period.empty()) {
    std::string p = "(period: ";
    for (std::size_t i = 0; i < cf.period.size(); ++i) p += (i ? ", " : "") + cf.period[i].get_str();
    items.push_back(p + ")");
  }
  if (cf.truncated) items.push_back("...");
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "; ") + items[i];
  return out + "]";
}

ContinuedFraction cf_expand(const QuadraticSurd& theta, std::size_t max_terms) {
  if (max_terms < 1) throw DomainError("cf_expand: max_terms must be at least 1");
  ContinuedFraction cf;
  std::vector<mpz_class> terms;
  std::map<std::tuple<mpz_class, mpz_class, mpz_class>, std::size_t> seen;
  QuadraticSurd x = theta;
  while (true) {
    if (!x.is_rational()) {
      auto [it, fresh] = seen.try_emplace({x.a(), x.b(), x.c()}, terms.size());
      if (!fresh) {
        std::size_t j = it->second;
        if (j == 0) {
          // Purely periodic: keep a_0 visible and rotate the period.
          cf.preperiod = {terms[0]};
          cf.period.assign(terms.begin() + 1, terms.end());
          cf.period.push_back(terms[0]);
        } else {
          cf.preperiod.assign(terms.begin(), terms.begin() + static_cast<std::ptrdiff_t>(j));
          cf.period.assign(terms.begin() + static_cast<std::ptrdiff_t>(j), terms.end());
        }
        return cf;
      }
    }
    if (terms.size() == max_terms) {
      cf.preperiod = std::move(terms);
      cf.truncated = true;
      return cf;
    }
    const mpz_class t = x.floor();
    terms.push_back(t);
    const QuadraticSurd rest = x - QuadraticSurd(t);
    if (rest.sign() == 0) {
      cf.preperiod = std::move(terms);
      return cf;
    }
    x = QuadraticSurd(1) / rest;
  }
}

mpz_class det(const Matrix2& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
  Matrix2 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
  return out;
}

QuadraticSurd mobius(const Matrix2& m, const QuadraticSurd& theta) {
  const QuadraticSurd den = QuadraticSurd(m[1][0]) * theta + QuadraticSurd(m[1][1]);
  if (den.sign() == 0) throw DomainError("Mobius image is infinite");
  return (QuadraticSurd(m[0][0]) * theta + QuadraticSurd(m[0][1])) / den;
}

namespace {

Matrix2 quotient_matrix(const mpz_class& a) { return Matrix2{{{a, 1}, {1, 0}}}; }

Matrix2 identity() { return Matrix2{{{1, 0}, {0, 1}}}; }

// Inverse of a unimodular matrix.
Matrix2 unimodular_inverse(const Matrix2& m) {
  const mpz_class d = det(m);
  if (d != 1 && d != -1) throw DomainError("matrix is not in GL_2(Z)");
  return Matrix2{{{d * m[1][1], -d * m[0][1]}, {-d * m[1][0], d * m[0][0]}}};
}

}  // namespace

QuadraticSurd cf_value(const ContinuedFraction& cf) {
  if (cf.truncated) throw DomainError("cf_value: expansion is truncated");
  if (cf.preperiod.empty()) throw DomainError("cf_value: empty expansion");
  Matrix2 pre = identity();
  for (const auto& a : cf.preperiod) pre = pre * quotient_matrix(a);
  if (cf.period.empty()) return QuadraticSurd(mpq_class(pre[0][0], pre[1][0]));
  // The tail y = [p_1; ..., p_k, y] solves C y^2 + (D - A) y - B = 0.
  Matrix2 s = identity();
  for (const auto& a : cf.period) s = s * quotient_matrix(a);
  const mpz_class &A = s[0][0], &B = s[0][1], &C = s[1][0], &D = s[1][1];
  const QuadraticSurd y = QuadraticSurd::from_parts(A - D, 1, (D - A) * (D - A) + 4 * B * C, 2 * C);
  return mobius(pre, y);
}

std::vector<mpq_class> convergents(const ContinuedFraction& cf, std::size_t count) {
  std::vector<mpq_class> out;
  mpz_class p1 = 1, q1 = 0, p2 = 0, q2 = 1;
  for (std::size_t k = 0; k < count; ++k) {
    if (cf.length() && k >= *cf.length()) break;
    const mpz_class& a = cf.term(k);
    mpz_class p = a * p1 + p2, q = a * q1 + q2;
    p2 = p1;
    q2 = q1;
    p1 = p;
    q1 = q;
    out.emplace_back(p, q);
    out.back().canonicalize();
  }
  return out;
}

BratteliData effros_shen(const ContinuedFraction& cf, std::size_t depth) {
  if (cf.length() && *cf.length() < depth + 1)
    throw DomainError("effros_shen: expansion has " + std::to_string(*cf.length() - 1) +
                      " terms after a_0, depth " + std::to_string(depth) + " requested");
  BratteliData out;
  for (std::size_t k = 1; k <= depth; ++k) out.matrices.push_back(quotient_matrix(cf.term(k)));
  out.stationary = true;
  for (const auto& m : out.matrices)
    if (m != out.matrices.front()) out.stationary = false;
  return out;
}

bool is_positive(const mpz_class& m, const mpz_class& n, const QuadraticSurd& theta) {
  return (QuadraticSurd(m) + QuadraticSurd(n) * theta).sign() > 0;
}

namespace {

// [[p, x], [q, y]] with determinant 1, sending infinity to p/q.
Matrix2 rational_frame(const mpq_class& r) {
  mpz_class g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return Matrix2{{{r.get_num(), -t}, {r.get_den(), s}}};
}

void verify(const Matrix2& w, const QuadraticSurd& theta, const QuadraticSurd& theta_prime) {
  if (mobius(w, theta) != theta_prime) throw ContractViolation("Morita witness does not map theta to theta'");
}

}  // namespace

MoritaResult morita_equivalent(const QuadraticSurd& theta, const QuadraticSurd& theta_prime) {
  MoritaResult out;
  if (theta.is_rational() != theta_prime.is_rational()) return out;
  if (theta.is_rational()) {
    const Matrix2 w = rational_frame(theta_prime.to_rational()) * unimodular_inverse(rational_frame(theta.to_rational()));
    verify(w, theta, theta_prime);
    out.equivalent = out.sl2_equivalent = true;
    out.witness = out.sl2_witness = w;
    return out;
  }
  if (theta.d() != theta_prime.d()) return out;
  const ContinuedFraction cf = cf_expand(theta), cfp = cf_expand(theta_prime);
  if (cf.truncated || cfp.truncated) throw ResourceError("continued fraction period not found within the term cap");
  if (cf.period.size() != cfp.period.size()) return out;

  // Complete quotients x_i with theta = M_i . x_i, for the periodic indices.
  auto frames = [](const QuadraticSurd& t, const ContinuedFraction& c) {
    std::vector<std::pair<QuadraticSurd, Matrix2>> v;
    QuadraticSurd x = t;
    Matrix2 m = identity();
    for (std::size_t i = 0; i < c.preperiod.size() + c.period.size(); ++i) {
      if (i >= c.preperiod.size()) v.emplace_back(x, m);
      const mpz_class& a = c.term(i);
      m = m * quotient_matrix(a);
      x = QuadraticSurd(1) / (x - QuadraticSurd(a));
    }
    return v;
  };
  const auto fa = frames(theta, cf), fb = frames(theta_prime, cfp);
  for (std::size_t i = 0; i < fa.size(); ++i)
    for (std::size_t j = 0; j < fb.size(); ++j) {
      if (fa[i].first != fb[j].first) continue;
      const Matrix2& Mi = fa[i].second;
      const Matrix2 w = fb[j].second * unimodular_inverse(Mi);
      verify(w, theta, theta_prime);
      out.equivalent = true;
      out.witness = w;
      if (det(w) == 1) {
        out.sl2_witness = w;
      } else if (cf.period.size() % 2 == 1) {
        // Compose with the stabilizer of theta coming from one period.
        Matrix2 s = identity();
        for (std::size_t k = 0; k < cf.period.size(); ++k) s = s * quotient_matrix(cf.term(cf.preperiod.size() + i + k));
        const Matrix2 w1 = w * Mi * s * unimodular_inverse(Mi);
        verify(w1, theta, theta_prime);
        out.sl2_witness = w1;
      }
      out.sl2_equivalent = out.sl2_witness.has_value();
      return out;
    }
  return out;
}

ConnesInvariant connes_invariant(const Matrix2& m, bignum::Precision prec) {
  const mpz_class d = det(m);
  if (d != 1 && d != -1) throw DomainError("connes_invariant: det must be +-1");
  const mpz_class t = m[0][0] + m[1][1];
  if (abs(t) <= 2) throw DomainError("connes_invariant: matrix is not hyperbolic (|trace| <= 2)");
  const QuadraticSurd lambda = QuadraticSurd::from_parts(abs(t), 1, t * t - 4 * d, 2);
  if (lambda <= QuadraticSurd(1)) throw ContractViolation("dominant eigenvalue is not > 1");
  return {lambda, bignum::log(lambda.to_bigfloat(prec + 32), prec)};
}

bignum::BigComplex rotation_scalar(const QuadraticSurd& theta, bignum::Precision prec) {
  return bignum::exp_2pi_i(theta.to_bigfloat(prec + 64), bignum::BigFloat(1, prec), prec);
}

}  // namespace ncarith::nc_torus

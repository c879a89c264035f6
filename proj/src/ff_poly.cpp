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

#include "ncarith/ff_poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "ncarith/errors.hpp"

namespace ncarith::ff {

namespace {

std::uint64_t modpow(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Coords chunk(const Coords& a, std::size_t i, std::size_t width) {
  return Coords(a.begin() + static_cast<std::ptrdiff_t>(i * width),
                a.begin() + static_cast<std::ptrdiff_t>((i + 1) * width));
}

void require_same(const FieldPtr& a, const FieldPtr& b) {
  if (!same_field(a, b)) throw DomainError("field mismatch");
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

long parse_long(const std::string& s) {
  if (s.empty()) throw ParseError("expected an integer");
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(s, &pos);
  } catch (const std::exception&) {
    throw ParseError("bad integer '" + s + "'");
  }
  if (pos != s.size()) throw ParseError("bad integer '" + s + "'");
  return v;
}

std::uint32_t reduce_mod(long v, std::uint32_t p) {
  long r = v % static_cast<long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

}  // namespace

// ---------------------------------------------------------------- Field

FieldPtr Field::prime(std::uint32_t p) {
  if (!is_prime_u64(p)) throw DomainError("characteristic " + std::to_string(p) + " is not prime");
  if (p > (1u << 31)) throw DomainError("characteristic too large");
  auto f = std::shared_ptr<Field>(new Field());
  f->p_ = p;
  f->order_ = p;
  return f;
}

FieldPtr Field::gf(std::uint32_t p, unsigned e) {
  if (e == 0) throw DomainError("extension degree must be positive");
  FieldPtr base = prime(p);
  if (e == 1) return base;
  return extension(base, least_irreducible(base, e));
}

FieldPtr Field::extension(const FieldPtr& base, const Poly& modulus) {
  require_same(base, modulus.field());
  if (!modulus.degree() || *modulus.degree() < 1) throw DomainError("extension modulus must be nonconstant");
  if (!modulus.is_monic()) throw DomainError("extension modulus must be monic");
  if (!is_irreducible(modulus)) throw DomainError("extension modulus is reducible");
  auto f = std::shared_ptr<Field>(new Field());
  f->p_ = base->p_;
  f->parent_ = base;
  f->modulus_ = modulus.coeffs();
  f->local_degree_ = *modulus.degree();
  f->degree_ = base->degree_ * f->local_degree_;
  mpz_pow_ui(f->order_.get_mpz_t(), base->order_.get_mpz_t(), f->local_degree_);
  f->standard_ = base->is_prime_field() &&
                 modulus.coeffs() == least_irreducible(base, static_cast<unsigned>(f->local_degree_)).coeffs();
  return f;
}

std::size_t Field::depth() const { return parent_ ? parent_->depth() + 1 : 0; }

Coords Field::one() const {
  Coords c(degree_, 0);
  c[0] = 1;
  return c;
}

Coords Field::from_int(long value) const {
  Coords c(degree_, 0);
  c[0] = reduce_mod(value, p_);
  return c;
}

bool Field::is_zero(const Coords& a) const {
  return std::all_of(a.begin(), a.end(), [](std::uint32_t v) { return v == 0; });
}

bool Field::is_one(const Coords& a) const {
  if (a.empty() || a[0] != 1) return false;
  return std::all_of(a.begin() + 1, a.end(), [](std::uint32_t v) { return v == 0; });
}

Coords Field::add(const Coords& a, const Coords& b) const {
  Coords c(degree_);
  for (std::size_t i = 0; i < degree_; ++i) {
    std::uint64_t s = static_cast<std::uint64_t>(a[i]) + b[i];
    c[i] = static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
  }
  return c;
}

Coords Field::sub(const Coords& a, const Coords& b) const {
  Coords c(degree_);
  for (std::size_t i = 0; i < degree_; ++i) {
    c[i] = a[i] >= b[i] ? a[i] - b[i] : static_cast<std::uint32_t>(static_cast<std::uint64_t>(a[i]) + p_ - b[i]);
  }
  return c;
}

Coords Field::neg(const Coords& a) const {
  Coords c(degree_);
  for (std::size_t i = 0; i < degree_; ++i) c[i] = a[i] == 0 ? 0 : p_ - a[i];
  return c;
}

Coords Field::scale_fp(const Coords& a, std::uint32_t s) const {
  Coords c(degree_);
  for (std::size_t i = 0; i < degree_; ++i) c[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(a[i]) * s % p_);
  return c;
}

Coords Field::mul(const Coords& a, const Coords& b) const {
  if (!parent_) return {static_cast<std::uint32_t>(static_cast<std::uint64_t>(a[0]) * b[0] % p_)};
  const std::size_t n = local_degree_;
  if (parent_->is_prime_field()) {
    // Fast path: polynomial arithmetic directly on residues mod p.
    std::vector<std::uint64_t> prod(2 * n - 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p_;
      }
    }
    for (std::size_t k = 2 * n - 1; k-- > n;) {
      const std::uint64_t c = prod[k];
      if (c == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        prod[k - n + j] = (prod[k - n + j] + (p_ - c) * modulus_[j][0]) % p_;
      }
    }
    Coords out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
    return out;
  }
  const Field& P = *parent_;
  const std::size_t w = P.degree_;
  std::vector<Coords> ac(n);
  std::vector<Coords> bc(n);
  for (std::size_t i = 0; i < n; ++i) {
    ac[i] = chunk(a, i, w);
    bc[i] = chunk(b, i, w);
  }
  std::vector<Coords> prod(2 * n - 1, P.zero());
  for (std::size_t i = 0; i < n; ++i) {
    if (P.is_zero(ac[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (P.is_zero(bc[j])) continue;
      prod[i + j] = P.add(prod[i + j], P.mul(ac[i], bc[j]));
    }
  }
  for (std::size_t k = 2 * n - 1; k-- > n;) {
    if (P.is_zero(prod[k])) continue;
    const Coords c = prod[k];
    for (std::size_t j = 0; j < n; ++j) {
      prod[k - n + j] = P.sub(prod[k - n + j], P.mul(c, modulus_[j]));
    }
  }
  Coords out;
  out.reserve(degree_);
  for (std::size_t i = 0; i < n; ++i) out.insert(out.end(), prod[i].begin(), prod[i].end());
  return out;
}

Coords Field::pow(const Coords& a, const mpz_class& e) const {
  if (e < 0) return pow(inv(a), -e);
  if (!parent_) {
    mpz_class r;
    mpz_class base = a[0];
    mpz_class mod = p_;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
    return {static_cast<std::uint32_t>(r.get_ui())};
  }
  Coords result = one();
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mul(result, result);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mul(result, a);
  }
  return result;
}

Coords Field::inv(const Coords& a) const {
  if (is_zero(a)) throw DomainError("inverse of zero");
  if (!parent_) return {static_cast<std::uint32_t>(modpow(a[0], p_ - 2, p_))};
  return pow(a, order_ - 2);
}

Coords Field::element(const mpz_class& index) const {
  Coords c(degree_, 0);
  mpz_class rest = index;
  for (std::size_t i = 0; i < degree_ && rest > 0; ++i) {
    c[i] = static_cast<std::uint32_t>(mpz_class(rest % p_).get_ui());
    rest /= p_;
  }
  return c;
}

mpz_class Field::index(const Coords& a) const {
  mpz_class v = 0;
  for (std::size_t i = degree_; i-- > 0;) v = v * p_ + a[i];
  return v;
}

Coords Field::random(std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::uint32_t> dist(0, p_ - 1);
  Coords c(degree_);
  for (auto& v : c) v = dist(rng);
  return c;
}

bool Field::contains(const Field& other) const {
  if (same_field(*this, other)) return true;
  return parent_ && parent_->contains(other);
}

Coords Field::embed(const Field& from, const Coords& a) const {
  if (same_field(*this, from)) return a;
  if (!parent_) throw DomainError("incompatible field embedding");
  Coords inner = parent_->embed(from, a);
  inner.resize(degree_, 0);
  return inner;
}

std::string Field::describe() const {
  if (!parent_) return "GF(" + std::to_string(p_) + ")";
  if (standard_) {
    return "GF(" + std::to_string(p_) + "^" + std::to_string(local_degree_) + ")";
  }
  return parent_->describe() + "[T]/(" + format_terms(Poly(parent_, modulus_)) + ")";
}

std::string Field::format(const Coords& a) const {
  if (!parent_) return std::to_string(a[0]);
  if (standard_) {
    std::string s = "[";
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(a[i]);
    }
    return s + "]";
  }
  std::vector<Coords> cs(local_degree_);
  for (std::size_t i = 0; i < local_degree_; ++i) cs[i] = chunk(a, i, parent_->degree_);
  return "(" + format_terms(Poly(parent_, cs)) + ")";
}

bool same_field(const Field& a, const Field& b) {
  if (&a == &b) return true;
  if (a.p_ != b.p_ || a.degree_ != b.degree_ || a.local_degree_ != b.local_degree_) return false;
  if (!a.parent_ || !b.parent_) return !a.parent_ && !b.parent_;
  return same_field(*a.parent_, *b.parent_) && a.modulus_ == b.modulus_;
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
  if (!a || !b) return a == b;
  return same_field(*a, *b);
}

// ---------------------------------------------------------------- Elem

Elem::Elem(FieldPtr field, Coords coords) : field_(std::move(field)), coords_(std::move(coords)) {
  if (coords_.size() != field_->degree()) throw DomainError("element has the wrong number of coordinates");
  for (auto& v : coords_) v %= field_->characteristic();
}

Elem Elem::from_int(const FieldPtr& field, long value) { return Elem(field, field->from_int(value)); }

Elem operator+(const Elem& a, const Elem& b) {
  require_same(a.field_, b.field_);
  return Elem(a.field_, a.field_->add(a.coords_, b.coords_));
}

Elem operator-(const Elem& a, const Elem& b) {
  require_same(a.field_, b.field_);
  return Elem(a.field_, a.field_->sub(a.coords_, b.coords_));
}

Elem operator*(const Elem& a, const Elem& b) {
  require_same(a.field_, b.field_);
  return Elem(a.field_, a.field_->mul(a.coords_, b.coords_));
}

Elem Elem::inv() const { return Elem(field_, field_->inv(coords_)); }

Elem Elem::pow(const mpz_class& e) const { return Elem(field_, field_->pow(coords_, e)); }

bool operator==(const Elem& a, const Elem& b) { return same_field(a.field_, b.field_) && a.coords_ == b.coords_; }

// ---------------------------------------------------------------- Poly

Poly::Poly(FieldPtr field) : field_(std::move(field)) {}

Poly::Poly(FieldPtr field, std::vector<Coords> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (c.size() != field_->degree()) throw DomainError("coefficient has the wrong number of coordinates");
  }
  canonicalize();
}

void Poly::canonicalize() {
  while (!coeffs_.empty() && field_->is_zero(coeffs_.back())) coeffs_.pop_back();
}

Poly Poly::constant(const FieldPtr& field, Coords c) { return Poly(field, {std::move(c)}); }

Poly Poly::monomial(const FieldPtr& field, Coords c, std::size_t k) {
  std::vector<Coords> cs(k + 1, field->zero());
  cs[k] = std::move(c);
  return Poly(field, std::move(cs));
}

Poly Poly::x(const FieldPtr& field) { return monomial(field, field->one(), 1); }

Poly Poly::from_ints(const FieldPtr& field, const std::vector<long>& coeffs) {
  std::vector<Coords> cs;
  cs.reserve(coeffs.size());
  for (long v : coeffs) cs.push_back(field->from_int(v));
  return Poly(field, std::move(cs));
}

std::optional<std::size_t> Poly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

bool Poly::is_one() const { return coeffs_.size() == 1 && field_->is_one(coeffs_[0]); }

bool Poly::is_monic() const { return !coeffs_.empty() && field_->is_one(coeffs_.back()); }

Coords Poly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : field_->zero(); }

Coords Poly::leading() const { return coeffs_.empty() ? field_->zero() : coeffs_.back(); }

Poly Poly::operator-() const {
  std::vector<Coords> cs;
  cs.reserve(coeffs_.size());
  for (const auto& c : coeffs_) cs.push_back(field_->neg(c));
  return Poly(field_, std::move(cs));
}

Poly operator+(const Poly& f, const Poly& g) {
  require_same(f.field_, g.field_);
  const Field& F = *f.field_;
  std::vector<Coords> cs(std::max(f.coeffs_.size(), g.coeffs_.size()), F.zero());
  for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = F.add(f.coeff(i), g.coeff(i));
  return Poly(f.field_, std::move(cs));
}

Poly operator-(const Poly& f, const Poly& g) {
  require_same(f.field_, g.field_);
  const Field& F = *f.field_;
  std::vector<Coords> cs(std::max(f.coeffs_.size(), g.coeffs_.size()), F.zero());
  for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = F.sub(f.coeff(i), g.coeff(i));
  return Poly(f.field_, std::move(cs));
}

Poly operator*(const Poly& f, const Poly& g) {
  require_same(f.field_, g.field_);
  if (f.is_zero() || g.is_zero()) return Poly(f.field_);
  const Field& F = *f.field_;
  std::vector<Coords> cs(f.coeffs_.size() + g.coeffs_.size() - 1, F.zero());
  for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
    if (F.is_zero(f.coeffs_[i])) continue;
    for (std::size_t j = 0; j < g.coeffs_.size(); ++j) {
      if (F.is_zero(g.coeffs_[j])) continue;
      cs[i + j] = F.add(cs[i + j], F.mul(f.coeffs_[i], g.coeffs_[j]));
    }
  }
  return Poly(f.field_, std::move(cs));
}

std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g) {
  require_same(f.field(), g.field());
  if (g.is_zero()) throw DomainError("division by the zero polynomial");
  const Field& F = *f.field();
  std::vector<Coords> r = f.coeffs();
  const std::size_t dg = g.coeffs().size() - 1;
  if (r.size() <= dg) return {Poly(f.field()), f};
  const Coords lead_inv = F.inv(g.leading());
  std::vector<Coords> q(r.size() - dg, F.zero());
  for (std::size_t k = r.size(); k-- > dg;) {
    if (F.is_zero(r[k])) continue;
    const Coords c = F.mul(r[k], lead_inv);
    q[k - dg] = c;
    for (std::size_t j = 0; j <= dg; ++j) r[k - dg + j] = F.sub(r[k - dg + j], F.mul(c, g.coeffs()[j]));
  }
  r.resize(dg);
  return {Poly(f.field(), std::move(q)), Poly(f.field(), std::move(r))};
}

Poly operator/(const Poly& f, const Poly& g) { return divmod(f, g).first; }

Poly operator%(const Poly& f, const Poly& g) { return divmod(f, g).second; }

bool operator==(const Poly& f, const Poly& g) { return same_field(f.field_, g.field_) && f.coeffs_ == g.coeffs_; }

Poly Poly::scaled(const Coords& c) const {
  std::vector<Coords> cs;
  cs.reserve(coeffs_.size());
  for (const auto& a : coeffs_) cs.push_back(field_->mul(a, c));
  return Poly(field_, std::move(cs));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_->inv(leading()));
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly(field_);
  std::vector<Coords> cs(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    cs[i - 1] = field_->scale_fp(coeffs_[i], static_cast<std::uint32_t>(i % field_->characteristic()));
  }
  return Poly(field_, std::move(cs));
}

Coords Poly::evaluate(const Coords& x) const {
  Coords acc = field_->zero();
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = field_->add(field_->mul(acc, x), coeffs_[k]);
  return acc;
}

Poly gcd(const Poly& f, const Poly& g) {
  require_same(f.field(), g.field());
  Poly a = f;
  Poly b = g;
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly pow(const Poly& f, unsigned long e) {
  Poly result = Poly::constant(f.field(), f.field()->one());
  Poly base = f;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Poly pow_mod(const Poly& f, const mpz_class& e, const Poly& modulus) {
  if (modulus.is_zero()) throw DomainError("pow_mod: zero modulus");
  if (e < 0) throw DomainError("pow_mod: negative exponent");
  Poly result = Poly::constant(f.field(), f.field()->one()) % modulus;
  const Poly base = f % modulus;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % modulus;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * base) % modulus;
  }
  return result;
}

namespace {

std::vector<std::size_t> prime_divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Coefficientwise p-th root of a polynomial whose derivative vanishes.
Poly pth_root(const Poly& f) {
  const Field& F = *f.field();
  const std::uint32_t p = F.characteristic();
  const mpz_class root_exp = F.order() / p;  // x -> x^{|F|/p} inverts Frobenius
  std::vector<Coords> cs;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) cs.push_back(F.pow(f.coeffs()[i], root_exp));
  return Poly(f.field(), std::move(cs));
}

void squarefree(const Poly& f, unsigned mult, std::vector<Factor>& out) {
  if (f.is_constant()) return;
  const std::uint32_t p = f.field()->characteristic();
  const Poly df = f.derivative();
  if (df.is_zero()) {
    squarefree(pth_root(f), mult * p, out);
    return;
  }
  Poly c = gcd(f, df);
  Poly w = f / c;
  unsigned i = 1;
  while (!w.is_one()) {
    Poly y = gcd(w, c);
    Poly fac = w / y;
    if (!fac.is_constant()) out.push_back({fac.monic(), i * mult});
    ++i;
    w = y;
    c = c / y;
  }
  if (!c.is_constant()) squarefree(pth_root(c.monic()), mult * p, out);
}

std::vector<std::pair<Poly, std::size_t>> distinct_degree(Poly g) {
  std::vector<std::pair<Poly, std::size_t>> out;
  const FieldPtr& F = g.field();
  const Poly x = Poly::x(F);
  Poly h = x % g;
  std::size_t i = 1;
  while (*g.degree() >= 2 * i) {
    h = pow_mod(h, F->order(), g);
    Poly d = gcd(g, h - x);
    if (!d.is_one()) {
      out.emplace_back(d, i);
      g = g / d;
      h = h % g;
    }
    ++i;
  }
  if (!g.is_constant()) out.emplace_back(g.monic(), *g.degree());
  return out;
}

void equal_degree(const Poly& g, std::size_t d, std::mt19937_64& rng, std::vector<Poly>& out) {
  const std::size_t n = *g.degree();
  if (n == d) {
    out.push_back(g.monic());
    return;
  }
  const FieldPtr& F = g.field();
  const bool char2 = F->characteristic() == 2;
  for (;;) {
    Poly a = random_poly(F, n, rng);
    if (a.is_constant()) continue;
    Poly b(F);
    if (char2) {
      // Trace to F_2: a + a^2 + ... + a^{2^{kd-1}}, |F| = 2^k.
      const std::size_t steps = F->degree() * d;
      Poly t = a % g;
      b = t;
      for (std::size_t s = 1; s < steps; ++s) {
        t = (t * t) % g;
        b = b + t;
      }
    } else {
      mpz_class e;
      mpz_pow_ui(e.get_mpz_t(), F->order().get_mpz_t(), d);
      e = (e - 1) / 2;
      b = pow_mod(a, e, g) - Poly::constant(F, F->one());
    }
    Poly f1 = gcd(b, g);
    if (!f1.is_constant() && *f1.degree() < n) {
      equal_degree(f1, d, rng, out);
      equal_degree(g / f1, d, rng, out);
      return;
    }
  }
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.coeffs().size() != b.coeffs().size()) return a.coeffs().size() < b.coeffs().size();
  const Field& F = *a.field();
  for (std::size_t k = a.coeffs().size(); k-- > 0;) {
    const mpz_class ia = F.index(a.coeffs()[k]);
    const mpz_class ib = F.index(b.coeffs()[k]);
    if (ia != ib) return ia < ib;
  }
  return false;
}

}  // namespace

bool is_irreducible(const Poly& f) {
  if (!f.degree() || *f.degree() == 0) throw DomainError("irreducibility of a constant polynomial");
  const std::size_t n = *f.degree();
  if (n == 1) return true;
  const Poly g = f.monic();
  const FieldPtr& F = g.field();
  const Poly x = Poly::x(F);
  std::vector<Poly> frob(n + 1, Poly(F));
  frob[0] = x % g;
  for (std::size_t i = 1; i <= n; ++i) frob[i] = pow_mod(frob[i - 1], F->order(), g);
  if (!(frob[n] == frob[0])) return false;
  for (std::size_t r : prime_divisors(n)) {
    if (!gcd(g, frob[n / r] - x).is_one()) return false;
  }
  return true;
}

Factorization factor(const Poly& f, std::uint64_t seed) {
  if (f.is_zero()) throw DomainError("factorization of the zero polynomial");
  Factorization out{f.leading(), {}};
  if (f.is_constant()) return out;
  std::mt19937_64 rng(seed);
  std::vector<Factor> sqf;
  squarefree(f.monic(), 1, sqf);
  std::map<std::vector<mpz_class>, Factor> merged;
  for (const auto& [part, mult] : sqf) {
    for (const auto& [block, d] : distinct_degree(part)) {
      std::vector<Poly> irreducibles;
      equal_degree(block, d, rng, irreducibles);
      for (auto& q : irreducibles) {
        std::vector<mpz_class> key;
        key.push_back(static_cast<unsigned long>(q.coeffs().size()));
        for (std::size_t k = q.coeffs().size(); k-- > 0;) key.push_back(q.field()->index(q.coeffs()[k]));
        auto it = merged.find(key);
        if (it == merged.end()) {
          merged.emplace(std::move(key), Factor{std::move(q), mult});
        } else {
          it->second.multiplicity += mult;
        }
      }
    }
  }
  for (auto& [key, fac] : merged) out.factors.push_back(std::move(fac));
  std::sort(out.factors.begin(), out.factors.end(),
            [](const Factor& a, const Factor& b) { return poly_less(a.factor, b.factor); });
  return out;
}

Poly expand(const Factorization& fz, const FieldPtr& field) {
  Poly acc = Poly::constant(field, fz.unit);
  for (const auto& [fac, mult] : fz.factors) acc = acc * pow(fac, mult);
  return acc;
}

bool fermat_check(const Poly& a, const Poly& P) {
  require_same(a.field(), P.field());
  if (P.is_constant() || !is_irreducible(P)) throw DomainError("fermat_check: P must be irreducible");
  if ((a % P).is_zero()) throw DomainError("fermat_check: P divides a");
  mpz_class norm;
  mpz_pow_ui(norm.get_mpz_t(), P.field()->order().get_mpz_t(), *P.degree());
  return pow_mod(a, norm - 1, P).is_one();
}

mpz_class unit_group_order(const Poly& a) {
  if (a.is_constant()) throw DomainError("unit_group_order: constant modulus");
  const mpz_class& q = a.field()->order();
  mpz_class total = 1;
  for (const auto& [fac, mult] : factor(a).factors) {
    const unsigned long d = *fac.degree();
    mpz_class hi;
    mpz_class lo;
    mpz_pow_ui(hi.get_mpz_t(), q.get_mpz_t(), mult * d);
    mpz_pow_ui(lo.get_mpz_t(), q.get_mpz_t(), (mult - 1) * d);
    total *= hi - lo;
  }
  return total;
}

Poly least_irreducible(const FieldPtr& field, unsigned degree) {
  if (degree == 0) throw DomainError("irreducible of degree 0");
  // Odometer over (c_0, ..., c_{n-1}) with c_{n-1} most significant.
  std::vector<mpz_class> digits(degree, 0);
  const mpz_class& q = field->order();
  for (;;) {
    std::vector<Coords> cs(degree + 1);
    for (unsigned i = 0; i < degree; ++i) cs[i] = field->element(digits[i]);
    cs[degree] = field->one();
    Poly f(field, std::move(cs));
    if (is_irreducible(f)) return f;
    unsigned i = 0;
    while (i < degree) {
      if (++digits[i] < q) break;
      digits[i] = 0;
      ++i;
    }
    if (i == degree) throw ContractViolation("no irreducible polynomial found");
  }
}

Poly random_poly(const FieldPtr& field, std::size_t bound, std::mt19937_64& rng) {
  std::vector<Coords> cs(bound);
  for (auto& c : cs) c = field->random(rng);
  return Poly(field, std::move(cs));
}

// ---------------------------------------------------------------- text

std::string format_terms(const Poly& f, std::string_view var) {
  if (f.is_zero()) return "0";
  const Field& F = *f.field();
  std::string out;
  for (std::size_t k = f.coeffs().size(); k-- > 0;) {
    const Coords& c = f.coeffs()[k];
    if (F.is_zero(c)) continue;
    if (!out.empty()) out += " + ";
    out += F.format(c);
    if (k >= 1) {
      out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

std::string to_string(const Poly& f) { return format_terms(f) + " over " + f.field()->describe(); }

FieldPtr field_for_order(std::uint64_t q) {
  if (q < 2) throw DomainError("field order must be a prime power >= 2");
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  unsigned e = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) throw DomainError(std::to_string(q) + " is not a prime power");
  if (p > (1ull << 31)) throw DomainError("characteristic too large");
  return Field::gf(static_cast<std::uint32_t>(p), e);
}

namespace {

// First occurrence of `needle` outside brackets and parentheses.
std::size_t find_top_level(const std::string& s, const std::string& needle, std::size_t from = 0) {
  int depth = 0;
  for (std::size_t i = from; i < s.size(); ++i) {
    if (depth == 0 && s.compare(i, needle.size(), needle) == 0) return i;
    if (s[i] == '(' || s[i] == '[') ++depth;
    if (s[i] == ')' || s[i] == ']') --depth;
  }
  return std::string::npos;
}

}  // namespace

Coords parse_element(const Field& f, std::string_view text_view) {
  const std::string text = strip_spaces(text_view);
  if (text.empty()) throw ParseError("empty coefficient");
  if (text.front() == '[') {
    if (text.back() != ']') throw ParseError("unterminated coefficient vector");
    if (!f.parent() || !f.parent()->is_prime_field()) throw ParseError("vector coefficient needs GF(p^e)");
    Coords c;
    std::stringstream ss(text.substr(1, text.size() - 2));
    std::string item;
    while (std::getline(ss, item, ',')) c.push_back(reduce_mod(parse_long(trim(item)), f.characteristic()));
    if (c.size() != f.degree()) throw ParseError("coefficient vector has the wrong length");
    return c;
  }
  if (text.front() == '(' && f.parent()) {
    if (text.back() != ')') throw ParseError("unterminated coefficient");
    const Poly inner = parse_poly(text.substr(1, text.size() - 2), f.parent(), "T");
    if (inner.coeffs().size() > f.local_degree()) throw ParseError("residue representative has too high degree");
    Coords c;
    for (std::size_t i = 0; i < f.local_degree(); ++i) {
      const Coords part = inner.coeff(i);
      c.insert(c.end(), part.begin(), part.end());
    }
    return c;
  }
  return f.from_int(parse_long(text));
}

Coords to_residue(const FieldPtr& residue_field, const Poly& a) {
  const FieldPtr& base = residue_field->parent();
  if (!base || !same_field(base, a.field())) throw DomainError("polynomial is not over the residue field's base");
  const Poly r = a % Poly(base, residue_field->modulus());
  Coords c;
  c.reserve(residue_field->degree());
  for (std::size_t i = 0; i < residue_field->local_degree(); ++i) {
    const Coords part = r.coeff(i);
    c.insert(c.end(), part.begin(), part.end());
  }
  return c;
}

Poly from_residue(const FieldPtr& residue_field, const Coords& c) {
  const FieldPtr& base = residue_field->parent();
  if (!base) throw DomainError("prime field is not a residue field");
  std::vector<Coords> cs(residue_field->local_degree());
  for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = chunk(c, i, base->degree());
  return Poly(base, std::move(cs));
}

mpz_class multiplicative_order(const Poly& u, const Poly& modulus) {
  if (modulus.is_zero()) throw DomainError("order modulo zero");
  if (modulus.is_constant()) return 1;
  if (!gcd(u, modulus).is_one()) throw DomainError("not a unit modulo the given polynomial");
  const Poly base = u % modulus;
  Poly acc = base;
  mpz_class k = 1;
  while (!acc.is_one()) {
    acc = (acc * base) % modulus;
    ++k;
  }
  return k;
}

FieldPtr parse_field(std::string_view text) {
  const std::string s = strip_spaces(text);
  const std::size_t ext = find_top_level(s, "[T]/(");
  if (ext != std::string::npos) {
    FieldPtr base = parse_field(s.substr(0, ext));
    if (s.back() != ')') throw ParseError("bad residue field '" + s + "'");
    const std::string mod = s.substr(ext + 5, s.size() - ext - 6);
    return Field::extension(base, parse_poly(mod, base, "T").monic());
  }
  if (s.rfind("GF(", 0) != 0 || s.back() != ')') throw ParseError("bad field '" + s + "'");
  const std::string inner = s.substr(3, s.size() - 4);
  const std::size_t caret = inner.find('^');
  if (caret == std::string::npos) return field_for_order(static_cast<std::uint64_t>(parse_long(inner)));
  const long p = parse_long(inner.substr(0, caret));
  const long e = parse_long(inner.substr(caret + 1));
  if (p < 2 || e < 1) throw ParseError("bad field '" + s + "'");
  return Field::gf(static_cast<std::uint32_t>(p), static_cast<unsigned>(e));
}

Poly parse_poly(std::string_view text, const FieldPtr& field, std::string_view var_view) {
  std::string body(text);
  FieldPtr F = field;
  const std::size_t over = body.rfind(" over ");
  if (over != std::string::npos) {
    F = parse_field(body.substr(over + 6));
    if (field && !same_field(field, F)) throw ParseError("polynomial field differs from the expected field");
    body = body.substr(0, over);
  }
  if (!F) throw ParseError("polynomial text needs an 'over GF(...)' suffix");
  const std::string s = strip_spaces(body);
  if (s.empty()) throw ParseError("empty polynomial");
  const std::string var(var_view);

  std::vector<std::pair<bool, std::string>> terms;  // (negated, text)
  {
    int depth = 0;
    std::string cur;
    bool neg = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
      const char c = s[i];
      if (depth == 0 && (c == '+' || c == '-') && !(i > 0 && s[i - 1] == '^')) {
        if (!cur.empty()) terms.emplace_back(neg, cur);
        else if (i != 0) throw ParseError("dangling sign in '" + s + "'");
        cur.clear();
        neg = (c == '-');
        continue;
      }
      if (c == '(' || c == '[') ++depth;
      if (c == ')' || c == ']') --depth;
      cur += c;
    }
    if (cur.empty()) throw ParseError("dangling sign in '" + s + "'");
    terms.emplace_back(neg, cur);
  }

  std::map<std::size_t, Coords> acc;
  for (const auto& [neg, term] : terms) {
    std::string coef = term;
    std::size_t power = 0;
    const std::size_t vpos = find_top_level(term, var);
    if (vpos != std::string::npos) {
      coef = term.substr(0, vpos);
      if (!coef.empty()) {
        if (coef.back() != '*') throw ParseError("expected '*' before the variable in '" + term + "'");
        coef.pop_back();
      }
      const std::string rest = term.substr(vpos + var.size());
      if (rest.empty()) {
        power = 1;
      } else if (rest.front() == '^') {
        const long e = parse_long(rest.substr(1));
        if (e < 0) throw ParseError("negative exponent");
        power = static_cast<std::size_t>(e);
      } else {
        throw ParseError("unexpected text after variable in '" + term + "'");
      }
    }
    Coords c = coef.empty() ? F->one() : parse_element(*F, coef);
    if (neg) c = F->neg(c);
    auto it = acc.find(power);
    if (it == acc.end()) acc.emplace(power, c);
    else it->second = F->add(it->second, c);
  }
  std::vector<Coords> cs(acc.rbegin()->first + 1, F->zero());
  for (auto& [k, c] : acc) cs[k] = c;
  return Poly(F, std::move(cs));
}

}  // namespace ncarith::ff

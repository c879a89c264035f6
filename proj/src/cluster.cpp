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

#include "ncarith/cluster.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "json.hpp"
#include "ncarith/errors.hpp"

namespace ncarith::cluster {

namespace {

long total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0L); }

Exponents add(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Exponents min_exponents(const LaurentPoly& f) {
  Exponents m(f.nvars(), 0);
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) m[i] = first ? e[i] : std::min(m[i], e[i]);
    first = false;
  }
  return m;
}

Exponents negated(Exponents e) {
  for (auto& v : e) v = -v;
  return e;
}

void check_same(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars() != b.nvars()) throw DomainError("Laurent polynomials in different numbers of variables");
}

}  // namespace

bool GradedLexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const long da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

LaurentPoly LaurentPoly::constant(std::size_t nvars, const mpz_class& c) {
  LaurentPoly f(nvars);
  f.add_term(Exponents(nvars, 0), c);
  return f;
}

LaurentPoly LaurentPoly::variable(std::size_t nvars, std::size_t i) {
  if (i < 1 || i > nvars) throw DomainError("variable index out of range");
  Exponents e(nvars, 0);
  e[i - 1] = 1;
  return monomial(e);
}

LaurentPoly LaurentPoly::monomial(const Exponents& e, const mpz_class& c) {
  LaurentPoly f(e.size());
  f.add_term(e, c);
  return f;
}

std::size_t LaurentPoly::max_coefficient_bits() const {
  std::size_t bits = 0;
  for (const auto& [e, c] : terms_) bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
  return bits;
}

bool LaurentPoly::has_positive_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

void LaurentPoly::add_term(const Exponents& e, const mpz_class& c) {
  if (e.size() != n_) throw DomainError("exponent vector has the wrong length");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const { return scaled(-1); }

LaurentPoly LaurentPoly::scaled(const mpz_class& c) const {
  LaurentPoly out(n_);
  if (c == 0) return out;
  for (const auto& [e, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, v * c);
  return out;
}

LaurentPoly LaurentPoly::shifted(const Exponents& e) const {
  if (e.size() != n_) throw DomainError("exponent vector has the wrong length");
  LaurentPoly out(n_);
  for (const auto& [m, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), add(m, e), v);
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly result = constant(n_, 1), base = *this;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  check_same(a, b);
  LaurentPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  check_same(a, b);
  LaurentPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
  return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  check_same(a, b);
  LaurentPoly out(a.n_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(add(ea, eb), ca * cb);
  return out;
}

bool divides(const LaurentPoly& b, const LaurentPoly& a, LaurentPoly* quotient, std::size_t step_cap) {
  check_same(a, b);
  if (b.is_zero()) throw DomainError("division by the zero Laurent polynomial");
  const std::size_t n = a.nvars();
  LaurentPoly q(n);
  if (a.is_zero()) {
    if (quotient) *quotient = q;
    return true;
  }
  // Shift both into the polynomial ring with no monomial factor; since each
  // x_i is prime there, divisibility in the Laurent ring is unchanged.
  const Exponents ma = min_exponents(a), mb = min_exponents(b);
  LaurentPoly r = a.shifted(negated(ma));
  const LaurentPoly g = b.shifted(negated(mb));
  const auto& [lead_e, lead_c] = *g.terms().begin();
  std::size_t steps = 0;
  while (!r.is_zero()) {
    if (++steps > step_cap) throw ResourceError("Laurent division exceeded its step cap");
    const auto [er, cr] = *r.terms().begin();
    Exponents m(n);
    for (std::size_t i = 0; i < n; ++i) {
      m[i] = er[i] - lead_e[i];
      if (m[i] < 0) return false;
    }
    if (!mpz_divisible_p(cr.get_mpz_t(), lead_c.get_mpz_t())) return false;
    const mpz_class c = cr / lead_c;
    q.add_term(m, c);
    for (const auto& [e, v] : g.terms()) r.add_term(add(e, m), -c * v);
  }
  if (quotient) {
    Exponents s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = ma[i] - mb[i];
    *quotient = q.shifted(s);
  }
  return true;
}

std::string to_string(const LaurentPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    const mpz_class mag = abs(c);
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += mono;
    }
  }
  return out;
}

namespace {

class LaurentParser {
 public:
  LaurentParser(std::string_view text, std::size_t n) : s_(text), n_(n) {}

  LaurentPoly parse() {
    LaurentPoly out(n_);
    skip();
    bool negative = false;
    if (peek() == '-' || peek() == '+') negative = s_[pos_++] == '-';
    while (true) {
      auto [e, c] = term();
      out.add_term(e, negative ? mpz_class(-c) : c);
      skip();
      if (pos_ == s_.size()) break;
      const char op = s_[pos_];
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      negative = op == '-';
      ++pos_;
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("Laurent polynomial: " + what + " at offset " + std::to_string(pos_) + " in '" +
                     std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  std::string digits() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }
  long small_int() {
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    const std::string d = digits();
    if (d.size() > 9) fail("exponent too large");
    const long v = std::stol(d);
    return negative ? -v : v;
  }
  std::pair<Exponents, mpz_class> term() {
    Exponents e(n_, 0);
    mpz_class c = 1;
    while (true) {
      const char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        c *= mpz_class(digits());
      } else if (ch == 'x') {
        ++pos_;
        const std::string idx = digits();
        if (idx.size() > 6) fail("variable index too large");
        const std::size_t i = std::stoul(idx);
        if (i < 1 || i > n_) fail("variable index out of range");
        long power = 1;
        if (peek() == '^') {
          ++pos_;
          power = small_int();
        }
        e[i - 1] += static_cast<std::int32_t>(power);
      } else {
        fail("expected a coefficient or variable");
      }
      if (peek() != '*') break;
      ++pos_;
    }
    return {e, c};
  }

  std::string_view s_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text, std::size_t nvars) {
  return LaurentParser(text, nvars).parse();
}

bool is_level_p(const LaurentPoly& f, const mpz_class& p) {
  if (p == 0) throw DomainError("is_level_p: p must be nonzero");
  return std::all_of(f.terms().begin(), f.terms().end(),
                     [&](const auto& t) { return mpz_divisible_p(t.second.get_mpz_t(), p.get_mpz_t()) != 0; });
}

mpq_class specialize(const LaurentPoly& f, const std::vector<mpq_class>& values) {
  if (values.size() != f.nvars()) throw DomainError("specialize: expected one value per variable");
  for (const auto& v : values)
    if (v == 0) throw DomainError("specialize: values must be nonzero");
  mpq_class total = 0;
  for (const auto& [e, c] : f.terms()) {
    mpq_class term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      const unsigned long k = static_cast<unsigned long>(e[i] < 0 ? -static_cast<long>(e[i]) : e[i]);
      mpz_class num, den;
      mpz_pow_ui(num.get_mpz_t(), values[i].get_num_mpz_t(), k);
      mpz_pow_ui(den.get_mpz_t(), values[i].get_den_mpz_t(), k);
      mpq_class factor = e[i] >= 0 ? mpq_class(num, den) : mpq_class(den, num);
      factor.canonicalize();
      term *= factor;
    }
    total += term;
  }
  return total;
}

bool is_skew_symmetric(const Matrix& B) {
  for (std::size_t i = 0; i < B.size(); ++i) {
    if (B[i].size() != B.size()) return false;
    for (std::size_t j = 0; j < B.size(); ++j)
      if (B[i][j] != -B[j][i]) return false;
  }
  return true;
}

Matrix mutate_matrix(const Matrix& B, std::size_t k) {
  const std::size_t n = B.size();
  if (k < 1 || k > n) throw DomainError("mutation direction out of range");
  const std::size_t c = k - 1;
  Matrix out = B;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == c || j == c) {
        out[i][j] = -B[i][j];
      } else {
        out[i][j] = B[i][j] + (std::labs(B[i][c]) * B[c][j] + B[i][c] * std::labs(B[c][j])) / 2;
      }
    }
  return out;
}

LaurentPoly ClusterVariable::as_laurent() const {
  LaurentPoly out(numerator.nvars());
  if (!is_laurent() || !divides(denominator, numerator, &out))
    throw ContractViolation("cluster variable is not a Laurent polynomial: (" + to_string(numerator) + ")/(" +
                            to_string(denominator) + ")");
  return out;
}

bool same_value(const ClusterVariable& a, const ClusterVariable& b) {
  return a.numerator * b.denominator == b.numerator * a.denominator;
}

Seed::Seed(Matrix B) : B_(std::move(B)) {
  if (!is_skew_symmetric(B_)) throw DomainError("exchange matrix must be square and skew-symmetric");
  const std::size_t n = B_.size();
  for (std::size_t i = 1; i <= n; ++i)
    cluster_.push_back({LaurentPoly::variable(n, i), LaurentPoly::constant(n, 1)});
}

Seed::Seed(std::vector<ClusterVariable> cluster, Matrix B) : cluster_(std::move(cluster)), B_(std::move(B)) {
  if (!is_skew_symmetric(B_)) throw DomainError("exchange matrix must be square and skew-symmetric");
  if (cluster_.size() != B_.size()) throw DomainError("cluster size does not match the exchange matrix");
  for (const auto& x : cluster_) {
    if (x.numerator.nvars() != B_.size() || x.denominator.nvars() != B_.size())
      throw DomainError("cluster variable in the wrong number of variables");
    if (x.denominator.is_zero() || x.numerator.is_zero()) throw DomainError("cluster variables must be nonzero");
  }
}

namespace {

void check_growth(const LaurentPoly& f) {
  if (f.max_coefficient_bits() > kCoefficientBitCap)
    throw ResourceError("cluster coefficient exceeds 2^" + std::to_string(kCoefficientBitCap));
}

}  // namespace

Seed mutate(const Seed& seed, std::size_t k) {
  const std::size_t n = seed.rank();
  if (k < 1 || k > n) throw DomainError("mutation direction " + std::to_string(k) + " out of range 1.." + std::to_string(n));
  const Matrix& B = seed.exchange_matrix();
  const auto& x = seed.cluster();
  const std::size_t c = k - 1;
  LaurentPoly np = LaurentPoly::constant(n, 1), dp = np, nm = np, dm = np;
  for (std::size_t i = 0; i < n; ++i) {
    const long b = B[i][c];
    if (b > 0) {
      np = np * x[i].numerator.pow(b);
      dp = dp * x[i].denominator.pow(b);
    } else if (b < 0) {
      nm = nm * x[i].numerator.pow(-b);
      dm = dm * x[i].denominator.pow(-b);
    }
  }
  LaurentPoly num = (np * dm + nm * dp) * x[c].denominator;
  LaurentPoly den = dp * dm * x[c].numerator;
  check_growth(num);
  LaurentPoly q(n);
  if (divides(den, num, &q)) {
    num = q;
    den = LaurentPoly::constant(n, 1);
  } else if (den.terms().begin()->second < 0) {
    num = -num;
    den = -den;
  }
  check_growth(num);
  check_growth(den);
  std::vector<ClusterVariable> cluster = x;
  cluster[c] = {std::move(num), std::move(den)};
  return Seed(std::move(cluster), mutate_matrix(B, k));
}

bool same_seed(const Seed& a, const Seed& b) {
  if (a.exchange_matrix() != b.exchange_matrix()) return false;
  for (std::size_t i = 0; i < a.rank(); ++i)
    if (!same_value(a.cluster()[i], b.cluster()[i])) return false;
  return true;
}

Seed markov_seed() { return Seed(Matrix{{0, 2, -2}, {-2, 0, 2}, {2, -2, 0}}); }

std::vector<LaurentPoly> laurent_expand(const Seed& seed, const std::vector<std::size_t>& word, std::size_t max_length) {
  if (word.size() > max_length)
    throw DomainError("word length " + std::to_string(word.size()) + " exceeds the bound " + std::to_string(max_length));
  Seed s = seed;
  for (std::size_t k : word) s = mutate(s, k);
  std::vector<LaurentPoly> out;
  for (const auto& x : s.cluster()) out.push_back(x.as_laurent());
  return out;
}

std::vector<std::vector<std::size_t>> reduced_words(std::size_t n, std::size_t max_length) {
  std::vector<std::vector<std::size_t>> out{{}};
  std::size_t level_start = 0;
  for (std::size_t len = 1; len <= max_length; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t w = level_start; w < level_end; ++w)
      for (std::size_t k = 1; k <= n; ++k) {
        if (!out[w].empty() && out[w].back() == k) continue;
        auto next = out[w];
        next.push_back(k);
        out.push_back(std::move(next));
      }
    level_start = level_end;
  }
  return out;
}

std::string seed_to_json(const Seed& seed) {
  nlohmann::ordered_json j;
  j["B"] = seed.exchange_matrix();
  auto cluster = nlohmann::ordered_json::array();
  for (const auto& x : seed.cluster()) {
    if (x.denominator == LaurentPoly::constant(seed.rank(), 1))
      cluster.push_back(to_string(x.numerator));
    else
      cluster.push_back("(" + to_string(x.numerator) + ")/(" + to_string(x.denominator) + ")");
  }
  j["cluster"] = cluster;
  return j.dump();
}

Seed seed_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("seed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("B") || !j.contains("cluster")) throw ParseError("seed JSON needs B and cluster");
  Matrix B;
  std::vector<std::string> strings;
  try {
    B = j.at("B").get<Matrix>();
    strings = j.at("cluster").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("seed JSON: ") + e.what());
  }
  const std::size_t n = B.size();
  std::vector<ClusterVariable> cluster;
  for (const std::string& s : strings) {
    const auto split = s.find(")/(");
    if (!s.empty() && s.front() == '(' && s.back() == ')' && split != std::string::npos) {
      cluster.push_back({parse_laurent(std::string_view(s).substr(1, split - 1), n),
                         parse_laurent(std::string_view(s).substr(split + 3, s.size() - split - 4), n)});
    } else {
      cluster.push_back({parse_laurent(s, n), LaurentPoly::constant(n, 1)});
    }
  }
  return Seed(std::move(cluster), std::move(B));
}

}  // namespace ncarith::cluster

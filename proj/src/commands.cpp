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

#include "commands.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "ncarith/bignum.hpp"
#include "ncarith/class_field.hpp"
#include "ncarith/cluster.hpp"
#include "ncarith/drinfeld.hpp"
#include "ncarith/errors.hpp"
#include "ncarith/ff_poly.hpp"
#include "ncarith/lattice.hpp"
#include "ncarith/nc_torus.hpp"
#include "ncarith/twisted.hpp"

namespace ncarith::commands {

using nlohmann::json;
using nlohmann::ordered_json;
using bignum::BigComplex;
using bignum::BigFloat;

namespace {

constexpr const char* kVersion = "0.1.0";

const std::vector<CommandInfo> kCatalog = {
    {"fermat",
     "check a^(|P|-1) = 1 mod P in F_q[T]",
     {{"q", "2", "field order (prime power)"},
      {"a", "T + 1", "polynomial in T"},
      {"P", "T^2 + T + 1", "irreducible polynomial in T"},
      {"seed", "0", "PRNG seed"}}},
    {"factor",
     "factor a polynomial over F_q",
     {{"q", "2", "field order (prime power)"},
      {"poly", "T^4 + T", "polynomial in T"},
      {"seed", "0", "PRNG seed for equal-degree splitting"}}},
    {"carlitz",
     "Carlitz module images rho_a",
     {{"q", "2", "field order (prime power)"}, {"a", "T^2", "polynomial in T"}, {"seed", "0", "PRNG seed"}}},
    {"torsion",
     "a-torsion of a Drinfeld module reduced at P, and its Frobenius",
     {{"q", "2", "field order (prime power)"},
      {"P", "T^2 + T + 1", "irreducible polynomial in T"},
      {"a", "T", "polynomial in T"},
      {"rho-T", "", "rho_T in twisted-polynomial text form (default: Carlitz)"},
      {"seed", "0", "PRNG seed"}}},
    {"cluster",
     "mutate the Markov seed (or a given exchange matrix) along a word",
     {{"word", "1,2,3", "comma-separated directions, 1-based"},
      {"matrix", "", "exchange matrix rows 'a,b,c;d,e,f;...' or with '/' (default: Markov)"},
      {"specialize", "", "comma-separated rational values for x1..xn"},
      {"max-length", "8", "longest accepted word"},
      {"seed", "0", "PRNG seed"}}},
    {"torus",
     "continued fraction, Effros-Shen, Morita and Connes invariants",
     {{"theta", "sqrt(7)", "rational or quadratic surd"},
      {"theta2", "", "second angle for the Morita test"},
      {"depth", "6", "Effros-Shen depth"},
      {"convergents", "8", "number of convergents"},
      {"matrix", "", "2x2 integer matrix 'a,b;c,d' or 'a,b/c,d' for the Connes invariant"},
      {"digits", "30", "decimal digits"},
      {"seed", "0", "PRNG seed"}}},
    {"pell",
     "fundamental solution of a^2 - D b^2 = +-4",
     {{"D", "5", "squarefree integer >= 2"}, {"cap", "1000000", "brute-force bound on b"}, {"seed", "0", "PRNG seed"}}},
    {"pf",
     "Perron-Frobenius eigenvalue of a non-negative integer matrix",
     {{"matrix", "0,1;1,1", "rows 'a,b;c,d' (or 'a,b/c,d')"},
      {"companion", "", "coefficients a_0,...,a_{m-1} of x^m - a_{m-1}x^{m-1} - ... - a_0"},
      {"digits", "30", "decimal digits"},
      {"seed", "0", "PRNG seed"}}},
    {"jinv",
     "Klein j-invariant",
     {{"tau", "i", "point of the upper half plane, e.g. i, (1+i*sqrt(3))/2, 0.1+1.3i"},
      {"digits", "60", "decimal digits"},
      {"seed", "0", "PRNG seed"}}},
    {"hcf",
     "Hilbert class polynomial from reduced forms",
     {{"disc", "", "negative discriminant (overrides D)"},
      {"D", "5", "squarefree D, discriminant by the chosen convention"},
      {"disc-convention", "D", "D (fundamental) or 4D"},
      {"digits", "60", "decimal digits"},
      {"seed", "0", "PRNG seed"}}},
    {"corollary12",
     "generator beta = log(eps) exp(2 pi i sqrt(D)) against the class polynomial",
     {{"D", "5", "squarefree integer >= 2"},
      {"digits", "100", "decimal digits"},
      {"max-degree", "8", "largest degree tried by recognition"},
      {"height", "10^12", "height bound for recognition"},
      {"disc-convention", "D", "D (fundamental) or 4D"},
      {"seed", "0", "PRNG seed"}}},
};

class Options {
 public:
  Options(const CommandInfo& info, const json& raw) {
    if (!raw.is_null() && !raw.is_object()) throw UsageError("options must be a JSON object");
    const json empty = json::object();
    for (const auto& item : (raw.is_object() ? raw : empty).items()) {
      const std::string& key = item.key();
      const json& value = item.value();
      const bool known = std::any_of(info.options.begin(), info.options.end(),
                                     [&](const OptionInfo& o) { return o.name == key; });
      if (!known) throw UsageError("unknown option '" + key + "' for " + info.name);
      if (value.is_string())
        given_[key] = value.get<std::string>();
      else if (value.is_number_integer() || value.is_number_float() || value.is_boolean())
        given_[key] = value.dump();
      else if (!value.is_null())
        throw UsageError("option '" + key + "' must be a string or number");
    }
    for (const auto& o : info.options) {
      auto it = given_.find(o.name);
      if (it != given_.end())
        config_[o.name] = it->second;
      else if (!o.fallback.empty())
        config_[o.name] = o.fallback;
      else
        config_[o.name] = nullptr;
    }
  }

  bool has(const std::string& key) const { return !config_.at(key).is_null(); }
  bool given(const std::string& key) const { return given_.count(key) > 0; }
  void unset(const std::string& key) { config_[key] = nullptr; }
  std::string str(const std::string& key) const {
    if (!has(key)) throw DomainError("missing option --" + key);
    return config_.at(key).get<std::string>();
  }
  const ordered_json& config() const { return config_; }

 private:
  std::map<std::string, std::string> given_;
  ordered_json config_;
};

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

mpz_class parse_mpz(const std::string& text) {
  const std::string t = trim(text);
  if (const auto caret = t.find('^'); caret != std::string::npos) {
    const mpz_class base = parse_mpz(t.substr(0, caret));
    const mpz_class e = parse_mpz(t.substr(caret + 1));
    if (e < 0 || e > 100000) throw DomainError("exponent out of range in '" + t + "'");
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e.get_ui());
    return out;
  }
  if (const auto pos = t.find_first_of("eE"); pos != std::string::npos) {
    const mpz_class mant = parse_mpz(t.substr(0, pos));
    const mpz_class e = parse_mpz(t.substr(pos + 1));
    if (e < 0 || e > 100000) throw DomainError("exponent out of range in '" + t + "'");
    mpz_class ten;
    mpz_ui_pow_ui(ten.get_mpz_t(), 10, e.get_ui());
    return mant * ten;
  }
  mpz_class out;
  std::string digits = t;
  if (!digits.empty() && digits[0] == '+') digits.erase(0, 1);
  if (digits.empty() || out.set_str(digits, 10) != 0) throw ParseError("not an integer: '" + t + "'");
  return out;
}

long parse_long(const std::string& text, long lo, long hi, const std::string& what) {
  const mpz_class v = parse_mpz(text);
  if (v < lo || v > hi)
    throw DomainError(what + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return v.get_si();
}

long parse_digits(const std::string& text, long lo) {
  const mpz_class v = parse_mpz(text);
  if (v < lo) throw DomainError("digits must be at least " + std::to_string(lo));
  if (v > 20000) throw ResourceError("more than 20000 digits requested");
  return v.get_si();
}

mpq_class parse_mpq(const std::string& text) {
  const std::string t = trim(text);
  mpq_class q;
  std::string body = !t.empty() && t[0] == '+' ? t.substr(1) : t;
  if (body.empty() || q.set_str(body, 10) != 0) throw ParseError("not a rational number: '" + t + "'");
  if (q.get_den() == 0) throw DomainError("zero denominator in '" + t + "'");
  q.canonicalize();
  return q;
}

std::vector<std::vector<mpz_class>> parse_matrix(const std::string& text) {
  std::vector<std::vector<mpz_class>> rows;
  std::string rows_text = text;
  std::replace(rows_text.begin(), rows_text.end(), '/', ';');
  for (const auto& row : split(rows_text, ';')) {
    std::vector<mpz_class> r;
    for (const auto& e : split(row, ',')) r.push_back(parse_mpz(e));
    rows.push_back(std::move(r));
  }
  return rows;
}

ordered_json integer(const mpz_class& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

ordered_json matrix_json(const std::vector<std::vector<mpz_class>>& m) {
  ordered_json out = ordered_json::array();
  for (const auto& row : m) {
    ordered_json r = ordered_json::array();
    for (const auto& e : row) r.push_back(integer(e));
    out.push_back(r);
  }
  return out;
}

ordered_json matrix2_json(const nc_torus::Matrix2& m) {
  return matrix_json({{m[0][0], m[0][1]}, {m[1][0], m[1][1]}});
}

std::string decimal(const BigFloat& x, long digits) { return x.to_string(static_cast<int>(digits)); }

ff::FieldPtr field_of(Options& o) {
  const mpz_class q = parse_mpz(o.str("q"));
  if (q < 2 || !q.fits_ulong_p()) throw DomainError("q must be a prime power >= 2");
  return ff::field_for_order(q.get_ui());
}

// ---------------------------------------------------------------------------

ordered_json cmd_fermat(Options& o) {
  const auto F = field_of(o);
  const ff::Poly a = ff::parse_poly(o.str("a"), F);
  const ff::Poly P = ff::parse_poly(o.str("P"), F);
  const bool holds = ff::fermat_check(a, P);
  mpz_class norm;
  mpz_pow_ui(norm.get_mpz_t(), F->order().get_mpz_t(), *P.degree());
  return {{"a", ff::to_string(a)},
          {"P", ff::to_string(P)},
          {"norm_P", integer(norm)},
          {"exponent", integer(norm - 1)},
          {"congruent_to_one", holds}};
}

ordered_json cmd_factor(Options& o) {
  const auto F = field_of(o);
  const ff::Poly f = ff::parse_poly(o.str("poly"), F);
  const mpz_class seed = parse_mpz(o.str("seed"));
  if (seed < 0 || !seed.fits_ulong_p()) throw DomainError("seed must be a non-negative 64-bit integer");
  const ff::Factorization fz = ff::factor(f, seed.get_ui());
  ordered_json factors = ordered_json::array();
  for (const auto& fac : fz.factors)
    factors.push_back({{"factor", ff::format_terms(fac.factor)}, {"multiplicity", fac.multiplicity}});
  ordered_json out{{"poly", ff::to_string(f)},
                   {"unit", F->format(fz.unit)},
                   {"factors", factors},
                   {"product_matches", ff::expand(fz, F) == f}};
  if (!f.is_constant()) out["unit_group_order"] = integer(ff::unit_group_order(f));
  return out;
}

ordered_json cmd_carlitz(Options& o) {
  const auto F = field_of(o);
  const ff::Poly a = ff::parse_poly(o.str("a"), F);
  const mpz_class q = F->order();
  const auto C = drinfeld::carlitz(q.get_ui());
  return {{"q", integer(q)},
          {"rho_T", C.rho_T().to_string()},
          {"a", ff::format_terms(a)},
          {"rho_a", C.rho(a).to_string()},
          {"tau_degree", C.rho(a).tau_degree() ? ordered_json(*C.rho(a).tau_degree()) : ordered_json()}};
}

ordered_json cmd_torsion(Options& o) {
  const auto F = field_of(o);
  const ff::Poly P = ff::parse_poly(o.str("P"), F);
  const ff::Poly a = ff::parse_poly(o.str("a"), F);
  const drinfeld::DrinfeldModule module = o.has("rho-T") ? drinfeld::DrinfeldModule(twisted::parse_over_A(o.str("rho-T")))
                                                         : drinfeld::carlitz(F->order().get_ui());
  if (module.base()->order() != F->order()) throw DomainError("rho-T is defined over a different field than q");
  const drinfeld::ReducedModule red = drinfeld::reduce(module, P);
  const drinfeld::TorsionModule tor = drinfeld::torsion(red, a);
  ordered_json structure = ordered_json::array();
  for (const auto& f : drinfeld::module_structure(red, tor)) structure.push_back(ff::format_terms(f));
  ordered_json out{{"rho_T", module.rho_T().to_string()},
                   {"P", ff::format_terms(P)},
                   {"a", ff::format_terms(a)},
                   {"reduced_rho_T", red.rho_T().to_string()},
                   {"rank", red.rank()},
                   {"ambient_field", tor.ambient->describe()},
                   {"extension_degree", tor.extension_degree},
                   {"size", tor.points.size()},
                   {"invariant_factors", structure}};
  if (!a.is_constant()) {
    const ff::Poly u = drinfeld::frobenius_unit(red, tor);
    out["frobenius_unit"] = ff::format_terms(u);
    out["P_mod_a"] = ff::format_terms(P % a);
    out["unit_group_order"] = integer(ff::unit_group_order(a));
    out["frobenius_order"] = integer(ff::multiplicative_order(u, a));
  }
  return out;
}

ordered_json cmd_cluster(Options& o) {
  cluster::Seed seed = cluster::markov_seed();
  if (o.has("matrix")) {
    cluster::Matrix B;
    for (const auto& row : parse_matrix(o.str("matrix"))) {
      std::vector<long> r;
      for (const auto& e : row) {
        if (!e.fits_slong_p()) throw DomainError("exchange matrix entry too large");
        r.push_back(e.get_si());
      }
      B.push_back(r);
    }
    seed = cluster::Seed(B);
  }
  const std::size_t n = seed.rank();
  std::vector<std::size_t> word;
  const std::string word_text = o.str("word");
  if (!trim(word_text).empty())
    for (const auto& k : split(word_text, ',')) word.push_back(static_cast<std::size_t>(parse_long(k, 1, static_cast<long>(n), "direction")));
  const std::size_t max_length = static_cast<std::size_t>(parse_long(o.str("max-length"), 0, 64, "max-length"));
  if (word.size() > max_length)
    throw DomainError("word longer than max-length " + std::to_string(max_length));
  std::optional<std::vector<mpq_class>> values;
  if (o.has("specialize")) {
    values.emplace();
    for (const auto& v : split(o.str("specialize"), ',')) values->push_back(parse_mpq(v));
    if (values->size() != n) throw DomainError("specialize needs " + std::to_string(n) + " values");
  }
  const bool markov = cluster::same_seed(seed, cluster::markov_seed());

  auto snapshot = [&](const cluster::Seed& s, std::optional<std::size_t> k) {
    ordered_json step;
    step["direction"] = k ? ordered_json(*k) : ordered_json();
    ordered_json vars = ordered_json::array();
    bool laurent = true, positive = true;
    for (const auto& v : s.cluster()) {
      if (!v.is_laurent()) {
        laurent = positive = false;
        vars.push_back("(" + cluster::to_string(v.numerator) + ")/(" + cluster::to_string(v.denominator) + ")");
        continue;
      }
      const auto f = v.as_laurent();
      positive = positive && f.has_positive_coefficients();
      vars.push_back(cluster::to_string(f));
    }
    step["cluster"] = vars;
    step["laurent"] = laurent;
    step["positive_coefficients"] = positive;
    if (values && laurent) {
      ordered_json vals = ordered_json::array();
      std::vector<mpq_class> xs;
      for (const auto& v : s.cluster()) {
        xs.push_back(cluster::specialize(v.as_laurent(), *values));
        vals.push_back(xs.back().get_str());
      }
      step["values"] = vals;
      if (markov) {
        const mpq_class lhs = xs[0] * xs[0] + xs[1] * xs[1] + xs[2] * xs[2];
        const mpq_class rhs = 3 * xs[0] * xs[1] * xs[2];
        step["markov_equation"] = lhs == rhs;
      }
    }
    return step;
  };

  ordered_json steps = ordered_json::array();
  steps.push_back(snapshot(seed, std::nullopt));
  for (std::size_t k : word) {
    seed = cluster::mutate(seed, k);
    steps.push_back(snapshot(seed, k));
  }
  std::vector<std::vector<mpz_class>> B;
  for (const auto& row : seed.exchange_matrix()) {
    std::vector<mpz_class> r;
    for (long e : row) r.emplace_back(e);
    B.push_back(r);
  }
  return {{"markov_seed", markov}, {"steps", steps}, {"final_exchange_matrix", matrix_json(B)}};
}

ordered_json cmd_torus(Options& o) {
  const long digits = parse_digits(o.str("digits"), 1);
  const auto theta = nc_torus::QuadraticSurd::parse(o.str("theta"));
  const auto cf = nc_torus::cf_expand(theta);
  const std::size_t count = static_cast<std::size_t>(parse_long(o.str("convergents"), 0, 10000, "convergents"));
  ordered_json conv = ordered_json::array();
  for (const auto& c : nc_torus::convergents(cf, count)) conv.push_back(c.get_str());
  ordered_json out{{"theta", nc_torus::to_string(theta)},
                   {"continued_fraction", nc_torus::to_string(cf)},
                   {"convergents", conv}};
  std::size_t depth = static_cast<std::size_t>(parse_long(o.str("depth"), 0, 10000, "depth"));
  if (const auto len = cf.length()) depth = std::min(depth, *len - 1);
  const auto es = nc_torus::effros_shen(cf, depth);
  ordered_json mats = ordered_json::array();
  for (const auto& m : es.matrices) mats.push_back(matrix2_json(m));
  out["effros_shen"] = {{"depth", depth}, {"matrices", mats}, {"stationary", es.stationary}};
  if (o.has("theta2")) {
    const auto other = nc_torus::QuadraticSurd::parse(o.str("theta2"));
    const auto m = nc_torus::morita_equivalent(theta, other);
    out["morita"] = {{"theta2", nc_torus::to_string(other)},
                     {"gl2_equivalent", m.equivalent},
                     {"sl2_equivalent", m.sl2_equivalent},
                     {"witness", m.witness ? matrix2_json(*m.witness) : ordered_json()},
                     {"sl2_witness", m.sl2_witness ? matrix2_json(*m.sl2_witness) : ordered_json()}};
  }
  if (o.has("matrix")) {
    const auto rows = parse_matrix(o.str("matrix"));
    if (rows.size() != 2 || rows[0].size() != 2 || rows[1].size() != 2) throw DomainError("matrix must be 2x2");
    const nc_torus::Matrix2 M{{{rows[0][0], rows[0][1]}, {rows[1][0], rows[1][1]}}};
    const auto c = nc_torus::connes_invariant(M, bignum::bits_for_digits(digits) + 32);
    out["connes"] = {{"matrix", matrix2_json(M)},
                     {"lambda", nc_torus::to_string(c.lambda)},
                     {"log_lambda", decimal(c.log_lambda, digits)}};
  }
  return out;
}

ordered_json cmd_pell(Options& o) {
  const mpz_class D = parse_mpz(o.str("D"));
  const mpz_class cap = parse_mpz(o.str("cap"));
  if (cap < 0) throw DomainError("cap must be non-negative");
  const auto s = class_field::pell_fundamental(D, cap);
  return {{"D", integer(D)},
          {"a", integer(s.a)},
          {"b", integer(s.b)},
          {"norm", s.norm},
          {"epsilon", nc_torus::to_string(s.epsilon)},
          {"verified_below_b", integer(s.verified_below)}};
}

ordered_json cmd_pf(Options& o) {
  const long digits = parse_digits(o.str("digits"), 1);
  if (o.given("matrix") && o.given("companion")) throw DomainError("give at most one of --matrix and --companion");
  class_field::IntMatrix M;
  if (!o.has("companion")) {
    M = parse_matrix(o.str("matrix"));
  } else {
    o.unset("matrix");
    std::vector<mpz_class> coeffs;
    for (const auto& c : split(o.str("companion"), ',')) coeffs.push_back(parse_mpz(c));
    M = class_field::companion_matrix(coeffs).entries;
  }
  const auto pf = class_field::perron_frobenius(M, bignum::bits_for_digits(digits) + 16);
  return {{"matrix", matrix_json(M)},
          {"charpoly", lattice::format_poly(class_field::charpoly(M))},
          {"eigenvalue", decimal(pf.value, digits)},
          {"bracket", {decimal(pf.lower, digits), decimal(pf.upper, digits)}},
          {"root_isolation", decimal(pf.bisection, digits)},
          {"squarings", pf.squarings}};
}

// Complex expressions: numbers, i, sqrt(real), + - * / and parentheses;
// juxtaposition multiplies ("2i", "3sqrt(2)").
class TauParser {
 public:
  TauParser(std::string_view text, bignum::Precision prec) : s_(text), prec_(prec) {}

  BigComplex parse() {
    BigComplex v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("tau: " + why + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  BigComplex real(const BigFloat& x) const { return {x, BigFloat(0L, prec_)}; }

  BigComplex expr() {
    BigComplex v = term();
    for (;;) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }
  BigComplex term() {
    BigComplex v = unary();
    for (;;) {
      skip();
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        const BigComplex d = unary();
        if (d.re().sign() == 0 && d.im().sign() == 0) fail("division by zero");
        v = v / d;
      } else if (pos_ < s_.size() && (s_[pos_] == 'i' || s_[pos_] == 's' || s_[pos_] == '(')) {
        v *= primary();
      } else {
        return v;
      }
    }
  }
  BigComplex unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return primary();
  }
  BigComplex primary() {
    skip();
    if (eat('(')) {
      BigComplex v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (s_.substr(pos_, 4) == "sqrt") {
      pos_ += 4;
      if (!eat('(')) fail("expected '(' after sqrt");
      const BigComplex v = expr();
      if (!eat(')')) fail("expected ')'");
      if (v.im().sign() != 0) fail("sqrt of a non-real number");
      if (v.re().sign() >= 0) return real(bignum::sqrt(v.re()));
      return {BigFloat(0L, prec_), bignum::sqrt(-v.re())};
    }
    if (pos_ < s_.size() && s_[pos_] == 'i') {
      ++pos_;
      return {BigFloat(0L, prec_), BigFloat(1L, prec_)};
    }
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
    if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E') && pos_ + 1 < s_.size() &&
        (std::isdigit(static_cast<unsigned char>(s_[pos_ + 1])) || s_[pos_ + 1] == '-' || s_[pos_ + 1] == '+')) {
      pos_ += 2;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    if (start == pos_) fail("expected a number, i, sqrt( or (");
    return real(BigFloat::parse(s_.substr(start, pos_ - start), prec_));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  bignum::Precision prec_;
};

ordered_json cmd_jinv(Options& o) {
  const long digits = parse_digits(o.str("digits"), 1);
  const BigComplex tau = TauParser(o.str("tau"), bignum::bits_for_digits(digits) + 128).parse();
  const BigComplex j = class_field::j_invariant(tau, digits);
  const mpz_class nearest = j.re().round_to_integer();
  const BigFloat distance = (j.re() - BigFloat(nearest, j.re().precision())).abs();
  const BigFloat off_axis = j.im().abs();
  return {{"tau", {{"re", decimal(tau.re(), digits)}, {"im", decimal(tau.im(), digits)}}},
          {"j", {{"re", decimal(j.re(), digits)}, {"im", decimal(j.im(), digits)}}},
          {"nearest_integer", nearest.get_str()},
          {"distance_to_nearest_integer", (distance > off_axis ? distance : off_axis).to_string(6)}};
}

class_field::DiscConvention convention_of(Options& o) {
  const std::string c = o.str("disc-convention");
  if (c == "D") return class_field::DiscConvention::kFundamental;
  if (c == "4D") return class_field::DiscConvention::kFourD;
  throw DomainError("disc-convention must be D or 4D");
}

ordered_json forms_json(const std::vector<class_field::QuadraticForm>& forms) {
  ordered_json out = ordered_json::array();
  for (const auto& f : forms) out.push_back({integer(f.a), integer(f.b), integer(f.c)});
  return out;
}

ordered_json cmd_hcf(Options& o) {
  const long digits = parse_digits(o.str("digits"), 2);
  const auto convention = convention_of(o);
  const mpz_class disc = o.has("disc") ? parse_mpz(o.str("disc"))
                                       : class_field::discriminant_for(parse_mpz(o.str("D")), convention);
  const auto h = class_field::hilbert_class_poly(disc, digits);
  return {{"disc", integer(disc)},
          {"class_number", h.forms.size()},
          {"forms", forms_json(h.forms)},
          {"polynomial", lattice::format_poly(h.coefficients)},
          {"residual", h.residual.to_string(6)},
          {"residual_gate", "1e-" + std::to_string(digits / 2)}};
}

ordered_json cmd_corollary12(Options& o) {
  const mpz_class D = parse_mpz(o.str("D"));
  const long digits = parse_digits(o.str("digits"), 10);
  const long max_degree = parse_long(o.str("max-degree"), 1, 64, "max-degree");
  const mpz_class height = parse_mpz(o.str("height"));
  if (height < 1) throw DomainError("height must be positive");
  const auto report = class_field::corollary12_experiment(D, digits, static_cast<std::size_t>(max_degree), height,
                                                          convention_of(o));
  return ordered_json::parse(class_field::report_to_json(report));
}

using Handler = ordered_json (*)(Options&);

const std::map<std::string, Handler, std::less<>> kHandlers = {
    {"fermat", cmd_fermat}, {"factor", cmd_factor}, {"carlitz", cmd_carlitz}, {"torsion", cmd_torsion},
    {"cluster", cmd_cluster}, {"torus", cmd_torus}, {"pell", cmd_pell}, {"pf", cmd_pf},
    {"jinv", cmd_jinv}, {"hcf", cmd_hcf}, {"corollary12", cmd_corollary12},
};

void flatten(const ordered_json& node, const std::string& path, std::ostringstream& out) {
  if (node.is_object()) {
    for (const auto& [k, v] : node.items()) flatten(v, path.empty() ? k : path + "." + k, out);
  } else if (node.is_array() && !node.empty() && (node[0].is_object() || node[0].is_array())) {
    for (std::size_t i = 0; i < node.size(); ++i) flatten(node[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out << path << "  " << (node.is_string() ? node.get<std::string>() : node.dump()) << "\n";
  }
}

}  // namespace

const std::vector<CommandInfo>& catalog() { return kCatalog; }

ordered_json run(std::string_view name, const json& options) {
  const auto info = std::find_if(kCatalog.begin(), kCatalog.end(), [&](const CommandInfo& c) { return c.name == name; });
  if (info == kCatalog.end()) throw UsageError("unknown command '" + std::string(name) + "'");
  Options opts(*info, options);
  ordered_json result = kHandlers.find(name)->second(opts);
  ordered_json doc;
  doc["command"] = info->name;
  doc["version"] = kVersion;
  doc["config"] = opts.config();
  doc["result"] = std::move(result);
  return doc;
}

std::string render_table(const ordered_json& doc) {
  std::ostringstream out;
  flatten(doc, "", out);
  return out.str();
}

}  // namespace ncarith::commands

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

#include "ncarith/twisted.hpp"

#include <cctype>

namespace ncarith::twisted {

namespace {

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

struct ParsedText {
  std::vector<std::pair<std::size_t, std::string>> terms;  // (power, coefficient text)
  mpz_class twist;
  std::string base;
};

ParsedText split_text(std::string_view text) {
  const std::string s(text);
  const std::size_t tw = s.rfind("[twist=");
  const std::size_t over = s.rfind("] over ");
  if (tw == std::string::npos || over == std::string::npos || over < tw) {
    throw ParseError("twisted polynomial needs '[twist=p^k] over <base>'");
  }
  ParsedText out;
  out.base = s.substr(over + 7);
  const std::string spec = strip_spaces(s.substr(tw + 7, over - tw - 7));
  const std::size_t caret = spec.find('^');
  if (caret == std::string::npos) throw ParseError("twist must read p^k");
  try {
    mpz_class p(spec.substr(0, caret));
    mpz_pow_ui(out.twist.get_mpz_t(), p.get_mpz_t(), std::stoul(spec.substr(caret + 1)));
  } catch (const std::exception&) {
    throw ParseError("bad twist '" + spec + "'");
  }

  const std::string body = strip_spaces(s.substr(0, tw));
  if (body.empty()) throw ParseError("empty twisted polynomial");
  if (body == "0") return out;
  int depth = 0;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) throw ParseError("dangling '+' in twisted polynomial");
    std::size_t power = 0;
    std::string coef = cur;
    // The tau symbol is the last top-level 't'.
    int d = 0;
    std::size_t tpos = std::string::npos;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      if (cur[i] == '(' || cur[i] == '[') ++d;
      if (cur[i] == ')' || cur[i] == ']') --d;
      if (d == 0 && cur[i] == 't') tpos = i;
    }
    if (tpos != std::string::npos) {
      coef = cur.substr(0, tpos);
      if (!coef.empty()) {
        if (coef.back() != '*') throw ParseError("expected '*' before t in '" + cur + "'");
        coef.pop_back();
      }
      const std::string rest = cur.substr(tpos + 1);
      if (rest.empty()) {
        power = 1;
      } else if (rest.front() == '^') {
        try {
          power = std::stoul(rest.substr(1));
        } catch (const std::exception&) {
          throw ParseError("bad tau exponent in '" + cur + "'");
        }
      } else {
        throw ParseError("unexpected text after t in '" + cur + "'");
      }
    }
    out.terms.emplace_back(power, coef);
    cur.clear();
  };
  for (char c : body) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (depth == 0 && c == '+') {
      flush();
      continue;
    }
    cur += c;
  }
  flush();
  return out;
}

template <class Ring>
TwistedPoly<Ring> assemble(const Ring& ring, const ParsedText& parsed,
                           const typename Ring::Value& one) {
  std::size_t top = 0;
  for (const auto& [k, c] : parsed.terms) top = std::max(top, k);
  std::vector<typename Ring::Value> cs(parsed.terms.empty() ? 0 : top + 1, ring.zero());
  for (const auto& [k, c] : parsed.terms) cs[k] = ring.add(cs[k], c.empty() ? one : ring.parse(c));
  return TwistedPoly<Ring>(ring, parsed.twist, std::move(cs));
}

}  // namespace

bool is_power_of(const mpz_class& t, std::uint32_t p) {
  if (t <= 1 || p < 2) return false;
  mpz_class r = t;
  while (r % p == 0) r /= p;
  return r == 1;
}

PolyRing::Value PolyRing::pow(const Value& a, const mpz_class& e) const {
  if (!e.fits_ulong_p()) throw ResourceError("twist exponent too large for polynomial coefficients");
  const std::uint32_t p = base->characteristic();
  if (!is_power_of(e, p)) return ff::pow(a, e.get_ui());
  // a(T)^{p^k}: Frobenius on each coefficient, T^i -> T^{i p}.
  Value out = a;
  for (mpz_class rest = e; rest > 1; rest /= p) {
    std::vector<ff::Coords> cs(out.coeffs().empty() ? 0 : (out.coeffs().size() - 1) * p + 1, base->zero());
    for (std::size_t i = 0; i < out.coeffs().size(); ++i) cs[i * p] = base->pow(out.coeffs()[i], p);
    out = Value(base, std::move(cs));
  }
  return out;
}

std::string PolyRing::format(const Value& v) const { return "(" + ff::format_terms(v) + ")"; }

PolyRing::Value PolyRing::parse(std::string_view text) const {
  std::string s = strip_spaces(text);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  return ff::parse_poly(s, base);
}

std::string PolyRing::describe() const { return base->describe() + "[T]"; }

ff::Coords evaluate(const FieldTwistedPoly& f, const ff::Field& ambient, const ff::Coords& x) {
  const ff::Field& K = *f.ring().field;
  if (!ambient.contains(K)) throw DomainError("evaluation point is not in an extension of the coefficient field");
  ff::Coords acc = ambient.zero();
  ff::Coords power = x;  // x^{t^i}
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i > 0) power = ambient.pow(power, f.twist());
    if (K.is_zero(f.coeffs()[i])) continue;
    acc = ambient.add(acc, ambient.mul(ambient.embed(K, f.coeffs()[i]), power));
  }
  return acc;
}

ff::Elem evaluate(const FieldTwistedPoly& f, const ff::Elem& x) {
  return ff::Elem(x.field(), evaluate(f, *x.field(), x.coords()));
}

FieldTwistedPoly reduce_mod(const APoly& f, const ff::Poly& P, bool p_twist) {
  if (!ff::same_field(P.field(), f.ring().base)) throw DomainError("reduction modulus over a different field");
  if (P.is_constant()) throw DomainError("reduction modulus must be nonconstant");
  const ff::FieldPtr K = ff::Field::extension(f.ring().base, P.monic());
  std::vector<ff::Coords> cs;
  cs.reserve(f.coeffs().size());
  for (const auto& a : f.coeffs()) cs.push_back(ff::to_residue(K, a));
  mpz_class twist = f.twist();
  if (p_twist) twist = K->order();
  return FieldTwistedPoly(FieldRing{K}, twist, std::move(cs));
}

APoly parse_over_A(std::string_view text) {
  const ParsedText parsed = split_text(text);
  const std::string base = strip_spaces(parsed.base);
  if (base.size() < 3 || base.substr(base.size() - 3) != "[T]") {
    throw ParseError("base '" + base + "' is not a polynomial ring GF(q)[T]");
  }
  const PolyRing ring{ff::parse_field(base.substr(0, base.size() - 3))};
  return assemble(ring, parsed, ff::Poly::constant(ring.base, ring.base->one()));
}

FieldTwistedPoly parse_over_field(std::string_view text) {
  const ParsedText parsed = split_text(text);
  const FieldRing ring{ff::parse_field(parsed.base)};
  return assemble(ring, parsed, ring.field->one());
}

}  // namespace ncarith::twisted

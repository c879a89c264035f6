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

#include "ncarith/drinfeld.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "ncarith/errors.hpp"

namespace ncarith::drinfeld {

using twisted::APoly;
using twisted::FieldRing;
using twisted::FieldTwistedPoly;
using twisted::PolyRing;

namespace {

// Basis of {v : sum_c v_c * columns[c] = 0} over F_p; columns have `rows`
// entries.
std::vector<std::vector<std::uint32_t>> kernel_mod_p(const std::vector<ff::Coords>& columns, std::size_t rows,
                                                     std::uint32_t p) {
  const std::size_t cols = columns.size();
  std::vector<std::vector<std::uint64_t>> m(rows, std::vector<std::uint64_t>(cols));
  for (std::size_t c = 0; c < cols; ++c) {
    for (std::size_t r = 0; r < rows; ++r) m[r][c] = columns[c][r];
  }
  auto inv = [p](std::uint64_t a) {
    std::uint64_t r = 1;
    std::uint64_t e = p - 2;
    while (e) {
      if (e & 1) r = r * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return r;
  };
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < rows; ++c) {
    std::size_t sel = row;
    while (sel < rows && m[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[row]);
    const std::uint64_t s = inv(m[row][c]);
    for (auto& v : m[row]) v = v * s % p;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m[r][c] == 0) continue;
      const std::uint64_t f = m[r][c];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] = (m[r][k] + (p - f) * m[row][k]) % p;
    }
    pivot_cols.push_back(c);
    ++row;
  }
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<std::uint32_t>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint32_t> v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
      v[pivot_cols[i]] = static_cast<std::uint32_t>((p - m[i][free]) % p);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class Ring, class Embed>
twisted::TwistedPoly<Ring> horner(const twisted::TwistedPoly<Ring>& rho_T, const ff::Poly& a, Embed embed) {
  using TP = twisted::TwistedPoly<Ring>;
  TP acc(rho_T.ring(), rho_T.twist());
  for (std::size_t k = a.coeffs().size(); k-- > 0;) {
    acc = rho_T * acc + TP::constant(rho_T.ring(), rho_T.twist(), embed(a.coeffs()[k]));
  }
  return acc;
}

std::size_t dim_over_fp(const ReducedModule& module, std::size_t tau_degree_factor, std::size_t deg) {
  return module.base()->degree() * tau_degree_factor * deg;
}

// F_p-dimension of the kernel of rho_b restricted to the span of `basis`.
std::size_t restricted_kernel_dim(const ReducedModule& module, const TorsionModule& t, const ff::Poly& b) {
  const FieldTwistedPoly rb = module.rho(b);
  std::vector<ff::Coords> images;
  images.reserve(t.basis.size());
  for (const auto& v : t.basis) images.push_back(twisted::evaluate(rb, *t.ambient, v));
  return kernel_mod_p(images, t.ambient->degree(), t.ambient->characteristic()).size();
}

}  // namespace

DrinfeldModule::DrinfeldModule(APoly rho_T) : rho_T_(std::move(rho_T)) {
  const ff::FieldPtr& F = rho_T_.ring().base;
  if (rho_T_.twist() != F->order()) throw DomainError("Drinfeld module twist must be the q-Frobenius");
  if (!(rho_T_.coeff(0) == ff::Poly::x(F))) throw DomainError("constant term of rho_T must be T");
}

APoly DrinfeldModule::rho(const ff::Poly& a) const {
  if (!ff::same_field(a.field(), base())) throw DomainError("rho: polynomial over a different field");
  return horner(rho_T_, a, [&](const ff::Coords& c) { return ff::Poly::constant(base(), c); });
}

DrinfeldModule carlitz(std::uint64_t q) {
  const ff::FieldPtr F = ff::field_for_order(q);
  const PolyRing ring{F};
  std::vector<ff::Poly> cs{ff::Poly::x(F), ff::Poly::constant(F, F->one())};
  return DrinfeldModule(APoly(ring, F->order(), std::move(cs)));
}

ReducedModule::ReducedModule(ff::FieldPtr base, ff::Poly prime, FieldTwistedPoly rho_T)
    : base_(std::move(base)), prime_(std::move(prime)), rho_T_(std::move(rho_T)) {}

FieldTwistedPoly ReducedModule::rho(const ff::Poly& a) const {
  if (!ff::same_field(a.field(), base_)) throw DomainError("rho: polynomial over a different field");
  const ff::Field& K = *residue_field();
  return horner(rho_T_, a, [&](const ff::Coords& c) { return K.embed(*base_, c); });
}

ReducedModule reduce(const DrinfeldModule& module, const ff::Poly& P) {
  if (!ff::same_field(P.field(), module.base())) throw DomainError("reduce: prime over a different field");
  if (P.is_constant() || !ff::is_irreducible(P)) throw DomainError("reduce: P must be irreducible");
  FieldTwistedPoly reduced = twisted::reduce_mod(module.rho_T(), P.monic());
  if (reduced.tau_degree().value_or(0) != module.rank()) {
    throw DomainError("bad reduction: top tau-coefficient vanishes modulo P");
  }
  return ReducedModule(module.base(), P.monic(), std::move(reduced));
}

std::size_t default_dimension_cap(std::uint32_t p) {
  return static_cast<std::size_t>(std::floor(24.0 * std::log2(static_cast<double>(p))));
}

TorsionModule torsion(const ReducedModule& module, const ff::Poly& a, std::size_t dimension_cap) {
  if (!ff::same_field(a.field(), module.base())) throw DomainError("torsion: polynomial over a different field");
  if (a.is_zero()) throw DomainError("torsion: a must be nonzero");
  if (!ff::gcd(a, module.prime()).is_one()) throw DomainError("torsion: gcd(a, P) must be 1");
  const ff::FieldPtr& K = module.residue_field();
  const std::uint32_t p = K->characteristic();
  if (dimension_cap == 0) dimension_cap = default_dimension_cap(p);
  const std::size_t expected = dim_over_fp(module, module.rank(), *a.degree());
  const FieldTwistedPoly rho_a = module.rho(a);

  for (std::size_t m = 1;; ++m) {
    const std::size_t N = K->degree() * m;
    if (N > dimension_cap) {
      throw ResourceError("torsion: ambient field of F_p-dimension " + std::to_string(N) + " exceeds the cap " +
                          std::to_string(dimension_cap));
    }
    const ff::FieldPtr L = m == 1 ? K : ff::Field::extension(K, ff::least_irreducible(K, static_cast<unsigned>(m)));
    std::vector<ff::Coords> images;
    images.reserve(N);
    for (std::size_t j = 0; j < N; ++j) {
      ff::Coords e(N, 0);
      e[j] = 1;
      images.push_back(twisted::evaluate(rho_a, *L, e));
    }
    auto kernel = kernel_mod_p(images, N, p);
    if (kernel.size() > expected) throw ContractViolation("torsion: more roots than the degree of rho_a allows");
    if (kernel.size() < expected) continue;

    if (static_cast<double>(expected) * std::log2(static_cast<double>(p)) > 22.0) {
      throw ResourceError("torsion: too many points to enumerate");
    }
    TorsionModule out{L, m, a, {kernel.begin(), kernel.end()}, {}};
    std::size_t count = 1;
    for (std::size_t i = 0; i < expected; ++i) count *= p;
    out.points.reserve(count);
    for (std::size_t idx = 0; idx < count; ++idx) {
      ff::Coords pt = L->zero();
      std::size_t rest = idx;
      for (const auto& b : out.basis) {
        const std::uint32_t c = static_cast<std::uint32_t>(rest % p);
        rest /= p;
        if (c) pt = L->add(pt, L->scale_fp(b, c));
      }
      out.points.push_back(std::move(pt));
    }
    std::sort(out.points.begin(), out.points.end(),
              [&](const ff::Coords& x, const ff::Coords& y) { return L->index(x) < L->index(y); });
    return out;
  }
}

std::vector<std::size_t> action(const ReducedModule& module, const TorsionModule& t, const ff::Poly& b) {
  std::map<ff::Coords, std::size_t> where;
  for (std::size_t i = 0; i < t.points.size(); ++i) where.emplace(t.points[i], i);
  const FieldTwistedPoly rb = module.rho(b);
  std::vector<std::size_t> perm;
  perm.reserve(t.points.size());
  for (const auto& pt : t.points) {
    auto it = where.find(twisted::evaluate(rb, *t.ambient, pt));
    if (it == where.end()) throw ContractViolation("action: torsion points are not closed under rho_b");
    perm.push_back(it->second);
  }
  return perm;
}

std::vector<ff::Poly> module_structure(const ReducedModule& module, const TorsionModule& t) {
  const ff::Poly& a = t.annihilator;
  const std::size_t e = module.base()->degree();
  if (t.basis.size() != dim_over_fp(module, module.rank(), *a.degree())) {
    throw DomainError("module_structure: incomplete point set");
  }
  if (a.is_constant()) return {};
  std::vector<std::pair<ff::Poly, std::vector<unsigned>>> primary;  // prime -> exponents, descending
  std::size_t accounted = 0;
  for (const auto& [pi, mult] : ff::factor(a).factors) {
    const std::size_t unit = e * *pi.degree();
    std::vector<std::size_t> at_least(mult + 2, 0);  // #{components with exponent >= j}
    std::size_t prev = 0;
    for (unsigned j = 1; j <= mult; ++j) {
      const std::size_t dim = restricted_kernel_dim(module, t, ff::pow(pi, j));
      if (dim % unit != 0) throw ContractViolation("module_structure: kernel dimension is not a multiple of deg pi");
      const std::size_t s = dim / unit;
      at_least[j] = s - prev;
      prev = s;
    }
    accounted += prev * unit;
    std::vector<unsigned> exps;
    for (unsigned j = mult; j >= 1; --j) {
      for (std::size_t c = at_least[j] - at_least[j + 1]; c > 0; --c) exps.push_back(j);
    }
    primary.emplace_back(pi, std::move(exps));
  }
  if (accounted != t.basis.size()) throw ContractViolation("module_structure: primary parts do not add up");
  std::size_t count = 0;
  for (const auto& [pi, exps] : primary) count = std::max(count, exps.size());
  // Largest invariant factor takes the largest exponent of every prime.
  std::vector<ff::Poly> factors(count, ff::Poly::constant(module.base(), module.base()->one()));
  for (const auto& [pi, exps] : primary) {
    for (std::size_t k = 0; k < exps.size(); ++k) factors[count - 1 - k] = factors[count - 1 - k] * ff::pow(pi, exps[k]);
  }
  return factors;
}

ff::Poly frobenius_unit(const ReducedModule& module, const TorsionModule& t) {
  const ff::Poly& a = t.annihilator;
  const ff::FieldPtr& F = module.base();
  const ff::Poly one = ff::Poly::constant(F, F->one());
  if (a.is_constant()) return one;
  const mpz_class& Q = module.residue_field()->order();
  std::vector<ff::Coords> frob;
  frob.reserve(t.basis.size());
  for (const auto& b : t.basis) frob.push_back(t.ambient->pow(b, Q));
  const std::size_t n = *a.degree();
  mpz_class count;
  mpz_pow_ui(count.get_mpz_t(), F->order().get_mpz_t(), n);
  for (mpz_class idx = 1; idx < count; ++idx) {
    std::vector<ff::Coords> cs(n);
    mpz_class rest = idx;
    for (std::size_t k = 0; k < n; ++k) {
      cs[k] = F->element(mpz_class(rest % F->order()));
      rest /= F->order();
    }
    const ff::Poly u(F, std::move(cs));
    if (!ff::gcd(u, a).is_one()) continue;
    const FieldTwistedPoly ru = module.rho(u);
    bool match = true;
    for (std::size_t i = 0; i < t.basis.size() && match; ++i) {
      match = twisted::evaluate(ru, *t.ambient, t.basis[i]) == frob[i];
    }
    if (match) return u;
  }
  throw ContractViolation("frobenius_unit: Frobenius does not act through any unit of A/(a)");
}

}  // namespace ncarith::drinfeld

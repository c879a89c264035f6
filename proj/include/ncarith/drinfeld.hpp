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

// Drinfeld modules rho: F_q[T] -> K<tau> with tau the q-Frobenius, their
// reductions at primes P of F_q[T], a-torsion and the Frobenius action on it.
//
// The module is fixed by rho_T, whose constant term is T (or its residue
// after reduction). tau acts as x -> x^q, so rho is F_q-linear; for prime q
// this is the p-Frobenius.

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "ncarith/ff_poly.hpp"
#include "ncarith/twisted.hpp"

namespace ncarith::drinfeld {

class DrinfeldModule {
 public:
  // Throws DomainError unless rho_T has constant term T and twist q.
  explicit DrinfeldModule(twisted::APoly rho_T);

  const ff::FieldPtr& base() const { return rho_T_.ring().base; }
  const twisted::APoly& rho_T() const { return rho_T_; }
  std::size_t rank() const { return *rho_T_.tau_degree(); }
  bool is_trivial() const { return rank() == 0; }

  // Image of a in A<tau>.
  twisted::APoly rho(const ff::Poly& a) const;

 private:
  twisted::APoly rho_T_;
};

// Carlitz module rho_T = T + tau over F_q[T].
DrinfeldModule carlitz(std::uint64_t q);

class ReducedModule {
 public:
  const ff::FieldPtr& base() const { return base_; }
  const ff::Poly& prime() const { return prime_; }
  // A/(P)
  const ff::FieldPtr& residue_field() const { return rho_T_.ring().field; }
  const twisted::FieldTwistedPoly& rho_T() const { return rho_T_; }
  std::size_t rank() const { return rho_T_.tau_degree().value_or(0); }
  bool is_trivial() const { return rank() == 0; }

  twisted::FieldTwistedPoly rho(const ff::Poly& a) const;

 private:
  friend ReducedModule reduce(const DrinfeldModule& module, const ff::Poly& P);
  ReducedModule(ff::FieldPtr base, ff::Poly prime, twisted::FieldTwistedPoly rho_T);

  ff::FieldPtr base_;
  ff::Poly prime_;
  twisted::FieldTwistedPoly rho_T_;
};

// Coefficientwise reduction modulo a monic irreducible P. Throws DomainError
// when P is reducible or the top tau-coefficient vanishes mod P.
ReducedModule reduce(const DrinfeldModule& module, const ff::Poly& P);

struct TorsionModule {
  ff::FieldPtr ambient;  // F_{Q^m}
  std::size_t extension_degree = 1;  // m
  ff::Poly annihilator;  // a
  std::vector<ff::Coords> basis;  // F_p-basis of the points
  std::vector<ff::Coords> points;  // sorted by element index
};

// Maximum F_p-dimension of the ambient field for torsion searches.
std::size_t default_dimension_cap(std::uint32_t p);

// All roots of rho_a in the smallest F_{Q^m} holding all q^{rank deg a} of
// them, found as the kernel of the F_p-linear map x -> rho_a(x). m grows
// 1, 2, 3, ... until the kernel is full. Throws DomainError when gcd(a, P) != 1
// and ResourceError when the ambient dimension would exceed `dimension_cap`.
TorsionModule torsion(const ReducedModule& module, const ff::Poly& a, std::size_t dimension_cap = 0);

// Index permutation of the points induced by x -> rho_b(x).
std::vector<std::size_t> action(const ReducedModule& module, const TorsionModule& torsion, const ff::Poly& b);

// Invariant factors d_1 | d_2 | ... (monic) of the torsion as an A-module.
// Throws DomainError when the point set is not the full a-torsion.
std::vector<ff::Poly> module_structure(const ReducedModule& module, const TorsionModule& torsion);

// The residue u mod a (degree < deg a) with x^{|A/(P)|} = rho_u(x) on every
// torsion point. Throws ContractViolation when no such unit exists.
ff::Poly frobenius_unit(const ReducedModule& module, const TorsionModule& torsion);

}  // namespace ncarith::drinfeld

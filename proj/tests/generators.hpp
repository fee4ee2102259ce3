#pragma once

#include <algorithm>
#include <random>
#include <string>

#include "motzeta/zeta.hpp"

namespace motzeta::testing {

inline IntVec unit(std::size_t n, std::size_t i) {
  IntVec v = zero_vec(n);
  v[i] = 1;
  return v;
}

inline MarkedMonoid marked(const std::vector<IntVec>& rays, const IntVec& e, const IntVec& a) {
  MarkedMonoid mm;
  mm.base = monoid_from_cone(cone_from_rays(e.size(), rays));
  mm.e_pi = e;
  mm.a_div = a;
  return mm;
}

// An integer vector a with <v, a> = 1 for every v in rows, plus a random
// element of their common kernel. Empty optional when no such a exists.
inline std::optional<IntVec> unit_on(std::mt19937& rng, std::size_t n, const std::vector<IntVec>& rows,
                                     long spread) {
  std::uniform_int_distribution<long> small(-spread, spread + 1);
  IntVec a(n);
  if (rows.empty()) {
    for (auto& x : a) x = small(rng);
    return a;
  }
  IntMat A = IntMat::from_rows(n, rows);
  auto sol = solve_integer(A, IntVec(rows.size(), Int(1)));
  if (!sol) return std::nullopt;
  a = *sol;
  for (const IntVec& k : integer_kernel(A)) a = add(a, scaled(k, Int(small(rng))));
  return a;
}

// Random marked monoid of rank r with ray entries bounded by entry, e in M
// nonzero, and a equal to 1 on every horizontal dual ray.
inline MarkedMonoid random_marked_monoid(std::mt19937& rng, std::size_t r, long entry) {
  std::uniform_int_distribution<long> dist(-entry, entry);
  std::uniform_int_distribution<long> coef(0, 2);
  std::uniform_int_distribution<int> extra(0, 2);
  while (true) {
    std::vector<IntVec> gens;
    const std::size_t count = r + static_cast<std::size_t>(extra(rng));
    for (std::size_t i = 0; i < count; ++i) {
      IntVec v(r);
      for (auto& x : v) x = dist(rng);
      gens.push_back(v);
    }
    Cone c = cone_from_rays(r, gens);
    if (!c.is_strictly_convex() || c.dim() != r) continue;
    IntVec e = zero_vec(r);
    for (const IntVec& v : c.rays()) e = add(e, scaled(v, Int(coef(rng))));
    if (is_zero(e)) continue;
    std::vector<IntVec> horizontal;
    const Cone dual = dual_cone(c);
    for (const IntVec& v : dual.rays())
      if (dot(v, e) == 0) horizontal.push_back(v);
    auto a = unit_on(rng, r, horizontal, 2);
    if (!a) continue;
    return marked(c.rays(), e, *a);
  }
}

// Random marked monoid of rank r whose dual cone, the cone summed over by
// cone_series, is spanned by rays with entries bounded by entry. e is a
// small nonzero lattice point of the monoid and a is small and legal on
// horizontals.
inline MarkedMonoid random_marked_monoid_by_dual(std::mt19937& rng, std::size_t r, long entry) {
  std::uniform_int_distribution<long> dist(-entry, entry);
  std::uniform_int_distribution<long> small(-3, 3);
  std::uniform_int_distribution<int> extra(0, 2);
  while (true) {
    std::vector<IntVec> gens;
    const std::size_t count = r + static_cast<std::size_t>(extra(rng));
    for (std::size_t i = 0; i < count; ++i) {
      IntVec v(r);
      for (auto& x : v) x = dist(rng);
      gens.push_back(v);
    }
    Cone sigma_dual = cone_from_rays(r, gens);
    if (!sigma_dual.is_strictly_convex() || sigma_dual.dim() != r) continue;
    Cone sigma = dual_cone(sigma_dual);
    IntVec e;
    for (int attempt = 0; attempt < 200 && e.empty(); ++attempt) {
      IntVec x(r);
      for (auto& v : x) v = small(rng);
      if (!is_zero(x) && sigma.contains(x)) e = x;
    }
    if (e.empty()) continue;
    std::vector<IntVec> horizontal;
    for (const IntVec& v : sigma_dual.rays())
      if (dot(v, e) == 0) horizontal.push_back(v);
    auto a = unit_on(rng, r, horizontal, 1);
    if (!a || std::any_of(a->begin(), a->end(), [](const Int& x) { return abs(x) > 4; })) continue;
    return marked(sigma.rays(), e, *a);
  }
}

inline SncdData random_sncd(std::mt19937& rng, std::size_t k, bool with_nu, bool all_strata = false) {
  std::uniform_int_distribution<long> Nd(1, 4), mud(-2, 4), nud(1, 5);
  std::uniform_int_distribution<int> coin(0, 3);
  SncdData d;
  d.m = std::uniform_int_distribution<long>(0, 3)(rng);
  for (std::size_t i = 0; i < k; ++i) {
    SncdComponent c;
    c.id = "E" + std::to_string(i + 1);
    c.N = Nd(rng);
    c.mu = mud(rng);
    if (with_nu) c.nu = nud(rng);
    d.components.push_back(c);
  }
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    if (!all_strata && coin(rng) == 0 && mask != (1u << k) - 1) continue;
    SncdStratum s;
    std::string sym = "E";
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1u << i)) {
        s.J.push_back("E" + std::to_string(i + 1));
        sym += std::to_string(i + 1);
      }
    s.symbol = sym;
    d.strata.push_back(s);
  }
  return d;
}

// Random valid fan model of rank r: a random cone, a few star subdivisions,
// random weights (L - 1)^{dim - 1} [U_i] and global functionals e, a.
inline FanModel random_fan_model(std::mt19937& rng, std::size_t r) {
  std::uniform_int_distribution<long> dist(-1, 2);
  std::uniform_int_distribution<long> coef(0, 2);
  std::uniform_int_distribution<int> pick(0, 99);
  while (true) {
    std::vector<IntVec> gens;
    for (std::size_t i = 0; i < r + static_cast<std::size_t>(pick(rng) % 2); ++i) {
      IntVec v(r);
      for (auto& x : v) x = dist(rng);
      gens.push_back(v);
    }
    Cone c = cone_from_rays(r, gens);
    if (!c.is_strictly_convex() || c.dim() != r) continue;
    ConeComplex K = ConeComplex::from_cones(r, {c});
    const int stars = pick(rng) % 3;
    for (int s = 0; s < stars; ++s) {
      IntVec rho = zero_vec(r);
      for (const IntVec& v : c.rays()) rho = add(rho, scaled(v, Int(coef(rng))));
      if (is_zero(rho)) continue;
      K = star_subdivision(K, primitive(rho));
    }
    IntVec e = zero_vec(r);
    for (const IntVec& u : c.facets()) e = add(e, scaled(u, Int(coef(rng))));
    if (is_zero(e)) continue;
    std::vector<IntVec> horizontal;
    for (const IntVec& v : K.rays())
      if (dot(v, e) == 0) horizontal.push_back(v);
    auto a = unit_on(rng, r, horizontal, 2);
    if (!a) continue;
    std::map<Cone, MClass> weights;
    for (std::size_t i = 0; i < K.cells().size(); ++i) {
      const Cone& cell = K.cells()[i];
      if (cell.dim() == 0 || pick(rng) < 15) continue;
      MClass w = MClass::symbol("U" + std::to_string(i), MCoeff(LaurentPoly::L_minus_1().pow(cell.dim() - 1)));
      weights[cell] = w;
    }
    FanModel f = make_fan_model(K, weights, {e}, {*a});
    if (validate_model(f).empty()) return f;
  }
}

}  // namespace motzeta::testing

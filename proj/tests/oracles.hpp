#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <string>

#include "motzeta/newton.hpp"

namespace motzeta::testing {

// Enumerate Z^n points in [lo, hi]^n.
template <class F>
void for_box(std::size_t n, long lo, long hi, F&& f) {
  IntVec x(n, Int(lo));
  while (true) {
    f(x);
    std::size_t i = 0;
    while (i < n && x[i] == hi) x[i++] = lo;
    if (i == n) return;
    x[i] += 1;
  }
}

// Membership of a lattice point in the point set of a half-open piece.
inline bool in_piece(const HalfOpenCone& h, const IntVec& x) {
  IntMat G = IntMat::from_columns(h.ambient_rank, h.gens);
  auto lambda = solve_rational(G, x);
  if (!lambda) return false;
  for (std::size_t j = 0; j < h.gens.size(); ++j)
    if (h.strict[j] ? (*lambda)[j] <= 0 : (*lambda)[j] < 0) return false;
  return true;
}

inline Int sigma(const IntVec& u) {
  Int s = 0;
  for (const Int& x : u) s += x;
  return s;
}

// Expansion of cone_series(mm, weight) against the direct sum over the
// lattice points of the dual relative interior. When e_pi is interior the
// point set up to degree D is finite and the comparison is exact; otherwise
// both sides are compared L-adically at exponents >= -A. Returns an empty
// string on agreement.
inline std::string cone_series_mismatch(const MarkedMonoid& mm, const MClass& weight, long D, long A) {
  const bool finite = mm.base.cone.relint_contains(mm.e_pi);
  std::vector<MClass> got = expand(cone_series(mm, weight), D);
  std::vector<LaurentPoly> brute(D + 1);
  const std::optional<Int> a_bound = finite ? std::nullopt : std::optional<Int>(Int(A));
  for (const IntVec& u : local_dual_points(mm, Int(D), a_bound)) {
    long d = dot(u, mm.e_pi).get_si();
    brute[d] = brute[d] + LaurentPoly::monomial(1, -dot(u, mm.a_div).get_si());
  }
  long top = 0;
  for (const auto& [sym, c] : weight.terms())
    for (const auto& [e, k] : c.num().terms()) top = std::max(top, e);
  for (long d = 1; d <= D; ++d) {
    const MClass want = weight * MCoeff(brute[d]);
    const bool same = finite ? got[d - 1] == want
                             : truncated_expansion(got[d - 1], -A + top) == truncated_expansion(want, -A + top);
    if (!same) return "degree " + std::to_string(d) + ": " + got[d - 1].to_string() + " vs " + want.to_string();
  }
  return "";
}

// Coefficient of T^deg of the sncd Poincare series by enumerating k_j >= 1
// with sum k_j N_j = deg.
inline MClass sncd_coefficient(const SncdData& d, long deg) {
  MClass total;
  std::map<std::string, SncdComponent> by_id;
  for (const auto& c : d.components) by_id[c.id] = c;
  for (const SncdStratum& s : d.strata) {
    std::vector<SncdComponent> cs;
    for (const auto& id : s.J) cs.push_back(by_id[id]);
    LaurentPoly acc;
    std::function<void(std::size_t, long, long)> rec = [&](std::size_t j, long t, long l) {
      if (j == cs.size()) {
        if (t == deg) acc = acc + LaurentPoly::monomial(1, l);
        return;
      }
      for (long kj = 1; t + kj * cs[j].N <= deg; ++kj) rec(j + 1, t + kj * cs[j].N, l - kj * *cs[j].mu);
    };
    rec(0, 0, -d.m);
    total += MClass::symbol(s.symbol, MCoeff(acc * LaurentPoly::L_minus_1().pow(s.J.size() - 1)));
  }
  return total;
}

// Direct summation of the Newton zeta function over u in N^n and k >= 1,
// each u attributed to the face read off from its argmin set and zero
// coordinates, compared L-adically down to L^-A in degrees 1..D.
inline std::string newton_zeta_mismatch(const NewtonInput& inp, long D, long A) {
  std::vector<FaceRecord> faces = newton_polyhedron(inp);
  std::map<std::pair<std::vector<IntVec>, std::vector<std::size_t>>, const FaceRecord*> by_key;
  for (const FaceRecord& f : faces) by_key[{f.argmin_support, f.recession_coords}] = &f;
  std::vector<MClass> brute(D + 1);
  std::string problem;
  for_box(inp.n, 0, A, [&](const IntVec& u) {
    long s = sigma(u).get_si();
    if (s > A || !problem.empty()) return;
    long m = newton_m(inp, u).get_si();
    std::vector<IntVec> argmin;
    for (const IntVec& w : inp.support)
      if (dot(u, w) == m) argmin.push_back(w);
    std::sort(argmin.begin(), argmin.end());
    std::vector<std::size_t> zeros;
    for (std::size_t i = 0; i < inp.n; ++i)
      if (u[i] == 0) zeros.push_back(i);
    auto it = by_key.find({argmin, zeros});
    if (it == by_key.end() || !it->second->normal_cone_closure.relint_contains(u)) {
      problem = "no face for " + to_string(u);
      return;
    }
    const FaceRecord& f = *it->second;
    if (m >= 1 && m <= D) brute[m] += MClass::symbol(f.symbol(1), MCoeff::L_power(-s));
    for (long k = 1; m + k <= D && s + k <= A; ++k)
      brute[m + k] += MClass::symbol(f.symbol(0), MCoeff::L_power(-s - k));
  });
  if (!problem.empty()) return problem;
  std::vector<MClass> got = expand(newton_zeta(inp), D);
  for (long d = 1; d <= D; ++d)
    if (truncated_expansion(got[d - 1], -A) != truncated_expansion(brute[d], -A))
      return "degree " + std::to_string(d) + ": " + got[d - 1].to_string() + " vs " + brute[d].to_string();
  return "";
}

}  // namespace motzeta::testing

#include "motzeta/zeta.hpp"

#include <algorithm>
#include <set>

namespace motzeta {

namespace {

std::string join_lines(const std::vector<std::string>& lines) {
  std::string out;
  for (const std::string& l : lines) out += (out.empty() ? "" : "; ") + l;
  return out;
}

// Position in maximal_cells() of a maximal cell containing each cell.
std::vector<std::size_t> owner_table(const ConeComplex& K) {
  std::vector<std::size_t> maxi = K.maximal_cells();
  std::vector<std::size_t> owner(K.cells().size(), maxi.size());
  for (std::size_t p = 0; p < maxi.size(); ++p)
    for (std::size_t j : K.faces_of(maxi[p]))
      if (owner[j] == maxi.size()) owner[j] = p;
  return owner;
}

MClass L1_power(std::size_t k) { return MClass(MCoeff(LaurentPoly::L_minus_1().pow(k))); }

// Sum over strata of (L - 1)^{|J| - 1} [E_J] prod L^{-w_j} T^{N_j} / (1 - L^{-w_j} T^{N_j}).
template <class Weight>
ZSeries sncd_sum(const SncdData& d, Weight&& w, const char* what) {
  std::map<std::string, const SncdComponent*> by_id;
  for (const SncdComponent& c : d.components) {
    if (c.N < 1) throw PreconditionError(std::string(what) + ": multiplicity of " + c.id + " must be positive");
    if (!by_id.emplace(c.id, &c).second)
      throw PreconditionError(std::string(what) + ": duplicate component id " + c.id);
  }
  std::set<std::set<std::string>> seen;
  ZSeries out;
  for (const SncdStratum& s : d.strata) {
    std::set<std::string> J(s.J.begin(), s.J.end());
    if (J.empty() || J.size() != s.J.size())
      throw PreconditionError(std::string(what) + ": stratum " + s.symbol + " needs distinct component ids");
    if (!seen.insert(J).second) throw PreconditionError(std::string(what) + ": stratum declared twice");
    long alpha = 0, beta = 0;
    std::vector<Denom> ds;
    for (const std::string& id : J) {
      auto it = by_id.find(id);
      if (it == by_id.end()) throw PreconditionError(std::string(what) + ": stratum references unknown component " + id);
      long wj = w(*it->second);
      alpha -= wj;
      beta += it->second->N;
      ds.push_back(Denom{-wj, it->second->N});
    }
    MClass c = MClass::symbol(s.symbol) * L1_power(J.size() - 1);
    out += ZSeries::term(c.scale_L(alpha), beta, ds);
  }
  return out;
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> diagnostics)
    : PreconditionError("invalid fan model: " + join_lines(diagnostics)), diagnostics_(std::move(diagnostics)) {}

const IntVec& FanModel::e_on(std::size_t i) const {
  std::vector<std::size_t> owner = owner_table(complex);
  if (i >= owner.size() || owner[i] >= e_vec.size()) throw PreconditionError("e_on: no functional for cell");
  return e_vec[owner[i]];
}

const IntVec& FanModel::a_on(std::size_t i) const {
  std::vector<std::size_t> owner = owner_table(complex);
  if (i >= owner.size() || owner[i] >= a_vec.size()) throw PreconditionError("a_on: no functional for cell");
  return a_vec[owner[i]];
}

FanModel make_fan_model(const ConeComplex& complex, const std::map<Cone, MClass>& weights,
                        const std::vector<IntVec>& e, const std::vector<IntVec>& a) {
  FanModel f;
  f.complex = complex;
  for (const auto& [c, w] : weights)
    if (complex.find(c) == complex.cells().size())
      throw PreconditionError("make_fan_model: weight given for a cone outside the complex");
  for (const Cone& c : complex.cells()) {
    auto it = weights.find(c);
    f.weight.push_back(it == weights.end() ? MClass() : it->second);
  }
  const std::size_t k = complex.maximal_cells().size();
  auto spread = [&](const std::vector<IntVec>& v, const char* name) {
    if (v.size() == 1) return std::vector<IntVec>(k, v[0]);
    if (v.size() != k)
      throw PreconditionError(std::string("make_fan_model: ") + name + " needs one vector per maximal cell");
    return v;
  };
  f.e_vec = spread(e, "e");
  f.a_vec = spread(a, "a");
  return f;
}

ZSeries sncd_poincare(const SncdData& d) {
  ZSeries s = sncd_sum(d, [](const SncdComponent& c) {
    if (!c.mu) throw PreconditionError("sncd_poincare: component " + c.id + " has no mu");
    return *c.mu;
  }, "sncd_poincare");
  return s.scale(MClass(MCoeff::L_power(-d.m)));
}

ZSeries dl_zeta(const SncdData& d) {
  return sncd_sum(d, [](const SncdComponent& c) {
    if (!c.nu) throw PreconditionError("dl_zeta: component " + c.id + " has no nu");
    return *c.nu;
  }, "dl_zeta");
}

MClass sncd_nearby_fibre(const SncdData& d) {
  MClass out;
  const MClass one_minus_L = MClass(MCoeff(LaurentPoly(1) - LaurentPoly::monomial(1, 1)));
  for (const SncdStratum& s : d.strata) {
    MClass c = MClass::symbol(s.symbol);
    for (std::size_t i = 1; i < s.J.size(); ++i) c = c * one_minus_L;
    out += c;
  }
  return out;
}

MClass nearby_fibre(const ZSeries& z) { return -limit_T_inf(z); }

std::vector<std::string> validate_model(const FanModel& f) {
  std::vector<std::string> diag;
  const ConeComplex& K = f.complex;
  const std::size_t n = K.ambient_rank();
  const std::vector<std::size_t> maxi = K.maximal_cells();
  if (f.weight.size() != K.cells().size()) diag.push_back("shape: weight count differs from cell count");
  if (f.e_vec.size() != maxi.size() || f.a_vec.size() != maxi.size())
    diag.push_back("shape: e and a need one vector per maximal cell");
  for (const IntVec& v : f.e_vec)
    if (v.size() != n) diag.push_back("shape: e vector " + to_string(v) + " has wrong length");
  for (const IntVec& v : f.a_vec)
    if (v.size() != n) diag.push_back("shape: a vector " + to_string(v) + " has wrong length");
  if (!diag.empty()) return diag;

  for (const Cone& c : K.cells())
    if (!c.is_strictly_convex()) diag.push_back("convexity: a cell has lineality " + to_string(c.lineality()[0]));
  if (!diag.empty()) return diag;
  if (!is_fan(K)) diag.push_back("fan: two cells meet outside a common face");

  std::map<IntVec, std::pair<Int, Int>> ray_values;
  std::set<IntVec> inconsistent;
  for (std::size_t p = 0; p < maxi.size(); ++p) {
    for (const IntVec& r : K.cells()[maxi[p]].rays()) {
      Int ev = dot(f.e_vec[p], r), av = dot(f.a_vec[p], r);
      if (ev < 0) diag.push_back("e-nonnegative: <e, " + to_string(r) + "> = " + ev.get_str() + " < 0");
      auto [it, fresh] = ray_values.emplace(r, std::make_pair(ev, av));
      if (!fresh && it->second != std::make_pair(ev, av) && inconsistent.insert(r).second)
        diag.push_back("face-consistency: e or a takes different values at ray " + to_string(r) +
                       " in different maximal cells");
    }
  }

  std::set<IntVec> flagged;
  std::vector<std::size_t> owner = owner_table(K);
  for (std::size_t i = 0; i < K.cells().size(); ++i) {
    const Cone& c = K.cells()[i];
    const IntVec& e = f.e_vec[owner[i]];
    const IntVec& a = f.a_vec[owner[i]];
    bool vertical = std::any_of(c.rays().begin(), c.rays().end(), [&](const IntVec& r) { return dot(e, r) != 0; });
    if (!vertical) {
      if (!c.is_smooth()) diag.push_back("equivReg: cell with e identically zero is not smooth, rays " + [&] {
        std::string s;
        for (const IntVec& r : c.rays()) s += to_string(r);
        return s;
      }());
      continue;
    }
    for (const IntVec& r : c.rays()) {
      if (dot(e, r) != 0 || dot(a, r) == 1 || !flagged.insert(r).second) continue;
      diag.push_back("ordFeta: ray " + to_string(r) + " has <e, ray> = 0 but <a, ray> = " + dot(a, r).get_str() +
                     " instead of 1");
    }
  }
  return diag;
}

void require_valid(const FanModel& f) {
  std::vector<std::string> d = validate_model(f);
  if (!d.empty()) throw ValidationError(std::move(d));
}

ZSeries fan_poincare(const FanModel& f, long m, PolePolicy policy) {
  require_valid(f);
  const ConeComplex& K = f.complex;
  std::vector<std::size_t> owner = owner_table(K);
  ZSeries out;
  for (std::size_t i = 0; i < K.cells().size(); ++i) {
    if (f.weight[i].is_zero()) continue;
    const Cone& c = K.cells()[i];
    const IntVec& e = f.e_vec[owner[i]];
    if (std::all_of(c.rays().begin(), c.rays().end(), [&](const IntVec& r) { return dot(e, r) == 0; })) continue;
    MarkedMonoid mm = marked_monoid_of_cell(c, e, f.a_vec[owner[i]]);
    out += cone_series(mm, f.weight[i]);
  }
  out = out.scale(MClass(MCoeff::L_power(-m)));
  if (policy == PolePolicy::Reject)
    for (const auto& [k, c] : out.terms()) assert_no_L1_pole(c);
  return out;
}

PoleSet fan_poles(const FanModel& f) {
  const ConeComplex& K = f.complex;
  std::vector<std::size_t> maxi = K.maximal_cells();
  PoleSet out;
  for (std::size_t p = 0; p < maxi.size() && p < f.e_vec.size(); ++p)
    for (const IntVec& r : K.cells()[maxi[p]].rays()) {
      Int ev = dot(f.e_vec[p], r);
      if (ev <= 0) continue;
      Rat q(-dot(f.a_vec[p], r), ev);
      q.canonicalize();
      out.insert(q);
    }
  return out;
}

FanModel sncd_to_fanmodel(const SncdData& d) {
  const std::size_t n = d.components.size();
  std::map<std::string, std::size_t> index;
  IntVec e, a;
  for (const SncdComponent& c : d.components) {
    if (!c.mu) throw PreconditionError("sncd_to_fanmodel: component " + c.id + " has no mu");
    if (!index.emplace(c.id, index.size()).second)
      throw PreconditionError("sncd_to_fanmodel: duplicate component id " + c.id);
    e.push_back(Int(c.N));
    a.push_back(Int(*c.mu));
  }
  std::vector<Cone> cones;
  std::map<Cone, MClass> weights;
  for (const SncdStratum& s : d.strata) {
    std::vector<IntVec> rays;
    for (const std::string& id : s.J) {
      auto it = index.find(id);
      if (it == index.end()) throw PreconditionError("sncd_to_fanmodel: stratum references unknown component " + id);
      IntVec v = zero_vec(n);
      v[it->second] = 1;
      rays.push_back(v);
    }
    Cone c = cone_from_rays(n, rays);
    if (weights.count(c)) throw PreconditionError("sncd_to_fanmodel: stratum declared twice");
    weights[c] = MClass::symbol(s.symbol) * L1_power(s.J.size() - 1);
    cones.push_back(c);
  }
  ConeComplex K = ConeComplex::from_cones(n, cones);
  return make_fan_model(K, weights, {e}, {a});
}

FanModel transport_subdivide(const FanModel& f, const ConeComplex& Kp) {
  if (!check_subdivision(Kp, f.complex)) throw PreconditionError("transport_subdivide: not a subdivision");
  std::vector<std::size_t> owner = owner_table(f.complex);
  FanModel out;
  out.complex = Kp;
  for (const Cone& c : Kp.cells()) out.weight.push_back(f.weight[f.complex.carrier(c.interior_vector())]);
  for (std::size_t j : Kp.maximal_cells()) {
    std::size_t old = f.complex.carrier(Kp.cells()[j].interior_vector());
    out.e_vec.push_back(f.e_vec[owner[old]]);
    out.a_vec.push_back(f.a_vec[owner[old]]);
  }
  return out;
}

FanModel subdivide_model(const FanModel& f, const IntVec& rho) {
  return transport_subdivide(f, star_subdivision(f.complex, rho));
}

FanModel resolve_model(const FanModel& f) { return transport_subdivide(f, resolve_complex(f.complex)); }

}  // namespace motzeta

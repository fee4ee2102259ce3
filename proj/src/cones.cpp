#include "motzeta/cones.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace motzeta {

namespace {

void check_lengths(std::size_t n, const std::vector<IntVec>& vs, const char* what) {
  for (const IntVec& v : vs)
    if (v.size() != n) throw DimensionError(std::string(what) + ": vector length differs from ambient rank");
}

IntVec combine(const Int& a, const IntVec& x, const Int& b, const IntVec& y) {
  IntVec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = a * x[i] - b * y[i];
  return primitive(r);
}

std::vector<IntVec> with_negatives(const std::vector<IntVec>& vs) {
  std::vector<IntVec> out = vs;
  for (const IntVec& v : vs) out.push_back(negated(v));
  return out;
}

Int floor_rat(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

}  // namespace

DoubleDescription dd_solve(std::size_t n, const std::vector<IntVec>& constraints) {
  check_lengths(n, constraints, "dd_solve");
  const std::size_t m = constraints.size();
  struct Ray {
    IntVec v;
    std::vector<bool> zero;
  };
  std::vector<IntVec> lin;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e = zero_vec(n);
    e[i] = 1;
    lin.push_back(std::move(e));
  }
  std::vector<Ray> rays;

  for (std::size_t k = 0; k < m; ++k) {
    const IntVec& h = constraints[k];
    auto pivot = std::find_if(lin.begin(), lin.end(), [&](const IntVec& l) { return dot(h, l) != 0; });
    if (pivot != lin.end()) {
      IntVec ls = *pivot;
      lin.erase(pivot);
      Int hl = dot(h, ls);
      if (hl < 0) {
        ls = negated(ls);
        hl = -hl;
      }
      for (IntVec& l : lin) {
        Int hv = dot(h, l);
        if (hv != 0) l = combine(hl, l, hv, ls);
      }
      for (Ray& r : rays) {
        Int hv = dot(h, r.v);
        if (hv != 0) r.v = combine(hl, r.v, hv, ls);
        r.zero[k] = true;
      }
      Ray fresh{ls, std::vector<bool>(m, false)};
      for (std::size_t j = 0; j < k; ++j) fresh.zero[j] = true;
      rays.push_back(std::move(fresh));
      continue;
    }

    std::vector<Int> val(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(h, rays[i].v);
      if (val[i] > 0) pos.push_back(i);
      else if (val[i] < 0) neg.push_back(i);
      else {
        Ray r = rays[i];
        r.zero[k] = true;
        next.push_back(std::move(r));
      }
    }
    for (std::size_t i : pos) next.push_back(rays[i]);
    for (std::size_t p : pos) {
      for (std::size_t q : neg) {
        std::vector<bool> common(m, false);
        for (std::size_t j = 0; j < k; ++j) common[j] = rays[p].zero[j] && rays[q].zero[j];
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          bool covers = true;
          for (std::size_t j = 0; j < k; ++j)
            if (common[j] && !rays[r].zero[j]) {
              covers = false;
              break;
            }
          if (covers) adjacent = false;
        }
        if (!adjacent) continue;
        Ray fresh{combine(val[p], rays[q].v, val[q], rays[p].v), common};
        fresh.zero[k] = true;
        next.push_back(std::move(fresh));
      }
    }
    rays = std::move(next);
  }

  DoubleDescription out;
  out.lineality = std::move(lin);
  for (Ray& r : rays) out.rays.push_back(std::move(r.v));
  return out;
}

// ---------------------------------------------------------------- Cone

Cone::Cone(std::size_t n) : n_(n) {
  std::vector<IntVec> eqs;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e = zero_vec(n);
    e[i] = 1;
    eqs.push_back(std::move(e));
  }
  canonicalize({}, {}, {}, std::move(eqs));
}

void Cone::canonicalize(std::vector<IntVec> rays, std::vector<IntVec> lineality,
                        std::vector<IntVec> facets, std::vector<IntVec> equations) {
  lineality_ = saturated_basis(n_, lineality);
  equations_ = saturated_basis(n_, equations);
  QuotientLattice ql(n_, lineality_);
  rays_.clear();
  for (const IntVec& r : rays) rays_.push_back(ql.primitive_representative(r));
  std::sort(rays_.begin(), rays_.end());
  rays_.erase(std::unique(rays_.begin(), rays_.end()), rays_.end());
  QuotientLattice qe(n_, equations_);
  facets_.clear();
  for (const IntVec& f : facets) facets_.push_back(qe.primitive_representative(f));
  std::sort(facets_.begin(), facets_.end());
  facets_.erase(std::unique(facets_.begin(), facets_.end()), facets_.end());
}

Cone Cone::from_generators(std::size_t n, const std::vector<IntVec>& gens,
                           const std::vector<IntVec>& lineality_gens) {
  check_lengths(n, gens, "cone_from_rays");
  check_lengths(n, lineality_gens, "cone_from_rays");
  std::vector<IntVec> cons = gens;
  for (const IntVec& l : with_negatives(lineality_gens)) cons.push_back(l);
  DoubleDescription dual = dd_solve(n, cons);
  std::vector<IntVec> cons2 = dual.rays;
  for (const IntVec& e : with_negatives(dual.lineality)) cons2.push_back(e);
  DoubleDescription primal = dd_solve(n, cons2);
  Cone c;
  c.n_ = n;
  c.canonicalize(std::move(primal.rays), std::move(primal.lineality), std::move(dual.rays),
                 std::move(dual.lineality));
  return c;
}

Cone Cone::from_inequalities(std::size_t n, const std::vector<IntVec>& inequalities,
                             const std::vector<IntVec>& equations) {
  check_lengths(n, inequalities, "cone_from_inequalities");
  check_lengths(n, equations, "cone_from_inequalities");
  std::vector<IntVec> cons = inequalities;
  for (const IntVec& e : with_negatives(equations)) cons.push_back(e);
  DoubleDescription primal = dd_solve(n, cons);
  return from_generators(n, primal.rays, primal.lineality);
}

bool Cone::is_smooth() const {
  if (!is_strictly_convex() || rays_.size() != dim()) return false;
  return torsion_order(IntMat::from_columns(n_, rays_)) == 1;
}

bool Cone::in_span(const IntVec& v) const {
  if (v.size() != n_) throw DimensionError("cone membership: vector length differs from ambient rank");
  return std::all_of(equations_.begin(), equations_.end(), [&](const IntVec& e) { return dot(e, v) == 0; });
}

bool Cone::contains(const IntVec& v) const {
  return in_span(v) &&
         std::all_of(facets_.begin(), facets_.end(), [&](const IntVec& f) { return dot(f, v) >= 0; });
}

bool Cone::relint_contains(const IntVec& v) const {
  return in_span(v) &&
         std::all_of(facets_.begin(), facets_.end(), [&](const IntVec& f) { return dot(f, v) > 0; });
}

bool Cone::contains_cone(const Cone& other) const {
  if (other.n_ != n_) return false;
  for (const IntVec& r : other.rays_)
    if (!contains(r)) return false;
  for (const IntVec& l : other.lineality_)
    if (!contains(l) || !contains(negated(l))) return false;
  return true;
}

IntVec Cone::interior_vector() const {
  IntVec s = zero_vec(n_);
  for (const IntVec& r : rays_) s = add(s, r);
  return s;
}

Cone Cone::dual() const {
  Cone d;
  d.n_ = n_;
  d.rays_ = facets_;
  d.lineality_ = equations_;
  d.facets_ = rays_;
  d.equations_ = lineality_;
  return d;
}

std::strong_ordering Cone::operator<=>(const Cone& other) const {
  auto key = [](const Cone& c) {
    return std::tie(c.n_, c.rays_, c.lineality_, c.facets_, c.equations_);
  };
  if (dim() != other.dim()) return dim() < other.dim() ? std::strong_ordering::less : std::strong_ordering::greater;
  if (key(*this) < key(other)) return std::strong_ordering::less;
  if (key(other) < key(*this)) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Cone cone_from_rays(std::size_t n, const std::vector<IntVec>& rays) { return Cone::from_generators(n, rays); }

Cone cone_from_inequalities(std::size_t n, const std::vector<IntVec>& inequalities) {
  return Cone::from_inequalities(n, inequalities);
}

Cone dual_cone(const Cone& c) { return c.dual(); }

std::vector<Cone> faces(const Cone& c) {
  const auto& rays = c.rays();
  const auto& facets = c.facets();
  std::vector<std::vector<bool>> tight(facets.size(), std::vector<bool>(rays.size()));
  for (std::size_t j = 0; j < facets.size(); ++j)
    for (std::size_t i = 0; i < rays.size(); ++i) tight[j][i] = dot(facets[j], rays[i]) == 0;

  std::set<std::vector<bool>> seen;
  std::vector<std::vector<bool>> queue{std::vector<bool>(rays.size(), true)};
  seen.insert(queue.front());
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (std::size_t j = 0; j < facets.size(); ++j) {
      std::vector<bool> s(rays.size());
      for (std::size_t i = 0; i < rays.size(); ++i) s[i] = queue[q][i] && tight[j][i];
      if (seen.insert(s).second) queue.push_back(std::move(s));
    }
  }
  std::vector<Cone> out;
  for (const auto& s : queue) {
    std::vector<IntVec> gens;
    for (std::size_t i = 0; i < rays.size(); ++i)
      if (s[i]) gens.push_back(rays[i]);
    out.push_back(Cone::from_generators(c.ambient_rank(), gens, c.lineality()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_face_of(const Cone& f, const Cone& c) {
  if (f.ambient_rank() != c.ambient_rank() || f.lineality() != c.lineality()) return false;
  const auto& crays = c.rays();
  for (const IntVec& r : f.rays())
    if (!std::binary_search(crays.begin(), crays.end(), r)) return false;
  std::vector<const IntVec*> supporting;
  for (const IntVec& u : c.facets())
    if (std::all_of(f.rays().begin(), f.rays().end(), [&](const IntVec& r) { return dot(u, r) == 0; }))
      supporting.push_back(&u);
  std::size_t count = 0;
  for (const IntVec& r : crays)
    if (std::all_of(supporting.begin(), supporting.end(), [&](const IntVec* u) { return dot(*u, r) == 0; }))
      ++count;
  return count == f.rays().size();
}

Cone join(const Cone& a, const Cone& b) {
  std::vector<IntVec> gens = a.rays();
  gens.insert(gens.end(), b.rays().begin(), b.rays().end());
  std::vector<IntVec> lin = a.lineality();
  lin.insert(lin.end(), b.lineality().begin(), b.lineality().end());
  return Cone::from_generators(a.ambient_rank(), gens, lin);
}

Cone join(const Cone& a, const IntVec& ray) {
  std::vector<IntVec> gens = a.rays();
  gens.push_back(ray);
  return Cone::from_generators(a.ambient_rank(), gens, a.lineality());
}

// ---------------------------------------------------------------- ConeComplex

ConeComplex ConeComplex::from_cones(std::size_t n, const std::vector<Cone>& cones) {
  std::set<Cone> all;
  for (const Cone& c : cones) {
    if (c.ambient_rank() != n) throw DimensionError("ConeComplex: cell of wrong ambient rank");
    if (all.count(c)) continue;
    for (Cone& f : faces(c)) all.insert(std::move(f));
  }
  ConeComplex K(n);
  K.cells_.assign(all.begin(), all.end());
  K.face_table_.resize(K.cells_.size());
  for (std::size_t i = 0; i < K.cells_.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (K.cells_[j].dim() <= K.cells_[i].dim() && is_face_of(K.cells_[j], K.cells_[i]))
        K.face_table_[i].push_back(j);
  return K;
}

std::size_t ConeComplex::find(const Cone& c) const {
  auto it = std::lower_bound(cells_.begin(), cells_.end(), c);
  if (it != cells_.end() && *it == c) return static_cast<std::size_t>(it - cells_.begin());
  return cells_.size();
}

std::vector<std::size_t> ConeComplex::maximal_cells() const {
  std::vector<bool> proper(cells_.size(), false);
  for (std::size_t i = 0; i < cells_.size(); ++i)
    for (std::size_t j : face_table_[i])
      if (j != i) proper[j] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (!proper[i]) out.push_back(i);
  return out;
}

std::size_t ConeComplex::carrier(const IntVec& v) const {
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (cells_[i].relint_contains(v)) return i;
  throw PreconditionError("carrier: vector " + to_string(v) + " outside the support");
}

bool ConeComplex::support_contains(const IntVec& v) const {
  return std::any_of(cells_.begin(), cells_.end(), [&](const Cone& c) { return c.contains(v); });
}

std::vector<IntVec> ConeComplex::rays() const {
  std::set<IntVec> out;
  for (const Cone& c : cells_) out.insert(c.rays().begin(), c.rays().end());
  return {out.begin(), out.end()};
}

bool is_fan(const ConeComplex& K) {
  const auto maxi = K.maximal_cells();
  for (std::size_t a = 0; a < maxi.size(); ++a)
    for (std::size_t b = a + 1; b < maxi.size(); ++b) {
      const Cone& x = K.cells()[maxi[a]];
      const Cone& y = K.cells()[maxi[b]];
      std::vector<IntVec> ineq = x.facets();
      ineq.insert(ineq.end(), y.facets().begin(), y.facets().end());
      std::vector<IntVec> eqs = x.equations();
      eqs.insert(eqs.end(), y.equations().begin(), y.equations().end());
      Cone meet = Cone::from_inequalities(K.ambient_rank(), ineq, eqs);
      if (!is_face_of(meet, x) || !is_face_of(meet, y)) return false;
    }
  return true;
}

ConeComplex star_subdivision(const ConeComplex& K, const IntVec& rho) {
  if (rho.size() != K.ambient_rank()) throw DimensionError("star_subdivision: ray of wrong length");
  if (is_zero(rho)) throw PreconditionError("star_subdivision: zero ray");
  if (!K.support_contains(rho)) throw PreconditionError("star_subdivision: ray " + to_string(rho) + " outside the support");
  const IntVec p = primitive(rho);
  for (const Cone& c : K.cells())
    if (c.is_strictly_convex() && c.rays().size() == 1 && c.rays()[0] == p) return K;

  std::vector<Cone> cones;
  for (std::size_t i = 0; i < K.cells().size(); ++i) {
    const Cone& s = K.cells()[i];
    if (!s.contains(p)) {
      cones.push_back(s);
      continue;
    }
    for (std::size_t j : K.faces_of(i)) {
      const Cone& t = K.cells()[j];
      if (!t.contains(p)) cones.push_back(join(t, p));
    }
  }
  return ConeComplex::from_cones(K.ambient_rank(), cones);
}

ConeComplex resolve_complex(const ConeComplex& K) {
  for (const Cone& c : K.cells())
    if (!c.is_strictly_convex()) throw PreconditionError("resolve_complex: cell with lineality");
  ConeComplex cur = K;
  while (true) {
    auto it = std::find_if(cur.cells().begin(), cur.cells().end(), [](const Cone& c) { return !c.is_smooth(); });
    if (it == cur.cells().end()) return cur;
    const Cone& s = *it;
    IntVec rho;
    if (s.rays().size() > s.dim()) {
      rho = primitive(s.interior_vector());
    } else {
      HalfOpenCone h{s.ambient_rank(), s.rays(), std::vector<bool>(s.rays().size(), false)};
      IntMat G = IntMat::from_columns(s.ambient_rank(), s.rays());
      bool have = false;
      Rat best_sum;
      for (const IntVec& pt : box_points(h)) {
        if (is_zero(pt)) continue;
        RatVec lambda = *solve_rational(G, pt);
        Rat sum = std::accumulate(lambda.begin(), lambda.end(), Rat(0));
        if (!have || sum < best_sum || (sum == best_sum && pt < rho)) {
          have = true;
          best_sum = sum;
          rho = pt;
        }
      }
      rho = primitive(rho);
    }
    cur = star_subdivision(cur, rho);
  }
}

namespace {

// Normalized volume of the slice {w = 1} of the simplicial cone spanned by
// gens, measured in the lattice with basis W.
Rat slice_volume(const IntMat& W, const std::vector<IntVec>& gens, const IntVec& w) {
  std::vector<IntVec> coords;
  for (const IntVec& g : gens) coords.push_back(*solve_integer(W, g));
  Rat vol(abs(determinant(IntMat::from_columns(gens.size(), coords))));
  for (const IntVec& g : gens) vol /= Rat(dot(w, g));
  return vol;
}

Rat cone_volume(const Cone& c, const IntMat& W, const IntVec& w) {
  Rat total = 0;
  for (const auto& simplex : placing_triangulation(c)) {
    std::vector<IntVec> gens;
    for (std::size_t i : simplex) gens.push_back(c.rays()[i]);
    total += slice_volume(W, gens, w);
  }
  return total;
}

}  // namespace

bool check_subdivision(const ConeComplex& Kp, const ConeComplex& K) {
  if (Kp.ambient_rank() != K.ambient_rank()) return false;
  for (const ConeComplex* X : {&Kp, &K})
    for (const Cone& c : X->cells())
      if (!c.is_strictly_convex()) throw PreconditionError("check_subdivision: cell with lineality");
  const std::size_t n = K.ambient_rank();
  for (std::size_t i : Kp.maximal_cells()) {
    const Cone& c = Kp.cells()[i];
    if (std::none_of(K.cells().begin(), K.cells().end(), [&](const Cone& s) { return s.contains_cone(c); }))
      return false;
  }
  for (std::size_t i : K.maximal_cells()) {
    const Cone& s = K.cells()[i];
    if (s.dim() == 0) {
      if (Kp.find(s) == Kp.cells().size()) return false;
      continue;
    }
    IntMat W = IntMat::from_columns(n, saturated_basis(n, s.rays()));
    IntVec w = zero_vec(n);
    for (const IntVec& f : s.facets()) w = add(w, f);
    Rat covered = 0;
    for (const Cone& c : Kp.cells())
      if (c.dim() == s.dim() && s.contains_cone(c)) covered += cone_volume(c, W, w);
    if (covered != cone_volume(s, W, w)) return false;
  }
  return true;
}

// ---------------------------------------------------------------- triangulation

std::vector<std::vector<std::size_t>> placing_triangulation(const Cone& c) {
  std::vector<std::size_t> order(c.rays().size());
  std::iota(order.begin(), order.end(), 0);
  return placing_triangulation(c, order);
}

std::vector<std::vector<std::size_t>> placing_triangulation(const Cone& c,
                                                            const std::vector<std::size_t>& order) {
  if (!c.is_strictly_convex()) throw PreconditionError("triangulation: cone has lineality");
  const auto& rays = c.rays();
  if (order.size() != rays.size()) throw DimensionError("triangulation: order is not a permutation of the rays");
  {
    std::vector<std::size_t> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (sorted[i] != i) throw DimensionError("triangulation: order is not a permutation of the rays");
  }
  const std::size_t n = c.ambient_rank();
  std::vector<std::vector<std::size_t>> T;
  if (rays.empty()) return {{}};
  T.push_back({order[0]});
  std::vector<IntVec> placed{rays[order[0]]};
  for (std::size_t k = 1; k < order.size(); ++k) {
    const std::size_t idx = order[k];
    const IntVec& r = rays[idx];
    Cone cur = Cone::from_generators(n, placed);
    if (!cur.in_span(r)) {
      for (auto& s : T) s.push_back(idx);
    } else {
      std::vector<const IntVec*> visible;
      for (const IntVec& f : cur.facets())
        if (dot(f, r) < 0) visible.push_back(&f);
      std::vector<std::vector<std::size_t>> added;
      for (const auto& s : T) {
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
          for (const IntVec* f : visible) {
            bool on_facet = true;
            for (std::size_t t = 0; t < s.size() && on_facet; ++t)
              if (t != drop && dot(*f, rays[s[t]]) != 0) on_facet = false;
            if (!on_facet) continue;
            std::vector<std::size_t> simplex;
            for (std::size_t t = 0; t < s.size(); ++t)
              if (t != drop) simplex.push_back(s[t]);
            simplex.push_back(idx);
            added.push_back(std::move(simplex));
          }
        }
      }
      T.insert(T.end(), added.begin(), added.end());
    }
    placed.push_back(r);
  }
  for (auto& s : T) std::sort(s.begin(), s.end());
  std::sort(T.begin(), T.end());
  return T;
}

std::vector<HalfOpenCone> triangulate_half_open(const Cone& c, Region region) {
  std::vector<std::size_t> order(c.rays().size());
  std::iota(order.begin(), order.end(), 0);
  return triangulate_half_open(c, region, order);
}

std::vector<HalfOpenCone> triangulate_half_open(const Cone& c, Region region,
                                                const std::vector<std::size_t>& order) {
  const auto simplices = placing_triangulation(c, order);
  const std::size_t n = c.ambient_rank();
  const auto& rays = c.rays();
  if (rays.empty()) return {HalfOpenCone{n, {}, {}}};

  std::vector<IntMat> mats;
  for (const auto& s : simplices) {
    std::vector<IntVec> gens;
    for (std::size_t i : s) gens.push_back(rays[i]);
    mats.push_back(IntMat::from_columns(n, gens));
  }
  for (long base = 2;; ++base) {
    IntVec q = zero_vec(n);
    Int coeff = 1;
    for (const IntVec& r : rays) {
      q = add(q, scaled(r, coeff));
      coeff *= base;
    }
    std::vector<HalfOpenCone> out;
    bool generic = true;
    for (std::size_t s = 0; s < simplices.size() && generic; ++s) {
      RatVec lambda = *solve_rational(mats[s], q);
      HalfOpenCone h{n, {}, {}};
      for (std::size_t j = 0; j < simplices[s].size(); ++j) {
        if (lambda[j] == 0) {
          generic = false;
          break;
        }
        h.gens.push_back(rays[simplices[s][j]]);
        h.strict.push_back(region == Region::RelativeInterior ? lambda[j] > 0 : lambda[j] < 0);
      }
      out.push_back(std::move(h));
    }
    if (generic) return out;
  }
}

std::vector<IntVec> box_points(const HalfOpenCone& h) {
  const std::size_t n = h.ambient_rank;
  const std::size_t d = h.gens.size();
  if (h.strict.size() != d) throw DimensionError("box_points: strict flags do not match generators");
  if (d == 0) return {zero_vec(n)};
  std::vector<IntVec> basis = saturated_basis(n, h.gens);
  if (basis.size() != d) throw PreconditionError("box_points: generators are linearly dependent");
  IntMat W = IntMat::from_columns(n, basis);
  std::vector<IntVec> coords;
  for (const IntVec& g : h.gens) coords.push_back(*solve_integer(W, g));
  IntMat G = IntMat::from_columns(d, coords);
  SmithResult snf = smith_normal_form(G);

  std::vector<IntVec> out;
  IntVec z = zero_vec(d);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == d) {
      IntVec y = snf.U_inverse * z;
      RatVec lambda = *solve_rational(G, y);
      RatVec point(n, Rat(0));
      for (std::size_t j = 0; j < d; ++j) {
        Rat f = lambda[j] - Rat(floor_rat(lambda[j]));
        if (f == 0 && h.strict[j]) f = 1;
        for (std::size_t t = 0; t < n; ++t) point[t] += f * Rat(h.gens[j][t]);
      }
      IntVec p(n);
      for (std::size_t t = 0; t < n; ++t) {
        if (point[t].get_den() != 1) throw Error("box_points: non-integral parallelepiped point");
        p[t] = point[t].get_num();
      }
      out.push_back(std::move(p));
      return;
    }
    for (Int k = 0; k < snf.S(i, i); ++k) {
      z[i] = k;
      rec(i + 1);
    }
    z[i] = 0;
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntVec> lattice_points_in_polytope(std::size_t n, const std::vector<IntVec>& inequalities) {
  check_lengths(n + 1, inequalities, "lattice_points_in_polytope");
  std::vector<IntVec> cons = inequalities;
  IntVec t0 = zero_vec(n + 1);
  t0[0] = 1;
  cons.push_back(t0);
  DoubleDescription hom = dd_solve(n + 1, cons);
  std::vector<IntVec> vertices;
  bool recession = !hom.lineality.empty();
  for (const IntVec& r : hom.rays) {
    if (r[0] > 0) vertices.push_back(r);
    else recession = true;
  }
  if (vertices.empty()) return {};
  if (recession) throw PreconditionError("lattice_points_in_polytope: region is unbounded");

  // Inequalities describing the projection onto the first k coordinates.
  std::vector<std::vector<IntVec>> levels(n + 1);
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<IntVec> proj;
    for (const IntVec& v : vertices) proj.emplace_back(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k + 1));
    Cone hull = Cone::from_generators(k + 1, proj);
    levels[k] = hull.facets();
    for (const IntVec& e : hull.equations()) {
      levels[k].push_back(e);
      levels[k].push_back(negated(e));
    }
  }

  std::vector<IntVec> out;
  IntVec x(n + 1, Int(0));
  x[0] = 1;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k > n) {
      out.emplace_back(x.begin() + 1, x.end());
      return;
    }
    bool has_lo = false, has_hi = false;
    Int lo, hi;
    for (const IntVec& c : levels[k]) {
      Int s = 0;
      for (std::size_t j = 0; j < k; ++j) s += c[j] * x[j];
      const Int& a = c[k];
      if (a == 0) {
        if (s < 0) return;
      } else if (a > 0) {
        Int b;
        mpz_cdiv_q(b.get_mpz_t(), Int(-s).get_mpz_t(), a.get_mpz_t());
        if (!has_lo || b > lo) lo = b;
        has_lo = true;
      } else {
        Int b;
        mpz_fdiv_q(b.get_mpz_t(), s.get_mpz_t(), Int(-a).get_mpz_t());
        if (!has_hi || b < hi) hi = b;
        has_hi = true;
      }
    }
    if (!has_lo || !has_hi) throw Error("lattice_points_in_polytope: unbounded projection");
    for (Int v = lo; v <= hi; ++v) {
      x[k] = v;
      rec(k + 1);
    }
    x[k] = 0;
  };
  rec(1);
  return out;
}

}  // namespace motzeta

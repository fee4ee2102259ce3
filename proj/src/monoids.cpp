#include "motzeta/monoids.hpp"

#include <algorithm>

namespace motzeta {

namespace {

IntVec unit_vector(std::size_t n, std::size_t i) {
  IntVec e = zero_vec(n);
  e[i] = 1;
  return e;
}

void check_rank(const SharpFsMonoid& M, const IntVec& v, const char* what) {
  if (v.size() != M.rank) throw DimensionError(std::string(what) + ": vector length differs from monoid rank");
}

}  // namespace

SharpFsMonoid monoid_from_generators(std::size_t ambient_rank, const std::vector<IntVec>& gens) {
  std::vector<IntVec> basis = lattice_basis(ambient_rank, gens);
  IntMat B = IntMat::from_columns(ambient_rank, basis);
  std::vector<IntVec> coords;
  for (const IntVec& g : gens) coords.push_back(*solve_integer(B, g));
  SharpFsMonoid M;
  M.rank = basis.size();
  M.basis = B;
  M.cone = cone_from_rays(M.rank, coords);
  if (!M.cone.is_strictly_convex())
    throw PreconditionError("monoid_from_generators: generators contain units; use sharpify");
  return M;
}

SharpFsMonoid monoid_from_cone(const Cone& cone) {
  if (!cone.is_strictly_convex() || cone.dim() != cone.ambient_rank())
    throw PreconditionError("monoid_from_cone: cone must be full-dimensional and strictly convex");
  SharpFsMonoid M;
  M.rank = cone.ambient_rank();
  M.basis = IntMat::identity(M.rank);
  M.cone = cone;
  return M;
}

SharpQuotient sharpify(const IntMat& lattice, const Cone& cone) {
  const std::size_t r = cone.ambient_rank();
  if (lattice.cols() != r) throw DimensionError("sharpify: lattice basis and cone ranks differ");
  if (cone.dim() != r) throw PreconditionError("sharpify: cone must be full-dimensional");
  QuotientLattice q(r, cone.lineality());
  std::vector<IntVec> pcols;
  for (std::size_t i = 0; i < r; ++i) pcols.push_back(q.image(unit_vector(r, i)));
  const std::size_t s = r - cone.lineality().size();
  IntMat P = IntMat::from_columns(s, pcols);
  std::vector<IntVec> images;
  for (const IntVec& v : cone.rays()) images.push_back(P * v);
  std::vector<IntVec> lift;
  for (std::size_t j = 0; j < s; ++j) lift.push_back(*solve_integer(P, unit_vector(s, j)));

  SharpQuotient out;
  out.unit_rank = cone.lineality().size();
  out.projection = P;
  out.monoid.rank = s;
  out.monoid.basis = s == 0 ? IntMat(lattice.rows(), 0) : lattice * IntMat::from_columns(r, lift);
  out.monoid.cone = cone_from_rays(s, images);
  return out;
}

std::vector<std::size_t> height1_primes(const SharpFsMonoid& M) {
  std::vector<std::size_t> ids(M.cone.facets().size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
  return ids;
}

IntVec valuation(const SharpFsMonoid& M, std::size_t facet) {
  if (facet >= M.cone.facets().size()) throw PreconditionError("valuation: unknown facet id");
  return M.cone.facets()[facet];
}

std::vector<MonoidFace> face_lattice(const SharpFsMonoid& M) {
  std::vector<MonoidFace> out;
  for (Cone& f : faces(M.cone)) {
    MonoidFace mf;
    mf.height = M.rank - f.dim();
    for (std::size_t i = 0; i < M.cone.facets().size(); ++i) {
      const IntVec& u = M.cone.facets()[i];
      if (std::all_of(f.rays().begin(), f.rays().end(), [&](const IntVec& r) { return dot(u, r) == 0; }))
        mf.facets.push_back(i);
    }
    mf.face = std::move(f);
    out.push_back(std::move(mf));
  }
  return out;
}

Int root_index(const MarkedMonoid& mm) {
  check_rank(mm.base, mm.e_pi, "root_index");
  Int g = content_primitive(mm.e_pi).gcd;
  if (g == 0) throw PreconditionError("root_index: e_pi is zero");
  return g;
}

Int root_index_by_torsion(const MarkedMonoid& mm) {
  check_rank(mm.base, mm.e_pi, "root_index");
  if (is_zero(mm.e_pi)) throw PreconditionError("root_index: e_pi is zero");
  return torsion_order(IntMat::from_columns(mm.base.rank, {mm.e_pi}));
}

namespace {

// Column basis B of the lattice d Z^r + Z e, so that the base-changed
// lattice Z^r + Z e/d equals B Z^r / d.
IntMat scaled_base_change_basis(const MarkedMonoid& mm, const Int& d) {
  const std::size_t r = mm.base.rank;
  std::vector<IntVec> gens;
  for (std::size_t i = 0; i < r; ++i) gens.push_back(scaled(unit_vector(r, i), d));
  gens.push_back(mm.e_pi);
  return IntMat::from_columns(r, lattice_basis(r, gens));
}

}  // namespace

MarkedMonoid base_change(const MarkedMonoid& mm, const Int& d) {
  if (d <= 0) throw PreconditionError("base_change: d must be positive");
  check_rank(mm.base, mm.e_pi, "base_change");
  check_rank(mm.base, mm.a_div, "base_change");
  const std::size_t r = mm.base.rank;
  IntMat B = scaled_base_change_basis(mm, d);
  // new coordinates y of an old vector x satisfy B y = d x
  auto convert = [&](const IntVec& x) { return *solve_integer(B, scaled(x, d)); };
  std::vector<IntVec> rays;
  for (const IntVec& v : mm.base.cone.rays()) rays.push_back(convert(v));
  MarkedMonoid out;
  out.base.rank = r;
  out.base.basis = mm.base.basis * B;
  out.base.denominator = mm.base.denominator * d;
  out.base.cone = cone_from_rays(r, rays);
  out.e_pi = *solve_integer(B, mm.e_pi);
  out.a_div = convert(mm.a_div);
  return out;
}

Int base_change_unit_torsion(const MarkedMonoid& mm, const Int& d) {
  IntVec col = mm.e_pi;
  col.push_back(-d);
  return torsion_order(IntMat::from_columns(col.size(), {col}));
}

bool base_change_max_ideal_from_base(const MarkedMonoid& mm, const Int& d) {
  IntMat B = scaled_base_change_basis(mm, d);
  Int index = abs(determinant(B));
  Int full = 1;
  for (std::size_t i = 0; i < mm.base.rank; ++i) full *= d;
  return index == full;
}

MonoidDivisor divisor_from_element(const SharpFsMonoid& M, const IntVec& a) {
  check_rank(M, a, "divisor_from_element");
  MonoidDivisor D;
  for (const IntVec& u : M.cone.facets()) D.values.push_back(dot(u, a));
  return D;
}

MonoidDivisor divisor_add(const MonoidDivisor& a, const MonoidDivisor& b) {
  if (a.values.size() != b.values.size()) throw DimensionError("divisor_add: divisors on different monoids");
  MonoidDivisor D;
  for (std::size_t i = 0; i < a.values.size(); ++i) D.values.push_back(a.values[i] + b.values[i]);
  return D;
}

std::vector<IntVec> local_dual_points(const MarkedMonoid& mm, const Int& bound, const std::optional<Int>& a_bound) {
  check_rank(mm.base, mm.e_pi, "local_dual_points");
  if (is_zero(mm.e_pi)) throw PreconditionError("local_dual_points: e_pi is zero");
  const std::size_t r = mm.base.rank;
  std::vector<IntVec> ineqs;
  for (const IntVec& v : mm.base.cone.rays()) {
    IntVec row{Int(-1)};
    row.insert(row.end(), v.begin(), v.end());
    ineqs.push_back(std::move(row));
  }
  auto upper = [&](const Int& b, const IntVec& w) {
    IntVec row{b};
    for (const Int& x : w) row.push_back(-x);
    ineqs.push_back(std::move(row));
  };
  upper(bound, mm.e_pi);
  if (a_bound) {
    check_rank(mm.base, mm.a_div, "local_dual_points");
    upper(*a_bound, mm.a_div);
  }
  auto pts = lattice_points_in_polytope(r, ineqs);
  std::sort(pts.begin(), pts.end());
  return pts;
}

MarkedMonoid marked_monoid_of_cell(const Cone& tau, const IntVec& e, const IntVec& a, IntMat* span_basis) {
  const std::size_t n = tau.ambient_rank();
  if (!tau.is_strictly_convex()) throw PreconditionError("marked_monoid_of_cell: cell has lineality");
  if (e.size() != n || a.size() != n) throw DimensionError("marked_monoid_of_cell: functional of wrong length");
  std::vector<IntVec> basis = saturated_basis(n, tau.rays());
  const std::size_t k = basis.size();
  IntMat W = IntMat::from_columns(n, basis);
  if (span_basis) *span_basis = W;
  std::vector<IntVec> coords;
  for (const IntVec& v : tau.rays()) coords.push_back(*solve_integer(W, v));
  Cone tau_w = k == 0 ? Cone(0) : cone_from_rays(k, coords);
  MarkedMonoid mm;
  mm.base.rank = k;
  mm.base.basis = IntMat::identity(k);
  mm.base.cone = dual_cone(tau_w);
  IntMat Wt = W.transposed();
  mm.e_pi = k == 0 ? IntVec{} : Wt * e;
  mm.a_div = k == 0 ? IntVec{} : Wt * a;
  return mm;
}

}  // namespace motzeta

#include "motzeta/newton.hpp"

#include <algorithm>
#include <set>

namespace motzeta {

namespace {

IntVec ones(std::size_t n) { return IntVec(n, Int(1)); }

IntVec lifted(const IntVec& v, long last) {
  IntVec out = v;
  out.push_back(Int(last));
  return out;
}

std::vector<IntVec> lifted_all(const std::vector<IntVec>& vs) {
  std::vector<IntVec> out;
  for (const IntVec& v : vs) out.push_back(lifted(v, 0));
  return out;
}

ZSeries inverse_frac() { return ZSeries::term(MClass(MCoeff::L_power(-1)), 1, {Denom{-1, 1}}); }

bool m_vanishes_on(const FaceRecord& f) {
  const auto& rays = f.normal_cone_closure.rays();
  return std::all_of(rays.begin(), rays.end(), [&](const IntVec& r) { return dot(r, f.m_witness) == 0; });
}

long mod_p(const Int& x, long p) {
  Int r = x % p;
  if (r < 0) r += p;
  return r.get_si();
}

long pow_mod(long b, long e, long p) {
  long r = 1 % p;
  b %= p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

}  // namespace

std::string FaceRecord::symbol(int k) const { return "X_tau(" + std::to_string(k) + ")@" + std::to_string(face_id); }

void validate_input(const NewtonInput& inp) {
  if (inp.n == 0) throw PreconditionError("newton: n must be positive");
  if (inp.support.empty()) throw PreconditionError("newton: support is empty");
  std::set<IntVec> seen;
  for (const IntVec& w : inp.support) {
    if (w.size() != inp.n) throw DimensionError("newton: support point " + to_string(w) + " has wrong length");
    if (std::any_of(w.begin(), w.end(), [](const Int& x) { return x < 0; }))
      throw PreconditionError("newton: support point " + to_string(w) + " has a negative exponent");
    if (is_zero(w)) throw PreconditionError("newton: support contains 0, so f(0) != 0");
    if (!seen.insert(w).second) throw PreconditionError("newton: repeated support point " + to_string(w));
  }
}

Int newton_m(const NewtonInput& inp, const IntVec& u) {
  Int m = dot(u, inp.support[0]);
  for (const IntVec& w : inp.support) m = std::min(m, Int(dot(u, w)));
  return m;
}

ConeComplex normal_complex(const NewtonInput& inp) {
  validate_input(inp);
  const std::size_t n = inp.n;
  std::vector<Cone> cones;
  for (const IntVec& w : inp.support) {
    std::vector<IntVec> rows;
    for (std::size_t i = 0; i < n; ++i) {
      IntVec e = zero_vec(n);
      e[i] = 1;
      rows.push_back(e);
    }
    for (const IntVec& o : inp.support)
      if (o != w) rows.push_back(sub(o, w));
    Cone c = cone_from_inequalities(n, rows);
    if (c.dim() == n) cones.push_back(c);
  }
  return ConeComplex::from_cones(n, cones);
}

std::vector<FaceRecord> newton_polyhedron(const NewtonInput& inp) {
  ConeComplex K = normal_complex(inp);
  std::vector<FaceRecord> out;
  for (std::size_t i = 0; i < K.cells().size(); ++i) {
    const Cone& c = K.cells()[i];
    IntVec u = c.interior_vector();
    Int m = newton_m(inp, u);
    FaceRecord f;
    f.face_id = i;
    for (const IntVec& w : inp.support)
      if (dot(u, w) == m) f.argmin_support.push_back(w);
    std::sort(f.argmin_support.begin(), f.argmin_support.end());
    for (std::size_t j = 0; j < inp.n; ++j)
      if (u[j] == 0) f.recession_coords.push_back(j);
    f.normal_cone_closure = c;
    f.dim_face = inp.n - c.dim();
    f.is_compact = f.recession_coords.empty();
    f.m_witness = f.argmin_support.front();
    out.push_back(std::move(f));
  }
  return out;
}

bool is_compact(const FaceRecord& face) { return face.is_compact; }

ZSeries face_series(const FaceRecord& face) {
  const Cone& c = face.normal_cone_closure;
  if (c.dim() == 0) return ZSeries(MClass(1));
  MarkedMonoid mm = marked_monoid_of_cell(c, face.m_witness, ones(c.ambient_rank()));
  return relint_series(mm, MClass(1));
}

namespace {

ZSeries newton_sum(const NewtonInput& inp, bool compact_only) {
  ZSeries out;
  for (const FaceRecord& f : newton_polyhedron(inp)) {
    if (compact_only && !f.is_compact) continue;
    ZSeries factor = inverse_frac().scale(MClass::symbol(f.symbol(0)));
    if (!m_vanishes_on(f)) factor += ZSeries(MClass::symbol(f.symbol(1)));
    out += factor * face_series(f);
  }
  return out;
}

}  // namespace

ZSeries newton_zeta(const NewtonInput& inp) { return newton_sum(inp, false); }

ZSeries newton_zeta_local(const NewtonInput& inp) { return newton_sum(inp, true); }

FanModel newton_to_fanmodel(const NewtonInput& inp) {
  const std::size_t n = inp.n;
  std::vector<FaceRecord> faces = newton_polyhedron(inp);
  const IntVec top = lifted(zero_vec(n), 1);
  std::vector<Cone> maximal;
  std::map<Cone, IntVec> vertex_of;
  std::map<Cone, MClass> weights;
  for (const FaceRecord& f : faces) {
    std::vector<IntVec> base = lifted_all(f.normal_cone_closure.rays());
    Cone flat = base.empty() ? Cone(n + 1) : cone_from_rays(n + 1, base);
    base.push_back(top);
    Cone vertical = cone_from_rays(n + 1, base);
    weights[flat] = MClass::symbol(f.symbol(1));
    weights[vertical] = MClass::symbol(f.symbol(0));
    if (f.normal_cone_closure.dim() == n) {
      maximal.push_back(vertical);
      vertex_of[vertical] = f.m_witness;
    }
  }
  ConeComplex K = ConeComplex::from_cones(n + 1, maximal);
  std::vector<IntVec> e, a;
  for (std::size_t j : K.maximal_cells()) {
    const IntVec& w = vertex_of.at(K.cells()[j]);
    e.push_back(lifted(w, 1));
    a.push_back(lifted(sub(ones(n), w), 0));
  }
  return make_fan_model(K, weights, e, a);
}

PoleSet newton_poles(const NewtonInput& inp) {
  PoleSet out{Rat(-1)};
  for (const IntVec& v : normal_complex(inp).rays()) {
    Int m = newton_m(inp, v);
    if (m <= 0) continue;
    Int sigma = 0;
    for (const Int& x : v) sigma += x;
    Rat q(-sigma, m);
    q.canonicalize();
    out.insert(q);
  }
  return out;
}

std::string ProbeResult::to_string() const {
  switch (status) {
    case Status::Pass:
      return "pass";
    case Status::Inconclusive:
      return "inconclusive: " + reason;
    case Status::Fail: {
      std::string pts;
      for (const IntVec& w : face->argmin_support) pts += (pts.empty() ? "" : " ") + motzeta::to_string(w);
      std::string wit;
      for (long x : witness) wit += (wit.empty() ? "" : ",") + std::to_string(x);
      return "fail: face " + std::to_string(face->face_id) + " {" + pts + "} at (" + wit + ")";
    }
  }
  return "";
}

ProbeResult nondegeneracy_probe(const NewtonInput& inp, long p) {
  validate_input(inp);
  if (!is_prime(p)) throw PreconditionError("nondegeneracy_probe: " + std::to_string(p) + " is not a prime");
  ProbeResult res;
  if (p < 3) {
    res.reason = "p must be at least 3";
    return res;
  }
  std::map<IntVec, long> coeff;
  for (const IntVec& w : inp.support) {
    auto it = inp.coeffs.find(w);
    if (it == inp.coeffs.end())
      throw PreconditionError("nondegeneracy_probe: no coefficient for " + to_string(w));
    long num = mod_p(it->second.get_num(), p), den = mod_p(it->second.get_den(), p);
    if (den == 0) throw PreconditionError("nondegeneracy_probe: denominator of " + to_string(w) + " vanishes mod p");
    if (num == 0) {
      res.reason = "coefficient of " + to_string(w) + " vanishes mod p";
      return res;
    }
    coeff[w] = num * pow_mod(den, p - 2, p) % p;
  }
  std::vector<FaceRecord> faces = newton_polyhedron(inp);
  std::stable_sort(faces.begin(), faces.end(), [](const FaceRecord& x, const FaceRecord& y) {
    if (x.is_compact != y.is_compact) return x.is_compact;
    return x.dim_face > y.dim_face;
  });
  const std::size_t n = inp.n;
  for (const FaceRecord& f : faces) {
    std::vector<long> x(n, 1);
    while (true) {
      long value = 0;
      std::vector<long> partial(n, 0);
      for (const IntVec& w : f.argmin_support) {
        long term = coeff[w];
        for (std::size_t i = 0; i < n; ++i) term = term * pow_mod(x[i], w[i].get_si(), p) % p;
        value = (value + term) % p;
        for (std::size_t i = 0; i < n; ++i) partial[i] = (partial[i] + term * mod_p(w[i], p)) % p;
      }
      if (value == 0 && std::all_of(partial.begin(), partial.end(), [](long v) { return v == 0; })) {
        res.status = ProbeResult::Status::Fail;
        res.face = f;
        for (long xi : x) res.witness.push_back(xi > p / 2 ? xi - p : xi);
        return res;
      }
      std::size_t i = n;
      while (i > 0 && x[i - 1] == p - 1) x[--i] = 1;
      if (i == 0) break;
      ++x[i - 1];
    }
  }
  res.status = ProbeResult::Status::Pass;
  return res;
}

}  // namespace motzeta

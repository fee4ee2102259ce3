#include "motzeta/series.hpp"

#include <algorithm>
#include <limits>

namespace motzeta {

namespace {

long to_long(const Int& x, const char* what) {
  if (!x.fits_slong_p()) throw PreconditionError(std::string(what) + ": exponent out of range");
  return x.get_si();
}

std::string L_power_text(long a) {
  if (a == 0) return "";
  if (a == 1) return "L";
  return "L^" + std::to_string(a);
}

std::string T_power_text(long b) { return b == 1 ? "T" : "T^" + std::to_string(b); }

std::string denom_text(const Denom& d) {
  std::string lp = L_power_text(d.a);
  return "1-" + (lp.empty() ? "" : lp + "*") + T_power_text(d.b);
}

bool is_constant_one(const MClass& c) { return c == MClass(1); }
bool is_constant_minus_one(const MClass& c) { return c == MClass(-1); }

// Text of c usable as the left factor of a product.
std::string factor_text(const MClass& c) {
  std::string s = c.to_string();
  if (c.terms().size() > 1) return "(" + s + ")";
  const auto& [sym, coeff] = *c.terms().begin();
  if (sym == MClass::kOne && !(coeff.den_pow() == 0 && coeff.num().is_monomial())) return "(" + s + ")";
  return s;
}

std::string term_text(const TermKey& k, const MClass& c) {
  std::string num;
  if (k.beta == 0) {
    num = factor_text(c);
  } else if (is_constant_one(c)) {
    num = T_power_text(k.beta);
  } else if (is_constant_minus_one(c)) {
    num = "-" + T_power_text(k.beta);
  } else {
    num = factor_text(c) + "*" + T_power_text(k.beta);
  }
  if (k.denoms.empty()) return num;
  std::vector<std::pair<Denom, int>> groups;
  for (const Denom& d : k.denoms) {
    if (!groups.empty() && groups.back().first == d) ++groups.back().second;
    else groups.push_back({d, 1});
  }
  std::string den;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (i > 0) den += "*";
    den += "(" + denom_text(groups[i].first) + ")";
    if (groups[i].second > 1) den += "^" + std::to_string(groups[i].second);
  }
  if (groups.size() > 1) den = "(" + den + ")";
  return num + "/" + den;
}

std::vector<Denom> merged(const std::vector<Denom>& a, const std::vector<Denom>& b) {
  std::vector<Denom> out;
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

ZSeries::ZSeries(const MClass& c) { add_term(TermKey{}, c); }

ZSeries ZSeries::term(const MClass& c, long beta, std::vector<Denom> denoms) {
  if (beta < 0) throw PreconditionError("ZSeries::term: negative power of T");
  for (const Denom& d : denoms)
    if (d.b < 1) throw PreconditionError("ZSeries::term: denominator needs a positive power of T");
  std::sort(denoms.begin(), denoms.end());
  ZSeries s;
  s.add_term(TermKey{beta, std::move(denoms)}, c);
  return s;
}

void ZSeries::add_term(const TermKey& k, const MClass& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

ZSeries ZSeries::operator+(const ZSeries& o) const {
  ZSeries out = *this;
  out += o;
  return out;
}

ZSeries& ZSeries::operator+=(const ZSeries& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

ZSeries ZSeries::operator-() const {
  ZSeries out;
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
  return out;
}

ZSeries ZSeries::operator-(const ZSeries& o) const { return *this + (-o); }

ZSeries ZSeries::operator*(const ZSeries& o) const {
  ZSeries out;
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_)
      out.add_term(TermKey{k1.beta + k2.beta, merged(k1.denoms, k2.denoms)}, c1 * c2);
  return out;
}

ZSeries ZSeries::scale(const MClass& c) const {
  ZSeries out;
  for (const auto& [k, v] : terms_) out.add_term(k, v * c);
  return out;
}

ZSeries ZSeries::shift_T(long k) const {
  ZSeries out;
  for (const auto& [key, c] : terms_) {
    if (key.beta + k < 0) throw PreconditionError("shift_T: negative power of T");
    out.add_term(TermKey{key.beta + k, key.denoms}, c);
  }
  return out;
}

std::string ZSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    std::string t = term_text(k, c);
    if (first) out = t;
    else if (t[0] == '-') out += " - " + t.substr(1);
    else out += " + " + t;
    first = false;
  }
  return out;
}

ZSeries add(const ZSeries& a, const ZSeries& b) { return a + b; }
ZSeries mul(const ZSeries& a, const ZSeries& b) { return a * b; }
ZSeries scale(const ZSeries& s, const MClass& c) { return s.scale(c); }
ZSeries shift_T(const ZSeries& s, long k) { return s.shift_T(k); }

ZSeries subst_T_L(const ZSeries& s, long k) {
  ZSeries out;
  for (const auto& [key, c] : s.terms()) {
    std::vector<Denom> ds;
    for (const Denom& d : key.denoms) ds.push_back(Denom{d.a + k * d.b, d.b});
    out += ZSeries::term(c.scale_L(k * key.beta), key.beta, ds);
  }
  return out;
}

namespace {

ZSeries cone_series_impl(const MarkedMonoid& mm, const MClass& weight, const std::vector<std::size_t>* order,
                         bool allow_zero_e) {
  const std::size_t r = mm.base.rank;
  if (mm.e_pi.size() != r || mm.a_div.size() != r)
    throw DimensionError("cone_series: vector length differs from monoid rank");
  if (!allow_zero_e && is_zero(mm.e_pi)) throw PreconditionError("cone_series: e_pi is zero");
  if (r == 0) return ZSeries(weight);
  if (!mm.base.cone.contains(mm.e_pi)) throw PreconditionError("cone_series: e_pi is not in the monoid");
  Cone dual = dual_cone(mm.base.cone);
  for (const IntVec& v : dual.rays())
    if (dot(v, mm.e_pi) == 0 && dot(v, mm.a_div) != 1)
      throw PreconditionError("cone_series: horizontal dual ray " + to_string(v) + " has <v, a> != 1");
  std::vector<HalfOpenCone> pieces = order ? triangulate_half_open(dual, Region::RelativeInterior, *order)
                                           : triangulate_half_open(dual, Region::RelativeInterior);
  ZSeries out;
  for (const HalfOpenCone& h : pieces) {
    std::vector<Denom> ds;
    long horizontal = 0;
    for (const IntVec& v : h.gens) {
      long b = to_long(dot(v, mm.e_pi), "cone_series");
      if (b == 0) ++horizontal;
      else ds.push_back(Denom{-to_long(dot(v, mm.a_div), "cone_series"), b});
    }
    MClass fold = weight.scale_L(horizontal).mul_L1_pow(-horizontal);
    for (const IntVec& p : box_points(h)) {
      long beta = to_long(dot(p, mm.e_pi), "cone_series");
      long alpha = to_long(dot(p, mm.a_div), "cone_series");
      out += ZSeries::term(fold.scale_L(-alpha), beta, ds);
    }
  }
  return out;
}

}  // namespace

ZSeries cone_series(const MarkedMonoid& mm, const MClass& weight) {
  return cone_series_impl(mm, weight, nullptr, false);
}

ZSeries relint_series(const MarkedMonoid& mm, const MClass& weight) {
  return cone_series_impl(mm, weight, nullptr, true);
}

ZSeries cone_series(const MarkedMonoid& mm, const MClass& weight, const std::vector<std::size_t>& ray_order) {
  return cone_series_impl(mm, weight, &ray_order, false);
}

std::vector<MClass> expand_from_zero(const ZSeries& s, long D) {
  if (D < 0) throw PreconditionError("expand: negative degree");
  std::vector<MClass> out(D + 1);
  for (const auto& [k, c] : s.terms()) {
    if (k.beta > D) continue;
    std::vector<LaurentPoly> P(D + 1);
    P[k.beta] = LaurentPoly(1);
    for (const Denom& d : k.denoms) {
      LaurentPoly step = LaurentPoly::monomial(1, d.a);
      for (long i = d.b; i <= D; ++i)
        if (!P[i - d.b].is_zero()) P[i] = P[i] + step * P[i - d.b];
    }
    for (long i = k.beta; i <= D; ++i)
      if (!P[i].is_zero()) out[i] += c * MCoeff(P[i]);
  }
  return out;
}

std::vector<MClass> expand(const ZSeries& s, long D) {
  std::vector<MClass> all = expand_from_zero(s, D);
  return std::vector<MClass>(all.begin() + 1, all.end());
}

MClass limit_T_inf(const ZSeries& s) {
  MClass out;
  for (const auto& [k, c] : s.terms()) {
    long sum_b = 0, sum_a = 0;
    for (const Denom& d : k.denoms) {
      sum_b += d.b;
      sum_a += d.a;
    }
    if (k.beta > sum_b) throw LimitError("limit_T_inf: term of positive degree in T");
    if (k.beta < sum_b) continue;
    MClass t = c.scale_L(-sum_a);
    out += k.denoms.size() % 2 ? -t : t;
  }
  return out;
}

PoleSet candidate_poles(const ZSeries& s) {
  PoleSet out;
  for (const auto& [k, c] : s.terms())
    for (const Denom& d : k.denoms) {
      Rat q(Int(d.a), Int(d.b));
      q.canonicalize();
      out.insert(q);
    }
  return out;
}

bool equal(const ZSeries& s1, const ZSeries& s2) {
  ZSeries diff = s1 - s2;
  if (diff.is_zero()) return true;
  // Class symbols are linearly independent, so compare symbol by symbol.
  std::map<std::string, ZSeries> parts;
  for (const auto& [k, c] : diff.terms())
    for (const auto& [sym, coeff] : c.terms()) parts[sym] += ZSeries::term(MClass(coeff), k.beta, k.denoms);
  for (const auto& [sym, part] : parts) {
    if (part.is_zero()) continue;
    // With D the product of all denominators to their highest multiplicity,
    // part * D is a polynomial of degree at most B; it vanishes iff the
    // expansion of part vanishes up to T^B.
    std::map<Denom, long> common;
    for (const auto& [k, c] : part.terms()) {
      std::map<Denom, long> mult;
      for (const Denom& d : k.denoms) ++mult[d];
      for (const auto& [d, m] : mult) common[d] = std::max(common[d], m);
    }
    long total = 0;
    for (const auto& [d, m] : common) total += m * d.b;
    long B = 0;
    for (const auto& [k, c] : part.terms()) {
      long own = 0;
      for (const Denom& d : k.denoms) own += d.b;
      B = std::max(B, k.beta + total - own);
    }
    for (const MClass& x : expand_from_zero(part, B))
      if (!x.is_zero()) return false;
  }
  return true;
}

std::string to_string(const PoleSet& poles) {
  std::string out;
  for (const Rat& q : poles) {
    if (!out.empty()) out += ", ";
    out += q.get_str();
  }
  return out;
}

}  // namespace motzeta

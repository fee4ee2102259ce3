#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "motzeta/monoids.hpp"
#include "motzeta/mring.hpp"

namespace motzeta {

/// The limit T -> infinity does not exist for the given series.
class LimitError : public Error {
 public:
  using Error::Error;
};

/// A factor 1 / (1 - L^a T^b) with b >= 1. Ordered by (b, a).
struct Denom {
  long a = 0;
  long b = 1;
  bool operator==(const Denom&) const = default;
  bool operator<(const Denom& o) const { return b != o.b ? b < o.b : a < o.a; }
};

struct TermKey {
  long beta = 0;
  std::vector<Denom> denoms;  // sorted
  bool operator==(const TermKey&) const = default;
  bool operator<(const TermKey& o) const {
    if (beta != o.beta) return beta < o.beta;
    return denoms < o.denoms;
  }
};

using PoleSet = std::set<Rat>;

/// Finite sum of terms c * T^beta / prod (1 - L^a T^b), c in MClass.
class ZSeries {
 public:
  ZSeries() = default;
  /// The constant series c.
  explicit ZSeries(const MClass& c);
  static ZSeries term(const MClass& c, long beta, std::vector<Denom> denoms = {});

  const std::map<TermKey, MClass>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  ZSeries operator+(const ZSeries& o) const;
  ZSeries operator-(const ZSeries& o) const;
  ZSeries operator-() const;
  ZSeries& operator+=(const ZSeries& o);
  ZSeries operator*(const ZSeries& o) const;
  ZSeries scale(const MClass& c) const;
  ZSeries shift_T(long k) const;
  /// Structural equality of canonical forms (see equal() for ring equality).
  bool operator==(const ZSeries& o) const = default;

  std::string to_string() const;

 private:
  void add_term(const TermKey& k, const MClass& c);
  std::map<TermKey, MClass> terms_;
};

ZSeries add(const ZSeries& a, const ZSeries& b);
ZSeries mul(const ZSeries& a, const ZSeries& b);
ZSeries scale(const ZSeries& s, const MClass& c);
ZSeries shift_T(const ZSeries& s, long k);
/// Substitute T -> L^k T.
ZSeries subst_T_L(const ZSeries& s, long k);

/// Generating function of the lattice points u in the relative interior of
/// the dual cone, weighted by L^{-<u, a_div>} T^{<u, e_pi>} and multiplied by
/// weight. Dual rays with <v, e_pi> = 0 must have <v, a_div> = 1; each of them
/// contributes a factor L / (L - 1).
ZSeries cone_series(const MarkedMonoid& mm, const MClass& weight);
/// Like cone_series, but e_pi may vanish; then every dual ray is horizontal.
ZSeries relint_series(const MarkedMonoid& mm, const MClass& weight);
/// Same, with the triangulation taken in the given order of the dual rays.
ZSeries cone_series(const MarkedMonoid& mm, const MClass& weight, const std::vector<std::size_t>& ray_order);

/// Coefficients of T^1 .. T^D.
std::vector<MClass> expand(const ZSeries& s, long D);
/// Coefficients of T^0 .. T^D.
std::vector<MClass> expand_from_zero(const ZSeries& s, long D);

MClass limit_T_inf(const ZSeries& s);
PoleSet candidate_poles(const ZSeries& s);
/// Equality in the ring of rational functions, by cross-multiplication.
bool equal(const ZSeries& s1, const ZSeries& s2);

std::string to_string(const PoleSet& poles);

}  // namespace motzeta

#pragma once

#include <optional>
#include <vector>

#include "motzeta/cones.hpp"

namespace motzeta {

/// Sharp fine saturated monoid M = cone ∩ Z^r, where Z^r are coordinates on
/// the lattice M^gp. The lattice is realized inside an ambient space Q^n by
/// x = basis * y / denominator.
struct SharpFsMonoid {
  std::size_t rank = 0;
  IntMat basis;
  Int denominator = 1;
  Cone cone;
};

/// A sharp fs monoid with the image e_pi of 1 under N -> M and a principal
/// generator a_div of the divisor, both in lattice coordinates.
struct MarkedMonoid {
  SharpFsMonoid base;
  IntVec e_pi;
  IntVec a_div;
};

/// A divisor on M: one integer per height-one prime (facet of the cone).
struct MonoidDivisor {
  std::vector<Int> values;
  bool operator==(const MonoidDivisor&) const = default;
};

struct MonoidFace {
  Cone face;
  /// Height of the prime ideal M \ face, equal to the codimension of the face.
  std::size_t height = 0;
  /// Indices of the height-one primes contained in that prime ideal.
  std::vector<std::size_t> facets;
};

struct SharpQuotient {
  SharpFsMonoid monoid;
  std::size_t unit_rank = 0;
  /// Map from the old lattice coordinates onto the sharp quotient's.
  IntMat projection;
};

SharpFsMonoid monoid_from_generators(std::size_t ambient_rank, const std::vector<IntVec>& gens);
/// Monoid cone ∩ Z^r with the standard realization.
SharpFsMonoid monoid_from_cone(const Cone& cone);
SharpQuotient sharpify(const IntMat& lattice, const Cone& cone);

std::vector<std::size_t> height1_primes(const SharpFsMonoid& M);
IntVec valuation(const SharpFsMonoid& M, std::size_t facet);
std::vector<MonoidFace> face_lattice(const SharpFsMonoid& M);

/// Content of e_pi.
Int root_index(const MarkedMonoid& mm);
/// Order of the torsion part of M^gp / Z e_pi.
Int root_index_by_torsion(const MarkedMonoid& mm);

/// The saturated base change along N -> N, 1 -> d: the lattice M^gp + Z e_pi/d
/// with the same cone, marked by e_pi/d.
MarkedMonoid base_change(const MarkedMonoid& mm, const Int& d);
/// Order of the torsion subgroup of the groupification of the pushout
/// P ⊕_N N along multiplication by d.
Int base_change_unit_torsion(const MarkedMonoid& mm, const Int& d);
/// True iff the maximal ideal of the saturated base change is generated by
/// the maximal ideal of the original monoid, i.e. the base change adds no
/// new irreducible elements. Happens exactly when the lattice is unchanged.
bool base_change_max_ideal_from_base(const MarkedMonoid& mm, const Int& d);

MonoidDivisor divisor_from_element(const SharpFsMonoid& M, const IntVec& a);
MonoidDivisor divisor_add(const MonoidDivisor& a, const MonoidDivisor& b);

/// Lattice points u in the relative interior of the dual cone with
/// <u, e_pi> <= bound, and <u, a_div> <= a_bound when given. Without an
/// a_bound the set must be finite, i.e. e_pi must lie in the interior.
std::vector<IntVec> local_dual_points(const MarkedMonoid& mm, const Int& bound,
                                      const std::optional<Int>& a_bound = std::nullopt);

/// Marked monoid whose dual cone is a strictly convex cell tau of R^n, with
/// the linear functionals e and a on R^n restricted to the span of tau.
/// The span lattice basis (columns) is written to span_basis when given.
MarkedMonoid marked_monoid_of_cell(const Cone& tau, const IntVec& e, const IntVec& a,
                                   IntMat* span_basis = nullptr);

}  // namespace motzeta

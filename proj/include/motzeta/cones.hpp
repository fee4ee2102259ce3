#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "motzeta/intlin.hpp"

namespace motzeta {

/// Output of the double description method for {x : <c_i, x> >= 0 for all i}:
/// a basis of the lineality space and one generator per extreme ray modulo it.
struct DoubleDescription {
  std::vector<IntVec> lineality;
  std::vector<IntVec> rays;
};

DoubleDescription dd_solve(std::size_t n, const std::vector<IntVec>& constraints);

/// Rational polyhedral cone in R^n, stored in both descriptions.
///
/// rays() are the extreme rays modulo the lineality space, facets() the
/// inward facet normals modulo the equations (the orthogonal complement of
/// the linear span). All four lists are canonical: primitive in the relevant
/// quotient lattice, reduced to a fixed coset representative and sorted.
class Cone {
 public:
  Cone() = default;
  /// The zero cone {0} in R^n.
  explicit Cone(std::size_t n);

  static Cone from_generators(std::size_t n, const std::vector<IntVec>& gens,
                              const std::vector<IntVec>& lineality_gens = {});
  static Cone from_inequalities(std::size_t n, const std::vector<IntVec>& inequalities,
                                const std::vector<IntVec>& equations = {});

  std::size_t ambient_rank() const { return n_; }
  const std::vector<IntVec>& rays() const { return rays_; }
  const std::vector<IntVec>& facets() const { return facets_; }
  const std::vector<IntVec>& lineality() const { return lineality_; }
  const std::vector<IntVec>& equations() const { return equations_; }

  std::size_t dim() const { return n_ - equations_.size(); }
  bool is_strictly_convex() const { return lineality_.empty(); }
  bool is_simplicial() const { return is_strictly_convex() && rays_.size() == dim(); }
  bool is_smooth() const;
  bool contains(const IntVec& v) const;
  bool relint_contains(const IntVec& v) const;
  bool in_span(const IntVec& v) const;
  /// True iff every point of `other` lies in this cone.
  bool contains_cone(const Cone& other) const;

  /// Sum of the rays; lies in the relative interior.
  IntVec interior_vector() const;
  /// The dual cone, obtained by swapping the two descriptions.
  Cone dual() const;

  bool operator==(const Cone& other) const = default;
  std::strong_ordering operator<=>(const Cone& other) const;

 private:
  void canonicalize(std::vector<IntVec> rays, std::vector<IntVec> lineality,
                    std::vector<IntVec> facets, std::vector<IntVec> equations);

  std::size_t n_ = 0;
  std::vector<IntVec> rays_;
  std::vector<IntVec> facets_;
  std::vector<IntVec> lineality_;
  std::vector<IntVec> equations_;
};

Cone cone_from_rays(std::size_t n, const std::vector<IntVec>& rays);
Cone cone_from_inequalities(std::size_t n, const std::vector<IntVec>& inequalities);
Cone dual_cone(const Cone& c);
/// All faces of c, from the minimal face (the lineality space) up to c.
std::vector<Cone> faces(const Cone& c);
/// True iff f is a face of c.
bool is_face_of(const Cone& f, const Cone& c);
/// Smallest cone containing both.
Cone join(const Cone& a, const Cone& b);
Cone join(const Cone& a, const IntVec& ray);

/// A finite set of cones closed under taking faces.
class ConeComplex {
 public:
  ConeComplex() = default;
  explicit ConeComplex(std::size_t n) : n_(n) {}
  /// Complex generated by the given cones and all of their faces.
  static ConeComplex from_cones(std::size_t n, const std::vector<Cone>& cones);

  std::size_t ambient_rank() const { return n_; }
  /// Cells sorted by (dimension, canonical form).
  const std::vector<Cone>& cells() const { return cells_; }
  /// Indices of the faces of cell i (including i itself).
  const std::vector<std::size_t>& faces_of(std::size_t i) const { return face_table_[i]; }
  /// Index of a cell equal to c, or cells().size() if absent.
  std::size_t find(const Cone& c) const;
  std::vector<std::size_t> maximal_cells() const;
  /// Index of the unique cell whose relative interior contains v.
  std::size_t carrier(const IntVec& v) const;
  bool support_contains(const IntVec& v) const;
  /// Distinct rays of the complex.
  std::vector<IntVec> rays() const;

  bool operator==(const ConeComplex& other) const { return n_ == other.n_ && cells_ == other.cells_; }

 private:
  std::size_t n_ = 0;
  std::vector<Cone> cells_;
  std::vector<std::vector<std::size_t>> face_table_;
};

/// True iff any two cells meet in a common face.
bool is_fan(const ConeComplex& K);

ConeComplex star_subdivision(const ConeComplex& K, const IntVec& rho);
ConeComplex resolve_complex(const ConeComplex& K);
/// True iff Kp refines K with the same support. Kp is assumed to be a fan.
bool check_subdivision(const ConeComplex& Kp, const ConeComplex& K);

struct HalfOpenCone {
  std::size_t ambient_rank = 0;
  std::vector<IntVec> gens;
  std::vector<bool> strict;
};

enum class Region { RelativeInterior, Closed };

/// Placing triangulation of a strictly convex cone in the order of its rays.
/// Each simplex is a sorted list of ray indices.
std::vector<std::vector<std::size_t>> placing_triangulation(const Cone& c);
std::vector<std::vector<std::size_t>> placing_triangulation(const Cone& c,
                                                            const std::vector<std::size_t>& order);

std::vector<HalfOpenCone> triangulate_half_open(const Cone& c, Region region);
std::vector<HalfOpenCone> triangulate_half_open(const Cone& c, Region region,
                                                const std::vector<std::size_t>& order);

/// Lattice points of the half-open fundamental parallelepiped of h, with
/// respect to the saturated lattice of the span of its generators.
std::vector<IntVec> box_points(const HalfOpenCone& h);

/// Points x in Z^n with c_0 + <(c_1..c_n), x> >= 0 for every row c. The
/// region must be bounded.
std::vector<IntVec> lattice_points_in_polytope(std::size_t n, const std::vector<IntVec>& inequalities);

}  // namespace motzeta

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "motzeta/zeta.hpp"

namespace motzeta {

struct NewtonInput {
  std::size_t n = 0;
  std::vector<IntVec> support;
  /// Coefficients a_omega, keyed by support point. Only the probe reads them.
  std::map<IntVec, Rat> coeffs;
};

/// A face tau of the Newton polyhedron together with the closure of its
/// normal cone inside the dual orthant.
struct FaceRecord {
  std::size_t face_id = 0;
  /// Points of the support lying on the face, sorted.
  std::vector<IntVec> argmin_support;
  /// Coordinates i with e_i in the recession cone of the face.
  std::vector<std::size_t> recession_coords;
  Cone normal_cone_closure;
  std::size_t dim_face = 0;
  bool is_compact = false;
  /// A support point on the face; m(u) = <u, m_witness> on the normal cone.
  IntVec m_witness;

  std::string symbol(int k) const;
};

/// Check the input conditions on n and the support.
void validate_input(const NewtonInput& inp);

/// One record per face, in the order of the cells of the normal complex.
std::vector<FaceRecord> newton_polyhedron(const NewtonInput& inp);
ConeComplex normal_complex(const NewtonInput& inp);
bool is_compact(const FaceRecord& face);
/// m(u) = min over the support of <u, omega>.
Int newton_m(const NewtonInput& inp, const IntVec& u);

/// Sum over the lattice points u of the relative interior of the normal cone
/// of L^{-sigma(u)} T^{m(u)}, sigma(u) = u_1 + ... + u_n.
ZSeries face_series(const FaceRecord& face);

ZSeries newton_zeta(const NewtonInput& inp);
ZSeries newton_zeta_local(const NewtonInput& inp);
FanModel newton_to_fanmodel(const NewtonInput& inp);
PoleSet newton_poles(const NewtonInput& inp);

struct ProbeResult {
  enum class Status { Pass, Fail, Inconclusive };
  Status status = Status::Inconclusive;
  /// Set when status is Fail.
  std::optional<FaceRecord> face;
  /// Torus point in symmetric residues mod p.
  std::vector<long> witness;
  std::string reason;

  std::string to_string() const;
};

/// Search the torus over F_p for a common zero of f_tau and its logarithmic
/// partial derivatives, for every face tau.
ProbeResult nondegeneracy_probe(const NewtonInput& inp, long p);

}  // namespace motzeta

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "motzeta/series.hpp"

namespace motzeta {

/// A fan model violates one of its legality rules.
class ValidationError : public PreconditionError {
 public:
  explicit ValidationError(std::vector<std::string> diagnostics);
  const std::vector<std::string>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<std::string> diagnostics_;
};

struct SncdComponent {
  std::string id;
  long N = 1;
  std::optional<long> mu;
  std::optional<long> nu;
};

struct SncdStratum {
  std::vector<std::string> J;
  std::string symbol;
};

struct SncdData {
  long m = 0;
  std::vector<SncdComponent> components;
  std::vector<SncdStratum> strata;
};

/// Fan model: a complex of strictly convex cones, a weight per cell and the
/// functionals e, a given by one dual vector per maximal cell.
struct FanModel {
  ConeComplex complex;
  /// Aligned with complex.cells().
  std::vector<MClass> weight;
  /// Aligned with complex.maximal_cells().
  std::vector<IntVec> e_vec;
  std::vector<IntVec> a_vec;

  std::size_t ambient_rank() const { return complex.ambient_rank(); }
  /// Dual vectors valid on cell i (those of a maximal cell containing it).
  const IntVec& e_on(std::size_t i) const;
  const IntVec& a_on(std::size_t i) const;
};

/// Build a model. Cells absent from weights get weight 0; e and a hold one
/// vector per maximal cell (in maximal_cells() order) or a single global one.
FanModel make_fan_model(const ConeComplex& complex, const std::map<Cone, MClass>& weights,
                        const std::vector<IntVec>& e, const std::vector<IntVec>& a);

enum class PolePolicy { Reject, Allow };

ZSeries sncd_poincare(const SncdData& d);
ZSeries dl_zeta(const SncdData& d);
/// Sum over the strata of (1 - L)^{|J| - 1} [E_J].
MClass sncd_nearby_fibre(const SncdData& d);
MClass nearby_fibre(const ZSeries& z);

std::vector<std::string> validate_model(const FanModel& f);
/// Raises ValidationError unless validate_model(f) is empty.
void require_valid(const FanModel& f);

ZSeries fan_poincare(const FanModel& f, long m, PolePolicy policy = PolePolicy::Reject);
PoleSet fan_poles(const FanModel& f);
FanModel sncd_to_fanmodel(const SncdData& d);
FanModel transport_subdivide(const FanModel& f, const ConeComplex& Kp);
/// Star subdivision at rho followed by transport.
FanModel subdivide_model(const FanModel& f, const IntVec& rho);
/// Resolution of the complex followed by transport.
FanModel resolve_model(const FanModel& f);

}  // namespace motzeta

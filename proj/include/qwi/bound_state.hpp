#pragma once

#include <optional>
#include <string_view>

namespace qwi {

enum class Method { classical, transfer, impedance };

std::string_view to_string(Method method);

/// One eigenstate found by one of the analytic methods.
struct BoundState {
  double energy = 0.0;
  Method method = Method::classical;
  int index = 0;  ///< position in the ascending energy list
  /// Residual of the method's bound-state condition at `energy`.
  double residual = 0.0;
  /// |C11|^2 for the classical method; the in-well density prefactor
  /// 2/(a + (k1+k3)/(k1 k3)) for the impedance method; absent for transfer.
  std::optional<double> norm_constant;
  /// Real phase of the in-well cosine, cos(k2 x + phase). Absent for transfer.
  std::optional<double> phase;
};

}  // namespace qwi

#pragma once

#include <cstdint>
#include <span>

#include "radonlike/exponents.hpp"

namespace radonlike {

struct DualCheckOptions {
  std::uint64_t seed = 7;
  double newton_tolerance = 1e-12;
  int newton_steps = 50;
};

/// Max over seeded samples (x', y'', y') in [-1,1] of
/// |2^{j beta''} S*(2^{-j alpha'} x', 2^{-j alpha''} y'', 2^{-j beta'} y') + S^P(x', y'', y')|,
/// where S*(x', y'', y') = -S(x', Phi^{-1}(y''), y') and Phi(x'') = x'' + S(x', x'', y').
double dual_principal_check(const OperatorSpec& spec, long j, int sample_points,
                            DualCheckOptions options = {});

/// The same deviation at one point (x', y'', y').
double dual_deviation_at(const OperatorSpec& spec, long j, std::span<const double> point,
                         DualCheckOptions options = {});

}  // namespace radonlike

#pragma once

#include <utility>
#include <vector>

#include "radonlike/exponents.hpp"

namespace radonlike {

struct KnappOptions {
  int nodes_per_axis = 16;
  int max_depth = 48;
};

/// <chi_F, T chi_E> for the centered boxes E_t (sides eps 2^{beta_i t}) and
/// F_t (sides eps 2^{alpha~_i t}). Midpoint rule over (x', y'); adaptive
/// bisection along x'' where the box indicator switches.
double knapp_integral(const OperatorSpec& spec, double t, double epsilon, KnappOptions options = {});

struct KnappScan {
  std::vector<std::pair<double, double>> values;  // (t, integral)
  /// (t, log2(I(t) / I(t-1))) for consecutive t; tends to |alpha'|+|beta'|+|beta''|.
  std::vector<std::pair<double, double>> exponents;
};

/// Integrals at t = tmax, tmax-1, ..., tmin.
KnappScan knapp_scan(const OperatorSpec& spec, double tmin, double tmax, double epsilon,
                     KnappOptions options = {});

}  // namespace radonlike

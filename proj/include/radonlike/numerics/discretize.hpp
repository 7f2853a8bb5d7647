#pragma once

#include <span>

#include "radonlike/exponents.hpp"
#include "radonlike/numerics/grid.hpp"
#include "radonlike/numerics/grid_operator.hpp"

namespace radonlike {

inline constexpr double kDefaultHalfWidth = 2.0;

struct DiscretizeOptions {
  /// Require the cutoff support to span at least four cells on every axis.
  bool enforce_resolution = true;
};

/// Output grid over x = (x', x'') with windows L 2^{-j alpha_i}.
Grid level_output_grid(const OperatorSpec& spec, std::size_t points_per_axis, long j,
                       double half_width = kDefaultHalfWidth);
/// Input grid over y = (y', y'') with windows L 2^{-j beta'_i} and L 2^{-j alpha''_i}.
Grid level_input_grid(const OperatorSpec& spec, std::size_t points_per_axis, long j,
                      double half_width = kDefaultHalfWidth);

/// psi(x,y') [phi(2^{j w} z) - phi(2^{(j+1) w} z)] at z = (x', x'', y').
double dyadic_amplitude(const OperatorSpec& spec, std::span<const double> z, long j);
/// psi(x,y') phi(2^{j w} z) at z = (x', x'', y').
double truncated_amplitude(const OperatorSpec& spec, std::span<const double> z, long j);

GridOperator discretize_Tj(const OperatorSpec& spec, const Grid& domain, const Grid& range, long j,
                           DiscretizeOptions options = {});
GridOperator discretize_Uj(const OperatorSpec& spec, const Grid& domain, const Grid& range, long j,
                           DiscretizeOptions options = {});

inline GridOperator discretize_Tj(const OperatorSpec& spec, const Grid& grid, long j,
                                  DiscretizeOptions options = {}) {
  return discretize_Tj(spec, grid, grid, j, options);
}
inline GridOperator discretize_Uj(const OperatorSpec& spec, const Grid& grid, long j,
                                  DiscretizeOptions options = {}) {
  return discretize_Uj(spec, grid, grid, j, options);
}

}  // namespace radonlike

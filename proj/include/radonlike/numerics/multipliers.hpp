#pragma once

#include <span>
#include <variant>

#include "radonlike/exponents.hpp"
#include "radonlike/numerics/grid_operator.hpp"

namespace radonlike {

/// Low-pass projection in xi'' at scale 2^{j beta''}.
struct LowPass {
  long j;
};
/// Shell k of the projection at scale 2^{j beta''}.
struct Shell {
  long j;
  long k;
};
/// Nonisotropic Bessel potential of order s with exponents gamma (one per axis).
struct BesselPotential {
  double s;
  MultiIndex gamma;
};
/// Localization of xi''_i to 1 < |xi''_i / lambda| < 2.
struct AnnulusProjection {
  double lambda;
  std::size_t axis;
};

using MultiplierKind = std::variant<LowPass, Shell, BesselPotential, AnnulusProjection>;

double low_pass_symbol(const MultiIndex& beta_dprime, long j, std::span<const double> xi_dprime);
double shell_symbol(const MultiIndex& beta_dprime, long j, long k, std::span<const double> xi_dprime);
double bessel_symbol(double s, const MultiIndex& gamma, std::span<const double> xi);
double annulus_symbol(double lambda, std::size_t axis, std::span<const double> xi_dprime);

/// Multiplier on a grid over (y', y''); the symbol is sampled at the grid frequencies.
GridOperator frequency_multiplier(const MultiplierKind& kind, const OperatorSpec& spec,
                                  const Grid& grid);

}  // namespace radonlike

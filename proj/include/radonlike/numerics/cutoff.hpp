#pragma once

#include <span>

namespace radonlike {

/// Smooth plateau: 1 on [-1,1], 0 outside (-2,2), monotone on each half-line.
double phi0(double t);

/// Product cutoff prod_i phi0(z_i).
double phi_product(std::span<const double> z);

/// Radial cutoff phi0(2|xi|): 1 on the ball of radius 1/2, supported in the unit ball.
double phi_radial(std::span<const double> xi);

/// Even bump on 1 < |t| < 2 with peak value 1 at |t| = 3/2.
double annulus_bump(double t);

}  // namespace radonlike

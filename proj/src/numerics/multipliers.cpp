#include "radonlike/numerics/multipliers.hpp"

#include <cmath>
#include <vector>

#include "radonlike/numerics/cutoff.hpp"

namespace radonlike {

namespace {

double scaled_radial(const MultiIndex& beta_dprime, long shift, long j,
                     std::span<const double> xi_dprime) {
  double s = 0.0;
  for (std::size_t l = 0; l < xi_dprime.size(); ++l) {
    const double v = std::ldexp(xi_dprime[l], static_cast<int>(-shift - j * beta_dprime[l]));
    s += v * v;
  }
  return phi0(2.0 * std::sqrt(s));
}

double scaled_product(const MultiIndex& gamma, long j, std::span<const double> xi) {
  double p = 1.0;
  for (std::size_t i = 0; i < xi.size() && p != 0.0; ++i)
    p *= phi0(std::ldexp(xi[i], static_cast<int>(-j * gamma[i])));
  return p;
}

}  // namespace

double low_pass_symbol(const MultiIndex& beta_dprime, long j, std::span<const double> xi_dprime) {
  return scaled_radial(beta_dprime, 0, j, xi_dprime);
}

double shell_symbol(const MultiIndex& beta_dprime, long j, long k,
                    std::span<const double> xi_dprime) {
  return scaled_radial(beta_dprime, k + 1, j, xi_dprime) - scaled_radial(beta_dprime, k, j, xi_dprime);
}

double bessel_symbol(double s, const MultiIndex& gamma, std::span<const double> xi) {
  require(gamma.size() == xi.size() && gamma.all_positive(), ErrorKind::InvalidArgument,
          "Bessel exponents must be positive, one per axis");
  double total = phi_product(xi);
  for (long j = 1;; ++j) {
    // The j-th difference vanishes once every |xi_i| <= 2^{(j-1) gamma_i}.
    bool active = false;
    for (std::size_t i = 0; i < xi.size(); ++i)
      if (std::abs(xi[i]) > std::ldexp(1.0, static_cast<int>((j - 1) * gamma[i]))) active = true;
    if (!active) break;
    require(j * gamma.max() <= kDilationCap, ErrorKind::DilationCap,
            "Bessel sum exceeds the dilation cap");
    total += std::exp2(s * static_cast<double>(j)) *
             (scaled_product(gamma, j, xi) - scaled_product(gamma, j - 1, xi));
  }
  return total;
}

double annulus_symbol(double lambda, std::size_t axis, std::span<const double> xi_dprime) {
  require(lambda > 0.0, ErrorKind::InvalidArgument, "lambda must be positive");
  require(axis < xi_dprime.size(), ErrorKind::InvalidArgument, "annulus axis out of range");
  return annulus_bump(xi_dprime[axis] / lambda);
}

GridOperator frequency_multiplier(const MultiplierKind& kind, const OperatorSpec& spec,
                                  const Grid& grid) {
  spec.validate();
  const std::size_t np = spec.n_prime();
  const std::size_t nd = spec.n_dprime();
  const std::size_t n = np + nd;
  require(grid.dimension() == n, ErrorKind::InvalidArgument, "grid dimension must be n' + n''");
  const bool all_axes = std::holds_alternative<BesselPotential>(kind);
  if (all_axes)
    require(std::get<BesselPotential>(kind).gamma.size() == n, ErrorKind::InvalidArgument,
            "Bessel exponents need one entry per axis");
  std::vector<std::size_t> axes;
  for (std::size_t a = all_axes ? 0 : np; a < n; ++a) axes.push_back(a);

  OperatorTag tag;
  if (auto* q = std::get_if<LowPass>(&kind)) tag.j = q->j;
  if (auto* p = std::get_if<Shell>(&kind)) {
    tag.j = p->j;
    tag.k = p->k;
  }

  Eigen::VectorXd symbol(static_cast<Eigen::Index>(grid.size()));
  std::vector<double> xi(n);
  for (std::size_t idx = 0; idx < grid.size(); ++idx) {
    std::size_t rest = idx;
    for (std::size_t a = n; a-- > 0;) {
      xi[a] = grid.frequency(a, rest % grid.points_per_axis());
      rest /= grid.points_per_axis();
    }
    std::span<const double> xi_dprime(xi.data() + np, nd);
    double v = 0.0;
    if (auto* q = std::get_if<LowPass>(&kind)) v = low_pass_symbol(spec.beta_dprime, q->j, xi_dprime);
    else if (auto* p = std::get_if<Shell>(&kind)) v = shell_symbol(spec.beta_dprime, p->j, p->k, xi_dprime);
    else if (auto* b = std::get_if<BesselPotential>(&kind)) v = bessel_symbol(b->s, b->gamma, xi);
    else {
      const auto& an = std::get<AnnulusProjection>(kind);
      v = annulus_symbol(an.lambda, an.axis, xi_dprime);
    }
    symbol[static_cast<Eigen::Index>(idx)] = v;
  }
  return GridOperator::from_symbol(grid, std::move(symbol), std::move(axes), tag);
}

}  // namespace radonlike

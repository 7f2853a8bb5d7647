#include "radonlike/numerics/duality.hpp"

#include <Eigen/LU>
#include <cmath>
#include <span>

#include "radonlike/random.hpp"

namespace radonlike {

namespace {

class DualEvaluator {
public:
  DualEvaluator(const OperatorSpec& spec, long j, DualCheckOptions options)
      : spec_(spec), j_(j), options_(options) {
    const auto principal = check_homogeneity(spec);
    require(j >= 0, ErrorKind::InvalidArgument, "level j must be nonnegative");
    for (const auto* m : {&spec.weights.alpha_prime(), &spec.weights.alpha_dprime(),
                          &spec.weights.beta_prime(), &spec.beta_dprime})
      for (long v : m->entries())
        require(j * v <= kDilationCap, ErrorKind::DilationCap, "level j exceeds the dilation cap");
    const std::size_t nd = spec.n_dprime();
    ds_.resize(nd);
    for (std::size_t l = 0; l < nd; ++l) {
      s_.emplace_back(spec.S[l]);
      sp_.emplace_back(principal[l]);
      for (std::size_t m = 0; m < nd; ++m) ds_[l].emplace_back(spec.S[l].derivative(x_dprime(m)));
    }
  }

  double operator()(std::span<const double> zp) const {
    const std::size_t np = spec_.n_prime();
    const std::size_t nd = spec_.n_dprime();
    require(zp.size() == 2 * np + nd, ErrorKind::InvalidArgument,
            "dual sample point must have 2n'+n'' coordinates");
    const auto& ap = spec_.weights.alpha_prime();
    const auto& ad = spec_.weights.alpha_dprime();
    const auto& bp = spec_.weights.beta_prime();
    const auto& bd = spec_.beta_dprime;
    const long j = j_;
    auto scale = [](double v, long e) { return std::ldexp(v, static_cast<int>(e)); };
    const auto nde = static_cast<Eigen::Index>(nd);
    std::vector<double> z(zp.size());
    Eigen::VectorXd u(nde), f(nde);
    Eigen::MatrixXd jac(nde, nde);
    for (std::size_t i = 0; i < np; ++i) {
      z[i] = scale(zp[i], -j * ap[i]);
      z[np + nd + i] = scale(zp[np + nd + i], -j * bp[i]);
    }
    // Solve 2^{j alpha''}(u + S(X', u, Y')) = y'' for U = 2^{j alpha''} u.
    for (std::size_t l = 0; l < nd; ++l) u[static_cast<Eigen::Index>(l)] = zp[np + l];
    bool converged = false;
    for (int step = 0; step <= options_.newton_steps; ++step) {
      for (std::size_t l = 0; l < nd; ++l) z[np + l] = scale(u[static_cast<Eigen::Index>(l)], -j * ad[l]);
      double residual = 0.0;
      for (std::size_t l = 0; l < nd; ++l) {
        const double fl = u[static_cast<Eigen::Index>(l)] + scale(s_[l](z), j * ad[l]) - zp[np + l];
        f[static_cast<Eigen::Index>(l)] = fl;
        residual = std::max(residual, std::abs(fl));
      }
      if (!std::isfinite(residual)) break;
      if (residual <= options_.newton_tolerance) {
        converged = true;
        break;
      }
      if (step == options_.newton_steps) break;
      for (std::size_t l = 0; l < nd; ++l)
        for (std::size_t m = 0; m < nd; ++m)
          jac(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(m)) =
              (l == m ? 1.0 : 0.0) + scale(ds_[l][m](z), j * (ad[l] - ad[m]));
      Eigen::FullPivLU<Eigen::MatrixXd> lu(jac);
      if (!lu.isInvertible()) break;
      u -= lu.solve(f);
    }
    require(converged, ErrorKind::SingularMap,
            "Newton inversion of x'' -> x'' + S failed at level j=" + std::to_string(j));
    double worst = 0.0;
    for (std::size_t l = 0; l < nd; ++l) {
      const double dual = -scale(s_[l](z), j * bd[l]);
      worst = std::max(worst, std::abs(dual + sp_[l](zp)));
    }
    return worst;
  }

private:
  const OperatorSpec& spec_;
  long j_;
  DualCheckOptions options_;
  std::vector<CompiledPolynomial> s_, sp_;
  std::vector<std::vector<CompiledPolynomial>> ds_;
};

}  // namespace

double dual_deviation_at(const OperatorSpec& spec, long j, std::span<const double> point,
                         DualCheckOptions options) {
  return DualEvaluator(spec, j, options)(point);
}

double dual_principal_check(const OperatorSpec& spec, long j, int sample_points,
                            DualCheckOptions options) {
  const DualEvaluator eval(spec, j, options);
  require(sample_points >= 1, ErrorKind::InvalidArgument, "need at least one sample point");
  CounterRng rng(options.seed, 0);
  std::vector<double> zp(2 * spec.n_prime() + spec.n_dprime());
  double worst = 0.0;
  for (int sample = 0; sample < sample_points; ++sample) {
    for (double& v : zp) v = 2.0 * rng.uniform01() - 1.0;
    worst = std::max(worst, eval(zp));
  }
  return worst;
}

}  // namespace radonlike

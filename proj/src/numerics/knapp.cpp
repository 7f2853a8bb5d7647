#include "radonlike/numerics/knapp.hpp"

#include <cmath>
#include <functional>

#include "radonlike/numerics/cutoff.hpp"
#include "radonlike/numerics/discretize.hpp"

namespace radonlike {

namespace {

struct Boxes {
  std::vector<double> x_prime, x_dprime, y_prime, y_dprime;  // half-sides
};

Boxes make_boxes(const OperatorSpec& spec, double t, double epsilon) {
  Boxes b;
  auto half = [&](long weight) {
    const double side = epsilon * std::exp2(static_cast<double>(weight) * t);
    require(side >= std::ldexp(1.0, -40), ErrorKind::Range, "Knapp box side below 2^-40");
    require(side <= 2.0 * kDefaultHalfWidth, ErrorKind::Range, "Knapp box exceeds the domain");
    return side / 2.0;
  };
  for (long a : spec.weights.alpha_prime().entries()) b.x_prime.push_back(half(a));
  for (long c : spec.beta_dprime.entries()) b.x_dprime.push_back(half(c));
  for (long c : spec.weights.beta_prime().entries()) b.y_prime.push_back(half(c));
  for (long c : spec.beta_dprime.entries()) b.y_dprime.push_back(half(c));
  return b;
}

class Integrator {
public:
  Integrator(const OperatorSpec& spec, const Boxes& boxes, int max_depth)
      : spec_(spec), boxes_(boxes), max_depth_(max_depth) {
    for (const auto& s : spec.S) shifts_.emplace_back(s);
    z_.assign(2 * spec.n_prime() + spec.n_dprime(), 0.0);
  }

  std::vector<double>& point() { return z_; }

  double inner() { return integrate_axis(0); }

private:
  bool inside() const {
    const std::size_t np = spec_.n_prime();
    for (std::size_t l = 0; l < spec_.n_dprime(); ++l) {
      const double y = z_[np + l] + shifts_[l](z_);
      if (std::abs(y) > boxes_.y_dprime[l]) return false;
    }
    return true;
  }

  double weight() const {
    double psi = 1.0;
    for (double v : z_) psi *= phi0(v / spec_.psi_radius);
    return psi;
  }

  double value_at(std::size_t l, double s) {
    z_[spec_.n_prime() + l] = s;
    return inside() ? weight() : 0.0;
  }

  double integrate_axis(std::size_t l) {
    const double h = boxes_.x_dprime[l];
    if (l + 1 == spec_.n_dprime()) return bisect(l, -h, h, 0);
    std::function<double(double)> g = [&](double s) {
      z_[spec_.n_prime() + l] = s;
      return integrate_axis(l + 1);
    };
    return simpson(g, -h, h);
  }

  // Indicator-aware bisection: refine while the indicator changes on [a, b].
  double bisect(std::size_t l, double a, double b, int depth) {
    const double m = 0.5 * (a + b);
    const double fa = value_at(l, a), fm = value_at(l, m), fb = value_at(l, b);
    const bool ia = fa != 0.0, im = fm != 0.0, ib = fb != 0.0;
    if (depth >= 4 && ia == im && im == ib) {
      if (!ia) return 0.0;
      return (b - a) * (fa + 4.0 * fm + fb) / 6.0;
    }
    if (depth >= max_depth_) return (b - a) * fm;
    return bisect(l, a, m, depth + 1) + bisect(l, m, b, depth + 1);
  }

  double simpson(const std::function<double(double)>& g, double a, double b) {
    const int n = 64;
    const double h = (b - a) / n;
    double total = g(a) + g(b);
    for (int i = 1; i < n; ++i) total += g(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return total * h / 3.0;
  }

  const OperatorSpec& spec_;
  const Boxes& boxes_;
  int max_depth_;
  std::vector<CompiledPolynomial> shifts_;
  std::vector<double> z_;
};

}  // namespace

double knapp_integral(const OperatorSpec& spec, double t, double epsilon, KnappOptions options) {
  spec.validate();
  require(t <= -1.0, ErrorKind::InvalidArgument, "Knapp scale t must be <= -1");
  require(epsilon > 0.0 && epsilon <= 1.0, ErrorKind::InvalidArgument,
          "Knapp box factor must lie in (0, 1]");
  require(options.nodes_per_axis >= 1, ErrorKind::InvalidArgument, "need at least one node per axis");
  const Boxes boxes = make_boxes(spec, t, epsilon);
  const std::size_t np = spec.n_prime();
  const std::size_t nd = spec.n_dprime();
  const std::size_t outer_dims = 2 * np;
  const int q = options.nodes_per_axis;

  std::vector<double> half(outer_dims);
  for (std::size_t i = 0; i < np; ++i) {
    half[i] = boxes.x_prime[i];
    half[np + i] = boxes.y_prime[i];
  }
  double cell = 1.0;
  for (double h : half) cell *= 2.0 * h / q;

  Integrator integ(spec, boxes, options.max_depth);
  auto& z = integ.point();
  std::size_t total_nodes = 1;
  for (std::size_t i = 0; i < outer_dims; ++i) total_nodes *= static_cast<std::size_t>(q);
  double sum = 0.0;
  for (std::size_t node = 0; node < total_nodes; ++node) {
    std::size_t rest = node;
    for (std::size_t i = 0; i < outer_dims; ++i) {
      const int k = static_cast<int>(rest % static_cast<std::size_t>(q));
      rest /= static_cast<std::size_t>(q);
      const double v = -half[i] + (k + 0.5) * 2.0 * half[i] / q;
      // x' occupies z[0..np), y' occupies z[np+nd..)
      z[i < np ? i : nd + i] = v;
    }
    sum += integ.inner();
  }
  return sum * cell;
}

KnappScan knapp_scan(const OperatorSpec& spec, double tmin, double tmax, double epsilon,
                     KnappOptions options) {
  require(tmin <= tmax, ErrorKind::InvalidArgument, "tmin must not exceed tmax");
  KnappScan scan;
  for (double t = tmax; t >= tmin - 1e-12; t -= 1.0)
    scan.values.emplace_back(t, knapp_integral(spec, t, epsilon, options));
  for (std::size_t i = 1; i < scan.values.size(); ++i) {
    const auto [t_prev, v_prev] = scan.values[i - 1];
    const auto [t_cur, v_cur] = scan.values[i];
    require(v_prev > 0.0 && v_cur > 0.0, ErrorKind::Range, "Knapp integral vanished");
    scan.exponents.emplace_back(t_prev, std::log2(v_prev / v_cur) / (t_prev - t_cur));
  }
  return scan;
}

}  // namespace radonlike

#include "radonlike/numerics/discretize.hpp"

#include <Eigen/SparseCore>
#include <algorithm>
#include <cmath>

#include "radonlike/numerics/cutoff.hpp"

namespace radonlike {

namespace {

double psi_factor(double z, double radius) { return phi0(z / radius); }
double phi_factor(double z, double radius) { return phi0(z / (2.0 * radius)); }

double amplitude(const OperatorSpec& spec, std::span<const double> z, long j, bool dyadic) {
  const MultiIndex w = spec.weights.variable_weights();
  require(z.size() == w.size(), ErrorKind::InvalidArgument,
          "amplitude point must have 2n'+n'' coordinates");
  const double r = spec.psi_radius;
  double psi = 1.0, lo = 1.0, hi = 1.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    psi *= psi_factor(z[i], r);
    lo *= phi_factor(std::ldexp(z[i], static_cast<int>(j * w[i])), r);
    hi *= phi_factor(std::ldexp(z[i], static_cast<int>((j + 1) * w[i])), r);
  }
  return dyadic ? psi * (lo - hi) : psi * lo;
}

struct AxisTable {
  std::vector<double> psi;
  std::vector<double> lo;
  std::vector<double> hi;
};

AxisTable axis_table(const Grid& g, std::size_t axis, long weight, long j, double radius) {
  AxisTable t;
  const std::size_t n = g.points_per_axis();
  for (std::size_t k = 0; k < n; ++k) {
    const double z = g.node(axis, k);
    t.psi.push_back(psi_factor(z, radius));
    t.lo.push_back(phi_factor(std::ldexp(z, static_cast<int>(j * weight)), radius));
    t.hi.push_back(phi_factor(std::ldexp(z, static_cast<int>((j + 1) * weight)), radius));
  }
  return t;
}

void check_resolution(const Grid& g, std::size_t axis, long weight, long j, double radius,
                      bool enforce) {
  const double support = std::min(2.0 * radius, std::ldexp(4.0 * radius, static_cast<int>(-j * weight)));
  require(support <= g.half_width(axis) * (1.0 + 1e-12), ErrorKind::Resolution,
          "grid window does not contain the cutoff support on axis " + std::to_string(axis));
  if (enforce) {
    require(2.0 * support >= 4.0 * g.spacing(axis), ErrorKind::Resolution,
            "grid spacing " + std::to_string(g.spacing(axis)) + " too coarse for level j=" +
                std::to_string(j) + " on axis " + std::to_string(axis) +
                " (cutoff support must span at least 4 cells)");
  }
}

GridOperator assemble(const OperatorSpec& spec, const Grid& domain, const Grid& range, long j,
                      bool dyadic, DiscretizeOptions options) {
  spec.validate();
  const std::size_t np = spec.n_prime();
  const std::size_t nd = spec.n_dprime();
  const std::size_t n = np + nd;
  require(j >= 0, ErrorKind::InvalidArgument, "level j must be nonnegative");
  require(domain.dimension() == n && range.dimension() == n, ErrorKind::InvalidArgument,
          "grid dimension must be n' + n''");
  require(domain.points_per_axis() == range.points_per_axis(), ErrorKind::InvalidArgument,
          "domain and range grids must have the same resolution");
  const MultiIndex w = spec.weights.variable_weights();
  for (long wi : w.entries())
    require(std::abs((j + 1) * wi) <= kDilationCap, ErrorKind::DilationCap,
            "level j exceeds the dilation cap");
  const double radius = spec.psi_radius;
  const std::size_t npts = range.points_per_axis();

  // Output axes carry alpha = (alpha', alpha''); input y' axes carry beta'.
  std::vector<AxisTable> out_tables, in_tables;
  for (std::size_t a = 0; a < n; ++a) {
    check_resolution(range, a, w[a], j, radius, options.enforce_resolution);
    out_tables.push_back(axis_table(range, a, w[a], j, radius));
  }
  for (std::size_t a = 0; a < np; ++a) {
    check_resolution(domain, a, w[n + a], j, radius, options.enforce_resolution);
    in_tables.push_back(axis_table(domain, a, w[n + a], j, radius));
  }

  struct YNode {
    std::size_t linear;
    std::vector<double> coords;
    double psi, lo, hi;
  };
  std::vector<YNode> ynodes;
  std::size_t y_count = 1;
  for (std::size_t a = 0; a < np; ++a) y_count *= npts;
  std::size_t y_block = 1;
  for (std::size_t a = 0; a < nd; ++a) y_block *= npts;
  for (std::size_t lin = 0; lin < y_count; ++lin) {
    YNode node{lin, std::vector<double>(np), 1.0, 1.0, 1.0};
    std::size_t rest = lin;
    for (std::size_t a = np; a-- > 0;) {
      const std::size_t k = rest % npts;
      rest /= npts;
      node.coords[a] = domain.node(a, k);
      node.psi *= in_tables[a].psi[k];
      node.lo *= in_tables[a].lo[k];
      node.hi *= in_tables[a].hi[k];
    }
    if (node.psi * node.lo != 0.0) ynodes.push_back(std::move(node));
  }

  double hy = 1.0;
  for (std::size_t a = 0; a < np; ++a) hy *= domain.spacing(a);

  std::vector<CompiledPolynomial> shifts;
  for (const auto& s : spec.S) shifts.emplace_back(s);

  std::vector<Eigen::Triplet<double>> triplets;
  std::vector<double> z(2 * np + nd);
  std::vector<std::size_t> base_idx(nd);
  std::vector<double> frac(nd);
  const std::size_t corners = std::size_t{1} << nd;

  for (std::size_t row = 0; row < range.size(); ++row) {
    double ax = 1.0, lx = 1.0, hx = 1.0;
    std::size_t rest = row;
    for (std::size_t a = n; a-- > 0;) {
      const std::size_t k = rest % npts;
      rest /= npts;
      z[a] = range.node(a, k);
      ax *= out_tables[a].psi[k];
      lx *= out_tables[a].lo[k];
      hx *= out_tables[a].hi[k];
    }
    if (ax * lx == 0.0) continue;
    for (const YNode& y : ynodes) {
      const double amp = dyadic ? ax * y.psi * (lx * y.lo - hx * y.hi) : ax * y.psi * lx * y.lo;
      if (amp == 0.0) continue;
      for (std::size_t a = 0; a < np; ++a) z[n + a] = y.coords[a];
      for (std::size_t l = 0; l < nd; ++l) {
        const std::size_t axis = np + l;
        const double target = z[axis] + shifts[l](z);
        const double pos = (target + domain.half_width(axis)) / domain.spacing(axis);
        const double fl = std::floor(pos);
        frac[l] = pos - fl;
        const long m = static_cast<long>(fl) % static_cast<long>(npts);
        base_idx[l] = static_cast<std::size_t>(m < 0 ? m + static_cast<long>(npts) : m);
      }
      for (std::size_t c = 0; c < corners; ++c) {
        double weight = 1.0;
        std::size_t col = 0;
        for (std::size_t l = 0; l < nd; ++l) {
          const bool up = (c >> l) & 1U;
          weight *= up ? frac[l] : 1.0 - frac[l];
          col = col * npts + (up ? (base_idx[l] + 1) % npts : base_idx[l]);
        }
        if (weight == 0.0) continue;
        triplets.emplace_back(static_cast<int>(row), static_cast<int>(y.linear * y_block + col),
                              amp * hy * weight);
      }
    }
  }
  SparseMatrixR m(static_cast<Eigen::Index>(range.size()), static_cast<Eigen::Index>(domain.size()));
  m.setFromTriplets(triplets.begin(), triplets.end());
  return GridOperator::from_matrix(domain, range, std::move(m), OperatorTag{j, std::nullopt});
}

}  // namespace

Grid level_output_grid(const OperatorSpec& spec, std::size_t points_per_axis, long j,
                       double half_width) {
  const MultiIndex a = spec.weights.alpha();
  std::vector<double> widths;
  for (long ai : a.entries()) widths.push_back(std::ldexp(half_width, static_cast<int>(-j * ai)));
  return Grid(points_per_axis, widths);
}

Grid level_input_grid(const OperatorSpec& spec, std::size_t points_per_axis, long j,
                      double half_width) {
  std::vector<double> widths;
  for (long b : spec.weights.beta_prime().entries())
    widths.push_back(std::ldexp(half_width, static_cast<int>(-j * b)));
  for (long a : spec.weights.alpha_dprime().entries())
    widths.push_back(std::ldexp(half_width, static_cast<int>(-j * a)));
  return Grid(points_per_axis, widths);
}

double dyadic_amplitude(const OperatorSpec& spec, std::span<const double> z, long j) {
  return amplitude(spec, z, j, true);
}

double truncated_amplitude(const OperatorSpec& spec, std::span<const double> z, long j) {
  return amplitude(spec, z, j, false);
}

GridOperator discretize_Tj(const OperatorSpec& spec, const Grid& domain, const Grid& range, long j,
                           DiscretizeOptions options) {
  return assemble(spec, domain, range, j, true, options);
}

GridOperator discretize_Uj(const OperatorSpec& spec, const Grid& domain, const Grid& range, long j,
                           DiscretizeOptions options) {
  return assemble(spec, domain, range, j, false, options);
}

}  // namespace radonlike

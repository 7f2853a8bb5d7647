#include "radonlike/numerics/norms.hpp"

#include <cmath>
#include <functional>

#include "radonlike/errors.hpp"
#include "radonlike/random.hpp"

namespace radonlike {

std::string norm_code(NormPair pair) {
  switch (pair) {
    case NormPair::OneOne: return "11";
    case NormPair::InfInf: return "oooo";
    case NormPair::TwoTwo: return "22";
    case NormPair::OneInf: return "1oo";
  }
  return "";
}

NormPair parse_norm_code(const std::string& code) {
  if (code == "11") return NormPair::OneOne;
  if (code == "oooo") return NormPair::InfInf;
  if (code == "22") return NormPair::TwoTwo;
  if (code == "1oo") return NormPair::OneInf;
  fail(ErrorKind::InvalidArgument, "unknown norm pair '" + code + "' (expected 11, oooo, 22, 1oo)");
}

namespace {

using Apply = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

NormResult power_iteration(const Apply& forward, const Apply& backward, Eigen::Index cols,
                           const PowerIterationOptions& options) {
  CounterRng rng(options.seed, 0);
  Eigen::VectorXd v(cols);
  for (Eigen::Index i = 0; i < cols; ++i) v[i] = rng.uniform01() - 0.5;
  v.normalize();
  NormResult out{0.0, false, 0};
  double previous = 0.0;
  for (int it = 1; it <= options.max_iterations; ++it) {
    Eigen::VectorXd av = forward(v);
    const double sigma = av.norm();
    out.iterations = it;
    out.value = sigma;
    if (sigma == 0.0) {
      out.converged = true;
      return out;
    }
    if (it > 1 && std::abs(sigma - previous) <= options.tolerance * sigma) {
      out.converged = true;
      return out;
    }
    previous = sigma;
    v = backward(av);
    const double norm = v.norm();
    if (norm == 0.0) {
      out.converged = true;
      return out;
    }
    v /= norm;
  }
  return out;
}

void accumulate_matrix(const SparseMatrixR& m, DenseNorms& d) {
  Eigen::VectorXd cols = Eigen::VectorXd::Zero(m.cols());
  for (Eigen::Index r = 0; r < m.outerSize(); ++r) {
    double row = 0.0;
    for (SparseMatrixR::InnerIterator it(m, r); it; ++it) {
      const double a = std::abs(it.value());
      row += a;
      cols[it.col()] += a;
      d.max_abs = std::max(d.max_abs, a);
    }
    d.max_row_sum = std::max(d.max_row_sum, row);
  }
  d.max_col_sum = cols.size() ? cols.maxCoeff() : 0.0;
}

// Entries of M K where K convolves along the trailing block of axes.
void accumulate_composite(const SparseMatrixR& m, const GridOperator& mult, DenseNorms& d) {
  const Grid& g = mult.domain();
  const auto& axes = mult.active_axes();
  const std::size_t dim = g.dimension();
  const std::size_t npts = g.points_per_axis();
  for (std::size_t t = 0; t < axes.size(); ++t)
    require(axes[t] == dim - axes.size() + t, ErrorKind::InvalidArgument,
            "dense norms need a multiplier acting on trailing axes");
  const std::size_t m_axes = axes.size();
  std::size_t block = 1;
  for (std::size_t t = 0; t < m_axes; ++t) block *= npts;
  const Eigen::VectorXd c = mult.kernel();

  // Offset table: diff[u * block + z] = kernel index of u - z.
  std::vector<std::uint32_t> diff(block * block);
  for (std::size_t u = 0; u < block; ++u) {
    for (std::size_t zi = 0; zi < block; ++zi) {
      std::size_t uu = u, zz = zi, idx = 0, mul = 1;
      for (std::size_t t = 0; t < m_axes; ++t) {
        const std::size_t a = uu % npts, b = zz % npts;
        uu /= npts;
        zz /= npts;
        idx += ((a + npts - b) % npts) * mul;
        mul *= npts;
      }
      diff[u * block + zi] = static_cast<std::uint32_t>(idx);
    }
  }

  Eigen::VectorXd cols = Eigen::VectorXd::Zero(m.cols());
  std::vector<double> v(block);
  for (Eigen::Index r = 0; r < m.outerSize(); ++r) {
    double row = 0.0;
    SparseMatrixR::InnerIterator it(m, r);
    while (it) {
      const std::size_t outer = static_cast<std::size_t>(it.col()) / block;
      std::fill(v.begin(), v.end(), 0.0);
      for (; it && static_cast<std::size_t>(it.col()) / block == outer; ++it) {
        const std::size_t u = static_cast<std::size_t>(it.col()) % block;
        const double w = it.value();
        const std::uint32_t* dr = diff.data() + u * block;
        for (std::size_t zi = 0; zi < block; ++zi) v[zi] += w * c[dr[zi]];
      }
      for (std::size_t zi = 0; zi < block; ++zi) {
        const double a = std::abs(v[zi]);
        row += a;
        cols[static_cast<Eigen::Index>(outer * block + zi)] += a;
        d.max_abs = std::max(d.max_abs, a);
      }
    }
    d.max_row_sum = std::max(d.max_row_sum, row);
  }
  d.max_col_sum = cols.size() ? cols.maxCoeff() : 0.0;
}

}  // namespace

DenseNorms dense_norms(const GridOperator& op) {
  DenseNorms d;
  switch (op.kind()) {
    case GridOperator::Kind::Matrix:
      accumulate_matrix(op.matrix(), d);
      return d;
    case GridOperator::Kind::Multiplier: {
      const Eigen::VectorXd c = op.kernel();
      d.max_col_sum = d.max_row_sum = c.cwiseAbs().sum();
      d.max_abs = c.cwiseAbs().maxCoeff();
      return d;
    }
    case GridOperator::Kind::Composite:
      require(op.outer().kind() == GridOperator::Kind::Matrix &&
                  op.inner().kind() == GridOperator::Kind::Multiplier,
              ErrorKind::InvalidArgument,
              "dense norms are available for matrix-times-multiplier composites only");
      accumulate_composite(op.outer().matrix(), op.inner(), d);
      return d;
  }
  return d;
}

NormResult operator_norm(const GridOperator& op, NormPair pair, PowerIterationOptions options) {
  const double h_in = op.domain().cell_volume();
  const double h_out = op.range().cell_volume();
  if (pair == NormPair::TwoTwo) {
    NormResult r = power_iteration([&](const Eigen::VectorXd& v) { return op.apply(v); },
                                   [&](const Eigen::VectorXd& v) { return op.apply_transpose(v); },
                                   static_cast<Eigen::Index>(op.domain().size()), options);
    r.value *= std::sqrt(h_out / h_in);
    return r;
  }
  const DenseNorms d = dense_norms(op);
  switch (pair) {
    case NormPair::OneOne: return {d.max_col_sum * h_out / h_in, true, 0};
    case NormPair::InfInf: return {d.max_row_sum, true, 0};
    case NormPair::OneInf: return {d.max_abs / h_in, true, 0};
    case NormPair::TwoTwo: break;
  }
  return {};
}

NormResult operator_norm(const Eigen::MatrixXd& m, NormPair pair, PowerIterationOptions options) {
  switch (pair) {
    case NormPair::OneOne: return {m.cwiseAbs().colwise().sum().maxCoeff(), true, 0};
    case NormPair::InfInf: return {m.cwiseAbs().rowwise().sum().maxCoeff(), true, 0};
    case NormPair::OneInf: return {m.cwiseAbs().maxCoeff(), true, 0};
    case NormPair::TwoTwo:
      return power_iteration([&](const Eigen::VectorXd& v) -> Eigen::VectorXd { return m * v; },
                             [&](const Eigen::VectorXd& v) -> Eigen::VectorXd { return m.transpose() * v; },
                             m.cols(), options);
  }
  return {};
}

DecayFit decay_slope(std::span<const std::pair<long, double>> samples) {
  require(samples.size() >= 3, ErrorKind::InvalidArgument, "decay_slope needs at least 3 samples");
  DecayFit fit;
  for (auto [index, norm] : samples) {
    require(std::isfinite(norm) && norm > 0.0, ErrorKind::InvalidArgument,
            "decay_slope needs positive norms");
    fit.samples.emplace_back(index, std::log2(norm));
  }
  const double n = static_cast<double>(fit.samples.size());
  double sx = 0.0, sy = 0.0;
  for (auto [x, y] : fit.samples) {
    sx += static_cast<double>(x);
    sy += y;
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0.0, sxy = 0.0;
  for (auto [x, y] : fit.samples) {
    sxx += (static_cast<double>(x) - mx) * (static_cast<double>(x) - mx);
    sxy += (static_cast<double>(x) - mx) * (y - my);
  }
  require(sxx > 0.0, ErrorKind::InvalidArgument, "decay_slope needs at least two distinct indices");
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  for (auto [x, y] : fit.samples)
    fit.max_residual = std::max(fit.max_residual, std::abs(y - fit.intercept - fit.slope * static_cast<double>(x)));
  return fit;
}

}  // namespace radonlike

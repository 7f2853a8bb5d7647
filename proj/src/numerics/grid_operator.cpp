#include "radonlike/numerics/grid_operator.hpp"

#include <unsupported/Eigen/FFT>

#include <algorithm>

#include "radonlike/errors.hpp"

namespace radonlike {

GridOperator GridOperator::from_matrix(Grid domain, Grid range, SparseMatrixR m, OperatorTag tag) {
  require(static_cast<std::size_t>(m.cols()) == domain.size() &&
              static_cast<std::size_t>(m.rows()) == range.size(),
          ErrorKind::InvalidArgument, "matrix shape does not match its grids");
  GridOperator op(Kind::Matrix, std::move(domain), std::move(range));
  op.matrix_ = std::make_shared<const SparseMatrixR>(std::move(m));
  op.tag_ = tag;
  return op;
}

GridOperator GridOperator::from_symbol(Grid grid, Eigen::VectorXd symbol,
                                       std::vector<std::size_t> active_axes, OperatorTag tag) {
  require(static_cast<std::size_t>(symbol.size()) == grid.size(), ErrorKind::InvalidArgument,
          "symbol length does not match the grid");
  for (auto a : active_axes)
    require(a < grid.dimension(), ErrorKind::InvalidArgument, "active axis out of range");
  GridOperator op(Kind::Multiplier, grid, grid);
  op.symbol_ = std::make_shared<const Eigen::VectorXd>(std::move(symbol));
  op.active_axes_ = std::move(active_axes);
  op.tag_ = tag;
  return op;
}

GridOperator GridOperator::with_tag(OperatorTag tag) const {
  GridOperator copy = *this;
  copy.tag_ = tag;
  return copy;
}

const SparseMatrixR& GridOperator::matrix() const {
  require(kind_ == Kind::Matrix, ErrorKind::InvalidArgument, "operator is not a matrix");
  return *matrix_;
}

const Eigen::VectorXd& GridOperator::symbol() const {
  require(kind_ == Kind::Multiplier, ErrorKind::InvalidArgument, "operator is not a multiplier");
  return *symbol_;
}

const std::vector<std::size_t>& GridOperator::active_axes() const {
  require(kind_ == Kind::Multiplier, ErrorKind::InvalidArgument, "operator is not a multiplier");
  return active_axes_;
}

const GridOperator& GridOperator::outer() const {
  require(kind_ == Kind::Composite, ErrorKind::InvalidArgument, "operator is not a composite");
  return *outer_;
}

const GridOperator& GridOperator::inner() const {
  require(kind_ == Kind::Composite, ErrorKind::InvalidArgument, "operator is not a composite");
  return *inner_;
}

void fft_axes(std::vector<std::complex<double>>& data, const Grid& grid,
              std::span<const std::size_t> axes, bool inverse) {
  const std::size_t n = grid.points_per_axis();
  Eigen::FFT<double> fft;
  std::vector<std::complex<double>> line(n), out(n);
  for (std::size_t axis : axes) {
    const std::size_t stride = grid.stride(axis);
    const std::size_t block = stride * n;
    for (std::size_t base = 0; base < data.size(); base += block) {
      for (std::size_t offset = 0; offset < stride; ++offset) {
        const std::size_t start = base + offset;
        for (std::size_t k = 0; k < n; ++k) line[k] = data[start + k * stride];
        if (inverse) fft.inv(out, line);
        else fft.fwd(out, line);
        for (std::size_t k = 0; k < n; ++k) data[start + k * stride] = out[k];
      }
    }
  }
}

namespace {

Eigen::VectorXd apply_symbol(const Eigen::VectorXd& symbol, const Grid& grid,
                             const std::vector<std::size_t>& axes, const Eigen::VectorXd& f) {
  std::vector<std::complex<double>> data(f.data(), f.data() + f.size());
  fft_axes(data, grid, axes, false);
  for (std::size_t i = 0; i < data.size(); ++i) data[i] *= symbol[static_cast<Eigen::Index>(i)];
  fft_axes(data, grid, axes, true);
  Eigen::VectorXd out(f.size());
  for (std::size_t i = 0; i < data.size(); ++i) out[static_cast<Eigen::Index>(i)] = data[i].real();
  return out;
}

}  // namespace

Eigen::VectorXd GridOperator::apply(const Eigen::VectorXd& f) const {
  require(static_cast<std::size_t>(f.size()) == domain_.size(), ErrorKind::InvalidArgument,
          "input length does not match the operator domain");
  switch (kind_) {
    case Kind::Matrix: return *matrix_ * f;
    case Kind::Multiplier: return apply_symbol(*symbol_, domain_, active_axes_, f);
    case Kind::Composite: return outer_->apply(inner_->apply(f));
  }
  return {};
}

Eigen::VectorXd GridOperator::apply_transpose(const Eigen::VectorXd& g) const {
  require(static_cast<std::size_t>(g.size()) == range_.size(), ErrorKind::InvalidArgument,
          "input length does not match the operator range");
  switch (kind_) {
    case Kind::Matrix: return matrix_->transpose() * g;
    // Real part of a real even multiplier is a symmetric convolution.
    case Kind::Multiplier: return apply_symbol(*symbol_, domain_, active_axes_, g);
    case Kind::Composite: return inner_->apply_transpose(outer_->apply_transpose(g));
  }
  return {};
}

Eigen::MatrixXd GridOperator::to_dense() const {
  require(domain_.size() <= 8192 && range_.size() <= 8192, ErrorKind::InvalidArgument,
          "to_dense is limited to small grids");
  Eigen::MatrixXd out(range_.size(), domain_.size());
  Eigen::VectorXd e = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(domain_.size()));
  for (Eigen::Index c = 0; c < e.size(); ++c) {
    e[c] = 1.0;
    out.col(c) = apply(e);
    e[c] = 0.0;
  }
  return out;
}

Eigen::VectorXd GridOperator::kernel() const {
  require(kind_ == Kind::Multiplier, ErrorKind::InvalidArgument, "operator is not a multiplier");
  const std::size_t n = domain_.points_per_axis();
  std::vector<double> sub_widths;
  for (auto a : active_axes_) sub_widths.push_back(domain_.half_width(a));
  if (sub_widths.empty()) return Eigen::VectorXd::Constant(1, (*symbol_)[0]);
  Grid sub(n, sub_widths);
  std::vector<std::complex<double>> data(sub.size());
  // Slice of the symbol with every inactive coordinate at bin 0.
  for (std::size_t s = 0; s < sub.size(); ++s) {
    auto idx = sub.unravel(s);
    std::size_t full = 0;
    for (std::size_t t = 0; t < active_axes_.size(); ++t) full += idx[t] * domain_.stride(active_axes_[t]);
    data[s] = (*symbol_)[static_cast<Eigen::Index>(full)];
  }
  std::vector<std::size_t> axes(active_axes_.size());
  for (std::size_t t = 0; t < axes.size(); ++t) axes[t] = t;
  fft_axes(data, sub, axes, true);
  Eigen::VectorXd c(static_cast<Eigen::Index>(sub.size()));
  for (std::size_t s = 0; s < sub.size(); ++s) c[static_cast<Eigen::Index>(s)] = data[s].real();
  return c;
}

GridOperator compose(const GridOperator& outer, const GridOperator& inner) {
  require(inner.range() == outer.domain(), ErrorKind::InvalidArgument,
          "compose: grids do not match");
  GridOperator op(GridOperator::Kind::Composite, inner.domain(), outer.range());
  op.outer_ = std::make_shared<const GridOperator>(outer);
  op.inner_ = std::make_shared<const GridOperator>(inner);
  op.tag_ = outer.tag();
  if (!op.tag_.k) op.tag_.k = inner.tag().k;
  return op;
}

GridOperator symbol_difference(const GridOperator& a, const GridOperator& b) {
  require(a.domain() == b.domain(), ErrorKind::InvalidArgument,
          "symbol_difference: grids do not match");
  std::vector<std::size_t> axes = a.active_axes();
  for (auto x : b.active_axes())
    if (std::find(axes.begin(), axes.end(), x) == axes.end()) axes.push_back(x);
  std::sort(axes.begin(), axes.end());
  return GridOperator::from_symbol(a.domain(), a.symbol() - b.symbol(), axes, a.tag());
}

}  // namespace radonlike

#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>
#include <complex>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "radonlike/numerics/grid.hpp"

namespace radonlike {

using SparseMatrixR = Eigen::SparseMatrix<double, Eigen::RowMajor>;

struct OperatorTag {
  std::optional<long> j;
  std::optional<long> k;
};

/// Linear map between grid functions: a sparse matrix (domain -> range), a
/// Fourier multiplier (domain == range), or a composition of the two kinds.
class GridOperator {
public:
  enum class Kind { Matrix, Multiplier, Composite };

  static GridOperator from_matrix(Grid domain, Grid range, SparseMatrixR m, OperatorTag tag = {});
  /// `symbol` holds one real value per DFT bin of `grid`; it may vary only
  /// along `active_axes` and must be even in each frequency.
  static GridOperator from_symbol(Grid grid, Eigen::VectorXd symbol,
                                  std::vector<std::size_t> active_axes, OperatorTag tag = {});

  Kind kind() const noexcept { return kind_; }
  const Grid& domain() const noexcept { return domain_; }
  const Grid& range() const noexcept { return range_; }
  const OperatorTag& tag() const noexcept { return tag_; }
  GridOperator with_tag(OperatorTag tag) const;

  /// Matrix kind only.
  const SparseMatrixR& matrix() const;
  /// Multiplier kind only.
  const Eigen::VectorXd& symbol() const;
  const std::vector<std::size_t>& active_axes() const;
  /// Composite kind only: factors in application order is inner() first.
  const GridOperator& outer() const;
  const GridOperator& inner() const;

  Eigen::VectorXd apply(const Eigen::VectorXd& f) const;
  Eigen::VectorXd apply_transpose(const Eigen::VectorXd& g) const;

  /// Dense matrix on the grid (small grids only; used by tests).
  Eigen::MatrixXd to_dense() const;

  /// Real-space convolution kernel of a multiplier on the sub-grid of its
  /// active axes (row-major over those axes).
  Eigen::VectorXd kernel() const;

private:
  GridOperator(Kind kind, Grid domain, Grid range) : kind_(kind), domain_(std::move(domain)), range_(std::move(range)) {}

  friend GridOperator compose(const GridOperator& outer, const GridOperator& inner);

  Kind kind_;
  Grid domain_;
  Grid range_;
  OperatorTag tag_;
  std::shared_ptr<const SparseMatrixR> matrix_;
  std::shared_ptr<const Eigen::VectorXd> symbol_;
  std::vector<std::size_t> active_axes_;
  std::shared_ptr<const GridOperator> outer_;
  std::shared_ptr<const GridOperator> inner_;
};

/// outer o inner; the range of inner must equal the domain of outer.
GridOperator compose(const GridOperator& outer, const GridOperator& inner);

/// Multiplier a - b on a common grid.
GridOperator symbol_difference(const GridOperator& a, const GridOperator& b);

/// In-place DFT along the listed axes (inverse includes the 1/N factors).
void fft_axes(std::vector<std::complex<double>>& data, const Grid& grid,
              std::span<const std::size_t> axes, bool inverse);

}  // namespace radonlike

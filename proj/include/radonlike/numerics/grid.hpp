#pragma once

#include <cstddef>
#include <vector>

namespace radonlike {

/// Periodic tensor grid on prod_i [-L_i, L_i) with N nodes per axis at
/// -L_i + k h_i. Linear indices are row-major (last axis fastest).
class Grid {
public:
  Grid(std::size_t dimension, std::size_t points_per_axis, double half_width);
  Grid(std::size_t points_per_axis, std::vector<double> half_widths);

  std::size_t dimension() const noexcept { return half_widths_.size(); }
  std::size_t points_per_axis() const noexcept { return n_; }
  std::size_t size() const noexcept { return size_; }
  double half_width(std::size_t axis) const { return half_widths_[axis]; }
  const std::vector<double>& half_widths() const noexcept { return half_widths_; }
  double spacing(std::size_t axis) const { return 2.0 * half_widths_[axis] / static_cast<double>(n_); }
  double cell_volume() const;

  double node(std::size_t axis, std::size_t k) const {
    return -half_widths_[axis] + static_cast<double>(k) * spacing(axis);
  }
  /// Frequency pi m / L_i of DFT bin k, with m in FFT order (0, 1, .., N/2-1, -N/2, .., -1).
  double frequency(std::size_t axis, std::size_t k) const;
  std::size_t stride(std::size_t axis) const;
  std::vector<std::size_t> unravel(std::size_t index) const;

  friend bool operator==(const Grid&, const Grid&) = default;

private:
  std::size_t n_;
  std::size_t size_;
  std::vector<double> half_widths_;
};

}  // namespace radonlike

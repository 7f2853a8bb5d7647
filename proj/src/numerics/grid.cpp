#include "radonlike/numerics/grid.hpp"

#include <cmath>
#include <numbers>

#include "radonlike/errors.hpp"

namespace radonlike {

Grid::Grid(std::size_t dimension, std::size_t points_per_axis, double half_width)
    : Grid(points_per_axis, std::vector<double>(dimension, half_width)) {}

Grid::Grid(std::size_t points_per_axis, std::vector<double> half_widths)
    : n_(points_per_axis), size_(1), half_widths_(std::move(half_widths)) {
  require(!half_widths_.empty(), ErrorKind::InvalidArgument, "grid dimension must be positive");
  require(n_ >= 8 && (n_ & (n_ - 1)) == 0, ErrorKind::InvalidArgument,
          "points per axis must be a power of two >= 8");
  for (double l : half_widths_)
    require(std::isfinite(l) && l > 0.0, ErrorKind::InvalidArgument,
            "grid half-width must be positive");
  for (std::size_t i = 0; i < half_widths_.size(); ++i) {
    require(size_ <= (std::size_t{1} << 40) / n_, ErrorKind::InvalidArgument, "grid too large");
    size_ *= n_;
  }
}

double Grid::cell_volume() const {
  double v = 1.0;
  for (std::size_t a = 0; a < dimension(); ++a) v *= spacing(a);
  return v;
}

double Grid::frequency(std::size_t axis, std::size_t k) const {
  const long m = k < n_ / 2 ? static_cast<long>(k) : static_cast<long>(k) - static_cast<long>(n_);
  return std::numbers::pi * static_cast<double>(m) / half_widths_[axis];
}

std::size_t Grid::stride(std::size_t axis) const {
  std::size_t s = 1;
  for (std::size_t a = axis + 1; a < dimension(); ++a) s *= n_;
  return s;
}

std::vector<std::size_t> Grid::unravel(std::size_t index) const {
  std::vector<std::size_t> out(dimension());
  for (std::size_t a = dimension(); a-- > 0;) {
    out[a] = index % n_;
    index /= n_;
  }
  return out;
}

}  // namespace radonlike

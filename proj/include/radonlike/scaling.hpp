#pragma once

#include <Eigen/Core>
#include <cmath>
#include <initializer_list>
#include <string>
#include <vector>

#include "radonlike/errors.hpp"
#include "radonlike/rational.hpp"

namespace radonlike {

/// Largest |j * gamma_i| accepted by dilations; 2^900 is well inside double range.
inline constexpr long kDilationCap = 900;

/// Integer multiindex; entries may be negative.
class MultiIndex {
public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<long> entries);
  MultiIndex(std::initializer_list<long> entries) : MultiIndex(std::vector<long>(entries)) {}

  std::size_t size() const noexcept { return entries_.size(); }
  long operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<long>& entries() const noexcept { return entries_; }

  /// Sum of the entries (the order of the multiindex).
  long order() const noexcept;
  long max() const;
  long min() const;
  bool all_positive() const noexcept;

  MultiIndex operator-() const;
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

  static MultiIndex ones(std::size_t n) { return MultiIndex(std::vector<long>(n, 1)); }
  static MultiIndex concat(const MultiIndex& a, const MultiIndex& b);

private:
  std::vector<long> entries_;
};

std::string to_string(const MultiIndex& m);

/// A scale is a multiindex interpreted as per-coordinate binary exponents.
struct Scale {
  MultiIndex entries;
  std::size_t size() const noexcept { return entries.size(); }
};

/// Homogeneity weights alpha', alpha'', beta'. The codimension weights beta''
/// are supplied separately since they vary across the genericity analysis.
class Weights {
public:
  Weights(MultiIndex alpha_prime, MultiIndex alpha_dprime, MultiIndex beta_prime);

  static Weights isotropic(std::size_t n_prime, std::size_t n_dprime);

  const MultiIndex& alpha_prime() const noexcept { return alpha_prime_; }
  const MultiIndex& alpha_dprime() const noexcept { return alpha_dprime_; }
  const MultiIndex& beta_prime() const noexcept { return beta_prime_; }
  std::size_t n_prime() const noexcept { return alpha_prime_.size(); }
  std::size_t n_dprime() const noexcept { return alpha_dprime_.size(); }

  /// alpha = (alpha', alpha'').
  MultiIndex alpha() const { return MultiIndex::concat(alpha_prime_, alpha_dprime_); }
  /// alpha~ = (alpha', beta'').
  MultiIndex alpha_tilde(const MultiIndex& beta_dprime) const;
  /// beta = (beta', beta'').
  MultiIndex beta(const MultiIndex& beta_dprime) const;
  /// Weights of the polynomial variables in the order (x', x'', y').
  MultiIndex variable_weights() const;

  friend bool operator==(const Weights&, const Weights&) = default;

private:
  MultiIndex alpha_prime_;
  MultiIndex alpha_dprime_;
  MultiIndex beta_prime_;
};

namespace detail {
inline void check_dilation(const MultiIndex& gamma, long j, Eigen::Index length) {
  require(static_cast<Eigen::Index>(gamma.size()) == length, ErrorKind::InvalidArgument,
          "dilate: multiindex length does not match vector length");
  for (long g : gamma.entries()) {
    require(std::abs(j * g) <= kDilationCap, ErrorKind::DilationCap,
            "dilate: |j*gamma_i| exceeds the dilation cap");
  }
}
}  // namespace detail

/// Componentwise 2^{j gamma_i} z_i. Binary exponent scaling, exact in floating point.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> dilate(
    const MultiIndex& gamma, long j, const Eigen::MatrixBase<Derived>& z) {
  detail::check_dilation(gamma, j, z.size());
  Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> out(z.size());
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    out[i] = std::ldexp(z[i], static_cast<int>(j * gamma[static_cast<std::size_t>(i)]));
  }
  return out;
}

/// Exact rational dilation.
RationalVector dilate(const MultiIndex& gamma, long j, const RationalVector& z);

/// |v|_S = (sum 2^{2 S_i} v_i^2)^{1/2}.
template <typename Derived>
double scaled_norm(const Scale& scale, const Eigen::MatrixBase<Derived>& v) {
  require(static_cast<Eigen::Index>(scale.size()) == v.size(), ErrorKind::InvalidArgument,
          "scaled_norm: scale length does not match vector length");
  double acc = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    double t = std::ldexp(static_cast<double>(v[i]),
                          static_cast<int>(scale.entries[static_cast<std::size_t>(i)]));
    acc += t * t;
  }
  return std::sqrt(acc);
}

/// max_i delta_i / gamma_i as an exact rational; gamma must be positive.
Rational aniso_ratio(const MultiIndex& delta, const MultiIndex& gamma);

}  // namespace radonlike

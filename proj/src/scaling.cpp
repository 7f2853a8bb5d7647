#include "radonlike/scaling.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace radonlike {

MultiIndex::MultiIndex(std::vector<long> entries) : entries_(std::move(entries)) {
  require(!entries_.empty(), ErrorKind::InvalidArgument, "multiindex must have length >= 1");
}

long MultiIndex::order() const noexcept {
  return std::accumulate(entries_.begin(), entries_.end(), 0L);
}

long MultiIndex::max() const { return *std::max_element(entries_.begin(), entries_.end()); }
long MultiIndex::min() const { return *std::min_element(entries_.begin(), entries_.end()); }

bool MultiIndex::all_positive() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](long e) { return e > 0; });
}

MultiIndex MultiIndex::operator-() const {
  std::vector<long> neg(entries_);
  for (auto& e : neg) e = -e;
  return MultiIndex(std::move(neg));
}

MultiIndex MultiIndex::concat(const MultiIndex& a, const MultiIndex& b) {
  std::vector<long> out(a.entries());
  out.insert(out.end(), b.entries().begin(), b.entries().end());
  return MultiIndex(std::move(out));
}

std::string to_string(const MultiIndex& m) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
  os << ')';
  return os.str();
}

Weights::Weights(MultiIndex alpha_prime, MultiIndex alpha_dprime, MultiIndex beta_prime)
    : alpha_prime_(std::move(alpha_prime)),
      alpha_dprime_(std::move(alpha_dprime)),
      beta_prime_(std::move(beta_prime)) {
  require(alpha_prime_.size() == beta_prime_.size(), ErrorKind::InvalidArgument,
          "alpha' and beta' must have the same length n'");
  require(alpha_prime_.all_positive() && alpha_dprime_.all_positive() &&
              beta_prime_.all_positive(),
          ErrorKind::InvalidArgument, "weights must be strictly positive");
}

Weights Weights::isotropic(std::size_t n_prime, std::size_t n_dprime) {
  return Weights(MultiIndex::ones(n_prime), MultiIndex::ones(n_dprime), MultiIndex::ones(n_prime));
}

MultiIndex Weights::alpha_tilde(const MultiIndex& beta_dprime) const {
  require(beta_dprime.size() == n_dprime(), ErrorKind::InvalidArgument,
          "beta'' must have length n''");
  return MultiIndex::concat(alpha_prime_, beta_dprime);
}

MultiIndex Weights::beta(const MultiIndex& beta_dprime) const {
  require(beta_dprime.size() == n_dprime(), ErrorKind::InvalidArgument,
          "beta'' must have length n''");
  return MultiIndex::concat(beta_prime_, beta_dprime);
}

MultiIndex Weights::variable_weights() const {
  return MultiIndex::concat(MultiIndex::concat(alpha_prime_, alpha_dprime_), beta_prime_);
}

RationalVector dilate(const MultiIndex& gamma, long j, const RationalVector& z) {
  detail::check_dilation(gamma, j, z.size());
  RationalVector out(z.size());
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    out[i] = z[i] * pow2(j * gamma[static_cast<std::size_t>(i)]);
  }
  return out;
}

Rational aniso_ratio(const MultiIndex& delta, const MultiIndex& gamma) {
  require(delta.size() == gamma.size(), ErrorKind::InvalidArgument,
          "aniso_ratio: multiindices must have equal length");
  require(gamma.all_positive(), ErrorKind::InvalidArgument,
          "aniso_ratio: gamma entries must be positive");
  Rational best = make_rational(delta[0], gamma[0]);
  for (std::size_t i = 1; i < delta.size(); ++i) {
    Rational r = make_rational(delta[i], gamma[i]);
    if (r > best) best = r;
  }
  return best;
}

}  // namespace radonlike

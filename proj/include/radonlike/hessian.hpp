#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "radonlike/polynomial.hpp"
#include "radonlike/random.hpp"
#include "radonlike/rational.hpp"
#include "radonlike/scaling.hpp"

namespace radonlike {

/// Mixed Hessian of eta''.S^P in x' and y'. Entries are polynomials in the
/// extended layout (x', x'', y', eta''), linear in eta''.
class HessianMatrix {
public:
  HessianMatrix(std::vector<Polynomial> principal_parts, Weights weights, MultiIndex beta_dprime);

  std::size_t size() const noexcept { return weights_.n_prime(); }
  const Weights& weights() const noexcept { return weights_; }
  const MultiIndex& beta_dprime() const noexcept { return beta_dprime_; }
  const VariableLayout& layout() const noexcept { return layout_; }
  const Polynomial& entry(std::size_t i, std::size_t j) const { return entries_[i * size() + j]; }
  /// d^2 S^P_l / dx'_i dy'_j in the base layout.
  const Polynomial& component(std::size_t i, std::size_t j, std::size_t l) const {
    return components_[(i * size() + j) * weights_.n_dprime() + l];
  }

  RationalMatrix evaluate(const RationalVector& point) const;
  Eigen::MatrixXd evaluate(const Eigen::VectorXd& point) const;

private:
  Weights weights_;
  MultiIndex beta_dprime_;
  VariableLayout layout_;
  std::vector<Polynomial> entries_;
  std::vector<Polynomial> components_;
};

HessianMatrix mixed_hessian(std::span<const Polynomial> principal_parts, const Weights& weights,
                            const MultiIndex& beta_dprime);

/// Exact rank via fraction-free (Bareiss) elimination after clearing row denominators.
int exact_rank(const RationalMatrix& m);

int rank_at(const HessianMatrix& h, const RationalVector& point);

/// Evaluates a Hessian at points k/D with integer numerators k using machine
/// integers; falls back to exact rationals whenever an intermediate overflows.
class HessianEvaluator {
public:
  explicit HessianEvaluator(const HessianMatrix& h);

  int rank(std::span<const long> numerators, long denominator) const;

private:
  struct Term {
    std::int64_t coeff;
    std::vector<std::pair<std::uint16_t, std::uint16_t>> factors;
    int degree;
  };
  const HessianMatrix* h_;
  std::vector<std::vector<Term>> entries_;
  bool integral_ = true;
  int max_degree_ = 0;
};

struct SamplingPlan {
  int samples = 1000;
  std::uint64_t seed = 0;
  /// Points always tested before the random ones (extended layout).
  std::vector<RationalVector> extra_points;
  /// Random coordinates are drawn from {k/denominator : |k| <= denominator}.
  long denominator = 8;
};

struct RankSampleReport {
  int min_rank = 0;
  RationalVector witness;
  int samples_tried = 0;
  std::uint64_t seed = 0;
  /// Count of tested points by observed rank.
  std::map<int, long> rank_counts;
};

/// Random point of the extended layout: (x', x'', y') in [-1,1] with one
/// coordinate of modulus in [1/2, 1]; eta'' with max |eta''_l| = 1.
std::vector<long> sample_shell_numerators(const VariableLayout& layout, CounterRng& rng,
                                          long denominator);

/// Minimal observed rank: an upper bound for the true minimum over the shell.
RankSampleReport min_rank_sample(const HessianMatrix& h, const SamplingPlan& plan);

struct GenericTrialPlan {
  int tuples = 100;
  int points_per_tuple = 1000;
  std::uint64_t seed = 0;
  long coefficient_bound = 10;
  long denominator = 8;
};

struct GenericTrialReport {
  /// Tuples keyed by their minimal observed rank.
  std::map<int, long> min_rank_histogram;
  /// All (tuple, point) evaluations keyed by rank.
  std::map<int, long> evaluation_histogram;
  long evaluations = 0;
  std::uint64_t seed = 0;

  double fraction_at_least(int r) const;
};

/// Random element of Lambda_{alpha,beta}: coefficients uniform on {-M..M}\{0}.
std::vector<Polynomial> random_lambda_tuple(const Weights& w, const MultiIndex& beta_dprime,
                                            CounterRng& rng, long coefficient_bound);

GenericTrialReport generic_rank_trial(const Weights& w, const MultiIndex& beta_dprime,
                                      const GenericTrialPlan& plan);

struct MinorCertificate {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  Polynomial minor;
};

/// First r x r minor that is a nonzero polynomial; proves rank >= r at
/// generic points (not everywhere). Intended for n' <= 4 or small r.
std::optional<MinorCertificate> symbolic_minor_certificate(const HessianMatrix& h, int r);

Polynomial symbolic_determinant(const std::vector<std::vector<Polynomial>>& m);

}  // namespace radonlike

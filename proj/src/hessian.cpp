#include "radonlike/hessian.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace radonlike {

HessianMatrix::HessianMatrix(std::vector<Polynomial> principal_parts, Weights weights,
                             MultiIndex beta_dprime)
    : weights_(std::move(weights)),
      beta_dprime_(std::move(beta_dprime)),
      layout_{weights_.n_prime(), weights_.n_dprime(), true} {
  const std::size_t np = weights_.n_prime();
  const std::size_t nd = weights_.n_dprime();
  require(principal_parts.size() == nd, ErrorKind::InvalidArgument,
          "mixed_hessian: expected one principal part per codimension");
  require(beta_dprime_.size() == nd, ErrorKind::InvalidArgument,
          "mixed_hessian: beta'' must have length n''");
  const VariableLayout base{np, nd, false};
  for (std::size_t l = 0; l < nd; ++l) {
    require(principal_parts[l].layout() == base, ErrorKind::InvalidArgument,
            "mixed_hessian: principal part has the wrong layout");
    require(is_quasihomogeneous(principal_parts[l], weights_, beta_dprime_[l]),
            ErrorKind::InvalidArgument,
            "mixed_hessian: principal part " + std::to_string(l + 1) +
                " is not quasihomogeneous of degree beta''_" + std::to_string(l + 1));
  }
  entries_.assign(np * np, Polynomial(layout_));
  components_.reserve(np * np * nd);
  for (std::size_t i = 0; i < np; ++i) {
    for (std::size_t j = 0; j < np; ++j) {
      Polynomial& e = entries_[i * np + j];
      for (std::size_t l = 0; l < nd; ++l) {
        Polynomial d = principal_parts[l].derivative(x_prime(i)).derivative(y_prime(j));
        components_.push_back(d);
        e += d.embed(layout_) * Polynomial::variable(layout_, eta(l));
      }
    }
  }
}

RationalMatrix HessianMatrix::evaluate(const RationalVector& point) const {
  require(static_cast<std::size_t>(point.size()) == layout_.size(), ErrorKind::InvalidArgument,
          "Hessian evaluation point must have 2n'+2n'' coordinates");
  const std::size_t n = size();
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(i, j).evaluate(point);
  return m;
}

Eigen::MatrixXd HessianMatrix::evaluate(const Eigen::VectorXd& point) const {
  require(static_cast<std::size_t>(point.size()) == layout_.size(), ErrorKind::InvalidArgument,
          "Hessian evaluation point must have 2n'+2n'' coordinates");
  const std::size_t n = size();
  Eigen::MatrixXd m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(i, j).evaluate(point);
  return m;
}

HessianMatrix mixed_hessian(std::span<const Polynomial> principal_parts, const Weights& weights,
                            const MultiIndex& beta_dprime) {
  return HessianMatrix(std::vector<Polynomial>(principal_parts.begin(), principal_parts.end()),
                       weights, beta_dprime);
}

namespace {

// Bareiss elimination; entries after step k are (k+1)x(k+1) minors, so every
// division is exact even when pivot columns are skipped.
template <typename Int>
int bareiss_rank(std::vector<std::vector<Int>>& a) {
  const std::size_t rows = a.size();
  if (rows == 0) return 0;
  const std::size_t cols = a[0].size();
  Int prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        a[i][k] = (a[r][c] * a[i][k] - a[i][c] * a[r][k]) / prev;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

// Same elimination in 128-bit integers; returns -1 on overflow.
int bareiss_rank_i128(std::vector<std::vector<__int128>> a) {
  const std::size_t rows = a.size();
  if (rows == 0) return 0;
  const std::size_t cols = a[0].size();
  __int128 prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        __int128 u, v, w;
        if (__builtin_mul_overflow(a[r][c], a[i][k], &u)) return -1;
        if (__builtin_mul_overflow(a[i][c], a[r][k], &v)) return -1;
        if (__builtin_sub_overflow(u, v, &w)) return -1;
        a[i][k] = w / prev;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

int integer_rank(const std::vector<std::vector<std::int64_t>>& m) {
  std::vector<std::vector<__int128>> wide(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) wide[i].assign(m[i].begin(), m[i].end());
  int r = bareiss_rank_i128(std::move(wide));
  if (r >= 0) return r;
  std::vector<std::vector<Integer>> big(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (auto v : m[i]) big[i].emplace_back(static_cast<long>(v));
  return bareiss_rank(big);
}

}  // namespace

int exact_rank(const RationalMatrix& m) {
  std::vector<std::vector<Integer>> a(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    }
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      a[static_cast<std::size_t>(i)].push_back(m(i, j).get_num() * (l / m(i, j).get_den()));
    }
  }
  return bareiss_rank(a);
}

int rank_at(const HessianMatrix& h, const RationalVector& point) {
  return exact_rank(h.evaluate(point));
}

HessianEvaluator::HessianEvaluator(const HessianMatrix& h) : h_(&h) {
  const std::size_t n = h.size();
  Integer lcm_den = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [e, c] : h.entry(i, j).terms())
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  entries_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [e, c] : h.entry(i, j).terms()) {
        Rational scaled = c * Rational(lcm_den);
        Integer num = scaled.get_num();
        if (!num.fits_slong_p()) integral_ = false;
        Term t{integral_ ? num.get_si() : 0, {}, 0};
        for (std::size_t v = 0; v < e.size(); ++v) {
          if (e[v] == 0) continue;
          t.factors.emplace_back(static_cast<std::uint16_t>(v), static_cast<std::uint16_t>(e[v]));
          t.degree += e[v];
        }
        max_degree_ = std::max(max_degree_, t.degree);
        entries_[i * n + j].push_back(std::move(t));
      }
    }
  }
}

int HessianEvaluator::rank(std::span<const long> numerators, long denominator) const {
  const std::size_t n = h_->size();
  auto exact_path = [&] {
    RationalVector p(static_cast<Eigen::Index>(numerators.size()));
    for (std::size_t v = 0; v < numerators.size(); ++v)
      p[static_cast<Eigen::Index>(v)] = make_rational(numerators[v], denominator);
    return rank_at(*h_, p);
  };
  if (!integral_) return exact_path();
  std::vector<std::int64_t> dpow(static_cast<std::size_t>(max_degree_) + 1, 1);
  for (std::size_t k = 1; k < dpow.size(); ++k) {
    if (__builtin_mul_overflow(dpow[k - 1], static_cast<std::int64_t>(denominator), &dpow[k]))
      return exact_path();
  }
  std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t acc = 0;
      for (const Term& t : entries_[i * n + j]) {
        std::int64_t v = t.coeff;
        bool overflow = __builtin_mul_overflow(v, dpow[static_cast<std::size_t>(max_degree_ - t.degree)], &v);
        for (auto [var, pw] : t.factors) {
          for (int k = 0; k < pw && !overflow; ++k)
            overflow = __builtin_mul_overflow(v, static_cast<std::int64_t>(numerators[var]), &v);
        }
        if (overflow || __builtin_add_overflow(acc, v, &acc)) return exact_path();
      }
      m[i][j] = acc;
    }
  }
  return integer_rank(m);
}

std::vector<long> sample_shell_numerators(const VariableLayout& layout, CounterRng& rng,
                                          long denominator) {
  require(layout.with_eta, ErrorKind::InvalidArgument, "shell sampling needs the eta'' block");
  const long D = denominator;
  const std::size_t base = layout.base_size();
  std::vector<long> k(layout.size());
  for (std::size_t v = 0; v < base; ++v) k[v] = rng.uniform_int(-D, D);
  const std::size_t forced = static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(base) - 1));
  long mag = rng.uniform_int((D + 1) / 2, D);
  k[forced] = rng.uniform_int(0, 1) ? mag : -mag;
  for (std::size_t l = base; l < layout.size(); ++l) k[l] = rng.uniform_int(-D, D);
  const std::size_t unit =
      base + static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(layout.n_dprime) - 1));
  k[unit] = rng.uniform_int(0, 1) ? D : -D;
  return k;
}

RankSampleReport min_rank_sample(const HessianMatrix& h, const SamplingPlan& plan) {
  require(plan.samples >= 1, ErrorKind::InvalidArgument, "min_rank_sample needs samples >= 1");
  require(plan.denominator >= 1, ErrorKind::InvalidArgument, "denominator must be positive");
  RankSampleReport report;
  report.seed = plan.seed;
  report.min_rank = std::numeric_limits<int>::max();
  auto record = [&](int r, const RationalVector& p) {
    ++report.rank_counts[r];
    ++report.samples_tried;
    if (r < report.min_rank) {
      report.min_rank = r;
      report.witness = p;
    }
  };
  for (const auto& p : plan.extra_points) record(rank_at(h, p), p);
  HessianEvaluator eval(h);
  CounterRng rng(plan.seed, 0);
  for (int s = 0; s < plan.samples; ++s) {
    auto k = sample_shell_numerators(h.layout(), rng, plan.denominator);
    int r = eval.rank(k, plan.denominator);
    if (r < report.min_rank) {
      RationalVector p(static_cast<Eigen::Index>(k.size()));
      for (std::size_t v = 0; v < k.size(); ++v)
        p[static_cast<Eigen::Index>(v)] = make_rational(k[v], plan.denominator);
      record(r, p);
    } else {
      ++report.rank_counts[r];
      ++report.samples_tried;
    }
  }
  return report;
}

double GenericTrialReport::fraction_at_least(int r) const {
  if (evaluations == 0) return 0.0;
  long hits = 0;
  for (auto [rank, count] : evaluation_histogram)
    if (rank >= r) hits += count;
  return static_cast<double>(hits) / static_cast<double>(evaluations);
}

std::vector<Polynomial> random_lambda_tuple(const Weights& w, const MultiIndex& beta_dprime,
                                            CounterRng& rng, long coefficient_bound) {
  require(coefficient_bound >= 1, ErrorKind::InvalidArgument, "coefficient bound must be >= 1");
  const VariableLayout base{w.n_prime(), w.n_dprime(), false};
  std::vector<Polynomial> tuple;
  for (std::size_t l = 0; l < beta_dprime.size(); ++l) {
    auto basis = lambda_basis(w, beta_dprime[l]);
    require(!basis.empty(), ErrorKind::DegenerateSpace,
            "Lambda basis is empty for beta''_" + std::to_string(l + 1) + " = " +
                std::to_string(beta_dprime[l]));
    Polynomial p(base);
    for (const auto& m : basis) {
      long c = rng.uniform_int(-coefficient_bound, coefficient_bound - 1);
      if (c >= 0) ++c;
      p.add_term(m.exponents, Rational(c));
    }
    tuple.push_back(std::move(p));
  }
  return tuple;
}

GenericTrialReport generic_rank_trial(const Weights& w, const MultiIndex& beta_dprime,
                                      const GenericTrialPlan& plan) {
  require(plan.tuples >= 1 && plan.points_per_tuple >= 1, ErrorKind::InvalidArgument,
          "generic_rank_trial needs at least one tuple and one point");
  GenericTrialReport report;
  report.seed = plan.seed;
  for (int t = 0; t < plan.tuples; ++t) {
    CounterRng rng(plan.seed, static_cast<std::uint64_t>(t));
    auto tuple = random_lambda_tuple(w, beta_dprime, rng, plan.coefficient_bound);
    HessianMatrix h(std::move(tuple), w, beta_dprime);
    HessianEvaluator eval(h);
    int min_rank = std::numeric_limits<int>::max();
    for (int s = 0; s < plan.points_per_tuple; ++s) {
      auto k = sample_shell_numerators(h.layout(), rng, plan.denominator);
      int r = eval.rank(k, plan.denominator);
      ++report.evaluation_histogram[r];
      ++report.evaluations;
      min_rank = std::min(min_rank, r);
    }
    ++report.min_rank_histogram[min_rank];
  }
  return report;
}

Polynomial symbolic_determinant(const std::vector<std::vector<Polynomial>>& m) {
  const std::size_t n = m.size();
  require(n >= 1, ErrorKind::InvalidArgument, "determinant of an empty matrix");
  if (n == 1) return m[0][0];
  Polynomial det(m[0][0].layout());
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<Polynomial>> sub;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Polynomial> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[i][j]);
      sub.push_back(std::move(row));
    }
    Polynomial term = m[0][c] * symbolic_determinant(sub);
    if (c % 2 == 0) det += term;
    else det -= term;
  }
  return det;
}

std::optional<MinorCertificate> symbolic_minor_certificate(const HessianMatrix& h, int r) {
  const std::size_t n = h.size();
  require(r >= 1 && static_cast<std::size_t>(r) <= n, ErrorKind::InvalidArgument,
          "minor size must lie in [1, n']");
  std::vector<std::vector<std::size_t>> subsets;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> gen = [&](std::size_t start) {
    if (cur.size() == static_cast<std::size_t>(r)) {
      subsets.push_back(cur);
      return;
    }
    for (std::size_t k = start; k < n; ++k) {
      cur.push_back(k);
      gen(k + 1);
      cur.pop_back();
    }
  };
  gen(0);
  for (const auto& rows : subsets) {
    for (const auto& cols : subsets) {
      std::vector<std::vector<Polynomial>> m;
      for (auto i : rows) {
        std::vector<Polynomial> row;
        for (auto j : cols) row.push_back(h.entry(i, j));
        m.push_back(std::move(row));
      }
      Polynomial d = symbolic_determinant(m);
      if (!d.is_zero()) return MinorCertificate{rows, cols, std::move(d)};
    }
  }
  return std::nullopt;
}

}  // namespace radonlike

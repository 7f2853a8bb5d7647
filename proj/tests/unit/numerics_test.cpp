#include <cmath>
#include <numbers>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "radonlike/numerics/cutoff.hpp"
#include "radonlike/numerics/discretize.hpp"
#include "radonlike/numerics/grid.hpp"
#include "radonlike/numerics/grid_operator.hpp"
#include "radonlike/numerics/multipliers.hpp"
#include "radonlike/numerics/norms.hpp"

using namespace radonlike;

namespace {

OperatorSpec reference() {
  return testing::spec11({testing::term(testing::layout11(), {0, 0, 2})});
}

Eigen::VectorXd random_vector(CounterRng& rng, std::size_t n) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = 2.0 * rng.uniform01() - 1.0;
  return v;
}

}  // namespace

TEST_SUITE("numerics") {
  TEST_CASE("fixed bump") {
    for (double t : {-1.0, -0.3, 0.0, 0.99, 1.0}) CHECK(phi0(t) == 1.0);
    for (double t : {-2.0, 2.0, 2.5, -7.0}) CHECK(phi0(t) == 0.0);
    double prev = 1.0;
    for (double t = 1.0; t <= 2.0; t += 1.0 / 64) {
      CHECK(phi0(t) <= prev);
      CHECK(phi0(t) == doctest::Approx(oracle::phi0(t)).epsilon(1e-14));
      CHECK(phi0(-t) == phi0(t));
      prev = phi0(t);
    }
    std::vector<double> inside{0.3, -0.2}, edge{0.6, 0.0}, out{0.8, 0.7};
    CHECK(phi_radial(inside) == 1.0);
    CHECK(phi_radial(out) == 0.0);
    CHECK(phi_radial(edge) > 0.0);
    CHECK(phi_radial(edge) < 1.0);
  }

  TEST_CASE("grid geometry") {
    const Grid g(2, 8, 2.0);
    CHECK(g.size() == 64);
    CHECK(g.spacing(0) == 0.5);
    CHECK(g.node(1, 0) == -2.0);
    CHECK(g.node(1, 4) == 0.0);
    CHECK(g.frequency(0, 1) == doctest::Approx(std::numbers::pi / 2));
    CHECK(g.frequency(0, 7) == doctest::Approx(-std::numbers::pi / 2));
    CHECK(g.unravel(13) == std::vector<std::size_t>{1, 5});
    CHECK_THROWS_AS(Grid(2, 6, 2.0), Error);
    CHECK_THROWS_AS(Grid(2, 4, 2.0), Error);
  }

  TEST_CASE("norm formulas on a 2x2 matrix") {
    Eigen::MatrixXd m(2, 2);
    m << 1, 2, 3, 4;
    CHECK(operator_norm(m, NormPair::OneOne).value == 6.0);
    CHECK(operator_norm(m, NormPair::InfInf).value == 7.0);
    CHECK(operator_norm(m, NormPair::OneInf).value == 4.0);
    // Largest root of the characteristic polynomial of the Gram matrix.
    const Eigen::Matrix2d gram = m.transpose() * m;
    const double tr = gram.trace(), det = gram(0, 0) * gram(1, 1) - gram(0, 1) * gram(1, 0);
    const double sigma = std::sqrt((tr + std::sqrt(tr * tr - 4.0 * det)) / 2.0);
    CHECK(std::abs(operator_norm(m, NormPair::TwoTwo).value - sigma) < 1e-3);
    CHECK(std::abs(sigma - 5.4650) < 1e-3);
  }

  TEST_CASE("norm codes round-trip") {
    for (auto p : {NormPair::OneOne, NormPair::InfInf, NormPair::TwoTwo, NormPair::OneInf})
      CHECK(parse_norm_code(norm_code(p)) == p);
    CHECK_THROWS_AS(parse_norm_code("33"), Error);
  }

  TEST_CASE("decay_slope") {
    std::vector<std::pair<long, double>> a;
    for (long j = 0; j <= 5; ++j) a.emplace_back(j, std::ldexp(1.0, static_cast<int>(-j)));
    auto fa = decay_slope(a);
    CHECK(fa.slope == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(fa.max_residual < 1e-14);
    for (double c : {0.01, 3.0, 1e6}) {
      std::vector<std::pair<long, double>> b;
      for (long j = 0; j <= 4; ++j) b.emplace_back(j, c * std::ldexp(1.0, static_cast<int>(-2 * j)));
      CHECK(decay_slope(b).slope == doctest::Approx(-2.0).epsilon(1e-12));
    }
    // Closed-form least squares for equally spaced x = 0, 1, 2: slope = (y2 - y0) / 2.
    std::vector<std::pair<long, double>> c{{0, 1.0}, {1, 0.5}, {2, 1.0 / 3.0}};
    const double expected = (std::log2(1.0 / 3.0) - std::log2(1.0)) / 2.0;
    CHECK(decay_slope(c).slope == doctest::Approx(expected).epsilon(1e-13));
    CHECK(decay_slope(c).slope == doctest::Approx(-0.7925).epsilon(1e-4));
    std::vector<std::pair<long, double>> bad{{0, 1.0}, {1, 0.0}, {2, 1.0}};
    CHECK_THROWS_AS(decay_slope(bad), Error);
    std::vector<std::pair<long, double>> few{{0, 1.0}, {1, 2.0}};
    CHECK_THROWS_AS(decay_slope(few), Error);
  }

  TEST_CASE("low-pass symbol and partition identity") {
    const MultiIndex bd{2};
    std::vector<double> zero{0.0};
    CHECK(low_pass_symbol(bd, 3, zero) == 1.0);
    const auto spec = reference();
    const Grid grid(2, 64, 2.0);
    for (long j = 0; j <= 4; ++j) {
      for (long kmax : {0L, 2L, 5L}) {
        Eigen::VectorXd sum = frequency_multiplier(LowPass{j}, spec, grid).symbol();
        for (long k = 0; k <= kmax; ++k) sum += frequency_multiplier(Shell{j, k}, spec, grid).symbol();
        for (std::size_t idx = 0; idx < grid.size(); ++idx) {
          const double xi = grid.frequency(1, idx % 64);
          const double want = oracle::phi0(2.0 * std::abs(std::ldexp(xi, static_cast<int>(-kmax - 1 - 2 * j))));
          CHECK(std::abs(sum[static_cast<Eigen::Index>(idx)] - want) <= 1e-12);
        }
      }
    }
    // Identity once 2^K 2^{j min beta''} exceeds twice the largest grid frequency.
    const double top = std::numbers::pi * 32 / 2.0;
    const long j = 1;
    long k = 0;
    while (std::ldexp(1.0, static_cast<int>(k + 2 * j)) <= 2.0 * top) ++k;
    Eigen::VectorXd sum = frequency_multiplier(LowPass{j}, spec, grid).symbol();
    for (long s = 0; s <= k; ++s) sum += frequency_multiplier(Shell{j, s}, spec, grid).symbol();
    CHECK((sum.array() - 1.0).abs().maxCoeff() <= 1e-12);
  }

  TEST_CASE("Bessel symbol") {
    const MultiIndex g1{1};
    for (double s : {0.0, 0.5, 1.0, 2.0}) {
      for (double x : {0.0, 0.3, -1.0, 1.0}) {
        std::vector<double> xi{x};
        CHECK(bessel_symbol(s, g1, xi) == 1.0);
      }
      for (int m = 0; m <= 12; ++m) {
        std::vector<double> xi{1.5 * std::ldexp(1.0, m)};
        const double f = oracle::phi0(1.5);
        const double want = std::exp2(s * m) * f + std::exp2(s * (m + 1)) * (1.0 - f);
        const double got = bessel_symbol(s, g1, xi);
        CHECK(got == doctest::Approx(want).epsilon(1e-13));
        CHECK(got >= std::exp2(s * m) * (1 - 1e-14));
        CHECK(got <= std::exp2(s * (m + 1)) * (1 + 1e-14));
      }
    }
    std::vector<double> box{0.7, -1.0};
    CHECK(bessel_symbol(1.5, MultiIndex{1, 2}, box) == 1.0);
  }

  TEST_CASE("Bessel symbol is nonnegative and below the corrected growth bound on a grid") {
    const Grid grid(2, 64, 2.0);
    const MultiIndex gamma{1, 2};
    for (double s : {0.0, 0.5, 1.0, 2.0}) {
      for (std::size_t idx = 0; idx < grid.size(); ++idx) {
        std::vector<double> xi{grid.frequency(0, idx / 64), grid.frequency(1, idx % 64)};
        const double v = bessel_symbol(s, gamma, xi);
        CHECK(v >= 0.0);
        double m = 0.0;
        for (std::size_t i = 0; i < 2; ++i)
          m = std::max(m, std::pow(std::abs(xi[i]), s / static_cast<double>(gamma[i])));
        CHECK(v <= std::max(1.0, std::exp2(s) * m) * (1 + 1e-12));
      }
    }
  }

  TEST_CASE("multiplier (2,2) norm is the largest symbol modulus") {
    const auto spec = reference();
    const Grid grid(2, 32, 2.0);
    for (const MultiplierKind& kind : {MultiplierKind{LowPass{1}}, MultiplierKind{Shell{0, 1}},
                                       MultiplierKind{AnnulusProjection{3.0, 0}}}) {
      const auto op = frequency_multiplier(kind, spec, grid);
      const double want = op.symbol().cwiseAbs().maxCoeff();
      CHECK(std::abs(operator_norm(op, NormPair::TwoTwo).value - want) <= 1e-6 * std::max(1.0, want));
    }
  }

  TEST_CASE("dense and matrix-free forms agree") {
    const auto spec = reference();
    const Grid grid(2, 32, 2.0);
    const auto t = discretize_Tj(spec, grid, 0);
    const auto q = frequency_multiplier(LowPass{0}, spec, grid);
    const auto tq = compose(t, q);
    CounterRng rng(51, 0);
    for (const GridOperator* op : {&t, &q, &tq}) {
      const Eigen::MatrixXd dense = op->to_dense();
      for (int r = 0; r < 20; ++r) {
        const Eigen::VectorXd f = random_vector(rng, grid.size());
        CHECK((dense * f - op->apply(f)).cwiseAbs().maxCoeff() <= 1e-10);
        CHECK((dense.transpose() * f - op->apply_transpose(f)).cwiseAbs().maxCoeff() <= 1e-10);
      }
      const DenseNorms d = dense_norms(*op);
      CHECK(d.max_col_sum == doctest::Approx(dense.cwiseAbs().colwise().sum().maxCoeff()).epsilon(1e-10));
      CHECK(d.max_row_sum == doctest::Approx(dense.cwiseAbs().rowwise().sum().maxCoeff()).epsilon(1e-10));
      CHECK(d.max_abs == doctest::Approx(dense.cwiseAbs().maxCoeff()).epsilon(1e-10));
    }
  }

  TEST_CASE("adjoint consistency") {
    const OperatorSpec dual = testing::spec11(
        {testing::term(testing::layout11(), {1, 0, 1}) + testing::term(testing::layout11(), {0, 2, 1})});
    const Grid grid(2, 64, 2.0);
    CounterRng rng(52, 0);
    for (long j = 0; j <= 2; ++j) {
      const auto t = discretize_Tj(dual, grid, j);
      const SparseMatrixR mt = t.matrix().transpose();
      for (int r = 0; r < 10; ++r) {
        const Eigen::VectorXd f = random_vector(rng, grid.size()), g = random_vector(rng, grid.size());
        CHECK(std::abs(g.dot(t.apply(f)) - (mt * g).dot(f)) <= 1e-10);
      }
    }
  }
}

#include <Eigen/Core>

#include "doctest.h"
#include "helpers.hpp"
#include "radonlike/scaling.hpp"

using namespace radonlike;

TEST_SUITE("scaling") {
  TEST_CASE("dilate examples") {
    Eigen::Vector2d z(3, 4);
    CHECK(dilate(MultiIndex{1, 2}, 0, z) == z);
    CHECK(dilate(MultiIndex{1, 2}, 1, Eigen::Vector2d(1, 1)) == Eigen::Vector2d(2, 4));
    Eigen::VectorXd e(1);
    e << 8;
    CHECK(dilate(MultiIndex{1}, -3, e)[0] == 1.0);
  }

  TEST_CASE("dilate errors") {
    Eigen::Vector2d z(1, 1);
    CHECK_THROWS_AS(dilate(MultiIndex{1}, 1, z), Error);
    try {
      dilate(MultiIndex{1, 2}, 451, z);
      FAIL("expected dilation cap");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DilationCap);
    }
    CHECK_NOTHROW(dilate(MultiIndex{1, 2}, 450, z));
  }

  TEST_CASE("dilation group law, floating and exact") {
    CounterRng rng(11, 0);
    for (int trial = 0; trial < 50; ++trial) {
      MultiIndex g{rng.uniform_int(-3, 3), rng.uniform_int(-3, 3), rng.uniform_int(-3, 3)};
      const long j = rng.uniform_int(-5, 5), k = rng.uniform_int(-5, 5);
      Eigen::Vector3d z(rng.uniform01() - 0.5, rng.uniform01() * 7, -rng.uniform01());
      CHECK(dilate(g, j + k, z) == dilate(g, j, dilate(g, k, z)));
      RationalVector q(3);
      for (int i = 0; i < 3; ++i) q[i] = testing::random_rational(rng);
      CHECK(dilate(g, j + k, q) == dilate(g, j, dilate(g, k, q)));
    }
  }

  TEST_CASE("scaled_norm") {
    CHECK(scaled_norm(Scale{{0, 0}}, Eigen::Vector2d(3, 4)) == 5.0);
    CHECK(scaled_norm(Scale{{1, 0}}, Eigen::Vector2d(3, 4)) == doctest::Approx(std::sqrt(52.0)).epsilon(1e-15));
    for (long k : {-7L, 0L, 9L}) {
      Eigen::VectorXd v = Eigen::VectorXd::Zero(1);
      CHECK(scaled_norm(Scale{{k}}, v) == 0.0);
    }
    CHECK_THROWS_AS(scaled_norm(Scale{{1}}, Eigen::Vector2d(1, 1)), Error);
  }

  TEST_CASE("scaled_norm equals Euclidean norm of the weighted vector") {
    CounterRng rng(12, 0);
    for (int trial = 0; trial < 30; ++trial) {
      Scale s{{rng.uniform_int(-4, 4), rng.uniform_int(-4, 4), rng.uniform_int(-4, 4)}};
      Eigen::Vector3d v(rng.uniform01() - 0.5, rng.uniform01() - 0.5, rng.uniform01() - 0.5);
      Eigen::Vector3d w;
      for (int i = 0; i < 3; ++i) w[i] = std::pow(2.0, static_cast<double>(s.entries[static_cast<std::size_t>(i)])) * v[i];
      CHECK(scaled_norm(s, v) == doctest::Approx(w.norm()).epsilon(1e-14));
    }
  }

  TEST_CASE("aniso_ratio") {
    CHECK(aniso_ratio(MultiIndex{2, 3}, MultiIndex{1, 2}) == 2);
    CHECK(aniso_ratio(MultiIndex{4, 5, 6}, MultiIndex{4, 5, 6}) == 1);
    CHECK(aniso_ratio(MultiIndex{-1, 4}, MultiIndex{2, 8}) == Rational(1, 2));
    CHECK_THROWS_AS(aniso_ratio(MultiIndex{1, 1}, MultiIndex{1, 0}), Error);
    CHECK_THROWS_AS(aniso_ratio(MultiIndex{1}, MultiIndex{1, 1}), Error);
  }

  TEST_CASE("aniso_ratio bounds every entry with equality somewhere") {
    CounterRng rng(13, 0);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<long> d, g;
      const long n = rng.uniform_int(1, 5);
      for (long i = 0; i < n; ++i) {
        d.push_back(rng.uniform_int(-9, 9));
        g.push_back(rng.uniform_int(1, 9));
      }
      const Rational r = aniso_ratio(MultiIndex(d), MultiIndex(g));
      bool equal = false;
      for (std::size_t i = 0; i < d.size(); ++i) {
        CHECK(Rational(d[i]) <= r * g[i]);
        equal = equal || Rational(d[i]) == r * g[i];
      }
      CHECK(equal);
    }
  }

  TEST_CASE("multiindex order and weights") {
    CHECK(MultiIndex{1, -4, 2}.order() == -1);
    Weights w(MultiIndex{1, 2}, MultiIndex{3}, MultiIndex{4, 5});
    CHECK(w.alpha() == MultiIndex{1, 2, 3});
    CHECK(w.alpha_tilde(MultiIndex{7}) == MultiIndex{1, 2, 7});
    CHECK(w.beta(MultiIndex{7}) == MultiIndex{4, 5, 7});
    CHECK(w.variable_weights() == MultiIndex{1, 2, 3, 4, 5});
  }
}

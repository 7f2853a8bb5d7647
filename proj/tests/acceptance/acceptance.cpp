// Acceptance harness: one PASS/FAIL line per criterion.
//   acceptance all | acceptance <id>...

#include <Eigen/Dense>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>

#include "radonlike/exponents.hpp"
#include "radonlike/hessian.hpp"
#include "radonlike/numerics/cutoff.hpp"
#include "radonlike/numerics/discretize.hpp"
#include "radonlike/numerics/duality.hpp"
#include "radonlike/numerics/experiments.hpp"
#include "radonlike/numerics/knapp.hpp"
#include "radonlike/numerics/multipliers.hpp"
#include "radonlike/random.hpp"

using namespace radonlike;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

const VariableLayout L11{1, 1, false};

Polynomial mono(const VariableLayout& l, Exponents e, Rational c = 1) {
  return Polynomial::monomial(l, std::move(e), c);
}

OperatorSpec spec11(std::vector<Polynomial> s) {
  return OperatorSpec{Weights::isotropic(1, 1), MultiIndex{2}, std::move(s), 0.5};
}

OperatorSpec reference_spec() { return spec11({mono(L11, {0, 0, 2})}); }
OperatorSpec rank_one_spec() { return spec11({mono(L11, {1, 0, 1})}); }
OperatorSpec dual_spec() { return spec11({mono(L11, {1, 0, 1}) + mono(L11, {0, 2, 1})}); }

Rational random_rational(CounterRng& rng) {
  Rational q(rng.uniform_int(-9, 9), rng.uniform_int(1, 9));
  q.canonicalize();
  return q;
}

std::string fmt(double v, int digits = 4) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(digits);
  s << v;
  return s.str();
}

const SlopeSummary* find_fit(const DecayTable& t, const std::string& series) {
  for (const auto& f : t.fits)
    if (f.series == series) return &f;
  return nullptr;
}

// 1. Exact-algebra suite.
void criterion1(Outcome& out) {
  CounterRng rng(101, 0);
  int instances = 0;
  long identities = 0;
  while (instances < 120) {
    const auto np = static_cast<std::size_t>(rng.uniform_int(1, 3));
    const auto nd = static_cast<std::size_t>(rng.uniform_int(1, 2));
    std::vector<long> a, b, c, bd;
    for (std::size_t i = 0; i < np; ++i) a.push_back(rng.uniform_int(1, 3));
    for (std::size_t i = 0; i < nd; ++i) b.push_back(rng.uniform_int(1, 3));
    for (std::size_t i = 0; i < np; ++i) c.push_back(rng.uniform_int(1, 3));
    const Weights w{MultiIndex(a), MultiIndex(b), MultiIndex(c)};
    const VariableLayout layout{np, nd, false};
    std::vector<Polynomial> s;
    bool ok = true;
    for (std::size_t l = 0; l < nd; ++l) {
      bd.push_back(b[l] + rng.uniform_int(1, 3));
      const auto basis = lambda_basis(w, bd.back());
      if (basis.empty()) {
        ok = false;
        break;
      }
      Polynomial p(layout);
      for (int t = 0; t < 4; ++t)
        p += mono(layout, basis[static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(basis.size()) - 1))].exponents,
                  random_rational(rng));
      for (int t = 0; t < 3; ++t) {
        const auto higher = lambda_basis(w, bd.back() + rng.uniform_int(1, 3));
        if (!higher.empty())
          p += mono(layout, higher[static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(higher.size()) - 1))].exponents,
                    random_rational(rng));
      }
      s.push_back(p);
    }
    if (!ok) continue;
    OperatorSpec spec{w, MultiIndex(bd), s, 0.5};
    std::vector<Polynomial> parts;
    try {
      parts = check_homogeneity(spec);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::VanishingPrincipalPart) continue;
      throw;
    }
    ++instances;
    const MultiIndex vw = w.variable_weights();
    for (std::size_t l = 0; l < nd; ++l) {
      // Graded reconstruction.
      Polynomial sum(layout);
      for (const auto& [deg, part] : quasidegree_decompose(s[l], w)) sum += part;
      out.require(sum == s[l], "graded reconstruction");
      // Principal-part scaling identity.
      for (long j = -2; j <= 2; ++j)
        out.require(parts[l].dilate(vw, j) == parts[l] * pow2(j * bd[l]), "principal-part scaling");
      identities += 6;
    }
    const auto h = mixed_hessian(parts, w, MultiIndex(bd));
    const std::size_t base = layout.base_size();
    RationalVector p(static_cast<Eigen::Index>(h.layout().size()));
    for (Eigen::Index i = 0; i < p.size(); ++i) p[i] = random_rational(rng);
    RationalVector e1 = p, e2 = p, e12 = p;
    for (std::size_t l = 0; l < nd; ++l) {
      const auto i = static_cast<Eigen::Index>(base + l);
      e1[i] = random_rational(rng);
      e2[i] = random_rational(rng);
      e12[i] = e1[i] + e2[i];
    }
    const RationalMatrix m1 = h.evaluate(e1), m2 = h.evaluate(e2), m12 = h.evaluate(e12);
    for (Eigen::Index i = 0; i < m12.size(); ++i)
      out.require(m12.data()[i] == m1.data()[i] + m2.data()[i], "eta-linearity");
    const int r0 = rank_at(h, p);
    for (long j = -2; j <= 2; ++j) {
      RationalVector q = p;
      for (std::size_t i = 0; i < base; ++i) q[static_cast<Eigen::Index>(i)] *= pow2(-j * vw[i]);
      for (std::size_t l = 0; l < nd; ++l) q[static_cast<Eigen::Index>(base + l)] *= pow2(j * bd[l]);
      out.require(rank_at(h, q) == r0, "dilation rank invariance");
    }
    identities += 1 + 5;
  }
  out.detail << instances << " instances, " << identities << " exact identities checked";
}

// Log-domain sum over (j, k) of the minimum of three dyadic bounds, fitted to E^a F^b.
struct MinSumFit {
  double e_exponent;
  double f_exponent;
};

MinSumFit min_sum_regression(const WeightSums& s, long nd, long r, bool second_vertex) {
  const double a = static_cast<double>(s.alpha_prime), b = static_cast<double>(s.beta_prime);
  const double c = static_cast<double>(s.beta_dprime);
  std::vector<std::array<double, 3>> rows;
  for (int j0 = 40; j0 <= 120; j0 += 20)
    for (int k0 = 40; k0 <= 120; k0 += 20) {
      double e, f;
      if (!second_vertex) {
        f = -(j0 * (a + c) + k0 * nd);
        e = f - j0 * (b - a) - k0 * r;
      } else {
        e = -(j0 * (b + c) + k0 * nd);
        f = e - j0 * (a - b) - k0 * r;
      }
      // Perturb off the lattice so the fit sees generic (E, F).
      e -= 0.37;
      f -= 0.61;
      double m = -INFINITY;
      std::vector<double> terms;
      for (int j = 0; j <= 400; ++j)
        for (int k = 0; k <= 400; ++k) {
          const double t1 = j * c + k * nd + e + f;
          const double t2 = second_vertex ? -j * b + f : -j * a + e;
          const double t3 = -j * (a + b) / 2 - k * r / 2.0 + (e + f) / 2;
          const double t = std::min({t1, t2, t3});
          terms.push_back(t);
          m = std::max(m, t);
        }
      double acc = 0.0;
      for (double t : terms) acc += std::exp2(t - m);
      rows.push_back({e, f, m + std::log2(acc)});
    }
  // Least squares for log2 sum = c0 + a e + b f.
  Eigen::MatrixXd x(static_cast<Eigen::Index>(rows.size()), 3);
  Eigen::VectorXd y(static_cast<Eigen::Index>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    x.row(static_cast<Eigen::Index>(i)) << 1.0, rows[i][0], rows[i][1];
    y[static_cast<Eigen::Index>(i)] = rows[i][2];
  }
  const Eigen::Vector3d beta = (x.transpose() * x).ldlt().solve(x.transpose() * y);
  return {beta[1], beta[2]};
}

// 2. Vertex verification.
void criterion2(Outcome& out) {
  CounterRng rng(102, 0);
  int checked = 0;
  while (checked < 100) {
    const WeightSums s{rng.uniform_int(1, 12), rng.uniform_int(1, 12), rng.uniform_int(1, 12)};
    const long nd = rng.uniform_int(1, 4), r = rng.uniform_int(1, 12);
    if (!ratio_hypothesis(s, nd, r)) continue;
    const auto reg = riesz_region(s, nd, r);
    for (const auto& v : {*reg.v1, *reg.v2}) {
      out.require(condition1_slack(reg, v) == 0, "condition (1) equality");
      out.require(condition2_slack(reg, v) == 0, "condition (2) equality");
    }
    ++checked;
  }
  const WeightSums ws{2, 2, 6};
  const auto worked = riesz_region(ws, 1, 2);
  out.require(worked.v1 && *worked.v1 == PQPoint{Rational(7, 8), Rational(5, 8)}, "V1 = (7/8, 5/8)");
  out.require(worked.v2 && *worked.v2 == PQPoint{Rational(3, 8), Rational(1, 8)}, "V2 = (3/8, 1/8)");
  const auto f1 = min_sum_regression(ws, 1, 2, false);
  const auto f2 = min_sum_regression(ws, 1, 2, true);
  const double d1 = std::max(std::abs(f1.e_exponent - 7.0 / 8), std::abs(f1.f_exponent - (1 - 5.0 / 8)));
  const double d2 = std::max(std::abs(f2.e_exponent - 3.0 / 8), std::abs(f2.f_exponent - (1 - 1.0 / 8)));
  out.require(d1 <= 0.02, "min-sum regression V1");
  out.require(d2 <= 0.02, "min-sum regression V2");
  out.detail << checked << " random tuples exact; worked V1=(7/8,5/8) V2=(3/8,1/8); regression exponents V1 ("
             << fmt(f1.e_exponent) << ", " << fmt(1 - f1.f_exponent) << ") V2 (" << fmt(f2.e_exponent) << ", "
             << fmt(1 - f2.f_exponent) << "), max deviation " << fmt(std::max(d1, d2));
}

// 3. Trivial-inequality slopes on the reference spec.
void criterion3(Outcome& out) {
  const auto spec = reference_spec();
  DecayPlan plain;
  plain.grid = 256;
  plain.jmin = 1;
  plain.jmax = 6;
  plain.low_pass = false;
  plain.norms = {NormPair::OneOne, NormPair::InfInf};
  const auto a = run_decay_experiment(spec, plain);
  DecayPlan projected = plain;
  projected.unprojected = false;
  projected.low_pass = true;
  projected.norms = {NormPair::OneInf};
  const auto b = run_decay_experiment(spec, projected);
  const auto* s11 = find_fit(a, "j:T:11");
  const auto* soo = find_fit(a, "j:T:oooo");
  const auto* s1o = find_fit(b, "j:TQ:1oo");
  out.require(s11 && std::abs(s11->fit.slope + 1.0) <= 0.15, "(1,1) slope -1 +- 0.15");
  out.require(soo && std::abs(soo->fit.slope + 1.0) <= 0.15, "(oo,oo) slope -1 +- 0.15");
  out.require(s1o && std::abs(s1o->fit.slope - 2.0) <= 0.3, "(1,oo) slope of T_jQ_j +2 +- 0.3");
  if (s11 && soo && s1o)
    out.detail << "slopes (1,1) " << fmt(s11->fit.slope) << ", (oo,oo) " << fmt(soo->fit.slope)
               << ", (1,oo) T_jQ_j " << fmt(s1o->fit.slope);
  // Wrap-around: same spacing on a doubled window.
  const long j = 3;
  const auto small = discretize_Tj(spec, level_input_grid(spec, 256, j), level_output_grid(spec, 256, j), j);
  const auto big = discretize_Tj(spec, level_input_grid(spec, 512, j, 2 * kDefaultHalfWidth),
                                 level_output_grid(spec, 512, j, 2 * kDefaultHalfWidth), j);
  const double n1 = operator_norm(small, NormPair::InfInf).value, n2 = operator_norm(big, NormPair::InfInf).value;
  out.detail << "; wrap-around at j=3 (doubled L) relative change " << std::scientific << std::abs(n2 - n1) / n1;
}

// 4. van der Corput decay on S = x'y'.
void criterion4(Outcome& out) {
  const auto spec = rank_one_spec();
  DecayPlan plan;
  plan.grid = 256;
  plan.jmin = 1;
  plan.jmax = 6;
  plan.unprojected = false;
  plan.norms = {NormPair::TwoTwo};
  const auto table = run_decay_experiment(spec, plan);
  out.require(table.all_converged, "power iteration converged (j sweep)");
  const auto* sj = find_fit(table, "j:TQ:22");
  out.require(sj && sj->fit.slope <= -0.8, "(2,2) j-slope <= -0.8");
  if (sj) out.detail << "j-slope " << fmt(sj->fit.slope);

  const long kmax_fit = 3;
  const long jstar = largest_feasible_level(spec, plan.grid, kmax_fit);
  out.require(jstar >= 1, "a level with four resolved shells exists");
  std::optional<long> first_in_tolerance;
  for (long j = 1; j <= jstar; ++j) {
    long kmax = kmax_fit;
    while (shell_resolved(spec, plan.grid, j, kmax + 1)) ++kmax;
    DecayPlan kp = plan;
    kp.jmin = kp.jmax = j;
    kp.kmax = kmax;
    kp.low_pass = false;
    const auto kt = run_decay_experiment(spec, kp);
    out.require(kt.all_converged, "power iteration converged (k sweep)");
    const auto* sk = find_fit(kt, "k:TP:22@j=" + std::to_string(j));
    if (!sk) continue;
    out.detail << "; k-slope@j=" << j << " (k=0.." << kmax << ") " << fmt(sk->fit.slope);
    if (!first_in_tolerance && sk->fit.slope <= -0.3) first_in_tolerance = j;
    if (j == jstar) out.require(sk->fit.slope <= -0.3, "k-slope at the largest feasible j <= -0.3");
  }
  out.detail << "; largest feasible j " << jstar << ", smallest j within tolerance "
             << (first_in_tolerance ? std::to_string(*first_in_tolerance) : "none");
}

// 5. Partition and summation-by-parts identities.
void criterion5(Outcome& out) {
  const auto spec = reference_spec();
  double part_worst = 0.0, sbp_worst = 0.0;
  for (std::size_t n : {64u, 128u, 256u}) {
    const Grid grid(2, n, kDefaultHalfWidth);
    const double top = std::numbers::pi * static_cast<double>(n / 2) / kDefaultHalfWidth;
    for (long j = 0; j <= 4; ++j) {
      long kfull = 0;
      while (std::ldexp(1.0, static_cast<int>(kfull + 2 * j)) <= 2.0 * top) ++kfull;
      Eigen::VectorXd sum = frequency_multiplier(LowPass{j}, spec, grid).symbol();
      for (long k = 0; k <= kfull; ++k) {
        sum += frequency_multiplier(Shell{j, k}, spec, grid).symbol();
        for (std::size_t idx = 0; idx < grid.size(); ++idx) {
          std::vector<double> xi{std::ldexp(grid.frequency(1, idx % n), static_cast<int>(-k - 1))};
          part_worst = std::max(part_worst, std::abs(sum[static_cast<Eigen::Index>(idx)] -
                                                     low_pass_symbol(spec.beta_dprime, j, xi)));
        }
      }
      part_worst = std::max(part_worst, (sum.array() - 1.0).abs().maxCoeff());
    }
    if (n < 128) continue;
    CounterRng rng(105, n);
    const long N = 4;
    std::vector<GridOperator> q, u;
    for (long j = 0; j <= N; ++j) q.push_back(frequency_multiplier(LowPass{j}, spec, grid));
    for (long j = 0; j <= N + 1; ++j) u.push_back(discretize_Uj(spec, grid, j));
    std::vector<GridOperator> t;
    for (long j = 0; j <= N; ++j) t.push_back(discretize_Tj(spec, grid, j));
    for (int r = 0; r < 3; ++r) {
      Eigen::VectorXd f(static_cast<Eigen::Index>(grid.size()));
      for (Eigen::Index i = 0; i < f.size(); ++i) f[i] = 2.0 * rng.uniform01() - 1.0;
      Eigen::VectorXd lhs = Eigen::VectorXd::Zero(f.size());
      for (long j = 0; j <= N; ++j) lhs += t[static_cast<std::size_t>(j)].apply(q[static_cast<std::size_t>(j)].apply(f));
      Eigen::VectorXd rhs = u[0].apply(q[0].apply(f)) - u[N + 1].apply(q[N].apply(f));
      for (long j = 1; j <= N; ++j)
        rhs += u[static_cast<std::size_t>(j)].apply(
            symbol_difference(q[static_cast<std::size_t>(j)], q[static_cast<std::size_t>(j - 1)]).apply(f));
      sbp_worst = std::max(sbp_worst, (lhs - rhs).cwiseAbs().maxCoeff());
    }
  }
  out.require(part_worst <= 1e-12, "partition identity to 1e-12");
  out.require(sbp_worst <= 1e-10, "summation by parts to 1e-10");
  out.detail << "partition max error " << std::scientific << part_worst << ", summation-by-parts max error "
             << sbp_worst << " (grids 64..256, j <= 4)";
}

// 6. Bessel symbol.
void criterion6(Outcome& out) {
  const Grid grid(2, 256, kDefaultHalfWidth);
  long negatives = 0, stated_violations = 0, corrected_violations = 0, box_failures = 0, total = 0;
  double worst_ratio = 0.0;
  std::string worst_at;
  for (const MultiIndex& gamma : {MultiIndex{1, 1}, MultiIndex{1, 2}}) {
    for (double s : {0.0, 0.5, 1.0, 2.0}) {
      for (std::size_t idx = 0; idx < grid.size(); ++idx) {
        std::vector<double> xi{grid.frequency(0, idx / 256), grid.frequency(1, idx % 256)};
        const double v = bessel_symbol(s, gamma, xi);
        ++total;
        if (v < 0.0) ++negatives;
        double stated = 1.0, largest = 0.0;
        for (std::size_t i = 0; i < 2; ++i) {
          const double e = s / static_cast<double>(gamma[i]);
          stated += std::exp2(-e) * std::pow(std::abs(xi[i]), e);
          largest = std::max(largest, std::pow(std::abs(xi[i]), e));
        }
        if (v > stated * (1 + 1e-12)) {
          ++stated_violations;
          if (v / stated > worst_ratio) {
            worst_ratio = v / stated;
            worst_at = "s=" + fmt(s, 1) + " xi=(" + fmt(xi[0], 3) + "," + fmt(xi[1], 3) + ")";
          }
        }
        if (v > std::max(1.0, std::exp2(s) * largest) * (1 + 1e-12)) ++corrected_violations;
      }
      // Unit frequency box, exactly one.
      for (int a = -16; a <= 16; ++a)
        for (int b = -16; b <= 16; ++b) {
          std::vector<double> xi{a / 16.0, b / 16.0};
          if (bessel_symbol(s, gamma, xi) != 1.0) ++box_failures;
        }
    }
  }
  out.require(negatives == 0, "nonnegativity");
  out.require(box_failures == 0, "symbol == 1 on the unit box");
  out.require(stated_violations == 0, "stated growth bound 1 + sum 2^{-s/g}|xi|^{s/g}");
  out.detail << total << " symbol evaluations: negative " << negatives << ", unit-box mismatches " << box_failures
             << ", stated growth bound violated at " << stated_violations;
  if (stated_violations) out.detail << " (worst ratio " << fmt(worst_ratio) << " at " << worst_at << ")";
  out.detail << ", bound max(1, 2^s max|xi_i|^{s/g}) violated at " << corrected_violations;
}

// 7. Knapp necessity.
void criterion7(Outcome& out) {
  const auto spec = reference_spec();
  const auto sums = weight_sums(spec.weights, spec.beta_dprime);
  const double predicted = static_cast<double>(knapp_exponent(sums));
  const auto scan = knapp_scan(spec, -8, -4, 1.0);
  double worst = 0.0, mean = 0.0;
  for (const auto& [t, e] : scan.exponents) {
    worst = std::max(worst, std::abs(e - predicted) / predicted);
    mean += e;
  }
  mean /= static_cast<double>(scan.exponents.size());
  out.require(worst <= 0.15, "successive-ratio exponent within 15% of 4");
  KnappOptions fine;
  fine.nodes_per_axis = 160;
  const double refined = std::log2(knapp_integral(spec, -5, 1.0, fine) / knapp_integral(spec, -6, 1.0, fine));
  const double coarse = std::log2(knapp_integral(spec, -5, 1.0) / knapp_integral(spec, -6, 1.0));
  out.require(std::abs(refined - coarse) <= 0.05, "10x finer quadrature agrees");
  const auto line = knapp_necessary_line(sums, Rational(std::lround(mean)));
  out.require(line.inv_p_coeff == sums.beta() && line.inv_q_coeff == sums.alpha_tilde() &&
                  line.rhs == sums.beta_prime,
              "necessary line equals condition (1) boundary");
  out.require(line.inv_p_coeff == 3 && line.inv_q_coeff == 3 && line.rhs == 1, "line (3, 3, 1)");
  out.detail << "exponents";
  for (const auto& [t, e] : scan.exponents) out.detail << " t=" << t << ":" << fmt(e, 3);
  out.detail << "; max relative error " << fmt(worst, 3) << "; finer quadrature " << fmt(refined, 3) << " vs "
             << fmt(coarse, 3) << "; line (" << to_string(line.inv_p_coeff) << ", " << to_string(line.inv_q_coeff)
             << ", " << to_string(line.rhs) << ")";
}

// 8. Genericity.
void criterion8(Outcome& out) {
  const auto g = genericity_report(Weights(MultiIndex{1, 2}, MultiIndex{2}, MultiIndex{1, 3}));
  out.require(g.k1 == 6 && g.k2 == 4, "K1/K2 = (6, 4)");
  long pairs = 0;
  for (std::size_t np = 5; np <= 40; ++np) {
    const auto iso = genericity_report(Weights::isotropic(np, 1));
    const long n = static_cast<long>(np);
    for (long nd = 1; 2 * nd < n * (n - 4); ++nd, ++pairs)
      out.require(iso.threshold(nd).lo > 1.0, "threshold > 1 at n'=" + std::to_string(np) + " n''=" + std::to_string(nd));
  }
  const Weights w = Weights::isotropic(6, 1);
  const MultiIndex bd{4};
  GenericTrialPlan plan;
  plan.tuples = 100;
  plan.points_per_tuple = 1000;
  plan.seed = 2024;
  const auto report = generic_rank_trial(w, bd, plan);
  const double frac = report.fraction_at_least(2);
  out.require(report.evaluations == 100000, "100 x 1000 evaluations");
  out.require(frac >= 0.99, "fraction of rank >= 2 at least 0.99");

  // Exact cross-check on a 10-tuple subset: a nonzero 2x2 minor polynomial, and
  // exact Bareiss ranks agreeing with the fast evaluator at sampled points.
  int certified = 0, agree = 0, compared = 0;
  for (std::uint64_t t = 0; t < 10; ++t) {
    CounterRng rng(plan.seed, t);
    const auto tuple = random_lambda_tuple(w, bd, rng, plan.coefficient_bound);
    const auto h = mixed_hessian(tuple, w, bd);
    if (auto cert = symbolic_minor_certificate(h, 2); cert && !cert->minor.is_zero()) ++certified;
    const HessianEvaluator fast(h);
    CounterRng pts(plan.seed + 1, t);
    for (int p = 0; p < 50; ++p) {
      const auto k = sample_shell_numerators(h.layout(), pts, plan.denominator);
      RationalVector q(static_cast<Eigen::Index>(k.size()));
      for (std::size_t i = 0; i < k.size(); ++i) q[static_cast<Eigen::Index>(i)] = Rational(k[i], plan.denominator);
      ++compared;
      if (fast.rank(k, plan.denominator) == rank_at(h, q)) ++agree;
    }
  }
  out.require(certified == 10, "2x2 minor certificates for 10 tuples");
  out.require(agree == compared, "exact minors agree with sampled ranks");
  long below = 0;
  for (const auto& [r, c] : report.evaluation_histogram)
    if (r < 2) below += c;
  out.detail << "K1=" << g.k1 << " K2=" << g.k2 << "; " << pairs << " (n',n'') pairs with threshold > 1; rank>=2 in "
             << fmt(100.0 * frac, 3) << "% of " << report.evaluations << " evaluations (" << below
             << " below); certificates " << certified << "/10, exact rank agreement " << agree << "/" << compared;
}

// 9. Dual principal part.
void criterion9(Outcome& out) {
  const auto dual = dual_spec();
  std::vector<double> dev;
  for (long j = 4; j <= 10; ++j) dev.push_back(dual_principal_check(dual, j, 200));
  double worst_ratio = 0.0;
  for (std::size_t i = 1; i < dev.size(); ++i) worst_ratio = std::max(worst_ratio, dev[i] / dev[i - 1]);
  out.require(worst_ratio <= 0.75, "contraction factor <= 0.75 for j >= 4");
  double flat = 0.0;
  for (long j = 0; j <= 10; ++j) flat = std::max(flat, dual_principal_check(rank_one_spec(), j, 200));
  out.require(flat <= 1e-12, "x''-independent S within 1e-12");
  out.detail << "deviations j=4..10:";
  for (double d : dev) out.detail << " " << std::scientific << std::setprecision(3) << d;
  out.detail << "; worst ratio " << fmt(worst_ratio) << "; x''-independent max " << std::scientific << flat;
}

// 10. Determinism of analyze.
void criterion10(Outcome& out) {
  const std::filesystem::path tool = RADONLIKE_TOOL;
  const std::filesystem::path dir = std::filesystem::temp_directory_path();
  std::vector<std::string> names;
  bool all_equal = true;
  for (const char* spec : {"reference.json", "dual.json", "rank_one.json"}) {
    std::string bytes[2];
    for (int run = 0; run < 2; ++run) {
      const auto file = dir / ("radonlike_acceptance_" + std::to_string(run) + ".json");
      std::filesystem::remove(file);
      const std::string cmd = "\"" + tool.string() + "\" analyze --spec \"" + (std::filesystem::path(RADONLIKE_SPEC_DIR) / spec).string() +
                              "\" --samples 500 --seed 42 --out \"" + file.string() + "\"";
      const int rc = std::system(cmd.c_str());
      out.require(rc != -1, "launch analyze");
      std::ifstream in(file, std::ios::binary);
      std::stringstream ss;
      ss << in.rdbuf();
      bytes[run] = ss.str();
    }
    const bool same = !bytes[0].empty() && bytes[0] == bytes[1];
    all_equal = all_equal && same;
    out.detail << spec << (same ? " identical (" + std::to_string(bytes[0].size()) + " bytes); " : " DIFFERENT; ");
  }
  out.require(all_equal, "byte-identical reports");
}

struct Criterion {
  const char* title;
  double limit_seconds;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::map<int, Criterion> criteria{
      {1, {"exact-algebra suite", 10, criterion1}},
      {2, {"vertex verification", 30, criterion2}},
      {3, {"trivial-inequality slopes", 300, criterion3}},
      {4, {"van der Corput decay", 600, criterion4}},
      {5, {"partition and summation-by-parts identities", 0, criterion5}},
      {6, {"Bessel symbol", 0, criterion6}},
      {7, {"Knapp necessity", 0, criterion7}},
      {8, {"genericity", 300, criterion8}},
      {9, {"dual principal part", 0, criterion9}},
      {10, {"determinism", 0, criterion10}},
  };
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "all") {
      for (const auto& [id, c] : criteria) ids.push_back(id);
    } else {
      ids.push_back(std::atoi(a.c_str()));
    }
  }
  if (ids.empty())
    for (const auto& [id, c] : criteria) ids.push_back(id);

  bool all = true;
  for (int id : ids) {
    auto it = criteria.find(id);
    if (it == criteria.end()) {
      std::cout << "FAIL criterion " << id << ": unknown criterion\n";
      all = false;
      continue;
    }
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      it->second.run(out);
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail << "[exception: " << e.what() << "]";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (it->second.limit_seconds > 0 && secs > it->second.limit_seconds) {
      out.pass = false;
      out.detail << " [failed: runtime limit " << it->second.limit_seconds << " s]";
    }
    std::cout << (out.pass ? "PASS" : "FAIL") << " criterion " << id << " (" << it->second.title << "): "
              << out.detail.str() << " [" << fmt(secs, 1) << " s]" << std::endl;
    all = all && out.pass;
  }
  return all ? 0 : 1;
}

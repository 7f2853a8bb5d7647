#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "radonlike/polynomial.hpp"
#include "radonlike/rational.hpp"
#include "radonlike/scaling.hpp"

namespace radonlike {

/// One averaging operator: weights, codimension weights beta'', the defining
/// polynomial tuple S (base layout x', x'', y') and the cutoff radius.
struct OperatorSpec {
  Weights weights;
  MultiIndex beta_dprime;
  std::vector<Polynomial> S;
  double psi_radius = 0.25;

  std::size_t n_prime() const noexcept { return weights.n_prime(); }
  std::size_t n_dprime() const noexcept { return weights.n_dprime(); }
  VariableLayout layout() const { return {n_prime(), n_dprime(), false}; }

  /// Structural checks only (lengths, positivity, layouts); throws invalid-argument.
  void validate() const;
};

/// Principal parts S^P_l (the quasidegree beta''_l part of S_l).
std::vector<Polynomial> check_homogeneity(const OperatorSpec& spec);

struct WeightSums {
  long alpha_prime;  // |alpha'|
  long beta_prime;   // |beta'|
  long beta_dprime;  // |beta''|

  long alpha_tilde() const noexcept { return alpha_prime + beta_dprime; }
  long beta() const noexcept { return beta_prime + beta_dprime; }
};

WeightSums weight_sums(const Weights& w, const MultiIndex& beta_dprime);

/// r/n'' > (|alpha'|+|beta'|)/|beta''|, decided exactly.
bool ratio_hypothesis(const WeightSums& sums, long n_dprime, long rank);

struct PQPoint {
  Rational inv_p;
  Rational inv_q;

  friend bool operator==(const PQPoint&, const PQPoint&) = default;
};

struct RieszRegion {
  WeightSums sums;
  long n_dprime;
  long rank;
  Rational delta;
  Rational delta_prime;
  bool hypothesis_holds;
  /// Present only when the hypothesis holds.
  std::optional<PQPoint> v1;
  std::optional<PQPoint> v2;
};

RieszRegion riesz_region(const WeightSums& sums, long n_dprime, long rank);

/// |beta| invP - |alpha~| invQ - |beta'|; condition (1) holds iff <= 0.
Rational condition1_slack(const RieszRegion& region, const PQPoint& pt);
/// |invP + invQ - 1| - (1 - (2n''+r)/r (invP - invQ)); condition (2) holds iff <= 0.
Rational condition2_slack(const RieszRegion& region, const PQPoint& pt);

enum class PQClass { Strong, RestrictedWeak, Outside };

std::string to_string(PQClass c);

PQClass classify_pq(const RieszRegion& region, const Rational& inv_p, const Rational& inv_q);

/// Closure of the boundedness region in the unit square, counterclockwise,
/// as exact vertices.
std::vector<PQPoint> region_polygon(const RieszRegion& region);

enum class SobolevConstraint { Condition3, Condition4 };

std::string to_string(SobolevConstraint c);

struct SobolevBound {
  Rational p;
  Rational s_supremum;
  bool attained;
  SobolevConstraint binding;
  bool hypothesis_holds;
};

SobolevBound sobolev_smoothing(const WeightSums& sums, const MultiIndex& beta_dprime, long rank,
                               const Rational& p);

/// Closed real interval [lo, hi] bracketing a rounded value.
struct Interval {
  double lo;
  double value;
  double hi;
};

struct GenericityReport {
  std::size_t n_prime;
  long k1;
  std::set<long> lambda_set;
  long k2;

  /// n' - sqrt((1 - 1/K2) n'^2 + 2(n'+n'')), with a +-1 ulp bracket.
  Interval threshold(long n_dprime) const;
  /// Exact test of r < threshold(n'').
  bool rank_below_threshold(long rank, long n_dprime) const;
  bool admissible(const MultiIndex& beta_dprime) const;
  Rational density_lower_bound(long n_dprime) const;
};

GenericityReport genericity_report(const Weights& w);

/// Boundary |beta| invP - |alpha~| invQ = knapp_exponent - |alpha~| implied by a
/// Knapp family whose pairing scales like 2^{t * knapp_exponent}.
struct NecessaryLine {
  Rational inv_p_coeff;
  Rational inv_q_coeff;
  Rational rhs;
};

NecessaryLine knapp_necessary_line(const WeightSums& sums, const Rational& knapp_exponent);

/// The exponent |alpha'| + |beta'| + |beta''| predicted for the reference boxes.
inline long knapp_exponent(const WeightSums& sums) {
  return sums.alpha_prime + sums.beta_prime + sums.beta_dprime;
}

}  // namespace radonlike

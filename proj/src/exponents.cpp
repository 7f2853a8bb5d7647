#include "radonlike/exponents.hpp"

#include <cmath>
#include <numeric>

namespace radonlike {

void OperatorSpec::validate() const {
  const std::size_t np = n_prime();
  const std::size_t nd = n_dprime();
  require(np >= 1 && nd >= 1, ErrorKind::InvalidArgument, "n' and n'' must be positive");
  require(beta_dprime.size() == nd, ErrorKind::InvalidArgument, "beta'' must have length n''");
  require(beta_dprime.all_positive(), ErrorKind::InvalidArgument,
          "beta'' entries must be positive");
  require(S.size() == nd, ErrorKind::InvalidArgument, "S must have n'' components");
  for (const auto& s : S)
    require(s.layout() == layout(), ErrorKind::InvalidArgument,
            "S component has a layout different from (x', x'', y')");
  require(std::isfinite(psi_radius) && psi_radius > 0.0, ErrorKind::InvalidArgument,
          "psi_radius must be positive and finite");
}

std::vector<Polynomial> check_homogeneity(const OperatorSpec& spec) {
  spec.validate();
  const auto& ad = spec.weights.alpha_dprime();
  for (std::size_t i = 0; i < spec.n_dprime(); ++i) {
    require(spec.beta_dprime[i] > ad[i], ErrorKind::WeightOrderViolation,
            "beta''_" + std::to_string(i + 1) + " = " + std::to_string(spec.beta_dprime[i]) +
                " must exceed alpha''_" + std::to_string(i + 1) + " = " +
                std::to_string(ad[i]));
  }
  std::vector<Polynomial> parts;
  bool any_nonzero = false;
  for (std::size_t l = 0; l < spec.n_dprime(); ++l) {
    const long target = spec.beta_dprime[l];
    auto buckets = quasidegree_decompose(spec.S[l], spec.weights);
    if (!buckets.empty() && buckets.begin()->first < target) {
      fail(ErrorKind::HomogeneityViolation,
           "S_" + std::to_string(l + 1) + " has a term of quasidegree " +
               std::to_string(buckets.begin()->first) + " below beta''_" + std::to_string(l + 1) +
               " = " + std::to_string(target));
    }
    auto it = buckets.find(target);
    parts.push_back(it == buckets.end() ? Polynomial(spec.layout()) : it->second);
    any_nonzero = any_nonzero || !parts.back().is_zero();
  }
  require(any_nonzero, ErrorKind::VanishingPrincipalPart,
          "every principal part vanishes identically");
  return parts;
}

WeightSums weight_sums(const Weights& w, const MultiIndex& beta_dprime) {
  return {w.alpha_prime().order(), w.beta_prime().order(), beta_dprime.order()};
}

bool ratio_hypothesis(const WeightSums& sums, long n_dprime, long rank) {
  // r/n'' > (a+b)/c  <=>  r c > (a+b) n''  (all positive)
  return rank * sums.beta_dprime > (sums.alpha_prime + sums.beta_prime) * n_dprime;
}

RieszRegion riesz_region(const WeightSums& sums, long n_dprime, long rank) {
  require(rank >= 1, ErrorKind::InvalidArgument, "riesz_region needs r >= 1");
  require(n_dprime >= 1, ErrorKind::InvalidArgument, "riesz_region needs n'' >= 1");
  require(sums.alpha_prime > 0 && sums.beta_prime > 0 && sums.beta_dprime > 0,
          ErrorKind::InvalidArgument, "weight sums must be positive");
  RieszRegion region{sums, n_dprime, rank, 0, 0, ratio_hypothesis(sums, n_dprime, rank), {}, {}};
  const long a = sums.alpha_prime;
  const long b = sums.beta_prime;
  region.delta = Rational(sums.alpha_tilde() * rank + (a - b) * n_dprime);
  region.delta_prime = Rational(sums.beta() * rank + (b - a) * n_dprime);
  if (!region.hypothesis_holds) return region;
  require(region.delta > 0 && region.delta_prime > 0, ErrorKind::DegenerateDenominator,
          "vertex denominators must be positive");
  const Rational nd(n_dprime);
  const Rational r(rank);
  region.v1 = PQPoint{1 - a * nd / region.delta, 1 - a * (nd + r) / region.delta};
  region.v2 = PQPoint{b * (nd + r) / region.delta_prime, b * nd / region.delta_prime};
  for (const auto& v : {*region.v1, *region.v2}) {
    require(condition1_slack(region, v) == 0 && condition2_slack(region, v) == 0,
            ErrorKind::DegenerateDenominator, "vertex fails the boundary identities");
  }
  return region;
}

Rational condition1_slack(const RieszRegion& region, const PQPoint& pt) {
  const auto& s = region.sums;
  return s.beta() * pt.inv_p - s.alpha_tilde() * pt.inv_q - s.beta_prime;
}

Rational condition2_slack(const RieszRegion& region, const PQPoint& pt) {
  Rational m(2 * region.n_dprime + region.rank, region.rank);
  m.canonicalize();
  return abs(Rational(pt.inv_p + pt.inv_q - 1)) - (1 - m * (pt.inv_p - pt.inv_q));
}

std::string to_string(PQClass c) {
  switch (c) {
    case PQClass::Strong: return "strong";
    case PQClass::RestrictedWeak: return "restricted-weak";
    case PQClass::Outside: return "outside";
  }
  return "outside";
}

PQClass classify_pq(const RieszRegion& region, const Rational& inv_p, const Rational& inv_q) {
  require(inv_p >= 0 && inv_p <= 1 && inv_q >= 0 && inv_q <= 1, ErrorKind::InvalidArgument,
          "classify_pq expects 1/p and 1/q in [0, 1]");
  const PQPoint pt{inv_p, inv_q};
  const int s1 = sgn(condition1_slack(region, pt));
  const int s2 = sgn(condition2_slack(region, pt));
  if (s1 > 0 || s2 > 0) return PQClass::Outside;
  if (!region.hypothesis_holds) return s1 < 0 ? PQClass::Strong : PQClass::Outside;
  if (s1 == 0 && s2 == 0) return PQClass::RestrictedWeak;
  return PQClass::Strong;
}

namespace {

struct HalfPlane {
  // a x + b y <= c
  Rational a, b, c;
};

std::vector<PQPoint> clip(const std::vector<PQPoint>& poly, const HalfPlane& h) {
  std::vector<PQPoint> out;
  auto value = [&](const PQPoint& p) { return Rational(h.a * p.inv_p + h.b * p.inv_q - h.c); };
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const PQPoint& cur = poly[i];
    const PQPoint& next = poly[(i + 1) % poly.size()];
    const Rational vc = value(cur);
    const Rational vn = value(next);
    if (vc <= 0) out.push_back(cur);
    if ((vc < 0 && vn > 0) || (vc > 0 && vn < 0)) {
      const Rational t = vc / (vc - vn);
      out.push_back({cur.inv_p + t * (next.inv_p - cur.inv_p),
                     cur.inv_q + t * (next.inv_q - cur.inv_q)});
    }
  }
  std::vector<PQPoint> dedup;
  for (const auto& p : out)
    if (dedup.empty() || !(dedup.back() == p)) dedup.push_back(p);
  while (dedup.size() > 1 && dedup.front() == dedup.back()) dedup.pop_back();
  return dedup;
}

}  // namespace

std::vector<PQPoint> region_polygon(const RieszRegion& region) {
  std::vector<PQPoint> poly{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  const auto& s = region.sums;
  Rational m(2 * region.n_dprime + region.rank, region.rank);
  m.canonicalize();
  const std::vector<HalfPlane> planes{
      {Rational(s.beta()), Rational(-s.alpha_tilde()), Rational(s.beta_prime)},
      // x + y - 1 <= 1 - m (x - y)
      {1 + m, 1 - m, 2},
      // 1 - x - y <= 1 - m (x - y)
      {m - 1, -1 - m, 0},
  };
  for (const auto& h : planes) {
    poly = clip(poly, h);
    if (poly.empty()) break;
  }
  return poly;
}

std::string to_string(SobolevConstraint c) {
  return c == SobolevConstraint::Condition3 ? "condition3" : "condition4";
}

SobolevBound sobolev_smoothing(const WeightSums& sums, const MultiIndex& beta_dprime, long rank,
                               const Rational& p) {
  require(p > 1, ErrorKind::InvalidArgument, "sobolev_smoothing needs 1 < p < infinity");
  require(rank >= 1, ErrorKind::InvalidArgument, "sobolev_smoothing needs r >= 1");
  require(beta_dprime.size() >= 1 && beta_dprime.all_positive(), ErrorKind::InvalidArgument,
          "beta'' entries must be positive");
  const Rational inv_p = 1 / p;
  const Rational half(1, 2);
  const Rational c4 = rank * (half - abs(Rational(half - inv_p)));
  const Rational c3 =
      (sums.alpha_prime * inv_p + sums.beta_prime * (1 - inv_p)) / beta_dprime.max();
  SobolevBound out{p, 0, false, SobolevConstraint::Condition4,
                   ratio_hypothesis(sums, static_cast<long>(beta_dprime.size()), rank)};
  if (c3 < c4) {
    out.s_supremum = c3;
    out.attained = true;
    out.binding = SobolevConstraint::Condition3;
  } else {
    out.s_supremum = c4;
    out.attained = false;
    out.binding = SobolevConstraint::Condition4;
  }
  return out;
}

namespace {

Rational threshold_radicand(std::size_t n_prime, long k2, long n_dprime) {
  const Rational np(static_cast<long>(n_prime));
  return (1 - Rational(1, k2)) * np * np + 2 * (np + n_dprime);
}

}  // namespace

Interval GenericityReport::threshold(long n_dprime) const {
  require(n_dprime >= 1, ErrorKind::InvalidArgument, "threshold needs n'' >= 1");
  const double x = threshold_radicand(n_prime, k2, n_dprime).get_d();
  const double value = static_cast<double>(n_prime) - std::sqrt(x);
  return {std::nextafter(value, -INFINITY), value, std::nextafter(value, INFINITY)};
}

bool GenericityReport::rank_below_threshold(long rank, long n_dprime) const {
  // r < n' - sqrt(X)  <=>  n' - r > 0 and X < (n' - r)^2
  const long gap = static_cast<long>(n_prime) - rank;
  if (gap <= 0) return false;
  return threshold_radicand(n_prime, k2, n_dprime) < Rational(gap * gap);
}

bool GenericityReport::admissible(const MultiIndex& beta_dprime) const {
  for (long b : beta_dprime.entries()) {
    const long residue = ((b % k1) + k1) % k1;
    if (!lambda_set.contains(residue)) return false;
  }
  return true;
}

Rational GenericityReport::density_lower_bound(long n_dprime) const {
  return 1 / power(Rational(k1), static_cast<unsigned long>(n_dprime));
}

GenericityReport genericity_report(const Weights& w) {
  long k1 = 1;
  for (const auto* m : {&w.alpha_prime(), &w.alpha_dprime(), &w.beta_prime()}) {
    for (long v : m->entries()) {
      require(v > 0, ErrorKind::InvalidArgument, "weights must be positive");
      k1 = std::lcm(k1, v);
    }
  }
  GenericityReport report{w.n_prime(), k1, {}, 0};
  for (long a : w.alpha_prime().entries())
    for (long b : w.beta_prime().entries()) report.lambda_set.insert((a + b) % k1);
  report.k2 = static_cast<long>(report.lambda_set.size());
  return report;
}

NecessaryLine knapp_necessary_line(const WeightSums& sums, const Rational& knapp_exponent) {
  return {Rational(sums.beta()), Rational(sums.alpha_tilde()),
          knapp_exponent - sums.alpha_tilde()};
}

}  // namespace radonlike

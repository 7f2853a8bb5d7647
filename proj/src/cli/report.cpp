#include "radonlike/cli/report.hpp"

#include <iomanip>
#include <sstream>

namespace radonlike::cli {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument:
    case ErrorKind::Schema:
    case ErrorKind::NoPrincipalPart:
    case ErrorKind::HomogeneityViolation:
    case ErrorKind::VanishingPrincipalPart:
    case ErrorKind::WeightOrderViolation:
      return kExitSpec;
    default:
      return kExitNumerical;
  }
}

Json error_json(ErrorKind kind, const std::string& message) {
  Json e;
  e["error"] = std::string(to_string(kind));
  e["message"] = message;
  e["exitCode"] = exit_code_for(kind);
  return e;
}

std::vector<Rational> parse_p_grid(const std::string& text) {
  const auto first = text.find(':');
  const auto second = first == std::string::npos ? first : text.find(':', first + 1);
  require(second != std::string::npos, ErrorKind::InvalidArgument, "p-grid must be a:b:step");
  const Rational a = parse_rational(text.substr(0, first));
  const Rational b = parse_rational(text.substr(first + 1, second - first - 1));
  const Rational step = parse_rational(text.substr(second + 1));
  require(step > 0 && a <= b, ErrorKind::InvalidArgument, "p-grid needs a <= b and step > 0");
  require((b - a) / step <= 10000, ErrorKind::InvalidArgument, "p-grid has too many points");
  std::vector<Rational> out;
  for (Rational p = a; p <= b; p += step) out.push_back(p);
  return out;
}

std::vector<Rational> default_p_grid() { return parse_p_grid("3/2:4:1/2"); }

RankSampleReport sample_min_rank(const OperatorSpec& spec, int samples, std::uint64_t seed,
                                 long denominator) {
  const auto parts = check_homogeneity(spec);
  const HessianMatrix h = mixed_hessian(parts, spec.weights, spec.beta_dprime);
  SamplingPlan plan;
  plan.samples = samples;
  plan.seed = seed;
  plan.denominator = denominator;
  return min_rank_sample(h, plan);
}

Json hypothesis_json(const WeightSums& sums, long n_dprime, long rank) {
  Json h;
  h["rank"] = rank;
  h["ratio"] = to_string(Rational(rank, n_dprime));
  Rational threshold(sums.alpha_prime + sums.beta_prime, sums.beta_dprime);
  threshold.canonicalize();
  h["threshold"] = to_string(threshold);
  h["holds"] = rank >= 1 && ratio_hypothesis(sums, n_dprime, rank);
  return h;
}

namespace {

Json point_json(const PQPoint& p) {
  Json j;
  j["invP"] = to_string(p.inv_p);
  j["invQ"] = to_string(p.inv_q);
  return j;
}

Json sums_json(const WeightSums& s) {
  Json j;
  j["alphaPrime"] = s.alpha_prime;
  j["betaPrime"] = s.beta_prime;
  j["betaDprime"] = s.beta_dprime;
  j["alphaTilde"] = s.alpha_tilde();
  j["beta"] = s.beta();
  return j;
}

Json not_applicable(const std::string& why) {
  Json j;
  j["applicable"] = false;
  j["reason"] = why;
  return j;
}

}  // namespace

Json region_json(const RieszRegion& region) {
  Json j;
  j["applicable"] = true;
  j["weightSums"] = sums_json(region.sums);
  j["nDprime"] = region.n_dprime;
  j["rank"] = region.rank;
  j["hypothesisHolds"] = region.hypothesis_holds;
  j["delta"] = to_string(region.delta);
  j["deltaPrime"] = to_string(region.delta_prime);
  j["v1"] = region.v1 ? point_json(*region.v1) : Json();
  j["v2"] = region.v2 ? point_json(*region.v2) : Json();
  Json line;
  line["invPCoeff"] = region.sums.beta();
  line["invQCoeff"] = region.sums.alpha_tilde();
  line["rhs"] = region.sums.beta_prime;
  j["condition1Boundary"] = line;
  Json poly = Json::array();
  for (const auto& p : region_polygon(region)) poly.push_back(point_json(p));
  j["polygon"] = std::move(poly);
  return j;
}

Json sobolev_json(const OperatorSpec& spec, long rank, const std::vector<Rational>& p_grid) {
  if (rank < 1) return not_applicable("Hessian rank 0");
  const auto sums = weight_sums(spec.weights, spec.beta_dprime);
  Json rows = Json::array();
  for (const auto& p : p_grid) {
    const auto b = sobolev_smoothing(sums, spec.beta_dprime, rank, p);
    Json row;
    row["p"] = to_string(b.p);
    row["sSupremum"] = to_string(b.s_supremum);
    row["attained"] = b.attained;
    row["binding"] = to_string(b.binding);
    rows.push_back(std::move(row));
  }
  Json j;
  j["applicable"] = true;
  j["rank"] = rank;
  j["hypothesisHolds"] = ratio_hypothesis(sums, static_cast<long>(spec.n_dprime()), rank);
  j["table"] = std::move(rows);
  return j;
}

Json genericity_json(const Weights& weights, long n_lo, long n_hi,
                     const std::optional<MultiIndex>& beta_dprime, std::optional<long> rank) {
  require(1 <= n_lo && n_lo <= n_hi, ErrorKind::InvalidArgument, "n-range needs 1 <= a <= b");
  const auto g = genericity_report(weights);
  Json j;
  j["nPrime"] = g.n_prime;
  j["k1"] = g.k1;
  j["lambdaSet"] = std::vector<long>(g.lambda_set.begin(), g.lambda_set.end());
  j["k2"] = g.k2;
  if (beta_dprime) j["betaDprimeAdmissible"] = g.admissible(*beta_dprime);
  Json rows = Json::array();
  for (long n = n_lo; n <= n_hi; ++n) {
    const Interval t = g.threshold(n);
    Json row;
    row["nDprime"] = n;
    row["threshold"] = {{"lo", t.lo}, {"value", t.value}, {"hi", t.hi}, {"tolerance", "1ulp"}};
    row["densityLowerBound"] = to_string(g.density_lower_bound(n));
    if (rank) row["rankBelowThreshold"] = g.rank_below_threshold(*rank, n);
    rows.push_back(std::move(row));
  }
  j["thresholds"] = std::move(rows);
  return j;
}

AnalyzeResult analyze(const OperatorSpec& spec, const AnalyzeOptions& options) {
  AnalyzeResult out;
  Json& r = out.report;
  r["spec"] = spec_to_json(spec);

  const auto parts = check_homogeneity(spec);
  Json hom;
  hom["status"] = "ok";
  Json pp = Json::array();
  for (const auto& p : parts) {
    Json e;
    e["text"] = to_string(p);
    e["terms"] = polynomial_to_json(p);
    pp.push_back(std::move(e));
  }
  hom["principalParts"] = std::move(pp);
  r["homogeneity"] = std::move(hom);

  const HessianMatrix h = mixed_hessian(parts, spec.weights, spec.beta_dprime);
  SamplingPlan plan;
  plan.samples = options.samples;
  plan.seed = options.seed;
  plan.denominator = options.denominator;
  const RankSampleReport rs = min_rank_sample(h, plan);
  const long rank = rs.min_rank;
  Json hess;
  hess["minRank"] = rank;
  hess["kind"] = "sampled-upper-bound";
  Json witness = Json::array();
  for (Eigen::Index i = 0; i < rs.witness.size(); ++i) witness.push_back(to_string(rs.witness[i]));
  hess["witness"] = std::move(witness);
  Json counts = Json::object();
  for (const auto& [k, v] : rs.rank_counts) counts[std::to_string(k)] = v;
  hess["rankCounts"] = std::move(counts);
  hess["provenance"] = {{"samples", rs.samples_tried},
                        {"seed", rs.seed},
                        {"denominator", options.denominator},
                        {"arithmetic", "exact"}};
  r["hessian"] = std::move(hess);

  const auto sums = weight_sums(spec.weights, spec.beta_dprime);
  const long nd = static_cast<long>(spec.n_dprime());
  r["hypothesis"] = hypothesis_json(sums, nd, rank);
  if (rank >= 1) {
    const auto region = riesz_region(sums, nd, rank);
    r["riesz"] = region_json(region);
    if (!region.hypothesis_holds) out.exit_code = kExitHypothesis;
  } else {
    r["riesz"] = not_applicable("Hessian rank 0");
  }
  r["sobolev"] = sobolev_json(spec, rank, options.p_grid.empty() ? default_p_grid() : options.p_grid);
  r["genericity"] = genericity_json(spec.weights, nd, nd, spec.beta_dprime, rank);
  r["status"] = out.exit_code == kExitHypothesis ? "hypothesis-not-satisfied" : "ok";
  return out;
}

namespace {

std::string num(double v) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(2) << v;
  return s.str();
}

}  // namespace

std::string region_svg(const RieszRegion& region) {
  const double size = 400.0, margin = 50.0;
  auto sx = [&](const Rational& x) { return num(margin + x.get_d() * size); };
  auto sy = [&](const Rational& y) { return num(margin + (1.0 - y.get_d()) * size); };
  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"500\" height=\"500\" viewBox=\"0 0 500 500\">\n";
  o << "<rect x=\"50\" y=\"50\" width=\"400\" height=\"400\" fill=\"none\" stroke=\"black\"/>\n";
  o << "<line x1=\"50\" y1=\"450\" x2=\"450\" y2=\"50\" stroke=\"gray\" stroke-dasharray=\"4 4\"/>\n";
  o << "<polygon fill=\"#9ecae1\" fill-opacity=\"0.6\" stroke=\"#08519c\" points=\"";
  bool first = true;
  for (const auto& p : region_polygon(region)) {
    o << (first ? "" : " ") << sx(p.inv_p) << ',' << sy(p.inv_q);
    first = false;
  }
  o << "\"/>\n";
  auto mark = [&](const std::optional<PQPoint>& v, const char* name) {
    if (!v) return;
    o << "<circle cx=\"" << sx(v->inv_p) << "\" cy=\"" << sy(v->inv_q) << "\" r=\"4\" fill=\"#cb181d\"/>\n";
    o << "<text x=\"" << sx(v->inv_p) << "\" y=\"" << sy(v->inv_q) << "\" dx=\"6\" dy=\"-6\" font-size=\"13\">"
      << name << " (" << to_string(v->inv_p) << ", " << to_string(v->inv_q) << ")</text>\n";
  };
  mark(region.v1, "V1");
  mark(region.v2, "V2");
  o << "<text x=\"250\" y=\"485\" text-anchor=\"middle\" font-size=\"14\">1/p</text>\n";
  o << "<text x=\"20\" y=\"250\" text-anchor=\"middle\" font-size=\"14\">1/q</text>\n";
  o << "<text x=\"50\" y=\"468\" text-anchor=\"middle\" font-size=\"11\">0</text>\n";
  o << "<text x=\"450\" y=\"468\" text-anchor=\"middle\" font-size=\"11\">1</text>\n";
  o << "<text x=\"38\" y=\"54\" text-anchor=\"middle\" font-size=\"11\">1</text>\n";
  o << "</svg>\n";
  return o.str();
}

}  // namespace radonlike::cli

#include "radonlike/cli/app.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "radonlike/cli/report.hpp"
#include "radonlike/numerics/duality.hpp"
#include "radonlike/numerics/experiments.hpp"
#include "radonlike/numerics/knapp.hpp"

namespace radonlike::cli {

namespace {

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  require(static_cast<bool>(f), ErrorKind::InvalidArgument, "cannot write " + path);
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::pair<long, long> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  require(colon != std::string::npos, ErrorKind::InvalidArgument, "range must be a:b");
  try {
    return {std::stol(text.substr(0, colon)), std::stol(text.substr(colon + 1))};
  } catch (const std::logic_error&) {
    fail(ErrorKind::InvalidArgument, "range must be a:b with integers");
  }
}

std::vector<NormPair> parse_norms(const std::string& text) {
  std::vector<NormPair> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_norm_code(item));
  require(!out.empty(), ErrorKind::InvalidArgument, "no norm pairs given");
  return out;
}

Json fit_json(const SlopeSummary& s) {
  Json j;
  j["series"] = s.series;
  j["normPair"] = norm_code(s.pair);
  j["slope"] = s.fit.slope;
  j["intercept"] = s.fit.intercept;
  j["maxResidual"] = s.fit.max_residual;
  Json samples = Json::array();
  for (const auto& [i, v] : s.fit.samples) samples.push_back({i, v});
  j["samples"] = std::move(samples);
  return j;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exponent diagrams and numerical checks for Radon-like averaging operators", "radonlike"};
  app.require_subcommand(1);

  std::string spec_path, out_path, svg_path, p_grid, n_range, norms = "11,oooo,1oo";
  std::string alpha_prime, alpha_dprime, beta_prime;
  int samples = 1000, tuples = 100, points = 1000, dual_samples = 200;
  std::uint64_t seed = 0;
  std::optional<long> rank;
  long jmin = 1, jmax = 6, kmax = -1;
  std::size_t grid = 256;
  double tmin = -8, tmax = -4, epsilon = 1.0, half_width = kDefaultHalfWidth;

  auto* analyze_cmd = app.add_subcommand("analyze", "full exact report");
  analyze_cmd->add_option("--spec", spec_path)->required();
  analyze_cmd->add_option("--samples", samples, "Hessian sample points")->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--seed", seed);
  analyze_cmd->add_option("--p-grid", p_grid, "a:b:step");
  analyze_cmd->add_option("--out", out_path, "report file (default: stdout)");

  auto* region_cmd = app.add_subcommand("region", "Riesz polygon and SVG diagram");
  region_cmd->add_option("--spec", spec_path)->required();
  region_cmd->add_option("--rank", rank, "Hessian rank (default: sampled minimum)");
  region_cmd->add_option("--samples", samples)->check(CLI::PositiveNumber);
  region_cmd->add_option("--seed", seed);
  region_cmd->add_option("--svg", svg_path, "SVG output file");

  auto* sobolev_cmd = app.add_subcommand("sobolev", "Sobolev smoothing table");
  sobolev_cmd->add_option("--spec", spec_path)->required();
  sobolev_cmd->add_option("--rank", rank)->required();
  sobolev_cmd->add_option("--p-grid", p_grid, "a:b:step")->required();

  auto* generic_cmd = app.add_subcommand("generic", "genericity constants and thresholds");
  generic_cmd->add_option("--alpha-prime", alpha_prime)->required();
  generic_cmd->add_option("--alpha-dprime", alpha_dprime)->required();
  generic_cmd->add_option("--beta-prime", beta_prime)->required();
  generic_cmd->add_option("--n-range", n_range, "range a:b of n'' values");

  auto* sample_cmd = app.add_subcommand("sample-generic", "Monte-Carlo Hessian ranks of random tuples");
  sample_cmd->add_option("--spec", spec_path)->required();
  sample_cmd->add_option("--tuples", tuples)->check(CLI::PositiveNumber);
  sample_cmd->add_option("--points", points)->check(CLI::PositiveNumber);
  sample_cmd->add_option("--seed", seed);

  auto* verify_cmd = app.add_subcommand("verify", "operator-norm decay tables");
  verify_cmd->add_option("--spec", spec_path)->required();
  verify_cmd->add_option("--grid", grid);
  verify_cmd->add_option("--jmin", jmin);
  verify_cmd->add_option("--jmax", jmax);
  verify_cmd->add_option("--kmax", kmax);
  verify_cmd->add_option("--norms", norms, "comma list of 11, oooo, 22, 1oo");
  verify_cmd->add_option("--half-width", half_width);
  verify_cmd->add_option("--seed", seed, "power iteration seed");
  verify_cmd->add_option("--out", out_path, "CSV file (default: stdout)");

  auto* knapp_cmd = app.add_subcommand("knapp", "Knapp box integrals and exponent estimate");
  knapp_cmd->add_option("--spec", spec_path)->required();
  knapp_cmd->add_option("--tmin", tmin);
  knapp_cmd->add_option("--tmax", tmax);
  knapp_cmd->add_option("--epsilon", epsilon);

  auto* dual_cmd = app.add_subcommand("dual-check", "principal part of the dual family");
  dual_cmd->add_option("--spec", spec_path)->required();
  dual_cmd->add_option("--jmin", jmin);
  dual_cmd->add_option("--jmax", jmax);
  dual_cmd->add_option("--samples", dual_samples)->check(CLI::PositiveNumber);
  std::uint64_t dual_seed = DualCheckOptions{}.seed;
  dual_cmd->add_option("--seed", dual_seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    Json j;
    j["error"] = "usage";
    j["message"] = e.what();
    j["exitCode"] = kExitSpec;
    err << j.dump() << "\n";
    return kExitSpec;
  }

  try {
    if (*analyze_cmd) {
      AnalyzeOptions opts;
      opts.samples = samples;
      opts.seed = seed;
      if (!p_grid.empty()) opts.p_grid = parse_p_grid(p_grid);
      const auto result = analyze(load_spec(spec_path), opts);
      if (out_path.empty()) out << dump(result.report);
      else write_file(out_path, dump(result.report));
      return result.exit_code;
    }

    if (*region_cmd) {
      const auto spec = load_spec(spec_path);
      check_homogeneity(spec);
      const long r = rank ? *rank : sample_min_rank(spec, samples, seed).min_rank;
      const auto sums = weight_sums(spec.weights, spec.beta_dprime);
      const long nd = static_cast<long>(spec.n_dprime());
      Json j;
      j["hypothesis"] = hypothesis_json(sums, nd, r);
      j["rankSource"] = rank ? "flag" : "sampled";
      if (r < 1) {
        j["riesz"] = {{"applicable", false}, {"reason", "Hessian rank 0"}};
        out << dump(j);
        return kExitOk;
      }
      const auto region = riesz_region(sums, nd, r);
      j["riesz"] = region_json(region);
      if (!svg_path.empty()) write_file(svg_path, region_svg(region));
      out << dump(j);
      return region.hypothesis_holds ? kExitOk : kExitHypothesis;
    }

    if (*sobolev_cmd) {
      const auto spec = load_spec(spec_path);
      check_homogeneity(spec);
      require(*rank >= 1, ErrorKind::InvalidArgument, "sobolev needs --rank >= 1");
      const Json j = sobolev_json(spec, *rank, parse_p_grid(p_grid));
      out << dump(j);
      return j["hypothesisHolds"].get<bool>() ? kExitOk : kExitHypothesis;
    }

    if (*generic_cmd) {
      const Weights w(parse_index_list(alpha_prime), parse_index_list(alpha_dprime),
                      parse_index_list(beta_prime));
      for (const auto* m : {&w.alpha_prime(), &w.alpha_dprime(), &w.beta_prime()})
        require(m->all_positive(), ErrorKind::InvalidArgument, "weights must be positive");
      require(w.n_prime() == w.beta_prime().size(), ErrorKind::InvalidArgument,
              "alpha' and beta' must have equal length");
      const long nd = static_cast<long>(w.n_dprime());
      const auto [lo, hi] = n_range.empty() ? std::pair{nd, nd} : parse_range(n_range);
      out << dump(genericity_json(w, lo, hi));
      return kExitOk;
    }

    if (*sample_cmd) {
      const auto spec = load_spec(spec_path);
      check_homogeneity(spec);
      GenericTrialPlan plan;
      plan.tuples = tuples;
      plan.points_per_tuple = points;
      plan.seed = seed;
      const auto report = generic_rank_trial(spec.weights, spec.beta_dprime, plan);
      const auto g = genericity_report(spec.weights);
      Json j;
      j["tuples"] = tuples;
      j["pointsPerTuple"] = points;
      j["evaluations"] = report.evaluations;
      Json tuple_hist = Json::object(), eval_hist = Json::object(), frac = Json::object();
      for (const auto& [r, c] : report.min_rank_histogram) tuple_hist[std::to_string(r)] = c;
      for (const auto& [r, c] : report.evaluation_histogram) {
        eval_hist[std::to_string(r)] = c;
        frac[std::to_string(r)] = report.fraction_at_least(r);
      }
      j["tupleMinRankHistogram"] = std::move(tuple_hist);
      j["evaluationRankHistogram"] = std::move(eval_hist);
      j["fractionAtLeast"] = std::move(frac);
      const Interval t = g.threshold(static_cast<long>(spec.n_dprime()));
      j["threshold"] = {{"lo", t.lo}, {"value", t.value}, {"hi", t.hi}};
      j["betaDprimeAdmissible"] = g.admissible(spec.beta_dprime);
      j["provenance"] = {{"seed", report.seed},
                         {"coefficientBound", plan.coefficient_bound},
                         {"denominator", plan.denominator},
                         {"arithmetic", "exact"}};
      out << dump(j);
      return kExitOk;
    }

    if (*verify_cmd) {
      const auto spec = load_spec(spec_path);
      DecayPlan plan;
      plan.grid = grid;
      plan.jmin = jmin;
      plan.jmax = jmax;
      plan.kmax = kmax;
      plan.norms = parse_norms(norms);
      plan.half_width = half_width;
      plan.power.seed = seed;
      const auto table = run_decay_experiment(spec, plan);
      std::ostringstream csv;
      write_decay_csv(csv, table.rows);
      Json j;
      j["grid"] = grid;
      j["jmin"] = jmin;
      j["jmax"] = jmax;
      j["kmax"] = kmax;
      j["allConverged"] = table.all_converged;
      Json fits = Json::array();
      for (const auto& f : table.fits) fits.push_back(fit_json(f));
      j["fits"] = std::move(fits);
      j["provenance"] = {{"powerTolerance", plan.power.tolerance},
                         {"powerMaxIterations", plan.power.max_iterations},
                         {"seed", plan.power.seed}};
      if (out_path.empty()) {
        out << csv.str();
      } else {
        write_file(out_path, csv.str());
        out << dump(j);
      }
      if (!table.all_converged) {
        err << error_json(ErrorKind::NonConvergence, "power iteration did not converge").dump() << "\n";
        return kExitNumerical;
      }
      return kExitOk;
    }

    if (*knapp_cmd) {
      const auto spec = load_spec(spec_path);
      check_homogeneity(spec);
      const KnappOptions opts;
      const auto scan = knapp_scan(spec, tmin, tmax, epsilon, opts);
      const auto sums = weight_sums(spec.weights, spec.beta_dprime);
      Json j;
      Json values = Json::array(), exps = Json::array();
      for (const auto& [t, v] : scan.values) values.push_back({{"t", t}, {"integral", v}});
      double mean = 0.0;
      for (const auto& [t, e] : scan.exponents) {
        exps.push_back({{"t", t}, {"exponent", e}});
        mean += e;
      }
      j["values"] = std::move(values);
      j["exponents"] = std::move(exps);
      j["predictedExponent"] = knapp_exponent(sums);
      if (!scan.exponents.empty()) {
        mean /= static_cast<double>(scan.exponents.size());
        j["meanExponent"] = mean;
        const Rational estimate(std::lround(mean));
        const auto line = knapp_necessary_line(sums, estimate);
        j["necessaryLine"] = {{"exponent", to_string(estimate)},
                              {"invPCoeff", to_string(line.inv_p_coeff)},
                              {"invQCoeff", to_string(line.inv_q_coeff)},
                              {"rhs", to_string(line.rhs)}};
      }
      j["provenance"] = {{"epsilon", epsilon},
                         {"nodesPerAxis", opts.nodes_per_axis},
                         {"maxDepth", opts.max_depth}};
      out << dump(j);
      return kExitOk;
    }

    if (*dual_cmd) {
      const auto spec = load_spec(spec_path);
      check_homogeneity(spec);
      require(0 <= jmin && jmin <= jmax, ErrorKind::InvalidArgument, "need 0 <= jmin <= jmax");
      DualCheckOptions opts;
      opts.seed = dual_seed;
      Json rows = Json::array();
      long failures = 0;
      for (long j = jmin; j <= jmax; ++j) {
        Json row;
        row["j"] = j;
        try {
          row["deviation"] = dual_principal_check(spec, j, dual_samples, opts);
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::SingularMap) throw;
          row["error"] = std::string(to_string(e.kind()));
          ++failures;
        }
        rows.push_back(std::move(row));
      }
      Json j;
      j["rows"] = std::move(rows);
      j["provenance"] = {{"seed", opts.seed},
                         {"samples", dual_samples},
                         {"newtonTolerance", opts.newton_tolerance},
                         {"newtonSteps", opts.newton_steps}};
      out << dump(j);
      if (failures == jmax - jmin + 1) {
        err << error_json(ErrorKind::SingularMap, "Newton inversion failed at every level").dump() << "\n";
        return kExitNumerical;
      }
      return kExitOk;
    }
  } catch (const Error& e) {
    err << error_json(e.kind(), e.what()).dump() << "\n";
    return exit_code_for(e.kind());
  } catch (const nlohmann::json::exception& e) {
    err << error_json(ErrorKind::Schema, e.what()).dump() << "\n";
    return kExitSpec;
  } catch (const std::exception& e) {
    Json j;
    j["error"] = "internal";
    j["message"] = e.what();
    j["exitCode"] = kExitNumerical;
    err << j.dump() << "\n";
    return kExitNumerical;
  }
  return kExitSpec;
}

}  // namespace radonlike::cli

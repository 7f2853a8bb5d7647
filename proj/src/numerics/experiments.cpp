#include "radonlike/numerics/experiments.hpp"

#include <cmath>
#include <iomanip>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>

#include "radonlike/numerics/discretize.hpp"
#include "radonlike/numerics/multipliers.hpp"

namespace radonlike {

namespace {

std::string fmt(double v) {
  std::ostringstream s;
  s << v;
  return s.str();
}

std::string context(const OperatorSpec& spec, NormPair pair, long k) {
  const auto sums = weight_sums(spec.weights, spec.beta_dprime);
  const long nd = static_cast<long>(spec.n_dprime());
  switch (pair) {
    case NormPair::OneOne: return "j-slope=" + fmt(-static_cast<double>(sums.alpha_prime));
    case NormPair::InfInf: return "j-slope=" + fmt(-static_cast<double>(sums.beta_prime));
    case NormPair::OneInf:
      return k < 0 ? "j-slope=" + fmt(static_cast<double>(sums.beta_dprime))
                   : "j-slope=" + fmt(static_cast<double>(sums.beta_dprime)) +
                         ";k-slope=" + fmt(static_cast<double>(nd));
    case NormPair::TwoTwo:
      return k < 0 ? "j-slope=" + fmt(-0.5 * static_cast<double>(sums.alpha_prime + sums.beta_prime))
                   : "k-slope=-r/2";
  }
  return "";
}

}  // namespace

bool shell_resolved(const OperatorSpec& spec, std::size_t grid, long j, long k, double half_width) {
  // Shell k reaches |2^{-j beta''} xi''| = 2^{k+1}; the grid band is pi N / (2 L 2^{-j alpha''}).
  for (std::size_t l = 0; l < spec.n_dprime(); ++l) {
    const double reach = std::ldexp(1.0, static_cast<int>(k + 1 + j * spec.beta_dprime[l]));
    const double band = std::numbers::pi * static_cast<double>(grid) /
                        (2.0 * std::ldexp(half_width, static_cast<int>(-j * spec.weights.alpha_dprime()[l])));
    if (reach > band) return false;
  }
  return true;
}

long largest_feasible_level(const OperatorSpec& spec, std::size_t grid, long kmax, double half_width) {
  long best = -1;
  for (long j = 0; j * spec.beta_dprime.max() < 64; ++j)
    if (shell_resolved(spec, grid, j, kmax, half_width)) best = j;
  return best;
}

DecayTable run_decay_experiment(const OperatorSpec& spec, const DecayPlan& plan) {
  check_homogeneity(spec);
  require(plan.jmin >= 0 && plan.jmin <= plan.jmax, ErrorKind::InvalidArgument,
          "need 0 <= jmin <= jmax");
  require(!plan.norms.empty(), ErrorKind::InvalidArgument, "no norm pairs requested");
  DecayTable table;
  for (long j = plan.jmin; j <= plan.jmax; ++j) {
    const Grid in = level_input_grid(spec, plan.grid, j, plan.half_width);
    const Grid out = level_output_grid(spec, plan.grid, j, plan.half_width);
    const GridOperator tj = discretize_Tj(spec, in, out, j);
    auto record = [&](const GridOperator& op, long k) {
      for (NormPair pair : plan.norms) {
        if (k == kUnprojectedRow && pair == NormPair::OneInf) continue;
        const NormResult r = operator_norm(op, pair, plan.power);
        table.all_converged = table.all_converged && r.converged;
        table.rows.push_back({j, k, pair, r.value, r.converged, context(spec, pair, k)});
      }
    };
    if (plan.unprojected) record(tj, kUnprojectedRow);
    if (plan.low_pass) record(compose(tj, frequency_multiplier(LowPass{j}, spec, in)), kLowPassRow);
    for (long k = 0; k <= plan.kmax; ++k) {
      if (!shell_resolved(spec, plan.grid, j, k, plan.half_width)) break;
      record(compose(tj, frequency_multiplier(Shell{j, k}, spec, in)), k);
    }
  }

  std::map<std::pair<long, NormPair>, std::vector<std::pair<long, double>>> by_j;
  std::map<std::pair<long, NormPair>, std::vector<std::pair<long, double>>> by_k;
  for (const auto& row : table.rows) {
    if (!(row.value > 0.0)) continue;
    if (row.k >= 0) by_k[{row.j, row.pair}].emplace_back(row.k, row.value);
    else by_j[{row.k, row.pair}].emplace_back(row.j, row.value);
  }
  for (const auto& [key, samples] : by_j) {
    const std::string piece = key.first == kLowPassRow ? "TQ" : "T";
    if (samples.size() >= 3)
      table.fits.push_back({"j:" + piece + ":" + norm_code(key.second), key.second, decay_slope(samples)});
  }
  for (const auto& [key, samples] : by_k)
    if (samples.size() >= 3)
      table.fits.push_back({"k:TP:" + norm_code(key.second) + "@j=" + std::to_string(key.first),
                            key.second, decay_slope(samples)});
  return table;
}

void write_decay_csv(std::ostream& out, const std::vector<DecayRow>& rows) {
  out << "j,k,normPair,value,predictedSlopeContext\n";
  for (const auto& row : rows) {
    out << row.j << ',' << row.k << ',' << norm_code(row.pair) << ',' << std::setprecision(17)
        << row.value << ',' << row.context << (row.converged ? "" : ";not-converged") << '\n';
  }
}

}  // namespace radonlike

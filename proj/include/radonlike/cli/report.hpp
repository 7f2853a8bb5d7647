#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "radonlike/cli/specfile.hpp"
#include "radonlike/exponents.hpp"
#include "radonlike/hessian.hpp"

namespace radonlike::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitSpec = 1,
  kExitNumerical = 2,
  kExitHypothesis = 3,
};

int exit_code_for(ErrorKind kind);
Json error_json(ErrorKind kind, const std::string& message);

struct AnalyzeOptions {
  int samples = 1000;
  std::uint64_t seed = 0;
  long denominator = 8;
  std::vector<Rational> p_grid;  // empty: the default grid
};

struct AnalyzeResult {
  Json report;
  int exit_code = kExitOk;
};

AnalyzeResult analyze(const OperatorSpec& spec, const AnalyzeOptions& options);

/// "a:b:step" with rational entries; a <= b, step > 0.
std::vector<Rational> parse_p_grid(const std::string& text);
std::vector<Rational> default_p_grid();

RankSampleReport sample_min_rank(const OperatorSpec& spec, int samples, std::uint64_t seed,
                                 long denominator = 8);

Json hypothesis_json(const WeightSums& sums, long n_dprime, long rank);
Json region_json(const RieszRegion& region);
Json sobolev_json(const OperatorSpec& spec, long rank, const std::vector<Rational>& p_grid);
Json genericity_json(const Weights& weights, long n_lo, long n_hi,
                     const std::optional<MultiIndex>& beta_dprime = std::nullopt,
                     std::optional<long> rank = std::nullopt);

/// (1/p, 1/q) diagram of the region with its vertices, drawn from the exact rationals.
std::string region_svg(const RieszRegion& region);

}  // namespace radonlike::cli

#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "radonlike/numerics/grid_operator.hpp"

namespace radonlike {

enum class NormPair { OneOne, InfInf, TwoTwo, OneInf };

/// Short codes used on the command line and in CSV tables: 11, oooo, 22, 1oo.
std::string norm_code(NormPair pair);
NormPair parse_norm_code(const std::string& code);

struct NormResult {
  double value = 0.0;
  bool converged = true;
  int iterations = 0;
};

struct PowerIterationOptions {
  double tolerance = 1e-6;
  int max_iterations = 500;
  std::uint64_t seed = 1;
};

/// Raw matrix quantities: largest column and row abs sums, largest abs entry.
struct DenseNorms {
  double max_col_sum = 0.0;
  double max_row_sum = 0.0;
  double max_abs = 0.0;
};

/// Raw quantities of a matrix, or of a matrix composed with a multiplier on
/// its input (expanded through the multiplier's convolution kernel).
DenseNorms dense_norms(const GridOperator& op);

/// Continuum-normalized norm: grid functions carry their cell volumes, so
///   (1,1) = max col sum * h_out / h_in,  (oo,oo) = max row sum,
///   (1,oo) = max |entry| / h_in,         (2,2) = sigma_max * sqrt(h_out / h_in).
NormResult operator_norm(const GridOperator& op, NormPair pair, PowerIterationOptions options = {});

/// Plain matrix norms with unit weights.
NormResult operator_norm(const Eigen::MatrixXd& m, NormPair pair, PowerIterationOptions options = {});

struct DecayFit {
  /// (index, log2 norm)
  std::vector<std::pair<long, double>> samples;
  double slope = 0.0;
  double intercept = 0.0;
  double max_residual = 0.0;
};

/// Least-squares line through (index, log2 norm).
DecayFit decay_slope(std::span<const std::pair<long, double>> samples);

}  // namespace radonlike

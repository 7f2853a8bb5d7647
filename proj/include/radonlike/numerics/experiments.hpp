#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "radonlike/exponents.hpp"
#include "radonlike/numerics/discretize.hpp"
#include "radonlike/numerics/norms.hpp"

namespace radonlike {

struct DecayPlan {
  std::size_t grid = 256;
  long jmin = 1;
  long jmax = 6;
  /// Largest shell index; -1 skips the shell operators.
  long kmax = -1;
  bool unprojected = true;
  bool low_pass = true;
  std::vector<NormPair> norms{NormPair::OneOne, NormPair::InfInf, NormPair::OneInf};
  double half_width = kDefaultHalfWidth;
  PowerIterationOptions power;
};

inline constexpr long kLowPassRow = -1;
inline constexpr long kUnprojectedRow = -2;

/// One CSV row; k = -1 marks T_j Q_j and k = -2 marks T_j without a
/// frequency projection (the (1,oo) entry is omitted for it: unbounded).
struct DecayRow {
  long j;
  long k;
  NormPair pair;
  double value;
  bool converged;
  std::string context;
};

struct SlopeSummary {
  std::string series;  // e.g. "j:T:11", "j:TQ:1oo" or "k:TP:22@j=3"
  NormPair pair;
  DecayFit fit;
};

struct DecayTable {
  std::vector<DecayRow> rows;
  std::vector<SlopeSummary> fits;
  bool all_converged = true;
};

/// Whether the shell k at level j lies inside the frequency band of the level-j input grid.
bool shell_resolved(const OperatorSpec& spec, std::size_t grid, long j, long k,
                    double half_width = kDefaultHalfWidth);

/// Largest j for which shells 0..kmax are all resolved on the level grid; -1 if none.
long largest_feasible_level(const OperatorSpec& spec, std::size_t grid, long kmax,
                            double half_width = kDefaultHalfWidth);

/// Norms of T_j, T_j Q_j and T_j P_jk on level-adapted grids, plus slope fits.
DecayTable run_decay_experiment(const OperatorSpec& spec, const DecayPlan& plan);

void write_decay_csv(std::ostream& out, const std::vector<DecayRow>& rows);

}  // namespace radonlike

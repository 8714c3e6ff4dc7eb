#pragma once

#include <span>

namespace netspread {

struct MannWhitneyResult {
  double u = 0.0;        ///< U statistic of the first sample
  double z = 0.0;        ///< normal approximation, tie- and continuity-corrected
  double p_value = 1.0;  ///< one-sided
};

/**
 * One-sided Mann-Whitney U test of H1: values in `a` tend to be smaller
 * than values in `b`. Uses the normal approximation with average ranks for
 * ties, so it is meant for samples of a few dozen or more.
 */
MannWhitneyResult mann_whitney_less(std::span<const double> a, std::span<const double> b);

double mean(std::span<const double> xs);

}  // namespace netspread

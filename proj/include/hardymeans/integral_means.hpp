#pragma once

#include <vector>

#include "hardymeans/function_handle.hpp"
#include "hardymeans/quadrature.hpp"
#include "hardymeans/step_function.hpp"
#include "hardymeans/weighted_means.hpp"

namespace hardymeans {

/// Step minorant of f on K equal cells: on each cell the smaller of the two
/// cell-endpoint values (the right endpoint of the last cell is the domain
/// end itself). Requires declared monotonicity for evaluator handles; step
/// handles use exact per-cell extrema.
StepFunction lower_envelope(const FunctionHandle& f, int cells);

/// Step majorant, mirror of lower_envelope.
StepFunction upper_envelope(const FunctionHandle& f, int cells);

struct EnvelopeEstimate {
  int cells = 0;
  double lower = 0.0;
  double upper = 0.0;
  double gap() const { return upper - lower; }
};

/// Integral-mean bracket of f under the mean M for each grid size in the
/// schedule: M applied to the lower and upper envelopes. For monotone f and
/// a monotone mean the brackets are nested along a doubling schedule.
std::vector<EnvelopeEstimate> estimate_integral_mean(
    const WeightedMeanFn& mean, const FunctionHandle& f,
    const std::vector<int>& cell_schedule);

/// Integral Gini mean: (int f^p / int f^q)^(1/(p-q)) off the diagonal,
/// exp(int f^p ln f / int f^p) on it, integrals over the domain of f.
double integral_gini(double p, double q, const FunctionHandle& f,
                     const QuadratureConfig& cfg = {});

/// Unique y in the closed value range of f solving int E(f(t), y) dt = 0.
/// The integral is frozen on a fixed midpoint grid, the monotone discrete
/// equation is bisected, and the grid is refined until the root moves by
/// less than root_tol.
double integral_deviation_mean(const DeviationSpec& spec,
                               const FunctionHandle& f,
                               const QuadratureConfig& cfg = {},
                               const RootFindOptions& root = {});

}  // namespace hardymeans

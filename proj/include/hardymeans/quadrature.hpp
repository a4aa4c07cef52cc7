#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hardymeans {

/// Signals a divergent or numerically unreachable integral.
class integrability_error : public std::runtime_error {
 public:
  explicit integrability_error(const std::string& what)
      : std::runtime_error(what) {}
};

struct QuadratureConfig {
  /// Relative tolerance against the absolute-value mass of the integrand.
  double tol = 1e-10;
  /// Cap on midpoint refinement levels (2^level cells per octave).
  int max_depth = 24;
  /// Geometric grading toward the left endpoint; octave j spans
  /// [ratio^(j+1), ratio^j) on the unit interval.
  double grading_ratio = 0.5;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = false;
  int levels_used = 0;
  long evaluations = 0;
};

/// Integrates h over [0, 1) with a composite midpoint rule on geometric
/// octaves accelerated by extrapolation in the per-octave cell count.
/// Handles endpoint singularities h(t) ~ t^a for a > -1; divergent and
/// numerically unreachable behavior raises integrability_error.
QuadratureResult integrate_unit(const std::function<double(double)>& h,
                                const QuadratureConfig& cfg = {});

/// Integrates over [a, b) by the affine pull-back onto [0, 1); a possible
/// integrable singularity is assumed to sit at a.
QuadratureResult integrate(const std::function<double(double)>& h, double a,
                           double b, const QuadratureConfig& cfg = {});

/// One midpoint node with its cell weight.
struct QuadratureNode {
  double t;
  double weight;
};

/// Frozen midpoint grid on [0, 1): the geometric octave layout used by
/// integrate_unit at a fixed refinement level, extended left until the
/// reference integrand's tail drops below the tolerance. Nodes are sorted
/// ascending in t.
std::vector<QuadratureNode> frozen_unit_grid(
    const std::function<double(double)>& reference, int level,
    const QuadratureConfig& cfg = {});

}  // namespace hardymeans

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hardymeans/extended_real.hpp"
#include "hardymeans/integral_means.hpp"

namespace hardymeans {

/// Best constant C with int M(prefix of f) <= C * int f over all valid f,
/// for the power mean of exponent p: (1-p)^(-1/p) for p < 1 (e at p = 0),
/// infinite for p >= 1.
ExtendedReal hardy_constant_power(double p);

/// Same constant for the Gini mean of parameters (p, q):
/// ((1-q)/(1-p))^(1/(p-q)) when min(p,q) <= 0 <= max(p,q) < 1, e on the
/// (0,0) diagonal, infinite when min(p,q) > 0 or max(p,q) >= 1, and known
/// finite with certified bound e (exact value open) when max(p,q) < 0.
ExtendedReal hardy_constant_gini(double p, double q);

/// Constant attached to a ratio-concave deviation f: the root c > 1 of
/// int_0^c f(1/t) dt = 0, infinite when int_0^1 f(1/t) dt diverges.
ExtendedReal concave_deviation_hardy_constant(
    const std::function<double(double)>& f, double tol = 1e-10,
    const QuadratureConfig& cfg = {});

/// An integral mean plugged into the Hardy functional: either a Gini pair
/// (closed-form evaluation) or a general deviation (root-finding).
class IntegralMeanSpec {
 public:
  static IntegralMeanSpec gini(double p, double q);
  static IntegralMeanSpec power(double p);
  static IntegralMeanSpec deviation(DeviationSpec spec,
                                    RootFindOptions root = {});

  /// True when evaluation rides the Gini closed forms. Specs built through
  /// deviation() always use the root-finding route, even when the wrapped
  /// deviation happens to be a Gini one (p(), q() and reference_constant()
  /// still see the parameters in that case).
  bool is_gini() const { return gini_.has_value(); }
  double p() const;
  double q() const;
  const DeviationSpec& spec() const { return spec_; }
  const RootFindOptions& root_options() const { return root_; }

  double of_step(const StepFunction& f) const;
  double of_handle(const FunctionHandle& f, const QuadratureConfig& cfg) const;

  /// Hardy constant of this mean when known (Gini closed forms), Unknown
  /// otherwise.
  ExtendedReal reference_constant() const;

 private:
  struct GiniPair {
    double p;
    double q;
  };

  IntegralMeanSpec(std::optional<GiniPair> g, DeviationSpec spec,
                   RootFindOptions root)
      : gini_(g), spec_(std::move(spec)), root_(root) {}

  std::optional<GiniPair> gini_;
  DeviationSpec spec_;
  RootFindOptions root_;
};

/// One Hardy-functional evaluation: numerator int_0^s M(f on [0,t)) dt,
/// denominator int_0^s f, their ratio, and the reference constant with the
/// remaining margin (reference upper bound minus ratio). certified is set
/// when the numerator is a guaranteed upper bound of the true prefix-mean
/// integral (nonincreasing input with finite declared range, or an exact
/// closed form).
struct HardyReport {
  double mean_p = 0.0;
  double mean_q = 0.0;
  std::string family;
  double param = 0.0;
  double s = 0.0;
  int grid = 0;
  double numerator = 0.0;
  double denominator = 0.0;
  double ratio = 0.0;
  ExtendedReal reference = ExtendedReal::unknown();
  double margin = 0.0;
  bool certified = false;
};

/// Evaluates the Hardy functional of f on [0, s) under the given integral
/// mean with a grid-point budget for the outer integral. Gini means ride a
/// cumulative-prefix evaluation; the power-decay family under a Gini mean
/// is evaluated in closed form.
HardyReport hardy_functional(const IntegralMeanSpec& mean,
                             const FunctionHandle& f, int grid = 20000,
                             const QuadratureConfig& cfg = {},
                             std::optional<ExtendedReal> reference = {});

/// Hardy reports for one family across a parameter list, in parameter
/// order. Throwing rows are reported as failed sweeps via the exception.
std::vector<HardyReport> sharpness_sweep(const IntegralMeanSpec& mean,
                                         FunctionFamily family,
                                         const std::vector<double>& params,
                                         double s = 1.0, int grid = 20000,
                                         const QuadratureConfig& cfg = {});

struct DiscreteHardyResult {
  double lhs = 0.0;  ///< sum_n w_n * M(x_1..x_n, w_1..w_n)
  double rhs = 0.0;  ///< sum_n w_n * x_n
  double ratio = 0.0;
};

/// Finite-sum counterpart of the Hardy inequality for a discrete mean,
/// truncated after the first n terms.
DiscreteHardyResult discrete_hardy_check(const WeightedMeanFn& mean,
                                         const std::vector<double>& entries,
                                         const std::vector<double>& weights,
                                         std::size_t n);

}  // namespace hardymeans

#pragma once

#include <functional>
#include <optional>
#include <string>

#include "hardymeans/step_function.hpp"

namespace hardymeans {

enum class Monotonicity { Nonincreasing, Nondecreasing, Unknown };

/// Named input families for sweeps and reports; Param is the single shape
/// parameter (decay exponent, rate, piece count, level).
enum class FunctionFamily { Constant, PowerDecay, Exponential, StepProfile };

std::string family_name(FunctionFamily f);

/// A positive function on a finite half-open interval [a, b), given either
/// by an evaluator with declared metadata or by an explicit step function.
/// Evaluators must also accept t == b: envelope cells are closed on the
/// right at the domain end.
class FunctionHandle {
 public:
  struct FamilyTag {
    FunctionFamily family;
    double param;
  };

  static FunctionHandle analytic(std::function<double(double)> eval, double a,
                                 double b, Monotonicity mono, double range_lo,
                                 double range_hi);
  static FunctionHandle of_step(StepFunction f);

  /// t^param on [0, s); param in (-1, 0] keeps it integrable.
  static FunctionHandle power_decay(double param, double s = 1.0);
  /// exp(-param * t) on [0, s), param > 0.
  static FunctionHandle exponential(double param, double s = 1.0);
  static FunctionHandle constant(double level, double s = 1.0);
  /// n equal pieces on [0, s) with values 1, 1/2, ..., 1/n.
  static FunctionHandle step_profile(int n, double s = 1.0);

  bool is_step() const { return step_.has_value(); }
  const StepFunction& step() const;

  double domain_begin() const { return a_; }
  double domain_end() const { return b_; }
  Monotonicity monotonicity() const { return mono_; }
  double range_lo() const { return range_lo_; }
  double range_hi() const { return range_hi_; }

  const std::optional<FamilyTag>& family_tag() const { return tag_; }

  /// Evaluates at t in [a, b]. Checks the declared range lazily and throws
  /// std::domain_error when a sampled value escapes it.
  double operator()(double t) const;

 private:
  FunctionHandle() = default;

  std::function<double(double)> eval_;
  std::optional<StepFunction> step_;
  double a_ = 0.0;
  double b_ = 1.0;
  Monotonicity mono_ = Monotonicity::Unknown;
  double range_lo_ = 0.0;
  double range_hi_ = 0.0;
  std::optional<FamilyTag> tag_;
};

}  // namespace hardymeans

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hardymeans/weighted_means.hpp"

namespace hardymeans {

/// Right-continuous step function on [t_0, t_n): value v_i on [t_{i-1}, t_i).
/// Breakpoints are strictly increasing and all data is finite.
class StepFunction {
 public:
  StepFunction(std::vector<double> breakpoints, std::vector<double> values);

  /// Equal-length pieces on [a, b), one per value.
  static StepFunction uniform(std::vector<double> values, double a = 0.0,
                              double b = 1.0);

  std::size_t piece_count() const { return values_.size(); }
  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<double>& values() const { return values_; }

  double domain_begin() const { return breakpoints_.front(); }
  double domain_end() const { return breakpoints_.back(); }
  double domain_measure() const { return domain_end() - domain_begin(); }
  double piece_length(std::size_t i) const {
    return breakpoints_[i + 1] - breakpoints_[i];
  }

  double min_value() const;
  double max_value() const;

  /// Value at t in [t_0, t_n); throws std::invalid_argument outside.
  double value_at(double t) const;

  /// Merges adjacent pieces of equal value.
  StepFunction merged() const;

  /// Parses {"breakpoints": [...], "values": [...]}; rejects malformed
  /// shapes and non-finite numbers with std::invalid_argument.
  static StepFunction from_json_text(const std::string& text);
  std::string to_json_text() const;

 private:
  std::vector<double> breakpoints_;
  std::vector<double> values_;
};

/// sum v_i * len_i.
double total_integral(const StepFunction& f);

/// Integral mean of f under a weighted mean: M applied to the values
/// weighted by piece lengths.
double integral_mean_of_step(const WeightedMeanFn& mean, const StepFunction& f);

/// Restriction to [a, b) within the domain; pieces are split at a and b.
StepFunction restrict_to(const StepFunction& f, double a, double b);

/// The nonincreasing right-continuous step function equidistributed with f,
/// laid out on [0, |domain of f|).
StepFunction decreasing_rearrangement(const StepFunction& f);

/// integral |f - g|; requires equal domains and throws
/// std::invalid_argument on a mismatch.
double l1_distance(const StepFunction& f, const StepFunction& g);

struct ValueRange {
  double lo;
  double hi;
};

ValueRange value_range(const StepFunction& f);

/// Lebesgue measure of RG(g) \ f_range, where RG(g) is the smallest closed
/// interval containing the values of g (at most two residual intervals).
double range_excess(const StepFunction& g, const ValueRange& f_range);

/// True when f and g have equal domain measure and decreasing
/// rearrangements within L1 discrepancy tol of each other; false on a
/// measure mismatch.
bool is_equidistributed(const StepFunction& f, const StepFunction& g,
                        double tol = 1e-12);

/// Affine reparametrization of the domain onto [0, 1); values unchanged.
StepFunction canonical_reparam(const StepFunction& f);

}  // namespace hardymeans

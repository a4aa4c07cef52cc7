#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace hardymeans {

/// Entries x_1..x_n with nonnegative weights of positive total mass.
struct WeightedSample {
  std::vector<double> entries;
  std::vector<double> weights;

  WeightedSample() = default;
  WeightedSample(std::vector<double> xs, std::vector<double> ws);

  std::size_t size() const { return entries.size(); }
  double min_entry() const;
  double max_entry() const;
  double weight_sum() const;

  /// Throws std::invalid_argument unless: nonempty, equal lengths, all
  /// values finite, weights >= 0, weight sum > 0.
  void validate() const;
};

/// chi_{p,q}(x) = (x^p - x^q)/(p - q) for p != q, and x^p * ln(x) on the
/// diagonal; continuous in (p, q). Requires x > 0.
double chi(double p, double q, double x);

/// E_{p,q}(x, y) = y^p * chi_{p,q}(x / y). Requires x, y > 0.
double gini_deviation(double p, double q, double x, double y);

/// Power mean of exponent p. Entries must be >= 0, and > 0 when p <= 0.
double power_mean(double p, const WeightedSample& sample);

/// Two-parameter Gini mean: (sum w x^p / sum w x^q)^(1/(p-q)) off the
/// diagonal, exp(sum w x^p ln x / sum w x^p) on it. Entries must be > 0.
double gini_mean(double p, double q, const WeightedSample& sample);

/// A deviation E(x, y): zero at x == y and strictly decreasing in y.
/// The mean it induces is the root of sum_i w_i E(x_i, y) = 0.
class DeviationSpec {
 public:
  enum class Kind { Gini, Power, RatioConcave, Custom };

  static DeviationSpec gini(double p, double q);
  static DeviationSpec power(double p);
  /// E(x, y) = f(x / y) with f strictly increasing, concave, f(1) = 0.
  /// The shape conditions are probe-checked on a geometric grid.
  static DeviationSpec ratio_concave(std::function<double(double)> f);
  static DeviationSpec custom(std::function<double(double, double)> deviation);

  Kind kind() const { return kind_; }
  bool is_gini() const { return kind_ == Kind::Gini; }
  double gini_p() const { return p_; }
  double gini_q() const { return q_; }

  /// Evaluates E(x, y).
  double operator()(double x, double y) const;

 private:
  DeviationSpec(Kind k, double p, double q,
                std::function<double(double, double)> e)
      : kind_(k), p_(p), q_(q), eval_(std::move(e)) {}

  Kind kind_;
  double p_ = 0.0;
  double q_ = 0.0;
  std::function<double(double, double)> eval_;
};

struct RootFindOptions {
  double tol = 1e-12;
  int max_iter = 200;
};

/// Unique y in [min entry, max entry] with sum_i w_i E(x_i, y) = 0, located
/// by bisection to within opts.tol. Custom deviations that fail the sign
/// conditions at the bracket endpoints are reported via std::domain_error.
double deviation_mean(const DeviationSpec& spec, const WeightedSample& sample,
                      const RootFindOptions& opts = {});

/// Any weighted mean usable as an evaluator by the step/envelope layer.
using WeightedMeanFn = std::function<double(const WeightedSample&)>;

WeightedMeanFn power_mean_fn(double p);
WeightedMeanFn gini_mean_fn(double p, double q);
WeightedMeanFn deviation_mean_fn(DeviationSpec spec, RootFindOptions opts = {});

}  // namespace hardymeans

#include "hardymeans/weighted_means.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace hardymeans {

namespace {

/// Indices sorted by (entry, weight). Sums accumulated along this order do
/// not depend on how the sample was permuted, which makes every mean here
/// exactly symmetric.
std::vector<std::size_t> canonical_order(const WeightedSample& s) {
  std::vector<std::size_t> idx(s.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&s](std::size_t a, std::size_t b) {
    if (s.entries[a] != s.entries[b]) return s.entries[a] < s.entries[b];
    return s.weights[a] < s.weights[b];
  });
  return idx;
}

/// Decimal exponent threshold above which power sums switch to log-space.
constexpr double kOverflowExp10 = 300.0;

/// sum_i w_i x_i^p represented as mantissa * exp(log_scale). log_scale is 0
/// on the direct path, so moderate samples keep plain floating-point sums.
struct ScaledSum {
  double log_scale = 0.0;
  double mantissa = 0.0;

  double logarithm() const { return log_scale + std::log(mantissa); }
};

bool needs_log_space(double p, const WeightedSample& s) {
  if (p == 0.0) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.weights[i] == 0.0 || s.entries[i] == 0.0) continue;
    double e10 = p * std::log10(s.entries[i]) + std::log10(s.weights[i]);
    if (std::abs(e10) > kOverflowExp10) return true;
  }
  return false;
}

ScaledSum weighted_power_sum(double p, const WeightedSample& s,
                             const std::vector<std::size_t>& order) {
  ScaledSum out;
  if (!needs_log_space(p, s)) {
    double sum = 0.0;
    for (std::size_t i : order) {
      if (s.weights[i] == 0.0) continue;
      sum += s.weights[i] * std::pow(s.entries[i], p);
    }
    out.mantissa = sum;
    return out;
  }
  double peak = -std::numeric_limits<double>::infinity();
  for (std::size_t i : order) {
    if (s.weights[i] == 0.0 || s.entries[i] == 0.0) continue;
    peak = std::max(peak, p * std::log(s.entries[i]) + std::log(s.weights[i]));
  }
  double sum = 0.0;
  for (std::size_t i : order) {
    if (s.weights[i] == 0.0 || s.entries[i] == 0.0) continue;
    sum += std::exp(p * std::log(s.entries[i]) + std::log(s.weights[i]) - peak);
  }
  out.log_scale = peak;
  out.mantissa = sum;
  return out;
}

/// exp( sum w x^p ln x / sum w x^p ), the p = q branch of the Gini mean.
double diagonal_gini(double p, const WeightedSample& s,
                     const std::vector<std::size_t>& order) {
  bool scaled = needs_log_space(p, s);
  double peak = 0.0;
  if (scaled) {
    peak = -std::numeric_limits<double>::infinity();
    for (std::size_t i : order) {
      if (s.weights[i] == 0.0) continue;
      peak = std::max(peak,
                      p * std::log(s.entries[i]) + std::log(s.weights[i]));
    }
  }
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i : order) {
    if (s.weights[i] == 0.0) continue;
    double lx = std::log(s.entries[i]);
    double term = scaled ? std::exp(p * lx + std::log(s.weights[i]) - peak)
                         : s.weights[i] * std::pow(s.entries[i], p);
    num += term * lx;
    den += term;
  }
  return std::exp(num / den);
}

void require_positive_entries(const WeightedSample& s, const char* who) {
  for (double x : s.entries) {
    if (!(x > 0.0)) {
      throw std::domain_error(std::string(who) +
                              ": entries must be strictly positive");
    }
  }
}

}  // namespace

WeightedSample::WeightedSample(std::vector<double> xs, std::vector<double> ws)
    : entries(std::move(xs)), weights(std::move(ws)) {
  validate();
}

void WeightedSample::validate() const {
  if (entries.empty()) {
    throw std::invalid_argument("WeightedSample: empty sample");
  }
  if (entries.size() != weights.size()) {
    throw std::invalid_argument(
        "WeightedSample: entries and weights differ in length");
  }
  double wsum = 0.0;
  for (double x : entries) {
    if (!std::isfinite(x)) {
      throw std::invalid_argument("WeightedSample: non-finite entry");
    }
  }
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0) {
      throw std::invalid_argument(
          "WeightedSample: weights must be finite and nonnegative");
    }
    wsum += w;
  }
  if (!(wsum > 0.0)) {
    throw std::invalid_argument("WeightedSample: total weight must be positive");
  }
}

// min_entry/max_entry range over the effective support only: entries whose
// weight is zero cannot influence any mean, so they must not influence the
// constant-sample detection or the deviation-mean bracket either.
double WeightedSample::min_entry() const {
  double lo = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (weights[i] > 0.0 && entries[i] < lo) lo = entries[i];
  }
  return lo;
}

double WeightedSample::max_entry() const {
  double hi = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (weights[i] > 0.0 && entries[i] > hi) hi = entries[i];
  }
  return hi;
}

double WeightedSample::weight_sum() const {
  return std::accumulate(weights.begin(), weights.end(), 0.0);
}

double chi(double p, double q, double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::domain_error("chi: x must be positive and finite");
  }
  double lx = std::log(x);
  if (p == q) return std::pow(x, p) * lx;
  // x^p - x^q = x^q * (exp((p-q) ln x) - 1); expm1 keeps the difference
  // accurate when p and q are close.
  return std::pow(x, q) * std::expm1((p - q) * lx) / (p - q);
}

double gini_deviation(double p, double q, double x, double y) {
  if (!(x > 0.0) || !(y > 0.0) || !std::isfinite(x) || !std::isfinite(y)) {
    throw std::domain_error("gini_deviation: x and y must be positive finite");
  }
  return std::pow(y, p) * chi(p, q, x / y);
}

double power_mean(double p, const WeightedSample& s) {
  s.validate();
  for (double x : s.entries) {
    if (x < 0.0) {
      throw std::domain_error("power_mean: entries must be nonnegative");
    }
    if (x == 0.0 && p <= 0.0) {
      throw std::domain_error("power_mean: zero entry requires p > 0");
    }
  }
  double lo = s.min_entry();
  if (lo == s.max_entry()) return lo;
  auto order = canonical_order(s);
  if (p == 0.0) return diagonal_gini(0.0, s, order);
  ScaledSum a = weighted_power_sum(p, s, order);
  ScaledSum w = weighted_power_sum(0.0, s, order);
  if (a.mantissa == 0.0) return 0.0;
  if (a.log_scale == 0.0) return std::pow(a.mantissa / w.mantissa, 1.0 / p);
  return std::exp((a.logarithm() - w.logarithm()) / p);
}

double gini_mean(double p, double q, const WeightedSample& s) {
  s.validate();
  require_positive_entries(s, "gini_mean");
  double lo = s.min_entry();
  if (lo == s.max_entry()) return lo;
  auto order = canonical_order(s);
  if (p == q) return diagonal_gini(p, s, order);
  ScaledSum a = weighted_power_sum(p, s, order);
  ScaledSum b = weighted_power_sum(q, s, order);
  if (a.log_scale == 0.0 && b.log_scale == 0.0) {
    return std::pow(a.mantissa / b.mantissa, 1.0 / (p - q));
  }
  return std::exp((a.logarithm() - b.logarithm()) / (p - q));
}

DeviationSpec DeviationSpec::gini(double p, double q) {
  if (!std::isfinite(p) || !std::isfinite(q)) {
    throw std::invalid_argument("DeviationSpec::gini: parameters must be finite");
  }
  return DeviationSpec(Kind::Gini, p, q, [p, q](double x, double y) {
    return gini_deviation(p, q, x, y);
  });
}

DeviationSpec DeviationSpec::power(double p) {
  if (!std::isfinite(p)) {
    throw std::invalid_argument("DeviationSpec::power: parameter must be finite");
  }
  DeviationSpec d = gini(p, 0.0);
  d.kind_ = Kind::Power;
  return d;
}

DeviationSpec DeviationSpec::ratio_concave(std::function<double(double)> f) {
  if (!f) {
    throw std::invalid_argument("DeviationSpec::ratio_concave: empty function");
  }
  // Probe grid on [1/8, 8]: f(1) = 0, strict increase, midpoint concavity.
  if (std::abs(f(1.0)) > 1e-12) {
    throw std::invalid_argument("DeviationSpec::ratio_concave: f(1) != 0");
  }
  const int n = 64;
  const double a = 0.125, b = 8.0;
  double prev = f(a);
  for (int k = 1; k <= n; ++k) {
    double x = a + (b - a) * k / n;
    double fx = f(x);
    if (!(fx > prev)) {
      throw std::invalid_argument(
          "DeviationSpec::ratio_concave: f is not strictly increasing");
    }
    prev = fx;
  }
  for (int k = 0; k + 2 <= n; k += 2) {
    double x0 = a + (b - a) * k / n;
    double x2 = a + (b - a) * (k + 2) / n;
    double mid = 0.5 * (x0 + x2);
    double slack = 1e-12 * (1.0 + std::abs(f(x0)) + std::abs(f(x2)));
    if (f(mid) + slack < 0.5 * (f(x0) + f(x2))) {
      throw std::invalid_argument(
          "DeviationSpec::ratio_concave: f is not concave");
    }
  }
  auto shape = std::move(f);
  return DeviationSpec(Kind::RatioConcave, 0.0, 0.0,
                       [shape](double x, double y) { return shape(x / y); });
}

DeviationSpec DeviationSpec::custom(
    std::function<double(double, double)> deviation) {
  if (!deviation) {
    throw std::invalid_argument("DeviationSpec::custom: empty function");
  }
  return DeviationSpec(Kind::Custom, 0.0, 0.0, std::move(deviation));
}

double DeviationSpec::operator()(double x, double y) const {
  return eval_(x, y);
}

namespace {

/// Probe checks for user-supplied deviations: E(x, x) = 0 exactly at every
/// sample entry, and E(x, .) strictly decreasing on a 16-point grid.
void probe_custom_axioms(const DeviationSpec& spec, const WeightedSample& s,
                         double lo, double hi) {
  for (double x : s.entries) {
    if (spec(x, x) != 0.0) {
      throw std::domain_error(
          "deviation_mean: custom deviation violates E(x, x) = 0");
    }
  }
  const int n = 16;
  for (double x : s.entries) {
    double prev = spec(x, lo);
    for (int k = 1; k < n; ++k) {
      double y = lo + (hi - lo) * k / (n - 1);
      double cur = spec(x, y);
      if (!(cur < prev)) {
        throw std::domain_error(
            "deviation_mean: custom deviation is not strictly decreasing in y");
      }
      prev = cur;
    }
  }
}

}  // namespace

double deviation_mean(const DeviationSpec& spec, const WeightedSample& s,
                      const RootFindOptions& opts) {
  s.validate();
  require_positive_entries(s, "deviation_mean");
  if (!(opts.tol > 0.0)) {
    throw std::invalid_argument("deviation_mean: tol must be positive");
  }
  double lo = s.min_entry();
  double hi = s.max_entry();
  if (lo == hi) return lo;
  if (spec.kind() == DeviationSpec::Kind::Custom) {
    probe_custom_axioms(spec, s, lo, hi);
  }

  auto order = canonical_order(s);
  auto residual = [&](double y) {
    double sum = 0.0;
    for (std::size_t i : order) {
      if (s.weights[i] == 0.0) continue;
      sum += s.weights[i] * spec(s.entries[i], y);
    }
    return sum;
  };

  double rlo = residual(lo);
  double rhi = residual(hi);
  if (std::isnan(rlo) || std::isnan(rhi)) {
    throw std::domain_error(
        "deviation_mean: deviation values overflowed; the entry spread "
        "exceeds what this deviation can represent in double precision");
  }
  if (!(rlo >= 0.0) || !(rhi <= 0.0)) {
    throw std::domain_error(
        "deviation_mean: deviation axioms violated (residual does not change "
        "sign over [min entry, max entry])");
  }
  if (rlo == 0.0) return lo;
  if (rhi == 0.0) return hi;

  for (int it = 0; it < opts.max_iter; ++it) {
    double mid = 0.5 * (lo + hi);
    if (0.5 * (hi - lo) <= opts.tol) return mid;
    if (hi - lo <= 8.0 * std::numeric_limits<double>::epsilon() * std::abs(mid)) {
      return mid;
    }
    double rm = residual(mid);
    if (std::isnan(rm)) {
      throw std::domain_error(
          "deviation_mean: deviation values overflowed; the entry spread "
          "exceeds what this deviation can represent in double precision");
    }
    if (rm == 0.0) return mid;
    // The residual is strictly decreasing in y: positive means the root
    // lies to the right.
    if (rm > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

WeightedMeanFn power_mean_fn(double p) {
  return [p](const WeightedSample& s) { return power_mean(p, s); };
}

WeightedMeanFn gini_mean_fn(double p, double q) {
  return [p, q](const WeightedSample& s) { return gini_mean(p, q, s); };
}

WeightedMeanFn deviation_mean_fn(DeviationSpec spec, RootFindOptions opts) {
  return [spec = std::move(spec), opts](const WeightedSample& s) {
    return deviation_mean(spec, s, opts);
  };
}

}  // namespace hardymeans

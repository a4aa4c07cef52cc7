#include "hardymeans/function_handle.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hardymeans {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Spot check of a declared monotonicity on a uniform probe grid,
/// including the closed right endpoint.
void probe_monotonicity(const std::function<double(double)>& eval, double a,
                        double b, Monotonicity mono) {
  if (mono == Monotonicity::Unknown) return;
  const int n = 16;
  double prev = eval(a);
  for (int k = 1; k <= n; ++k) {
    double t = a + (b - a) * k / n;
    double cur = eval(t);
    double slack = 1e-12 * (1.0 + std::abs(prev) + std::abs(cur));
    bool ok = mono == Monotonicity::Nonincreasing ? cur <= prev + slack
                                                  : cur + slack >= prev;
    if (std::isnan(cur) || !ok) {
      throw std::invalid_argument(
          "FunctionHandle: sampled values violate the declared monotonicity");
    }
    prev = cur;
  }
}

}  // namespace

std::string family_name(FunctionFamily f) {
  switch (f) {
    case FunctionFamily::Constant:
      return "const";
    case FunctionFamily::PowerDecay:
      return "power-decay";
    case FunctionFamily::Exponential:
      return "exponential";
    case FunctionFamily::StepProfile:
      return "step-profile";
  }
  return "unknown";
}

FunctionHandle FunctionHandle::analytic(std::function<double(double)> eval,
                                        double a, double b, Monotonicity mono,
                                        double range_lo, double range_hi) {
  if (!eval) {
    throw std::invalid_argument("FunctionHandle: empty evaluator");
  }
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    throw std::invalid_argument("FunctionHandle: need a finite domain [a, b)");
  }
  if (std::isnan(range_lo) || std::isnan(range_hi) || !(range_lo <= range_hi)) {
    throw std::invalid_argument("FunctionHandle: invalid declared range");
  }
  probe_monotonicity(eval, a, b, mono);
  FunctionHandle h;
  h.eval_ = std::move(eval);
  h.a_ = a;
  h.b_ = b;
  h.mono_ = mono;
  h.range_lo_ = range_lo;
  h.range_hi_ = range_hi;
  return h;
}

FunctionHandle FunctionHandle::of_step(StepFunction f) {
  FunctionHandle h;
  h.a_ = f.domain_begin();
  h.b_ = f.domain_end();
  h.range_lo_ = f.min_value();
  h.range_hi_ = f.max_value();
  bool noninc = true, nondec = true;
  for (std::size_t i = 0; i + 1 < f.piece_count(); ++i) {
    if (f.values()[i] < f.values()[i + 1]) noninc = false;
    if (f.values()[i] > f.values()[i + 1]) nondec = false;
  }
  h.mono_ = noninc   ? Monotonicity::Nonincreasing
            : nondec ? Monotonicity::Nondecreasing
                     : Monotonicity::Unknown;
  h.step_ = std::move(f);
  return h;
}

FunctionHandle FunctionHandle::power_decay(double param, double s) {
  if (!(param > -1.0) || !(param <= 0.0)) {
    throw std::invalid_argument("power_decay: exponent must lie in (-1, 0]");
  }
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw std::invalid_argument("power_decay: horizon must be positive finite");
  }
  double lo = std::pow(s, param);
  double hi = param == 0.0 ? 1.0 : kInf;
  FunctionHandle h =
      analytic([param](double t) { return std::pow(t, param); }, 0.0, s,
               Monotonicity::Nonincreasing, std::min(lo, hi), hi);
  h.tag_ = FamilyTag{FunctionFamily::PowerDecay, param};
  return h;
}

FunctionHandle FunctionHandle::exponential(double param, double s) {
  if (!(param > 0.0) || !std::isfinite(param)) {
    throw std::invalid_argument("exponential: rate must be positive finite");
  }
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw std::invalid_argument("exponential: horizon must be positive finite");
  }
  FunctionHandle h =
      analytic([param](double t) { return std::exp(-param * t); }, 0.0, s,
               Monotonicity::Nonincreasing, std::exp(-param * s), 1.0);
  h.tag_ = FamilyTag{FunctionFamily::Exponential, param};
  return h;
}

FunctionHandle FunctionHandle::constant(double level, double s) {
  if (!(level > 0.0) || !std::isfinite(level)) {
    throw std::invalid_argument("constant: level must be positive finite");
  }
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw std::invalid_argument("constant: horizon must be positive finite");
  }
  FunctionHandle h = analytic([level](double) { return level; }, 0.0, s,
                              Monotonicity::Nonincreasing, level, level);
  h.tag_ = FamilyTag{FunctionFamily::Constant, level};
  return h;
}

FunctionHandle FunctionHandle::step_profile(int n, double s) {
  if (n < 1) {
    throw std::invalid_argument("step_profile: need at least one piece");
  }
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw std::invalid_argument("step_profile: horizon must be positive finite");
  }
  std::vector<double> values(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    values[static_cast<std::size_t>(k)] = 1.0 / (k + 1);
  }
  FunctionHandle h = of_step(StepFunction::uniform(std::move(values), 0.0, s));
  h.tag_ = FamilyTag{FunctionFamily::StepProfile, static_cast<double>(n)};
  return h;
}

const StepFunction& FunctionHandle::step() const {
  if (!step_) {
    throw std::logic_error("FunctionHandle::step: not a step handle");
  }
  return *step_;
}

double FunctionHandle::operator()(double t) const {
  if (!(t >= a_) || !(t <= b_)) {
    throw std::invalid_argument("FunctionHandle: t outside [a, b]");
  }
  if (step_) {
    // The closed right endpoint maps to the last piece, mirroring the
    // endpoint convention evaluator handles must honor.
    return t < b_ ? step_->value_at(t) : step_->values().back();
  }
  double v = eval_(t);
  double slack = 1e-9 * (1.0 + std::abs(range_lo_) +
                         (std::isfinite(range_hi_) ? std::abs(range_hi_) : 0.0));
  if (std::isnan(v) || v < range_lo_ - slack || v > range_hi_ + slack) {
    throw std::domain_error(
        "FunctionHandle: sampled value escapes the declared range");
  }
  return v;
}

}  // namespace hardymeans

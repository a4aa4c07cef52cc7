#include "hardymeans/hardy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <vector>

namespace hardymeans {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

/// Compensated accumulator; the prefix sweeps add ~1e5 terms and naive
/// running sums would leak noise above the quadrature tolerance.
struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    double y = x - carry;
    double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

double margin_against(const ExtendedReal& ref, double ratio) {
  switch (ref.kind()) {
    case ExtendedReal::Kind::Finite:
    case ExtendedReal::Kind::UnknownFinite:
      return ref.upper_bound() - ratio;
    case ExtendedReal::Kind::Infinite:
      return kInf;
    case ExtendedReal::Kind::Unknown:
      return kNaN;
  }
  return kNaN;
}

}  // namespace

ExtendedReal hardy_constant_power(double p) {
  if (p >= 1.0) return ExtendedReal::infinite();
  if (p == 0.0) return ExtendedReal::finite(std::exp(1.0));
  return ExtendedReal::finite(std::pow(1.0 - p, -1.0 / p));
}

ExtendedReal hardy_constant_gini(double p, double q) {
  double mn = std::min(p, q);
  double mx = std::max(p, q);
  if (mn > 0.0 || mx >= 1.0) return ExtendedReal::infinite();
  if (mx < 0.0) return ExtendedReal::unknown_finite(std::exp(1.0));
  // Remaining regime: min(p,q) <= 0 <= max(p,q) < 1. On the diagonal only
  // p = q = 0 survives, the Carleman constant.
  if (p == q) return ExtendedReal::finite(std::exp(1.0));
  return ExtendedReal::finite(std::pow((1.0 - q) / (1.0 - p), 1.0 / (p - q)));
}

ExtendedReal concave_deviation_hardy_constant(
    const std::function<double(double)>& f, double tol,
    const QuadratureConfig& cfg) {
  if (!(tol > 0.0)) {
    throw std::invalid_argument(
        "concave_deviation_hardy_constant: tol must be positive");
  }
  // Shares the shape validation (strictly increasing, concave, f(1) = 0)
  // with ratio-concave deviation specs.
  (void)DeviationSpec::ratio_concave(f);

  QuadratureConfig inner = cfg;
  inner.tol = std::min(cfg.tol, 0.05 * tol);
  auto integrand = [&f](double t) { return f(1.0 / t); };

  double head;  // int_0^1 f(1/t) dt, the finiteness certificate
  try {
    QuadratureResult r = integrate_unit(integrand, inner);
    if (!r.converged) return ExtendedReal::infinite();
    head = r.value;
  } catch (const integrability_error&) {
    return ExtendedReal::infinite();
  }

  // F(c) = head + int_1^c f(1/t) dt starts positive and is eventually
  // negative; expand the bracket, then bisect.
  auto F = [&](double c) {
    return head + integrate(integrand, 1.0, c, inner).value;
  };
  double lo = 1.0;
  double hi = 2.0;
  double Fhi = F(hi);
  while (Fhi > 0.0) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e12) {
      throw integrability_error(
          "concave_deviation_hardy_constant: no root below 1e12");
    }
    Fhi = F(hi);
  }
  if (Fhi == 0.0) return ExtendedReal::finite(hi);
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (0.5 * (hi - lo) <= tol) return ExtendedReal::finite(mid);
    double v = F(mid);
    if (v == 0.0) return ExtendedReal::finite(mid);
    if (v > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return ExtendedReal::finite(0.5 * (lo + hi));
}

IntegralMeanSpec IntegralMeanSpec::gini(double p, double q) {
  return IntegralMeanSpec(GiniPair{p, q}, DeviationSpec::gini(p, q), {});
}

IntegralMeanSpec IntegralMeanSpec::power(double p) {
  return IntegralMeanSpec(GiniPair{p, 0.0}, DeviationSpec::power(p), {});
}

IntegralMeanSpec IntegralMeanSpec::deviation(DeviationSpec spec,
                                             RootFindOptions root) {
  return IntegralMeanSpec(std::nullopt, std::move(spec), root);
}

double IntegralMeanSpec::p() const {
  if (gini_) return gini_->p;
  if (spec_.is_gini()) return spec_.gini_p();
  throw std::logic_error("IntegralMeanSpec: mean has no Gini parameters");
}

double IntegralMeanSpec::q() const {
  if (gini_) return gini_->q;
  if (spec_.is_gini()) return spec_.gini_q();
  throw std::logic_error("IntegralMeanSpec: mean has no Gini parameters");
}

double IntegralMeanSpec::of_step(const StepFunction& f) const {
  if (gini_) {
    if (spec_.kind() == DeviationSpec::Kind::Power) {
      return integral_mean_of_step(power_mean_fn(gini_->p), f);
    }
    return integral_mean_of_step(gini_mean_fn(gini_->p, gini_->q), f);
  }
  return integral_mean_of_step(deviation_mean_fn(spec_, root_), f);
}

double IntegralMeanSpec::of_handle(const FunctionHandle& f,
                                   const QuadratureConfig& cfg) const {
  if (f.is_step()) return of_step(f.step());
  if (gini_) return integral_gini(gini_->p, gini_->q, f, cfg);
  return integral_deviation_mean(spec_, f, cfg, root_);
}

ExtendedReal IntegralMeanSpec::reference_constant() const {
  if (gini_) return hardy_constant_gini(gini_->p, gini_->q);
  if (spec_.is_gini()) {
    return hardy_constant_gini(spec_.gini_p(), spec_.gini_q());
  }
  return ExtendedReal::unknown();
}

namespace {

/// Ascending boundary grid 0 = u_0 < ... < u_G = s for the outer Hardy
/// integral: uniform for bounded inputs, graded toward 0 in geometric
/// octaves (uniform within each) when the declared range is unbounded.
std::vector<double> outer_boundaries(const FunctionHandle& f, int grid,
                                     const QuadratureConfig& cfg) {
  double s = f.domain_end();
  std::vector<double> u;
  if (std::isfinite(f.range_hi())) {
    u.resize(static_cast<std::size_t>(grid) + 1);
    for (int k = 0; k <= grid; ++k) {
      u[static_cast<std::size_t>(k)] = s * k / grid;
    }
    u.front() = 0.0;
    u.back() = s;
    return u;
  }
  double a = f.domain_begin();
  double span = s - a;
  auto g01 = [&f, a, span](double t) { return f(a + span * t); };
  // Coarse probe fixes the octave count the tail rule needs.
  std::vector<QuadratureNode> probe = frozen_unit_grid(g01, 3, cfg);
  int octaves = std::max(1, static_cast<int>((probe.size() - 1) / 8));
  int per_octave = std::max(2, grid / octaves);
  double r = cfg.grading_ratio;
  u.reserve(static_cast<std::size_t>(octaves) * per_octave + 2);
  u.push_back(0.0);
  u.push_back(s * std::pow(r, octaves));
  for (int j = octaves - 1; j >= 0; --j) {
    double lo = s * std::pow(r, j + 1);
    double hi = s * std::pow(r, j);
    for (int i = 1; i <= per_octave; ++i) {
      u.push_back(lo + (hi - lo) * i / per_octave);
    }
  }
  u.back() = s;
  return u;
}

double first_cell_integral(const FunctionHandle& f,
                           const std::function<double(double)>& transform,
                           double u1, const QuadratureConfig& cfg,
                           const char* what) {
  QuadratureResult r = integrate(
      [&f, &transform](double t) { return transform(f(t)); }, 0.0, u1, cfg);
  if (!r.converged) {
    throw integrability_error(std::string("hardy_functional: ") + what +
                              " did not converge on the first cell (error "
                              "estimate " +
                              fmt(r.error_estimate) + ")");
  }
  return r.value;
}

struct GiniPrefixes {
  std::vector<double> g_at;   ///< prefix Gini mean at each boundary k >= 1
  std::vector<double> g_mid;  ///< same at the midpoint of cell k >= 1
  std::vector<double> f_int;  ///< running int_0^{u_k} f
};

/// One sweep over the boundary grid accumulating int f^p, int f^q (or the
/// log-weighted integral on the diagonal) and int f, with four midpoint
/// subcells per cell; prefix Gini means fall out of the running sums.
GiniPrefixes gini_prefixes(const FunctionHandle& f, double p, double q,
                           const std::vector<double>& u,
                           const QuadratureConfig& cfg) {
  bool diagonal = p == q;
  std::size_t cells = u.size() - 1;
  GiniPrefixes out;
  out.g_at.assign(cells + 1, kNaN);
  out.g_mid.assign(cells + 1, kNaN);
  out.f_int.assign(cells + 1, 0.0);

  auto powp = [p](double v) { return std::pow(v, p); };
  auto powq = [q](double v) { return std::pow(v, q); };
  auto logw = [p](double v) { return std::pow(v, p) * std::log(v); };

  KahanSum P, Q, D;
  P.add(first_cell_integral(f, powp, u[1], cfg, "the p-power integral"));
  Q.add(diagonal ? first_cell_integral(f, logw, u[1], cfg,
                                       "the weighted log integral")
                 : first_cell_integral(f, powq, u[1], cfg,
                                       "the q-power integral"));
  D.add(first_cell_integral(f, [](double v) { return v; }, u[1], cfg,
                            "the denominator integral"));

  auto gini_of = [&](double Pv, double Qv) {
    double g = diagonal ? std::exp(Qv / Pv)
                        : std::pow(Pv / Qv, 1.0 / (p - q));
    if (!std::isfinite(g)) {
      throw integrability_error(
          "hardy_functional: prefix mean overflowed (parameters too large)");
    }
    return g;
  };

  out.f_int[1] = D.sum;
  out.g_at[1] = gini_of(P.sum, Q.sum);
  for (std::size_t k = 1; k < cells; ++k) {
    double lo = u[k];
    double hi = u[k + 1];
    double w = (hi - lo) / 4.0;
    for (int sub = 0; sub < 4; ++sub) {
      double t = lo + (sub + 0.5) * w;
      double v = f(t);
      if (!(v > 0.0)) {
        throw std::domain_error("hardy_functional: f must be positive");
      }
      P.add(powp(v) * w);
      Q.add((diagonal ? logw(v) : powq(v)) * w);
      D.add(v * w);
      if (sub == 1) {
        out.g_mid[k] = gini_of(P.sum, Q.sum);
      }
    }
    out.f_int[k + 1] = D.sum;
    out.g_at[k + 1] = gini_of(P.sum, Q.sum);
  }
  return out;
}

/// Prefix deviation means by bisection over cumulative frozen sums: four
/// midpoint subnodes per cell, each boundary root solved on the nodes that
/// precede it.
std::vector<double> deviation_prefixes(const FunctionHandle& f,
                                       const DeviationSpec& spec,
                                       const RootFindOptions& root,
                                       const std::vector<double>& u,
                                       double* f_total) {
  std::size_t cells = u.size() - 1;
  std::vector<double> fv;
  std::vector<double> w;
  fv.reserve(4 * cells);
  w.reserve(4 * cells);
  std::vector<double> g(cells + 1, kNaN);
  KahanSum mass;
  double lo_seen = kInf, hi_seen = -kInf;
  for (std::size_t k = 0; k < cells; ++k) {
    double step = (u[k + 1] - u[k]) / 4.0;
    for (int sub = 0; sub < 4; ++sub) {
      double t = u[k] + (sub + 0.5) * step;
      double v = f(t);
      if (!(v > 0.0)) {
        throw std::domain_error("hardy_functional: f must be positive");
      }
      fv.push_back(v);
      w.push_back(step);
      mass.add(v * step);
      lo_seen = std::min(lo_seen, v);
      hi_seen = std::max(hi_seen, v);
    }
    double lo = lo_seen, hi = hi_seen;
    if (lo == hi) {
      g[k + 1] = lo;
      continue;
    }
    auto residual = [&](double y) {
      double sum = 0.0;
      for (std::size_t i = 0; i < fv.size(); ++i) {
        sum += w[i] * spec(fv[i], y);
      }
      return sum;
    };
    for (int it = 0; it < root.max_iter; ++it) {
      double mid = 0.5 * (lo + hi);
      if (0.5 * (hi - lo) <= std::max(root.tol, 1e-12) ||
          hi - lo <= 8.0 * std::numeric_limits<double>::epsilon() *
                         std::abs(mid)) {
        break;
      }
      double res = residual(mid);
      if (res == 0.0) break;
      if (res > 0.0) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    g[k + 1] = 0.5 * (lo + hi);
  }
  *f_total = mass.sum;
  return g;
}

}  // namespace

HardyReport hardy_functional(const IntegralMeanSpec& mean,
                             const FunctionHandle& f, int grid,
                             const QuadratureConfig& cfg,
                             std::optional<ExtendedReal> reference) {
  if (grid < 2) {
    throw std::invalid_argument("hardy_functional: grid must be at least 2");
  }
  if (f.domain_begin() != 0.0) {
    throw std::invalid_argument(
        "hardy_functional: the input must live on [0, s)");
  }
  double s = f.domain_end();

  HardyReport rep;
  rep.s = s;
  rep.grid = grid;
  bool gini_params = mean.is_gini() || mean.spec().is_gini();
  rep.mean_p = gini_params ? mean.p() : kNaN;
  rep.mean_q = gini_params ? mean.q() : kNaN;
  if (f.family_tag()) {
    rep.family = family_name(f.family_tag()->family);
    rep.param = f.family_tag()->param;
  } else {
    rep.family = f.is_step() ? "step" : "custom";
    rep.param = kNaN;
  }
  rep.reference = reference ? *reference : mean.reference_constant();

  bool nonincreasing = f.monotonicity() == Monotonicity::Nonincreasing;
  bool bounded = std::isfinite(f.range_hi());

  if (mean.is_gini() && f.family_tag() &&
      f.family_tag()->family == FunctionFamily::PowerDecay) {
    // Closed form: the prefix Gini mean of t^a is t^a times a constant, so
    // the Hardy ratio is that constant exactly and both integrals are
    // elementary.
    double a = f.family_tag()->param;
    double p = mean.p(), q = mean.q();
    if (a * p + 1.0 <= 0.0 || a * q + 1.0 <= 0.0) {
      throw integrability_error(
          "hardy_functional: a power integral of the decay family diverges "
          "(a*p <= -1 or a*q <= -1)");
    }
    double k = p == q ? std::exp(-a / (a * p + 1.0))
                      : std::pow((a * q + 1.0) / (a * p + 1.0), 1.0 / (p - q));
    rep.denominator = std::pow(s, a + 1.0) / (a + 1.0);
    rep.numerator = k * rep.denominator;
    rep.ratio = rep.numerator / rep.denominator;
    rep.certified = true;
    rep.margin = margin_against(rep.reference, rep.ratio);
    return rep;
  }

  if (f.is_step()) {
    const StepFunction& sf = f.step();
    double delta = s / grid;
    rep.denominator = total_integral(sf);
    auto prefix_mean = [&](double t) {
      return mean.of_step(restrict_to(sf, 0.0, t));
    };
    KahanSum num;
    if (nonincreasing) {
      // Left endpoints; the limit from the right at 0 is the first value.
      num.add(sf.values().front() * delta);
      for (int k = 1; k < grid; ++k) {
        num.add(prefix_mean(s * k / grid) * delta);
      }
      rep.certified = true;
    } else {
      for (int k = 0; k < grid; ++k) {
        num.add(prefix_mean(s * (k + 0.5) / grid) * delta);
      }
      rep.certified = false;
    }
    rep.numerator = num.sum;
    rep.ratio = rep.numerator / rep.denominator;
    rep.margin = margin_against(rep.reference, rep.ratio);
    return rep;
  }

  if (mean.is_gini()) {
    std::vector<double> u = outer_boundaries(f, grid, cfg);
    GiniPrefixes pre = gini_prefixes(f, mean.p(), mean.q(), u, cfg);
    std::size_t cells = u.size() - 1;
    KahanSum num;
    if (nonincreasing && bounded) {
      num.add(f.range_hi() * u[1]);
      for (std::size_t k = 1; k < cells; ++k) {
        num.add(pre.g_at[k] * (u[k + 1] - u[k]));
      }
      rep.certified = true;
    } else {
      // First cell: the prefix mean tracks f itself there, so scale the
      // exact first-cell integral of f by the local mean-to-value ratio.
      num.add(pre.g_at[1] / f(u[1]) * pre.f_int[1]);
      for (std::size_t k = 1; k < cells; ++k) {
        num.add(pre.g_mid[k] * (u[k + 1] - u[k]));
      }
      rep.certified = false;
    }
    rep.numerator = num.sum;
    rep.denominator = pre.f_int[cells];
    rep.ratio = rep.numerator / rep.denominator;
    rep.margin = margin_against(rep.reference, rep.ratio);
    return rep;
  }

  int dev_grid = std::max(16, std::min(grid, 384));
  std::vector<double> u = outer_boundaries(f, dev_grid, cfg);
  double tail_mass = 0.0;
  std::vector<double> g =
      deviation_prefixes(f, mean.spec(), mean.root_options(), u, &tail_mass);
  std::size_t cells = u.size() - 1;
  double head_mass = first_cell_integral(
      f, [](double v) { return v; }, u[1], cfg, "the denominator integral");
  // The node sums already cover the first cell; swap in the adaptive value.
  double first_nodes = 0.0;
  {
    double step = (u[1] - u[0]) / 4.0;
    for (int sub = 0; sub < 4; ++sub) {
      first_nodes += f(u[0] + (sub + 0.5) * step) * step;
    }
  }
  rep.denominator = tail_mass - first_nodes + head_mass;
  KahanSum num;
  if (nonincreasing && bounded) {
    num.add(f.range_hi() * u[1]);
    for (std::size_t k = 1; k < cells; ++k) {
      num.add(g[k] * (u[k + 1] - u[k]));
    }
    rep.certified = true;
  } else {
    num.add(g[1] * u[1]);
    for (std::size_t k = 1; k < cells; ++k) {
      num.add(0.5 * (g[k] + g[k + 1]) * (u[k + 1] - u[k]));
    }
    rep.certified = false;
  }
  rep.numerator = num.sum;
  rep.ratio = rep.numerator / rep.denominator;
  rep.margin = margin_against(rep.reference, rep.ratio);
  return rep;
}

std::vector<HardyReport> sharpness_sweep(const IntegralMeanSpec& mean,
                                         FunctionFamily family,
                                         const std::vector<double>& params,
                                         double s, int grid,
                                         const QuadratureConfig& cfg) {
  if (params.empty()) {
    throw std::invalid_argument("sharpness_sweep: empty parameter list");
  }
  std::vector<HardyReport> out;
  out.reserve(params.size());
  for (double param : params) {
    FunctionHandle h = [&]() {
      switch (family) {
        case FunctionFamily::Constant:
          return FunctionHandle::constant(param, s);
        case FunctionFamily::PowerDecay:
          return FunctionHandle::power_decay(param, s);
        case FunctionFamily::Exponential:
          return FunctionHandle::exponential(param, s);
        case FunctionFamily::StepProfile:
          return FunctionHandle::step_profile(
              static_cast<int>(std::lround(param)), s);
      }
      throw std::invalid_argument("sharpness_sweep: unknown family");
    }();
    out.push_back(hardy_functional(mean, h, grid, cfg));
  }
  return out;
}

DiscreteHardyResult discrete_hardy_check(const WeightedMeanFn& mean,
                                         const std::vector<double>& entries,
                                         const std::vector<double>& weights,
                                         std::size_t n) {
  if (n < 1 || n > entries.size() || entries.size() != weights.size()) {
    throw std::invalid_argument(
        "discrete_hardy_check: need 1 <= n <= len(entries) = len(weights)");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!(entries[i] > 0.0) || !(weights[i] > 0.0)) {
      throw std::invalid_argument(
          "discrete_hardy_check: entries and weights must be positive");
    }
  }
  DiscreteHardyResult out;
  std::vector<double> xs, ws;
  xs.reserve(n);
  ws.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs.push_back(entries[i]);
    ws.push_back(weights[i]);
    out.lhs += weights[i] * mean(WeightedSample(xs, ws));
    out.rhs += weights[i] * entries[i];
  }
  out.ratio = out.lhs / out.rhs;
  return out;
}

}  // namespace hardymeans

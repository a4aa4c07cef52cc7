#include "hardymeans/integral_means.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <vector>

namespace hardymeans {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::vector<double> cell_boundaries(double a, double b, int cells) {
  std::vector<double> bp(static_cast<std::size_t>(cells) + 1);
  for (int i = 0; i <= cells; ++i) {
    bp[static_cast<std::size_t>(i)] = a + (b - a) * i / cells;
  }
  bp.front() = a;
  bp.back() = b;
  return bp;
}

StepFunction envelope(const FunctionHandle& f, int cells, bool upper) {
  if (cells < 1) {
    throw std::invalid_argument("envelope: need at least one cell");
  }
  std::vector<double> bp = cell_boundaries(f.domain_begin(), f.domain_end(), cells);
  std::vector<double> vals(static_cast<std::size_t>(cells));

  if (f.is_step()) {
    // Per-cell extrema are exact for step inputs; no declaration needed.
    const StepFunction& sf = f.step();
    const auto& t = sf.breakpoints();
    std::size_t j = 0;
    for (int i = 0; i < cells; ++i) {
      double c0 = bp[static_cast<std::size_t>(i)];
      double c1 = bp[static_cast<std::size_t>(i) + 1];
      while (t[j + 1] <= c0) ++j;
      double mn = kInf, mx = -kInf;
      std::size_t k = j;
      while (k < sf.piece_count() && t[k] < c1) {
        mn = std::min(mn, sf.values()[k]);
        mx = std::max(mx, sf.values()[k]);
        if (t[k + 1] >= c1) break;
        ++k;
      }
      vals[static_cast<std::size_t>(i)] = upper ? mx : mn;
      j = k;
    }
    return StepFunction(std::move(bp), std::move(vals));
  }

  if (f.monotonicity() == Monotonicity::Unknown) {
    throw std::invalid_argument(
        "envelope: evaluator handles need a declared monotonicity (supply "
        "general functions as explicit step functions)");
  }
  std::vector<double> ends(static_cast<std::size_t>(cells) + 1);
  for (int i = 0; i <= cells; ++i) {
    ends[static_cast<std::size_t>(i)] = f(bp[static_cast<std::size_t>(i)]);
  }
  for (int i = 0; i < cells; ++i) {
    double lo = ends[static_cast<std::size_t>(i)];
    double hi = ends[static_cast<std::size_t>(i) + 1];
    double slack = 1e-12 * (1.0 + std::abs(lo) + std::abs(hi));
    bool ok = f.monotonicity() == Monotonicity::Nonincreasing
                  ? hi <= lo + slack
                  : lo <= hi + slack;
    if (!ok) {
      throw std::domain_error(
          "envelope: sampled values violate the declared monotonicity");
    }
    vals[static_cast<std::size_t>(i)] = upper ? std::max(lo, hi)
                                              : std::min(lo, hi);
  }
  return StepFunction(std::move(bp), std::move(vals));
}

/// Pull the handle back onto the unit interval; integral means are affine
/// reparametrization invariant, so all quadrature runs there.
std::function<double(double)> unit_pullback(const FunctionHandle& f) {
  double a = f.domain_begin();
  double span = f.domain_end() - a;
  return [&f, a, span](double u) {
    double v = f(a + span * u);
    if (!(v > 0.0)) {
      throw std::domain_error(
          "integral mean: the integrand must be strictly positive");
    }
    return v;
  };
}

double step_gini(double p, double q, const StepFunction& sf) {
  return integral_mean_of_step(gini_mean_fn(p, q), sf);
}

}  // namespace

StepFunction lower_envelope(const FunctionHandle& f, int cells) {
  return envelope(f, cells, false);
}

StepFunction upper_envelope(const FunctionHandle& f, int cells) {
  return envelope(f, cells, true);
}

std::vector<EnvelopeEstimate> estimate_integral_mean(
    const WeightedMeanFn& mean, const FunctionHandle& f,
    const std::vector<int>& cell_schedule) {
  if (cell_schedule.empty()) {
    throw std::invalid_argument("estimate_integral_mean: empty grid schedule");
  }
  std::vector<EnvelopeEstimate> out;
  out.reserve(cell_schedule.size());
  for (int cells : cell_schedule) {
    EnvelopeEstimate e;
    e.cells = cells;
    e.lower = integral_mean_of_step(mean, lower_envelope(f, cells));
    e.upper = integral_mean_of_step(mean, upper_envelope(f, cells));
    if (!(e.lower <= e.upper)) {
      throw std::domain_error(
          "estimate_integral_mean: lower estimate exceeds upper (mean is not "
          "monotone)");
    }
    out.push_back(e);
  }
  return out;
}

double integral_gini(double p, double q, const FunctionHandle& f,
                     const QuadratureConfig& cfg) {
  if (f.is_step()) return step_gini(p, q, f.step());
  auto g = unit_pullback(f);
  auto require = [](const QuadratureResult& r, const char* what) {
    if (!r.converged) {
      throw integrability_error(std::string("integral_gini: ") + what +
                                " did not converge (error estimate " +
                                fmt(r.error_estimate) + ")");
    }
    return r.value;
  };
  if (p == q) {
    double num = require(
        integrate_unit(
            [&g, p](double u) {
              double v = g(u);
              return std::pow(v, p) * std::log(v);
            },
            cfg),
        "the weighted log integral");
    double den = require(
        integrate_unit([&g, p](double u) { return std::pow(g(u), p); }, cfg),
        "the power integral");
    return std::exp(num / den);
  }
  double num = require(
      integrate_unit([&g, p](double u) { return std::pow(g(u), p); }, cfg),
      "the p-power integral");
  double den = require(
      integrate_unit([&g, q](double u) { return std::pow(g(u), q); }, cfg),
      "the q-power integral");
  return std::pow(num / den, 1.0 / (p - q));
}

namespace {

/// Root of the strictly decreasing map y -> sum_i w_i E(fv_i, y) over the
/// discrete bracket [min fv, max fv]. A geometric pre-scan shrinks wide
/// brackets so the bisection budget is never the binding constraint.
double frozen_grid_root(const DeviationSpec& spec,
                        const std::vector<double>& fv,
                        const std::vector<double>& w, std::size_t count,
                        const RootFindOptions& root, double tol) {
  double lo = kInf, hi = -kInf;
  for (std::size_t i = 0; i < count; ++i) {
    lo = std::min(lo, fv[i]);
    hi = std::max(hi, fv[i]);
  }
  if (lo == hi) return lo;

  auto residual = [&](double y) {
    double sum = 0.0;
    for (std::size_t i = 0; i < count; ++i) sum += w[i] * spec(fv[i], y);
    return sum;
  };

  if (lo > 0.0 && hi / lo > 16.0) {
    const int n = 64;
    double step = std::log(hi / lo) / n;
    double prev = lo;
    for (int k = 1; k < n; ++k) {
      double y = lo * std::exp(step * k);
      if (residual(y) <= 0.0) {
        hi = y;
        break;
      }
      prev = y;
    }
    lo = prev;
  }

  for (int it = 0; it < root.max_iter; ++it) {
    double mid = 0.5 * (lo + hi);
    if (0.5 * (hi - lo) <= tol) return mid;
    if (hi - lo <=
        8.0 * std::numeric_limits<double>::epsilon() * std::abs(mid)) {
      return mid;
    }
    double r = residual(mid);
    if (r == 0.0) return mid;
    if (r > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double integral_deviation_mean(const DeviationSpec& spec,
                               const FunctionHandle& f,
                               const QuadratureConfig& cfg,
                               const RootFindOptions& root) {
  if (!(root.tol > 0.0)) {
    throw std::invalid_argument("integral_deviation_mean: tol must be positive");
  }
  if (!(f.range_lo() <= f.range_hi())) {
    throw std::invalid_argument(
        "integral_deviation_mean: invalid declared range");
  }
  if (f.range_lo() == f.range_hi()) return f.range_lo();
  if (f.is_step()) {
    return integral_mean_of_step(deviation_mean_fn(spec, root), f.step());
  }

  auto g = unit_pullback(f);
  // The quadrature floor keeps grid refinement honest: the frozen sums
  // cannot stabilize much below the midpoint rule's own accuracy.
  double tol_eff = std::max(root.tol, 1e-10);
  double bisect_tol = 0.25 * tol_eff;

  const int first_level = 5;
  const int last_level = std::min(cfg.max_depth, 13);
  double prev_root = std::numeric_limits<double>::quiet_NaN();
  double prev_diff = kInf;
  for (int level = first_level; level <= last_level; ++level) {
    std::vector<QuadratureNode> nodes = frozen_unit_grid(g, level, cfg);
    std::vector<double> fv(nodes.size());
    std::vector<double> w(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      fv[i] = g(nodes[i].t);
      w[i] = nodes[i].weight;
    }
    double r = frozen_grid_root(spec, fv, w, nodes.size(), root, bisect_tol);
    if (level > first_level) {
      double diff = std::abs(r - prev_root);
      if (diff <= tol_eff * std::max(1.0, std::abs(r))) {
        // One Richardson step on the root squeezes out the leading
        // midpoint-rule error.
        return r + (r - prev_root) / 3.0;
      }
      prev_diff = diff;
    }
    prev_root = r;
  }
  throw integrability_error(
      "integral_deviation_mean: root did not stabilize under grid refinement "
      "(last change " +
      fmt(prev_diff) + ")");
}

}  // namespace hardymeans

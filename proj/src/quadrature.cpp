#include "hardymeans/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <vector>

namespace hardymeans {

namespace {

constexpr int kMinOctaves = 20;
constexpr int kMaxOctaves = 1100;
constexpr int kRecentWindow = 8;
constexpr long kEvalBudget = 100000000;

void validate(const QuadratureConfig& cfg) {
  if (!(cfg.tol > 0.0) || !(cfg.grading_ratio > 0.0) ||
      !(cfg.grading_ratio < 1.0) || cfg.max_depth < 1) {
    throw std::invalid_argument(
        "QuadratureConfig: need tol > 0, 0 < grading_ratio < 1, max_depth >= 1");
  }
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

struct OctaveScan {
  double total = 0.0;
  double abs_total = 0.0;
  double tail_estimate = 0.0;
  int octaves = 0;
  long evaluations = 0;
  bool tail_ok = false;
  bool diverged = false;
  bool floor_hit = false;
  bool nonfinite = false;
  double nonfinite_at = 0.0;
};

/// One scan of [0, 1) at m midpoint cells per geometric octave. Octaves
/// extend toward 0 until three consecutive tail estimates fall below
/// rel_tail_tol of the accumulated |mass|, contributions refuse to decay
/// (divergent), or breakpoints hit the floating-point floor.
OctaveScan scan_octaves(const std::function<double(double)>& h, int m,
                        double ratio, double rel_tail_tol,
                        std::vector<QuadratureNode>* sink) {
  OctaveScan out;
  std::vector<double> recent;
  int consecutive_ok = 0;
  double t_hi = 1.0;
  double t_lo = 0.0;
  for (int j = 0; j < kMaxOctaves; ++j) {
    t_lo = t_hi * ratio;
    if (!(t_lo > 0.0) || !(t_lo < t_hi)) {
      out.floor_hit = true;
      break;
    }
    double w = (t_hi - t_lo) / m;
    double c = 0.0;
    for (int k = 0; k < m; ++k) {
      double t = t_lo + (k + 0.5) * w;
      double y = h(t);
      // An overflowing or undefined sample would poison every later sum and
      // defeat the decay detectors, so stop at the first one.
      if (!std::isfinite(y)) {
        out.nonfinite = true;
        out.nonfinite_at = t;
        out.evaluations += k + 1;
        return out;
      }
      c += y;
      if (sink) sink->push_back({t, w});
    }
    c *= w;
    out.evaluations += m;
    out.total += c;
    out.abs_total += std::abs(c);
    out.octaves = j + 1;

    recent.push_back(std::abs(c));
    if (static_cast<int>(recent.size()) > kRecentWindow + 1) {
      recent.erase(recent.begin());
    }
    double worst = 0.0;
    bool all_near_one = static_cast<int>(recent.size()) == kRecentWindow + 1;
    bool all_growing = static_cast<int>(recent.size()) >= 5;
    for (std::size_t i = 1; i < recent.size(); ++i) {
      double r;
      if (recent[i - 1] == 0.0) {
        r = recent[i] == 0.0 ? 0.0
                             : std::numeric_limits<double>::infinity();
      } else {
        r = recent[i] / recent[i - 1];
      }
      worst = std::max(worst, r);
      if (r < 1.0 - 1e-9) all_near_one = false;
      if (r < 1.05) all_growing = false;
    }
    out.tail_estimate = worst < 1.0
                            ? recent.back() * worst / (1.0 - worst)
                            : std::numeric_limits<double>::infinity();

    double mass = std::max(out.abs_total, std::numeric_limits<double>::min());
    if (j + 1 >= kMinOctaves && out.tail_estimate <= rel_tail_tol * mass) {
      if (++consecutive_ok >= 3) {
        out.tail_ok = true;
        break;
      }
    } else {
      consecutive_ok = 0;
    }
    if ((j + 1 >= 48 && all_near_one) ||
        (j + 1 >= 10 && all_growing && recent.back() > 0.0)) {
      out.diverged = true;
      break;
    }
    t_hi = t_lo;
  }
  if (!out.tail_ok && !out.diverged) out.floor_hit = true;
  if (out.tail_ok && t_lo > 0.0) {
    // Single midpoint cell for the residual [0, t_lo); its size is already
    // below the tail budget.
    double t = 0.5 * t_lo;
    double y = h(t);
    out.evaluations += 1;
    if (!std::isfinite(y)) {
      out.nonfinite = true;
      out.nonfinite_at = t;
      return out;
    }
    double c = y * t_lo;
    out.total += c;
    out.abs_total += std::abs(c);
    if (sink) sink->push_back({t, t_lo});
  }
  return out;
}

[[noreturn]] void raise(const OctaveScan& sc) {
  if (sc.diverged) {
    throw integrability_error(
        "divergent integral: octave contributions do not decay (partial sum " +
        fmt(sc.total) + ")");
  }
  if (sc.nonfinite) {
    throw integrability_error(
        "integrand is not finite at t = " + fmt(sc.nonfinite_at) +
        "; the endpoint behavior cannot be resolved in double precision");
  }
  throw integrability_error(
      "integral tail numerically unreachable below the floating-point scale "
      "(tail estimate " +
      fmt(sc.tail_estimate) + ")");
}

}  // namespace

QuadratureResult integrate_unit(const std::function<double(double)>& h,
                                const QuadratureConfig& cfg) {
  validate(cfg);
  const double rel_tail = 0.02 * cfg.tol;
  QuadratureResult res;
  std::vector<std::vector<double>> rows;
  std::vector<double> diag;
  double scale = std::numeric_limits<double>::min();
  for (int level = 0; level <= cfg.max_depth && level < 26; ++level) {
    OctaveScan sc =
        scan_octaves(h, 1 << level, cfg.grading_ratio, rel_tail, nullptr);
    res.evaluations += sc.evaluations;
    if (sc.diverged || sc.floor_hit || sc.nonfinite) raise(sc);
    scale = std::max(scale, sc.abs_total);

    std::vector<double> row(static_cast<std::size_t>(level) + 1);
    row[0] = sc.total;
    for (int i = 1; i <= level; ++i) {
      double k = std::pow(4.0, i) - 1.0;
      row[i] = row[i - 1] + (row[i - 1] - rows[level - 1][i - 1]) / k;
    }
    rows.push_back(row);
    diag.push_back(row.back());
    res.levels_used = level + 1;

    if (level >= 3 && std::abs(rows[level][0]) >
                          2.0 * std::abs(rows[level - 3][0]) &&
        std::abs(rows[level][0]) > std::abs(rows[level - 1][0]) &&
        std::abs(rows[level - 1][0]) > std::abs(rows[level - 2][0])) {
      throw integrability_error(
          "divergent integral: refinement estimates grow by more than a "
          "factor 2 across three levels (last " +
          fmt(rows[level][0]) + ")");
    }
    if (level >= 2) {
      res.error_estimate = std::abs(diag[level] - diag[level - 1]);
      if (res.error_estimate <= cfg.tol * scale) {
        res.value = diag[level];
        res.converged = true;
        return res;
      }
    }
    if (res.evaluations > kEvalBudget) break;
  }
  res.value = diag.back();
  res.converged = false;
  return res;
}

QuadratureResult integrate(const std::function<double(double)>& h, double a,
                           double b, const QuadratureConfig& cfg) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    throw std::invalid_argument("integrate: need a finite interval a < b");
  }
  double span = b - a;
  QuadratureResult res =
      integrate_unit([&h, a, span](double u) { return h(a + span * u); }, cfg);
  res.value *= span;
  res.error_estimate *= span;
  return res;
}

std::vector<QuadratureNode> frozen_unit_grid(
    const std::function<double(double)>& reference, int level,
    const QuadratureConfig& cfg) {
  validate(cfg);
  if (level < 0 || level > 22) {
    throw std::invalid_argument("frozen_unit_grid: level out of range");
  }
  std::vector<QuadratureNode> nodes;
  OctaveScan sc = scan_octaves(reference, 1 << level, cfg.grading_ratio,
                               0.02 * cfg.tol, &nodes);
  if (sc.diverged || sc.floor_hit || sc.nonfinite) raise(sc);
  std::sort(nodes.begin(), nodes.end(),
            [](const QuadratureNode& x, const QuadratureNode& y) {
              return x.t < y.t;
            });
  return nodes;
}

}  // namespace hardymeans

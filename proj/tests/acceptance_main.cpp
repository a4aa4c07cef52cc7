// Acceptance gate: eight numbered criteria, one verdict line each, with the
// tolerances pinned below. Exit status is the number of failed criteria.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hardymeans/hardy.hpp"

using namespace hardymeans;

namespace {

// Pinned gate tolerances.
constexpr double kTolGiniConstant = 1e-12;     // criterion 1, relative
constexpr double kTolConcaveConstant = 1e-8;   // criterion 2, absolute
constexpr double kSharpnessFloor = 0.98;       // criterion 3, of C_p
constexpr double kUpperSlack = 1e-3;           // criterion 3, above C_p
constexpr double kTolFamilyOracle = 1e-10;     // criterion 3, relative
constexpr double kTolCarleman = 1e-4;          // criterion 4, absolute
constexpr double kTolDiscreteOracle = 1e-10;   // criterion 5, relative
constexpr double kTolIntegralOracle = 1e-7;    // criterion 5, absolute
constexpr double kEnvelopeGap = 2e-3;          // criterion 6
constexpr double kNestSlack = 1e-15;           // criterion 6
constexpr double kTolAxiomTight = 1e-13;       // criterion 8, relative
constexpr double kTolMonotone = 1e-12;         // criterion 8, relative
constexpr double kTimeConcave = 1.0;           // criterion 2 budget, seconds
constexpr double kTimeSharpness = 30.0;        // criterion 3 budget, seconds
constexpr double kTimeCarleman = 10.0;         // criterion 4 budget, seconds

int g_failed = 0;

void verdict(int n, bool ok, const std::string& label,
             const std::string& detail = "") {
  if (!ok) ++g_failed;
  std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", n,
              label.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

bool close_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}

struct SampleGen {
  std::mt19937 rng;
  explicit SampleGen(unsigned seed) : rng(seed) {}
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  }
  int uniform_int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  }
  WeightedSample sample(int max_n = 8, double lo = 0.1, double hi = 10.0) {
    int n = uniform_int(1, max_n);
    std::vector<double> xs(n), ws(n);
    for (int i = 0; i < n; ++i) {
      xs[i] = uniform(lo, hi);
      ws[i] = uniform(0.1, 2.0);
    }
    return WeightedSample(std::move(xs), std::move(ws));
  }
};

void criterion_1_closed_form_constants() {
  bool ok = hardy_constant_power(0.5).value() == 4.0;
  ok = ok && hardy_constant_power(0.0).value() == std::exp(1.0);
  double gini = hardy_constant_gini(-1.0, 0.5).value();
  double ref = std::pow(4.0, 2.0 / 3.0);
  ok = ok && std::abs(gini - ref) <= kTolGiniConstant * ref;
  verdict(1, ok, "closed-form Hardy constants (power 0.5 exact, power 0 = e, "
                 "Gini(-1,0.5) to 1e-12)");
}

void criterion_2_concave_constants() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  double worst = 0.0;
  for (int i = 1; i <= 9; ++i) {
    double p = 0.1 * i;
    double got = concave_deviation_hardy_constant(
                     [p](double u) { return (std::pow(u, p) - 1.0) / p; })
                     .value();
    double want = std::pow(1.0 - p, -1.0 / p);
    worst = std::max(worst, std::abs(got - want));
    ok = ok && std::abs(got - want) <= kTolConcaveConstant;
  }
  double log_c = concave_deviation_hardy_constant(
                     [](double u) { return std::log(u); })
                     .value();
  worst = std::max(worst, std::abs(log_c - std::exp(1.0)));
  ok = ok && std::abs(log_c - std::exp(1.0)) <= kTolConcaveConstant;
  double dt = seconds_since(t0);
  ok = ok && dt < kTimeConcave;
  char detail[96];
  std::snprintf(detail, sizeof(detail), "worst |error| %.2e, %.2f s", worst,
                dt);
  verdict(2, ok, "concave-deviation constants match (1-p)^(-1/p) and e to "
                 "1e-8 in under 1 s", detail);
}

void criterion_3_sharpness() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::vector<double> params{-0.1, -0.3, -0.5, -0.7, -0.9, -0.99, -0.999};
  for (double p : {0.25, 0.5, 0.75}) {
    double cp = hardy_constant_power(p).value();
    std::vector<HardyReport> rows = sharpness_sweep(
        IntegralMeanSpec::gini(p, 0.0), FunctionFamily::PowerDecay, params);
    for (const HardyReport& r : rows) {
      ok = ok && r.ratio <= cp + kUpperSlack;
      // Independent family oracle: the ratio of t^a under the p-power mean.
      double oracle = std::pow(r.param * p + 1.0, -1.0 / p);
      ok = ok && close_rel(r.ratio, oracle, kTolFamilyOracle);
    }
    ok = ok && rows.back().ratio >= kSharpnessFloor * cp;
  }
  double dt = seconds_since(t0);
  ok = ok && dt < kTimeSharpness;
  char detail[64];
  std::snprintf(detail, sizeof(detail), "%.2f s", dt);
  verdict(3, ok, "power-decay sweeps reach 0.98*C_p at a=-0.999 and never "
                 "exceed C_p+1e-3 for p in {0.25,0.5,0.75}", detail);
}

void criterion_4_carleman() {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<HardyReport> rows = sharpness_sweep(
      IntegralMeanSpec::gini(0.0, 0.0), FunctionFamily::PowerDecay,
      {-0.5, -0.9, -0.99});
  bool ok = rows.size() == 3;
  double worst = 0.0;
  for (const HardyReport& r : rows) {
    double want = std::exp(-r.param);
    worst = std::max(worst, std::abs(r.ratio - want));
    ok = ok && std::abs(r.ratio - want) <= kTolCarleman;
    ok = ok && r.ratio < std::exp(1.0);
  }
  double dt = seconds_since(t0);
  ok = ok && dt < kTimeCarleman;
  char detail[96];
  std::snprintf(detail, sizeof(detail), "worst |error| %.2e, %.2f s", worst,
                dt);
  verdict(4, ok, "geometric-mean ratios of t^a equal e^(-a) to 1e-4 and stay "
                 "below e", detail);
}

void criterion_5_oracle_equivalence() {
  bool ok = true;
  SampleGen gen(20240505);
  double worst_discrete = 0.0;
  for (int i = 0; i < 500; ++i) {
    WeightedSample s = gen.sample();
    double p = gen.uniform(-3.0, 3.0);
    double q = gen.uniform(-3.0, 3.0);
    double via_root = deviation_mean(DeviationSpec::gini(p, q), s);
    double closed = gini_mean(p, q, s);
    double err = std::abs(via_root - closed) / std::max(1.0, std::abs(closed));
    worst_discrete = std::max(worst_discrete, err);
    ok = ok && err <= kTolDiscreteOracle;
  }

  double worst_integral = 0.0;
  RootFindOptions root;
  root.tol = 1e-8;
  for (int i = 0; i < 50; ++i) {
    FunctionHandle h = [&]() {
      if (i % 2 == 0) {
        return FunctionHandle::exponential(gen.uniform(0.3, 3.0));
      }
      double c0 = gen.uniform(0.5, 2.0);
      double c1 = gen.uniform(0.5, 3.0);
      double g = gen.uniform(0.5, 2.0);
      return FunctionHandle::analytic(
          [c0, c1, g](double t) { return c0 + c1 * std::pow(t, g); }, 0.0, 1.0,
          Monotonicity::Nondecreasing, c0, c0 + c1);
    }();
    double p = gen.uniform(-2.0, 2.0);
    double q = (i % 5 == 0) ? p : gen.uniform(-2.0, 2.0);
    double via_root =
        integral_deviation_mean(DeviationSpec::gini(p, q), h, {}, root);
    double closed = integral_gini(p, q, h);
    double err = std::abs(via_root - closed);
    worst_integral = std::max(worst_integral, err);
    ok = ok && err <= kTolIntegralOracle;
  }
  char detail[96];
  std::snprintf(detail, sizeof(detail), "worst: discrete %.2e, integral %.2e",
                worst_discrete, worst_integral);
  verdict(5, ok, "deviation-route means match Gini closed forms (500 samples "
                 "to 1e-10, 50 handles to 1e-7)", detail);
}

void criterion_6_envelope_convergence() {
  FunctionHandle f = FunctionHandle::analytic(
      [](double t) { return t; }, 0.0, 1.0, Monotonicity::Nondecreasing, 0.0,
      1.0);
  std::vector<int> schedule;
  for (int cells = 2; cells <= 1024; cells *= 2) schedule.push_back(cells);
  std::vector<EnvelopeEstimate> est =
      estimate_integral_mean(power_mean_fn(2.0), f, schedule);
  const double target = 1.0 / std::sqrt(3.0);
  bool ok = est.size() == schedule.size();
  for (std::size_t i = 0; ok && i < est.size(); ++i) {
    ok = est[i].lower <= target && target <= est[i].upper;
    if (i > 0) {
      ok = ok && est[i].lower >= est[i - 1].lower - kNestSlack;
      ok = ok && est[i].upper <= est[i - 1].upper + kNestSlack;
    }
  }
  ok = ok && est.back().gap() < kEnvelopeGap;
  char detail[64];
  std::snprintf(detail, sizeof(detail), "final gap %.2e", est.back().gap());
  verdict(6, ok, "envelope brackets for f(t)=t under the quadratic mean nest "
                 "and close below 2e-3 at K=1024", detail);
}

void criterion_7_rearrangement_suite() {
  SampleGen gen(20240707);
  bool ok = true;
  const double unit = 1.0 / (1 << 20);
  for (int iter = 0; iter < 1000 && ok; ++iter) {
    int n = gen.uniform_int(1, 8);
    std::vector<double> bp{0.0};
    std::vector<double> vals;
    for (int i = 0; i < n; ++i) {
      bp.push_back(bp.back() + gen.uniform_int(1, 4096) * unit);
      vals.push_back(static_cast<double>(gen.uniform_int(1, 16)));
    }
    StepFunction f(bp, vals);
    StepFunction r = decreasing_rearrangement(f);

    for (std::size_t i = 0; i + 1 < r.piece_count(); ++i) {
      ok = ok && r.values()[i] >= r.values()[i + 1];
    }
    StepFunction rr = decreasing_rearrangement(r);
    ok = ok && rr.breakpoints() == r.breakpoints() && rr.values() == r.values();
    ok = ok && is_equidistributed(f, r);
    for (auto [p, q] : {std::pair{2.0, 1.0}, std::pair{1.0, 0.0},
                        std::pair{0.0, 0.0}, std::pair{-1.0, 1.0}}) {
      WeightedMeanFn mean = gini_mean_fn(p, q);
      ok = ok && integral_mean_of_step(mean, r) ==
                     integral_mean_of_step(mean, f);
    }
  }
  verdict(7, ok, "1000 rearrangements: nonincreasing, idempotent, "
                 "equidistributed, Gini means preserved bit for bit");
}

void criterion_8_mean_axioms() {
  bool ok_value = true, ok_homog = true, ok_perm = true, ok_rep = true,
       ok_mono = true;

  {
    SampleGen gen(101);
    for (int i = 0; i < 1000; ++i) {
      WeightedSample s = gen.sample();
      double p = gen.uniform(-3.0, 3.0), q = gen.uniform(-3.0, 3.0);
      double m = gini_mean(p, q, s);
      ok_value = ok_value && m >= s.min_entry() * (1.0 - kTolMonotone) &&
                 m <= s.max_entry() * (1.0 + kTolMonotone);
    }
  }
  {
    SampleGen gen(102);
    for (int i = 0; i < 1000; ++i) {
      WeightedSample s = gen.sample();
      double p = gen.uniform(-3.0, 3.0), q = gen.uniform(-3.0, 3.0);
      double lam = gen.uniform(0.25, 4.0);
      std::vector<double> ws = s.weights;
      for (double& w : ws) w *= lam;
      double a = gini_mean(p, q, s);
      double b = gini_mean(p, q, WeightedSample(s.entries, ws));
      ok_homog = ok_homog && close_rel(a, b, kTolAxiomTight);
    }
  }
  {
    SampleGen gen(103);
    for (int i = 0; i < 1000; ++i) {
      WeightedSample s = gen.sample();
      double p = gen.uniform(-3.0, 3.0), q = gen.uniform(-3.0, 3.0);
      std::vector<std::size_t> idx(s.entries.size());
      for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
      std::shuffle(idx.begin(), idx.end(), gen.rng);
      std::vector<double> xs, ws;
      for (std::size_t k : idx) {
        xs.push_back(s.entries[k]);
        ws.push_back(s.weights[k]);
      }
      ok_perm = ok_perm && gini_mean(p, q, s) ==
                               gini_mean(p, q, WeightedSample(xs, ws));
    }
  }
  {
    SampleGen gen(104);
    for (int i = 0; i < 1000; ++i) {
      WeightedSample s = gen.sample();
      double p = gen.uniform(-3.0, 3.0), q = gen.uniform(-3.0, 3.0);
      // Split one entry into two halves carrying half the weight each.
      std::size_t k =
          static_cast<std::size_t>(gen.uniform_int(0, static_cast<int>(s.entries.size()) - 1));
      std::vector<double> xs = s.entries, ws = s.weights;
      ws[k] *= 0.5;
      xs.push_back(s.entries[k]);
      ws.push_back(ws[k]);
      double a = gini_mean(p, q, s);
      double b = gini_mean(p, q, WeightedSample(xs, ws));
      // The closed form raises a power-sum ratio to 1/(p-q), which scales
      // its last-bit rounding by that exponent; the bound must follow.
      double amp = std::min(1e-10, 1e-15 * (4.0 + 1.0 / std::abs(p - q)));
      ok_rep = ok_rep && close_rel(a, b, std::max(kTolAxiomTight, amp));
    }
  }
  {
    SampleGen gen(105);
    for (int i = 0; i < 1000; ++i) {
      WeightedSample s = gen.sample();
      double p = gen.uniform(-3.0, 0.0), q = gen.uniform(0.0, 3.0);
      double pp = p + gen.uniform(0.0, 3.0);
      double qq = q + gen.uniform(0.0, 3.0);
      if (pp * qq > 0.0) pp = 0.0;  // keep both pairs in the pq <= 0 regime
      double a = gini_mean(p, q, s);
      double b = gini_mean(pp, qq, s);
      ok_mono = ok_mono && a <= b * (1.0 + kTolMonotone) + kTolMonotone;
    }
  }

  bool ok = ok_value && ok_homog && ok_perm && ok_rep && ok_mono;
  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "mean-value %s, homogeneity %s, permutation %s, repetition "
                "%s, monotonicity %s",
                ok_value ? "ok" : "FAIL", ok_homog ? "ok" : "FAIL",
                ok_perm ? "ok" : "FAIL", ok_rep ? "ok" : "FAIL",
                ok_mono ? "ok" : "FAIL");
  verdict(8, ok, "mean axioms hold on 1000 randomized cases per property",
          detail);
}

}  // namespace

int main() {
  criterion_1_closed_form_constants();
  criterion_2_concave_constants();
  criterion_3_sharpness();
  criterion_4_carleman();
  criterion_5_oracle_equivalence();
  criterion_6_envelope_convergence();
  criterion_7_rearrangement_suite();
  criterion_8_mean_axioms();
  if (g_failed == 0) {
    std::printf("acceptance: all 8 criteria passed\n");
  } else {
    std::printf("acceptance: %d criterion(s) failed\n", g_failed);
  }
  return g_failed;
}

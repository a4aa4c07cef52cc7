#include "hardymeans/step_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include <json.hpp>

namespace hardymeans {

StepFunction::StepFunction(std::vector<double> breakpoints,
                           std::vector<double> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (breakpoints_.size() < 2) {
    throw std::invalid_argument("StepFunction: need at least two breakpoints");
  }
  if (values_.size() + 1 != breakpoints_.size()) {
    throw std::invalid_argument(
        "StepFunction: values must be one shorter than breakpoints");
  }
  for (double t : breakpoints_) {
    if (!std::isfinite(t)) {
      throw std::invalid_argument("StepFunction: non-finite breakpoint");
    }
  }
  for (double v : values_) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("StepFunction: non-finite value");
    }
  }
  for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i] < breakpoints_[i + 1])) {
      throw std::invalid_argument(
          "StepFunction: breakpoints must be strictly increasing");
    }
  }
}

StepFunction StepFunction::uniform(std::vector<double> values, double a,
                                   double b) {
  if (values.empty()) {
    throw std::invalid_argument("StepFunction::uniform: no values");
  }
  if (!(a < b)) {
    throw std::invalid_argument("StepFunction::uniform: need a < b");
  }
  std::size_t n = values.size();
  std::vector<double> bp(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    bp[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n);
  }
  bp.front() = a;
  bp.back() = b;
  return StepFunction(std::move(bp), std::move(values));
}

double StepFunction::min_value() const {
  return *std::min_element(values_.begin(), values_.end());
}

double StepFunction::max_value() const {
  return *std::max_element(values_.begin(), values_.end());
}

double StepFunction::value_at(double t) const {
  if (!(t >= domain_begin()) || !(t < domain_end())) {
    throw std::invalid_argument("StepFunction::value_at: t outside the domain");
  }
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
  return values_[static_cast<std::size_t>(it - breakpoints_.begin()) - 1];
}

StepFunction StepFunction::merged() const {
  std::vector<double> bp{breakpoints_.front()};
  std::vector<double> vals;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!vals.empty() && vals.back() == values_[i]) {
      bp.back() = breakpoints_[i + 1];
    } else {
      vals.push_back(values_[i]);
      bp.push_back(breakpoints_[i + 1]);
    }
  }
  return StepFunction(std::move(bp), std::move(vals));
}

StepFunction StepFunction::from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("step function JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("breakpoints") || !j.contains("values")) {
    throw std::invalid_argument(
        "step function JSON: expected {\"breakpoints\": [...], \"values\": [...]}");
  }
  auto read_array = [](const nlohmann::json& node, const char* name) {
    if (!node.is_array()) {
      throw std::invalid_argument(std::string("step function JSON: ") + name +
                                  " must be an array");
    }
    std::vector<double> out;
    out.reserve(node.size());
    for (const auto& item : node) {
      if (!item.is_number()) {
        throw std::invalid_argument(std::string("step function JSON: ") + name +
                                    " must contain numbers only");
      }
      double v = item.get<double>();
      if (!std::isfinite(v)) {
        throw std::invalid_argument(std::string("step function JSON: ") + name +
                                    " contains a non-finite number");
      }
      out.push_back(v);
    }
    return out;
  };
  return StepFunction(read_array(j["breakpoints"], "breakpoints"),
                      read_array(j["values"], "values"));
}

std::string StepFunction::to_json_text() const {
  nlohmann::json j;
  j["breakpoints"] = breakpoints_;
  j["values"] = values_;
  return j.dump();
}

double total_integral(const StepFunction& f) {
  double sum = 0.0;
  for (std::size_t i = 0; i < f.piece_count(); ++i) {
    sum += f.values()[i] * f.piece_length(i);
  }
  return sum;
}

double integral_mean_of_step(const WeightedMeanFn& mean,
                             const StepFunction& f) {
  std::vector<double> lengths(f.piece_count());
  for (std::size_t i = 0; i < f.piece_count(); ++i) {
    lengths[i] = f.piece_length(i);
  }
  return mean(WeightedSample(f.values(), std::move(lengths)));
}

StepFunction restrict_to(const StepFunction& f, double a, double b) {
  if (!(a < b) || !(a >= f.domain_begin()) || !(b <= f.domain_end())) {
    throw std::invalid_argument(
        "restrict_to: need domain_begin <= a < b <= domain_end");
  }
  std::vector<double> bp{a};
  std::vector<double> vals;
  const auto& t = f.breakpoints();
  for (std::size_t i = 0; i < f.piece_count(); ++i) {
    if (t[i + 1] <= a || t[i] >= b) continue;
    vals.push_back(f.values()[i]);
    bp.push_back(std::min(t[i + 1], b));
  }
  bp.back() = b;
  return StepFunction(std::move(bp), std::move(vals));
}

StepFunction decreasing_rearrangement(const StepFunction& f) {
  std::vector<std::pair<double, double>> pieces(f.piece_count());
  for (std::size_t i = 0; i < f.piece_count(); ++i) {
    pieces[i] = {f.values()[i], f.piece_length(i)};
  }
  std::sort(pieces.begin(), pieces.end(),
            [](const std::pair<double, double>& a,
               const std::pair<double, double>& b) {
              if (a.first != b.first) return a.first > b.first;
              return a.second > b.second;
            });
  std::vector<double> bp{0.0};
  std::vector<double> vals;
  double cum = 0.0;
  for (const auto& [value, length] : pieces) {
    cum += length;
    vals.push_back(value);
    bp.push_back(cum);
  }
  return StepFunction(std::move(bp), std::move(vals));
}

double l1_distance(const StepFunction& f, const StepFunction& g) {
  if (f.domain_begin() != g.domain_begin() ||
      f.domain_end() != g.domain_end()) {
    throw std::invalid_argument("l1_distance: domains must coincide");
  }
  const auto& tf = f.breakpoints();
  const auto& tg = g.breakpoints();
  std::size_t i = 0, j = 0;
  double left = f.domain_begin();
  double sum = 0.0;
  while (i < f.piece_count() && j < g.piece_count()) {
    double right = std::min(tf[i + 1], tg[j + 1]);
    sum += std::abs(f.values()[i] - g.values()[j]) * (right - left);
    if (tf[i + 1] == right) ++i;
    if (tg[j + 1] == right) ++j;
    left = right;
  }
  return sum;
}

ValueRange value_range(const StepFunction& f) {
  return {f.min_value(), f.max_value()};
}

double range_excess(const StepFunction& g, const ValueRange& f_range) {
  if (!(f_range.lo <= f_range.hi)) {
    throw std::invalid_argument("range_excess: inverted range");
  }
  ValueRange rg = value_range(g);
  double left = std::max(0.0, std::min(rg.hi, f_range.lo) - rg.lo);
  double right = std::max(0.0, rg.hi - std::max(rg.lo, f_range.hi));
  return left + right;
}

bool is_equidistributed(const StepFunction& f, const StepFunction& g,
                        double tol) {
  if (f.domain_measure() != g.domain_measure()) return false;
  StepFunction rf = decreasing_rearrangement(f);
  StepFunction rg = decreasing_rearrangement(g);
  // Length roundoff could leave the rearranged domains unequal; unequal
  // measure means not equidistributed either way.
  if (rf.domain_end() != rg.domain_end()) return false;
  return l1_distance(rf, rg) <= tol;
}

StepFunction canonical_reparam(const StepFunction& f) {
  double a = f.domain_begin();
  double m = f.domain_measure();
  std::vector<double> bp(f.breakpoints().size());
  for (std::size_t i = 0; i < bp.size(); ++i) {
    bp[i] = (f.breakpoints()[i] - a) / m;
  }
  bp.front() = 0.0;
  bp.back() = 1.0;
  return StepFunction(std::move(bp), f.values());
}

}  // namespace hardymeans

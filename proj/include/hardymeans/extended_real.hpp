#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace hardymeans {

/// A Hardy constant is not always a number: it can be finite and known,
/// provably infinite, known to be finite without a known value (only an
/// upper bound is certified), or simply not known at all.
class ExtendedReal {
 public:
  enum class Kind { Finite, Infinite, UnknownFinite, Unknown };

  static ExtendedReal finite(double v) { return ExtendedReal(Kind::Finite, v); }
  static ExtendedReal infinite() {
    return ExtendedReal(Kind::Infinite, std::numeric_limits<double>::infinity());
  }
  static ExtendedReal unknown_finite(double upper_bound) {
    return ExtendedReal(Kind::UnknownFinite, upper_bound);
  }
  static ExtendedReal unknown() {
    return ExtendedReal(Kind::Unknown, std::numeric_limits<double>::quiet_NaN());
  }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_infinite() const { return kind_ == Kind::Infinite; }

  /// The known value; only valid for Finite.
  double value() const {
    if (kind_ != Kind::Finite) {
      throw std::logic_error("ExtendedReal: value() on a non-finite constant");
    }
    return payload_;
  }

  /// Smallest certified upper bound: the value itself when finite, the
  /// attached bound for UnknownFinite, +inf otherwise.
  double upper_bound() const {
    switch (kind_) {
      case Kind::Finite:
      case Kind::UnknownFinite:
        return payload_;
      default:
        return std::numeric_limits<double>::infinity();
    }
  }

  std::string str() const;

 private:
  ExtendedReal(Kind k, double payload) : kind_(k), payload_(payload) {}

  Kind kind_;
  double payload_;
};

}  // namespace hardymeans

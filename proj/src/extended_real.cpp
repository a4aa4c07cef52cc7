#include "hardymeans/extended_real.hpp"

#include <cstdio>

namespace hardymeans {

std::string ExtendedReal::str() const {
  char buf[64];
  switch (kind_) {
    case Kind::Finite:
      std::snprintf(buf, sizeof(buf), "%.15g", payload_);
      return buf;
    case Kind::Infinite:
      return "inf";
    case Kind::UnknownFinite:
      std::snprintf(buf, sizeof(buf), "unknown<=%.15g", payload_);
      return buf;
    case Kind::Unknown:
      return "unknown";
  }
  return "unknown";
}

}  // namespace hardymeans

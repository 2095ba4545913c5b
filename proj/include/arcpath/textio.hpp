#pragma once

#include <cstdio>
#include <string>

namespace arcpath {

// Fixed 9-fractional-digit decimal, the one float format used in every
// text artifact so identical values always serialize identically.
inline std::string fmt9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", v);
  return buf;
}

}  // namespace arcpath

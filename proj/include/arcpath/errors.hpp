#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace arcpath {

// Base for all library errors so callers can catch the family at once.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed map / path / roadmap input; message names the line or offset.
struct ParseError : Error {
  using Error::Error;
};

// Rejection sampling exhausted its attempt budget.
struct SamplingError : Error {
  SamplingError(const std::string& msg, double acceptance_rate)
      : Error(msg), acceptance_rate(acceptance_rate) {}
  double acceptance_rate = 0.0;
};

// Start or goal is not free on the planning grid.
struct PlacementError : Error {
  using Error::Error;
};

// Degenerate or inconsistent geometric input.
struct GeometryError : Error {
  using Error::Error;
};

// A corner could not be filleted; carries the corner index in the
// deduplicated polyline.
struct SmoothingError : GeometryError {
  SmoothingError(const std::string& msg, std::size_t corner_index)
      : GeometryError(msg), corner_index(corner_index) {}
  std::size_t corner_index = 0;
};

}  // namespace arcpath

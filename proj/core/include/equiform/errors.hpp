#pragma once

#include <stdexcept>
#include <string>

namespace equiform {

/// det(g) vanishes identically; there is no surface to measure.
class DegenerateMetricError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Evaluation at a point where the chart degenerates (cos(phi) = 0) or the
/// curvature denominator vanishes.
class PoleOfChartError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside the domain its formulas are valid on.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input (parameter files, flags).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace equiform

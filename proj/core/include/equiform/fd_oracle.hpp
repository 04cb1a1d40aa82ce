#pragma once

#include "equiform/geometry.hpp"
#include "equiform/motion.hpp"

namespace equiform {

/// Scalar curvature at (0, theta, phi) by nested central differences in
/// plain double arithmetic: g from the tangents at grid points, Christoffel
/// symbols from differences of g, curvature from differences of the
/// symbols. Shares no code with the symbolic pipeline. Throws
/// PoleOfChartError when |cos phi| <= 10 h and PreconditionError for h <= 0.
double fd_curvature(const MotionParams<double>& p, double theta, double phi, double h = 1e-4,
                    CurvatureSign sign = CurvatureSign::kinematic);

}  // namespace equiform

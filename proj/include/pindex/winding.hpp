#pragma once

#include "pindex/field.hpp"
#include "pindex/half_index.hpp"

#include <optional>

namespace pindex {

struct Circle {
  Vec2 center;
  double radius = 1.0;

  Vec2 point(double phi) const { return {center.x + radius * std::cos(phi), center.y + radius * std::sin(phi)}; }
};

struct WindingOptions {
  int initial_samples = 64;
  int max_depth = 24;
  /// Magnitude below which a vector field counts as singular on the circle.
  /// Defaults to 1e-9 * field.magnitude_scale(radius).
  std::optional<double> singular_tol;
  /// Polar angle of the first sample; the result does not depend on it.
  double start_angle = 0.0;
};

struct WindingResult {
  HalfIndex index;
  int samples_used = 0;
  double max_step_angle = 0.0;  // radians, largest accepted step of the field angle
  double residual = 0.0;        // |turns - index|
};

/// Poincare index as the total turning of the field direction along a
/// counterclockwise circle. Vector fields give integers; line fields are
/// tracked through the doubled angle, which is invariant under sign flips,
/// and give half-integers.
///
/// Every accepted step turns the field by less than pi/2 (vector) or pi/4
/// (line field); longer steps are bisected up to max_depth times.
WindingResult winding_index(const PlaneField& field, const Circle& circle, const WindingOptions& opts = {});

/// Upper bound on the rounding residual accepted by winding_index.
inline constexpr double kWindingResidualLimit = 0.01;

}  // namespace pindex

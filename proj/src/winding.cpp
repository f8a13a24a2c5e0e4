#include "pindex/winding.hpp"

#include "pindex/error.hpp"

#include <numbers>
#include <sstream>

namespace pindex {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kStepGuard = std::numbers::pi / 2.0;

class Tracker {
 public:
  Tracker(const PlaneField& field, const Circle& circle, const WindingOptions& opts)
      : field_(field),
        circle_(circle),
        opts_(opts),
        line_(field.is_line_field()),
        tol_(opts.singular_tol.value_or(1e-9 * field.magnitude_scale(circle.radius))) {}

  // Sign-invariant carrier: the field itself, or its square for line fields.
  Vec2 carrier(double phi) {
    ++samples_;
    const Vec2 p = circle_.point(phi);
    if (line_) {
      if (norm(p - field_.singular_point()) <= tol_) singular(phi);
      const Vec2 d = field_.value(p);
      return {d.x * d.x - d.y * d.y, 2.0 * d.x * d.y};
    }
    const Vec2 f = field_.value(p);
    if (!(norm(f) > tol_)) singular(phi);
    return f;
  }

  double step(double phi0, Vec2 v0, double phi1, Vec2 v1, int depth) {
    const double delta = std::atan2(cross(v0, v1), dot(v0, v1));
    if (std::abs(delta) < kStepGuard) {
      max_step_ = std::max(max_step_, std::abs(line_ ? delta / 2.0 : delta));
      return delta;
    }
    if (depth >= opts_.max_depth) {
      std::ostringstream os;
      os << "winding step near phi=" << phi0 << " still turns " << delta
         << " rad at max depth; singularity on or near the circle?";
      throw Error(ErrorCode::NonConvergent, os.str());
    }
    const double mid = 0.5 * (phi0 + phi1);
    const Vec2 vm = carrier(mid);
    return step(phi0, v0, mid, vm, depth + 1) + step(mid, vm, phi1, v1, depth + 1);
  }

  WindingResult run() {
    const int n = opts_.initial_samples;
    const double h = kTwoPi / n;
    const double start = opts_.start_angle;

    const Vec2 first = carrier(start);
    Vec2 prev = first;
    double total = 0.0;
    for (int k = 1; k <= n; ++k) {
      const double phi = start + k * h;
      // Close the loop on the first sample so the total is an exact multiple
      // of the carrier's period.
      const Vec2 cur = k == n ? first : carrier(phi);
      total += step(start + (k - 1) * h, prev, phi, cur, 0);
      prev = cur;
    }

    WindingResult result;
    const double turns = total / kTwoPi;  // carrier turns: index, or doubled index for line fields
    const double rounded = std::round(turns);
    result.index = line_ ? HalfIndex::from_doubled(static_cast<std::int64_t>(rounded))
                         : HalfIndex::from_int(static_cast<std::int64_t>(rounded));
    result.residual = std::abs(turns - rounded) / (line_ ? 2.0 : 1.0);
    result.samples_used = samples_;
    result.max_step_angle = max_step_;
    if (!(result.residual < kWindingResidualLimit)) {
      std::ostringstream os;
      os << "winding residual " << result.residual << " turn exceeds " << kWindingResidualLimit;
      throw Error(ErrorCode::NonConvergent, os.str());
    }
    return result;
  }

 private:
  [[noreturn]] void singular(double phi) const {
    std::ostringstream os;
    os << "field vanishes on the circle near phi=" << phi;
    throw Error(ErrorCode::SingularOnCircuit, os.str());
  }

  const PlaneField& field_;
  const Circle& circle_;
  const WindingOptions& opts_;
  bool line_;
  double tol_;
  int samples_ = 0;
  double max_step_ = 0.0;
};

}  // namespace

WindingResult winding_index(const PlaneField& field, const Circle& circle, const WindingOptions& opts) {
  if (!(circle.radius > 0.0)) throw Error(ErrorCode::InvalidArgument, "circle radius must be positive");
  if (opts.initial_samples < 16) throw Error(ErrorCode::InvalidArgument, "initial_samples must be at least 16");
  if (opts.max_depth < 0) throw Error(ErrorCode::InvalidArgument, "max_depth must be nonnegative");
  return Tracker(field, circle, opts).run();
}

}  // namespace pindex

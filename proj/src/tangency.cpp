#include "pindex/tangency.hpp"

#include "pindex/error.hpp"

#include <algorithm>
#include <numbers>
#include <sstream>

namespace pindex {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Consecutive samples of a line field must stay within pi/4 of each other
// for the sign alignment to be unambiguous.
const double kAlignCos = std::cos(std::numbers::pi / 4.0);

std::string angle_text(double phi) {
  std::ostringstream os;
  os << phi;
  return os.str();
}

class RadialProbe {
 public:
  RadialProbe(const PlaneField& field, const Circle& circle)
      : field_(field),
        circle_(circle),
        line_(field.is_line_field()),
        tol_(1e-9 * field.magnitude_scale(circle.radius)) {}

  /// Unit direction at angle phi; line fields are aligned with `like`.
  Vec2 direction(double phi, const Vec2* like) const {
    const Vec2 p = circle_.point(phi);
    if (line_) {
      if (norm(p - field_.singular_point()) <= tol_)
        throw Error(ErrorCode::SingularOnCircuit, "circle passes through the singular point near phi=" + angle_text(phi));
      Vec2 d = field_.value(p);
      if (like && dot(d, *like) < 0.0) d = -d;
      return d;
    }
    const Vec2 f = field_.value(p);
    const double n = norm(f);
    if (!(n > tol_)) throw Error(ErrorCode::SingularOnCircuit, "field vanishes on the circle near phi=" + angle_text(phi));
    return {f.x / n, f.y / n};
  }

  static double radial(Vec2 d, double phi) { return d.x * std::cos(phi) + d.y * std::sin(phi); }

  /// Returns {raw h'', normalized h''}.
  std::pair<double, double> second_order(double phi) const {
    const Vec2 p = circle_.point(phi);
    const Vec2 rel = p - circle_.center;
    if (field_.has_exact_jacobian()) {
      const Vec2 f = field_.value(p);
      const double raw = 2.0 * (dot(f, f) + dot(rel, field_.jacobian(p) * f));
      return {raw, raw / dot(f, f)};
    }
    const Vec2 d = field_.value(p);
    const Vec2 g = field_.angle_gradient(p);
    const double h = 2.0 * (1.0 + dot(rel, perp(d)) * dot(g, d));
    return {h, h};
  }

  bool line() const { return line_; }

 private:
  const PlaneField& field_;
  const Circle& circle_;
  bool line_;
  double tol_;
};

int sign(double v) { return (v > 0.0) - (v < 0.0); }

}  // namespace

std::vector<Tangency> find_tangencies(const PlaneField& field, const Circle& circle, const TangencyOptions& opts) {
  if (!(circle.radius > 0.0)) throw Error(ErrorCode::InvalidArgument, "circle radius must be positive");
  if (opts.samples < 16) throw Error(ErrorCode::InvalidArgument, "samples must be at least 16");

  const RadialProbe probe(field, circle);
  const int n = opts.samples;
  const double h = kTwoPi / n;

  // Sample n + 1 points; the last one closes the loop at phi = 2*pi with the
  // representative carried continuously around the circle.
  std::vector<double> phi(n + 1);
  std::vector<Vec2> dir(n + 1);
  std::vector<double> rho(n + 1);
  for (int i = 0; i <= n; ++i) {
    phi[i] = i == n ? kTwoPi : i * h;
    const Vec2* like = i == 0 ? nullptr : &dir[i - 1];
    dir[i] = i == n ? probe.direction(0.0, like) : probe.direction(phi[i], like);
    if (probe.line() && i > 0 && dot(dir[i], dir[i - 1]) < kAlignCos)
      throw Error(ErrorCode::NonConvergent,
                  "line field turns too fast between samples near phi=" + angle_text(phi[i]) + "; raise samples");
    rho[i] = RadialProbe::radial(dir[i], i == n ? 0.0 : phi[i]);
  }

  if (std::all_of(rho.begin(), rho.end(), [&](double r) { return std::abs(r) < opts.leaf_tol; }))
    throw Error(ErrorCode::CircuitIsLeaf, "the circle is a leaf of the field: no transverse point");

  std::vector<double> roots;
  for (int i = 0; i < n; ++i) {
    if (rho[i] == 0.0) {
      roots.push_back(phi[i]);
      continue;
    }
    if (rho[i + 1] == 0.0 || sign(rho[i]) == sign(rho[i + 1])) continue;

    double lo = phi[i];
    double hi = phi[i + 1];
    Vec2 lo_dir = dir[i];
    const int lo_sign = sign(rho[i]);
    for (int iter = 0; iter < 200 && hi - lo > opts.root_tol; ++iter) {
      const double mid = 0.5 * (lo + hi);
      const Vec2 d = probe.direction(mid, &lo_dir);
      const double r = RadialProbe::radial(d, mid);
      if (r == 0.0) {
        lo = hi = mid;
        break;
      }
      if (sign(r) == lo_sign) {
        lo = mid;
        lo_dir = d;
      } else {
        hi = mid;
      }
    }
    double root = 0.5 * (lo + hi);
    if (root >= kTwoPi) root -= kTwoPi;
    roots.push_back(root);
  }

  // A touching zero of the radial component (no sign change) is a
  // non-Morse tangency that bracketing cannot see; look for it at local
  // minima of |rho|.
  for (int i = 0; i < n; ++i) {
    const int prev = i == 0 ? n - 1 : i - 1;
    const double a = std::abs(rho[prev]);
    const double b = std::abs(rho[i]);
    const double c = std::abs(rho[i + 1]);
    if (b == 0.0 || b > a || b > c || b > 10.0 * h) continue;
    if (sign(rho[i]) != sign(rho[i + 1])) continue;
    // Compare against the previous sample through the aligned representative.
    const double before = i == 0 ? RadialProbe::radial(probe.direction(-h, &dir[0]), -h) : rho[prev];
    if (sign(before) != sign(rho[i])) continue;

    double lo = phi[i] - h;
    double hi = phi[i] + h;
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    auto value = [&](double t) { return std::abs(RadialProbe::radial(probe.direction(t, &dir[i]), t)); };
    double x1 = hi - g * (hi - lo);
    double x2 = lo + g * (hi - lo);
    double f1 = value(x1);
    double f2 = value(x2);
    for (int iter = 0; iter < 80; ++iter) {
      if (f1 < f2) {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - g * (hi - lo);
        f1 = value(x1);
      } else {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + g * (hi - lo);
        f2 = value(x2);
      }
    }
    if (std::min(f1, f2) < opts.leaf_tol)
      throw Error(ErrorCode::DegenerateTangency,
                  "non-Morse tangency near phi=" + angle_text(0.5 * (lo + hi)) + "; perturb the radius");
  }

  std::vector<Tangency> out;
  out.reserve(roots.size());
  for (double root : roots) {
    const auto [raw, normalized] = probe.second_order(root);
    if (!(std::abs(normalized) >= opts.degen_tol))
      throw Error(ErrorCode::DegenerateTangency,
                  "degenerate tangency at phi=" + angle_text(root) + " (h'' ~ 0); perturb the radius");
    out.push_back({root, normalized < 0.0 ? TangencyKind::Internal : TangencyKind::External, raw});
  }
  std::sort(out.begin(), out.end(), [](const Tangency& a, const Tangency& b) { return a.angle < b.angle; });
  return out;
}

TangencyCensus census(const std::vector<Tangency>& tangencies) {
  TangencyCensus c;
  for (const auto& t : tangencies) (t.kind == TangencyKind::Internal ? c.internal : c.external)++;
  return c;
}

HalfIndex bendixson_index(std::int64_t internal, std::int64_t external) {
  if (internal < 0 || external < 0) throw Error(ErrorCode::InvalidArgument, "tangency counts must be nonnegative");
  return HalfIndex::from_doubled(2 + internal - external);
}

HalfIndex hamburger_index(std::int64_t convex, std::int64_t concave) {
  if (convex < 0 || concave < 0) throw Error(ErrorCode::InvalidArgument, "vertex counts must be nonnegative");
  const std::int64_t diff = convex - concave;
  if (diff % 2 != 0)
    throw Error(ErrorCode::ParityError,
                "c - c' = " + std::to_string(diff) + " is odd; the index would not be a half-integer");
  return HalfIndex::from_doubled(2 - diff / 2);
}

std::int64_t TaggedCircuit::convex() const { return std::count(vertices.begin(), vertices.end(), VertexTag::Convex); }
std::int64_t TaggedCircuit::concave() const {
  return std::count(vertices.begin(), vertices.end(), VertexTag::Concave);
}

TaggedCircuit circuit_from_tangencies(const std::vector<Tangency>& tangencies) {
  TaggedCircuit circuit;
  for (const auto& t : tangencies) {
    const VertexTag tag = t.kind == TangencyKind::Internal ? VertexTag::Concave : VertexTag::Convex;
    // Enter the horseshoe, follow its leaf-arc, leave along the circle.
    circuit.vertices.push_back(tag);
    circuit.arcs.push_back(ArcType::LeafArc);
    circuit.vertices.push_back(tag);
    circuit.arcs.push_back(ArcType::CrossArc);
  }
  return circuit;
}

SurgeryTrace surgery_replay(CountPair start, const std::vector<SurgeryStep>& steps) {
  if (start.convex < 0 || start.concave < 0)
    throw Error(ErrorCode::InvalidArgument, "vertex counts must be nonnegative");
  if ((start.convex - start.concave) % 2 != 0)
    throw Error(ErrorCode::ParityError, "start circuit has odd c - c'");

  SurgeryTrace out;
  out.trace.push_back(start);
  CountPair cur = start;
  for (const auto& step : steps) {
    if (cur.concave == 0) break;
    if (step.extra_convex_lost < 0 || step.extra_concave_lost < 0)
      throw Error(ErrorCode::MonotonicityViolation,
                  "step " + std::to_string(out.steps_applied + 1) + " declares a negative loss");

    const std::int64_t gain = step.scenario == Scenario::A ? 1 : 2;
    const std::int64_t traded = step.scenario == Scenario::A ? 1 : 2;
    CountPair next{cur.convex + gain - step.extra_convex_lost, cur.concave - traded - step.extra_concave_lost};
    if (cur.concave < traded || next.concave < 0)
      throw Error(ErrorCode::InsufficientConcavities,
                  "step " + std::to_string(out.steps_applied + 1) + " (scenario " +
                      std::string(to_string(step.scenario)) + ") needs more than the " +
                      std::to_string(cur.concave) + " concavities left");
    if (next.convex < 0)
      throw Error(ErrorCode::InvalidStep,
                  "step " + std::to_string(out.steps_applied + 1) + " loses more convexities than exist");
    if ((next.convex - next.concave) % 2 != 0)
      throw Error(ErrorCode::ParityError,
                  "step " + std::to_string(out.steps_applied + 1) + " leaves odd c - c'; losses come in pairs");
    if (next.concave >= cur.concave)
      throw Error(ErrorCode::MonotonicityViolation, "c' did not strictly decrease");

    cur = next;
    out.trace.push_back(cur);
    ++out.steps_applied;
  }
  out.reached_zero = cur.concave == 0;
  if (out.reached_zero) out.bound = hamburger_index(cur.convex, 0);
  return out;
}

LoopFreeVerdict loop_free_bound_check(const CatalogEntry& entry, const Circle& circle, const WindingOptions& opts) {
  if (entry.has_loops)
    throw Error(ErrorCode::PreconditionLoop,
                "'" + entry.name + "' has leaves with both ends at the singularity; the bound j <= 1 does not apply");
  const WindingResult w = winding_index(entry.field, circle, opts);
  return {entry.name, w.index, w.index <= HalfIndex::from_int(1)};
}

std::string_view to_string(TangencyKind kind) { return kind == TangencyKind::Internal ? "internal" : "external"; }
std::string_view to_string(VertexTag tag) { return tag == VertexTag::Convex ? "convex" : "concave"; }
std::string_view to_string(ArcType type) { return type == ArcType::LeafArc ? "leaf" : "cross"; }
std::string_view to_string(Scenario scenario) { return scenario == Scenario::A ? "A" : "B"; }

}  // namespace pindex

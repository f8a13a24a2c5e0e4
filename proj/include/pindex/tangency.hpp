#pragma once

#include "pindex/catalog.hpp"
#include "pindex/field.hpp"
#include "pindex/half_index.hpp"
#include "pindex/winding.hpp"

#include <cstdint>
#include <vector>

namespace pindex {

enum class TangencyKind { Internal, External };

struct Tangency {
  double angle = 0.0;  // polar angle on the circle, in [0, 2*pi)
  TangencyKind kind = TangencyKind::External;
  /// h'' of h(t) = |leaf(t) - center|^2 - r^2 at the tangency. Raw value for
  /// polynomial vector fields, unit-speed value for line fields.
  double second_order = 0.0;
};

struct TangencyOptions {
  int samples = 720;
  double root_tol = 1e-12;  // bisection stops below this angular width
  /// Degeneracy threshold on h'' / |f|^2 (dimensionless).
  double degen_tol = 1e-6;
  /// Radial component (of the unit direction) treated as zero everywhere.
  double leaf_tol = 1e-9;
};

/// Tangencies of the field with the circle, sorted by angle.
///
/// Roots of the radial component f.n are bracketed on a uniform grid and
/// refined by bisection; each root is classified by the sign of h''
/// (negative: the leaf stays inside, internal). Line fields are followed
/// with a continuous representative, so the result does not depend on which
/// sign the field reports.
///
/// Throws CircuitIsLeaf, DegenerateTangency, SingularOnCircuit, NonConvergent.
std::vector<Tangency> find_tangencies(const PlaneField& field, const Circle& circle,
                                      const TangencyOptions& opts = {});

struct TangencyCensus {
  int internal = 0;
  int external = 0;
};

TangencyCensus census(const std::vector<Tangency>& tangencies);

/// j = 1 + (I - E) / 2
HalfIndex bendixson_index(std::int64_t internal, std::int64_t external);

/// j = 1 - (c - c') / 4. Throws ParityError when c - c' is odd.
HalfIndex hamburger_index(std::int64_t convex, std::int64_t concave);

enum class VertexTag { Convex, Concave };
enum class ArcType { LeafArc, CrossArc };

/// Polygonal circuit of leaf-arcs and cross-arcs; arcs[i] leaves vertices[i].
struct TaggedCircuit {
  std::vector<VertexTag> vertices;
  std::vector<ArcType> arcs;

  std::int64_t convex() const;
  std::int64_t concave() const;
};

/// Horseshoe construction: each tangency is replaced by a leaf-arc between
/// two new vertices, concave for internal and convex for external ones.
TaggedCircuit circuit_from_tangencies(const std::vector<Tangency>& tangencies);

enum class Scenario { A, B };

struct SurgeryStep {
  Scenario scenario = Scenario::A;
  std::int64_t extra_convex_lost = 0;
  std::int64_t extra_concave_lost = 0;
};

struct CountPair {
  std::int64_t convex = 0;
  std::int64_t concave = 0;

  friend bool operator==(const CountPair&, const CountPair&) = default;
};

struct SurgeryTrace {
  std::vector<CountPair> trace;  // start pair, then one pair per applied step
  std::size_t steps_applied = 0;
  bool reached_zero = false;     // final concave count is 0
  std::optional<HalfIndex> bound;  // 1 - c/4, set when reached_zero
};

/// Replays concavity-reducing surgeries on (c, c') counts.
///
/// Scenario A trades 2 concavities for 1 convexity and 1 concavity, B trades
/// 2 concavities for 2 convexities; declared extra losses are subtracted on
/// top. Replay stops once c' = 0 or the steps run out.
///
/// Throws ParityError (odd c - c' at the start or after a step),
/// InsufficientConcavities (step would drive c' negative),
/// InvalidStep (convex count would go negative),
/// MonotonicityViolation (negative extra loss).
SurgeryTrace surgery_replay(CountPair start, const std::vector<SurgeryStep>& steps);

struct LoopFreeVerdict {
  std::string name;
  HalfIndex index;
  bool holds = false;  // index <= 1
};

/// Winding index of a loop-free catalog singularity checked against j <= 1.
/// Throws PreconditionLoop for entries with loops.
LoopFreeVerdict loop_free_bound_check(const CatalogEntry& entry, const Circle& circle,
                                      const WindingOptions& opts = {});

std::string_view to_string(TangencyKind kind);
std::string_view to_string(VertexTag tag);
std::string_view to_string(ArcType type);
std::string_view to_string(Scenario scenario);

}  // namespace pindex

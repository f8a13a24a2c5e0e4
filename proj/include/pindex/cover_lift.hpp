#pragma once

#include "pindex/error.hpp"
#include "pindex/half_index.hpp"
#include "pindex/winding.hpp"

#include <cstdint>
#include <vector>

namespace pindex {

/// i = 2j - 1 for a non-orientable singularity of index j (odd doubled value).
/// Throws OrientableInput for integral j.
HalfIndex index_lift_relation(HalfIndex j);

/// j = (i + 1) / 2; the inverse of index_lift_relation. i must be integral.
HalfIndex index_descend_relation(HalfIndex i);

struct LiftCheckReport {
  int two_j = 0;
  HalfIndex downstairs;        // winding of the line model
  HalfIndex upstairs;          // winding of the lifted field on the covering circle
  HalfIndex predicted;         // index_lift_relation(downstairs)
  double upstairs_radius = 0;  // sqrt(radius)
  double residual = 0;
  bool upstairs_orientable = false;
  bool passed() const { return upstairs_orientable && upstairs == predicted; }
};

/// Lifts the line model of index two_j/2 through w -> w^2 (with the -arg(w)
/// twist) and measures the upstairs winding on |w| = sqrt(radius).
/// Throws EvenInput for even two_j and InvalidArgument for an off-centre circle.
LiftCheckReport numeric_lift_check(int two_j, const Circle& circle, const WindingOptions& opts = {});

/// chi(cover) = 2 chi(base) - deg(R) for a branched double cover.
std::int64_t riemann_hurwitz(std::int64_t chi_base, std::int64_t ramification);

struct SingularPartition {
  std::vector<HalfIndex> orientable;      // integral indices
  std::vector<HalfIndex> non_orientable;  // odd doubled values
  std::int64_t base_chi = 0;
};

struct ReductionReport {
  HalfIndex index_sum;             // sum of j over the partition
  std::int64_t ramification = 0;   // deg(R) = #non_orientable
  std::int64_t cover_chi = 0;      // from Riemann-Hurwitz
  std::vector<HalfIndex> upstairs; // two copies of each orientable j, then 2j - 1 per non-orientable j
  HalfIndex upstairs_sum;
  HalfIndex half_of_upstairs_plus_ramification;  // (sum i + deg R) / 2
  HalfIndex half_of_cover_chi_plus_ramification; // (chi* + deg R) / 2
  bool upstairs_formula_holds = false;  // sum i == chi*
  bool chain_holds = false;             // sum j == chi(F)
};

/// Evaluates the chain
///   sum j = (sum_upstairs i + deg R)/2 = (chi* + deg R)/2 = chi(F),
/// taking the index formula on the cover as given. Preimages of an
/// orientable singularity are assumed to carry its index j each.
/// Throws ParityError for misfiled entries and ChiMismatch (with the
/// report attached) when the chain fails.
ReductionReport reduction_sum_check(const SingularPartition& p);

class ChiMismatchError : public Error {
 public:
  ChiMismatchError(const std::string& message, ReductionReport report)
      : Error(ErrorCode::ChiMismatch, message), report_(std::move(report)) {}
  const ReductionReport& report() const { return report_; }

 private:
  ReductionReport report_;
};

}  // namespace pindex

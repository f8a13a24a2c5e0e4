#include "pindex/cover_lift.hpp"

#include "pindex/error.hpp"
#include "pindex/field.hpp"

namespace pindex {

HalfIndex index_lift_relation(HalfIndex j) {
  if (j.is_integral())
    throw Error(ErrorCode::OrientableInput, "index " + j.to_string() + " is integral; the singularity is orientable");
  return HalfIndex::from_int(j.doubled() - 1);
}

HalfIndex index_descend_relation(HalfIndex i) {
  if (!i.is_integral()) throw Error(ErrorCode::InvalidArgument, "lifted index " + i.to_string() + " is not integral");
  return HalfIndex::from_doubled(i.doubled() / 2 + 1);
}

LiftCheckReport numeric_lift_check(int two_j, const Circle& circle, const WindingOptions& opts) {
  if (two_j % 2 == 0)
    throw Error(ErrorCode::EvenInput, "two_j = " + std::to_string(two_j) + " is even; nothing to lift");
  if (circle.center.x != 0.0 || circle.center.y != 0.0)
    throw Error(ErrorCode::InvalidArgument, "the lift check needs a circle centred at the singularity");

  const PlaneField base = PlaneField::line_model(two_j);
  const PlaneField lifted = PlaneField::pullback(base);

  LiftCheckReport r;
  r.two_j = two_j;
  r.downstairs = winding_index(base, circle, opts).index;
  r.upstairs_radius = std::sqrt(circle.radius);
  const WindingResult up = winding_index(lifted, Circle{{0.0, 0.0}, r.upstairs_radius}, opts);
  r.upstairs = up.index;
  r.residual = up.residual;
  r.upstairs_orientable = up.index.is_integral();
  r.predicted = index_lift_relation(r.downstairs);
  return r;
}

std::int64_t riemann_hurwitz(std::int64_t chi_base, std::int64_t ramification) {
  if (ramification < 0) throw Error(ErrorCode::InvalidArgument, "ramification degree must be nonnegative");
  return 2 * chi_base - ramification;
}

ReductionReport reduction_sum_check(const SingularPartition& p) {
  for (HalfIndex j : p.orientable)
    if (!j.is_integral())
      throw Error(ErrorCode::ParityError, "orientable singularity with non-integral index " + j.to_string());
  for (HalfIndex j : p.non_orientable)
    if (j.is_integral())
      throw Error(ErrorCode::ParityError, "non-orientable singularity with integral index " + j.to_string());

  ReductionReport r;
  for (HalfIndex j : p.orientable) {
    r.index_sum += j;
    r.upstairs.push_back(j);
    r.upstairs.push_back(j);
  }
  for (HalfIndex j : p.non_orientable) {
    r.index_sum += j;
    r.upstairs.push_back(index_lift_relation(j));
  }
  for (HalfIndex i : r.upstairs) r.upstairs_sum += i;

  r.ramification = static_cast<std::int64_t>(p.non_orientable.size());
  r.cover_chi = riemann_hurwitz(p.base_chi, r.ramification);
  // (x + deg R) / 2 as half-integers: doubled value is x + deg R.
  r.half_of_upstairs_plus_ramification = HalfIndex::from_doubled(r.upstairs_sum.doubled() / 2 + r.ramification);
  r.half_of_cover_chi_plus_ramification = HalfIndex::from_doubled(r.cover_chi + r.ramification);
  r.upstairs_formula_holds = r.upstairs_sum == HalfIndex::from_int(r.cover_chi);
  r.chain_holds = r.index_sum == HalfIndex::from_int(p.base_chi);

  if (!r.upstairs_formula_holds || !r.chain_holds) {
    throw ChiMismatchError("index sum " + r.index_sum.to_string() + " differs from chi(F) = " +
                               std::to_string(p.base_chi) + "; upstairs sum " + r.upstairs_sum.to_string() +
                               " vs chi* = " + std::to_string(r.cover_chi),
                           r);
  }
  return r;
}

}  // namespace pindex

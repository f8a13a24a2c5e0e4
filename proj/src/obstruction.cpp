#include "pindex/obstruction.hpp"

#include "pindex/error.hpp"

namespace pindex {

EulerPair bagpipe_euler(std::int64_t chi_bag, std::int64_t pipes) {
  if (pipes < 0) throw Error(ErrorCode::InvalidArgument, "pipe count must be nonnegative");
  return {chi_bag, chi_bag + pipes};
}

namespace {

const HalfIndex kOne = HalfIndex::from_int(1);
const HalfIndex kTwo = HalfIndex::from_int(2);

std::string str(std::int64_t v) { return std::to_string(v); }

CapWitness complete(std::vector<HalfIndex> caps) {
  CapWitness w;
  for (HalfIndex q : caps) w.punctures.push_back(kTwo - q);
  w.caps = std::move(caps);
  return w;
}

}  // namespace

Verdict foliation_feasibility(const BagpipeSpec& spec) {
  const auto [chi_m, chi_f] = bagpipe_euler(spec.chi_bag, spec.pipes);
  const std::int64_t n = spec.pipes;

  if (spec.cap_indices) {
    if (static_cast<std::int64_t>(spec.cap_indices->size()) != n)
      throw Error(ErrorCode::LengthMismatch, "got " + str(spec.cap_indices->size()) + " cap indices for " + str(n) +
                                                 " pipes");
    for (HalfIndex q : *spec.cap_indices)
      if (q > kOne) throw Error(ErrorCode::CapBoundViolation, "cap index " + q.to_string() + " exceeds 1");
  }

  Verdict v;
  v.chi_m = chi_m;
  v.chi_f = chi_f;
  v.required_cap_sum = HalfIndex::from_int(n - chi_m);

  v.chain.push_back({"chi(M) = chi(B)", str(chi_m) + " = " + str(spec.chi_bag), true});
  v.chain.push_back({"chi(F) = chi(B) + n", str(chi_f) + " = " + str(spec.chi_bag) + " + " + str(n), true});
  v.chain.push_back({"sum i(p_i) = chi(F)", "sum i(p_i) = " + str(chi_f), true});
  v.chain.push_back({"i(p_i) + i(q_i) = 2", "sum i(q_i) = 2n - chi(F) = " + str(2 * n - chi_f), true});

  if (spec.cap_indices) {
    HalfIndex sum;
    for (HalfIndex q : *spec.cap_indices) sum += q;
    v.feasible = sum == v.required_cap_sum;
    v.chain.push_back({"i(q_i) <= 1", "all " + str(n) + " given caps are <= 1", true});
    v.chain.push_back({"sum i(q_i) = n - chi(M)",
                       sum.to_string() + (v.feasible ? " = " : " != ") + v.required_cap_sum.to_string(), v.feasible});
    if (v.feasible) v.witness = complete(*spec.cap_indices);
  } else if (n == 0) {
    v.feasible = chi_m == 0;
    v.chain.push_back({"i(q_i) <= 1", "no pipes, no caps", true});
    v.chain.push_back({"0 = sum i(p_i) = chi(M)", "0 " + std::string(v.feasible ? "= " : "!= ") + str(chi_m),
                       v.feasible});
    if (v.feasible) v.witness = complete({});
  } else {
    // n caps bounded by 1 reach every half-integer sum up to n, and no more.
    v.feasible = chi_m >= 0;
    v.chain.push_back({"i(q_i) <= 1", "sum i(q_i) <= n = " + str(n), true});
    v.chain.push_back({"n <= sum (2 - i(q_i)) = chi(M) + n",
                       str(n) + (v.feasible ? " <= " : " > ") + str(chi_m + n), v.feasible});
    v.chain.push_back({"sum i(q_i) = n - chi(M) <= n",
                       v.required_cap_sum.to_string() + (v.feasible ? " <= " : " > ") +
                           HalfIndex::from_int(n).to_string(),
                       v.feasible});
    if (v.feasible) {
      std::vector<HalfIndex> caps(n, kOne);
      caps.back() = kOne - HalfIndex::from_int(chi_m);
      v.witness = complete(std::move(caps));
    }
  }

  v.note = v.feasible
               ? "necessary condition only: the index ledger balances, which does not imply that M foliates "
                 "(a capped long cigar passes and still has no foliation)"
               : "necessary condition violated: no assignment of cap indices <= 1 balances the index ledger, so "
                 "M admits no foliation";
  return v;
}

}  // namespace pindex

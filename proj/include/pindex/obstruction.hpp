#pragma once

#include "pindex/half_index.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pindex {

/// Summary of a bagpipe decomposition M = B u P_1 u ... u P_n.
struct BagpipeSpec {
  std::int64_t chi_bag = 0;
  std::int64_t pipes = 0;
  /// Indices i(q_i) at the collapsed pipe-side contours, each <= 1.
  std::optional<std::vector<HalfIndex>> cap_indices;
};

struct EulerPair {
  std::int64_t chi_m = 0;  // chi(M) = chi(B)
  std::int64_t chi_f = 0;  // chi(F) = chi(B) + n, bag capped by n discs
};

EulerPair bagpipe_euler(std::int64_t chi_bag, std::int64_t pipes);

struct ChainEntry {
  std::string equation;  // symbolic form
  std::string instance;  // evaluated with this spec's numbers
  bool holds = true;
};

struct CapWitness {
  std::vector<HalfIndex> caps;     // i(q_i)
  std::vector<HalfIndex> punctures;  // i(p_i) = 2 - i(q_i)
};

struct Verdict {
  bool feasible = false;
  std::int64_t chi_m = 0;
  std::int64_t chi_f = 0;
  HalfIndex required_cap_sum;  // n - chi(M)
  std::optional<CapWitness> witness;
  std::vector<ChainEntry> chain;
  std::string note;  // always states that feasibility is only necessary
};

/// Decides whether the index ledger
///   sum i(p_i) = chi(F),  i(p_i) + i(q_i) = 2,  i(q_i) <= 1
/// has a half-integer solution. With no pipes it needs chi(M) = 0; with
/// pipes it needs chi(M) >= 0. Given cap indices are checked as stated.
/// Throws LengthMismatch, CapBoundViolation, InvalidArgument (n < 0).
Verdict foliation_feasibility(const BagpipeSpec& spec);

}  // namespace pindex

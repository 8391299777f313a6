#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "addcomb/theorems.hpp"

namespace addcomb {

enum class DescentOutcome { bound_certified, structure_case, budget_exhausted };

std::string_view to_string(DescentOutcome o) noexcept;

/// One round: normalize (X, Y) by a unit shift, then apply a Davenport
/// transform at the smallest gap element.
struct DescentStep {
  std::size_t size_x = 0;
  std::size_t size_y = 0;
  std::size_t sumset_size = 0;
  std::int64_t kappa = 0;  // |X + Y| - |X| + 1, kept as metadata
  ExtNat gamma_y;
  Element shift;  // the unit used by the normalization
  DavenportPair pair;
  // |X + Y_z| <= |X + Y| + |Y_z| - |Y|
  std::int64_t ledger_lhs = 0;
  std::int64_t ledger_rhs = 0;
  bool ledger_holds = false;
  bool size_decreases = false;
};

enum class DescentStop {
  none,
  gamma_dominates,  // kappa exceeds gamma(Y): |X + Y| >= |X| + gamma(Y) already
  structure,        // X + 2Y inside X + Y after normalization
  singleton,        // Y_z has one element left
  budget,
};

std::string_view to_string(DescentStop s) noexcept;

struct DescentTrace {
  std::vector<DescentStep> steps;
  DescentOutcome outcome = DescentOutcome::budget_exhausted;
  DescentStop stop = DescentStop::none;
  std::size_t root_lhs = 0;    // |X + Y|
  std::int64_t root_rhs = 0;   // |X| + min(gamma(Y), |Y| - 1)
  std::size_t final_lhs = 0;   // |X + Y| of the last pair, measured
  std::int64_t transported_bound = 0;  // final_lhs carried back through every ledger
};

/// Davenport-transform descent on (X, Y). Each step strictly shrinks Y; the
/// bound at the last pair is transported back along the step ledgers and
/// the outcome is bound_certified when it reaches |X| + min(gamma(Y), |Y| - 1).
///
/// Needs a cancellative monoid, commutative <Y>, a unit in Y, |Y| >= 2 and
/// nonempty X; otherwise throws PreconditionViolated.
DescentTrace descent(const FinSet& x, const FinSet& y, std::size_t budget = kDefaultBudget);

}  // namespace addcomb

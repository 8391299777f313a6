#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "addcomb/gamma.hpp"

namespace addcomb {

/// Outcome of a checker whose inequality is guarded by a hypothesis.
enum class CheckStatus { holds, violated, hypothesis_not_met, hypothesis_unknown };

std::string_view to_string(CheckStatus s) noexcept;

struct PropertyCheck {
  bool holds = true;
  std::optional<Element> witness;  // set when the property fails
};

/// Davenport transform of (X, Y) at a gap element z in (X + 2Y) \ (X + Y):
/// Y splits into y_tilde = {y : z in X + Y + y} and y_keep = Y \ y_tilde.
struct DavenportPair {
  Element z;
  FinSet y_tilde;
  FinSet y_keep;
  FinSet z_minus_y_tilde;
  std::size_t sumset_size = 0;       // |X + Y|
  std::size_t keep_sumset_size = 0;  // |X + Y_z|
  PropertyCheck inclusion;           // (X + Y_z) u (z - Y~_z) inside X + Y
  PropertyCheck disjoint;            // (X + Y_z) n (z - Y~_z) empty
  bool injection = true;             // |z - Y~_z| >= |Y~_z|
  bool ledger = true;                // |X + Y| + |Y_z| >= |X + Y_z| + |Y|

  bool all_hold() const noexcept {
    return inclusion.holds && disjoint.holds && injection && ledger;
  }
};

/// Throws PreconditionViolated unless the ambient is cancellative, <Y> is
/// commutative and z lies in the gap set.
DavenportPair davenport_transform(const FinSet& x, const FinSet& y, const Element& z);

/// Either |X + Y| >= |X| + min(gamma(Y), |Y| - 1), or X + 2Y = X + Y + ybar
/// for a unit ybar of Y.
struct TheoremVerdict {
  std::size_t bound_lhs = 0;
  std::int64_t bound_rhs = 0;
  std::size_t size_x = 0;
  std::size_t size_y = 0;
  ExtNat gamma_y;
  bool branch_i = false;
  bool branch_ii = false;
  std::optional<Element> structure_witness;
  bool disjunction_holds = false;
};

TheoremVerdict check_theorem_main(const FinSet& x, const FinSet& y,
                                  std::size_t budget = kDefaultBudget,
                                  GammaCache* cache = nullptr);

/// The three structure conditions:
///   (i)   X + 2Y = X + Y + ybar for some unit ybar of Y;
///   (ii)  X + 2Y = X + Y + y for every y in Y;
///   (iii) X + <<Y - ybar>> = X + <Y - ybar> = X + Y - ybar for every unit ybar.
struct EquivalenceVerdict {
  bool cond_i = false;
  bool cond_ii = false;
  bool cond_iii = false;
  bool agree = false;
  std::optional<std::string> counterwitness;
};

EquivalenceVerdict check_prop_equiv(const FinSet& x, const FinSet& y,
                                    std::size_t budget = kDefaultBudget);

/// lhs >= rhs with rhs = min(gamma, size_term).
struct BoundReport {
  std::size_t lhs = 0;
  ExtNat gamma;
  std::int64_t size_term = 0;
  std::int64_t rhs = 0;
  bool holds = false;
};

/// |X + Y| >= min(gamma(Y), |X| + |Y| - 1) for nonempty X and commutative <Y>.
BoundReport check_cor_udt(const FinSet& x, const FinSet& y, std::size_t budget = kDefaultBudget,
                          GammaCache* cache = nullptr);

/// |X + Y| >= min(gamma(X + Y), |X| + |Y| - 1) for nonempty X, Y.
BoundReport check_weaker_bound(const FinSet& x, const FinSet& y,
                               std::size_t budget = kDefaultBudget, GammaCache* cache = nullptr);

/// |X_1 + ... + X_n| >= min(gamma(X_1, ..., X_n), |X_1| + ... + |X_n| + 1 - n).
BoundReport conjecture_holds(std::span<const FinSet> sets, std::size_t budget = kDefaultBudget,
                             GammaCache* cache = nullptr);

/// Union-with-sumset bound in a cancellative monoid:
///   |X u (X + Y)| >= |X| + min(gamma(Y u {0}), |Y| - [0 in Y])
/// whenever X u (X + Y) != X + <<Y>>. In groups the report also carries the
/// classical form |X u (X + Y)| >= |X| + min(v(Y), |Y|), v the least order in Y.
struct HsReport {
  CheckStatus status = CheckStatus::hypothesis_unknown;
  bool hypothesis = false;
  bool hypothesis_decided = false;
  std::size_t union_size = 0;
  std::size_t size_x = 0;
  std::size_t size_y = 0;
  ExtNat gamma_y0;  // gamma(Y u {0})
  bool identity_in_y = false;
  std::int64_t rhs = 0;
  bool holds = false;

  struct Classical {
    ExtNat min_order;
    std::int64_t rhs = 0;
    bool holds = false;
    bool implied = false;  // rhs >= classical rhs, so the first bound implies it
  };
  std::optional<Classical> classical;
};

HsReport check_cor_hs(const FinSet& x, const FinSet& y, std::size_t budget = kDefaultBudget,
                      GammaCache* cache = nullptr);

/// 1 for a singleton, else min over y0 of max over y != y0 of gcd(n, y - y0).
/// Throws WrongAmbient outside zmod and EmptySet on an empty Y.
std::int64_t delta_y(const FinSet& y);

/// Cyclic-group form of the main bound, using gamma(Y) = n / delta_Y.
/// The bound checked is |X + Y| >= |X| + min(n / delta_Y, |Y| - 1); the
/// report also evaluates |X| + min(n / delta_Y, |X| + |Y| - 1) as `literal_rhs`.
struct ZnReport {
  CheckStatus status = CheckStatus::hypothesis_not_met;
  bool hypothesis = false;  // X + 2Y != X + Y + ybar for some ybar in Y
  std::int64_t n = 0;
  std::int64_t delta = 0;
  std::int64_t quotient = 0;  // n / delta
  ExtNat gamma_y;
  bool gamma_identity_holds = false;
  std::size_t lhs = 0;
  std::int64_t rhs = 0;
  bool holds = false;
  std::int64_t literal_rhs = 0;
  bool literal_holds = false;
};

ZnReport check_cor_zn(const FinSet& x, const FinSet& y, std::size_t budget = kDefaultBudget,
                      GammaCache* cache = nullptr);

}  // namespace addcomb

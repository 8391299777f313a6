#pragma once

#include <cstddef>
#include <span>

#include "addcomb/ext_nat.hpp"
#include "addcomb/finset.hpp"

namespace addcomb {

inline constexpr std::size_t kDefaultBudget = 1'000'000;

/// {x + y : x in X, y in Y}.
FinSet sumset(const FinSet& x, const FinSet& y);
/// X_1 + ... + X_n folded left to right. Needs at least one set.
FinSet sumset(std::span<const FinSet> sets);
/// X + x and x + X for a single element.
FinSet translate(const FinSet& x, const Element& shift);
FinSet translate(const Element& shift, const FinSet& x);
/// nX, with 1X = X.
FinSet iterated_sumset(std::size_t n, const FinSet& x);

/// Side::right gives X - Y = {z : z + y = x for some x, y}; Side::left gives
/// -Y + X = {z : y + z = x for some x, y}.
FinSet difference(Side side, const FinSet& x, const FinSet& y);

struct GenResult {
  FinSet closure;
  bool complete = false;
  std::size_t budget_used = 0;
};

/// The subsemigroup <X>, grown breadth-first by right multiplication with the
/// generators. Stops with complete = false once the closure would exceed
/// `budget` elements.
GenResult generated(const FinSet& x, std::size_t budget = kDefaultBudget);
/// <<X>>: X together with the inverses of its units, then generated.
GenResult generated_sym(const FinSet& x, std::size_t budget = kDefaultBudget);

/// |<x>|. INF is returned only when the ambient proves it analytically.
/// Throws BudgetExceeded when enumeration needs more than `budget` elements.
ExtNat ord_elem(const Ambient& a, const Element& x, std::size_t budget = kDefaultBudget);
ExtNat ord_set(const FinSet& x, std::size_t budget = kDefaultBudget);

/// {z in candidates : x + z = z + x for every x in X}.
FinSet center(const FinSet& x, const FinSet& candidates);
/// Center over the whole (finite) carrier.
FinSet center(const FinSet& x);

/// X intersected with the units of the ambient.
FinSet units_of(const FinSet& x);

/// Whether <Y> is commutative. A subsemigroup generated by pairwise commuting
/// elements is commutative (every product rearranges one generator at a time),
/// and the converse is immediate, so checking the pairs of Y is exact.
bool is_commutative_generated(const FinSet& y);

}  // namespace addcomb

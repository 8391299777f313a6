#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>

#include "addcomb/ext_nat.hpp"
#include "addcomb/finset.hpp"
#include "addcomb/setops.hpp"

namespace addcomb {

struct GammaValue {
  ExtNat value;
  /// The maximizing unit x0, smallest in canonical order among ties.
  std::optional<Element> witness;

  friend bool operator==(const GammaValue&, const GammaValue&) = default;
};

/// Memo of gamma_set results keyed by set. Holds one ambient at a time and
/// starts over when a set from another ambient arrives. Not thread-safe: give
/// each worker its own.
class GammaCache {
 public:
  const GammaValue* find(const FinSet& x) const;
  void insert(const FinSet& x, const GammaValue& g);
  std::size_t size() const noexcept { return memo_.size(); }

 private:
  AmbientPtr ambient_;
  std::map<FinSet, GammaValue> memo_;
};

/// The Cauchy-Davenport constant of a set:
///   |X|                                         if |X| <= 1,
///   sup over units x0 in X of inf over x != x0 in X of ord(x - x0)   otherwise,
/// with sup of nothing = 0 and inf of nothing = INF.
GammaValue gamma_set(const FinSet& x, std::size_t budget = kDefaultBudget,
                     GammaCache* cache = nullptr);

/// 0 if some set is empty, else the largest gamma_set of the tuple.
ExtNat gamma_tuple(std::span<const FinSet> sets, std::size_t budget = kDefaultBudget,
                   GammaCache* cache = nullptr);

/// Smallest ord(y) over y in Y. Throws EmptySet on an empty Y.
ExtNat min_order(const FinSet& y, std::size_t budget = kDefaultBudget);

/// inf over y != y0 in Y of ord(y - y0).
ExtNat shifted_min_order(const FinSet& y, const Element& y0, std::size_t budget = kDefaultBudget);

/// Smallest unit ybar of Y with X + 2Y = X + Y + ybar, if any.
std::optional<Element> structure_witness(const FinSet& x, const FinSet& y);

/// (X + y0, -y0 + Y) for a unit y0 of Y, with its three invariance checks.
struct InvariantTransform {
  FinSet x0;
  FinSet y0;
  Element shift;
  std::size_t sumset_before = 0;
  std::size_t sumset_after = 0;
  std::size_t size_x = 0;
  std::size_t size_y = 0;
  ExtNat gamma_x;
  ExtNat gamma_x0;
  ExtNat gamma_y;
  ExtNat gamma_y0;
  bool s1 = false;  // |X + Y| = |X0 + Y0|
  bool s2 = false;  // |X| = |X0| and |Y| = |Y0|
  bool s3 = false;  // gamma(X) = gamma(X0) and gamma(Y) = gamma(Y0)

  bool holds() const noexcept { return s1 && s2 && s3; }
};

/// Throws NotAUnit when y0 is not a unit of Y, PreconditionViolated outside
/// cancellative monoids, and std::logic_error if an invariance check fails.
InvariantTransform invariant_transform(const FinSet& x, const FinSet& y, const Element& y0,
                                       std::size_t budget = kDefaultBudget,
                                       GammaCache* cache = nullptr);

/// An invariant transform whose shifted Y contains the identity and whose other
/// elements all have order at least kappa.
struct Normalization {
  InvariantTransform transform;
  std::int64_t kappa = 0;
  ExtNat threshold;  // inf over y != y0 of ord(y - y0) for the chosen y0
  bool identity_in_y0 = false;
  bool orders_meet_kappa = false;
  bool commutativity_preserved = false;
  bool structure_failure_preserved = false;
};

/// Picks the canonically smallest unit y0 of Y whose shifted minimum order
/// reaches kappa. Throws NoWitness when none does (kappa > gamma(Y)).
Normalization normalize_pair(const FinSet& x, const FinSet& y, std::int64_t kappa,
                             std::size_t budget = kDefaultBudget, GammaCache* cache = nullptr);

}  // namespace addcomb

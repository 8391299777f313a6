#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "addcomb/codec.hpp"

namespace addcomb {

/// One ambient per isomorphism class of finite abelian groups of order at most
/// max_order, as Z_{d1} x ... x Z_{dk} with d1 | d2 | ... | dk. Ordered by
/// group order, then by number of factors, then by factors. Z1 is zmod(1).
std::vector<AmbientPtr> enumerate_abelian_groups(std::int64_t max_order);

struct CheckOutcome {
  bool violated = false;
  json verdict;
};

/// A checker runs on one tuple of sets. Throwing PreconditionViolated or
/// BudgetExceeded marks the instance as skipped.
struct Checker {
  std::string id;
  std::size_t arity = 2;  // 0 accepts any number of summands
  /// The verdict is unchanged by (X_1, ..., X_n) -> (X_1 + g, ..., -g + X_n) for a
  /// unit g, which licenses fixing the identity in the last set.
  bool translation_invariant = false;
  std::function<CheckOutcome(std::span<const FinSet>, std::size_t budget, GammaCache*)> run;
};

/// theorem, prop13, udt, hs, zn, weaker, conjecture. The long names
/// theorem_main, prop_equiv, cor_udt, cor_hs, cor_zn, weaker_bound are aliases.
/// Throws SpecInvalid for an unknown id.
const Checker& find_checker(std::string_view id);
std::vector<std::string> checker_ids();

struct SearchSpec {
  enum class Family { zmod_range, abelian_up_to_order, explicit_list };
  Family family = Family::zmod_range;
  std::int64_t n_min = 2;
  std::int64_t n_max = 2;
  std::int64_t max_order = 1;
  std::vector<json> ambients;  // descriptions for explicit_list

  std::string checker = "theorem";
  std::size_t n_summands = 2;

  bool nonempty = true;
  std::optional<std::size_t> max_size;
  bool contains_identity = false;      // last set only
  bool commutative_generated = false;  // last set only

  bool random = false;
  std::optional<std::uint64_t> seed;
  std::uint64_t trials = 0;

  std::size_t workers = 1;
  std::size_t budget = kDefaultBudget;
  bool symmetry_reduction = false;
  std::uint64_t ceiling = std::uint64_t{1} << 30;
  std::int64_t value_bound = 20;  // sampling window in infinite ambients
};

/// Throws SpecInvalid on a malformed document.
SearchSpec parse_spec(const json& j);
json to_json(const SearchSpec& s);

struct SearchReport {
  std::uint64_t instances_checked = 0;
  std::uint64_t instances_skipped = 0;
  std::vector<json> violations;  // each replays through replay()
  double elapsed_seconds = 0;
  std::vector<std::uint64_t> per_worker;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> ambients;
  bool symmetry_reduction_applied = false;
};

json to_json(const SearchReport& r);

/// Throws SpecInvalid or CeilingExceeded. Counts and violations depend only on
/// the spec, never on the worker count.
SearchReport run_search(const SearchSpec& spec);
SearchReport run_search(const SearchSpec& spec, const Checker& checker);

/// {"ambient", "checker", "sets"} plus "instance_id", the digest of those three.
json encode_instance(const Ambient& a, std::string_view checker, std::span<const FinSet> sets);

struct ReplayResult {
  CheckOutcome outcome;
  bool matches_recorded = false;  // verdict dump equals the recorded one
};

/// Throws MalformedInstance on an unparsable or tampered encoding.
ReplayResult replay(const json& instance);
ReplayResult replay(const json& instance, const Checker& checker);

}  // namespace addcomb

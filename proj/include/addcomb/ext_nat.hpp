#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>

namespace addcomb {

/// A natural number or the symbol INF, totally ordered with n < INF.
class ExtNat {
 public:
  constexpr ExtNat() = default;
  constexpr ExtNat(std::uint64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)

  static constexpr ExtNat inf() {
    ExtNat e;
    e.inf_ = true;
    return e;
  }

  constexpr bool is_inf() const noexcept { return inf_; }
  constexpr bool is_finite() const noexcept { return !inf_; }

  /// Throws std::logic_error on INF.
  constexpr std::uint64_t value() const {
    if (inf_) throw std::logic_error("ExtNat::value() on INF");
    return value_;
  }

  constexpr std::strong_ordering operator<=>(const ExtNat& o) const noexcept {
    if (inf_ || o.inf_) return inf_ <=> o.inf_;
    return value_ <=> o.value_;
  }
  constexpr bool operator==(const ExtNat& o) const noexcept = default;

  std::string to_string() const;

 private:
  std::uint64_t value_ = 0;
  bool inf_ = false;
};

/// Least upper bound; sup of nothing is 0.
constexpr ExtNat ext_sup(std::initializer_list<ExtNat> xs) {
  ExtNat out{0};
  for (auto x : xs) out = x > out ? x : out;
  return out;
}

/// Greatest lower bound; inf of nothing is INF.
constexpr ExtNat ext_inf(std::initializer_list<ExtNat> xs) {
  ExtNat out = ExtNat::inf();
  for (auto x : xs) out = x < out ? x : out;
  return out;
}

/// min(e, k) as a signed integer. Bounds in the checkers mix an ExtNat constant
/// with a size term that can be negative (e.g. |Y| - 1 with Y empty).
constexpr std::int64_t min_with(ExtNat e, std::int64_t k) {
  if (e.is_inf() || k < 0) return k;
  const auto v = e <=> ExtNat{static_cast<std::uint64_t>(k)};
  return v == std::strong_ordering::less ? static_cast<std::int64_t>(e.value())
                                         : k;
}

}  // namespace addcomb

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "addcomb/ambient.hpp"
#include "addcomb/element.hpp"

namespace addcomb {

using Bits = boost::dynamic_bitset<std::uint64_t>;

/// A finite subset of one ambient, kept duplicate-free in canonical order.
/// Finite carriers up to kBitsLimit elements also carry a bit-vector mirror
/// indexed by Ambient::index_of, which the sumset fast paths use.
class FinSet {
 public:
  static constexpr std::size_t kBitsLimit = std::size_t{1} << 16;

  explicit FinSet(AmbientPtr ambient);
  /// Validates every element; sorts and deduplicates.
  FinSet(AmbientPtr ambient, std::vector<Element> elements);
  static FinSet from_bits(AmbientPtr ambient, Bits bits);
  static FinSet from_mask(AmbientPtr ambient, std::uint64_t mask);
  static FinSet singleton(AmbientPtr ambient, Element x);
  /// The whole carrier of a finite ambient.
  static FinSet carrier(AmbientPtr ambient);

  const Ambient& ambient() const noexcept { return *ambient_; }
  const AmbientPtr& ambient_ptr() const noexcept { return ambient_; }

  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  bool contains(const Element& x) const;
  const std::vector<Element>& elements() const noexcept { return elements_; }
  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }
  const Element& front() const { return elements_.front(); }

  bool has_bits() const noexcept { return has_bits_; }
  const Bits& bits() const noexcept { return bits_; }
  /// Bitmask of a set over a carrier with at most 64 elements.
  std::uint64_t mask() const;

  friend bool operator==(const FinSet& a, const FinSet& b);
  friend std::strong_ordering operator<=>(const FinSet& a, const FinSet& b);

 private:
  FinSet(AmbientPtr ambient, std::vector<Element> sorted, Bits bits, bool has_bits);

  AmbientPtr ambient_;
  std::vector<Element> elements_;
  Bits bits_;
  bool has_bits_ = false;
};

/// Throws AmbientMismatch when the sets live in different ambients.
void require_same_ambient(const FinSet& a, const FinSet& b);

FinSet set_union(const FinSet& a, const FinSet& b);
FinSet set_intersection(const FinSet& a, const FinSet& b);
FinSet set_minus(const FinSet& a, const FinSet& b);
bool is_subset(const FinSet& a, const FinSet& b);

}  // namespace addcomb

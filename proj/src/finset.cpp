#include "addcomb/finset.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

#include "addcomb/error.hpp"

namespace addcomb {

namespace {

bool wants_bits(const Ambient& a) {
  return a.is_finite() && a.order() <= FinSet::kBitsLimit;
}

Bits bits_for(const Ambient& a, const std::vector<Element>& elements) {
  Bits b(a.order());
  for (const auto& x : elements) b.set(a.index_of(x));
  return b;
}

std::vector<Element> elements_for(const Ambient& a, const Bits& bits) {
  std::vector<Element> out;
  out.reserve(bits.count());
  for (auto i = bits.find_first(); i != Bits::npos; i = bits.find_next(i))
    out.push_back(a.element_at(i));
  return out;
}

}  // namespace

FinSet::FinSet(AmbientPtr ambient) : ambient_(std::move(ambient)) {
  if (!ambient_) throw std::invalid_argument("FinSet needs an ambient");
  has_bits_ = wants_bits(*ambient_);
  if (has_bits_) bits_.resize(ambient_->order());
}

FinSet::FinSet(AmbientPtr ambient, std::vector<Element> elements) : FinSet(std::move(ambient)) {
  for (const auto& x : elements) ambient_->require(x);
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  elements_ = std::move(elements);
  if (has_bits_) bits_ = bits_for(*ambient_, elements_);
}

FinSet::FinSet(AmbientPtr ambient, std::vector<Element> sorted, Bits bits, bool has_bits)
    : ambient_(std::move(ambient)),
      elements_(std::move(sorted)),
      bits_(std::move(bits)),
      has_bits_(has_bits) {}

FinSet FinSet::from_bits(AmbientPtr ambient, Bits bits) {
  if (!wants_bits(*ambient) || bits.size() != ambient->order())
    throw std::invalid_argument("bit-vector does not match the carrier");
  auto elements = elements_for(*ambient, bits);
  return FinSet(std::move(ambient), std::move(elements), std::move(bits), true);
}

FinSet FinSet::from_mask(AmbientPtr ambient, std::uint64_t mask) {
  if (!ambient->is_finite() || ambient->order() > 64)
    throw std::invalid_argument("from_mask needs a carrier of at most 64 elements");
  Bits bits(ambient->order(), mask);
  return from_bits(std::move(ambient), std::move(bits));
}

FinSet FinSet::singleton(AmbientPtr ambient, Element x) {
  std::vector<Element> v;
  v.push_back(std::move(x));
  return FinSet(std::move(ambient), std::move(v));
}

FinSet FinSet::carrier(AmbientPtr ambient) {
  if (!wants_bits(*ambient)) throw std::invalid_argument("carrier needs a small finite ambient");
  Bits bits(ambient->order());
  bits.set();
  return from_bits(std::move(ambient), std::move(bits));
}

bool FinSet::contains(const Element& x) const {
  if (has_bits_) return ambient_->contains(x) && bits_.test(ambient_->index_of(x));
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

std::uint64_t FinSet::mask() const {
  if (!has_bits_ || bits_.size() > 64) throw std::logic_error("mask() needs a carrier of at most 64");
  std::uint64_t m = 0;
  boost::to_block_range(bits_, &m);
  return m;
}

bool operator==(const FinSet& a, const FinSet& b) {
  if (!same_ambient(a.ambient_, b.ambient_)) return false;
  if (a.has_bits_ && b.has_bits_) return a.bits_ == b.bits_;
  return a.elements_ == b.elements_;
}

std::strong_ordering operator<=>(const FinSet& a, const FinSet& b) {
  return std::lexicographical_compare_three_way(a.elements_.begin(), a.elements_.end(),
                                                b.elements_.begin(), b.elements_.end());
}

void require_same_ambient(const FinSet& a, const FinSet& b) {
  if (!same_ambient(a.ambient_ptr(), b.ambient_ptr()))
    throw Error(ErrorCode::ambient_mismatch,
                "sets live in " + a.ambient().name() + " and " + b.ambient().name());
}

namespace {

template <typename BitOp, typename SeqOp>
FinSet combine(const FinSet& a, const FinSet& b, BitOp bit_op, SeqOp seq_op) {
  require_same_ambient(a, b);
  if (a.has_bits()) return FinSet::from_bits(a.ambient_ptr(), bit_op(a.bits(), b.bits()));
  std::vector<Element> out;
  seq_op(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return FinSet(a.ambient_ptr(), std::move(out));
}

}  // namespace

FinSet set_union(const FinSet& a, const FinSet& b) {
  return combine(a, b, [](const Bits& x, const Bits& y) { return x | y; },
                 [](auto... args) { std::set_union(args...); });
}

FinSet set_intersection(const FinSet& a, const FinSet& b) {
  return combine(a, b, [](const Bits& x, const Bits& y) { return x & y; },
                 [](auto... args) { std::set_intersection(args...); });
}

FinSet set_minus(const FinSet& a, const FinSet& b) {
  return combine(a, b, [](const Bits& x, const Bits& y) { return x - y; },
                 [](auto... args) { std::set_difference(args...); });
}

bool is_subset(const FinSet& a, const FinSet& b) {
  require_same_ambient(a, b);
  if (a.has_bits()) return a.bits().is_subset_of(b.bits());
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace addcomb

#pragma once

#include <compare>
#include <cstdint>
#include <variant>
#include <vector>

namespace addcomb {

/// A word over a free monoid's alphabet, stored as letter indices.
/// Words order by length first, then letter by letter.
struct Word {
  std::vector<std::uint32_t> letters;

  bool empty() const noexcept { return letters.empty(); }
  std::size_t length() const noexcept { return letters.size(); }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);
};

// An element is interpreted by the ambient it is used with; it carries no
// reference to it. Residues and Cayley-table indices are scalars, lattice
// points are vectors, free-monoid words are words and product elements are
// tuples of factor elements.
class Element {
 public:
  using Vector = std::vector<std::int64_t>;
  using Tuple = std::vector<Element>;

  Element() : payload_(std::int64_t{0}) {}
  explicit Element(std::int64_t scalar) : payload_(scalar) {}
  explicit Element(Vector v) : payload_(std::move(v)) {}
  explicit Element(Word w) : payload_(std::move(w)) {}
  explicit Element(Tuple t) : payload_(std::move(t)) {}

  bool is_scalar() const noexcept { return payload_.index() == 0; }
  bool is_vector() const noexcept { return payload_.index() == 1; }
  bool is_word() const noexcept { return payload_.index() == 2; }
  bool is_tuple() const noexcept { return payload_.index() == 3; }

  std::int64_t scalar() const { return std::get<0>(payload_); }
  const Vector& vec() const { return std::get<1>(payload_); }
  const Word& word() const { return std::get<2>(payload_); }
  const Tuple& parts() const { return std::get<3>(payload_); }

  friend bool operator==(const Element& a, const Element& b);
  friend std::strong_ordering operator<=>(const Element& a, const Element& b);

 private:
  std::variant<std::int64_t, Vector, Word, Tuple> payload_;
};

}  // namespace addcomb

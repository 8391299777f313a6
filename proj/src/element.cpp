#include "addcomb/element.hpp"

#include <algorithm>

namespace addcomb {

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.letters.size() <=> b.letters.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(
      a.letters.begin(), a.letters.end(), b.letters.begin(), b.letters.end());
}

bool operator==(const Element& a, const Element& b) {
  return a.payload_ == b.payload_;
}

std::strong_ordering operator<=>(const Element& a, const Element& b) {
  if (auto c = a.payload_.index() <=> b.payload_.index(); c != 0) return c;
  switch (a.payload_.index()) {
    case 0:
      return a.scalar() <=> b.scalar();
    case 1:
      return std::lexicographical_compare_three_way(
          a.vec().begin(), a.vec().end(), b.vec().begin(), b.vec().end());
    case 2:
      return a.word() <=> b.word();
    default:
      return std::lexicographical_compare_three_way(
          a.parts().begin(), a.parts().end(), b.parts().begin(),
          b.parts().end());
  }
}

}  // namespace addcomb

#include "addcomb/ext_nat.hpp"

namespace addcomb {

std::string ExtNat::to_string() const {
  return inf_ ? std::string("inf") : std::to_string(value_);
}

}  // namespace addcomb

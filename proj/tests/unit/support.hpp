#pragma once

// Helpers and independent oracles shared by the unit tests. The oracles work
// on plain integers and never call into the library.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "addcomb/ambient.hpp"
#include "addcomb/finset.hpp"

namespace addcomb::test {

inline FinSet ints(const AmbientPtr& a, std::initializer_list<std::int64_t> xs) {
  std::vector<Element> v;
  for (auto x : xs) v.emplace_back(x);
  return FinSet(a, std::move(v));
}

inline FinSet nat1(const AmbientPtr& a, std::initializer_list<std::int64_t> xs) {
  std::vector<Element> v;
  for (auto x : xs) v.emplace_back(Element::Vector{x});
  return FinSet(a, std::move(v));
}

inline Word word(const Ambient& a, const std::string& s) {
  Word w;
  for (char c : s) {
    const auto& al = a.alphabet();
    w.letters.push_back(static_cast<std::uint32_t>(
        std::find(al.begin(), al.end(), std::string(1, c)) - al.begin()));
  }
  return w;
}

inline FinSet words(const AmbientPtr& a, std::initializer_list<const char*> ws) {
  std::vector<Element> v;
  for (auto s : ws) v.emplace_back(word(*a, s));
  return FinSet(a, std::move(v));
}

inline std::vector<std::int64_t> residues(const FinSet& s) {
  std::vector<std::int64_t> out;
  for (const auto& e : s) out.push_back(e.scalar());
  return out;
}

inline std::vector<std::int64_t> mask_to_vec(std::uint64_t m) {
  std::vector<std::int64_t> out;
  for (int i = 0; i < 64; ++i)
    if (m >> i & 1) out.push_back(i);
  return out;
}

namespace oracle {

/// Sorted {x + y mod n}.
inline std::vector<std::int64_t> sumset_mod(std::int64_t n, const std::vector<std::int64_t>& x,
                                            const std::vector<std::int64_t>& y) {
  std::set<std::int64_t> out;
  for (auto a : x)
    for (auto b : y) out.insert((a + b) % n);
  return {out.begin(), out.end()};
}

/// Smallest k >= 1 with k*d = 0 mod n, by counting.
inline std::int64_t order_mod(std::int64_t n, std::int64_t d) {
  d = ((d % n) + n) % n;
  std::int64_t k = 1;
  for (std::int64_t s = d; s != 0; s = (s + d) % n) ++k;
  return k;
}

/// gamma of a subset of Z_n by the defining sup-inf, with counted orders.
/// Returns n + 1 never (all orders are finite in Z_n); |X| for |X| <= 1.
inline std::int64_t gamma_mod(std::int64_t n, const std::vector<std::int64_t>& x) {
  if (x.size() <= 1) return static_cast<std::int64_t>(x.size());
  std::int64_t best = 0;
  for (auto x0 : x) {
    std::int64_t worst = INT64_MAX;
    for (auto u : x)
      if (u != x0) worst = std::min(worst, order_mod(n, u - x0));
    best = std::max(best, worst);
  }
  return best;
}

inline bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace oracle

}  // namespace addcomb::test

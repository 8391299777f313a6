#include "addcomb/setops.hpp"

#include <deque>
#include <set>
#include <stdexcept>

#include "addcomb/error.hpp"

namespace addcomb {

namespace {

Bits rotate_up(const Bits& b, std::size_t s) {
  if (s == 0) return b;
  return (b << s) | (b >> (b.size() - s));
}

std::vector<std::size_t> indices(const Bits& b) {
  std::vector<std::size_t> out;
  out.reserve(b.count());
  for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) out.push_back(i);
  return out;
}

}  // namespace

FinSet sumset(const FinSet& x, const FinSet& y) {
  require_same_ambient(x, y);
  const auto& a = x.ambient();
  if (x.empty() || y.empty()) return FinSet(x.ambient_ptr());
  if (x.has_bits()) {
    Bits out(a.order());
    if (a.kind() == AmbientKind::zmod) {
      for (auto j = y.bits().find_first(); j != Bits::npos; j = y.bits().find_next(j))
        out |= rotate_up(x.bits(), j);
    } else {
      const auto ys = indices(y.bits());
      for (auto i = x.bits().find_first(); i != Bits::npos; i = x.bits().find_next(i))
        for (auto j : ys) out.set(a.add_index(i, j));
    }
    return FinSet::from_bits(x.ambient_ptr(), std::move(out));
  }
  std::vector<Element> out;
  out.reserve(x.size() * y.size());
  for (const auto& u : x)
    for (const auto& v : y) out.push_back(a.add(u, v));
  return FinSet(x.ambient_ptr(), std::move(out));
}

FinSet sumset(std::span<const FinSet> sets) {
  if (sets.empty()) throw std::invalid_argument("sumset of an empty tuple");
  FinSet acc = sets.front();
  for (std::size_t i = 1; i < sets.size(); ++i) acc = sumset(acc, sets[i]);
  return acc;
}

FinSet translate(const FinSet& x, const Element& shift) {
  return sumset(x, FinSet::singleton(x.ambient_ptr(), shift));
}

FinSet translate(const Element& shift, const FinSet& x) {
  return sumset(FinSet::singleton(x.ambient_ptr(), shift), x);
}

FinSet iterated_sumset(std::size_t n, const FinSet& x) {
  if (n == 0) throw Error(ErrorCode::precondition_violated, "iterated_sumset needs n >= 1");
  FinSet acc = x;
  for (std::size_t i = 1; i < n; ++i) acc = sumset(acc, x);
  return acc;
}

FinSet difference(Side side, const FinSet& x, const FinSet& y) {
  require_same_ambient(x, y);
  const auto& a = x.ambient();
  if (x.empty() || y.empty()) return FinSet(x.ambient_ptr());
  // Without cancellativity a quotient need not be unique, so small carriers are
  // scanned directly against the definition.
  if (x.has_bits() && !a.axioms().cancellative) {
    Bits out(a.order());
    const auto ys = indices(y.bits());
    for (std::size_t z = 0; z < a.order(); ++z)
      for (auto j : ys) {
        const auto s = side == Side::right ? a.add_index(z, j) : a.add_index(j, z);
        if (x.bits().test(s)) {
          out.set(z);
          break;
        }
      }
    return FinSet::from_bits(x.ambient_ptr(), std::move(out));
  }
  std::vector<Element> out;
  for (const auto& u : x)
    for (const auto& v : y)
      if (auto z = a.divide(side, u, v)) out.push_back(std::move(*z));
  return FinSet(x.ambient_ptr(), std::move(out));
}

GenResult generated(const FinSet& x, std::size_t budget) {
  if (budget < x.size())
    throw Error(ErrorCode::precondition_violated, "generation budget is smaller than |X|");
  const auto& a = x.ambient();
  if (x.has_bits()) {
    Bits closure = x.bits();
    const auto gens = indices(x.bits());
    std::deque<std::size_t> queue(gens.begin(), gens.end());
    std::size_t size = gens.size();
    while (!queue.empty()) {
      const auto s = queue.front();
      queue.pop_front();
      for (auto g : gens) {
        const auto t = a.add_index(s, g);
        if (closure.test(t)) continue;
        if (size == budget) return {FinSet::from_bits(x.ambient_ptr(), closure), false, size};
        closure.set(t);
        ++size;
        queue.push_back(t);
      }
    }
    return {FinSet::from_bits(x.ambient_ptr(), std::move(closure)), true, size};
  }
  std::set<Element> closure(x.begin(), x.end());
  std::deque<Element> queue(x.begin(), x.end());
  auto finish = [&](bool complete) {
    return GenResult{FinSet(x.ambient_ptr(), {closure.begin(), closure.end()}), complete,
                     closure.size()};
  };
  while (!queue.empty()) {
    const Element s = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : x) {
      Element t = a.add(s, g);
      if (closure.contains(t)) continue;
      if (closure.size() == budget) return finish(false);
      closure.insert(t);
      queue.push_back(std::move(t));
    }
  }
  return finish(true);
}

GenResult generated_sym(const FinSet& x, std::size_t budget) {
  std::vector<Element> gens(x.begin(), x.end());
  for (const auto& u : x)
    if (auto inv = x.ambient().invert(u)) gens.push_back(std::move(*inv));
  FinSet extended(x.ambient_ptr(), std::move(gens));
  if (budget < extended.size()) return {extended, false, extended.size()};
  return generated(extended, budget);
}

ExtNat ord_elem(const Ambient& a, const Element& x, std::size_t budget) {
  a.require(x);
  if (a.has_infinite_order(x)) return ExtNat::inf();
  // Orbit x, 2x, 3x, ... until it revisits an element.
  std::set<Element> seen;
  Element s = x;
  while (!seen.contains(s)) {
    if (seen.size() == budget)
      throw Error(ErrorCode::budget_exceeded, "ord needs more than " + std::to_string(budget) +
                                                  " elements in " + a.name());
    seen.insert(s);
    s = a.add(s, x);
  }
  return ExtNat{seen.size()};
}

ExtNat ord_set(const FinSet& x, std::size_t budget) {
  for (const auto& u : x)
    if (x.ambient().has_infinite_order(u)) return ExtNat::inf();
  if (x.size() > budget)
    throw Error(ErrorCode::budget_exceeded, "ord budget is smaller than |X|");
  auto gen = generated(x, budget);
  if (!gen.complete)
    throw Error(ErrorCode::budget_exceeded,
                "ord needs more than " + std::to_string(budget) + " elements");
  return ExtNat{gen.closure.size()};
}

FinSet center(const FinSet& x, const FinSet& candidates) {
  require_same_ambient(x, candidates);
  const auto& a = x.ambient();
  if (a.axioms().commutative) return candidates;
  std::vector<Element> out;
  for (const auto& z : candidates) {
    bool central = true;
    for (const auto& u : x) {
      if (a.add(u, z) != a.add(z, u)) {
        central = false;
        break;
      }
    }
    if (central) out.push_back(z);
  }
  return FinSet(x.ambient_ptr(), std::move(out));
}

FinSet center(const FinSet& x) {
  if (!x.has_bits())
    throw Error(ErrorCode::precondition_violated, "center over the carrier needs a finite ambient");
  return center(x, FinSet::carrier(x.ambient_ptr()));
}

FinSet units_of(const FinSet& x) {
  const auto& a = x.ambient();
  if (a.is_group()) return x;
  std::vector<Element> out;
  for (const auto& u : x)
    if (a.is_unit(u)) out.push_back(u);
  return FinSet(x.ambient_ptr(), std::move(out));
}

bool is_commutative_generated(const FinSet& y) {
  const auto& a = y.ambient();
  if (a.axioms().commutative) return true;
  const auto& e = y.elements();
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j)
      if (a.add(e[i], e[j]) != a.add(e[j], e[i])) return false;
  return true;
}

}  // namespace addcomb

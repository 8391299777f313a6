#include "addcomb/gamma.hpp"

#include <stdexcept>

#include "addcomb/error.hpp"

namespace addcomb {

namespace {

void require_cancellative_monoid(const Ambient& a, const char* op) {
  if (!a.axioms().cancellative || !a.is_monoid())
    throw Error(ErrorCode::precondition_violated,
                std::string(op) + " needs a cancellative monoid, got " + a.name());
}

bool ge_kappa(ExtNat v, std::int64_t kappa) {
  return kappa <= 0 || v >= ExtNat{static_cast<std::uint64_t>(kappa)};
}

}  // namespace

const GammaValue* GammaCache::find(const FinSet& x) const {
  if (!ambient_ || !(*ambient_ == x.ambient())) return nullptr;
  auto it = memo_.find(x);
  return it == memo_.end() ? nullptr : &it->second;
}

void GammaCache::insert(const FinSet& x, const GammaValue& g) {
  if (!ambient_ || !(*ambient_ == x.ambient())) {
    memo_.clear();
    ambient_ = x.ambient_ptr();
  }
  memo_.emplace(x, g);
}

ExtNat shifted_min_order(const FinSet& y, const Element& y0, std::size_t budget) {
  const auto& a = y.ambient();
  ExtNat best = ExtNat::inf();
  for (const auto& u : y) {
    if (u == y0) continue;
    auto d = a.divide(Side::right, u, y0);
    if (!d) throw Error(ErrorCode::not_a_unit, "cannot form y - y0 in " + a.name());
    best = std::min(best, ord_elem(a, *d, budget));
  }
  return best;
}

GammaValue gamma_set(const FinSet& x, std::size_t budget, GammaCache* cache) {
  if (x.size() <= 1) return {ExtNat{x.size()}, std::nullopt};
  if (cache)
    if (const auto* hit = cache->find(x)) return *hit;
  GammaValue out{ExtNat{0}, std::nullopt};
  for (const auto& x0 : units_of(x)) {
    const auto v = shifted_min_order(x, x0, budget);
    if (!out.witness || v > out.value) out = {v, x0};
  }
  if (cache) cache->insert(x, out);
  return out;
}

ExtNat gamma_tuple(std::span<const FinSet> sets, std::size_t budget, GammaCache* cache) {
  for (std::size_t i = 1; i < sets.size(); ++i) require_same_ambient(sets[0], sets[i]);
  ExtNat out{0};
  for (const auto& s : sets)
    if (s.empty()) return ExtNat{0};
  for (const auto& s : sets) out = std::max(out, gamma_set(s, budget, cache).value);
  return out;
}

ExtNat min_order(const FinSet& y, std::size_t budget) {
  if (y.empty()) throw Error(ErrorCode::empty_set, "min_order of an empty set");
  ExtNat out = ExtNat::inf();
  for (const auto& u : y) out = std::min(out, ord_elem(y.ambient(), u, budget));
  return out;
}

std::optional<Element> structure_witness(const FinSet& x, const FinSet& y) {
  const auto xy = sumset(x, y);
  const auto x2y = sumset(xy, y);
  for (const auto& ybar : units_of(y))
    if (x2y == translate(xy, ybar)) return ybar;
  return std::nullopt;
}

InvariantTransform invariant_transform(const FinSet& x, const FinSet& y, const Element& y0,
                                       std::size_t budget, GammaCache* cache) {
  require_same_ambient(x, y);
  const auto& a = x.ambient();
  require_cancellative_monoid(a, "invariant_transform");
  a.require(y0);
  if (!y.contains(y0) || !a.is_unit(y0))
    throw Error(ErrorCode::not_a_unit, "the shift must be a unit of Y");

  const auto single = FinSet::singleton(x.ambient_ptr(), y0);
  InvariantTransform t{translate(x, y0), difference(Side::left, y, single), y0};
  t.sumset_before = sumset(x, y).size();
  t.sumset_after = sumset(t.x0, t.y0).size();
  t.size_x = x.size();
  t.size_y = y.size();
  t.gamma_x = gamma_set(x, budget, cache).value;
  t.gamma_x0 = gamma_set(t.x0, budget, cache).value;
  t.gamma_y = gamma_set(y, budget, cache).value;
  t.gamma_y0 = gamma_set(t.y0, budget, cache).value;
  t.s1 = t.sumset_before == t.sumset_after;
  t.s2 = t.x0.size() == x.size() && t.y0.size() == y.size();
  t.s3 = t.gamma_x == t.gamma_x0 && t.gamma_y == t.gamma_y0;
  if (!t.holds()) throw std::logic_error("unit shift failed an invariance check in " + a.name());
  return t;
}

Normalization normalize_pair(const FinSet& x, const FinSet& y, std::int64_t kappa,
                             std::size_t budget, GammaCache* cache) {
  require_same_ambient(x, y);
  const auto& a = x.ambient();
  require_cancellative_monoid(a, "normalize_pair");
  if (y.size() < 2) throw Error(ErrorCode::precondition_violated, "normalize_pair needs |Y| >= 2");
  const auto units = units_of(y);
  if (units.empty()) throw Error(ErrorCode::precondition_violated, "normalize_pair needs a unit in Y");

  for (const auto& y0 : units) {
    const auto threshold = shifted_min_order(y, y0, budget);
    if (!ge_kappa(threshold, kappa)) continue;

    Normalization n{invariant_transform(x, y, y0, budget, cache), kappa, threshold};
    const auto& ny = n.transform.y0;
    const auto zero = *a.identity();
    n.identity_in_y0 = ny.contains(zero);
    n.orders_meet_kappa = true;
    for (const auto& u : ny)
      if (u != zero && !ge_kappa(ord_elem(a, u, budget), kappa)) n.orders_meet_kappa = false;
    const bool comm = is_commutative_generated(y);
    n.commutativity_preserved = !comm || is_commutative_generated(ny);
    const bool structure_fails = comm && !structure_witness(x, y);
    n.structure_failure_preserved = !structure_fails || !structure_witness(n.transform.x0, ny);
    return n;
  }
  throw Error(ErrorCode::no_witness,
              "no unit of Y reaches the order threshold " + std::to_string(kappa));
}

}  // namespace addcomb

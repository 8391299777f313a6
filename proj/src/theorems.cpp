#include "addcomb/theorems.hpp"

#include <algorithm>
#include <numeric>

#include "addcomb/error.hpp"

namespace addcomb {

namespace {

[[noreturn]] void precondition(const std::string& what) {
  throw Error(ErrorCode::precondition_violated, what);
}

void require_cancellative(const Ambient& a) {
  if (!a.axioms().cancellative) precondition(a.name() + " is not cancellative");
}

void require_commutative(const FinSet& y) {
  if (!is_commutative_generated(y)) precondition("<Y> is not commutative");
}

std::int64_t ssize(const FinSet& s) { return static_cast<std::int64_t>(s.size()); }

bool has_infinite_element(const FinSet& s) {
  return std::any_of(s.begin(), s.end(),
                     [&](const Element& e) { return s.ambient().has_infinite_order(e); });
}

// X + G compared against a finite target when G came from a budgeted
// generation. An incomplete G has more than `budget` elements, and so does
// X + G for nonempty X in a cancellative ambient.
bool sum_equals(const FinSet& x, const GenResult& g, const FinSet& target, std::size_t budget) {
  if (x.empty()) return target.empty();
  if (g.complete) return sumset(x, g.closure) == target;
  if (budget >= target.size()) return false;
  throw Error(ErrorCode::budget_exceeded, "generated subsemigroup exceeds the budget");
}

}  // namespace

std::string_view to_string(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::holds: return "holds";
    case CheckStatus::violated: return "violated";
    case CheckStatus::hypothesis_not_met: return "hypothesis_not_met";
    case CheckStatus::hypothesis_unknown: return "hypothesis_unknown";
  }
  return "?";
}

DavenportPair davenport_transform(const FinSet& x, const FinSet& y, const Element& z) {
  require_same_ambient(x, y);
  const auto& a = x.ambient();
  require_cancellative(a);
  require_commutative(y);
  a.require(z);
  const auto xy = sumset(x, y);
  if (xy.contains(z) || !sumset(xy, y).contains(z))
    precondition("z is not in (X + 2Y) \\ (X + Y)");

  // z in X + Y + y iff the unique w with w + y = z lies in X + Y.
  std::vector<Element> tilde;
  for (const auto& u : y)
    if (auto w = a.divide(Side::right, z, u); w && xy.contains(*w)) tilde.push_back(u);
  FinSet y_tilde(x.ambient_ptr(), std::move(tilde));
  FinSet y_keep = set_minus(y, y_tilde);
  FinSet zmy = difference(Side::right, FinSet::singleton(x.ambient_ptr(), z), y_tilde);
  const auto x_keep = sumset(x, y_keep);

  DavenportPair p{z, y_tilde, y_keep, zmy};
  p.sumset_size = xy.size();
  p.keep_sumset_size = x_keep.size();
  const auto outside = set_minus(set_union(x_keep, zmy), xy);
  if (!outside.empty()) p.inclusion = {false, outside.front()};
  const auto overlap = set_intersection(x_keep, zmy);
  if (!overlap.empty()) p.disjoint = {false, overlap.front()};
  p.injection = zmy.size() >= p.y_tilde.size();
  p.ledger = xy.size() + y_keep.size() >= x_keep.size() + y.size();
  return p;
}

TheoremVerdict check_theorem_main(const FinSet& x, const FinSet& y, std::size_t budget,
                                  GammaCache* cache) {
  require_same_ambient(x, y);
  require_cancellative(x.ambient());
  if (y.empty()) precondition("Y must be non-empty");
  require_commutative(y);

  TheoremVerdict v;
  v.size_x = x.size();
  v.size_y = y.size();
  v.bound_lhs = sumset(x, y).size();
  v.gamma_y = gamma_set(y, budget, cache).value;
  v.bound_rhs = ssize(x) + min_with(v.gamma_y, ssize(y) - 1);
  v.branch_i = static_cast<std::int64_t>(v.bound_lhs) >= v.bound_rhs;
  v.structure_witness = structure_witness(x, y);
  v.branch_ii = v.structure_witness.has_value();
  v.disjunction_holds = v.branch_i || v.branch_ii;
  return v;
}

EquivalenceVerdict check_prop_equiv(const FinSet& x, const FinSet& y, std::size_t budget) {
  require_same_ambient(x, y);
  require_cancellative(x.ambient());
  require_commutative(y);
  const auto units = units_of(y);
  if (units.empty()) precondition("Y has no units");

  const auto xy = sumset(x, y);
  const auto x2y = sumset(xy, y);
  EquivalenceVerdict v;
  for (const auto& u : units)
    if (x2y == translate(xy, u)) v.cond_i = true;
  v.cond_ii = true;
  for (const auto& u : y)
    if (x2y != translate(xy, u)) v.cond_ii = false;
  v.cond_iii = true;
  std::optional<Element> failing;
  for (const auto& ybar : units) {
    const auto single = FinSet::singleton(x.ambient_ptr(), ybar);
    const auto w = difference(Side::right, y, single);
    const auto target = difference(Side::right, xy, single);
    bool equal = false;
    if (x.empty()) {
      equal = target.empty();
    } else if (has_infinite_element(w)) {
      equal = false;  // X + <Y - ybar> is infinite
    } else {
      equal = sum_equals(x, generated(w, budget), target, budget) &&
              sum_equals(x, generated_sym(w, budget), target, budget);
    }
    if (!equal) {
      v.cond_iii = false;
      failing = ybar;
      break;
    }
  }
  v.agree = v.cond_i == v.cond_ii && v.cond_ii == v.cond_iii;
  if (!v.agree)
    v.counterwitness = std::string("conditions disagree: i=") + (v.cond_i ? "true" : "false") +
                       " ii=" + (v.cond_ii ? "true" : "false") +
                       " iii=" + (v.cond_iii ? "true" : "false") +
                       (failing ? " (iii fails at a unit shift)" : "");
  return v;
}

BoundReport check_cor_udt(const FinSet& x, const FinSet& y, std::size_t budget,
                          GammaCache* cache) {
  require_same_ambient(x, y);
  require_cancellative(x.ambient());
  if (x.empty()) precondition("X must be non-empty");
  require_commutative(y);
  BoundReport r;
  r.lhs = sumset(x, y).size();
  r.gamma = gamma_set(y, budget, cache).value;
  r.size_term = ssize(x) + ssize(y) - 1;
  r.rhs = min_with(r.gamma, r.size_term);
  r.holds = static_cast<std::int64_t>(r.lhs) >= r.rhs;
  return r;
}

BoundReport check_weaker_bound(const FinSet& x, const FinSet& y, std::size_t budget,
                               GammaCache* cache) {
  require_same_ambient(x, y);
  require_cancellative(x.ambient());
  if (x.empty() || y.empty()) precondition("X and Y must be non-empty");
  const auto s = sumset(x, y);
  BoundReport r;
  r.lhs = s.size();
  r.gamma = gamma_set(s, budget, cache).value;
  r.size_term = ssize(x) + ssize(y) - 1;
  r.rhs = min_with(r.gamma, r.size_term);
  r.holds = static_cast<std::int64_t>(r.lhs) >= r.rhs;
  return r;
}

BoundReport conjecture_holds(std::span<const FinSet> sets, std::size_t budget,
                             GammaCache* cache) {
  if (sets.empty()) precondition("the conjecture needs at least one set");
  require_cancellative(sets.front().ambient());
  BoundReport r;
  r.lhs = sumset(sets).size();
  r.gamma = gamma_tuple(sets, budget, cache);
  r.size_term = 1 - static_cast<std::int64_t>(sets.size());
  for (const auto& s : sets) r.size_term += ssize(s);
  r.rhs = min_with(r.gamma, r.size_term);
  r.holds = static_cast<std::int64_t>(r.lhs) >= r.rhs;
  return r;
}

HsReport check_cor_hs(const FinSet& x, const FinSet& y, std::size_t budget, GammaCache* cache) {
  require_same_ambient(x, y);
  const auto& a = x.ambient();
  require_cancellative(a);
  if (!a.is_monoid()) precondition(a.name() + " is not a monoid");
  require_commutative(y);

  HsReport r;
  const auto u = set_union(x, sumset(x, y));
  r.union_size = u.size();
  r.size_x = x.size();
  r.size_y = y.size();

  if (x.empty()) {
    r.hypothesis = false;  // both sides are empty
    r.hypothesis_decided = true;
  } else if (has_infinite_element(y)) {
    r.hypothesis = true;  // X + <<Y>> is infinite
    r.hypothesis_decided = true;
  } else if (const auto gen = generated_sym(y, budget); gen.complete) {
    r.hypothesis = u != sumset(x, gen.closure);
    r.hypothesis_decided = true;
  } else if (budget >= u.size()) {
    // |X + <<Y>>| >= |<<Y>>| > budget >= |X u (X + Y)|.
    r.hypothesis = true;
    r.hypothesis_decided = true;
  }

  const auto zero = *a.identity();
  r.identity_in_y = y.contains(zero);
  r.gamma_y0 = gamma_set(set_union(y, FinSet::singleton(x.ambient_ptr(), zero)), budget, cache).value;
  r.rhs = ssize(x) + min_with(r.gamma_y0, ssize(y) - (r.identity_in_y ? 1 : 0));
  r.holds = static_cast<std::int64_t>(r.union_size) >= r.rhs;

  if (a.is_group() && !y.empty()) {
    HsReport::Classical c;
    c.min_order = min_order(y, budget);
    c.rhs = ssize(x) + min_with(c.min_order, ssize(y));
    c.holds = static_cast<std::int64_t>(r.union_size) >= c.rhs;
    c.implied = r.rhs >= c.rhs;
    r.classical = c;
  }

  if (!r.hypothesis_decided)
    r.status = CheckStatus::hypothesis_unknown;
  else if (!r.hypothesis)
    r.status = CheckStatus::hypothesis_not_met;
  else
    r.status = r.holds ? CheckStatus::holds : CheckStatus::violated;
  return r;
}

std::int64_t delta_y(const FinSet& y) {
  const auto& a = y.ambient();
  if (a.kind() != AmbientKind::zmod) throw Error(ErrorCode::wrong_ambient, "delta_y needs Z_n");
  if (y.empty()) throw Error(ErrorCode::empty_set, "delta_y of an empty set");
  if (y.size() == 1) return 1;
  const auto n = a.modulus();
  std::int64_t best = n;
  for (const auto& y0 : y) {
    std::int64_t worst = 0;
    for (const auto& u : y)
      if (u != y0) worst = std::max(worst, std::gcd(n, u.scalar() - y0.scalar()));
    best = std::min(best, worst);
  }
  return best;
}

ZnReport check_cor_zn(const FinSet& x, const FinSet& y, std::size_t budget, GammaCache* cache) {
  require_same_ambient(x, y);
  if (x.ambient().kind() != AmbientKind::zmod)
    throw Error(ErrorCode::wrong_ambient, "check_cor_zn needs Z_n");
  if (x.empty() || y.empty()) precondition("X and Y must be non-empty");

  ZnReport r;
  r.n = x.ambient().modulus();
  r.delta = delta_y(y);
  r.quotient = r.n / r.delta;
  r.gamma_y = gamma_set(y, budget, cache).value;
  r.gamma_identity_holds =
      y.size() < 2 || r.gamma_y == ExtNat{static_cast<std::uint64_t>(r.quotient)};

  const auto xy = sumset(x, y);
  const auto x2y = sumset(xy, y);
  for (const auto& u : y)
    if (x2y != translate(xy, u)) r.hypothesis = true;

  r.lhs = xy.size();
  r.rhs = ssize(x) + std::min(r.quotient, ssize(y) - 1);
  r.holds = static_cast<std::int64_t>(r.lhs) >= r.rhs;
  r.literal_rhs = ssize(x) + std::min(r.quotient, ssize(x) + ssize(y) - 1);
  r.literal_holds = static_cast<std::int64_t>(r.lhs) >= r.literal_rhs;

  if (!r.hypothesis)
    r.status = CheckStatus::hypothesis_not_met;
  else
    r.status = r.holds && r.gamma_identity_holds ? CheckStatus::holds : CheckStatus::violated;
  return r;
}

}  // namespace addcomb

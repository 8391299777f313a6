#include "addcomb/descent.hpp"

#include "addcomb/error.hpp"

namespace addcomb {

std::string_view to_string(DescentOutcome o) noexcept {
  switch (o) {
    case DescentOutcome::bound_certified: return "bound_certified";
    case DescentOutcome::structure_case: return "structure_case";
    case DescentOutcome::budget_exhausted: return "budget_exhausted";
  }
  return "?";
}

std::string_view to_string(DescentStop s) noexcept {
  switch (s) {
    case DescentStop::none: return "none";
    case DescentStop::gamma_dominates: return "gamma_dominates";
    case DescentStop::structure: return "structure";
    case DescentStop::singleton: return "singleton";
    case DescentStop::budget: return "budget";
  }
  return "?";
}

DescentTrace descent(const FinSet& x, const FinSet& y, std::size_t budget) {
  require_same_ambient(x, y);
  const auto& a = x.ambient();
  if (!a.axioms().cancellative || !a.is_monoid())
    throw Error(ErrorCode::precondition_violated, "descent needs a cancellative monoid");
  if (!is_commutative_generated(y))
    throw Error(ErrorCode::precondition_violated, "<Y> is not commutative");
  if (x.empty() || y.size() < 2 || units_of(y).empty())
    throw Error(ErrorCode::precondition_violated,
                "descent needs X non-empty, |Y| >= 2 and a unit in Y");

  GammaCache cache;
  DescentTrace trace;
  FinSet cur_x = x;
  FinSet cur_y = y;
  try {
    trace.root_lhs = sumset(x, y).size();
    const auto gy = gamma_set(y, budget, &cache).value;
    trace.root_rhs =
        static_cast<std::int64_t>(x.size()) + min_with(gy, static_cast<std::int64_t>(y.size()) - 1);

    while (true) {
      const auto s = static_cast<std::int64_t>(sumset(cur_x, cur_y).size());
      const std::int64_t kappa = s - static_cast<std::int64_t>(cur_x.size()) + 1;
      const auto g = gamma_set(cur_y, budget, &cache).value;
      if (g.is_finite() && static_cast<std::int64_t>(g.value()) < kappa) {
        trace.stop = DescentStop::gamma_dominates;
        break;
      }
      auto norm = normalize_pair(cur_x, cur_y, kappa, budget, &cache);
      FinSet nx = norm.transform.x0;
      FinSet ny = norm.transform.y0;
      const auto nxy = sumset(nx, ny);
      const auto gap = set_minus(sumset(nxy, ny), nxy);
      if (gap.empty()) {
        cur_x = std::move(nx);
        cur_y = std::move(ny);
        trace.stop = DescentStop::structure;
        break;
      }

      DescentStep step{cur_x.size(), cur_y.size(), static_cast<std::size_t>(s), kappa, g,
                       norm.transform.shift, davenport_transform(nx, ny, gap.front())};
      const auto& p = step.pair;
      step.ledger_lhs = static_cast<std::int64_t>(p.keep_sumset_size);
      step.ledger_rhs = static_cast<std::int64_t>(p.sumset_size + p.y_keep.size()) -
                        static_cast<std::int64_t>(ny.size());
      step.ledger_holds = step.ledger_lhs <= step.ledger_rhs;
      step.size_decreases = p.y_keep.size() < ny.size();
      cur_x = std::move(nx);
      cur_y = p.y_keep;
      trace.steps.push_back(std::move(step));
      if (!trace.steps.back().size_decreases)
        throw std::logic_error("Davenport transform did not shrink Y");
      if (cur_y.size() < 2) {
        trace.stop = DescentStop::singleton;
        break;
      }
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::budget_exceeded) throw;
    trace.stop = DescentStop::budget;
    trace.outcome = DescentOutcome::budget_exhausted;
    return trace;
  }

  // |X + Y| >= |X + Y_z| + |Y| - |Y_z| at every step, so a measured size at
  // the bottom lifts to a lower bound at the top.
  trace.final_lhs = sumset(cur_x, cur_y).size();
  std::int64_t bound = static_cast<std::int64_t>(trace.final_lhs);
  for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it)
    bound += static_cast<std::int64_t>(it->size_y) -
             static_cast<std::int64_t>(it->pair.y_keep.size());
  trace.transported_bound = bound;

  if (trace.stop == DescentStop::structure && trace.steps.empty())
    trace.outcome = DescentOutcome::structure_case;
  else if (bound >= trace.root_rhs)
    trace.outcome = DescentOutcome::bound_certified;
  else
    trace.outcome = DescentOutcome::structure_case;
  return trace;
}

}  // namespace addcomb

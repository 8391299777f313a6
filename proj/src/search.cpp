#include "addcomb/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <map>
#include <random>
#include <set>
#include <thread>

#include "addcomb/error.hpp"

namespace addcomb {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::spec_invalid, what); }

// ---------------------------------------------------------------------------
// Abelian groups

void factor_sequences(std::int64_t rest, std::int64_t last, std::vector<std::int64_t>& cur,
                      std::vector<std::vector<std::int64_t>>& out) {
  if (rest == 1) {
    out.push_back(cur);
    return;
  }
  // The next invariant factor is a multiple of `last` dividing what remains,
  // and everything after it must stay a multiple of it.
  for (std::int64_t d = last; d <= rest; d += last) {
    if (rest % d != 0) continue;
    const auto after = rest / d;
    if (after != 1 && after % d != 0) continue;
    cur.push_back(d);
    factor_sequences(after, d, cur, out);
    cur.pop_back();
  }
}

// ---------------------------------------------------------------------------
// Checker registry

using Sets = std::span<const FinSet>;

CheckOutcome run_theorem(Sets s, std::size_t budget, GammaCache* cache) {
  const auto v = check_theorem_main(s[0], s[1], budget, cache);
  return {!v.disjunction_holds, to_json(v, s[0].ambient())};
}

CheckOutcome run_prop13(Sets s, std::size_t budget, GammaCache*) {
  const auto v = check_prop_equiv(s[0], s[1], budget);
  return {!v.agree, to_json(v)};
}

CheckOutcome run_udt(Sets s, std::size_t budget, GammaCache* cache) {
  const auto r = check_cor_udt(s[0], s[1], budget, cache);
  return {!r.holds, to_json(r)};
}

CheckOutcome run_hs(Sets s, std::size_t budget, GammaCache* cache) {
  const auto r = check_cor_hs(s[0], s[1], budget, cache);
  bool violated = r.status == CheckStatus::violated;
  // Under the hypothesis the classical group bound must follow from ours.
  if (r.classical && r.hypothesis_decided && r.hypothesis)
    violated = violated || !r.classical->implied || !r.classical->holds;
  return {violated, to_json(r)};
}

CheckOutcome run_zn(Sets s, std::size_t budget, GammaCache* cache) {
  const auto r = check_cor_zn(s[0], s[1], budget, cache);
  return {r.status == CheckStatus::violated, to_json(r)};
}

CheckOutcome run_weaker(Sets s, std::size_t budget, GammaCache* cache) {
  const auto r = check_weaker_bound(s[0], s[1], budget, cache);
  return {!r.holds, to_json(r)};
}

CheckOutcome run_conjecture(Sets s, std::size_t budget, GammaCache* cache) {
  const auto r = conjecture_holds(s, budget, cache);
  auto verdict = to_json(r);
  // Stratum label: all gamma values equal in a commutative ambient.
  bool equal = s.front().ambient().axioms().commutative;
  const auto g0 = gamma_set(s.front(), budget, cache).value;
  for (const auto& x : s.subspan(1))
    equal = equal && gamma_set(x, budget, cache).value == g0;
  verdict["equal_gamma_commutative"] = equal;
  return {!r.holds, std::move(verdict)};
}

const std::vector<Checker>& registry() {
  static const std::vector<Checker> checkers = {
      {"theorem", 2, true, run_theorem},   {"prop13", 2, false, run_prop13},
      {"udt", 2, true, run_udt},           {"hs", 2, false, run_hs},
      {"zn", 2, true, run_zn},             {"weaker", 2, true, run_weaker},
      {"conjecture", 0, true, run_conjecture},
  };
  return checkers;
}

const std::map<std::string, std::string, std::less<>>& aliases() {
  static const std::map<std::string, std::string, std::less<>> m = {
      {"theorem_main", "theorem"}, {"prop_equiv", "prop13"}, {"cor_udt", "udt"},
      {"cor_hs", "hs"},            {"cor_zn", "zn"},         {"weaker_bound", "weaker"},
  };
  return m;
}

// ---------------------------------------------------------------------------
// Spec helpers

std::vector<AmbientPtr> family_ambients(const SearchSpec& spec) {
  std::vector<AmbientPtr> out;
  switch (spec.family) {
    case SearchSpec::Family::zmod_range:
      if (spec.n_min < 1 || spec.n_max < spec.n_min) invalid("zmod_range needs 1 <= n_min <= n_max");
      for (auto n = spec.n_min; n <= spec.n_max; ++n) out.push_back(Ambient::zmod(n));
      break;
    case SearchSpec::Family::abelian_up_to_order:
      if (spec.max_order < 1) invalid("abelian_up_to_order needs max_order >= 1");
      out = enumerate_abelian_groups(spec.max_order);
      break;
    case SearchSpec::Family::explicit_list:
      if (spec.ambients.empty()) invalid("explicit family needs at least one ambient");
      for (const auto& d : spec.ambients) {
        try {
          out.push_back(make_ambient(d));
        } catch (const Error& e) {
          invalid(std::string("bad ambient in family: ") + e.what());
        }
      }
      break;
  }
  return out;
}

bool skippable(ErrorCode c) {
  return c == ErrorCode::precondition_violated || c == ErrorCode::budget_exceeded ||
         c == ErrorCode::wrong_ambient || c == ErrorCode::empty_set;
}

double log_choose(double n, double k) {
  return std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1);
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return b > UINT64_MAX - a ? UINT64_MAX : a + b;
}

std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) / i stays exact; saturate instead of overflowing.
    const unsigned __int128 t = static_cast<unsigned __int128>(r) * (n - k + i) / i;
    if (t > UINT64_MAX) return UINT64_MAX;
    r = static_cast<std::uint64_t>(t);
  }
  return r;
}

// Per-ambient setup shared by both modes.
struct Space {
  AmbientPtr ambient;
  bool reduce = false;  // last set must contain the identity
  std::vector<FinSet> general;
  std::vector<FinSet> last;
  std::vector<Element> window;  // random mode
  std::optional<std::size_t> identity_slot;
};

struct ItemResult {
  std::uint64_t checked = 0;
  std::uint64_t skipped = 0;
  std::vector<json> violations;
};

class Runner {
 public:
  Runner(const SearchSpec& spec, const Checker& checker) : spec_(spec), checker_(checker) {}

  void evaluate(const Ambient& a, Sets sets, ItemResult& out, GammaCache& cache) const {
    CheckOutcome o;
    try {
      o = checker_.run(sets, spec_.budget, &cache);
    } catch (const Error& e) {
      if (!skippable(e.code())) throw;
      ++out.skipped;
      return;
    }
    ++out.checked;
    if (!o.violated) return;
    auto inst = encode_instance(a, checker_.id, sets);
    inst["verdict"] = std::move(o.verdict);
    out.violations.push_back(std::move(inst));
  }

 private:
  const SearchSpec& spec_;
  const Checker& checker_;
};

// Fixed-assignment parallel loop: item i goes to worker i % workers, and every
// item writes only its own slot, so merging in item order is deterministic.
template <class Fn>
std::vector<std::uint64_t> run_items(std::size_t n_items, std::size_t workers,
                                     std::vector<ItemResult>& results, Fn&& fn) {
  results.assign(n_items, {});
  std::vector<std::uint64_t> per_worker(workers, 0);
  std::vector<std::exception_ptr> errors(workers);
  auto body = [&](std::size_t w) {
    try {
      GammaCache cache;
      for (std::size_t i = w; i < n_items; i += workers) {
        fn(i, results[i], cache);
        per_worker[w] += results[i].checked;
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    body(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(body, w);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return per_worker;
}

// ---------------------------------------------------------------------------
// Exhaustive mode

template <class Fn>
void for_each_mask(std::size_t n, std::size_t lo, std::size_t hi, bool by_size, Fn&& fn) {
  if (!by_size) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
      if (const auto c = static_cast<std::size_t>(std::popcount(m)); c >= lo && c <= hi) fn(m);
    return;
  }
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::size_t s = lo; s <= hi; ++s) {
    if (s == 0) {
      fn(0);
      continue;
    }
    // Gosper's hack walks the s-subsets in increasing numeric order.
    for (std::uint64_t m = (std::uint64_t{1} << s) - 1; m < limit;) {
      fn(m);
      const std::uint64_t c = m & (~m + 1);
      const std::uint64_t r = m + c;
      m = (((r ^ m) >> 2) / c) | r;
    }
  }
}

std::uint64_t slot_bound(const SearchSpec& spec, std::size_t n, bool forced) {
  const std::size_t lo = spec.nonempty || forced ? 1 : 0;
  const std::size_t hi = std::min(n, spec.max_size.value_or(n));
  std::uint64_t total = 0;
  for (std::size_t s = lo; s <= hi; ++s)
    total = sat_add(total, forced ? choose(n - 1, s - 1) : choose(n, s));
  return total;
}

std::vector<FinSet> candidates(const SearchSpec& spec, const AmbientPtr& a, bool last,
                               bool reduce) {
  const auto n = a->order();
  const std::size_t lo = spec.nonempty ? 1 : 0;
  const std::size_t hi = std::min(n, spec.max_size.value_or(n));
  const bool need_identity = last && (reduce || spec.contains_identity);
  std::optional<std::uint64_t> id_bit;
  if (auto e = a->identity()) id_bit = std::uint64_t{1} << a->index_of(*e);
  std::vector<FinSet> out;
  if (lo > hi || (need_identity && !id_bit)) return out;
  for_each_mask(n, lo, hi, spec.max_size.has_value(), [&](std::uint64_t m) {
    if (need_identity && !(m & *id_bit)) return;
    auto s = FinSet::from_mask(a, m);
    if (last && spec.commutative_generated && !is_commutative_generated(s)) return;
    out.push_back(std::move(s));
  });
  return out;
}

void run_exhaustive(const SearchSpec& spec, const Checker& checker,
                    const std::vector<Space>& spaces, SearchReport& report) {
  struct Item {
    std::size_t space;
    std::size_t first;
  };
  std::vector<Item> items;
  const auto k = spec.n_summands;
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    const auto& first = k == 1 ? spaces[i].last : spaces[i].general;
    for (std::size_t j = 0; j < first.size(); ++j) items.push_back({i, j});
  }
  Runner runner(spec, checker);
  std::vector<ItemResult> results;
  report.per_worker =
      run_items(items.size(), spec.workers, results, [&](std::size_t idx, ItemResult& out,
                                                         GammaCache& cache) {
        const auto& sp = spaces[items[idx].space];
        const auto& first = k == 1 ? sp.last : sp.general;
        std::vector<FinSet> tuple(k, first[items[idx].first]);
        if (k == 1) {
          runner.evaluate(*sp.ambient, tuple, out, cache);
          return;
        }
        for (std::size_t s = 1; s < k; ++s)
          if ((s + 1 == k ? sp.last : sp.general).empty()) return;
        // Odometer over slots 1..k-1, the last slot varying fastest.
        std::vector<std::size_t> pos(k, 0);
        for (std::size_t s = 1; s < k; ++s) tuple[s] = (s + 1 == k ? sp.last : sp.general)[0];
        while (true) {
          runner.evaluate(*sp.ambient, tuple, out, cache);
          std::size_t s = k - 1;
          while (s >= 1) {
            const auto& list = s + 1 == k ? sp.last : sp.general;
            if (++pos[s] < list.size()) {
              tuple[s] = list[pos[s]];
              break;
            }
            pos[s] = 0;
            tuple[s] = list[0];
            --s;
          }
          if (s == 0) break;
        }
      });
  for (auto& r : results) {
    report.instances_checked += r.checked;
    report.instances_skipped += r.skipped;
    for (auto& v : r.violations) report.violations.push_back(std::move(v));
  }
}

// ---------------------------------------------------------------------------
// Random mode

constexpr std::size_t kWindowLimit = 1'000'000;
constexpr std::size_t kWordWindow = 4096;
constexpr std::uint64_t kTrialChunk = 256;
constexpr int kRejectAttempts = 64;

std::vector<Element> sampling_window(const Ambient& a, std::int64_t bound) {
  std::vector<Element> out;
  auto lattice = [&](std::int64_t lo, std::int64_t hi) {
    const auto side = static_cast<double>(hi - lo + 1);
    if (std::pow(side, static_cast<double>(a.dim())) > kWindowLimit)
      invalid("sampling window of " + a.name() + " is too large; lower value_bound");
    std::vector<std::int64_t> v(a.dim(), lo);
    while (true) {
      out.emplace_back(v);
      std::size_t i = a.dim();
      while (i > 0 && v[i - 1] == hi) v[--i] = lo;
      if (i == 0) break;
      ++v[i - 1];
    }
  };
  switch (a.kind()) {
    case AmbientKind::zmod:
    case AmbientKind::cayley:
      for (std::size_t i = 0; i < a.order(); ++i) out.push_back(a.element_at(i));
      break;
    case AmbientKind::nat_lattice:
      lattice(0, bound);
      break;
    case AmbientKind::int_lattice:
      lattice(-bound, bound);
      break;
    case AmbientKind::free_monoid: {
      // All words up to the longest length that keeps the window small.
      std::vector<Word> level{Word{}};
      out.emplace_back(Word{});
      for (std::int64_t len = 1; len <= bound; ++len) {
        if (out.size() + level.size() * a.alphabet().size() > kWordWindow) break;
        std::vector<Word> next;
        for (const auto& w : level)
          for (std::uint32_t l = 0; l < a.alphabet().size(); ++l) {
            Word v = w;
            v.letters.push_back(l);
            next.push_back(v);
          }
        for (const auto& w : next) out.emplace_back(w);
        level = std::move(next);
      }
      break;
    }
    case AmbientKind::product: {
      out.emplace_back(Element::Tuple{});
      for (const auto& f : a.factors()) {
        const auto fw = sampling_window(*f, bound);
        if (out.size() * fw.size() > kWindowLimit)
          invalid("sampling window of " + a.name() + " is too large; lower value_bound");
        std::vector<Element> next;
        for (const auto& t : out)
          for (const auto& e : fw) {
            auto parts = t.parts();
            parts.push_back(e);
            next.emplace_back(std::move(parts));
          }
        out = std::move(next);
      }
      break;
    }
  }
  return out;
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

// Uniform over the subsets of the window that pass the size filters, with the
// identity forced in when required.
std::optional<FinSet> sample_set(const SearchSpec& spec, const Space& sp, bool last,
                                 std::mt19937_64& rng) {
  const bool force = last && (sp.reduce || spec.contains_identity);
  if (force && !sp.identity_slot) return std::nullopt;
  const std::size_t pool = sp.window.size() - (force ? 1 : 0);
  // Pool positions skip the identity slot when it is forced.
  auto at = [&](std::size_t p) -> const Element& {
    if (force && p >= *sp.identity_slot) ++p;
    return sp.window[p];
  };
  for (int attempt = 0; attempt < kRejectAttempts; ++attempt) {
    std::vector<Element> elems;
    if (force) elems.push_back(sp.window[*sp.identity_slot]);
    if (!spec.max_size) {
      std::bernoulli_distribution coin(0.5);
      for (std::size_t p = 0; p < pool; ++p)
        if (coin(rng)) elems.push_back(at(p));
    } else {
      const std::size_t lo = spec.nonempty && !force ? 1 : 0;
      const std::size_t cap = *spec.max_size - (force ? std::min<std::size_t>(1, *spec.max_size) : 0);
      const std::size_t hi = std::min(pool, cap);
      if (lo > hi || (force && *spec.max_size == 0)) return std::nullopt;
      std::vector<double> weights;
      double top = -INFINITY;
      for (std::size_t s = lo; s <= hi; ++s) top = std::max(top, log_choose(pool, s));
      for (std::size_t s = lo; s <= hi; ++s) weights.push_back(std::exp(log_choose(pool, s) - top));
      std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
      const std::size_t s = lo + pick(rng);
      // Floyd's algorithm for a uniform s-subset of the pool.
      std::set<std::size_t> chosen;
      for (std::size_t j = pool - s; j < pool; ++j) {
        const auto t = std::uniform_int_distribution<std::size_t>(0, j)(rng);
        chosen.insert(chosen.contains(t) ? j : t);
      }
      for (auto p : chosen) elems.push_back(at(p));
    }
    FinSet x(sp.ambient, std::move(elems));
    if (spec.nonempty && x.empty()) continue;
    if (last && spec.commutative_generated && !is_commutative_generated(x)) continue;
    return x;
  }
  return std::nullopt;
}

void run_random(const SearchSpec& spec, const Checker& checker, const std::vector<Space>& spaces,
                SearchReport& report) {
  const auto n_items = static_cast<std::size_t>((spec.trials + kTrialChunk - 1) / kTrialChunk);
  Runner runner(spec, checker);
  std::vector<ItemResult> results;
  report.per_worker = run_items(n_items, spec.workers, results, [&](std::size_t idx,
                                                                    ItemResult& out,
                                                                    GammaCache& cache) {
    const std::uint64_t begin = idx * kTrialChunk;
    const std::uint64_t end = std::min(spec.trials, begin + kTrialChunk);
    for (auto t = begin; t < end; ++t) {
      auto rng = trial_rng(*spec.seed, t);
      const auto& sp =
          spaces[std::uniform_int_distribution<std::size_t>(0, spaces.size() - 1)(rng)];
      std::vector<FinSet> tuple;
      for (std::size_t s = 0; s < spec.n_summands; ++s) {
        auto x = sample_set(spec, sp, s + 1 == spec.n_summands, rng);
        if (!x) break;
        tuple.push_back(std::move(*x));
      }
      if (tuple.size() != spec.n_summands) {
        ++out.skipped;
        continue;
      }
      runner.evaluate(*sp.ambient, tuple, out, cache);
    }
  });
  for (auto& r : results) {
    report.instances_checked += r.checked;
    report.instances_skipped += r.skipped;
    for (auto& v : r.violations) report.violations.push_back(std::move(v));
  }
}

json without_id(json inst) {
  inst.erase("instance_id");
  inst.erase("verdict");
  return inst;
}

}  // namespace

std::vector<AmbientPtr> enumerate_abelian_groups(std::int64_t max_order) {
  std::vector<AmbientPtr> out;
  if (max_order >= 1) out.push_back(Ambient::zmod(1));
  for (std::int64_t n = 2; n <= max_order; ++n) {
    std::vector<std::vector<std::int64_t>> seqs;
    std::vector<std::int64_t> cur;
    for (std::int64_t d = 2; d <= n; ++d) {
      if (n % d != 0 || (n / d != 1 && (n / d) % d != 0)) continue;
      cur.push_back(d);
      factor_sequences(n / d, d, cur, seqs);
      cur.pop_back();
    }
    std::stable_sort(seqs.begin(), seqs.end(), [](const auto& a, const auto& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    for (const auto& s : seqs) {
      if (s.size() == 1) {
        out.push_back(Ambient::zmod(s[0]));
        continue;
      }
      std::vector<AmbientPtr> fs;
      for (auto d : s) fs.push_back(Ambient::zmod(d));
      out.push_back(Ambient::product(std::move(fs)));
    }
  }
  return out;
}

const Checker& find_checker(std::string_view id) {
  std::string_view key = id;
  if (auto it = aliases().find(id); it != aliases().end()) key = it->second;
  for (const auto& c : registry())
    if (c.id == key) return c;
  invalid("unknown checker '" + std::string(id) + "'");
}

std::vector<std::string> checker_ids() {
  std::vector<std::string> out;
  for (const auto& c : registry()) out.push_back(c.id);
  return out;
}

SearchSpec parse_spec(const json& j) {
  static const std::set<std::string> keys = {"family",  "checker", "n_summands",
                                             "filter",  "mode",    "workers",
                                             "budget",  "symmetry_reduction",
                                             "ceiling", "value_bound"};
  if (!j.is_object()) invalid("a search spec must be a JSON object");
  for (const auto& [k, v] : j.items())
    if (!keys.contains(k)) invalid("unknown spec field '" + k + "'");
  SearchSpec s;
  try {
    if (!j.contains("family")) invalid("spec lacks 'family'");
    const auto& f = j.at("family");
    const auto kind = f.at("kind").get<std::string>();
    if (kind == "zmod_range") {
      s.family = SearchSpec::Family::zmod_range;
      s.n_min = f.at("n_min").get<std::int64_t>();
      s.n_max = f.at("n_max").get<std::int64_t>();
    } else if (kind == "abelian_up_to_order") {
      s.family = SearchSpec::Family::abelian_up_to_order;
      s.max_order = f.at("max_order").get<std::int64_t>();
    } else if (kind == "explicit") {
      s.family = SearchSpec::Family::explicit_list;
      s.ambients = f.at("ambients").get<std::vector<json>>();
    } else {
      invalid("unknown family '" + kind + "'");
    }
    s.checker = j.value("checker", s.checker);
    const auto& checker = find_checker(s.checker);
    s.n_summands = j.value("n_summands", checker.arity == 0 ? std::size_t{2} : checker.arity);
    if (j.contains("filter")) {
      const auto& fl = j.at("filter");
      s.nonempty = fl.value("nonempty", s.nonempty);
      s.contains_identity = fl.value("contains_identity", s.contains_identity);
      s.commutative_generated = fl.value("commutative_generated", s.commutative_generated);
      if (fl.contains("max_size") && !fl.at("max_size").is_null())
        s.max_size = fl.at("max_size").get<std::size_t>();
    }
    if (j.contains("mode")) {
      const auto& m = j.at("mode");
      const auto mk = m.is_string() ? m.get<std::string>() : m.at("kind").get<std::string>();
      if (mk == "random") {
        s.random = true;
        if (!m.is_object() || !m.contains("seed") || m.at("seed").is_null())
          invalid("random mode requires a seed");
        s.seed = m.at("seed").get<std::uint64_t>();
        s.trials = m.at("trials").get<std::uint64_t>();
      } else if (mk != "exhaustive") {
        invalid("unknown mode '" + mk + "'");
      }
    }
    s.workers = j.value("workers", s.workers);
    s.budget = j.value("budget", s.budget);
    s.symmetry_reduction = j.value("symmetry_reduction", s.symmetry_reduction);
    s.ceiling = j.value("ceiling", s.ceiling);
    s.value_bound = j.value("value_bound", s.value_bound);
  } catch (const json::exception& e) {
    invalid(e.what());
  }
  return s;
}

json to_json(const SearchSpec& s) {
  json family;
  switch (s.family) {
    case SearchSpec::Family::zmod_range:
      family = {{"kind", "zmod_range"}, {"n_min", s.n_min}, {"n_max", s.n_max}};
      break;
    case SearchSpec::Family::abelian_up_to_order:
      family = {{"kind", "abelian_up_to_order"}, {"max_order", s.max_order}};
      break;
    case SearchSpec::Family::explicit_list:
      family = {{"kind", "explicit"}, {"ambients", s.ambients}};
      break;
  }
  json mode = {{"kind", "exhaustive"}};
  if (s.random) mode = {{"kind", "random"}, {"seed", *s.seed}, {"trials", s.trials}};
  return {{"family", family},
          {"checker", s.checker},
          {"n_summands", s.n_summands},
          {"filter",
           {{"nonempty", s.nonempty},
            {"max_size", s.max_size ? json(*s.max_size) : json(nullptr)},
            {"contains_identity", s.contains_identity},
            {"commutative_generated", s.commutative_generated}}},
          {"mode", mode},
          {"workers", s.workers},
          {"budget", s.budget},
          {"symmetry_reduction", s.symmetry_reduction},
          {"ceiling", s.ceiling},
          {"value_bound", s.value_bound}};
}

json to_json(const SearchReport& r) {
  return {{"instances_checked", r.instances_checked},
          {"instances_skipped", r.instances_skipped},
          {"violation_count", r.violations.size()},
          {"violations", r.violations},
          {"elapsed_seconds", r.elapsed_seconds},
          {"per_worker", r.per_worker},
          {"seed", r.seed ? json(*r.seed) : json(nullptr)},
          {"ambients", r.ambients},
          {"symmetry_reduction_applied", r.symmetry_reduction_applied}};
}

SearchReport run_search(const SearchSpec& spec) { return run_search(spec, find_checker(spec.checker)); }

SearchReport run_search(const SearchSpec& spec, const Checker& checker) {
  const auto start = std::chrono::steady_clock::now();
  if (spec.n_summands == 0) invalid("n_summands must be positive");
  if (checker.arity != 0 && spec.n_summands != checker.arity)
    invalid("checker '" + checker.id + "' takes " + std::to_string(checker.arity) + " sets");
  if (spec.workers == 0 || spec.workers > 1024) invalid("workers must be in 1..1024");
  if (spec.random && !spec.seed) invalid("random mode requires a seed");
  if (spec.value_bound < 0) invalid("value_bound must be non-negative");

  SearchReport report;
  report.seed = spec.seed;
  std::vector<Space> spaces;
  std::uint64_t total = 0;
  for (auto& a : family_ambients(spec)) {
    Space sp;
    sp.ambient = a;
    sp.reduce = spec.symmetry_reduction && checker.translation_invariant && a->is_group();
    report.symmetry_reduction_applied = report.symmetry_reduction_applied || sp.reduce;
    report.ambients.push_back(a->name());
    if (!spec.random) {
      if (!a->is_finite()) invalid("exhaustive mode needs finite ambients, got " + a->name());
      const auto n = a->order();
      if (n > 63) invalid("exhaustive mode handles carriers of at most 63 elements");
      const bool forced = sp.reduce || spec.contains_identity;
      std::uint64_t count = slot_bound(spec, n, forced);
      for (std::size_t s = 1; s < spec.n_summands; ++s)
        count = sat_mul(count, slot_bound(spec, n, false));
      total = sat_add(total, count);
      if (total > spec.ceiling)
        throw Error(ErrorCode::ceiling_exceeded,
                    "exhaustive space exceeds the ceiling of " + std::to_string(spec.ceiling));
    } else {
      if (!a->is_finite() && !spec.max_size)
        invalid("random sampling in " + a->name() + " needs a max_size filter");
      sp.window = sampling_window(*a, spec.value_bound);
      if (auto e = a->identity()) {
        auto it = std::find(sp.window.begin(), sp.window.end(), *e);
        if (it != sp.window.end()) sp.identity_slot = static_cast<std::size_t>(it - sp.window.begin());
      }
    }
    spaces.push_back(std::move(sp));
  }
  if (!spec.random) {
    for (auto& sp : spaces) {
      sp.last = candidates(spec, sp.ambient, true, sp.reduce);
      if (spec.n_summands > 1) sp.general = candidates(spec, sp.ambient, false, false);
    }
    run_exhaustive(spec, checker, spaces, report);
  } else {
    run_random(spec, checker, spaces, report);
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

json encode_instance(const Ambient& a, std::string_view checker, std::span<const FinSet> sets) {
  json sj = json::array();
  for (const auto& s : sets) sj.push_back(encode(s));
  json inst = {{"ambient", describe(a)}, {"checker", std::string(checker)}, {"sets", sj}};
  inst["instance_id"] = digest(inst);
  return inst;
}

ReplayResult replay(const json& instance) {
  if (!instance.is_object() || !instance.contains("checker") || !instance.at("checker").is_string())
    throw Error(ErrorCode::malformed_instance, "instance lacks a checker id");
  const Checker* checker = nullptr;
  try {
    checker = &find_checker(instance.at("checker").get<std::string>());
  } catch (const Error&) {
    throw Error(ErrorCode::malformed_instance, "unknown checker in instance");
  }
  return replay(instance, *checker);
}

ReplayResult replay(const json& instance, const Checker& checker) {
  AmbientPtr a;
  std::vector<FinSet> sets;
  try {
    if (!instance.is_object()) throw Error(ErrorCode::malformed_instance, "not an object");
    for (const char* key : {"ambient", "checker", "sets", "instance_id"})
      if (!instance.contains(key))
        throw Error(ErrorCode::malformed_instance, std::string("missing '") + key + "'");
    if (instance.at("instance_id") != digest(without_id(instance)))
      throw Error(ErrorCode::malformed_instance, "instance_id does not match the contents");
    a = make_ambient(instance.at("ambient"));
    const auto& sj = instance.at("sets");
    if (!sj.is_array()) throw Error(ErrorCode::malformed_instance, "'sets' must be an array");
    for (const auto& s : sj) sets.push_back(decode_set(a, s));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::malformed_instance) throw;
    throw Error(ErrorCode::malformed_instance, e.what());
  } catch (const json::exception& e) {
    throw Error(ErrorCode::malformed_instance, e.what());
  }
  GammaCache cache;
  ReplayResult r;
  r.outcome = checker.run(sets, kDefaultBudget, &cache);
  r.matches_recorded =
      instance.contains("verdict") && instance.at("verdict").dump() == r.outcome.verdict.dump();
  return r;
}

}  // namespace addcomb

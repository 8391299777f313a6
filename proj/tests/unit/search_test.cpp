#include <gtest/gtest.h>

#include <map>
#include <set>

#include "addcomb/error.hpp"
#include "addcomb/search.hpp"
#include "support.hpp"

namespace addcomb {
namespace {

std::vector<std::string> names(const std::vector<AmbientPtr>& as) {
  std::vector<std::string> out;
  for (const auto& a : as) out.push_back(a->name());
  return out;
}

// Number of abelian groups of order n: product of partition counts of the
// prime exponents.
int partitions(int k) {
  std::vector<int> p(k + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= k; ++part)
    for (int s = part; s <= k; ++s) p[s] += p[s - part];
  return p[k];
}

int abelian_count(int n) {
  int count = 1;
  for (int p = 2; n > 1; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    count *= partitions(e);
  }
  return count;
}

TEST(AbelianGroups, Examples) {
  EXPECT_EQ(names(enumerate_abelian_groups(4)),
            (std::vector<std::string>{"Z1", "Z2", "Z3", "Z4", "Z2xZ2"}));
  EXPECT_EQ(names(enumerate_abelian_groups(1)), (std::vector<std::string>{"Z1"}));
  const auto eight = names(enumerate_abelian_groups(8));
  for (const char* g : {"Z8", "Z2xZ4", "Z2xZ2xZ2"})
    EXPECT_NE(std::find(eight.begin(), eight.end(), g), eight.end()) << g;
  EXPECT_TRUE(enumerate_abelian_groups(0).empty());
}

TEST(AbelianGroups, OneAmbientPerIsomorphismClass) {
  const auto groups = enumerate_abelian_groups(64);
  std::map<std::size_t, int> per_order;
  std::set<std::string> seen;
  for (const auto& g : groups) {
    ++per_order[g->order()];
    EXPECT_TRUE(seen.insert(g->name()).second) << g->name();
    EXPECT_TRUE(g->is_group());
    EXPECT_TRUE(g->axioms().commutative);
  }
  for (int n = 1; n <= 64; ++n) EXPECT_EQ(per_order[n], abelian_count(n)) << n;
}

SearchSpec zmod_spec(std::int64_t lo, std::int64_t hi, const std::string& checker) {
  SearchSpec s;
  s.family = SearchSpec::Family::zmod_range;
  s.n_min = lo;
  s.n_max = hi;
  s.checker = checker;
  return s;
}

TEST(Search, TheoremHoldsOnSmallCyclicGroups) {
  const auto r = run_search(zmod_spec(2, 8, "theorem_main"));
  EXPECT_TRUE(r.violations.empty());
  std::uint64_t expected = 0;
  for (int n = 2; n <= 8; ++n) expected += ((1ull << n) - 1) * ((1ull << n) - 1);
  EXPECT_EQ(r.instances_checked, expected);
  EXPECT_EQ(r.instances_skipped, 0u);
}

TEST(Search, TheoremOnS3WithCommutativeFilter) {
  SearchSpec s;
  s.family = SearchSpec::Family::explicit_list;
  s.ambients = {json{{"kind", "fixture"}, {"name", "S3"}}};
  s.commutative_generated = true;
  const auto r = run_search(s);
  EXPECT_TRUE(r.violations.empty());
  EXPECT_EQ(r.instances_skipped, 0u);
  EXPECT_GT(r.instances_checked, 0u);
}

TEST(Search, UnfilteredNonCommutativeInstancesAreSkipped) {
  SearchSpec s;
  s.family = SearchSpec::Family::explicit_list;
  s.ambients = {json{{"kind", "fixture"}, {"name", "S3"}}};
  const auto r = run_search(s);
  EXPECT_GT(r.instances_skipped, 0u);
  EXPECT_EQ(r.instances_checked + r.instances_skipped, 63u * 63u);
}

TEST(Search, ConjectureRandomThreeSummands) {
  SearchSpec s;
  s.family = SearchSpec::Family::abelian_up_to_order;
  s.max_order = 10;
  s.checker = "conjecture";
  s.n_summands = 3;
  s.random = true;
  s.seed = 1;
  s.trials = 10000;
  const auto r = run_search(s);
  EXPECT_TRUE(r.violations.empty());
  EXPECT_EQ(r.instances_checked + r.instances_skipped, 10000u);
  EXPECT_EQ(r.seed, 1u);
}

// Deliberately false: the classical Cauchy-Davenport bound without the
// min with n, which fails in every composite cyclic group.
Checker naive_cd() {
  Checker c;
  c.id = "naive_cd";
  c.translation_invariant = true;
  c.run = [](std::span<const FinSet> s, std::size_t, GammaCache*) {
    const auto lhs = sumset(s[0], s[1]).size();
    const auto rhs = std::min(s[0].ambient().order(), s[0].size() + s[1].size() - 1);
    return CheckOutcome{lhs < rhs, json{{"lhs", lhs}, {"rhs", rhs}}};
  };
  return c;
}

Checker never_skips_filter(std::size_t max_size, std::int64_t bound) {
  Checker c;
  c.id = "filter_probe";
  c.run = [=](std::span<const FinSet> s, std::size_t, GammaCache*) {
    bool bad = false;
    for (const auto& x : s) {
      bad = bad || x.empty() || x.size() > max_size;
      for (const auto& e : x)
        for (auto v : e.vec()) bad = bad || v < 0 || v > bound;
    }
    bad = bad || !s.back().contains(Element(Element::Vector{0}));
    return CheckOutcome{bad, json::object()};
  };
  return c;
}

TEST(Search, SymmetryReductionIsSound) {
  const auto checker = naive_cd();
  for (std::int64_t n = 1; n <= 6; ++n) {
    auto s = zmod_spec(n, n, "naive_cd");
    const auto full = run_search(s, checker);
    s.symmetry_reduction = true;
    const auto reduced = run_search(s, checker);
    EXPECT_TRUE(reduced.symmetry_reduction_applied);
    EXPECT_EQ(full.violations.empty(), reduced.violations.empty()) << "n=" << n;
    EXPECT_EQ(full.violations.empty(), test::oracle::is_prime(n) || n == 1) << "n=" << n;
    if (n > 1) EXPECT_LT(reduced.instances_checked, full.instances_checked);
  }
}

TEST(Search, ReductionIsIgnoredForTranslationSensitiveCheckers) {
  auto s = zmod_spec(4, 4, "hs");
  s.symmetry_reduction = true;
  const auto r = run_search(s);
  EXPECT_FALSE(r.symmetry_reduction_applied);
  EXPECT_TRUE(r.violations.empty());
}

TEST(Search, ResultsIndependentOfWorkerCount) {
  const auto checker = naive_cd();
  auto exhaustive = zmod_spec(4, 9, "naive_cd");
  auto random = zmod_spec(4, 12, "naive_cd");
  random.random = true;
  random.seed = 99;
  random.trials = 3000;
  for (const auto& spec : {exhaustive, random}) {
    std::optional<SearchReport> first;
    for (std::size_t w : {1, 2, 8}) {
      auto s = spec;
      s.workers = w;
      const auto r = run_search(s, checker);
      EXPECT_EQ(r.per_worker.size(), w);
      EXPECT_FALSE(r.violations.empty());
      if (!first) {
        first = r;
        continue;
      }
      EXPECT_EQ(r.instances_checked, first->instances_checked);
      EXPECT_EQ(r.instances_skipped, first->instances_skipped);
      EXPECT_EQ(json(r.violations), json(first->violations));
    }
  }
}

TEST(Search, ViolationsReplay) {
  const auto checker = naive_cd();
  const auto r = run_search(zmod_spec(6, 6, "naive_cd"), checker);
  ASSERT_FALSE(r.violations.empty());
  for (const auto& v : r.violations) {
    const auto again = replay(v, checker);
    EXPECT_TRUE(again.outcome.violated);
    EXPECT_TRUE(again.matches_recorded);
  }
}

TEST(Search, RandomSamplingRespectsFiltersInInfiniteAmbients) {
  SearchSpec s;
  s.family = SearchSpec::Family::explicit_list;
  s.ambients = {json{{"kind", "nat_lattice"}, {"dim", 1}}, json{{"kind", "int_lattice"}, {"dim", 2}}};
  s.max_size = 8;
  s.value_bound = 5;
  s.contains_identity = true;
  s.random = true;
  s.seed = 5;
  s.trials = 2000;
  s.checker = "udt";
  const auto r = run_search(s);
  EXPECT_TRUE(r.violations.empty());
  EXPECT_EQ(r.instances_checked, 2000u);

  s.ambients = {json{{"kind", "nat_lattice"}, {"dim", 1}}};
  s.value_bound = 50;
  const auto probe = run_search(s, never_skips_filter(8, 50));
  EXPECT_TRUE(probe.violations.empty());
  EXPECT_EQ(probe.instances_checked, 2000u);
}

TEST(Search, SpecErrors) {
  auto code_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::malformed_instance;
  };
  auto s = zmod_spec(2, 4, "theorem");
  s.random = true;
  EXPECT_EQ(code_of([&] { run_search(s); }), ErrorCode::spec_invalid);
  EXPECT_EQ(code_of([&] { run_search(zmod_spec(2, 4, "nope")); }), ErrorCode::spec_invalid);
  auto arity = zmod_spec(2, 4, "theorem");
  arity.n_summands = 3;
  EXPECT_EQ(code_of([&] { run_search(arity); }), ErrorCode::spec_invalid);
  EXPECT_EQ(code_of([&] { run_search(zmod_spec(20, 20, "theorem")); }), ErrorCode::ceiling_exceeded);
  auto small = zmod_spec(8, 8, "theorem");
  small.ceiling = 100;
  EXPECT_EQ(code_of([&] { run_search(small); }), ErrorCode::ceiling_exceeded);
  SearchSpec inf;
  inf.family = SearchSpec::Family::explicit_list;
  inf.ambients = {json{{"kind", "nat_lattice"}, {"dim", 1}}};
  EXPECT_EQ(code_of([&] { run_search(inf); }), ErrorCode::spec_invalid);
  EXPECT_EQ(code_of([] { parse_spec(json{{"family", {{"kind", "zmod_range"}, {"n_min", 2}, {"n_max", 3}}},
                                         {"colour", 1}}); }),
            ErrorCode::spec_invalid);
  EXPECT_EQ(code_of([] { parse_spec(json{{"family", {{"kind", "zmod_range"}, {"n_min", 2}, {"n_max", 3}}},
                                         {"mode", {{"kind", "random"}, {"trials", 5}}}}); }),
            ErrorCode::spec_invalid);
}

TEST(Search, SpecJsonRoundTrip) {
  const auto j = json::parse(R"({
    "family": {"kind": "abelian_up_to_order", "max_order": 6},
    "checker": "conjecture", "n_summands": 3,
    "filter": {"nonempty": true, "max_size": 3, "contains_identity": true,
               "commutative_generated": false},
    "mode": {"kind": "random", "seed": 7, "trials": 100},
    "workers": 2, "budget": 5000, "symmetry_reduction": true,
    "ceiling": 1000, "value_bound": 9})");
  const auto s = parse_spec(j);
  EXPECT_EQ(s.n_summands, 3u);
  EXPECT_EQ(s.max_size, 3u);
  EXPECT_EQ(s.seed, 7u);
  EXPECT_EQ(to_json(s), j);
  EXPECT_EQ(to_json(parse_spec(to_json(s))), j);
}

TEST(Replay, StructureCaseInstance) {
  const auto z4 = Ambient::zmod(4);
  const std::vector<FinSet> sets{test::ints(z4, {0, 2}), test::ints(z4, {0, 2})};
  auto inst = encode_instance(*z4, "theorem", sets);
  const auto first = replay(inst);
  EXPECT_TRUE(first.outcome.verdict.at("branch_ii").get<bool>());
  EXPECT_FALSE(first.outcome.violated);
  inst["verdict"] = first.outcome.verdict;
  EXPECT_TRUE(replay(inst).matches_recorded);
  EXPECT_EQ(replay(inst).outcome.verdict.dump(), first.outcome.verdict.dump());
}

TEST(Replay, TamperedOrMalformedInstances) {
  const auto z4 = Ambient::zmod(4);
  const std::vector<FinSet> sets{test::ints(z4, {0, 2}), test::ints(z4, {0, 1})};
  const auto inst = encode_instance(*z4, "theorem", sets);
  auto expect_malformed = [](const json& j) {
    try {
      replay(j);
      FAIL() << j.dump();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::malformed_instance);
    }
  };
  auto tampered = inst;
  tampered["sets"][1] = json::array({0, 3});
  expect_malformed(tampered);
  auto bad_checker = inst;
  bad_checker["checker"] = "nope";
  expect_malformed(bad_checker);
  expect_malformed(json::array());
  expect_malformed(json{{"checker", "theorem"}});
  // A consistent digest over contents that do not parse.
  json junk = {{"ambient", {{"kind", "zmod"}, {"n", 4}}}, {"checker", "theorem"},
               {"sets", json::array({json::array({9}), json::array({0})})}};
  junk["instance_id"] = digest(junk);
  expect_malformed(junk);
}

}  // namespace
}  // namespace addcomb

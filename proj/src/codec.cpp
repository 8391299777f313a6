#include "addcomb/codec.hpp"

#include <algorithm>
#include <cstdio>

#include "addcomb/error.hpp"
#include "addcomb/fixtures.hpp"

namespace addcomb {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::malformed_description, what);
}

[[noreturn]] void mismatch(const Ambient& a, const json& j) {
  throw Error(ErrorCode::element_ambient_mismatch,
              "'" + j.dump() + "' is not an element of " + a.name());
}

const json& field(const json& desc, const char* key) {
  if (!desc.is_object() || !desc.contains(key))
    malformed(std::string("ambient description lacks '") + key + "'");
  return desc.at(key);
}

std::int64_t positive_int(const json& desc, const char* key) {
  const auto& v = field(desc, key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 1)
    malformed(std::string("'") + key + "' must be a positive integer");
  return v.get<std::int64_t>();
}

json opt(const std::optional<Element>& x, const Ambient& a) {
  return x ? encode(a, *x) : json(nullptr);
}

json check(const PropertyCheck& c, const Ambient& a) {
  return {{"holds", c.holds}, {"witness", opt(c.witness, a)}};
}

}  // namespace

AmbientPtr make_ambient(const json& desc) {
  const auto& kind = field(desc, "kind");
  if (!kind.is_string()) malformed("'kind' must be a string");
  const auto k = kind.get<std::string>();
  try {
    if (k == "zmod") return Ambient::zmod(positive_int(desc, "n"));
    if (k == "int_lattice") return Ambient::int_lattice(static_cast<std::size_t>(positive_int(desc, "dim")));
    if (k == "nat_lattice") return Ambient::nat_lattice(static_cast<std::size_t>(positive_int(desc, "dim")));
    if (k == "free_monoid") {
      const auto& alpha = field(desc, "alphabet");
      if (!alpha.is_array()) malformed("'alphabet' must be an array of strings");
      return Ambient::free_monoid(alpha.get<std::vector<std::string>>());
    }
    if (k == "cayley") {
      const auto& table = field(desc, "table");
      if (!table.is_array()) malformed("'table' must be an array of rows");
      std::vector<std::string> labels;
      if (desc.contains("labels")) labels = desc.at("labels").get<std::vector<std::string>>();
      return Ambient::cayley(table.get<std::vector<std::vector<std::int64_t>>>(), std::move(labels));
    }
    if (k == "fixture") {
      const auto& name = field(desc, "name");
      if (name == "S3") return fixtures::s3();
      if (name == "D4") return fixtures::d4();
      if (name == "Q8") return fixtures::q8();
      malformed("unknown fixture " + name.dump());
    }
    if (k == "product") {
      const auto& fs = field(desc, "factors");
      if (!fs.is_array()) malformed("'factors' must be an array");
      std::vector<AmbientPtr> factors;
      for (const auto& f : fs) factors.push_back(make_ambient(f));
      return Ambient::product(std::move(factors));
    }
  } catch (const json::exception& e) {
    malformed(e.what());
  }
  malformed("unknown ambient kind '" + k + "'");
}

json describe(const Ambient& a) {
  switch (a.kind()) {
    case AmbientKind::zmod:
      return {{"kind", "zmod"}, {"n", a.modulus()}};
    case AmbientKind::cayley: {
      const auto n = static_cast<std::size_t>(a.modulus());
      json rows = json::array();
      for (std::size_t i = 0; i < n; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < n; ++j) row.push_back(a.table()[i * n + j]);
        rows.push_back(std::move(row));
      }
      return {{"kind", "cayley"}, {"labels", a.labels()}, {"table", std::move(rows)}};
    }
    case AmbientKind::int_lattice:
      return {{"kind", "int_lattice"}, {"dim", a.dim()}};
    case AmbientKind::nat_lattice:
      return {{"kind", "nat_lattice"}, {"dim", a.dim()}};
    case AmbientKind::free_monoid:
      return {{"kind", "free_monoid"}, {"alphabet", a.alphabet()}};
    case AmbientKind::product: {
      json fs = json::array();
      for (const auto& f : a.factors()) fs.push_back(describe(*f));
      return {{"kind", "product"}, {"factors", std::move(fs)}};
    }
  }
  return nullptr;
}

json encode(const Ambient& a, const Element& x) {
  switch (a.kind()) {
    case AmbientKind::zmod:
    case AmbientKind::cayley:
      return x.scalar();
    case AmbientKind::int_lattice:
    case AmbientKind::nat_lattice:
      return x.vec();
    case AmbientKind::free_monoid: {
      std::string s;
      for (auto l : x.word().letters) s += a.alphabet().at(l);
      return s;
    }
    case AmbientKind::product: {
      json out = json::array();
      for (std::size_t i = 0; i < a.factors().size(); ++i)
        out.push_back(encode(*a.factors()[i], x.parts().at(i)));
      return out;
    }
  }
  return nullptr;
}

Element decode_element(const Ambient& a, const json& j) {
  Element x;
  switch (a.kind()) {
    case AmbientKind::zmod:
    case AmbientKind::cayley:
      if (j.is_number_integer()) {
        x = Element(j.get<std::int64_t>());
      } else if (a.kind() == AmbientKind::cayley && j.is_string()) {
        const auto& ls = a.labels();
        auto it = std::find(ls.begin(), ls.end(), j.get<std::string>());
        if (it == ls.end()) mismatch(a, j);
        x = Element(static_cast<std::int64_t>(it - ls.begin()));
      } else {
        mismatch(a, j);
      }
      break;
    case AmbientKind::int_lattice:
    case AmbientKind::nat_lattice:
      if (a.dim() == 1 && j.is_number_integer()) {
        x = Element(Element::Vector{j.get<std::int64_t>()});
      } else if (j.is_array() &&
                 std::all_of(j.begin(), j.end(), [](const json& c) { return c.is_number_integer(); })) {
        x = Element(j.get<Element::Vector>());
      } else {
        mismatch(a, j);
      }
      break;
    case AmbientKind::free_monoid: {
      if (!j.is_string()) mismatch(a, j);
      const auto s = j.get<std::string>();
      Word w;
      std::size_t pos = 0;
      while (pos < s.size()) {
        // The alphabet is prefix-free, so at most one symbol matches here.
        const auto& alpha = a.alphabet();
        auto it = std::find_if(alpha.begin(), alpha.end(), [&](const std::string& sym) {
          return s.compare(pos, sym.size(), sym) == 0;
        });
        if (it == alpha.end()) mismatch(a, j);
        w.letters.push_back(static_cast<std::uint32_t>(it - alpha.begin()));
        pos += it->size();
      }
      x = Element(std::move(w));
      break;
    }
    case AmbientKind::product: {
      if (!j.is_array() || j.size() != a.factors().size()) mismatch(a, j);
      Element::Tuple t;
      for (std::size_t i = 0; i < j.size(); ++i) t.push_back(decode_element(*a.factors()[i], j[i]));
      x = Element(std::move(t));
      break;
    }
  }
  if (!a.contains(x)) mismatch(a, j);
  return x;
}

json encode(const FinSet& s) {
  json out = json::array();
  for (const auto& x : s) out.push_back(encode(s.ambient(), x));
  return out;
}

FinSet decode_set(const AmbientPtr& a, const json& j) {
  if (!j.is_array())
    throw Error(ErrorCode::element_ambient_mismatch, "a set must be a JSON array");
  std::vector<Element> xs;
  for (const auto& e : j) xs.push_back(decode_element(*a, e));
  return FinSet(a, std::move(xs));
}

json encode(ExtNat e) {
  if (e.is_inf()) return "inf";
  return e.value();
}

ExtNat decode_ext_nat(const json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return ExtNat::inf();
  if (j.is_number_unsigned() || (j.is_number_integer() && j.get<std::int64_t>() >= 0))
    return ExtNat{j.get<std::uint64_t>()};
  throw Error(ErrorCode::malformed_description, "not an extended natural: " + j.dump());
}

json to_json(const GammaValue& g, const Ambient& a) {
  return {{"value", encode(g.value)}, {"witness", opt(g.witness, a)}};
}

json to_json(const GenResult& g) {
  return {{"closure", encode(g.closure)}, {"complete", g.complete}, {"budget_used", g.budget_used}};
}

json to_json(const InvariantTransform& t) {
  const auto& a = t.x0.ambient();
  return {{"x0", encode(t.x0)},
          {"y0", encode(t.y0)},
          {"shift", encode(a, t.shift)},
          {"sumset_size", {{"before", t.sumset_before}, {"after", t.sumset_after}}},
          {"gamma_x", {{"before", encode(t.gamma_x)}, {"after", encode(t.gamma_x0)}}},
          {"gamma_y", {{"before", encode(t.gamma_y)}, {"after", encode(t.gamma_y0)}}},
          {"s1", t.s1},
          {"s2", t.s2},
          {"s3", t.s3}};
}

json to_json(const Normalization& n) {
  return {{"transform", to_json(n.transform)},
          {"kappa", n.kappa},
          {"threshold", encode(n.threshold)},
          {"identity_in_y0", n.identity_in_y0},
          {"orders_meet_kappa", n.orders_meet_kappa},
          {"commutativity_preserved", n.commutativity_preserved},
          {"structure_failure_preserved", n.structure_failure_preserved}};
}

json to_json(const DavenportPair& p, const Ambient& a) {
  return {{"z", encode(a, p.z)},
          {"y_tilde", encode(p.y_tilde)},
          {"y_keep", encode(p.y_keep)},
          {"z_minus_y_tilde", encode(p.z_minus_y_tilde)},
          {"sumset_size", p.sumset_size},
          {"keep_sumset_size", p.keep_sumset_size},
          {"inclusion", check(p.inclusion, a)},
          {"disjoint", check(p.disjoint, a)},
          {"injection", p.injection},
          {"ledger",
           {{"lhs", p.sumset_size + p.y_keep.size()},
            {"rhs", p.keep_sumset_size + p.y_keep.size() + p.y_tilde.size()},
            {"holds", p.ledger}}},
          {"all_hold", p.all_hold()}};
}

json to_json(const TheoremVerdict& v, const Ambient& a) {
  return {{"bound_lhs", v.bound_lhs},
          {"bound_rhs", v.bound_rhs},
          {"size_x", v.size_x},
          {"size_y", v.size_y},
          {"gamma_y", encode(v.gamma_y)},
          {"branch_i", v.branch_i},
          {"branch_ii", v.branch_ii},
          {"structure_witness", opt(v.structure_witness, a)},
          {"disjunction_holds", v.disjunction_holds}};
}

json to_json(const EquivalenceVerdict& v) {
  return {{"cond_i", v.cond_i},
          {"cond_ii", v.cond_ii},
          {"cond_iii", v.cond_iii},
          {"agree", v.agree},
          {"counterwitness", v.counterwitness ? json(*v.counterwitness) : json(nullptr)}};
}

json to_json(const BoundReport& r) {
  return {{"lhs", r.lhs},
          {"gamma", encode(r.gamma)},
          {"size_term", r.size_term},
          {"rhs", r.rhs},
          {"holds", r.holds}};
}

json to_json(const HsReport& r) {
  json j = {{"status", std::string(to_string(r.status))},
            {"hypothesis", r.hypothesis_decided ? json(r.hypothesis) : json("unknown")},
            {"union_size", r.union_size},
            {"size_x", r.size_x},
            {"size_y", r.size_y},
            {"gamma_y_with_identity", encode(r.gamma_y0)},
            {"identity_in_y", r.identity_in_y},
            {"rhs", r.rhs},
            {"holds", r.holds},
            {"classical", nullptr}};
  if (r.classical)
    j["classical"] = {{"min_order", encode(r.classical->min_order)},
                      {"rhs", r.classical->rhs},
                      {"holds", r.classical->holds},
                      {"implied", r.classical->implied}};
  return j;
}

json to_json(const ZnReport& r) {
  return {{"status", std::string(to_string(r.status))},
          {"hypothesis", r.hypothesis},
          {"n", r.n},
          {"delta", r.delta},
          {"quotient", r.quotient},
          {"gamma_y", encode(r.gamma_y)},
          {"gamma_identity_holds", r.gamma_identity_holds},
          {"lhs", r.lhs},
          {"rhs", r.rhs},
          {"holds", r.holds},
          {"literal_rhs", r.literal_rhs},
          {"literal_holds", r.literal_holds}};
}

json to_json(const DescentTrace& t, const Ambient& a) {
  json steps = json::array();
  for (const auto& s : t.steps)
    steps.push_back({{"size_x", s.size_x},
                     {"size_y", s.size_y},
                     {"sumset_size", s.sumset_size},
                     {"kappa", s.kappa},
                     {"gamma_y", encode(s.gamma_y)},
                     {"shift", encode(a, s.shift)},
                     {"pair", to_json(s.pair, a)},
                     {"ledger",
                      {{"lhs", s.ledger_lhs}, {"rhs", s.ledger_rhs}, {"holds", s.ledger_holds}}},
                     {"size_decreases", s.size_decreases}});
  return {{"steps", std::move(steps)},
          {"outcome", std::string(to_string(t.outcome))},
          {"stop", std::string(to_string(t.stop))},
          {"root_lhs", t.root_lhs},
          {"root_rhs", t.root_rhs},
          {"final_lhs", t.final_lhs},
          {"transported_bound", t.transported_bound}};
}

std::string digest(const json& j) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : j.dump()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace addcomb

#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "addcomb/ambient.hpp"
#include "addcomb/descent.hpp"
#include "addcomb/ext_nat.hpp"
#include "addcomb/finset.hpp"
#include "addcomb/gamma.hpp"
#include "addcomb/setops.hpp"
#include "addcomb/theorems.hpp"

// JSON forms of every value that crosses the library boundary.
//
//   ambient   {"kind":"zmod","n":6}, {"kind":"cayley","labels":[...],"table":[[...]]},
//             {"kind":"int_lattice","dim":2}, {"kind":"nat_lattice","dim":2},
//             {"kind":"free_monoid","alphabet":["a","b"]}, {"kind":"product","factors":[...]}
//             {"kind":"fixture","name":"S3"|"D4"|"Q8"} is accepted on input
//   element   residue or table index -> integer (a cayley label is accepted on input);
//             lattice point -> array of integers (a bare integer is accepted when dim = 1);
//             word -> string; product element -> array of factor encodings
//   set       array of element encodings, canonical order
//   ExtNat    integer or "inf"
namespace addcomb {

using nlohmann::json;

/// Throws MalformedDescription (or NonAssociativeTable) on a bad description.
AmbientPtr make_ambient(const json& desc);
json describe(const Ambient& a);

json encode(const Ambient& a, const Element& x);
/// Throws ElementAmbientMismatch when the encoding does not fit the ambient.
Element decode_element(const Ambient& a, const json& j);

json encode(const FinSet& s);
FinSet decode_set(const AmbientPtr& a, const json& j);

json encode(ExtNat e);
ExtNat decode_ext_nat(const json& j);

json to_json(const GammaValue& g, const Ambient& a);
json to_json(const GenResult& g);
json to_json(const InvariantTransform& t);
json to_json(const Normalization& n);
json to_json(const DavenportPair& p, const Ambient& a);
json to_json(const TheoremVerdict& v, const Ambient& a);
json to_json(const EquivalenceVerdict& v);
json to_json(const BoundReport& r);
json to_json(const HsReport& r);
json to_json(const ZnReport& r);
json to_json(const DescentTrace& t, const Ambient& a);

/// FNV-1a of a compact dump, as 16 hex digits.
std::string digest(const json& j);

}  // namespace addcomb

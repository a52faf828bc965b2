#pragma once

#include <string>

#include "json.hpp"

#include "factcat/category.hpp"

namespace factcat::codec {

using json = nlohmann::ordered_json;

// Integers are JSON numbers, rationals "p/q" strings, free elements "a^2*b"
// strings. Tuples are arrays. Morphisms are
// {"monoid", "domain", "codomain", "map"} with a 1-based map.

json encode_element(const Monoid& monoid, const Element& a);
Element decode_element(const Monoid& monoid, const json& j);

json encode_elements(const Monoid& monoid, const std::vector<Element>& xs);

json encode_tuple(const FactorTuple& t);
FactorTuple decode_tuple(const MonoidHandle& monoid, const json& j);

json encode_morphism(const Morphism& m);
/// Validates the order constraint. A "monoid" key, when present, must name
/// the same monoid as `monoid`; pass nullptr to take it from the document.
Morphism decode_morphism(MonoidHandle monoid, const json& j);

/// Parses text as JSON, mapping syntax errors to ParseError.
json parse_json(const std::string& text);

}  // namespace factcat::codec

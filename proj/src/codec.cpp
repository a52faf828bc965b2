#include "factcat/codec.hpp"

#include "factcat/errors.hpp"

namespace factcat::codec {

json encode_element(const Monoid& monoid, const Element& a) {
    if (const auto* n = std::get_if<Integer>(&a)) return *n;
    return monoid.format(a);
}

Element decode_element(const Monoid& monoid, const json& j) {
    Element a;
    if (j.is_number_integer()) {
        a = j.get<Integer>();
        if (monoid.kind() == MonoidKind::UnitInterval) a = Rational(std::get<Integer>(a));
        if (monoid.kind() == MonoidKind::FreeCommutative) {
            if (std::get<Integer>(a) != 1) throw ParseError("free monoid elements are strings");
            a = monoid.identity();
        }
    } else if (j.is_string()) {
        a = monoid.parse(j.get<std::string>());
    } else {
        throw ParseError("cannot read an element from " + j.dump());
    }
    monoid.require_valid(a);
    return a;
}

json encode_elements(const Monoid& monoid, const std::vector<Element>& xs) {
    json out = json::array();
    for (const auto& x : xs) out.push_back(encode_element(monoid, x));
    return out;
}

json encode_tuple(const FactorTuple& t) {
    json out = json::array();
    for (const auto& x : t.entries()) out.push_back(encode_element(t.monoid(), x));
    return out;
}

FactorTuple decode_tuple(const MonoidHandle& monoid, const json& j) {
    if (!j.is_array()) throw ParseError("a tuple is a JSON array, got " + j.dump());
    std::vector<Element> entries;
    entries.reserve(j.size());
    for (const auto& e : j) entries.push_back(decode_element(*monoid, e));
    return FactorTuple(monoid, std::move(entries));
}

json encode_morphism(const Morphism& m) {
    json out;
    out["monoid"] = m.monoid().name();
    out["domain"] = encode_tuple(m.domain());
    out["codomain"] = encode_tuple(m.codomain());
    out["map"] = m.index_fn().one_based();
    return out;
}

Morphism decode_morphism(MonoidHandle monoid, const json& j) {
    if (!j.is_object()) throw ParseError("a morphism is a JSON object");
    if (j.contains("monoid")) {
        if (!j["monoid"].is_string()) throw ParseError("\"monoid\" must be a string");
        auto named = make_monoid(j["monoid"].get<std::string>());
        if (!monoid) {
            monoid = named;
        } else if (!(*named == *monoid)) {
            throw ParseError("morphism names monoid " + named->name() + " but " + monoid->name() +
                             " was requested");
        }
    }
    if (!monoid) throw ParseError("no monoid given");
    for (const char* key : {"domain", "codomain", "map"}) {
        if (!j.contains(key)) throw ParseError(std::string("morphism is missing \"") + key + "\"");
    }
    auto domain = decode_tuple(monoid, j["domain"]);
    auto codomain = decode_tuple(monoid, j["codomain"]);
    if (!j["map"].is_array()) throw ParseError("\"map\" must be an array");
    std::vector<std::int64_t> values;
    for (const auto& v : j["map"]) {
        if (!v.is_number_integer()) throw ParseError("map values are integers");
        values.push_back(v.get<std::int64_t>());
    }
    auto fn = IndexFunction::from_one_based(domain.size(), values);
    return Morphism::validated(std::move(domain), std::move(codomain), std::move(fn));
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace factcat::codec

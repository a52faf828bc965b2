#pragma once

#include <initializer_list>
#include <vector>

#include "factcat/category.hpp"

namespace helpers {

using namespace factcat;

inline FactorTuple T(const MonoidHandle& h, std::initializer_list<Integer> xs) {
    return FactorTuple(h, std::vector<Element>(xs.begin(), xs.end()));
}

/// Builds a validated morphism from a 1-based map.
inline Morphism M(const MonoidHandle& h, std::initializer_list<Integer> dom, std::initializer_list<Integer> cod,
                  std::initializer_list<std::int64_t> map) {
    auto x = T(h, dom);
    const std::vector<std::int64_t> values(map);
    auto fn = IndexFunction::from_one_based(x.size(), values);
    return Morphism::validated(std::move(x), T(h, cod), std::move(fn));
}

inline std::vector<std::int64_t> map_of(const Morphism& m) { return m.index_fn().one_based(); }

inline std::vector<std::int64_t> ints(const std::vector<Element>& xs) {
    std::vector<std::int64_t> out;
    for (const auto& x : xs) out.push_back(std::get<Integer>(x));
    return out;
}

inline std::vector<std::int64_t> ints(const FactorTuple& t) {
    return ints(std::vector<Element>(t.entries().begin(), t.entries().end()));
}

}  // namespace helpers

#include "factcat/monoidal.hpp"

namespace factcat {

namespace {

void require_same_monoid(const Monoid& a, const Monoid& b) {
    if (!(a == b)) throw ValidationError("tensor operands live in different monoids");
}

LawCheck compare(const Morphism& lhs, const Morphism& rhs, const std::string& law) {
    if (lhs == rhs) return {};
    return {false, law + ": " + lhs.to_string() + " != " + rhs.to_string()};
}

}  // namespace

FactorTuple tensor_objects(const FactorTuple& s, const FactorTuple& t) {
    require_same_monoid(s.monoid(), t.monoid());
    std::vector<Element> entries(s.entries().begin(), s.entries().end());
    entries.insert(entries.end(), t.entries().begin(), t.entries().end());
    return FactorTuple(s.monoid_handle(), std::move(entries));
}

Morphism tensor_morphisms(const Morphism& f, const Morphism& g) {
    require_same_monoid(f.monoid(), g.monoid());
    const std::size_t N = f.domain().size();
    const std::size_t Q = f.codomain().size();
    const std::size_t P = g.codomain().size();
    std::vector<std::size_t> values(Q + P);
    for (std::size_t q = 0; q < Q; ++q) values[q] = f.index_fn()(q);
    for (std::size_t p = 0; p < P; ++p) values[Q + p] = N + g.index_fn()(p);
    return Morphism::trusted(tensor_objects(f.domain(), g.domain()),
                             tensor_objects(f.codomain(), g.codomain()),
                             IndexFunction(N + g.domain().size(), std::move(values)));
}

Morphism braiding(const FactorTuple& s, const FactorTuple& t) {
    require_same_monoid(s.monoid(), t.monoid());
    const std::size_t N = s.size();
    const std::size_t M = t.size();
    std::vector<std::size_t> values(M + N);
    for (std::size_t m = 0; m < M; ++m) values[m] = N + m;
    for (std::size_t n = 0; n < N; ++n) values[M + n] = n;
    return Morphism::trusted(tensor_objects(s, t), tensor_objects(t, s),
                             IndexFunction(N + M, std::move(values)));
}

LawCheck check_bifunctoriality(const Morphism& f, const Morphism& g, const Morphism& h,
                               const Morphism& k, ComposeFn comp) {
    return compare(comp(tensor_morphisms(h, k), tensor_morphisms(f, g)),
                   tensor_morphisms(comp(h, f), comp(k, g)), "bifunctoriality");
}

LawCheck check_tensor_associativity(const FactorTuple& a, const FactorTuple& b,
                                    const FactorTuple& c) {
    const auto lhs = tensor_objects(tensor_objects(a, b), c);
    const auto rhs = tensor_objects(a, tensor_objects(b, c));
    if (lhs == rhs) return {};
    return {false, "tensor associativity: " + lhs.to_string() + " != " + rhs.to_string()};
}

LawCheck check_tensor_associativity(const Morphism& f, const Morphism& g, const Morphism& h) {
    return compare(tensor_morphisms(tensor_morphisms(f, g), h),
                   tensor_morphisms(f, tensor_morphisms(g, h)), "tensor associativity");
}

LawCheck check_braiding_involution(const FactorTuple& s, const FactorTuple& t, ComposeFn comp) {
    const auto there = braiding(s, t);
    return compare(comp(braiding(t, s), there), identity_morphism(there.domain()),
                   "braiding involution");
}

LawCheck check_hexagon(const FactorTuple& x, const FactorTuple& y, const FactorTuple& z,
                       ComposeFn comp) {
    const auto lhs = braiding(x, tensor_objects(y, z));
    const auto rhs = comp(tensor_morphisms(identity_morphism(y), braiding(x, z)),
                             tensor_morphisms(braiding(x, y), identity_morphism(z)));
    return compare(lhs, rhs, "hexagon");
}

LawCheck check_braiding_naturality(const Morphism& f, const Morphism& g, ComposeFn comp) {
    const auto lhs = comp(braiding(f.codomain(), g.codomain()), tensor_morphisms(f, g));
    const auto rhs = comp(tensor_morphisms(g, f), braiding(f.domain(), g.domain()));
    return compare(lhs, rhs, "braiding naturality");
}

}  // namespace factcat

#include "factcat/weq.hpp"

#include <algorithm>
#include <optional>

namespace factcat {

QuotientWitness quotient_witnesses(const Morphism& m) {
    const Monoid& mon = m.monoid();
    mon.require_divisibility("quotient_witnesses");
    if (m.codomain().is_empty()) {
        const auto inv = mon.inverse(mon.product(m.domain().entries()));
        if (!inv) throw InternalError("morphism into the empty tuple from a non-unit product");
        return {{}, *inv};
    }
    const auto prods = fiber_products(m.domain(), m.codomain(), m.index_fn());
    QuotientWitness w{{}, mon.identity()};
    w.per_index.reserve(prods.size());
    for (std::size_t n = 0; n < prods.size(); ++n) {
        auto r = mon.exact_divide(m.domain()[n], prods[n]);
        if (!r) throw ValidationError("not a morphism: order constraint fails at " + std::to_string(n + 1));
        w.total = mon.op(w.total, *r);
        w.per_index.push_back(std::move(*r));
    }
    return w;
}

bool is_weak_equivalence(const Morphism& m) {
    const auto w = quotient_witnesses(m);
    if (m.codomain().is_empty()) return true;
    const Monoid& mon = m.monoid();
    return std::all_of(w.per_index.begin(), w.per_index.end(),
                       [&](const Element& r) { return mon.is_invertible(r); });
}

EIPDecomposition decompose_eip(const Morphism& m) {
    const Monoid& mon = m.monoid();
    mon.require_divisibility("decompose_eip");
    if (m.domain().is_empty() || m.codomain().is_empty()) {
        throw ValidationError("decompose_eip needs non-empty domain and codomain");
    }
    const auto& f = m.index_fn();
    const std::size_t N = m.domain().size();

    std::vector<bool> in_image(N, false);
    for (auto v : f.values()) in_image[v] = true;
    std::vector<std::size_t> image;  // n_1 < ... < n_P
    std::vector<std::size_t> position(N, 0);
    Element dropped = mon.identity();
    for (std::size_t n = 0; n < N; ++n) {
        if (in_image[n]) {
            position[n] = image.size();
            image.push_back(n);
        } else {
            dropped = mon.op(dropped, m.domain()[n]);
        }
    }
    const std::size_t P = image.size();

    std::vector<Element> z;
    for (auto n : image) z.push_back(m.domain()[n]);
    FactorTuple z_tuple(m.monoid_handle(), z);

    const auto prods = fiber_products(m.domain(), m.codomain(), f);
    std::vector<Element> ratios;
    std::vector<Element> scaled;
    for (std::size_t p = 0; p < P; ++p) {
        auto a = mon.exact_divide(z[p], prods[image[p]]);
        if (!a) throw ValidationError("not a morphism: order constraint fails");
        ratios.push_back(*a);
        scaled.push_back(prods[image[p]]);
    }
    FactorTuple scaled_tuple(m.monoid_handle(), scaled);

    std::vector<std::size_t> phi_values(f.dom_size());
    for (std::size_t k = 0; k < f.dom_size(); ++k) phi_values[k] = position[f(k)];

    return EIPDecomposition{
        Morphism::validated(m.domain(), z_tuple, IndexFunction(N, image)),
        Morphism::validated(z_tuple, scaled_tuple, IndexFunction::identity(P)),
        Morphism::validated(scaled_tuple, m.codomain(), IndexFunction(P, std::move(phi_values))),
        std::move(ratios),
        std::move(dropped),
    };
}

DeltaClass classify_by_delta(const Morphism& m) {
    const auto d = decompose_eip(m);
    const Monoid& mon = m.monoid();
    const bool all_units = std::all_of(d.ratios.begin(), d.ratios.end(),
                                       [&](const Element& a) { return mon.is_invertible(a); });
    return all_units ? DeltaClass::WeakEquivalence : DeltaClass::Proper;
}

namespace {

/// (prod t) -> t with the constant map onto the single domain index.
Morphism collapse_from_product(const FactorTuple& t) {
    const auto& mon = t.monoid();
    return Morphism::validated(FactorTuple(t.monoid_handle(), {mon.product(t.entries())}), t,
                               IndexFunction(1, std::vector<std::size_t>(t.size(), 0)));
}

}  // namespace

OreSquare ore_square(const Morphism& f, const Morphism& g) {
    f.monoid().require_divisibility("ore_square");
    if (!is_weak_equivalence(f)) throw ValidationError("ore_square: f is not a weak equivalence");
    if (!(f.codomain() == g.codomain())) throw ValidationError("ore_square: f and g need a common codomain");

    Morphism f_prime = collapse_from_product(g.domain());
    const FactorTuple& source = f_prime.domain();
    std::optional<Morphism> g_prime;
    try {
        g_prime = Morphism::validated(source, f.domain(),
                                      IndexFunction(1, std::vector<std::size_t>(f.domain().size(), 0)));
    } catch (const ValidationError&) {
        throw InternalError("ore_square: prod z does not divide prod x");
    }
    if (!(compose(f, *g_prime) == compose(g, f_prime))) {
        throw InternalError("ore_square: square does not commute");
    }
    return {std::move(f_prime), std::move(*g_prime)};
}

Morphism right_cancel_witness(const Morphism& f, const Morphism& f2, const Morphism& g) {
    f.monoid().require_divisibility("right_cancel_witness");
    if (!(f.domain() == f2.domain()) || !(f.codomain() == f2.codomain())) {
        throw ValidationError("right_cancel_witness: f and f2 are not parallel");
    }
    if (!is_weak_equivalence(g)) throw ValidationError("right_cancel_witness: g is not a weak equivalence");
    if (!(compose(g, f) == compose(g, f2))) {
        throw ValidationError("right_cancel_witness: g o f differs from g o f2");
    }
    Morphism h = collapse_from_product(f.domain());
    if (!is_weak_equivalence(h) || !(compose(f, h) == compose(f2, h))) {
        throw InternalError("right_cancel_witness: witness does not equalize f and f2");
    }
    return h;
}

}  // namespace factcat

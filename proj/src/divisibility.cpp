#include "factcat/divisibility.hpp"

#include <algorithm>
#include <numeric>

#include "factcat/monoidal.hpp"
#include "factcat/weq.hpp"

namespace factcat {

WeakDivisibility weak_divisibility(const Morphism& f, const Morphism& g) {
    f.monoid().require_divisibility("weakly_divides");
    if (!(f.monoid() == g.monoid())) throw ValidationError("morphisms live in different monoids");
    auto s = quotient_witnesses(f).total;
    auto r = quotient_witnesses(g).total;
    const bool divides = f.monoid().divides(s, r);
    return {divides, std::move(s), std::move(r)};
}

bool weakly_divides(const Morphism& f, const Morphism& g) { return weak_divisibility(f, g).divides; }

bool weakly_divides_by_products(const Morphism& f, const Morphism& g) {
    const Monoid& mon = f.monoid();
    mon.require_divisibility("weakly_divides");
    const auto lhs = mon.op(product_functor(g.domain()), product_functor(f.codomain()));
    const auto rhs = mon.op(product_functor(f.domain()), product_functor(g.codomain()));
    return mon.divides(lhs, rhs);
}

namespace {

FactorTuple singleton(const MonoidHandle& h, const Element& a) { return FactorTuple(h, {a}); }

Morphism collapse(const FactorTuple& from, const FactorTuple& to) {
    return Morphism::validated(from, to, IndexFunction(1, std::vector<std::size_t>(to.size(), 0)));
}

}  // namespace

WeakDivDiagram weak_div_diagram(const Morphism& f, const Morphism& g) {
    if (!weakly_divides(f, g)) throw ValidationError("weak_div_diagram: f does not weakly divide g");
    const Monoid& mon = f.monoid();
    const auto& h = f.monoid_handle();
    Element a = product_functor(f.domain());
    Element b = product_functor(g.domain());
    const auto a_tuple = singleton(h, a);
    const auto b_tuple = singleton(h, b);

    const auto top = singleton(h, mon.op(a, b));
    const auto bottom = singleton(h, mon.op(b, product_functor(f.codomain())));
    Morphism left = tensor_morphisms(identity_morphism(a_tuple), g);
    Morphism right = tensor_morphisms(identity_morphism(b_tuple), f);
    Morphism mu = collapse(top, left.domain());
    Morphism alpha = collapse(top, right.domain());
    Morphism beta = collapse(bottom, left.codomain());
    Morphism eta = collapse(bottom, right.codomain());
    if (!is_weak_equivalence(mu) || !is_weak_equivalence(eta)) {
        throw InternalError("weak_div_diagram: horizontal factorization morphisms not in W");
    }
    return {std::move(a), std::move(b), std::move(mu), std::move(alpha),
            std::move(beta), std::move(eta), std::move(left), std::move(right)};
}

bool weakly_associate(const Morphism& f, const Morphism& g) {
    f.monoid().require_divisibility("weakly_associate");
    return f.monoid().are_associates(quotient_witnesses(f).total, quotient_witnesses(g).total);
}

bool is_weakly_irreducible(const Morphism& m) {
    m.monoid().require_divisibility("is_weakly_irreducible");
    return m.monoid().is_irreducible(quotient_witnesses(m).total);
}

bool is_weakly_prime(const Morphism& m) {
    m.monoid().require_divisibility("is_weakly_prime");
    return m.monoid().is_prime(quotient_witnesses(m).total);
}

namespace {

Morphism from_one(const FactorTuple& t) {
    const Monoid& mon = t.monoid();
    return Morphism::validated(FactorTuple(t.monoid_handle(), {mon.identity()}), t,
                               IndexFunction(1, std::vector<std::size_t>(t.size(), 0)));
}

}  // namespace

bool is_weakly_irreducible_tuple(const FactorTuple& t) {
    t.monoid().require_divisibility("is_weakly_irreducible_tuple");
    return is_weakly_irreducible(from_one(t));
}

bool is_weakly_prime_tuple(const FactorTuple& t) {
    t.monoid().require_divisibility("is_weakly_prime_tuple");
    return is_weakly_prime(from_one(t));
}

Morphism compose_chain(std::span<const Morphism> steps) {
    if (steps.empty()) throw ValidationError("compose_chain: empty chain");
    Morphism acc = steps.front();
    for (std::size_t i = 1; i < steps.size(); ++i) acc = compose(steps[i], acc);
    return acc;
}

AtomicChain atomic_chain(const Morphism& m) {
    const Monoid& mon = m.monoid();
    mon.require_divisibility("atomic_chain");
    const auto d = decompose_eip(m);
    const auto& h = m.monoid_handle();

    AtomicChain chain;
    auto push = [&](Morphism step, StepTag tag) {
        if (step.domain() == step.codomain() &&
            step.index_fn() == IndexFunction::identity(step.domain().size())) {
            return;
        }
        chain.steps.push_back(std::move(step));
        chain.tags.push_back(tag);
    };

    push(d.epsilon, StepTag::WeakEquivalence);

    std::vector<Element> current(d.delta.domain().entries().begin(), d.delta.domain().entries().end());
    for (std::size_t p = 0; p < current.size(); ++p) {
        for (const auto& q : mon.factor_irreducibles(d.ratios[p]).factors) {
            FactorTuple before(h, current);
            current[p] = mon.op(current[p], q);
            FactorTuple after(h, current);
            push(Morphism::validated(std::move(before), std::move(after),
                                     IndexFunction::identity(current.size())),
                 StepTag::WeaklyIrreducible);
            ++chain.irr_count;
        }
    }
    // the leftover units of each a_p ride along with the factorization morphism
    push(Morphism::validated(FactorTuple(h, current), m.codomain(), d.phi.index_fn()),
         StepTag::WeakEquivalence);

    if (chain.steps.empty()) {
        chain.steps.push_back(m);
        chain.tags.push_back(StepTag::WeakEquivalence);
    }
    return chain;
}

std::size_t zeta_elt(const Monoid& monoid, const Element& a) {
    return monoid.factor_irreducibles(a).factors.size();
}

std::size_t zeta_mor(const Morphism& m) { return zeta_elt(m.monoid(), quotient_witnesses(m).total); }

std::size_t zeta_obj(const FactorTuple& t) {
    t.monoid().require_divisibility("zeta_obj");
    return zeta_elt(t.monoid(), product_functor(t));
}

std::vector<Element> divisor_classes(const Monoid& monoid, const Element& a) {
    monoid.require_divisibility("divisor_classes");
    monoid.require_valid(a);
    std::vector<Element> out;
    if (monoid.kind() == MonoidKind::FreeCommutative) {
        const auto& top = std::get<FreeElement>(a).exponents;
        FreeElement cur{std::vector<std::uint32_t>(top.size(), 0)};
        while (true) {
            out.emplace_back(cur);
            std::size_t i = 0;
            while (i < top.size() && cur.exponents[i] == top[i]) cur.exponents[i++] = 0;
            if (i == top.size()) break;
            ++cur.exponents[i];
        }
        std::sort(out.begin(), out.end(), [&](const Element& x, const Element& y) {
            const auto& ex = std::get<FreeElement>(x).exponents;
            const auto& ey = std::get<FreeElement>(y).exponents;
            const auto dx = std::accumulate(ex.begin(), ex.end(), 0u);
            const auto dy = std::accumulate(ey.begin(), ey.end(), 0u);
            if (dx != dy) return dx < dy;
            return monoid.format(x) < monoid.format(y);
        });
        return out;
    }
    Integer n = std::get<Integer>(a);
    n = n < 0 ? -n : n;
    if (n > kPrimalityBound) throw RangeError("divisor enumeration bound exceeded");
    std::vector<Integer> small, large;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    for (auto d : small) out.emplace_back(d);
    for (auto it = large.rbegin(); it != large.rend(); ++it) out.emplace_back(*it);
    return out;
}

std::vector<Element> weak_divisor_classes(const Morphism& m) {
    m.monoid().require_divisibility("weak_divisor_classes");
    return divisor_classes(m.monoid(), quotient_witnesses(m).total);
}

std::optional<std::size_t> chain_stabilizes(std::span<const Morphism> chain) {
    if (!chain.empty()) chain.front().monoid().require_divisibility("chain_stabilizes");
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        if (!(chain[i + 1].codomain() == chain[i].domain())) {
            throw ValidationError("chain is not composable at position " + std::to_string(i + 2));
        }
    }
    std::size_t first = 1;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (!is_weak_equivalence(chain[i])) first = i + 2;
    }
    if (first > chain.size() && !chain.empty()) return std::nullopt;
    return first;
}

namespace {

struct FactorSearch {
    const Monoid& mon;
    const std::vector<Element>& irreducibles;  // one representative per associate class
    std::size_t max_count;
    std::vector<Element> current;
    FactorizationEnumeration result;

    void run(const Element& remaining, std::size_t from) {
        if (result.truncated) return;
        if (mon.is_invertible(remaining)) {
            if (result.factorizations.size() == max_count) {
                result.truncated = true;
                return;
            }
            result.factorizations.push_back(current);
            return;
        }
        for (std::size_t i = from; i < irreducibles.size(); ++i) {
            const auto q = mon.exact_divide(irreducibles[i], remaining);
            if (!q) continue;
            current.push_back(irreducibles[i]);
            run(*q, i);
            current.pop_back();
        }
    }
};

}  // namespace

FactorizationEnumeration enumerate_irreducible_factorizations(const Monoid& monoid,
                                                              const Element& a,
                                                              std::size_t max_count) {
    monoid.require_divisibility("enumerate_irreducible_factorizations");
    monoid.require_valid(a);
    // candidate atoms: non-unit divisors with no proper non-unit divisor
    std::vector<Element> irreducibles;
    for (const auto& d : divisor_classes(monoid, a)) {
        if (monoid.is_invertible(d)) continue;
        bool atom = true;
        for (const auto& e : divisor_classes(monoid, d)) {
            if (!monoid.is_invertible(e) && !monoid.are_associates(e, d)) {
                atom = false;
                break;
            }
        }
        if (atom) irreducibles.push_back(d);
    }
    FactorSearch search{monoid, irreducibles, max_count, {}, {}};
    search.run(a, 0);
    return std::move(search.result);
}

std::variant<Morphism, Wedge> ufd_wedge(const Morphism& f, const Morphism& g) {
    const Monoid& mon = f.monoid();
    mon.require_divisibility("ufd_wedge");
    if (!(f.codomain() == g.codomain())) throw ValidationError("ufd_wedge: f and g need a common codomain");
    const FactorTuple& v = f.domain();
    const FactorTuple& w = g.domain();
    if (!is_weakly_irreducible_tuple(v) || !is_weakly_irreducible_tuple(w)) {
        throw ValidationError("ufd_wedge: domains must be weakly irreducible tuples");
    }
    auto core = [&](const FactorTuple& t) {
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (!mon.is_invertible(t[i])) return i;
        }
        throw InternalError("weakly irreducible tuple without a non-unit entry");
    };
    const std::size_t i0 = core(v);
    const std::size_t j0 = core(w);

    if (mon.are_associates(v[i0], w[j0])) {
        Morphism weq = Morphism::validated(v, w, IndexFunction(v.size(), std::vector<std::size_t>(w.size(), i0)));
        if (!is_weak_equivalence(weq)) throw InternalError("ufd_wedge: associate case is not in W");
        return weq;
    }
    const auto& h = f.monoid_handle();
    FactorTuple apex(h, {mon.op(v[i0], w[j0])});
    Morphism from_v = Morphism::validated(v, apex, IndexFunction(v.size(), {i0}));
    Morphism from_w = Morphism::validated(w, apex, IndexFunction(w.size(), {j0}));
    std::optional<Morphism> to_z;
    try {
        to_z = Morphism::validated(apex, f.codomain(),
                                   IndexFunction(1, std::vector<std::size_t>(f.codomain().size(), 0)));
    } catch (const ValidationError&) {
        throw InternalError("ufd_wedge: t does not divide prod z");
    }
    if (!is_weakly_irreducible(from_v) || !is_weakly_irreducible(from_w)) {
        throw InternalError("ufd_wedge: legs are not weakly irreducible");
    }
    return Wedge{std::move(apex), std::move(from_v), std::move(from_w), std::move(*to_z)};
}

}  // namespace factcat

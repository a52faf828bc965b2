#include "factcat/category.hpp"

#include <algorithm>
#include <sstream>

namespace factcat {

// ---------------------------------------------------------------- FactorTuple

FactorTuple::FactorTuple(MonoidHandle monoid, std::vector<Element> entries)
    : monoid_(std::move(monoid)), entries_(std::move(entries)) {
    if (!monoid_) throw ValidationError("tuple without a monoid");
    for (const auto& e : entries_) monoid_->require_valid(e);
}

FactorTuple FactorTuple::empty(MonoidHandle monoid) { return FactorTuple(std::move(monoid), {}); }

std::string FactorTuple::to_string() const {
    if (entries_.empty()) return "()";
    std::string out = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out += ',';
        out += monoid_->format(entries_[i]);
    }
    return out + ")";
}

// -------------------------------------------------------------- IndexFunction

IndexFunction::IndexFunction(std::size_t cod_size, std::vector<std::size_t> values)
    : cod_size_(cod_size), values_(std::move(values)) {
    for (std::size_t v : values_) {
        if (v >= cod_size_) {
            throw ValidationError("index function value out of range [1," +
                                  std::to_string(cod_size_) + "]");
        }
    }
}

IndexFunction IndexFunction::identity(std::size_t n) {
    std::vector<std::size_t> values(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = i;
    return IndexFunction(n, std::move(values));
}

IndexFunction IndexFunction::from_one_based(std::size_t cod_size,
                                            std::span<const std::int64_t> values) {
    std::vector<std::size_t> zero_based;
    zero_based.reserve(values.size());
    for (auto v : values) {
        if (v < 1 || static_cast<std::uint64_t>(v) > cod_size) {
            throw ValidationError("map value " + std::to_string(v) + " outside [1," +
                                  std::to_string(cod_size) + "]");
        }
        zero_based.push_back(static_cast<std::size_t>(v - 1));
    }
    return IndexFunction(cod_size, std::move(zero_based));
}

std::vector<std::int64_t> IndexFunction::one_based() const {
    std::vector<std::int64_t> out;
    out.reserve(values_.size());
    for (auto v : values_) out.push_back(static_cast<std::int64_t>(v) + 1);
    return out;
}

bool IndexFunction::is_injective() const {
    std::vector<bool> seen(cod_size_, false);
    for (auto v : values_) {
        if (seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

bool IndexFunction::is_surjective() const {
    std::vector<bool> hit(cod_size_, false);
    for (auto v : values_) hit[v] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

std::vector<std::size_t> IndexFunction::fiber(std::size_t n) const {
    std::vector<std::size_t> out;
    for (std::size_t m = 0; m < values_.size(); ++m) {
        if (values_[m] == n) out.push_back(m);
    }
    return out;
}

IndexFunction IndexFunction::after(const IndexFunction& inner) const {
    if (inner.cod_size() != dom_size()) {
        throw ValidationError("index functions are not composable");
    }
    std::vector<std::size_t> out(inner.dom_size());
    for (std::size_t p = 0; p < out.size(); ++p) out[p] = values_[inner(p)];
    return IndexFunction(cod_size_, std::move(out));
}

// ------------------------------------------------------------------- Morphism

Morphism::Morphism(FactorTuple domain, FactorTuple codomain, IndexFunction index_fn)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), index_fn_(std::move(index_fn)) {}

std::vector<Element> fiber_products(const FactorTuple& domain, const FactorTuple& codomain,
                                    const IndexFunction& f) {
    const Monoid& mon = domain.monoid();
    std::vector<Element> prods(domain.size(), mon.identity());
    for (std::size_t m = 0; m < f.dom_size(); ++m) prods[f(m)] = mon.op(prods[f(m)], codomain[m]);
    return prods;
}

namespace {

void check_shapes(const FactorTuple& domain, const FactorTuple& codomain, const IndexFunction& f) {
    if (!(domain.monoid() == codomain.monoid())) {
        throw ValidationError("domain and codomain live in different monoids");
    }
    if (f.dom_size() != codomain.size() || f.cod_size() != domain.size()) {
        throw ValidationError("map has shape [" + std::to_string(f.dom_size()) + "]->[" +
                              std::to_string(f.cod_size()) + "] but the tuples need [" +
                              std::to_string(codomain.size()) + "]->[" +
                              std::to_string(domain.size()) + "]");
    }
}

}  // namespace

Morphism Morphism::validated(FactorTuple domain, FactorTuple codomain, IndexFunction index_fn) {
    check_shapes(domain, codomain, index_fn);
    const Monoid& mon = domain.monoid();
    const auto prods = fiber_products(domain, codomain, index_fn);
    for (std::size_t n = 0; n < domain.size(); ++n) {
        if (!mon.leq(domain[n], prods[n])) {
            throw ConstraintViolation(
                n + 1, "order constraint fails at domain index " + std::to_string(n + 1) + ": " +
                           mon.format(domain[n]) + " is not <= " + mon.format(prods[n]));
        }
    }
    return Morphism(std::move(domain), std::move(codomain), std::move(index_fn));
}

Morphism Morphism::trusted(FactorTuple domain, FactorTuple codomain, IndexFunction index_fn) {
    check_shapes(domain, codomain, index_fn);
    return Morphism(std::move(domain), std::move(codomain), std::move(index_fn));
}

std::string Morphism::to_string() const {
    std::ostringstream os;
    os << domain_.to_string() << " -> " << codomain_.to_string() << " [";
    const auto map = index_fn_.one_based();
    for (std::size_t i = 0; i < map.size(); ++i) os << (i ? "," : "") << map[i];
    os << "]";
    return os.str();
}

Morphism validate_morphism(FactorTuple domain, FactorTuple codomain, IndexFunction index_fn) {
    return Morphism::validated(std::move(domain), std::move(codomain), std::move(index_fn));
}

Morphism identity_morphism(const FactorTuple& t) {
    return Morphism::trusted(t, t, IndexFunction::identity(t.size()));
}

Morphism compose(const Morphism& g, const Morphism& f) {
    if (!(f.codomain() == g.domain())) {
        throw ValidationError("cannot compose: codomain " + f.codomain().to_string() +
                              " differs from domain " + g.domain().to_string());
    }
    // g o f is represented by f o g on index functions: [P] -> [M] -> [N]
    return Morphism::trusted(f.domain(), g.codomain(), f.index_fn().after(g.index_fn()));
}

// -------------------------------------------------------------------- hom_set

std::uint64_t hom_candidate_count(std::size_t domain_len, std::size_t codomain_len) {
    if (codomain_len == 0) return 1;
    if (domain_len == 0) return 0;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < codomain_len; ++i) {
        total *= domain_len;
        if (total > kHomSetGuard) return kHomSetGuard + 1;
    }
    return total;
}

namespace {

struct HomSearch {
    const FactorTuple& domain;
    const FactorTuple& codomain;
    const Monoid& mon;
    std::vector<std::size_t> values;
    std::vector<Element> prods;
    std::vector<std::size_t> fiber_sizes;
    std::vector<bool> needs_fiber;  // divisibility: non-units cannot have an empty fiber
    std::size_t open_needs = 0;
    std::vector<Morphism> out;

    void run(std::size_t m) {
        const std::size_t M = codomain.size();
        const std::size_t N = domain.size();
        if (open_needs > M - m) return;
        if (m == M) {
            for (std::size_t n = 0; n < N; ++n) {
                if (!mon.leq(domain[n], prods[n])) return;
            }
            out.push_back(Morphism::trusted(domain, codomain, IndexFunction(N, values)));
            return;
        }
        for (std::size_t n = 0; n < N; ++n) {
            Element saved = prods[n];
            prods[n] = mon.op(prods[n], codomain[m]);
            values[m] = n;
            if (fiber_sizes[n]++ == 0 && needs_fiber[n]) --open_needs;
            run(m + 1);
            if (--fiber_sizes[n] == 0 && needs_fiber[n]) ++open_needs;
            prods[n] = std::move(saved);
        }
    }
};

}  // namespace

std::vector<Morphism> hom_set(const FactorTuple& domain, const FactorTuple& codomain) {
    if (!(domain.monoid() == codomain.monoid())) {
        throw ValidationError("domain and codomain live in different monoids");
    }
    const std::uint64_t candidates = hom_candidate_count(domain.size(), codomain.size());
    if (candidates > kHomSetGuard) {
        throw GuardError("hom set needs " + std::to_string(domain.size()) + "^" +
                         std::to_string(codomain.size()) + " > 10^7 candidate functions");
    }
    const Monoid& mon = domain.monoid();
    HomSearch search{domain, codomain, mon,
                     std::vector<std::size_t>(codomain.size(), 0),
                     std::vector<Element>(domain.size(), mon.identity()),
                     std::vector<std::size_t>(domain.size(), 0),
                     std::vector<bool>(domain.size(), false),
                     0,
                     {}};
    if (mon.is_divisibility_monoid()) {
        for (std::size_t n = 0; n < domain.size(); ++n) {
            if (!mon.is_invertible(domain[n])) {
                search.needs_fiber[n] = true;
                ++search.open_needs;
            }
        }
    }
    if (domain.is_empty() && !codomain.is_empty()) return {};
    search.run(0);
    return std::move(search.out);
}

// -------------------------------------------------------------- classification

bool is_epic(const Morphism& m) {
    m.monoid().require_divisibility("is_epic");
    return m.index_fn().is_injective();
}

bool is_monic(const Morphism& m) {
    m.monoid().require_divisibility("is_monic");
    return m.index_fn().is_surjective();
}

std::optional<std::vector<Element>> isomorphism_units(const Morphism& m) {
    const Monoid& mon = m.monoid();
    mon.require_divisibility("is_isomorphism");
    const auto& f = m.index_fn();
    if (m.domain().size() != m.codomain().size() || !f.is_bijective()) return std::nullopt;
    std::vector<Element> units(m.domain().size(), mon.identity());
    for (std::size_t k = 0; k < f.dom_size(); ++k) {
        const std::size_t n = f(k);
        const auto u = mon.exact_divide(m.domain()[n], m.codomain()[k]);
        if (!u || !mon.is_invertible(*u)) return std::nullopt;
        units[n] = *u;
    }
    return units;
}

bool is_isomorphism(const Morphism& m) { return isomorphism_units(m).has_value(); }

std::optional<Morphism> inverse(const Morphism& m) {
    if (!is_isomorphism(m)) return std::nullopt;
    const auto& f = m.index_fn();
    std::vector<std::size_t> g(f.dom_size());
    for (std::size_t k = 0; k < f.dom_size(); ++k) g[f(k)] = k;
    return Morphism::validated(m.codomain(), m.domain(), IndexFunction(f.dom_size(), std::move(g)));
}

bool is_initial(const FactorTuple& t) {
    t.monoid().require_divisibility("is_initial");
    return t.size() == 1 && t.monoid().is_invertible(t[0]);
}

FactorTuple refute_terminal(const FactorTuple& t) {
    const Monoid& mon = t.monoid();
    mon.require_divisibility("refute_terminal");
    const Element prod = mon.product(t.entries());
    Element alpha;
    if (mon.kind() == MonoidKind::FreeCommutative) {
        alpha = mon.op(prod, mon.generator(0));
    } else {
        const Integer p = std::get<Integer>(prod);
        alpha = arith::next_prime(p < 0 ? -p : p);
    }
    if (mon.divides(alpha, prod)) {
        throw InternalError("terminal-object witness divides the tuple product");
    }
    return FactorTuple(t.monoid_handle(), {alpha});
}

// ------------------------------------------------------------------- functors

IndexFunction underlying_function(const Morphism& m) { return m.index_fn(); }

Element product_functor(const FactorTuple& t) { return t.monoid().product(t.entries()); }

FactorTuple embed_functor(const MonoidHandle& monoid, const Element& a) {
    return FactorTuple(monoid, {a});
}

MonoidHomomorphism::MonoidHomomorphism(Kind kind, MonoidHandle source, MonoidHandle target,
                                       std::vector<Integer> images)
    : kind_(kind), source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {}

MonoidHomomorphism MonoidHomomorphism::identity(MonoidHandle monoid) {
    auto target = monoid;
    return MonoidHomomorphism(Kind::Identity, std::move(monoid), std::move(target));
}

MonoidHomomorphism MonoidHomomorphism::naturals_to_integers() {
    return MonoidHomomorphism(Kind::NaturalsToIntegers, make_monoid("nat"), make_monoid("zx"));
}

MonoidHomomorphism MonoidHomomorphism::free_to_integers(MonoidHandle source,
                                                        std::vector<Integer> images) {
    if (!source || source->kind() != MonoidKind::FreeCommutative) {
        throw ValidationError("free_to_integers needs a free monoid source");
    }
    if (images.size() != source->alphabet().size()) {
        throw ValidationError("one image per generator is required");
    }
    for (auto v : images) {
        if (v == 0) throw ValidationError("generator images must be nonzero integers");
    }
    return MonoidHomomorphism(Kind::FreeToIntegers, std::move(source), make_monoid("zx"),
                              std::move(images));
}

MonoidHomomorphism MonoidHomomorphism::free_to_integers(MonoidHandle source) {
    if (!source) throw ValidationError("free_to_integers needs a source monoid");
    std::vector<Integer> primes;
    Integer p = 1;
    for (std::size_t i = 0; i < source->alphabet().size(); ++i) primes.push_back(p = arith::next_prime(p));
    return free_to_integers(std::move(source), std::move(primes));
}

Element MonoidHomomorphism::apply(const Element& a) const {
    source_->require_valid(a);
    switch (kind_) {
        case Kind::Identity:
        case Kind::NaturalsToIntegers:
            return a;
        case Kind::FreeToIntegers: {
            const auto& e = std::get<FreeElement>(a).exponents;
            Integer out = 1;
            for (std::size_t i = 0; i < e.size(); ++i) {
                for (std::uint32_t k = 0; k < e[i]; ++k) out = arith::checked_mul(out, images_[i]);
            }
            return out;
        }
    }
    return a;
}

FactorTuple MonoidHomomorphism::apply(const FactorTuple& t) const {
    if (!(t.monoid() == *source_)) throw ValidationError("tuple is not in the homomorphism's source");
    std::vector<Element> out;
    out.reserve(t.size());
    for (const auto& e : t.entries()) out.push_back(apply(e));
    return FactorTuple(target_, std::move(out));
}

Morphism map_along_hom(const MonoidHomomorphism& phi, const Morphism& m) {
    // order-respecting homomorphisms carry order constraints along, but the
    // result is re-validated in the target anyway
    return Morphism::validated(phi.apply(m.domain()), phi.apply(m.codomain()), m.index_fn());
}

}  // namespace factcat

#include "factcat/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "factcat/divisibility.hpp"
#include "factcat/errors.hpp"
#include "factcat/monoidal.hpp"
#include "factcat/weq.hpp"

namespace factcat::oracle {

namespace {

constexpr std::size_t kMaxUniverseTuples = 20'000;

struct Universe {
    std::vector<FactorTuple> tuples;
    std::map<std::string, std::size_t> index;
    std::vector<Morphism> morphisms;
    std::vector<std::size_t> dom, cod;                  // tuple index per morphism
    std::vector<std::vector<std::size_t>> out_of, into;  // morphism indices per tuple

    std::optional<std::size_t> find(const FactorTuple& t) const {
        auto it = index.find(t.to_string());
        if (it == index.end()) return std::nullopt;
        return it->second;
    }
};

class Context {
public:
    Context(const UniverseSpec& spec, const Hooks& hooks) : spec(spec), hooks(hooks) {}

    const UniverseSpec& spec;
    const Hooks& hooks;
    std::map<std::string, bool> epic_cache;
    std::map<std::string, bool> monic_cache;

    const Monoid& monoid() const { return *spec.monoid; }

    Morphism compose(const Morphism& g, const Morphism& f) const { return hooks.compose(g, f); }

    const Universe& universe() {
        if (!universe_) build();
        return *universe_;
    }

private:
    std::optional<Universe> universe_;

    void build() {
        Universe u;
        u.tuples = enumerate_tuples(spec.monoid, spec.pool, spec.max_len);
        for (std::size_t i = 0; i < u.tuples.size(); ++i) u.index.emplace(u.tuples[i].to_string(), i);
        u.out_of.resize(u.tuples.size());
        u.into.resize(u.tuples.size());
        for (std::size_t i = 0; i < u.tuples.size(); ++i) {
            for (std::size_t j = 0; j < u.tuples.size(); ++j) {
                for (auto& m : hom_set(u.tuples[i], u.tuples[j])) {
                    const std::size_t k = u.morphisms.size();
                    u.morphisms.push_back(std::move(m));
                    u.dom.push_back(i);
                    u.cod.push_back(j);
                    u.out_of[i].push_back(k);
                    u.into[j].push_back(k);
                }
            }
        }
        universe_ = std::move(u);
    }
};

using Morphisms = std::vector<Morphism>;
using Tuples = std::vector<FactorTuple>;
// Returns an empty string when the check passes.
using CheckFn = std::string (*)(Context&, const Morphisms&, const Tuples&);

std::string describe(const Morphism& m) { return m.to_string(); }

bool all_leq_one(const Monoid& mon, const FactorTuple& t, std::optional<std::size_t> except = {}) {
    for (std::size_t n = 0; n < t.size(); ++n) {
        if (except && *except == n) continue;
        if (!mon.leq(t[n], mon.identity())) return false;
    }
    return true;
}

// ---------------------------------------------------------------- hom-sets

std::string check_hom_formulas(Context& ctx, const Morphisms&, const Tuples& ts) {
    const auto& x = ts.at(0);
    const auto& y = ts.at(1);
    const Monoid& mon = ctx.monoid();
    const auto homs = hom_set(x, y);
    const std::uint64_t n = homs.size();
    std::ostringstream err;
    auto fail = [&](const std::string& what, std::uint64_t expected) {
        err << what << ": |hom" << x.to_string() << "," << y.to_string() << ")| = " << n
            << ", expected " << expected;
        return err.str();
    };

    if (const auto naive = naive_hom_count(x, y); naive != n) return fail("naive count", naive);
    for (std::size_t k = 0; k < homs.size(); ++k) {
        if (!(homs[k].domain() == x) || !(homs[k].codomain() == y)) return "hom_set returned a foreign morphism";
        if (k > 0 && !(homs[k - 1].index_fn().values() < homs[k].index_fn().values())) {
            return "hom_set output is not strictly lexicographic";
        }
    }
    if (x.is_empty() && n != (y.is_empty() ? 1u : 0u)) return fail("hom(o, y)", y.is_empty() ? 1 : 0);
    if (y.is_empty()) {
        if (n > 1) return fail("hom(x, o) bound", 1);
        if (mon.is_divisibility_monoid()) {
            const bool units = std::all_of(x.entries().begin(), x.entries().end(),
                                           [&](const Element& e) { return mon.is_invertible(e); });
            if (n != (units ? 1u : 0u)) return fail("hom(x, o) in a divisibility monoid", units ? 1 : 0);
        } else if (mon.kind() == MonoidKind::UnitInterval && n != 1) {
            return fail("hom(x, o) in the unit interval", 1);
        }
    }
    if (x.size() == 1) {
        const std::uint64_t expected = mon.leq(x[0], product_functor(y)) ? 1 : 0;
        if (n != expected) return fail("hom((y), x)", expected);
    }
    if (y.size() == 1) {
        std::uint64_t exact = 0, bound = 0, units = 0;
        for (std::size_t n0 = 0; n0 < x.size(); ++n0) {
            const bool here = mon.leq(x[n0], y[0]);
            bound += here;
            exact += here && all_leq_one(mon, x, n0);
            if (mon.is_divisibility_monoid()) {
                bool others = true;
                for (std::size_t k = 0; k < x.size(); ++k) {
                    if (k != n0 && !mon.is_invertible(x[k])) others = false;
                }
                units += others && mon.divides(x[n0], y[0]);
            }
        }
        if (n != exact) return fail("hom(x, (y))", exact);
        if (n > bound) return fail("hom(x, (y)) bound", bound);
        if (mon.is_divisibility_monoid() && n != units) return fail("hom(x, (y)) via units", units);
    }
    return {};
}

// ---------------------------------------------------------- epic and monic

std::string cache_key(const FactorTuple& t, const IndexFunction& f) {
    std::string key = t.to_string() + "|";
    for (auto v : f.values()) key += std::to_string(v) + ",";
    return key;
}

FactorTuple with_unit(const FactorTuple& t) {
    return tensor_objects(t, FactorTuple(t.monoid_handle(), {t.monoid().identity()}));
}

// True when no two distinct morphisms out of the codomain agree after m,
// over targets drawn from the universe plus codomain (x) (1).
bool cancels_on_right(Context& ctx, const Morphism& m) {
    const auto key = cache_key(m.codomain(), m.index_fn());
    if (auto it = ctx.epic_cache.find(key); it != ctx.epic_cache.end()) return it->second;

    const auto& y = m.codomain();
    auto collides = [&](const std::vector<const Morphism*>& homs) {
        std::set<std::vector<std::size_t>> seen;
        for (const auto* g : homs) {
            if (!seen.insert(m.index_fn().after(g->index_fn()).values()).second) return true;
        }
        return false;
    };

    bool cancels = true;
    const auto& u = ctx.universe();
    std::vector<std::vector<Morphism>> extra;
    std::vector<std::vector<const Morphism*>> groups;
    if (const auto yi = u.find(y)) {
        std::map<std::size_t, std::vector<const Morphism*>> by_target;
        for (auto k : u.out_of[*yi]) by_target[u.cod[k]].push_back(&u.morphisms[k]);
        for (auto& [_, homs] : by_target) groups.push_back(std::move(homs));
    } else {
        for (const auto& z : u.tuples) extra.push_back(hom_set(y, z));
    }
    extra.push_back(hom_set(y, with_unit(y)));
    for (const auto& homs : extra) {
        std::vector<const Morphism*> ptrs;
        for (const auto& g : homs) ptrs.push_back(&g);
        groups.push_back(std::move(ptrs));
    }
    for (const auto& homs : groups) {
        if (collides(homs)) {
            cancels = false;
            break;
        }
    }
    ctx.epic_cache.emplace(key, cancels);
    return cancels;
}

// Dual: no two distinct morphisms into the domain agree after composing with m,
// over sources drawn from the universe plus domain (x) (1).
bool cancels_on_left(Context& ctx, const Morphism& m) {
    const auto key = cache_key(m.domain(), m.index_fn());
    if (auto it = ctx.monic_cache.find(key); it != ctx.monic_cache.end()) return it->second;

    const auto& x = m.domain();
    auto collides = [&](const std::vector<const Morphism*>& homs) {
        std::set<std::vector<std::size_t>> seen;
        for (const auto* g : homs) {
            if (!seen.insert(g->index_fn().after(m.index_fn()).values()).second) return true;
        }
        return false;
    };

    const auto& u = ctx.universe();
    std::vector<std::vector<Morphism>> extra;
    std::vector<std::vector<const Morphism*>> groups;
    if (const auto xi = u.find(x)) {
        std::map<std::size_t, std::vector<const Morphism*>> by_source;
        for (auto k : u.into[*xi]) by_source[u.dom[k]].push_back(&u.morphisms[k]);
        for (auto& [_, homs] : by_source) groups.push_back(std::move(homs));
    } else {
        for (const auto& w : u.tuples) extra.push_back(hom_set(w, x));
    }
    extra.push_back(hom_set(with_unit(x), x));
    for (const auto& homs : extra) {
        std::vector<const Morphism*> ptrs;
        for (const auto& g : homs) ptrs.push_back(&g);
        groups.push_back(std::move(ptrs));
    }
    bool cancels = true;
    for (const auto& homs : groups) {
        if (collides(homs)) {
            cancels = false;
            break;
        }
    }
    ctx.monic_cache.emplace(key, cancels);
    return cancels;
}

std::string check_epic(Context& ctx, const Morphisms& ms, const Tuples&) {
    const auto& m = ms.at(0);
    const bool searched = cancels_on_right(ctx, m);
    if (is_epic(m) != searched || m.index_fn().is_injective() != searched) {
        return describe(m) + ": cancellation search says epic=" + (searched ? "true" : "false");
    }
    return {};
}

std::string check_monic(Context& ctx, const Morphisms& ms, const Tuples&) {
    const auto& m = ms.at(0);
    const bool searched = cancels_on_left(ctx, m);
    if (is_monic(m) != searched || m.index_fn().is_surjective() != searched) {
        return describe(m) + ": cancellation search says monic=" + (searched ? "true" : "false");
    }
    return {};
}

// ------------------------------------------------------------------- isos

std::string check_iso(Context& ctx, const Morphisms& ms, const Tuples&) {
    const auto& m = ms.at(0);
    const auto id_x = identity_morphism(m.domain());
    const auto id_y = identity_morphism(m.codomain());
    std::optional<Morphism> found;
    for (const auto& h : hom_set(m.codomain(), m.domain())) {
        if (ctx.compose(h, m) == id_x && ctx.compose(m, h) == id_y) {
            found = h;
            break;
        }
    }
    if (is_isomorphism(m) != found.has_value()) {
        return describe(m) + ": two-sided inverse " + (found ? "exists" : "does not exist");
    }
    const auto inv = inverse(m);
    if (inv.has_value() != found.has_value() || (inv && !(*inv == *found))) {
        return describe(m) + ": inverse() disagrees with the brute-force inverse";
    }
    return {};
}

// ---------------------------------------------------------- weak equivalences

std::string check_two_of_three(Context& ctx, const Morphisms& ms, const Tuples&) {
    const auto& f = ms.at(0);
    const auto& g = ms.at(1);
    const auto gf = ctx.compose(g, f);
    const int in_w = is_weak_equivalence(f) + is_weak_equivalence(g) + is_weak_equivalence(gf);
    if (in_w == 2) {
        return "exactly two of f, g, g o f are in W for f = " + describe(f) + ", g = " + describe(g);
    }
    return {};
}

std::string check_weq_laws(Context& ctx, const Morphisms& ms, const Tuples&) {
    const auto& m = ms.at(0);
    const Monoid& mon = ctx.monoid();
    const auto& x = m.domain();
    const auto& y = m.codomain();
    const auto qw = quotient_witnesses(m);
    const auto px = product_functor(x);
    const auto py = product_functor(y);

    if (!(mon.op(qw.total, px) == py)) return describe(m) + ": r * prod x != prod y";
    if (!y.is_empty()) {
        if (qw.per_index.size() != x.size()) return describe(m) + ": wrong number of r_n";
        for (std::size_t n = 0; n < x.size(); ++n) {
            Element fiber = mon.identity();
            for (auto k : m.index_fn().fiber(n)) fiber = mon.op(fiber, y[k]);
            if (!(mon.op(qw.per_index[n], x[n]) == fiber)) {
                return describe(m) + ": r_" + std::to_string(n + 1) + " * x_n is not the fiber product";
            }
        }
    }
    const bool weq = is_weak_equivalence(m);
    const bool each = y.is_empty() || std::all_of(qw.per_index.begin(), qw.per_index.end(),
                                                  [&](const Element& r) { return mon.is_invertible(r); });
    if (weq != each || weq != mon.is_invertible(qw.total)) {
        return describe(m) + ": W membership, invertible r_n and invertible r disagree";
    }
    if (is_isomorphism(m) && !weq) return describe(m) + ": isomorphism outside W";
    if (weq && !mon.are_associates(px, py)) return describe(m) + ": in W but prod x, prod y not associates";

    if (x.is_empty() || y.is_empty()) return {};
    const auto d = decompose_eip(m);
    if (!(ctx.compose(d.phi, ctx.compose(d.delta, d.epsilon)) == m)) {
        return describe(m) + ": phi o delta o epsilon != m";
    }
    if (!d.epsilon.index_fn().is_injective() || !d.phi.index_fn().is_surjective() ||
        !(d.delta.index_fn() == IndexFunction::identity(d.delta.domain().size()))) {
        return describe(m) + ": decomposition factors have the wrong shape";
    }
    if ((classify_by_delta(m) == DeltaClass::WeakEquivalence) != weq) {
        return describe(m) + ": classify_by_delta disagrees with W membership";
    }
    Element ratio = mon.product(d.ratios);
    if (!(mon.op(py, d.dropped_unit) == mon.op(ratio, px))) {
        return describe(m) + ": prod y * u != prod a * prod x";
    }
    return {};
}

std::string check_ore_square(Context& ctx, const Morphisms& ms, const Tuples&) {
    const auto& f = ms.at(0);
    const auto& g = ms.at(1);
    const auto sq = ore_square(f, g);
    if (!is_weak_equivalence(sq.f_prime)) return "f' not in W for f = " + describe(f);
    if (!(ctx.compose(f, sq.g_prime) == ctx.compose(g, sq.f_prime))) {
        return "Ore square does not commute for f = " + describe(f) + ", g = " + describe(g);
    }
    return {};
}

std::string check_right_cancel(Context& ctx, const Morphisms& ms, const Tuples&) {
    const auto& f = ms.at(0);
    const auto& f2 = ms.at(1);
    const auto& g = ms.at(2);
    const auto h = right_cancel_witness(f, f2, g);
    if (!is_weak_equivalence(h)) return "h not in W";
    if (!(ctx.compose(f, h) == ctx.compose(f2, h))) {
        return "f o h != f2 o h for f = " + describe(f) + ", f2 = " + describe(f2);
    }
    return {};
}

// --------------------------------------------------------------- monoidal

std::string law(const LawCheck& c) { return c.holds ? std::string{} : c.counterexample; }

std::string check_tensor_tuples(Context&, const Morphisms&, const Tuples& ts) {
    const auto& a = ts.at(0);
    const auto& b = ts.at(1);
    const auto& c = ts.at(2);
    if (auto e = law(check_tensor_associativity(a, b, c)); !e.empty()) return e;
    const auto ab = tensor_objects(a, b);
    if (ab.size() != a.size() + b.size()) return "length is not additive for " + ab.to_string();
    const auto unit = FactorTuple::empty(a.monoid_handle());
    if (!(tensor_objects(a, unit) == a) || !(tensor_objects(unit, a) == a)) {
        return "the empty tuple is not a unit for " + a.to_string();
    }
    return {};
}

std::string check_tensor_morphisms(Context&, const Morphisms& ms, const Tuples&) {
    const auto& f = ms.at(0);
    const auto& g = ms.at(1);
    const auto& h = ms.at(2);
    if (auto e = law(check_tensor_associativity(f, g, h)); !e.empty()) return e;
    const auto fg = tensor_morphisms(f, g);
    Morphism::validated(fg.domain(), fg.codomain(), fg.index_fn());
    const auto id_unit = identity_morphism(FactorTuple::empty(f.monoid_handle()));
    if (!(tensor_morphisms(f, id_unit) == f) || !(tensor_morphisms(id_unit, f) == f)) {
        return "id of the empty tuple is not a unit for " + describe(f);
    }
    const auto ids = tensor_morphisms(identity_morphism(f.domain()), identity_morphism(g.domain()));
    if (!(ids == identity_morphism(tensor_objects(f.domain(), g.domain())))) {
        return "id (x) id != id for " + f.domain().to_string() + ", " + g.domain().to_string();
    }
    return {};
}

std::string check_bifunctoriality_case(Context& ctx, const Morphisms& ms, const Tuples&) {
    return law(check_bifunctoriality(ms.at(0), ms.at(1), ms.at(2), ms.at(3), ctx.hooks.compose));
}

std::string check_braiding_case(Context& ctx, const Morphisms&, const Tuples& ts) {
    const auto& s = ts.at(0);
    const auto& t = ts.at(1);
    if (auto e = law(check_braiding_involution(s, t, ctx.hooks.compose)); !e.empty()) return e;
    const auto b = braiding(s, t);
    Morphism::validated(b.domain(), b.codomain(), b.index_fn());
    if (ctx.monoid().is_divisibility_monoid() && !is_isomorphism(b)) {
        return "braiding is not an isomorphism for " + s.to_string() + ", " + t.to_string();
    }
    return {};
}

std::string check_hexagon_case(Context& ctx, const Morphisms&, const Tuples& ts) {
    return law(check_hexagon(ts.at(0), ts.at(1), ts.at(2), ctx.hooks.compose));
}

std::string check_naturality_case(Context& ctx, const Morphisms& ms, const Tuples&) {
    return law(check_braiding_naturality(ms.at(0), ms.at(1), ctx.hooks.compose));
}

// -------------------------------------------------------- weak divisibility

std::string check_weakdiv(Context& ctx, const Morphisms& ms, const Tuples&) {
    const auto& f = ms.at(0);
    const auto& g = ms.at(1);
    const Monoid& mon = ctx.monoid();
    const bool by_witness = weakly_divides(f, g);
    if (by_witness != weakly_divides_by_products(f, g)) {
        return "s | r and the product criterion disagree for f = " + describe(f) + ", g = " + describe(g);
    }
    if (is_weak_equivalence(f) && !by_witness) return "a weak equivalence fails to divide " + describe(g);
    if (weakly_associate(f, g) != (by_witness && weakly_divides(g, f))) {
        return "weakly_associate is not mutual weak divisibility";
    }
    if (!by_witness) return {};
    const auto d = weak_div_diagram(f, g);
    for (const auto* leg : {&d.mu, &d.alpha, &d.beta, &d.eta, &d.left, &d.right}) {
        Morphism::validated(leg->domain(), leg->codomain(), leg->index_fn());
    }
    if (!is_weak_equivalence(d.mu) || !is_weak_equivalence(d.eta)) return "mu or eta outside W";
    if (d.mu.domain().size() != 1 || d.beta.domain().size() != 1) return "middle tuples are not 1-tuples";
    if (!(d.a == product_functor(f.domain())) || !(d.b == product_functor(g.domain()))) {
        return "a, b are not the domain products";
    }
    const auto a_t = FactorTuple(f.monoid_handle(), {d.a});
    const auto b_t = FactorTuple(f.monoid_handle(), {d.b});
    if (!(d.left == tensor_morphisms(identity_morphism(a_t), g)) ||
        !(d.right == tensor_morphisms(identity_morphism(b_t), f))) {
        return "diagram verticals are not id (x) g and id (x) f";
    }
    (void)mon;
    return {};
}

std::string check_weakdiv_preorder(Context&, const Morphisms& ms, const Tuples&) {
    const auto& f = ms.at(0);
    const auto& g = ms.at(1);
    const auto& h = ms.at(2);
    if (!weakly_divides(f, f)) return "not reflexive at " + describe(f);
    if (weakly_divides(f, g) && weakly_divides(g, h) && !weakly_divides(f, h)) {
        return "not transitive through " + describe(g);
    }
    return {};
}

std::string check_weak_classes(Context& ctx, const Morphisms& ms, const Tuples&) {
    const auto& m = ms.at(0);
    const auto unit = FactorTuple(m.monoid_handle(), {ctx.monoid().identity()});
    if (is_weak_equivalence(m) != weakly_divides(m, identity_morphism(unit))) {
        return describe(m) + ": W membership and dividing a weak equivalence disagree";
    }
    if (is_weakly_prime(m) && !is_weakly_irreducible(m)) return describe(m) + ": weakly prime but not weakly irreducible";
    if (is_weak_equivalence(m) && (is_weakly_irreducible(m) || is_weakly_prime(m))) {
        return describe(m) + ": a weak equivalence classified as weakly irreducible";
    }
    return {};
}

// -------------------------------------------------------------- adjunction

std::string check_adjunction(Context& ctx, const Morphisms&, const Tuples& ts) {
    const auto& single = ts.at(0);
    const auto& x = ts.at(1);
    const Monoid& mon = ctx.monoid();
    const auto& y = single[0];
    const std::uint64_t in_a = mon.leq(y, product_functor(x)) ? 1 : 0;
    const auto in_f = hom_set(embed_functor(single.monoid_handle(), y), x).size();
    if (in_f != in_a) {
        return "|hom_F((y), x)| = " + std::to_string(in_f) + " but |hom_A(y, prod x)| = " +
               std::to_string(in_a) + " for y = " + mon.format(y) + ", x = " + x.to_string();
    }
    if (!(product_functor(embed_functor(single.monoid_handle(), y)) == y)) return "prod of (y) is not y";
    return {};
}

// ------------------------------------------------------------ category laws

std::string check_identity_laws(Context& ctx, const Morphisms& ms, const Tuples&) {
    const auto& m = ms.at(0);
    if (!(ctx.compose(identity_morphism(m.codomain()), m) == m)) return "id o f != f for " + describe(m);
    if (!(ctx.compose(m, identity_morphism(m.domain())) == m)) return "f o id != f for " + describe(m);
    if (!(underlying_function(m) == m.index_fn())) return "underlying function differs";
    return {};
}

std::string check_associativity(Context& ctx, const Morphisms& ms, const Tuples&) {
    Morphism left = ms.at(0);
    for (std::size_t i = 1; i < ms.size(); ++i) {
        left = ctx.compose(ms[i], left);
        Morphism::validated(left.domain(), left.codomain(), left.index_fn());
    }
    Morphism right = ms.back();
    for (std::size_t i = ms.size() - 1; i-- > 0;) right = ctx.compose(right, ms[i]);
    if (!(left == right)) {
        std::string chain;
        for (const auto& m : ms) chain += " " + describe(m);
        return "bracketings differ along" + chain;
    }
    return {};
}

// ------------------------------------------------------------------ zeta

std::string check_zeta(Context& ctx, const Morphisms& ms, const Tuples&) {
    const auto& f = ms.at(0);
    const auto& g = ms.at(1);
    const auto gf = ctx.compose(g, f);
    if (zeta_mor(gf) != zeta_mor(g) + zeta_mor(f)) {
        return "zeta is not additive for f = " + describe(f) + ", g = " + describe(g);
    }
    for (const auto* m : {&f, &g, &gf}) {
        const auto z = zeta_mor(*m);
        if ((z == 0) != is_weak_equivalence(*m)) return describe(*m) + ": zeta = 0 disagrees with W";
        if ((z == 1) != is_weakly_irreducible(*m)) return describe(*m) + ": zeta = 1 disagrees with weak irreducibility";
        if (zeta_obj(m->codomain()) != zeta_obj(m->domain()) + z) {
            return describe(*m) + ": zeta_obj(y) != zeta_obj(x) + zeta_mor";
        }
    }
    return {};
}

std::string check_zeta_tensor(Context&, const Morphisms&, const Tuples& ts) {
    const auto& s = ts.at(0);
    const auto& t = ts.at(1);
    if (zeta_obj(tensor_objects(s, t)) != zeta_obj(s) + zeta_obj(t)) {
        return "zeta_obj is not additive on " + s.to_string() + " (x) " + t.to_string();
    }
    return {};
}

// --------------------------------------------------------- atomic chains

std::string check_atomic_chain(Context& ctx, const Morphisms& ms, const Tuples&) {
    const auto& m = ms.at(0);
    const Monoid& mon = ctx.monoid();
    const auto chain = atomic_chain(m);
    if (chain.steps.empty() || chain.steps.size() != chain.tags.size()) return describe(m) + ": malformed chain";
    if (!(chain.steps.front().domain() == m.domain()) || !(chain.steps.back().codomain() == m.codomain())) {
        return describe(m) + ": chain endpoints differ";
    }
    Morphism acc = chain.steps.front();
    for (std::size_t i = 1; i < chain.steps.size(); ++i) {
        if (!(chain.steps[i].domain() == acc.codomain())) return describe(m) + ": chain is not composable";
        acc = ctx.compose(chain.steps[i], acc);
    }
    if (!(acc == m) || !(compose_chain(chain.steps) == m)) return describe(m) + ": chain does not compose to m";
    std::size_t irr = 0;
    Element total = mon.identity();
    for (std::size_t i = 0; i < chain.steps.size(); ++i) {
        const auto& step = chain.steps[i];
        Morphism::validated(step.domain(), step.codomain(), step.index_fn());
        const bool ok = chain.tags[i] == StepTag::WeakEquivalence ? is_weak_equivalence(step)
                                                                  : is_weakly_irreducible(step);
        if (!ok) return describe(m) + ": step " + std::to_string(i + 1) + " has the wrong tag";
        irr += chain.tags[i] == StepTag::WeaklyIrreducible;
        total = mon.op(total, quotient_witnesses(step).total);
    }
    if (chain.irr_count != irr || irr != zeta_mor(m)) return describe(m) + ": irr_count != zeta_mor";
    if (!(mon.op(total, product_functor(m.domain())) == product_functor(m.codomain()))) {
        return describe(m) + ": step witnesses do not reassemble prod y";
    }
    return {};
}

// ---------------------------------------------------------------- registry

const std::map<std::string, CheckFn, std::less<>>& checks() {
    static const std::map<std::string, CheckFn, std::less<>> table = {
        {"hom_formulas", &check_hom_formulas},
        {"epic", &check_epic},
        {"monic", &check_monic},
        {"iso", &check_iso},
        {"two_of_three", &check_two_of_three},
        {"weq_laws", &check_weq_laws},
        {"ore_square", &check_ore_square},
        {"right_cancel", &check_right_cancel},
        {"tensor_tuples", &check_tensor_tuples},
        {"tensor_morphisms", &check_tensor_morphisms},
        {"bifunctoriality", &check_bifunctoriality_case},
        {"braiding", &check_braiding_case},
        {"hexagon", &check_hexagon_case},
        {"naturality", &check_naturality_case},
        {"weakdiv", &check_weakdiv},
        {"weakdiv_preorder", &check_weakdiv_preorder},
        {"weak_classes", &check_weak_classes},
        {"adjunction", &check_adjunction},
        {"identity_laws", &check_identity_laws},
        {"associativity", &check_associativity},
        {"zeta", &check_zeta},
        {"zeta_tensor", &check_zeta_tensor},
        {"atomic_chain", &check_atomic_chain},
    };
    return table;
}

json payload_for(const Context& ctx, std::string_view check, const Morphisms& ms, const Tuples& ts) {
    json p;
    p["check"] = std::string(check);
    p["monoid"] = ctx.monoid().name();
    p["morphisms"] = json::array();
    for (const auto& m : ms) p["morphisms"].push_back(codec::encode_morphism(m));
    p["tuples"] = json::array();
    for (const auto& t : ts) p["tuples"].push_back(codec::encode_tuple(t));
    return p;
}

std::string run_check(Context& ctx, CheckFn fn, const Morphisms& ms, const Tuples& ts) {
    try {
        return fn(ctx, ms, ts);
    } catch (const std::exception& e) {
        return std::string("threw: ") + e.what();
    }
}

std::uint64_t suite_seed(std::uint64_t seed, std::string_view name) {
    std::uint64_t h = 1469598103934665603ULL;
    for (char c : name) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ULL;
    return seed ^ h;
}

class SuiteRun {
public:
    SuiteRun(Context& ctx, SuiteReport& report)
        : ctx_(ctx), report_(report), rng_(suite_seed(ctx.spec.seed, report.name)) {}

    const Universe& u() { return ctx_.universe(); }
    std::uint64_t budget() const { return ctx_.spec.max_cases; }
    std::size_t depth() const { return ctx_.spec.max_depth; }

    void check(std::string_view name, const Morphisms& ms, const Tuples& ts) {
        const CheckFn fn = checks().find(name)->second;
        ++report_.cases;
        auto message = run_check(ctx_, fn, ms, ts);
        if (message.empty()) return;
        ++report_.failure_count;
        if (report_.failures.size() < kMaxRecordedFailures) {
            report_.failures.push_back({std::string(name), std::move(message), payload_for(ctx_, name, ms, ts)});
        }
    }

    std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

    // Calls body(i) for every i < total when total fits the budget, otherwise
    // for `cap` uniform samples.
    template <typename Body>
    void indices(std::uint64_t total, std::uint64_t cap, Body&& body) {
        if (total == 0) return;
        if (total <= cap) {
            for (std::uint64_t i = 0; i < total; ++i) body(static_cast<std::size_t>(i));
        } else {
            for (std::uint64_t i = 0; i < cap; ++i) body(pick(static_cast<std::size_t>(total)));
        }
    }

    const Morphism& morphism(std::size_t k) { return u().morphisms[k]; }

    // A uniformly chosen morphism out of tuple t (always exists in the
    // universe when t has an identity in it).
    std::size_t out_of(std::size_t t) {
        const auto& list = u().out_of[t];
        return list[pick(list.size())];
    }

    // Visits composable pairs (f, g) with g o f defined: exhaustive when their
    // number fits the cap, otherwise f uniform and g uniform out of cod f.
    template <typename Body>
    void composable_pairs(std::uint64_t cap, Body&& body) {
        double total = 0;
        for (std::size_t t = 0; t < u().tuples.size(); ++t) {
            total += double(u().into[t].size()) * double(u().out_of[t].size());
        }
        if (total <= double(cap)) {
            for (std::size_t t = 0; t < u().tuples.size(); ++t) {
                for (auto f : u().into[t]) {
                    for (auto g : u().out_of[t]) body(morphism(f), morphism(g));
                }
            }
            return;
        }
        const std::size_t n = u().morphisms.size();
        for (std::uint64_t i = 0; i < cap; ++i) {
            const auto f = pick(n);
            body(morphism(f), morphism(out_of(u().cod[f])));
        }
    }

private:
    Context& ctx_;
    SuiteReport& report_;
    std::mt19937_64 rng_;
};

using SuiteFn = void (*)(SuiteRun&);

void suite_homset(SuiteRun& run) {
    const auto& ts = run.u().tuples;
    const std::uint64_t n = ts.size();
    run.indices(n * n, run.budget(), [&](std::size_t k) { run.check("hom_formulas", {}, {ts[k / n], ts[k % n]}); });
}

void suite_epic_monic(SuiteRun& run) {
    const auto& ms = run.u().morphisms;
    run.indices(ms.size(), run.budget(), [&](std::size_t k) {
        run.check("epic", {ms[k]}, {});
        run.check("monic", {ms[k]}, {});
    });
}

void suite_iso(SuiteRun& run) {
    const auto& ms = run.u().morphisms;
    run.indices(ms.size(), run.budget(), [&](std::size_t k) { run.check("iso", {ms[k]}, {}); });
}

void suite_two_of_three(SuiteRun& run) {
    run.composable_pairs(run.budget(), [&](const Morphism& f, const Morphism& g) {
        run.check("two_of_three", {f, g}, {});
    });
}

void suite_weq_laws(SuiteRun& run) {
    const auto& u = run.u();
    run.indices(u.morphisms.size(), run.budget(), [&](std::size_t k) { run.check("weq_laws", {u.morphisms[k]}, {}); });

    std::vector<std::size_t> weqs;
    std::vector<bool> in_w(u.morphisms.size());
    for (std::size_t k = 0; k < u.morphisms.size(); ++k) {
        in_w[k] = is_weak_equivalence(u.morphisms[k]);
        if (in_w[k]) weqs.push_back(k);
    }
    if (weqs.empty()) return;
    const std::uint64_t cap = std::max<std::uint64_t>(1, run.budget() / 20);
    for (std::uint64_t i = 0; i < cap; ++i) {
        const auto f = weqs[run.pick(weqs.size())];
        const auto& peers = u.into[u.cod[f]];
        const auto g = peers[run.pick(peers.size())];
        run.check("ore_square", {u.morphisms[f], u.morphisms[g]}, {});
    }
    for (std::uint64_t i = 0; i < cap; ++i) {
        const auto f = run.pick(u.morphisms.size());
        std::vector<std::size_t> parallel, cancel;
        for (auto k : u.out_of[u.dom[f]]) {
            if (u.cod[k] == u.cod[f]) parallel.push_back(k);
        }
        for (auto k : u.out_of[u.cod[f]]) {
            if (in_w[k]) cancel.push_back(k);
        }
        if (cancel.empty()) continue;
        const auto& f1 = u.morphisms[f];
        const auto& f2 = u.morphisms[parallel[run.pick(parallel.size())]];
        const auto& g = u.morphisms[cancel[run.pick(cancel.size())]];
        if (!(compose(g, f1) == compose(g, f2))) continue;
        run.check("right_cancel", {f1, f2, g}, {});
    }
}

void suite_monoidal(SuiteRun& run) {
    const auto& u = run.u();
    const auto& ts = u.tuples;
    const std::uint64_t nt = ts.size();
    const std::uint64_t nm = u.morphisms.size();
    const std::uint64_t cap = std::max<std::uint64_t>(1, run.budget() / 10);
    run.indices(nt * nt * nt, cap, [&](std::size_t k) {
        run.check("tensor_tuples", {}, {ts[k / (nt * nt)], ts[(k / nt) % nt], ts[k % nt]});
    });
    run.indices(nt * nt, run.budget(), [&](std::size_t k) { run.check("braiding", {}, {ts[k / nt], ts[k % nt]}); });
    run.indices(nt * nt * nt, cap, [&](std::size_t k) {
        run.check("hexagon", {}, {ts[k / (nt * nt)], ts[(k / nt) % nt], ts[k % nt]});
    });
    for (std::uint64_t i = 0; i < std::min(cap, nm * nm * nm); ++i) {
        run.check("tensor_morphisms", {u.morphisms[run.pick(nm)], u.morphisms[run.pick(nm)], u.morphisms[run.pick(nm)]}, {});
    }
    for (std::uint64_t i = 0; i < std::min(cap, nm * nm); ++i) {
        run.check("naturality", {u.morphisms[run.pick(nm)], u.morphisms[run.pick(nm)]}, {});
    }
    for (std::uint64_t i = 0; i < std::min(cap, nm * nm); ++i) {
        const auto f = run.pick(nm);
        const auto g = run.pick(nm);
        const auto h = run.out_of(u.cod[f]);
        const auto k = run.out_of(u.cod[g]);
        run.check("bifunctoriality", {u.morphisms[f], u.morphisms[g], u.morphisms[h], u.morphisms[k]}, {});
    }
}

void suite_weakdiv(SuiteRun& run) {
    const auto& ms = run.u().morphisms;
    const std::uint64_t nm = ms.size();
    const std::uint64_t cap = std::max<std::uint64_t>(1, run.budget() / 10);
    run.indices(nm, run.budget(), [&](std::size_t k) { run.check("weak_classes", {ms[k]}, {}); });
    for (std::uint64_t i = 0; i < std::min(cap, nm * nm); ++i) {
        run.check("weakdiv", {ms[run.pick(nm)], ms[run.pick(nm)]}, {});
    }
    for (std::uint64_t i = 0; i < std::min(cap, nm * nm * nm); ++i) {
        run.check("weakdiv_preorder", {ms[run.pick(nm)], ms[run.pick(nm)], ms[run.pick(nm)]}, {});
    }
}

void suite_adjunction(SuiteRun& run) {
    const auto& ts = run.u().tuples;
    std::vector<std::size_t> singles;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (ts[i].size() == 1) singles.push_back(i);
    }
    const std::uint64_t n = ts.size();
    run.indices(singles.size() * n, run.budget(), [&](std::size_t k) {
        run.check("adjunction", {}, {ts[singles[k / n]], ts[k % n]});
    });
}

void suite_category_laws(SuiteRun& run) {
    const auto& u = run.u();
    run.indices(u.morphisms.size(), run.budget(), [&](std::size_t k) {
        run.check("identity_laws", {u.morphisms[k]}, {});
    });
    if (u.morphisms.empty()) return;
    // random walks of every length from 3 up to max_depth
    const std::uint64_t cap = std::max<std::uint64_t>(1, run.budget() / 10);
    for (std::size_t depth = 3; depth <= run.depth(); ++depth) {
        for (std::uint64_t i = 0; i < cap; ++i) {
            Morphisms chain{u.morphisms[run.pick(u.morphisms.size())]};
            while (chain.size() < depth) {
                const auto t = *u.find(chain.back().codomain());
                chain.push_back(u.morphisms[run.out_of(t)]);
            }
            run.check("associativity", chain, {});
        }
    }
}

void suite_zeta(SuiteRun& run) {
    const auto& ts = run.u().tuples;
    const std::uint64_t cap = std::max<std::uint64_t>(500, run.budget() / 20);
    run.composable_pairs(cap, [&](const Morphism& f, const Morphism& g) { run.check("zeta", {f, g}, {}); });
    const std::uint64_t n = ts.size();
    run.indices(n * n, cap, [&](std::size_t k) { run.check("zeta_tensor", {}, {ts[k / n], ts[k % n]}); });
}

void suite_atomic(SuiteRun& run) {
    const auto& ms = run.u().morphisms;
    std::vector<std::size_t> eligible;
    for (std::size_t k = 0; k < ms.size(); ++k) {
        if (!ms[k].domain().is_empty() && !ms[k].codomain().is_empty()) eligible.push_back(k);
    }
    run.indices(eligible.size(), run.budget() / 4, [&](std::size_t k) {
        run.check("atomic_chain", {ms[eligible[k]]}, {});
    });
}

struct SuiteInfo {
    const char* name;
    SuiteFn fn;
    bool needs_divisibility;
};

const std::vector<SuiteInfo>& registry() {
    static const std::vector<SuiteInfo> suites = {
        {"homset_formulas", &suite_homset, false},
        {"epic_monic", &suite_epic_monic, true},
        {"iso", &suite_iso, true},
        {"two_of_three", &suite_two_of_three, true},
        {"weq_laws", &suite_weq_laws, true},
        {"monoidal_laws", &suite_monoidal, false},
        {"weakdiv", &suite_weakdiv, true},
        {"adjunction", &suite_adjunction, false},
        {"category_laws", &suite_category_laws, false},
        {"zeta_laws", &suite_zeta, true},
        {"atomic_chains", &suite_atomic, true},
    };
    return suites;
}

const SuiteInfo* find_suite(std::string_view name) {
    for (const auto& s : registry()) {
        if (name == s.name) return &s;
    }
    return nullptr;
}

SuiteReport run_in(Context& ctx, const SuiteInfo& info) {
    SuiteReport report;
    report.name = info.name;
    const auto start = std::chrono::steady_clock::now();
    if (info.needs_divisibility && !ctx.monoid().is_divisibility_monoid()) {
        report.skipped = true;
        report.note = "needs a divisibility monoid";
    } else {
        SuiteRun run(ctx, report);
        info.fn(run);
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace

UniverseSpec UniverseSpec::defaults(MonoidHandle monoid) {
    UniverseSpec u;
    const Monoid& mon = *monoid;
    switch (mon.kind()) {
        case MonoidKind::Integers:
            u.pool = {Integer{-1}, Integer{1}, Integer{2}, Integer{3}, Integer{5}, Integer{6}};
            break;
        case MonoidKind::Naturals:
            u.pool = {Integer{1}, Integer{2}, Integer{3}, Integer{5}, Integer{6}};
            break;
        case MonoidKind::UnitInterval:
            u.pool = {Rational(1), Rational(1, 2), Rational(1, 3)};
            break;
        case MonoidKind::FreeCommutative: {
            u.pool.push_back(mon.identity());
            for (std::size_t i = 0; i < mon.alphabet().size(); ++i) u.pool.push_back(mon.generator(i));
            const auto second = mon.alphabet().size() > 1 ? mon.generator(1) : mon.generator(0);
            u.pool.push_back(mon.op(mon.generator(0), second));
            break;
        }
    }
    u.monoid = std::move(monoid);
    return u;
}

void UniverseSpec::validate() const {
    if (!monoid) throw ValidationError("universe has no monoid");
    for (std::size_t i = 0; i < pool.size(); ++i) {
        monoid->require_valid(pool[i]);
        for (std::size_t j = 0; j < i; ++j) {
            if (pool[i] == pool[j]) throw ValidationError("duplicate pool element " + monoid->format(pool[i]));
        }
    }
    if (max_len == 0) throw ValidationError("max_len must be positive");
    if (max_depth == 0) throw ValidationError("max_depth must be positive");
    if (max_cases == 0) throw ValidationError("max_cases must be positive");
    double count = 0, layer = 1;
    for (std::size_t l = 0; l <= max_len; ++l) {
        count += layer;
        layer *= static_cast<double>(pool.size());
    }
    if (count > kMaxUniverseTuples) {
        throw GuardError("universe would hold " + std::to_string(static_cast<std::uint64_t>(count)) +
                         " tuples; the limit is " + std::to_string(kMaxUniverseTuples));
    }
}

bool RunReport::passed() const noexcept {
    return std::all_of(suites.begin(), suites.end(), [](const SuiteReport& s) { return s.passed(); });
}

std::uint64_t RunReport::cases() const noexcept {
    std::uint64_t n = 0;
    for (const auto& s : suites) n += s.cases;
    return n;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& s : registry()) out.emplace_back(s.name);
        return out;
    }();
    return names;
}

bool is_suite(std::string_view name) { return find_suite(name) != nullptr; }

SuiteReport run_one(const UniverseSpec& u, std::string_view name, const Hooks& hooks) {
    return run_suite(u, {std::string(name)}, hooks).suites.front();
}

RunReport run_suite(const UniverseSpec& u, const std::vector<std::string>& names, const Hooks& hooks) {
    for (const auto& n : names) {
        if (!is_suite(n)) throw ValidationError("unknown suite: " + n);
    }
    RunReport report;
    if (names.empty()) return report;
    u.validate();
    Context ctx(u, hooks);
    for (const auto& n : names) report.suites.push_back(run_in(ctx, *find_suite(n)));
    return report;
}

std::string replay(const UniverseSpec& u, const json& payload, const Hooks& hooks) {
    if (!payload.is_object() || !payload.contains("check")) throw ParseError("payload has no \"check\"");
    const auto name = payload["check"].get<std::string>();
    const auto it = checks().find(name);
    if (it == checks().end()) throw ValidationError("unknown check: " + name);
    u.validate();
    Morphisms ms;
    Tuples ts;
    for (const auto& m : payload.value("morphisms", json::array())) ms.push_back(codec::decode_morphism(u.monoid, m));
    for (const auto& t : payload.value("tuples", json::array())) ts.push_back(codec::decode_tuple(u.monoid, t));
    Context ctx(u, hooks);
    return run_check(ctx, it->second, ms, ts);
}

std::vector<FactorTuple> enumerate_tuples(const MonoidHandle& monoid, std::span<const Element> pool,
                                          std::size_t max_len) {
    std::vector<FactorTuple> out;
    std::vector<std::vector<Element>> layer{{}};
    for (std::size_t len = 0; len <= max_len; ++len) {
        std::vector<std::vector<Element>> next;
        for (auto& entries : layer) {
            if (len < max_len) {
                for (const auto& p : pool) {
                    auto longer = entries;
                    longer.push_back(p);
                    next.push_back(std::move(longer));
                }
            }
            out.emplace_back(monoid, std::move(entries));
        }
        layer = std::move(next);
    }
    return out;
}

std::uint64_t naive_hom_count(const FactorTuple& x, const FactorTuple& y) {
    const Monoid& mon = x.monoid();
    const std::size_t n = x.size();
    const std::size_t m = y.size();
    if (n == 0) return m == 0 ? 1 : 0;
    std::vector<std::size_t> f(m, 0);
    std::uint64_t count = 0;
    while (true) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            Element fiber = mon.identity();
            for (std::size_t k = 0; k < m; ++k) {
                if (f[k] == i) fiber = mon.op(fiber, y[k]);
            }
            ok = mon.leq(x[i], fiber);
        }
        count += ok;
        std::size_t pos = m;
        while (pos > 0 && ++f[pos - 1] == n) f[--pos] = 0;
        if (pos == 0) break;
    }
    return count;
}

json to_json(const SuiteReport& r) {
    json j;
    j["name"] = r.name;
    j["passed"] = r.passed();
    j["skipped"] = r.skipped;
    j["cases"] = r.cases;
    j["failure_count"] = r.failure_count;
    j["failures"] = json::array();
    for (const auto& f : r.failures) {
        json fj;
        fj["check"] = f.check;
        fj["message"] = f.message;
        fj["payload"] = f.payload;
        j["failures"].push_back(std::move(fj));
    }
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

json to_json(const RunReport& r) {
    json j;
    j["passed"] = r.passed();
    j["cases"] = r.cases();
    j["suites"] = json::array();
    for (const auto& s : r.suites) j["suites"].push_back(to_json(s));
    return j;
}

}  // namespace factcat::oracle

// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failing criteria.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "factcat/divisibility.hpp"
#include "factcat/errors.hpp"
#include "factcat/monoidal.hpp"
#include "factcat/oracle.hpp"
#include "factcat/weq.hpp"
#include "generators.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace factcat;
using namespace helpers;

namespace {

const auto zx = make_monoid("zx");

struct Outcome {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) detail = what;
        ok = ok && cond;
    }
};

int failures = 0;

void criterion(int n, const char* title, double limit_s, const std::function<void(Outcome&)>& body) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.ok = false;
        o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && secs >= limit_s) {
        o.ok = false;
        o.detail = "time limit " + std::to_string(limit_s) + " s exceeded";
    }
    std::printf("criterion %d: %s  %-40s %.2f s%s%s\n", n, o.ok ? "PASS" : "FAIL", title, secs,
                o.detail.empty() ? "" : "  ", o.detail.c_str());
    std::fflush(stdout);
    failures += o.ok ? 0 : 1;
}

std::vector<Element> default_pool() { return oracle::UniverseSpec::defaults(zx).pool; }

// Every surjection [m] -> [n], as 0-based value vectors.
std::vector<std::vector<std::size_t>> surjections(std::size_t m, std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> f(m, 0);
    if (m == 0) {
        if (n == 0) out.push_back(f);
        return out;
    }
    if (n == 0) return out;
    while (true) {
        std::vector<bool> hit(n, false);
        for (auto v : f) hit[v] = true;
        if (std::find(hit.begin(), hit.end(), false) == hit.end()) out.push_back(f);
        std::size_t k = 0;
        while (k < m && ++f[k] == n) f[k++] = 0;
        if (k == m) break;
    }
    return out;
}

std::int64_t product(const FactorTuple& t) {
    std::int64_t p = 1;
    for (auto v : ints(t)) p *= v;
    return p;
}

}  // namespace

int main() {
    criterion(1, "hom-count goldens", 1.0, [](Outcome& o) {
        o.expect(hom_set(T(zx, {6, 35}), T(zx, {2, 3, 5, 7})).size() == 1, "hom((6,35),(2,3,5,7))");
        o.expect(hom_set(T(zx, {1, 2}), T(zx, {1, 2})).size() == 2, "hom((1,2),(1,2))");
        o.expect(hom_set(T(zx, {1, 1}), T(zx, {3, 3, 3})).size() == 8, "hom((1,1),(3,3,3))");
        o.expect(hom_set(T(zx, {2, 2}), T(zx, {3, 3})).empty(), "hom((2,2),(3,3))");
        for (const auto& [x, y] : {std::pair{std::vector<std::int64_t>{6, 35}, std::vector<std::int64_t>{2, 3, 5, 7}},
                                   std::pair{std::vector<std::int64_t>{1, 2}, std::vector<std::int64_t>{1, 2}},
                                   std::pair{std::vector<std::int64_t>{1, 1}, std::vector<std::int64_t>{3, 3, 3}},
                                   std::pair{std::vector<std::int64_t>{2, 2}, std::vector<std::int64_t>{3, 3}}}) {
            std::vector<Element> xe(x.begin(), x.end()), ye(y.begin(), y.end());
            o.expect(hom_set(FactorTuple(zx, xe), FactorTuple(zx, ye)).size() == oracles::hom_count(x, y),
                     "brute-force hom count disagrees");
        }
        const auto iv = make_monoid("interval");
        gen::Gen g(101);
        const std::vector<Element> pool{Rational(1), Rational(1, 2), Rational(1, 3), Rational(2, 7), Rational(5, 9)};
        for (int i = 0; i < 20; ++i) {
            const auto t = g.tuple(iv, pool, 5);
            o.expect(hom_set(t, FactorTuple::empty(iv)).size() == 1, "hom(" + t.to_string() + ", o) != 1");
        }
    });

    criterion(2, "decomposition golden", 1.0, [](Outcome& o) {
        const auto d = decompose_eip(M(zx, {6, 1, 35}, {2, 7, 33, 65}, {1, 3, 1, 3}));
        o.expect(map_of(d.epsilon) == std::vector<std::int64_t>{1, 3}, "epsilon map");
        o.expect(d.delta.codomain() == T(zx, {66, 455}), "delta target");
        o.expect(map_of(d.phi) == std::vector<std::int64_t>{1, 2, 1, 2}, "phi map");
        o.expect(ints(d.ratios) == std::vector<std::int64_t>{11, 13}, "ratios");
    });

    criterion(3, "weak divisibility golden", 1.0, [](Outcome& o) {
        const auto f = M(zx, {2}, {6}, {1});
        const auto g = M(zx, {5}, {105}, {1});
        const auto wd = weak_divisibility(f, g);
        o.expect(wd.divides && wd.s == Element(Integer{3}) && wd.r == Element(Integer{21}), "f |_w g with s=3, r=21");
        o.expect(!weakly_divides(g, f), "reverse must fail");
        const auto d = weak_div_diagram(f, g);
        for (const auto* m : {&d.mu, &d.alpha, &d.beta, &d.eta, &d.left, &d.right}) {
            o.expect(validate_morphism(m->domain(), m->codomain(), m->index_fn()) == *m, "diagram leg invalid");
        }
        o.expect(is_weak_equivalence(d.mu) && is_weak_equivalence(d.eta), "mu, eta in W");
    });

    criterion(4, "classification goldens", 5.0, [](Outcome& o) {
        const auto f = M(zx, {2}, {6}, {1});
        o.expect(is_weakly_irreducible(f) && is_weakly_prime(f), "(2)->(6) weakly irreducible and prime");
        o.expect(quotient_witnesses(f).total == Element(Integer{3}), "(2)->(6) has r=3");
        const auto tuples = oracle::enumerate_tuples(zx, default_pool(), 3);
        std::size_t factorizations = 0, drops = 0, divisibility = 0;
        for (const auto& y : tuples) {
            // factorization morphisms out of every partition of y
            for (std::size_t n = 0; n <= y.size(); ++n) {
                for (const auto& s : surjections(y.size(), n)) {
                    std::vector<Element> x(n, Element(Integer{1}));
                    for (std::size_t k = 0; k < s.size(); ++k) x[s[k]] = zx->op(x[s[k]], y[k]);
                    const auto m = validate_morphism(FactorTuple(zx, x), y, IndexFunction(n, s));
                    o.expect(is_weak_equivalence(m), "factorization morphism " + m.to_string());
                    ++factorizations;
                }
            }
            // dropping the units of y
            std::vector<Element> kept;
            std::vector<std::size_t> where;
            for (std::size_t i = 0; i < y.size(); ++i) {
                if (zx->is_invertible(y[i])) continue;
                where.push_back(i);
                kept.push_back(y[i]);
            }
            const auto e = validate_morphism(y, FactorTuple(zx, kept), IndexFunction(y.size(), where));
            o.expect(is_weak_equivalence(e), "drop-unit morphism " + e.to_string());
            ++drops;
            // divisibility morphisms (z_p) -> (a_p z_p)
            for (const auto& a : tuples) {
                if (a.size() != y.size()) continue;
                std::vector<Element> az;
                for (std::size_t i = 0; i < y.size(); ++i) az.push_back(zx->op(a[i], y[i]));
                std::vector<std::size_t> id(y.size());
                for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
                const auto m = validate_morphism(y, FactorTuple(zx, az), IndexFunction(y.size(), id));
                const bool unit_ratio = oracles::iabs(product(a)) == 1;
                o.expect(is_weak_equivalence(m) == unit_ratio, "divisibility morphism " + m.to_string());
                ++divisibility;
            }
        }
        o.expect(factorizations > 0 && drops == tuples.size() && divisibility > 0, "empty sample");
    });

    criterion(5, "oracle suites, default universe", 60.0, [](Outcome& o) {
        const auto u = oracle::UniverseSpec::defaults(zx);
        const auto rep = oracle::run_suite(u, {"homset_formulas", "epic_monic", "iso", "two_of_three", "weakdiv",
                                               "monoidal_laws", "adjunction"});
        for (const auto& s : rep.suites) {
            o.expect(s.passed() && !s.skipped && s.cases > 0,
                     s.name + ": " + (s.failures.empty() ? s.note : s.failures.front().message));
        }
    });

    criterion(6, "zeta laws", 10.0, [](Outcome& o) {
        gen::Gen g(606);
        for (int i = 0; i < 500; ++i) {
            const auto f = g.zx_morphism(zx, 12, 3);
            const auto h = g.zx_extend(f.codomain(), 6, 3);
            const auto hf = compose(h, f);
            o.expect(zeta_mor(hf) == zeta_mor(h) + zeta_mor(f), "additivity on " + hf.to_string());
            for (const auto* m : {&f, &h}) {
                o.expect((zeta_mor(*m) == 0) == is_weak_equivalence(*m), "zeta 0 vs W on " + m->to_string());
                o.expect((zeta_mor(*m) == 1) == is_weakly_irreducible(*m), "zeta 1 on " + m->to_string());
                const auto r = std::get<Integer>(quotient_witnesses(*m).total);
                o.expect(zeta_mor(*m) == oracles::omega(r), "zeta vs trial division on " + m->to_string());
            }
            o.expect(zeta_obj(tensor_objects(f.domain(), h.codomain())) ==
                         zeta_obj(f.domain()) + zeta_obj(h.codomain()),
                     "tensor additivity");
        }
    });

    criterion(7, "atomic chains", 10.0, [](Outcome& o) {
        gen::Gen g(707);
        int done = 0;
        while (done < 100) {
            const auto m = g.zx_morphism(zx, 40, 3);
            const auto r = std::get<Integer>(quotient_witnesses(m).total);
            if (oracles::iabs(r) > 10000) continue;
            ++done;
            const auto c = atomic_chain(m);
            o.expect(compose_chain(c.steps) == m, "chain does not compose back to " + m.to_string());
            o.expect(c.irr_count == zeta_mor(m) && c.irr_count == oracles::omega(r), "irr_count on " + m.to_string());
            for (std::size_t i = 0; i < c.steps.size(); ++i) {
                const bool ok = c.tags[i] == StepTag::WeakEquivalence ? is_weak_equivalence(c.steps[i])
                                                                       : is_weakly_irreducible(c.steps[i]);
                o.expect(ok, "mislabelled step " + c.steps[i].to_string());
            }
        }
    });

    criterion(8, "FFD/BFD probes", 5.0, [](Outcome& o) {
        const auto classes = weak_divisor_classes(M(zx, {1}, {12}, {1}));
        o.expect(classes.size() == 6, "r=12 classes");
        gen::Gen g(808);
        for (int i = 0; i < 50; ++i) {
            const auto a = g.nonzero(100000);
            const auto e = enumerate_irreducible_factorizations(*zx, Element(Integer{a}), 16);
            o.expect(e.factorizations.size() == 1 && !e.truncated, "not exactly one class for " + std::to_string(a));
            if (e.factorizations.size() == 1) {
                o.expect(ints(e.factorizations[0]) == oracles::trial_factor(a), "wrong factors of " + std::to_string(a));
            }
        }
    });

    return failures;
}

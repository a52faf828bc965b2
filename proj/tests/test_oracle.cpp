#include <algorithm>

#include "doctest.h"
#include "factcat/errors.hpp"
#include "factcat/oracle.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace factcat;
using namespace helpers;

namespace {

oracle::UniverseSpec small(const MonoidHandle& h, std::size_t max_len = 2) {
    auto u = oracle::UniverseSpec::defaults(h);
    u.max_len = max_len;
    u.max_cases = 20000;
    return u;
}

// Composes correctly except that it reverses the index map whenever the
// composite has at least two codomain positions.
Morphism broken_compose(const Morphism& g, const Morphism& f) {
    auto h = compose(g, f);
    auto values = h.index_fn().one_based();
    if (values.size() < 2 || h.domain().size() < 2) return h;
    std::reverse(values.begin(), values.end());
    return Morphism::trusted(h.domain(), h.codomain(),
                             IndexFunction::from_one_based(h.domain().size(), values));
}

}  // namespace

TEST_CASE("enumerate_tuples and naive_hom_count") {
    const auto zx = make_monoid("zx");
    const std::vector<Element> pool{Integer{1}, Integer{2}};
    const auto ts = oracle::enumerate_tuples(zx, pool, 2);
    CHECK(ts.size() == 7);
    CHECK(ts.front() == T(zx, {}));
    CHECK(oracle::naive_hom_count(T(zx, {2, 2}), T(zx, {})) == 0);
    CHECK(oracle::naive_hom_count(T(zx, {}), T(zx, {})) == 1);
    CHECK(oracle::naive_hom_count(T(zx, {6, 35}), T(zx, {2, 3, 5, 7})) == 1);
    CHECK(oracle::naive_hom_count(T(zx, {1, 2}), T(zx, {1, 2})) ==
          oracles::hom_count({1, 2}, {1, 2}));
    CHECK(oracle::enumerate_tuples(zx, std::vector<Element>{}, 3).size() == 1);
}

TEST_CASE("UniverseSpec validation") {
    const auto zx = make_monoid("zx");
    auto u = oracle::UniverseSpec::defaults(zx);
    CHECK_NOTHROW(u.validate());
    u.pool = {Integer{2}, Integer{2}};
    CHECK_THROWS_AS(u.validate(), ValidationError);
    u = oracle::UniverseSpec::defaults(zx);
    u.max_len = 9;
    CHECK_THROWS_AS(u.validate(), GuardError);
}

TEST_CASE("every suite passes on small universes") {
    for (const char* name : {"zx", "nat", "interval", "free:ab"}) {
        CAPTURE(name);
        const auto u = small(make_monoid(name));
        const auto rep = oracle::run_suite(u, oracle::suite_names());
        REQUIRE(rep.suites.size() == oracle::suite_names().size());
        for (const auto& s : rep.suites) {
            CAPTURE(s.name);
            CHECK(s.passed());
            if (!s.passed() && !s.failures.empty()) MESSAGE(s.failures.front().message);
            if (!s.skipped) CHECK(s.cases > 0);
        }
        CHECK(rep.passed());
    }
}

TEST_CASE("divisibility suites are skipped on the interval monoid") {
    const auto rep = oracle::run_one(small(make_monoid("interval")), "weakdiv");
    CHECK(rep.skipped);
    CHECK(rep.passed());
    CHECK_FALSE(rep.note.empty());
}

TEST_CASE("suite selection") {
    const auto u = small(make_monoid("zx"));
    const auto empty = oracle::run_suite(u, {});
    CHECK(empty.suites.empty());
    CHECK(empty.passed());
    CHECK_THROWS_AS(oracle::run_suite(u, {"iso", "no_such_suite"}), ValidationError);
    CHECK(oracle::is_suite("iso"));
    CHECK_FALSE(oracle::is_suite("no_such_suite"));
}

TEST_CASE("a singleton pool") {
    const auto zx = make_monoid("zx");
    auto u = small(zx, 2);
    u.pool = {Integer{2}};
    CHECK(oracle::run_suite(u, oracle::suite_names()).passed());
    u.pool = {Integer{1}};
    CHECK(oracle::run_suite(u, oracle::suite_names()).passed());
    u.pool = {Rational(1, 2), Rational(1)};
    u.monoid = make_monoid("interval");
    CHECK(oracle::run_suite(u, oracle::suite_names()).passed());
}

TEST_CASE("runs are deterministic in the seed") {
    auto u = small(make_monoid("zx"), 3);
    u.max_cases = 500;
    const auto a = oracle::to_json(oracle::run_suite(u, {"two_of_three", "category_laws"}));
    const auto b = oracle::to_json(oracle::run_suite(u, {"two_of_three", "category_laws"}));
    CHECK(a == b);
}

TEST_CASE("a broken composition is caught and replayed") {
    const auto u = small(make_monoid("zx"), 2);
    oracle::Hooks hooks;
    hooks.compose = &broken_compose;
    const auto rep = oracle::run_suite(u, {"category_laws", "monoidal_laws"}, hooks);
    CHECK_FALSE(rep.passed());
    bool replayed = false;
    for (const auto& s : rep.suites) {
        for (const auto& f : s.failures) {
            CHECK_FALSE(f.message.empty());
            CHECK(f.payload.at("check") == f.check);
            CHECK_FALSE(oracle::replay(u, f.payload, hooks).empty());
            CHECK(oracle::replay(u, f.payload).empty());
            replayed = true;
        }
    }
    CHECK(replayed);
}

TEST_CASE("report serialization") {
    const auto u = small(make_monoid("zx"));
    const auto j = oracle::to_json(oracle::run_suite(u, {"iso"}));
    CHECK(j.at("passed") == true);
    CHECK(j.at("suites").size() == 1);
    CHECK(j.at("suites")[0].at("name") == "iso");
}

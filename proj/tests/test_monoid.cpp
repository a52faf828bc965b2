#include <functional>

#include "doctest.h"
#include "factcat/errors.hpp"
#include "factcat/monoid.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace factcat;

namespace {

Element I(Integer n) { return n; }
Element Q(Integer p, Integer q) { return Rational(p, q); }

}  // namespace

TEST_CASE("identity of each instance") {
    CHECK(make_monoid("zx")->identity() == I(1));
    CHECK(make_monoid("interval")->identity() == Q(1, 1));
    const auto free = make_monoid("free:ab");
    CHECK(free->format(free->identity()) == "1");
    for (const auto& name : {"zx", "nat", "interval", "free:ab"}) {
        const auto h = make_monoid(name);
        const auto a = h->kind() == MonoidKind::UnitInterval ? Q(2, 3)
                       : h->kind() == MonoidKind::FreeCommutative ? h->parse("a^2*b") : I(6);
        CHECK(h->op(h->identity(), a) == a);
    }
}

TEST_CASE("op") {
    CHECK(make_monoid("zx")->op(I(6), I(35)) == I(210));
    CHECK(make_monoid("interval")->op(Q(1, 2), Q(1, 3)) == Q(1, 6));
    const auto free = make_monoid("free:ab");
    CHECK(free->format(free->op(free->parse("a"), free->parse("a*b"))) == "a^2*b");
    CHECK_THROWS_AS(make_monoid("zx")->op(I(0), I(2)), ValidationError);
    CHECK_THROWS_AS(make_monoid("nat")->op(I(-1), I(2)), ValidationError);
    CHECK_THROWS_AS(make_monoid("interval")->op(Q(3, 2), Q(1, 2)), ValidationError);
    CHECK_THROWS_AS(make_monoid("zx")->op(I(Integer{1} << 40), I(Integer{1} << 40)), RangeError);
}

TEST_CASE("leq") {
    const auto zx = make_monoid("zx");
    CHECK(zx->leq(I(2), I(6)));
    CHECK_FALSE(zx->leq(I(5), I(2)));
    CHECK(zx->leq(I(-2), I(6)));
    CHECK(make_monoid("interval")->leq(Q(1, 2), Q(1, 1)));
    CHECK_FALSE(make_monoid("interval")->leq(Q(1, 1), Q(1, 2)));
    const auto free = make_monoid("free:ab");
    CHECK(free->leq(free->parse("a"), free->parse("a*b")));
    CHECK_FALSE(free->leq(free->parse("a^2"), free->parse("a*b")));
}

TEST_CASE("is_invertible") {
    const auto zx = make_monoid("zx");
    CHECK(zx->is_invertible(I(-1)));
    CHECK(zx->is_invertible(I(1)));
    CHECK_FALSE(zx->is_invertible(I(6)));
    CHECK_FALSE(make_monoid("interval")->is_invertible(Q(1, 2)));
    CHECK(make_monoid("interval")->is_invertible(Q(1, 1)));
    const auto free = make_monoid("free:ab");
    CHECK(free->is_invertible(free->identity()));
    CHECK_FALSE(make_monoid("nat")->is_invertible(I(2)));
}

TEST_CASE("exact_divide") {
    const auto zx = make_monoid("zx");
    CHECK(zx->exact_divide(I(6), I(66)) == I(11));
    CHECK_FALSE(zx->exact_divide(I(5), I(2)).has_value());
    CHECK(zx->exact_divide(I(-3), I(6)) == I(-2));
    const auto free = make_monoid("free:ab");
    CHECK(free->exact_divide(free->parse("a"), free->parse("a*b")) == free->parse("b"));
    CHECK_THROWS_AS(make_monoid("interval")->exact_divide(Q(1, 2), Q(1, 4)), CapabilityError);
}

TEST_CASE("is_irreducible and is_prime") {
    const auto zx = make_monoid("zx");
    CHECK(zx->is_irreducible(I(3)));
    CHECK(zx->is_irreducible(I(-7)));
    CHECK_FALSE(zx->is_irreducible(I(6)));
    CHECK_FALSE(zx->is_irreducible(I(1)));
    CHECK(zx->is_prime(I(5)));
    CHECK_FALSE(zx->is_prime(I(4)));
    const auto free = make_monoid("free:ab");
    CHECK(free->is_irreducible(free->parse("a")));
    CHECK(free->is_prime(free->parse("b")));
    CHECK_FALSE(free->is_irreducible(free->parse("a^2")));
    CHECK_THROWS_AS(make_monoid("interval")->is_irreducible(Q(1, 2)), CapabilityError);
    CHECK_THROWS_AS(zx->is_prime(I(kPrimalityBound + 1)), RangeError);
    CHECK(zx->is_prime(I(2147483647)));
}

TEST_CASE("factor_irreducibles") {
    const auto zx = make_monoid("zx");
    auto f = zx->factor_irreducibles(I(60));
    CHECK(f.unit == I(1));
    CHECK(f.factors == std::vector<Element>{I(2), I(2), I(3), I(5)});
    f = zx->factor_irreducibles(I(-6));
    CHECK(f.unit == I(-1));
    CHECK(f.factors == std::vector<Element>{I(2), I(3)});
    f = zx->factor_irreducibles(I(1));
    CHECK(f.factors.empty());
    const auto free = make_monoid("free:ab");
    f = free->factor_irreducibles(free->parse("b*a^2"));
    REQUIRE(f.factors.size() == 3);
    CHECK(free->format(f.factors[0]) == "a");
    CHECK(free->format(f.factors[2]) == "b");
}

TEST_CASE("factor_irreducibles reassembles on [-1000, 1000] and matches trial division") {
    const auto zx = make_monoid("zx");
    for (Integer n = -1000; n <= 1000; ++n) {
        if (n == 0) continue;
        const auto f = zx->factor_irreducibles(I(n));
        Element acc = f.unit;
        std::vector<std::int64_t> got;
        for (const auto& p : f.factors) {
            acc = zx->op(acc, p);
            got.push_back(std::get<Integer>(p));
            REQUIRE(zx->is_irreducible(p));
        }
        REQUIRE(acc == I(n));
        REQUIRE(got == oracles::trial_factor(n));
        REQUIRE(zx->is_prime(I(n)) == oracles::is_prime(n));
    }
}

TEST_CASE("are_associates") {
    const auto zx = make_monoid("zx");
    CHECK(zx->are_associates(I(6), I(-6)));
    CHECK_FALSE(zx->are_associates(I(2), I(6)));
    const auto free = make_monoid("free:ab");
    CHECK(free->are_associates(free->parse("a"), free->parse("a")));
}

TEST_CASE("monoid laws on sampled elements") {
    gen::Gen g(11);
    const auto zx = make_monoid("zx");
    const auto iv = make_monoid("interval");
    const auto free = make_monoid("free:abc");
    auto zx_elt = [&] { return I(g.nonzero(60)); };
    auto iv_elt = [&] {
        const auto q = g.uniform(1, 12);
        return Q(g.uniform(1, q), q);
    };
    auto free_elt = [&] {
        std::vector<std::uint32_t> e(3);
        for (auto& v : e) v = static_cast<std::uint32_t>(g.uniform(0, 3));
        return Element(FreeElement{e});
    };
    struct Case {
        MonoidHandle h;
        std::function<Element()> draw;
    };
    for (const auto& [h, draw] : std::vector<Case>{{zx, zx_elt}, {iv, iv_elt}, {free, free_elt}}) {
        for (int i = 0; i < 2000; ++i) {
            const auto a = draw(), b = draw(), c = draw();
            REQUIRE(h->op(a, b) == h->op(b, a));
            REQUIRE(h->op(h->op(a, b), c) == h->op(a, h->op(b, c)));
            if (h->op(a, b) == h->op(a, c)) REQUIRE(b == c);
            REQUIRE(h->leq(a, a));
            if (h->leq(a, b) && h->leq(b, c)) REQUIRE(h->leq(a, c));
            if (h->leq(a, b)) REQUIRE(h->leq(h->op(a, c), h->op(b, c)));
            if (h->is_divisibility_monoid()) {
                REQUIRE(h->exact_divide(a, h->op(a, b)) == b);
                if (h->is_prime(a)) REQUIRE(h->is_irreducible(a));
                REQUIRE(h->leq(a, b) == h->divides(a, b));
            }
        }
    }
}

TEST_CASE("parse and format round trip") {
    const auto iv = make_monoid("interval");
    CHECK(iv->parse("2/4") == Q(1, 2));
    CHECK(iv->format(Q(1, 2)) == "1/2");
    CHECK(iv->format(Q(1, 1)) == "1");
    CHECK_THROWS_AS(iv->parse("3/2"), ValidationError);
    CHECK_THROWS_AS(iv->parse("x"), ParseError);
    const auto free = make_monoid("free:x,y");
    CHECK(free->format(free->parse("y*x^3")) == "x^3*y");
    CHECK_THROWS_AS(free->parse("z"), ParseError);
    CHECK_THROWS_AS(make_monoid("zx")->parse("0"), ValidationError);
    CHECK_THROWS_AS(make_monoid("rings"), ParseError);
    CHECK(make_monoid("free:ab")->alphabet() == std::vector<std::string>{"a", "b"});
}

TEST_CASE("capability flags") {
    CHECK(make_monoid("zx")->is_divisibility_monoid());
    CHECK(make_monoid("nat")->is_divisibility_monoid());
    CHECK(make_monoid("free:a")->is_divisibility_monoid());
    CHECK_FALSE(make_monoid("interval")->is_divisibility_monoid());
}

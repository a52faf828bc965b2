#include "doctest.h"
#include "factcat/codec.hpp"
#include "factcat/errors.hpp"
#include "generators.hpp"
#include "helpers.hpp"

using namespace factcat;
using namespace helpers;
using codec::json;

TEST_CASE("morphism round trip") {
    const auto zx = make_monoid("zx");
    const auto m = M(zx, {6, 1, 35}, {2, 7, 33, 65}, {1, 3, 1, 3});
    const auto j = codec::encode_morphism(m);
    CHECK(j.dump() == R"({"monoid":"zx","domain":[6,1,35],"codomain":[2,7,33,65],"map":[1,3,1,3]})");
    CHECK(codec::decode_morphism(zx, j) == m);
    CHECK(codec::decode_morphism(nullptr, j) == m);

    gen::Gen g(9);
    for (int i = 0; i < 300; ++i) {
        const auto r = g.zx_morphism(zx, 50, 4);
        REQUIRE(codec::decode_morphism(nullptr, codec::parse_json(codec::encode_morphism(r).dump())) == r);
    }
}

TEST_CASE("other monoids") {
    const auto iv = make_monoid("interval");
    const auto t = codec::decode_tuple(iv, json::parse(R"(["1/2", 1, "2/4"])"));
    CHECK(t.size() == 3);
    CHECK(t[2] == Element(Rational(1, 2)));
    CHECK(codec::encode_tuple(t).dump() == R"(["1/2","1","1/2"])");

    const auto fr = make_monoid("free:ab");
    const auto ft = codec::decode_tuple(fr, json::parse(R"(["a^2*b", 1, "b"])"));
    CHECK(ft[1] == fr->identity());
    CHECK(codec::decode_tuple(fr, codec::encode_tuple(ft)) == ft);
}

TEST_CASE("decoding errors") {
    const auto zx = make_monoid("zx");
    CHECK_THROWS_AS(codec::parse_json("{\"domain\": [1,"), ParseError);
    CHECK_THROWS_AS(codec::decode_morphism(zx, json::parse(R"({"domain":[4],"codomain":[6],"map":[1]})")),
                    ValidationError);
    CHECK_THROWS_AS(codec::decode_morphism(zx, json::parse(R"({"domain":[0],"codomain":[6],"map":[1]})")),
                    Error);
    CHECK_THROWS_AS(codec::decode_morphism(zx, json::parse(R"({"monoid":"nat","domain":[2],"codomain":[6],"map":[1]})")),
                    Error);
    CHECK_THROWS_AS(codec::decode_morphism(zx, json::parse(R"({"domain":[2],"codomain":[6],"map":[2]})")),
                    Error);
    CHECK_THROWS_AS(codec::decode_morphism(nullptr, json::parse(R"({"domain":[2],"codomain":[6],"map":[1]})")),
                    Error);
    CHECK_THROWS_AS(codec::decode_tuple(zx, json::parse(R"("6")")), Error);
}

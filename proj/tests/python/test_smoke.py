from fractions import Fraction

import pytest

import factcat as fc

ZX = fc.Monoid("zx")


def test_hom_set():
    homs = fc.hom_set(ZX, [6, 35], [2, 3, 5, 7])
    assert len(homs) == 1
    assert homs[0].map == [1, 1, 2, 2]
    assert len(fc.hom_set(ZX, [1, 2], [1, 2])) == 2
    assert fc.hom_set(ZX, [2, 2], [3, 3]) == []


def test_morphism_and_json():
    f = fc.Morphism(ZX, [6, 1, 35], [2, 7, 33, 65], [1, 3, 1, 3])
    assert fc.Morphism.from_json(f.to_json()) == f
    assert f.domain == [6, 1, 35]
    with pytest.raises(fc.ValidationError):
        fc.Morphism(ZX, [4], [6], [1])
    with pytest.raises(fc.ParseError):
        fc.Morphism.from_json("{")


def test_decompose_and_chain():
    f = fc.Morphism(ZX, [6, 1, 35], [2, 7, 33, 65], [1, 3, 1, 3])
    d = fc.decompose_eip(f)
    assert d["epsilon"].map == [1, 3]
    assert d["delta"].codomain == [66, 455]
    assert d["phi"].map == [1, 2, 1, 2]
    assert d["ratios"] == [11, 13]
    assert fc.compose(d["phi"], fc.compose(d["delta"], d["epsilon"])) == f
    steps, irr = fc.atomic_chain(f)
    assert irr == 2 == fc.zeta_mor(f)
    assert [tag for tag, _ in steps].count("weakly_irreducible") == 2


def test_weak_divisibility():
    f = fc.Morphism(ZX, [2], [6], [1])
    g = fc.Morphism(ZX, [5], [105], [1])
    assert fc.weak_divisibility(f, g) == {"divides": True, "s": 3, "r": 21}
    assert not fc.weakly_divides(g, f)
    assert fc.is_weakly_prime(f)
    assert fc.weak_divisor_classes(fc.Morphism(ZX, [1], [12], [1])) == [1, 2, 3, 4, 6, 12]
    facts, truncated = fc.enumerate_irreducible_factorizations(ZX, 12)
    assert facts == [[2, 2, 3]] and not truncated


def test_other_monoids():
    iv = fc.Monoid("interval")
    assert len(fc.hom_set(iv, [Fraction(1, 2), "1/3"], [])) == 1
    with pytest.raises(fc.CapabilityError):
        fc.is_epic(fc.identity(iv, ["1/2"]))
    free = fc.Monoid("free:ab")
    assert fc.zeta_elt(free, "a^2*b") == 3


def test_verify():
    report = fc.verify(ZX, ["iso", "weakdiv"], max_len=2)
    assert report["passed"]
    assert [s["name"] for s in report["suites"]] == ["iso", "weakdiv"]
    with pytest.raises(fc.ValidationError):
        fc.verify(ZX, ["bogus"], max_len=2)

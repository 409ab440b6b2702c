import math

import pytest

from pptriples import (
    ParamPair,
    Triple,
    classify_triple,
    enumerate_ppts,
    from_params,
    is_primitive,
    normalize,
    primitive_from_params,
    to_params,
)


def naive_ppt_count(c_max):
    """Independent oracle: scan all leg pairs and test the identity directly."""
    count = 0
    for a in range(1, c_max):
        for b in range(a + 1, c_max):
            c2 = a * a + b * b
            c = math.isqrt(c2)
            if c > c_max:
                break
            if c * c == c2 and math.gcd(a, b) == 1:
                count += 1
    return count


class TestTriple:
    def test_valid(self):
        t = Triple(3, 4, 5)
        assert t.as_tuple() == (3, 4, 5)

    def test_rejects_non_pythagorean(self):
        with pytest.raises(ValueError):
            Triple(1, 2, 3)

    @pytest.mark.parametrize("bad", [(0, 4, 5), (-3, 4, 5), (3, 4, -5)])
    def test_rejects_nonpositive(self, bad):
        with pytest.raises(ValueError):
            Triple(*bad)

    def test_hypotenuse_dominates(self):
        t = Triple(15, 8, 17)
        assert max(t.a, t.b) < t.c


class TestParamPair:
    @pytest.mark.parametrize("r,s", [(2, 2), (1, 1), (2, 0), (0, -1), (3, 4)])
    def test_rejects_degenerate(self, r, s):
        with pytest.raises(ValueError):
            ParamPair(r, s)


def test_from_params_examples():
    assert from_params(ParamPair(2, 1)).as_tuple() == (3, 4, 5)
    assert from_params(ParamPair(4, 1)).as_tuple() == (15, 8, 17)


def test_is_primitive_examples():
    assert is_primitive(Triple(3, 4, 5))
    assert not is_primitive(Triple(6, 8, 10))
    assert is_primitive(Triple(15, 8, 17))


def test_primitive_from_params_examples():
    assert primitive_from_params(ParamPair(2, 1))
    assert not primitive_from_params(ParamPair(3, 1))  # both odd: (8, 6, 10)
    assert not primitive_from_params(ParamPair(9, 6))


def test_primitive_from_params_matches_is_primitive():
    for r in range(2, 40):
        for s in range(1, r):
            pair = ParamPair(r, s)
            assert primitive_from_params(pair) == is_primitive(from_params(pair))


def test_to_params_examples():
    assert to_params(Triple(3, 4, 5)).as_tuple() == (2, 1)
    assert to_params(Triple(15, 8, 17)).as_tuple() == (4, 1)
    with pytest.raises(ValueError):
        to_params(Triple(6, 8, 10))


def test_roundtrip_up_to_200():
    for r in range(2, 201):
        for s in range(1, r):
            if math.gcd(r, s) == 1 and (r - s) % 2 == 1:
                pair = ParamPair(r, s)
                assert to_params(from_params(pair)) == pair


class TestEnumerate:
    def test_small_bounds(self):
        assert [t.as_tuple() for t in enumerate_ppts(5)] == [(3, 4, 5)]
        assert [t.as_tuple() for t in enumerate_ppts(17)] == [
            (3, 4, 5),
            (5, 12, 13),
            (15, 8, 17),
        ]
        assert enumerate_ppts(4) == []

    def test_parity_law(self):
        for t in enumerate_ppts(3000):
            assert t.a % 2 == 1 and t.b % 2 == 0 and t.c % 2 == 1

    def test_oracle_self_consistency(self):
        ppts = enumerate_ppts(100)
        for t in ppts:
            assert is_primitive(t)
            assert t.a * t.a + t.b * t.b == t.c * t.c
        assert len(ppts) == naive_ppt_count(100)

    def test_no_duplicates(self):
        ppts = enumerate_ppts(10_000)
        assert len({t.as_tuple() for t in ppts}) == len(ppts)

    def test_canonical_order(self):
        ppts = enumerate_ppts(10_000)
        keys = [(t.c, t.a) for t in ppts]
        assert keys == sorted(keys)


def test_classify_triple():
    cls = classify_triple(Triple(15, 8, 17))
    assert cls.primitive and cls.even_leg == "b"
    assert cls.g == 17 - 15 and cls.f == 7
    cls = classify_triple(Triple(6, 8, 10))
    assert not cls.primitive and cls.even_leg == "both"


def test_normalize():
    assert normalize(Triple(8, 15, 17)).as_tuple() == (15, 8, 17)
    assert normalize(Triple(15, 8, 17)).as_tuple() == (15, 8, 17)
    with pytest.raises(ValueError):
        normalize(Triple(6, 8, 10))

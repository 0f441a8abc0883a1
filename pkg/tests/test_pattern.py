import random

import pytest

from hdthompson.pattern import (DyadicRect, InvalidTiling, NotARefinement, NumberedPattern,
                                example_pattern, factor, left_quotient, multiply,
                                pattern_of_word, right_quotient, superpose, trivial_pattern)
from hdthompson.words import parse_word

from conftest import random_pi_word


def P(text):
    return pattern_of_word(parse_word(text, "pi"))


def test_trivial_pattern():
    e = trivial_pattern()
    assert e.rect(0) == DyadicRect(0) and e.rect(5) == DyadicRect(5)
    assert P("") == e


def test_single_letters():
    v = P("v0")
    assert v.rect(0) == DyadicRect(0, 0, 1, 0, 0)
    assert v.rect(1) == DyadicRect(0, 1, 1, 0, 0)
    assert v.rect(2) == DyadicRect(1)
    h = P("h1")
    assert h.rect(0) == DyadicRect(0) and h.rect(1) == DyadicRect(1, 0, 0, 0, 1)
    s = P("s0")
    assert s.rect(0) == DyadicRect(1) and s.rect(1) == DyadicRect(0)
    assert P("s3 s3") == trivial_pattern()


def test_tail_is_minimal():
    p = P("v0")
    assert p.tail_start == 1 and p.tail_offset == 1
    assert P("s2 s2 v0") == p


def test_example_pattern():
    p = example_pattern()
    assert len(p.rects) == 9 and p.tail_start == 4 and p.tail_offset == 5
    assert p.rect(9) == DyadicRect(4)
    counts = [0] * 5
    for n in range(10):
        counts[p.rect(n).square] += 1
    assert counts == [3, 1, 4, 1, 1]
    assert NumberedPattern.from_json(p.to_json()) == p


def test_invalid_json_rejected():
    data = P("v0").to_json()
    data["squares"][0]["rects"][0]["num"] = 1
    with pytest.raises(InvalidTiling):
        NumberedPattern.from_json(data)
    bad = {"tail_start": 1, "tail_offset": 1, "squares": [{"index": 0, "rects": [
        {"xn": 0, "xe": 1, "yn": 0, "ye": 0, "num": 0},
        {"xn": 0, "xe": 0, "yn": 1, "ye": 1, "num": 1}]}]}
    with pytest.raises(InvalidTiling):
        NumberedPattern.from_json(bad)


def test_multiply_is_concatenation():
    rng = random.Random(3)
    for _ in range(200):
        a, b = random_pi_word(rng, 6, 4), random_pi_word(rng, 6, 4)
        assert multiply(pattern_of_word(a), pattern_of_word(b)) == pattern_of_word(a * b)


def test_quotients():
    rng = random.Random(4)
    for _ in range(200):
        a, b = random_pi_word(rng, 6, 4), random_pi_word(rng, 6, 4)
        pa, pb, pab = pattern_of_word(a), pattern_of_word(b), pattern_of_word(a * b)
        assert left_quotient(pa, pab) == pb
        assert right_quotient(pab, pb) == pa
        assert multiply(pa, pattern_of_word(factor(pa, pab))) == pab
    assert left_quotient(P("v0"), P("h0")) is None
    with pytest.raises(NotARefinement):
        factor(P("v0"), P("h0"))


def test_superpose_of_crossing_cuts():
    tiles = superpose(P("v0"), P("h0"))
    assert len(tiles[0]) == 4


def test_dyadic_rect_helpers():
    d = DyadicRect(0)
    q = d.half("v", 1).half("h", 0)
    assert q == DyadicRect(0, 1, 1, 0, 1)
    assert d.contains(q) and not q.contains(d)
    assert DyadicRect(0, 0, 1, 0, 0).meet(DyadicRect(0, 0, 0, 1, 1)) == DyadicRect(0, 0, 1, 1, 1)
    assert DyadicRect(0, 0, 1, 0, 0).meet(DyadicRect(0, 1, 1, 0, 0)) is None

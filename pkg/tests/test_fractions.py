import random

import pytest

from hdthompson.fractions import (FractionPair, IndexConstraint, canonical_pair, canonical_word_hat,
                                  compose, elements_equal, eval_pi_word, identity, invert,
                                  is_identity, lmr_form, psi, psi_inv)
from hdthompson.pattern import pattern_of_word
from hdthompson.words import PI, TWO_V, Word, parse_word

from conftest import random_pi_word


def E(text):
    return eval_pi_word(parse_word(text, "pi"))


def test_group_laws():
    rng = random.Random(31)
    for _ in range(100):
        f = eval_pi_word(random_pi_word(rng, 6, 3, signed=True))
        g = eval_pi_word(random_pi_word(rng, 6, 3, signed=True))
        h = eval_pi_word(random_pi_word(rng, 6, 3, signed=True))
        assert is_identity(compose(f, invert(f)))
        assert elements_equal(compose(compose(f, g), h), compose(f, compose(g, h)))
        assert elements_equal(compose(identity(), f), f)


def test_positive_words_embed():
    rng = random.Random(32)
    for _ in range(100):
        a, b = random_pi_word(rng, 6, 3), random_pi_word(rng, 6, 3)
        same = pattern_of_word(a) == pattern_of_word(b)
        assert elements_equal(eval_pi_word(a), eval_pi_word(b)) == same


def test_right_fraction():
    # (h0 v1 s2) v0 = (v0 h1 s2)(h0 s1), so (v0 h1 s2)^-1 (h0 v1 s2) = (h0 s1) v0^-1
    assert elements_equal(E("s2 h1^-1 v0^-1 h0 v1 s2"), E("h0 s1 v0^-1"))


def test_conjugation_definition():
    assert elements_equal(E("v3"), E("v0^-1 v0^-1 v1 v0 v0"))
    assert not elements_equal(E("v3"), E("v2"))


def test_canonical_pair_depends_only_on_element():
    rng = random.Random(33)
    for _ in range(150):
        w = random_pi_word(rng, 6, 3, signed=True)
        c = random_pi_word(rng, 3, 3, signed=True)
        padded = w * c * c.inverse()
        assert canonical_pair(eval_pi_word(w, cancel=False)) == \
            canonical_pair(eval_pi_word(padded, cancel=False))
        assert elements_equal(canonical_pair(eval_pi_word(w)), eval_pi_word(w))


def test_canonical_word_hat_roundtrip():
    rng = random.Random(34)
    for _ in range(150):
        f = eval_pi_word(random_pi_word(rng, 7, 3, signed=True))
        w = canonical_word_hat(f)
        assert elements_equal(eval_pi_word(w), f)
        assert canonical_word_hat(eval_pi_word(w)) == w


def test_lmr_form():
    f = E("h0 v1 s2 h1^-1 v0^-1")
    lmr = lmr_form(f)
    assert lmr.s.is_positive and lmr.t.is_positive
    assert all(g.kind == "s" for g in lmr.u.letters)
    assert elements_equal(lmr.pair(), f)
    assert elements_equal(eval_pi_word(lmr.word()), f)


def test_json():
    f = E("v0 h1^-1 s0")
    assert FractionPair.from_json(f.to_json()) == f


def test_psi():
    p = 4
    m = parse_word("p0 p2 P3", TWO_V)
    assert str(psi(p, m)) == "s3 s1 s0"
    assert psi_inv(p, psi(p, m)) == m
    with pytest.raises(IndexConstraint):
        psi(p, parse_word("p3", TWO_V))
    with pytest.raises(IndexConstraint):
        psi_inv(2, Word(PI, tuple(parse_word("s2", PI).letters)))

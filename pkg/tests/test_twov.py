import random

import pytest

from hdthompson import twov
from hdthompson.fractions import elements_equal, eval_pi_word
from hdthompson.words import PI, TWO_V, Generator, Word, parse_word

from conftest import random_2v_word


def V(text):
    return parse_word(text, TWO_V)


def test_generators_are_in_two_v():
    for kind in "ABCpP":
        for i in range(5):
            assert twov.in_two_v(twov.generator_pair(kind, i))


def test_pi_letters_not_in_two_v():
    assert not twov.in_two_v(eval_pi_word(parse_word("v1", PI)))
    assert not twov.in_two_v(eval_pi_word(parse_word("s0", PI)))
    with pytest.raises(twov.NotInTwoV):
        twov.two_v_pair(eval_pi_word(parse_word("h0", PI)))


def test_generators_as_conjugates():
    # A_0 is v_0 v_1 v_0^-2 in 2V-hat, pi-bar_0 is v_0 s_0 v_0^-1
    assert elements_equal(twov.eval_word(V("A0")), eval_pi_word(parse_word("v0 v1 v0^-1 v0^-1", PI)))
    assert elements_equal(twov.eval_word(V("P0")), eval_pi_word(parse_word("v0 s0 v0^-1", PI)))


def test_word_problem():
    assert twov.word_problem_2v(V("A0 A0^-1"))
    assert twov.word_problem_2v(V("p1 p1"))
    assert not twov.word_problem_2v(V("A0"))
    assert twov.equal_2v(V("P0 A0"), V("p0 P1"))


def test_two_v_pair_confined():
    f = twov.two_v_pair(twov.eval_word(V("A1 B0^-1 C2")))
    assert f.range.tail_start == 1 and f.domain.tail_start == 1


def test_tree_from_L_examples():
    r = twov.tree_from_L(V("C0 A0"))
    assert r.trunk.labels == ("h",) and r.trunk.attached[0] == ("v", None, None)
    assert elements_equal(r.pair(), twov.eval_word(V("C0 A0")))
    assert twov.L_from_tree(r.trunk) == V("C0 A0")


def test_tree_from_L_shape_errors():
    with pytest.raises(twov.LShapeError):
        twov.tree_from_L(V("A0 C1"))
    with pytest.raises(twov.LShapeError):
        twov.tree_from_L(V("C2 C1"))
    with pytest.raises(twov.LShapeError):
        twov.tree_from_L(V("A0^-1"))


def test_builder_matches_evaluation_sample():
    rng = random.Random(41)
    for _ in range(150):
        cs = sorted(rng.sample(range(5), rng.randint(0, 3)))
        letters = [Generator("C", i) for i in cs]
        letters += [Generator(rng.choice("AB"), rng.randint(0, 4)) for _ in range(rng.randint(0, 4))]
        letters += [Generator("p", rng.randint(0, 4)) for _ in range(rng.randint(0, 2))]
        w = Word(TWO_V, tuple(letters))
        r = twov.tree_from_L(w)
        assert elements_equal(r.pair(), twov.eval_word(w)), w
        if len(cs) + len(letters) > 0:
            assert r.trunk_before_pi == twov.m_formula(w)


def test_builder_steps_small_exhaustive():
    rep = twov.verify_tree_builder(max_c=2, max_ab=2, max_pi=1, index_bound=2)
    assert rep.passed and rep.words > 0 and rep.steps_checked > 0


def test_L_from_tree_minimality():
    tt = twov.TrunkTree(("h", "v"), (None, None))
    with pytest.raises(twov.MinimalityError):
        twov.L_from_tree(tt)
    assert twov.L_from_tree(tt, strict=False) == V("C0")


def test_canonical_word_examples():
    assert str(twov.normalize_2v(V("A0 A0^-1"))) == "1"
    assert twov.normalize_2v(V("P0 A0")) == twov.normalize_2v(V("p0 P1"))


def test_canonical_word_roundtrip():
    rng = random.Random(42)
    for _ in range(100):
        w = random_2v_word(rng, 6, 3)
        c = twov.normalize_2v(w)
        assert twov.equal_2v(w, c)
        assert twov.normalize_2v(c) == c


def test_canonical_word_rejects_outsiders():
    with pytest.raises(twov.NotInTwoV):
        twov.canonical_word_2v(eval_pi_word(parse_word("v1", PI)))

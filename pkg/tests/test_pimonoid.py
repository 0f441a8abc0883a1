import random

from hdthompson import pimonoid as pm
from hdthompson.pattern import pattern_of_word
from hdthompson.words import parse_word

from conftest import random_pi_word


def P(text):
    return pattern_of_word(parse_word(text, "pi"))


def test_identity_and_products():
    e = pm.identity()
    rng = random.Random(21)
    for _ in range(100):
        a = pattern_of_word(random_pi_word(rng, 7, 4))
        b = pattern_of_word(random_pi_word(rng, 7, 4))
        assert pm.multiply(e, a) == a == pm.multiply(a, e)
        assert pm.multiply(a, b) == pm.multiply_by_fold(a, b)


def test_associative():
    rng = random.Random(22)
    for _ in range(100):
        a, b, c = (pattern_of_word(random_pi_word(rng, 5, 3)) for _ in range(3))
        assert pm.multiply(pm.multiply(a, b), c) == pm.multiply(a, pm.multiply(b, c))


def test_left_divides_matches_search():
    rng = random.Random(23)
    for _ in range(40):
        k = pattern_of_word(random_pi_word(rng, 2, 1))
        c = random_pi_word(rng, 2, 1)
        # half the time l is built as a multiple of k
        l = pm.multiply(pattern_of_word(c), k) if rng.random() < 0.5 else pattern_of_word(c * c)
        fast = pm.left_divides(k, l)
        slow = pm.left_divides_search(k, l, bound=4)
        assert (fast is None) == (slow is None), (k, l)
        if fast is not None:
            assert pm.multiply(fast, k) == l == pm.multiply(slow, k)


def test_left_divides_positive_case():
    k = P("v0")
    l = P("h0 v1 v0 s3")
    c = pm.left_divides(k, l)
    assert c is not None and pm.multiply(c, k) == l


def test_tiling_counts():
    # 1, 2, 8 halving tilings of a square with 1, 2, 3 rectangles
    assert [len(pm.tilings(c)) for c in range(3)] == [1, 2, 8]


def test_enumeration_mod_left_units():
    els = list(pm.elements_mod_left_units(1, 3))
    assert len(els) == len(set(els))
    assert all(e.surplus == 1 for e in els)
    assert all(pm.left_unit_normal(e) == e for e in els)


def test_right_divisors_divide():
    l = P("h0 v1 v0 s3")
    divs = pm.right_divisors(l)
    assert pm.identity() in divs
    for m in divs:
        assert pm.left_divides(m, l) is not None


def test_common_left_multiples_small():
    y, z = P("v0"), P("h0 s1")
    cands = pm.common_left_multiples(y, z, 2)
    for l in cands:
        assert pm.left_divides(y, l) is not None and pm.left_divides(z, l) is not None


def test_lclm_report():
    rep = pm.lclm_report(3)
    assert all(rep.identities.values())
    assert rep.incomparable
    assert rep.below_both_exact == [] and rep.least is None
    assert rep.passed
    assert "incomparable: True" in rep.text()

import pytest

from hdthompson import presentations as pr
from hdthompson.words import PI, TWO_V, parse_word


def test_family_sizes_grow_with_bound():
    for fam in pr.PI_FAMILIES + pr.TWO_V_FAMILIES:
        small, big = pr.instantiate_family(fam, 2), pr.instantiate_family(fam, 4)
        assert 0 < len(small) <= len(big), fam


def test_unknown_family():
    with pytest.raises(KeyError):
        pr.instantiate_family("9")


@pytest.mark.parametrize("fam", pr.PI_FAMILIES)
def test_pi_families_small(fam):
    assert pr.verify_family(fam, 3).passed


@pytest.mark.parametrize("fam", pr.TWO_V_FAMILIES)
def test_two_v_families_small(fam):
    assert pr.verify_family(fam, 3).passed


def test_false_relation_is_reported():
    rep = pr.verify_table([(parse_word("v0 h1", PI), parse_word("h0 v1", PI))])
    assert not rep.passed and "canonical" in rep.failures[0].detail


def test_homomorphism_image():
    assert pr.pi_to_two_v(parse_word("v1 h0 s2", PI)) == parse_word("A1 B0 p2", TWO_V)
    assert pr.verify_homomorphism(3).passed


def test_lenient_parser():
    lp = pr.parse_printed_side(r"\overline{\pi}_1A_0^2C_2", TWO_V)
    assert str(lp.word) == "P1 A0 A0 C2" and lp.notes == []
    assert pr.parse_printed_side(r"\overline{\pi}_!B_0", TWO_V).word is None
    loose = pr.parse_printed_side(r"\sigma1v_0", PI)
    assert str(loose.word) == "s1 v0" and loose.notes


def test_expand_definitions_keeps_element():
    for text in ("A3 B2", "C1 p2", "P3 C0^-1"):
        w = parse_word(text, TWO_V)
        e = pr.expand_definitions(w)
        assert all(g.index <= 1 and g.kind != "C" for g in e.letters)
        assert pr.same_element(w, e)


def test_definitions_and_inductive_steps():
    assert pr.verify_definitions(3).passed
    assert pr.verify_inductive(3).passed


def test_shape_predicate():
    # the canonical word of pibar_0 A_1 uses A, pibar and pi letters
    w = parse_word("P0 A1", TWO_V)
    assert pr.shape_matches(w, "w(A) P w(p)")
    assert not pr.shape_matches(w, "A C-")


def test_derivations_small():
    assert pr.verify_derivations(2).passed


def test_rewriting_small():
    rep = pr.check_rewriting(3, 3, 2)
    assert rep.passed and rep.max_join <= 2 and rep.steps > 0
    assert rep.inversion_count_stalls > 0

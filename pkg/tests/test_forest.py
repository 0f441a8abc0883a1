import itertools
import random

from hdthompson.forest import (NumberedForest, canonical_word_pi, forest_of_word, inversions,
                               is_normalized, is_sorted_word, normalized_forest_of_pattern,
                               pattern_of_forest, rewrite_sorted, rewrite_steps,
                               secondary_labels, sorted_word_of_shapes)
from hdthompson.pattern import example_pattern, pattern_of_word
from hdthompson.words import PI, Generator, Word, parse_word

from conftest import random_pi_word


def W(text):
    return parse_word(text, "pi")


def test_forest_of_letter():
    f = forest_of_word(W("h0"))
    assert f.trees == (("h", 0, 1),)
    assert pattern_of_forest(f) == pattern_of_word(W("h0"))


def test_commutation_exhaustive_short():
    letters = [Generator(k, i) for k in "vhs" for i in range(3)]
    for n in range(4):
        for combo in itertools.product(letters, repeat=n):
            w = Word(PI, combo)
            assert pattern_of_forest(forest_of_word(w)) == pattern_of_word(w), w


def test_commutation_random():
    rng = random.Random(11)
    for _ in range(300):
        w = random_pi_word(rng, 10, 5)
        assert pattern_of_forest(forest_of_word(w)) == pattern_of_word(w)


def test_rewrite_rule():
    assert [str(x) for x in rewrite_steps(W("v2 h0"))] == ["h0 v3"]
    assert rewrite_steps(W("v0 h1")) == []
    assert rewrite_sorted(W("v1 v0 v1")) == W("v0 v1 v3")
    assert is_sorted_word(rewrite_sorted(W("h3 v0 v2 h1")))


def test_inverted_pairs_can_stall():
    # the one-step rule does not always lower the number of inverted pairs
    w = W("v1 v0 v1")
    (s,) = rewrite_steps(w)
    assert inversions(w) == inversions(s) == 1


def test_sorted_word_same_pattern():
    rng = random.Random(12)
    for _ in range(200):
        w = random_pi_word(rng, 8, 4, sigma=False)
        assert pattern_of_word(rewrite_sorted(w)) == pattern_of_word(w)


def test_secondary_labels_and_normalization():
    # h0 then v on both halves: the root is divided both ways, so normalizing relabels it v
    f = forest_of_word(W("h0 v0 v2"))
    assert (0, "") in secondary_labels(f)
    assert not is_normalized(f)
    nf = normalized_forest_of_pattern(pattern_of_forest(f))
    assert is_normalized(nf) and nf.trees[0][0] == "v"
    assert pattern_of_forest(nf) == pattern_of_forest(f)


def test_canonical_word_examples():
    assert str(canonical_word_pi(pattern_of_word(W("h2 v1")))) == "v1 h3"
    assert canonical_word_pi(pattern_of_word(W("s0 s0"))) == Word(PI, ())
    p = example_pattern()
    assert pattern_of_word(canonical_word_pi(p)) == p


def test_sorted_word_of_shapes_numbering():
    shapes = (("v", None, ("h", None, None)), None, ("h", None, None))
    w = sorted_word_of_shapes(shapes)
    f = forest_of_word(w)
    assert f.shapes() == shapes
    assert f.trees[0] == ("v", 0, ("h", 1, 2))


def test_forest_json():
    f = forest_of_word(W("v0 h2 s1"))
    assert NumberedForest.from_json(f.to_json()) == f

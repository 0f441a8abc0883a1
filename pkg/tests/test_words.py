import pytest
from hypothesis import given, strategies as st

from hdthompson.words import (PI, TWO_V, Generator, ParseError, Word, free_reduce, gen,
                              letters_of, parse_word)

letter = st.builds(lambda k, i, s: Generator(k, i, s), st.sampled_from("vhs"),
                   st.integers(0, 50), st.sampled_from([1, -1]))


@given(st.lists(letter, max_size=10))
def test_print_parse_roundtrip(letters):
    w = Word(PI, tuple(letters))
    assert parse_word(str(w), PI) == w


@given(st.lists(letter, max_size=10))
def test_inverse_is_involutive(letters):
    w = Word(PI, tuple(letters))
    assert w.inverse().inverse() == w
    assert free_reduce(w * w.inverse()) == Word(PI, ())


def test_involutions_drop_sign():
    assert Generator("s", 2, -1).sign == 1
    assert parse_word("p3^-1", TWO_V) == gen("p", 3)


def test_empty_word_spellings():
    assert parse_word("1") == parse_word("") == Word(PI, ())
    assert str(Word(TWO_V, ())) == "1"


@pytest.mark.parametrize("text,reason", [
    ("v0 x1", "unknown token"),
    ("v", "malformed index"),
    ("v0 A1", "mixed alphabets"),
    ("h99999999999", "malformed index"),
])
def test_parse_errors(text, reason):
    with pytest.raises(ParseError) as exc:
        parse_word(text)
    assert exc.value.reason == reason


def test_alphabet_checks():
    with pytest.raises(ValueError):
        Word(PI, (Generator("A", 0),))
    with pytest.raises(ValueError):
        gen("v", 0) * gen("A", 0)


def test_json_roundtrip():
    w = letters_of(TWO_V, [("A", 1), ("C", 0, -1), ("P", 2)])
    assert Word.from_json(w.to_json()) == w
    assert w.kinds() == "ACP"

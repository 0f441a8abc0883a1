"""Generators, words, parsing and printing.

Two alphabets are in use:

* ``pi``: ``v``, ``h``, ``s`` (the last one is sigma), for the monoid and 2V-hat.
* ``2v``: ``A``, ``B``, ``C``, ``p`` (pi), ``P`` (pi-bar), for 2V.

Involutions (``s``, ``p``, ``P``) never carry a negative sign.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

PI = "pi"
TWO_V = "2v"

KINDS = {PI: ("v", "h", "s"), TWO_V: ("A", "B", "C", "p", "P")}
INVOLUTIONS = frozenset("spP")
_KIND_ALPHABET = {k: a for a, ks in KINDS.items() for k in ks}

MAX_INDEX = 2**32 - 1

_TOKEN = re.compile(r"^([vhsABCpP])(\d+)(\^-1|\^1)?$")


class ParseError(ValueError):
    def __init__(self, token: str, position: int, reason: str):
        super().__init__(f"{reason}: {token!r} at position {position}")
        self.token = token
        self.position = position
        self.reason = reason


@dataclass(frozen=True, slots=True)
class Generator:
    kind: str
    index: int
    sign: int = 1

    def __post_init__(self):
        if self.kind not in _KIND_ALPHABET:
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if not 0 <= self.index <= MAX_INDEX:
            raise ValueError(f"index out of range: {self.index}")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.kind in INVOLUTIONS and self.sign != 1:
            object.__setattr__(self, "sign", 1)

    @property
    def alphabet(self) -> str:
        return _KIND_ALPHABET[self.kind]

    @property
    def is_involution(self) -> bool:
        return self.kind in INVOLUTIONS

    def inverse(self) -> "Generator":
        if self.is_involution:
            return self
        return Generator(self.kind, self.index, -self.sign)

    def __str__(self):
        return f"{self.kind}{self.index}" + ("^-1" if self.sign < 0 else "")


@dataclass(frozen=True, slots=True)
class Word:
    alphabet: str
    letters: tuple = ()

    def __post_init__(self):
        if self.alphabet not in KINDS:
            raise ValueError(f"unknown alphabet {self.alphabet!r}")
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        for g in letters:
            if g.alphabet != self.alphabet:
                raise ValueError(f"letter {g} does not belong to alphabet {self.alphabet}")

    def __len__(self):
        return len(self.letters)

    def __iter__(self) -> Iterator[Generator]:
        return iter(self.letters)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return Word(self.alphabet, self.letters[i])
        return self.letters[i]

    def __mul__(self, other: "Word") -> "Word":
        if other.alphabet != self.alphabet:
            raise ValueError("cannot concatenate words over different alphabets")
        return Word(self.alphabet, self.letters + other.letters)

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return self.inverse() ** (-n)
        return Word(self.alphabet, self.letters * n)

    def inverse(self) -> "Word":
        return Word(self.alphabet, tuple(g.inverse() for g in reversed(self.letters)))

    @property
    def is_positive(self) -> bool:
        return all(g.sign > 0 for g in self.letters)

    def kinds(self) -> str:
        return "".join(g.kind for g in self.letters)

    def __str__(self):
        return print_word(self)

    def to_json(self) -> dict:
        return {
            "alphabet": self.alphabet,
            "letters": [{"kind": g.kind, "index": g.index, "sign": g.sign} for g in self.letters],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Word":
        return cls(data["alphabet"], tuple(Generator(d["kind"], int(d["index"]), int(d.get("sign", 1)))
                                           for d in data["letters"]))


def word(alphabet: str, letters: Iterable[Generator] = ()) -> Word:
    return Word(alphabet, tuple(letters))


def parse_word(text: str, alphabet: str | None = None) -> Word:
    """Parse whitespace separated tokens such as ``v0 h3^-1 s2``.

    ``1`` (or an empty string) is the empty word. With ``alphabet=None`` the
    alphabet is inferred from the first token.
    """
    tokens = text.split()
    if tokens == ["1"]:
        tokens = []
    letters = []
    for pos, tok in enumerate(tokens):
        m = _TOKEN.match(tok)
        if m is None:
            if tok and tok[0] in _KIND_ALPHABET:
                raise ParseError(tok, pos, "malformed index")
            raise ParseError(tok, pos, "unknown token")
        kind, idx, suffix = m.groups()
        index = int(idx)
        if index > MAX_INDEX:
            raise ParseError(tok, pos, "malformed index")
        a = _KIND_ALPHABET[kind]
        if alphabet is None:
            alphabet = a
        elif a != alphabet:
            raise ParseError(tok, pos, "mixed alphabets")
        letters.append(Generator(kind, index, -1 if suffix == "^-1" else 1))
    return Word(alphabet or PI, tuple(letters))


def print_word(w: Word) -> str:
    if not w.letters:
        return "1"
    return " ".join(str(g) for g in w.letters)


def free_reduce(w: Word) -> Word:
    out: list[Generator] = []
    for g in w.letters:
        if out and out[-1] == g.inverse():
            out.pop()
        else:
            out.append(g)
    return Word(w.alphabet, tuple(out))


# small constructors used throughout

def gen(kind: str, index: int, sign: int = 1) -> Word:
    g = Generator(kind, index, sign)
    return Word(g.alphabet, (g,))


def letters_of(alphabet: str, items: Sequence[tuple]) -> Word:
    """``letters_of('pi', [('v', 0), ('s', 1)])``; a third item gives the sign."""
    return Word(alphabet, tuple(Generator(*t) for t in items))

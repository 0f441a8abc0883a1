"""Numbered patterns of dyadic rectangles in the squares S_0, S_1, ...

Square ``S_i`` is ``[0,1] x [0,1]`` shifted to sit at ``[2i, 2i+1]`` (its
placement only matters for drawing). A rectangle is stored exactly as
``(square, xn, xe, yn, ye)`` meaning
``[xn/2^xe, (xn+1)/2^xe] x [yn/2^ye, (yn+1)/2^ye]`` inside ``S_square``.

Every tiling of a square by such aligned dyadic rectangles can be reached by
repeated halving: some midline of the square is never crossed (a rectangle
crossing x=1/2 spans the full width, one crossing y=1/2 spans the full
height, and two such would overlap). The tiling checks below still build the
cutting certificate explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple

from . import kernel
from .words import PI, Generator, Word

CODES = {"v": 0, "h": 1, "s": 2}


class InvalidTiling(ValueError):
    pass


class NotARefinement(ValueError):
    pass


class DyadicRect(NamedTuple):
    square: int
    xn: int = 0
    xe: int = 0
    yn: int = 0
    ye: int = 0

    @property
    def is_whole(self) -> bool:
        return self.xe == 0 and self.ye == 0

    def bounds(self):
        """``(x0, x1, y0, y1)`` as Fractions, relative to the square."""
        return (Fraction(self.xn, 1 << self.xe), Fraction(self.xn + 1, 1 << self.xe),
                Fraction(self.yn, 1 << self.ye), Fraction(self.yn + 1, 1 << self.ye))

    def half(self, direction: str, which: int) -> "DyadicRect":
        if direction == "v":
            return DyadicRect(self.square, 2 * self.xn + which, self.xe + 1, self.yn, self.ye)
        return DyadicRect(self.square, self.xn, self.xe, 2 * self.yn + which, self.ye + 1)

    def contains(self, other) -> bool:
        dx = other[2] - self.xe
        dy = other[4] - self.ye
        return (other[0] == self.square and dx >= 0 and dy >= 0
                and other[1] >> dx == self.xn and other[3] >> dy == self.yn)

    def meet(self, other) -> "DyadicRect | None":
        """Intersection of two dyadic rectangles (dyadic again, or None)."""
        if other[0] != self.square:
            return None
        a, b = (self, DyadicRect(*other))
        if a.xe <= b.xe:
            if b.xn >> (b.xe - a.xe) != a.xn:
                return None
            xn, xe = b.xn, b.xe
        else:
            if a.xn >> (a.xe - b.xe) != b.xn:
                return None
            xn, xe = a.xn, a.xe
        if a.ye <= b.ye:
            if b.yn >> (b.ye - a.ye) != a.yn:
                return None
            yn, ye = b.yn, b.ye
        else:
            if a.yn >> (a.ye - b.ye) != b.yn:
                return None
            yn, ye = a.yn, a.ye
        return DyadicRect(self.square, xn, xe, yn, ye)

    def inside(self, outer: "DyadicRect", square: int) -> "DyadicRect":
        """Place this rectangle (read relative to a unit square) inside ``outer``."""
        return DyadicRect(outer.square if square is None else square,
                          (outer.xn << self.xe) + self.xn, outer.xe + self.xe,
                          (outer.yn << self.ye) + self.yn, outer.ye + self.ye)

    def relative_to(self, outer: "DyadicRect", square: int) -> "DyadicRect":
        """Inverse of ``inside``: coordinates of self relative to ``outer``."""
        dx = self.xe - outer.xe
        dy = self.ye - outer.ye
        return DyadicRect(square, self.xn & ((1 << dx) - 1), dx, self.yn & ((1 << dy) - 1), dy)


def cut_direction(d, pieces) -> str | None:
    """'v' if no piece spans the width of ``d``, else 'h' if none spans its height."""
    if all(p[2] > d[2] for p in pieces):
        return "v"
    if all(p[4] > d[4] for p in pieces):
        return "h"
    return None


def split_pieces(d: DyadicRect, pieces, direction):
    lo, hi = [], []
    if direction == "v":
        for p in pieces:
            (hi if (p[1] >> (p[2] - d.xe - 1)) & 1 else lo).append(p)
    else:
        for p in pieces:
            (hi if (p[3] >> (p[4] - d.ye - 1)) & 1 else lo).append(p)
    return lo, hi


def normalized_order(d: DyadicRect, pieces) -> list:
    """Pieces tiling ``d`` listed in left-right leaf order of the normalized tree."""
    pieces = list(pieces)
    if len(pieces) == 1:
        if tuple(pieces[0]) != tuple(d):
            raise InvalidTiling(f"{pieces[0]} does not fill {d}")
        return pieces
    direction = cut_direction(d, pieces) if pieces else None
    if direction is None:
        raise InvalidTiling(f"rectangles inside {tuple(d)} do not tile it by halving")
    lo, hi = split_pieces(d, pieces, direction)
    return normalized_order(d.half(direction, 0), lo) + normalized_order(d.half(direction, 1), hi)


@dataclass(frozen=True, slots=True)
class NumberedPattern:
    """Canonical numbered pattern; ``rects[n]`` is the rectangle numbered n."""

    rects: tuple
    tail_start: int

    @classmethod
    def make(cls, rects: Iterable, tail_start: int, check: bool = False) -> "NumberedPattern":
        rects, k = kernel.canon(tuple(tuple(r) for r in rects), tail_start)
        p = cls(rects, k)
        if check:
            p.validate()
        return p

    @property
    def tail_offset(self) -> int:
        return len(self.rects) - self.tail_start

    @property
    def surplus(self) -> int:
        return self.tail_offset

    def __len__(self):
        return len(self.rects)

    def rect(self, n: int) -> DyadicRect:
        if n < len(self.rects):
            return DyadicRect(*self.rects[n])
        return DyadicRect(n - self.tail_offset)

    def number_of_square(self, i: int) -> int | None:
        """Number of the whole rectangle S_i if S_i is not subdivided."""
        if i >= self.tail_start:
            return i + self.tail_offset
        for n, r in enumerate(self.rects):
            if r[0] == i and r[2] == 0 and r[4] == 0:
                return n
        return None

    @property
    def explicit(self) -> dict:
        out: dict = {i: [] for i in range(self.tail_start)}
        for n, r in enumerate(self.rects):
            out[r[0]].append((DyadicRect(*r), n))
        return out

    def padded(self, squares: int):
        """Non-canonical ``(rects, k)`` listing at least ``squares`` squares explicitly."""
        rects = list(self.rects)
        k = self.tail_start
        while k < squares:
            rects.append((k, 0, 0, 0, 0))
            k += 1
        return rects, k

    def validate(self):
        seen = {}
        for n, r in enumerate(self.rects):
            if not (0 <= r[1] < 1 << r[2] and 0 <= r[3] < 1 << r[4]):
                raise InvalidTiling(f"rectangle {n} has coordinates out of range")
            if not 0 <= r[0] < self.tail_start:
                raise InvalidTiling(f"rectangle {n} lies outside the explicit squares")
            seen.setdefault(r[0], []).append(r)
        for i in range(self.tail_start):
            normalized_order(DyadicRect(i), seen.get(i, []))
        return self

    def apply(self, w: Word) -> "NumberedPattern":
        return apply_word(self, w)

    def __mul__(self, other: "NumberedPattern") -> "NumberedPattern":
        return multiply(self, other)

    def __repr__(self):
        return f"NumberedPattern(k={self.tail_start}, j={self.tail_offset}, rects={self.rects})"

    def to_json(self) -> dict:
        squares = []
        for i, items in sorted(self.explicit.items()):
            squares.append({"index": i, "rects": [
                {"xn": r.xn, "xe": r.xe, "yn": r.yn, "ye": r.ye, "num": n} for r, n in items]})
        return {"tail_start": self.tail_start, "tail_offset": self.tail_offset, "squares": squares}

    @classmethod
    def from_json(cls, data: dict) -> "NumberedPattern":
        k = int(data["tail_start"])
        j = int(data["tail_offset"])
        entries = {}
        for sq in data["squares"]:
            i = int(sq["index"])
            for r in sq["rects"]:
                num = int(r["num"])
                if num in entries:
                    raise InvalidTiling(f"number {num} used twice")
                entries[num] = (i, int(r["xn"]), int(r["xe"]), int(r["yn"]), int(r["ye"]))
        if sorted(entries) != list(range(k + j)):
            raise InvalidTiling("numbers of the explicit squares must be 0..k+j-1")
        rects = [entries[n] for n in range(k + j)]
        return cls.make(rects, k, check=True)


def trivial_pattern() -> NumberedPattern:
    return NumberedPattern((), 0)


def _codes(w: Word):
    if w.alphabet != PI:
        raise ValueError("pattern words use the pi alphabet")
    out = []
    for g in w.letters:
        if g.sign < 0:
            raise ValueError(f"monoid words are positive; got {g}")
        out.append((CODES[g.kind], g.index))
    return out


def apply_word(p: NumberedPattern, w: Word) -> NumberedPattern:
    rects, k = kernel.apply_letters(p.rects, p.tail_start, _codes(w))
    return NumberedPattern(rects, k)


def apply_generator(p: NumberedPattern, g: Generator) -> NumberedPattern:
    return apply_word(p, Word(PI, (g,)))


def pattern_of_word(w: Word) -> NumberedPattern:
    return apply_word(trivial_pattern(), w)


def patterns_equal(p: NumberedPattern, q: NumberedPattern) -> bool:
    return p == q


def multiply(p: NumberedPattern, q: NumberedPattern) -> NumberedPattern:
    rects, k = kernel.compose(p.rects, p.tail_start, q.rects, q.tail_start)
    return NumberedPattern(rects, k)


def left_quotient(c: NumberedPattern, l: NumberedPattern) -> NumberedPattern | None:
    """K with C.K = L, or None."""
    r = kernel.left_quotient(c.rects, c.tail_start, l.rects, l.tail_start)
    return None if r is None else NumberedPattern(*r)


def right_quotient(l: NumberedPattern, k: NumberedPattern) -> NumberedPattern | None:
    """C with C.K = L, or None."""
    r = kernel.right_quotient(l.rects, l.tail_start, k.rects, k.tail_start)
    return None if r is None else NumberedPattern(*r)


def superpose(p: NumberedPattern, q: NumberedPattern) -> dict:
    """Coarsest common refinement, as ``{square: sorted rectangles}`` for the explicit squares."""
    squares = max(p.tail_start, q.tail_start)
    pr, _ = p.padded(squares)
    qr, _ = q.padded(squares)
    out = {i: [] for i in range(squares)}
    by_sq = {i: [] for i in range(squares)}
    for r in qr:
        by_sq[r[0]].append(DyadicRect(*r))
    for r in pr:
        a = DyadicRect(*r)
        for b in by_sq[a.square]:
            m = a.meet(b)
            if m is not None:
                out[a.square].append(m)
    return {i: sorted(v) for i, v in out.items()}


def factor(p: NumberedPattern, r: NumberedPattern) -> Word:
    """A word m with p.m = r."""
    m = left_quotient(p, r)
    if m is None:
        raise NotARefinement("second pattern does not refine the first")
    from .forest import canonical_word_pi
    return canonical_word_pi(m)


def example_pattern() -> NumberedPattern:
    """Ten numbered rectangles over S_0..S_4; squares after S_3 are numbered i + 5.

    Rectangle counts per square are 3, 1, 4, 1, 1. With explicit squares
    0..k-1 the canonical tail_start is 4 (S_3 holds #7, not #8).
    """
    R = DyadicRect
    by_num = {
        5: R(0, 0, 0, 1, 1), 8: R(0, 0, 1, 0, 1), 1: R(0, 1, 1, 0, 1),
        4: R(1),
        3: R(2, 0, 1, 0, 0), 2: R(2, 1, 1, 0, 1), 0: R(2, 2, 2, 1, 1), 6: R(2, 3, 2, 1, 1),
        7: R(3),
        9: R(4),
    }
    rects = [by_num[n] for n in range(10)]
    return NumberedPattern.make(rects, 5, check=True)

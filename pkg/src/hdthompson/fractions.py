"""The group 2V-hat as pairs (P, Q) of numbered patterns, read as P Q^-1.

The element (P, Q) maps the rectangle of Q numbered n affinely onto the
rectangle of P numbered n. Composition is right to left: ``compose(f, g)``
applies g first.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .forest import canonical_parts, normalized_forest_of_pattern, sorted_word_of_shapes
from .pattern import (DyadicRect, NumberedPattern, left_quotient, multiply, normalized_order,
                      pattern_of_word, superpose, trivial_pattern)
from .words import PI, Generator, Word, free_reduce


@dataclass(frozen=True, slots=True)
class FractionPair:
    range: NumberedPattern
    domain: NumberedPattern

    def __mul__(self, other: "FractionPair") -> "FractionPair":
        return compose(self, other)

    def to_json(self) -> dict:
        return {"range": self.range.to_json(), "domain": self.domain.to_json()}

    @classmethod
    def from_json(cls, data) -> "FractionPair":
        return cls(NumberedPattern.from_json(data["range"]), NumberedPattern.from_json(data["domain"]))


@dataclass(frozen=True)
class LMRForm:
    s: Word
    u: Word
    t: Word

    def word(self) -> Word:
        return self.s * self.u * self.t.inverse()

    def pair(self) -> FractionPair:
        return FractionPair(pattern_of_word(self.s * self.u), pattern_of_word(self.t))


def identity() -> FractionPair:
    e = trivial_pattern()
    return FractionPair(e, e)


def common_refinement(a: NumberedPattern, b: NumberedPattern) -> NumberedPattern:
    """Superposition of a and b, numbered by refining a's numbering left to right."""
    tiles = superpose(a, b)
    squares = len(tiles)
    arects, _ = a.padded(squares)
    out = []
    for r in arects:
        d = DyadicRect(*r)
        inside = [t for t in tiles[d.square] if d.contains(t)]
        out.extend(tuple(t) for t in normalized_order(d, inside))
    return NumberedPattern.make(out, squares)


def compose(f: FractionPair, g: FractionPair) -> FractionPair:
    r = common_refinement(f.domain, g.range)
    m = left_quotient(f.domain, r)
    m2 = left_quotient(g.range, r)
    return FractionPair(multiply(f.range, m), multiply(g.domain, m2))


def invert(f: FractionPair) -> FractionPair:
    return FractionPair(f.domain, f.range)


def is_identity(f: FractionPair) -> bool:
    # (P, Q) is the identity exactly when every Q_n is mapped onto itself
    return f.range == f.domain


def elements_equal(f: FractionPair, g: FractionPair) -> bool:
    return is_identity(compose(invert(f), g))


def _sibling(a, b):
    if a[0] != b[0] or a[2] != b[2] or a[4] != b[4]:
        return None
    if a[3] == b[3] and a[2] > 0 and a[1] % 2 == 0 and b[1] == a[1] + 1:
        return "v", (a[0], a[1] >> 1, a[2] - 1, a[3], a[4])
    if a[1] == b[1] and a[4] > 0 and a[3] % 2 == 0 and b[3] == a[3] + 1:
        return "h", (a[0], a[1], a[2], a[3] >> 1, a[4] - 1)
    return None


def reduce(f: FractionPair) -> FractionPair:
    """Greedily strip carets common to both patterns (not unique in general)."""
    p, pk = list(f.range.rects), f.range.tail_start
    q, qk = list(f.domain.rects), f.domain.tail_start
    changed = True
    while changed:
        changed = False
        n = min(len(p), len(q))
        for i in range(n - 1):
            a = _sibling(p[i], p[i + 1])
            b = _sibling(q[i], q[i + 1])
            if a and b and a[0] == b[0]:
                p[i:i + 2] = [a[1]]
                q[i:i + 2] = [b[1]]
                changed = True
                break
    return FractionPair(NumberedPattern.make(p, pk), NumberedPattern.make(q, qk))


# -- letters -----------------------------------------------------------------

@lru_cache(maxsize=4096)
def _generator_pattern(kind: str, index: int) -> NumberedPattern:
    return pattern_of_word(Word(PI, (Generator(kind, index),)))


def generator_pair_pi(g: Generator) -> FractionPair:
    p = _generator_pattern(g.kind, g.index)
    e = trivial_pattern()
    return FractionPair(p, e) if g.sign > 0 else FractionPair(e, p)


def eval_pi_word(w: Word, cancel: bool = True) -> FractionPair:
    """Evaluate a group word over v, h, s in 2V-hat."""
    if w.alphabet != PI:
        raise ValueError("expected a pi-alphabet word")
    f = identity()
    for g in (free_reduce(w) if cancel else w).letters:
        f = reduce(compose(f, generator_pair_pi(g)))
    return f


# -- LMR form and the translation psi -------------------------------------------

def renumber(p: NumberedPattern, rho: dict) -> NumberedPattern:
    """Pattern whose rectangle rho[n] is p's rectangle n (rho finitary, identity elsewhere)."""
    n = max([len(p.rects)] + [m + 1 for m in rho] + [m + 1 for m in rho.values()])
    out = [None] * n
    for m in range(n):
        out[rho.get(m, m)] = tuple(p.rect(m))
    return NumberedPattern.make(out, n - p.tail_offset)


def standardize_domain(f: FractionPair):
    """Return (f renumbered so its domain is the pattern of a sorted v/h word, that word)."""
    q = f.domain
    t = sorted_word_of_shapes(normalized_forest_of_pattern(q).shapes())
    std = pattern_of_word(t)
    squares = max(q.tail_start, std.tail_start)
    qr, _ = q.padded(squares)
    sr, _ = std.padded(squares)
    where = {r: n for n, r in enumerate(sr)}
    rho = {n: where[r] for n, r in enumerate(qr) if where[r] != n}
    return FractionPair(renumber(f.range, rho), std), t


def lmr_form(f: FractionPair) -> LMRForm:
    g, t = standardize_domain(f)
    s, u = canonical_parts(g.range)
    return LMRForm(s, u, t)


class IndexConstraint(ValueError):
    pass


def psi(p: int, m: Word) -> Word:
    """pi_i -> s_{p-1-i} (i <= p-2) and pibar_{p-1} -> s_0."""
    out = []
    for g in m.letters:
        if g.kind == "p" and g.index <= p - 2:
            out.append(Generator("s", p - 1 - g.index))
        elif g.kind == "P" and g.index == p - 1:
            out.append(Generator("s", 0))
        else:
            raise IndexConstraint(f"{g} is not a letter of the permutation part for p={p}")
    return Word(PI, tuple(out))


def psi_inv(p: int, u: Word) -> Word:
    from .words import TWO_V
    out = []
    for g in u.letters:
        if g.kind != "s" or g.index > p - 1:
            raise IndexConstraint(f"{g} is not in s_0..s_{p - 1}")
        out.append(Generator("P", p - 1) if g.index == 0 else Generator("p", p - 1 - g.index))
    return Word(TWO_V, tuple(out))


# -- canonical representative ------------------------------------------------------

class _Germs:
    """The maps of f on the rectangles of its domain pattern."""

    def __init__(self, f: FractionPair):
        p, q = f.range, f.domain
        self.squares = max(q.tail_start, p.tail_start - q.tail_offset + p.tail_offset, 0)
        qr, _ = q.padded(self.squares)
        self.by_sq: dict = {i: [] for i in range(self.squares)}
        for n, r in enumerate(qr):
            a = DyadicRect(*r)
            b = p.rect(n)
            sx = a.xe - b.xe
            sy = a.ye - b.ye
            ax0, ax1, ay0, ay1 = a.bounds()
            bx0, _, by0, _ = b.bounds()
            key = (b.square, sx, bx0 - ax0 * Fraction(2) ** sx, sy, by0 - ay0 * Fraction(2) ** sy)
            self.by_sq[a.square].append(((ax0, ax1, ay0, ay1), key))
        self.f = f

    def meeting(self, d: DyadicRect):
        x0, x1, y0, y1 = d.bounds()
        out = []
        for (a0, a1, b0, b1), key in self.by_sq[d.square]:
            lo_x, hi_x = max(a0, x0), min(a1, x1)
            lo_y, hi_y = max(b0, y0), min(b1, y1)
            if lo_x < hi_x and lo_y < hi_y:
                out.append(((lo_x, hi_x, lo_y, hi_y), key))
        return out

    def image(self, d: DyadicRect, pieces):
        """Aligned image of d if f is one map on d, else None (and a reason)."""
        keys = {k for _, k in pieces}
        if len(keys) != 1:
            return None, "break"
        sq, sx, tx, sy, ty = keys.pop()
        x0, _, y0, _ = d.bounds()
        ex = d.xe - sx
        ey = d.ye - sy
        if ex < 0 or ey < 0:
            return None, "x" if ex < 0 else "y"
        fx = (tx + x0 * Fraction(2) ** sx) * (1 << ex)
        fy = (ty + y0 * Fraction(2) ** sy) * (1 << ey)
        if fx.denominator != 1:
            return None, "x"
        if fy.denominator != 1:
            return None, "y"
        return DyadicRect(sq, int(fx), ex, int(fy), ey), None

    @staticmethod
    def breaks(pieces, axis):
        """Coordinates of lines (vertical for axis 0) across which the map changes."""
        out = set()
        for (b0, b1, c0, c1), k in pieces:
            for (d0, d1, e0, e1), k2 in pieces:
                if k == k2:
                    continue
                if axis == 0 and b1 == d0 and max(c0, e0) < min(c1, e1):
                    out.add(b1)
                if axis == 1 and c1 == e0 and max(b0, d0) < min(b1, d1):
                    out.add(c1)
        return out

    def tile(self, d: DyadicRect, memo: dict) -> tuple:
        """Fewest-leaf halving tiling of d into rectangles on which f is a
        single aligned map, as ((rect, image), ...); ties prefer v."""
        if d in memo:
            return memo[d]
        pieces = self.meeting(d)
        img, why = self.image(d, pieces)
        if img is not None:
            memo[d] = ((tuple(d), tuple(img)),)
            return memo[d]
        vb = self.breaks(pieces, 0)
        hb = self.breaks(pieces, 1)
        if vb and hb:
            options = ("v", "h")
        elif vb or hb:
            options = ("v",) if vb else ("h",)
        else:
            options = ("v",) if why == "x" else ("h",)
        best = None
        for direction in options:
            cand = self.tile(d.half(direction, 0), memo) + self.tile(d.half(direction, 1), memo)
            if best is None or len(cand) < len(best):
                best = cand
        memo[d] = best
        return best


def canonical_pair(f: FractionPair) -> FractionPair:
    """A representative depending only on the element.

    The domain tiling of each square is the halving tiling with fewest
    rectangles on each of which f is a single aligned dyadic map (ties
    broken towards vertical cuts), so the pair is also reduced. The domain
    is numbered by its normalized forest.
    """
    germs = _Germs(f)
    images = {}
    dom_rects = []
    memo: dict = {}
    for i in range(germs.squares):
        acc = germs.tile(DyadicRect(i), memo)
        images.update(acc)
        dom_rects.extend(r for r, _ in acc)
    dom = NumberedPattern.make(dom_rects, germs.squares)
    std = pattern_of_word(sorted_word_of_shapes(normalized_forest_of_pattern(dom).shapes()))
    squares = germs.squares
    sr, _ = std.padded(squares)
    rng = [images[r] for r in sr]
    k_range = squares + f.domain.tail_offset - f.range.tail_offset
    return FractionPair(NumberedPattern.make(rng, k_range), std)


def canonical_word_hat(f: FractionPair) -> Word:
    """Canonical group word s u t^-1 of an element of 2V-hat."""
    return lmr_form(canonical_pair(f)).word()

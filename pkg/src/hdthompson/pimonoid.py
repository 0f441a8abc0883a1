"""Arithmetic in the monoid Pi: products, divisibility and common left multiples.

``L <= L'`` means ``L' = C L`` for some C. Divisibility is decided exactly by
``right_quotient``; a bounded brute-force search is kept as an independent
oracle.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from functools import lru_cache

from .forest import canonical_word_pi, is_leaf
from .pattern import (DyadicRect, NumberedPattern, apply_generator, left_quotient,
                      multiply as _multiply, pattern_of_word, right_quotient, split_pieces,
                      trivial_pattern)

DEFAULT_BOUND = 8


class SearchBoundExceeded(RuntimeError):
    pass


def identity() -> NumberedPattern:
    return trivial_pattern()


def multiply(p: NumberedPattern, q: NumberedPattern) -> NumberedPattern:
    return _multiply(p, q)


def multiply_by_fold(p: NumberedPattern, q: NumberedPattern) -> NumberedPattern:
    """Same product, by applying the letters of q's canonical word to p."""
    for g in canonical_word_pi(q).letters:
        p = apply_generator(p, g)
    return p


def left_divides(k: NumberedPattern, l: NumberedPattern) -> NumberedPattern | None:
    """C with C.K = L, or None."""
    return right_quotient(l, k)


# -- enumeration of elements -------------------------------------------------------

def _trees(carets: int):
    if carets == 0:
        yield None
        return
    for left in range(carets):
        for a in _trees(left):
            for b in _trees(carets - 1 - left):
                yield ("v", a, b)
                yield ("h", a, b)


def _tree_rects(t, d: DyadicRect, out: list):
    if is_leaf(t):
        out.append(tuple(d))
    else:
        _tree_rects(t[1], d.half(t[0], 0), out)
        _tree_rects(t[2], d.half(t[0], 1), out)


@lru_cache(maxsize=None)
def tilings(carets: int) -> tuple:
    """Distinct tilings of S_0 with carets + 1 rectangles, each a sorted tuple."""
    seen = set()
    for t in _trees(carets):
        acc: list = []
        _tree_rects(t, DyadicRect(0), acc)
        seen.add(tuple(sorted(acc)))
    return tuple(sorted(seen))


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _ordered_blocks(numbers: tuple, sizes: tuple):
    """Partitions of numbers into blocks of the given sizes, block i holding
    the smallest number not yet used (so blocks are ordered by minimum)."""
    if not sizes:
        yield ()
        return
    first, rest = numbers[0], numbers[1:]
    for others in itertools.combinations(rest, sizes[0] - 1):
        remaining = tuple(n for n in rest if n not in others)
        for tail in _ordered_blocks(remaining, sizes[1:]):
            yield ((first,) + others,) + tail


def elements_mod_left_units(surplus: int, numbers: int):
    """Every Pi element of the given surplus whose explicit numbers are below
    ``numbers``, one per class modulo left units (square relabeling)."""
    seen = set()
    for k in range(1, numbers - surplus + 1):
        n = k + surplus
        for carets in _compositions(surplus, k):
            sizes = tuple(c + 1 for c in carets)
            for blocks in _ordered_blocks(tuple(range(n)), sizes):
                per_square = []
                for sq, (c, block) in enumerate(zip(carets, blocks)):
                    options = []
                    for tiling in tilings(c):
                        for perm in itertools.permutations(block):
                            options.append([(num, (sq,) + r[1:]) for num, r in zip(perm, tiling)])
                    per_square.append(options)
                for choice in itertools.product(*per_square):
                    rects = [None] * n
                    for part in choice:
                        for num, r in part:
                            rects[num] = r
                    p = NumberedPattern.make(rects, k)
                    if p not in seen:
                        seen.add(p)
                        yield p


def left_unit_normal(p: NumberedPattern) -> NumberedPattern:
    """Relabel explicit squares in order of their smallest number."""
    first: dict = {}
    for n, r in enumerate(p.rects):
        first.setdefault(r[0], n)
    order = sorted(first, key=first.get)
    relabel = {old: new for new, old in enumerate(order)}
    rects = [(relabel[r[0]],) + tuple(r[1:]) for r in p.rects]
    return NumberedPattern.make(rects, p.tail_start)


def left_divides_search(k: NumberedPattern, l: NumberedPattern, bound: int = DEFAULT_BOUND):
    """Brute-force oracle for ``left_divides``: try every C of the right size."""
    s = l.surplus - k.surplus
    if s < 0:
        return None
    if s > bound:
        raise SearchBoundExceeded(f"surplus {s} exceeds bound {bound}")
    n = max(len(l.rects), len(k.rects) + s, s + 1)
    for c in elements_mod_left_units(s, n):
        cands = [c]
        # undo the left-unit normalization: try every relabeling of C's squares
        squares = max(c.tail_start, l.tail_start, k.tail_start)
        for perm in itertools.permutations(range(squares)):
            rects, kk = c.padded(squares)
            u = NumberedPattern.make([(perm[r[0]],) + tuple(r[1:]) for r in rects], kk)
            cands.append(u)
        for u in cands:
            if multiply(u, k) == l:
                return u
    return None


# -- divisors and common multiples --------------------------------------------------

def _coarsenings(d: DyadicRect, pieces: list):
    """All sets of dyadic rectangles, each a union of pieces, tiling d."""
    out = {(tuple(d),)}
    if len(pieces) <= 1:
        return out
    for direction in ("v", "h"):
        if direction == "v" and not all(p[2] > d.xe for p in pieces):
            continue
        if direction == "h" and not all(p[4] > d.ye for p in pieces):
            continue
        lo, hi = split_pieces(d, pieces, direction)
        for a in _coarsenings(d.half(direction, 0), lo):
            for b in _coarsenings(d.half(direction, 1), hi):
                out.add(tuple(sorted(a + b)))
    return out


def right_divisors(l: NumberedPattern) -> list:
    """Every M with L = C.M for some C, one per class modulo left units."""
    by_sq: dict = {i: [] for i in range(l.tail_start)}
    for r in l.rects:
        by_sq[r[0]].append(r)
    options = [sorted(_coarsenings(DyadicRect(i), by_sq[i])) for i in range(l.tail_start)]
    number = {r: n for n, r in enumerate(l.rects)}
    found = set()
    for choice in itertools.product(*options):
        coarse = [c for part in choice for c in part]
        first = {}
        for c in coarse:
            inside = [number[r] for r in by_sq[c[0]] if DyadicRect(*c).contains(r)]
            first[c] = min(inside)
        coarse.sort(key=first.get)
        cpat = NumberedPattern.make(coarse, l.tail_start)
        m = left_quotient(cpat, l)
        found.add(left_unit_normal(m))
    return sorted(found, key=lambda p: (p.surplus, str(canonical_word_pi(p))))


def common_left_multiples(y: NumberedPattern, z: NumberedPattern, surplus_bound: int,
                          numbers: int | None = None) -> list:
    """Common left multiples L = A.Y = B.Z with surplus(L) <= surplus_bound,
    modulo left units, where A ranges over elements with explicit numbers
    below ``numbers``."""
    free = surplus_bound - y.surplus
    if free < 0:
        return []
    if numbers is None:
        numbers = max(len(y.rects), len(z.rects)) + free
    found = set()
    for s in range(free + 1):
        for a in elements_mod_left_units(s, max(numbers, s + 1)):
            l = multiply(a, y)
            if left_divides(z, l) is not None:
                found.add(left_unit_normal(l))
    if left_divides(z, y) is not None:
        found.add(left_unit_normal(y))
    return sorted(found, key=lambda p: (p.surplus, str(canonical_word_pi(p))))


def has_least(candidates: list) -> NumberedPattern | None:
    for m in candidates:
        if all(left_divides(m, other) is not None for other in candidates):
            return m
    return None


# -- the two-multiples example ------------------------------------------------------

def _pi(text: str) -> NumberedPattern:
    from .words import parse_word
    return pattern_of_word(parse_word(text, "pi"))


@dataclass
class LclmReport:
    y: str
    z: str
    identities: dict
    incomparable: bool
    surplus_bound: int
    numbers: int
    multiples_found: int
    below_both_in_search: list
    divisors_checked: int
    below_both_exact: list
    least: str | None
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (all(self.identities.values()) and self.incomparable
                and not self.below_both_in_search and not self.below_both_exact
                and self.least is None)

    def to_json(self) -> dict:
        d = dict(self.__dict__)
        d["passed"] = self.passed
        return d

    def text(self) -> str:
        lines = [f"Y = {self.y}, Z = {self.z}"]
        for k, v in self.identities.items():
            lines.append(f"  {k}: {'ok' if v else 'FAILED'}")
        lines.append(f"L1 and L2 incomparable: {self.incomparable}")
        lines.append(f"common left multiples with surplus <= {self.surplus_bound} "
                     f"(numbers < {self.numbers}): {self.multiples_found}")
        lines.append(f"  below both L1 and L2: {len(self.below_both_in_search)}")
        lines.append(f"right divisors of L1 checked: {self.divisors_checked}; "
                     f"common multiples below both: {len(self.below_both_exact)}")
        lines.append(f"least common left multiple within bound: {self.least or 'none'}")
        lines.extend(self.notes)
        return "\n".join(lines)


def lclm_report(surplus_bound: int | None = None) -> LclmReport:
    if surplus_bound is None:
        surplus_bound = int(os.environ.get("BRIN2V_LCLM_BOUND", "4"))
    y, z = _pi("v0"), _pi("h0 s1")
    l1, l2 = multiply(_pi("h0 v1 s2"), y), multiply(_pi("h0 v1"), y)
    ids = {
        "(h0 v1 s2) v0 = h0 v1 v0 s3": l1 == _pi("h0 v1 v0 s3"),
        "h0 v1 v0 s3 = v0 h1 h0 s1 s3": _pi("h0 v1 v0 s3") == _pi("v0 h1 h0 s1 s3"),
        "(h0 v1 s2) v0 = (v0 h1 s2)(h0 s1)": l1 == multiply(_pi("v0 h1 s2"), z),
        "(h0 v1) v0 = (v0 h1)(h0 s1)": l2 == multiply(_pi("v0 h1"), z),
    }
    incomparable = left_divides(l1, l2) is None and left_divides(l2, l1) is None

    def below_both(m):
        return left_divides(m, l1) is not None and left_divides(m, l2) is not None

    numbers = max(len(y.rects), len(z.rects)) + surplus_bound - y.surplus
    cands = common_left_multiples(y, z, surplus_bound, numbers)
    in_search = [str(canonical_word_pi(m)) for m in cands if below_both(m)]
    divisors = right_divisors(l1)
    exact = [str(canonical_word_pi(m)) for m in divisors
             if left_divides(y, m) is not None and left_divides(z, m) is not None and below_both(m)]
    least = has_least(cands)
    return LclmReport(
        y="v0", z="h0 s1", identities=ids, incomparable=incomparable,
        surplus_bound=surplus_bound, numbers=numbers, multiples_found=len(cands),
        below_both_in_search=in_search, divisors_checked=len(divisors),
        below_both_exact=exact, least=None if least is None else str(canonical_word_pi(least)),
        notes=["The right-divisor check is complete: anything below L1 divides it on the right."],
    )


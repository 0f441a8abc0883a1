"""Labeled numbered forests, the sorting rewrite, normalization, canonical Pi words.

A tree is either a leaf (an ``int``, its number, or ``None`` when unnumbered)
or a tuple ``(label, left, right)`` with label ``'v'`` or ``'h'``. For an
``h`` caret "left" is the bottom half and "right" the top half.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .pattern import (DyadicRect, InvalidTiling, NumberedPattern, cut_direction,
                      pattern_of_word, split_pieces)
from .words import PI, Generator, Word


def is_leaf(t) -> bool:
    return not isinstance(t, tuple)


def leaves(t) -> list:
    if is_leaf(t):
        return [t]
    return leaves(t[1]) + leaves(t[2])


def caret_count(t) -> int:
    return 0 if is_leaf(t) else 1 + caret_count(t[1]) + caret_count(t[2])


def shape(t):
    """Forget leaf numbers."""
    return None if is_leaf(t) else (t[0], shape(t[1]), shape(t[2]))


def mirror(t):
    return t if is_leaf(t) else (t[0], mirror(t[2]), mirror(t[1]))


def number_leaves(t, start: int = 0):
    """Number the leaves left to right from ``start``; returns (tree, next)."""
    if is_leaf(t):
        return start, start + 1
    a, n = number_leaves(t[1], start)
    b, n = number_leaves(t[2], n)
    return (t[0], a, b), n


def _renumber(t, f):
    return f(t) if is_leaf(t) else (t[0], _renumber(t[1], f), _renumber(t[2], f))


def tree_to_json(t):
    if is_leaf(t):
        return {"leaf": t}
    return {"label": t[0], "left": tree_to_json(t[1]), "right": tree_to_json(t[2])}


def tree_from_json(d):
    if "leaf" in d:
        return d["leaf"]
    return (d["label"], tree_from_json(d["left"]), tree_from_json(d["right"]))


@dataclass(frozen=True, slots=True)
class NumberedForest:
    """Trees 0..k-1 are explicit; tree i >= k is a single leaf numbered i + tail_offset."""

    trees: tuple

    @classmethod
    def make(cls, trees) -> "NumberedForest":
        trees = list(trees)
        total = sum(len(leaves(t)) for t in trees)
        while trees and trees[-1] == total - 1:
            trees.pop()
            total -= 1
        return cls(tuple(trees))

    @property
    def tail_start(self) -> int:
        return len(self.trees)

    @property
    def leaf_count(self) -> int:
        return sum(len(leaves(t)) for t in self.trees)

    @property
    def tail_offset(self) -> int:
        return self.leaf_count - len(self.trees)

    def padded(self, k: int) -> list:
        trees = list(self.trees)
        n = self.leaf_count
        while len(trees) < k:
            trees.append(n)
            n += 1
        return trees

    def shapes(self) -> tuple:
        return tuple(shape(t) for t in self.trees)

    def vertices(self) -> Iterator[tuple]:
        """Interior vertices as ``(tree index, path)``; path is a string over 0/1."""
        def walk(t, i, path):
            if not is_leaf(t):
                yield (i, path), t
                yield from walk(t[1], i, path + "0")
                yield from walk(t[2], i, path + "1")
        for i, t in enumerate(self.trees):
            yield from walk(t, i, "")

    def to_json(self) -> dict:
        return {"trees": [tree_to_json(t) for t in self.trees], "tail_offset": self.tail_offset}

    @classmethod
    def from_json(cls, data) -> "NumberedForest":
        return cls.make(tree_from_json(t) for t in data["trees"])


def trivial_forest() -> NumberedForest:
    return NumberedForest(())


def forest_of_word(w: Word) -> NumberedForest:
    if w.alphabet != PI or not w.is_positive:
        raise ValueError("forests come from positive pi words")
    trees: list = []
    total = 0
    for g in w.letters:
        i = g.index
        need = i + 2 if g.kind == "s" else i + 1
        while total < need:
            trees.append(total)
            total += 1
        if g.kind == "s":
            swap = {i: i + 1, i + 1: i}
            trees = [_renumber(t, lambda n: swap.get(n, n)) for t in trees]
        else:
            lab = g.kind

            def f(n, i=i, lab=lab):
                if n < i:
                    return n
                if n > i:
                    return n + 1
                return (lab, i, i + 1)
            trees = [_renumber(t, f) for t in trees]
            total += 1
    return NumberedForest.make(trees)


def _rects_of_tree(t, r: DyadicRect, out: dict):
    if is_leaf(t):
        out[t] = tuple(r)
        return
    _rects_of_tree(t[1], r.half(t[0], 0), out)
    _rects_of_tree(t[2], r.half(t[0], 1), out)


def pattern_of_forest(f: NumberedForest) -> NumberedPattern:
    out: dict = {}
    for i, t in enumerate(f.trees):
        _rects_of_tree(t, DyadicRect(i), out)
    return NumberedPattern.make([out[n] for n in range(len(out))], len(f.trees))


# -- the rewriting rule x_j y_i -> y_i x_{j+1} (i < j) ------------------------

def rewrite_steps(w: Word) -> list:
    """All words reachable by one application of the rule."""
    out = []
    ls = w.letters
    for p in range(len(ls) - 1):
        a, b = ls[p], ls[p + 1]
        if b.index < a.index:
            new = ls[:p] + (b, Generator(a.kind, a.index + 1)) + ls[p + 2:]
            out.append(Word(w.alphabet, new))
    return out


def inversions(w: Word) -> int:
    """Termination measure: pairs of positions with decreasing subscripts."""
    ix = [g.index for g in w.letters]
    return sum(1 for a in range(len(ix)) for b in range(a + 1, len(ix)) if ix[a] > ix[b])


def rewrite_sorted(w: Word) -> Word:
    """The irreducible form: subscripts non-decreasing."""
    out: list = []
    for g in w.letters:
        if g.kind not in "vh" or g.sign < 0:
            raise ValueError("rewrite_sorted takes words in v and h only")
        pos = len(out)
        out.append(g)
        while pos > 0 and out[pos - 1].index > g.index:
            a = out[pos - 1]
            out[pos] = Generator(a.kind, a.index + 1)
            out[pos - 1] = g
            pos -= 1
    return Word(PI, tuple(out))


def is_sorted_word(w: Word) -> bool:
    return all(a.index <= b.index for a, b in zip(w.letters, w.letters[1:]))


# -- secondary labels and normalization ---------------------------------------

def _subtree_rects(t, r: DyadicRect, acc: list):
    if is_leaf(t):
        acc.append(r)
    else:
        _subtree_rects(t[1], r.half(t[0], 0), acc)
        _subtree_rects(t[2], r.half(t[0], 1), acc)


def secondary_labels(f: NumberedForest) -> set:
    """Vertices whose rectangle is divided both vertically and horizontally."""
    out = set()

    def walk(t, r, key):
        if is_leaf(t):
            return
        acc: list = []
        _subtree_rects(t, r, acc)
        if all(p.xe > r.xe for p in acc) and all(p.ye > r.ye for p in acc):
            out.add(key)
        walk(t[1], r.half(t[0], 0), (key[0], key[1] + "0"))
        walk(t[2], r.half(t[0], 1), (key[0], key[1] + "1"))

    for i, t in enumerate(f.trees):
        walk(t, DyadicRect(i), (i, ""))
    return out


def label_at(f: NumberedForest, key) -> str:
    t = f.trees[key[0]]
    for c in key[1]:
        t = t[1] if c == "0" else t[2]
    return t[0]


def is_normalized(f: NumberedForest) -> bool:
    return all(label_at(f, key) == "v" for key in secondary_labels(f))


def _build(d: DyadicRect, pieces: list, numbers: dict):
    if len(pieces) == 1:
        if pieces[0] != tuple(d):
            raise InvalidTiling(f"{pieces[0]} does not fill {tuple(d)}")
        return numbers[pieces[0]]
    direction = cut_direction(d, pieces) if pieces else None
    if direction is None:
        raise InvalidTiling(f"rectangles inside {tuple(d)} do not tile it by halving")
    lo, hi = split_pieces(d, pieces, direction)
    return (direction, _build(d.half(direction, 0), lo, numbers),
            _build(d.half(direction, 1), hi, numbers))


def normalized_forest_of_pattern(p: NumberedPattern) -> NumberedForest:
    numbers = {r: n for n, r in enumerate(p.rects)}
    by_sq: dict = {i: [] for i in range(p.tail_start)}
    for r in p.rects:
        by_sq[r[0]].append(r)
    trees = [_build(DyadicRect(i), by_sq[i], numbers) for i in range(p.tail_start)]
    return NumberedForest(tuple(trees))


# -- canonical words ------------------------------------------------------------

def sorted_word_of_shapes(shapes) -> Word:
    """Sorted v/h word whose forest has the given shapes with left-right numbering."""
    letters = []

    def walk(t, off):
        if t is None or is_leaf(t):
            return 1
        letters.append(Generator(t[0], off))
        n = walk(t[1], off)
        return n + walk(t[2], off + n)

    offset = 0
    for t in shapes:
        offset += walk(t, offset)
    return rewrite_sorted(Word(PI, tuple(letters)))


def bubble_swaps(target: list) -> list:
    """Adjacent swaps, in application order, turning the identity into ``target``."""
    arr = list(target)
    swaps = []
    n = len(arr)
    changed = True
    while changed:
        changed = False
        for i in range(n - 1):
            if arr[i] > arr[i + 1]:
                arr[i], arr[i + 1] = arr[i + 1], arr[i]
                swaps.append(i)
                changed = True
    return swaps[::-1]


def sigma_word_between(std: NumberedPattern, p: NumberedPattern) -> Word:
    """Bubble-sort sigma word q with std . q = p (same tiling, different numbering)."""
    k = max(std.tail_start, p.tail_start)
    srects, _ = std.padded(k)
    prects, _ = p.padded(k)
    if len(srects) != len(prects):
        raise ValueError("patterns have different tilings")
    where = {r: n for n, r in enumerate(srects)}
    try:
        target = [where[r] for r in prects]
    except KeyError as exc:
        raise ValueError("patterns have different tilings") from exc
    return Word(PI, tuple(Generator("s", i) for i in bubble_swaps(target)))


def canonical_word_pi(p: NumberedPattern) -> Word:
    f = normalized_forest_of_pattern(p)
    shp = sorted_word_of_shapes(f.shapes())
    std = pattern_of_word(shp)
    return shp * sigma_word_between(std, p)


def canonical_parts(p: NumberedPattern) -> tuple:
    """``(shape word, sigma word)`` of ``canonical_word_pi``."""
    f = normalized_forest_of_pattern(p)
    shp = sorted_word_of_shapes(f.shapes())
    return shp, sigma_word_between(pattern_of_word(shp), p)

"""The group 2V: generators as pattern pairs, membership, the trunk codec,
canonical words and the word problem."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

from .forest import forest_of_word, is_leaf, mirror, shape, sorted_word_of_shapes
from .fractions import (FractionPair, canonical_pair, compose, elements_equal, eval_pi_word, identity,
                        invert, is_identity, lmr_form, psi_inv, reduce)
from .pattern import NumberedPattern, pattern_of_word
from .words import PI, TWO_V, Generator, Word, free_reduce


class NotInTwoV(ValueError):
    pass


class MinimalityError(ValueError):
    pass


class LShapeError(ValueError):
    pass


def _pi(*parts) -> Word:
    out = []
    for kind, idx, times in parts:
        out.extend([Generator(kind, idx)] * times)
    return Word(PI, tuple(out))


@lru_cache(maxsize=4096)
def generator_pair(kind: str, index: int) -> FractionPair:
    i = index
    if kind == "A":
        r, d = _pi(("v", 0, i + 1), ("v", 1, 1)), _pi(("v", 0, i + 2))
    elif kind == "B":
        r, d = _pi(("v", 0, i + 1), ("h", 1, 1)), _pi(("v", 0, i + 2))
    elif kind == "C":
        r, d = _pi(("v", 0, i), ("h", 0, 1)), _pi(("v", 0, i + 1))
    elif kind == "p":
        r, d = _pi(("v", 0, i + 2), ("s", 1, 1)), _pi(("v", 0, i + 2))
    elif kind == "P":
        r, d = _pi(("v", 0, i + 1), ("s", 0, 1)), _pi(("v", 0, i + 1))
    else:
        raise ValueError(f"not a 2V generator kind: {kind}")
    return FractionPair(pattern_of_word(r), pattern_of_word(d))


def letter_pair(g: Generator) -> FractionPair:
    f = generator_pair(g.kind, g.index)
    return f if g.sign > 0 else invert(f)


def eval_word(w: Word, cancel: bool = True) -> FractionPair:
    if w.alphabet != TWO_V:
        raise ValueError("expected a 2v-alphabet word")
    f = identity()
    for g in (free_reduce(w) if cancel else w).letters:
        f = reduce(compose(f, letter_pair(g)))
    return f


def in_two_v(f: FractionPair) -> bool:
    """True when f is the identity off S_0 (and so preserves S_0)."""
    p, q = f.range, f.domain
    if p.tail_offset != q.tail_offset:
        return False
    for n in range(max(len(p.rects), len(q.rects))):
        a, b = p.rect(n), q.rect(n)
        if (a.square == 0) != (b.square == 0):
            return False
        if b.square != 0 and a != b:
            return False
    return True


def two_v_pair(f: FractionPair) -> FractionPair:
    """Representative with both patterns confined to S_0, S_i numbered i + n - 1."""
    if not in_two_v(f):
        raise NotInTwoV("element moves points outside S_0")
    p, q = f.range, f.domain
    keep = [n for n in range(max(len(p.rects), len(q.rects))) if q.rect(n).square == 0]
    return FractionPair(NumberedPattern.make([tuple(p.rect(n)) for n in keep], 1),
                        NumberedPattern.make([tuple(q.rect(n)) for n in keep], 1))


def word_problem_2v(w: Word) -> bool:
    return is_identity(eval_word(w))


def equal_2v(w1: Word, w2: Word) -> bool:
    return word_problem_2v(w1 * w2.inverse())


# -- trunk and attached forest ---------------------------------------------------

@dataclass(frozen=True)
class TrunkTree:
    """Trunk carets from the top with labels; attached[i] hangs on trunk leaf i (right-left)."""

    labels: tuple
    attached: tuple

    @property
    def trunk_length(self) -> int:
        return len(self.labels)

    def tree(self):
        t = None
        for lab, a in zip(reversed(self.labels), reversed(self.attached)):
            t = (lab, t, a)
        return t

    @property
    def is_primary(self) -> bool:
        return bool(self.labels) and (self.labels[-1] == "h" or self.attached[-1] is not None)

    def primary(self) -> "TrunkTree":
        labels, attached = list(self.labels), list(self.attached)
        while labels and labels[-1] == "v" and attached[-1] is None:
            labels.pop()
            attached.pop()
        return TrunkTree(tuple(labels), tuple(attached))


def decompose_tree(tree) -> TrunkTree:
    labels, attached = [], []
    t = shape(tree)
    while not is_leaf(t):
        labels.append(t[0])
        attached.append(t[2])
        t = t[1]
    return TrunkTree(tuple(labels), tuple(attached))


def tree_of_s0_word(w: Word):
    f = forest_of_word(w)
    return shape(f.trees[0]) if f.trees else None


@dataclass(frozen=True)
class TreeFromL:
    t: Word
    k: int
    trunk: TrunkTree
    sigma: Word
    trunk_before_pi: int

    def pair(self) -> FractionPair:
        return FractionPair(pattern_of_word(self.t * self.sigma),
                            pattern_of_word(Word(PI, (Generator("v", 0),) * self.k)))


def split_l_word(w: Word):
    """Split an L-shaped word into (C letters, A/B letters, pi letters)."""
    if w.alphabet != TWO_V or not w.is_positive:
        raise LShapeError("L words are positive 2v words")
    stage = 0
    parts: tuple = ([], [], [])
    for g in w.letters:
        s = {"C": 0, "A": 1, "B": 1, "p": 2}.get(g.kind)
        if s is None or s < stage:
            raise LShapeError(f"{g} out of place in an L word")
        stage = s
        parts[s].append(g)
    cs = [g.index for g in parts[0]]
    if any(a >= b for a, b in zip(cs, cs[1:])):
        raise LShapeError("C indices must be strictly increasing")
    return parts


def _builder_step(k: int, sig: tuple, g: Generator):
    """One letter of the tree builder: (letters appended to t, new k, new sigma)."""
    v0 = Generator("v", 0)
    i = g.index
    if g.kind == "C":
        if i < k:
            raise LShapeError("C indices must be strictly increasing")
        return (v0,) * (i - k) + (Generator("h", 0),), i + 1, sig
    if g.kind in "AB":
        lab = "v" if g.kind == "A" else "h"
        if k <= i + 1:
            return (v0,) * (i + 1 - k) + (Generator(lab, 1),), i + 2, sig
        return (Generator(lab, k - i),), k + 1, sig
    if g.kind == "p":
        j = max(0, i + 2 - k)
        return (v0,) * j, k + j, tuple(x + j for x in sig) + (k + j - 1 - i,)
    raise LShapeError(f"{g} out of place in an L word")


def tree_from_L(w: Word) -> TreeFromL:
    cs, xs, ps = split_l_word(w)
    t: list = []
    sig: tuple = ()
    k = 0
    for g in cs + xs:
        x, k, sig = _builder_step(k, sig, g)
        t.extend(x)
    before = decompose_tree(tree_of_s0_word(Word(PI, tuple(t)))).trunk_length
    for g in ps:
        x, k, sig = _builder_step(k, sig, g)
        t.extend(x)
    tw = Word(PI, tuple(t))
    return TreeFromL(tw, k, decompose_tree(tree_of_s0_word(tw)),
                     Word(PI, tuple(Generator("s", s) for s in sig)), before)


def builder_step_holds(k: int, sig: tuple, g: Generator) -> bool:
    """Check sigma v0^-k g = x sigma' v0^-k' in 2V-hat for one builder step.

    Since every step only appends x to t, this (after cancelling t on the
    left) is what makes pair(u g) = pair(u) g for every prefix u in state (k, sigma).
    """
    x, k2, sig2 = _builder_step(k, sig, g)
    s_word = lambda ss: tuple(Generator("s", v) for v in ss)
    lhs = compose(eval_pi_word(Word(PI, s_word(sig) + (Generator("v", 0, -1),) * k)),
                  generator_pair(g.kind, g.index))
    rhs = eval_pi_word(Word(PI, x + s_word(sig2) + (Generator("v", 0, -1),) * k2))
    return elements_equal(lhs, rhs)


@dataclass
class BuilderReport:
    words: int = 0
    steps_checked: int = 0
    step_failures: list = field(default_factory=list)
    formula_words: int = 0
    formula_failures: list = field(default_factory=list)

    @property
    def passed(self):
        return not (self.step_failures or self.formula_failures)


def verify_tree_builder(max_c: int = 3, max_ab: int = 4, max_pi: int = 2, index_bound: int = 4) -> BuilderReport:
    """Exhaustive over L-words within the bounds.

    Builder correctness is checked once per distinct (k, sigma, letter)
    transition reached by some word, which by induction on length covers
    every word. The trunk formula is checked word by word on C-prefix + w(A,B).
    """
    rep = BuilderReport()
    idx = range(index_bound + 1)
    ab = [Generator(kd, i) for kd in "AB" for i in idx]
    pis = [Generator("p", i) for i in idx]
    seen: set = set()

    def check(k, sig, g):
        key = (k, sig, g)
        if key not in seen:
            seen.add(key)
            rep.steps_checked += 1
            if not builder_step_holds(k, sig, g):
                rep.step_failures.append((k, sig, str(g)))
        return _builder_step(k, sig, g)[1:]

    def pi_paths(k, sig, left):
        n = 1
        if left:
            for g in pis:
                k2, s2 = check(k, sig, g)
                n += pi_paths(k2, s2, left - 1)
        return n

    pi_memo: dict = {}

    def after_ab(k):
        if k not in pi_memo:
            pi_memo[k] = pi_paths(k, (), max_pi)
        return pi_memo[k]

    def ab_paths(k, letters, left):
        w = Word(TWO_V, tuple(letters))
        rep.formula_words += 1
        r = tree_from_L(w)
        if r.trunk_before_pi != m_formula(w):
            rep.formula_failures.append((str(w), r.trunk_before_pi, m_formula(w)))
        n = after_ab(k)
        if left:
            for g in ab:
                k2, _ = check(k, (), g)
                n += ab_paths(k2, letters + [g], left - 1)
        return n

    for n in range(max_c + 1):
        for combo in itertools.combinations(idx, n):
            k = 0
            cs = [Generator("C", i) for i in combo]
            for g in cs:
                k, _ = check(k, (), g)
            rep.words += ab_paths(k, cs, max_ab)
    return rep


def m_formula(w: Word) -> int:
    """Trunk length predicted from the subscripts of C-prefix + w(A,B)."""
    cs, xs, _ = split_l_word(w)
    idx = [g.index for g in cs + xs]
    n = len(cs) - 1
    vals = [idx[j] + n + 2 - j for j in range(n + 1, len(idx))]
    if n >= 0:
        vals.append(idx[n] + 1)
    return max(vals) if vals else 0


def L_from_tree(tree, strict: bool = True) -> Word:
    """C-prefix + w(A,B) whose tree (t, v_0^k) is the given tree."""
    tt = tree if isinstance(tree, TrunkTree) else decompose_tree(tree)
    if not tt.is_primary:
        if strict:
            raise MinimalityError("bottom trunk caret is labeled v and carries nothing")
        tt = tt.primary()
    cs = [Generator("C", i) for i, lab in enumerate(tt.labels) if lab == "h"]
    fw = sorted_word_of_shapes([mirror(a) for a in tt.attached])
    xs = [Generator("A" if g.kind == "v" else "B", g.index) for g in fw.letters]
    return Word(TWO_V, tuple(cs + xs))


# -- canonical words ---------------------------------------------------------------

@dataclass(frozen=True)
class CanonicalTwoVWord:
    L: Word
    M: Word
    R: Word
    p: int

    def word(self) -> Word:
        return self.L * self.M * self.R

    def __str__(self):
        return str(self.word())


def canonical_word_2v(f: FractionPair) -> CanonicalTwoVWord:
    if not in_two_v(f):
        raise NotInTwoV("element is not in 2V")
    g = canonical_pair(f)
    empty = Word(TWO_V, ())
    if is_identity(g):
        return CanonicalTwoVWord(empty, empty, empty, 0)
    lmr = lmr_form(g)
    p = len(lmr.t)
    if len(lmr.s) != p:
        raise AssertionError("range and domain trees differ in size")
    L = L_from_tree(tree_of_s0_word(lmr.s), strict=False)
    R = L_from_tree(tree_of_s0_word(lmr.t), strict=False).inverse()
    return CanonicalTwoVWord(L, psi_inv(p, lmr.u), R, p)


def normalize_2v(w: Word) -> Word:
    return canonical_word_2v(eval_word(w)).word()

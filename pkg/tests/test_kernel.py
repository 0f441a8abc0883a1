"""Both kernels must agree on everything they are asked."""

import random

import pytest

from hdthompson import kernel
from hdthompson.pattern import CODES

from conftest import random_pi_word

BACKENDS = kernel.backends()


def _codes(w):
    return [(CODES[g.kind], g.index) for g in w.letters]


def _samples(n=150):
    rng = random.Random(7)
    return [random_pi_word(rng, 8, 5) for _ in range(n)]


def test_reference_backend_present():
    assert "python" in BACKENDS
    assert kernel.BACKEND in ("python", "cython")


@pytest.mark.skipif(len(BACKENDS) < 2, reason="compiled kernel not built")
def test_backends_agree():
    py, cy = BACKENDS["python"], BACKENDS["cython"]
    ws = _samples()
    pats = []
    for w in ws:
        a = py.apply_letters((), 0, _codes(w))
        assert a == cy.apply_letters((), 0, _codes(w))
        pats.append(a)
    for p, q in zip(pats, pats[1:] + pats[:1]):
        c = py.compose(*p, *q)
        assert c == cy.compose(*p, *q)
        assert py.left_quotient(*p, *c) == cy.left_quotient(*p, *c)
        assert py.right_quotient(*c, *q) == cy.right_quotient(*c, *q)
        assert py.left_quotient(*q, *p) == cy.left_quotient(*q, *p)


def test_quotients_invert_compose():
    py = BACKENDS["python"]
    ws = _samples(60)
    for a, b in zip(ws, ws[1:]):
        p = py.apply_letters((), 0, _codes(a))
        q = py.apply_letters((), 0, _codes(b))
        c = py.compose(*p, *q)
        assert py.left_quotient(*p, *c) == q
        assert py.right_quotient(*c, *q) == p


def test_big_index_falls_back():
    # coordinates past 64 bits go through the Python path
    w = [(0, i) for i in range(70)]
    r = kernel.apply_letters((), 0, w)
    assert r == BACKENDS["python"].apply_letters((), 0, w)
    assert max(x[1] for x in r[0]) == 2**70 - 1

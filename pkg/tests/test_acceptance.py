"""Acceptance criteria 1-10, one PASS/FAIL line each (see the summary section)."""

import random
import time

import pytest

from hdthompson import presentations as pr
from hdthompson.forest import (canonical_word_pi, forest_of_word, is_normalized,
                               normalized_forest_of_pattern, pattern_of_forest)
from hdthompson.fractions import elements_equal, eval_pi_word, psi, psi_inv
from hdthompson.pattern import pattern_of_word
from hdthompson.pimonoid import lclm_report
from hdthompson.twov import (canonical_word_2v, eval_word, generator_pair, tree_from_L,
                             verify_tree_builder, word_problem_2v)
from hdthompson.words import PI, TWO_V, Generator, Word

from conftest import random_2v_word, random_pi_word


def record(log, n, ok, detail):
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'} {detail}"
    log.append(line)
    print(line)
    return ok


def pi_variant(rng, w):
    """A different word for the same pattern: rewrite steps on v/h pairs and s_i s_i insertions."""
    for _ in range(rng.randint(1, 4)):
        if rng.random() < 0.5:
            steps = [s for _, s in _vh_steps(w)]
            if steps:
                w = rng.choice(steps)
                continue
        pos = rng.randint(0, len(w))
        s = Generator("s", rng.randint(0, 5))
        w = Word(PI, w.letters[:pos] + (s, s) + w.letters[pos:])
    return w


def _vh_steps(w):
    ls = w.letters
    for p in range(len(ls) - 1):
        a, b = ls[p], ls[p + 1]
        if a.kind in "vh" and b.kind in "vh" and b.index < a.index:
            yield p, Word(PI, ls[:p] + (b, Generator(a.kind, a.index + 1)) + ls[p + 2:])


def test_criterion_1_pi_families(acceptance_log):
    t0 = time.perf_counter()
    reps = [pr.verify_family(f, 6) for f in pr.PI_FAMILIES]
    dt = time.perf_counter() - t0
    n = sum(len(r.results) for r in reps)
    bad = sum(len(r.failures) for r in reps)
    ok = bad == 0 and dt < 10
    assert record(acceptance_log, 1, ok, f"families (3)-(8), indices <= 6: {n} relations, "
                  f"{bad} failures, {dt:.2f}s (limit 10s)")


def test_criterion_2_two_v_families(acceptance_log):
    t0 = time.perf_counter()
    reps = [pr.verify_family(f, 6) for f in pr.TWO_V_FAMILIES]
    dt = time.perf_counter() - t0
    n = sum(len(r.results) for r in reps)
    bad = sum(len(r.failures) for r in reps)
    ok = bad == 0 and dt < 60
    assert record(acceptance_log, 2, ok, f"families (10)-(26), indices <= 6, both sides in 2V: "
                  f"{n} relations, {bad} failures, {dt:.2f}s (limit 60s)")


def test_criterion_3_finite_presentations(acceptance_log):
    r40, r30, corrections = pr.finite_lists()
    typo40 = sorted(e.index for e in r40.typography)
    fixed30 = sorted(e.index for e in r30.corrections)
    unexplained = [e.index for r in (r40, r30) for e in r.entries if not (e.explained and e.expanded_ok)]
    ok = (r40.passed and r30.passed and not r40.corrections and typo40 == [39]
          and fixed30 == [3, 12] and not unexplained)
    assert record(acceptance_log, 3, ok,
                  f"40-list: {sum(e.as_printed for e in r40.entries)}/40 as printed (typography #{typo40}); "
                  f"30-list: {sum(e.as_printed for e in r30.entries)}/30 as printed, corrected {fixed30} "
                  f"via families {[e.correction_family for e in r30.corrections]}; "
                  f"unexplained {unexplained}")


def test_criterion_4_rewriting(acceptance_log):
    rep = pr.check_rewriting(5, 4, 2)
    ok = rep.passed and rep.max_join <= 2
    assert record(acceptance_log, 4, ok,
                  f"{rep.words} words, {rep.steps} steps: measure failures {len(rep.measure_failures)}, "
                  f"{rep.peaks} peaks joined within {rep.max_join} steps, join failures "
                  f"{len(rep.join_failures)} (measure: subscript sequence, lexicographic)")


def test_criterion_5_pi_normal_form(acceptance_log):
    rng = random.Random(5)
    fails = 0
    equal_pairs = 0
    for _ in range(1000):
        w = random_pi_word(rng, 12, 5)
        p = pattern_of_word(w)
        c = canonical_word_pi(p)
        if pattern_of_word(c) != p:
            fails += 1
        for other in (pi_variant(rng, w), random_pi_word(rng, 12, 5)):
            if len(other) > 12:
                other = Word(PI, other.letters[:12])
            q = pattern_of_word(other)
            same = p == q
            equal_pairs += same
            if (canonical_word_pi(q) == c) != same:
                fails += 1
    assert record(acceptance_log, 5, fails == 0,
                  f"1000 words, 2000 comparisons ({equal_pairs} equal pairs), {fails} failures")


def test_criterion_6_normalized_forest(acceptance_log):
    rng = random.Random(6)
    fails = 0
    for _ in range(500):
        w = random_pi_word(rng, 12, 5)
        p = pattern_of_word(w)
        nf = normalized_forest_of_pattern(p)
        words = [w, canonical_word_pi(p), pi_variant(rng, w)]
        forests = {normalized_forest_of_pattern(pattern_of_forest(forest_of_word(u))) for u in words}
        if not is_normalized(nf) or forests != {nf} or pattern_of_forest(nf) != p:
            fails += 1
    assert record(acceptance_log, 6, fails == 0, f"500 patterns, 3 generating words each, {fails} failures")


def test_criterion_7_tree_builder(acceptance_log):
    t0 = time.perf_counter()
    rep = verify_tree_builder(3, 4, 2, 4)
    dt = time.perf_counter() - t0
    # direct end-to-end comparison on a seeded sample as a cross-check
    rng = random.Random(7)
    direct_bad = 0
    for _ in range(300):
        cs = sorted(rng.sample(range(5), rng.randint(0, 3)))
        ls = [Generator("C", i) for i in cs]
        ls += [Generator(rng.choice("AB"), rng.randint(0, 4)) for _ in range(rng.randint(0, 4))]
        ls += [Generator("p", rng.randint(0, 4)) for _ in range(rng.randint(0, 2))]
        w = Word(TWO_V, tuple(ls))
        direct_bad += not elements_equal(tree_from_L(w).pair(), eval_word(w))
    ok = rep.passed and direct_bad == 0 and dt < 120
    assert record(acceptance_log, 7, ok,
                  f"{rep.words} L-words covered by {rep.steps_checked} distinct builder steps "
                  f"({len(rep.step_failures)} failures), trunk formula on {rep.formula_words} words "
                  f"({len(rep.formula_failures)} failures), 300 direct checks ({direct_bad} failures), "
                  f"{dt:.1f}s (limit 120s)")


def test_criterion_8_two_v_word_problem(acceptance_log):
    rng = random.Random(8)
    fails = 0
    for _ in range(500):
        w = random_2v_word(rng, 8, 3)
        c = canonical_word_2v(eval_word(w)).word()
        if not word_problem_2v(w * c.inverse()):
            fails += 1
    rels = [r for f in pr.TWO_V_FAMILIES for r in pr.instantiate_family(f, 3)]
    equal_pairs = 0
    for _ in range(200):
        a = random_2v_word(rng, 8, 3)
        if rng.random() < 0.5:
            r = rng.choice(rels)
            pos = rng.randint(0, len(a))
            b = a[:pos] * r.lhs * r.rhs.inverse() * a[pos:]
        else:
            b = random_2v_word(rng, 8, 3)
        same = elements_equal(eval_word(a), eval_word(b))
        equal_pairs += same
        ca = canonical_word_2v(eval_word(a)).word()
        cb = canonical_word_2v(eval_word(b)).word()
        if (ca == cb) != same:
            fails += 1
    assert record(acceptance_log, 8, fails == 0,
                  f"500 words reduce to the identity against their canonical word; 200 pairs "
                  f"({equal_pairs} equal); {fails} failures")


@pytest.mark.slow
def test_criterion_9_lclm(acceptance_log):
    t0 = time.perf_counter()
    rep = lclm_report(4)
    dt = time.perf_counter() - t0
    ok = rep.passed and dt < 300
    assert record(acceptance_log, 9, ok,
                  f"identities {sum(rep.identities.values())}/{len(rep.identities)}, "
                  f"{rep.multiples_found} common left multiples with surplus <= 4, "
                  f"{len(rep.below_both_in_search)} below both L1 and L2, "
                  f"{rep.divisors_checked} right divisors of L1 ({len(rep.below_both_exact)} below both), "
                  f"least: {rep.least}, {dt:.1f}s (limit 300s)")


def test_criterion_10_psi(acceptance_log):
    fails = 0
    checked = 0
    for p in range(1, 7):
        conj = lambda k: eval_pi_word(Word(PI, (Generator("v", 0),) * p + (Generator("s", k),)
                                           + (Generator("v", 0, -1),) * p))
        for i in range(p - 1):
            checked += 1
            fails += not elements_equal(generator_pair("p", i), conj(p - 1 - i))
        checked += 1
        fails += not elements_equal(generator_pair("P", p - 1), conj(0))
    rng = random.Random(10)
    for _ in range(200):
        p = rng.randint(1, 6)
        letters = [Generator("P", p - 1) if rng.random() < 0.3 or p == 1 else
                   Generator("p", rng.randint(0, p - 2)) for _ in range(rng.randint(0, 8))]
        m = Word(TWO_V, tuple(letters))
        u = psi(p, m)
        if psi_inv(p, u) != m:
            fails += 1
    assert record(acceptance_log, 10, fails == 0,
                  f"{checked} conjugation identities for p <= 6, 200 round trips, {fails} failures")

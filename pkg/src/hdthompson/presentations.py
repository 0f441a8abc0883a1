"""Relation tables for Pi, 2V-hat and 2V, the two finite presentations, and
checks for derivations and for the sorting rewrite rule.

Family ids follow the equation numbers: 3..8 for Pi, 10..26 for 2V. The
extra tables are ``finite-40``, ``finite-30``, ``definitional``,
``homomorphism`` and ``inductive``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field

from .forest import canonical_word_pi, inversions, rewrite_sorted, rewrite_steps
from .fractions import canonical_word_hat, elements_equal, eval_pi_word
from .pattern import pattern_of_word
from .twov import canonical_word_2v, eval_word, in_two_v
from .words import PI, TWO_V, Generator, Word, parse_word

PI_FAMILIES = ("3", "4", "5", "6", "7", "8")
TWO_V_FAMILIES = tuple(str(n) for n in range(10, 27))


@dataclass(frozen=True)
class Relation:
    family: str
    lhs: Word
    rhs: Word
    params: tuple = ()

    @property
    def alphabet(self) -> str:
        return self.lhs.alphabet

    def __str__(self):
        return f"{self.lhs} = {self.rhs}"


def _w(text: str, alphabet: str) -> Word:
    return parse_word(text, alphabet)


def _rel(fam, lhs, rhs, alphabet, **params) -> Relation:
    return Relation(fam, _w(lhs, alphabet), _w(rhs, alphabet), tuple(sorted(params.items())))


# -- the infinite families ----------------------------------------------------------

def _sigma_bar(j: int, i: int) -> int:
    return {j: j + 1, j + 1: j}.get(i, i)


def _sigma_exponent(j: int, i: int) -> str:
    if i < j:
        return f"s{j + 1}"
    if i == j:
        return f"s{j} s{j + 1}"
    if i == j + 1:
        return f"s{j + 1} s{j}"
    return f"s{j}"


def _pi_family(fam: str, b: int):
    r = range(b + 1)
    P = PI
    if fam == "3":
        for x, y in itertools.product("vh", repeat=2):
            for i, j in itertools.product(r, r):
                if i < j:
                    yield _rel(fam, f"{x}{j} {y}{i}", f"{y}{i} {x}{j + 1}", P, x=x, y=y, i=i, j=j)
    elif fam == "4":
        for i in r:
            yield _rel(fam, f"s{i} s{i}", "1", P, i=i)
    elif fam == "5":
        for i, j in itertools.product(r, r):
            if abs(i - j) >= 2:
                yield _rel(fam, f"s{i} s{j}", f"s{j} s{i}", P, i=i, j=j)
    elif fam == "6":
        for i in r:
            yield _rel(fam, f"s{i} s{i + 1} s{i}", f"s{i + 1} s{i} s{i + 1}", P, i=i)
    elif fam == "7":
        for x in "vh":
            for i, j in itertools.product(r, r):
                yield _rel(fam, f"s{j} {x}{i}", f"{x}{_sigma_bar(j, i)} {_sigma_exponent(j, i)}",
                           P, x=x, i=i, j=j)
    elif fam == "8":
        for i in r:
            yield _rel(fam, f"v{i} h{i + 1} h{i}", f"h{i} v{i + 1} v{i} s{i + 1}", P, i=i)


def _two_v_family(fam: str, b: int):
    r = range(b + 1)
    T = TWO_V
    pairs = [(q, m) for q in r for m in r]
    n = int(fam)
    if n == 10:
        for X, Y in itertools.product("AB", repeat=2):
            for q, m in pairs:
                if m < q:
                    yield _rel(fam, f"{X}{q} {Y}{m}", f"{Y}{m} {X}{q + 1}", T, X=X, Y=Y, q=q, m=m)
    elif n in (11, 13, 14, 17):
        head = {11: "p", 13: "p", 14: "P", 17: "C"}[n]
        for X in "AB":
            for q, m in pairs:
                if n == 13 and m > q + 1:
                    yield _rel(fam, f"p{q} {X}{m}", f"{X}{m} p{q}", T, X=X, q=q, m=m)
                elif n != 13 and m < q:
                    yield _rel(fam, f"{head}{q} {X}{m}", f"{X}{m} {head}{q + 1}", T, X=X, q=q, m=m)
    elif n == 12:
        for X in "AB":
            for q in r:
                yield _rel(fam, f"p{q} {X}{q}", f"{X}{q + 1} p{q} p{q + 1}", T, X=X, q=q)
    elif n == 15:
        for m in r:
            yield _rel(fam, f"P{m} A{m}", f"p{m} P{m + 1}", T, m=m)
    elif n == 16:
        for m in r:
            yield _rel(fam, f"P{m} B{m}", f"C{m + 1} p{m} P{m + 1}", T, m=m)
    elif n == 18:
        for m in r:
            yield _rel(fam, f"C{m} A{m}", f"B{m} C{m + 2} p{m + 1}", T, m=m)
    elif n == 19:
        for q, m in pairs:
            if m > q + 1:
                yield _rel(fam, f"p{q} C{m}", f"C{m} p{q}", T, q=q, m=m)
    elif n == 20:
        for m in r:
            yield _rel(fam, f"A{m} B{m + 1} B{m}", f"B{m} A{m + 1} A{m} p{m + 1}", T, m=m)
    elif n == 21:
        for q, m in pairs:
            if abs(m - q) >= 2:
                yield _rel(fam, f"p{q} p{m}", f"p{m} p{q}", T, q=q, m=m)
    elif n == 22:
        for m in r:
            yield _rel(fam, f"p{m} p{m + 1} p{m}", f"p{m + 1} p{m} p{m + 1}", T, m=m)
    elif n == 23:
        for q, m in pairs:
            if q >= m + 2:
                yield _rel(fam, f"P{q} p{m}", f"p{m} P{q}", T, q=q, m=m)
    elif n == 24:
        for m in r:
            yield _rel(fam, f"p{m} P{m + 1} p{m}", f"P{m + 1} p{m} P{m + 1}", T, m=m)
    elif n == 25:
        for m in r:
            yield _rel(fam, f"p{m} p{m}", "1", T, m=m)
    elif n == 26:
        for m in r:
            yield _rel(fam, f"P{m} P{m}", "1", T, m=m)


def instantiate_family(fam: str, bound: int = 6) -> list:
    fam = str(fam)
    if fam in PI_FAMILIES:
        return list(_pi_family(fam, bound))
    if fam in TWO_V_FAMILIES:
        return list(_two_v_family(fam, bound))
    raise KeyError(f"unknown relation family {fam!r}")


HOMOMORPHISM_TABLE = {"3": ("10",), "4": ("25",), "5": ("21",), "6": ("22",),
                      "7": ("11", "12", "13"), "8": ("20",)}


def pi_to_two_v(w: Word) -> Word:
    """v -> A, h -> B, s -> p."""
    m = {"v": "A", "h": "B", "s": "p"}
    return Word(TWO_V, tuple(Generator(m[g.kind], g.index, g.sign) for g in w.letters))


# -- evaluation and table checks ---------------------------------------------------

def evaluate(w: Word):
    """Element of a word in its natural model: a pattern for positive pi words,
    otherwise a fraction pair."""
    if w.alphabet == PI:
        return pattern_of_word(w) if w.is_positive else eval_pi_word(w, cancel=False)
    return eval_word(w, cancel=False)


def same_element(a: Word, b: Word) -> bool:
    if a.alphabet != b.alphabet:
        raise ValueError("sides use different alphabets")
    if a.alphabet == PI and a.is_positive and b.is_positive:
        return pattern_of_word(a) == pattern_of_word(b)
    if a.alphabet == PI:
        return elements_equal(eval_pi_word(a, cancel=False), eval_pi_word(b, cancel=False))
    return elements_equal(evaluate(a), evaluate(b))


def canonical_text(w: Word) -> str:
    if w.alphabet == PI:
        if w.is_positive:
            return str(canonical_word_pi(pattern_of_word(w)))
        return str(canonical_word_hat(eval_pi_word(w)))
    return str(canonical_word_2v(eval_word(w)).word())


@dataclass
class PairResult:
    label: str
    lhs: str
    rhs: str
    ok: bool
    detail: str = ""

    def to_json(self):
        return dict(self.__dict__)


@dataclass
class TableReport:
    name: str
    results: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.ok for r in self.results)

    @property
    def failures(self) -> list:
        return [r for r in self.results if not r.ok]

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "checked": len(self.results),
                "failures": [r.to_json() for r in self.failures], "notes": self.notes}

    def text(self) -> str:
        head = f"{self.name}: {len(self.results) - len(self.failures)}/{len(self.results)} pass"
        lines = [head]
        for r in self.failures:
            lines.append(f"  FAIL {r.label}: {r.lhs} = {r.rhs} {r.detail}".rstrip())
        lines.extend(f"  note: {n}" for n in self.notes)
        return "\n".join(lines)


def check_pair(lhs: Word, rhs: Word, label: str = "", require_two_v: bool = False) -> PairResult:
    ok = same_element(lhs, rhs)
    detail = ""
    if ok and require_two_v and lhs.alphabet == TWO_V:
        ok = in_two_v(evaluate(lhs)) and in_two_v(evaluate(rhs))
        if not ok:
            detail = "(a side is not in 2V)"
    if not ok and not detail:
        detail = f"[canonical: {canonical_text(lhs)} vs {canonical_text(rhs)}]"
    return PairResult(label, str(lhs), str(rhs), ok, detail)


def verify_table(pairs, name: str = "table", require_two_v: bool = False) -> TableReport:
    rep = TableReport(name)
    for p in pairs:
        if isinstance(p, Relation):
            label = f"({p.family}) " + ",".join(f"{k}={v}" for k, v in p.params)
            rep.results.append(check_pair(p.lhs, p.rhs, label, require_two_v))
        else:
            lhs, rhs = p
            rep.results.append(check_pair(lhs, rhs, "", require_two_v))
    return rep


def verify_family(fam: str, bound: int = 6) -> TableReport:
    fam = str(fam)
    return verify_table(instantiate_family(fam, bound), f"family ({fam})",
                        require_two_v=fam in TWO_V_FAMILIES)


def verify_homomorphism(bound: int = 6) -> TableReport:
    """Images of the Pi relations under v -> A, h -> B, s -> p hold in 2V."""
    rep = TableReport("homomorphism")
    for fam in PI_FAMILIES:
        for rel in instantiate_family(fam, bound):
            img = Relation(fam, pi_to_two_v(rel.lhs), pi_to_two_v(rel.rhs), rel.params)
            r = check_pair(img.lhs, img.rhs, f"({fam})->{'/'.join(HOMOMORPHISM_TABLE[fam])} "
                           + ",".join(f"{k}={v}" for k, v in rel.params), True)
            rep.results.append(r)
    return rep


# -- the printed finite lists ---------------------------------------------------------

FINITE_40 = (
    r"v_2v_1=v_1v_3", r"v_3v_1=v_1v_4", r"h_2v_1=v_1h_3", r"h_3v_1=v_1h_4",
    r"v_1h_0=h_0v_2", r"v_2h_0=h_0v_3", r"v_2h_1=h_1v_3", r"v_3h_1=h_1v_4",
    r"h_1h_0=h_0h_2", r"h_2h_0=h_0h_3", r"h_2h_1=h_1h_3", r"h_3h_1=h_1h_4",
    r"\sigma_0v_2=v_2\sigma_0", r"\sigma_0v_3=v_3\sigma_0",
    r"\sigma_1v_3=v_3\sigma_1", r"\sigma_1v_4=v_4\sigma_1",
    r"\sigma_0h_2=h_2\sigma_0", r"\sigma_0h_3=h_3\sigma_0",
    r"\sigma_1h_3=h_3\sigma_1", r"\sigma_1h_4=h_4\sigma_1",
    r"\sigma_0v_0=v_1\sigma_0\sigma_1", r"\sigma_1v_1=v_2\sigma_1\sigma_2",
    r"\sigma_0h_0=h_1\sigma_0\sigma_1", r"\sigma_1h_1=h_2\sigma_1\sigma_2",
    r"\sigma_1h_0=h_0\sigma_2", r"\sigma_2h_0=h_0\sigma_3",
    r"\sigma_2h_1=h_1\sigma_3", r"\sigma_3h_1=h_1\sigma_4",
    r"\sigma_2v_1=v_1\sigma_3", r"\sigma_3v_1=v_1\sigma_4", r"\sigma_0^2=1", r"\sigma_1^2=1",
    r"\sigma_0\sigma_2=\sigma_2\sigma_0", r"\sigma_0\sigma_3=\sigma_3\sigma_0",
    r"\sigma_1\sigma_3=\sigma_3\sigma_1", r"\sigma_1\sigma_4=\sigma_4\sigma_1",
    r"\sigma_0\sigma_1\sigma_0=\sigma_1\sigma_0\sigma_1",
    r"\sigma_1\sigma_2\sigma_1=\sigma_2\sigma_1\sigma_2",
    r"v_0h_1h_0=h_0v_1v_0\sigma1", r"v_1h_2h_1=h_1v_2v_1\sigma_2",
)

_PB = r"\overline{\pi}"
FINITE_30 = (
    _PB + r"_2A_1=A_1" + _PB + "_3", _PB + r"_3A_1=A_1" + _PB + "_4",
    _PB + r"_!B_0=B_0" + _PB + "_2", _PB + r"_2B_0=B_0" + _PB + "_3",
    _PB + r"_2B_1=B_1" + _PB + "_3", _PB + r"_3B_1=B_1" + _PB + "_4",
    _PB + r"_0A_0=\pi_0" + _PB + "_1", _PB + r"_1A_1=\pi_1" + _PB + "_2",
    _PB + r"_0B_0=C_1\pi_0" + _PB + "_1", _PB + r"_1B_1=C_2\pi_1" + _PB + "_2",
    r"C_2A_1=A_1C_3", r"C_1A_1=A_1C_4",
    r"C_1B_0=B_0C_2", r"C_2B_0=B_0C_3", r"C_2B_1=B_1C_3", r"C_3B_1=B_1C_4",
    r"C_0A_0=B_0C_2\pi_1", r"C_1A_1=B_1C_3\pi_2", _PB + "_0^2=1", _PB + "_1^2=1",
    r"\pi_0C_2=C_2\pi_0", r"\pi_0C_3=C_3\pi_0", r"\pi_1C_3=C_3\pi_1", r"\pi_1C_4=C_4\pi_1",
    r"\pi_0" + _PB + "_2=" + _PB + r"_2\pi_0", r"\pi_0" + _PB + "_3=" + _PB + r"_3\pi_0",
    r"\pi_1" + _PB + "_3=" + _PB + r"_3\pi_1", r"\pi_1" + _PB + "_4=" + _PB + r"_4\pi_1",
    r"\pi_0" + _PB + r"_1\pi_0=" + _PB + r"_1\pi_0" + _PB + "_1",
    r"\pi_1" + _PB + r"_2\pi_1=" + _PB + r"_2\pi_1" + _PB + "_2",
)

_TEX_TOKEN = re.compile(
    r"(?P<sym>\\overline\{\\pi\}|\\sigma|\\pi|[vhABC])(?P<sub>_\d+|_\S|\d+)?(?P<pow>\^\d+)?")
_TEX_KIND = {r"\overline{\pi}": "P", r"\sigma": "s", r"\pi": "p",
             "v": "v", "h": "h", "A": "A", "B": "B", "C": "C"}


@dataclass
class LenientParse:
    word: Word | None
    notes: list


def parse_printed_side(text: str, alphabet: str) -> LenientParse:
    """Read one side of a printed relation. A subscript without ``_`` is
    accepted with a note; a non-numeric subscript makes the side unreadable."""
    text = text.strip()
    if text == "1":
        return LenientParse(Word(alphabet, ()), [])
    notes = []
    letters = []
    pos = 0
    while pos < len(text):
        m = _TEX_TOKEN.match(text, pos)
        if not m or m.end() == pos:
            return LenientParse(None, [f"unreadable text at {text[pos:]!r}"])
        sub = m.group("sub")
        if sub is None:
            return LenientParse(None, [f"missing subscript after {m.group('sym')}"])
        if sub.startswith("_"):
            sub = sub[1:]
        else:
            notes.append(f"subscript {m.group(0)!r} read as {m.group('sym')}_{sub}")
        if not sub.isdigit():
            return LenientParse(None, [f"subscript {sub!r} is not a number"])
        g = Generator(_TEX_KIND[m.group("sym")], int(sub))
        times = int(m.group("pow")[1:]) if m.group("pow") else 1
        letters.extend([g] * times)
        pos = m.end()
    return LenientParse(Word(alphabet, tuple(letters)), notes)


def expand_definitions(w: Word) -> Word:
    """Rewrite letters with subscript >= 2 (and every C) in terms of subscripts 0, 1."""
    out: list = []
    if w.alphabet == PI:
        base = Generator("v", 0)
        for g in w.letters:
            if g.index < 2:
                out.append(g)
                continue
            k = g.index - 1
            core = [Generator(g.kind, 1, g.sign)]
            out.extend([base.inverse()] * k + core + [base] * k)
        return Word(PI, tuple(out))
    base = Generator("A", 0)
    for g in w.letters:
        if g.kind == "C":
            m = g.index
            body = _w(f"P{m} B{m} P{m + 1} p{m} B{m} p{m + 1} A{m}^-1", TWO_V)
            if g.sign < 0:
                body = body.inverse()
            out.extend(expand_definitions(body).letters)
        elif g.index < 2:
            out.append(g)
        else:
            k = g.index - 1
            out.extend([base.inverse()] * k + [Generator(g.kind, 1, g.sign)] + [base] * k)
    return Word(TWO_V, tuple(out))


def _find_family_instance(printed_lhs: str, rhs: Word, bound: int = 6):
    """Family instances whose right side is ``rhs`` and whose left side has the
    printed letter kinds."""
    kinds = [_TEX_KIND[m.group("sym")] for m in _TEX_TOKEN.finditer(printed_lhs)]
    fams = PI_FAMILIES if rhs.alphabet == PI else TWO_V_FAMILIES
    hits = []
    for fam in fams:
        for rel in instantiate_family(fam, bound):
            if rel.rhs == rhs and [g.kind for g in rel.lhs.letters] == kinds:
                hits.append(rel)
    return hits


@dataclass
class FiniteEntry:
    index: int
    printed: str
    parsed: str | None
    as_printed: bool
    expanded_ok: bool
    notes: list
    correction: str | None = None
    correction_family: str | None = None
    correction_ok: bool = False

    @property
    def explained(self) -> bool:
        return self.as_printed or self.correction_ok

    def to_json(self):
        d = dict(self.__dict__)
        d["explained"] = self.explained
        return d


@dataclass
class FiniteReport:
    name: str
    entries: list
    image_report: TableReport | None = None

    @property
    def corrections(self) -> list:
        return [e for e in self.entries if not e.as_printed]

    @property
    def typography(self) -> list:
        return [e for e in self.entries if e.as_printed and e.notes]

    @property
    def passed(self) -> bool:
        ok = all(e.explained and e.expanded_ok for e in self.entries)
        if self.image_report is not None:
            ok = ok and self.image_report.passed
        return ok

    def to_json(self):
        return {"name": self.name, "passed": self.passed, "count": len(self.entries),
                "verified_as_printed": sum(e.as_printed for e in self.entries),
                "correction_report": [e.to_json() for e in self.corrections],
                "typography": [e.to_json() for e in self.typography],
                "image_under_homomorphism": None if self.image_report is None
                else self.image_report.to_json()}

    def text(self):
        lines = [f"{self.name}: {len(self.entries)} entries, "
                 f"{sum(e.as_printed for e in self.entries)} verify as printed"]
        for e in self.typography:
            lines.append(f"  typography #{e.index}: {e.printed} ({'; '.join(e.notes)})")
        for e in self.corrections:
            fix = (f"corrected to {e.correction} from family ({e.correction_family}): "
                   f"{'verifies' if e.correction_ok else 'FAILS'}") if e.correction else "no correction"
            lines.append(f"  misprint #{e.index}: {e.printed} -> {fix}")
        if self.image_report is not None:
            lines.append("  " + self.image_report.text().replace("\n", "\n  "))
        lines.append("PASS" if self.passed else "FAIL")
        return "\n".join(lines)


def _check_printed(i: int, text: str, alphabet: str) -> FiniteEntry:
    left, right = text.split("=")
    lp = parse_printed_side(left, alphabet)
    rp = parse_printed_side(right, alphabet)
    notes = lp.notes + rp.notes
    if lp.word is not None and rp.word is not None:
        ok = same_element(lp.word, rp.word)
        parsed = f"{lp.word} = {rp.word}"
        exp_ok = same_element(expand_definitions(lp.word), expand_definitions(rp.word)) if ok else True
        entry = FiniteEntry(i, text, parsed, ok, exp_ok, notes)
    else:
        entry = FiniteEntry(i, text, None, False, True, notes)
    if not entry.as_printed and rp.word is not None:
        hits = _find_family_instance(left, rp.word)
        if len(hits) == 1:
            rel = hits[0]
            entry.correction = str(rel)
            entry.correction_family = rel.family
            entry.correction_ok = same_element(rel.lhs, rel.rhs)
            entry.expanded_ok = same_element(expand_definitions(rel.lhs), expand_definitions(rel.rhs))
        else:
            entry.notes.append(f"{len(hits)} family instances match the right side")
    return entry


def finite_lists():
    """(40-list report, 30-list report, correction list) for the finite presentations."""
    r40 = FiniteReport("finite-40", [_check_printed(i + 1, t, PI) for i, t in enumerate(FINITE_40)])
    image = TableReport("finite-40 under v->A, h->B, s->p")
    for e in r40.entries:
        left, right = e.printed.split("=")
        lw, rw = parse_printed_side(left, PI).word, parse_printed_side(right, PI).word
        if lw is not None and rw is not None:
            image.results.append(check_pair(pi_to_two_v(lw), pi_to_two_v(rw), f"#{e.index}", True))
    r40.image_report = image
    r30 = FiniteReport("finite-30", [_check_printed(i + 1, t, TWO_V) for i, t in enumerate(FINITE_30)])
    corrections = [(r.name, e.index, e.printed, e.correction) for r in (r40, r30) for e in r.corrections]
    return r40, r30, corrections


# -- definitions and the inductive steps ------------------------------------------------

DEFINITION_PRINTED = r"\overline{\pi}_i=A_0^{1-i}A\overline{\pi}_1A_0^{i-1}"


def verify_definitions(bound: int = 6) -> TableReport:
    rep = TableReport("definitional")
    for i in range(2, bound + 1):
        k = i - 1
        for x in "vhs":
            conj = " ".join(["v0^-1"] * k + [f"{x}1"] + ["v0"] * k)
            rep.results.append(check_pair(_w(f"{x}{i}", PI), _w(conj, PI), f"{x}_{i}"))
        for x in "ABpP":
            conj = " ".join(["A0^-1"] * k + [f"{x}1"] + ["A0"] * k)
            rep.results.append(check_pair(_w(f"{x}{i}", TWO_V), _w(conj, TWO_V), f"{x}_{i}"))
    for m in range(bound + 1):
        rhs = _w(f"P{m} B{m} P{m + 1} p{m} B{m} p{m + 1} A{m}^-1", TWO_V)
        rep.results.append(check_pair(_w(f"C{m}", TWO_V), rhs, f"C_{m} elimination"))
    rep.notes.append("the printed conjugation for pibar_i carries an unsubscripted A between "
                     "A_0^{1-i} and pibar_1; it is read without it")
    # the printed form, taking the stray symbol as A_0, A_1 or nothing
    for i in range(2, 4):
        k = i - 1
        for stray in ("A0", "A1"):
            conj = " ".join(["A0^-1"] * k + [stray, "P1"] + ["A0"] * k)
            if same_element(_w(f"P{i}", TWO_V), _w(conj, TWO_V)):
                rep.notes.append(f"with the stray symbol read as {stray} the i={i} case also holds")
    return rep


def verify_inductive(limit: int = 5) -> TableReport:
    """The conjugation chains used to reduce the infinite families to finite lists."""
    rep = TableReport("inductive")
    P = PI

    def chain(label, texts):
        words = [_w(t, P) for t in texts]
        for a, b in zip(words, words[1:]):
            rep.results.append(check_pair(a, b, label))

    for j in range(2, limit + 1):
        chain(f"v-step j={j}", [f"v1^-1 v{j + 2} v1", f"v1^-1 v2^-1 v{j + 1} v2 v1",
                                f"v3^-1 v{j + 2} v3", f"v{j + 3}"])
    for j in range(0, limit + 1):
        for i in range(j + 4, j + 4 + limit):
            chain(f"sigma-x step j={j} i={i}", [f"s{j} v{i} s{j}", f"s{j} v{i - 2}^-1 v{i - 1} v{i - 2} s{j}",
                                                f"v{i - 2}^-1 v{i - 1} v{i - 2}", f"v{i}"])
            chain(f"sigma-sigma step j={j} i={i}", [f"s{j} s{i} s{j}", f"s{j} v{i - 2}^-1 s{i - 1} v{i - 2} s{j}",
                                                    f"v{i - 2}^-1 s{i - 1} v{i - 2}", f"s{i}"])
    base = ["v1^-1 v2 v1 = v3", "v1^-1 v3 v1 = v4", "v1^-1 h2 v1 = h3", "v1^-1 h3 v1 = h4",
            "h0^-1 v1 h0 = v2", "h1^-1 v2 h1 = v3", "h0^-1 v2 h0 = v3", "h1^-1 v3 h1 = v4",
            "h0^-1 h1 h0 = h2", "h1^-1 h2 h1 = h3", "h0^-1 h2 h0 = h3", "h1^-1 h3 h1 = h4"]
    for b in base:
        left, right = b.split("=")
        rep.results.append(check_pair(_w(left, P), _w(right, P), "base"))
    for i in range(limit + 1):
        for k in range(1, limit + 1):
            rep.results.append(check_pair(_w(f"v{i}^-1 v{i + k} v{i}", P), _w(f"v{i + k + 1}", P),
                                          f"v conjugation i={i} k={k}"))
    return rep


# -- derivations and shapes ------------------------------------------------------------

def derivation_chains(bound: int = 4) -> list:
    """(label, [word texts]) for each displayed chain; consecutive terms must agree."""
    out = []
    for r in range(bound + 1):
        out.append((f"raise C r={r}", [f"C{r}", f"C{r + 1} B{r} p{r + 1} A{r}^-1"]))
        out.append((f"raise pibar r={r}", [f"P{r}", f"p{r} P{r + 1} A{r}^-1", f"A{r} P{r + 1} p{r}"]))
        out.append((f"C elimination m={r}", [f"C{r}", f"P{r} B{r} P{r + 1} p{r} B{r} p{r + 1} A{r}^-1"]))
    for q in range(bound + 1):
        for r in range(q, bound + 1):
            pre = " ".join(f"A{i} p{i + 1} B{i}^-1" for i in range(q, r + 1))
            out.append((f"C^-1 A q={q} r={r}", [f"C{q}^-1 A{r}", f"{pre} C{r + 1}^-1 A{r}",
                                                f"{pre} A{r} C{r + 2}^-1"]))
    for q in range(bound + 1):
        for r in range(q + 1, bound + 1):
            a_s = " ".join(f"A{i}" for i in range(q, r))
            pis = " ".join(f"p{i}" for i in range(r - 1, q - 1, -1))
            pis2 = " ".join(f"p{i}" for i in range(r - 2, q - 1, -1))
            out.append((f"pibar A q={q} r={r}", [
                f"P{q} A{r}", f"{a_s} P{r} {pis} A{r}", f"{a_s} P{r} p{r - 1} A{r} {pis2}",
                f"{a_s} P{r} A{r - 1} p{r} {pis}", f"{a_s} A{r - 1} P{r + 1} p{r} {pis}"]))
    for q in range(bound + 1):
        for r in range(0, q + 2):
            tail = " ".join(f"B{i} p{i + 1} A{i}^-1" for i in range(q + 1, r - 1, -1))
            out.append((f"pi C q={q} r={r}", [f"p{q} C{r}", f"p{q} C{q + 2} {tail}",
                                              f"C{q + 2} p{q} {tail}"]))
    for q in range(bound + 1):
        for r in range(q + 2, bound + 2):
            a_s = " ".join(f"A{i}" for i in range(q, r - 1))
            pis = " ".join(f"p{i}" for i in range(r - 2, q - 1, -1))
            out.append((f"pibar C q={q} r={r}", [
                f"P{q} C{r}", f"{a_s} P{r - 1} {pis} C{r}", f"{a_s} P{r - 1} C{r} {pis}",
                f"{a_s} B{r - 1} P{r} p{r - 1} {pis}"]))
    for q in range(bound + 1):
        for r in range(0, q + 1):
            bs = " ".join(f"B{i}" for i in range(q, r - 1, -1))
            bs_low = " ".join(f"B{i}" for i in range(q - 1, r - 1, -1))
            factors = [f"p{2 * q - r + 1 - 2 * k} A{2 * q - r - 2 * k}^-1" for k in range(q - r + 1)]
            pf = " ".join(factors)
            rest = " ".join(factors[1:])
            raised = " ".join(f"B{i} p{i + 1} A{i}^-1" for i in range(q, r - 1, -1))
            s = 2 * q - r
            out.append((f"pibar C q={q} r={r}", [
                f"C{r}", f"C{q + 1} {raised}", f"C{q + 1} {bs} {pf}"]))
            out.append((f"pibar C long q={q} r={r}", [
                f"P{q} C{r}",
                f"P{q} C{q + 1} {bs} {pf}",
                f"B{q} P{q + 1} p{q} {bs} {pf}",
                f"B{q} P{q + 1} B{q + 1} p{q} p{q + 1} {bs_low} {pf}",
                f"B{q} P{q + 1} B{q + 1} {bs_low} p{s} p{s + 1} {pf}",
                f"B{q} P{q + 1} B{q + 1} {bs_low} p{s} A{s}^-1 {rest}",
                f"B{q} C{q + 2} p{q + 1} P{q + 2} {bs_low} p{s} A{s}^-1 {rest}",
                f"B{q} {bs_low} C{s + 2} p{s + 1} P{s + 2} p{s} A{s}^-1 {rest}"]))
    return out


# schematic right sides: w(...) is any word in the listed letters, a bare
# letter must occur; "-" marks an inverse
SHAPES = (
    ("B_q^-1 A_r", lambda q, r: r != q, "B{q}^-1 A{r}", "A B-"),
    ("B_q^-1 A_r", lambda q, r: r == q, "B{q}^-1 A{r}", "w(A) p w(B-)"),
    ("A_q^-1 A_r", lambda q, r: r != q, "A{q}^-1 A{r}", "A A-"),
    ("C_q^-1 A_r", lambda q, r: r < q, "C{q}^-1 A{r}", "A C-"),
    ("C_q^-1 A_r", lambda q, r: r >= q, "C{q}^-1 A{r}", "w(A, p, B-) C-"),
    ("pi_q A_r", lambda q, r: True, "p{q} A{r}", "A w(p)"),
    ("pibar_q A_r", lambda q, r: r < q, "P{q} A{r}", "A P"),
    ("pibar_q A_r", lambda q, r: r == q, "P{q} A{r}", "p P"),
    ("pibar_q A_r", lambda q, r: r > q, "P{q} A{r}", "w(A) P w(p)"),
    ("A_q^-1 B_r", lambda q, r: r != q, "A{q}^-1 B{r}", "B A-"),
    ("A_q^-1 B_r", lambda q, r: r == q, "A{q}^-1 B{r}", "w(B) p w(A-)"),
    ("C_q^-1 B_r", lambda q, r: r < q, "C{q}^-1 B{r}", "B C-"),
    ("C_q^-1 B_r", lambda q, r: r >= q, "C{q}^-1 B{r}", "w(A, p, B-) C-"),
    ("pi_q B_r", lambda q, r: True, "p{q} B{r}", "B w(p)"),
    ("pibar_q B_r", lambda q, r: r < q, "P{q} B{r}", "B P"),
    ("pibar_q B_r", lambda q, r: r == q, "P{q} B{r}", "C p P"),
    ("pibar_q B_r", lambda q, r: r > q, "P{q} B{r}", "w(A) B P w(p)"),
    ("A_q^-1 C_r", lambda q, r: q < r, "A{q}^-1 C{r}", "C A-"),
    ("A_q^-1 C_r", lambda q, r: q >= r, "A{q}^-1 C{r}", "C w(A-, p, B)"),
    ("B_q^-1 C_r", lambda q, r: q < r, "B{q}^-1 C{r}", "C B-"),
    ("B_q^-1 C_r", lambda q, r: q >= r, "B{q}^-1 C{r}", "C w(A-, p, B)"),
    ("C_q^-1 C_r", lambda q, r: r < q, "C{q}^-1 C{r}", "w(A-, p, B)"),
    ("C_q^-1 C_r", lambda q, r: r > q, "C{q}^-1 C{r}", "w(A, p, B-)"),
    ("pi_q C_r", lambda q, r: r > q + 1, "p{q} C{r}", "C p"),
    ("pi_q C_r", lambda q, r: r <= q + 1, "p{q} C{r}", "C w(A-, p, B)"),
    ("pibar_q C_r", lambda q, r: r == q + 1, "P{q} C{r}", "B P p"),
    ("pibar_q C_r", lambda q, r: r > q + 1, "P{q} C{r}", "w(A) B P w(p)"),
    ("pibar_q C_r", lambda q, r: r < q + 1, "P{q} C{r}", "w(B) C p P w(p, A-)"),
)


def _shape_classes(shape: str):
    """(allowed signed kinds, required signed kinds) of a schematic word."""
    allowed, required = set(), set()
    for m in re.finditer(r"w\(([^)]*)\)|([ABCpP]-?)", shape):
        if m.group(1) is not None:
            allowed.update(x.strip() for x in m.group(1).split(","))
        else:
            allowed.add(m.group(2))
            required.add(m.group(2))
    return allowed, required


def _signed_kinds(w: Word) -> set:
    return {g.kind + ("-" if g.sign < 0 and g.kind in "ABC" else "") for g in w.letters}


def shape_matches(w: Word, shape: str) -> bool:
    """The canonical word of w uses only letters the schematic allows and every
    letter the schematic names explicitly."""
    canon = canonical_word_2v(eval_word(w)).word()
    allowed, required = _shape_classes(shape)
    kinds = _signed_kinds(canon)
    return kinds <= allowed and required <= kinds


@dataclass
class DerivationReport:
    chains: TableReport
    shapes: TableReport

    @property
    def passed(self):
        return self.chains.passed and self.shapes.passed

    def to_json(self):
        return {"passed": self.passed, "chains": self.chains.to_json(), "shapes": self.shapes.to_json()}

    def text(self):
        return self.chains.text() + "\n" + self.shapes.text()


def verify_derivations(bound: int = 4) -> DerivationReport:
    chains = TableReport("derivation chains")
    for label, texts in derivation_chains(bound):
        words = [_w(t, TWO_V) for t in texts]
        for n, (a, b) in enumerate(zip(words, words[1:])):
            chains.results.append(check_pair(a, b, f"{label} step {n + 1}"))
    shapes = TableReport("interchange shapes")
    for name, cond, fmt, shape in SHAPES:
        for q in range(bound + 1):
            for r in range(bound + 1):
                if not cond(q, r):
                    continue
                w = _w(fmt.format(q=q, r=r), TWO_V)
                ok = shape_matches(w, shape)
                canon = canonical_word_2v(eval_word(w)).word()
                shapes.results.append(PairResult(f"{name} q={q} r={r}", str(w), shape, ok,
                                                 "" if ok else f"[canonical: {canon}]"))
    return DerivationReport(chains, shapes)


# -- the sorting rewrite rule ------------------------------------------------------------

def rewrite_measure(w: Word) -> tuple:
    """Subscripts left to right. A step turns (j, i) into (i, j+1) with i < j,
    so this drops lexicographically, a well-founded order on words of one length."""
    return tuple(g.index for g in w.letters)


@dataclass
class RewritingReport:
    length_bound: int
    index_bound: int
    words: int = 0
    steps: int = 0
    measure_failures: list = field(default_factory=list)
    peaks: int = 0
    join_failures: list = field(default_factory=list)
    normal_form_failures: list = field(default_factory=list)
    max_join: int = 0
    # steps on which the count of inverted pairs does not drop (informational)
    inversion_count_stalls: int = 0
    inversion_count_example: tuple | None = None

    @property
    def passed(self):
        return not (self.measure_failures or self.join_failures or self.normal_form_failures)

    def to_json(self):
        d = dict(self.__dict__)
        d["passed"] = self.passed
        return d

    def text(self):
        return (f"rewriting: {self.words} words (length <= {self.length_bound}, indices <= "
                f"{self.index_bound}), {self.steps} steps, {self.peaks} peaks, longest join "
                f"{self.max_join}; measure failures {len(self.measure_failures)}, join failures "
                f"{len(self.join_failures)}, normal form failures {len(self.normal_form_failures)}"
                f"\n  inverted-pair count fails to drop on {self.inversion_count_stalls} steps"
                f" (e.g. {self.inversion_count_example})"
                f"\n{'PASS' if self.passed else 'FAIL'}")


def _within(w: Word, depth: int) -> dict:
    """Words reachable in at most depth steps, with their distance."""
    seen = {w: 0}
    frontier = [w]
    for d in range(1, depth + 1):
        nxt = []
        for x in frontier:
            for y in rewrite_steps(x):
                if y not in seen:
                    seen[y] = d
                    nxt.append(y)
        frontier = nxt
    return seen


def _normal_forms(w: Word, memo: dict) -> frozenset:
    if w in memo:
        return memo[w]
    succ = rewrite_steps(w)
    out = frozenset([w]) if not succ else frozenset().union(*(_normal_forms(s, memo) for s in succ))
    memo[w] = out
    return out


def check_rewriting(length_bound: int = 5, index_bound: int = 4, join_bound: int = 2) -> RewritingReport:
    rep = RewritingReport(length_bound, index_bound)
    letters = [Generator(k, i) for k in "vh" for i in range(index_bound + 1)]
    memo: dict = {}
    for n in range(length_bound + 1):
        for combo in itertools.product(letters, repeat=n):
            w = Word(PI, combo)
            rep.words += 1
            succ = rewrite_steps(w)
            mw, iw = rewrite_measure(w), inversions(w)
            for s in succ:
                rep.steps += 1
                if not rewrite_measure(s) < mw:
                    rep.measure_failures.append((str(w), str(s)))
                if not inversions(s) < iw:
                    rep.inversion_count_stalls += 1
                    if rep.inversion_count_example is None:
                        rep.inversion_count_example = (str(w), str(s))
            for a, b in itertools.combinations(succ, 2):
                rep.peaks += 1
                ra, rb = _within(a, join_bound), _within(b, join_bound)
                common = set(ra) & set(rb)
                if not common:
                    rep.join_failures.append((str(w), str(a), str(b)))
                else:
                    rep.max_join = max(rep.max_join, min(max(ra[c], rb[c]) for c in common))
            nfs = _normal_forms(w, memo)
            if nfs != {rewrite_sorted(w)}:
                rep.normal_form_failures.append((str(w), sorted(map(str, nfs))))
    return rep


# -- everything -----------------------------------------------------------------------------

def all_family_ids() -> list:
    return list(PI_FAMILIES) + list(TWO_V_FAMILIES)


def run_family(fam: str, bound: int = 6):
    """Report for one table id (a family number or a named table)."""
    if fam in PI_FAMILIES or fam in TWO_V_FAMILIES:
        return verify_family(fam, bound)
    if fam == "finite-40":
        return finite_lists()[0]
    if fam == "finite-30":
        return finite_lists()[1]
    if fam == "definitional":
        return verify_definitions(bound)
    if fam == "homomorphism":
        return verify_homomorphism(bound)
    if fam == "inductive":
        return verify_inductive(min(bound, 5))
    if fam == "derivations":
        return verify_derivations(min(bound, 4))
    if fam == "rewriting":
        return check_rewriting()
    raise KeyError(f"unknown table {fam!r}")


TABLE_IDS = tuple(all_family_ids()) + ("finite-40", "finite-30", "definitional",
                                      "homomorphism", "inductive", "derivations", "rewriting")


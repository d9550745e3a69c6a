"""Presentations by generators and relations, and their rewriting completion.

Source format (one statement per keyword, newlines are not significant):

    algebra T over cyclotomic(8)
    gens g, x
    rels g^2 - 1, x^2, xg + gx
    delta g = g # g
    delta x = x # g + 1 # x
    counit g = 1, x = 0

Products are juxtaposition or '*'; an identifier that is not a generator is
split into generator names (so ``gx`` means g*x). ``i`` is a primitive fourth
root of unity, ``zeta`` the chosen primitive N-th root, and ``[...]`` a scalar
in coordinate text form. ``--`` starts a comment.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field

from .algebra import StructAlgebra, algebra_verify
from .cyclo import FieldSpec
from .hopf.core import tensor_mul

KEYWORDS = ("algebra", "over", "gens", "rels", "delta", "counit")
DEFAULT_CAP = 16


class PresentationError(ValueError):
    def __init__(self, msg, line=None, col=None):
        self.line, self.col = line, col
        where = f"line {line}, column {col}: " if line is not None else ""
        super().__init__(where + msg)


class CompletionError(ValueError):
    pass


class InfiniteBasis(CompletionError):
    def __init__(self, count, cap):
        self.count, self.cap = count, cap
        super().__init__(f"dimension >= {count} at cap {cap}")


# -- noncommutative polynomials: dict word -> scalar, words are index tuples


def _padd(p, q, c=1):
    out = dict(p)
    for w, a in q.items():
        v = out.get(w)
        v = c * a if v is None else v + c * a
        if v:
            out[w] = v
        else:
            out.pop(w, None)
    return out


def _pmul(p, q):
    out = {}
    for w1, a in p.items():
        for w2, b in q.items():
            w = w1 + w2
            v = out.get(w)
            v = a * b if v is None else v + a * b
            if v:
                out[w] = v
            else:
                out.pop(w, None)
    return out


def _deglex(w):
    return (len(w), w)


def _lead(p):
    return max(p, key=_deglex)


# -- lexer / parser ---------------------------------------------------------

_TOKEN = re.compile(
    r"""
    (?P<ws>[ \t\r]+)
  | (?P<nl>\n)
  | (?P<comment>--[^\n]*)
  | (?P<text>\[[^\]]*\])
  | (?P<num>\d+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_']*)
  | (?P<op>[-+*/^#(),=])
    """,
    re.VERBOSE,
)


@dataclass
class Token:
    kind: str
    value: str
    line: int
    col: int


def tokenize(text):
    toks = []
    pos, line, start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise PresentationError(f"syntax error at {text[pos]!r}", line, pos - start + 1)
        kind = m.lastgroup
        if kind == "nl":
            line += 1
            start = m.end()
        elif kind not in ("ws", "comment"):
            toks.append(Token(kind, m.group(), line, m.start() - start + 1))
        pos = m.end()
    toks.append(Token("eof", "", line, pos - start + 1))
    return toks


@dataclass
class Presentation:
    name: str
    field: FieldSpec
    gens: list
    relations: list  # noncommutative polynomials
    delta: dict = dc_field(default_factory=dict)  # gen index -> {(w1, w2): c}
    counit: dict = dc_field(default_factory=dict)  # gen index -> scalar
    relation_text: list = dc_field(default_factory=list)


class _Parser:
    def __init__(self, text, field=None):
        self.toks = tokenize(text)
        self.k = 0
        self.field_override = field
        self.field = field

    @property
    def tok(self):
        return self.toks[self.k]

    def error(self, msg, tok=None):
        tok = tok or self.tok
        return PresentationError(msg, tok.line, tok.col)

    def next(self):
        t = self.tok
        self.k += 1
        return t

    def expect(self, kind, value=None):
        t = self.tok
        if t.kind != kind or (value is not None and t.value != value):
            want = value or kind
            got = t.value or t.kind
            raise self.error(f"expected {want!r}, found {got!r}")
        return self.next()

    def at(self, value):
        return self.tok.kind in ("op", "name") and self.tok.value == value

    def parse(self):
        self.expect("name", "algebra")
        # names may contain '-' (e.g. A4ppp_-i), so glue tokens up to 'over'
        name = self.expect("name").value
        while self.tok.kind != "eof" and not self.at("over"):
            name += self.next().value
        self.expect("name", "over")
        kw = self.expect("name")
        if kw.value != "cyclotomic":
            raise self.error("expected 'cyclotomic'", kw)
        self.expect("op", "(")
        nt = self.expect("num")
        self.expect("op", ")")
        if self.field is None:
            try:
                self.field = FieldSpec(int(nt.value))
            except ValueError as exc:
                raise self.error(str(exc), nt) from None
        self.expect("name", "gens")
        gens = []
        while True:
            t = self.expect("name")
            if t.value in KEYWORDS or t.value in ("i", "zeta"):
                raise self.error(f"reserved name {t.value!r} used as a generator", t)
            if t.value in gens:
                raise self.error(f"duplicate generator {t.value!r}", t)
            gens.append(t.value)
            if not self.at(","):
                break
            self.next()
        self.gens = gens
        P = Presentation(name, self.field, gens, [])
        while self.tok.kind != "eof":
            t = self.tok
            if t.kind != "name" or t.value not in ("rels", "delta", "counit"):
                raise self.error(f"unexpected {t.value!r}")
            self.next()
            if t.value == "rels":
                self._rels(P)
            elif t.value == "delta":
                self._delta(P)
            else:
                self._counit(P)
        for g_idx, g in enumerate(gens):
            if g_idx not in P.delta:
                raise PresentationError(f"missing delta assignment for generator {g!r}")
            if g_idx not in P.counit:
                raise PresentationError(f"missing counit assignment for generator {g!r}")
        return P

    def _list(self, item):
        while True:
            item()
            if not self.at(","):
                return
            self.next()

    def _rels(self, P):
        def one():
            start = self.tok
            sides = [self.poly()]
            while self.at("="):
                self.next()
                sides.append(self.poly())
            # a = b = c means a - b and b - c
            diffs = [_padd(a, b, -1) for a, b in zip(sides, sides[1:])] or sides
            for p in diffs:
                if p:
                    P.relations.append(p)
                    P.relation_text.append(f"line {start.line}")

        if self.tok.kind == "eof" or (self.tok.kind == "name" and self.tok.value in KEYWORDS):
            return  # no relations: a free algebra
        self._list(one)

    def _gen_ref(self):
        t = self.expect("name")
        if t.value not in self.gens:
            raise self.error(f"unknown generator {t.value!r}", t)
        return self.gens.index(t.value)

    def _delta(self, P):
        def one():
            g = self._gen_ref()
            self.expect("op", "=")
            P.delta[g] = self.tensor_sum()

        self._list(one)

    def _counit(self, P):
        def one():
            g = self._gen_ref()
            self.expect("op", "=")
            P.counit[g] = self.scalar_expr()

        self._list(one)

    # expressions ------------------------------------------------------------

    def scalar_expr(self):
        p = self.poly()
        if any(w for w in p):
            raise self.error("expected a scalar")
        return p.get((), self.field.zero())

    def tensor_sum(self):
        out = {}
        sign = 1
        if self.at("-"):
            self.next()
            sign = -1
        elif self.at("+"):
            self.next()
        while True:
            left = self.product()
            self.expect("op", "#")
            right = self.product()
            for w1, a in left.items():
                for w2, b in right.items():
                    key = (w1, w2)
                    v = out.get(key)
                    c = sign * a * b
                    v = c if v is None else v + c
                    if v:
                        out[key] = v
                    else:
                        out.pop(key, None)
            if self.at("+"):
                sign = 1
            elif self.at("-"):
                sign = -1
            else:
                return out
            self.next()

    def poly(self):
        sign = 1
        if self.at("-"):
            self.next()
            sign = -1
        elif self.at("+"):
            self.next()
        out = {}
        while True:
            out = _padd(out, self.product(), sign)
            if self.at("+"):
                sign = 1
            elif self.at("-"):
                sign = -1
            else:
                return out
            self.next()

    def _starts_atom(self):
        t = self.tok
        if t.kind in ("num", "text"):
            return True
        if t.kind == "name":
            return t.value not in KEYWORDS
        return t.kind == "op" and t.value == "("

    def product(self):
        out = self.power()
        while True:
            if self.at("*"):
                self.next()
                out = _pmul(out, self.power())
            elif self.at("/"):
                self.next()
                d = self.power()
                if any(w for w in d) or not d:
                    raise self.error("can only divide by a nonzero scalar")
                out = _pmul(out, {(): d[()].inv()})
            elif self._starts_atom():
                out = _pmul(out, self.power())
            else:
                return out

    def power(self):
        base = self.atom()
        if self.at("^"):
            self.next()
            e = int(self.expect("num").value)
            out = {(): self.field.one()}
            for _ in range(e):
                out = _pmul(out, base)
            return out
        return base

    def atom(self):
        t = self.tok
        F = self.field
        if t.kind == "num":
            self.next()
            return {(): F(int(t.value))} if int(t.value) else {}
        if t.kind == "text":
            self.next()
            items = re.findall(r'"([^"]*)"', t.value)
            try:
                c = F(F.from_text(items)) if items else None
            except Exception:
                c = None
            if c is None:
                raise self.error(f"bad scalar {t.value}", t)
            return {(): c} if c else {}
        if t.kind == "op" and t.value == "(":
            self.next()
            p = self.poly()
            self.expect("op", ")")
            return p
        if t.kind == "op" and t.value == "-":
            self.next()
            return _pmul({(): F(-1)}, self.atom())
        if t.kind == "name" and t.value not in KEYWORDS:
            self.next()
            if t.value == "i":
                return {(): F.i()}
            if t.value == "zeta":
                return {(): F.zeta(1)}
            word = self._split_word(t)
            return {word: F.one()}
        raise self.error(f"unexpected {t.value or t.kind!r}")

    def _split_word(self, t):
        if t.value in self.gens:
            return (self.gens.index(t.value),)
        word = []
        s = t.value
        pos = 0
        names = sorted(self.gens, key=len, reverse=True)
        while pos < len(s):
            for n in names:
                if s.startswith(n, pos):
                    word.append(self.gens.index(n))
                    pos += len(n)
                    break
            else:
                raise self.error(f"unknown generator in {s!r}", t)
        return tuple(word)


def parse_presentation(text, field=None):
    return _Parser(text, field).parse()


# -- rewriting ----------------------------------------------------------------


class RewritingSystem:
    """Monic rules lead -> tail under deglex."""

    def __init__(self, field):
        self.field = field
        self.rules = {}  # lead word -> tail polynomial

    def _find(self, w):
        for lead in self.rules:
            n = len(lead)
            for s in range(len(w) - n + 1):
                if w[s : s + n] == lead:
                    return lead, s
        return None

    def reduce(self, p):
        p = dict(p)
        while True:
            hit = None
            for w in sorted(p, key=_deglex, reverse=True):
                f = self._find(w)
                if f:
                    hit = (w, f)
                    break
            if hit is None:
                return p
            w, (lead, s) = hit
            c = p.pop(w)
            pre, post = w[:s], w[s + len(lead) :]
            repl = {pre + u + post: a for u, a in self.rules[lead].items()}
            p = _padd(p, repl, c)

    def add(self, p):
        """Add the relation p = 0; returns the new lead word or None."""
        p = self.reduce(p)
        if not p:
            return None
        lead = _lead(p)
        inv = p[lead].inv()
        tail = {w: -a * inv for w, a in p.items() if w != lead}
        # rules whose lead is now reducible are removed and re-added later
        bumped = []
        for old in list(self.rules):
            if any(old[s : s + len(lead)] == lead for s in range(len(old) - len(lead) + 1)):
                bumped.append(_padd({old: self.field.one()}, self.rules.pop(old), -1))
        self.rules[lead] = tail
        return lead, bumped


def _overlaps(l1, l2):
    """Ambiguity words where a suffix of l1 is a prefix of l2."""
    for k in range(1, min(len(l1), len(l2))):
        if l1[-k:] == l2[:k]:
            yield l1 + l2[k:], len(l1) - k


def complete(P, degree_cap=DEFAULT_CAP):
    R = RewritingSystem(P.field)
    pending = list(P.relations)
    while pending:
        changed = False
        while pending:
            res = R.add(pending.pop(0))
            if res:
                changed = True
                pending.extend(res[1])
        if not changed:
            break
        # resolve every ambiguity of bounded length
        for l1 in list(R.rules):
            for l2 in list(R.rules):
                if l1 not in R.rules or l2 not in R.rules:
                    continue
                for w, s in _overlaps(l1, l2):
                    if len(w) > degree_cap:
                        continue
                    a = _pmul(R.rules[l1], {w[len(l1) :]: P.field.one()})
                    b = _pmul({w[:s]: P.field.one()}, R.rules[l2])
                    d = R.reduce(_padd(a, b, -1))
                    if d:
                        pending.append(d)
            if pending:
                break
    return R


def irreducible_words(R, ngens, cap):
    words = [()]
    level = [()]
    for _ in range(cap):
        nxt = []
        for w in level:
            for g in range(ngens):
                u = w + (g,)
                if R._find(u) is None:
                    nxt.append(u)
        if not nxt:
            return sorted(words, key=_deglex), True
        words.extend(nxt)
        level = nxt
    return sorted(words, key=_deglex), False


def word_text(w, gens):
    if not w:
        return "1"
    out = []
    k = 0
    while k < len(w):
        j = k
        while j < len(w) and w[j] == w[k]:
            j += 1
        n = j - k
        out.append(gens[w[k]] + (f"^{n}" if n > 1 else ""))
        k = j
    return "".join(out)


@dataclass
class CompletedPresentation:
    presentation: Presentation
    basis: list  # words
    labels: tuple
    algebra: StructAlgebra
    comult: tuple  # per basis element, dict (i, j) -> scalar
    counit: tuple


def complete_rewriting(P, degree_cap=DEFAULT_CAP):
    F = P.field
    R = complete(P, degree_cap)
    words, finite = irreducible_words(R, len(P.gens), degree_cap)
    if not finite:
        raise InfiniteBasis(len(words), degree_cap)
    index = {w: k for k, w in enumerate(words)}
    d = len(words)

    def coords(p):
        p = R.reduce(p)
        return {index[w]: a for w, a in p.items()}

    entries = []
    for a, u in enumerate(words):
        for b, v in enumerate(words):
            for k, c in coords({u + v: F.one()}).items():
                entries.append((a, b, k, c))
    unit = tuple(F.one() if k == 0 else F.zero() for k in range(d))
    labels = tuple(word_text(w, P.gens) for w in words)
    A = StructAlgebra.from_entries(F, d, entries, unit, labels)
    problems = algebra_verify(A)
    if problems:
        raise CompletionError(f"rewriting not confluent within cap {degree_cap}: {problems[0]}")
    for rel in P.relations:
        if R.reduce(rel):
            raise CompletionError("a relation does not vanish in the completed algebra")

    # comultiplication and counit on generators, extended multiplicatively
    gen_delta = []
    gen_eps = []
    for g in range(len(P.gens)):
        t = {}
        for (w1, w2), c in P.delta[g].items():
            for i, a in coords({w1: F.one()}).items():
                for j, b in coords({w2: F.one()}).items():
                    v = t.get((i, j))
                    v = c * a * b if v is None else v + c * a * b
                    if v:
                        t[(i, j)] = v
                    else:
                        t.pop((i, j), None)
        gen_delta.append(t)
        gen_eps.append(F(P.counit[g]))

    comult = []
    counit = []
    for w in words:
        t = {(0, 0): F.one()}
        e = F.one()
        for g in w:
            t = tensor_mul(A, t, gen_delta[g])
            e = e * gen_eps[g]
        comult.append(t)
        counit.append(e)
    return CompletedPresentation(P, words, labels, A, tuple(comult), tuple(counit))


__all__ = [
    "Presentation",
    "PresentationError",
    "CompletionError",
    "InfiniteBasis",
    "CompletedPresentation",
    "parse_presentation",
    "complete_rewriting",
    "tensor_mul",
]

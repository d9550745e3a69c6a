"""Exact arithmetic in the cyclotomic fields Q(zeta_N), N a power of two.

Elements are stored in the power basis 1, z, ..., z^(d-1) with d = N/2,
as a tuple of integer numerators over one positive common denominator.
Since Phi_N(x) = x^d + 1 for N a power of two, reduction is negacyclic.
"""

from __future__ import annotations

import cmath
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

ALLOWED_CONDUCTORS = (2, 4, 8, 16, 32)
DEFAULT_CONDUCTOR = 8
DEFAULT_DENOM_BOUND = 2**16


class FieldError(ValueError):
    pass


def _normalize(num, den):
    if den == 1:
        return tuple(num), 1
    if den < 0:
        num = [-a for a in num]
        den = -den
    g = math.gcd(den, *num)
    if g != 1:
        num = [a // g for a in num]
        den //= g
    return tuple(num), den


class CycScalar:
    """An element of Q(zeta_N) in canonical form (reduced, lowest terms)."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=1):
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        self.num, self.den = _normalize(list(num), den)
        self._hash = None

    @classmethod
    def _raw(cls, num, den):
        obj = object.__new__(cls)
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def from_coords(cls, coords):
        """Build from a sequence of rationals (anything Fraction accepts)."""
        fr = [Fraction(c) for c in coords]
        den = math.lcm(*(f.denominator for f in fr)) if fr else 1
        return cls([f.numerator * (den // f.denominator) for f in fr], den)

    @classmethod
    def rational(cls, value, degree):
        f = Fraction(value)
        return cls._raw((f.numerator,) + (0,) * (degree - 1), f.denominator)

    # -- basic properties -------------------------------------------------

    @property
    def degree(self):
        return len(self.num)

    @property
    def conductor(self):
        return 2 * len(self.num)

    @property
    def coords(self):
        return tuple(Fraction(a, self.den) for a in self.num)

    def is_zero(self):
        return not any(self.num)

    def __bool__(self):
        return any(self.num)

    def is_rational(self):
        return not any(self.num[1:])

    def to_fraction(self):
        if not self.is_rational():
            raise FieldError(f"{self!r} is not rational")
        return Fraction(self.num[0], self.den)

    def is_one(self):
        return self.den == 1 and self.num[0] == 1 and not any(self.num[1:])

    # -- coercion -----------------------------------------------------------

    def lift(self, degree):
        """Embed into Q(zeta_{2*degree}) via zeta_N = zeta_M^(M/N)."""
        d = len(self.num)
        if degree == d:
            return self
        if degree % d:
            raise FieldError(f"cannot embed degree {d} field into degree {degree}")
        step = degree // d
        num = [0] * degree
        for k, a in enumerate(self.num):
            num[k * step] = a
        return CycScalar._raw(tuple(num), self.den)

    def _coerce(self, other):
        if isinstance(other, CycScalar):
            d, e = len(self.num), len(other.num)
            if d == e:
                return self, other
            if d < e:
                return self.lift(e), other
            return self, other.lift(d)
        if isinstance(other, (int, Fraction)):
            return self, CycScalar.rational(other, len(self.num))
        return None, None

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        if type(other) is CycScalar and len(other.num) == len(self.num):
            a, b = self, other
            if a.den == 1 and b.den == 1:
                return CycScalar._raw(tuple(x + y for x, y in zip(a.num, b.num)), 1)
        else:
            a, b = self._coerce(other)
            if a is None:
                return NotImplemented
        if a.den == b.den:
            num = [x + y for x, y in zip(a.num, b.num)]
            return CycScalar(num, a.den)
        num = [x * b.den + y * a.den for x, y in zip(a.num, b.num)]
        return CycScalar(num, a.den * b.den)

    __radd__ = __add__

    def __neg__(self):
        return CycScalar._raw(tuple(-x for x in self.num), self.den)

    def __sub__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return b + (-a)

    def __mul__(self, other):
        if type(other) is CycScalar and len(other.num) == len(self.num):
            a, b = self, other
        else:
            a, b = self._coerce(other)
            if a is None:
                return NotImplemented
        an, bn = a.num, b.num
        if not any(an) or not any(bn):
            return CycScalar._raw((0,) * len(an), 1)
        if not any(bn[1:]):
            c = bn[0]
            return CycScalar([x * c for x in an], a.den * b.den)
        if not any(an[1:]):
            c = an[0]
            return CycScalar([x * c for x in bn], a.den * b.den)
        d = len(an)
        out = [0] * d
        for i, x in enumerate(an):
            if x:
                for j, y in enumerate(bn):
                    if y:
                        k = i + j
                        if k < d:
                            out[k] += x * y
                        else:
                            out[k - d] -= x * y
        return CycScalar(out, a.den * b.den)

    __rmul__ = __mul__

    def inv(self):
        if not any(self.num):
            raise ZeroDivisionError("inverse of zero in Q(zeta)")
        if self.is_rational():
            c = self.num[0]
            out = [0] * len(self.num)
            out[0] = self.den
            return CycScalar(out, c)
        n = self.conductor
        prod = None
        for j in range(3, n, 2):
            c = self.conj(j)
            prod = c if prod is None else prod * c
        norm = (self * prod).to_fraction()
        return prod * (1 / norm)

    def __truediv__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return a * b.inv()

    def __rtruediv__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return b * a.inv()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inv() ** (-n)
        result = CycScalar.rational(1, len(self.num))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self, j):
        """Galois conjugate zeta -> zeta^j (j odd)."""
        n = self.conductor
        if n > 2 and j % 2 == 0:
            raise FieldError(f"Galois index {j} is not coprime to {n}")
        d = len(self.num)
        j %= n
        out = [0] * d
        for k, a in enumerate(self.num):
            if a:
                m = (k * j) % n
                if m < d:
                    out[m] += a
                else:
                    out[m - d] -= a
        return CycScalar._raw(tuple(out), self.den)

    def norm(self):
        """Field norm down to Q."""
        n = self.conductor
        prod = CycScalar.rational(1, len(self.num))
        for j in range(1, n, 2):
            prod = prod * self.conj(j)
        return prod.to_fraction()

    def embed(self, index=0):
        """Complex value under zeta -> exp(2 pi i (2*index+1)/N); approximate."""
        return complex_embedding(self.num, self.den, index)

    # -- comparisons / hashing ------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, CycScalar):
            if len(self.num) != len(other.num):
                a, b = self._coerce(other)
                return a.num == b.num and a.den == b.den
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self.num[0], self.den) == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            # rational values hash like their Fraction so that lifts agree
            if self.is_rational():
                self._hash = hash(Fraction(self.num[0], self.den))
            else:
                self._hash = hash((self.num, self.den))
        return self._hash

    def sort_key(self):
        return self.coords

    # -- text forms -------------------------------------------------------------

    def to_text(self):
        return [f"{c.numerator}/{c.denominator}" for c in self.coords]

    @classmethod
    def from_text(cls, items):
        return cls.from_coords(Fraction(s) for s in items)

    def __repr__(self):
        return f"Cyc{self.conductor}({self.pretty()})"

    def pretty(self):
        """Human-readable form in z = zeta_N."""
        terms = []
        for k, c in enumerate(self.coords):
            if not c:
                continue
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


@lru_cache(maxsize=None)
def _embedding_powers(degree, index):
    n = 2 * degree
    w = cmath.exp(2j * math.pi * (2 * index + 1) / n)
    return tuple(w**k for k in range(degree))


def complex_embedding(num, den, index=0):
    powers = _embedding_powers(len(num), index)
    re = math.fsum(a * p.real for a, p in zip(num, powers))
    im = math.fsum(a * p.imag for a, p in zip(num, powers))
    return complex(re, im) / den


@dataclass(frozen=True)
class FieldSpec:
    conductor: int = DEFAULT_CONDUCTOR

    def __post_init__(self):
        if self.conductor not in ALLOWED_CONDUCTORS:
            raise FieldError(f"unsupported conductor {self.conductor}; use one of {ALLOWED_CONDUCTORS}")

    @property
    def degree(self):
        return max(1, self.conductor // 2)

    def zero(self):
        return CycScalar._raw((0,) * self.degree, 1)

    def one(self):
        return CycScalar.rational(1, self.degree)

    def __call__(self, value):
        """Coerce an int, Fraction or CycScalar into this field."""
        if isinstance(value, CycScalar):
            if value.degree > self.degree:
                raise FieldError(f"{value!r} does not live in Q(zeta_{self.conductor})")
            return value.lift(self.degree)
        return CycScalar.rational(value, self.degree)

    def zeta(self, power=1):
        """zeta_N^power."""
        n, d = self.conductor, self.degree
        power %= n
        num = [0] * d
        if power < d:
            num[power] = 1
        else:
            num[power - d] = -1
        return CycScalar._raw(tuple(num), 1)

    def i(self):
        if self.conductor < 4:
            raise FieldError("i requires conductor >= 4")
        return self.zeta(self.conductor // 4)

    def sqrt2(self):
        if self.conductor < 8:
            raise FieldError("sqrt(2) requires conductor >= 8")
        z = self.zeta(self.conductor // 8)
        return z - z**3

    def from_text(self, items):
        value = CycScalar.from_text(items)
        return self(value)

    def galois_indices(self):
        return list(range(1, self.conductor, 2))

    def contains(self, value):
        return value.degree <= self.degree


def default_field():
    env = os.environ.get("HOPFKIT_FIELD")
    if env:
        return FieldSpec(int(env))
    return FieldSpec(DEFAULT_CONDUCTOR)


def join_fields(*fields):
    return FieldSpec(max(f.conductor for f in fields))


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------


class CycPoly:
    """Univariate polynomial with CycScalar coefficients, lowest degree first."""

    __slots__ = ("coeffs", "degree_field")

    def __init__(self, coeffs, degree_field=None):
        coeffs = list(coeffs)
        if degree_field is None:
            degree_field = max((c.degree for c in coeffs if isinstance(c, CycScalar)), default=1)
        fixed = []
        for c in coeffs:
            if isinstance(c, CycScalar):
                fixed.append(c.lift(degree_field) if c.degree < degree_field else c)
            else:
                fixed.append(CycScalar.rational(c, degree_field))
        while fixed and not fixed[-1]:
            fixed.pop()
        self.coeffs = tuple(fixed)
        self.degree_field = degree_field

    @classmethod
    def x(cls, degree_field):
        return cls([0, 1], degree_field)

    @classmethod
    def from_roots(cls, roots, degree_field):
        p = cls([1], degree_field)
        for r in roots:
            p = p * cls([-r, 1], degree_field)
        return p

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def lead(self):
        return self.coeffs[-1]

    def _zero(self):
        return CycScalar.rational(0, self.degree_field)

    def __eq__(self, other):
        if not isinstance(other, CycPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        z = self._zero()
        a = self.coeffs + (z,) * (n - len(self.coeffs))
        b = other.coeffs + (z,) * (n - len(other.coeffs))
        return CycPoly([x + y for x, y in zip(a, b)], max(self.degree_field, other.degree_field))

    def __neg__(self):
        return CycPoly([-c for c in self.coeffs], self.degree_field)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (CycScalar, int, Fraction)):
            return CycPoly([c * other for c in self.coeffs], self.degree_field)
        if self.is_zero() or other.is_zero():
            return CycPoly([], max(self.degree_field, other.degree_field))
        out = [self._zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = out[i + j] + a * b
        return CycPoly(out, max(self.degree_field, other.degree_field))

    __rmul__ = __mul__

    def divmod(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return CycPoly([], self.degree_field), self
        inv_lead = other.lead().inv()
        quot = [self._zero()] * (dq + 1)
        for k in range(dq, -1, -1):
            c = rem[k + len(other.coeffs) - 1] * inv_lead
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] = rem[k + j] - c * b
        df = max(self.degree_field, other.degree_field)
        return CycPoly(quot, df), CycPoly(rem[: len(other.coeffs) - 1], df)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self):
        if self.is_zero():
            return self
        inv = self.lead().inv()
        return CycPoly([c * inv for c in self.coeffs], self.degree_field)

    def gcd(self, other):
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def derivative(self):
        return CycPoly([c * k for k, c in enumerate(self.coeffs)][1:], self.degree_field)

    def __call__(self, value):
        acc = self._zero()
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    eval = __call__

    def conj(self, j):
        return CycPoly([c.conj(j) for c in self.coeffs], self.degree_field)

    def complex_coeffs(self, index):
        return [complex_embedding(c.num, c.den, index) for c in self.coeffs]

    def __repr__(self):
        return f"CycPoly({list(self.coeffs)!r})"


def poly_arithmetic(p, q, op):
    """Dispatch helper mirroring the documented operation set."""
    if op == "add":
        return p + q
    if op == "mul":
        return p * q
    if op == "divmod":
        return p.divmod(q)
    if op == "gcd":
        return p.gcd(q)
    if op == "eval":
        return p(q)
    raise ValueError(f"unknown polynomial op {op!r}")


def scalar_arithmetic(a, b=None, op="add", index=1):
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inv()
    if op == "conj_j":
        return a.conj(index)
    if op == "embed":
        return a.embed(index)
    raise ValueError(f"unknown scalar op {op!r}")


# ---------------------------------------------------------------------------
# verified roots
# ---------------------------------------------------------------------------

_MAX_COMBINATIONS = 1 << 18


@lru_cache(maxsize=None)
def _inverse_vandermonde(degree):
    n = 2 * degree
    js = list(range(1, n, 2))
    V = np.array([[cmath.exp(2j * math.pi * j * k / n) for k in range(degree)] for j in js])
    return np.linalg.inv(V)


_TOL = 1e-11


def _near_rational(values, bound):
    """Vectorized continued-fraction test: is each value within tolerance of
    a rational with denominator <= bound?"""
    x = np.asarray(values, dtype=float)
    tol = _TOL * np.maximum(1.0, np.abs(x))
    a = np.floor(x)
    h_prev, h = np.ones_like(x), a
    k_prev, k = np.zeros_like(x), np.ones_like(x)
    frac = x - a
    ok = np.abs(x - h / k) < tol
    active = ~ok
    for _ in range(48):
        if not active.any():
            break
        step = active & (frac > 1e-300)
        y = np.where(step, 1.0 / np.where(step, frac, 1.0), 0.0)
        a = np.floor(y)
        h_new = a * h + h_prev
        k_new = a * k + k_prev
        step &= k_new <= bound
        h_prev, h = np.where(step, h, h_prev), np.where(step, h_new, h)
        k_prev, k = np.where(step, k, k_prev), np.where(step, k_new, k)
        frac = np.where(step, y - a, frac)
        hit = step & (np.abs(x - h / k) < tol)
        ok |= hit
        active = step & ~hit
    return ok


def _rationalize(x, bound):
    f = Fraction(x).limit_denominator(bound)
    if abs(float(f) - x) > _TOL * max(1.0, abs(x)):
        return None
    return f


def _candidates(p, denom_bound):
    """Propose exact roots of a squarefree p by numeric isolation in all embeddings."""
    d = p.degree_field
    n = 2 * d
    js = list(range(1, n, 2))
    half = [0] if d == 1 else list(range(d // 2))
    roots_per = []
    for idx in half:
        cc = p.complex_coeffs(idx)
        roots_per.append(np.roots(cc[::-1]) if len(cc) > 1 else np.array([]))
    counts = [len(r) for r in roots_per]
    if not counts or 0 in counts or math.prod(counts) > _MAX_COMBINATIONS:
        return []
    grids = np.meshgrid(*roots_per, indexing="ij")
    chosen = np.stack([g.reshape(-1) for g in grids], axis=1)
    if d == 1:
        full = chosen
    else:
        # embeddings j and n - j are complex conjugate
        full = np.empty((chosen.shape[0], d), dtype=complex)
        for pos, j in enumerate(js):
            if j < n // 2:
                full[:, pos] = chosen[:, js.index(j)]
            else:
                full[:, pos] = np.conj(chosen[:, js.index(n - j)])
    coords = full @ _inverse_vandermonde(d).T
    ok = np.all(np.abs(coords.imag) < 1e-6, axis=1)
    ok &= np.all(_near_rational(coords.real, denom_bound), axis=1)
    found = []
    for row in coords[ok]:
        fr = [_rationalize(float(v.real), denom_bound) for v in row]
        if any(f is None for f in fr):
            continue
        found.append(CycScalar.from_coords(fr).lift(d))
    return found


def verified_roots(p, denom_bound=DEFAULT_DENOM_BOUND):
    """Return (roots, certified_complete); each root is verified exactly.

    roots maps each distinct root to its multiplicity.
    """
    if p.is_zero():
        raise ValueError("verified_roots of the zero polynomial")
    if p.degree == 0:
        return {}, True
    square_free = p // p.gcd(p.derivative())
    roots = {}
    for r in _candidates(square_free, denom_bound):
        if r in roots or square_free(r):
            continue
        roots[r] = 0
    # multiplicities by exact division
    total = 0
    for r in roots:
        q = p
        lin = CycPoly([-r, 1], p.degree_field)
        m = 0
        while True:
            quot, rem = q.divmod(lin)
            if not rem.is_zero():
                break
            q = quot
            m += 1
        roots[r] = m
        total += m
    ordered = dict(sorted(roots.items(), key=lambda kv: kv[0].sort_key()))
    return ordered, total == p.degree


def roots_of_unity_order(value, limit=64):
    """Least n >= 1 with value^n == 1, or None."""
    one = CycScalar.rational(1, value.degree)
    acc = value
    for n in range(1, limit + 1):
        if acc == one:
            return n
        acc = acc * value
    return None


__all__ = [
    "CycScalar",
    "CycPoly",
    "FieldSpec",
    "FieldError",
    "default_field",
    "join_fields",
    "verified_roots",
    "poly_arithmetic",
    "scalar_arithmetic",
    "roots_of_unity_order",
    "DEFAULT_DENOM_BOUND",
]

"""Exact arithmetic over Q and simple extensions Q(a) given by a minimal polynomial.

Elements are stored as coordinate vectors in the power basis 1, a, ..., a^(d-1)
with Fraction entries, so equality is decidable and all arithmetic is exact.
A degree-1 field is Q itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import ZeroDivisorDetected

Rat = Fraction


# ---------------------------------------------------------------------------
# dense univariate polynomials over Q, coefficients low -> high
# ---------------------------------------------------------------------------

def poly_trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_add(p, q):
    n = max(len(p), len(q))
    out = [Rat(0)] * n
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return poly_trim(out)


def poly_sub(p, q):
    return poly_add(p, [-c for c in q])


def poly_mul(p, q):
    if not p or not q:
        return []
    out = [Rat(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return poly_trim(out)


def poly_scale(p, c):
    if c == 0:
        return []
    return [a * c for a in p]


def poly_divmod(p, q):
    """Quotient and remainder in Q[x]; q must be nonzero."""
    if not q:
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(p)
    quo = [Rat(0)] * max(0, len(p) - len(q) + 1)
    dq = len(q) - 1
    lead = q[-1]
    while len(poly_trim(rem)) - 1 >= dq and rem:
        rem = poly_trim(rem)
        if not rem or len(rem) - 1 < dq:
            break
        k = len(rem) - 1 - dq
        c = rem[-1] / lead
        quo[k] = c
        for i, b in enumerate(q):
            rem[k + i] -= c * b
        rem = poly_trim(rem) + []
    return poly_trim(quo), poly_trim(rem)


def poly_gcd(p, q):
    """Monic gcd in Q[x]."""
    a, b = poly_trim(p), poly_trim(q)
    while b:
        _, r = poly_divmod(a, b)
        a, b = b, r
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def poly_xgcd(p, q):
    """Extended gcd: returns (g, s, t) with s*p + t*q = g, g monic."""
    a, b = poly_trim(p), poly_trim(q)
    sa, sb = [Rat(1)], []
    ta, tb = [], [Rat(1)]
    while b:
        quo, r = poly_divmod(a, b)
        a, b = b, r
        sa, sb = sb, poly_sub(sa, poly_mul(quo, sb))
        ta, tb = tb, poly_sub(ta, poly_mul(quo, tb))
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
        sa = [c / lead for c in sa]
        ta = [c / lead for c in ta]
    return a, sa, ta


def poly_derivative(p):
    return poly_trim([i * c for i, c in enumerate(p)][1:])


def poly_eval(p, x):
    acc = Rat(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _divisors(n):
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def rational_roots(coeffs):
    """All rational roots of a nonzero polynomial with Fraction coefficients."""
    p = poly_trim([Rat(c) for c in coeffs])
    if not p:
        raise ValueError("zero polynomial has every rational root")
    roots = []
    # strip zero roots
    shift = 0
    while p[shift] == 0:
        shift += 1
    if shift:
        roots.append(Rat(0))
        p = p[shift:]
    if len(p) == 1:
        return roots
    den = math.lcm(*[c.denominator for c in p])
    ip = [int(c * den) for c in p]
    cont = math.gcd(*[abs(c) for c in ip if c])
    ip = [c // cont for c in ip]
    a0, an = ip[0], ip[-1]
    seen = set()
    for num in _divisors(a0):
        for dd in _divisors(an):
            for sign in (1, -1):
                cand = Rat(sign * num, dd)
                if cand in seen:
                    continue
                seen.add(cand)
                if poly_eval(p, cand) == 0:
                    roots.append(cand)
    return roots


def integer_nth_root(n, d):
    """Largest r with r**d <= n, plus exactness flag; n >= 0, d >= 1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n in (0, 1) or d == 1:
        return n, True
    r = int(round(n ** (1.0 / d)))
    while r ** d > n:
        r -= 1
    while (r + 1) ** d <= n:
        r += 1
    return r, r ** d == n


def rational_nth_roots(c, d):
    """All rational solutions of x**d = c, for nonzero rational c."""
    c = Rat(c)
    if c == 0:
        raise ValueError("c must be nonzero")
    if d <= 0:
        raise ValueError("d must be positive")
    neg = c < 0
    if neg and d % 2 == 0:
        return []
    num, exact_n = integer_nth_root(abs(c.numerator), d)
    if not exact_n:
        return []
    den, exact_d = integer_nth_root(c.denominator, d)
    if not exact_d:
        return []
    r = Rat(num, den)
    if d % 2 == 1:
        return [-r if neg else r]
    return [r, -r] if r != 0 else [Rat(0)]


# ---------------------------------------------------------------------------
# number fields
# ---------------------------------------------------------------------------

_RATIONALS = None


class NumberField:
    """Q or a simple extension Q(a) with a given minimal polynomial.

    The minimal polynomial is stored with integer-normalized coefficients
    (content 1, positive leading coefficient). Construction checks that it is
    squarefree and has no rational root; full irreducibility is not verified,
    and a reducible polynomial that slips through is detected dynamically when
    inverting a zero divisor (see :class:`ZeroDivisorDetected`).
    """

    __slots__ = ("minpoly", "degree", "name", "_pow_rows", "_zero", "_one", "_gen")

    def __init__(self, minpoly_coeffs, *, name="a", _check=True):
        coeffs = poly_trim([Rat(c) for c in minpoly_coeffs])
        if len(coeffs) < 2:
            raise ValueError("minimal polynomial must have degree >= 1")
        den = math.lcm(*[c.denominator for c in coeffs])
        ints = [int(c * den) for c in coeffs]
        cont = math.gcd(*[abs(c) for c in ints if c])
        ints = [c // cont for c in ints]
        if ints[-1] < 0:
            ints = [-c for c in ints]
        degree = len(ints) - 1
        if degree == 1:
            # any degree-1 polynomial defines Q itself
            ints = [0, 1]
        elif _check:
            rats = [Rat(c) for c in ints]
            g = poly_gcd(rats, poly_derivative(rats))
            if len(g) > 1:
                raise ValueError("minimal polynomial is not squarefree")
            if rational_roots(rats):
                raise ValueError("minimal polynomial has a rational root")
        self.minpoly = tuple(ints)
        self.degree = degree
        self.name = name
        # reduction table: coordinates of a^k for k = degree .. 2*degree-2
        monic = [Rat(c, ints[-1]) for c in ints]
        rows = []
        cur = [-c for c in monic[:-1]]  # a^degree
        rows.append(tuple(cur))
        for _ in range(degree - 2):
            nxt = [Rat(0)] * degree
            for i, c in enumerate(cur):
                if c == 0:
                    continue
                if i + 1 < degree:
                    nxt[i + 1] += c
                else:
                    for j, rc in enumerate(rows[0]):
                        nxt[j] += c * rc
            rows.append(tuple(nxt))
            cur = nxt
        self._pow_rows = tuple(rows)
        self._zero = FieldElement(self, (Rat(0),) * degree)
        self._one = FieldElement(self, (Rat(1),) + (Rat(0),) * (degree - 1))
        if degree > 1:
            self._gen = FieldElement(self, (Rat(0), Rat(1)) + (Rat(0),) * (degree - 2))
        else:
            self._gen = self._one

    @classmethod
    def rationals(cls):
        global _RATIONALS
        if _RATIONALS is None:
            _RATIONALS = cls((0, 1), _check=False)
        return _RATIONALS

    @classmethod
    def unchecked(cls, minpoly_coeffs, *, name="a"):
        """Construct without the squarefree / rational-root checks.

        Intended for testing dynamic zero-divisor detection; a reducible
        polynomial here yields a ring with zero divisors, not a field.
        """
        return cls(minpoly_coeffs, name=name, _check=False)

    @property
    def is_rationals(self):
        return self.degree == 1

    def zero(self):
        return self._zero

    def one(self):
        return self._one

    def gen(self):
        if self.degree == 1:
            raise ValueError("Q has no generator above the rationals")
        return self._gen

    def from_rational(self, q):
        return FieldElement(self, (Rat(q),) + (Rat(0),) * (self.degree - 1))

    def elem(self, coords):
        coords = [Rat(c) for c in coords]
        if len(coords) > self.degree:
            coords = self._reduce(coords)
        else:
            coords = coords + [Rat(0)] * (self.degree - len(coords))
        return FieldElement(self, tuple(coords))

    def _reduce(self, long_coords):
        """Fold coordinates of degree >= self.degree using the power table."""
        d = self.degree
        out = [Rat(0)] * d
        for i, c in enumerate(long_coords):
            if c == 0:
                continue
            if i < d:
                out[i] += c
            else:
                row = self._pow_rows[i - d]
                for j, rc in enumerate(row):
                    if rc:
                        out[j] += c * rc
        return out

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.minpoly == other.minpoly

    def __hash__(self):
        return hash(self.minpoly)

    def __repr__(self):
        if self.degree == 1:
            return "NumberField(Q)"
        terms = " + ".join(
            f"{c}*{self.name}^{i}" for i, c in enumerate(self.minpoly) if c
        )
        return f"NumberField({terms} = 0)"


class FieldElement:
    """Immutable element of a :class:`NumberField` in the power basis."""

    __slots__ = ("field", "coords")

    def __init__(self, field, coords):
        self.field = field
        self.coords = coords

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field == self.field:
                return other
            if other.is_rational():
                return self.field.from_rational(other.as_fraction())
            return None
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, tuple(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, tuple(-a for a in self.coords))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, tuple(a - b for a, b in zip(self.coords, o.coords)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self.field.degree
        if d == 1:
            return FieldElement(self.field, (self.coords[0] * o.coords[0],))
        long = [Rat(0)] * (2 * d - 1)
        for i, a in enumerate(self.coords):
            if a == 0:
                continue
            for j, b in enumerate(o.coords):
                if b:
                    long[i + j] += a * b
        return FieldElement(self.field, tuple(self.field._reduce(long)))

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse; raises ZeroDivisorDetected on a zero divisor."""
        if not any(self.coords):
            raise ZeroDivisionError("inverse of zero")
        if self.field.degree == 1:
            return FieldElement(self.field, (1 / self.coords[0],))
        a = poly_trim(list(self.coords))
        m = [Rat(c) for c in self.field.minpoly]
        g, s, _ = poly_xgcd(a, m)
        if len(g) > 1:
            raise ZeroDivisorDetected(g)
        # g == [1], so s*a = 1 mod m
        return self.field.elem(s)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coords == o.coords

    def __hash__(self):
        return hash((self.field, self.coords))

    def __bool__(self):
        return any(self.coords)

    def is_zero(self):
        return not any(self.coords)

    def is_rational(self):
        return not any(self.coords[1:])

    def as_fraction(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coords[0]

    def sort_key(self):
        """Canonical comparison key (coordinate tuple); total order on the field."""
        return self.coords

    def __str__(self):
        if self.is_rational():
            return str(self.coords[0])
        name = self.field.name
        parts = []
        for i, c in enumerate(self.coords):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                var = name if i == 1 else f"{name}^{i}"
                if c == 1:
                    parts.append(var)
                elif c == -1:
                    parts.append(f"-{var}")
                else:
                    parts.append(f"{c}*{var}")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"

    def __repr__(self):
        return f"FieldElement({self})"


QQ = NumberField.rationals()


# ---------------------------------------------------------------------------
# d-th roots inside a field
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RootSearch:
    """Result of searching for solutions of x**d = c inside a field.

    ``resolved`` is True only when the returned set provably contains every
    root in the field. When False, ``pending`` carries the unsolved equation
    as a pair (d, c).
    """

    roots: tuple
    resolved: bool
    pending: tuple | None = None


def nth_root_in_field(c, d):
    """All d-th roots of a nonzero element found in its own field.

    Over Q the answer is always complete (integer root extraction on the
    numerator and denominator decides it). Over an extension, roots of a
    rational constant are searched in Q and the result is flagged resolved
    only when the root count proves completeness; anything else is returned
    unresolved with the pending equation.
    """
    if not isinstance(c, FieldElement):
        raise TypeError("c must be a FieldElement")
    if c.is_zero():
        raise ValueError("c must be nonzero")
    if d <= 0:
        raise ValueError("d must be positive")
    field = c.field
    if field.is_rationals:
        roots = tuple(field.from_rational(r) for r in rational_nth_roots(c.as_fraction(), d))
        return RootSearch(roots, True)
    if c.is_rational():
        roots = tuple(field.from_rational(r) for r in rational_nth_roots(c.as_fraction(), d))
        if len(roots) == d:
            # x**d - c has at most d roots in a field, so this is all of them
            return RootSearch(roots, True)
        return RootSearch(roots, False, (d, c))
    return RootSearch((), False, (d, c))


def is_nth_root(beta, d, c):
    """Exact verification that beta**d == c."""
    return beta ** d == c

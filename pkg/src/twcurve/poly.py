"""Sparse multivariate polynomials, rational functions, and reduction mod a plane curve.

Coefficients live in a :class:`~twcurve.field.NumberField`; monomials are
exponent tuples. Variable indices are 0-based internally; display names are
1-based (x_1, x_2, ...) or (x, y) for the plane.
"""

from __future__ import annotations

from fractions import Fraction

from .field import FieldElement, NumberField


class Monomial(tuple):
    """Exponent vector of a monomial; behaves as a tuple of nonnegative ints."""

    __slots__ = ()

    def __new__(cls, exps):
        return super().__new__(cls, (int(e) for e in exps))

    @classmethod
    def one(cls, nvars):
        return cls((0,) * nvars)

    @classmethod
    def variable(cls, nvars, i):
        return cls(tuple(1 if j == i else 0 for j in range(nvars)))

    def times(self, other):
        return Monomial(a + b for a, b in zip(self, other))

    def divides(self, other):
        return all(a <= b for a, b in zip(self, other))

    def div(self, other):
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(a - b for a, b in zip(self, other))

    def wdeg(self, weights):
        return sum(e * w for e, w in zip(self, weights))

    def total_degree(self):
        return sum(self)

    def involves(self, i):
        return self[i] > 0

    def format(self, names):
        parts = []
        for e, name in zip(self, names):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"


def default_names(nvars):
    if nvars == 1:
        return ("T",)
    if nvars == 2:
        return ("x", "y")
    return tuple(f"x_{i + 1}" for i in range(nvars))


def _grlex_key(mono):
    return (sum(mono), tuple(mono))


class MultiPoly:
    """Sparse polynomial: a finite map from exponent tuples to nonzero coefficients."""

    __slots__ = ("field", "nvars", "terms")

    def __init__(self, field, nvars, terms=None):
        self.field = field
        self.nvars = nvars
        clean = {}
        if terms:
            for mono, coeff in terms.items():
                if not isinstance(coeff, FieldElement):
                    coeff = field.from_rational(Fraction(coeff))
                if coeff.is_zero():
                    continue
                if len(mono) != nvars:
                    raise ValueError(f"monomial {mono} has wrong arity for {nvars} variables")
                clean[Monomial(mono)] = coeff
        self.terms = clean

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, field, nvars):
        return cls(field, nvars)

    @classmethod
    def constant(cls, field, nvars, value):
        return cls(field, nvars, {Monomial.one(nvars): value})

    @classmethod
    def variable(cls, field, nvars, i):
        return cls(field, nvars, {Monomial.variable(nvars, i): field.one()})

    @classmethod
    def from_monomial(cls, field, mono, coeff=1):
        return cls(field, len(mono), {Monomial(mono): coeff})

    # -- queries ---------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(sum(m) == 0 for m in self.terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return self.terms.get(Monomial.one(self.nvars), self.field.zero())

    def coefficient(self, mono):
        return self.terms.get(Monomial(mono), self.field.zero())

    def support(self):
        """Monomials with nonzero coefficient, graded-lexicographic descending."""
        return sorted(self.terms, key=_grlex_key, reverse=True)

    def degree_in(self, i):
        if not self.terms:
            return -1
        return max(m[i] for m in self.terms)

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def weighted_degree(self, weights):
        if not self.terms:
            return None
        return max(m.wdeg(weights) for m in self.terms)

    def max_variable_used(self):
        """Largest variable index appearing, or -1 for constants."""
        top = -1
        for m in self.terms:
            for i in range(self.nvars - 1, top, -1):
                if m[i] > 0:
                    top = i
                    break
        return top

    # -- arithmetic -------------------------------------------------------

    def _coerce_scalar(self, value):
        if isinstance(value, FieldElement):
            return value
        return self.field.from_rational(Fraction(value))

    def __add__(self, other):
        if isinstance(other, (int, Fraction, FieldElement)):
            other = MultiPoly.constant(self.field, self.nvars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        terms = dict(self.terms)
        for m, c in other.terms.items():
            acc = terms.get(m)
            s = c if acc is None else acc + c
            if s.is_zero():
                terms.pop(m, None)
            else:
                terms[m] = s
        out = MultiPoly.__new__(MultiPoly)
        out.field, out.nvars, out.terms = self.field, self.nvars, terms
        return out

    __radd__ = __add__

    def __neg__(self):
        out = MultiPoly.__new__(MultiPoly)
        out.field, out.nvars = self.field, self.nvars
        out.terms = {m: -c for m, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, FieldElement)):
            other = MultiPoly.constant(self.field, self.nvars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, FieldElement)):
            c = self._coerce_scalar(other)
            if c.is_zero():
                return MultiPoly.zero(self.field, self.nvars)
            out = MultiPoly.__new__(MultiPoly)
            out.field, out.nvars = self.field, self.nvars
            out.terms = {m: cc * c for m, cc in self.terms.items()}
            return out
        if not isinstance(other, MultiPoly):
            return NotImplemented
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1.times(m2)
                p = c1 * c2
                acc = terms.get(m)
                s = p if acc is None else acc + p
                if s.is_zero():
                    terms.pop(m, None)
                else:
                    terms[m] = s
        out = MultiPoly.__new__(MultiPoly)
        out.field, out.nvars, out.terms = self.field, self.nvars, terms
        return out

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = MultiPoly.constant(self.field, self.nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, FieldElement)):
            other = MultiPoly.constant(self.field, self.nvars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.field == other.field and self.terms == other.terms

    def __hash__(self):
        return hash((self.field, self.nvars, frozenset(self.terms.items())))

    # -- evaluation and substitution ---------------------------------------

    def evaluate(self, values):
        """Evaluate at a point of field elements."""
        if len(values) != self.nvars:
            raise ValueError("wrong number of values")
        vals = [v if isinstance(v, FieldElement) else self.field.from_rational(Fraction(v))
                for v in values]
        acc = self.field.zero()
        pow_cache = [dict() for _ in range(self.nvars)]
        for m, c in self.terms.items():
            prod = c
            for i, e in enumerate(m):
                if e == 0:
                    continue
                p = pow_cache[i].get(e)
                if p is None:
                    p = vals[i] ** e
                    pow_cache[i][e] = p
                prod = prod * p
            acc = acc + prod
        return acc

    def substitute(self, i, replacement):
        """Replace variable i by a polynomial (same variable count)."""
        if replacement.nvars != self.nvars:
            raise ValueError("variable count mismatch")
        out = MultiPoly.zero(self.field, self.nvars)
        pow_cache = {0: MultiPoly.constant(self.field, self.nvars, 1)}

        def rep_pow(e):
            if e not in pow_cache:
                pow_cache[e] = rep_pow(e - 1) * replacement
            return pow_cache[e]

        for m, c in self.terms.items():
            e = m[i]
            rest = Monomial(0 if k == i else v for k, v in enumerate(m))
            out = out + MultiPoly(self.field, self.nvars, {rest: c}) * rep_pow(e)
        return out

    def shift_arity(self, nvars):
        """View this polynomial in a larger variable ring."""
        if nvars < self.nvars:
            if self.max_variable_used() >= nvars:
                raise ValueError("polynomial uses variables beyond the target arity")
            return MultiPoly(self.field, nvars,
                             {Monomial(m[:nvars]): c for m, c in self.terms.items()})
        if nvars == self.nvars:
            return self
        pad = (0,) * (nvars - self.nvars)
        return MultiPoly(self.field, nvars,
                         {Monomial(tuple(m) + pad): c for m, c in self.terms.items()})

    def __str__(self):
        return self.format()

    def format(self, names=None):
        if not self.terms:
            return "0"
        names = names or default_names(self.nvars)
        parts = []
        for m in self.support():
            c = self.terms[m]
            mono = m.format(names)
            if mono == "1":
                text = str(c)
            elif c == self.field.one():
                text = mono
            elif c == -self.field.one():
                text = f"-{mono}"
            else:
                cs = str(c)
                if ("+" in cs[1:]) or ("-" in cs[1:]) or (" " in cs):
                    cs = f"({cs})"
                text = f"{cs}*{mono}"
            parts.append(text)
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self):
        return f"MultiPoly({self})"


def substitute_variable(poly, j, replacement, sign=1):
    """Apply x_j -> x_j + sign*R to a polynomial, exactly.

    R must involve only variables of index strictly below j (0-based).
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    r = replacement.shift_arity(poly.nvars)
    if r.max_variable_used() >= j:
        raise ValueError("replacement must use only variables below the substituted one")
    new_var = MultiPoly.variable(poly.field, poly.nvars, j) + r * sign
    return poly.substitute(j, new_var)


# ---------------------------------------------------------------------------
# pseudo-division modulo a plane curve
# ---------------------------------------------------------------------------

def _as_y_coeffs(poly):
    """Group a 2-variable polynomial by its y-degree; coefficients are x-polynomials."""
    by_deg = {}
    for m, c in poly.terms.items():
        by_deg.setdefault(m[1], {})[Monomial((m[0], 0))] = c
    return {d: MultiPoly(poly.field, 2, t) for d, t in by_deg.items()}


def pseudo_divmod(g, f):
    """Pseudo-division of g by f in the second variable.

    Returns (q, r, k) with lc(f)^k * g = q*f + r and deg_y(r) < deg_y(f),
    where lc(f) is the leading y-coefficient of f. Requires deg_y(f) >= 1.
    """
    if f.nvars != 2 or g.nvars != 2:
        raise ValueError("pseudo-division wants plane polynomials")
    df = f.degree_in(1)
    if df < 1:
        raise ValueError("divisor must have positive degree in y")
    fc = _as_y_coeffs(f)
    lead = fc[df]
    q = MultiPoly.zero(g.field, 2)
    r = g
    k = 0
    y = MultiPoly.variable(g.field, 2, 1)
    while not r.is_zero() and r.degree_in(1) >= df:
        dr = r.degree_in(1)
        rc = _as_y_coeffs(r)[dr]
        shift = y ** (dr - df)
        q = q * lead + rc * shift
        r = r * lead - rc * shift * f
        k += 1
    return q, r, k


def reduce_mod_curve(g, f):
    """Pseudo-remainder of g modulo the plane curve polynomial f."""
    return pseudo_divmod(g, f)[1]


def is_zero_mod_curve(g, f):
    """Exact membership of g in the ideal of the (irreducible) plane curve f."""
    return reduce_mod_curve(g, f).is_zero()


# ---------------------------------------------------------------------------
# rational functions in the plane coordinates
# ---------------------------------------------------------------------------

class RationalFunction:
    """Quotient of two plane polynomials, denominator nonzero.

    Stored with common monomial factors of numerator and denominator removed
    and the denominator normalized to a unit leading coefficient, so printing
    is canonical. No polynomial gcd is attempted.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = MultiPoly.constant(num.field, num.nvars, 1)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.nvars != den.nvars:
            raise ValueError("arity mismatch")
        if not num.is_zero():
            shift = tuple(
                min(
                    min(m[i] for m in num.terms),
                    min(m[i] for m in den.terms),
                )
                for i in range(num.nvars)
            )
            if any(shift):
                num = MultiPoly(num.field, num.nvars,
                                {Monomial(e - s for e, s in zip(m, shift)): c
                                 for m, c in num.terms.items()})
                den = MultiPoly(den.field, den.nvars,
                                {Monomial(e - s for e, s in zip(m, shift)): c
                                 for m, c in den.terms.items()})
        lead = den.terms[max(den.terms, key=_grlex_key)]
        if lead != den.field.one():
            inv = lead.inverse()
            num = num * inv
            den = den * inv
        self.num = num
        self.den = den

    @classmethod
    def from_poly(cls, poly):
        return cls(poly)

    @classmethod
    def constant(cls, field, nvars, value):
        return cls(MultiPoly.constant(field, nvars, value))

    @property
    def field(self):
        return self.num.field

    @property
    def nvars(self):
        return self.num.nvars

    def is_zero(self):
        return self.num.is_zero()

    def is_polynomial(self):
        return self.den.is_constant()

    def as_poly(self):
        if not self.is_polynomial():
            raise ValueError("denominator is not constant")
        c = self.den.constant_value()
        return self.num * c.inverse()

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.num.is_zero():
            raise ZeroDivisionError("division by the zero function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if self.num.is_zero():
                raise ZeroDivisionError("negative power of zero")
            return RationalFunction(self.den ** (-n), self.num ** (-n))
        return RationalFunction(self.num ** n, self.den ** n)

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, MultiPoly):
            return RationalFunction(other)
        if isinstance(other, (int, Fraction, FieldElement)):
            return RationalFunction.constant(self.field, self.nvars, other)
        return None

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def format(self, names=None):
        if self.is_polynomial():
            return self.as_poly().format(names)
        num = self.num.format(names)
        den = self.den.format(names)
        if len(self.num.terms) > 1:
            num = f"({num})"
        if len(self.den.terms) > 1:
            den = f"({den})"
        return f"{num}/{den}"

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"RationalFunction({self})"


def evaluate_poly_at_ratfuns(poly, values):
    """Substitute rational functions for the variables of a polynomial."""
    if len(values) != poly.nvars:
        raise ValueError("wrong number of values")
    if not values:
        raise ValueError("need at least one value for the ambient plane")
    plane_field = values[0].field
    plane_vars = values[0].nvars
    acc = RationalFunction.constant(plane_field, plane_vars, 0)
    pow_cache = [dict() for _ in range(poly.nvars)]

    def vpow(i, e):
        cache = pow_cache[i]
        if e not in cache:
            cache[e] = values[i] ** e
        return cache[e]

    for m, c in poly.terms.items():
        prod = RationalFunction.constant(plane_field, plane_vars, c)
        for i, e in enumerate(m):
            if e:
                prod = prod * vpow(i, e)
        acc = acc + prod
    return acc

"""Exact linear algebra over a number field plus integer lattice normal forms."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .field import FieldElement, NumberField


@dataclass(frozen=True)
class AffineSolutionSet:
    """Solution set of a linear system: a particular solution plus a kernel basis.

    ``particular`` is None exactly when the system is inconsistent.
    """

    particular: tuple | None
    kernel: tuple

    @property
    def consistent(self):
        return self.particular is not None


def solve_linear(matrix, rhs, field=None):
    """Solve matrix * x = rhs exactly over the entries' field.

    Gaussian elimination pivoting on the first nonzero entry in column order;
    no size heuristics, so the result is deterministic. Returns an
    :class:`AffineSolutionSet` whose kernel basis spans the exact null space.
    """
    rows = [list(r) for r in matrix]
    b = list(rhs)
    if len(rows) != len(b):
        raise ValueError("matrix and rhs sizes differ")
    if field is None:
        for r in rows:
            for e in r:
                if isinstance(e, FieldElement):
                    field = e.field
                    break
            if field is not None:
                break
        if field is None:
            for e in b:
                if isinstance(e, FieldElement):
                    field = e.field
                    break
        if field is None:
            field = NumberField.rationals()
    zero, one = field.zero(), field.one()

    def lift(v):
        return v if isinstance(v, FieldElement) else field.from_rational(Fraction(v))

    rows = [[lift(e) for e in r] for r in rows]
    b = [lift(e) for e in b]
    m = len(rows)
    n = len(rows[0]) if rows else 0
    for r in rows:
        if len(r) != n:
            raise ValueError("ragged matrix")

    pivots = []  # (row, col)
    pr = 0
    for pc in range(n):
        sel = None
        for i in range(pr, m):
            if not rows[i][pc].is_zero():
                sel = i
                break
        if sel is None:
            continue
        rows[pr], rows[sel] = rows[sel], rows[pr]
        b[pr], b[sel] = b[sel], b[pr]
        inv = rows[pr][pc].inverse()
        rows[pr] = [e * inv for e in rows[pr]]
        b[pr] = b[pr] * inv
        for i in range(m):
            if i != pr and not rows[i][pc].is_zero():
                f = rows[i][pc]
                rows[i] = [e - f * rp for e, rp in zip(rows[i], rows[pr])]
                b[i] = b[i] - f * b[pr]
        pivots.append((pr, pc))
        pr += 1
        if pr == m:
            break
    for i in range(pr, m):
        if not b[i].is_zero():
            return AffineSolutionSet(None, ())

    pivot_cols = {pc: r for r, pc in pivots}
    free_cols = [c for c in range(n) if c not in pivot_cols]
    particular = [zero] * n
    for r, pc in pivots:
        particular[pc] = b[r]
    kernel = []
    for fc in free_cols:
        vec = [zero] * n
        vec[fc] = one
        for r, pc in pivots:
            vec[pc] = -rows[r][fc]
        kernel.append(tuple(vec))
    return AffineSolutionSet(tuple(particular), tuple(kernel))


# ---------------------------------------------------------------------------
# integer matrices and the Smith normal form
# ---------------------------------------------------------------------------

class IntegerMatrix:
    """Immutable matrix with arbitrary-precision integer entries."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data):
        data = tuple(tuple(int(e) for e in row) for row in data)
        if data:
            w = len(data[0])
            if any(len(r) != w for r in data):
                raise ValueError("ragged matrix")
        self.data = data
        self.rows = len(data)
        self.cols = len(data[0]) if data else 0

    @classmethod
    def identity(cls, n):
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def __mul__(self, other):
        if not isinstance(other, IntegerMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        return IntegerMatrix(
            tuple(
                tuple(
                    sum(self.data[i][k] * other.data[k][j] for k in range(self.cols))
                    for j in range(other.cols)
                )
                for i in range(self.rows)
            )
        )

    def __eq__(self, other):
        return isinstance(other, IntegerMatrix) and self.data == other.data

    def __hash__(self):
        return hash(self.data)

    def transpose(self):
        return IntegerMatrix(tuple(zip(*self.data))) if self.data else IntegerMatrix(())

    def determinant(self):
        """Exact determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        m = [list(r) for r in self.data]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
                if swap is None:
                    return 0
                m[k], m[swap] = m[swap], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
                m[i][k] = 0
            prev = m[k][k]
        return sign * m[n - 1][n - 1]

    def __repr__(self):
        return f"IntegerMatrix({list(map(list, self.data))})"


def smith_normal_form(matrix):
    """Smith normal form: returns (U, D, V) with U*M*V = D.

    U and V are unimodular, D is diagonal with nonnegative entries satisfying
    d_i | d_{i+1}.
    """
    if not isinstance(matrix, IntegerMatrix):
        matrix = IntegerMatrix(matrix)
    m, n = matrix.rows, matrix.cols
    a = [list(r) for r in matrix.data]
    u = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    v = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def col_swap(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def row_add(dst, src, c):
        a[dst] = [x + c * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + c * y for x, y in zip(u[dst], u[src])]

    def col_add(dst, src, c):
        for r in a:
            r[dst] += c * r[src]
        for r in v:
            r[dst] += c * r[src]

    def row_negate(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    for s in range(min(m, n)):
        while True:
            # move a minimal-magnitude nonzero entry of the trailing block to (s, s)
            best = None
            for i in range(s, m):
                for j in range(s, n):
                    if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            if best[0] != s:
                row_swap(s, best[0])
            if best[1] != s:
                col_swap(s, best[1])
            if a[s][s] < 0:
                row_negate(s)
            dirty = False
            for i in range(s + 1, m):
                if a[i][s] != 0:
                    q = a[i][s] // a[s][s]
                    row_add(i, s, -q)
                    if a[i][s] != 0:
                        dirty = True
            for j in range(s + 1, n):
                if a[s][j] != 0:
                    q = a[s][j] // a[s][s]
                    col_add(j, s, -q)
                    if a[s][j] != 0:
                        dirty = True
            if dirty:
                continue
            # edging is zero; enforce divisibility of the trailing block
            offender = None
            for i in range(s + 1, m):
                for j in range(s + 1, n):
                    if a[i][j] % a[s][s] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            row_add(s, offender, 1)
    return (
        IntegerMatrix(u),
        IntegerMatrix(a),
        IntegerMatrix(v),
    )


def extended_gcd(a, b):
    """(g, s, t) with s*a + t*b = g = gcd(a, b), g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def bezout_for_one(values):
    """Integers s_i with sum(s_i * values_i) = 1; requires gcd(values) = 1.

    Computed by folding the extended Euclidean algorithm over the list, which
    is deterministic for a fixed input order.
    """
    values = list(values)
    if not values:
        raise ValueError("empty value list")
    coeffs = [1]
    g = values[0]
    for val in values[1:]:
        g2, s, t = extended_gcd(g, val)
        coeffs = [c * s for c in coeffs] + [t]
        g = g2
    if g != 1:
        raise ValueError(f"gcd is {g}, not 1")
    return coeffs

"""Small exact linear algebra kernel: integer 3-vectors, rational 3x3 matrices,
column-style Hermite normal form and integer kernels.

Everything here is plain Python integers (arbitrary precision), so there is no
overflow and no rounding anywhere.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd

Vec3 = tuple[int, int, int]


def dot(u, v) -> int:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def cross(u, v) -> Vec3:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def norm2(v) -> int:
    return v[0] * v[0] + v[1] * v[1] + v[2] * v[2]


def content(v) -> int:
    """gcd of the entries (0 for the zero vector)."""
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


def primitive_vector(v) -> Vec3:
    """v divided by its content, sign-fixed so the first nonzero entry is positive."""
    g = content(v)
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    w = [x // g for x in v]
    for x in w:
        if x > 0:
            break
        if x < 0:
            w = [-y for y in w]
            break
    return tuple(w)


def det3_rows(m) -> int:
    """Determinant of a 3x3 integer matrix given as rows."""
    (a, b, c), (d, e, f), (g, h, i) = m
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def adjugate3_rows(m):
    """Adjugate (transposed cofactor matrix) of a 3x3 integer matrix, as rows."""
    (a, b, c), (d, e, f), (g, h, i) = m
    return (
        (e * i - f * h, c * h - b * i, b * f - c * e),
        (f * g - d * i, a * i - c * g, c * d - a * f),
        (d * h - e * g, b * g - a * h, a * e - b * d),
    )


def mat_mul_rows(a, b):
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3))
        for i in range(3)
    )


def mat_vec_rows(m, v) -> Vec3:
    return tuple(sum(m[i][k] * v[k] for k in range(3)) for i in range(3))


class Mat3:
    """3x3 rational matrix stored as integer entries over one positive denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            num = tuple(tuple(-x for x in row) for row in num)
            den = -den
        g = den
        for row in num:
            for x in row:
                g = gcd(g, x)
        if g > 1:
            num = tuple(tuple(x // g for x in row) for row in num)
            den //= g
        self.num = tuple(tuple(row) for row in num)
        self.den = den

    @classmethod
    def identity(cls) -> "Mat3":
        return cls(((1, 0, 0), (0, 1, 0), (0, 0, 1)))

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return Fraction(self.num[i][j], self.den)

    def entries(self):
        return tuple(tuple(Fraction(x, self.den) for x in row) for row in self.num)

    def __matmul__(self, other: "Mat3") -> "Mat3":
        return Mat3(mat_mul_rows(self.num, other.num), self.den * other.den)

    def __neg__(self) -> "Mat3":
        return Mat3(tuple(tuple(-x for x in row) for row in self.num), self.den)

    def __eq__(self, other) -> bool:
        return isinstance(other, Mat3) and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"Mat3({self.num!r}, den={self.den})"

    def transpose(self) -> "Mat3":
        return Mat3(tuple(zip(*self.num)), self.den)

    def det(self) -> Fraction:
        return Fraction(det3_rows(self.num), self.den**3)

    def apply(self, v) -> tuple[Fraction, Fraction, Fraction]:
        """Image of a vector (any rational entries) under the matrix."""
        return tuple(
            sum(Fraction(self.num[i][k], self.den) * v[k] for k in range(3))
            for i in range(3)
        )

    def apply_int(self, v) -> Vec3:
        """Image numerators of an integer vector; caller tracks the denominator."""
        return mat_vec_rows(self.num, v)

    def is_orthogonal(self) -> bool:
        d2 = self.den * self.den
        mt = mat_mul_rows(self.num, tuple(zip(*self.num)))
        return all(
            mt[i][j] == (d2 if i == j else 0) for i in range(3) for j in range(3)
        )

    def is_rotation(self) -> bool:
        return self.is_orthogonal() and det3_rows(self.num) == self.den**3


def hnf_columns(gens) -> tuple[Vec3, Vec3, Vec3]:
    """Column-style Hermite normal form of the integer lattice spanned by `gens`.

    Returns the matrix as rows; the basis vectors are the columns.  The form is
    lower triangular with positive diagonal and off-diagonal entries reduced
    into [0, pivot), which makes it a unique representative of the lattice.
    """
    cols = [list(g) for g in gens if any(g)]
    piv = []
    for r in range(3):
        while True:
            nz = [c for c in cols if c[r] != 0]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda c: abs(c[r]))
            c0 = nz[0]
            for c in nz[1:]:
                q = c[r] // c0[r]
                if q:
                    for i in range(3):
                        c[i] -= q * c0[i]
            cols = [c for c in cols if any(c)]
        pc = next((c for c in cols if c[r] != 0), None)
        if pc is None:
            raise ValueError("generators do not span a rank-3 lattice")
        if pc[r] < 0:
            for i in range(3):
                pc[i] = -pc[i]
        piv.append(pc)
        cols.remove(pc)
    # piv[k] has zeros above row k; reduce the entries left of each pivot
    for i in (1, 2):
        for j in range(i):
            q = piv[j][i] // piv[i][i]
            if q:
                for k in range(3):
                    piv[j][k] -= q * piv[i][k]
    return tuple(tuple(piv[j][i] for j in range(3)) for i in range(3))


def kernel_columns(rows):
    """Basis of the integer kernel {x : M x = 0} of a small integer matrix.

    `rows` is a list of row tuples; the result is a list of integer coefficient
    vectors (length = number of columns).
    """
    nr = len(rows)
    nc = len(rows[0])
    cols = [[rows[r][j] for r in range(nr)] + [1 if i == j else 0 for i in range(nc)]
            for j in range(nc)]
    for r in range(nr):
        while True:
            nz = [c for c in cols if c[r] != 0]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda c: abs(c[r]))
            c0 = nz[0]
            for c in nz[1:]:
                q = c[r] // c0[r]
                if q:
                    for i in range(nr + nc):
                        c[i] -= q * c0[i]
        pc = next((c for c in cols if c[r] != 0), None)
        if pc is not None:
            cols.remove(pc)
    return [tuple(c[nr:]) for c in cols]


def solve_lower_triangular(h, v, den_h=1, den_v=1):
    """Solve H*(x/den_h) = v/den_v for integer x, where H is lower triangular
    (rows) with nonzero diagonal.  Returns the integer coefficient vector or
    None when no integer solution exists."""
    # H x = (den_h/den_v) v must have an integral solution x
    x = [Fraction(0)] * 3
    for i in range(3):
        s = Fraction(v[i] * den_h, den_v)
        for j in range(i):
            s -= h[i][j] * x[j]
        q = s / h[i][i]
        x[i] = q
    if all(xi.denominator == 1 for xi in x):
        return tuple(int(xi) for xi in x)
    return None

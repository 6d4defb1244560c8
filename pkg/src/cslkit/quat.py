"""Exact quaternions and the parameterization of rational rotations.

A quaternion is stored as four integer numerators over a denominator of 1 or 2;
the denominator 2 is only allowed when all four numerators are odd, so the
values are exactly the integer and half-odd-integer quaternions.  Rotations are
identified with quaternions projectively (q and -q, and any rescaling, give the
same rotation); :meth:`Quat.primitive` picks the canonical integral
representative with gcd 1 and first nonzero component positive.
"""
from __future__ import annotations

import re
from fractions import Fraction
from math import gcd

from .linalg import Mat3, primitive_vector

Tup4 = tuple[int, int, int, int]


def _mul4(a: Tup4, b: Tup4) -> Tup4:
    """Hamilton product on integer 4-tuples (i*j = k)."""
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return (
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )


def _conj4(a: Tup4) -> Tup4:
    return (a[0], -a[1], -a[2], -a[3])


def _norm4(a: Tup4) -> int:
    return a[0] * a[0] + a[1] * a[1] + a[2] * a[2] + a[3] * a[3]


def _gcd4(a: Tup4) -> int:
    return gcd(gcd(a[0], a[1]), gcd(a[2], a[3]))


def _canon4(a: Tup4) -> Tup4:
    """Primitive integral representative of the rotation of `a`, sign-fixed so
    the first nonzero component is positive."""
    g = _gcd4(a)
    if g == 0:
        raise ValueError("zero quaternion has no primitive form")
    a = (a[0] // g, a[1] // g, a[2] // g, a[3] // g)
    for x in a:
        if x > 0:
            break
        if x < 0:
            a = (-a[0], -a[1], -a[2], -a[3])
            break
    return a


class Quat:
    """Integer or half-odd-integer quaternion num/den with den in {1, 2}."""

    __slots__ = ("num", "den")

    def __init__(self, n0, n1, n2, n3, den=1):
        num = (n0, n1, n2, n3)
        if den not in (1, 2):
            raise ValueError(f"denominator must be 1 or 2, got {den}")
        if den == 2:
            if all(x % 2 == 0 for x in num):
                num = tuple(x // 2 for x in num)
                den = 1
            elif not all(x % 2 for x in num):
                raise ValueError(
                    f"half-integral quaternion needs all numerators odd: {num}"
                )
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):
        raise AttributeError("Quat is immutable")

    # ------------------------------------------------------------------ basics
    def __eq__(self, other) -> bool:
        return isinstance(other, Quat) and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"Quat{self.num}" if self.den == 1 else f"Quat(1/2){self.num}"

    def __str__(self):
        body = "(" + ",".join(str(x) for x in self.num) + ")"
        return body if self.den == 1 else "1/2" + body

    def __neg__(self) -> "Quat":
        return Quat(*(-x for x in self.num), den=self.den)

    def __mul__(self, other: "Quat") -> "Quat":
        n = _mul4(self.num, other.num)
        d = self.den * other.den
        while d > 1 and all(x % 2 == 0 for x in n):
            n = tuple(x // 2 for x in n)
            d //= 2
        if d > 2:
            # cannot happen for valid operands: the Hurwitz-type parity closure
            # guarantees products of half-odd quaternions reduce to den <= 2
            raise ArithmeticError(f"product fell outside the quaternion ring: {n}/{d}")
        return Quat(*n, den=d)

    def conjugate(self) -> "Quat":
        return Quat(self.num[0], -self.num[1], -self.num[2], -self.num[3], den=self.den)

    def norm_sq(self) -> Fraction:
        return Fraction(_norm4(self.num), self.den * self.den)

    def inner(self, other: "Quat") -> Fraction:
        s = sum(a * b for a, b in zip(self.num, other.num))
        return Fraction(s, self.den * other.den)

    # -------------------------------------------------------------- reductions
    def primitive(self) -> "Quat":
        """Canonical primitive integral quaternion for the same rotation."""
        return Quat(*_canon4(self.num))

    @property
    def is_primitive(self) -> bool:
        return self.den == 1 and _gcd4(self.num) == 1

    @property
    def is_zero(self) -> bool:
        return self.num == (0, 0, 0, 0)

    @property
    def is_vectorial(self) -> bool:
        return self.num[0] == 0

    @property
    def vector(self) -> tuple[int, int, int]:
        """Spatial numerators (the rotation axis direction, up to scale)."""
        return self.num[1:]


ONE = Quat(1, 0, 0, 0)


def primitive_reduce(q: Quat) -> Quat:
    if q.is_zero:
        raise ValueError("zero quaternion has no primitive form")
    return q.primitive()


def cayley(r: Quat) -> Mat3:
    """Rotation matrix of a nonzero quaternion (exact, denominator |r|^2)."""
    if r.is_zero:
        raise ValueError("zero quaternion does not define a rotation")
    k, l, m, n = r.num
    d = k * k + l * l + m * m + n * n
    rows = (
        (k * k + l * l - m * m - n * n, -2 * k * n + 2 * l * m, 2 * k * m + 2 * l * n),
        (2 * k * n + 2 * l * m, k * k - l * l + m * m - n * n, -2 * k * l + 2 * m * n),
        (-2 * k * m + 2 * l * n, 2 * k * l + 2 * m * n, k * k - l * l - m * m + n * n),
    )
    mat = Mat3(rows, d)
    assert mat.is_rotation(), f"Cayley matrix of {r} is not a proper rotation"
    return mat


def quat_from_matrix(mat: Mat3) -> Quat:
    """Invert the Cayley map for an exact rational rotation matrix.

    Raises ValueError when the matrix is not a proper orthogonal rational
    matrix (the result is always cross-checked against `cayley`).
    """
    if not mat.is_rotation():
        raise ValueError("matrix is not a rational proper rotation")
    m = mat.num
    d = mat.den
    tr_plus = d + m[0][0] + m[1][1] + m[2][2]  # d * (1 + trace), integral
    if tr_plus != 0:
        cand = (
            tr_plus,
            m[2][1] - m[1][2],
            m[0][2] - m[2][0],
            m[1][0] - m[0][1],
        )
    else:
        # rotation through pi: quaternion (0, axis); axis from a nonzero column of M + d*I
        cols = tuple(tuple(m[i][j] + (d if i == j else 0) for i in range(3)) for j in range(3))
        col = next((c for c in cols if any(c)), None)
        if col is None:
            raise ValueError("matrix is not a rotation")
        cand = (0, *col)
    q = Quat(*_canon4(cand))
    if cayley(q) != mat:
        raise ValueError("matrix is not a rational proper rotation")
    return q


def axis_angle(r: Quat) -> tuple[tuple[int, int, int], Fraction]:
    """Primitive rotation axis (l, m, n) and exact cos(angle)."""
    p = r.primitive()
    k = p.num[0]
    axis = p.num[1:]
    if axis == (0, 0, 0):
        raise ValueError("axis undefined for the identity rotation")
    n2 = _norm4(p.num)
    cos_phi = Fraction(k * k - (n2 - k * k), n2)
    return primitive_vector(axis), cos_phi


def rotation_order(r: Quat) -> int:
    """Order of the rotation if crystallographic (1,2,3,4,6), else 0."""
    p = r.primitive()
    if p.vector == (0, 0, 0):
        return 1
    n2 = _norm4(p.num)
    c = Fraction(2 * p.num[0] ** 2 - n2, n2)
    return {Fraction(-1): 2, Fraction(0): 4, Fraction(-1, 2): 3, Fraction(1, 2): 6}.get(c, 0)


_AXIS_LETTERS = ("x", "y", "z")
_MACRON = "̄"


def _axis_pattern(axis: tuple[int, int, int]) -> str:
    """Table-style axis pattern like 'x,0,0', 'x,x̄,0' for +-1/0 axes."""
    letter = next(_AXIS_LETTERS[i] for i, x in enumerate(axis) if x)
    parts = []
    for x in axis:
        if x == 0:
            parts.append("0")
        elif x > 0:
            parts.append(letter)
        else:
            parts.append(letter + _MACRON)
    return ",".join(parts)


def crystallographic_name(r: Quat) -> str:
    """Crystallographic symbol for crystallographic rotations, otherwise the
    exact angle/axis description."""
    p = r.primitive()
    if p.vector == (0, 0, 0):
        return "1"
    axis, cos_phi = axis_angle(p)
    order = rotation_order(p)
    if order and all(abs(x) <= 1 for x in axis):
        pattern = _axis_pattern(axis)
        if order == 2:
            return f"2 {pattern}"
        # sense: the canonical primitive quaternion has positive real part here;
        # its spatial part equals +axis for the positive sense, -axis otherwise
        spatial = primitive_vector(p.vector)
        sense = "⁺" if spatial == axis else "⁻"
        return f"{order}{sense} {pattern}"
    axis_txt = "".join(str(x) for x in axis) if all(0 <= x <= 9 for x in axis) \
        else ",".join(str(x) for x in axis)
    return f"φ = arccos({cos_phi}), [{axis_txt}]"


_QUAT_RE = re.compile(
    r"^\s*(1/2\s*)?\(?\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\)?\s*$"
)


def parse_quat(text: str) -> Quat:
    """Parse '(a,b,c,d)', 'a,b,c,d' or '1/2(a,b,c,d)'."""
    m = _QUAT_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse quaternion from {text!r}")
    den = 2 if m.group(1) else 1
    return Quat(*(int(m.group(i)) for i in range(2, 6)), den=den)


def format_quat(q: Quat) -> str:
    return str(q)

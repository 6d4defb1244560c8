"""Exact rational 3D lattices in canonical Hermite normal form.

A lattice is stored as an integer column-HNF matrix over one positive
denominator, reduced so that the representation is unique: two values describe
the same lattice exactly when they compare equal.  On top of that sit the
brute-force tools everything else is validated against: lattice intersection by
integer kernel computation and point groups by exhaustive short-vector search.
"""
from __future__ import annotations

import json
from fractions import Fraction
from math import gcd, isqrt, lcm

from .linalg import (
    Mat3,
    Vec3,
    adjugate3_rows,
    cross,
    det3_rows,
    dot,
    hnf_columns,
    kernel_columns,
    norm2,
)


class ExactLattice:
    """Full-rank rational lattice, canonically represented."""

    __slots__ = ("den", "hnf")

    def __init__(self, hnf, den=1):
        if den <= 0:
            raise ValueError("denominator must be positive")
        g = den
        for row in hnf:
            for x in row:
                g = gcd(g, x)
        if g > 1:
            hnf = tuple(tuple(x // g for x in row) for row in hnf)
            den //= g
        object.__setattr__(self, "hnf", tuple(tuple(row) for row in hnf))
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):
        raise AttributeError("ExactLattice is immutable")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ExactLattice)
            and self.den == other.den
            and self.hnf == other.hnf
        )

    def __hash__(self):
        return hash((self.den, self.hnf))

    def __repr__(self):
        return f"ExactLattice(hnf={self.hnf!r}, den={self.den})"

    # ---------------------------------------------------------------- geometry
    def det(self) -> Fraction:
        """Covolume (positive) of the lattice."""
        return Fraction(abs(det3_rows(self.hnf)), self.den**3)

    def basis_columns(self) -> tuple[Vec3, Vec3, Vec3]:
        """Integer numerator columns; actual basis vectors are columns/den."""
        h = self.hnf
        return tuple((h[0][j], h[1][j], h[2][j]) for j in range(3))

    def contains(self, v, v_den=1) -> bool:
        """Whether v/v_den (integer or Fraction entries) lies in the lattice."""
        vv = [Fraction(x, v_den) * self.den for x in v]
        x0 = vv[0] / self.hnf[0][0]
        if x0.denominator != 1:
            return False
        x1 = (vv[1] - x0 * self.hnf[1][0]) / self.hnf[1][1]
        if x1.denominator != 1:
            return False
        x2 = (vv[2] - x0 * self.hnf[2][0] - x1 * self.hnf[2][1]) / self.hnf[2][2]
        return x2.denominator == 1

    def is_sublattice_of(self, other: "ExactLattice") -> bool:
        return all(
            other.contains(c, self.den) for c in self.basis_columns()
        )

    def to_json(self) -> str:
        return json.dumps({"den": self.den, "hnf": [list(r) for r in self.hnf]})

    @classmethod
    def from_json(cls, text: str) -> "ExactLattice":
        obj = json.loads(text)
        return cls(tuple(tuple(r) for r in obj["hnf"]), obj["den"])


def hnf_canonicalize(columns, den=1) -> ExactLattice:
    """Canonical lattice from integer generator columns over a denominator.

    Accepts any number (>= 3 independent) of generators; redundant generators
    are absorbed by the HNF reduction.
    """
    return ExactLattice(hnf_columns(columns), den)


def lattice_from_fractions(cols) -> ExactLattice:
    """Canonical lattice from three rational basis columns."""
    fracs = [[Fraction(x) for x in c] for c in cols]
    den = 1
    for c in fracs:
        for x in c:
            den = lcm(den, x.denominator)
    ints = [tuple(int(x * den) for x in c) for c in fracs]
    return hnf_canonicalize(ints, den)


def index_in(sub: ExactLattice, sup: ExactLattice) -> int:
    """Group index [sup : sub]; raises unless sub is a sublattice of sup."""
    for c in sub.basis_columns():
        if not sup.contains(c, sub.den):
            v = tuple(Fraction(x, sub.den) for x in c)
            raise ValueError(f"not a sublattice: basis vector {v} lies outside")
    idx = sub.det() / sup.det()
    assert idx.denominator == 1 and idx > 0
    return int(idx)


def intersect(a: ExactLattice, b: ExactLattice) -> ExactLattice:
    """Set intersection of two lattices, by solving A x = B y over the integers."""
    d = lcm(a.den, b.den)
    fa, fb = d // a.den, d // b.den
    arows = tuple(tuple(x * fa for x in row) for row in a.hnf)
    brows = tuple(tuple(x * fb for x in row) for row in b.hnf)
    stacked = [arows[i] + tuple(-x for x in brows[i]) for i in range(3)]
    kernel = kernel_columns(stacked)
    if len(kernel) != 3:
        raise ValueError("intersection is not a full-rank lattice")
    gens = []
    for k in kernel:
        x = k[:3]
        gens.append(tuple(sum(arows[i][j] * x[j] for j in range(3)) for i in range(3)))
    return hnf_canonicalize(gens, d)


def transform(mat: Mat3, lat: ExactLattice) -> ExactLattice:
    """Image lattice mat * lat for an invertible rational matrix."""
    cols = [mat.apply_int(c) for c in lat.basis_columns()]
    return hnf_canonicalize(cols, lat.den * mat.den)


def residue_class(v) -> int:
    """v.v mod 4 for an integer vector (the residue classes L0..L3)."""
    return norm2(v) % 4


_CUBIC_CACHE: dict[str, ExactLattice] = {}


def cubic_lattice(kind: str) -> ExactLattice:
    """Conventional unit-cube-normalized cubic lattices: cP, cI, cF."""
    if kind not in _CUBIC_CACHE:
        if kind == "cP":
            gens, den = [(1, 0, 0), (0, 1, 0), (0, 0, 1)], 1
        elif kind == "cI":
            gens, den = [(2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 1)], 2
        elif kind == "cF":
            gens, den = [(2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0), (0, 1, 1)], 2
        else:
            raise ValueError(f"unknown lattice kind {kind!r} (want cP, cI or cF)")
        _CUBIC_CACHE[kind] = hnf_canonicalize(gens, den)
    return _CUBIC_CACHE[kind]


LATTICE_KINDS = ("cP", "cI", "cF")


# --------------------------------------------------------------------- search
def reduce_basis(cols) -> list[Vec3]:
    """Exact greedy (Lagrange-style) reduction of an integer 3D basis.

    Shortens vectors by integer combinations until no vector can be improved by
    adding any +-1 combination of the others; that is enough to make the
    enumeration bound `max(norm)` safe for point-group searches.
    """
    b = [tuple(c) for c in cols]
    changed = True
    while changed:
        changed = False
        b.sort(key=norm2)
        # pairwise size reduction (nearest integer)
        for i in range(1, 3):
            for j in range(i):
                d = dot(b[i], b[j])
                n = norm2(b[j])
                q = (2 * d + n) // (2 * n)  # round(d/n)
                if q:
                    cand = tuple(b[i][k] - q * b[j][k] for k in range(3))
                    if norm2(cand) < norm2(b[i]):
                        b[i] = cand
                        changed = True
        # +-1 triple combinations against the longest vector
        for s in (-1, 0, 1):
            for t in (-1, 0, 1):
                if s == 0 and t == 0:
                    continue
                cand = tuple(b[2][k] + s * b[0][k] + t * b[1][k] for k in range(3))
                if norm2(cand) < norm2(b[2]):
                    b[2] = cand
                    changed = True
    b.sort(key=norm2)
    return b


def short_vectors(lat: ExactLattice, bound: int) -> list[Vec3]:
    """All nonzero integer-numerator vectors of the lattice with squared length
    of the numerators <= bound (actual lengths are these divided by lat.den)."""
    basis = reduce_basis(lat.basis_columns())
    det = det3_rows(tuple(zip(*basis)))
    # coefficient bounds from the dual basis: c_i = (b_j x b_k).x / det
    limits = []
    for i in range(3):
        dual = cross(basis[(i + 1) % 3], basis[(i + 2) % 3])
        limits.append(isqrt(norm2(dual) * bound) // abs(det) + 1)
    out = []
    for c0 in range(-limits[0], limits[0] + 1):
        for c1 in range(-limits[1], limits[1] + 1):
            for c2 in range(-limits[2], limits[2] + 1):
                v = tuple(
                    c0 * basis[0][k] + c1 * basis[1][k] + c2 * basis[2][k]
                    for k in range(3)
                )
                if v != (0, 0, 0) and norm2(v) <= bound:
                    out.append(v)
    out.sort()
    return out


def point_group(lat: ExactLattice) -> list[Mat3]:
    """All exact orthogonal matrices (det +-1) mapping the lattice to itself.

    Brute force: reduce the basis, enumerate all lattice vectors as short as
    the longest reduced basis vector, and keep every image triple with the same
    Gram matrix.  Closure under multiplication is checked before returning.
    """
    basis = reduce_basis(lat.basis_columns())
    norms = [norm2(b) for b in basis]
    vecs = short_vectors(lat, max(norms))
    by_norm: dict[int, list[Vec3]] = {}
    for v in vecs:
        by_norm.setdefault(norm2(v), []).append(v)
    g01 = dot(basis[0], basis[1])
    g02 = dot(basis[0], basis[2])
    g12 = dot(basis[1], basis[2])
    bmat = tuple(zip(*basis))  # rows of the matrix whose columns are the basis
    det_b = det3_rows(bmat)
    adj_b = adjugate3_rows(bmat)
    ops = []
    for v0 in by_norm[norms[0]]:
        for v1 in by_norm[norms[1]]:
            if dot(v0, v1) != g01:
                continue
            for v2 in by_norm[norms[2]]:
                if dot(v0, v2) != g02 or dot(v1, v2) != g12:
                    continue
                # Q = V B^-1 = V adj(B) / det(B); Gram equality makes Q orthogonal
                vmat = tuple(zip(v0, v1, v2))  # columns v0,v1,v2
                num = tuple(
                    tuple(sum(vmat[i][k] * adj_b[k][j] for k in range(3)) for j in range(3))
                    for i in range(3)
                )
                q = Mat3(num, det_b)
                assert q.is_orthogonal()
                ops.append(q)
    ops_set = set(ops)
    assert Mat3.identity() in ops_set
    for q in ops:
        assert q.transpose() in ops_set  # inverse of an orthogonal matrix
        for p in ops:
            assert q @ p in ops_set, "point group candidates not closed"
    ops.sort(key=lambda q: (q.den, q.num))
    return ops


def proper_point_group_order(lat: ExactLattice) -> int:
    return sum(1 for q in point_group(lat) if det3_rows(q.num) == q.den**3)

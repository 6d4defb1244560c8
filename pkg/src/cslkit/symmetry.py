"""Symmetry groups of CSLs.

The exact membership criterion is containment of closed-form CSLs: Q is a
symmetry operation of L(R) iff L(R) lies in both L(Q) and L(QR).  On top of
that sit the minimal symmetry group (generated by H(R) and the square roots of
symmetry rotations inside RG), the orthogonal-factorization search for twofold
generated CSLs, and the closed-form classification of their point groups.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt

from .cslcore import csl_basis_primitive, sigma
from .equivalence import (
    CUBIC_GROUP_24,
    _CUBIC_SET,
    classify_form,
    intersection_group,
)
from .linalg import cross, dot, kernel_columns, norm2, primitive_vector
from .quat import Quat, _canon4, _conj4, _mul4, rotation_order


@dataclass(frozen=True)
class SymmetryGroup:
    """Proper-rotation point group of a CSL (improper partners follow by
    adjoining the inversion, which every lattice has)."""

    system: str
    order: int
    generators: tuple[Quat, ...]
    elements: tuple[Quat, ...]


_SYSTEM_BY_SHAPE = {
    (1, 1): "trivial",
    (2, 2): "monoclinic",
    (4, 2): "orthorhombic",
    (6, 3): "rhombohedral",
    (8, 4): "tetragonal",
    (12, 6): "hexagonal",
    (24, 4): "cubic",
}


def _closure(gen_tuples) -> tuple:
    elems = {(1, 0, 0, 0)}
    frontier = [(1, 0, 0, 0)]
    gens = [_canon4(g) for g in gen_tuples]
    for g in gens:
        if g not in elems:
            elems.add(g)
            frontier.append(g)
    while frontier:
        a = frontier.pop()
        for g in gens:
            for prod in (_mul4(a, g), _mul4(g, a)):
                c = _canon4(prod)
                if c not in elems:
                    elems.add(c)
                    frontier.append(c)
    return tuple(sorted(elems))


def _group_from_generators(gen_quats, expected_system=None) -> SymmetryGroup:
    gens = tuple(q.primitive() for q in gen_quats)
    elems = _closure(g.num for g in gens)
    order = len(elems)
    max_order = max(rotation_order(Quat(*e)) for e in elems)
    system = _SYSTEM_BY_SHAPE.get((order, max_order))
    assert system is not None, f"unrecognized point group shape ({order}, {max_order})"
    if expected_system is not None:
        assert system == expected_system, (system, expected_system)
    return SymmetryGroup(system, order, gens, tuple(Quat(*e) for e in elems))


# ----------------------------------------------------------------- membership
@lru_cache(maxsize=8192)
def _csl_cp_cached(p):
    return csl_basis_primitive(Quat(*p))


def is_symmetry_operation(q: Quat, r: Quat) -> bool:
    """Exact test that R(q) maps the CSL of R(r) (primitive cubic) to itself:
    the CSL must be contained in the CSLs of both R(q) and R(q)R(r)."""
    qp, rp = q.primitive(), r.primitive()
    lr = _csl_cp_cached(rp.num)
    if not lr.is_sublattice_of(_csl_cp_cached(qp.num)):
        return False
    qr = _canon4(_mul4(qp.num, rp.num))
    if not lr.is_sublattice_of(_csl_cp_cached(qr)):
        return False
    sr = sigma(rp)
    assert sr % sigma(qp) == 0 and sr % sigma(Quat(*qr)) == 0
    return True


def axis_symmetry_test(r: Quat) -> bool:
    """Whether the twofold rotation about r's own axis direction is a symmetry
    operation of L(R(r)): its squared axis norm must divide 2*r0."""
    p = r.primitive()
    if p.vector == (0, 0, 0):
        raise ValueError("no axis: r is the identity class")
    axis = primitive_vector(p.vector)
    return (2 * p.num[0]) % norm2(axis) == 0


def coprime_factor_check(r: Quat, q: Quat) -> bool:
    """Factorization criterion for a twofold R(q) against L(R(r)):
    m := conj(q) r / |q|^2 must have half-integer components, q must
    (anti)commute with m, and the coincidence indices of q and m must be
    coprime."""
    qp, rp = q.primitive(), r.primitive()
    if not qp.is_vectorial:
        raise ValueError("q must be vectorial (a rotation through pi)")
    q2 = norm2(qp.vector)
    t = _mul4(_conj4(qp.num), rp.num)
    if any((2 * x) % q2 for x in t):
        return False
    if _mul4(qp.num, t) not in (_mul4(t, qp.num), tuple(-x for x in _mul4(t, qp.num))):
        return False
    return gcd(sigma(qp), sigma(Quat(*_canon4(t)))) == 1


# -------------------------------------------------------- minimal symmetry
def minimal_symmetry_group(r: Quat) -> SymmetryGroup:
    """Group generated by H(R) and all Q in RG with Q^2 in G."""
    p = r.primitive()
    gens = [g.num for g in intersection_group(p).elements]
    for g in CUBIC_GROUP_24:
        qn = _canon4(_mul4(p.num, g))
        if _canon4(_mul4(qn, qn)) in _CUBIC_SET:
            gens.append(qn)
    elems = _closure(gens)
    order = len(elems)
    max_order = max(rotation_order(Quat(*e)) for e in elems)
    system = _SYSTEM_BY_SHAPE.get((order, max_order))
    assert system is not None, f"minimal group of {r} has odd shape ({order}, {max_order})"
    return SymmetryGroup(system, order, tuple(Quat(*g) for g in sorted(set(gens))),
                         tuple(Quat(*e) for e in elems))


# ------------------------------------------------- orthogonal decompositions
@dataclass(frozen=True)
class OrthDecomposition:
    """Factorization 2^ell * r = q * m into anticommuting vectorial quaternions,
    i.e. the axis of r is the cross product of two orthogonal twofold axes."""

    q: Quat
    m: Quat
    ell: int


@lru_cache(maxsize=None)
def _vectors_norm(k: int) -> tuple:
    """Primitive integer 3-vectors with squared norm k, one sign per +-pair."""
    out = []
    ta = isqrt(k)
    for a in range(ta + 1):
        rb = k - a * a
        tb = isqrt(rb)
        for b in range(-tb, tb + 1):
            c2 = rb - b * b
            c = isqrt(c2)
            if c * c != c2:
                continue
            for cc in ((c, -c) if c else (0,)):
                v = (a, b, cc)
                if gcd(gcd(a, b), cc) != 1:
                    continue
                if v > (0, 0, 0) and primitive_vector(v) == v:
                    out.append(v)
    return tuple(sorted(out))


def _reduce_2d(u, v):
    while True:
        if norm2(u) > norm2(v):
            u, v = v, u
        n = norm2(u)
        d = dot(u, v)
        t = (2 * d + n) // (2 * n)
        if t == 0:
            return u, v
        v = tuple(v[i] - t * u[i] for i in range(3))


def orthogonal_decompositions(r: Quat) -> list[OrthDecomposition]:
    """All factorizations of a vectorial r as in `OrthDecomposition`,
    canonicalized (q is the lexicographically smaller sign-fixed axis).

    The search enumerates every primitive vector orthogonal to the axis with
    squared norm at most 4*|r|^2, which covers all solutions because
    |q|^2 |m|^2 = 4^ell |r|^2 with ell <= 1 and |m|^2 >= 1.
    """
    p = r.primitive()
    if not p.is_vectorial:
        raise ValueError("orthogonal decomposition requires a vectorial quaternion")
    rv = p.vector
    r2 = norm2(rv)
    bound = 4 * r2
    k = kernel_columns([rv])
    u, v = _reduce_2d(tuple(k[0]), tuple(k[1]))
    smax = isqrt(2 * bound // norm2(u)) + 1
    tmax = isqrt(2 * bound // norm2(v)) + 1
    found = {}
    for s in range(0, smax + 1):
        trange = range(-tmax, tmax + 1) if s else range(1, tmax + 1)
        for t in trange:
            qv = tuple(s * u[i] + t * v[i] for i in range(3))
            q2 = norm2(qv)
            if q2 == 0 or q2 > bound:
                continue
            if gcd(gcd(qv[0], qv[1]), qv[2]) != 1:
                continue
            for ell in (0, 1):
                scale = 1 << ell
                num = cross(rv, qv)
                if any((scale * x) % q2 for x in num):
                    continue
                mv = tuple(scale * x // q2 for x in num)
                if gcd(gcd(mv[0], mv[1]), mv[2]) != 1:
                    continue
                if cross(qv, mv) != tuple(scale * x for x in rv):
                    continue
                if gcd(sigma(Quat(0, *qv)), sigma(Quat(0, *mv))) != 1:
                    continue
                # canonical ordering: q is the shorter (then lexicographically
                # smaller) sign-fixed axis; the sign of m then follows from the
                # cross-product identity
                a, b = primitive_vector(qv), primitive_vector(mv)
                qc, mc = sorted((a, b), key=lambda w: (norm2(w), w))
                if cross(qc, mc) != tuple(scale * x for x in rv):
                    mc = tuple(-x for x in mc)
                key = (norm2(qc), qc, mc, ell)
                if key not in found:
                    dec = OrthDecomposition(Quat(0, *qc), Quat(0, *mc), ell)
                    assert dec.q * dec.m == Quat(0, *(scale * x for x in rv))
                    assert dec.q * dec.m == -(dec.m * dec.q)
                    found[key] = dec
    return [found[k] for k in sorted(found)]


def decompose_orthogonal(r: Quat) -> OrthDecomposition | None:
    """Canonical orthogonal factorization of a vectorial quaternion, or None."""
    decs = orthogonal_decompositions(r)
    return decs[0] if decs else None


# ------------------------------------------------------- general twofold scan
def twofold_symmetries(r: Quat) -> list[Quat]:
    """All twofold rotations that are symmetry operations of L(R(r)) for the
    primitive cubic lattice, found by exact search (coincidence index of a
    symmetry divides Sigma(r); candidates are then verified by containment)."""
    p = r.primitive()
    s = sigma(p)
    divisors = [d for d in range(1, s + 1) if s % d == 0]
    out = []
    seen = set()
    for d in divisors:
        for n2 in (d, 2 * d):
            for qv in _vectors_norm(n2):
                if qv in seen:
                    continue
                seen.add(qv)
                q = Quat(0, *qv)
                t = _mul4(_conj4(q.num), p.num)
                if any((2 * x) % n2 for x in t):
                    continue
                if is_symmetry_operation(q, p):
                    out.append(q)
    out.sort(key=lambda q: (norm2(q.vector), q.num))
    return out


# ---------------------------------------------------------- classification
def _conjugate_group(group: SymmetryGroup, u: Quat) -> SymmetryGroup:
    un = u.primitive().num
    ui = _conj4(un)
    conj = lambda q: Quat(*_canon4(_mul4(_mul4(un, q.num), ui)))
    return SymmetryGroup(
        group.system,
        group.order,
        tuple(conj(g) for g in group.generators),
        tuple(sorted((conj(e) for e in group.elements), key=lambda q: q.num)),
    )


def symmetry_group(r: Quat) -> SymmetryGroup:
    """Point group (proper rotations) of the CSL of R(r), for rotations
    equivalent to a twofold rotation; raises for the general case."""
    p = r.primitive()
    form = classify_form(p)
    if form.tag == "unit":
        return _group_from_generators((Quat(1, 1, 0, 0), Quat(1, 1, 1, 1)), "cubic")
    if form.tag == "general":
        raise ValueError(
            "symmetry classification requires a rotation equivalent to a "
            "twofold rotation; use the point-group oracle for the general case"
        )
    sig = sigma(p)
    if form.tag == "sixfold":
        base = _group_from_generators((Quat(3, 1, 1, 1), Quat(0, 1, -1, 0)), "hexagonal")
    elif form.tag == "mnnn":
        m, n = form.params
        twofold = Quat(0, n + m, n - m, -2 * n)
        if sig % 3 == 0:
            base = _group_from_generators((Quat(3, 1, 1, 1), twofold), "hexagonal")
        else:
            base = _group_from_generators((Quat(1, 1, 1, 1), twofold), "rhombohedral")
    elif form.tag == "mn00":
        m, n = form.params
        base = _group_from_generators((Quat(1, 1, 0, 0), Quat(0, 0, m, n)), "tetragonal")
    elif form.tag == "mnn0":
        m, n = form.params
        base = _group_from_generators((Quat(0, 1, 1, 0), Quat(0, n, -n, m)), "orthorhombic")
    else:  # vectorial
        c = form.canonical
        if _is_prime_power(sig):
            dec = None  # only the minimal, monoclinic case is possible
        else:
            dec = decompose_orthogonal(c)
        if dec is None:
            base = _group_from_generators((c,), "monoclinic")
        else:
            base = _group_from_generators((c, dec.q), "orthorhombic")
    u, _v = form.conjugators
    return _conjugate_group(base, u)


def _is_prime_power(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            while n % d == 0:
                n //= d
            return n == 1
        d += 1
    return True

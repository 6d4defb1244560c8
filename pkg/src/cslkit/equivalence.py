"""The cubic rotation group as quaternions, double-coset equivalence of
coincidence rotations, canonical class representatives, and the counting
formulas for the number of rotations and classes per coincidence index.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt

from .cslcore import sigma
from .quat import Quat, Tup4, _canon4, _conj4, _mul4


def _build_unit_quaternions() -> tuple[Tup4, ...]:
    units = set()
    for pos in range(4):
        for s in (1, -1):
            q = [0, 0, 0, 0]
            q[pos] = s
            units.add(tuple(q))
    for i, j in itertools.combinations(range(4), 2):
        for si in (1, -1):
            for sj in (1, -1):
                q = [0, 0, 0, 0]
                q[i], q[j] = si, sj
                units.add(tuple(q))
    for signs in itertools.product((1, -1), repeat=4):
        units.add(signs)
    assert len(units) == 48
    return tuple(sorted(units))


#: the 48 primitive quaternions covering the proper cubic rotation group twice
CUBIC_UNITS_48: tuple[Tup4, ...] = _build_unit_quaternions()

#: one sign-canonical quaternion per rotation of 432 (order 24)
CUBIC_GROUP_24: tuple[Tup4, ...] = tuple(sorted({_canon4(q) for q in CUBIC_UNITS_48}))
_CUBIC_SET = frozenset(CUBIC_GROUP_24)


def is_cubic_rotation(t: Tup4) -> bool:
    return _canon4(t) in _CUBIC_SET


@dataclass(frozen=True)
class IntersectionGroup:
    """H(R): the rotations of 432 that R conjugates back into 432."""

    elements: tuple[Quat, ...]
    order: int
    label: str


_H_LABELS = {1: "1", 2: "2 (monoclinic)", 3: "3 (trigonal)",
             4: "4 (tetragonal)", 6: "32 (trigonal)", 24: "432 (cubic)"}


def intersection_group(r: Quat) -> IntersectionGroup:
    p = r.primitive()
    rn = p.num
    rc = _conj4(rn)
    elements = []
    for g in CUBIC_GROUP_24:
        t = _mul4(_mul4(rn, g), rc)
        if _canon4(t) in _CUBIC_SET:
            elements.append(Quat(*g))
    order = len(elements)
    assert order in _H_LABELS, f"impossible H(R) order {order}"
    return IntersectionGroup(tuple(elements), order, _H_LABELS[order])


@lru_cache(maxsize=None)
def _class_data(rep: Tup4):
    """All members of the double coset of `rep`, with one witness (u, v) per
    member such that member = canon(u * rep * v)."""
    e = (1, 0, 0, 0)
    members = {_canon4(rep): (e, e)}
    for u in CUBIC_GROUP_24:
        ur = _mul4(u, rep)
        for v in CUBIC_GROUP_24:
            m = _canon4(_mul4(ur, v))
            if m not in members:
                members[m] = (u, v)
    return members


def class_members(r: Quat, grimmer: bool = False) -> frozenset[Tup4]:
    p = r.primitive().num
    members = frozenset(_class_data(p))
    if grimmer:
        members = members | frozenset(_class_data(_canon4(_conj4(p))))
    return members


def equivalent(r: Quat, s: Quat, grimmer: bool = False) -> bool:
    """Double-coset equivalence; with `grimmer` the inverse rotation is
    identified as well."""
    return s.primitive().num in class_members(r, grimmer=grimmer)


def canonical_rep(r: Quat, grimmer: bool = False) -> Quat:
    """Lexicographically smallest sign-canonical member of the class."""
    return Quat(*min(class_members(r, grimmer=grimmer)))


def inverse_rep(r: Quat) -> Quat:
    """Canonical representative of the class of the inverse rotation."""
    return canonical_rep(Quat(*_conj4(r.primitive().num)))


# ------------------------------------------------------------- classification
@dataclass(frozen=True)
class FormClass:
    """Which canonical quaternion shape the class of r reduces to.

    tag is one of 'unit', 'sixfold', 'mnnn', 'mn00', 'mnn0', 'vectorial',
    'general'.  `canonical` is the canonical-form member of the class and
    (u, v) are witness conjugators with r = u * canonical * v up to scale.
    """

    tag: str
    params: tuple[int, ...]
    canonical: Quat
    conjugators: tuple[Quat, Quat]

    @property
    def is_twofold_equivalent(self) -> bool:
        return self.tag != "general"


def _witness_for(r: Quat, member: Tup4) -> tuple[Quat, Quat]:
    """Conjugators (u, v) with r = u * member * v up to scale and sign."""
    p = r.primitive().num
    u, v = _class_data(p)[member]
    # member = canon(u * p * v)  =>  p = u^-1 * member * v^-1 up to scale
    ui, vi = _conj4(u), _conj4(v)
    check = _canon4(_mul4(_mul4(ui, member), vi))
    assert check == p
    return Quat(*ui), Quat(*vi)


def classify_form(r: Quat) -> FormClass:
    return _classify_form_cached(r.primitive().num)


@lru_cache(maxsize=None)
def _classify_form_cached(p: Tup4) -> FormClass:
    r = Quat(*p)
    if p in _CUBIC_SET:
        return FormClass("unit", (), Quat(1, 0, 0, 0), (Quat(*p), Quat(1, 0, 0, 0)))
    if sigma(r) == 3:
        member = (0, 1, 1, 1)
        assert member in _class_data(p)
        return FormClass("sixfold", (), Quat(*member), _witness_for(r, member))

    members = _class_data(p)
    axis_hits: dict[str, list[Tup4]] = {"mnnn": [], "mn00": [], "mnn0": []}
    vectorial: list[Tup4] = []
    for m in members:
        m0, a, b, c = m
        if m0 == 0:
            vectorial.append(m)
        elif m0 > 0 and a > 0:
            if a == b == c:
                axis_hits["mnnn"].append(m)
            elif b == c == 0:
                axis_hits["mn00"].append(m)
            elif a == b and c == 0:
                axis_hits["mnn0"].append(m)

    norm = lambda m: m[0] ** 2 + m[1] ** 2 + m[2] ** 2 + m[3] ** 2
    for tag in ("mnnn", "mn00", "mnn0"):
        if axis_hits[tag]:
            # the fourfold case contains both (m,n,0,0) and (n,m,0,0): fix m > n
            key = (lambda m: (norm(m), -m[0], m)) if tag == "mn00" \
                else (lambda m: (norm(m), m))
            best = min(axis_hits[tag], key=key)
            return FormClass(tag, (best[0], best[1]), Quat(*best), _witness_for(r, best))
    if vectorial:
        best = min(vectorial, key=lambda m: (norm(m), tuple(sorted(m[1:], reverse=True))))
        return FormClass("vectorial", tuple(sorted((abs(x) for x in best[1:]), reverse=True)),
                         Quat(*best), _witness_for(r, best))
    return FormClass("general", (), Quat(*p), (Quat(1, 0, 0, 0), Quat(1, 0, 0, 0)))


# ------------------------------------------------------------------- counting
@dataclass(frozen=True)
class CountReport:
    sigma: int
    n1: int
    n2: int
    n3: int
    n4: int
    n5: int
    f: int
    f_ineq: int


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def total_rotation_count(sig: int) -> int:
    """f(Sigma): number of CSLs of index Sigma (0 for even Sigma)."""
    if sig % 2 == 0:
        return 0
    f = 1
    for prime, mult in _factorize(sig).items():
        f *= prime ** (mult - 1) * (prime + 1)
    return f


def counts(sig: int) -> CountReport:
    """Class counts per canonical form for an odd coincidence index.

    For Sigma = 1 the single class is the symmetry group itself and falls
    outside the n1..n5 bookkeeping; it is reported with all n_i zero.
    """
    if sig % 2 == 0 or sig < 1:
        raise ValueError(f"no coincidence rotations exist for even Sigma ({sig})")
    if sig == 1:
        return CountReport(1, 0, 0, 0, 0, 0, 1, 1)
    fac = _factorize(sig)
    primes = list(fac)
    n1 = 1 if sig == 3 else 0
    n2 = 2 ** (len(primes) - 1) if all(p % 4 == 1 for p in primes) else 0
    n3 = 0
    if sig > 3 and fac.get(3, 0) <= 1:
        others = [p for p in primes if p != 3]
        if all(p % 6 == 1 for p in others) and others:
            n3 = 2 ** (len(others) - 1)
    n4 = 0
    if sig > 3 and all(p % 8 in (1, 3) for p in primes):
        n4 = 2 ** (len(primes) - 1)
    f = total_rotation_count(sig)
    rem = f - 4 * n1 - 6 * n2 - 8 * n3 - 12 * n4
    assert rem >= 0 and rem % 24 == 0, f"count decomposition failed for {sig}"
    n5 = rem // 24
    return CountReport(sig, n1, n2, n3, n4, n5, f, n1 + n2 + n3 + n4 + n5)


# ---------------------------------------------------------------- enumeration
def _primitive_norm_solutions(n2: int):
    """All primitive sign-canonical integer quaternions with |r|^2 = n2."""
    out = []
    top = isqrt(n2)
    for a in range(top + 1):
        ra = n2 - a * a
        tb = isqrt(ra)
        for b in range(-tb, tb + 1):
            rb = ra - b * b
            tc = isqrt(rb)
            for c in range(-tc, tc + 1):
                d2 = rb - c * c
                d = isqrt(d2)
                if d * d != d2:
                    continue
                for dd in ((d, -d) if d else (0,)):
                    q = (a, b, c, dd)
                    if gcd(gcd(a, b), gcd(c, dd)) != 1:
                        continue
                    out.append(_canon4(q))
    return sorted(set(out))


@lru_cache(maxsize=None)
def enumerate_rotations(sig: int) -> tuple[Quat, ...]:
    """All coincidence rotations of index Sigma, as canonical quaternions."""
    if sig % 2 == 0:
        raise ValueError(f"no coincidence rotations exist for even Sigma ({sig})")
    found = []
    for n2 in (sig, 2 * sig, 4 * sig):
        found.extend(_primitive_norm_solutions(n2))
    quats = tuple(Quat(*t) for t in sorted(set(found)))
    return quats


@lru_cache(maxsize=None)
def enumerate_classes(sig: int, grimmer: bool = False) -> tuple[tuple[FormClass, Quat], ...]:
    """One canonical representative per equivalence class of index Sigma."""
    remaining = {q.num for q in enumerate_rotations(sig)}
    classes = []
    while remaining:
        seed = min(remaining)
        members = class_members(Quat(*seed), grimmer=grimmer)
        assert members <= remaining
        remaining -= members
        rep = Quat(*min(members))
        classes.append((classify_form(rep), rep))
    classes.sort(key=lambda c: c[1].num)
    return tuple(classes)

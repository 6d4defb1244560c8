"""Bravais class and lattice parameters of each CSL, for all three cubic
lattice kinds, plus the table generator reproducing the published reference
layout and an oracle-backed conventional-cell validator.

Lattice parameters are stored as exact squares (a^2, b^2, c^2); square roots
only ever appear in display formatting.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .cslcore import csl, sigma
from .equivalence import (
    FormClass,
    class_members,
    classify_form,
    enumerate_classes,
    inverse_rep,
)
from .lattice import (
    ExactLattice,
    adjugate3_rows,
    cubic_lattice,
    det3_rows,
    intersect,
    point_group,
    short_vectors,
    transform,
)
from .linalg import dot, kernel_columns, norm2, primitive_vector
from .quat import Quat, cayley
from .symmetry import decompose_orthogonal, twofold_symmetries

SYMBOL_SYSTEMS = {
    "hP": "hexagonal", "hR": "rhombohedral",
    "tP": "tetragonal", "tI": "tetragonal",
    "oP": "orthorhombic", "oC": "orthorhombic", "oI": "orthorhombic", "oF": "orthorhombic",
    "mP": "monoclinic", "mC": "monoclinic",
    "aP": "triclinic",
    "cP": "cubic", "cI": "cubic", "cF": "cubic",
}

CENTERING_COUNT = {"P": 1, "C": 2, "I": 2, "F": 4, "R": 3}


@dataclass(frozen=True)
class BravaisReport:
    symbol: str
    params: tuple[Fraction | None, Fraction | None, Fraction | None]
    setting_note: str = ""

    @property
    def system(self) -> str:
        return SYMBOL_SYSTEMS[self.symbol]




# ------------------------------------------------------------- axis helpers
def _axis_multiplier(lat: ExactLattice, w) -> int:
    """Smallest k >= 1 with k*w in the integer-numerator lattice of `lat`."""
    adj = adjugate3_rows(lat.hnf)
    det = abs(det3_rows(lat.hnf))
    coeff = tuple(sum(adj[i][k] * w[k] for k in range(3)) for i in range(3))
    g = gcd(gcd(coeff[0], coeff[1]), coeff[2])
    return det // gcd(det, g)


def _axis_c2(lat: ExactLattice, axis) -> Fraction:
    """Squared length of the shortest lattice vector parallel to `axis`."""
    w = primitive_vector(axis)
    k = _axis_multiplier(lat, w)
    return Fraction(k * k * norm2(w), lat.den * lat.den)


def _plane_split_index(lat: ExactLattice, axis) -> int:
    """Index of (plane sublattice + axis line) inside the lattice: 1 for a
    primitive monoclinic stacking, 2 for a centered one."""
    w = primitive_vector(axis)
    h = lat.hnf
    row = tuple(sum(w[i] * h[i][j] for i in range(3)) for j in range(3))
    plane_coeffs = kernel_columns([row])
    plane = [tuple(sum(h[i][j] * c[j] for j in range(3)) for i in range(3))
             for c in plane_coeffs]
    assert len(plane) == 2
    k = _axis_multiplier(lat, w)
    axis_vec = tuple(k * x for x in w)
    cell = tuple((plane[0][i], plane[1][i], axis_vec[i]) for i in range(3))
    idx = abs(det3_rows(cell)) // abs(det3_rows(h))
    assert idx in (1, 2), f"unexpected monoclinic stacking index {idx}"
    return idx


def _monoclinic_report(kind: str, r: Quat, axis) -> BravaisReport:
    lat = csl(kind, r)
    idx = _plane_split_index(lat, axis)
    c2 = _axis_c2(lat, axis)
    symbol = "mP" if idx == 1 else "mC"
    return BravaisReport(symbol, (None, None, c2), "unique axis along the twofold")


# --------------------------------------------------------------- closed form
def bravais(kind: str, r: Quat) -> BravaisReport:
    """Bravais class of the CSL of R(r) in the given cubic lattice, by the
    closed-form case split (requires r equivalent to a twofold rotation)."""
    if kind not in ("cP", "cI", "cF"):
        raise ValueError(f"unknown lattice kind {kind!r}")
    p = r.primitive()
    form = classify_form(p)
    if form.tag == "general":
        raise ValueError(
            "Bravais classification requires a rotation equivalent to a "
            "twofold rotation; general rotations are out of scope"
        )
    sig = sigma(p)
    F = Fraction
    if form.tag == "unit":
        return BravaisReport(kind, (F(1), F(1), F(1)), "CSL equals the lattice")
    if form.tag in ("sixfold", "mnnn"):
        hexagonal = sig % 3 == 0
        if kind == "cP":
            a2 = F(2 * sig, 3) if hexagonal else F(2 * sig)
            c2 = F(3)
        elif kind == "cI":
            a2 = F(2 * sig, 3) if hexagonal else F(2 * sig)
            c2 = F(3, 4)
        else:
            a2 = F(sig, 6) if hexagonal else F(sig, 2)
            c2 = F(3)
        return BravaisReport("hP" if hexagonal else "hR", (a2, a2, c2),
                             "" if hexagonal else "triple hexagonal setting")
    if form.tag == "mn00":
        if kind == "cP":
            return BravaisReport("tP", (F(sig), F(sig), F(1)))
        a2 = F(sig) if kind == "cI" else F(sig, 2)
        return BravaisReport("tI", (a2, a2, F(1)))
    if form.tag == "mnn0":
        m, n = form.params
        if kind == "cP":
            return BravaisReport("oC", (F(2), F(sig), F(2 * sig)), "B-face centered")
        if kind == "cI":
            if (m % 2 == 1 and n % 2 == 0) or m % 4 == 0:
                return BravaisReport("oF", (F(2), F(sig), F(2 * sig)))
            return BravaisReport("oC", (F(2), F(sig, 4), F(2 * sig)), "B-face centered")
        if (m % 2 == 1 and n % 2 == 0) or m % 4 == 0:
            return BravaisReport("oI", (F(1, 2), F(sig, 2), F(sig)))
        return BravaisReport("oC", (F(1, 2), F(sig, 2), F(sig)), "C-face centered")

    # vectorial case: orthorhombic when an orthogonal factorization exists,
    # monoclinic otherwise
    c = form.canonical
    rv = c.vector
    rv2 = norm2(rv)
    dec = decompose_orthogonal(c)
    if dec is None:
        lat_axis = rv
        who = _monoclinic_report(kind, p, _conjugated_axis(form, lat_axis))
        # cross-check the closed-form parity rules
        if kind == "cP":
            assert who.symbol == ("mP" if rv2 % 2 else "mC")
            assert who.params[2] == (F(rv2))
        else:
            assert who.symbol == ("mP" if rv2 % 4 == 3 else "mC")
        return who

    qv, mv, ell = dec.q.vector, dec.m.vector, dec.ell
    q2, m2 = norm2(qv), norm2(mv)
    if ell == 0 and q2 % 2 == 0:
        pass  # q is the even axis by convention below
    elif ell == 0 and m2 % 2 == 0:
        qv, mv = mv, tuple(-x for x in qv)
        q2, m2 = m2, q2
    if ell == 0 and q2 % 2 == 1 and m2 % 2 == 1:
        case = "odd"
    elif ell == 0:
        case = "mixed"   # q even, m odd, |r|^2 even
    else:
        case = "half"    # both even, |r|^2 odd
    if kind == "cP":
        if case == "odd":
            return BravaisReport("oP", (F(q2), F(m2), F(sig)))
        if case == "mixed":
            return BravaisReport("oC", (F(q2), F(m2), F(2 * sig)), "B-face centered")
        return BravaisReport("oC", (F(q2), F(m2), F(sig)), "C-face centered")
    if kind == "cI":
        if case == "odd":
            return BravaisReport("oI", (F(q2), F(m2), F(sig)))
        if case == "mixed":
            if m2 % 4 == 3:
                return BravaisReport("oC", (F(q2), F(m2, 4), F(2 * sig)), "B-face centered")
            return BravaisReport("oF", (F(q2), F(m2), F(2 * sig)))
        if rv2 % 4 == 3:
            return BravaisReport("oC", (F(q2), F(m2), F(sig, 4)), "C-face centered")
        return BravaisReport("oF", (F(q2), F(m2), F(sig)))
    # cF
    if case == "odd":
        return BravaisReport("oF", (F(q2), F(m2), F(sig)))
    if case == "mixed":
        t = tuple((rv[i] + qv[i]) for i in range(3))
        assert all(x % 2 == 0 for x in t)
        t = tuple(x // 2 for x in t)
        if norm2(t) % 4 == 2:
            return BravaisReport("oC", (F(q2, 4), F(m2), F(sig, 2)), "B-face centered")
        t2 = tuple(t[i] + mv[i] for i in range(3))
        assert norm2(t2) % 4 == 2
        return BravaisReport("oI", (F(q2, 4), F(m2), F(sig, 2)))
    t = tuple((qv[i] + mv[i]) for i in range(3))
    assert all(x % 2 == 0 for x in t)
    t = tuple(x // 2 for x in t)
    if norm2(t) % 4 == 2:
        return BravaisReport("oC", (F(q2, 4), F(m2, 4), F(sig)), "C-face centered")
    t2 = tuple(t[i] + rv[i] for i in range(3))
    assert norm2(t2) % 4 == 2
    return BravaisReport("oI", (F(q2, 4), F(m2, 4), F(sig)))


def _conjugated_axis(form: FormClass, axis):
    """Map an axis stated for the canonical class member into the frame of the
    original quaternion via the witness conjugators (directions only)."""
    u, _ = form.conjugators
    return primitive_vector(cayley(u).apply_int(axis))


def bravais_any(kind: str, r: Quat) -> BravaisReport:
    """Bravais class for any coincidence rotation: the closed-form result when
    r is equivalent to a twofold rotation, otherwise an exact lattice-based
    determination (twofold symmetries found by bounded search)."""
    p = r.primitive()
    if classify_form(p).is_twofold_equivalent:
        return bravais(kind, p)
    axes = twofold_symmetries(p)
    if not axes:
        return BravaisReport("aP", (None, None, None), "no rotational symmetry")
    if len(axes) == 1:
        return _monoclinic_report(kind, p, axes[0].vector)
    raise NotImplementedError(
        f"unexpected symmetry for a general-class rotation {p}: "
        f"{len(axes)} twofold axes"
    )


# ------------------------------------------------------------------ the table
@dataclass(frozen=True)
class TableRow:
    sigma: int
    reps: tuple[Quat, ...]           # one class, or two mutually inverse classes
    display: tuple[str, ...]
    reports: dict

    def symbols(self, kinds) -> tuple[str, ...]:
        return tuple(self.reports[k].symbol for k in kinds)


def _display_rep(form: FormClass, rep: Quat, grimmer: bool = False) -> Quat:
    members = class_members(rep, grimmer=grimmer)
    if form.tag == "unit":
        return Quat(1, 0, 0, 0)
    if form.tag == "sixfold":
        return Quat(0, 1, 1, 1)
    if form.tag in ("mnnn", "mn00", "mnn0"):
        return form.canonical
    if form.tag == "vectorial":
        return Quat(0, *form.params)
    # general: smallest norm, then largest |real part| (the near-symmetric
    # pairs print as (r0, sorted spatial) and its negated-real partner)
    best = None
    for m in members:
        for cand in (m, tuple(-x for x in m)):
            sp = cand[1:]
            if sp[0] >= sp[1] >= sp[2] >= 0:
                key = (sum(x * x for x in cand), -abs(cand[0]), cand[0] < 0, sp)
                if best is None or key < best[0]:
                    best = (key, cand)
    assert best is not None
    return Quat(*best[1])


def table(max_sigma: int, kinds=("cP", "cI", "cF"), grimmer: bool = False) -> list[TableRow]:
    """One row per equivalence class for 3 <= Sigma <= max_sigma (odd), with
    mutually inverse class pairs merged into a single row the way the
    published table prints them."""
    if max_sigma < 3:
        raise ValueError("max_sigma must be at least 3")
    if max_sigma % 2 == 0:
        raise ValueError(
            f"no coincidence rotations exist for even Sigma ({max_sigma}); "
            "use an odd bound"
        )
    rows = []
    for sig in range(3, max_sigma + 1, 2):
        classes = enumerate_classes(sig, grimmer=grimmer)
        by_rep = {rep.num: (form, rep) for form, rep in classes}
        seen = set()
        for form, rep in classes:
            if rep.num in seen:
                continue
            seen.add(rep.num)
            group = [(form, rep)]
            inv = inverse_rep(rep)
            if inv.num != rep.num and inv.num in by_rep and not grimmer:
                seen.add(inv.num)
                group.append(by_rep[inv.num])
            reports = {k: bravais_any(k, rep) for k in kinds}
            for _f2, rep2 in group[1:]:
                reports2 = {k: bravais_any(k, rep2) for k in kinds}
                assert all(reports2[k].symbol == reports[k].symbol for k in kinds)
            disp = [_display_rep(f, q, grimmer=grimmer) for f, q in group]
            order = sorted(range(len(group)), key=lambda i: (disp[i].num[0] < 0,
                                                             disp[i].num))
            rows.append(TableRow(sig, tuple(group[i][1] for i in order),
                                 tuple(str(disp[i]) for i in order), reports))
    rows.sort(key=lambda row: (row.sigma,
                               sum(x * x for x in row.reps[0].num),
                               row.display))
    return rows


# ------------------------------------------------------------------- export
def _fmt_frac(x: Fraction | None) -> str:
    return "" if x is None else str(x)


def table_to_csv(rows, kinds=("cP", "cI", "cF")) -> str:
    header = ["sigma", "quaternion"] + list(kinds)
    for k in kinds:
        header += [f"a2_{k}", f"b2_{k}", f"c2_{k}"]
    lines = [",".join(header)]
    for row in rows:
        cells = [str(row.sigma), " ".join(row.display)]
        cells += [row.reports[k].symbol for k in kinds]
        for k in kinds:
            cells += [_fmt_frac(p) for p in row.reports[k].params]
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def table_to_text(rows, kinds=("cP", "cI", "cF")) -> str:
    header = ["sigma", "r"] + [f"CSL({k})" for k in kinds]
    body = [[str(row.sigma), " ".join(row.display)]
            + [row.reports[k].symbol for k in kinds] for row in rows]
    widths = [max(len(line[i]) for line in [header] + body) for i in range(len(header))]
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    lines = [fmt.format(*header)] + [fmt.format(*line) for line in body]
    return "\n".join(line.rstrip() for line in lines) + "\n"


def table_to_markdown(rows, kinds=("cP", "cI", "cF")) -> str:
    header = "| Sigma | r | " + " | ".join(f"CSL ({k})" for k in kinds) + " |"
    sep = "|" + "---|" * (2 + len(kinds))
    lines = [header, sep]
    for row in rows:
        cells = [str(row.sigma), " ".join(row.display)]
        cells += [row.reports[k].symbol for k in kinds]
        lines.append("| " + " | ".join(cells) + " |")
    return "\n".join(lines) + "\n"


def table_to_json(rows, kinds=("cP", "cI", "cF")) -> list[dict]:
    out = []
    for row in rows:
        entry = {
            "sigma": row.sigma,
            "representatives": list(row.display),
            "classes": len(row.reps),
        }
        for k in kinds:
            rep = row.reports[k]
            entry[k] = {
                "symbol": rep.symbol,
                "system": rep.system,
                "params_squared": [None if p is None else [p.numerator, p.denominator]
                                   for p in rep.params],
                "setting": rep.setting_note,
            }
        out.append(entry)
    return out


# ------------------------------------------------- conventional cell validation
def _oracle_lattice(kind: str, r: Quat) -> ExactLattice:
    base = cubic_lattice(kind)
    return intersect(base, transform(cayley(r.primitive()), base))


def _cosets(cell_cols, lat: ExactLattice):
    cell = tuple(tuple(cell_cols[j][i] for j in range(3)) for i in range(3))
    det_c = det3_rows(cell)
    adj_c = adjugate3_rows(cell)
    if det_c < 0:
        det_c, adj_c = -det_c, tuple(tuple(-x for x in row) for row in adj_c)
    idx = det_c // abs(det3_rows(lat.hnf))
    gens = []
    for col in lat.basis_columns():
        y = tuple(sum(adj_c[i][k] * col[k] for k in range(3)) % det_c for i in range(3))
        gens.append(y)
    cosets = {(0, 0, 0)}
    frontier = [(0, 0, 0)]
    while frontier:
        base_pt = frontier.pop()
        for g in gens:
            nxt = tuple((base_pt[i] + g[i]) % det_c for i in range(3))
            if nxt not in cosets:
                cosets.add(nxt)
                frontier.append(nxt)
    return idx, det_c, cosets


def _centering_matches(letter: str, idx: int, det_c: int, cosets) -> bool:
    if idx != CENTERING_COUNT[letter] or len(cosets) != idx:
        return False
    if letter == "P":
        return True
    nontrivial = [c for c in cosets if any(c)]
    if letter == "R":
        return all(all((3 * x) % det_c == 0 for x in c) for c in nontrivial)
    if any(any((2 * x) % det_c for x in c) for c in nontrivial):
        return False
    patterns = {tuple(0 if x == 0 else 1 for x in c) for c in nontrivial}
    if letter == "I":
        return patterns == {(1, 1, 1)}
    if letter == "C":
        return len(patterns) == 1 and sum(patterns.pop()) == 2
    if letter == "F":
        return patterns == {(1, 1, 0), (1, 0, 1), (0, 1, 1)}
    return False


def conventional_cell_check(kind: str, r: Quat, report: BravaisReport | None = None) -> bool:
    """Verify a Bravais report against the brute-force CSL: search the lattice
    for a conventional cell with the reported metric and centering."""
    if report is None:
        report = bravais_any(kind, r)
    lat = _oracle_lattice(kind, r)
    system = report.system
    d2 = lat.den * lat.den

    if system == "triclinic":
        return sum(1 for q in point_group(lat) if det3_rows(q.num) == q.den ** 3) == 1

    if system == "monoclinic":
        target_c2 = report.params[2] * d2
        if target_c2.denominator != 1:
            return False
        want_idx = CENTERING_COUNT[report.symbol[1]]
        for q in point_group(lat):
            if det3_rows(q.num) != q.den ** 3:
                continue
            tr = sum(q.num[i][i] for i in range(3))
            if tr != -q.den:  # twofold rotations have trace -1
                continue
            axis = _twofold_axis(q)
            if _axis_c2(lat, axis) * d2 == target_c2 and \
                    _plane_split_index(lat, axis) == want_idx:
                return True
        return False

    targets = []
    for p in report.params:
        t = p * d2
        if t.denominator != 1:
            return False
        targets.append(int(t))
    bound = max(targets)
    shells: dict[int, list] = {}
    for v in short_vectors(lat, bound):
        shells.setdefault(norm2(v), []).append(v)

    if system in ("hexagonal", "rhombohedral"):
        a2, _, c2 = targets
        half = a2 // 2 if a2 % 2 == 0 else None
        if half is None:
            return False
        for u in shells.get(a2, ()):
            for v in shells.get(a2, ()):
                if abs(dot(u, v)) != half:
                    continue
                for w in shells.get(c2, ()):
                    if dot(u, w) or dot(v, w):
                        continue
                    idx, det_c, cosets = _cosets((u, v, w), lat)
                    expected = 1 if system == "hexagonal" else 3
                    if idx != expected or len(cosets) != idx:
                        continue
                    if system == "rhombohedral":
                        if not _centering_matches("R", idx, det_c, cosets):
                            continue
                        if _axis_c2(lat, w) * d2 != c2:
                            continue
                    return True
        return False

    # tetragonal / orthorhombic / cubic: mutually orthogonal triples
    from itertools import permutations

    letter = report.symbol[1]
    for pa, pb, pc in set(permutations(targets)):
        for u in shells.get(pa, ()):
            for v in shells.get(pb, ()):
                if dot(u, v):
                    continue
                for w in shells.get(pc, ()):
                    if dot(u, w) or dot(v, w):
                        continue
                    idx, det_c, cosets = _cosets((u, v, w), lat)
                    if _centering_matches(letter, idx, det_c, cosets):
                        return True
    return False


def _twofold_axis(q) -> tuple[int, int, int]:
    """Axis of an exact twofold rotation matrix: a nonzero column of Q + I."""
    cols = tuple(
        tuple(q.num[i][j] + (q.den if i == j else 0) for i in range(3))
        for j in range(3)
    )
    col = next(c for c in cols if any(c))
    return primitive_vector(col)

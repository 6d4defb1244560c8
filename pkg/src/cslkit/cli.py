"""Command line frontend.

Subcommands: classify (one rotation), enumerate (rotations or classes of one
index), table (the Bravais-class table), count (class counting), verify (the
oracle cross-check suites).  Exit codes: 0 success, 1 verification failure,
2 input error, 3 I/O error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from math import lcm

from .bravais import (
    bravais_any,
    table,
    table_to_csv,
    table_to_json,
    table_to_markdown,
    table_to_text,
)
from .cslcore import csl, sigma_ell
from .equivalence import (
    classify_form,
    counts,
    enumerate_classes,
    enumerate_rotations,
    intersection_group,
)
from .lattice import LATTICE_KINDS
from .linalg import Mat3
from .quat import Quat, crystallographic_name, parse_quat, quat_from_matrix
from .symmetry import (
    minimal_symmetry_group,
    orthogonal_decompositions,
    symmetry_group,
    twofold_symmetries,
)
from .verify import SUITES, run_suite

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_INPUT = 2
EXIT_IO = 3

_FORM_NAMES = {
    "unit": "symmetry rotation (Sigma = 1)",
    "sixfold": "sixfold class (Sigma = 3)",
    "mnnn": "(m,n,n,n) threefold-axis class",
    "mn00": "(m,n,0,0) fourfold-axis class",
    "mnn0": "(m,n,n,0) twofold-axis class",
    "vectorial": "general twofold class (0,l,m,n)",
    "general": "general class (not equivalent to a twofold rotation)",
}


def _parse_matrix(text: str) -> Mat3:
    rows = [r for r in text.replace(",", " ").split(";") if r.strip()]
    if len(rows) != 3:
        raise ValueError("matrix needs three ';'-separated rows")
    entries = [[Fraction(x) for x in row.split()] for row in rows]
    if any(len(row) != 3 for row in entries):
        raise ValueError("matrix rows need three entries")
    den = 1
    for row in entries:
        for x in row:
            den = lcm(den, x.denominator)
    num = tuple(tuple(int(x * den) for x in row) for row in entries)
    return Mat3(num, den)


def _quat_from_axis_cos(axis_text: str, cos_text: str) -> Quat:
    axis = tuple(int(x) for x in axis_text.replace("(", "").replace(")", "").split(","))
    if len(axis) != 3 or axis == (0, 0, 0):
        raise ValueError("axis needs three integers, not all zero")
    c = Fraction(cos_text)
    if not -1 <= c <= 1:
        raise ValueError("cosine out of range")
    n2 = sum(x * x for x in axis)
    if c == -1:
        return Quat(0, *axis).primitive()
    # (r0/t)^2 = |axis|^2 (1+cos)/(1-cos) must be a rational square
    ratio = Fraction(n2) * (1 + c) / (1 - c)
    num_root = _exact_sqrt(ratio.numerator)
    den_root = _exact_sqrt(ratio.denominator)
    if num_root is None or den_root is None:
        raise ValueError("axis/angle pair is not an exact rational rotation")
    r0 = Fraction(num_root, den_root)
    return Quat(r0.numerator, *(x * r0.denominator for x in axis)).primitive()


def _exact_sqrt(n: int) -> int | None:
    from math import isqrt

    r = isqrt(n)
    return r if r * r == n else None


def _classify_payload(q: Quat) -> dict:
    p = q.primitive()
    sig, ell = sigma_ell(p)
    form = classify_form(p)
    mini = minimal_symmetry_group(p)
    payload = {
        "quaternion": str(p),
        "name": crystallographic_name(p),
        "sigma": sig,
        "ell": ell,
        "form": {"tag": form.tag, "label": _FORM_NAMES[form.tag],
                 "params": list(form.params)},
        "h_order": intersection_group(p).order,
        "minimal_group": {"system": mini.system, "order": mini.order},
    }
    if form.is_twofold_equivalent:
        grp = symmetry_group(p)
        payload["symmetry_group"] = {
            "system": grp.system,
            "order": grp.order,
            "generators": [str(g) for g in grp.generators],
        }
        if form.tag in ("sixfold", "vectorial"):
            # empirical count only; no closed formula is claimed for this
            target = p if p.is_vectorial else form.canonical
            decs = orthogonal_decompositions(target)
            payload["orthogonal_factorizations"] = {
                "count": len(decs),
                "axes": [f"{d.q.vector} x {d.m.vector} (ell={d.ell})" for d in decs],
            }
    else:
        axes = twofold_symmetries(p)
        payload["symmetry_group"] = {
            "system": "monoclinic" if axes else "triclinic",
            "order": 2 if axes else 1,
            "generators": [str(a) for a in axes],
            "note": "found by exact twofold search; closed-form classification "
                    "covers only twofold-equivalent rotations",
        }
    payload["bravais"] = {}
    for kind in LATTICE_KINDS:
        rep = bravais_any(kind, p)
        payload["bravais"][kind] = {
            "symbol": rep.symbol,
            "system": rep.system,
            "params_squared": [None if x is None else str(x) for x in rep.params],
            "setting": rep.setting_note,
        }
        payload.setdefault("csl", {})[kind] = json.loads(csl(kind, p).to_json())
    return payload


def _print_classify_text(payload: dict, out) -> None:
    print(f"rotation      {payload['quaternion']}   [{payload['name']}]", file=out)
    print(f"sigma         {payload['sigma']}   (|r|^2 = 2^{payload['ell']} * sigma)",
          file=out)
    form = payload["form"]
    params = f"  params {tuple(form['params'])}" if form["params"] else ""
    print(f"class         {form['label']}{params}", file=out)
    print(f"H(R) order    {payload['h_order']}", file=out)
    mini = payload["minimal_group"]
    print(f"minimal group {mini['system']} (order {mini['order']})", file=out)
    grp = payload["symmetry_group"]
    gens = ", ".join(grp["generators"]) or "-"
    print(f"point group   {grp['system']} (order {grp['order']}), generators: {gens}",
          file=out)
    if "note" in grp:
        print(f"              note: {grp['note']}", file=out)
    if "orthogonal_factorizations" in payload:
        facs = payload["orthogonal_factorizations"]
        axes = "; ".join(facs["axes"]) or "-"
        print(f"factorizations {facs['count']} orthogonal axis pair(s): {axes}", file=out)
    for kind in LATTICE_KINDS:
        b = payload["bravais"][kind]
        ps = ", ".join("-" if x is None else x for x in b["params_squared"])
        note = f"  [{b['setting']}]" if b["setting"] else ""
        print(f"CSL ({kind})      {b['symbol']} ({b['system']}), (a2,b2,c2) = ({ps}){note}",
              file=out)


def cmd_classify(args, out) -> int:
    sources = [s for s in (args.quaternion, args.matrix, args.axis) if s]
    if len(sources) != 1:
        print("classify needs exactly one of: quaternion, --matrix, --axis/--cos",
              file=sys.stderr)
        return EXIT_INPUT
    try:
        if args.matrix:
            mat = _parse_matrix(args.matrix)
            if mat.det() == -1:
                # an improper operation and its composition with the inversion
                # generate the same CSL, so classify the proper partner
                mat = -mat
            q = quat_from_matrix(mat)
        elif args.axis:
            if not args.cos:
                raise ValueError("--axis requires --cos")
            q = _quat_from_axis_cos(args.axis, args.cos)
        else:
            q = parse_quat(args.quaternion)
            if q.is_zero:
                raise ValueError("zero quaternion")
    except (ValueError, ZeroDivisionError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    payload = _classify_payload(q)
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True), file=out)
    else:
        _print_classify_text(payload, out)
    return EXIT_OK


def cmd_enumerate(args, out) -> int:
    sig = args.sigma
    if sig < 1 or sig % 2 == 0:
        print(f"input error: no coincidence rotations exist for even Sigma ({sig})",
              file=sys.stderr)
        return EXIT_INPUT
    if args.classes:
        from .bravais import _display_rep

        rows = enumerate_classes(sig, grimmer=args.grimmer)
        if args.format == "json":
            print(json.dumps([{"representative": str(_display_rep(f, r)),
                               "canonical": str(r), "class": f.tag,
                               "params": list(f.params)} for f, r in rows]), file=out)
        else:
            for form, rep in rows:
                print(f"{_display_rep(form, rep)}  {form.tag}", file=out)
    else:
        rots = enumerate_rotations(sig)
        if args.format == "json":
            print(json.dumps([str(r) for r in rots]), file=out)
        else:
            for r in rots:
                print(str(r), file=out)
    return EXIT_OK


def cmd_table(args, out) -> int:
    if args.max_sigma % 2 == 0:
        print(f"input error: even bound {args.max_sigma} rejected; f(Sigma) = 0 for "
              "even Sigma (no coincidence rotations), so table bounds are odd",
              file=sys.stderr)
        return EXIT_INPUT
    kinds = tuple(args.kinds.split(","))
    for k in kinds:
        if k not in LATTICE_KINDS:
            print(f"input error: unknown lattice kind {k}", file=sys.stderr)
            return EXIT_INPUT
    rows = table(args.max_sigma, kinds=kinds, grimmer=args.grimmer)
    if args.format == "csv":
        text = table_to_csv(rows, kinds)
    elif args.format == "json":
        text = json.dumps(table_to_json(rows, kinds), indent=2) + "\n"
    elif args.format == "text":
        text = table_to_text(rows, kinds)
    else:
        text = table_to_markdown(rows, kinds)
    print(text, end="", file=out)
    if args.plot:
        from .plotting import save_table_plot

        save_table_plot(rows, kinds, args.plot)
    return EXIT_OK


def cmd_count(args, out) -> int:
    lo = args.min_sigma if args.min_sigma % 2 else args.min_sigma + 1
    reports = [counts(s) for s in range(lo, args.max_sigma + 1, 2)]
    if args.format == "csv":
        print("sigma,n1,n2,n3,n4,n5,f,f_ineq", file=out)
        for c in reports:
            print(f"{c.sigma},{c.n1},{c.n2},{c.n3},{c.n4},{c.n5},{c.f},{c.f_ineq}",
                  file=out)
    elif args.format == "json":
        print(json.dumps([c.__dict__ for c in reports]), file=out)
    else:
        print(f"{'sigma':>6} {'n1':>4} {'n2':>4} {'n3':>4} {'n4':>4} {'n5':>4} "
              f"{'f':>6} {'f_ineq':>7}", file=out)
        for c in reports:
            print(f"{c.sigma:>6} {c.n1:>4} {c.n2:>4} {c.n3:>4} {c.n4:>4} {c.n5:>4} "
                  f"{c.f:>6} {c.f_ineq:>7}", file=out)
    if args.plot:
        from .plotting import save_counts_plot

        save_counts_plot(reports, args.plot)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    cap = int(os.environ.get("CSLKIT_MAX_SIGMA", "199"))
    if args.max_sigma is not None and args.max_sigma > cap and not args.force:
        print(f"input error: --max-sigma {args.max_sigma} exceeds the safety cap "
              f"{cap} (CSLKIT_MAX_SIGMA); pass --force to override", file=sys.stderr)
        return EXIT_INPUT
    names = args.suite or list(SUITES)
    for name in names:
        if name not in SUITES:
            print(f"input error: unknown suite {name}; available: {', '.join(SUITES)}",
                  file=sys.stderr)
            return EXIT_INPUT
    all_ok = True
    for name in names:
        func, _default = SUITES[name]
        doc = (func.__doc__ or "").strip().split("\n")[0]
        print(f"[{name}] {doc}", file=out)
        result = run_suite(name, args.max_sigma)
        print(result.summary(), file=out)
        for failure in result.failures:
            print(f"    {failure}", file=out)
        all_ok &= result.passed
    print("all verification suites passed" if all_ok
          else "verification FAILED (see failures above)", file=out)
    return EXIT_OK if all_ok else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cslkit",
        description="Exact coincidence site lattices of the cubic lattices: "
                    "classification, enumeration, Bravais tables and oracle "
                    "verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify one coincidence rotation")
    p.add_argument("quaternion", nargs="?",
                   help="quaternion '(a,b,c,d)', 'a,b,c,d' or '1/2(a,b,c,d)'")
    p.add_argument("--matrix", help="rational rotation matrix 'a b c; d e f; g h i'")
    p.add_argument("--axis", help="integer rotation axis 'l,m,n' (with --cos)")
    p.add_argument("--cos", help="exact rational cosine of the rotation angle")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("enumerate", help="list rotations or classes for one index")
    p.add_argument("sigma", type=int)
    p.add_argument("--classes", action="store_true",
                   help="list one representative per equivalence class")
    p.add_argument("--grimmer", action="store_true",
                   help="also identify R with its inverse rotation")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("table", help="Bravais classes of all CSLs up to a bound")
    p.add_argument("--max-sigma", type=int, default=59)
    p.add_argument("--kinds", default="cP,cI,cF")
    p.add_argument("--format", choices=("text", "csv", "md", "json"), default="md")
    p.add_argument("--grimmer", action="store_true",
                   help="merge classes of mutually inverse rotations")
    p.add_argument("--output", help="write to a file instead of stdout")
    p.add_argument("--plot", help="also render a Bravais-class histogram to this file")

    p = sub.add_parser("count", help="class counting per coincidence index")
    p.add_argument("--max-sigma", type=int, default=99)
    p.add_argument("--min-sigma", type=int, default=1)
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.add_argument("--output", help="write to a file instead of stdout")
    p.add_argument("--plot", help="also render the counts to this figure file")

    p = sub.add_parser("verify", help="run the oracle cross-check suites")
    p.add_argument("--max-sigma", type=int, default=None,
                   help="override the default bound of each suite")
    p.add_argument("--suite", action="append",
                   help=f"suite to run (repeatable): {', '.join(SUITES)}")
    p.add_argument("--force", action="store_true",
                   help="allow bounds above the CSLKIT_MAX_SIGMA cap")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {
        "classify": cmd_classify,
        "enumerate": cmd_enumerate,
        "table": cmd_table,
        "count": cmd_count,
        "verify": cmd_verify,
    }
    out = sys.stdout
    opened = None
    if getattr(args, "output", None):
        try:
            opened = open(args.output, "w", encoding="utf-8")
        except OSError as exc:
            print(f"i/o error: {exc}", file=sys.stderr)
            return EXIT_IO
        out = opened
    try:
        return handlers[args.command](args, out)
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    finally:
        if opened:
            opened.close()


if __name__ == "__main__":
    sys.exit(main())

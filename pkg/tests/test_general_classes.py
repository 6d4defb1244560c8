"""Classes that are not equivalent to any twofold rotation.

These only show up from Sigma = 39 on; their CSLs can still be monoclinic
(one twofold symmetry found by exact search) or genuinely triclinic, and the
brute-force point-group oracle is the referee for both.
"""
from cslkit.bravais import SYMBOL_SYSTEMS, bravais_any, conventional_cell_check, table
from cslkit.equivalence import class_members, classify_form
from cslkit.quat import Quat
from cslkit.symmetry import minimal_symmetry_group, twofold_symmetries
from cslkit.verify import PROPER_ORDER_BY_SYSTEM, _oracle_csl, _proper_order


def test_no_vectorial_member_in_general_classes():
    for q in (Quat(5, 3, 2, 1), Quat(5, 4, 3, 1), Quat(6, 4, 2, 1), Quat(1, 2, 3, 5)):
        assert classify_form(q).tag == "general"
        assert all(m[0] != 0 for m in class_members(q))


def test_monoclinic_general_class():
    r = Quat(5, 3, 2, 1)
    assert minimal_symmetry_group(r).order == 1
    axes = twofold_symmetries(r)
    assert len(axes) == 1
    for kind in ("cP", "cI", "cF"):
        rep = bravais_any(kind, r)
        assert rep.symbol == "mC"
        assert _proper_order(_oracle_csl(kind, r)) == 2
        assert conventional_cell_check(kind, r, rep)


def test_triclinic_general_class():
    # the smallest CSLs with no rotational symmetry at all appear at Sigma=71
    r = Quat(1, 15, 7, 3)
    assert classify_form(r).tag == "general"
    assert twofold_symmetries(r) == []
    for kind in ("cP", "cI", "cF"):
        rep = bravais_any(kind, r)
        assert rep.symbol == "aP"
        assert _proper_order(_oracle_csl(kind, r)) == 1
        assert conventional_cell_check(kind, r, rep)


def test_extended_table_agrees_with_oracle():
    # beyond the bundled reference range, every computed symbol still matches
    # the brute-force point group (spot range keeps the test fast)
    for row in table(69):
        if row.sigma <= 59:
            continue
        for kind in ("cP", "cI", "cF"):
            system = SYMBOL_SYSTEMS[row.reports[kind].symbol]
            assert _proper_order(_oracle_csl(kind, row.reps[0])) == \
                PROPER_ORDER_BY_SYSTEM[system], (row.sigma, row.display, kind)

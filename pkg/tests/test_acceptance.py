"""Acceptance suite: one test per acceptance criterion, each printing a
PASS/FAIL line (run with `pytest tests/test_acceptance.py -v -s` to see them).

All criteria are exact (zero tolerance).  Criterion 1 compares the computed
table row-for-row against the bundled reference transcription; two reference
entries at Sigma = 45 are provably inconsistent with the exact computation
(see the failure message, the 'table' verification suite and the oracle
cross-check test below), so that comparison reports those rows.
"""
import time

import pytest

from cslkit import verify


def _report(num, title, result):
    status = "PASS" if result.passed else "FAIL"
    print(f"\nACCEPTANCE {num} [{title}]: {status} "
          f"({result.checked} checks, {result.seconds:.1f}s)")
    for failure in result.failures:
        print(f"    {failure}")
    return result


def test_acceptance_1_table_reproduction():
    """Reference-table reproduction up to Sigma = 59, exact symbols."""
    t0 = time.time()
    result = _report(1, "table reproduction, Sigma <= 59", verify.run_suite("table", 59))
    assert time.time() - t0 < 10, "table generation exceeded the 10 s budget"
    assert result.passed, (
        "the computed table deviates from the reference transcription in "
        f"{len(result.failures)} row(s); the brute-force point-group oracle "
        "confirms the computed symbols for every deviating row (see above)"
    )


def test_acceptance_1_oracle_cross_check_of_deviating_rows():
    """Every table row, including the two that deviate from the reference
    transcription, agrees with the brute-force point-group oracle."""
    from cslkit.bravais import SYMBOL_SYSTEMS, table
    from cslkit.verify import PROPER_ORDER_BY_SYSTEM, _oracle_csl, _proper_order

    rows = table(59)
    for row in rows:
        for kind in ("cP", "cI", "cF"):
            system = SYMBOL_SYSTEMS[row.reports[kind].symbol]
            expected = PROPER_ORDER_BY_SYSTEM[system]
            assert _proper_order(_oracle_csl(kind, row.reps[0])) == expected, \
                (row.sigma, row.display, kind)
    print("\nACCEPTANCE 1a [oracle agreement of all computed table rows]: PASS "
          f"({len(rows) * 3} checks)")


def test_acceptance_2_csl_bases_oracle_equivalence():
    """Closed-form CSL bases equal brute-force intersections, index = Sigma,
    for every rotation with Sigma <= 45 and all three lattices."""
    result = _report(2, "CSL bases vs intersection oracle, Sigma <= 45",
                     verify.run_suite("bases", 45))
    assert result.passed, result.failures
    assert result.seconds < 60, "oracle sweep exceeded the 60 s budget"
    assert result.checked == 46872  # sum of 24 f(Sigma) over odd Sigma <= 45, x3


def test_acceptance_3_counting():
    """Rotation and class counts match the counting formulas for odd
    Sigma <= 99, including the derived spot values."""
    result = _report(3, "counting formulas, Sigma <= 99", verify.run_suite("counts", 99))
    assert result.passed, result.failures


def test_acceptance_4_symmetry_groups():
    """Oracle point-group orders match the classification and H(R) orders
    match the double-coset case split for every class rep with Sigma <= 59."""
    result = _report(4, "symmetry groups vs point-group oracle, Sigma <= 59",
                     verify.run_suite("symmetry", 59))
    assert result.passed, result.failures


def test_acceptance_5_hexagonality_criterion():
    """Threefold-axis classes with Sigma <= 199: hexagonal iff 3 | Sigma,
    by formula and by the point-group oracle."""
    result = _report(5, "hexagonality criterion, Sigma <= 199",
                     verify.run_suite("hexagonal", 199))
    assert result.passed, result.failures
    assert result.seconds < 120, "hexagonality sweep exceeded the 120 s budget"


def test_acceptance_6_divisibility():
    """Sigma(Q) and Sigma(QR) divide Sigma(R) for every returned symmetry
    generator Q of every classified CSL with Sigma <= 59."""
    result = _report(6, "generator divisibility, Sigma <= 59",
                     verify.run_suite("divisibility", 59))
    assert result.passed, result.failures


def test_acceptance_7_prime_power_shortcut():
    """No general twofold class at a prime-power Sigma <= 99 admits an
    orthogonal factorization."""
    result = _report(7, "prime-power shortcut, Sigma <= 99",
                     verify.run_suite("prime-power", 99))
    assert result.passed, result.failures


def test_acceptance_8_property_suites():
    """Quaternion/Cayley identities on all 48^2 group products plus 10^4
    pseudo-random quaternions, and lattice intersection algebra on
    randomized triples."""
    r1 = _report(8, "quaternion properties", verify.run_suite("quat-props"))
    r2 = _report(8, "lattice properties", verify.run_suite("lattice-props"))
    assert r1.passed, r1.failures
    assert r2.passed, r2.failures
    assert r1.checked >= 48 * 48 + 10000 * 0.9


def test_supplementary_conventional_cells():
    """Every reported conventional cell exists inside the brute-force CSL
    with the stated metric and centering (all rows, all three lattices)."""
    result = _report("S", "conventional cells, Sigma <= 59", verify.run_suite("cells", 59))
    assert result.passed, result.failures

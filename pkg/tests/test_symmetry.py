import pytest

from cslkit.cslcore import sigma
from cslkit.equivalence import enumerate_classes
from cslkit.quat import Quat
from cslkit.symmetry import (
    axis_symmetry_test,
    coprime_factor_check,
    decompose_orthogonal,
    is_symmetry_operation,
    minimal_symmetry_group,
    orthogonal_decompositions,
    symmetry_group,
    twofold_symmetries,
)


def test_is_symmetry_operation_examples():
    assert is_symmetry_operation(Quat(0, 1, 1, 1), Quat(3, 2, 2, 2))
    assert not is_symmetry_operation(Quat(0, 1, 1, 1), Quat(2, 1, 1, 1))
    # a twofold rotation is always a symmetry of its own CSL
    for r in (Quat(0, 6, 3, 1), Quat(0, 5, 4, 2), Quat(0, 4, 3, 2)):
        assert is_symmetry_operation(r, r)


def test_axis_symmetry_test():
    assert axis_symmetry_test(Quat(3, 2, 2, 2))
    assert not axis_symmetry_test(Quat(5, 2, 2, 2))
    assert axis_symmetry_test(Quat(2, 1, 0, 0))
    assert axis_symmetry_test(Quat(0, 6, 3, 1))  # 2 r0 = 0 is divisible
    with pytest.raises(ValueError):
        axis_symmetry_test(Quat(1, 0, 0, 0))


def test_coprime_factor_check_examples():
    assert coprime_factor_check(Quat(0, 1, 1, 1), Quat(0, 1, -1, 0))
    assert not coprime_factor_check(Quat(0, 4, 3, 2), Quat(0, 1, 0, 0))
    q = Quat(0, 1, 0, 0)
    assert coprime_factor_check(q, q)
    with pytest.raises(ValueError):
        coprime_factor_check(Quat(0, 1, 1, 1), Quat(1, 1, 0, 0))


def test_minimal_symmetry_groups():
    cases = [
        (Quat(3, 1, 1, 1), "hexagonal", 12),
        (Quat(1, 2, 2, 2), "rhombohedral", 6),
        (Quat(2, 1, 0, 0), "tetragonal", 8),
        (Quat(1, 2, 2, 0), "orthorhombic", 4),
        (Quat(0, 6, 3, 1), "monoclinic", 2),
        (Quat(1, 0, 0, 0), "cubic", 24),
        # not equivalent to any twofold rotation: trivial minimal group
        (Quat(5, 3, 2, 1), "trivial", 1),
        (Quat(1, 2, 3, 5), "trivial", 1),
    ]
    for q, system, order in cases:
        g = minimal_symmetry_group(q)
        assert (g.system, g.order) == (system, order), q


def test_decompose_orthogonal():
    dec = decompose_orthogonal(Quat(0, 5, 4, 2))
    assert dec is not None and dec.ell == 0
    q2 = sum(x * x for x in dec.q.vector)
    m2 = sum(x * x for x in dec.m.vector)
    assert q2 % 2 == 1 and m2 % 2 == 1  # the oP case: all odd
    assert decompose_orthogonal(Quat(0, 4, 3, 2)) is None
    # the sixfold and fourfold axes are the only multi-decomposition cases
    assert len(orthogonal_decompositions(Quat(0, 1, 1, 1))) == 3
    assert len(orthogonal_decompositions(Quat(0, 1, 0, 0))) == 2
    assert len(orthogonal_decompositions(Quat(0, 5, 4, 2))) == 1
    with pytest.raises(ValueError):
        decompose_orthogonal(Quat(2, 1, 1, 1))


def test_decomposition_invariants():
    for r in (Quat(0, 5, 4, 2), Quat(0, 7, 4, 1), Quat(0, 5, 3, 1), Quat(0, 5, 2, 1)):
        dec = decompose_orthogonal(r)
        assert dec is not None
        # anticommutation and the cross-product identity
        assert dec.q * dec.m == -(dec.m * dec.q)
        scale = 1 << dec.ell
        assert dec.q * dec.m == Quat(0, *(scale * x for x in r.vector))
        from math import gcd

        assert gcd(sigma(dec.q), sigma(dec.m)) == 1


def test_symmetry_group_cases():
    cases = [
        (Quat(1, 2, 2, 2), "rhombohedral", 6),
        (Quat(3, 2, 0, 0), "tetragonal", 8),
        (Quat(0, 6, 3, 1), "monoclinic", 2),
        (Quat(3, 2, 2, 2), "hexagonal", 12),
        (Quat(0, 1, 1, 1), "hexagonal", 12),
        (Quat(0, 5, 4, 2), "orthorhombic", 4),
        (Quat(1, 2, 2, 0), "orthorhombic", 4),
        (Quat(1, 0, 0, 0), "cubic", 24),
    ]
    for q, system, order in cases:
        g = symmetry_group(q)
        assert (g.system, g.order) == (system, order), q
        for gen in g.generators:
            assert is_symmetry_operation(gen, q)
    with pytest.raises(ValueError, match="twofold"):
        symmetry_group(Quat(5, 3, 2, 1))


def test_symmetry_group_sixfold_generators():
    g = symmetry_group(Quat(0, 1, 1, 1))
    gens = {q.num for q in g.generators}
    assert (3, 1, 1, 1) in gens and (0, 1, -1, 0) in gens


def test_prime_power_shortcut():
    # Sigma = 25 = 5^2: the general twofold class is monoclinic
    for form, rep in enumerate_classes(25):
        if form.tag == "vectorial":
            assert symmetry_group(rep).system == "monoclinic"
            assert decompose_orthogonal(form.canonical) is None


def test_minimal_full_dichotomy():
    for sig in (3, 7, 9, 13, 15, 21, 33, 45):
        for form, rep in enumerate_classes(sig):
            if not form.is_twofold_equivalent:
                continue
            mini = minimal_symmetry_group(rep)
            full = symmetry_group(rep)
            assert full.order % mini.order == 0
            assert full.order // mini.order in (1, 2)


def test_twofold_search_on_general_classes():
    # classes without any twofold-equivalent representative can still have a
    # monoclinic CSL; the exact search finds the axis
    axes = twofold_symmetries(Quat(5, 3, 2, 1))
    assert [a.num for a in axes] == [(0, 1, 3, 4)]
    assert is_symmetry_operation(axes[0], Quat(5, 3, 2, 1))
    # and for twofold-equivalent rotations it agrees with the classification
    found = twofold_symmetries(Quat(0, 5, 4, 2))
    assert len(found) == 3  # the three mutually orthogonal twofold axes

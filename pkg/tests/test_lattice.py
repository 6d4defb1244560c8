import random
from fractions import Fraction

import pytest

from cslkit.cslcore import csl_basis_primitive
from cslkit.lattice import (
    ExactLattice,
    cubic_lattice,
    hnf_canonicalize,
    index_in,
    intersect,
    point_group,
    proper_point_group_order,
    residue_class,
    transform,
)
from cslkit.linalg import Mat3
from cslkit.quat import Quat, cayley

Z3 = cubic_lattice("cP")


def test_hnf_canonical_form():
    assert Z3.hnf == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    a = hnf_canonicalize([(1, 1, 1), (0, 1, -1), (-1, 0, 1)])
    b = hnf_canonicalize([(1, 1, 1), (0, 1, -1), (1, -1, 0)])
    assert a == b  # the fourth generating vector is dependent
    # permutations and sign flips of a basis do not change the lattice
    cols = [(2, 1, 0), (0, 3, 1), (1, 0, 4)]
    perm = [( -2, -1, 0), (1, 0, 4), (0, 3, 1)]
    assert hnf_canonicalize(cols) == hnf_canonicalize(perm)
    with pytest.raises(ValueError):
        hnf_canonicalize([(1, 0, 0), (0, 1, 0), (1, 1, 0)])


def test_index_in():
    doubled = hnf_canonicalize([(2, 0, 0), (0, 2, 0), (0, 0, 2)])
    assert index_in(doubled, Z3) == 8
    sub = hnf_canonicalize([(1, 1, 1), (0, 1, -1), (-1, 0, 1)])
    assert index_in(sub, Z3) == 3
    assert index_in(Z3, Z3) == 1
    with pytest.raises(ValueError, match="outside"):
        index_in(Z3, doubled)


def test_contains():
    assert Z3.contains((1, 2, 3))
    assert not Z3.contains((1, 1, 1), 2)
    sigma3 = csl_basis_primitive(Quat(0, 1, 1, 1))
    assert sigma3.contains((1, 1, 1))
    assert cubic_lattice("cI").contains((1, 1, 1), 2)
    assert not cubic_lattice("cI").contains((1, 1, 0), 2)
    assert cubic_lattice("cF").contains((1, 1, 0), 2)


def test_cubic_lattices():
    assert index_in(Z3, cubic_lattice("cI")) == 2
    assert index_in(Z3, cubic_lattice("cF")) == 4
    assert cubic_lattice("cP").det() == 1
    assert cubic_lattice("cI").det() == Fraction(1, 2)
    assert cubic_lattice("cF").det() == Fraction(1, 4)
    with pytest.raises(ValueError):
        cubic_lattice("cX")


def test_intersect_oracle_examples():
    assert intersect(Z3, Z3) == Z3
    r = Quat(0, 1, 1, 1)
    lat = intersect(Z3, transform(cayley(r), Z3))
    assert index_in(lat, Z3) == 3
    assert lat == csl_basis_primitive(r)
    lat5 = intersect(Z3, transform(cayley(Quat(2, 1, 0, 0)), Z3))
    assert index_in(lat5, Z3) == 5


def test_intersect_properties_randomized():
    rng = random.Random(20240817)

    def rand_lattice():
        while True:
            cols = [[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)]
            try:
                return hnf_canonicalize(cols, rng.choice((1, 2)))
            except ValueError:
                continue

    for _ in range(40):
        a, b, c = rand_lattice(), rand_lattice(), rand_lattice()
        ab = intersect(a, b)
        assert ab == intersect(b, a)
        assert intersect(a, a) == a
        assert intersect(ab, c) == intersect(a, intersect(b, c))
        assert ab.is_sublattice_of(a) and ab.is_sublattice_of(b)
        abc = intersect(ab, c)
        assert index_in(abc, a) == index_in(abc, ab) * index_in(ab, a)


def test_point_group_orders():
    assert len(point_group(Z3)) == 48
    assert proper_point_group_order(Z3) == 24
    sigma3 = csl_basis_primitive(Quat(0, 1, 1, 1))
    assert len(point_group(sigma3)) == 24  # hexagonal holohedry 6/mmm
    assert proper_point_group_order(sigma3) == 12
    sigma29 = csl_basis_primitive(Quat(0, 4, 3, 2))
    assert proper_point_group_order(sigma29) == 2


def test_point_group_contains_known_symmetry():
    # the twofold about the generating axis is in the oracle's point group
    r = Quat(0, 6, 3, 1)
    lat = csl_basis_primitive(r)
    assert cayley(r) in point_group(lat)
    assert Mat3.identity() in point_group(lat)


def test_short_vectors_complete():
    # the enumeration must find every lattice vector under the bound; compare
    # against a naive integer box scan on assorted lattices
    import itertools

    from cslkit.lattice import short_vectors
    from cslkit.linalg import norm2

    rng = random.Random(5)
    lattices = [Z3, cubic_lattice("cI"), cubic_lattice("cF"),
                csl_basis_primitive(Quat(0, 8, 5, 1))]
    for _ in range(10):
        while True:
            cols = [[rng.randint(-4, 4) for _ in range(3)] for _ in range(3)]
            try:
                lattices.append(hnf_canonicalize(cols, rng.choice((1, 2))))
                break
            except ValueError:
                continue
    for lat in lattices:
        bound = rng.randint(20, 90)
        got = set(short_vectors(lat, bound))
        m = int(bound ** 0.5) + 1
        naive = {v for v in itertools.product(range(-m, m + 1), repeat=3)
                 if v != (0, 0, 0) and norm2(v) <= bound and lat.contains(v, lat.den)}
        assert got == naive


def test_residue_class():
    assert residue_class((1, 1, 1)) == 3
    assert residue_class((1, 1, 0)) == 2
    assert residue_class((2, 0, 0)) == 0
    assert residue_class((1, 0, 0)) == 1


def test_json_round_trip():
    lat = csl_basis_primitive(Quat(0, 6, 3, 1))
    again = ExactLattice.from_json(lat.to_json())
    assert again == lat
    assert lat.to_json() == again.to_json()

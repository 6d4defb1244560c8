import random
from fractions import Fraction

import pytest

from cslkit.linalg import Mat3
from cslkit.quat import (
    Quat,
    axis_angle,
    cayley,
    crystallographic_name,
    parse_quat,
    quat_from_matrix,
)


def test_hamilton_products():
    i, j, k = Quat(0, 1, 0, 0), Quat(0, 0, 1, 0), Quat(0, 0, 0, 1)
    assert i * j == k
    assert j * i == -k
    for q in (Quat(2, 1, 0, 0), Quat(0, 6, 3, 1), Quat(3, 1, 1, 1, den=2)):
        assert Quat(1, 0, 0, 0) * q == q
    half = Quat(1, 1, 1, 1, den=2)
    assert half * half == Quat(-1, 1, 1, 1, den=2)


def test_conjugation():
    q = Quat(0, 1, 1, 1)
    assert q.conjugate() == Quat(0, -1, -1, -1)
    assert q.conjugate().conjugate() == q
    rng = random.Random(7)
    for _ in range(100):
        a = Quat(*(rng.randint(-9, 9) for _ in range(4)))
        if a.is_zero:
            continue
        n = a.norm_sq()
        assert a * a.conjugate() == Quat(n.numerator, 0, 0, 0)


def test_norm_sq():
    assert Quat(2, 1, 0, 0).norm_sq() == 5
    assert Quat(1, 1, 1, 1).norm_sq() == 4
    assert Quat(3, 1, 1, 1, den=2).norm_sq() == 3


def test_half_integral_invariant():
    # a denominator of 2 demands all-odd numerators; all-even reduces
    assert Quat(2, 4, 6, 8, den=2) == Quat(1, 2, 3, 4)
    with pytest.raises(ValueError):
        Quat(1, 0, 0, 0, den=2)
    with pytest.raises(ValueError):
        Quat(1, 2, 3, 4, den=2)


def test_primitive_reduce():
    assert Quat(2, 2, 2, 2).primitive() == Quat(1, 1, 1, 1)
    assert Quat(0, -2, -4, -6).primitive() == Quat(0, 1, 2, 3)
    # half-odd quaternions describe the same rotation as their doubles; the
    # canonical projective representative is always integral with gcd 1
    assert Quat(3, 1, 1, 1, den=2).primitive() == Quat(3, 1, 1, 1)
    assert Quat(3, 3, 3, 3, den=2).primitive() == Quat(1, 1, 1, 1)
    with pytest.raises(ValueError):
        Quat(0, 0, 0, 0).primitive()


def test_cayley_table_rows():
    assert cayley(Quat(1, 0, 0, 0)) == Mat3.identity()
    assert cayley(Quat(0, 1, 0, 0)).num == ((1, 0, 0), (0, -1, 0), (0, 0, -1))
    # the threefold about (1,1,1) permutes x -> y -> z -> x
    m = cayley(Quat(1, 1, 1, 1))
    assert m.num == ((0, 0, 1), (1, 0, 0), (0, 1, 0)) and m.den == 1
    with pytest.raises(ValueError):
        cayley(Quat(0, 0, 0, 0))


def test_cayley_projective_invariance():
    q = Quat(0, 6, 3, 1)
    assert cayley(q) == cayley(-q)
    assert cayley(Quat(0, 12, 6, 2)) == cayley(q)


def test_axis_angle():
    assert axis_angle(Quat(3, 1, 1, 1)) == ((1, 1, 1), Fraction(1, 2))
    assert axis_angle(Quat(0, 1, 1, 1)) == ((1, 1, 1), Fraction(-1))
    assert axis_angle(Quat(2, 1, 0, 0)) == ((1, 0, 0), Fraction(3, 5))
    with pytest.raises(ValueError):
        axis_angle(Quat(1, 0, 0, 0))


def test_crystallographic_names():
    assert crystallographic_name(Quat(1, 0, 0, 0)) == "1"
    assert crystallographic_name(Quat(1, 1, 0, 0)) == "4⁺ x,0,0"
    assert crystallographic_name(Quat(0, 1, -1, 0)) == "2 x,x̄,0"
    assert crystallographic_name(Quat(0, 0, 1, 1)) == "2 0,y,y"
    assert crystallographic_name(Quat(3, 1, 1, 1)) == "6⁺ x,x,x"
    assert crystallographic_name(Quat(1, 1, 1, 1)) == "3⁺ x,x,x"
    assert crystallographic_name(Quat(0, 1, 1, 1)) == "2 x,x,x"
    assert crystallographic_name(Quat(2, 1, 1, 1)) == "φ = arccos(1/7), [111]"


def test_parse_and_format_round_trip():
    for text in ("(0,6,3,1)", "1/2(3,1,1,1)", "(-5,3,2,1)"):
        q = parse_quat(text)
        assert str(q) == text
        assert parse_quat(str(q)) == q
    assert parse_quat("2, 1, 0, 0") == Quat(2, 1, 0, 0)
    assert parse_quat(" 1/2 (3, 1, -1, 1) ") == Quat(3, 1, -1, 1, den=2)
    with pytest.raises(ValueError):
        parse_quat("(1,2,3)")


def test_matrix_round_trip():
    rng = random.Random(11)
    for _ in range(50):
        q = Quat(*(rng.randint(-6, 6) for _ in range(4)))
        if q.is_zero:
            continue
        assert quat_from_matrix(cayley(q)) == q.primitive()
    with pytest.raises(ValueError):
        quat_from_matrix(Mat3(((1, 0, 0), (0, 1, 0), (0, 0, 2))))

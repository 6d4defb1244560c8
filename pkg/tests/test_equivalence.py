import pytest

from cslkit.equivalence import (
    CUBIC_GROUP_24,
    CUBIC_UNITS_48,
    canonical_rep,
    class_members,
    classify_form,
    counts,
    enumerate_classes,
    enumerate_rotations,
    equivalent,
    intersection_group,
    inverse_rep,
    total_rotation_count,
)
from cslkit.quat import Quat


def test_cubic_group_sizes():
    assert len(CUBIC_UNITS_48) == 48
    assert len(CUBIC_GROUP_24) == 24
    # closed under multiplication up to the projective identification
    group = {q for q in CUBIC_GROUP_24}
    for a in CUBIC_GROUP_24:
        for b in CUBIC_GROUP_24:
            assert (Quat(*a) * Quat(*b)).primitive().num in group


def test_intersection_group_examples():
    assert intersection_group(Quat(3, 1, 1, 1)).order == 6
    assert intersection_group(Quat(2, 1, 0, 0)).order == 4
    assert intersection_group(Quat(0, 6, 3, 1)).order == 1
    assert intersection_group(Quat(2, 1, 1, 1)).order == 3
    assert intersection_group(Quat(1, 2, 2, 0)).order == 2
    assert intersection_group(Quat(1, 1, 1, 1)).order == 24


def test_intersection_group_possible_orders():
    # over a decent sweep of rotations: only 1,2,3,4,6,24 occur (never 12)
    seen = set()
    for sig in (1, 3, 5, 7, 9, 13, 15, 21, 25, 33, 39, 45):
        for r in enumerate_rotations(sig)[::7]:
            seen.add(intersection_group(r).order)
    assert seen <= {1, 2, 3, 4, 6, 24}


def test_equivalence_examples():
    assert equivalent(Quat(3, 1, 1, 1), Quat(0, 1, 1, 1))
    assert not equivalent(Quat(0, 5, 4, 2), Quat(0, 8, 5, 1))
    r = Quat(0, 6, 3, 1)
    assert equivalent(r, r)
    # the Grimmer convention identifies a rotation with its inverse
    assert not equivalent(Quat(5, 3, 2, 1), Quat(-5, 3, 2, 1))
    assert equivalent(Quat(5, 3, 2, 1), Quat(-5, 3, 2, 1), grimmer=True)


def test_canonical_rep():
    assert canonical_rep(Quat(0, 1, 1, 1)) == canonical_rep(Quat(3, 1, 1, 1))
    r = Quat(0, 6, 3, 1)
    assert canonical_rep(canonical_rep(r)) == canonical_rep(r)
    members = class_members(Quat(3, 1, 1, 1))
    assert len(members) == 4 * 24  # |G|^2 / |H| with |H| = 6
    assert {canonical_rep(Quat(*m)) for m in members} == {canonical_rep(Quat(3, 1, 1, 1))}


def test_h_group_conjugacy_on_classes():
    for seed in (Quat(2, 1, 0, 0), Quat(1, 2, 2, 2), Quat(0, 6, 3, 1)):
        order = intersection_group(seed).order
        members = list(class_members(seed))[::17]
        assert all(intersection_group(Quat(*m)).order == order for m in members)


def test_classify_form_examples():
    assert classify_form(Quat(1, 2, 2, 2)).tag == "mnnn"
    assert classify_form(Quat(1, 2, 2, 2)).params == (1, 2)
    assert classify_form(Quat(3, 2, 0, 0)).tag == "mn00"
    assert classify_form(Quat(3, 2, 0, 0)).params == (3, 2)
    assert classify_form(Quat(0, 5, 2, 1)).tag == "vectorial"
    assert classify_form(Quat(1, 2, 2, 0)).tag == "mnn0"
    assert classify_form(Quat(5, 3, 2, 1)).tag == "general"
    assert classify_form(Quat(1, 0, 0, 0)).tag == "unit"
    assert classify_form(Quat(0, 1, 1, 1)).tag == "sixfold"


def test_classify_form_witnesses():
    for r in (Quat(4, 2, 1, 0), Quat(2, 1, 1, 1), Quat(0, 7, 5, 2), Quat(4, 3, 0, 0)):
        form = classify_form(r)
        u, v = form.conjugators
        assert (u * form.canonical * v).primitive() == r.primitive()


def test_classify_form_constant_on_classes():
    for seed in (Quat(1, 2, 2, 2), Quat(0, 4, 2, 1), Quat(5, 3, 2, 1)):
        tag = classify_form(seed).tag
        for m in list(class_members(seed))[::23]:
            assert classify_form(Quat(*m)).tag == tag


def test_count_examples():
    c = counts(13)
    assert (c.n1, c.n2, c.n3, c.n4, c.n5, c.f, c.f_ineq) == (0, 1, 1, 0, 0, 14, 2)
    c = counts(3)
    assert (c.n1, c.f, c.f_ineq) == (1, 4, 1)
    c = counts(45)
    assert (c.n2, c.n3, c.n4, c.n5, c.f, c.f_ineq) == (0, 0, 0, 3, 72, 3)
    assert counts(1).f == counts(1).f_ineq == 1
    with pytest.raises(ValueError):
        counts(4)
    assert total_rotation_count(4) == 0
    assert total_rotation_count(45) == 72


def test_enumeration_counts():
    assert len(enumerate_rotations(1)) == 24
    assert {q.num for q in enumerate_rotations(1)} == set(CUBIC_GROUP_24)
    assert len(enumerate_rotations(3)) == 96
    assert len(enumerate_rotations(5)) == 144
    with pytest.raises(ValueError):
        enumerate_rotations(6)


def test_enumerate_classes_examples():
    cls39 = enumerate_classes(39)
    assert len(cls39) == 3
    tags = sorted(f.tag for f, _ in cls39)
    assert tags == ["general", "general", "mnnn"]
    reps = [r for f, r in cls39 if f.tag == "general"]
    assert equivalent(reps[0], Quat(5, 3, 2, 1)) or equivalent(reps[1], Quat(5, 3, 2, 1))
    assert inverse_rep(reps[0]) == canonical_rep(reps[1])

    cls15 = enumerate_classes(15)
    assert len(cls15) == 1 and equivalent(cls15[0][1], Quat(0, 5, 2, 1))

    cls21 = enumerate_classes(21)
    assert len(cls21) == 2
    assert any(equivalent(r, Quat(3, 2, 2, 2)) for _f, r in cls21)
    assert any(equivalent(r, Quat(0, 4, 2, 1)) for _f, r in cls21)


def test_grimmer_grouping():
    assert len(enumerate_classes(39, grimmer=True)) == 2
    assert len(enumerate_classes(45, grimmer=True)) == 3  # twofold classes self-paired

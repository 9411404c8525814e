from math import gcd

import pytest
from hypothesis import given, strategies as st

from legcable.errors import ValidationError
from legcable.farey import LatticeVector, product, slope
from legcable.invariants import (
    ClassicalInvariants,
    cable_of_legendrian,
    check_cable,
    euler_pd,
    rot_absolute_form,
    rot_along_path,
    ruling_tb,
    self_linking,
    stabilize,
)
from legcable.paths import MINUS, PLUS, DecoratedPath, FareyPath, shortest_path
from helpers import prefix_below


def path_of(*slopes):
    return FareyPath(tuple(slope(*s) if isinstance(s, tuple) else slope(s) for s in slopes))


def test_ruling_tb_examples():
    assert ruling_tb(slope(-3, 2), 2, -3) == -6
    assert ruling_tb(slope(-2), 2, -3) == -7


def test_cable_of_legendrian_examples():
    assert cable_of_legendrian(-1, 0, 2, 3) == ClassicalInvariants(1, 0)
    assert cable_of_legendrian(-1, 0, 3, 1) == ClassicalInvariants(-1, 0)
    assert cable_of_legendrian(-1, 2, 3, 1).rot == 6


@pytest.mark.parametrize("p,q", [(0, 1), (2, 4), (-1, 3)])
def test_check_cable_rejects(p, q):
    with pytest.raises(ValidationError):
        check_cable(p, q)


def test_euler_examples():
    assert euler_pd(DecoratedPath(path_of(-3, -2, -1), (PLUS, MINUS))) == LatticeVector(0, 0)
    assert euler_pd(DecoratedPath(path_of(-2, (-3, 2)), (PLUS,))) == LatticeVector(-1, 1)
    assert euler_pd(DecoratedPath(shortest_path(slope(-12, 5)), (PLUS, PLUS))) == LatticeVector(-9, 4)
    with pytest.raises(ValidationError):
        euler_pd(DecoratedPath(FareyPath((slope(1, 0), slope(-2))), (), True))


def test_rot_examples():
    assert rot_along_path(2, -3, 1, DecoratedPath(path_of(-2, (-3, 2)), (PLUS,))) == 1
    assert rot_along_path(3, 1, -2, DecoratedPath(path_of(0), ())) == -6


def test_self_linking_and_stabilize():
    assert self_linking(ClassicalInvariants(-1, 0)) == -1
    assert self_linking(ClassicalInvariants(1, 0)) == 1
    assert self_linking(ClassicalInvariants(-6, 1)) == -7
    c = ClassicalInvariants(-1, 0)
    assert stabilize(c, "+") == ClassicalInvariants(-2, 1)
    assert stabilize(c, "-") == ClassicalInvariants(-2, -1)
    assert stabilize(stabilize(c, PLUS), MINUS) == stabilize(stabilize(c, MINUS), PLUS)


def test_ruling_tb_agrees_with_cable_formula():
    for n in range(-20, 21):
        for p in range(1, 21):
            for q in range(-20, 21):
                if q == 0 and p != 1 or gcd(p, q) != 1:
                    continue
                assert ruling_tb(slope(n), p, q) == cable_of_legendrian(n, 1, p, q).tb


@st.composite
def paths_below(draw):
    p = draw(st.integers(1, 9))
    q = draw(st.integers(-30, 30).filter(lambda q: gcd(p, q) == 1))
    n = shortest_path(slope(q, p)).edge_count
    path = prefix_below(p, q, draw(st.integers(0, 3)), draw(st.integers(0, max(n - 1, 0))))
    signs = tuple(draw(st.lists(st.sampled_from([PLUS, MINUS]), min_size=path.edge_count, max_size=path.edge_count)))
    return p, q, DecoratedPath(path, signs)


@given(paths_below(), st.integers(-5, 5))
def test_signed_and_absolute_rot_agree_below(data, base):
    p, q, d = data
    assert rot_along_path(p, q, base, d) == rot_absolute_form(p, q, base, d)


@given(paths_below())
def test_sign_flip_antisymmetry(data):
    p, q, d = data
    neg = DecoratedPath(d.path, (MINUS,) * len(d.signs))
    pos = DecoratedPath(d.path, (PLUS,) * len(d.signs))
    full = DecoratedPath(d.path, (PLUS,) * len(d.signs))
    diff = rot_along_path(p, q, 0, neg) - rot_along_path(p, q, 0, pos)
    assert diff == 2 * abs(product(euler_pd(full), slope(q, p)))

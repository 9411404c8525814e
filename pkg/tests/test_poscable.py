import random

import pytest
from hypothesis import given, settings, strategies as st

from legcable.atlas import LegendrianClass, is_legendrian_simple, isotopic
from legcable.errors import ValidationError
from legcable.fixtures import twist_knot_atlas, unknot_atlas
from legcable.poscable import cable_generator_id, diamond, expand, transverse_intervals, underlying
from helpers import admissible_q, random_atlas

seeds = st.integers(0, 10**6)


def test_diamond_examples():
    d = diamond(2, 3, 0, -1)
    assert d.peak == (0, 1)
    assert d.points == {(0, 1), (1, 0), (-1, 0), (0, -1)}
    assert diamond(1, 5, 2, -1).points == {(2, 5 - abs(-1 - 5))}
    assert len(diamond(3, 4, 1, 2)) == 9
    with pytest.raises(ValidationError):
        diamond(2, 3, 0, 0)


def test_expand_unknot_trefoil():
    a = expand(unknot_atlas(), 2, 3)
    assert [(g.tb, g.rot) for g in a.generators] == [(1, 0)]
    assert not a.merges and is_legendrian_simple(a)
    assert a.meta["gate"] == {"bound": 0, "source": "ceil_width"}


def test_expand_rejects_low_and_integer_slopes():
    with pytest.raises(ValidationError):
        expand(unknot_atlas(), 2, -1)
    with pytest.raises(ValidationError):
        expand(unknot_atlas(), 1, 3)
    twist = twist_knot_atlas(-5)
    assert expand(twist, 2, -3).meta["gate"]["source"] == "max_tb+1"
    with pytest.raises(ValidationError):
        expand(twist, 2, -5)


def test_underlying_examples():
    gid = cable_generator_id("u", 2, 3)
    a = unknot_atlas()
    assert underlying(a, 2, 3, LegendrianClass(gid)) == LegendrianClass("u")
    assert underlying(a, 2, 3, LegendrianClass(gid, 3, 1)) == LegendrianClass("u", 1, 0)
    assert underlying(a, 2, 3, LegendrianClass(gid, 2, 2)) == LegendrianClass("u", 1, 1)
    with pytest.raises(ValidationError):
        underlying(a, 2, 3, LegendrianClass("nope"))


def test_transverse_interval_examples():
    (first, sls), (second, sls2) = transverse_intervals(unknot_atlas(), 2, 3, -3)
    assert first.sl == -1 and sls == [1, -1]
    assert second.sl == -3 and sls2 == [-3, -5]


def test_transverse_interval_p_one_is_an_integer_slope():
    with pytest.raises(ValidationError):
        transverse_intervals(twist_knot_atlas(0), 1, 1, -5)


def test_diamonds_can_overlap_above_the_cabling_slope():
    # base points above q/p are outside the regime where disjointness holds
    assert diamond(2, 3, 0, 1).points & diamond(2, 3, 0, 3).points


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_expanded_isotopy_follows_underlying_law(seed):
    rng = random.Random(seed)
    base = random_atlas(rng, max_gens=3, max_rules=3)
    p = rng.randint(2, 3)
    q = admissible_q(base, p, rng)
    cable = expand(base, p, q)
    classes = [
        LegendrianClass(g.id, k, l) for g in cable.generators for k in range(3 * p) for l in range(3 * p - k)
    ]
    for x in rng.sample(classes, min(40, len(classes))):
        for y in classes:
            if cable.invariants(x) != cable.invariants(y):
                continue
            law = isotopic(base, underlying(base, p, q, x), underlying(base, p, q, y))
            assert isotopic(cable, x, y) == law

import dataclasses
import json

import pytest

from legcable.atlas import LegendrianClass, is_legendrian_simple, is_transversely_simple, isotopic
from legcable.errors import ToriAtlasError
from legcable.farey import product, slope
from legcable.fixtures import in_between_tori_atlas, large_torus_tori_atlas, trefoil_tori_atlas, unknot_atlas
from legcable.negcable import (
    Commensuration,
    ToriAtlas,
    TorusDecl,
    _inner_split,
    _outer_split,
    cable_path,
    classify,
    commensuration_merges,
    format_report,
    standard_cables,
    tori_atlas_from_json,
    tori_atlas_to_json,
)
from legcable.paths import MINUS, PLUS

ALL_FIXTURES = [trefoil_tori_atlas, large_torus_tori_atlas, in_between_tori_atlas]


def invariants_by_index(ta):
    return {(c.i, c.j): (c.invariants.tb, c.invariants.rot) for c in standard_cables(ta)}


def test_cable_path_indexing():
    path = cable_path(2, -3)
    assert path.n == 1 and path.tail_k == 1
    assert [path.slope(i) for i in (-2, -1, 0, 1, 2)] == [slope(-4), slope(-3), slope(-2), slope(-3, 2), slope(-4, 3)]
    assert path.term(1) == 1 and path.term(0) == 2


def test_trefoil_standard_cables():
    assert invariants_by_index(trefoil_tori_atlas()) == {(1, 1): (-6, 1), (1, 2): (-6, -1)}


def test_trefoil_classification():
    atlas, report = classify(trefoil_tori_atlas())
    assert sorted((g.tb, g.rot) for g in atlas.generators) == [(-6, -1), (-6, 1)]
    assert len(atlas.merges) == 1
    rule = atlas.merges[0]
    assert (rule.ka + rule.la, rule.kb + rule.lb) == (1, 1)
    a, b = (g.id for g in atlas.generators)
    assert isotopic(atlas, LegendrianClass(a, 0, 1), LegendrianClass(b, 1, 0))
    assert not isotopic(atlas, LegendrianClass(a, 1, 0), LegendrianClass(b, 0, 1))
    assert is_legendrian_simple(atlas) and is_transversely_simple(atlas)
    assert report["standard_cables_distinct"]


def test_literal_shared_torus_at_minus_two_is_rejected():
    # the cores S+(u) and S-(u) differ, so no torus of slope -2 lies in both divide tori;
    # applying the formula anyway would relate classes with different rotation numbers
    ta = dataclasses.replace(trefoil_tori_atlas(), commensurating=(Commensuration((1, 1), (1, 2), 0),), super_commensurating=())
    with pytest.raises(ToriAtlasError) as info:
        commensuration_merges(ta)
    assert info.value.details["expected"] != info.value.details["found"]


def test_inner_split_all_negative():
    path = cable_path(2, -3)
    torus = TorusDecl(1, 2, LegendrianClass("u", 0, 1), (MINUS,))
    k, l = _inner_split(path, torus, 0, ())
    assert (k, l) == (0, abs(product(path.vector(1) - path.vector(0), path.cabling)))
    with pytest.raises(ToriAtlasError):
        _inner_split(path, torus, -1, ())


def test_outer_split_example():
    path = cable_path(2, -3)
    s = slope(-5, 4)
    assert abs(product(s, path.cabling)) == 2
    first = abs(product(slope(-4, 3).vector - path.cabling.vector, path.cabling))
    assert _outer_split(path, s, (MINUS, PLUS), {}) == (first, 2 - first)
    assert _outer_split(path, s, (MINUS, MINUS), {}) == (2, 0)
    with pytest.raises(ToriAtlasError):
        _outer_split(path, s, (MINUS,), {})
    with pytest.raises(ToriAtlasError):
        _outer_split(path, slope(-2), (MINUS,), {})


def test_large_torus_fixture():
    ta = large_torus_tori_atlas()
    inv = invariants_by_index(ta)
    p, q = ta.p, ta.q
    assert inv[(2, 1)] == (p * q + 1, 2)
    atlas, report = classify(ta)
    big = "L[2,1]"
    plus_target = [g.id for g in atlas.generators if isotopic(atlas, LegendrianClass(big, 1, 0), LegendrianClass(g.id))]
    minus_target = [g.id for g in atlas.generators if isotopic(atlas, LegendrianClass(big, 0, 1), LegendrianClass(g.id))]
    assert plus_target == ["L[1,2]"] and minus_target == ["L[1,1]"]
    flags = {(c["i"], c["j"]): c["destabilizes"] for c in report["standard_cables"]}
    assert flags == {(-1, 1): False, (1, 1): True, (1, 2): True, (2, 1): False}
    assert report["rules"]["large_cable_landing"] == 2


def test_in_between_cutoff():
    ta = in_between_tori_atlas()
    atlas, report = classify(ta)
    assert report["cutoff"] == 0 and report["ignored_tori"] == [[1, 1]]
    assert {g.id for g in atlas.generators} == {"L[-1,1]", "L[0,1]"}
    assert invariants_by_index(ta)[(0, 1)] == (ta.p * ta.q - abs(product(slope(-2), slope(-3, 2))), 2 * 1)


def test_tb_strictly_increasing_up_to_divides():
    for p, q in [(2, -3), (5, -12), (3, -7), (4, -9)]:
        path = cable_path(p, q)
        values = [p * q - abs(product(path.vector(i), path.cabling)) for i in range(-4, path.n + 1)]
        assert values == sorted(set(values))
        assert values[-1] == p * q


def _replace(ta, **changes):
    return dataclasses.replace(ta, **changes)


@pytest.mark.parametrize(
    "mutate",
    [
        lambda ta: _replace(ta, minimally_thickenable=False),
        lambda ta: _replace(ta, tori=ta.tori + (TorusDecl(1, 3, LegendrianClass("u"), (PLUS,)),)),
        lambda ta: _replace(ta, tori=(TorusDecl(1, 1, LegendrianClass("u", 1, 0), ()),) + ta.tori[1:]),
        lambda ta: _replace(ta, tori=ta.tori + (TorusDecl(2, 1, LegendrianClass("u", 1, 0), (PLUS, PLUS)),)),
        lambda ta: _replace(ta, tori=ta.tori + (TorusDecl(3, 1, LegendrianClass("u", 1, 0), (PLUS, PLUS, MINUS)),)),
        lambda ta: _replace(ta, tori=ta.tori + ta.tori[:1]),
        lambda ta: _replace(ta, commensurating=(Commensuration((1, 1), (5, 5), -1),)),
        lambda ta: _replace(ta, q=1, tori=()),
        lambda ta: _replace(ta, width=slope(-7, 4)),
    ],
)
def test_invalid_tori_atlases(mutate):
    with pytest.raises(ToriAtlasError):
        classify(mutate(trefoil_tori_atlas()))


def test_missing_divide_for_a_stabilization():
    ta = large_torus_tori_atlas()
    tori = tuple(
        dataclasses.replace(t, destabilizes_into=()) if t.key == (1, 2) else t for t in ta.tori
    )
    with pytest.raises(ToriAtlasError):
        classify(dataclasses.replace(ta, tori=tori, super_commensurating=()))


def test_in_between_rejects_outer_tori():
    ta = dataclasses.replace(in_between_tori_atlas(), super_commensurating=trefoil_tori_atlas().super_commensurating)
    with pytest.raises(ToriAtlasError):
        classify(ta)


def test_torus_knot_slope_restriction():
    # T(3,5): rs - r - s = 7 and -1/2 = 7/(-14) with gcd(14, 7) = 7
    with pytest.raises(ToriAtlasError):
        standard_cables(ToriAtlas(2, -1, unknot_atlas(), (), torus_knot=(3, 5)))
    # T(2,3): rs - r - s = 1, so no slope is excluded
    standard_cables(ToriAtlas(2, -1, unknot_atlas(), (), torus_knot=(2, 3)))
    classify(dataclasses.replace(trefoil_tori_atlas(), torus_knot=(2, 3)))


def test_json_round_trip_and_suffix_cores():
    for make in ALL_FIXTURES:
        ta = make()
        assert tori_atlas_from_json(json.loads(json.dumps(tori_atlas_to_json(ta)))) == ta
    doc = tori_atlas_to_json(trefoil_tori_atlas())
    doc["tori"][0]["base_generator"] = "u+"
    doc["tori"][1]["base_generator"] = "u-"
    assert tori_atlas_from_json(doc) == trefoil_tori_atlas()


def test_malformed_documents():
    with pytest.raises(ToriAtlasError):
        tori_atlas_from_json({"cable": {"p": 2, "q": -3}})
    doc = tori_atlas_to_json(trefoil_tori_atlas())
    doc["mode"] = "sideways"
    with pytest.raises(ToriAtlasError):
        tori_atlas_from_json(doc)


def test_report_text():
    _, report = classify(large_torus_tori_atlas())
    text = format_report(report)
    assert "L[2,1] large" in text and "destabilizes to a large cable" in text

"""Cables with slope below the contact width, from declared tori data.

The classification of such cables is driven by solid tori N_i^j in the
companion's knot type, indexed by the slopes a_i of the minimal path
a_0 = floor(q/p), ..., a_n = q/p, continued below by a_i = floor(q/p) + i and
above by the tail block.  Which tori exist, how they nest and which ones
share sub-tori is geometric input that cannot be derived combinatorially, so
a ``ToriAtlas`` declares it.  This module turns the declaration into a cable
atlas:

* each torus gives a standard cable (ruling curve, divide, or large cable)
  whose tb and rot follow from its slope index and basic-slice signs;
* a shared inner torus at slope a_m gives a merge where k counts the
  stabilizations contributed by positive slices between a_m and a_i and l
  those from negative slices;
* a shared outer torus at slope s above q/p gives a merge where, walking
  outward from q/p, negative slices contribute to k and positive ones to l;
* a large cable L_i^j (i > n) stabilized i - n times lands on a divide; the
  divide is matched by rotation number;
* stabilized large cables with equal canonical block data are identified.

Slices below a_0 lie between integer slopes and correspond to stabilizations
of the core: a slice of sign e from a_(u-1) to a_u has the core of the inner
torus equal to S_e of the outer core.  Merges through a shared torus below
a_0 must therefore state those signs (``below``).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from math import gcd
from pathlib import Path
from typing import Optional, Union

from .atlas import (
    Generator,
    LegendrianAtlas,
    LegendrianClass,
    MergeRule,
    atlas_from_json,
    atlas_to_json,
    classes_at,
    isotopic,
)
from .errors import ToriAtlasError, ValidationError
from .farey import Slope, LatticeVector, parse_slope, product, slope
from .invariants import ClassicalInvariants, check_cable, rot_along_path
from .paths import (
    MINUS,
    PLUS,
    DecoratedPath,
    FareyPath,
    canonical_form,
    clockwise_path,
    edge_steps,
    parse_sign,
    shortest_path,
    sign_str,
    tail,
)

__all__ = [
    "TorusDecl",
    "Commensuration",
    "SuperCommensuration",
    "ToriAtlas",
    "StandardCable",
    "CablePath",
    "cable_path",
    "standard_cables",
    "commensuration_merges",
    "classify",
    "format_report",
    "tori_atlas_from_json",
    "tori_atlas_to_json",
    "load_tori_atlas",
    "torus_generator_id",
]

Index = tuple[int, int]


@dataclass(frozen=True)
class TorusDecl:
    i: int
    j: int
    core: LegendrianClass
    signs: tuple[int, ...] = ()
    destabilizes_into: tuple[Index, ...] = ()

    @property
    def key(self) -> Index:
        return (self.i, self.j)


@dataclass(frozen=True)
class Commensuration:
    """A shared inner torus of slope a_m for tori ``a`` and ``b``."""

    a: Index
    b: Index
    m: int
    below_a: tuple[int, ...] = ()
    below_b: tuple[int, ...] = ()


@dataclass(frozen=True)
class SuperCommensuration:
    """A shared outer torus of slope ``slope`` for two divide tori."""

    a: Index
    b: Index
    slope: Slope
    signs_a: tuple[int, ...]
    signs_b: tuple[int, ...]


@dataclass(frozen=True)
class ToriAtlas:
    p: int
    q: int
    base: LegendrianAtlas
    tori: tuple[TorusDecl, ...]
    commensurating: tuple[Commensuration, ...] = ()
    super_commensurating: tuple[SuperCommensuration, ...] = ()
    width: Optional[Slope] = None  # set in the in-between regime
    minimally_thickenable: bool = True
    torus_knot: Optional[tuple[int, int]] = None

    @property
    def mode(self) -> str:
        return "negative" if self.width is None else "in_between"


@dataclass(frozen=True)
class CablePath:
    """Slopes a_i for the cabling slope, indexed from far below a_0 up to a_(n+k)."""

    cabling: Slope
    vertices: tuple[Slope, ...]  # a_0 .. a_n
    tail_k: int
    step: LatticeVector

    @property
    def n(self) -> int:
        return len(self.vertices) - 1

    def vector(self, i: int) -> LatticeVector:
        if i <= 0:
            return LatticeVector(self.vertices[0].num + i, 1)
        if i <= self.n:
            return self.vertices[i].vector
        return self.cabling.vector + self.step.scale(i - self.n)

    def slope(self, i: int) -> Slope:
        return self.vector(i).to_slope()

    def term(self, u: int) -> int:
        """|(a_u - a_(u-1)) . q/p|, the stabilizations one slice contributes."""
        return abs(product(self.vector(u) - self.vector(u - 1), self.cabling))

    def decorated(self, start: int, stop: int, signs) -> DecoratedPath:
        verts = tuple(self.slope(u) for u in range(start, stop + 1))
        return DecoratedPath(FareyPath(verts), tuple(signs))


def cable_path(p: int, q: int) -> CablePath:
    cabling = check_cable(p, q)
    if cabling.is_integer:
        raise ToriAtlasError("cabling slope must not be an integer", p=p, q=q)
    t = tail(cabling)
    return CablePath(cabling, shortest_path(cabling).vertices, t.k, t.step)


@dataclass(frozen=True)
class StandardCable:
    i: int
    j: int
    invariants: ClassicalInvariants
    kind: str  # ruling, divide or large

    def to_json(self) -> dict:
        return {"i": self.i, "j": self.j, "tb": self.invariants.tb, "rot": self.invariants.rot, "kind": self.kind}


def torus_generator_id(index: Index) -> str:
    return f"L[{index[0]},{index[1]}]"


def _cutoff(ta: ToriAtlas, path: CablePath) -> int:
    if ta.width is None:
        return path.n + path.tail_k
    return max(i for i in range(path.n + 1) if path.slope(i) <= ta.width)


def _validate(ta: ToriAtlas, path: CablePath) -> None:
    if not ta.minimally_thickenable:
        raise ToriAtlasError("the companion must be declared minimally thickenable at the cabling slope")
    cabling = path.cabling
    if ta.torus_knot is not None:
        r, s = ta.torus_knot
        w = r * s - r - s
        if ta.q != 0 and w % ta.q == 0:
            n = ta.p * (w // ta.q)
            if n != 0 and gcd(n, w) != 1:
                raise ToriAtlasError(
                    f"cabling slope {cabling} equals ({w})/{n} with {n} not coprime to {w}; "
                    "this torus-knot case is outside the supported classification",
                    torus_knot=[r, s],
                )
    base = ta.base
    if ta.width is None:
        if base.ceil_width is not None and not cabling < slope(base.ceil_width):
            raise ToriAtlasError(
                "cabling slope must lie below the width", cabling=str(cabling), ceil_width=base.ceil_width
            )
        if base.generators and not cabling < slope(base.max_tb + 1):
            raise ToriAtlasError(
                "cabling slope must lie below the width", cabling=str(cabling), max_tb=base.max_tb
            )
    else:
        w = ta.width
        upper = slope(-((-w.num) // w.den))
        if w.is_integer or not (w <= cabling < upper):
            raise ToriAtlasError(
                "in-between mode needs width <= q/p < ceil(width) with a non-integer width",
                width=str(w),
                cabling=str(cabling),
            )
        if base.ceil_width is not None and slope(base.ceil_width) != upper:
            raise ToriAtlasError("width disagrees with the atlas ceil_width", width=str(w), ceil_width=base.ceil_width)
        if base.generators and slope(base.max_tb) > w:
            raise ToriAtlasError("width lies below the maximal tb", width=str(w), max_tb=base.max_tb)

    n, top = path.n, path.n + path.tail_k
    seen = set()
    for t in ta.tori:
        where = {"torus": [t.i, t.j]}
        if t.key in seen:
            raise ToriAtlasError("duplicate torus index", **where)
        seen.add(t.key)
        if t.j < 1:
            raise ToriAtlasError("torus j index must be positive", **where)
        if t.i > top:
            raise ToriAtlasError(f"slope index exceeds n + k = {top}", **where)
        core_tb = base.invariants(t.core).tb
        expected_tb = path.vector(min(t.i, 0)).x
        if core_tb != expected_tb:
            raise ToriAtlasError(
                "core Legendrian tb does not match the torus slope index", expected=expected_tb, found=core_tb, **where
            )
        if len(t.signs) != max(t.i, 0):
            raise ToriAtlasError("sign list length must equal the slope index", expected=max(t.i, 0), found=len(t.signs), **where)
        if t.i > n:
            trailing = t.signs[2 * n - t.i:]
            if trailing.count(PLUS) != trailing.count(MINUS):
                raise ToriAtlasError("signs past the block's back face are not balanced", **where)
        if t.destabilizes_into and t.i != n:
            raise ToriAtlasError("destabilizes_into is only meaningful for divide tori", **where)
        for target in t.destabilizes_into:
            if not (n < target[0] <= top):
                raise ToriAtlasError("destabilizes_into must name tori above q/p", target=list(target), **where)
    for entry in ta.commensurating + ta.super_commensurating:
        for side in (entry.a, entry.b):
            if side not in seen:
                raise ToriAtlasError("commensuration refers to an undeclared torus", torus=list(side))
    for t in ta.tori:
        for target in t.destabilizes_into:
            if target not in seen:
                raise ToriAtlasError("destabilizes_into names an undeclared torus", target=list(target))
    if ta.width is not None and ta.super_commensurating:
        raise ToriAtlasError("outer commensurating tori do not occur in the in-between regime")
    if ta.width is not None and any(t.destabilizes_into for t in ta.tori):
        raise ToriAtlasError("destabilizations into large tori do not occur in the in-between regime")


def _torus_map(ta: ToriAtlas) -> dict:
    return {t.key: t for t in ta.tori}


def _kind(i: int, n: int) -> str:
    if i < n:
        return "ruling"
    return "divide" if i == n else "large"


def _standard_cable(ta: ToriAtlas, path: CablePath, t: TorusDecl) -> StandardCable:
    p, q, n = ta.p, ta.q, path.n
    if t.i < n:
        tb = p * q - abs(product(path.vector(t.i), path.cabling))
    else:
        tb = p * q + (t.i - n)
    core_rot = ta.base.invariants(t.core).rot
    if t.i <= 0:
        rot = p * core_rot
    else:
        rot = rot_along_path(p, q, core_rot, path.decorated(0, t.i, t.signs))
    return StandardCable(t.i, t.j, ClassicalInvariants(tb, rot), _kind(t.i, n))


def standard_cables(ta: ToriAtlas) -> list[StandardCable]:
    path = cable_path(ta.p, ta.q)
    _validate(ta, path)
    cutoff = _cutoff(ta, path)
    return [_standard_cable(ta, path, t) for t in ta.tori if t.i <= cutoff]


def _check_rule(rule: MergeRule, inv: dict, source: str, entry) -> None:
    ia, ib = inv[rule.a], inv[rule.b]
    found_a = ClassicalInvariants(ia.tb - rule.ka - rule.la, ia.rot + rule.ka - rule.la)
    found_b = ClassicalInvariants(ib.tb - rule.kb - rule.lb, ib.rot + rule.kb - rule.lb)
    if found_a != found_b:
        raise ToriAtlasError(
            f"{source} produced a merge relating classes with different invariants",
            source=source,
            entry=entry,
            rule=rule.to_json(),
            expected=found_a.to_json(),
            found=found_b.to_json(),
        )


def _inner_split(path: CablePath, t: TorusDecl, m: int, below: tuple[int, ...]) -> tuple[int, int]:
    """(k, l) from the slices between a shared inner torus at a_m and torus t."""
    low = min(t.i, 0)
    needed = max(low - m, 0)
    if len(below) != needed:
        raise ToriAtlasError(
            "signs for the slices below a_0 do not match the gap to the shared torus",
            torus=[t.i, t.j],
            expected=needed,
            found=len(below),
        )
    k = l = 0
    for u in range(m + 1, t.i + 1):
        sign = below[u - m - 1] if u <= low else t.signs[u - 1]
        if sign == PLUS:
            k += path.term(u)
        else:
            l += path.term(u)
    total = abs(product(path.vector(t.i) - path.vector(m), path.cabling))
    if k + l != total:
        raise ToriAtlasError("stabilization count does not telescope", torus=[t.i, t.j], expected=total, found=k + l)
    return k, l


def _outer_split(path: CablePath, outer: Slope, signs: tuple[int, ...], where) -> tuple[int, int]:
    """(k, l) from the slices between a divide torus and a shared outer torus."""
    cabling = path.cabling
    if outer.is_infinite or not outer > cabling:
        raise ToriAtlasError("outer torus slope must lie above q/p", slope=str(outer), **where)
    walk = clockwise_path(cabling, outer)
    if len(signs) != walk.edge_count:
        raise ToriAtlasError(
            "outer torus signs must cover the minimal path from q/p",
            path=walk.to_json(),
            expected=walk.edge_count,
            found=len(signs),
            **where,
        )
    k = l = 0
    for sign, step in zip(signs, edge_steps(walk)):
        if sign == MINUS:
            k += abs(product(step, cabling))
        else:
            l += abs(product(step, cabling))
    total = abs(product(outer, cabling))
    if k + l != total:
        raise ToriAtlasError("stabilization count does not telescope", expected=total, found=k + l, **where)
    return k, l


def commensuration_merges(ta: ToriAtlas) -> list[MergeRule]:
    """Merge rules from declared shared inner and outer tori, each checked for invariant balance."""
    path = cable_path(ta.p, ta.q)
    _validate(ta, path)
    cutoff = min(_cutoff(ta, path), path.n)
    tori = _torus_map(ta)
    inv = {torus_generator_id(t.key): _standard_cable(ta, path, t).invariants for t in ta.tori}
    rules = []
    for index, c in enumerate(ta.commensurating):
        ta_, tb_ = tori[c.a], tori[c.b]
        where = {"commensurating": index}
        if max(ta_.i, tb_.i) > cutoff:
            raise ToriAtlasError("shared inner tori are declared only between tori at or below q/p", **where)
        if not c.m < min(ta_.i, tb_.i):
            raise ToriAtlasError("shared inner torus must sit below both tori", m=c.m, **where)
        k, l = _inner_split(path, ta_, c.m, c.below_a)
        k2, l2 = _inner_split(path, tb_, c.m, c.below_b)
        rule = MergeRule(torus_generator_id(c.a), k, l, torus_generator_id(c.b), k2, l2)
        _check_rule(rule, inv, "shared inner torus", index)
        rules.append(rule)
    for index, c in enumerate(ta.super_commensurating):
        where = {"super_commensurating": index}
        if tori[c.a].i != path.n or tori[c.b].i != path.n:
            raise ToriAtlasError("shared outer tori relate divide tori only", **where)
        k, l = _outer_split(path, c.slope, c.signs_a, where)
        k2, l2 = _outer_split(path, c.slope, c.signs_b, where)
        rule = MergeRule(torus_generator_id(c.a), k, l, torus_generator_id(c.b), k2, l2)
        _check_rule(rule, inv, "shared outer torus", index)
        rules.append(rule)
    return rules


def _canonical_core(base: LegendrianAtlas, core: LegendrianClass) -> LegendrianClass:
    inv = base.invariants(core)
    for group in classes_at(base, inv.rot, inv.tb):
        if any(c.gen == core.gen for c in group):
            return group[0]
    raise AssertionError("core missing from its lattice point")


def _large_cable_rules(ta: ToriAtlas, path: CablePath, inv: dict) -> tuple[list[MergeRule], list[MergeRule]]:
    """Rules from large cables: landing on divides, and identical stabilized blocks."""
    n = path.n
    tori = _torus_map(ta)
    landing = []
    claimed: dict[tuple[Index, int], Index] = {}
    for divide in ta.tori:
        for target in divide.destabilizes_into:
            large = tori[target]
            d = large.i - n
            shift = inv[torus_generator_id(divide.key)].rot - inv[torus_generator_id(target)].rot + d
            where = {"divide": list(divide.key), "large": list(target)}
            if shift % 2 or not 0 <= shift // 2 <= d:
                raise ToriAtlasError("divide rotation is not reachable from the large cable", **where)
            t = shift // 2
            if (target, t) in claimed:
                raise ToriAtlasError(
                    "two divide tori claim the same stabilization of a large cable",
                    other=list(claimed[(target, t)]),
                    **where,
                )
            claimed[(target, t)] = divide.key
            landing.append(MergeRule(torus_generator_id(target), t, d - t, torus_generator_id(divide.key), 0, 0))
    for large in ta.tori:
        if large.i <= n:
            continue
        d = large.i - n
        missing = [t for t in range(d + 1) if (large.key, t) not in claimed]
        if missing:
            raise ToriAtlasError(
                "some full stabilizations of a large cable land on no declared divide torus",
                large=list(large.key),
                positive_counts=missing,
            )

    states: dict[tuple, list[tuple[Index, int, int]]] = {}
    for large in ta.tori:
        if large.i <= n:
            continue
        d = large.i - n
        back = 2 * n - large.i
        core = _canonical_core(ta.base, large.core)
        for plus in range(d):
            for minus in range(d - plus):
                stripped = (MINUS,) * plus + (PLUS,) * minus
                below = canonical_form(path.decorated(0, back + plus + minus, large.signs[:back] + stripped))
                key = (core, d - plus - minus, below.signs)
                states.setdefault(key, []).append((large.key, plus, minus))
    same_block = []
    for members in states.values():
        if len(members) < 2:
            continue
        first = members[0]
        for other in members[1:]:
            if (first[1], first[2]) == (0, 0) or (other[1], other[2]) == (0, 0):
                raise ToriAtlasError(
                    "a declared large cable coincides with a stabilization of another",
                    tori=[list(first[0]), list(other[0])],
                )
            same_block.append(
                MergeRule(torus_generator_id(first[0]), first[1], first[2], torus_generator_id(other[0]), other[1], other[2])
            )
    return landing, same_block


def _implied(rule: MergeRule, by: MergeRule) -> bool:
    for x in (by, MergeRule(by.b, by.kb, by.lb, by.a, by.ka, by.la)):
        if (x.a, x.b) != (rule.a, rule.b):
            continue
        dk, dl = rule.ka - x.ka, rule.la - x.la
        if dk >= 0 and dl >= 0 and rule.kb - x.kb == dk and rule.lb - x.lb == dl:
            return True
    return False


def _prune(rules: list[MergeRule]) -> list[MergeRule]:
    kept: list[MergeRule] = []
    for rule in rules:
        if rule.a == rule.b and (rule.ka, rule.la) == (rule.kb, rule.lb):
            continue
        if any(_implied(rule, other) for other in kept):
            continue
        kept = [other for other in kept if not _implied(other, rule)]
        kept.append(rule)
    return kept


def classify(ta: ToriAtlas) -> tuple[LegendrianAtlas, dict]:
    """Cable atlas generated by the standard cables, plus a report of the derived facts."""
    path = cable_path(ta.p, ta.q)
    _validate(ta, path)
    cutoff = _cutoff(ta, path)
    kept = [t for t in ta.tori if t.i <= cutoff]
    ignored = [list(t.key) for t in ta.tori if t.i > cutoff]
    cables = [_standard_cable(ta, path, t) for t in kept]
    inv = {torus_generator_id(t.key): _standard_cable(ta, path, t).invariants for t in ta.tori}

    inner_outer = commensuration_merges(ta)
    landing, same_block = ([], []) if ta.width is not None else _large_cable_rules(ta, path, inv)
    for source, group in (("large cable landing", landing), ("large cable block", same_block)):
        for index, rule in enumerate(group):
            _check_rule(rule, inv, source, index)
    rules = _prune(inner_outer + landing + same_block)

    gens = tuple(Generator(torus_generator_id((c.i, c.j)), c.invariants.tb, c.invariants.rot) for c in cables)
    max_tb = max((g.tb for g in gens), default=ta.p * ta.q - abs(product(path.vector(0), path.cabling)))
    meta = {"base": ta.base.name, "cable": {"p": ta.p, "q": ta.q}, "mode": ta.mode}
    atlas = LegendrianAtlas(f"{ta.base.name}({ta.p},{ta.q})", gens, tuple(rules), max_tb, None, meta)

    for x in range(len(gens)):
        for y in range(x + 1, len(gens)):
            gx, gy = gens[x], gens[y]
            if gx.invariants == gy.invariants and isotopic(atlas, LegendrianClass(gx.id), LegendrianClass(gy.id)):
                raise ToriAtlasError("two standard cables were identified without stabilizing", tori=[gx.id, gy.id])

    destabilizing = {t.key for t in kept if t.destabilizes_into}
    report = {
        "cable": {"p": ta.p, "q": ta.q},
        "mode": ta.mode,
        "path": [str(v) for v in path.vertices],
        "n": path.n,
        "tail": path.tail_k,
        "cutoff": cutoff,
        "ignored_tori": ignored,
        "standard_cables": [
            {**c.to_json(), "destabilizes": (c.i, c.j) in destabilizing} for c in cables
        ],
        "standard_cables_distinct": True,
        "rules": {
            "shared_inner": len(ta.commensurating),
            "shared_outer": len(ta.super_commensurating),
            "large_cable_landing": len(landing),
            "large_cable_block": len(same_block),
            "kept_after_pruning": len(rules),
        },
    }
    if ta.width is not None:
        report["width"] = str(ta.width)
    return atlas, report


def format_report(report: dict) -> str:
    p, q = report["cable"]["p"], report["cable"]["q"]
    lines = [
        f"({p},{q}) cable, {report['mode']} regime",
        f"path a_0..a_n: {' '.join(report['path'])} (n = {report['n']}, tail {report['tail']})",
    ]
    if "width" in report:
        lines.append(f"width {report['width']}, cables up to index {report['cutoff']}")
    for c in report["standard_cables"]:
        if c["kind"] != "divide":
            note = "does not destabilize"
        elif c["destabilizes"]:
            note = "destabilizes to a large cable"
        else:
            note = "does not destabilize"
        lines.append(f"  L[{c['i']},{c['j']}] {c['kind']:<6} tb {c['tb']:>4} rot {c['rot']:>4}  {note}")
    if report["ignored_tori"]:
        lines.append("  ignored above cutoff: " + ", ".join(f"[{i},{j}]" for i, j in report["ignored_tori"]))
    lines.append("standard cables pairwise distinct: yes")
    r = report["rules"]
    lines.append(
        "merge rules: "
        f"{r['shared_inner']} shared inner, {r['shared_outer']} shared outer, "
        f"{r['large_cable_landing']} landing, {r['large_cable_block']} block; "
        f"{r['kept_after_pruning']} kept"
    )
    return "\n".join(lines) + "\n"


def _index(value, what: str) -> Index:
    if not isinstance(value, (list, tuple)) or len(value) != 2 or not all(isinstance(v, int) for v in value):
        raise ToriAtlasError(f"{what} must be a pair of integers", value=repr(value))
    return (value[0], value[1])


def _signs(values) -> tuple[int, ...]:
    try:
        return tuple(parse_sign(s) for s in values)
    except ValidationError as exc:
        raise ToriAtlasError(str(exc)) from exc


_SUFFIX = re.compile(r"^(.+?)([+-]+)$")


def _core_class(value, base: LegendrianAtlas) -> LegendrianClass:
    """A core given as an id, as "u+-" (id with stabilization suffix), or as {gen, kplus, kminus}."""
    if isinstance(value, str) and value not in {g.id for g in base.generators}:
        match = _SUFFIX.match(value)
        if match:
            gid, suffix = match.groups()
            return LegendrianClass(gid, suffix.count("+"), suffix.count("-"))
    return LegendrianClass.from_json(value)


def tori_atlas_from_json(doc: dict) -> ToriAtlas:
    try:
        cable = doc["cable"]
        p, q = cable["p"], cable["q"]
        base = atlas_from_json(doc["base_atlas"])
        mode = doc.get("mode", "negative")
        if mode == "negative":
            width = None
        elif isinstance(mode, dict) and "in_between" in mode:
            width = parse_slope(mode["in_between"])
        else:
            raise ToriAtlasError("mode must be \"negative\" or {\"in_between\": slope}", mode=repr(mode))
        tori = []
        for entry in doc["tori"]:
            core = _core_class(entry["base_generator"], base)
            tori.append(
                TorusDecl(
                    int(entry["i"]),
                    int(entry["j"]),
                    core,
                    _signs(entry.get("signs", [])),
                    tuple(_index(t, "destabilizes_into entry") for t in entry.get("destabilizes_into", [])),
                )
            )
        comm = []
        for entry in doc.get("commensurating", []):
            below = entry.get("below", {})
            comm.append(
                Commensuration(
                    _index(entry["a"], "a"),
                    _index(entry["b"], "b"),
                    int(entry["m"]),
                    _signs(below.get("a", [])),
                    _signs(below.get("b", [])),
                )
            )
        sup = []
        for entry in doc.get("super_commensurating", []):
            sup.append(
                SuperCommensuration(
                    _index(entry["a"], "a"),
                    _index(entry["b"], "b"),
                    parse_slope(entry["slope"]),
                    _signs(entry["signs_a"]),
                    _signs(entry["signs_b"]),
                )
            )
        knot = doc.get("torus_knot")
        return ToriAtlas(
            p,
            q,
            base,
            tuple(tori),
            tuple(comm),
            tuple(sup),
            width,
            bool(doc.get("minimally_thickenable", False)),
            _index(knot, "torus_knot") if knot is not None else None,
        )
    except (KeyError, TypeError) as exc:
        raise ToriAtlasError(f"malformed tori atlas: {exc}") from exc


def tori_atlas_to_json(ta: ToriAtlas) -> dict:
    def core(c: LegendrianClass):
        return c.gen if (c.kplus, c.kminus) == (0, 0) else c.to_json()

    doc = {
        "cable": {"p": ta.p, "q": ta.q},
        "mode": "negative" if ta.width is None else {"in_between": str(ta.width)},
        "base_atlas": atlas_to_json(ta.base),
        "minimally_thickenable": ta.minimally_thickenable,
        "tori": [
            {
                "i": t.i,
                "j": t.j,
                "base_generator": core(t.core),
                "signs": [sign_str(s) for s in t.signs],
                "destabilizes_into": [list(x) for x in t.destabilizes_into],
            }
            for t in ta.tori
        ],
        "commensurating": [
            {
                "a": list(c.a),
                "b": list(c.b),
                "m": c.m,
                **(
                    {"below": {"a": [sign_str(s) for s in c.below_a], "b": [sign_str(s) for s in c.below_b]}}
                    if c.below_a or c.below_b
                    else {}
                ),
            }
            for c in ta.commensurating
        ],
        "super_commensurating": [
            {
                "a": list(c.a),
                "b": list(c.b),
                "slope": str(c.slope),
                "signs_a": [sign_str(s) for s in c.signs_a],
                "signs_b": [sign_str(s) for s in c.signs_b],
            }
            for c in ta.super_commensurating
        ],
    }
    if ta.torus_knot is not None:
        doc["torus_knot"] = list(ta.torus_knot)
    return doc


def load_tori_atlas(path: Union[str, Path]) -> ToriAtlas:
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ToriAtlasError(f"{path}: invalid JSON: {exc}") from exc
    return tori_atlas_from_json(doc)

"""Finite presentations of Legendrian classifications.

An atlas lists generators (Legendrian representatives with their tb and rot)
and merge rules ``S+^ka S-^la (a) = S+^kb S-^lb (b)``.  Rules are monotone:
stabilizing both sides of a rule gives another identification.

Deciding isotopy.  Every identification, including every stabilized rule,
relates two classes over the same lattice point.  So the equivalence splits
point by point: at a point P the candidates are the generators whose cone
contains P (each contributes exactly one class), and a rule joins its two
generators at P iff P lies at or below the rule's merge point, i.e. the
class of ``a`` at P has at least ``ka`` positive and ``la`` negative
stabilizations.  The closure at P is a union-find over those candidates and
is already closed under stabilization, because a chain of rule instances at
P stabilizes to a chain at the stabilized point.  No depth bound is needed.

Finite windows.  Writing X = rot - tb and Y = -tb - rot for a point, a
generator g sits at P with k = (sl(g) + X)/2 positive and
l = (tb(g) + rot(g) + Y)/2 negative stabilizations.  Every test above is a
threshold on X alone or on Y alone, so the local picture is constant beyond
the largest threshold in each direction.  Simplicity questions therefore
reduce to the finite window between the extreme thresholds.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional, Union

from .errors import AtlasError
from .invariants import ClassicalInvariants

__all__ = [
    "Generator",
    "MergeRule",
    "LegendrianClass",
    "LegendrianAtlas",
    "MountainRange",
    "TransverseClass",
    "classes_at",
    "isotopic",
    "mountain_range",
    "transverse_classes",
    "legendrian_nonsimple_witness",
    "transverse_nonsimple_witness",
    "is_legendrian_simple",
    "is_transversely_simple",
    "atlas_from_json",
    "atlas_to_json",
    "load_atlas",
    "save_atlas",
]


@dataclass(frozen=True)
class Generator:
    id: str
    tb: int
    rot: int

    @property
    def invariants(self) -> ClassicalInvariants:
        return ClassicalInvariants(self.tb, self.rot)

    @property
    def sl(self) -> int:
        return self.tb - self.rot


@dataclass(frozen=True)
class MergeRule:
    a: str
    ka: int
    la: int
    b: str
    kb: int
    lb: int

    def to_json(self) -> dict:
        return {"a": self.a, "ka": self.ka, "la": self.la, "b": self.b, "kb": self.kb, "lb": self.lb}


@dataclass(frozen=True, order=True)
class LegendrianClass:
    gen: str
    kplus: int = 0
    kminus: int = 0

    def stabilized(self, sign, times: int = 1) -> "LegendrianClass":
        if sign in ("+", 1):
            return LegendrianClass(self.gen, self.kplus + times, self.kminus)
        return LegendrianClass(self.gen, self.kplus, self.kminus + times)

    def label(self) -> str:
        if self.kplus == 0 and self.kminus == 0:
            return self.gen
        return f"S+^{self.kplus}S-^{self.kminus}({self.gen})"

    def to_json(self) -> dict:
        return {"gen": self.gen, "kplus": self.kplus, "kminus": self.kminus}

    @classmethod
    def from_json(cls, doc) -> "LegendrianClass":
        if isinstance(doc, str):
            return cls(doc)
        return cls(str(doc["gen"]), int(doc.get("kplus", 0)), int(doc.get("kminus", 0)))


def _is_int(v) -> bool:
    return isinstance(v, int) and not isinstance(v, bool)


@dataclass(frozen=True)
class LegendrianAtlas:
    name: str
    generators: tuple[Generator, ...]
    merges: tuple[MergeRule, ...] = ()
    max_tb: Optional[int] = None
    ceil_width: Optional[int] = None
    meta: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        gens = tuple(self.generators)
        merges = tuple(self.merges)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "merges", merges)
        if self.max_tb is None:
            if not gens:
                raise AtlasError("an empty atlas must declare max_tb")
            object.__setattr__(self, "max_tb", max(g.tb for g in gens))
        object.__setattr__(self, "_by_id", {g.id: (i, g) for i, g in enumerate(gens)})
        self._validate()

    def _validate(self):
        seen = set()
        for index, g in enumerate(self.generators):
            if not (_is_int(g.tb) and _is_int(g.rot)):
                raise AtlasError("generator invariants must be integers", generator=index, id=g.id)
            if g.id in seen:
                raise AtlasError(f"duplicate generator id {g.id!r}", generator=index, id=g.id)
            seen.add(g.id)
            if g.tb > self.max_tb:
                raise AtlasError(
                    f"generator {g.id!r} exceeds max_tb", generator=index, id=g.id, tb=g.tb, max_tb=self.max_tb
                )
            if (g.tb + g.rot) % 2 == 0:
                raise AtlasError(
                    f"generator {g.id!r} has tb + rot even", generator=index, id=g.id, tb=g.tb, rot=g.rot
                )
        if self.ceil_width is not None:
            if not _is_int(self.ceil_width) or not self.max_tb <= self.ceil_width <= self.max_tb + 1:
                raise AtlasError(
                    "ceil_width must lie between max_tb and max_tb + 1",
                    ceil_width=self.ceil_width,
                    max_tb=self.max_tb,
                )
        for index, rule in enumerate(self.merges):
            for side in (rule.a, rule.b):
                if side not in seen:
                    raise AtlasError(f"merge rule refers to unknown generator {side!r}", rule=index, id=side)
            for name in ("ka", "la", "kb", "lb"):
                value = getattr(rule, name)
                if not _is_int(value) or value < 0:
                    raise AtlasError("stabilization counts must be nonnegative integers", rule=index, field=name)
            found_a = self.invariants(LegendrianClass(rule.a, rule.ka, rule.la))
            found_b = self.invariants(LegendrianClass(rule.b, rule.kb, rule.lb))
            if found_a != found_b:
                raise AtlasError(
                    "merge rule relates classes with different invariants",
                    rule=index,
                    expected={"tb": found_a.tb, "rot": found_a.rot},
                    found={"tb": found_b.tb, "rot": found_b.rot},
                )

    def generator(self, gid: str) -> Generator:
        try:
            return self._by_id[gid][1]
        except KeyError:
            raise AtlasError(f"unknown generator {gid!r}", id=gid) from None

    def generator_index(self, gid: str) -> int:
        try:
            return self._by_id[gid][0]
        except KeyError:
            raise AtlasError(f"unknown generator {gid!r}", id=gid) from None

    def invariants(self, c: LegendrianClass) -> ClassicalInvariants:
        g = self.generator(c.gen)
        if not (_is_int(c.kplus) and _is_int(c.kminus)) or c.kplus < 0 or c.kminus < 0:
            raise AtlasError("stabilization counts must be nonnegative integers", cls=c.to_json())
        return ClassicalInvariants(g.tb - c.kplus - c.kminus, g.rot + c.kplus - c.kminus)

    def with_meta(self, **meta) -> "LegendrianAtlas":
        merged = {**self.meta, **meta}
        return LegendrianAtlas(self.name, self.generators, self.merges, self.max_tb, self.ceil_width, merged)


class _UnionFind:
    def __init__(self, items: Iterable):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def _class_at(g: Generator, rot: int, tb: int) -> Optional[LegendrianClass]:
    depth = g.tb - tb
    shift = rot - g.rot
    if depth < 0 or (depth + shift) % 2 or abs(shift) > depth:
        return None
    return LegendrianClass(g.id, (depth + shift) // 2, (depth - shift) // 2)


def classes_at(atlas: LegendrianAtlas, rot: int, tb: int) -> list[tuple[LegendrianClass, ...]]:
    """Isotopy classes over the lattice point (rot, tb), each as a tuple of representatives."""
    present = {}
    for g in atlas.generators:
        c = _class_at(g, rot, tb)
        if c is not None:
            present[g.id] = c
    uf = _UnionFind(present)
    for rule in atlas.merges:
        ca, cb = present.get(rule.a), present.get(rule.b)
        if ca is None or cb is None:
            continue
        if ca.kplus >= rule.ka and ca.kminus >= rule.la:
            if cb.kplus - rule.kb != ca.kplus - rule.ka:
                raise AssertionError("validated rule lost invariant balance")
            uf.union(rule.a, rule.b)
    groups: dict[str, list[LegendrianClass]] = {}
    for gid, c in present.items():
        groups.setdefault(uf.find(gid), []).append(c)
    order = {g.id: i for i, g in enumerate(atlas.generators)}
    result = [tuple(sorted(members, key=lambda c: order[c.gen])) for members in groups.values()]
    result.sort(key=lambda members: order[members[0].gen])
    return result


def isotopic(atlas: LegendrianAtlas, c1: LegendrianClass, c2: LegendrianClass) -> bool:
    i1, i2 = atlas.invariants(c1), atlas.invariants(c2)
    if i1 != i2:
        return False
    for group in classes_at(atlas, i1.rot, i1.tb):
        gens = {c.gen for c in group}
        if c1.gen in gens:
            return c2.gen in gens
    raise AssertionError("class missing from its own lattice point")


@dataclass(frozen=True)
class MountainRange:
    """Isotopy classes over every lattice point with tb >= floor."""

    floor: int
    points: dict  # (rot, tb) -> tuple of classes, each a tuple of LegendrianClass

    def count(self, rot: int, tb: int) -> int:
        return len(self.points.get((rot, tb), ()))

    def children(self, rot: int, tb: int) -> list[tuple[int, int]]:
        return [pt for pt in ((rot - 1, tb - 1), (rot + 1, tb - 1)) if pt in self.points]

    def sorted_points(self) -> list[tuple[int, int]]:
        return sorted(self.points, key=lambda pt: (-pt[1], pt[0]))

    def to_json(self) -> dict:
        return {
            "floor": self.floor,
            "points": [
                {
                    "rot": r,
                    "tb": t,
                    "count": len(self.points[(r, t)]),
                    "classes": [[c.to_json() for c in group] for group in self.points[(r, t)]],
                }
                for r, t in self.sorted_points()
            ],
        }

    @classmethod
    def from_json(cls, doc: dict) -> "MountainRange":
        points = {}
        for entry in doc["points"]:
            groups = tuple(tuple(LegendrianClass.from_json(c) for c in group) for group in entry["classes"])
            if len(groups) != entry["count"]:
                raise AtlasError("mountain range count does not match class list", rot=entry["rot"], tb=entry["tb"])
            points[(int(entry["rot"]), int(entry["tb"]))] = groups
        return cls(int(doc["floor"]), points)


def mountain_range(atlas: LegendrianAtlas, tb_floor: int) -> MountainRange:
    if atlas.generators and tb_floor > atlas.max_tb:
        raise AtlasError("tb floor lies above the atlas maximum", floor=tb_floor, max_tb=atlas.max_tb)
    lattice = set()
    for g in atlas.generators:
        for depth in range(g.tb - tb_floor + 1):
            for shift in range(-depth, depth + 1, 2):
                lattice.add((g.rot + shift, g.tb - depth))
    points = {pt: tuple(classes_at(atlas, *pt)) for pt in sorted(lattice, key=lambda pt: (-pt[1], pt[0]))}
    return MountainRange(tb_floor, points)


@dataclass(frozen=True)
class TransverseClass:
    """Transverse push-offs of ``S+^k(gen)`` for each listed (gen, k); sl is shared."""

    sl: int
    members: tuple[tuple[str, int], ...]

    def to_json(self) -> dict:
        return {"sl": self.sl, "members": [{"gen": g, "kplus": k} for g, k in self.members]}


def _transverse_groups(atlas: LegendrianAtlas, sl: int) -> list[tuple[tuple[str, int], ...]]:
    present = {}
    for g in atlas.generators:
        drop = g.sl - sl
        if drop >= 0 and drop % 2 == 0:
            present[g.id] = drop // 2
    uf = _UnionFind(present)
    for rule in atlas.merges:
        if rule.a in present and rule.b in present and present[rule.a] >= rule.ka:
            uf.union(rule.a, rule.b)
    groups: dict[str, list[tuple[str, int]]] = {}
    for gid, k in present.items():
        groups.setdefault(uf.find(gid), []).append((gid, k))
    order = {g.id: i for i, g in enumerate(atlas.generators)}
    result = [tuple(sorted(m, key=lambda x: order[x[0]])) for m in groups.values()]
    result.sort(key=lambda m: order[m[0][0]])
    return result


def transverse_classes(atlas: LegendrianAtlas, sl_floor: int) -> list[TransverseClass]:
    """Transverse classes with sl >= sl_floor, i.e. Legendrian classes up to eventual S- equivalence.

    Taking enough negative stabilizations clears every rule's S- threshold,
    so two push-offs agree iff some rule chain joins them using only the
    S+ thresholds.
    """
    if not atlas.generators:
        return []
    top = max(g.sl for g in atlas.generators)
    result = []
    for sl in range(top, sl_floor - 1, -1):
        for members in _transverse_groups(atlas, sl):
            result.append(TransverseClass(sl, members))
    return result


def _odd_window(thresholds: list[int]) -> range:
    low, high = min(thresholds), max(thresholds)
    if low % 2 == 0:
        low -= 1
    return range(low, high + 1, 2)


def legendrian_nonsimple_witness(atlas: LegendrianAtlas) -> Optional[tuple[int, int]]:
    """A lattice point carrying two or more classes, or None if the atlas is simple."""
    if not atlas.generators:
        return None
    xs = [-g.sl for g in atlas.generators]
    ys = [-(g.tb + g.rot) for g in atlas.generators]
    for rule in atlas.merges:
        a = atlas.generator(rule.a)
        xs.append(2 * rule.ka - a.sl)
        ys.append(2 * rule.la - (a.tb + a.rot))
    for x in _odd_window(xs):
        for y in _odd_window(ys):
            rot, tb = (x - y) // 2, -(x + y) // 2
            if len(classes_at(atlas, rot, tb)) > 1:
                return rot, tb
    return None


def transverse_nonsimple_witness(atlas: LegendrianAtlas) -> Optional[int]:
    """An sl value carrying two or more transverse classes, or None."""
    if not atlas.generators:
        return None
    thresholds = [g.sl for g in atlas.generators]
    for rule in atlas.merges:
        thresholds.append(atlas.generator(rule.a).sl - 2 * rule.ka)
    for sl in _odd_window(thresholds):
        if len(_transverse_groups(atlas, sl)) > 1:
            return sl
    return None


def is_legendrian_simple(atlas: LegendrianAtlas) -> bool:
    return legendrian_nonsimple_witness(atlas) is None


def is_transversely_simple(atlas: LegendrianAtlas) -> bool:
    return transverse_nonsimple_witness(atlas) is None


def atlas_to_json(atlas: LegendrianAtlas) -> dict:
    doc = {
        "name": atlas.name,
        "max_tb": atlas.max_tb,
        "ceil_width": atlas.ceil_width,
        "generators": [{"id": g.id, "tb": g.tb, "rot": g.rot} for g in atlas.generators],
        "merges": [r.to_json() for r in atlas.merges],
    }
    if atlas.meta:
        doc["meta"] = atlas.meta
    return doc


def atlas_from_json(doc: dict) -> LegendrianAtlas:
    if not isinstance(doc, dict):
        raise AtlasError("atlas document must be a JSON object")
    try:
        gens = []
        for index, g in enumerate(doc["generators"]):
            for key in ("id", "tb", "rot"):
                if key not in g:
                    raise AtlasError(f"generator is missing {key!r}", generator=index)
            gens.append(Generator(str(g["id"]), g["tb"], g["rot"]))
        merges = []
        for index, r in enumerate(doc.get("merges", [])):
            missing = [k for k in ("a", "ka", "la", "b", "kb", "lb") if k not in r]
            if missing:
                raise AtlasError("merge rule is missing fields", rule=index, missing=missing)
            merges.append(MergeRule(str(r["a"]), r["ka"], r["la"], str(r["b"]), r["kb"], r["lb"]))
        max_tb = doc.get("max_tb")
        ceil_width = doc.get("ceil_width")
        for key, value in (("max_tb", max_tb), ("ceil_width", ceil_width)):
            if value is not None and not _is_int(value):
                raise AtlasError(f"{key} must be an integer or null", value=repr(value))
        return LegendrianAtlas(str(doc.get("name", "")), tuple(gens), tuple(merges), max_tb, ceil_width, dict(doc.get("meta", {})))
    except (KeyError, TypeError) as exc:
        raise AtlasError(f"malformed atlas document: {exc}") from exc


def load_atlas(path: Union[str, Path]) -> LegendrianAtlas:
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise AtlasError(f"{path}: invalid JSON: {exc}") from exc
    return atlas_from_json(doc)


def save_atlas(atlas: LegendrianAtlas, path: Union[str, Path]) -> None:
    Path(path).write_text(json.dumps(atlas_to_json(atlas), indent=2) + "\n")

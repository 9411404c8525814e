"""Reference atlases used by the tests, the CLI examples and the JSON fixtures."""

from __future__ import annotations

from math import ceil

from .atlas import Generator, LegendrianAtlas, LegendrianClass, MergeRule
from .errors import ValidationError
from .farey import slope
from .llc import LargeCable
from .negcable import Commensuration, SuperCommensuration, ToriAtlas, TorusDecl
from .paths import MINUS, PLUS, DecoratedPath, FareyPath, balanced_block

__all__ = [
    "unknot_atlas",
    "twist_knot_atlas",
    "minimal_large_cable",
    "trefoil_tori_atlas",
    "large_torus_tori_atlas",
    "in_between_tori_atlas",
    "synthetic_companion",
]


def unknot_atlas() -> LegendrianAtlas:
    return LegendrianAtlas("unknot", (Generator("u", -1, 0),), (), -1, 0)


def twist_knot_atlas(m: int) -> LegendrianAtlas:
    """Mountain-range data for the twist knot K_m (m = -1 is the unknot and is refused)."""
    if m == -1:
        raise ValidationError("K_-1 is the unknot; use unknot_atlas()", m=m)
    name = f"twist({m})"
    if m >= -2 and m % 2 == 0:
        return LegendrianAtlas(name, (Generator("L", -(m + 1), 0),))
    if m >= 1:
        tb = -(m + 5)
        gens = (Generator("Lp", tb, 1), Generator("Lm", tb, -1))
        return LegendrianAtlas(name, gens, (MergeRule("Lp", 0, 1, "Lm", 1, 0),))
    if m % 2:
        count = -(m + 1) // 2
        gens = tuple(Generator(f"L{i}", -3, 0) for i in range(1, count + 1))
        rules = []
        for i in range(2, count + 1):
            rules.append(MergeRule("L1", 1, 0, f"L{i}", 1, 0))
            rules.append(MergeRule("L1", 0, 1, f"L{i}", 0, 1))
        return LegendrianAtlas(name, gens, tuple(rules))
    count = ceil(m * m / 8)
    c = ceil(-m / 4)
    gens = tuple(Generator(f"L{i}", 1, 0) for i in range(count))
    rules = []
    # S+ collapses generators onto c classes, S- onto c classes the other way round
    for i in range(count):
        head = min(i, c - 1)
        if head != i:
            rules.append(MergeRule(f"L{head}", 1, 0, f"L{i}", 1, 0))
        tail_head = max(0, i - (count - c))
        first = next(x for x in range(count) if max(0, x - (count - c)) == tail_head)
        if first != i:
            rules.append(MergeRule(f"L{first}", 0, 1, f"L{i}", 0, 1))
    return LegendrianAtlas(name, gens, tuple(rules))


def minimal_large_cable() -> LargeCable:
    """The (2, -1) cable of the unknot with tb = pq + 1, on a length-two block at -1/2."""
    block = balanced_block(slope(-1, 2), 1, [PLUS, MINUS])
    below = DecoratedPath(FareyPath((slope(-1),)), ())
    return LargeCable(2, -1, block, 0, below)


def trefoil_tori_atlas() -> ToriAtlas:
    """(2, -3) cables of the unknot: two divide tori sharing an outer torus of slope -1."""
    tori = (
        TorusDecl(1, 1, LegendrianClass("u", 1, 0), (PLUS,)),
        TorusDecl(1, 2, LegendrianClass("u", 0, 1), (MINUS,)),
    )
    inner = (Commensuration((1, 1), (1, 2), -1, (MINUS,), (PLUS,)),)
    outer = (SuperCommensuration((1, 1), (1, 2), slope(-1), (PLUS,), (MINUS,)),)
    return ToriAtlas(2, -3, unknot_atlas(), tori, inner, outer)


def synthetic_companion() -> LegendrianAtlas:
    """A made-up companion: g at (tb -2, rot 1), h at (-3, 0), with S+S-(g) = S+(h)."""
    gens = (Generator("g", -2, 1), Generator("h", -3, 0))
    return LegendrianAtlas("K", gens, (MergeRule("g", 1, 1, "h", 1, 0),), -2, -1)


def large_torus_tori_atlas() -> ToriAtlas:
    """(2, -3) cables of the synthetic companion, including a large cable at tb pq + 1."""
    tori = (
        TorusDecl(-1, 1, LegendrianClass("h")),
        TorusDecl(1, 1, LegendrianClass("g"), (PLUS,), ((2, 1),)),
        TorusDecl(1, 2, LegendrianClass("g"), (MINUS,), ((2, 1),)),
        TorusDecl(2, 1, LegendrianClass("g"), (PLUS, MINUS)),
    )
    inner = (Commensuration((1, 1), (-1, 1), -2, (PLUS, MINUS), (PLUS,)),)
    outer = (SuperCommensuration((1, 1), (1, 2), slope(-4, 3), (MINUS,), (PLUS,)),)
    return ToriAtlas(2, -3, synthetic_companion(), tori, inner, outer)


def in_between_tori_atlas() -> ToriAtlas:
    """(2, -3) cables of the synthetic companion when its width is -5/3."""
    tori = (
        TorusDecl(-1, 1, LegendrianClass("h")),
        TorusDecl(0, 1, LegendrianClass("g")),
        TorusDecl(1, 1, LegendrianClass("g"), (PLUS,)),
    )
    inner = (Commensuration((0, 1), (-1, 1), -2, (PLUS, MINUS), (PLUS,)),)
    return ToriAtlas(2, -3, synthetic_companion(), tori, inner, width=slope(-5, 3))

"""Cables with slope above the contact width: diamonds and atlas expansion.

Every Legendrian (p, q) cable is a stabilization of the standard cable of
some Legendrian in the companion, and ``S+^K S-^L`` of the standard cable of
g has underlying class ``S+^(K//p) S-^(L//p)(g)``.  Two cables are isotopic
iff their invariants and underlying classes agree.

Presenting that law with merge rules needs only one lifted rule per base
rule: base rule (a, ka, la, b, kb, lb) becomes (G_a, p*ka, p*la, G_b, p*kb, p*lb).
At a cable point with offsets (K, L) from G_a, that rule applies iff
K >= p*ka and L >= p*la, i.e. iff the base rule applies to the underlying
classes, and cone membership transfers the same way.  So the union-find
picture at each cable point is a copy of the picture at the underlying base
point.  The rules for other residues of K, L mod p are stabilizations of the
lifted rule and add nothing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .atlas import (
    Generator,
    LegendrianAtlas,
    LegendrianClass,
    MergeRule,
    TransverseClass,
    transverse_classes,
)
from .errors import ValidationError
from .farey import Slope, slope
from .invariants import cable_of_legendrian, check_cable

__all__ = [
    "Diamond",
    "diamond",
    "diamond_inequality_points",
    "positive_gate",
    "cable_generator_id",
    "expand",
    "underlying",
    "transverse_intervals",
]


@dataclass(frozen=True)
class Diamond:
    peak: tuple[int, int]  # (rot, tb)
    p: int
    points: frozenset

    def __len__(self) -> int:
        return len(self.points)


def _peak(p: int, q: int, a: int, b: int) -> tuple[int, int]:
    check_cable(p, q)
    if (a + b) % 2 == 0:
        raise ValidationError("diamond base point needs rot + tb odd", rot=a, tb=b)
    return p * a, p * q - abs(p * b - q)


def diamond(p: int, q: int, a: int, b: int) -> Diamond:
    """Cable classes within p-1 stabilizations of each sign of the standard cable of (rot a, tb b)."""
    r0, t0 = _peak(p, q, a, b)
    pts = frozenset((r0 + k - l, t0 - k - l) for k in range(p) for l in range(p))
    return Diamond((r0, t0), p, pts)


def diamond_inequality_points(p: int, q: int, a: int, b: int) -> frozenset:
    """The same diamond cut out by inequalities.

    With peak (pa, h): t + |r - pa| <= h bounds it from above and
    t - |r - pa| >= h - 2p + 2 from below.  The parity condition t + r odd
    selects the lattice points reachable by stabilization.
    """
    r0, h = _peak(p, q, a, b)
    pts = set()
    for t in range(h - 2 * p + 2, h + 1):
        for r in range(r0 - p + 1, r0 + p):
            if (t + r) % 2 == 1 and t + abs(r - r0) <= h and t - abs(r - r0) >= h - 2 * p + 2:
                pts.add((r, t))
    return frozenset(pts)


def positive_gate(atlas: LegendrianAtlas) -> tuple[int, str]:
    """The integer q/p must exceed, and which datum supplied it."""
    if atlas.ceil_width is not None:
        return atlas.ceil_width, "ceil_width"
    return atlas.max_tb + 1, "max_tb+1"


def _check_positive(atlas: LegendrianAtlas, p: int, q: int) -> Slope:
    cabling = check_cable(p, q)
    if cabling.is_integer:
        raise ValidationError("cabling slope must not be an integer", p=p, q=q)
    bound, source = positive_gate(atlas)
    if not cabling > slope(bound):
        raise ValidationError(
            f"cabling slope {cabling} does not exceed {bound} ({source})",
            p=p,
            q=q,
            bound=bound,
            source=source,
        )
    return cabling


def cable_generator_id(gid: str, p: int, q: int) -> str:
    return f"{gid}({p},{q})"


def expand(atlas: LegendrianAtlas, p: int, q: int) -> LegendrianAtlas:
    """The (p, q) cable atlas of a companion atlas, for q/p above the width."""
    _check_positive(atlas, p, q)
    gens = []
    for g in atlas.generators:
        inv = cable_of_legendrian(g.tb, g.rot, p, q)
        gens.append(Generator(cable_generator_id(g.id, p, q), inv.tb, inv.rot))
    merges = [
        MergeRule(
            cable_generator_id(r.a, p, q), p * r.ka, p * r.la, cable_generator_id(r.b, p, q), p * r.kb, p * r.lb
        )
        for r in atlas.merges
    ]
    max_tb = p * q - abs(p * atlas.max_tb - q)
    bound, source = positive_gate(atlas)
    meta = {
        "base": atlas.name,
        "cable": {"p": p, "q": q},
        "gate": {"bound": bound, "source": source},
    }
    return LegendrianAtlas(f"{atlas.name}({p},{q})", tuple(gens), tuple(merges), max_tb, None, meta)


def underlying(atlas: LegendrianAtlas, p: int, q: int, c: LegendrianClass) -> LegendrianClass:
    """The companion class a cable class comes from."""
    _check_positive(atlas, p, q)
    for g in atlas.generators:
        if cable_generator_id(g.id, p, q) == c.gen:
            if c.kplus < 0 or c.kminus < 0:
                raise ValidationError("stabilization counts must be nonnegative", cls=c.to_json())
            return LegendrianClass(g.id, c.kplus // p, c.kminus // p)
    raise ValidationError(f"{c.gen!r} is not a generator of the ({p},{q}) cable atlas", gen=c.gen)


def transverse_intervals(
    atlas: LegendrianAtlas, p: int, q: int, sl_floor: Optional[int] = None
) -> list[tuple[TransverseClass, list[int]]]:
    """Self-linking numbers of the p transverse cables over each companion transverse class.

    Companion classes with sl >= ``sl_floor`` are listed; the default floor is
    the lowest generator self-linking number.
    """
    _check_positive(atlas, p, q)
    if not atlas.generators:
        return []
    if sl_floor is None:
        sl_floor = min(g.sl for g in atlas.generators)
    out = []
    for tc in transverse_classes(atlas, sl_floor):
        out.append((tc, [p * tc.sl + p * q - q - 2 * k for k in range(p)]))
    return out

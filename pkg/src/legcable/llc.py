"""Legendrian cables with tb above pq.

Such a cable with tb = pq + m sits on the middle torus of a balanced block of
length 2m centered at q/p.  Stabilizing it peels one basic slice off each
end of the block: the slice at the front face carries the stabilization's
sign and the one at the back face the opposite sign.  After m
stabilizations, i of them positive, the knot is a Legendrian divide on the
torus T_i of the original block whose front side holds i positive slices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .errors import InternalInvariantError, ValidationError
from .farey import Slope, slope
from .invariants import check_cable, rot_along_path
from .paths import (
    MINUS,
    PLUS,
    BalancedBlock,
    DecoratedPath,
    FareyPath,
    balanced_block,
    canonical_form,
    parse_sign,
    tail,
)

__all__ = [
    "LargeCable",
    "DivideDescriptor",
    "YasuiBound",
    "required_block",
    "llc_rot",
    "llc_stabilize",
    "llc_isotopic",
    "tb_upper_bound",
    "yasui_width_bound",
]


def required_block(tb: int, p: int, q: int) -> Optional[int]:
    """Half-length of the balanced block a cable with this tb needs, or None."""
    check_cable(p, q)
    m = tb - p * q
    return m if m > 0 else None


@dataclass(frozen=True)
class LargeCable:
    p: int
    q: int
    block: BalancedBlock
    base_rot: int
    below: DecoratedPath
    positive_stripped: int = 0

    def __post_init__(self):
        if self.block.center != check_cable(self.p, self.q):
            raise ValidationError("block center must be the cabling slope", center=str(self.block.center))
        if self.below.last_unsigned:
            raise ValidationError("decorations below the block must be fully signed")
        if self.below.path.end != self.block.back:
            raise ValidationError(
                "decorations below must end at the block's back face",
                below_end=str(self.below.path.end),
                back=str(self.block.back),
            )
        if not self.below.path.start.is_integer:
            raise ValidationError("decorations below must start at an integer slope")

    @property
    def m(self) -> int:
        return self.block.m

    @property
    def tb(self) -> int:
        return self.p * self.q + self.m

    def through_front(self) -> DecoratedPath:
        vertices = self.below.path.vertices + self.block.vertices[1:]
        return DecoratedPath(FareyPath(vertices), self.below.signs + self.block.signs)

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "base_rot": self.base_rot,
            "block": self.block.to_json(),
            "below": self.below.to_json(),
            "positive_stripped": self.positive_stripped,
        }

    @classmethod
    def from_json(cls, doc: dict) -> "LargeCable":
        return cls(
            int(doc["p"]),
            int(doc["q"]),
            BalancedBlock.from_json(doc["block"]),
            int(doc["base_rot"]),
            DecoratedPath.from_json(doc["below"]),
            int(doc.get("positive_stripped", 0)),
        )


@dataclass(frozen=True)
class DivideDescriptor:
    """A Legendrian divide on the torus T_index of the original block."""

    p: int
    q: int
    index: int
    tb: int
    rot: int

    def to_json(self) -> dict:
        return {"divide": self.index, "p": self.p, "q": self.q, "tb": self.tb, "rot": self.rot}


def llc_rot(lc: LargeCable) -> int:
    back = rot_along_path(lc.p, lc.q, lc.base_rot, lc.below)
    front = rot_along_path(lc.p, lc.q, lc.base_rot, lc.through_front())
    if back != front:
        raise InternalInvariantError(f"front face rot {front} differs from back face rot {back}")
    return back


def _remove_one(signs: list[int], sign: int) -> list[int]:
    out = list(signs)
    out.remove(sign)
    return out


def llc_stabilize(lc: LargeCable, sign) -> Union[LargeCable, DivideDescriptor]:
    sign = parse_sign(sign)
    rot = llc_rot(lc) + sign
    stripped = lc.positive_stripped + (1 if sign == PLUS else 0)
    if lc.m == 1:
        return DivideDescriptor(lc.p, lc.q, stripped, lc.p * lc.q, rot)
    inner_signs = sorted(_remove_one(_remove_one(list(lc.block.signs), sign), -sign))
    inner = BalancedBlock(lc.block.center, lc.m - 1, lc.block.step, tuple(inner_signs))
    back_slice = FareyPath(lc.below.path.vertices + (inner.back,))
    below = DecoratedPath(back_slice, lc.below.signs + (-sign,))
    result = LargeCable(lc.p, lc.q, inner, lc.base_rot, below, stripped)
    if llc_rot(result) != rot or result.tb != lc.tb - 1:
        raise InternalInvariantError("stabilized large cable has inconsistent invariants")
    return result


def _isotopy_key(lc: LargeCable) -> tuple:
    below = canonical_form(lc.below)
    return (
        lc.p,
        lc.q,
        lc.m,
        lc.block.step,
        tuple(sorted(lc.block.signs)),
        lc.base_rot,
        below.path.vertices,
        below.signs,
    )


def llc_isotopic(a: LargeCable, b: LargeCable) -> bool:
    """Isotopy of large cables, modelled as equality of canonical block data."""
    return _isotopy_key(a) == _isotopy_key(b)


def tb_upper_bound(p: int, q: int, ceil_width: Optional[int], max_tb: int) -> int:
    """Upper bound on tb of Legendrian (p, q) cables.

    Without a width datum the width's ceiling is only known to be max_tb or
    max_tb + 1, so when q/p falls between those the larger bound is returned.
    """
    cabling = check_cable(p, q)
    if cabling.is_integer:
        raise ValidationError("cabling slope must not be an integer", p=p, q=q)
    low = p * q + tail(cabling).k
    high = p * q + p * max_tb - q
    if ceil_width is not None:
        return low if cabling <= slope(ceil_width) else high
    if cabling <= slope(max_tb):
        return low
    if cabling > slope(max_tb + 1):
        return high
    return max(low, high)


@dataclass(frozen=True)
class YasuiBound:
    bound: Slope
    n_max: int
    block: BalancedBlock

    def to_json(self) -> dict:
        return {
            "bound": str(self.bound),
            "n_max": self.n_max,
            "witness": {
                "cable": {"p": self.n_max, "q": -1},
                "tb": -1,
                "block": self.block.to_json(),
            },
        }


def yasui_width_bound(m: int) -> YasuiBound:
    """Lower bound on the contact width of the twist knot K_m, m <= -5.

    The (n, -1) cables with n <= (3 - m) // 4 have tb -1, so a block of
    half-length n - 1 centred at -1/n exists; its front face bounds the width.
    """
    if m > -5:
        raise ValidationError("width bound applies to twist knots with m <= -5", m=m)
    n = (3 - m) // 4
    signs = [PLUS] * (n - 1) + [MINUS] * (n - 1)
    block = balanced_block(slope(-1, n), n - 1, signs)
    expected = slope(-1, 2 * n - 1)
    if block.front != expected:
        raise InternalInvariantError(f"block front {block.front} differs from {expected}")
    return YasuiBound(block.front, n, block)

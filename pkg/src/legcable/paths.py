"""Minimal Farey paths, continued fraction blocks and decorated paths.

Lifts.  Several computations (block detection, Euler pairings) need actual
integer vectors for the vertices of a path, not just slopes.  A path's lifts
are chosen so that consecutive lifts satisfy ``product(v[i], v[i+1]) == -1``,
which is the sign a clockwise step between finite slopes with positive
denominators has.  The global sign is fixed by giving the first finite
vertex a positive denominator.  For paths of finite slopes this is just the
normalized representatives; a leading ``inf`` lifts to (-1, 0).

Blocks.  A run of edges is a continued fraction block exactly when the lift
differences along it are all equal.  If the lifts are b, b+c, ..., b+kc then
det(b, c) = det(b, b+c) = -1, so the basis change sending b to (0, 1) and c to
(1, 0) is orientation preserving and carries the run to 0, 1, ..., k.
Conversely any such basis change carries consistent lifts to consistent
lifts, so equal differences are forced.

The unsigned edge of an almost-decorated path (solid tori) is the edge at
``inf``, i.e. the first edge of a path that starts at ``inf``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Optional, Sequence

from .errors import PathError
from .farey import (
    INF,
    LatticeVector,
    Slope,
    apply_matrix,
    invert_matrix,
    mediant,
    parse_slope,
    product,
    slope,
    to_infinity_matrix,
)

__all__ = [
    "PLUS",
    "MINUS",
    "parse_sign",
    "sign_str",
    "FareyPath",
    "DecoratedPath",
    "CfbBlock",
    "CfbDecomposition",
    "Tail",
    "BalancedBlock",
    "shortest_path",
    "clockwise_path",
    "path_lifts",
    "edge_steps",
    "decompose_cfb",
    "tail",
    "canonical_form",
    "enumerate_thickened",
    "enumerate_solid_torus",
    "solid_torus_path",
    "balanced_block",
]

PLUS = 1
MINUS = -1


def parse_sign(value) -> int:
    if value in ("+", 1, "+1"):
        return PLUS
    if value in ("-", "−", -1, "-1"):
        return MINUS
    raise PathError(f"unknown sign {value!r}", value=repr(value))


def sign_str(sign: int) -> str:
    return "+" if sign == PLUS else "-"


def _clockwise_images(vertices: Sequence[Slope]) -> list[Slope]:
    """Images of vertices[1:] under a basis change sending vertices[0] to inf."""
    matrix = to_infinity_matrix(vertices[0])
    return [apply_matrix(matrix, v).to_slope() for v in vertices[1:]]


@dataclass(frozen=True)
class FareyPath:
    vertices: tuple[Slope, ...]

    def __post_init__(self):
        verts = tuple(self.vertices)
        object.__setattr__(self, "vertices", verts)
        if not verts:
            raise PathError("a path needs at least one vertex")
        for a, b in zip(verts, verts[1:]):
            if abs(product(a, b)) != 1:
                raise PathError(f"{a} and {b} are not Farey neighbours", a=str(a), b=str(b))
        images = _clockwise_images(verts)
        for i, img in enumerate(images):
            if img.is_infinite:
                raise PathError("path returns to its starting slope", index=i + 1)
            if i and not images[i - 1] < img:
                raise PathError("path is not clockwise monotone", index=i + 1, vertex=str(verts[i + 1]))

    @property
    def edge_count(self) -> int:
        return len(self.vertices) - 1

    @property
    def start(self) -> Slope:
        return self.vertices[0]

    @property
    def end(self) -> Slope:
        return self.vertices[-1]

    def __len__(self) -> int:
        return self.edge_count

    def to_json(self) -> list[str]:
        return [str(v) for v in self.vertices]


def path_lifts(path: FareyPath) -> list[LatticeVector]:
    verts = path.vertices
    lifts = [verts[0].vector]
    for v in verts[1:]:
        w = v.vector
        if product(lifts[-1], w) == 1:
            w = -w
        lifts.append(w)
    first_finite = next((i for i, v in enumerate(verts) if not v.is_infinite), None)
    if first_finite is not None and lifts[first_finite].y < 0:
        lifts = [-w for w in lifts]
    return lifts


def edge_steps(path: FareyPath) -> list[LatticeVector]:
    lifts = path_lifts(path)
    return [b - a for a, b in zip(lifts, lifts[1:])]


class CfbBlock(NamedTuple):
    start: int
    edges: int
    step: LatticeVector

    @property
    def stop(self) -> int:
        return self.start + self.edges


@dataclass(frozen=True)
class CfbDecomposition:
    blocks: tuple[CfbBlock, ...]

    def block_of_edge(self, edge: int) -> int:
        for index, block in enumerate(self.blocks):
            if block.start <= edge < block.stop:
                return index
        raise IndexError(edge)


def decompose_cfb(path: FareyPath) -> CfbDecomposition:
    steps = edge_steps(path)
    blocks: list[CfbBlock] = []
    start = 0
    for i in range(1, len(steps) + 1):
        if i == len(steps) or steps[i] != steps[start]:
            blocks.append(CfbBlock(start, i - start, steps[start]))
            start = i
    return CfbDecomposition(tuple(blocks))


def shortest_path(target: Slope) -> FareyPath:
    """Minimal path from floor(target) clockwise to target (Stern-Brocot descent)."""
    if target.is_infinite:
        raise PathError("shortest_path needs a finite target")
    base = target.floor()
    if target.is_integer:
        return FareyPath((target,))
    vertices = [slope(base)]
    left, right = slope(base), slope(base + 1)
    while True:
        mid = mediant(left, right)
        if mid == target:
            break
        if target > mid:
            left = mid
            vertices.append(mid)
        else:
            right = mid
    vertices.append(target)
    return FareyPath(tuple(vertices))


def clockwise_path(start: Slope, end: Slope) -> FareyPath:
    """Minimal Farey path from ``start`` clockwise to ``end``."""
    if start == end:
        return FareyPath((start,))
    matrix = to_infinity_matrix(start)
    image = apply_matrix(matrix, end).to_slope()
    image_path = [INF] + list(shortest_path(image).vertices)
    back = invert_matrix(matrix)
    return FareyPath(tuple(apply_matrix(back, v).to_slope() for v in image_path))


def solid_torus_path(s: Slope) -> FareyPath:
    """Minimal path from inf clockwise to a finite slope ``s``."""
    if s.is_infinite:
        raise PathError("solid torus boundary slope must be finite")
    return FareyPath((INF,) + shortest_path(s).vertices)


class Tail(NamedTuple):
    k: int
    step: LatticeVector
    continuation: tuple[Slope, ...]


def tail(target: Slope, count: Optional[int] = None) -> Tail:
    """Length of the final block of the minimal path and its continuation.

    ``count`` continuation vertices are produced (default: k of them).
    """
    if target.is_infinite or target.is_integer:
        raise PathError("tail needs a finite non-integer slope", target=str(target))
    last = decompose_cfb(shortest_path(target)).blocks[-1]
    count = last.edges if count is None else count
    base = target.vector
    cont = tuple((base + last.step.scale(i)).to_slope() for i in range(1, count + 1))
    return Tail(last.edges, last.step, cont)


@dataclass(frozen=True)
class DecoratedPath:
    path: FareyPath
    signs: tuple[int, ...]
    last_unsigned: bool = False

    def __post_init__(self):
        signs = tuple(parse_sign(s) for s in self.signs)
        object.__setattr__(self, "signs", signs)
        expected = self.path.edge_count - (1 if self.last_unsigned else 0)
        if self.last_unsigned and self.path.edge_count < 1:
            raise PathError("an almost-decorated path needs an edge to leave unsigned")
        if len(signs) != expected:
            raise PathError(
                "sign count does not match edge count",
                expected=expected,
                found=len(signs),
            )

    @property
    def first_signed_edge(self) -> int:
        return 1 if self.last_unsigned else 0

    def edge_signs(self) -> list[Optional[int]]:
        """Per-edge signs with ``None`` for the unsigned edge."""
        return [None] * self.first_signed_edge + list(self.signs)

    def to_json(self) -> dict:
        return {
            "vertices": self.path.to_json(),
            "signs": [sign_str(s) for s in self.signs],
            "last_unsigned": self.last_unsigned,
        }

    @classmethod
    def from_json(cls, doc: dict) -> "DecoratedPath":
        try:
            vertices = tuple(parse_slope(v) for v in doc["vertices"])
            signs = tuple(parse_sign(s) for s in doc.get("signs", []))
            unsigned = bool(doc.get("last_unsigned", False))
        except (KeyError, TypeError) as exc:
            raise PathError(f"malformed decorated path: {exc}") from exc
        return cls(FareyPath(vertices), signs, unsigned)


def _signed_edges_per_block(d: DecoratedPath) -> list[list[int]]:
    """Indices into ``d.signs`` grouped by block."""
    groups = []
    offset = d.first_signed_edge
    for block in decompose_cfb(d.path).blocks:
        groups.append([e - offset for e in range(block.start, block.stop) if e >= offset])
    return groups


def canonical_form(d: DecoratedPath) -> DecoratedPath:
    signs = list(d.signs)
    for group in _signed_edges_per_block(d):
        values = sorted(signs[i] for i in group)
        for i, v in zip(group, values):
            signs[i] = v
    return DecoratedPath(d.path, tuple(signs), d.last_unsigned)


def _canonical_family(path: FareyPath, unsigned: bool) -> list[DecoratedPath]:
    probe = DecoratedPath(path, (PLUS,) * (path.edge_count - int(unsigned)), unsigned)
    groups = _signed_edges_per_block(probe)
    options = []
    for group in groups:
        n = len(group)
        options.append([(MINUS,) * minus + (PLUS,) * (n - minus) for minus in range(n + 1)])
    result = []
    for choice in itertools.product(*options):
        signs = tuple(s for part in choice for s in part)
        result.append(DecoratedPath(path, signs, unsigned))
    result.sort(key=lambda d: d.signs)
    return result


def enumerate_thickened(s0: Slope, s1: Slope) -> list[DecoratedPath]:
    """Canonical decorated minimal paths from s0 clockwise to s1."""
    if s0 == s1:
        raise PathError("endpoints must differ")
    return _canonical_family(clockwise_path(s0, s1), unsigned=False)


def enumerate_solid_torus(s: Slope) -> list[DecoratedPath]:
    """Canonical almost-decorated paths from inf to s; the edge at inf is unsigned."""
    return _canonical_family(solid_torus_path(s), unsigned=True)


@dataclass(frozen=True)
class BalancedBlock:
    center: Slope
    m: int
    step: LatticeVector
    signs: tuple[int, ...] = field(default=())

    def __post_init__(self):
        signs = tuple(parse_sign(s) for s in self.signs)
        object.__setattr__(self, "signs", signs)
        if not isinstance(self.m, int) or self.m < 1:
            raise PathError("block half-length must be a positive integer", m=self.m)
        if len(signs) != 2 * self.m:
            raise PathError("a balanced block needs 2m signs", expected=2 * self.m, found=len(signs))
        if signs.count(PLUS) != self.m:
            raise PathError("block signs are not balanced", plus=signs.count(PLUS), minus=signs.count(MINUS))
        vecs = self.lattice_vertices()
        for a, b in zip(vecs, vecs[1:]):
            if abs(product(a, b)) != 1:
                raise PathError("block vertices are not Farey neighbours", a=a.to_json(), b=b.to_json())

    def lattice_vertices(self) -> list[LatticeVector]:
        c = self.center.vector
        return [c + self.step.scale(j - self.m) for j in range(2 * self.m + 1)]

    @property
    def vertices(self) -> tuple[Slope, ...]:
        return tuple(v.to_slope() for v in self.lattice_vertices())

    @property
    def back(self) -> Slope:
        return self.vertices[0]

    @property
    def front(self) -> Slope:
        return self.vertices[-1]

    def path(self) -> FareyPath:
        return FareyPath(self.vertices)

    def decorated(self) -> DecoratedPath:
        return DecoratedPath(self.path(), self.signs)

    def to_json(self) -> dict:
        return {
            "center": str(self.center),
            "m": self.m,
            "step": self.step.to_json(),
            "signs": [sign_str(s) for s in self.signs],
            "vertices": [str(v) for v in self.vertices],
        }

    @classmethod
    def from_json(cls, doc: dict) -> "BalancedBlock":
        x, y = doc["step"]
        return cls(parse_slope(doc["center"]), int(doc["m"]), LatticeVector(int(x), int(y)), tuple(doc["signs"]))


def balanced_block(
    center: Slope,
    m: int,
    signs: Iterable,
    step: Optional[LatticeVector] = None,
) -> BalancedBlock:
    """Length-2m block centered at ``center``; default step continues the tail of ``center``."""
    if step is None:
        step = tail(center).step
    return BalancedBlock(center, m, step, tuple(signs))

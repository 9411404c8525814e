"""Classical invariants of cables: tb and rot of ruling curves and divides."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import ValidationError
from .farey import LatticeVector, Slope, product, slope
from .paths import DecoratedPath, PLUS, edge_steps, parse_sign

__all__ = [
    "ClassicalInvariants",
    "check_cable",
    "ruling_tb",
    "cable_of_legendrian",
    "euler_pd",
    "rot_along_path",
    "rot_absolute_form",
    "self_linking",
    "stabilize",
]


@dataclass(frozen=True, order=True)
class ClassicalInvariants:
    tb: int
    rot: int

    @property
    def sl(self) -> int:
        return self.tb - self.rot

    def to_json(self) -> dict:
        return {"tb": self.tb, "rot": self.rot}


def check_cable(p: int, q: int) -> Slope:
    """Validate cabling coefficients and return the cabling slope q/p."""
    if not isinstance(p, int) or not isinstance(q, int) or p < 1:
        raise ValidationError("cable needs integers with p >= 1", p=p, q=q)
    if gcd(p, q) != 1:
        raise ValidationError("cable coefficients must be coprime", p=p, q=q)
    return slope(q, p)


def ruling_tb(s: Slope, p: int, q: int) -> int:
    """tb of a q/p ruling curve on a torus with dividing slope s."""
    return p * q - abs(product(s, check_cable(p, q)))


def cable_of_legendrian(tb: int, rot: int, p: int, q: int) -> ClassicalInvariants:
    """Invariants of the standard (p, q) cable of a Legendrian with the given tb and rot."""
    check_cable(p, q)
    return ClassicalInvariants(p * q - abs(p * tb - q), p * rot)


def euler_pd(d: DecoratedPath) -> LatticeVector:
    """Signed sum of edge steps: the Poincare dual of the relative Euler class."""
    if d.last_unsigned:
        raise ValidationError("Euler class needs a fully decorated path")
    total = LatticeVector(0, 0)
    for sign, step in zip(d.signs, edge_steps(d.path)):
        total = total + step if sign == PLUS else total - step
    return total


def rot_along_path(p: int, q: int, rot_base: int, d: DecoratedPath) -> int:
    """Rotation of the q/p curve on the outer torus of a decorated path.

    The path starts at the standard-neighbourhood slope of a Legendrian with
    rotation ``rot_base``.  Computed through the signed Euler pairing, which
    stays valid for paths that run past q/p.
    """
    return p * rot_base - product(euler_pd(d), check_cable(p, q))


def rot_absolute_form(p: int, q: int, rot_base: int, d: DecoratedPath) -> int:
    """Same quantity summed edge by edge with absolute pairings.

    Agrees with ``rot_along_path`` only while every step pairs nonnegatively
    with q/p, which is the case for paths that stay at or below q/p.
    """
    target = check_cable(p, q)
    total = p * rot_base
    for sign, step in zip(d.signs, edge_steps(d.path)):
        total -= sign * abs(product(step, target))
    return total


def self_linking(c: ClassicalInvariants) -> int:
    return c.tb - c.rot


def stabilize(c: ClassicalInvariants, sign) -> ClassicalInvariants:
    return ClassicalInvariants(c.tb - 1, c.rot + parse_sign(sign))

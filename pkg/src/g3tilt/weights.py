from __future__ import annotations

"""Exact arithmetic on rho-shifted weights of G(3) in symbol coordinates.

A weight d*delta + a*omega1 + b*omega2 is identified with the symbol
[d | b/2, (3a+b)/2, -(3a+2b)/2]; conversely [d|x,y,z] with x+y+z=0 is
d*delta + (2/3)(y-x)*omega1 + 2x*omega2.
"""

from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Tuple, Union

Rat = Union[int, Q]


def _q(v: Rat) -> Q:
    return v if isinstance(v, Q) else Q(v)


@dataclass(frozen=True)
class Weight:
    """A rho-shifted G(3) weight in symbol form [d | x, y, z] with x+y+z = 0."""

    d: Q
    x: Q
    y: Q
    z: Q

    def __init__(self, d: Rat, x: Rat, y: Rat, z: Rat) -> None:
        d, x, y, z = _q(d), _q(x), _q(y), _q(z)
        if x + y + z != 0:
            raise ValueError(f"symbol coordinates must sum to zero: {x}, {y}, {z}")
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "z", z)

    # -- linear structure -------------------------------------------------

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(self.d + other.d, self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(self.d - other.d, self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self) -> "Weight":
        return Weight(-self.d, -self.x, -self.y, -self.z)

    def __rmul__(self, c: Rat) -> "Weight":
        c = _q(c)
        return Weight(c * self.d, c * self.x, c * self.y, c * self.z)

    def __mul__(self, c: Rat) -> "Weight":
        return self.__rmul__(c)

    @property
    def eps(self) -> Tuple[Q, Q, Q]:
        return (self.x, self.y, self.z)

    def is_zero(self) -> bool:
        return self.d == 0 and self.x == 0 and self.y == 0 and self.z == 0

    def __repr__(self) -> str:
        return f"[{self.d}|{self.x},{self.y},{self.z}]"


ZERO = Weight(0, 0, 0, 0)

# delta and the epsilon_i expressed in symbol coordinates.  epsilon_3 is
# -epsilon_1 - epsilon_2 and is never stored independently.
DELTA = Weight(1, 0, 0, 0)
EPS1 = Weight(0, 1, Q(-1, 2), Q(-1, 2))
EPS2 = Weight(0, Q(-1, 2), 1, Q(-1, 2))
EPS3 = Weight(0, Q(-1, 2), Q(-1, 2), 1)

# rho = -(5/2)delta + 2 eps1 + 3 eps2 = [-5/2 | 1/2, 2, -5/2]
RHO = Weight(Q(-5, 2), Q(1, 2), 2, Q(-5, 2))


def from_fundamental(d: Rat, a: Rat, b: Rat) -> Weight:
    """Convert d*delta + a*omega1 + b*omega2 to symbol form."""
    d, a, b = _q(d), _q(a), _q(b)
    return Weight(d, b / 2, (3 * a + b) / 2, -(3 * a + 2 * b) / 2)


def to_fundamental(lam: Weight) -> Tuple[Q, Q, Q]:
    """Inverse of from_fundamental: returns (d, a, b)."""
    return (lam.d, Q(2, 3) * (lam.y - lam.x), 2 * lam.x)


def bilinear_form(lam: Weight, mu: Weight) -> Q:
    """The supersymmetric bilinear form with (delta,delta) = -2, (eps_i,eps_i) = 2,
    (eps_i,eps_j) = -1 for i != j, (delta,eps_i) = 0."""
    return -2 * lam.d * mu.d + Q(4, 3) * (lam.x * mu.x + lam.y * mu.y + lam.z * mu.z)


def coroot_pairing(lam: Weight, gamma: Weight) -> Q:
    """<lam, gamma^vee> = 2(lam,gamma)/(gamma,gamma) for an even root gamma.

    Odd roots of G(3) are exactly those with d-component +-1; they are rejected
    (the isotropic ones have no coroot, and delta itself is outside the table).
    """
    if gamma.d in (1, -1):
        raise ValueError(f"coroot pairing undefined for odd root {gamma}")
    norm = bilinear_form(gamma, gamma)
    if norm == 0:
        raise ValueError(f"coroot pairing undefined for isotropic {gamma}")
    return 2 * bilinear_form(lam, gamma) / norm


def casimir_scalar(lam: Weight) -> Q:
    """Casimir eigenvalue marker 3d^2 - 2x^2 - 2y^2 - 2z^2; constant on linkage classes."""
    return 3 * lam.d ** 2 - 2 * (lam.x ** 2 + lam.y ** 2 + lam.z ** 2)


# -- text format ----------------------------------------------------------


def _parse_rat(tok: str) -> Q:
    return Q(tok.strip())


def parse_weight(text: str) -> Weight:
    """Parse "d|x,y,z" (symbol form) or "F:d;a;b" (fundamental coordinates).

    Rationals may be written "p/q" or as integers.
    """
    text = text.strip()
    if text.startswith("F:"):
        parts = text[2:].split(";")
        if len(parts) != 3:
            raise ValueError(f"expected F:d;a;b, got {text!r}")
        d, a, b = (_parse_rat(p) for p in parts)
        return from_fundamental(d, a, b)
    if "|" not in text:
        raise ValueError(f"expected 'd|x,y,z' or 'F:d;a;b', got {text!r}")
    head, tail = text.split("|", 1)
    coords = tail.split(",")
    if len(coords) != 3:
        raise ValueError(f"expected three symbol coordinates in {text!r}")
    return Weight(_parse_rat(head), *(_parse_rat(c) for c in coords))


def format_weight(lam: Weight) -> str:
    return f"{lam.d}|{lam.x},{lam.y},{lam.z}"


# -- osp(3|2) companion ----------------------------------------------------


@dataclass(frozen=True)
class OspWeight:
    """A rho-shifted osp(3|2) weight a*delta + b*eps, with (delta,delta) = -1,
    (eps,eps) = 1, (delta,eps) = 0."""

    a: Q
    b: Q

    def __init__(self, a: Rat, b: Rat) -> None:
        object.__setattr__(self, "a", _q(a))
        object.__setattr__(self, "b", _q(b))

    def __add__(self, other: "OspWeight") -> "OspWeight":
        return OspWeight(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "OspWeight") -> "OspWeight":
        return OspWeight(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "OspWeight":
        return OspWeight(-self.a, -self.b)

    def __rmul__(self, c: Rat) -> "OspWeight":
        c = _q(c)
        return OspWeight(c * self.a, c * self.b)

    __mul__ = __rmul__

    def __repr__(self) -> str:
        return f"({self.a})d+({self.b})e"


OSP_ZERO = OspWeight(0, 0)
OSP_DELTA = OspWeight(1, 0)
OSP_EPS = OspWeight(0, 1)
# rho for osp(3|2): -delta/2 + eps/2
OSP_RHO = OspWeight(Q(-1, 2), Q(1, 2))


def osp_bilinear(lam: OspWeight, mu: OspWeight) -> Q:
    return -lam.a * mu.a + lam.b * mu.b


def parse_osp_weight(text: str) -> OspWeight:
    """Parse "a|b" for a*delta + b*eps."""
    parts = text.strip().split("|")
    if len(parts) != 2:
        raise ValueError(f"expected 'a|b', got {text!r}")
    return OspWeight(_parse_rat(parts[0]), _parse_rat(parts[1]))


def format_osp_weight(lam: OspWeight) -> str:
    return f"{lam.a}|{lam.b}"

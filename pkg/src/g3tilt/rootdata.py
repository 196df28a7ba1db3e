from __future__ import annotations

"""Static root-system data for G(3) and osp(3|2).

Roots are a closed enumeration (no generic engine): every theorem refers to
roots by name, so the fixed list keeps pattern matching total.
"""

from dataclasses import dataclass
from typing import Dict, List, Tuple

from .weights import (
    DELTA,
    EPS1,
    EPS2,
    EPS3,
    OSP_DELTA,
    OSP_EPS,
    OSP_ZERO,
    OspWeight,
    Weight,
    ZERO,
    bilinear_form,
)


@dataclass(frozen=True)
class Root:
    name: str
    vector: Weight
    parity: str          # "even" | "odd"
    isotropic: bool
    length_class: str    # "long" | "short" | "delta"
    positive: bool

    def __repr__(self) -> str:
        return self.name


def _mk(name: str, vec: Weight, parity: str, length_class: str, positive: bool) -> Root:
    return Root(name, vec, parity, bilinear_form(vec, vec) == 0, length_class, positive)


# Positive even roots: 2delta, eps1, eps2, -eps3, eps2-eps1, eps1-eps3, eps2-eps3.
TWO_DELTA = _mk("2d", 2 * DELTA, "even", "delta", True)
R_E1 = _mk("e1", EPS1, "even", "short", True)
R_E2 = _mk("e2", EPS2, "even", "short", True)
R_ME3 = _mk("-e3", -EPS3, "even", "short", True)
R_E2_E1 = _mk("e2-e1", EPS2 - EPS1, "even", "long", True)
R_E1_E3 = _mk("e1-e3", EPS1 - EPS3, "even", "long", True)
R_E2_E3 = _mk("e2-e3", EPS2 - EPS3, "even", "long", True)

# Positive odd roots: delta and delta +- eps_i.
R_D = _mk("d", DELTA, "odd", "delta", True)
R_D_P_E1 = _mk("d+e1", DELTA + EPS1, "odd", "short", True)
R_D_M_E1 = _mk("d-e1", DELTA - EPS1, "odd", "short", True)
R_D_P_E2 = _mk("d+e2", DELTA + EPS2, "odd", "short", True)
R_D_M_E2 = _mk("d-e2", DELTA - EPS2, "odd", "short", True)
R_D_P_E3 = _mk("d+e3", DELTA + EPS3, "odd", "short", True)
R_D_M_E3 = _mk("d-e3", DELTA - EPS3, "odd", "short", True)

POSITIVE_EVEN: Tuple[Root, ...] = (
    TWO_DELTA, R_E1, R_E2, R_ME3, R_E2_E1, R_E1_E3, R_E2_E3,
)
POSITIVE_ODD: Tuple[Root, ...] = (
    R_D, R_D_P_E1, R_D_M_E1, R_D_P_E2, R_D_M_E2, R_D_P_E3, R_D_M_E3,
)
# Phi^+_{1,x}: isotropic positive odd roots; Phi^+_{1,.} = {delta};
# Phi^+_{0,o}: the six epsilon-plane even roots.
ISOTROPIC_PLUS: Tuple[Root, ...] = (
    R_D_P_E1, R_D_M_E1, R_D_P_E2, R_D_M_E2, R_D_P_E3, R_D_M_E3,
)
EPS_PLANE_PLUS: Tuple[Root, ...] = (R_E1, R_E2, R_ME3, R_E2_E1, R_E1_E3, R_E2_E3)


def _negate(r: Root) -> Root:
    return Root("-(" + r.name + ")", -r.vector, r.parity, r.isotropic, r.length_class, False)


NEGATIVE_ROOTS: Tuple[Root, ...] = tuple(_negate(r) for r in POSITIVE_EVEN + POSITIVE_ODD)
ALL_ROOTS: Tuple[Root, ...] = POSITIVE_EVEN + POSITIVE_ODD + NEGATIVE_ROOTS

_BY_VECTOR: Dict[Weight, Root] = {r.vector: r for r in ALL_ROOTS}


def root_by_vector(v: Weight) -> Root:
    return _BY_VECTOR[v]


def is_root(v: Weight) -> bool:
    return v in _BY_VECTOR


@dataclass(frozen=True)
class SimpleSystem:
    index: int
    roots: Tuple[Weight, Weight, Weight]
    rho_shift: Weight    # difference of this system's Weyl vector from the standard rho


# The four simple systems; each is obtained from the previous one by the odd
# reflection in the isotropic simple root that gets negated, and the Weyl
# vector shifts by that root.
PI0 = SimpleSystem(0, (EPS2 - EPS1, EPS1, DELTA + EPS3), ZERO)
PI1 = SimpleSystem(1, (EPS2 - EPS1, DELTA - EPS2, -DELTA - EPS3), DELTA + EPS3)
PI2 = SimpleSystem(2, (DELTA - EPS1, -DELTA + EPS2, EPS1), 2 * DELTA + EPS3 - EPS2)
PI3 = SimpleSystem(3, (EPS2 - EPS1, EPS1 - DELTA, DELTA), 3 * DELTA + EPS3 - EPS2 - EPS1)

SIMPLE_SYSTEMS: Tuple[SimpleSystem, ...] = (PI0, PI1, PI2, PI3)


FinDimWeights = List[Tuple[object, int]]


def adjoint_weights() -> List[Tuple[Weight, int]]:
    """Weight multiset of the 31-dimensional adjoint module: the 28 roots with
    multiplicity 1 plus the zero weight with multiplicity 3 (Cartan rank)."""
    return [(r.vector, 1) for r in ALL_ROOTS] + [(ZERO, 3)]


def osp_standard_weights() -> List[Tuple[OspWeight, int]]:
    """Weight multiset of the 5-dimensional standard osp(3|2)-module."""
    return [
        (OSP_DELTA, 1),
        (-OSP_DELTA, 1),
        (OSP_EPS, 1),
        (-OSP_EPS, 1),
        (OSP_ZERO, 1),
    ]


def odd_reflect_symbol(lam: Weight, beta: Weight, system: SimpleSystem) -> Weight:
    """Rho-shifted highest-weight change under the odd reflection in beta.

    The unshifted highest weight drops by beta exactly when (lam,beta) != 0,
    while the Weyl vector always gains beta; in shifted symbols the two
    compose to: unchanged when (lam,beta) != 0, and lam+beta when
    (lam,beta) = 0.
    """
    if beta not in system.roots:
        raise ValueError(f"{beta} is not simple in system {system.index}")
    if bilinear_form(beta, beta) != 0:
        raise ValueError(f"{beta} is not isotropic")
    if bilinear_form(lam, beta) != 0:
        return lam
    return lam + beta


# osp(3|2) root data.  Positive roots: delta-eps, delta+eps, delta, 2delta, eps.
OSP_POS_EVEN: Tuple[OspWeight, ...] = (2 * OSP_DELTA, OSP_EPS)
OSP_POS_ODD: Tuple[OspWeight, ...] = (OSP_DELTA - OSP_EPS, OSP_DELTA + OSP_EPS, OSP_DELTA)
OSP_ISOTROPIC_PLUS: Tuple[OspWeight, ...] = (OSP_DELTA - OSP_EPS, OSP_DELTA + OSP_EPS)
OSP_POSITIVE: Tuple[OspWeight, ...] = OSP_POS_ODD + OSP_POS_EVEN

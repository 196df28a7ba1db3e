from __future__ import annotations

"""Atypicality data, integral Weyl groups, linkage, and block classification.

Atypical non-integral blocks fall into five families, named here by the
isomorphism type of the epsilon-plane part of the integral Weyl group:
Generic (trivial), Z2 (five sub-cases), V = Z2xZ2 (three cases I/II/III),
S3, and WG2 (the full dihedral group).  Each family carries a canonical
block representative and, where one exists, the label of an equivalent
previously-understood category.
"""

import json
from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Dict, List, Optional, Sequence, Tuple

from .weights import (
    Weight,
    bilinear_form,
    casimir_scalar,
    coroot_pairing,
    format_weight,
    from_fundamental,
    to_fundamental,
)
from .rootdata import (
    EPS_PLANE_PLUS,
    ISOTROPIC_PLUS,
    R_E1,
    R_E2,
    R_E1_E3,
    R_E2_E1,
    R_E2_E3,
    R_ME3,
    Root,
)
from .weyl import (
    E,
    REFLECTIONS,
    S0,
    S1,
    S2,
    S_ME3,
    Subgroup,
    WeylElt,
    act,
    orbit_antidominant,
    subgroup,
)


def _is_int(q: Q) -> bool:
    return q.denominator == 1


def _is_half_int(q: Q) -> bool:
    return (q - Q(1, 2)).denominator == 1


@dataclass(frozen=True)
class Atypicality:
    A: Tuple[Root, ...]          # isotropic positive odd roots orthogonal to lam
    Z: Tuple[Root, ...]          # epsilon-plane roots with integral coroot pairing
    s0_integral: bool            # <lam,(2delta)^vee> in 1/2+Z
    typical: bool
    strongly_typical: bool


def atypicality(lam: Weight) -> Atypicality:
    a = tuple(g for g in ISOTROPIC_PLUS if bilinear_form(lam, g.vector) == 0)
    z = tuple(g for g in EPS_PLANE_PLUS if _is_int(coroot_pairing(lam, g.vector)))
    s0_int = _is_half_int(lam.d)
    typical = not a
    return Atypicality(a, z, s0_int, typical, typical and lam.d != 0)


# Canonical generator names/choices per integral epsilon-plane root set.
_GEN_NAME = {
    "e2-e1": "s1",
    "e1": "s2",
    "e2": "se2",
    "-e3": "se3",
    "e1-e3": "se1e3",
    "e2-e3": "se2e3",
}


def _canonical_gens(z: Sequence[Root]) -> List[Tuple[str, WeylElt]]:
    names = {r.name for r in z}
    if len(names) == 6:
        return [("s1", S1), ("s2", S2)]
    if names == {"e1", "e2", "-e3"}:
        return [("se1", REFLECTIONS["e1"]), ("se2", REFLECTIONS["e2"])]
    return [(_GEN_NAME[r.name], REFLECTIONS[r.name]) for r in z]


def integral_weyl_group(lam: Weight) -> Subgroup:
    at = atypicality(lam)
    gens = _canonical_gens(at.Z)
    if at.s0_integral:
        gens = [("s0", S0)] + gens
    g = subgroup(gens)
    # Sanity: the reflections of the generated group are exactly Z (plus s0).
    assert len(g.g2_part) in (1, 2, 4, 6, 12)
    return g


def linked(lam: Weight, mu: Weight) -> bool:
    """Whether mu lies in the linkage class of lam: mu = w(lam + k*alpha) with
    w in the integral Weyl group, alpha orthogonal isotropic, k integral.
    For typical lam the class is the bare integral-Weyl-group orbit."""
    at = atypicality(lam)
    group = integral_weyl_group(lam)
    for w in group.elements:
        pre = act(w.inverse(), mu)
        diff = pre - lam
        if diff.is_zero():
            return True
        for alpha in at.A:
            k = diff.d / alpha.vector.d
            if _is_int(k) and diff == k * alpha.vector:
                return True
    return False


def equivalent_weights(lam: Weight, mu: Weight) -> bool:
    """The central-character relation on atypical weights: lam ~ mu iff
    mu = w(lam + k*alpha) over the full Weyl group with k arbitrary, which
    for atypical weights reduces to equality of Casimir scalars."""
    if atypicality(lam).typical or atypicality(mu).typical:
        raise ValueError("equivalent_weights is defined for atypical weights only")
    return casimir_scalar(lam) == casimir_scalar(mu)


@dataclass(frozen=True)
class BlockId:
    family: str                      # Typical/Integral/Generic/Z2/V/S3/WG2
    case: str                        # Z2: 1a/1b/2c/2d/2e; V: I/II/III; S3: primed?
    ell: Optional[Q]                 # V/S3 family parameter, WG2 parameter a
    canonical_rep: Weight
    equivalence_label: str

    def to_json(self) -> str:
        ell = self.ell
        if ell is not None:
            ell = int(ell) if ell.denominator == 1 else str(ell)
        return json.dumps({
            "family": self.family,
            "case": self.case,
            "ell": ell,
            "canonical_rep": format_weight(self.canonical_rep),
            "equivalence_label": self.equivalence_label,
        })


# V-family canonical representatives.

def v_lambda_rep(ell: Q) -> Weight:
    return Weight(-ell - Q(1, 2), Q(1, 4), ell + Q(1, 4), -ell - Q(1, 2))


def v_mu_rep(ell: Q) -> Weight:
    return Weight(ell, ell, ell, -2 * ell)


def v_nu_rep(ell: Q) -> Weight:
    return Weight(ell, Q(1, 4), -ell - Q(1, 4), ell)


def s3_rep(ell: Q, primed: bool) -> Weight:
    h = ell / 2
    return Weight(-h, 0, -h, h) if primed else Weight(-h, -h, 0, h)


def wg2_rep(a: Q) -> Weight:
    return from_fundamental(0, a, 0)


def _z_names(lam: Weight) -> frozenset:
    return frozenset(r.name for r in atypicality(lam).Z)


def normalize_good_diagrams(lam: Weight) -> Tuple[List[str], Weight]:
    """Chain of s1/s2 steps moving the integral root set into {e2-e1, -e3}.

    Each step reflects in a simple epsilon-plane root that is not currently
    integral, which gives a highest-weight-category equivalence between the
    source and target blocks (the blocks differ!)."""
    at = atypicality(lam)
    if len(at.Z) not in (1, 2):
        raise ValueError("normalization chains apply to Z2 and Z2xZ2 integral sets")
    chain: List[str] = []
    cur = lam
    for _ in range(6):
        names = _z_names(cur)
        if names <= {"e2-e1", "-e3"}:
            return chain, cur
        if "e1-e3" in names or "e2" in names:
            step, w, root = "s2", S2, "e1"
        else:  # e2-e3 or e1 integral
            step, w, root = "s1", S1, "e2-e1"
        assert root not in names, "reflected simple root must not be integral"
        chain.append(step)
        cur = act(w, cur)
    raise RuntimeError(f"normalization chain did not terminate for {lam}")


_STEP = {"s1": S1, "s2": S2}


def _unchain(chain: Sequence[str], mu: Weight) -> Weight:
    """Pull a weight back through a normalization chain (the steps are
    involutions, applied in reverse order)."""
    for step in reversed(chain):
        mu = act(_STEP[step], mu)
    return mu


def _classify_z2(lam: Weight, at: Atypicality) -> BlockId:
    gamma = at.Z[0]
    alpha = at.A[0]
    p = bilinear_form(gamma.vector, alpha.vector)
    if gamma.length_class == "long":
        if p != 0:
            return BlockId("Z2", "1a", None, lam, "gl(2|1) principal")
        return BlockId("Z2", "1b", None, lam, "sl(2)+gl(1|1) principal")
    if abs(p) == 2:
        if at.s0_integral:
            return BlockId("Z2", "2c", None, lam, "osp(3|2) integral")
        return BlockId("Z2", "2d", None, lam, "osp(3|2) non-integral")
    assert abs(p) == 1
    return BlockId("Z2", "2e", None, lam, "gl(2|1) principal")


def _classify_v(lam: Weight, at: Atypicality) -> BlockId:
    chain, nrm = normalize_good_diagrams(lam)
    nat = atypicality(nrm)
    assert _z_names(nrm) == {"e2-e1", "-e3"}
    alpha_names = {r.name for r in nat.A}
    if alpha_names & {"d+e3", "d-e3"}:
        cur = nrm
        if "d-e3" in {r.name for r in atypicality(cur).A}:
            cur = act(S_ME3, cur)  # within the block: s_{-e3} is integral here
        d, a, b = to_fundamental(cur)
        if nat.s0_integral:
            ell = abs(Q(3, 2) * a)  # the blocks of ell and -ell coincide
            assert _is_int(ell) and int(ell) % 3 == 0
            rep = v_lambda_rep(ell)
            case = "I"
        else:
            ell = -(3 * a + 1) / 2
            if ell < 0:  # the blocks of ell and -ell-1 coincide
                ell = -ell - 1
            assert _is_int(ell) and int(ell) % 3 == 1
            rep = v_nu_rep(ell)
            case = "III"
        assert linked(rep, cur)
        return BlockId("V", case, ell, _unchain(chain, rep), "")
    # remaining case: orthogonal isotropic roots involve eps_1/eps_2
    cur = nrm
    if {r.name for r in atypicality(cur).A} & {"d-e1", "d-e2"}:
        cur = act(S_ME3, cur)
    d, a, b = to_fundamental(cur)
    if d == cur.x:
        ell = cur.x + a
    else:
        assert d == cur.y
        ell = cur.x + a / 2
    assert (ell - Q(1, 4)) * 2 % 1 == 0  # ell in 1/4 + Z/2
    rep = v_mu_rep(ell)
    assert linked(rep, cur)
    return BlockId("V", "II", ell, _unchain(chain, rep), "")


def _classify_s3(lam: Weight, at: Atypicality, group: Subgroup) -> BlockId:
    for w in sorted(group.g2_part, key=lambda w: (w.eps, w.perm)):
        mu = act(w, lam)
        if mu.d in (mu.x, mu.y, mu.z):
            break
    else:
        raise RuntimeError(f"no orbit element of {lam} aligns d with a coordinate")
    d, a, b = to_fundamental(mu)
    k = 3 * a
    assert _is_int(k) and int(k) % 3 != 0
    if d == mu.x:
        ell = -3 * b - 2 * k
    elif d == mu.y:
        ell = 2 * (k / 2 + Q(3, 2) * b)
    else:
        ell = k
    primed = ell < 0
    ell = abs(ell)
    assert _is_int(ell) and int(ell) % 3 != 0
    rep = s3_rep(ell, primed)
    assert linked(rep, lam)
    return BlockId("S3", "primed" if primed else "unprimed", ell, rep, "")


def _classify_wg2(lam: Weight, at: Atypicality) -> BlockId:
    alpha = at.A[0]
    assert _is_int(lam.d)
    mu0 = lam - lam.d * alpha.vector
    assert mu0.d == 0
    a = Q(2, 3) * max(abs(mu0.x), abs(mu0.y), abs(mu0.z))
    rep = wg2_rep(a)
    assert linked(rep, lam)
    return BlockId("WG2", "", a, rep, "")


def classify(lam: Weight) -> BlockId:
    at = atypicality(lam)
    group = integral_weyl_group(lam)
    if at.typical:
        anti, _ = orbit_antidominant(lam, group)
        return BlockId("Typical", "", None, anti, "Lie-algebra block")
    g2 = len(group.g2_part)
    if g2 == 12 and at.s0_integral:
        return BlockId("Integral", "", None, lam, "see CW18")
    if g2 == 1:
        return BlockId("Generic", "", None, lam, "gl(1|1) principal")
    if g2 == 2:
        return _classify_z2(lam, at)
    if g2 == 4:
        return _classify_v(lam, at)
    if g2 == 6:
        return _classify_s3(lam, at, group)
    return _classify_wg2(lam, at)


def block_members(lam: Weight, k_range: Sequence[int] = range(-10, 11)) -> List[Weight]:
    """The finite window {w(lam + k*alpha)} of the linkage class of lam."""
    at = atypicality(lam)
    if at.typical:
        raise ValueError("typical weight: the linkage class is the Weyl-group orbit")
    alpha = at.A[0]
    group = integral_weyl_group(lam)
    out = []
    seen = set()
    for k in k_range:
        base = lam + k * alpha.vector
        for w in group.elements:
            mu = act(w, base)
            if mu not in seen:
                seen.add(mu)
                out.append(mu)
    return out

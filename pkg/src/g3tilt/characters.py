from __future__ import annotations

"""Truncated formal characters, the Jantzen-sum right-hand side, and the
Verma-flag positivity certificates.

Characters live in a truncated group ring: a character anchored at a
reference weight ref stores integer coefficients of e^{(ref-rho)-nu} for
offsets nu in the nonnegative root lattice, truncated by height (coordinate
sum in the simple basis alpha1 = eps2-eps1, alpha2 = eps1, alpha3 =
delta+eps3).
"""

import json
from dataclasses import dataclass, field
from fractions import Fraction as Q
from typing import Dict, Iterable, List, Optional, Tuple

from .weights import Weight, bilinear_form, coroot_pairing, format_weight
from .rootdata import (
    EPS_PLANE_PLUS,
    ISOTROPIC_PLUS,
    POSITIVE_EVEN,
    POSITIVE_ODD,
    TWO_DELTA,
)
from .weyl import REFLECTIONS, act

Offset = Tuple[int, int, int]


def offset_coords(nu: Weight) -> Tuple[Q, Q, Q]:
    """Coordinates of nu in the simple basis (alpha1, alpha2, alpha3)."""
    c3 = nu.d
    c2 = 2 * (nu.x + nu.y + c3)
    c1 = Q(2, 3) * (c2 - c3 / 2 - nu.x)
    return (c1, c2, c3)


def lattice_offset(nu: Weight) -> Optional[Offset]:
    """nu as a nonnegative integer offset, or None if outside the cone."""
    c = offset_coords(nu)
    if all(q.denominator == 1 and q >= 0 for q in c):
        return (int(c[0]), int(c[1]), int(c[2]))
    return None


def dominates(mu: Weight, nu: Weight) -> bool:
    """mu >= nu in the dominance order: mu - nu in the N-span of positive roots."""
    return lattice_offset(mu - nu) is not None


def height(nu: Weight) -> Q:
    return sum(offset_coords(nu))


_SIMPLE_OFFSETS: Dict[str, Offset] = {}
for _r in POSITIVE_EVEN + POSITIVE_ODD:
    _off = lattice_offset(_r.vector)
    assert _off is not None, _r
    _SIMPLE_OFFSETS[_r.name] = _off


def _ht(off: Offset) -> int:
    return off[0] + off[1] + off[2]


def _mul_geometric(coeffs: Dict[Offset, int], step: Offset, depth: int,
                   alternating: bool = False) -> Dict[Offset, int]:
    """Multiply by 1 + s*e^{-step} + s^2 e^{-2 step} + ... with s = -1 when
    alternating, truncated by height.  Computed by the linear recurrence
    out[v] = coeffs[v] + s*out[v - step]."""
    sign = -1 if alternating else 1
    out: Dict[Offset, int] = {}
    for off in sorted((o for o in _iter_offsets(depth)), key=_ht):
        prev = (off[0] - step[0], off[1] - step[1], off[2] - step[2])
        val = coeffs.get(off, 0)
        if min(prev) >= 0:
            val += sign * out.get(prev, 0)
        if val:
            out[off] = val
    return out


def _mul_binomial(coeffs: Dict[Offset, int], step: Offset, depth: int) -> Dict[Offset, int]:
    """Multiply by (1 + e^{-step}), truncated."""
    out = dict(coeffs)
    for off, v in coeffs.items():
        new = (off[0] + step[0], off[1] + step[1], off[2] + step[2])
        if _ht(new) <= depth:
            out[new] = out.get(new, 0) + v
    return {o: v for o, v in out.items() if v}


def _iter_offsets(depth: int):
    for a in range(depth + 1):
        for b in range(depth + 1 - a):
            for c in range(depth + 1 - a - b):
                yield (a, b, c)


_VERMA_CACHE: Dict[int, Dict[Offset, int]] = {}


def verma_series(depth: int) -> Dict[Offset, int]:
    """The Verma character as offsets from its highest weight:
    prod over odd positive roots of (1+e^{-beta}) divided by
    prod over even positive roots of (1-e^{-alpha}), truncated."""
    if depth not in _VERMA_CACHE:
        coeffs: Dict[Offset, int] = {(0, 0, 0): 1}
        for r in POSITIVE_ODD:
            coeffs = _mul_binomial(coeffs, _SIMPLE_OFFSETS[r.name], depth)
        for r in POSITIVE_EVEN:
            coeffs = _mul_geometric(coeffs, _SIMPLE_OFFSETS[r.name], depth)
        _VERMA_CACHE[depth] = coeffs
    return _VERMA_CACHE[depth]


@dataclass(frozen=True)
class TruncatedChar:
    reference: Weight
    depth: int
    coeffs: Dict[Offset, int]

    def coeff(self, nu: Weight) -> int:
        off = lattice_offset(nu)
        if off is None:
            return 0
        return self.coeffs.get(off, 0)

    def __add__(self, other: "TruncatedChar") -> "TruncatedChar":
        if other.reference != self.reference:
            raise ValueError("cannot add characters with different references")
        depth = min(self.depth, other.depth)
        out: Dict[Offset, int] = {}
        for src in (self.coeffs, other.coeffs):
            for off, v in src.items():
                if _ht(off) <= depth:
                    out[off] = out.get(off, 0) + v
        return TruncatedChar(self.reference, depth, {o: v for o, v in out.items() if v})

    def __sub__(self, other: "TruncatedChar") -> "TruncatedChar":
        neg = TruncatedChar(other.reference, other.depth,
                            {o: -v for o, v in other.coeffs.items()})
        return self + neg

    def is_zero(self) -> bool:
        return not self.coeffs

    def to_json(self) -> str:
        items = sorted(self.coeffs.items(), key=lambda kv: (_ht(kv[0]), kv[0]))
        return json.dumps([{"offset": list(o), "coeff": v} for o, v in items])


def verma_truncated(lam: Weight, depth: int, reference: Optional[Weight] = None,
                    shift_series: Optional[Dict[Offset, int]] = None) -> TruncatedChar:
    """ch M_lam, anchored at reference (default lam itself).  If shift_series
    is given, the Verma series is first multiplied by it (used for the
    isotropic-quotient terms of the Jantzen sum)."""
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    ref = lam if reference is None else reference
    base = lattice_offset(ref - lam)
    if base is None:
        raise ValueError(f"{lam} is not below the reference {ref}")
    series = verma_series(depth)
    if shift_series is not None:
        acc: Dict[Offset, int] = {}
        for o1, v1 in series.items():
            for o2, v2 in shift_series.items():
                o = (o1[0] + o2[0], o1[1] + o2[1], o1[2] + o2[2])
                if _ht(o) <= depth:
                    acc[o] = acc.get(o, 0) + v1 * v2
        series = acc
    out: Dict[Offset, int] = {}
    for off, v in series.items():
        o = (off[0] + base[0], off[1] + base[1], off[2] + base[2])
        if _ht(o) <= depth and v:
            out[o] = out.get(o, 0) + v
    return TruncatedChar(ref, depth, out)


def _alternating_series(gamma_off: Offset, depth: int) -> Dict[Offset, int]:
    """1/(1+e^{-gamma}) = sum (-1)^k e^{-k gamma}, truncated."""
    out: Dict[Offset, int] = {}
    k = 0
    while _ht((k * gamma_off[0], k * gamma_off[1], k * gamma_off[2])) <= depth:
        out[(k * gamma_off[0], k * gamma_off[1], k * gamma_off[2])] = (-1) ** k
        k += 1
    return out


def _is_pos_int(q: Q) -> bool:
    return q.denominator == 1 and q > 0


def jsf_rhs(lam: Weight, depth: int) -> TruncatedChar:
    """Right-hand side of the Jantzen sum identity for M_lam, anchored at lam."""
    total = TruncatedChar(lam, depth, {})
    for r in EPS_PLANE_PLUS:
        if _is_pos_int(coroot_pairing(lam, r.vector)):
            total = total + verma_truncated(act(REFLECTIONS[r.name], lam), depth, lam)
    if (lam.d - Q(1, 2)).denominator == 1 and lam.d > 0:
        total = total + verma_truncated(act(REFLECTIONS["2d"], lam), depth, lam)
    for g in ISOTROPIC_PLUS:
        if bilinear_form(lam, g.vector) == 0:
            alt = _alternating_series(_SIMPLE_OFFSETS[g.name], depth)
            total = total + verma_truncated(lam - g.vector, depth, lam, shift_series=alt)
    return total


# -- Verma-flag sums -------------------------------------------------------


@dataclass
class VermaSum:
    """A finitely supported Z-combination of Verma characters."""

    terms: Dict[Weight, int] = field(default_factory=dict)

    def add(self, mu: Weight, mult: int = 1) -> "VermaSum":
        out = dict(self.terms)
        out[mu] = out.get(mu, 0) + mult
        if out[mu] == 0:
            del out[mu]
        return VermaSum(out)

    def __add__(self, other: "VermaSum") -> "VermaSum":
        out = dict(self.terms)
        for mu, v in other.terms.items():
            out[mu] = out.get(mu, 0) + v
            if out[mu] == 0:
                del out[mu]
        return VermaSum(out)

    def __sub__(self, other: "VermaSum") -> "VermaSum":
        return self + VermaSum({mu: -v for mu, v in other.terms.items()})

    def scale(self, c: int) -> "VermaSum":
        return VermaSum({mu: c * v for mu, v in self.terms.items()}) if c else VermaSum()

    def support(self):
        return set(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, VermaSum) and self.terms == other.terms

    def __contains__(self, mu: Weight) -> bool:
        return mu in self.terms

    def __getitem__(self, mu: Weight) -> int:
        return self.terms.get(mu, 0)

    def __len__(self) -> int:
        return len(self.terms)

    def top(self) -> Weight:
        """The unique dominance-maximal weight of the support."""
        tops = [mu for mu in self.terms
                if not any(nu != mu and dominates(nu, mu) for nu in self.terms)]
        if len(tops) != 1:
            raise ValueError(f"support has {len(tops)} maximal weights")
        return tops[0]

    def to_char(self, depth: int, reference: Optional[Weight] = None) -> TruncatedChar:
        ref = reference if reference is not None else self.top()
        total = TruncatedChar(ref, depth, {})
        for mu, v in sorted(self.terms.items(), key=lambda kv: height(ref - kv[0])):
            term = verma_truncated(mu, depth, ref)
            total = total + TruncatedChar(ref, depth,
                                          {o: v * c for o, c in term.coeffs.items()})
        return total

    def to_json(self) -> str:
        try:
            top = format_weight(self.top())
        except ValueError:
            top = None
        items = sorted(self.terms.items(), key=lambda kv: format_weight(kv[0]))
        return json.dumps({
            "highest_weight": top,
            "terms": [{"weight": format_weight(mu), "mult": v} for mu, v in items],
        })

    def __repr__(self) -> str:
        parts = []
        for mu, v in sorted(self.terms.items(), key=lambda kv: format_weight(kv[0])):
            parts.append(f"{v}*M[{format_weight(mu)}]")
        return " + ".join(parts) if parts else "0"


def _chain_closure(starts: Iterable[Weight], search_depth: int) -> set:
    """Close a set of weights under single positivity-reflections: mu -> s_alpha mu
    when <mu,alpha^vee> is a positive integer (epsilon-plane alpha) or a positive
    half-integer (alpha = 2delta)."""
    found = set(starts)
    frontier = list(found)
    for _ in range(search_depth):
        nxt = []
        for mu in frontier:
            for r in EPS_PLANE_PLUS:
                if _is_pos_int(coroot_pairing(mu, r.vector)):
                    new = act(REFLECTIONS[r.name], mu)
                    if new not in found:
                        found.add(new)
                        nxt.append(new)
            if (mu.d - Q(1, 2)).denominator == 1 and mu.d > 0:
                new = act(REFLECTIONS["2d"], mu)
                if new not in found:
                    found.add(new)
                    nxt.append(new)
        if not nxt:
            break
        frontier = nxt
    return found


def flags_certificates(lam: Weight, search_depth: int = 8) -> VermaSum:
    """Weights mu with a certified positive Verma-flag multiplicity
    (T_lam : M_mu) > 0: reflection chains from lam, isotropic drops
    lam - beta (and chains from them), double drops lam - beta - gamma with
    beta not above gamma, and reflected drops s_alpha(lam) - gamma with
    <lam,alpha^vee> alpha not above gamma."""
    starts = [lam]
    drops = []
    for beta in ISOTROPIC_PLUS:
        if bilinear_form(lam, beta.vector) == 0:
            drop = lam - beta.vector
            drops.append((beta, drop))
            starts.append(drop)
    # double drops (cases 5-6)
    for beta, drop in drops:
        for gamma in ISOTROPIC_PLUS:
            if bilinear_form(drop, gamma.vector) == 0 and \
                    not dominates(beta.vector, gamma.vector):
                starts.append(drop - gamma.vector)
    # reflected drops (cases 7-8)
    reflections = [(r.vector, REFLECTIONS[r.name], coroot_pairing(lam, r.vector))
                   for r in EPS_PLANE_PLUS]
    reflections.append((TWO_DELTA.vector, REFLECTIONS["2d"], lam.d))
    for alpha, s, pairing in reflections:
        if alpha == TWO_DELTA.vector:
            ok = (pairing - Q(1, 2)).denominator == 1 and pairing > 0
        else:
            ok = _is_pos_int(pairing)
        if not ok:
            continue
        ref = act(s, lam)
        for gamma in ISOTROPIC_PLUS:
            if bilinear_form(ref, gamma.vector) == 0 and \
                    not dominates(pairing * alpha, gamma.vector):
                starts.append(ref - gamma.vector)
    out = VermaSum()
    for mu in _chain_closure(starts, search_depth):
        out = out.add(mu)
    return out

from __future__ import annotations

"""Translation-functor engine on Verma-flag characters.

Tilting characters are derived, not looked up: start from a weight one
translation step away whose tilting character is already forced (typical
weights via the Bruhat-interval orbit formula, or a previously derived
same-block weight), tensor with the adjoint module (standard module for
osp(3|2)), project onto the target block, and peel off known tilting
characters until only the target remains.
"""

import itertools
from dataclasses import dataclass, field
from fractions import Fraction as Q
from typing import Callable, Dict, List, Optional, Tuple

from .weights import (
    DELTA,
    EPS2,
    EPS3,
    OSP_DELTA,
    OSP_EPS,
    OspWeight,
    Weight,
    format_osp_weight,
    osp_bilinear,
)
from .rootdata import OSP_ISOTROPIC_PLUS, adjoint_weights, osp_standard_weights
from .weyl import act, bruhat_leq, orbit_antidominant
from .blocks import atypicality, integral_weyl_group, linked
from .characters import VermaSum, dominates, flags_certificates, height

import json


class UnderdeterminedError(RuntimeError):
    """No translation start yields a decomposable tilting character."""


# Starting shifts tried in order: the target minus each of these must land in
# a block whose tilting character is already available.
TRANSLATION_STARTS: Tuple[Weight, ...] = (2 * DELTA, DELTA - EPS3, DELTA + EPS2)


def typical_tilting(lam: Weight) -> VermaSum:
    """Tilting character of a typical weight: sum of Verma characters over the
    Bruhat lower interval of the integral-Weyl-group orbit, anchored at the
    antidominant representative.  Rank <= 2 dihedral (times Z2) Coxeter systems
    have trivial Kazhdan-Lusztig polynomials, so the interval sum is exact."""
    if not atypicality(lam).typical:
        raise ValueError(f"{lam} is atypical; use derive_tilting or the tables")
    group = integral_weyl_group(lam)
    anti, reps = orbit_antidominant(lam, group)
    q = next(w for w, mu in reps.items() if mu == lam)
    out = VermaSum()
    for w, mu in reps.items():
        if bruhat_leq(w, q, group):
            out = out.add(mu)
    return out


def translate_flag(start: VermaSum, module_weights, target: Weight) -> VermaSum:
    """Tensor a Verma-flag character with a finite-dimensional weight multiset
    and project onto the block of the target weight."""
    at = atypicality(target)
    if at.typical:
        group = integral_weyl_group(target)
        orbit = {act(w, target) for w in group.elements}
        in_block = orbit.__contains__
    else:
        def in_block(mu: Weight) -> bool:
            return linked(target, mu)
    out = VermaSum()
    for mu, mult in start.terms.items():
        for nu, m in module_weights:
            shifted = mu + nu
            if in_block(shifted):
                out = out.add(shifted, mult * m)
    return out


def _peel(X, lam, cert, resolver: Callable, height_key: Callable,
          max_steps: int = 200):
    """Subtract known tilting characters at excess weights (multiplicity above
    the certificate lower bound), top down, until only T_lam remains.
    Returns (remainder, number of subtractions) or None when stuck."""
    steps = 0
    for _ in range(max_steps):
        excess = [nu for nu, mult in X.terms.items()
                  if nu != lam and mult > cert[nu]]
        if not excess:
            break
        nu = max(excess, key=lambda w: (height_key(w), repr(w)))
        t_nu = resolver(nu)
        if t_nu is None:
            return None
        X = X - t_nu.scale(X[nu] - cert[nu])
        steps += 1
        if any(m < 0 for m in X.terms.values()):
            return None
    else:
        return None
    if X[lam] != 1:
        return None
    if any(X[nu] < 1 for nu in cert.support()):
        return None
    return X, steps


class _SearchBudgetExceeded(Exception):
    pass


def _decompose_candidates(X, lam, cert, resolver: Callable,
                          height_key: Callable, below: Callable,
                          node_cap: int = 4000):
    """All tilting characters U with top weight lam consistent with writing
    X = (sum of resolvable tilting characters) + c*U, c >= 1.

    Unlike _peel, which assumes every multiplicity above the certificate
    belongs to a separate tilting summand, this branches over how much of
    each excess is attributed to U itself; intersecting the candidate sets
    of several flags then isolates the true character.

    Returns (candidates, complete).  `complete` is False when some branch hit
    an excess at a weight whose tilting character is unavailable: the branch
    matching the true decomposition may then be missing, so the candidate set
    cannot be trusted to contain the true character."""
    candidates = set()
    budget = [node_cap]
    complete = [True]

    def rec(X, decided):
        budget[0] -= 1
        if budget[0] < 0:
            raise _SearchBudgetExceeded
        if any(m < 0 for m in X.terms.values()):
            return
        pending = [nu for nu, m in X.terms.items()
                   if nu != lam and nu not in decided and m > cert[nu]]
        if not pending:
            c = X[lam]
            if c < 1 or any(m % c for m in X.terms.values()):
                return
            terms = {nu: m // c for nu, m in X.terms.items() if m}
            if any(terms.get(nu, 0) < 1 for nu in cert.support()):
                return
            if any(nu != lam and not below(nu) for nu in terms):
                return
            candidates.add(frozenset(terms.items()))
            return
        nu = max(pending, key=lambda w: (height_key(w), repr(w)))
        t_nu = resolver(nu)
        if t_nu is None:
            complete[0] = False
            return
        excess = X[nu] - cert[nu]
        # a weight outside the lower cone of lam cannot sit inside U, so its
        # excess must be subtracted in full; otherwise any split between U and
        # separate summands is possible
        floor = 0 if below(nu) else excess
        for take in range(excess, floor - 1, -1):
            rec(X - t_nu.scale(take), decided | {nu})

    rec(X, frozenset())
    return candidates, complete[0]


def _peels_into_tiltings(Y: VermaSum, resolver: Callable) -> Optional[bool]:
    """Whether Y is a nonnegative integer combination of available tilting
    characters.  The decomposition is forced from the top: the maximal weight's
    coefficient can only come from its own tilting character.  Returns None
    when a needed character is unavailable (verdict unknown)."""
    Y = VermaSum(dict(Y.terms))
    for _ in range(1000):
        if not Y.terms:
            return True
        top = max(Y.terms, key=lambda w: (height(w), repr(w)))
        if Y[top] < 0:
            return False
        t_top = resolver(top)
        if t_top is None:
            return None
        Y = Y - t_top.scale(Y[top])
        if any(c < 0 for c in Y.terms.values()):
            return False
    return None


def _translates_to_tiltings(U: VermaSum, lam: Weight, resolver: Callable) -> bool:
    """False iff some adjoint translate of U is provably not a sum of tilting
    characters (unverifiable directions do not count against U)."""
    for mu0 in {nu for nu, _ in adjoint_weights() if nu != 0 * DELTA}:
        Y = translate_flag(U, adjoint_weights(), lam + mu0)
        if Y.terms and _peels_into_tiltings(Y, resolver) is False:
            return False
    return True


def derive_tilting(lam: Weight,
                   known: Optional[Dict[Weight, VermaSum]] = None
                   ) -> Tuple[VermaSum, Dict[str, object]]:
    """Derive ch T_lam by translation.  `known` maps previously derived weights
    (same block, typically lower in the order) to their tilting characters."""
    known = dict(known or {})
    at = atypicality(lam)
    cert = flags_certificates(lam)

    def resolver(nu: Weight) -> Optional[VermaSum]:
        if nu in known:
            return known[nu]
        if atypicality(nu).typical:
            return typical_tilting(nu)
        return None

    attempts: List[Tuple[Weight, str]] = []
    for mu0 in TRANSLATION_STARTS:
        s = lam - mu0
        s_at = atypicality(s)
        if s_at.typical:
            start, start_kind = typical_tilting(s), "typical"
        elif s in known:
            start, start_kind = known[s], "known"
        elif flags_certificates(s).support() == {s}:
            start, start_kind = VermaSum({s: 1}), "certified-verma"
        else:
            attempts.append((mu0, "start tilting character unavailable"))
            continue
        X = translate_flag(start, adjoint_weights(), lam)
        if lam not in X:
            attempts.append((mu0, "target missing from translated flag"))
            continue
        peeled = _peel(X, lam, cert, resolver, height)
        if peeled is not None:
            result, steps = peeled
            return result, {"start": s, "start_kind": start_kind,
                            "subtractions": steps}
        attempts.append((mu0, "translated flag did not decompose"))

    # Fallback for blocks where no single translation step peels cleanly
    # (coincident atypical parameters can force the target character to exceed
    # its certificate, which _peel cannot see).  Build several flags bounding
    # T_lam -- the one-step ones plus two-step translations through an
    # intermediate block -- enumerate the decompositions consistent with each,
    # and intersect the resulting candidate sets until one character survives.
    flags: List[Tuple[str, VermaSum]] = []
    one_step_shifts = sorted(
        {nu for nu, _ in adjoint_weights() if nu != 0 * DELTA},
        key=lambda w: (w not in TRANSLATION_STARTS, w.d, w.x, w.y, w.z))
    for mu0 in one_step_shifts:
        s = lam - mu0
        if atypicality(s).typical:
            start = typical_tilting(s)
        elif s in known:
            start = known[s]
        else:
            continue
        X = translate_flag(start, adjoint_weights(), lam)
        if lam in X:
            flags.append((f"one step via {s}", X))
    for mu0, mu1 in itertools.product(TRANSLATION_STARTS, repeat=2):
        u = lam - mu0 - mu1
        if not atypicality(u).typical:
            continue
        X1 = translate_flag(typical_tilting(u), adjoint_weights(), lam - mu1)
        X = translate_flag(X1, adjoint_weights(), lam)
        if lam in X:
            flags.append((f"two steps via {u}", X))
    meet = None
    used: List[str] = []
    for desc, X in flags:
        try:
            cands, complete = _decompose_candidates(
                X, lam, cert, resolver, height,
                below=lambda nu: dominates(lam, nu))
        except _SearchBudgetExceeded:
            continue
        if not complete or not cands:
            continue
        used.append(desc)
        meet = cands if meet is None else meet & cands
        if len(meet) == 1:
            result = VermaSum(dict(next(iter(meet))))
            return result, {"start_kind": "intersection", "flags": used}
        if not meet:
            break
    if meet and len(meet) > 1:
        # Last resort: a translate of a tilting character is again a sum of
        # tilting characters, so candidates whose translates fail to peel
        # (greedily, top weight first -- the top coefficient is forced) into
        # available tilting characters cannot be T_lam.
        survivors = []
        for cand_terms in meet:
            if _translates_to_tiltings(VermaSum(dict(cand_terms)), lam, resolver):
                survivors.append(cand_terms)
        if len(survivors) == 1:
            result = VermaSum(dict(survivors[0]))
            return result, {"start_kind": "intersection+image",
                            "flags": used}
    detail = "; ".join(f"{mu0}: {why}" for mu0, why in attempts)
    raise UnderdeterminedError(f"no translation start determines T for {lam} ({detail})")


# -- osp(3|2) companion ------------------------------------------------------


def osp_dominates(mu: OspWeight, nu: OspWeight) -> bool:
    """mu >= nu in the order generated by the positive roots (simple basis
    delta-eps, eps: coordinates (a, a+b) of the difference)."""
    diff = mu - nu
    c1, c2 = diff.a, diff.a + diff.b
    return (c1.denominator == 1 and c2.denominator == 1 and
            c1 >= 0 and c2 >= 0)


def osp_height(nu: OspWeight) -> Q:
    return 2 * nu.a + nu.b


@dataclass
class OspVermaSum:
    """Finitely supported Z-combination of osp(3|2) Verma characters."""

    terms: Dict[OspWeight, int] = field(default_factory=dict)

    def add(self, mu: OspWeight, mult: int = 1) -> "OspVermaSum":
        out = dict(self.terms)
        out[mu] = out.get(mu, 0) + mult
        if out[mu] == 0:
            del out[mu]
        return OspVermaSum(out)

    def __add__(self, other: "OspVermaSum") -> "OspVermaSum":
        out = dict(self.terms)
        for mu, v in other.terms.items():
            out[mu] = out.get(mu, 0) + v
            if out[mu] == 0:
                del out[mu]
        return OspVermaSum(out)

    def __sub__(self, other: "OspVermaSum") -> "OspVermaSum":
        return self + OspVermaSum({mu: -v for mu, v in other.terms.items()})

    def scale(self, c: int) -> "OspVermaSum":
        return OspVermaSum({mu: c * v for mu, v in self.terms.items()}) if c else OspVermaSum()

    def support(self):
        return set(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, OspVermaSum) and self.terms == other.terms

    def __contains__(self, mu: OspWeight) -> bool:
        return mu in self.terms

    def __getitem__(self, mu: OspWeight) -> int:
        return self.terms.get(mu, 0)

    def __len__(self) -> int:
        return len(self.terms)

    def top(self) -> OspWeight:
        tops = [mu for mu in self.terms
                if not any(nu != mu and osp_dominates(nu, mu) for nu in self.terms)]
        if len(tops) != 1:
            raise ValueError(f"support has {len(tops)} maximal weights")
        return tops[0]

    def to_json(self) -> str:
        try:
            top = format_osp_weight(self.top())
        except ValueError:
            top = None
        items = sorted(self.terms.items(), key=lambda kv: format_osp_weight(kv[0]))
        return json.dumps({
            "highest_weight": top,
            "terms": [{"weight": format_osp_weight(mu), "mult": v} for mu, v in items],
        })

    def __repr__(self) -> str:
        parts = [f"{v}*M[{format_osp_weight(mu)}]"
                 for mu, v in sorted(self.terms.items(),
                                     key=lambda kv: format_osp_weight(kv[0]))]
        return " + ".join(parts) if parts else "0"


def osp_atypical_roots(lam: OspWeight) -> List[OspWeight]:
    return [b for b in OSP_ISOTROPIC_PLUS if osp_bilinear(lam, b) == 0]


def _osp_flips(lam: OspWeight) -> Tuple[str, ...]:
    """Integral reflections: s_eps when <lam,eps^vee> = 2b is an integer,
    s_delta when <lam,(2delta)^vee> = a is a half-integer."""
    flips = []
    if (2 * lam.b).denominator == 1:
        flips.append("se")
    if (lam.a - Q(1, 2)).denominator == 1:
        flips.append("sd")
    return tuple(flips)


def _osp_apply(flips, lam: OspWeight) -> OspWeight:
    return OspWeight(-lam.a if "sd" in flips else lam.a,
                     -lam.b if "se" in flips else lam.b)


def _osp_subsets(flips):
    for r in range(len(flips) + 1):
        for combo in itertools.combinations(flips, r):
            yield frozenset(combo)


def osp_typical_tilting(lam: OspWeight) -> OspVermaSum:
    """Orbit Bruhat-interval formula for typical osp(3|2) weights; the integral
    Weyl group is a product of at most two commuting reflections, so the Bruhat
    order is subset containment of flip sets."""
    if osp_atypical_roots(lam):
        raise ValueError(f"{lam} is atypical; use osp_derive_tilting or the table")
    flips = _osp_flips(lam)
    orbit = {}
    for sub in _osp_subsets(flips):
        mu = _osp_apply(sub, lam)
        orbit.setdefault(mu, []).append(sub)
    anti = [mu for mu in orbit
            if ("se" not in flips or mu.b <= 0) and ("sd" not in flips or mu.a <= 0)]
    assert len(anti) == 1
    base = anti[0]
    reps = {}
    for sub in _osp_subsets(flips):
        mu = _osp_apply(sub, base)
        if mu not in reps or (len(sub), sorted(sub)) < (len(reps[mu]), sorted(reps[mu])):
            reps[mu] = sub
    q = reps[lam]
    out = OspVermaSum()
    for mu, sub in reps.items():
        if sub <= q:
            out = out.add(mu)
    return out


def osp_linked(lam: OspWeight, mu: OspWeight) -> bool:
    """Linkage for atypical osp(3|2) weights: the block of lam is
    {w(lam + k*beta) : w in W_lam, beta in A(lam), k in Z}."""
    roots = osp_atypical_roots(lam)
    if not roots:
        raise ValueError(f"{lam} is typical; compare integral Weyl orbits instead")
    for sub in _osp_subsets(_osp_flips(lam)):
        pre = _osp_apply(sub, mu)  # flips are involutions
        diff = pre - lam
        if diff.a == 0 and diff.b == 0:
            return True
        for beta in roots:
            k = diff.a / beta.a
            if k.denominator == 1 and diff == k * beta:
                return True
    return False


def osp_translate_flag(start: OspVermaSum, module_weights,
                       target: OspWeight) -> OspVermaSum:
    if osp_atypical_roots(target):
        def in_block(mu: OspWeight) -> bool:
            return osp_linked(target, mu)
    else:
        flips = _osp_flips(target)
        orbit = {_osp_apply(sub, target) for sub in _osp_subsets(flips)}
        in_block = orbit.__contains__
    out = OspVermaSum()
    for mu, mult in start.terms.items():
        for nu, m in module_weights:
            shifted = mu + nu
            if in_block(shifted):
                out = out.add(shifted, mult * m)
    return out


def _is_pos_int(q: Q) -> bool:
    return q.denominator == 1 and q > 0


def osp_flags_certificates(lam: OspWeight, search_depth: int = 8) -> OspVermaSum:
    """osp(3|2) analogue of the Verma-flag lower-bound certificates: reflection
    chains with positive-integral pairings, isotropic drops, double drops and
    reflected drops."""
    starts = [lam]
    drops = []
    for beta in OSP_ISOTROPIC_PLUS:
        if osp_bilinear(lam, beta) == 0:
            drop = lam - beta
            drops.append((beta, drop))
            starts.append(drop)
    for beta, drop in drops:
        for gamma in OSP_ISOTROPIC_PLUS:
            if osp_bilinear(drop, gamma) == 0 and not osp_dominates(beta, gamma):
                starts.append(drop - gamma)
    refl = []
    if _is_pos_int(2 * lam.b):
        refl.append((OspWeight(lam.a, -lam.b), 2 * lam.b * OSP_EPS))
    if (lam.a - Q(1, 2)).denominator == 1 and lam.a > 0:
        refl.append((OspWeight(-lam.a, lam.b), 2 * lam.a * OSP_DELTA))
    for image, step in refl:
        for gamma in OSP_ISOTROPIC_PLUS:
            if osp_bilinear(image, gamma) == 0 and not osp_dominates(step, gamma):
                starts.append(image - gamma)
    found = set(starts)
    frontier = list(found)
    for _ in range(search_depth):
        nxt = []
        for mu in frontier:
            candidates = []
            if _is_pos_int(2 * mu.b):
                candidates.append(OspWeight(mu.a, -mu.b))
            if (mu.a - Q(1, 2)).denominator == 1 and mu.a > 0:
                candidates.append(OspWeight(-mu.a, mu.b))
            for new in candidates:
                if new not in found:
                    found.add(new)
                    nxt.append(new)
        if not nxt:
            break
        frontier = nxt
    out = OspVermaSum()
    for mu in found:
        out = out.add(mu)
    return out


OSP_TRANSLATION_STARTS: Tuple[OspWeight, ...] = (OSP_DELTA,)


def osp_derive_tilting(lam: OspWeight,
                       known: Optional[Dict[OspWeight, OspVermaSum]] = None
                       ) -> Tuple[OspVermaSum, Dict[str, object]]:
    """Derive ch T_lam for osp(3|2) by translation with the standard module."""
    known = dict(known or {})
    cert = osp_flags_certificates(lam)

    def resolver(nu: OspWeight) -> Optional[OspVermaSum]:
        if nu in known:
            return known[nu]
        if not osp_atypical_roots(nu):
            return osp_typical_tilting(nu)
        return None

    attempts: List[Tuple[OspWeight, str]] = []
    for mu0 in OSP_TRANSLATION_STARTS:
        s = lam - mu0
        if not osp_atypical_roots(s):
            start, start_kind = osp_typical_tilting(s), "typical"
        elif s in known:
            start, start_kind = known[s], "known"
        elif osp_flags_certificates(s).support() == {s}:
            start, start_kind = OspVermaSum({s: 1}), "certified-verma"
        else:
            attempts.append((mu0, "start tilting character unavailable"))
            continue
        X = osp_translate_flag(start, osp_standard_weights(), lam)
        if lam not in X:
            attempts.append((mu0, "target missing from translated flag"))
            continue
        peeled = _peel(X, lam, cert, resolver, osp_height)
        if peeled is not None:
            result, steps = peeled
            return result, {"start": s, "start_kind": start_kind,
                            "subtractions": steps}
        attempts.append((mu0, "translated flag did not decompose"))
    detail = "; ".join(f"{mu0}: {why}" for mu0, why in attempts)
    raise UnderdeterminedError(f"no translation start determines T for {lam} ({detail})")

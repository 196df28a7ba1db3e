from __future__ import annotations

"""Closed-form tilting-character tables, dispatched by block classification.

Each family of atypical non-integral blocks carries a finite list of
character formulas indexed by a level k (the step along the atypical root)
and an orbit tag (the Weyl element moving the antidominant level
representative to the target weight).  This module evaluates those formulas
exactly.  Every entry is cross-validated against the independent
translation-functor derivation by the verification sweep; entries listed in
CROSS_CHECK_NOTES had internally inconsistent source displays and are stored
in the form forced by the certificate lower bounds and translation upper
bounds (see tests and the verification CLI).
"""

from fractions import Fraction as Q
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .weights import (
    DELTA,
    EPS1,
    OSP_DELTA,
    OSP_EPS,
    OspWeight,
    Weight,
    coroot_pairing,
    format_osp_weight,
    format_weight,
)
from .weyl import (
    E,
    H1,
    H2,
    J1,
    K1,
    K2,
    REFLECTIONS,
    S0,
    S1,
    S2,
    S_E1,
    S_E2,
    S_ME3,
    S3_GROUP,
    Subgroup,
    W_G2,
    WeylElt,
    Z2_S3,
    act,
    bruhat_leq,
    orbit_antidominant,
    subgroup,
)
from .blocks import (
    BlockId,
    _unchain,
    atypicality,
    classify,
    normalize_good_diagrams,
)
from .characters import VermaSum
from .translation import (
    OspVermaSum,
    osp_atypical_roots,
    osp_typical_tilting,
    typical_tilting,
)

# Entries whose stored formula deviates from the obvious literal reading of
# the source display; each was pinned down by the derivation engine (lower
# bounds from Verma-flag certificates, upper bounds from translated flags).
CROSS_CHECK_NOTES: Dict[str, str] = {
    "osp32-case2-T(1,1)": "three terms, the j=1 merge of the generic formula",
    "osp32-generic-j": "the a-integral and a-half-integral generic-j formula "
                       "pairs are interchanged relative to the seed displays",
    "v-mu-k1": "plain and 2-tagged lines carry a third level, matching the "
               "analogous nu-family case",
    "v-mu-k-4l1": "plain and 1-tagged lines carry a third level, matching the "
                  "analogous nu-family case",
    "v-mu-k1-merge": "at the parameter where the two boundary levels merge, "
                     "the plain line carries a third level",
    "v-mu-adjacent-degenerate": "when the two degenerate levels 0 and -4*ell "
                                "sit next to each other, the plain boundary "
                                "ladder carries a fourth level",
    "s3-odd-case2": "right-hand side stored with Verma characters; the longest "
                    "coset representative line doubles the two lowest interval "
                    "points",
    "s3-odd-case4": "level indices follow the k=1 case mirrored through s0; "
                    "the longest representatives take the full interval count "
                    "at the singular level, and the ell=1 lines (where levels "
                    "0 and 1 coincide) are stored explicitly",
    "singular-boundary-multiplicity": "one step above a singular level, lines "
                                      "for interval-set representatives count "
                                      "the full Bruhat interval there (the "
                                      "antidominant point can get multiplicity "
                                      "two) and one term per orbit point two "
                                      "levels down",
    "adjacent-singular-ladders": "when consecutive levels are singular (S3 "
                                 "ell=2, WG2 ell=1) the identity-line boundary "
                                 "ladder continues two levels further down, and "
                                 "the lines between the singular levels carry "
                                 "a mirrored extra level",
}


# ---------------------------------------------------------------------------
# level/tag bookkeeping


class _Levels:
    """Antidominant representatives per level for one block family."""

    def __init__(self, base_fn: Callable[[int], Weight], group: Subgroup):
        self.base_fn = base_fn
        self.group = group
        self._anti: Dict[int, Weight] = {}
        self._reps: Dict[int, Dict[WeylElt, Weight]] = {}

    def anti(self, k: int) -> Weight:
        if k not in self._anti:
            a, reps = orbit_antidominant(self.base_fn(k), self.group)
            self._anti[k], self._reps[k] = a, reps
        return self._anti[k]

    def reps(self, k: int) -> Dict[WeylElt, Weight]:
        self.anti(k)
        return self._reps[k]

    def locate(self, k: int, lam: Weight) -> WeylElt:
        for w, mu in self.reps(k).items():
            if mu == lam:
                return w
        raise ValueError(f"{lam} is not in the level-{k} orbit")

    def evaluate(self, terms: Iterable[Tuple[int, WeylElt]]) -> VermaSum:
        # Multiset semantics: at a singular level two group elements can name
        # the same weight, and the Verma multiplicity really is the number of
        # interval elements landing on it.
        out = VermaSum()
        for k, w in terms:
            out = out.add(act(w, self.anti(k)))
        return out


_V_FLIPS: Dict[str, WeylElt] = {"1": S1, "2": S_ME3, "+": S0}
_V_TAGS: Tuple[str, ...] = ("", "1", "2", "12", "+", "1+", "2+", "12+")


def _tag_elt(tag: str) -> WeylElt:
    w = E
    for ch in tag:
        w = w * _V_FLIPS[ch]
    return w


def _v_locate_tag(levels: _Levels, k: int, lam: Weight, tags: Sequence[str]) -> str:
    anti = levels.anti(k)
    for tag in tags:
        if act(_tag_elt(tag), anti) == lam:
            return tag
    raise ValueError(f"{lam} is not in the level-{k} orbit")


def _v_terms(levels: _Levels, pairs: Iterable[Tuple[int, str]]) -> VermaSum:
    return levels.evaluate((k, _tag_elt(tag)) for k, tag in pairs)


def _lv(k: int, tags: Sequence[str]) -> List[Tuple[int, str]]:
    return [(k, t) for t in tags]


# ---------------------------------------------------------------------------
# V family (integral Weyl group Z2 x Z2, three cases)


def _v_lambda_base(ell: Q, k: int) -> Weight:
    return Weight(-ell - Q(1, 2) + k, Q(1, 4) - Q(k, 2),
                  ell + Q(1, 4) - Q(k, 2), -ell - Q(1, 2) + k)


def _v_mu_base(ell: Q, k: int) -> Weight:
    return Weight(ell + k, ell + k, ell - Q(k, 2), -2 * ell - Q(k, 2))


def _v_nu_base(ell: Q, k: int) -> Weight:
    return Weight(ell + k, Q(1, 4) - Q(k, 2), -ell - Q(1, 4) - Q(k, 2), ell + k)


def _v_lambda_pairs(ell: int, k: int, tag: str) -> List[Tuple[int, str]]:
    if k < ell:
        table = {
            "": _lv(k, [""]) + _lv(k - 1, [""]),
            "1": _lv(k, ["1", ""]) + _lv(k - 1, ["1", ""]),
            "2": _lv(k, ["2", ""]) + _lv(k - 1, ["2", ""]),
            "12": _lv(k, ["12", "1", "2", ""]) + _lv(k - 1, ["12", "1", "2", ""]),
            "+": _lv(k, ["+", ""]) + _lv(k + 1, ["+", ""]),
            "1+": _lv(k, ["1+", "1", "+", ""]) + _lv(k + 1, ["1+", "1", "+", ""]),
            "2+": _lv(k, ["2+", "2", "+", ""]) + _lv(k + 1, ["2+", "2", "+", ""]),
            "12+": _lv(k, list(_V_TAGS)) + _lv(k + 1, list(_V_TAGS)),
        }
    else:  # k == ell
        table = {
            "": _lv(ell, [""]) + _lv(ell - 1, [""]),
            "1": _lv(ell, ["1", ""]) + _lv(ell - 1, ["1", ""]),
            "2": _lv(ell, ["2", ""]) + _lv(ell - 1, ["2", ""]),
            "12": _lv(ell, ["12", "1", "2", ""]) + _lv(ell - 1, ["12", "1", "2", ""]),
            "+": [(ell, "+"), (ell, ""), (ell, "2"), (ell - 1, "")],
            "1+": [(ell, "1+"), (ell, "1"), (ell, "+"), (ell, ""),
                   (ell, "12"), (ell, "2"), (ell - 1, "1"), (ell - 1, "")],
            "2+": [(ell, "2+"), (ell, "2"), (ell, "+"), (ell, "")],
            "12+": _lv(ell, ["12+", "12", "1+", "2+", "1", "2", "+", ""]),
        }
    return table[tag]


def _v_lambda0_pairs(k: int, tag: str) -> List[Tuple[int, str]]:
    if k == 0:
        table = {
            "": [(0, ""), (-1, "")],
            "2": [(0, "2"), (0, ""), (-1, "2"), (-1, "")],
            "+": [(0, "+"), (0, ""), (0, "2"), (-1, "")],
            "2+": [(0, "2+"), (0, "2"), (0, "+"), (0, "")],
        }
    else:
        table = {
            "": [(k, ""), (k - 1, "")],
            "2": [(k, "2"), (k, ""), (k - 1, "2"), (k - 1, "")],
            "+": [(k, "+"), (k, ""), (k + 1, "+"), (k + 1, "")],
            "2+": [(k, "2+"), (k, "+"), (k, "2"), (k, ""),
                   (k + 1, "2+"), (k + 1, "+"), (k + 1, "2"), (k + 1, "")],
        }
    return table[tag]


def _v_generic_pairs(k: int) -> Dict[str, List[Tuple[int, str]]]:
    return {
        "": _lv(k, [""]) + _lv(k - 1, [""]),
        "1": _lv(k, ["1", ""]) + _lv(k - 1, ["1", ""]),
        "2": _lv(k, ["2", ""]) + _lv(k - 1, ["2", ""]),
        "12": _lv(k, ["12", "1", "2", ""]) + _lv(k - 1, ["12", "1", "2", ""]),
    }


def _v_mu_pairs(ell: Q, k: int, tag: str) -> List[Tuple[int, str]]:
    four_ell = -4 * ell
    if k == 0 and ell == Q(1, 4):          # k = 0 = -4*ell + 1
        table = {
            "": [(0, ""), (-1, "1"), (-1, ""), (-2, "1"), (-2, "")],
            "2": [(0, "2"), (0, ""), (-1, "1"), (-1, "")],
        }
    elif k == 1 and four_ell == 1:         # k = 1 = -4*ell
        # The plain character extends one level further down (forced by the
        # double-drop certificates; see CROSS_CHECK_NOTES).
        table = {
            "": [(1, ""), (0, "2"), (0, ""), (-1, "2"), (-1, "")],
            "1": [(1, "1"), (1, ""), (0, "2"), (0, "")],
        }
    elif k == 0:
        table = {
            "": [(0, ""), (-1, ""), (-1, "1")],
            "2": [(0, "2"), (0, ""), (-1, "2"), (-1, ""), (-1, "12"), (-1, "1")],
        }
    elif k == 1:
        # The plain and 2-tagged characters extend one level further down
        # (forced by the double-drop certificates; see CROSS_CHECK_NOTES).
        # When the two degenerate levels 0 and -4*ell are adjacent, the plain
        # ladder picks up yet another level.
        plain = [(1, ""), (0, ""), (-1, "")]
        two = [(1, "2"), (1, ""), (0, "2"), (0, ""), (-1, "2"), (-1, "")]
        if four_ell == -1:
            plain.append((-2, ""))
            # level -1 is itself degenerate here: the tags 2 and "" coincide
            # and the weight appears once, not twice
            two.remove((-1, "2"))
        table = {
            "": plain,
            "1": [(1, "1"), (1, ""), (0, "")],
            "2": two,
            "12": [(1, "12"), (1, "1"), (1, "2"), (1, ""), (0, "2"), (0, "")],
        }
    elif k == four_ell:
        table = {
            "": [(k, ""), (k - 1, ""), (k - 1, "2")],
            "1": [(k, "1"), (k, ""),
                  (k - 1, "12"), (k - 1, "1"), (k - 1, "2"), (k - 1, "")],
        }
    elif k == four_ell + 1:
        # The plain and 1-tagged characters extend one level further down
        # (forced by the double-drop certificates; see CROSS_CHECK_NOTES).
        # When the two degenerate levels -4*ell and 0 are adjacent, the plain
        # ladder picks up yet another level.
        plain = [(k, ""), (k - 1, ""), (k - 2, "")]
        one = [(k, "1"), (k, ""), (k - 1, "1"), (k - 1, ""), (k - 2, "1"), (k - 2, "")]
        if four_ell == 1:
            plain.append((k - 3, ""))
            # level k-2 = 0 is itself degenerate here: the tags 1 and ""
            # coincide and the weight appears once, not twice
            one.remove((k - 2, "1"))
        table = {
            "": plain,
            "1": one,
            "2": [(k, "2"), (k, ""), (k - 1, "")],
            "12": [(k, "12"), (k, "1"), (k, "2"), (k, ""), (k - 1, "1"), (k - 1, "")],
        }
    else:
        table = _v_generic_pairs(k)
    return table[tag]


def _v_nu_pairs(ell: int, k: int, tag: str) -> List[Tuple[int, str]]:
    if k == -ell:
        table = {
            "": [(k, ""), (k - 1, ""), (k - 1, "2")],
            "1": [(k, "1"), (k, ""),
                  (k - 1, "1"), (k - 1, "12"), (k - 1, ""), (k - 1, "2")],
        }
    elif k == -ell + 1:
        table = {
            "": [(k, ""), (k - 1, ""), (k - 2, "")],
            "1": [(k, "1"), (k, ""), (k - 1, "1"), (k - 1, ""), (k - 2, "1"), (k - 2, "")],
            "2": [(k, "2"), (k, ""), (k - 1, "")],
            "12": [(k, "12"), (k, "1"), (k, "2"), (k, ""), (k - 1, "1"), (k - 1, "")],
        }
    else:
        table = _v_generic_pairs(k)
    return table[tag]


_V_GROUP = subgroup([("s1", S1), ("se3", S_ME3)])
_V_GROUP_S0 = subgroup([("s0", S0), ("s1", S1), ("se3", S_ME3)])


def table_V(lam: Weight, bid: BlockId) -> VermaSum:
    """Closed-form tilting character in a block with Z2 x Z2 integral Weyl
    group, located by the level k along the atypical root and the orbit tag."""
    if bid.family != "V":
        raise ValueError(f"table_V needs a V-family block id, got {bid.family}")
    chain, nrm = normalize_good_diagrams(lam)
    ell = bid.ell
    if bid.case == "I":
        levels = _Levels(lambda k: _v_lambda_base(ell, k), _V_GROUP_S0)
        cands = [nrm.d + ell + Q(1, 2), -nrm.d + ell + Q(1, 2)]
        k = next(int(c) for c in cands if c.denominator == 1 and c <= ell)
        tags: Sequence[str] = _V_TAGS if ell != 0 else ("", "2", "+", "2+")
        tag = _v_locate_tag(levels, k, nrm, tags)
        pairs = (_v_lambda_pairs(int(ell), k, tag) if ell != 0
                 else _v_lambda0_pairs(k, tag))
    else:
        levels = _Levels(
            (lambda k: _v_mu_base(ell, k)) if bid.case == "II"
            else (lambda k: _v_nu_base(ell, k)),
            _V_GROUP)
        k = nrm.d - ell
        if k.denominator != 1:
            raise ValueError(f"{lam} is not in the block {bid}")
        k = int(k)
        tag = _v_locate_tag(levels, k, nrm, ("", "1", "2", "12"))
        pairs = (_v_mu_pairs(ell, k, tag) if bid.case == "II"
                 else _v_nu_pairs(int(ell), k, tag))
    out = _v_terms(levels, pairs)
    if chain:
        out = VermaSum({_unchain(chain, mu): c for mu, c in out.terms.items()})
    return out


# ---------------------------------------------------------------------------
# S3 family


def _s3_base(ell: int, k: int) -> Weight:
    return Weight(-Q(ell, 2) + k, -Q(ell, 2) + k, -Q(k, 2), Q(ell, 2) - Q(k, 2))


def _interval(levels: _Levels, group: Subgroup, bound: WeylElt, k: int,
              index_set: Optional[Sequence[WeylElt]] = None
              ) -> List[Tuple[int, WeylElt]]:
    sigmas = group.elements if index_set is None else index_set
    return [(k, s) for s in sigmas if bruhat_leq(s, bound, group)]


def _s3_even(lam: Weight, ell: int) -> VermaSum:
    group = S3_GROUP
    levels = _Levels(lambda k: _s3_base(ell, k), group)
    k = lam.d + Q(ell, 2)
    assert k.denominator == 1
    k = int(k)
    w = levels.locate(k, lam)

    def iv(bound, level, index_set=None):
        return _interval(levels, group, bound, level, index_set)

    if ell == 2 and k == 1:
        lines = {
            E: [(1, E), (0, S_E1), (0, E), (-1, S_E1), (-1, E)],
            S_E2: [(1, S_E2), (1, E), (0, S_E2 * S_E1), (0, S_E1), (0, S_E2),
                   (0, E), (-1, S_E2 * S_E1), (-1, S_E2), (-1, S_E1), (-1, E)],
            S_E1 * S_E2: [(1, S_E1 * S_E2), (1, S_E2), (1, E),
                          (0, S_E2 * S_E1), (0, S_E1), (0, E)],
        }
        terms = lines[w]
    elif ell == 2 and k == 2:
        lines = {
            E: [(2, E), (1, S_E2), (1, E), (0, E)],
            S_E1: [(2, S_E1), (2, E), (1, S_E1 * S_E2), (1, S_E2), (1, S_E1),
                   (1, E), (0, S_E1), (0, E)],
            S_E2 * S_E1: [(2, S_E2 * S_E1), (2, S_E1), (2, E),
                          (1, S_E1 * S_E2), (1, S_E2), (1, E)],
        }
        terms = lines[w]
    elif k == 0 or k == ell:
        terms = iv(w, k, H1) + iv(w * S_E2, k - 1)
    elif 2 * k == ell:
        terms = iv(w, k, H2) + iv(w * S_E1, k - 1)
    elif k == 1 or k == ell + 1:
        if w in H1:
            # at the singular level k-1 every interval element counts (the
            # antidominant point picks up multiplicity two for the long coset
            # representative); at level k-2 each orbit point counts once
            terms = iv(w, k) + iv(w, k - 1)
            terms += iv(w, k - 2, tuple(levels.reps(k - 2)))
            if ell == 2 and k == 3 and w == E:
                # levels 1 and 2 are both singular here and the boundary
                # ladder continues two levels further down
                terms += [(0, E), (-1, E)]
        else:
            terms = iv(w, k) + iv(w, k - 1, H1)
    elif 2 * k == ell + 2:
        if w in H2:
            terms = iv(w, k) + iv(w, k - 1)
            terms += iv(w, k - 2, tuple(levels.reps(k - 2)))
        else:
            terms = iv(w, k) + iv(w, k - 1, H2)
    else:
        terms = iv(w, k) + iv(w, k - 1)
    return levels.evaluate(terms)


def _s3_odd(lam: Weight, ell: int) -> VermaSum:
    group = Z2_S3
    levels = _Levels(lambda k: _s3_base(ell, k), group)
    cands = [lam.d + Q(ell, 2), -lam.d + Q(ell, 2)]
    k = next(int(c) for c in cands if c.denominator == 1 and 2 * c < ell)
    w = levels.locate(k, lam)
    s3_part = S3_GROUP.elements
    j1h1 = tuple(J1) + tuple(H1)

    def iv(bound, level, index_set=None):
        return _interval(levels, group, bound, level, index_set)

    def eq1(w, k):
        return iv(w, k) + iv(w, k - 1)

    def eq2(w, k):
        return iv(w, k) + iv(w, k + 1)

    def eq3(w, k):
        return iv(w, k, H1) + iv(w * S_E2, k - 1)

    if ell == 1 and k == 0:
        if w in s3_part:
            terms = eq3(w, 0)
        else:
            lines = {
                S0: [(0, S0), (0, E), (0, S_E1), (0, S_E2 * S_E1),
                     (-1, E), (-1, S_E1), (-1, S_E2), (-1, S_E2 * S_E1)],
                S0 * S_E1: [(0, S0 * S_E1), (0, S0), (0, S_E1), (0, E),
                            (0, S_E2 * S_E1), (-1, E), (-1, S_E1)],
                S0 * S_E2 * S_E1: [(0, S0 * S_E2 * S_E1), (0, S0 * S_E1), (0, S0),
                                   (0, S_E2 * S_E1), (0, S_E1), (0, E)],
            }
            terms = lines[w]
    elif k == 0:
        if w in s3_part:
            terms = eq3(w, 0)
        else:
            terms = iv(w, 0, j1h1) + iv(w * S_E2, 1)
    elif k == 1:
        if w in H1:
            # full interval count at the singular level 0: the antidominant
            # point carries multiplicity two for the long coset representative
            terms = iv(w, 1) + iv(w, 0) + iv(w, -1)
        elif w in s3_part:
            terms = iv(w, 1) + iv(w, 0, H1)
        else:
            terms = eq2(w, 1)
    elif k == -1:
        # Mirror of the k=1 case through s0 (source display had inconsistent
        # level indices here); validated against the derivation engine.
        if w in s3_part:
            terms = eq1(w, -1)
        elif ell == 1:
            # levels 0 and 1 coincide, so the three-level ladder collapses
            # and each line is listed explicitly
            if w == S0:
                terms = iv(w, -1) + [(-1, E), (-1, S_E1), (-1, S_E2), (-2, E),
                                     (0, E), (0, S_E1), (0, S0)]
            elif w == S0 * S_E2 * S_E1:
                terms = iv(w, -1) + iv(w, 0)
            else:
                terms = iv(w, -1) + [(0, s) for s in levels.reps(0)
                                     if bruhat_leq(s, w, group)]
        elif w in J1:
            terms = iv(w, -1) + iv(w, 0) + iv(w, 1)
        else:
            terms = iv(w, -1) + iv(w, 0, j1h1)
    elif 2 * k == ell - 1:
        if w in s3_part:
            terms = eq1(w, k)
        else:
            v = S0 * w  # in S3
            if v in H2:
                terms = [(k, s) for s in group.elements
                         if bruhat_leq(s, w, group) or bruhat_leq(s, v * S_E1, group)]
                if v == S_E1 * S_E2:
                    # the two points under v*s_e2 are doubled for the long
                    # coset representative
                    terms += iv(v * S_E2, k)
                terms += iv(v, k - 1)
            else:
                terms = iv(w, k)
    else:
        terms = eq1(w, k) if w in s3_part else eq2(w, k)
    return levels.evaluate(terms)


def table_S3(lam: Weight, bid: BlockId) -> VermaSum:
    """Closed-form tilting character in a block with S3 integral Weyl group
    (epsilon-plane part); primed blocks are computed through the s1 twist."""
    if bid.family != "S3":
        raise ValueError(f"table_S3 needs an S3-family block id, got {bid.family}")
    ell = int(bid.ell)
    if bid.case == "primed":
        inner = _s3_even(act(S1, lam), ell) if ell % 2 == 0 else _s3_odd(act(S1, lam), ell)
        return VermaSum({act(S1, mu): c for mu, c in inner.terms.items()})
    return _s3_even(lam, ell) if ell % 2 == 0 else _s3_odd(lam, ell)


# ---------------------------------------------------------------------------
# WG2 family


def _wg2_base(ell: int, k: int) -> Weight:
    return Weight(k, k, Q(3 * ell - k, 2), Q(-3 * ell - k, 2))


def table_WG2(lam: Weight, bid: BlockId) -> VermaSum:
    """Closed-form tilting character in a block whose integral Weyl group has
    full dihedral epsilon-plane part."""
    if bid.family != "WG2":
        raise ValueError(f"table_WG2 needs a WG2-family block id, got {bid.family}")
    ell = int(bid.ell)
    group = W_G2
    levels = _Levels(lambda k: _wg2_base(ell, k), group)
    assert lam.d.denominator == 1
    k = int(lam.d)
    w = levels.locate(k, lam)

    def iv(bound, level, index_set=None):
        return _interval(levels, group, bound, level, index_set)

    if ell == 0 and k == 0:
        terms = [(0, E)] + [(-1, s) for s in K2]
    elif ell == 0 and k == 1:
        s2, s12 = S2, S1 * S2
        s212, s1212, s21212 = S2 * S1 * S2, S1 * S2 * S1 * S2, S2 * S1 * S2 * S1 * S2
        lines = {
            E: [(1, E), (0, E), (-1, s1212), (-1, s212), (-1, s12), (-1, s2), (-1, E)],
            s2: [(1, s2), (1, E), (0, E), (-1, s212), (-1, s12), (-1, s2), (-1, E)],
            s12: [(1, s12), (1, s2), (1, E), (0, E), (-1, s12), (-1, s2), (-1, E)],
            s212: [(1, s212), (1, s12), (1, s2), (1, E), (0, E), (-1, s2), (-1, E)],
            s1212: [(1, s1212), (1, s212), (1, s12), (1, s2), (1, E), (0, E), (-1, E)],
            s21212: [(1, s21212), (1, s1212), (1, s212), (1, s12), (1, s2), (1, E), (0, E)],
        }
        terms = lines[w]
    elif ell == 1 and k == 1:
        # levels 1, 0, -1 are all singular; every line except the longest
        # carries a mirrored level -1 and full interval counts at level 0
        if w == S2 * S1 * S2 * S1 * S2:
            terms = iv(w, 1, K2) + iv(w * S1, 0, K1)
        else:
            terms = iv(w, 1, K2) + iv(w * S1, 0) + iv(w, -1, K2)
    elif ell == 1 and k == 0:
        if w == S1 * S2 * S1 * S2 * S1:
            terms = iv(w, 0, K1) + iv(w * S2, -1, K2)
        else:
            terms = iv(w, 0, K1) + iv(w * S2, -1) + iv(w * S2, -2)
    elif ell == 1 and k == -1:
        terms = iv(w, -1, K2) + iv(w * S1, -2)
    elif (abs(k) == 3 * ell != 0) or (k == 0 and ell not in (0, 1)):
        terms = iv(w, k, K1) + iv(w * S2, k - 1)
    elif abs(k) == ell and ell not in (0, 1):
        terms = iv(w, k, K2) + iv(w * S1, k - 1)
    elif ell == 0 and k not in (0, 1):
        terms = iv(w, k, K2) + iv(w, k - 1, K2)
    elif (k in (3 * ell + 1, -3 * ell + 1) and ell != 0) or (k == 1 and ell not in (0, 1)):
        if w in K1:
            # full interval count at the singular level k-1, one term per
            # orbit point at level k-2
            terms = iv(w, k) + iv(w, k - 1)
            terms += iv(w, k - 2, tuple(levels.reps(k - 2)))
        else:
            terms = iv(w, k) + iv(w, k - 1, K1)
    elif k in (ell + 1, -ell + 1) and ell != 0:
        if w in K2:
            terms = iv(w, k) + iv(w, k - 1)
            terms += iv(w, k - 2, tuple(levels.reps(k - 2)))
            if ell == 1 and k == 2 and w == E:
                # levels 1, 0, -1 are all singular here and the boundary
                # ladder continues two levels further down
                terms += [(-1, E), (-2, E)]
        else:
            terms = iv(w, k) + iv(w, k - 1, K2)
    else:
        terms = iv(w, k) + iv(w, k - 1)
    return levels.evaluate(terms)


# ---------------------------------------------------------------------------
# osp(3|2) table


def _osp_sum(*pairs: Tuple[Q, Q]) -> OspVermaSum:
    out = OspVermaSum()
    for a, b in pairs:
        out = out.add(OspWeight(Q(a), Q(b)))
    return out


def table_osp32(lam: OspWeight) -> OspVermaSum:
    """Closed-form osp(3|2) tilting characters.  Typical weights use the
    orbit Bruhat-interval formula; atypical weights (a = +-b) split into
    three cases by the class of a."""
    if not osp_atypical_roots(lam):
        return osp_typical_tilting(lam)
    a, b = lam.a, lam.b
    assert a in (b, -b)
    if (2 * a).denominator != 1:
        alpha = OSP_DELTA + OSP_EPS if b == a else OSP_DELTA - OSP_EPS
        return OspVermaSum().add(lam).add(lam - alpha)
    if a.denominator == 1:
        if a == 0:
            return _osp_sum((0, 0), (-1, -1), (-1, 1))
        if (a, b) == (1, 1):
            return _osp_sum((1, 1), (1, -1), (0, 0))
        if (a, b) == (1, -1):
            return _osp_sum((1, -1), (-1, -1), (0, 0))
        if a >= 2 and b == a:
            return _osp_sum((a, a), (a, -a), (a - 1, a - 1), (a - 1, -(a - 1)))
        if a >= 2 and b == -a:
            return _osp_sum((a, -a), (a - 1, -(a - 1)))
        j = -a
        if b == j:  # lam = -j(delta - eps)
            return _osp_sum((-j, j), (-j, -j), (-j - 1, j + 1), (-j - 1, -j - 1))
        return _osp_sum((-j, -j), (-j - 1, -j - 1))
    h = Q(1, 2)
    if (a, b) == (h, h):
        return _osp_sum((h, h), (h, -h), (-h, -h), (-h, h))
    if (a, b) == (h, -h):
        return _osp_sum((h, -h), (-h, h), (-h, -h), (-h - 1, -h - 1))
    if (a, b) == (-h, h):
        return _osp_sum((-h, h), (-h, -h), (-h - 1, h + 1), (-h - 1, -h - 1))
    if (a, b) == (-h, -h):
        return _osp_sum((-h, -h), (-h - 1, -h - 1))
    if a > 0 and b == a:
        return _osp_sum((a, a), (a, -a), (-a, a), (-a, -a),
                        (a - 1, a - 1), (a - 1, -(a - 1)),
                        (-(a - 1), a - 1), (-(a - 1), -(a - 1)))
    if a > 0 and b == -a:
        return _osp_sum((a, -a), (-a, -a), (a - 1, -(a - 1)), (-(a - 1), -(a - 1)))
    j = -a
    if b == j:
        return _osp_sum((-j, j), (-j, -j), (-j - 1, j + 1), (-j - 1, -j - 1))
    return _osp_sum((-j, -j), (-j - 1, -j - 1))


# ---------------------------------------------------------------------------
# Z2 family: reductions to smaller systems


def _z2_product(lam: Weight) -> VermaSum:
    """Block equivalent to the principal block of sl(2) + gl(1|1): the tilting
    character is the product of a two-step sl(2) interval and the two-term
    gl(1|1) ladder along the atypical root."""
    at = atypicality(lam)
    gamma = at.Z[0]
    alpha = at.A[0].vector
    tops = [lam]
    if coroot_pairing(lam, gamma.vector) > 0:
        tops.append(act(REFLECTIONS[gamma.name], lam))
    out = VermaSum()
    for mu in tops:
        out = out.add(mu).add(mu - alpha)
    return out


def _z2_osp_transport(lam: Weight) -> VermaSum:
    """Blocks equivalent to an osp(3|2) block: push the weight through the
    good-diagram chain ending with integral root set {eps1}, read off the
    osp(3|2) weight (d, x), evaluate the osp table, and pull each term back."""
    chain, cur = normalize_good_diagrams(lam)
    chain = list(chain)
    for name, w in (("s2", S2), ("s1", S1)):
        chain.append(name)
        cur = act(w, cur)
    assert {r.name for r in atypicality(cur).Z} == {"e1"}
    osp_lam = OspWeight(cur.d, cur.x)
    assert osp_lam.a in (osp_lam.b, -osp_lam.b)
    t = table_osp32(osp_lam)
    out = VermaSum()
    for nu, c in t.terms.items():
        kappa = cur + (nu.a - cur.d) * DELTA + (nu.b - cur.x) * EPS1
        out = out.add(_unchain(chain, kappa), c)
    return out


# ---------------------------------------------------------------------------
# dispatcher


def tilting_character(lam: Weight) -> Union[VermaSum, str]:
    """Closed-form tilting character of T_lam, or the label of the external
    category the block is equivalent to when no formula is stored here."""
    bid = classify(lam)
    fam = bid.family
    if fam == "Typical":
        return typical_tilting(lam)
    if fam == "Generic":
        alpha = atypicality(lam).A[0].vector
        return VermaSum().add(lam).add(lam - alpha)
    if fam == "Integral":
        return bid.equivalence_label
    if fam == "Z2":
        if bid.case in ("1a", "2e"):
            return "gl(2|1) principal -- external"
        if bid.case == "1b":
            return _z2_product(lam)
        return _z2_osp_transport(lam)
    if fam == "V":
        return table_V(lam, bid)
    if fam == "S3":
        return table_S3(lam, bid)
    return table_WG2(lam, bid)


# ---------------------------------------------------------------------------
# LaTeX emission


def _latex_q(q: Q) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    sign = "-" if q < 0 else ""
    return rf"{sign}\frac{{{abs(q.numerator)}}}{{{q.denominator}}}"


def latex_weight(mu: Weight) -> str:
    return (rf"[{_latex_q(mu.d)}\,|\,{_latex_q(mu.x)},"
            rf"{_latex_q(mu.y)},{_latex_q(mu.z)}]")


def latex_osp_weight(mu: OspWeight) -> str:
    return rf"{_latex_q(mu.a)}\delta+{_latex_q(mu.b)}\epsilon".replace("+-", "-")


def latex_verma_sum(t: Union[VermaSum, OspVermaSum],
                    label: Optional[str] = None) -> str:
    """Render a tilting character in the display style T_{...} = M_{...}+..."""
    osp = isinstance(t, OspVermaSum)
    fmt = latex_osp_weight if osp else latex_weight
    try:
        top = t.top()
    except ValueError:
        top = None
    lhs = label if label is not None else (rf"T_{{{fmt(top)}}}" if top is not None else "X")
    def sort_key(kv):
        mu = kv[0]
        return format_osp_weight(mu) if osp else format_weight(mu)
    parts = []
    for mu, c in sorted(t.terms.items(), key=sort_key):
        head = "" if c == 1 else f"{c}\\,"
        parts.append(rf"{head}M_{{{fmt(mu)}}}")
    return f"{lhs} = " + " + ".join(parts) if parts else f"{lhs} = 0"

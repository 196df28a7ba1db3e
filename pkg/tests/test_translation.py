"""Translation-functor engine: typical tilting characters, flag translation,
and the independent derivation of atypical tilting characters."""

import random
from fractions import Fraction as Q

import pytest

from g3tilt.blocks import atypicality, block_members
from g3tilt.characters import VermaSum, flags_certificates, height
from g3tilt.rootdata import adjoint_weights
from g3tilt.translation import (OspVermaSum, UnderdeterminedError,
                                derive_tilting, osp_atypical_roots,
                                osp_derive_tilting, osp_flags_certificates,
                                osp_linked, osp_typical_tilting,
                                translate_flag, typical_tilting)
from g3tilt.weights import OspWeight, Weight, format_weight, parse_weight


def test_typical_tilting_rejects_atypical():
    lam = parse_weight("-7/2|1/4,13/4,-7/2")
    with pytest.raises(ValueError):
        typical_tilting(lam)


def test_typical_tilting_top_and_positivity():
    rng = random.Random(31)
    for _ in range(20):
        x = Q(rng.randint(-30, 30), 7)
        y = Q(rng.randint(-30, 30), 7)
        lam = Weight(Q(rng.randint(1, 9), 2), x, y, -x - y)
        if not atypicality(lam).typical:
            continue
        t = typical_tilting(lam)
        assert t[lam] == 1
        assert all(c >= 1 for c in t.terms.values())
        assert t.top() == lam


def test_translate_flag_is_linear():
    lam = parse_weight("-9/2|3/4,15/4,-9/2")
    s = lam - 2 * Weight(1, 0, 0, 0)
    start = VermaSum({s: 1})
    target = lam
    once = translate_flag(start, adjoint_weights(), target)
    twice = translate_flag(start.scale(2), adjoint_weights(), target)
    assert twice.terms == once.scale(2).terms


def test_translate_flag_support_in_target_class():
    # every term of the translated flag is linked to the target
    from g3tilt.blocks import linked
    lam = parse_weight("-7/2|1/4,13/4,-7/2")
    s = lam - 2 * Weight(1, 0, 0, 0)
    X = translate_flag(typical_tilting(s), adjoint_weights(), lam)
    assert lam in X
    for mu in X.terms:
        assert linked(lam, mu)


def test_derive_tilting_v_family_entry():
    # frozen cross-check: independently derived and table-verified character
    lam = parse_weight("-7/2|1/4,13/4,-7/2")
    T, info = derive_tilting(lam)
    expect = {
        "-7/2|1/4,13/4,-7/2": 1, "-7/2|13/4,1/4,-7/2": 1,
        "-7/2|-1/4,-13/4,7/2": 1, "-7/2|-13/4,-1/4,7/2": 1,
        "-9/2|3/4,15/4,-9/2": 1, "-9/2|15/4,3/4,-9/2": 1,
        "-9/2|-3/4,-15/4,9/2": 1, "-9/2|-15/4,-3/4,9/2": 1,
    }
    assert {format_weight(m): c for m, c in T.terms.items()} == expect
    assert info["start_kind"] in ("typical", "known", "certified-verma",
                                  "intersection", "intersection+image")


def test_derive_matches_certificate_lower_bound():
    lam = parse_weight("-7/2|1/4,13/4,-7/2")
    T, _ = derive_tilting(lam)
    cert = flags_certificates(lam)
    for mu, c in cert.terms.items():
        assert T[mu] >= 1
    assert T[lam] == 1


def test_derive_typical_equals_orbit_formula():
    rng = random.Random(32)
    done = 0
    while done < 5:
        x = Q(rng.randint(-20, 20), 7)
        y = Q(rng.randint(-20, 20), 7)
        lam = Weight(Q(rng.randint(1, 7), 1), x, y, -x - y)
        at = atypicality(lam)
        if at.typical and at.strongly_typical:
            D, _info = derive_tilting(lam)
            assert D.terms == typical_tilting(lam).terms
            done += 1


# -- osp(3|2) ---------------------------------------------------------------

def test_osp_typical_tilting_orbit_sizes():
    # nothing integral: a bare Verma
    t0 = osp_typical_tilting(OspWeight(Q(5, 3), Q(1, 3)))
    assert t0.terms == {OspWeight(Q(5, 3), Q(1, 3)): 1}
    # both reflections integral and the weight dominant: full four-term orbit
    lam = OspWeight(Q(3, 2), Q(1, 2))
    t = osp_typical_tilting(lam)
    assert len(t) == 4 and t[lam] == 1
    assert set(t.terms) == {OspWeight(a, b) for a in (Q(3, 2), Q(-3, 2))
                            for b in (Q(1, 2), Q(-1, 2))}


def test_osp_seed_characters():
    T0, _ = osp_derive_tilting(OspWeight(0, 0))
    assert T0.terms == {OspWeight(0, 0): 1, OspWeight(-1, -1): 1,
                        OspWeight(-1, 1): 1}
    lam = OspWeight(Q(1, 3), Q(1, 3))
    T, _ = osp_derive_tilting(lam)
    assert T.terms == {lam: 1, lam - OspWeight(1, 1): 1}


def test_osp_linked_and_atypicality():
    lam = OspWeight(2, 2)
    assert osp_atypical_roots(lam)
    assert osp_linked(lam, OspWeight(2, -2))
    assert osp_linked(lam, OspWeight(3, 3))       # one step up the a=b line
    assert not osp_linked(lam, OspWeight(Q(5, 2), Q(5, 2)))
    assert not osp_atypical_roots(OspWeight(Q(1, 3), Q(1, 7)))


def test_osp_certificates_inside_derived_character():
    known = {}
    for lam in (OspWeight(0, 0), OspWeight(1, -1), OspWeight(1, 1)):
        T, _ = osp_derive_tilting(lam, known=known)
        known[lam] = T
        cert = osp_flags_certificates(lam)
        assert all(T[mu] >= 1 for mu in cert.terms)
        assert T[lam] == 1

"""Closed-form tilting-character tables and the dispatcher over block types."""

from fractions import Fraction as Q

import pytest

from g3tilt import tables
from g3tilt.blocks import classify, v_mu_rep
from g3tilt.characters import VermaSum
from g3tilt.tables import (CROSS_CHECK_NOTES, latex_osp_weight, latex_verma_sum,
                           latex_weight, table_osp32, tilting_character)
from g3tilt.translation import OspVermaSum
from g3tilt.weights import OspWeight, Weight, format_weight, parse_weight
from g3tilt.weyl import W_G2, orbit_antidominant


def test_dispatcher_typical_weight():
    lam = Weight(5, Q(1, 7), Q(2, 7), Q(-3, 7))
    t = tilting_character(lam)
    assert isinstance(t, VermaSum) and t[lam] == 1


def test_dispatcher_generic_block_two_terms():
    lam = Weight(Q(2, 7), Q(2, 7), Q(3, 7), Q(-5, 7))
    bid = classify(lam)
    assert bid.family == "Generic"
    t = tilting_character(lam)
    assert isinstance(t, VermaSum) and len(t) == 2 and t[lam] == 1


def test_dispatcher_external_labels():
    assert tilting_character(parse_weight("-3/2|-3/2,-3,9/2")) == "see CW18"
    assert tilting_character(parse_weight("4/3|-1/3,-4/3,5/3")) == \
        "gl(2|1) principal -- external"
    assert tilting_character(parse_weight("-5/3|-5/3,-7/2,31/6")) == \
        "gl(2|1) principal -- external"


def test_dispatcher_z2_explicit_cases():
    for text in ("-1/3|-1/3,-4/3,5/3", "7/2|-5/3,-7/2,31/6", "3|-2/3,-3,11/3"):
        lam = parse_weight(text)
        t = tilting_character(lam)
        assert isinstance(t, VermaSum) and t[lam] == 1
        assert all(c >= 1 for c in t.terms.values())


def test_v_family_entry_frozen():
    lam = parse_weight("-7/2|1/4,13/4,-7/2")
    t = tilting_character(lam)
    got = {format_weight(m): c for m, c in t.terms.items()}
    assert got == {
        "-7/2|1/4,13/4,-7/2": 1, "-7/2|13/4,1/4,-7/2": 1,
        "-7/2|-1/4,-13/4,7/2": 1, "-7/2|-13/4,-1/4,7/2": 1,
        "-9/2|3/4,15/4,-9/2": 1, "-9/2|15/4,3/4,-9/2": 1,
        "-9/2|-3/4,-15/4,9/2": 1, "-9/2|-15/4,-3/4,9/2": 1,
    }


def test_v_family_symmetry_sample():
    # T at the level-k base weight names the same orbit as level 2*ell-k+1
    for ell in (0, 3):
        for k in range(-2, ell + 3):
            a = tables._v_lambda_base(Q(ell), k)
            b = tables._v_lambda_base(Q(ell), 2 * ell - k + 1)
            _, ra = orbit_antidominant(a, tables._V_GROUP_S0)
            _, rb = orbit_antidominant(b, tables._V_GROUP_S0)
            assert set(ra.values()) == set(rb.values())


def test_mu_family_top_coefficient():
    lam = v_mu_rep(Q(1, 4))
    t = tilting_character(lam)
    assert isinstance(t, VermaSum) and t[lam] == 1


def test_s3_and_wg2_entries_have_unit_top():
    for base, k in ((tables._s3_base(2, 0), 0), (tables._wg2_base(1, 3), 3)):
        t = tilting_character(base)
        assert isinstance(t, VermaSum) and t[base] == 1


def test_osp_table_seed_lines():
    assert table_osp32(OspWeight(0, 0)).terms == {
        OspWeight(0, 0): 1, OspWeight(-1, -1): 1, OspWeight(-1, 1): 1}
    # integral line j=1 has exactly three terms
    assert table_osp32(OspWeight(1, 1)).terms == {
        OspWeight(1, 1): 1, OspWeight(1, -1): 1, OspWeight(0, 0): 1}
    # half-integral line j=3/2 carries the full eight-weight support
    t = table_osp32(OspWeight(Q(3, 2), Q(3, 2)))
    assert set(t.terms) == {OspWeight(a * s, b * u)
                            for a, b in ((Q(3, 2), Q(3, 2)), (Q(1, 2), Q(1, 2)))
                            for s in (1, -1) for u in (1, -1)}
    # integral line j=2 has the four-weight support
    assert set(table_osp32(OspWeight(2, 2)).terms) == {
        OspWeight(2, 2), OspWeight(2, -2), OspWeight(1, 1), OspWeight(1, -1)}


def test_osp_table_typical_dispatch():
    # typical weights fall through to the orbit formula
    lam = OspWeight(Q(1, 3), Q(1, 7))
    assert table_osp32(lam).terms == {lam: 1}


def test_latex_helpers():
    lam = parse_weight("-7/2|1/4,13/4,-7/2")
    s = latex_weight(lam)
    assert s.startswith("[") and r"\frac{7}{2}" in s
    t = tilting_character(lam)
    tex = latex_verma_sum(t)
    assert tex.startswith("T_{") and "M_{" in tex and " = " in tex
    assert latex_osp_weight(OspWeight(Q(1, 2), -1)) == r"\frac{1}{2}\delta-1\epsilon"


def test_cross_check_notes_cover_corrections():
    for key in ("singular-boundary-multiplicity", "adjacent-singular-ladders",
                "s3-odd-case2", "s3-odd-case4"):
        assert key in CROSS_CHECK_NOTES and CROSS_CHECK_NOTES[key]

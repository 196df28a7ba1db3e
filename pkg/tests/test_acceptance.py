"""Acceptance gate: ten end-to-end criteria, one pass/fail line each.

Every check is exact (multiset equality of Fraction-valued data); there are no
tolerances anywhere.  The expensive table-vs-derivation sweep is computed once
and shared by the criteria that consume it.
"""

import itertools
import random
from fractions import Fraction as Q

import pytest

from g3tilt import cli, tables
from g3tilt.blocks import (atypicality, block_members, classify,
                           equivalent_weights, integral_weyl_group, linked)
from g3tilt.characters import (_ht, _iter_offsets, flags_certificates,
                               lattice_offset, verma_series, verma_truncated)
from g3tilt.translation import derive_tilting, typical_tilting
from g3tilt.weights import OspWeight, Weight, casimir_scalar
from g3tilt.weyl import (ALL_ELEMENTS, E, FULL, H1, H2, K1, K2, S3_GROUP,
                         W_G2, Z2_S3, act, bruhat_leq, orbit_antidominant)

from conftest import ACCEPTANCE_LINES
from test_characters import brute_force_verma_coeff


def report(number: int, description: str, ok: bool) -> None:
    # one line per criterion, echoed in the terminal summary past capture
    line = f"CRITERION {number:2d} [{'PASS' if ok else 'FAIL'}] {description}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, f"criterion {number} failed: {description}"


MISMATCH_PREFIXES = ("table", "underdetermined")
CERT_PREFIXES = ("certificate", "top coefficient")


@pytest.fixture(scope="module")
def g3_sweep():
    return cli.sweep_g3(cli.G3_FAMILIES)


@pytest.fixture(scope="module")
def osp_sweep():
    return cli.sweep_osp(jmax=10)


def rand_atypical(rng, dens=(1, 2, 3, 4)):
    while True:
        x = Q(rng.randint(-12, 12), rng.choice(dens))
        y = Q(rng.randint(-12, 12), rng.choice(dens))
        z = -x - y
        d = rng.choice([x, -x, y, -y, z, -z])
        lam = Weight(d, x, y, z)
        if not atypicality(lam).typical:
            return lam


def test_criterion_01_table_vs_derivation(g3_sweep):
    bad = [e for e in g3_sweep
           if not e.ok and e.detail.startswith(MISMATCH_PREFIXES)]
    for e in bad[:10]:
        ACCEPTANCE_LINES.append("  " + e.line())
    report(1, f"table equals derivation on all {len(g3_sweep)} family entries",
           not bad)


# corrected closed-form lines of the osp(3|2) appendix theorem, frozen

def _osp_expected(jmax=10):
    W, h = OspWeight, Q(1, 2)
    out = {W(Q(1, 3), Q(1, 3)): [W(Q(1, 3), Q(1, 3)), W(Q(-2, 3), Q(-2, 3))],
           W(Q(2, 7), Q(-2, 7)): [W(Q(2, 7), Q(-2, 7)), W(Q(-5, 7), Q(5, 7))],
           W(0, 0): [W(0, 0), W(-1, -1), W(-1, 1)],
           W(1, 1): [W(1, 1), W(1, -1), W(0, 0)],
           W(1, -1): [W(1, -1), W(-1, -1), W(0, 0)]}
    for k in range(2, jmax + 1):
        out[W(k, k)] = [W(k, k), W(k, -k), W(k - 1, k - 1), W(k - 1, -(k - 1))]
        out[W(k, -k)] = [W(k, -k), W(k - 1, -(k - 1))]
    for k in range(1, jmax + 1):
        out[W(-k, k)] = [W(-k, k), W(-k, -k), W(-k - 1, k + 1), W(-k - 1, -k - 1)]
        out[W(-k, -k)] = [W(-k, -k), W(-k - 1, -k - 1)]
    out[W(h, h)] = [W(h, h), W(h, -h), W(-h, -h), W(-h, h)]
    out[W(h, -h)] = [W(h, -h), W(-h, h), W(-h, -h), W(-h - 1, -h - 1)]
    out[W(-h, h)] = [W(-h, h), W(-h, -h), W(-h - 1, h + 1), W(-h - 1, -h - 1)]
    out[W(-h, -h)] = [W(-h, -h), W(-h - 1, -h - 1)]
    j = h + 1
    while j <= jmax + h:
        out[W(j, j)] = [W(j, j), W(j, -j), W(-j, j), W(-j, -j),
                        W(j - 1, j - 1), W(j - 1, -(j - 1)),
                        W(-(j - 1), j - 1), W(-(j - 1), -(j - 1))]
        out[W(j, -j)] = [W(j, -j), W(-j, -j), W(j - 1, -(j - 1)),
                         W(-(j - 1), -(j - 1))]
        out[W(-j, j)] = [W(-j, j), W(-j, -j), W(-j - 1, j + 1), W(-j - 1, -j - 1)]
        out[W(-j, -j)] = [W(-j, -j), W(-j - 1, -j - 1)]
        j += 1
    return out


def test_criterion_02_osp32_appendix(osp_sweep):
    expected = _osp_expected()
    frozen_ok = True
    for lam, terms in expected.items():
        want = {}
        for mu in terms:
            want[mu] = want.get(mu, 0) + 1
        if tables.table_osp32(lam).terms != want:
            frozen_ok = False
    derive_ok = not [e for e in osp_sweep
                     if not e.ok and e.detail.startswith(MISMATCH_PREFIXES)]
    report(2, f"osp(3|2) derivation reproduces all {len(osp_sweep)} theorem "
              "lines up to j=10", frozen_ok and derive_ok)


def test_criterion_03_certificate_containment(g3_sweep, osp_sweep):
    bad = [e for e in g3_sweep + osp_sweep
           if not e.ok and e.detail.startswith(CERT_PREFIXES)]
    report(3, "flag certificates sit inside every character with top "
              "coefficient 1", not bad)


def test_criterion_04_linkage_casimir():
    rng = random.Random(104)
    ok = True
    for _ in range(1000):
        lam = rand_atypical(rng)
        c = casimir_scalar(lam)
        for mu in block_members(lam, k_range=range(-1, 2)):
            if casimir_scalar(mu) != c or not linked(lam, mu):
                ok = False
    cross = 0
    while cross < 1000:
        a, b = rand_atypical(rng), rand_atypical(rng)
        if casimir_scalar(a) == casimir_scalar(b):
            continue
        cross += 1
        if linked(a, b):
            ok = False
    report(4, "1000 blocks share Casimir and linkage; 1000 cross-Casimir "
              "pairs unlinked", ok)


FAMILY_G2_SIZE = {"Generic": 1, "Z2": 2, "V": 4, "S3": 6, "WG2": 12}


def test_criterion_05_classification_soundness():
    rng = random.Random(105)
    ok = True
    checked = 0
    while checked < 1000:
        lam = rand_atypical(rng)
        at = atypicality(lam)
        group = integral_weyl_group(lam)
        if len(group.g2_part) == 12 and at.s0_integral:
            continue   # integral weight: outside this criterion
        checked += 1
        bid = classify(lam)
        if len(group.g2_part) != FAMILY_G2_SIZE.get(bid.family):
            ok = False
        if not linked(lam, bid.canonical_rep):
            ok = False
        for w in group.elements:
            mu = act(w, lam)
            other = classify(mu)
            if (other.family, other.case, other.ell) != \
                    (bid.family, bid.case, bid.ell):
                ok = False
            if not linked(mu, other.canonical_rep):
                ok = False
    report(5, "classification of 1000 non-integral atypical weights is sound "
              "and Weyl-stable", ok)


def test_criterion_06_equivalence_axioms():
    rng = random.Random(106)
    ok = True
    for _ in range(200):
        lam = rand_atypical(rng)
        ms = block_members(lam, k_range=range(-2, 3))
        a = rng.choice(ms)
        b = rng.choice(ms) if rng.random() < 0.7 else rand_atypical(rng)
        c = rng.choice(ms) if rng.random() < 0.7 else rand_atypical(rng)
        if equivalent_weights(a, b) != equivalent_weights(b, a):
            ok = False
        if equivalent_weights(a, b) and equivalent_weights(b, c) and \
                not equivalent_weights(a, c):
            ok = False
    report(6, "equivalence relation is symmetric and transitive on 200 "
              "triples", ok)


def test_criterion_07_verma_oracle():
    series = verma_series(6)
    count_ok = all(series.get(off, 0) == brute_force_verma_coeff(off)
                   for off in _iter_offsets(6))
    rng = random.Random(107)
    identity_ok = True
    depth = 4
    done = 0
    while done < 50:
        lam = rand_atypical(rng, dens=(7, 11, 13))
        if len(integral_weyl_group(lam).g2_part) != 1:
            continue
        done += 1
        alpha = atypicality(lam).A[0].vector
        a_off = lattice_offset(alpha)
        lhs = verma_truncated(lam, depth) + verma_truncated(lam - alpha, depth, lam)
        m = verma_truncated(lam, depth)
        prod = {}
        for off, v in m.coeffs.items():
            prod[off] = prod.get(off, 0) + v
            new = (off[0] + a_off[0], off[1] + a_off[1], off[2] + a_off[2])
            if _ht(new) <= depth:
                prod[new] = prod.get(new, 0) + v
        if {o: v for o, v in prod.items() if v} != lhs.coeffs:
            identity_ok = False
    report(7, "Verma coefficients equal brute-force counts to depth 6; "
              "generic identity holds for 50 weights", count_ok and identity_ok)


def test_criterion_08_strongly_typical_formula():
    rng = random.Random(108)
    ok = True
    done = 0
    while done < 50:
        x = Q(rng.randint(-20, 20), rng.choice([3, 7]))
        y = Q(rng.randint(-20, 20), rng.choice([3, 7]))
        d = Q(rng.randint(-9, 9))   # integral <lam,(2delta)^vee>
        if d == 0:
            continue
        lam = Weight(d, x, y, -x - y)
        if not atypicality(lam).strongly_typical:
            continue
        done += 1
        T, _ = derive_tilting(lam)
        if T.terms != typical_tilting(lam).terms:
            ok = False
    report(8, "orbit-sum formula equals derivation on 50 strongly typical "
              "weights", ok)


def test_criterion_09_v_family_symmetry():
    ok = True
    for ell in (-6, -3, 0, 3, 6):
        lo, hi = (-4, 0) if ell == 0 else (-3, abs(ell))
        for k in range(lo, hi + 1):
            _, ra = orbit_antidominant(tables._v_lambda_base(Q(ell), k),
                                       tables._V_GROUP_S0)
            _, rb = orbit_antidominant(
                tables._v_lambda_base(Q(ell), 2 * ell - k + 1),
                tables._V_GROUP_S0)
            if set(ra.values()) != set(rb.values()):
                ok = False
    report(9, "level-k and level-(2l-k+1) labels name the same orbit across "
              "the sweep", ok)


def test_criterion_10_group_substrate():
    ok = len(ALL_ELEMENTS) == 24
    ok = ok and len(H1) == 3 and len(H2) == 3 and len(K1) == 6 and len(K2) == 6
    generic = Weight(7, 1, 3, -4)
    for u, v in itertools.product(ALL_ELEMENTS, repeat=2):   # 576 pairs
        if act(u * v, generic) != act(u, act(v, generic)):
            ok = False
        if u * v not in set(ALL_ELEMENTS):
            ok = False
    for u in ALL_ELEMENTS:
        if u * E != u or E * u != u:
            ok = False
        if not any(u * v == E for v in ALL_ELEMENTS):
            ok = False
    for group in (FULL, W_G2, S3_GROUP, Z2_S3):
        elems = sorted(group.elements, key=repr)
        for u in elems:
            if not bruhat_leq(u, u, group):
                ok = False
        for u, v in itertools.product(elems, repeat=2):
            if u != v and bruhat_leq(u, v, group) and bruhat_leq(v, u, group):
                ok = False
        for u, v, w in itertools.product(elems, repeat=3):
            if bruhat_leq(u, v, group) and bruhat_leq(v, w, group) and \
                    not bruhat_leq(u, w, group):
                ok = False
    report(10, "group action axioms (576 pairs), Bruhat axioms, and named "
               "subset sizes", ok)

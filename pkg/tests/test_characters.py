"""Truncated characters: the Verma series against a brute-force partition
count, anchoring, Jantzen sum, and the Verma-flag certificates."""

import itertools
import random
from fractions import Fraction as Q
from functools import lru_cache

from g3tilt.blocks import atypicality, integral_weyl_group
from g3tilt.characters import (TruncatedChar, VermaSum, _ht, _iter_offsets,
                               dominates, flags_certificates, height, jsf_rhs,
                               lattice_offset, offset_coords, verma_series,
                               verma_truncated)
from g3tilt.rootdata import POSITIVE_EVEN, POSITIVE_ODD
from g3tilt.weights import Weight, parse_weight

EVEN_OFFSETS = tuple(lattice_offset(r.vector) for r in POSITIVE_EVEN)
ODD_OFFSETS = tuple(lattice_offset(r.vector) for r in POSITIVE_ODD)


@lru_cache(maxsize=None)
def _even_partitions(off, idx=0):
    """Number of ways to write the offset as an N-combination of the positive
    even roots with indices >= idx (plain Kostant partition count)."""
    if off == (0, 0, 0):
        return 1
    if idx == len(EVEN_OFFSETS) or min(off) < 0:
        return 0
    step = EVEN_OFFSETS[idx]
    total = 0
    cur = off
    while min(cur) >= 0:
        total += _even_partitions(cur, idx + 1)
        cur = (cur[0] - step[0], cur[1] - step[1], cur[2] - step[2])
    return total


def brute_force_verma_coeff(off):
    """Super Kostant partition count: positive even roots freely, each
    positive odd root at most once."""
    total = 0
    for r in range(len(ODD_OFFSETS) + 1):
        for subset in itertools.combinations(ODD_OFFSETS, r):
            rem = off
            for s in subset:
                rem = (rem[0] - s[0], rem[1] - s[1], rem[2] - s[2])
            if min(rem) >= 0:
                total += _even_partitions(rem)
    return total


def test_verma_series_matches_brute_force_depth_6():
    series = verma_series(6)
    checked = 0
    for off in _iter_offsets(6):
        assert series.get(off, 0) == brute_force_verma_coeff(off), off
        checked += 1
    assert checked == 84  # every lattice offset of height <= 6


def test_verma_series_seed_values():
    series = verma_series(3)
    assert series[(0, 0, 0)] == 1
    # height-1 offsets: the three simple roots, each a root in exactly one way
    for off in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        assert series[off] == brute_force_verma_coeff(off)


def test_verma_truncated_anchoring():
    # coeff() takes the offset ref - weight
    lam = parse_weight("-7/2|1/4,13/4,-7/2")
    direct = verma_truncated(lam, 4)
    assert direct.coeff(lam - lam) == 1
    # re-anchoring at a higher reference shifts every coefficient by ref - lam
    ref = lam + Weight(1, Q(-1, 2), Q(-1, 2), 1)   # lam + (delta+eps3)
    shifted = verma_truncated(lam, 4, reference=ref)
    assert shifted.coeff(ref - lam) == 1
    for off, v in direct.coeffs.items():
        if _ht(off) <= 3:
            base = lattice_offset(ref - lam)
            moved = (off[0] + base[0], off[1] + base[1], off[2] + base[2])
            assert shifted.coeffs.get(moved, 0) == v


def rand_generic(rng):
    """An atypical weight whose integral Weyl group has trivial G2 part."""
    while True:
        x = Q(rng.randint(-40, 40), rng.choice([7, 11, 13]))
        y = Q(rng.randint(-40, 40), rng.choice([7, 11, 13]))
        z = -x - y
        for d in (x, -y, z):
            lam = Weight(d, x, y, z)
            at = atypicality(lam)
            if not at.typical and len(integral_weyl_group(lam).g2_part) == 1:
                return lam


def test_generic_block_verma_identity():
    # (ch M_lam + ch M_{lam-alpha}) = ch M_lam * (1 + e^{-alpha}) for the
    # atypical root alpha, i.e. dividing out (1+e^{-alpha}) recovers ch M_lam
    rng = random.Random(21)
    depth = 4
    for _ in range(50):
        lam = rand_generic(rng)
        alpha = atypicality(lam).A[0].vector
        a_off = lattice_offset(alpha)
        assert a_off is not None
        lhs = verma_truncated(lam, depth) + verma_truncated(lam - alpha, depth, lam)
        m = verma_truncated(lam, depth)
        product = {}
        for off, v in m.coeffs.items():
            product[off] = product.get(off, 0) + v
            new = (off[0] + a_off[0], off[1] + a_off[1], off[2] + a_off[2])
            if _ht(new) <= depth:
                product[new] = product.get(new, 0) + v
        assert {o: v for o, v in product.items() if v} == lhs.coeffs


def test_dominance_and_height():
    lam = parse_weight("-7/2|1/4,13/4,-7/2")
    assert dominates(lam, lam)
    mu = lam - Weight(1, Q(-1, 2), Q(-1, 2), 1)   # minus delta+eps3
    assert dominates(lam, mu) and not dominates(mu, lam)
    assert height(lam - mu) == 1


def test_jsf_rhs_nonnegative_on_samples():
    # Jantzen-sum right-hand sides are sums of Verma characters: every
    # coefficient is a nonnegative count
    rng = random.Random(22)
    for _ in range(10):
        lam = rand_generic(rng)
        rhs = jsf_rhs(lam, 3)
        assert all(v >= 0 for v in rhs.coeffs.values())


def test_flags_certificates_contain_lam_with_top_one():
    rng = random.Random(23)
    for _ in range(20):
        lam = rand_generic(rng)
        cert = flags_certificates(lam)
        assert cert[lam] == 1
        assert all(c >= 1 for c in cert.terms.values())
        # generic block: the certificate is lam plus the isotropic drop
        alpha = atypicality(lam).A[0].vector
        assert lam - alpha in cert


def test_verma_sum_algebra():
    lam = parse_weight("-7/2|1/4,13/4,-7/2")
    mu = lam - Weight(1, Q(-1, 2), Q(-1, 2), 1)
    a = VermaSum({lam: 1, mu: 2})
    b = VermaSum({mu: -2})
    assert (a + b).terms == {lam: 1}
    assert (a - a).terms == {}
    assert a.scale(3)[mu] == 6
    assert a.top() == lam

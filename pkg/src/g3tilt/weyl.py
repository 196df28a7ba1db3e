from __future__ import annotations

"""The Weyl group W = S2 x W_G2 of G(3), acting exactly on symbols.

Elements are stored as (t, eps, perm): t is the power of s0 (which flips the
d-coordinate), and the epsilon-plane part acts by
(x,y,z) -> eps * (x,y,z)[perm], a signed permutation.  The twelve signed
permutations realise the dihedral group W_G2.
"""

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

from .weights import Weight, coroot_pairing
from . import rootdata
from .rootdata import POSITIVE_EVEN, Root

Perm = Tuple[int, int, int]


@dataclass(frozen=True)
class WeylElt:
    t: int          # 0 or 1: power of the central s0
    eps: int        # +1 or -1: global sign on the epsilon-plane
    perm: Perm      # output coordinate i reads input coordinate perm[i]

    def __mul__(self, other: "WeylElt") -> "WeylElt":
        p = tuple(other.perm[self.perm[i]] for i in range(3))
        return WeylElt((self.t + other.t) % 2, self.eps * other.eps, p)  # type: ignore[arg-type]

    def inverse(self) -> "WeylElt":
        inv = [0, 0, 0]
        for i in range(3):
            inv[self.perm[i]] = i
        return WeylElt(self.t, self.eps, tuple(inv))  # type: ignore[arg-type]

    def __repr__(self) -> str:
        return word_str(self)


E = WeylElt(0, 1, (0, 1, 2))
S0 = WeylElt(1, 1, (0, 1, 2))
S1 = WeylElt(0, 1, (1, 0, 2))          # reflection in e2-e1: swaps x and y
S2 = WeylElt(0, -1, (0, 2, 1))         # reflection in e1: (x,y,z) -> (-x,-z,-y)

# The remaining epsilon-plane reflections as signed permutations.
S_E1 = S2
S_E2 = WeylElt(0, -1, (2, 1, 0))       # (x,y,z) -> (-z,-y,-x)
S_ME3 = WeylElt(0, -1, (1, 0, 2))      # (x,y,z) -> (-y,-x,-z)
S_E2_E1 = S1
S_E1_E3 = WeylElt(0, 1, (2, 1, 0))     # swaps x and z
S_E2_E3 = WeylElt(0, 1, (0, 2, 1))     # swaps y and z

REFLECTIONS: Dict[str, WeylElt] = {
    "2d": S0,
    "e1": S_E1,
    "e2": S_E2,
    "-e3": S_ME3,
    "e2-e1": S_E2_E1,
    "e1-e3": S_E1_E3,
    "e2-e3": S_E2_E3,
}


def reflection(root: Root) -> WeylElt:
    """The reflection in a positive even root."""
    return REFLECTIONS[root.name]


def act(w: WeylElt, lam: Weight) -> Weight:
    v = lam.eps
    d = -lam.d if w.t else lam.d
    return Weight(d, w.eps * v[w.perm[0]], w.eps * v[w.perm[1]], w.eps * v[w.perm[2]])


def generate(gens: Iterable[WeylElt]) -> FrozenSet[WeylElt]:
    els = {E}
    frontier = list(els)
    gens = list(gens)
    while frontier:
        nxt = []
        for g in gens:
            for w in frontier:
                gw = g * w
                if gw not in els:
                    els.add(gw)
                    nxt.append(gw)
        frontier = nxt
    return frozenset(els)


ALL_ELEMENTS: Tuple[WeylElt, ...] = tuple(sorted(
    generate([S0, S1, S2]),
    key=lambda w: (w.t, w.eps, w.perm),
))
assert len(ALL_ELEMENTS) == 24

W_G2_ELEMENTS: FrozenSet[WeylElt] = generate([S1, S2])


def _shortest_words(gens: Sequence[Tuple[str, WeylElt]]) -> Dict[WeylElt, Tuple[str, ...]]:
    """BFS over the subgroup generated by gens; returns a canonical shortest
    word (as a tuple of generator names, leftmost applied last) per element."""
    words: Dict[WeylElt, Tuple[str, ...]] = {E: ()}
    frontier = [E]
    while frontier:
        nxt = []
        for w in frontier:
            for name, g in gens:
                gw = g * w
                if gw not in words:
                    words[gw] = (name,) + words[w]
                    nxt.append(gw)
        frontier = nxt
    return words


_CANONICAL_WORDS = _shortest_words([("s0", S0), ("s1", S1), ("s2", S2)])


def word_str(w: WeylElt) -> str:
    word = _CANONICAL_WORDS[w]
    return "".join(word) if word else "e"


def parse_word(text: str) -> WeylElt:
    """Parse a word in {s0, s1, s2}, e.g. "s2s1s2"; "e" is the identity."""
    text = text.strip()
    if text in ("", "e"):
        return E
    toks = text.replace("s", " s").split()
    table = {"s0": S0, "s1": S1, "s2": S2}
    w = E
    for tok in toks:
        if tok not in table:
            raise ValueError(f"bad Weyl word {text!r}")
        w = w * table[tok]
    return w


@dataclass(frozen=True)
class Subgroup:
    """A subgroup of W together with its declared Coxeter generators (the
    generator set matters: Bruhat order and lengths are taken with respect
    to it, and different block families use different sets)."""

    elements: FrozenSet[WeylElt]
    gens: Tuple[WeylElt, ...]
    gen_names: Tuple[str, ...]

    @property
    def tag(self) -> str:
        """Isomorphism type of the W_G2-part, plus s0 marker."""
        g2 = sum(1 for w in self.elements if w.t == 0)
        name = {1: "e", 2: "Z2", 4: "Z2xZ2", 6: "S3", 12: "D12"}[g2]
        return name + ("+s0" if S0 in self.elements else "")

    @property
    def g2_part(self) -> FrozenSet[WeylElt]:
        return frozenset(w for w in self.elements if w.t == 0)

    def __contains__(self, w: WeylElt) -> bool:
        return w in self.elements

    def __len__(self) -> int:
        return len(self.elements)

    def words(self) -> Dict[WeylElt, Tuple[str, ...]]:
        return _shortest_words(tuple(zip(self.gen_names, self.gens)))

    def length(self, w: WeylElt) -> int:
        return len(self.words()[w])


def subgroup(named_gens: Sequence[Tuple[str, WeylElt]]) -> Subgroup:
    names = tuple(n for n, _ in named_gens)
    gens = tuple(g for _, g in named_gens)
    return Subgroup(generate(gens), gens, names)


TRIVIAL = subgroup([])
FULL = subgroup([("s0", S0), ("s1", S1), ("s2", S2)])
W_G2 = subgroup([("s1", S1), ("s2", S2)])
S3_GROUP = subgroup([("se1", S_E1), ("se2", S_E2)])
Z2_S3 = subgroup([("s0", S0), ("se1", S_E1), ("se2", S_E2)])
Z2_CUBED = subgroup([("s0", S0), ("s1", S1), ("se3", S_ME3)])

# Named element sets used by the closed-form tables.
H1: Tuple[WeylElt, ...] = (E, S_E1, S_E2 * S_E1)
H2: Tuple[WeylElt, ...] = (E, S_E2, S_E1 * S_E2)
K1: Tuple[WeylElt, ...] = (E, S1, S2 * S1, S1 * S2 * S1, S2 * S1 * S2 * S1,
                           S1 * S2 * S1 * S2 * S1)
K2: Tuple[WeylElt, ...] = (E, S2, S1 * S2, S2 * S1 * S2, S1 * S2 * S1 * S2,
                           S2 * S1 * S2 * S1 * S2)
J: Tuple[WeylElt, ...] = tuple(S0 * w for w in sorted(S3_GROUP.elements,
                                                      key=lambda w: (w.eps, w.perm)))
J1: Tuple[WeylElt, ...] = tuple(S0 * w for w in H1)
J2: Tuple[WeylElt, ...] = tuple(S0 * w for w in H2)

NAMED_SETS: Dict[str, Tuple[WeylElt, ...]] = {
    "H1": H1, "H2": H2, "J": J, "J1": J1, "J2": J2, "K1": K1, "K2": K2,
}


def bruhat_leq(u: WeylElt, w: WeylElt, group: Subgroup) -> bool:
    """Subword criterion for the Bruhat order of the given Coxeter system."""
    if u not in group.elements or w not in group.elements:
        raise ValueError("element outside the named subgroup")
    words = group.words()
    gen_by_name = dict(zip(group.gen_names, group.gens))
    word = [gen_by_name[name] for name in words[w]]
    # All subword products of one reduced word for w form the lower interval.
    lower = {E}
    for g in word:
        lower |= {v * g for v in lower}
    return u in lower


def orbit_antidominant(lam: Weight, group: Subgroup):
    """The antidominant element of the orbit and the map from minimal-length
    coset representatives to their orbit weights."""
    orbit = {}
    for w in group.elements:
        orbit.setdefault(act(w, lam), []).append(w)
    pos_roots = [r for r in POSITIVE_EVEN if REFLECTIONS[r.name] in group.elements]
    anti = [mu for mu in orbit
            if all(coroot_pairing(mu, r.vector) <= 0 for r in pos_roots)]
    if len(anti) != 1:
        raise RuntimeError(f"antidominant element not unique in orbit of {lam}")
    mu = anti[0]
    stab = Subgroup(frozenset(w for w in group.elements if act(w, mu) == mu),
                    group.gens, group.gen_names)
    reps = coset_min_reps(group, stab)
    return mu, {w: act(w, mu) for w in reps}


def coset_min_reps(group: Subgroup, stab: Subgroup) -> List[WeylElt]:
    """Minimal-length representatives of the left cosets w*stab in group."""
    if not stab.elements <= group.elements:
        raise ValueError("stab is not a subgroup of group")
    words = group.words()
    seen = set()
    reps = []
    for w in sorted(group.elements, key=lambda w: (len(words[w]), words[w])):
        coset = frozenset(w * h for h in stab.elements)
        if coset in seen:
            continue
        seen.add(coset)
        others = [v for v in coset if v != w]
        assert all(len(words[v]) > len(words[w]) for v in others), \
            "minimal-length coset representative is not unique"
        reps.append(w)
    return reps

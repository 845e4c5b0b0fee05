"""Weight-space taxonomy of the momentum polytopes.

For three weighted planes the closed parameter sector ``g1 >= g2 >= g3`` with
nonnegative sum splits into eight open regions A..H with a fixed polytope
shape each, separated by transition hyperplanes (coincident weights, a pair
summing to zero, one weight equalling the sum of the others, or a zero total)
that carry their own labels.  Canonicalization records the sorting
permutation and whether a global sign flip was applied; flipped inputs
produce the star-reflected polytope.

Rational weights are classified exactly; floating weights snap to a
transition when within ``tol`` (relative to the largest weight).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import permutations
from typing import Optional, Tuple

from .moment_map import as_gammas
from .su3 import Scalar, all_exact, sgn


class N3Type(Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"
    E = "E"
    F = "F"
    G = "G"
    H = "H"
    AB = "AB"
    AA = "AA"
    AAA = "AAA"
    AAB = "AAB"
    BB = "BB"
    CE = "CE"
    CH = "CH"
    CEFH = "CEFH"
    DD = "DD"
    EF = "EF"
    FG = "FG"
    FGH = "FGH"
    FH = "FH"
    GG = "GG"
    HH = "HH"
    D0 = "D0"
    DD0 = "DD0"
    G0 = "G0"
    GG0 = "GG0"
    DEGENERATE_ZERO_WEIGHT = "DegenerateZeroWeight"

    @property
    def is_generic(self) -> bool:
        return self.value in "ABCDEFGH" and len(self.value) == 1


GENERIC_N3 = tuple(t for t in N3Type if t.is_generic)


class N2Type(Enum):
    GEN_A = "GenA"
    GEN_B = "GenB"
    GEN_C = "GenC"
    GEN_D = "GenD"
    TRANS_E = "TransE"
    TRANS_F = "TransF"
    TRANS_G = "TransG"
    DEGENERATE_ZERO_WEIGHT = "DegenerateZeroWeight"


@dataclass(frozen=True)
class Canonicalization:
    """Sorted, sign-normalised weights plus the bookkeeping to undo it.

    ``sorted_gammas[i] == (-1 if starred else 1) * original[permutation[i]]``.
    """

    sorted_gammas: Tuple[Scalar, ...]
    permutation: Tuple[int, ...]
    starred: bool

    def restore(self) -> Tuple[Scalar, ...]:
        sign = -1 if self.starred else 1
        out = [None] * len(self.sorted_gammas)
        for i, p in enumerate(self.permutation):
            out[p] = sign * self.sorted_gammas[i]
        return tuple(out)


def canonicalize(w, tol: float = 1e-9) -> Canonicalization:
    """Flip all signs when the sum is negative, then sort descending.

    The recorded permutation is the lexicographically smallest one realising
    the descending order.  A sum within ``tol`` of zero (relative scale, for
    floating input) is treated as zero and not flipped.
    """
    g = as_gammas(w, n=3)
    scale = max((abs(x) for x in g), default=0)
    total = g[0] + g[1] + g[2]
    if all_exact(g):
        negative = total < 0
    else:
        negative = total < -tol * max(float(scale), 1.0)
    starred = bool(negative)
    flipped = tuple(-x for x in g) if starred else g
    best: Optional[Tuple[int, ...]] = None
    for perm in permutations(range(3)):
        cand = tuple(flipped[p] for p in perm)
        if all(cand[i] >= cand[i + 1] for i in range(2)) and (best is None or perm < best):
            best = perm
    assert best is not None
    return Canonicalization(tuple(flipped[p] for p in best), best, starred)


@dataclass(frozen=True)
class SignProfile:
    """Snapped signs of the transition quantities for canonical weights."""

    zero_weight: bool
    sum: int  # sign of g1+g2+g3
    e12: bool  # g1 == g2
    e23: bool  # g2 == g3
    t1: bool  # g1 == g2 + g3
    t2: bool  # g2 == g1 + g3
    z23: bool  # g2 + g3 == 0
    z13: bool  # g1 + g3 == 0
    sign_g2: int
    sign_g3: int
    sign_z23: int  # sign of g2 + g3
    sign_t1: int  # sign of g1 - g2 - g3
    sign_t2: int  # sign of g2 - g1 - g3
    sign_z13: int  # sign of g1 + g3


def sign_profile(canonical_gammas, tol: float = 1e-9) -> SignProfile:
    g1, g2, g3 = canonical_gammas
    scale = max(abs(g1), abs(g2), abs(g3), 1)
    exact = all_exact((g1, g2, g3))

    def snap(x) -> int:
        if exact:
            return sgn(x)
        return 0 if abs(x) <= tol * float(scale) else sgn(x)

    return SignProfile(
        zero_weight=any(snap(x) == 0 for x in (g1, g2, g3)),
        sum=snap(g1 + g2 + g3),
        e12=snap(g1 - g2) == 0,
        e23=snap(g2 - g3) == 0,
        t1=snap(g1 - g2 - g3) == 0,
        t2=snap(g2 - g1 - g3) == 0,
        z23=snap(g2 + g3) == 0,
        z13=snap(g1 + g3) == 0,
        sign_g2=snap(g2),
        sign_g3=snap(g3),
        sign_z23=snap(g2 + g3),
        sign_t1=snap(g1 - g2 - g3),
        sign_t2=snap(g2 - g1 - g3),
        sign_z13=snap(g1 + g3),
    )


def _classify_canonical(p: SignProfile) -> N3Type:
    if p.zero_weight:
        return N3Type.DEGENERATE_ZERO_WEIGHT
    if p.sum == 0:
        if p.e12:
            return N3Type.GG0
        if p.e23:
            return N3Type.DD0
        return N3Type.D0 if p.sign_g2 < 0 else N3Type.G0
    # Double transitions first.
    if p.e12 and p.e23:
        return N3Type.AAA
    if p.e12 and p.z13:
        return N3Type.FGH
    if p.e23 and p.t1:
        return N3Type.AAB
    if p.z23 and p.t2:
        return N3Type.CEFH
    # Single transitions.
    if p.e12:
        if p.sign_g3 > 0:
            return N3Type.AA
        return N3Type.HH if p.sign_z23 > 0 else N3Type.GG
    if p.e23:
        if p.sign_g2 < 0:
            return N3Type.DD
        return N3Type.AA if p.sign_t1 < 0 else N3Type.BB
    if p.t1:
        return N3Type.AB
    if p.z23:
        return N3Type.CE if p.sign_t2 < 0 else N3Type.FH
    if p.z13:
        return N3Type.FG
    if p.t2:
        return N3Type.CH if p.sign_z23 > 0 else N3Type.EF
    # Generic regions.
    if p.sign_g3 > 0:
        return N3Type.A if p.sign_t1 < 0 else N3Type.B
    if p.sign_g2 < 0:
        return N3Type.D
    if p.sign_z13 < 0:
        return N3Type.G
    if p.sign_z23 > 0:
        return N3Type.C if p.sign_t2 < 0 else N3Type.H
    return N3Type.E if p.sign_t2 < 0 else N3Type.F


def classify_n3(w, tol: float = 1e-9) -> Tuple[N3Type, Canonicalization]:
    """Polytope type of a weight triple plus its canonicalization."""
    can = canonicalize(w, tol)
    return _classify_canonical(sign_profile(can.sorted_gammas, tol)), can


def classify_n2(w, tol: float = 1e-9) -> N2Type:
    """Segment taxonomy for two weighted planes (after sorting g1 >= g2)."""
    g = as_gammas(w, n=2)
    scale = max(abs(g[0]), abs(g[1]), 1)
    exact = all_exact(g)

    def snap(x) -> int:
        if exact:
            return sgn(x)
        return 0 if abs(x) <= tol * float(scale) else sgn(x)

    g1, g2 = sorted(g, reverse=True)
    if snap(g1) == 0 or snap(g2) == 0:
        return N2Type.DEGENERATE_ZERO_WEIGHT
    if snap(g1 - g2) == 0:
        return N2Type.TRANS_E if snap(g1) > 0 else N2Type.TRANS_G
    if snap(g1 + g2) == 0:
        return N2Type.TRANS_F
    if snap(g2) > 0:
        return N2Type.GEN_A
    if snap(g1) < 0:
        return N2Type.GEN_D
    return N2Type.GEN_B if snap(g1 + g2) > 0 else N2Type.GEN_C

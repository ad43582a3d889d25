"""Which face contributions survive the action of the finite center.

The -1 in the arithmetic group kills a boundary contribution unless the
coefficient weight is invariant, which is a pure parity condition on the
dot-translated weight.  For the minimal parabolic both fundamental
coordinates of w . lam must be even; for a maximal parabolic the Levi
weight (a, n) must have n even, and additionally the orientation module
rules out a = 0 with n/2 odd.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .rootsystem import (
    HighestWeight,
    P0,
    P1,
    P2,
    WeylElement,
    dot_action,
    kostant_set,
    restrict_to_levi,
)


@dataclass(frozen=True)
class SurvivorSets:
    """The surviving Kostant representatives, per parabolic."""

    w0: tuple[WeylElement, ...]
    w1: tuple[WeylElement, ...]
    w2: tuple[WeylElement, ...]


def minimal_parabolic_survives(w: WeylElement, lam: HighestWeight) -> bool:
    """True iff the P0 face line for w survives: both coordinates even."""
    g1, g2 = dot_action(w, lam).fundamental()
    return g1 % 2 == 0 and g2 % 2 == 0


def maximal_parabolic_survives(w: WeylElement, lam: HighestWeight, levi: int) -> bool:
    """True iff the P_levi face block for w survives.

    Needs n even, and for a = 0 also n/2 even (the one-dimensional case picks
    up an extra sign from the orientation of the symmetric space).
    """
    r = restrict_to_levi(w, lam, levi)
    if r.n % 2 != 0:
        return False
    if r.a == 0 and (r.n // 2) % 2 != 0:
        return False
    return True


@lru_cache(maxsize=None)
def survivor_sets(lam: HighestWeight) -> SurvivorSets:
    """All surviving Kostant representatives, ordered by length."""
    lam = lam.sl3_part()
    w0 = tuple(w for w in kostant_set(P0) if minimal_parabolic_survives(w, lam))
    w1 = tuple(w for w in kostant_set(P1) if maximal_parabolic_survives(w, lam, 1))
    w2 = tuple(w for w in kostant_set(P2) if maximal_parabolic_survives(w, lam, 2))
    return SurvivorSets(w0=w0, w1=w1, w2=w2)


def case_classifier(lam: HighestWeight) -> int:
    """The nine parity/vanishing classes of (m1, m2), numbered 1 through 9.

    1: (0, 0); 2: (0, even>0); 3: (even>0, 0); 4: (even>0, even>0);
    5: (even>0, odd); 6: (0, odd); 7: (odd, 0); 8: (odd, even>0);
    9: (odd, odd).
    """
    m1, m2 = lam.m1, lam.m2
    if m1 % 2 == 0 and m2 % 2 == 0:
        if m1 == 0 and m2 == 0:
            return 1
        if m1 == 0:
            return 2
        if m2 == 0:
            return 3
        return 4
    if m1 % 2 == 0 and m2 % 2 == 1:
        return 6 if m1 == 0 else 5
    if m1 % 2 == 1 and m2 % 2 == 0:
        return 7 if m2 == 0 else 8
    return 9

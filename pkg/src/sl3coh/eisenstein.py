"""Eisenstein cohomology, ghost classes, and total cohomology reports.

The Eisenstein part of H^*(SL3(Z), M_lam) is the image of the restriction
to the boundary; it is given by a closed nine-case formula, supported in
degrees 0..3.  Three exact identities tie it to the other routes: its Euler
characteristic equals the homological Euler characteristic, twice it equals
the boundary Euler characteristic, and the total Eisenstein dimensions of a
dual pair of weights are half the total boundary dimensions of the pair.

Ghost classes (boundary classes in the image of restriction but not of
compactly supported classes) vanish except possibly in degree 2 for the
cases (0, odd) and (odd, 0), where a single line remains undetermined.
"""
from __future__ import annotations

from dataclasses import dataclass

from .boundary import (
    GradedProfile,
    boundary_profile,
    case_profile,
    cusp,
    trivial_line,
)
from .euler import sl3_euler_closed
from .parity import case_classifier
from .rootsystem import HighestWeight

ZERO = "Zero"
UNDETERMINED = "UndeterminedZeroOrOne"

GHOST_DEGREES = (0, 1, 2, 3, 4)


@dataclass(frozen=True)
class EisensteinReport:
    """The Eisenstein profile of one weight, with its identity flags."""

    weight: HighestWeight
    profile: GradedProfile
    chi_eis: int
    identities: dict


def eisenstein_case_profile(lam: HighestWeight) -> GradedProfile:
    """The Eisenstein cohomology profile, by the closed nine-case formula."""
    lam = lam.sl3_part()
    m1, m2 = lam.m1, lam.m2
    case = case_classifier(lam)
    if case == 1:
        data = {0: [trivial_line()]}
    elif case == 2:
        data = {3: [cusp(m2 + 2)]}
    elif case == 3:
        data = {3: [cusp(m1 + 2)]}
    elif case == 4:
        data = {3: [trivial_line(), cusp(m1 + 2), cusp(m2 + 2)]}
    elif case == 5:
        data = {2: [cusp(m1 + m2 + 3)], 3: [cusp(m1 + 2)]}
    elif case == 6:
        data = {2: [trivial_line(), cusp(m2 + 3)]}
    elif case == 7:
        data = {2: [trivial_line(), cusp(m1 + 3)]}
    elif case == 8:
        data = {2: [cusp(m1 + m2 + 3)], 3: [cusp(m2 + 2)]}
    else:
        data = {}
    return GradedProfile.build(case, data)


def verify_identities(lam: HighestWeight) -> dict:
    """The three exact identities linking Eisenstein, boundary, and Euler."""
    lam = lam.sl3_part()
    dual = lam.dual()
    eis = eisenstein_case_profile(lam)
    eis_dual = eisenstein_case_profile(dual)
    bd = case_profile(lam)
    bd_dual = case_profile(dual)
    return {
        "chi_eis_equals_chi_h": eis.euler_characteristic()
        == sl3_euler_closed(lam),
        "half_boundary": 2 * eis.euler_characteristic()
        == bd.euler_characteristic(),
        "poincare_pair": 2 * (eis.total_dimension() + eis_dual.total_dimension())
        == bd.total_dimension() + bd_dual.total_dimension(),
    }


def eisenstein_profile(lam: HighestWeight) -> EisensteinReport:
    """The Eisenstein report for one weight (profile, chi, identity flags)."""
    sl3 = lam.sl3_part()
    profile = eisenstein_case_profile(sl3)
    return EisensteinReport(
        weight=lam,
        profile=profile,
        chi_eis=profile.euler_characteristic(),
        identities=verify_identities(sl3),
    )


@dataclass(frozen=True)
class GhostReport:
    """Ghost class status per degree 0..4."""

    weight: HighestWeight
    by_degree: tuple[tuple[int, str], ...]

    def status(self, q: int) -> str:
        return dict(self.by_degree)[q]


def ghost_report(lam: HighestWeight) -> GhostReport:
    """Ghost statuses: zero everywhere, except degree 2 in cases 6 and 7.

    There a single candidate line (restricted from the minimal face) may or
    may not survive; its status is reported as undetermined, never silently
    resolved.
    """
    case = case_classifier(lam.sl3_part())
    statuses = []
    for q in GHOST_DEGREES:
        if q == 2 and case in (6, 7):
            statuses.append((q, UNDETERMINED))
        else:
            statuses.append((q, ZERO))
    return GhostReport(weight=lam, by_degree=tuple(statuses))


@dataclass(frozen=True)
class TotalCohomology:
    """Eisenstein part plus what is known about the inner part.

    For non-self-dual weights the inner part vanishes and the Eisenstein
    part is the whole cohomology.  For self-dual weights (m1 = m2) the
    inner part is unknown beyond the stated lower bound (zero), so the
    profile is a lower bound only.
    """

    weight: HighestWeight
    group: str
    eisenstein: GradedProfile
    inner_lower_bound: GradedProfile
    self_dual: bool
    inner_known: bool


def total_cohomology(lam: HighestWeight, group: str = "sl3") -> TotalCohomology:
    """Assemble the total-cohomology report for SL3(Z) or GL3(Z)."""
    if group not in ("sl3", "gl3"):
        raise ValueError(f"group must be 'sl3' or 'gl3', got {group!r}")
    self_dual = lam.m1 == lam.m2
    empty = GradedProfile.build(case_classifier(lam.sl3_part()), {})
    if group == "gl3":
        if lam.m3 is None:
            raise ValueError("a GL3 weight needs a determinant power m3")
        if (lam.m1 + lam.m3) % 2 != 0:
            # odd central character: everything vanishes, nothing is open
            return TotalCohomology(
                weight=lam,
                group=group,
                eisenstein=empty,
                inner_lower_bound=empty,
                self_dual=self_dual,
                inner_known=True,
            )
    else:
        if lam.m3 is not None:
            raise ValueError("an SL3 weight must not carry a determinant power")
    eis = eisenstein_case_profile(lam.sl3_part())
    return TotalCohomology(
        weight=lam,
        group=group,
        eisenstein=eis,
        inner_lower_bound=empty,
        self_dual=self_dual,
        inner_known=not self_dual,
    )


def gl3_vanishes(lam: HighestWeight) -> bool:
    """True iff all GL3(Z) cohomology of M_lam vanishes (odd central character)."""
    if lam.m3 is None:
        raise ValueError("a GL3 weight needs a determinant power m3")
    return (lam.m1 + lam.m3) % 2 != 0


__all__ = [
    "EisensteinReport",
    "GhostReport",
    "TotalCohomology",
    "ZERO",
    "UNDETERMINED",
    "GHOST_DEGREES",
    "eisenstein_case_profile",
    "eisenstein_profile",
    "verify_identities",
    "ghost_report",
    "total_cohomology",
    "gl3_vanishes",
]

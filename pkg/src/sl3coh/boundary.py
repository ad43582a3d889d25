"""Cohomology of the boundary of the Borel-Serre compactification for SL3(Z).

The boundary is glued from three face types (one per standard parabolic
class).  The Mayer-Vietoris style spectral sequence has two columns: column
0 carries the two maximal-parabolic faces, column 1 the minimal one, each
graded by Kostant representative.  The only differential d1 is computed by
an explicit rank rule, and E2 = E_infinity gives the boundary cohomology in
degrees 0..4.

The result is also available as a closed case formula (case_profile); the
spectral sequence assembly asserts agreement by default.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .gl2 import ACTUAL, EULER, GL2Weight, dim_cusp_forms, h1_split
from .parity import case_classifier, survivor_sets
from .rootsystem import HighestWeight, restrict_to_levi

TRIVIAL = "TrivialLine"
CUSP = "Cusp"
GHOST = "GhostCandidateLine"
_KIND_ORDER = {TRIVIAL: 0, CUSP: 1, GHOST: 2}


@dataclass(frozen=True)
class CohomologySummand:
    """A multiplicity of one irreducible building block.

    TrivialLine is a one-dimensional piece, Cusp carries the weight-k
    level-one cusp forms (k in the field k), GhostCandidateLine marks a
    line whose presence is not determined.
    """

    kind: str
    k: int | None = None
    mult: int = 1

    def __post_init__(self) -> None:
        if self.kind not in _KIND_ORDER:
            raise ValueError(f"unknown summand kind {self.kind!r}")
        if (self.kind == CUSP) != (self.k is not None):
            raise ValueError("Cusp summands carry a weight k; others must not")
        if self.mult < 1:
            raise ValueError(f"multiplicity must be >= 1, got {self.mult}")

    def dimension(self, convention: str = ACTUAL) -> int:
        if self.kind == TRIVIAL:
            return self.mult
        if self.kind == CUSP:
            return self.mult * dim_cusp_forms(self.k, convention)
        raise ValueError("a GhostCandidateLine has no determined dimension")


def trivial_line(mult: int = 1) -> CohomologySummand:
    return CohomologySummand(TRIVIAL, mult=mult)


def cusp(k: int, mult: int = 1) -> CohomologySummand:
    return CohomologySummand(CUSP, k=k, mult=mult)


def _merge(summands) -> tuple[CohomologySummand, ...]:
    """Collect multiplicities and sort into the canonical order."""
    acc: dict[tuple[str, int | None], int] = {}
    for s in summands:
        key = (s.kind, s.k)
        acc[key] = acc.get(key, 0) + s.mult
    out = [
        CohomologySummand(kind, k=k, mult=m)
        for (kind, k), m in acc.items()
        if m > 0
    ]
    out.sort(key=lambda s: (_KIND_ORDER[s.kind], s.k or 0))
    return tuple(out)


@dataclass(frozen=True)
class GradedProfile:
    """A graded sum of summands, degrees with no summands omitted."""

    by_degree: tuple[tuple[int, tuple[CohomologySummand, ...]], ...]
    case_id: int

    @classmethod
    def build(cls, case_id: int, data: dict) -> "GradedProfile":
        items = []
        for q in sorted(data):
            merged = _merge(data[q])
            if merged:
                items.append((q, merged))
        return cls(by_degree=tuple(items), case_id=case_id)

    def degrees(self) -> tuple[int, ...]:
        return tuple(q for q, _ in self.by_degree)

    def summands(self, q: int) -> tuple[CohomologySummand, ...]:
        for deg, s in self.by_degree:
            if deg == q:
                return s
        return ()

    def dimension(self, q: int, convention: str = ACTUAL) -> int:
        return sum(s.dimension(convention) for s in self.summands(q))

    def total_dimension(self, convention: str = ACTUAL) -> int:
        return sum(self.dimension(q, convention) for q in self.degrees())

    def euler_characteristic(self, convention: str = ACTUAL) -> int:
        return sum(
            (-1) ** q * self.dimension(q, convention) for q in self.degrees()
        )

    def multiset(self, q: int) -> dict:
        """Summand multiplicities at degree q, for order-free comparison."""
        return {(s.kind, s.k): s.mult for s in self.summands(q)}


@dataclass(frozen=True)
class E1Term:
    """One face contribution on the E1 page.

    parabolic and w name the face and its Kostant representative;
    face_degree is the cohomological degree along the face (0 for invariant
    lines, 1 for the modular-curve H^1 blocks), so the term lives in total
    degree length(w) + face_degree.
    """

    parabolic: str
    w: str
    face_degree: int
    summands: tuple[CohomologySummand, ...]

    def trivial_lines(self) -> int:
        return sum(s.mult for s in self.summands if s.kind == TRIVIAL)


@dataclass(frozen=True)
class E1Page:
    """The two-column E1 page, each column keyed by total degree."""

    col0: tuple[tuple[int, tuple[E1Term, ...]], ...]
    col1: tuple[tuple[int, tuple[E1Term, ...]], ...]

    def column(self, p: int) -> dict:
        if p not in (0, 1):
            raise ValueError(f"columns are 0 and 1, got {p}")
        return dict(self.col0 if p == 0 else self.col1)


@lru_cache(maxsize=None)
def e1_page(lam: HighestWeight) -> E1Page:
    """Assemble the E1 page from the surviving face contributions."""
    lam = lam.sl3_part()
    sets = survivor_sets(lam)
    col0: dict[int, list[E1Term]] = {}
    col1: dict[int, list[E1Term]] = {}
    for w in sets.w0:
        col1.setdefault(w.length, []).append(
            E1Term("P0", w.name, 0, (trivial_line(),))
        )
    for levi, tag, wset in ((1, "P1", sets.w1), (2, "P2", sets.w2)):
        for w in wset:
            r = restrict_to_levi(w, lam, levi)
            if r.a == 0:
                col0.setdefault(w.length, []).append(
                    E1Term(tag, w.name, 0, (trivial_line(),))
                )
                continue
            split = h1_split(GL2Weight(r.a, r.n))
            summands = [cusp(r.a + 2)]
            if split["eisenstein_dim"]:
                summands.append(trivial_line())
            col0.setdefault(w.length + 1, []).append(
                E1Term(tag, w.name, 1, tuple(summands))
            )
    assert all(0 <= q <= 3 for q in col0), col0
    assert all(0 <= q <= 3 for q in col1), col1
    return E1Page(
        col0=tuple((q, tuple(col0[q])) for q in sorted(col0)),
        col1=tuple((q, tuple(col1[q])) for q in sorted(col1)),
    )


def d1_rank(lam: HighestWeight, q: int) -> int:
    """Rank of d1 out of column 0 in total degree q.

    The target is the (at most one) surviving minimal-face line in degree q;
    the map is onto it as soon as column 0 contributes any invariant line or
    Eisenstein line in the same degree.  Cusp summands never hit it.
    """
    page = e1_page(lam.sl3_part())
    targets = len(page.column(1).get(q, ()))
    assert targets <= 1, (lam, q, targets)
    sources = sum(t.trivial_lines() for t in page.column(0).get(q, ()))
    return 1 if targets and sources else 0


def boundary_profile(lam: HighestWeight, cross_check: bool = True) -> GradedProfile:
    """H^*(boundary) in degrees 0..4 via the spectral sequence.

    With cross_check (the default) the result is asserted equal to the
    closed case formula.
    """
    lam = lam.sl3_part()
    page = e1_page(lam)
    col0 = page.column(0)
    col1 = page.column(1)
    e2_0: dict[int, list[CohomologySummand]] = {}
    e2_1: dict[int, int] = {}
    for q in range(4):
        rank = d1_rank(lam, q)
        summands = [s for t in col0.get(q, ()) for s in t.summands]
        if rank:
            # quotient by the image: remove one of the mapping lines
            for idx, s in enumerate(summands):
                if s.kind == TRIVIAL:
                    if s.mult > 1:
                        summands[idx] = trivial_line(s.mult - 1)
                    else:
                        del summands[idx]
                    break
            else:
                raise AssertionError(f"rank 1 with no line to map at {lam}, q={q}")
        if summands:
            e2_0[q] = summands
        lines = len(col1.get(q, ())) - rank
        if lines:
            e2_1[q] = lines
    by_degree: dict[int, list[CohomologySummand]] = {}
    for k in range(5):
        parts = list(e2_0.get(k, []))
        if e2_1.get(k - 1):
            parts.append(trivial_line(e2_1[k - 1]))
        if parts:
            by_degree[k] = parts
    profile = GradedProfile.build(case_classifier(lam), by_degree)
    if cross_check:
        expected = case_profile(lam)
        assert profile == expected, (lam, profile, expected)
    return profile


@lru_cache(maxsize=None)
def case_profile(lam: HighestWeight) -> GradedProfile:
    """H^*(boundary) by the closed nine-case formula."""
    lam = lam.sl3_part()
    m1, m2 = lam.m1, lam.m2
    case = case_classifier(lam)
    if case == 1:
        data = {0: [trivial_line()], 4: [trivial_line()]}
    elif case == 2:
        data = {1: [cusp(m2 + 2)], 3: [cusp(m2 + 2)]}
    elif case == 3:
        data = {1: [cusp(m1 + 2)], 3: [cusp(m1 + 2)]}
    elif case == 4:
        block = [trivial_line(), cusp(m1 + 2), cusp(m2 + 2)]
        data = {1: block, 3: list(block)}
    elif case == 5:
        data = {
            1: [cusp(m1 + 2)],
            2: [cusp(m1 + m2 + 3, mult=2)],
            3: [cusp(m1 + 2)],
        }
    elif case == 6:
        data = {2: [cusp(m2 + 3, mult=2), trivial_line(2)]}
    elif case == 7:
        data = {2: [cusp(m1 + 3, mult=2), trivial_line(2)]}
    elif case == 8:
        data = {
            1: [cusp(m2 + 2)],
            2: [cusp(m1 + m2 + 3, mult=2)],
            3: [cusp(m2 + 2)],
        }
    else:
        data = {}
    return GradedProfile.build(case, data)


def boundary_euler_closed(lam: HighestWeight) -> int:
    """chi(boundary) in closed form, by parity of (m1, m2)."""
    m1, m2 = lam.m1, lam.m2
    if m1 % 2 == 0 and m2 % 2 == 0:
        return -2 * (
            1 + dim_cusp_forms(m1 + 2, EULER) + dim_cusp_forms(m2 + 2, EULER)
        )
    if m1 % 2 == 0:
        return 2 * (
            dim_cusp_forms(m1 + m2 + 3, EULER) - dim_cusp_forms(m1 + 2, EULER)
        )
    if m2 % 2 == 0:
        return 2 * (
            dim_cusp_forms(m1 + m2 + 3, EULER) - dim_cusp_forms(m2 + 2, EULER)
        )
    return 0

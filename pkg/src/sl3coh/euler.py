"""Homological Euler characteristics of SL3(Z) and GL3(Z).

Two routes for chi_h(SL3(Z), M_(m1,m2)):

* sl3_euler_wall: the rational sum over torsion classes, each contributing
  (centralizer Euler characteristic) x (class count) x (trace on M);
* sl3_euler_closed: the closed form in cusp form dimensions, organized by
  the parities of (m1, m2), with the dim S_2 = -1 convention.

The closed form is periodic-plus-linear in (m1, m2) mod 12, which gives the
12 x 12 table of symbolic cells; euler_table evaluates cells over a numeric
sweep.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .gl2 import EULER, dim_cusp_forms
from .rootsystem import HighestWeight
from .traces import SL3_TORSION_CLASSES, closed_trace


def sl3_euler_wall(lam: HighestWeight) -> int:
    """chi_h(SL3(Z), M_lam) as the rational sum over torsion classes."""
    total = Fraction(0)
    for cls in SL3_TORSION_CLASSES:
        if cls.order == 0:
            continue  # identity class: centralizer chi is 0
        total += cls.centralizer_chi * cls.resultant * closed_trace(
            lam.m1, lam.m2, 0, cls.order
        )
    assert total.denominator == 1, (lam, total)
    return int(total)


def sl3_euler_closed(lam: HighestWeight) -> int:
    """chi_h(SL3(Z), M_lam) in cusp form dimensions, by parity of (m1, m2)."""
    m1, m2 = lam.m1, lam.m2
    if m1 % 2 == 0 and m2 % 2 == 0:
        return -1 - dim_cusp_forms(m1 + 2, EULER) - dim_cusp_forms(m2 + 2, EULER)
    if m1 % 2 == 0:
        return -dim_cusp_forms(m1 + 2, EULER) + dim_cusp_forms(m1 + m2 + 3, EULER)
    if m2 % 2 == 0:
        return -dim_cusp_forms(m2 + 2, EULER) + dim_cusp_forms(m1 + m2 + 3, EULER)
    return 0


def gl3_euler(lam: HighestWeight) -> int:
    """chi_h(GL3(Z), M_lam): zero for odd central character, else the SL3 value."""
    if lam.m3 is None:
        raise ValueError("GL3 Euler characteristic needs a determinant power m3")
    if (lam.m1 + lam.m3) % 2 != 0:
        return 0
    return sl3_euler_closed(lam.sl3_part())


@dataclass(frozen=True)
class SymbolicCell:
    """One cell of the 12 x 12 Euler table.

    kind "sum" evaluates to -(m1 + m2 - offset)/12 + shift, "m1" to
    (m1 - offset)/12 + shift, "m2" to (m2 - offset)/12 + shift, and "zero"
    to 0.  The division is always exact for weights with the cell's
    residues.
    """

    kind: str
    offset: int = 0
    shift: int = 0

    def evaluate(self, m1: int, m2: int) -> int:
        if self.kind == "zero":
            return 0
        if self.kind == "sum":
            num = -(m1 + m2 - self.offset)
        elif self.kind == "m1":
            num = m1 - self.offset
        elif self.kind == "m2":
            num = m2 - self.offset
        else:
            raise ValueError(f"unknown cell kind {self.kind!r}")
        assert num % 12 == 0, (self, m1, m2)
        return num // 12 + self.shift

    def render(self) -> str:
        if self.kind == "zero":
            return "0"
        if self.kind == "sum":
            body = "-(m1+m2)/12" if self.offset == 0 else f"-(m1+m2-{self.offset})/12"
        elif self.kind == "m1":
            body = f"(m1-{self.offset})/12"
        else:
            body = f"(m2-{self.offset})/12"
        if self.shift > 0:
            return f"{body} + {self.shift}"
        if self.shift < 0:
            return f"{body} - {-self.shift}"
        return body


def symbolic_cell(i: int, j: int) -> SymbolicCell:
    """The Euler table cell for m1 = i, m2 = j mod 12."""
    if not (0 <= i < 12 and 0 <= j < 12):
        raise ValueError(f"residues must be in 0..11, got ({i}, {j})")
    if i % 2 == 1 and j % 2 == 1:
        return SymbolicCell("zero")
    if i % 2 == 0 and j % 2 == 0:
        shift = -(1 + dim_cusp_forms(i + 2, EULER) + dim_cusp_forms(j + 2, EULER))
        return SymbolicCell("sum", offset=i + j, shift=shift)
    if i % 2 == 0:
        shift = dim_cusp_forms(i + j + 3, EULER) - dim_cusp_forms(i + 2, EULER)
        return SymbolicCell("m2", offset=j, shift=shift)
    shift = dim_cusp_forms(i + j + 3, EULER) - dim_cusp_forms(j + 2, EULER)
    return SymbolicCell("m1", offset=i, shift=shift)


def symbolic_table() -> list[list[SymbolicCell]]:
    """All 144 cells, rows indexed by m1 mod 12, columns by m2 mod 12."""
    return [[symbolic_cell(i, j) for j in range(12)] for i in range(12)]


@dataclass(frozen=True)
class EulerCell:
    """One evaluated entry of a numeric Euler sweep."""

    m1: int
    m2: int
    value: int
    symbolic: str


def euler_table(m1_max: int, m2_max: int) -> list[list[EulerCell]]:
    """chi_h over the rectangle 0 <= m1 <= m1_max, 0 <= m2 <= m2_max."""
    if m1_max < 0 or m2_max < 0:
        raise ValueError("sweep bounds must be >= 0")
    out = []
    for m1 in range(m1_max + 1):
        row = []
        for m2 in range(m2_max + 1):
            cell = symbolic_cell(m1 % 12, m2 % 12)
            row.append(
                EulerCell(
                    m1=m1,
                    m2=m2,
                    value=cell.evaluate(m1, m2),
                    symbolic=cell.render(),
                )
            )
        out.append(row)
    return out


@dataclass(frozen=True)
class EulerReport:
    """Both Euler routes for one weight, plus its table cell."""

    weight: HighestWeight
    chi_wall: int
    chi_closed: int
    table_cell: tuple[int, int, str]


def euler_report(lam: HighestWeight) -> EulerReport:
    """Compute both routes and the table cell; they must agree."""
    sl3 = lam.sl3_part()
    wall = sl3_euler_wall(sl3)
    closed = sl3_euler_closed(sl3)
    cell = symbolic_cell(sl3.m1 % 12, sl3.m2 % 12)
    value = cell.evaluate(sl3.m1, sl3.m2)
    assert wall == closed == value, (lam, wall, closed, value)
    return EulerReport(
        weight=lam,
        chi_wall=wall,
        chi_closed=closed,
        table_cell=(sl3.m1 % 12, sl3.m2 % 12, cell.render()),
    )

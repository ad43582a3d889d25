"""Exact traces of finite-order elements on irreducible SL3/GL3 modules.

Three independent routes compute the trace of an order-k element
(k in {2, 3, 4, 6}, eigenvalues 1, zeta_k, zeta_k^-1) on the module with
highest weight (m1, m2, m3):

* gt_trace: the triple sum over the integral basis of the module, each
  basis vector contributing zeta_k^(2q - p1 - p2), accumulated in Z[zeta_k];
* closed_trace: periodicity tables in (m1 mod k, m2 mod k), plus the
  symbolic k = 2 form;
* weyl_det_trace: a 2x2 determinant in complete homogeneous symmetric sums
  of the eigenvalues (the one-row traces), with H_{-1} = 0.

All three are independent implementations; the verification suite and the
acceptance tests pin them against each other.  Traces do not depend on m3
for determinant-one elements, so the closed and determinant routes take
(m1, m2) only.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

# Euler phi for the orders with integer or quadratic cyclotomic rings
_PHI = {1: 1, 2: 1, 3: 2, 4: 2, 6: 2}

# x^2 reduced mod the cyclotomic polynomial, as (const, linear) coefficients
_X_SQUARED = {3: (-1, -1), 4: (-1, 0), 6: (-1, 1)}

# zeta_k^e for e = 0..k-1, as coefficient tuples
_ZETA_POWERS = {
    1: ((1,),),
    2: ((1,), (-1,)),
    3: ((1, 0), (0, 1), (-1, -1)),
    4: ((1, 0), (0, 1), (-1, 0), (0, -1)),
    6: ((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)),
}


@dataclass(frozen=True)
class CyclotomicInt:
    """An element of Z[zeta_k] for k in {1, 2, 3, 4, 6}.

    coefficients has length phi(k): the constant term, then the coefficient
    of zeta_k.
    """

    order: int
    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.order not in _PHI:
            raise ValueError(f"order must be one of 1, 2, 3, 4, 6, got {self.order!r}")
        if len(self.coefficients) != _PHI[self.order]:
            raise ValueError(
                f"order {self.order} needs {_PHI[self.order]} coefficients, "
                f"got {len(self.coefficients)}"
            )

    @classmethod
    def zero(cls, order: int) -> "CyclotomicInt":
        return cls(order, (0,) * _PHI[order])

    @classmethod
    def integer(cls, order: int, value: int) -> "CyclotomicInt":
        return cls(order, (value,) + (0,) * (_PHI[order] - 1))

    @classmethod
    def zeta_power(cls, order: int, e: int) -> "CyclotomicInt":
        return cls(order, _ZETA_POWERS[order][e % order])

    def _check(self, other: "CyclotomicInt") -> None:
        if self.order != other.order:
            raise ValueError(f"mixed orders {self.order} and {other.order}")

    def __add__(self, other: "CyclotomicInt") -> "CyclotomicInt":
        self._check(other)
        return CyclotomicInt(
            self.order,
            tuple(a + b for a, b in zip(self.coefficients, other.coefficients)),
        )

    def __sub__(self, other: "CyclotomicInt") -> "CyclotomicInt":
        self._check(other)
        return CyclotomicInt(
            self.order,
            tuple(a - b for a, b in zip(self.coefficients, other.coefficients)),
        )

    def __neg__(self) -> "CyclotomicInt":
        return CyclotomicInt(self.order, tuple(-a for a in self.coefficients))

    def scale(self, c: int) -> "CyclotomicInt":
        return CyclotomicInt(self.order, tuple(c * a for a in self.coefficients))

    def __mul__(self, other: "CyclotomicInt") -> "CyclotomicInt":
        self._check(other)
        if _PHI[self.order] == 1:
            return CyclotomicInt(
                self.order, (self.coefficients[0] * other.coefficients[0],)
            )
        a0, a1 = self.coefficients
        b0, b1 = other.coefficients
        sq0, sq1 = _X_SQUARED[self.order]
        c0 = a0 * b0
        c1 = a0 * b1 + a1 * b0
        c2 = a1 * b1
        return CyclotomicInt(self.order, (c0 + c2 * sq0, c1 + c2 * sq1))

    def power(self, e: int) -> "CyclotomicInt":
        if e < 0:
            raise ValueError(f"exponent must be >= 0, got {e}")
        out = CyclotomicInt.integer(self.order, 1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def is_integer(self) -> bool:
        return all(c == 0 for c in self.coefficients[1:])

    def to_int(self) -> int:
        """The value as a rational integer; fails if it is not one."""
        if not self.is_integer():
            raise ValueError(f"{self} is not a rational integer")
        return self.coefficients[0]


@dataclass(frozen=True)
class TorsionClass:
    """A conjugacy class of finite-order elements in SL3(Z).

    label names the class by the cyclotomic factorization of its
    characteristic polynomial; centralizer_chi is the Euler characteristic
    of the centralizer, resultant the number of classes sharing the
    polynomial; order is the element order driving the trace (0 for the
    identity class, whose trace term drops out of the Euler sum).
    """

    label: str
    centralizer_chi: Fraction
    resultant: int
    order: int


SL3_TORSION_CLASSES: tuple[TorsionClass, ...] = (
    TorsionClass("phi1^3", Fraction(0), 0, 0),
    TorsionClass("phi1*phi2^2", Fraction(-1, 24), 4, 2),
    TorsionClass("phi1*phi3", Fraction(1, 6), 3, 3),
    TorsionClass("phi1*phi4", Fraction(1, 4), 2, 4),
    TorsionClass("phi1*phi6", Fraction(1, 6), 1, 6),
)


def _check_weight(m1: int, m2: int, m3: int = 0) -> None:
    if m1 < 0 or m2 < 0:
        raise ValueError(f"weight must be dominant, got ({m1}, {m2}, {m3})")


def _check_order(k: int) -> None:
    if k not in (2, 3, 4, 6):
        raise ValueError(f"order must be one of 2, 3, 4, 6, got {k!r}")


def gt_trace(m1: int, m2: int, m3: int, k: int) -> int:
    """Trace of the order-k element via the triple sum, exactly.

    The summand zeta_k^(2q - p1 - p2) only depends on d = p1 - p2 and on
    q - p2, so the triple sum collapses to a sum over d of (number of
    (p1, p2) pairs at distance d) times (sum over one inner run), both
    computed by elementary interval counting and accumulated per residue
    class in Z[zeta_k].
    """
    _check_weight(m1, m2, m3)
    _check_order(k)
    lo1, hi1 = m2 + m3, m1 + m2 + m3
    lo2, hi2 = m3, m2 + m3
    # residue counts of the final element of Z[zeta_k]
    counts = [0] * k
    period = k // 2 if k % 2 == 0 else k
    for d in range(0, m1 + m2 + 1):
        pairs = min(hi2, hi1 - d) - max(lo2, lo1 - d) + 1
        if pairs <= 0:
            continue
        # inner run: sum over j = q - p2 in [0, d] of zeta^(2j - d);
        # the exponent pattern repeats with period k / gcd(2, k)
        for r in range(min(period, d + 1)):
            e = (2 * r - d) % k
            counts[e] += pairs * ((d - r) // period + 1)
    total = CyclotomicInt.zero(k)
    for e, c in enumerate(counts):
        if c:
            total = total + CyclotomicInt.zeta_power(k, e).scale(c)
    return total.to_int()


def gt_character(
    m1: int,
    m2: int,
    m3: int,
    t1: CyclotomicInt,
    t2: CyclotomicInt,
    t3: CyclotomicInt,
) -> CyclotomicInt:
    """Character value at diag(t1, t2, t3) by direct basis enumeration.

    Each basis vector of the (m1, m2, m3) module has weight
    (q, p1 + p2 - q, m1 + 2 m2 + 3 m3 - p1 - p2).  Cubic in the weight, so
    only for small m; the grouped gt_trace is the production route.
    """
    _check_weight(m1, m2, m3)
    lam_sum = m1 + 2 * m2 + 3 * m3
    total = CyclotomicInt.zero(t1.order)
    for p1 in range(m2 + m3, m1 + m2 + m3 + 1):
        for p2 in range(m3, m2 + m3 + 1):
            for q in range(p2, p1 + 1):
                total = total + t1.power(q) * t2.power(p1 + p2 - q) * t3.power(
                    lam_sum - p1 - p2
                )
    return total


def ck_sum(p1: int, p2: int, k: int) -> int:
    """Closed form of the inner run sum_{q=p2}^{p1} zeta_k^(2q - p1 - p2)."""
    if p1 < p2:
        raise ValueError(f"need p1 >= p2, got ({p1}, {p2})")
    _check_order(k)
    d = p1 - p2
    if k == 2:
        return d + 1 if (p1 + p2) % 2 == 0 else -(d + 1)
    if k == 3:
        return (1, -1, 0)[d % 3]
    if k == 4:
        return (1, 0, -1, 0)[d % 4]
    return (1, 1, 0, -1, -1, 0)[d % 6]


# trace periodicity tables, indexed [m1 mod k][m2 mod k]
M6 = (
    (1, 2, 2, 1, 0, 0),
    (2, 3, 2, 0, -1, 0),
    (2, 2, 0, -2, -2, 0),
    (1, 0, -2, -3, -2, 0),
    (0, -1, -2, -2, -1, 0),
    (0, 0, 0, 0, 0, 0),
)
M4 = (
    (1, 1, 0, 0),
    (1, 0, -1, 0),
    (0, -1, -1, 0),
    (0, 0, 0, 0),
)
M3 = (
    (1, 0, 0),
    (0, -1, 0),
    (0, 0, 0),
)


def closed_trace(m1: int, m2: int, m3: int, k: int) -> int:
    """Trace of the order-k element from the periodicity tables.

    k = 3, 4, 6 depend only on (m1 mod k, m2 mod k); k = 2 is polynomial in
    (m1, m2) on each parity class.  m3 never enters (the elements have
    determinant one).
    """
    _check_weight(m1, m2, m3)
    _check_order(k)
    if k == 6:
        return M6[m1 % 6][m2 % 6]
    if k == 4:
        return M4[m1 % 4][m2 % 4]
    if k == 3:
        return M3[m1 % 3][m2 % 3]
    if m1 % 2 == 0 and m2 % 2 == 0:
        return 1 + (m1 + m2) // 2
    if m1 % 2 == 0:
        return -(m2 + 1) // 2
    if m2 % 2 == 0:
        return -(m1 + 1) // 2
    return 0


@lru_cache(maxsize=None)
def _h_row(m: int, k: int) -> int:
    """Complete homogeneous symmetric sum h_m(1, zeta_k, zeta_k^-1).

    Computed by honest monomial enumeration in Z[zeta_k], with h_m = 0 for
    m < 0.  Always a rational integer (the sum is Galois stable).
    """
    if m < 0:
        return 0
    counts = [0] * k
    for b in range(m + 1):
        for c in range(m + 1 - b):
            counts[(b - c) % k] += 1
    total = CyclotomicInt.zero(k)
    for e, cnt in enumerate(counts):
        if cnt:
            total = total + CyclotomicInt.zeta_power(k, e).scale(cnt)
    return total.to_int()


def weyl_det_trace(m1: int, m2: int, k: int) -> int:
    """Trace of the order-k element as a 2x2 determinant of one-row traces.

    H_{m1,m2} = H_{m1+m2} H_{m2} - H_{m1+m2+1} H_{m2-1}, where H_m is the
    trace on the m-th symmetric power of the standard module.
    """
    _check_weight(m1, m2)
    _check_order(k)
    return _h_row(m1 + m2, k) * _h_row(m2, k) - _h_row(m1 + m2 + 1, k) * _h_row(
        m2 - 1, k
    )

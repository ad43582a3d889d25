"""Cyclotomic integer arithmetic and the three trace routes."""
import pytest
from hypothesis import given, strategies as st

from sl3coh.traces import (
    CyclotomicInt,
    SL3_TORSION_CLASSES,
    ck_sum,
    closed_trace,
    gt_character,
    gt_trace,
    weyl_det_trace,
)

ORDERS = (1, 2, 3, 4, 6)
TRACE_ORDERS = (2, 3, 4, 6)


def _elements(order):
    coeff = st.integers(min_value=-9, max_value=9)
    width = 1 if order in (1, 2) else 2
    return st.tuples(*([coeff] * width)).map(lambda c: CyclotomicInt(order, c))


@pytest.mark.parametrize("order", ORDERS)
def test_zeta_power_table_matches_repeated_multiplication(order):
    z = CyclotomicInt.zeta_power(order, 1)
    for e in range(2 * order + 1):
        assert CyclotomicInt.zeta_power(order, e) == z.power(e)
    assert z.power(order) == CyclotomicInt.integer(order, 1)


def test_sixth_root_satisfies_its_minimal_polynomial():
    z = CyclotomicInt.zeta_power(6, 1)
    one = CyclotomicInt.integer(6, 1)
    assert z * z - z + one == CyclotomicInt.zero(6)


def _same_order_triples():
    return st.sampled_from(ORDERS).flatmap(
        lambda order: st.tuples(_elements(order), _elements(order), _elements(order))
    )


@given(_same_order_triples())
def test_ring_laws(xyz):
    x, y, z = xyz
    zero = CyclotomicInt.zero(x.order)
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x - x == zero
    assert x + (-x) == zero
    assert x.scale(3) == x + x + x


def test_cyclotomic_validation():
    with pytest.raises(ValueError):
        CyclotomicInt(5, (1, 0))
    with pytest.raises(ValueError):
        CyclotomicInt(6, (1,))
    with pytest.raises(ValueError):
        CyclotomicInt.integer(3, 1) + CyclotomicInt.integer(4, 1)
    with pytest.raises(ValueError):
        CyclotomicInt.zeta_power(6, 1).power(-1)
    with pytest.raises(ValueError):
        CyclotomicInt(6, (1, 2)).to_int()
    assert CyclotomicInt(4, (7, 0)).to_int() == 7
    assert CyclotomicInt(1, (5,)).is_integer()


def test_six_consecutive_even_powers_cancel():
    # three consecutive zeta^(l+2j) + zeta^(-(l+2j)) sum to zero; this is
    # what makes the inner run of the triple sum periodic for k = 6
    for ell in range(6):
        total = CyclotomicInt.zero(6)
        for j in (1, 2, 3):
            e = ell + 2 * j
            total = total + CyclotomicInt.zeta_power(6, e)
            total = total + CyclotomicInt.zeta_power(6, -e)
        assert total == CyclotomicInt.zero(6)


def test_dimension_from_character_at_identity():
    one = CyclotomicInt.integer(1, 1)
    for m1 in range(5):
        for m2 in range(5):
            dim = gt_character(m1, m2, 0, one, one, one).to_int()
            assert 2 * dim == (m1 + 1) * (m2 + 1) * (m1 + m2 + 2)


@pytest.mark.parametrize("k", TRACE_ORDERS)
@pytest.mark.parametrize("m3", [0, 1])
def test_grouped_trace_matches_direct_character(k, m3):
    t1 = CyclotomicInt.integer(k, 1)
    t2 = CyclotomicInt.zeta_power(k, 1)
    t3 = CyclotomicInt.zeta_power(k, k - 1)
    for m1 in range(6):
        for m2 in range(6):
            direct = gt_character(m1, m2, m3, t1, t2, t3).to_int()
            assert gt_trace(m1, m2, m3, k) == direct


def test_three_routes_agree_on_a_grid():
    for k in TRACE_ORDERS:
        for m1 in range(13):
            for m2 in range(13):
                value = gt_trace(m1, m2, 0, k)
                assert value == closed_trace(m1, m2, 0, k)
                assert value == weyl_det_trace(m1, m2, k)


@given(
    st.integers(min_value=0, max_value=40),
    st.integers(min_value=0, max_value=40),
    st.integers(min_value=0, max_value=3),
    st.sampled_from(TRACE_ORDERS),
)
def test_trace_ignores_determinant_twist(m1, m2, m3, k):
    assert gt_trace(m1, m2, m3, k) == gt_trace(m1, m2, 0, k)
    assert closed_trace(m1, m2, m3, k) == closed_trace(m1, m2, 0, k)


def test_inner_run_closed_form():
    for k in TRACE_ORDERS:
        for p1 in range(13):
            for p2 in range(p1 + 1):
                direct = CyclotomicInt.zero(k)
                for q in range(p2, p1 + 1):
                    direct = direct + CyclotomicInt.zeta_power(k, 2 * q - p1 - p2)
                assert ck_sum(p1, p2, k) == direct.to_int()
    assert ck_sum(5, 4, 2) == -2
    with pytest.raises(ValueError):
        ck_sum(3, 5, 2)


def test_trace_pins():
    for k in TRACE_ORDERS:
        assert closed_trace(0, 0, 0, k) == 1
    assert closed_trace(3, 3, 0, 6) == -3
    assert closed_trace(1, 1, 0, 6) == 3
    assert closed_trace(2, 0, 0, 2) == 2
    assert weyl_det_trace(2, 0, 4) == 0
    assert weyl_det_trace(1, 1, 6) == 3


def test_trace_validation():
    with pytest.raises(ValueError):
        gt_trace(0, 0, 0, 5)
    with pytest.raises(ValueError):
        closed_trace(-1, 0, 0, 2)
    with pytest.raises(ValueError):
        weyl_det_trace(0, -2, 3)
    with pytest.raises(ValueError):
        gt_trace(-3, 0, 0, 2)


# in the order-R ring holding -1, the eigenvalues 1, zeta_k, zeta_k^-1 and
# their negatives, as powers of zeta_R
_NEGATION = {
    2: (2, (0, 1, 1)),
    3: (6, (0, 2, 4)),
    4: (4, (0, 1, 3)),
    6: (6, (0, 1, 5)),
}


@pytest.mark.parametrize("k", TRACE_ORDERS)
def test_central_sign_rule(k):
    # -1 in GL3 acts on the (m1, m2, m3) module by (-1)^(m1 + m3)
    ring, exps = _NEGATION[k]
    half = ring // 2
    plain = [CyclotomicInt.zeta_power(ring, e) for e in exps]
    negated = [CyclotomicInt.zeta_power(ring, e + half) for e in exps]
    for m1 in range(4):
        for m2 in range(4):
            for m3 in range(2):
                base = gt_character(m1, m2, m3, *plain).to_int()
                assert base == gt_trace(m1, m2, m3, k)
                sign = -1 if (m1 + m3) % 2 else 1
                assert gt_character(m1, m2, m3, *negated).to_int() == sign * base


def test_torsion_class_table_shape():
    labels = [c.label for c in SL3_TORSION_CLASSES]
    assert labels[0] == "phi1^3"
    assert len(labels) == len(set(labels)) == 5
    assert all(c.order in (0, 2, 3, 4, 6) for c in SL3_TORSION_CLASSES)
    assert sum(c.order == 0 for c in SL3_TORSION_CLASSES) == 1

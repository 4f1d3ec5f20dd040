"""Laurent window bookkeeping: products, equality, valuation, inversion."""

import pytest
from hypothesis import given, strategies as st

from grasstau import (
    GF,
    QQ,
    CoeffRing,
    DomainError,
    LaurentElement,
    NotInvertibleError,
    PrecisionError,
    RingMismatchError,
)

RING = CoeffRing(QQ, 1, 2)
X = RING.gen(0)


def L(coeffs, trunc=None):
    return LaurentElement(RING, coeffs, trunc)


def test_product_window_rule():
    f = L({0: 1, 1: 1}, trunc=3)
    g = L({-1: 1})
    assert (f * g).trunc == 2  # 3 + (-1)
    h = L({2: 1}, trunc=5)
    assert (f * h).trunc == 5  # min(3 + 2, 5 + 0)
    assert (g * g).trunc is None


def test_sum_window_is_the_narrower_one():
    f = L({0: 1}, trunc=4)
    g = L({1: 1}, trunc=2)
    assert (f + g).trunc == 2
    assert (f + L({5: 1})).trunc == 4


def test_equality_is_window_strict():
    f = L({0: 1}, trunc=3)
    g = L({0: 1}, trunc=4)
    assert f != g
    assert f.same_series(g)
    assert not f.same_series(L({0: 2}, trunc=3))


def test_same_series_only_compares_the_joint_window():
    f = L({0: 1, 3: 5}, trunc=4)
    g = L({0: 1}, trunc=2)
    assert f.same_series(g)


def test_coefficient_past_the_window_is_an_error():
    f = L({0: 1}, trunc=2)
    assert f.coefficient(1).is_zero()
    assert f.coefficient_known(1)
    assert not f.coefficient_known(5)
    with pytest.raises(PrecisionError):
        f.coefficient(2)


def test_terms_beyond_trunc_are_discarded_on_build():
    f = L({0: 1, 7: 3}, trunc=2)
    assert sorted(f.coeffs) == [0]


def test_reduced_valuation_frozen():
    f = L({-2: X, -1: 3, 0: 1})
    assert f.reduced_valuation() == (-1, 1)
    assert L({3: 2}).reduced_valuation() == (3, 0)
    with pytest.raises(NotInvertibleError):
        L({0: X}).reduced_valuation()
    with pytest.raises(NotInvertibleError):
        LaurentElement.zero(RING).reduced_valuation()


def test_inverse_exact_with_nilpotent_fringe():
    f = L({-1: X, 0: 1})
    inv = f.inverse()
    assert inv.trunc is None
    assert inv == L({0: 1, -1: -X, -2: X * X})
    assert f * inv == LaurentElement.one(RING)


def test_inverse_of_a_unit_monomial_is_exact():
    f = LaurentElement.z_power(RING, 3)
    assert f.inverse() == LaurentElement.z_power(RING, -3)


def test_inverse_through_a_window():
    f = L({1: 1, 2: 1}, trunc=6)  # z(1+z), known below z^6
    inv = f.inverse()
    assert inv.trunc == 4
    assert inv == L({-1: 1, 0: -1, 1: 1, 2: -1, 3: 1}, trunc=4)
    assert (f * inv).same_series(LaurentElement.one(RING))


def test_inverse_needs_a_visible_unit():
    with pytest.raises(PrecisionError):
        L({0: X}, trunc=2).inverse()  # a unit could hide past the window


def test_narrow_window_inverse_keeps_only_the_fringe():
    f = L({0: X, 1: 1}, trunc=3)
    inv = f.inverse()
    assert inv.trunc == -1  # nothing determined at the unit's own level
    assert (f * inv).same_series(LaurentElement.one(RING))
    ok = L({0: X, 1: 1}, trunc=4)
    assert ok.inverse().trunc == 0
    assert (ok * ok.inverse()).same_series(LaurentElement.one(RING))


def test_exact_geometric_inverse_needs_an_explicit_window():
    f = L({0: 1, 1: 1})
    with pytest.raises(DomainError):
        f.inverse()
    inv = f.inverse(window=3)
    assert inv == L({0: 1, 1: -1, 2: 1}, trunc=3)


def test_calculus_helpers():
    f = L({-1: 2, 0: 7, 3: 1})
    assert f.derivative() == L({-2: -2, 2: 3})
    assert f.residue() == RING.const(2)
    assert f.shift(2) == L({1: 2, 2: 7, 5: 1})
    assert f.clip_below(0) == L({0: 7, 3: 1})
    assert f.truncate(3) == L({-1: 2, 0: 7}, trunc=3)


def test_residue_requires_visibility():
    with pytest.raises(PrecisionError):
        LaurentElement.zero(RING, trunc=-1).residue()


def test_mixed_rings_are_rejected():
    other = CoeffRing(GF(5), 1, 2)
    with pytest.raises(RingMismatchError):
        L({0: 1}) * LaurentElement.one(other)


# ---------------------------------------------------------------------------
# properties
# ---------------------------------------------------------------------------


def _coeff(pair):
    a, b = pair
    return RING.const(a) + RING.gen(0) * b


@st.composite
def windowed(draw):
    lo = draw(st.integers(-3, 1))
    n = draw(st.integers(1, 4))
    pairs = draw(
        st.lists(
            st.tuples(st.integers(-2, 2), st.integers(-1, 1)),
            min_size=n,
            max_size=n,
        )
    )
    trunc = draw(st.one_of(st.none(), st.integers(lo + n, lo + n + 2)))
    return LaurentElement(
        RING, {lo + i: _coeff(p) for i, p in enumerate(pairs)}, trunc
    )


@given(windowed(), windowed(), windowed())
def test_window_algebra(f, g, h):
    assert ((f + g) + h).same_series(f + (g + h))
    assert (f * (g + h)).same_series(f * g + f * h)
    assert ((f * g) * h).same_series(f * (g * h))
    assert (f - f).same_series(LaurentElement.zero(RING))


@given(windowed())
def test_shift_respects_products(f):
    z = LaurentElement.z_power(RING, 1)
    assert (f * z).same_series(f.shift(1))
    assert f.shift(3).shift(-3) == f

"""Triangular factorization and the exponential / product-form layers."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from grasstau import (
    GF,
    QQ,
    CoeffRing,
    DomainError,
    GammaElement,
    LaurentElement,
    NotInvertibleError,
    PrecisionError,
    abel_embed,
    exp_gamma,
    factorize,
    universal_v,
    witt_add,
    witt_product,
)

R2 = CoeffRing(QQ, 1, 2)
X = R2.gen(0)


def test_factorize_frozen_exact():
    f = LaurentElement(R2, {-1: 2 * X, 0: R2.const(2) + 2 * X, 1: 2})
    g = factorize(f)
    assert g.zpower == 0
    assert g.unit == R2.const(2)
    assert g.gminus == LaurentElement(R2, {0: 1, -1: X})
    assert g.gplus == LaurentElement(R2, {0: 1, 1: 1})
    assert g.as_laurent() == f


def test_factorize_windowed_with_zpower():
    f = LaurentElement(R2, {-3: X, -1: 3, 0: 1, 2: X}, trunc=5)
    g = factorize(f)
    assert g.zpower == -1
    assert g.unit.constant_term() == 3  # may carry nilpotent corrections
    assert g.unit.is_unit()
    assert g.gminus.trunc is None  # wings below the unit come out exact
    assert g.gminus.coefficient(0) == R2.one()
    assert g.gplus.trunc == 2  # (5 - (-1)) - 2*2
    assert g.gplus.coefficient(0) == R2.one()
    assert g.as_laurent().same_series(f)


def test_factorize_window_too_small():
    f = LaurentElement(R2, {-2: X, 0: 1}, trunc=4)  # needs trunc > n + d*r = 4
    with pytest.raises(PrecisionError):
        factorize(f)


def test_factorize_needs_a_unit_coefficient():
    with pytest.raises(NotInvertibleError):
        factorize(LaurentElement(R2, {0: X, 1: X}))


def test_group_law_and_inverse():
    f = LaurentElement(R2, {-1: X, 0: 2, 1: 1, 2: X}, trunc=6)
    g = factorize(f)
    h = g * g.inverse(window=4)
    assert h.zpower == 0
    assert h.unit == R2.one()
    assert h.gminus.same_series(LaurentElement.one(R2))
    assert h.gplus.same_series(LaurentElement.one(R2))
    assert GammaElement.identity(R2).is_identity()


@settings(deadline=None, max_examples=30)
@given(
    st.integers(-3, 3),
    st.integers(-3, 3),
    st.integers(1, 3),
    st.integers(-3, 3),
)
def test_factorize_round_trip(a, b, u, c):
    ring = CoeffRing(QQ, 2, 2)
    x1, x2 = ring.gen(0), ring.gen(1)
    f = LaurentElement(
        ring,
        {-2: x2 * a, -1: x1 * b, 0: ring.const(u) + x1, 1: c, 2: 1},
        trunc=9,
    )
    g = factorize(f)
    assert g.as_laurent().same_series(f)
    assert g.gminus.coefficient(0) == ring.one()
    assert g.gplus.coefficient(0) == ring.one()
    assert g.unit.is_unit()


# ---------------------------------------------------------------------------
# exponentials
# ---------------------------------------------------------------------------


def test_exp_lower_frozen():
    g = exp_gamma(R2, [X], -1)
    assert g.gminus == LaurentElement(R2, {0: 1, -1: X, -2: X * X * Fraction(1, 2)})
    assert g.unit == R2.one()
    assert g.gplus == LaurentElement.one(R2)
    assert g.zpower == 0


def test_exp_upper_frozen_and_window_guard():
    with pytest.raises(PrecisionError):
        exp_gamma(R2, [R2.one()], 1)
    g = exp_gamma(R2, [R2.one()], 1, trunc=4)
    assert g.gplus == LaurentElement(
        R2, {0: 1, 1: 1, 2: Fraction(1, 2), 3: Fraction(1, 6)}, trunc=4
    )


def test_exp_empty_argument_is_the_identity():
    assert exp_gamma(R2, [], -1).is_identity()


def test_exp_refuses_positive_characteristic():
    ring = CoeffRing(GF(5), 1, 2)
    with pytest.raises(DomainError) as err:
        exp_gamma(ring, [ring.gen(0)], -1)
    assert "witt_product" in str(err.value)


def test_exp_lower_requires_nilpotent_coefficients():
    with pytest.raises(DomainError):
        exp_gamma(R2, [R2.one()], -1)


@given(st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3))
def test_exp_lower_is_a_homomorphism(a1, a2, b1, b2):
    ring = CoeffRing(QQ, 2, 2)
    x1, x2 = ring.gen(0), ring.gen(1)
    u = [x1 * a1, x2 * a2]
    v = [x1 * b1 + x2 * b2, x1 * b2]
    lhs = exp_gamma(ring, [u[0] + v[0], u[1] + v[1]], -1)
    rhs = exp_gamma(ring, u, -1) * exp_gamma(ring, v, -1)
    assert lhs == rhs


def test_line_element_is_an_exponential():
    # 1 - x z^{-1} = exp(-sum_k x^k/k z^{-k}) while x is nilpotent
    ring = CoeffRing(QQ, 1, 3)
    x = ring.gen(0)
    logs = [-x, -(x * x) * Fraction(1, 2), -(x ** 3) * Fraction(1, 3)]
    assert witt_product(ring, [x], -1) == exp_gamma(ring, logs, -1).gminus


# ---------------------------------------------------------------------------
# product form
# ---------------------------------------------------------------------------


def test_witt_product_frozen():
    ring = CoeffRing(GF(3), 2, 2)
    x1, x2 = ring.gen(0), ring.gen(1)
    assert witt_product(ring, [x1, x2], 1) == LaurentElement(
        ring, {0: 1, 1: -x1, 2: -x2, 3: x1 * x2}
    )
    assert witt_product(ring, [], 1) == LaurentElement.one(ring)


def test_witt_add_frozen():
    ring = CoeffRing(GF(3), 2, 2)
    x1, x2 = ring.gen(0), ring.gen(1)
    zero = ring.zero()
    # the length of the result is the length of the inputs; padding
    # exposes the first carry component -a1*b1 = 2*a1*b1 mod 3
    assert witt_add(ring, [x1], [x2]) == [x1 + x2]
    assert witt_add(ring, [x1, zero], [x2, zero]) == [x1 + x2, 2 * (x1 * x2)]


def _ghost(vec, n):
    """w_n = sum over d | n of d * a_d^(n/d); additive under Witt addition."""
    ring = vec[0].ring
    out = ring.zero()
    for d in range(1, n + 1):
        if n % d == 0 and d <= len(vec):
            out = out + vec[d - 1] ** (n // d) * d
    return out


small_vec = st.lists(st.integers(-4, 4), min_size=3, max_size=3)


@given(small_vec, small_vec)
def test_witt_add_matches_ghost_addition(avals, bvals):
    ring = CoeffRing(QQ, 1, 1)
    a = [ring.const(v) for v in avals]
    b = [ring.const(v) for v in bvals]
    s = witt_add(ring, a, b)
    for n in (1, 2, 3):
        assert _ghost(s, n) == _ghost(a, n) + _ghost(b, n)


@given(small_vec, small_vec)
def test_witt_add_reproduces_the_product(avals, bvals):
    ring = CoeffRing(GF(5), 1, 1)
    a = [ring.const(v % 5) for v in avals]
    b = [ring.const(v % 5) for v in bvals]
    s = witt_add(ring, a, b)
    m = len(s)
    lhs = witt_product(ring, s, 1).truncate(m + 1)
    rhs = (witt_product(ring, a, 1) * witt_product(ring, b, 1)).truncate(m + 1)
    assert lhs == rhs


# ---------------------------------------------------------------------------
# point embeddings
# ---------------------------------------------------------------------------


def test_abel_embed_nilpotent_defining_property():
    ring = CoeffRing(QQ, 1, 3)
    x = ring.gen(0)
    g = abel_embed(ring, [x])
    line = LaurentElement(ring, {0: 1, -1: -x})
    assert g.gminus * line == LaurentElement.one(ring)


def test_abel_embed_multiplies_points():
    ring = CoeffRing(QQ, 2, 2)
    x1, x2 = ring.gen(0), ring.gen(1)
    g = abel_embed(ring, [x1, x2])
    assert g.gminus == abel_embed(ring, [x1]).gminus * abel_embed(ring, [x2]).gminus


def test_abel_embed_needs_depth_for_units():
    ring = CoeffRing(QQ, 1, 2)
    t = ring.const(Fraction(1, 2))
    with pytest.raises(DomainError):
        abel_embed(ring, [t])
    clipped = abel_embed(ring, [t], depth=3)
    assert clipped == LaurentElement(
        ring,
        {0: 1, -1: t, -2: t * t, -3: t * t * t},
    )


def test_universal_v_frozen():
    v = universal_v(QQ, 3)
    ring = v.gminus.ring
    assert ring.weights == (1, 2, 3)
    xs = [ring.gen(i) for i in range(3)]
    assert v.gminus == LaurentElement(
        ring, {0: 1, -1: xs[0], -2: xs[1], -3: xs[2]}
    )
    assert v.unit == ring.one()
    assert v.gplus == LaurentElement.one(ring)
    assert v.zpower == 0

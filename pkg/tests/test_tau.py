"""Tau polynomials, the wave series, and the residual of the bilinear identity.

The frozen values are hand computations.  For the two-column point the
minor table lives in test_grassmann (vac 1, (1) 2, (2) 3, (1,1) -1,
(2,1) -1, (2,2) 1), so at bound 3

    tau = 1 + 2 F_1 + 3 F_2 - F_11 - F_21
        = 1 + 2 x1 + 4 x2 - x1^2 - x1 x2 + x3.

The single-column point span{z^-1 + c} has tau = 1 + c x1 at any bound,
which makes the wave series reconstructible from first principles: the
shift x1 -> x1 + t gives psi = v^{-1} (1 + c (1 + c x1)^{-1} z).
"""

from fractions import Fraction

import pytest

from grasstau import (
    GF,
    QQ,
    CoeffRing,
    DomainError,
    GammaElement,
    GrassPoint,
    LaurentElement,
    PrecisionError,
    act,
    baker,
    coordinate_ring,
    exp_gamma,
    factorize,
    kp_residual,
    schur_polynomial,
    tau_crosscheck,
    tau_direct,
    tau_eval,
    tau_schur,
    universal_v,
)

RING = CoeffRing(QQ, 1, 1)


def single_column_point(c, ring=RING):
    return GrassPoint(ring, 1, [LaurentElement(ring, {-1: 1, 0: c})])


def two_column_point():
    ring = CoeffRing(QQ, 1, 2)
    c1 = LaurentElement(ring, {-2: 1, 0: 1, 1: 1})
    c2 = LaurentElement(ring, {-1: 1, 0: 2, 1: 3})
    return GrassPoint(ring, 2, [c1, c2])


def test_tau_single_column_frozen():
    t = tau_crosscheck(single_column_point(Fraction(3, 7)), 3)
    x1 = t.ring.gen(0)
    assert t == t.ring.one() + x1 * Fraction(3, 7)


def test_tau_two_column_frozen():
    t = tau_crosscheck(two_column_point(), 3)
    x1, x2, x3 = (t.ring.gen(i) for i in range(3))
    expected = t.ring.one() + 2 * x1 + 4 * x2 - x1 * x1 - x1 * x2 + x3
    assert t == expected
    assert tau_direct(two_column_point(), 3) == tau_schur(two_column_point(), 3)


def test_tau_of_the_base_point_is_one():
    for depth in (1, 2, 4):
        t = tau_crosscheck(GrassPoint.base_point(RING, depth), 3)
        assert t == t.ring.one()


def test_tau_positive_characteristic():
    ring = CoeffRing(GF(5), 1, 1)
    t = tau_crosscheck(single_column_point(3, ring), 2)
    assert t == t.ring.one() + 3 * t.ring.gen(0)


def test_tau_rejects_variable_coefficients():
    ring = CoeffRing(QQ, 1, 2)
    x = ring.gen(0)
    pt = GrassPoint(ring, 1, [LaurentElement(ring, {-1: 1, 0: x})])
    with pytest.raises(DomainError):
        tau_direct(pt, 2)


def test_tau_needs_the_full_degree_window():
    col = LaurentElement(RING, {-1: 1, 0: 2}, trunc=2)
    pt = GrassPoint(RING, 1, [col])
    assert tau_crosscheck(pt, 2) == tau_crosscheck(single_column_point(2), 2)
    with pytest.raises(PrecisionError):
        tau_direct(pt, 3)


def test_tau_eval_is_multiplicative_in_the_lower_sector():
    ring = CoeffRing(QQ, 1, 2)
    x = ring.gen(0)
    g1 = exp_gamma(ring, [x], -1)
    g2 = exp_gamma(ring, [2 * x, x * x], -1)
    pt = GrassPoint(ring, 1, [LaurentElement(ring, {-1: 1, 0: 2, 1: 1})])
    moved = act(g2, pt)
    lhs = tau_eval(pt, g1 * g2)
    rhs = tau_eval(moved, g1) * tau_eval(pt, g2)
    assert lhs == rhs
    assert tau_eval(pt, GammaElement.identity(ring)) == ring.one()


# ---------------------------------------------------------------------------
# wave series
# ---------------------------------------------------------------------------


def test_baker_of_the_base_point_is_v_inverse():
    psi = baker(GrassPoint.base_point(RING, 2), 3, 3)
    assert psi.trunc == 3
    ring_d = psi.ring
    x1, x2, x3 = (ring_d.gen(i) for i in range(3))
    vinv = universal_v(QQ, 3).gminus.inverse()
    assert psi.same_series(vinv)
    assert psi.coefficient(0) == ring_d.one()
    assert psi.coefficient(-1) == -x1
    assert psi.coefficient(-2) == x1 * x1 - x2
    assert psi.coefficient(-3) == -(x1 ** 3) + 2 * x1 * x2 - x3
    assert psi.coefficient(1).is_zero() and psi.coefficient(2).is_zero()


def test_baker_single_column_reconstruction():
    # independent route: tau = 1 + c x1 exactly, so the shifted quotient
    # is 1 + c (1 + c x1)^{-1} t and psi = v^{-1} (1 + c g z), g = (1+c x1)^{-1}
    c = Fraction(3, 7)
    psi = baker(single_column_point(c), 3, 4)
    ring_d = psi.ring
    x1 = ring_d.gen(0)
    g = (ring_d.one() + x1 * c).inverse()
    vinv = universal_v(QQ, 3).gminus.inverse()
    expected = vinv * LaurentElement(ring_d, {0: 1, 1: g * c})
    assert psi.same_series(expected)
    assert psi.trunc == 4


def test_shifted_wave_series_lies_in_the_span():
    # z^-1 psi must be a ring-combination of the tail and the column
    # z^-1 + c; above the tail that means coeff(0) = c * coeff(-1) after
    # the shift, i.e. psi's z^1 coefficient is c times its constant one.
    c = Fraction(3, 7)
    psi = baker(single_column_point(c), 3, 4)
    shifted = psi.shift(-1)
    assert shifted.coefficient(0) == shifted.coefficient(-1) * c
    assert shifted.coefficient(1).is_zero()
    assert shifted.coefficient(2).is_zero()


def test_baker_window_and_constant_normalization():
    psi = baker(two_column_point(), 2, 3)
    assert psi.trunc == 3
    assert psi.coefficient(0).constant_term() == 1


# ---------------------------------------------------------------------------
# residual of the bilinear identity
# ---------------------------------------------------------------------------


def test_kp_residual_vanishes_for_tau_polynomials():
    t = tau_crosscheck(two_column_point(), 5)
    assert kp_residual(t, 1).is_zero()
    assert kp_residual(t, 2).is_zero()


def test_single_schur_terms_solve_the_hierarchy():
    ring5 = coordinate_ring(QQ, 5)
    for lam in [(1,), (2, 1), (2, 2)]:
        assert kp_residual(schur_polynomial(ring5, lam), 1).is_zero()


def test_kp_residual_flags_a_non_tau():
    ring4 = coordinate_ring(QQ, 4)
    fake = ring4.one() + ring4.gen(0) ** 2
    assert not kp_residual(fake, 1).is_zero()


def test_kp_residual_domain_guards():
    ring_p = coordinate_ring(GF(5), 4)
    with pytest.raises(DomainError):
        kp_residual(ring_p.one(), 1)
    ring4 = coordinate_ring(QQ, 4)
    with pytest.raises(DomainError):
        kp_residual(ring4.one(), 2)  # order must stay <= bound - 3

"""The commutator pairing on valuation-zero series and its residue shadow."""

import pytest

from grasstau import (
    GF,
    QQ,
    CoeffRing,
    DomainError,
    LaurentElement,
    PrecisionError,
    commutator_pairing,
    residue_pairing,
)


def ring2(field=QQ, bound=2):
    return CoeffRing(field, 2, bound)


def test_residue_pairing_frozen():
    r = ring2()
    x1, x2 = r.gen(0), r.gen(1)
    f = LaurentElement(r, {-1: x1})
    g = LaurentElement(r, {1: x2})
    assert residue_pairing(f, g) == x1 * x2  # res(f dg)
    assert residue_pairing(g, f) == -(x1 * x2)
    assert residue_pairing(f, f).is_zero()


def test_commutator_pairing_frozen_depth_one():
    r = ring2(bound=1)
    x1, x2 = r.gen(0), r.gen(1)
    f = LaurentElement(r, {0: 1, -1: x1})
    g = LaurentElement(r, {0: 1, 1: x2})
    assert commutator_pairing(f, g) == r.one() + x1 * x2


def test_commutator_pairing_frozen_depth_two():
    r = ring2()
    x1, x2 = r.gen(0), r.gen(1)
    f = LaurentElement(r, {0: 1, -2: x1})
    g = LaurentElement(r, {0: 1, 2: x2})
    assert commutator_pairing(f, g) == r.one() + 2 * (x1 * x2)


def test_commutator_pairing_positive_characteristic():
    r = ring2(GF(3), 1)
    x1, x2 = r.gen(0), r.gen(1)
    f = LaurentElement(r, {0: 1, -1: x1})
    g = LaurentElement(r, {0: 1, 1: x2})
    assert commutator_pairing(f, g) == r.one() + x1 * x2


def test_mismatched_exponents_pair_trivially():
    r = ring2()
    x1, x2 = r.gen(0), r.gen(1)
    f = LaurentElement(r, {0: 1, -1: x1})
    g = LaurentElement(r, {0: 1, 2: x2})
    assert commutator_pairing(f, g) == r.one()


def test_same_wing_pairs_trivially():
    r = ring2()
    x1, x2 = r.gen(0), r.gen(1)
    up1 = LaurentElement(r, {0: 1, 1: x1})
    up2 = LaurentElement(r, {0: 1, 2: x2})
    assert commutator_pairing(up1, up2) == r.one()
    dn1 = LaurentElement(r, {0: 1, -1: x1})
    dn2 = LaurentElement(r, {0: 1, -2: x2})
    assert commutator_pairing(dn1, dn2) == r.one()


def test_skew_symmetry():
    r = ring2()
    x1, x2 = r.gen(0), r.gen(1)
    f = LaurentElement(r, {0: 1, -1: x1, -2: x1})
    g = LaurentElement(r, {0: 1, 1: x2, 2: x2})
    assert commutator_pairing(f, g) * commutator_pairing(g, f) == r.one()


def test_multiplicative_in_each_slot():
    r = CoeffRing(QQ, 3, 2)
    x1, x2, x3 = (r.gen(i) for i in range(3))
    f1 = LaurentElement(r, {0: 1, -1: x1})
    f2 = LaurentElement(r, {0: 1, -1: x2})
    g = LaurentElement(r, {0: 1, 1: x3})
    lhs = commutator_pairing(f1 * f2, g)
    rhs = commutator_pairing(f1, g) * commutator_pairing(f2, g)
    assert lhs == rhs


def test_leading_term_matches_the_residue():
    r = ring2()
    x1, x2 = r.gen(0), r.gen(1)
    for k in (1, 2):
        fm = LaurentElement(r, {-k: x1})
        gm = LaurentElement(r, {k: x2})
        f = LaurentElement.one(r) + fm
        g = LaurentElement.one(r) + gm
        assert commutator_pairing(f, g) == r.one() + residue_pairing(fm, gm)


def test_wider_windows_do_not_change_the_answer():
    r = ring2()
    x1, x2 = r.gen(0), r.gen(1)
    f = LaurentElement(r, {0: 1, -1: x1, -2: x1 * 2})
    g = LaurentElement(r, {0: 1, 1: x2, 2: x2})
    base = commutator_pairing(f, g)
    assert commutator_pairing(f, g, window=30) == base


def test_valuation_guard():
    r = ring2()
    with pytest.raises(DomainError):
        commutator_pairing(LaurentElement.z_power(r, 1), LaurentElement.one(r))


def test_window_guards():
    r = ring2()
    x1, x2 = r.gen(0), r.gen(1)
    f = LaurentElement(r, {0: 1, -1: x1})
    g = LaurentElement(r, {0: 1, 1: x2})
    with pytest.raises(PrecisionError):
        commutator_pairing(f, g, window=3)  # supports need 2*2*2+1 + 4
    short = LaurentElement(r, {0: 1, -1: x1}, trunc=2)
    with pytest.raises(PrecisionError):
        commutator_pairing(short, g)

"""Ground fields and the weighted-truncated coefficient rings."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from grasstau import GF, QQ, CoeffRing, DomainError, NotInvertibleError


def test_prime_field_arithmetic():
    F = GF(7)
    assert F.add(4, 5) == 2
    assert F.mul(3, 5) == 1
    assert F.invert(3) == 5
    assert F.sub(1, 3) == 5
    assert F.neg(0) == 0


def test_gf_rejects_non_primes():
    with pytest.raises(DomainError):
        GF(6)
    with pytest.raises(DomainError):
        GF(1)


def test_parse_and_format():
    assert QQ.parse("-3/2") == Fraction(-3, 2)
    assert QQ.format(Fraction(5, 3)) == "5/3"
    assert GF(5).parse("3") == 3
    assert GF(5).format(4) == "4"


def test_field_invert_guards():
    with pytest.raises(NotInvertibleError):
        GF(5).invert(0)
    with pytest.raises(NotInvertibleError):
        QQ.invert(Fraction(0))


def test_weighted_truncation_drops_heavy_monomials():
    ring = CoeffRing(QQ, 2, 2, weights=(1, 2))
    x1, x2 = ring.gen(0), ring.gen(1)
    assert (x1 * x2).is_zero()  # weight 3 > 2
    assert not (x1 * x1).is_zero()  # weight 2, still inside
    assert (x1 ** 3).is_zero()
    assert not x2.is_zero()


def test_degree_one_square_vanishes():
    ring = CoeffRing(QQ, 1, 1)
    x = ring.gen(0)
    assert (x * x).is_zero()


def test_unit_inverse_frozen():
    ring = CoeffRing(QQ, 1, 2)
    x = ring.gen(0)
    inv = (ring.one() + x).inverse()
    assert inv == ring.one() - x + x * x
    assert (ring.one() + x) * inv == ring.one()


def test_units_and_nilpotents_partition_the_ring():
    ring = CoeffRing(GF(5), 2, 2)
    x1 = ring.gen(0)
    assert x1.is_nilpotent() and not x1.is_unit()
    u = ring.const(2) + x1
    assert u.is_unit() and not u.is_nilpotent()
    with pytest.raises(NotInvertibleError):
        x1.inverse()


def test_monomial_enumeration():
    ring = CoeffRing(QQ, 3, 3, weights=(1, 2, 3))
    monos = list(ring.monomials())
    assert len(monos) == len(set(monos))
    assert all(ring.weight(m) <= 3 for m in monos)
    assert set(ring.monomials_of_weight(2)) == {(2, 0, 0), (0, 1, 0)}
    assert set(ring.monomials_of_weight(3)) == {(3, 0, 0), (1, 1, 0), (0, 0, 1)}


def test_frobenius_power():
    ring = CoeffRing(GF(5), 1, 2)
    x = ring.gen(0)
    assert (ring.one() + x) ** 5 == ring.one()


def test_bad_weights_rejected():
    with pytest.raises(DomainError):
        CoeffRing(QQ, 2, 2, weights=(1,))
    with pytest.raises(DomainError):
        CoeffRing(QQ, 1, 2, weights=(0,))


RING = CoeffRing(GF(5), 2, 2)
MONOS = list(RING.monomials())

elements = st.builds(
    lambda cs: RING.element(dict(zip(MONOS, cs))),
    st.lists(st.integers(0, 4), min_size=len(MONOS), max_size=len(MONOS)),
)


@given(elements, elements, elements)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + RING.zero() == a
    assert a * RING.one() == a


@given(elements)
def test_unit_xor_nilpotent(a):
    assert a.is_unit() != a.is_nilpotent()
    if a.is_unit():
        assert a * a.inverse() == RING.one()
    else:
        # truncated ring: some power must die
        p = a
        for _ in range(RING.degree_bound):
            p = p * a
        assert p.is_zero()

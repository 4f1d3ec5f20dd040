"""The group of invertible series and its triple factorization.

Every invertible Laurent series over the local coefficient ring splits
uniquely as

    f  =  gminus * unit * gplus * z^n

with gminus = 1 + (nilpotent coefficients at negative exponents), unit
an invertible ring constant, gplus = 1 + (terms at positive exponents),
and n the reduced valuation.  ``GammaElement`` stores the four parts;
``factorize`` computes them.

The factorization algorithm runs a defect-halving iteration: starting
from the naive split, the relative error E = f/(gm*u*gp) - 1 has all
coefficients in the nilpotent ideal, and absorbing its negative / zero /
positive parts into the three factors squares the ideal power E lives
in.  After ~log2(nilpotency degree) rounds the negative and constant
defects vanish identically, at which point gplus is recomputed in closed
form as f * (gm*u)^{-1}, which is exact because gm*u has an exactly
invertible (unit plus nilpotent fringe) shape.

For input known only below a truncation order M, the two lower factors
are still exact as long as M - n exceeds d*r (nilpotency degree times
fringe width): changing the unknown tail multiplies f by an element of
1 + z^{>0}(...), which by uniqueness is absorbed entirely into gplus.
gplus itself is then determined below M - n - d*r.

Also here: the exponential maps into the two unipotent wings (char 0),
their product-form replacement that works in any characteristic, Witt
vector addition by coefficient peeling, and the Abel-style embedding
t -> 1 + sum_i t^i z^{-i}.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .errors import DomainError, GrasstauError, PrecisionError, RingMismatchError
from .laurent import LaurentElement
from .scalars import BaseField, CoeffRing, RingElement


class GammaElement:
    """An invertible series in factored form gminus * unit * gplus * z^zpower."""

    __slots__ = ("ring", "gminus", "unit", "gplus", "zpower")

    def __init__(
        self,
        gminus: LaurentElement,
        unit: RingElement,
        gplus: LaurentElement,
        zpower: int = 0,
    ):
        ring = unit.ring
        if gminus.ring != ring or gplus.ring != ring:
            raise RingMismatchError("factor parts live over different rings")
        if gminus.trunc is not None:
            raise DomainError("gminus must be exactly known")
        if gminus.coeffs.get(0) != ring.one():
            raise DomainError("gminus must have constant term 1")
        for e, c in gminus.coeffs.items():
            if e > 0:
                raise DomainError("gminus may not contain positive exponents")
            if e < 0 and not c.is_nilpotent():
                raise DomainError("gminus coefficients below z^0 must be nilpotent")
        if not unit.is_unit():
            raise DomainError("unit part must be invertible in the coefficient ring")
        if any(e < 0 for e in gplus.coeffs):
            raise DomainError("gplus may not contain negative exponents")
        if gplus.trunc is not None and gplus.trunc < 1:
            raise PrecisionError("gplus is not even determined at z^0")
        if gplus.coeffs.get(0, None) != ring.one():
            raise DomainError("gplus must have constant term 1")
        self.ring = ring
        self.gminus = gminus
        self.unit = unit
        self.gplus = gplus
        self.zpower = zpower

    @staticmethod
    def identity(ring: CoeffRing) -> "GammaElement":
        return GammaElement(
            LaurentElement.one(ring), ring.one(), LaurentElement.one(ring), 0
        )

    @staticmethod
    def from_parts(
        ring: CoeffRing,
        gminus: LaurentElement | None = None,
        unit: RingElement | None = None,
        gplus: LaurentElement | None = None,
        zpower: int = 0,
    ) -> "GammaElement":
        return GammaElement(
            gminus if gminus is not None else LaurentElement.one(ring),
            unit if unit is not None else ring.one(),
            gplus if gplus is not None else LaurentElement.one(ring),
            zpower,
        )

    def as_laurent(self) -> LaurentElement:
        """Multiply the factors back out (window bookkeeping included)."""
        return ((self.gminus * self.unit) * self.gplus).shift(self.zpower)

    def is_identity(self) -> bool:
        return (
            self.zpower == 0
            and self.unit == self.ring.one()
            and self.gminus.coeffs == {0: self.ring.one()}
            and self.gplus.coeffs == {0: self.ring.one()}
        )

    def __mul__(self, other: "GammaElement") -> "GammaElement":
        """Group law: the factorization of a product is the product of
        factorizations, componentwise, since the series ring is commutative."""
        if not isinstance(other, GammaElement):
            return NotImplemented
        if self.ring != other.ring:
            raise RingMismatchError("Gamma elements over different rings")
        return GammaElement(
            self.gminus * other.gminus,
            self.unit * other.unit,
            self.gplus * other.gplus,
            self.zpower + other.zpower,
        )

    def inverse(self, window: int | None = None) -> "GammaElement":
        """Componentwise inverse.

        gminus and unit invert exactly.  gplus inverts to its own window;
        exactly-known nontrivial gplus needs an explicit ``window`` since
        its inverse is an infinite series.
        """
        gm_inv = self.gminus.inverse()
        u_inv = self.unit.inverse()
        if self.gplus.coeffs == {0: self.ring.one()} and self.gplus.trunc is None:
            gp_inv = LaurentElement.one(self.ring)
        else:
            gp_inv = self.gplus.inverse(window=window)
        return GammaElement(gm_inv, u_inv, gp_inv, -self.zpower)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GammaElement):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.zpower == other.zpower
            and self.unit == other.unit
            and self.gminus == other.gminus
            and self.gplus == other.gplus
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return (
            f"GammaElement(gminus={self.gminus!r}, unit={self.unit!r}, "
            f"gplus={self.gplus!r}, zpower={self.zpower})"
        )


def factorize(f: LaurentElement) -> GammaElement:
    """Triple factorization of an invertible Laurent series.

    Raises NotInvertibleError if f provably has no unit coefficient,
    PrecisionError if the window cannot pin down the valuation or is too
    short (trunc - n must exceed d*r) to determine the lower factors.
    """
    n, r = f.reduced_valuation()
    ring = f.ring
    d = ring.degree_bound
    if f.trunc is not None:
        m_h = f.trunc - n
        if m_h <= d * r:
            raise PrecisionError(
                f"window too small to determine the factorization: "
                f"need trunc > {n + d * r}, have {f.trunc}"
            )
    else:
        m_h = None

    # work with an exactly-known representative (unknown tail set to zero)
    h_hat = LaurentElement(ring, {e - n: c for e, c in f.coeffs.items()}, None)
    c0 = h_hat.coefficient(0)
    c0_inv = c0.inverse()

    gm = LaurentElement.one(ring)
    u = c0
    gp_seed = LaurentElement(
        ring, {e: c for e, c in h_hat.coeffs.items() if e >= 0}, None
    ) * c0_inv

    # window budget: the iteration only needs the negative and constant
    # defects, which stay fully known as long as each round's error term
    # keeps a window above z^1.
    rounds_budget = d.bit_length() + 3
    w0 = 2 + rounds_budget * (r * (d * d + d + 1) + 1)
    gp = gp_seed.truncate(w0)

    for _ in range(rounds_budget):
        prod = (gm * u) * gp
        defect = h_hat * prod.inverse() - 1
        if defect.is_zero():
            break
        if defect.trunc is not None and defect.trunc < 1:
            raise GrasstauError("internal: factorization window budget exhausted")
        e_minus = LaurentElement(
            ring, {e: c for e, c in defect.coeffs.items() if e < 0}, None
        )
        e_zero = defect.coefficient(0)
        e_plus = LaurentElement(
            ring, {e: c for e, c in defect.coeffs.items() if e > 0}, defect.trunc
        )
        gm = gm * (LaurentElement.one(ring) + e_minus)
        u = u * (ring.one() + e_zero)
        gp = gp * (LaurentElement.one(ring) + e_plus)
    else:
        raise GrasstauError("internal: factorization iteration did not converge")

    # closed-form exact gplus: gm*u has a unit constant and nilpotent
    # fringe, so its inverse is exact, and the product with h_hat is a
    # genuine Laurent polynomial.
    gp_exact = h_hat * (gm * u).inverse()
    if any(e < 0 for e in gp_exact.coeffs) or gp_exact.coeffs.get(0) != ring.one():
        raise GrasstauError("internal: factorization certification failed")

    if m_h is not None:
        gp_out = gp_exact.truncate(m_h - d * r)
    else:
        gp_out = gp_exact
    return GammaElement(gm, u, gp_out, n)


# ----------------------------------------------------------------------
# Exponentials and Witt-style coordinates
# ----------------------------------------------------------------------


def exp_gamma(
    ring: CoeffRing, coeffs: list[RingElement], sign: int, trunc: int | None = None
) -> GammaElement:
    """exp(sum_i a_i z^(sign*i)) as an element of the matching wing.

    Characteristic zero only: the series needs divided powers.  With
    sign -1 every a_i must be nilpotent and the result is a finite exact
    element of the lower wing.  With sign +1 the exponential is an
    honest infinite series, so a truncation order is required.
    """
    if ring.field.char != 0:
        raise DomainError(
            "the exponential needs characteristic zero; "
            "use witt_product for positive characteristic"
        )
    if sign not in (-1, 1):
        raise DomainError("sign must be +1 or -1")
    arg = {}
    for i, a in enumerate(coeffs, start=1):
        if not isinstance(a, RingElement) or a.ring != ring:
            raise RingMismatchError("exponent coefficients must live in the given ring")
        if a:
            arg[sign * i] = a
    if sign < 0:
        if any(not a.is_nilpotent() for a in arg.values()):
            raise DomainError(
                "exp into the lower wing needs nilpotent coefficients"
            )
        e = LaurentElement(ring, arg, None)
        total = LaurentElement.one(ring)
        power = LaurentElement.one(ring)
        for k in itertools.count(1):
            power = power * e
            if power.is_zero():
                break
            total = total + power * Fraction(1, _factorial(k))
        return GammaElement.from_parts(ring, gminus=total)
    if trunc is None:
        raise PrecisionError(
            "exp into the upper wing is an infinite series; a truncation order is required"
        )
    e = LaurentElement(ring, arg, None)
    total = LaurentElement.one(ring)
    power = LaurentElement.one(ring)
    for k in range(1, max(trunc, 1)):
        power = (power * e).truncate(trunc)
        if power.is_zero():
            break
        total = total + power * Fraction(1, _factorial(k))
    return GammaElement.from_parts(ring, gplus=total.truncate(trunc))


def _factorial(k: int) -> int:
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


def witt_product(ring: CoeffRing, coeffs: list[RingElement], sign: int) -> LaurentElement:
    """prod_i (1 - a_i z^(sign*i)), exact in any characteristic.

    This finite product replaces the exponential when division by
    factorials is unavailable; with sign -1 and nilpotent a_i it lands in
    the lower wing (see :func:`factorize` to recover the parts).
    """
    if sign not in (-1, 1):
        raise DomainError("sign must be +1 or -1")
    out = LaurentElement.one(ring)
    for i, a in enumerate(coeffs, start=1):
        if not isinstance(a, RingElement) or a.ring != ring:
            raise RingMismatchError("coefficients must live in the given ring")
        if a:
            out = out * LaurentElement(ring, {0: ring.one(), sign * i: -a}, None)
    return out


def witt_add(
    ring: CoeffRing, avec: list[RingElement], bvec: list[RingElement]
) -> list[RingElement]:
    """Witt vector addition: peel components off the product of the two
    product-form series, matching prod(1 - c_i z^i) modulo z^(m+1)."""
    m = max(len(avec), len(bvec))
    if m == 0:
        return []
    prod = witt_product(ring, avec, 1) * witt_product(ring, bvec, 1)
    out: list[RingElement] = []
    q = prod.truncate(m + 1)
    for i in range(1, m + 1):
        c = -q.coefficient(i)
        out.append(c)
        if c:
            factor = LaurentElement(ring, {0: ring.one(), i: -c}, None)
            q = q * factor.inverse(window=m + 1)
    if any(q.coefficient(i) for i in range(1, m + 1)):
        raise GrasstauError("internal: Witt peel left a nonzero remainder")
    return out


def abel_embed(ring: CoeffRing, points, depth: int | None = None):
    """The embedding t -> 1 + t z^{-1} + t^2 z^{-2} + ... for each point,
    multiplied together.

    Nilpotent points give a finite, exact element of the lower wing.  A
    point with invertible part has an image whose exponents are unbounded
    below, which no series element can represent; passing ``depth``
    returns the Laurent polynomial of all terms with exponent >= -depth
    (exact in that range, silently empty below it).
    """
    pts = list(points)
    for t in pts:
        if not isinstance(t, RingElement) or t.ring != ring:
            raise RingMismatchError("points must live in the given ring")
    if all(t.is_nilpotent() for t in pts):
        out = LaurentElement.one(ring)
        for t in pts:
            terms = {0: ring.one()}
            power = ring.one()
            for i in range(1, ring.degree_bound + 1):
                power = power * t
                if not power:
                    break
                terms[-i] = power
            out = out * LaurentElement(ring, terms, None)
        return GammaElement.from_parts(ring, gminus=out)
    if depth is None:
        raise DomainError(
            "a point with invertible part embeds outside the series ring; "
            "pass depth= to truncate the image below z^{-depth}"
        )
    out = LaurentElement.one(ring)
    for t in pts:
        terms = {0: ring.one()}
        power = ring.one()
        for i in range(1, depth + 1):
            power = power * t
            if not power:
                break
            terms[-i] = power
        out = (out * LaurentElement(ring, terms, None)).clip_below(-depth)
    return out


def universal_v(field: BaseField, d: int) -> GammaElement:
    """The universal lower-wing element 1 + x_1 z^{-1} + ... + x_d z^{-d}
    over the weighted coordinate ring with deg x_i = i, truncated past
    total weight d."""
    if d < 1:
        raise DomainError("d must be at least 1")
    ring = CoeffRing(field, d, d, weights=tuple(range(1, d + 1)))
    terms = {0: ring.one()}
    for i in range(1, d + 1):
        terms[-i] = ring.gen(i - 1)
    return GammaElement.from_parts(ring, gminus=LaurentElement(ring, terms, None))

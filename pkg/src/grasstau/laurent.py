"""Laurent series over a truncated coefficient ring, with precision windows.

An element is stored as a sparse map {exponent: coefficient} plus a
truncation order ``trunc``.  Coefficients at exponents below ``trunc``
are exactly known (absent means zero); at or above ``trunc`` they are
unknown.  ``trunc is None`` means the element is known exactly at every
exponent, i.e. it is a genuine Laurent polynomial.

Windows propagate through arithmetic pessimistically but sharply: for a
product the unknown tail of one factor meets the lowest term of the
other, so the result is known strictly below

    min(trunc_f + low_g, trunc_g + low_f)

where ``low`` is the lowest exponent in the known support (or the
truncation order itself when the known part vanishes).

Because the coefficient ring is local, invertibility of a series is
governed by its reduced valuation: the lowest exponent ``n`` carrying a
unit coefficient, together with the gap ``r = n - lowest support``
occupied by purely nilpotent coefficients.  Inversion strips z^n, kills
the nilpotent fringe with a terminating geometric series, and inverts
the regular part by the usual power-series recursion.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError, NotInvertibleError, PrecisionError, RingMismatchError
from .scalars import CoeffRing, RingElement


class LaurentElement:
    """Sparse Laurent series with an optional truncation order."""

    __slots__ = ("ring", "coeffs", "trunc")

    def __init__(self, ring: CoeffRing, coeffs: dict, trunc: int | None = None):
        clean: dict[int, RingElement] = {}
        for e, c in coeffs.items():
            if not isinstance(c, RingElement):
                c = ring.const(c)
            elif c.ring != ring:
                raise RingMismatchError("coefficient from a different ring")
            if trunc is not None and e >= trunc:
                continue
            if c:
                clean[int(e)] = c
        self.ring = ring
        self.coeffs = clean
        self.trunc = trunc

    # -- construction helpers ------------------------------------------------

    @staticmethod
    def zero(ring: CoeffRing, trunc: int | None = None) -> "LaurentElement":
        return LaurentElement(ring, {}, trunc)

    @staticmethod
    def one(ring: CoeffRing) -> "LaurentElement":
        return LaurentElement(ring, {0: ring.one()})

    @staticmethod
    def z_power(ring: CoeffRing, n: int) -> "LaurentElement":
        return LaurentElement(ring, {n: ring.one()})

    @staticmethod
    def const(ring: CoeffRing, c) -> "LaurentElement":
        return LaurentElement(ring, {0: c})

    # -- inspection ------------------------------------------------------------

    @property
    def min_exp(self) -> int:
        """Lowest exponent of the known support (0 for the zero series)."""
        if self.coeffs:
            return min(self.coeffs)
        return self.trunc if self.trunc is not None else 0

    def _low(self) -> int | None:
        """Lowest possibly-nonzero exponent; None means +infinity (exact zero)."""
        if self.coeffs:
            return min(self.coeffs)
        return self.trunc  # known part vanishes; tail starts at trunc

    def coefficient(self, e: int) -> RingElement:
        if self.trunc is not None and e >= self.trunc:
            raise PrecisionError(
                f"coefficient of z^{e} is beyond the truncation order {self.trunc}"
            )
        return self.coeffs.get(e, self.ring.zero())

    def coefficient_known(self, e: int) -> bool:
        return self.trunc is None or e < self.trunc

    def support(self) -> list[int]:
        return sorted(self.coeffs)

    def is_zero(self) -> bool:
        """True when the known part vanishes.  Exact zero iff also trunc is None."""
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        """Strict representation equality (same window, same terms).

        Use :meth:`same_series` for mathematical agreement on the shared
        window.
        """
        if not isinstance(other, LaurentElement):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.trunc == other.trunc
            and self.coeffs == other.coeffs
        )

    __hash__ = None  # type: ignore[assignment]

    def same_series(self, other: "LaurentElement") -> bool:
        """Do the two series agree at every jointly-known exponent?"""
        if not isinstance(other, LaurentElement):
            raise DomainError("same_series compares Laurent elements")
        if self.ring != other.ring:
            raise RingMismatchError("cannot compare series over different rings")
        if self.trunc is None and other.trunc is None:
            return self.coeffs == other.coeffs
        cut = min(t for t in (self.trunc, other.trunc) if t is not None)
        exps = set(self.coeffs) | set(other.coeffs)
        for e in exps:
            if e >= cut:
                continue
            if self.coeffs.get(e, self.ring.zero()) != other.coeffs.get(e, self.ring.zero()):
                return False
        return True

    def __repr__(self) -> str:
        if not self.coeffs:
            body = "0"
        else:
            bits = []
            for e in sorted(self.coeffs):
                c = self.coeffs[e]
                cs = repr(c)
                if not c.is_constant() and len(c.coeffs) > 1:
                    cs = f"({cs})"
                if e == 0:
                    bits.append(cs)
                elif e == 1:
                    bits.append(f"{cs}*z" if cs != "1" else "z")
                else:
                    bits.append(f"{cs}*z^{e}" if cs != "1" else f"z^{e}")
            body = " + ".join(bits)
        if self.trunc is not None:
            body += f" + O(z^{self.trunc})"
        return body

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other: "LaurentElement") -> None:
        if self.ring != other.ring:
            raise RingMismatchError("Laurent elements over different coefficient rings")

    def __add__(self, other):
        if isinstance(other, (int, Fraction, RingElement)):
            other = LaurentElement.const(self.ring, other)
        if not isinstance(other, LaurentElement):
            return NotImplemented
        self._check(other)
        if self.trunc is None:
            trunc = other.trunc
        elif other.trunc is None:
            trunc = self.trunc
        else:
            trunc = min(self.trunc, other.trunc)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = out.get(e)
            s = c if s is None else s + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentElement(self.ring, out, trunc)

    __radd__ = __add__

    def __neg__(self) -> "LaurentElement":
        return LaurentElement(self.ring, {e: -c for e, c in self.coeffs.items()}, self.trunc)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, RingElement)):
            other = LaurentElement.const(self.ring, other)
        if not isinstance(other, LaurentElement):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, RingElement)):
            other = LaurentElement.const(self.ring, other)
        if not isinstance(other, LaurentElement):
            return NotImplemented
        self._check(other)
        low_s, low_o = self._low(), other._low()
        # an exact zero annihilates everything, unknown tails included
        if low_s is None or low_o is None:
            if (low_s is None and self.trunc is None) or (low_o is None and other.trunc is None):
                return LaurentElement.zero(self.ring)
        candidates = []
        if self.trunc is not None:
            candidates.append(self.trunc + (low_o if low_o is not None else 0))
        if other.trunc is not None:
            candidates.append(other.trunc + (low_s if low_s is not None else 0))
        trunc = min(candidates) if candidates else None
        out: dict[int, RingElement] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                if trunc is not None and e >= trunc:
                    continue
                p = c1 * c2
                if not p:
                    continue
                s = out.get(e)
                s = p if s is None else s + p
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return LaurentElement(self.ring, out, trunc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentElement":
        if not isinstance(n, int) or n < 0:
            raise DomainError("only nonnegative integer powers are supported")
        result = LaurentElement.one(self.ring)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, n: int) -> "LaurentElement":
        """Multiply by z^n."""
        return LaurentElement(
            self.ring,
            {e + n: c for e, c in self.coeffs.items()},
            None if self.trunc is None else self.trunc + n,
        )

    def truncate(self, order: int) -> "LaurentElement":
        """Forget everything at exponent >= order."""
        t = order if self.trunc is None else min(self.trunc, order)
        return LaurentElement(self.ring, self.coeffs, t)

    def clip_below(self, n: int) -> "LaurentElement":
        """Drop all terms at exponents < n (a projection, not a window change)."""
        return LaurentElement(
            self.ring, {e: c for e, c in self.coeffs.items() if e >= n}, self.trunc
        )

    def derivative(self) -> "LaurentElement":
        out = {}
        for e, c in self.coeffs.items():
            if e != 0:
                out[e - 1] = c * e
        trunc = None if self.trunc is None else self.trunc - 1
        return LaurentElement(self.ring, out, trunc)

    def residue(self) -> RingElement:
        """The coefficient of z^{-1}; raises if the window ends at or below it."""
        return self.coefficient(-1)

    def map_coefficients(self, target: CoeffRing, fn) -> "LaurentElement":
        """Apply a coefficient-ring map (e.g. substitution) to every term."""
        out = {}
        for e, c in self.coeffs.items():
            v = fn(c)
            if v.ring != target:
                raise RingMismatchError("map produced a coefficient outside the target ring")
            if v:
                out[e] = v
        return LaurentElement(target, out, self.trunc)

    # -- valuation and inversion ----------------------------------------------

    def reduced_valuation(self) -> tuple[int, int]:
        """(n, r): n = lowest exponent with a unit coefficient, r = n - min support.

        Raises NotInvertibleError when the element provably has no unit
        coefficient (exactly-known, all nilpotent or zero) and
        PrecisionError when a unit could still be hiding past the window.
        """
        unit_exp = None
        for e in sorted(self.coeffs):
            if self.coeffs[e].is_unit():
                unit_exp = e
                break
        if unit_exp is None:
            if self.trunc is None:
                raise NotInvertibleError(
                    "series has no unit coefficient; it is not invertible"
                )
            raise PrecisionError("valuation undetermined at this precision")
        low = min(self.coeffs)
        return unit_exp, unit_exp - low

    def inverse(self, window: int | None = None) -> "LaurentElement":
        """Multiplicative inverse.

        For exactly-known input whose non-lowest-unit part is entirely
        nilpotent the inverse is again exact (finite geometric series).
        Otherwise the inverse is an infinite series, so a window is
        required: either the input's own truncation order (which bounds
        what is determined anyway) or an explicit ``window=`` for exact
        polynomial input.
        """
        n, r = self.reduced_valuation()
        h = self.shift(-n)  # unit constant term, nilpotent fringe on [-r, 0)
        c0 = h.coefficient(0)
        d = self.ring.degree_bound

        if self.trunc is None:
            rest = {e: c for e, c in h.coeffs.items() if e != 0}
            if all(c.is_nilpotent() for c in rest.values()):
                # exact path: h = c0 (1 + w) with w nilpotent
                w = LaurentElement(self.ring, rest, None) * c0.inverse()
                inv = LaurentElement.one(self.ring)
                power = LaurentElement.one(self.ring)
                while True:
                    power = power * (-w)
                    if power.is_zero():
                        break
                    inv = inv + power
                return (inv * c0.inverse()).shift(-n)
            if window is None:
                raise DomainError(
                    "inverse is an infinite series; pass window= for exact input"
                )
            trunc_out = window
        else:
            # determined strictly below trunc - 2n - d*r in absolute exponent
            trunc_out = self.trunc - 2 * n - d * r
            if window is not None:
                trunc_out = min(trunc_out, window)

        # windowed path: invert the regular part by power-series recursion,
        # then peel the nilpotent fringe with a terminating geometric series.
        w_work = trunc_out + n + d * r + 1  # room for the fringe to push down
        if w_work < 1:
            w_work = 1
        reg = [h.coeffs.get(i, self.ring.zero()) for i in range(w_work)]
        c0_inv = c0.inverse()
        inv_reg = [c0_inv]
        for k in range(1, w_work):
            acc = self.ring.zero()
            for j in range(1, k + 1):
                if reg[j]:
                    acc = acc + reg[j] * inv_reg[k - j]
            inv_reg.append(-(c0_inv * acc))
        reg_inv = LaurentElement(
            self.ring, {i: c for i, c in enumerate(inv_reg)}, w_work
        )
        h_nil = LaurentElement(
            self.ring, {e: c for e, c in h.coeffs.items() if e < 0}, None
        )
        if h_nil.is_zero():
            h_inv = reg_inv
        else:
            u = reg_inv * h_nil  # all coefficients nilpotent
            geo = LaurentElement.one(self.ring)
            power = LaurentElement.one(self.ring)
            for _ in range(d):
                power = power * (-u)
                if power.is_zero():
                    break
                geo = geo + power
            h_inv = geo * reg_inv
        return h_inv.shift(-n).truncate(trunc_out)

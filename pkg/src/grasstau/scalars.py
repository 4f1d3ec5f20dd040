"""Exact scalars and truncated polynomial coefficient rings.

Two layers live here.  ``BaseField`` wraps exact field arithmetic for the
rationals (``fractions.Fraction``) or a prime field (ints reduced mod p).
``CoeffRing`` is the truncated polynomial ring k[x_1..x_m] in which every
monomial whose weighted total degree exceeds the bound is identically
zero.  Weights default to 1 for every variable; rings used for tau/Schur
coordinates assign weight i to x_i so that truncation matches the grading
by partition size.

Truncation makes the ring local: an element is a unit exactly when its
constant term is nonzero, and every non-unit is nilpotent.  That is what
keeps all the series manipulations downstream finite and exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator

from .errors import DomainError, NotInvertibleError, RingMismatchError

Monomial = tuple[int, ...]


class BaseField:
    """The rationals (char == 0) or the prime field F_p (char == p).

    Values are raw: ``Fraction`` for char 0, ints in [0, p) for char p.
    Keeping values unboxed keeps the inner loops cheap; the field object
    is only consulted at operation sites.
    """

    def __init__(self, char: int = 0):
        if char < 0 or char == 1:
            raise DomainError(f"invalid field characteristic {char}")
        if char > 1 and not _is_prime(char):
            raise DomainError(f"field characteristic {char} is not prime")
        self.char = char

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BaseField) and self.char == other.char

    def __hash__(self) -> int:
        return hash(("BaseField", self.char))

    def __repr__(self) -> str:
        return "QQ" if self.char == 0 else f"GF({self.char})"

    # -- raw value arithmetic -------------------------------------------

    def from_int(self, n: int):
        if self.char == 0:
            return Fraction(n)
        return n % self.char

    def coerce(self, value):
        """Accept ints, Fractions (char 0 only), or already-raw values."""
        if isinstance(value, bool):
            raise DomainError("booleans are not field values")
        if isinstance(value, int):
            return self.from_int(value)
        if self.char == 0 and isinstance(value, Fraction):
            return value
        raise DomainError(f"cannot coerce {value!r} into {self!r}")

    def add(self, a, b):
        return (a + b) if self.char == 0 else (a + b) % self.char

    def sub(self, a, b):
        return (a - b) if self.char == 0 else (a - b) % self.char

    def mul(self, a, b):
        return (a * b) if self.char == 0 else (a * b) % self.char

    def neg(self, a):
        return -a if self.char == 0 else (-a) % self.char

    def invert(self, a):
        if not a:
            raise NotInvertibleError(f"zero is not invertible in {self!r}")
        if self.char == 0:
            return 1 / a
        return pow(a, -1, self.char)

    def zero(self):
        return Fraction(0) if self.char == 0 else 0

    def one(self):
        return Fraction(1) if self.char == 0 else 1

    # -- parsing / formatting (used by the JSON layer) ------------------

    def parse(self, text: str):
        """Read a scalar from its serialized form: "3/4", "-2", "5"."""
        text = text.strip()
        if self.char == 0:
            try:
                return Fraction(text)
            except (ValueError, ZeroDivisionError) as exc:
                raise DomainError(f"bad rational literal {text!r}") from exc
        try:
            return int(text, 10) % self.char
        except ValueError as exc:
            raise DomainError(f"bad residue literal {text!r}") from exc

    def format(self, value) -> str:
        return str(value)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


QQ = BaseField(0)


def GF(p: int) -> BaseField:
    return BaseField(p)


class CoeffRing:
    """Truncated polynomial ring: monomials of weighted degree > bound vanish.

    ``weights`` assigns a positive integer weight to each variable; the
    weighted degree of a monomial is sum(w_i * e_i).  The default weight 1
    for every variable gives plain total-degree truncation.
    """

    def __init__(
        self,
        field: BaseField,
        num_vars: int,
        degree_bound: int,
        weights: tuple[int, ...] | None = None,
    ):
        if num_vars < 0:
            raise DomainError("num_vars must be >= 0")
        if degree_bound < 0:
            raise DomainError("degree_bound must be >= 0")
        if weights is None:
            weights = (1,) * num_vars
        else:
            weights = tuple(weights)
            if len(weights) != num_vars:
                raise DomainError("weights length must equal num_vars")
            if any(w < 1 for w in weights):
                raise DomainError("weights must be positive integers")
        self.field = field
        self.num_vars = num_vars
        self.degree_bound = degree_bound
        self.weights = weights

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, CoeffRing)
            and self.field == other.field
            and self.num_vars == other.num_vars
            and self.degree_bound == other.degree_bound
            and self.weights == other.weights
        )

    def __hash__(self) -> int:
        return hash((self.field, self.num_vars, self.degree_bound, self.weights))

    def __repr__(self) -> str:
        tag = f"{self.field!r}[x1..x{self.num_vars}]"
        if self.weights != (1,) * self.num_vars:
            tag += f" wt{self.weights}"
        return f"{tag} / (deg > {self.degree_bound})"

    # -- monomial helpers ------------------------------------------------

    def weight(self, mono: Monomial) -> int:
        return sum(w * e for w, e in zip(self.weights, mono))

    def monomials(self) -> Iterator[Monomial]:
        """All surviving monomials, constant first, in a deterministic order."""

        def rec(i: int, budget: int, prefix: list[int]) -> Iterator[Monomial]:
            if i == self.num_vars:
                yield tuple(prefix)
                return
            w = self.weights[i]
            for e in range(budget // w + 1):
                prefix.append(e)
                yield from rec(i + 1, budget - w * e, prefix)
                prefix.pop()

        yield from rec(0, self.degree_bound, [])

    def monomials_of_weight(self, w: int) -> list[Monomial]:
        return [m for m in self.monomials() if self.weight(m) == w]

    # -- element constructors --------------------------------------------

    def element(self, coeffs: dict) -> "RingElement":
        """Build an element from {monomial tuple: coefficient}."""
        clean: dict[Monomial, object] = {}
        for mono, c in coeffs.items():
            mono = tuple(mono)
            if len(mono) != self.num_vars or any(e < 0 for e in mono):
                raise DomainError(f"bad monomial {mono} for {self!r}")
            if self.weight(mono) > self.degree_bound:
                continue
            c = self.field.coerce(c) if not _is_raw(self.field, c) else c
            if c:
                clean[mono] = c
        return RingElement(self, clean)

    def const(self, value) -> "RingElement":
        c = self.field.coerce(value) if not _is_raw(self.field, value) else value
        mono = (0,) * self.num_vars
        return RingElement(self, {mono: c} if c else {})

    def zero(self) -> "RingElement":
        return RingElement(self, {})

    def one(self) -> "RingElement":
        return self.const(1)

    def gen(self, i: int) -> "RingElement":
        """The variable x_{i+1} (0-based index)."""
        if not 0 <= i < self.num_vars:
            raise DomainError(f"no generator {i} in {self!r}")
        mono = tuple(1 if j == i else 0 for j in range(self.num_vars))
        if self.weight(mono) > self.degree_bound:
            return self.zero()
        return RingElement(self, {mono: self.field.one()})


def _is_raw(field: BaseField, value) -> bool:
    if field.char == 0:
        return isinstance(value, Fraction)
    return isinstance(value, int) and not isinstance(value, bool) and 0 <= value < field.char


class RingElement:
    """A sparse element of a ``CoeffRing``.

    Invariants: no stored zero coefficients and no monomials past the
    degree bound.  Instances are treated as immutable.
    """

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: CoeffRing, coeffs: dict):
        self.ring = ring
        self.coeffs = coeffs

    # -- inspection -------------------------------------------------------

    def coefficient(self, mono: Monomial):
        return self.coeffs.get(tuple(mono), self.ring.field.zero())

    def constant_term(self):
        return self.coeffs.get((0,) * self.ring.num_vars, self.ring.field.zero())

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        zero_mono = (0,) * self.ring.num_vars
        return all(m == zero_mono for m in self.coeffs)

    def is_unit(self) -> bool:
        return bool(self.constant_term())

    def is_nilpotent(self) -> bool:
        return not self.constant_term()

    def terms(self) -> Iterator[tuple[Monomial, object]]:
        return iter(sorted(self.coeffs.items()))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = self.ring.const(other)
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        bits = []
        for mono, c in sorted(self.coeffs.items(), key=lambda t: (self.ring.weight(t[0]), t[0])):
            vars_part = "*".join(
                f"x{i + 1}" + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(mono)
                if e
            )
            if vars_part:
                bits.append(f"{c}*{vars_part}" if c != 1 else vars_part)
            else:
                bits.append(str(c))
        return " + ".join(bits)

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "RingElement":
        if isinstance(other, RingElement):
            if other.ring != self.ring:
                raise RingMismatchError(
                    f"cannot combine elements of {self.ring!r} and {other.ring!r}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other) -> "RingElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        field = self.ring.field
        out = dict(self.coeffs)
        for mono, c in other.coeffs.items():
            s = field.add(out.get(mono, field.zero()), c)
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        return RingElement(self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> "RingElement":
        field = self.ring.field
        return RingElement(self.ring, {m: field.neg(c) for m, c in self.coeffs.items()})

    def __sub__(self, other) -> "RingElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RingElement":
        return (-self) + other

    def __mul__(self, other) -> "RingElement":
        if isinstance(other, (int, Fraction)):
            field = self.ring.field
            try:
                c = field.coerce(other)
            except DomainError:
                return NotImplemented
            if not c:
                return self.ring.zero()
            out = {}
            for mono, a in self.coeffs.items():
                p = field.mul(a, c)
                if p:
                    out[mono] = p
            return RingElement(self.ring, out)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        ring = self.ring
        field = ring.field
        bound = ring.degree_bound
        weights = ring.weights
        out: dict[Monomial, object] = {}
        for m1, c1 in self.coeffs.items():
            w1 = ring.weight(m1)
            for m2, c2 in other.coeffs.items():
                if w1 + ring.weight(m2) > bound:
                    continue
                mono = tuple(a + b for a, b in zip(m1, m2))
                if sum(w * e for w, e in zip(weights, mono)) > bound:
                    continue
                p = field.mul(c1, c2)
                prev = out.get(mono)
                s = field.add(prev, p) if prev is not None else p
                if s:
                    out[mono] = s
                else:
                    out.pop(mono, None)
        return RingElement(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "RingElement":
        if not isinstance(n, int) or n < 0:
            raise DomainError("only nonnegative integer powers are supported")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "RingElement":
        """Inverse in the truncated ring.

        Write f = c (1 + u) with u nilpotent; then 1/f is the finite
        geometric series c^{-1} sum (-u)^k, which terminates because some
        power of u falls entirely past the degree bound.
        """
        c = self.constant_term()
        if not c:
            raise NotInvertibleError("element has zero constant term")
        field = self.ring.field
        cinv = field.invert(c)
        u = (self * cinv) - self.ring.one()
        acc = self.ring.one()
        power = self.ring.one()
        while True:
            power = power * (-u)
            if power.is_zero():
                break
            acc = acc + power
        return acc * cinv

    # -- substitution ---------------------------------------------------------

    def evaluate(self, target: CoeffRing, images: list["RingElement"]) -> "RingElement":
        """Apply the ring map sending x_i to images[i].

        The base field must agree; each image must live in ``target``.
        Used for variable relabeling, projections x_i -> 0, and the
        coproduct substitution in the Baker function machinery.
        """
        if target.field != self.ring.field:
            raise RingMismatchError("evaluate requires the same base field")
        if len(images) != self.ring.num_vars:
            raise DomainError("need one image per variable")
        for img in images:
            if img.ring != target:
                raise RingMismatchError("images must belong to the target ring")
        pow_cache: dict[tuple[int, int], RingElement] = {}

        def image_power(i: int, e: int) -> RingElement:
            if e == 0:
                return target.one()
            got = pow_cache.get((i, e))
            if got is None:
                got = images[i] ** e
                pow_cache[(i, e)] = got
            return got

        total = target.zero()
        for mono, c in self.coeffs.items():
            term = target.const(c)
            for i, e in enumerate(mono):
                if e and not term.is_zero():
                    term = term * image_power(i, e)
            total = total + term
        return total

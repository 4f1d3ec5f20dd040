"""Tau polynomials, the Baker function, and the KP residual.

The tau polynomial of a point U (over the base field, in the vacuum
chart) at degree bound d is the vacuum minor of v.U divided by the
vacuum minor of U, where v = 1 + x_1 z^{-1} + ... + x_d z^{-d} is the
universal lower-wing element over the weighted coordinate ring.  Two
independent routes compute it:

* ``tau_direct``: move the point by v and take the minor ratio;
* ``tau_schur``: expand the vacuum minor of v.U over the charts of U,
  which gives sum_lam F_lam * (minor_lam(U) / vacuum minor).

They must agree exactly; keeping both is the point of the design.

``baker`` produces the associated wave series: shift the tau argument by
the moving-point family (the coproduct substitution x_i -> sum x_j t^k,
j + k = i, with x_0 = 1), divide by the unshifted tau, read t as z, and
multiply by v^{-1}.  Working at the inflated internal bound d + window
makes every reported z-coefficient exact: the graded pieces that the
truncation loses all sit past the weight bound once the z-exponent is
inside the window.

``kp_residual`` evaluates the bilinear residue identity that
characterizes tau functions, in time coordinates T_j (weight j) with
x_i = H_i(T) the complete homogeneous functions of the times.  The shift
by [z^{-1}] has closed forms H_i -> H_i - H_{i-1} u respectively
H_i -> sum_k H_{i-k} u^k (u = 1/z), so both sides are short polynomials
in u and the residue is a single finite double sum.  The residual of a
degree-d tau polynomial is provably exact in joint weight <= d - 1, so
checking through weight order+2 needs order <= d - 3.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction

from .errors import DomainError, NotInvertibleError, PrecisionError, RingMismatchError
from .gamma import GammaElement, universal_v
from .grassmann import GrassPoint, act, plucker
from .laurent import LaurentElement
from .partitions import MayaDiagram, partitions_up_to
from .scalars import CoeffRing, RingElement
from .schur import coordinate_ring, is_coordinate_ring, schur_polynomial


def _lift_point(point: GrassPoint, target: CoeffRing) -> GrassPoint:
    """Re-read a point over the base field inside a coordinate ring."""
    if point.ring.field != target.field:
        raise RingMismatchError("point and coordinate ring use different base fields")
    cols = []
    for c in point.columns:
        out = {}
        for e, coeff in c.coeffs.items():
            if not coeff.is_constant():
                raise DomainError("tau needs a point with scalar coefficients")
            out[e] = target.const(coeff.constant_term())
        cols.append(LaurentElement(target, out, c.trunc))
    return GrassPoint(target, point.tail_depth, cols)


def _vacuum_unit(point: GrassPoint) -> RingElement:
    delta = plucker(point, MayaDiagram.vacuum())
    if not delta.is_unit():
        raise NotInvertibleError(
            "point is not in the vacuum chart; the tau normalization needs "
            "an invertible vacuum minor"
        )
    return delta


def _require_window(point: GrassPoint, need: int) -> None:
    m = point.window_high
    if m is not None and m < need:
        raise PrecisionError(
            f"columns are known only below z^{m}; degree bound needs z^{need}"
        )


def tau_direct(point: GrassPoint, bound: int) -> RingElement:
    """Vacuum minor of v.point over the vacuum minor of point."""
    if bound < 1:
        raise DomainError("degree bound must be >= 1")
    _require_window(point, bound)
    v = universal_v(point.ring.field, bound)
    lifted = _lift_point(point, v.ring)
    delta = _vacuum_unit(lifted)
    moved = act(v, lifted)
    return plucker(moved, MayaDiagram.vacuum()) * delta.inverse()


def tau_schur(point: GrassPoint, bound: int) -> RingElement:
    """Chart expansion: sum over |lam| <= bound of F_lam times the
    normalized lam-minor of the point."""
    if bound < 1:
        raise DomainError("degree bound must be >= 1")
    _require_window(point, bound)
    ring_d = coordinate_ring(point.ring.field, bound)
    delta = _vacuum_unit(point)
    dinv = delta.inverse()
    total = ring_d.zero()
    for lam in partitions_up_to(bound):
        minor = plucker(point, MayaDiagram.from_partition(lam))
        if minor.is_zero():
            continue
        coeff = minor * dinv
        if not coeff.is_constant():
            raise DomainError("tau needs a point with scalar coefficients")
        total = total + schur_polynomial(ring_d, lam) * ring_d.const(
            coeff.constant_term()
        )
    return total


def tau_crosscheck(point: GrassPoint, bound: int) -> RingElement:
    """Run both routes and insist they agree exactly."""
    a = tau_direct(point, bound)
    b = tau_schur(point, bound)
    if a != b:
        raise DomainError("internal: the two tau routes disagree")
    return a


def tau_eval(point: GrassPoint, g: GammaElement, promote: int | None = None) -> RingElement:
    """Normalized vacuum minor of g.point, over the point's own ring.

    Multiplicative up to a central unit: with lower-triangular factors
    (and no promotion) tau(g1 g2 at U) equals tau(g1 at g2 U) times
    tau(g2 at U) on the nose; for general factors the two sides differ
    by a unit that depends on the wings of g1, g2 and the tail depth,
    but not on the point.
    """
    delta = _vacuum_unit(point)
    moved = act(g, point, promote=promote)
    return plucker(moved, MayaDiagram.vacuum()) * delta.inverse()


# ----------------------------------------------------------------------
# Baker function
# ----------------------------------------------------------------------


def baker(point: GrassPoint, bound: int, window: int) -> LaurentElement:
    """The wave series of the point: v^{-1} * tau(shifted)/tau, with
    coefficients in the degree-``bound`` coordinate ring, exact at every
    z-exponent below ``window``.

    The point's columns must be known to z^(bound + window).
    """
    if bound < 1:
        raise DomainError("degree bound must be >= 1")
    if window < 1:
        raise DomainError("window must be >= 1")
    field = point.ring.field
    big = bound + window
    _require_window(point, big)
    tau_big = tau_direct(point, big)

    # joint ring in x_1..x_big and the shift variable t (weight 1)
    tring = CoeffRing(field, big + 1, big, weights=tuple(range(1, big + 1)) + (1,))
    t = tring.gen(big)
    xs = [tring.gen(i) for i in range(big)]
    images = []
    for i in range(1, big + 1):
        img = t ** i
        for j in range(1, i + 1):
            img = img + xs[j - 1] * (t ** (i - j) if i > j else tring.one())
        images.append(img)
    shifted = tau_big.evaluate(tring, images)
    base = tau_big.evaluate(tring, xs)
    ratio = shifted * base.inverse()

    # read t as z and project the x part down to the requested bound
    ring_small = coordinate_ring(field, bound)
    per_k: dict[int, dict] = defaultdict(dict)
    for mono, coeff in ratio.coeffs.items():
        k = mono[-1]
        xm = mono[:-1]
        if any(xm[i] for i in range(bound, big)):
            continue  # x_{> bound} project to zero
        small = xm[:bound]
        if ring_small.weight(small) > bound:
            continue
        per_k[k][small] = coeff
    c_elem = {k: RingElement(ring_small, d) for k, d in per_k.items()}

    v_terms = {0: ring_small.one()}
    for i in range(1, bound + 1):
        v_terms[-i] = ring_small.gen(i - 1)
    v_small = LaurentElement(ring_small, v_terms, None)
    vinv = v_small.inverse()  # exact: nilpotent fringe

    # graded-window argument: coefficient j of v^{-1} * ratio(t -> z) is
    # exact for every j < window, because the missing graded pieces of
    # c_{j - e} carry weight beyond the bound once multiplied by the
    # weight-|e| coefficient of v^{-1}
    psi: dict[int, RingElement] = {}
    for j in range(-bound, window):
        acc = ring_small.zero()
        for e, vc in vinv.coeffs.items():
            ck = c_elem.get(j - e)
            if ck is not None:
                acc = acc + vc * ck
        if acc:
            psi[j] = acc
    return LaurentElement(ring_small, psi, window)


# ----------------------------------------------------------------------
# KP residual
# ----------------------------------------------------------------------


def kp_residual(tau_poly: RingElement, order: int) -> RingElement:
    """Residue of tau(T - [1/z]) tau(T' + [1/z]) exp(sum (T_j - T'_j) z^j),
    as a polynomial in the times, computed through joint weight order+2.

    Identically zero exactly when the polynomial is a genuine tau (the
    residual is the generating function of the quadratic chart
    relations).  Needs characteristic zero and order <= bound - 3.
    """
    ring = tau_poly.ring
    if not is_coordinate_ring(ring):
        raise DomainError("kp_residual expects the weighted coordinate ring")
    field = ring.field
    if field.char != 0:
        raise DomainError("the residue identity uses exponentials: characteristic zero only")
    if order < 0:
        raise DomainError("order must be >= 0")
    d = ring.degree_bound
    w = order + 2
    if d < w + 1:
        raise DomainError(
            f"order {order} needs degree bound >= {order + 3}, have {d}"
        )

    joint = CoeffRing(field, 2 * w, w, weights=tuple(range(1, w + 1)) * 2)
    times = [joint.gen(i) for i in range(w)]
    times_p = [joint.gen(w + i) for i in range(w)]

    def h_family(vals: list[RingElement]) -> list[RingElement]:
        """Complete homogeneous functions of a weighted variable family:
        i*H_i = sum_j (j*vals_j)*H_{i-j}."""
        hs = [joint.one()]
        for i in range(1, d + 1):
            acc = joint.zero()
            for j in range(1, min(i, w) + 1):
                if vals[j - 1]:
                    acc = acc + vals[j - 1] * j * hs[i - j]
            hs.append(acc * Fraction(1, i))
        return hs

    h = h_family(times)
    hp = h_family(times_p)
    e_ser = h_family([times[j] - times_p[j] for j in range(w)])

    cap = w + 2  # u-degrees that can still reach E_{k+m-1} with k+m-1 <= w

    def umul(a: list[RingElement], b: list[RingElement]) -> list[RingElement]:
        out = [joint.zero()] * min(len(a) + len(b) - 1, cap)
        for i, ai in enumerate(a):
            if i >= cap or not ai:
                continue
            for j, bj in enumerate(b):
                if i + j >= cap:
                    break
                if bj:
                    out[i + j] = out[i + j] + ai * bj
        return out

    def upow(base: list[RingElement], e: int) -> list[RingElement]:
        out = [joint.one()]
        for _ in range(e):
            out = umul(out, base)
        return out

    a_side = [joint.zero()] * cap
    b_side = [joint.zero()] * cap
    for mono, coeff in tau_poly.coeffs.items():
        term_a = [joint.const(coeff)]
        term_b = [joint.const(coeff)]
        for i, e in enumerate(mono, start=1):
            if not e:
                continue
            shift_a = [h[i], -h[i - 1]]
            shift_b = [hp[i - k] for k in range(i + 1)]
            term_a = umul(term_a, upow(shift_a, e))
            term_b = umul(term_b, upow(shift_b, e))
        for k, v in enumerate(term_a):
            if v:
                a_side[k] = a_side[k] + v
        for k, v in enumerate(term_b):
            if v:
                b_side[k] = b_side[k] + v

    residual = joint.zero()
    for k, ak in enumerate(a_side):
        if not ak:
            continue
        for m, bm in enumerate(b_side):
            n = k + m - 1
            if n < 0 or n > w or not bm:
                continue
            if e_ser[n]:
                residual = residual + ak * bm * e_ser[n]
    return residual

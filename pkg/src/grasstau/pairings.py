"""Residue and commutator pairings on invertible series.

The residue pairing of two series is res(f * dg/dz): bilinear in the
additive sense and the infinitesimal shadow of the multiplicative one.

The commutator pairing compresses multiplication operators onto the
nonnegative-exponent half-space.  On the full series space the operators
commute, so any determinant of a plain commutator is 1 and carries no
information — the content lives entirely in the compression.  Truncating
the half-space to a finite window [0, W) makes the compressed operators
honest matrices over the coefficient ring; their multiplicative
commutator differs from the identity only inside a corner block whose
size is controlled by the supports, and the pairing is the determinant
of that corner.  The window corruption introduced by cutting at W stays
within d*(p1+p2) of the top, so W just has to exceed the corner by that
margin.
"""

from __future__ import annotations

from .errors import DomainError, PrecisionError, RingMismatchError
from .laurent import LaurentElement
from .linalg import det_ring, inv_ring, mat_mul_ring
from .scalars import RingElement


def residue_pairing(f: LaurentElement, g: LaurentElement) -> RingElement:
    """res(f * g'), the coefficient of z^{-1} of f times the derivative of g."""
    if f.ring != g.ring:
        raise RingMismatchError("residue pairing needs a common ring")
    return (f * g.derivative()).residue()


def _support_radius(f: LaurentElement) -> int:
    if not f.coeffs:
        raise DomainError("the zero series has no pairing")
    return max(1, max(f.coeffs), -min(f.coeffs))


def commutator_pairing(
    f1: LaurentElement, f2: LaurentElement, window: int | None = None
) -> RingElement:
    """Determinant of the corner block of the compressed-commutator matrix.

    Both series must have reduced valuation zero (split off z-powers
    first) and be known out to the working window.  The corner has size
    B = d*(p1+p2)+1 for support radii p_i and nilpotency degree d; the
    window must be at least B + d*(p1+p2) so the cut-off corruption never
    reaches the corner.
    """
    if f1.ring != f2.ring:
        raise RingMismatchError("commutator pairing needs a common ring")
    ring = f1.ring
    d = ring.degree_bound
    for f in (f1, f2):
        n, _ = f.reduced_valuation()
        if n != 0:
            raise DomainError(
                "commutator pairing needs valuation-zero series; factor out z^n first"
            )
    p1 = _support_radius(f1)
    p2 = _support_radius(f2)
    corner = d * (p1 + p2) + 1
    w_min = corner + d * (p1 + p2)
    w = w_min if window is None else window
    if w < w_min:
        raise PrecisionError(
            f"pair window {w} too small for these supports; need >= {w_min}"
        )
    for f in (f1, f2):
        if f.trunc is not None and f.trunc < w:
            raise PrecisionError(
                f"series known only below z^{f.trunc}; the window needs z^{w}"
            )

    def toeplitz(f: LaurentElement) -> list[list[RingElement]]:
        return [
            [f.coeffs.get(i - j, ring.zero()) for j in range(w)]
            for i in range(w)
        ]

    m1 = toeplitz(f1)
    m2 = toeplitz(f2)
    m1_inv = inv_ring(m1, ring)
    m2_inv = inv_ring(m2, ring)
    c = mat_mul_ring(
        mat_mul_ring(m1, m2, ring), mat_mul_ring(m1_inv, m2_inv, ring), ring
    )
    block = [row[:corner] for row in c[:corner]]
    return det_ring(block, ring)

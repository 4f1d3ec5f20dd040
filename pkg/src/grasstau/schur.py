"""Schur polynomials in the weighted chart coordinates, and the
coefficient-to-polynomial dictionary.

The coordinate ring for degree bound d has variables x_1..x_d with
weight(x_i) = i, truncated past total weight d.  In these coordinates
x_i plays the role of the i-th complete homogeneous symmetric function,
and the polynomial attached to a partition is the Jacobi-Trudi
determinant

    F_lam = det( x_{lam_i - i + j} )    (x_0 = 1, x_{<0} = 0).

F_lam is weighted-homogeneous of weight |lam|, and the F_lam with
|lam| <= d form a basis: per weight w the monomials of weight w and the
partitions of w are in bijection, so the change of basis is a square
(invertible) matrix solved once and cached.

``bosonize`` sends a family of chart coefficients to the corresponding
polynomial; ``duality_pair`` is the bilinear form that makes the F_lam
orthonormal.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import DomainError, RingMismatchError
from .linalg import det_ring, inv_field
from .partitions import Partition, check_partition, partition_size, partitions_of
from .scalars import BaseField, CoeffRing, RingElement


def coordinate_ring(field: BaseField, bound: int) -> CoeffRing:
    """The canonical weighted chart-coordinate ring for a degree bound."""
    if bound < 0:
        raise DomainError("bound must be >= 0")
    return CoeffRing(field, bound, bound, weights=tuple(range(1, bound + 1)))


def is_coordinate_ring(ring: CoeffRing) -> bool:
    return (
        ring.weights == tuple(range(1, ring.num_vars + 1))
        and ring.degree_bound <= ring.num_vars
    )


def _require_coordinate_ring(ring: CoeffRing) -> None:
    if not is_coordinate_ring(ring):
        raise DomainError(
            "Schur machinery needs the weighted coordinate ring "
            "(weights 1..m, degree bound <= m)"
        )


@lru_cache(maxsize=None)
def schur_polynomial(ring: CoeffRing, lam: Partition) -> RingElement:
    """Jacobi-Trudi determinant for the partition; identically zero once
    |lam| exceeds the degree bound (the whole weight component vanishes)."""
    _require_coordinate_ring(ring)
    lam = check_partition(lam)
    if partition_size(lam) > ring.degree_bound:
        return ring.zero()
    ell = len(lam)
    if ell == 0:
        return ring.one()

    def h(k: int) -> RingElement:
        if k < 0:
            return ring.zero()
        if k == 0:
            return ring.one()
        return ring.gen(k - 1)  # k <= lam_1 + ell - 1 <= |lam| <= num_vars

    mat = [
        [h(lam[i] - (i + 1) + (j + 1)) for j in range(ell)]
        for i in range(ell)
    ]
    return det_ring(mat, ring)


@lru_cache(maxsize=None)
def _weight_basis(ring: CoeffRing, w: int):
    """(monomials of weight w, partitions of w, inverse change of basis).

    Columns of the forward matrix are the monomial coefficient vectors of
    the F_lam; its inverse turns monomial coefficients into Schur
    coordinates.
    """
    monos = ring.monomials_of_weight(w)
    lams = list(partitions_of(w))
    if len(monos) != len(lams):  # pragma: no cover - guarded by ring check
        raise DomainError("weight component is not square against partitions")
    fwd = [
        [schur_polynomial(ring, lam).coefficient(m) for lam in lams]
        for m in monos
    ]
    return monos, lams, inv_field(fwd, ring.field)


def to_schur_coords(p: RingElement) -> dict[Partition, object]:
    """Write p as sum c_lam F_lam; returns the nonzero coefficients."""
    ring = p.ring
    _require_coordinate_ring(ring)
    field = ring.field
    weights_present = sorted({ring.weight(m) for m in p.coeffs})
    out: dict[Partition, object] = {}
    for w in weights_present:
        monos, lams, inv = _weight_basis(ring, w)
        b = [p.coeffs.get(m, field.zero()) for m in monos]
        for i, lam in enumerate(lams):
            c = field.zero()
            for j, bj in enumerate(b):
                if bj:
                    c = field.add(c, field.mul(inv[i][j], bj))
            if c:
                out[lam] = c
    return out


def bosonize(ring: CoeffRing, coords: dict) -> RingElement:
    """sum of c_lam F_lam for a finite family of chart coefficients.

    Coefficients may be field scalars or constant ring elements (as the
    chart minors over a base field naturally are).  Partitions of size
    beyond the degree bound contribute nothing.
    """
    _require_coordinate_ring(ring)
    total = ring.zero()
    for lam, c in coords.items():
        lam = check_partition(lam)
        if isinstance(c, RingElement):
            if not c.is_constant():
                raise DomainError("chart coefficients must be scalars")
            c = c.constant_term()
        total = total + schur_polynomial(ring, lam) * ring.const(c)
    return total


def duality_pair(p: RingElement, q: RingElement):
    """The bilinear form with <F_lam, F_mu> = delta; returns a field value."""
    if p.ring != q.ring:
        raise RingMismatchError("duality pairing needs a common ring")
    cp = to_schur_coords(p)
    cq = to_schur_coords(q)
    field = p.ring.field
    total = field.zero()
    for lam, a in cp.items():
        b = cq.get(lam)
        if b is not None:
            total = field.add(total, field.mul(a, b))
    return total

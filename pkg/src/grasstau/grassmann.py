"""Points of the series Grassmannian and their chart coordinates.

A point is a discrete submodule of the Laurent series space that agrees
with the standard tail span{z^e : e <= -(tail_depth+1)} from some depth
on.  It is stored as that tail depth plus the finitely many explicit
columns, each a Laurent element supported at exponents >= -tail_depth
(components inside the tail are reduced away; that is a column operation
and changes no minors).

The base point has tail depth N and columns z^{-N}, ..., z^{-1}: the
span of all negative exponents.

Charts are labelled by Maya diagrams S.  The minor of a point in chart S
is the determinant of the rows S picks out of the column matrix, rows
sorted by increasing exponent, columns in frame order.  The infinite
tail contributes an identity block that sits strictly below every
explicit row, so it never introduces a sign, and the base point's vacuum
minor is exactly 1.

The index of a point is rank(window matrix over the residue field) minus
the tail depth; for points in the zero-index sector the charge-zero Maya
diagrams (equivalently partitions) index the charts that can be hit.
"""

from __future__ import annotations

from .errors import DomainError, NotInvertibleError, PrecisionError, RingMismatchError
from .gamma import GammaElement
from .laurent import LaurentElement
from .linalg import det_ring, echelon_field, rank_field, solve_field
from .partitions import MayaDiagram
from .scalars import CoeffRing, RingElement


class GrassPoint:
    """tail span {z^e : e <= -(tail_depth+1)} plus explicit columns."""

    __slots__ = ("ring", "tail_depth", "columns")

    def __init__(self, ring: CoeffRing, tail_depth: int, columns):
        if tail_depth < 0:
            raise DomainError("tail_depth must be >= 0")
        cols = list(columns)
        for c in cols:
            if not isinstance(c, LaurentElement) or c.ring != ring:
                raise RingMismatchError("columns must be Laurent elements over the ring")
            if any(e < -tail_depth for e in c.coeffs):
                raise DomainError(
                    "column has components inside the tail; reduce them away first"
                )
        self.ring = ring
        self.tail_depth = tail_depth
        self.columns = cols

    @staticmethod
    def base_point(ring: CoeffRing, depth: int) -> "GrassPoint":
        """The span of all negative exponents, with the given tail depth."""
        cols = [LaurentElement.z_power(ring, e) for e in range(-depth, 0)]
        return GrassPoint(ring, depth, cols)

    @property
    def window_high(self) -> int | None:
        """Exponent where column knowledge ends (None: all columns exact)."""
        truncs = [c.trunc for c in self.columns if c.trunc is not None]
        return min(truncs) if truncs else None

    def __repr__(self) -> str:
        return (
            f"GrassPoint(tail_depth={self.tail_depth}, "
            f"columns={len(self.columns)}, window_high={self.window_high})"
        )


def index(point: GrassPoint) -> int:
    """rank of the window matrix over the residue field, minus tail depth.

    Computed for the residue-field reduction of the point.  Requires the
    window to reach z^0; if truncated columns turn out dependent on the
    visible window the index cannot be pinned down and a PrecisionError
    is raised (exactly-known dependent columns are honestly dependent and
    just lower the rank).
    """
    n_cols = len(point.columns)
    depth = point.tail_depth
    if n_cols == 0:
        return -depth
    m = point.window_high
    if m is not None and m < 0:
        raise PrecisionError("index needs the column window to reach z^0")
    if m is None:
        top = max((max(c.coeffs) for c in point.columns if c.coeffs), default=-depth)
        m = top + 1
    field = point.ring.field
    rows = range(-depth, m)
    mat = [
        [point.columns[j].coeffs.get(e, point.ring.zero()).constant_term()
         for j in range(n_cols)]
        for e in rows
    ]
    r = rank_field(mat, field)
    if r < n_cols:
        if point.window_high is None:
            return r - depth
        raise PrecisionError(
            "columns are dependent on the visible window; index undetermined"
        )
    return n_cols - depth


def _chart_rows(point: GrassPoint, maya: MayaDiagram):
    """Rows the diagram selects, or None when a tail exponent is missing
    (which forces every minor in this chart to vanish)."""
    for e in range(maya.tail_start, -point.tail_depth):
        if e not in maya.members:
            return None
    return maya.members_from(-point.tail_depth)


def plucker(point: GrassPoint, maya: MayaDiagram) -> RingElement:
    """The minor of the point in the chart labelled by the diagram.

    Zero when the diagram misses part of the tail or selects a number of
    rows different from the number of columns; PrecisionError when a
    selected row lies beyond a column's window.
    """
    ring = point.ring
    rows = _chart_rows(point, maya)
    if rows is None:
        return ring.zero()
    if len(rows) != len(point.columns):
        return ring.zero()
    mat = []
    for e in rows:
        row = []
        for col in point.columns:
            if not col.coefficient_known(e):
                raise PrecisionError(
                    f"minor needs the coefficient of z^{e}, beyond the window"
                )
            row.append(col.coeffs.get(e, ring.zero()))
        mat.append(row)
    return det_ring(mat, ring)


def in_chart(point: GrassPoint, maya: MayaDiagram) -> bool:
    """Is the projection onto the chart's coordinate subspace invertible?

    Equivalent to the chart minor being a unit; decided over the residue
    field.  False is definitive; PrecisionError means the window cannot
    tell.
    """
    rows = _chart_rows(point, maya)
    if rows is None:
        return False
    if len(rows) != len(point.columns):
        return False
    field = point.ring.field
    mat = []
    for e in rows:
        row = []
        for col in point.columns:
            if not col.coefficient_known(e):
                raise PrecisionError(
                    "window too small to decide chart membership"
                )
            row.append(col.coeffs.get(e, point.ring.zero()).constant_term())
        mat.append(row)
    return rank_field(mat, field) == len(rows)


def chart_transition(point: GrassPoint, chart_a: MayaDiagram, chart_b: MayaDiagram) -> RingElement:
    """Ratio minor(A) / minor(B); the point must lie in chart B."""
    denom = plucker(point, chart_b)
    if not denom.is_unit():
        raise NotInvertibleError("point is not in the denominator chart")
    return plucker(point, chart_a) * denom.inverse()


def act(g: GammaElement, point: GrassPoint, promote: int | None = None) -> GrassPoint:
    """Multiply the point by a group element (zpower must be 0).

    The lower factor preserves the tail module exactly, so its action is
    just column multiplication followed by tail reduction.  The unit
    rescales the explicit columns (same module; minors pick up unit
    factors).  The upper factor does not preserve the tail, so the top
    ``promote`` tail columns are made explicit before multiplying; the
    result then has every minor correct for diagrams reaching at most
    ``promote`` below the old tail depth (default: the old tail depth).
    """
    if g.ring != point.ring:
        raise RingMismatchError("group element and point live over different rings")
    if g.zpower != 0:
        raise DomainError("action with a z-power shifts the index sector; split it off first")
    ring = point.ring
    depth = point.tail_depth
    cols = point.columns

    gm = g.gminus
    if gm.coeffs != {0: ring.one()}:
        cols = [(gm * c).clip_below(-depth) for c in cols]

    if g.unit != ring.one():
        cols = [c * g.unit for c in cols]

    gp = g.gplus
    if gp.coeffs != {0: ring.one()} or gp.trunc is not None:
        p = point.tail_depth if promote is None else promote
        if p < 0:
            raise DomainError("promote must be >= 0")
        promoted = [
            gp.shift(-(depth + j)) for j in range(p, 0, -1)
        ]
        cols = promoted + [gp * c for c in cols]
        depth = depth + p

    return GrassPoint(ring, depth, cols)


# ----------------------------------------------------------------------
# Finite quotients L'/L and their embedding back into the Grassmannian
# ----------------------------------------------------------------------


def quotient_basis(small: GrassPoint, big: GrassPoint) -> list[LaurentElement]:
    """A deterministic basis of big/small, as explicit Laurent columns.

    Requires nested tails (big.tail_depth <= small.tail_depth), exactly
    known columns over a residue-field-like coefficient ring (constant
    terms are used), and small <= big, which is verified on the window.
    The basis consists of the tail gap exponents plus whichever columns
    of ``big`` add new pivots after ``small`` is reduced.
    """
    if small.ring != big.ring:
        raise RingMismatchError("points live over different rings")
    if big.tail_depth > small.tail_depth:
        raise DomainError("containment needs big.tail_depth <= small.tail_depth")
    if small.window_high is not None or big.window_high is not None:
        raise PrecisionError("quotient basis needs exactly known columns")
    ring = small.ring
    field = ring.field
    n = small.tail_depth

    # generators of big relative to small's tail: the tail gap, then the
    # explicit columns of big (reduced to exponents >= -n)
    gap = [LaurentElement.z_power(ring, e) for e in range(-n, -big.tail_depth)]
    gens = gap + [c.clip_below(-n) for c in big.columns]

    top = 0
    for c in small.columns + gens:
        if c.coeffs:
            top = max(top, max(c.coeffs) + 1)
    rows = list(range(-n, top))

    def as_vec(col: LaurentElement) -> list:
        return [col.coeffs.get(e, ring.zero()).constant_term() for e in rows]

    base_vecs = [as_vec(c) for c in small.columns]
    # verify small <= big on the window
    gen_mat = [[as_vec(g)[i] for g in gens] for i in range(len(rows))]
    for v in base_vecs:
        if solve_field(gen_mat, v, field) is None:
            raise DomainError("the small point is not contained in the big one")

    basis: list[LaurentElement] = []
    current = list(base_vecs)
    rank = rank_field(current, field) if current else 0
    for g, gv in zip(gens, [as_vec(g) for g in gens]):
        cand = current + [gv]
        r = rank_field(cand, field)
        if r > rank:
            basis.append(g)
            current = cand
            rank = r
    return basis


def embed_finite(
    vectors: list[list], small: GrassPoint, big: GrassPoint
) -> GrassPoint:
    """Embed a subspace of the finite quotient big/small as a point.

    ``vectors`` are coordinate rows with respect to
    ``quotient_basis(small, big)``.  The image is small plus the span of
    the corresponding combinations; its index is index(small) plus the
    rank of ``vectors``.
    """
    basis = quotient_basis(small, big)
    ring = small.ring
    field = ring.field
    new_cols = []
    for vec in vectors:
        if len(vec) != len(basis):
            raise DomainError(
                f"coordinate vector length {len(vec)} != quotient dimension {len(basis)}"
            )
        acc = LaurentElement.zero(ring)
        for a, b in zip(vec, basis):
            a = field.coerce(a)
            if a:
                acc = acc + b * ring.const(a)
        new_cols.append(acc)
    return GrassPoint(ring, small.tail_depth, small.columns + new_cols)

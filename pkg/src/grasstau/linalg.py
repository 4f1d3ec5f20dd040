"""Small dense linear algebra over coefficient rings and base fields.

Two flavours are needed.  Matrices of ``RingElement`` values live over a
local ring with nilpotents, so determinants go through memoized cofactor
expansion (no division) and inverses through Gauss-Jordan with unit
pivots, which always exist when the matrix is invertible.  Matrices of
raw field values use ordinary row reduction; those power rank, solve,
and determinant checks over the residue field.

Everything here is exact and deliberately unoptimized: the matrices in
play are tiny (a handful of rows up to a few dozen).
"""

from __future__ import annotations

from .errors import DomainError, NotInvertibleError
from .scalars import BaseField, CoeffRing, RingElement

# ----------------------------------------------------------------------
# Ring-valued matrices (entries are RingElement)
# ----------------------------------------------------------------------


def det_ring(rows: list[list[RingElement]], ring: CoeffRing) -> RingElement:
    """Determinant of a square matrix over the ring.

    Cofactor expansion with memoization on (row index, live column set);
    the empty matrix has determinant one, which is what makes vacuum
    minors come out right.
    """
    n = len(rows)
    for r in rows:
        if len(r) != n:
            raise DomainError("det_ring needs a square matrix")
    if n == 0:
        return ring.one()
    full = (1 << n) - 1
    memo: dict[tuple[int, int], RingElement] = {}

    def minor(i: int, mask: int) -> RingElement:
        if i == n:
            return ring.one()
        key = (i, mask)
        got = memo.get(key)
        if got is not None:
            return got
        total = ring.zero()
        sign = 1
        for j in range(n):
            bit = 1 << j
            if not mask & bit:
                continue
            entry = rows[i][j]
            if entry:
                sub = minor(i + 1, mask & ~bit)
                term = entry * sub
                total = total + (term if sign > 0 else -term)
            sign = -sign
        memo[key] = total
        return total

    return minor(0, full)


def mat_mul_ring(
    a: list[list[RingElement]], b: list[list[RingElement]], ring: CoeffRing
) -> list[list[RingElement]]:
    n, k = len(a), len(b)
    m = len(b[0]) if b else 0
    if any(len(row) != k for row in a):
        raise DomainError("inner dimensions do not match")
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = ring.zero()
            for t in range(k):
                if a[i][t] and b[t][j]:
                    acc = acc + a[i][t] * b[t][j]
            row.append(acc)
        out.append(row)
    return out


def inv_ring(rows: list[list[RingElement]], ring: CoeffRing) -> list[list[RingElement]]:
    """Inverse of a square matrix over the (local) ring.

    Gauss-Jordan, always pivoting on a unit entry.  Over a local ring a
    matrix is invertible iff its residue matrix is, in which case a unit
    pivot exists in every elimination column.
    """
    n = len(rows)
    for r in rows:
        if len(r) != n:
            raise DomainError("inv_ring needs a square matrix")
    aug = [list(row) + [ring.one() if i == j else ring.zero() for j in range(n)]
           for i, row in enumerate(rows)]
    for col in range(n):
        pivot_row = None
        for r in range(col, n):
            if aug[r][col].is_unit():
                pivot_row = r
                break
        if pivot_row is None:
            raise NotInvertibleError("matrix has no unit pivot; not invertible over the ring")
        aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        inv_p = aug[col][col].inverse()
        aug[col] = [e * inv_p for e in aug[col]]
        for r in range(n):
            if r == col:
                continue
            factor = aug[r][col]
            if factor:
                aug[r] = [er - factor * ec for er, ec in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


# ----------------------------------------------------------------------
# Field-valued matrices (entries are raw field values)
# ----------------------------------------------------------------------


def echelon_field(rows: list[list], field: BaseField) -> tuple[list[list], list[int]]:
    """Reduced row echelon form.  Returns (rref rows, pivot column list)."""
    mat = [list(r) for r in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if mat else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, nrows):
            if mat[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv_p = field.invert(mat[r][c])
        mat[r] = [field.mul(inv_p, v) for v in mat[r]]
        for i in range(nrows):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [field.sub(v, field.mul(f, w)) for v, w in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return mat, pivots


def rank_field(rows: list[list], field: BaseField) -> int:
    _, pivots = echelon_field(rows, field)
    return len(pivots)


def det_field(rows: list[list], field: BaseField):
    n = len(rows)
    for r in rows:
        if len(r) != n:
            raise DomainError("det_field needs a square matrix")
    if n == 0:
        return field.one()
    mat = [list(r) for r in rows]
    det = field.one()
    for c in range(n):
        pivot = None
        for i in range(c, n):
            if mat[i][c]:
                pivot = i
                break
        if pivot is None:
            return field.zero()
        if pivot != c:
            mat[c], mat[pivot] = mat[pivot], mat[c]
            det = field.neg(det)
        det = field.mul(det, mat[c][c])
        inv_p = field.invert(mat[c][c])
        for i in range(c + 1, n):
            if mat[i][c]:
                f = field.mul(inv_p, mat[i][c])
                mat[i] = [field.sub(v, field.mul(f, w)) for v, w in zip(mat[i], mat[c])]
    return det


def solve_field(a: list[list], b: list, field: BaseField) -> list | None:
    """One solution of A x = b, or None if the system is inconsistent.

    Free variables are set to zero, so for square invertible systems this
    is the unique solution.
    """
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    if len(b) != nrows:
        raise DomainError("right-hand side length does not match")
    aug = [list(row) + [b[i]] for i, row in enumerate(a)]
    rref, pivots = echelon_field(aug, field)
    for row in rref:
        if row[-1] and not any(row[c] for c in range(ncols)):
            return None
    x = [field.zero()] * ncols
    for r, c in enumerate(pivots):
        if c == ncols:
            return None  # pivot in the augmented column: inconsistent
        x[c] = rref[r][-1]
    return x


def inv_field(rows: list[list], field: BaseField) -> list[list]:
    n = len(rows)
    aug = [list(row) + [field.one() if i == j else field.zero() for j in range(n)]
           for i, row in enumerate(rows)]
    rref, pivots = echelon_field(aug, field)
    if pivots != list(range(n)):
        raise NotInvertibleError("field matrix is singular")
    return [row[n:] for row in rref]

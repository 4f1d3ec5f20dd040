"""Partitions and Maya diagrams (exponent sets of series subspaces).

A Maya diagram is a set S of integers that contains every integer below
some bound and finitely many above it.  These index the standard
subspaces span{z^e : e in S} of the series space; the base point uses
S0 = {all negative integers}.  The charge counts how S differs from S0
in the balance sense, and charge-zero diagrams biject with partitions by
reading off how far each member sits above its vacuum position.

Partitions are plain decreasing tuples of positive ints throughout the
package.
"""

from __future__ import annotations

from typing import Iterator

from .errors import DomainError

Partition = tuple[int, ...]


def check_partition(lam) -> Partition:
    lam = tuple(int(p) for p in lam)
    if any(p <= 0 for p in lam):
        raise DomainError(f"partition parts must be positive: {lam}")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise DomainError(f"partition parts must be non-increasing: {lam}")
    return lam


def partition_size(lam: Partition) -> int:
    return sum(lam)


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= i) for i in range(1, lam[0] + 1))


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n with parts bounded by max_part, largest part first."""
    if n < 0:
        return
    if n == 0:
        yield ()
        return
    top = n if max_part is None else min(max_part, n)
    for first in range(top, 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def partitions_up_to(bound: int) -> list[Partition]:
    """Every partition of size 0, 1, ..., bound, graded order."""
    out: list[Partition] = []
    for n in range(bound + 1):
        out.extend(partitions_of(n))
    return out


class MayaDiagram:
    """A subset of Z containing all integers below ``tail_start`` and the
    finitely many listed ``members`` above it.

    Normalized so that tail_start itself is not a member: any member
    touching the tail gets absorbed into it.
    """

    __slots__ = ("tail_start", "members")

    def __init__(self, tail_start: int, members=()):
        mem = set(int(m) for m in members)
        if any(m < tail_start for m in mem):
            raise DomainError("members below tail_start are already in the diagram")
        t = int(tail_start)
        while t in mem:
            mem.remove(t)
            t += 1
        self.tail_start = t
        self.members = tuple(sorted(mem))

    def __contains__(self, e: int) -> bool:
        return e < self.tail_start or e in self.members

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MayaDiagram):
            return NotImplemented
        return self.tail_start == other.tail_start and self.members == other.members

    def __hash__(self) -> int:
        return hash((self.tail_start, self.members))

    def __repr__(self) -> str:
        return f"MayaDiagram(tail_start={self.tail_start}, members={self.members})"

    def members_from(self, low: int) -> list[int]:
        """All members >= low, in increasing order (tail included)."""
        out = list(range(low, self.tail_start))
        out.extend(m for m in self.members if m >= low)
        return sorted(out)

    def charge(self) -> int:
        """#(S intersect Z>=0) - #(Z<0 minus S), both finite."""
        if self.tail_start >= 0:
            gained = self.tail_start + sum(1 for m in self.members if m >= 0)
            missing = 0
        else:
            gained = sum(1 for m in self.members if m >= 0)
            missing = sum(
                1 for e in range(self.tail_start, 0) if e not in self.members
            )
        return gained - missing

    @staticmethod
    def vacuum() -> "MayaDiagram":
        return MayaDiagram(0)

    @staticmethod
    def from_partition(lam, charge: int = 0) -> "MayaDiagram":
        """Members are lam_k - k + charge for k = 1, 2, ...; the tail takes
        over once the parts run out."""
        lam = check_partition(lam)
        members = [lam[k] - (k + 1) + charge for k in range(len(lam))]
        tail_start = charge - len(lam)
        return MayaDiagram(tail_start, members)

    def to_partition(self) -> Partition:
        """Inverse of from_partition at this diagram's own charge."""
        c = self.charge()
        # members above vacuum position, deepest displacement first
        descending = sorted(self.members, reverse=True)
        descending += list(range(self.tail_start - 1,
                                 self.tail_start - 1 - len(descending) - 1, -1))
        lam = []
        for k, s in enumerate(descending, start=1):
            part = s + k - c
            if part < 0:
                raise DomainError("diagram is not normalized")  # pragma: no cover
            if part == 0:
                break
            lam.append(part)
        # past the listed members the diagram coincides with the shifted
        # vacuum, contributing zero parts only
        return check_partition(lam) if lam else ()

"""Integer partitions and the combinatorial weights attached to them.

Partitions index every expansion in this package: the cumulant-product
norm formulas, the complete Bell polynomials, and the positive-definite
combinations of complete homogeneous symmetric polynomials.  All weights
are exact integers.
"""

from __future__ import annotations

from math import factorial, prod
from typing import Iterable, Iterator


class Partition:
    """A nonincreasing tuple of positive integers.

    >>> p = Partition((4, 4, 2, 1, 1, 1))
    >>> p.d, p.num_parts, p.multiplicities[4]
    (13, 6, 2)
    """

    __slots__ = ("parts", "d", "multiplicities")

    def __init__(self, parts: Iterable[int]):
        parts = tuple(parts)
        for v in parts:
            if not isinstance(v, int) or v < 1:
                raise ValueError(f"parts must be positive integers, got {parts!r}")
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be nonincreasing, got {parts!r}")
        self.parts = parts
        self.d = sum(parts)
        mult: dict[int, int] = {}
        for v in parts:
            mult[v] = mult.get(v, 0) + 1
        self.multiplicities = mult

    @property
    def num_parts(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __eq__(self, other) -> bool:
        if isinstance(other, Partition):
            return self.parts == other.parts
        if isinstance(other, tuple):
            return self.parts == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Partition({self.parts!r})"


def enumerate_partitions(d: int) -> list[Partition]:
    """All partitions of ``d`` in reverse-lexicographic order.

    The order is fixed so symbolic output and test fixtures are
    deterministic: (4), (3,1), (2,2), (2,1,1), (1,1,1,1) for d=4.
    ``d = 0`` yields the single empty partition.
    """
    if not isinstance(d, int) or d < 0:
        raise ValueError(f"d must be a nonnegative integer, got {d!r}")
    if d == 0:
        return [Partition(())]
    out = [Partition((d,))]
    cur = (d,)
    while True:
        # Rightmost part that can still be decremented.
        i = len(cur) - 1
        while i >= 0 and cur[i] == 1:
            i -= 1
        if i < 0:
            return out
        rest = len(cur) - i  # units freed: everything from position i on
        cur = cur[:i] + (cur[i] - 1,)
        remaining = rest
        while remaining > 0:
            nxt = min(cur[-1], remaining)
            cur += (nxt,)
            remaining -= nxt
        out.append(Partition(cur))


def y_of(p: Partition) -> int:
    """Weight prod_i (i!)^{m_i} * m_i! over the part multiplicities."""
    return prod(factorial(i) ** m * factorial(m) for i, m in p.multiplicities.items())


def z_of(p: Partition) -> int:
    """Weight prod_i i^{m_i} * m_i!, the cycle-type centralizer order."""
    return prod(i**m * factorial(m) for i, m in p.multiplicities.items())


def hunter_coefficient(p: Partition, alpha: int) -> int:
    """alpha! / ((alpha - r)! * prod_i m_i!) for r = number of parts, 0 when r > alpha.

    This counts ordered assignments of the parts to ``alpha`` labeled slots,
    so it is always a nonnegative integer.
    """
    if not isinstance(alpha, int) or alpha < 1:
        raise ValueError(f"alpha must be a positive integer, got {alpha!r}")
    r = p.num_parts
    if r > alpha:
        return 0
    den = factorial(alpha - r) * prod(factorial(m) for m in p.multiplicities.values())
    return factorial(alpha) // den

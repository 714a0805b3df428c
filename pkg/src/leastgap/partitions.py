"""Partition enumeration and per-partition statistics (least r-gap, rank, crank)."""

from collections import Counter
from dataclasses import dataclass, field


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive parts; ``()`` is the partition of 0."""

    parts: tuple
    n: int = field(init=False)

    def __post_init__(self):
        parts = tuple(self.parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "n", sum(parts))

    @classmethod
    def _trusted(cls, parts):
        self = object.__new__(cls)
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "n", sum(parts))
        return self

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self):
        return "+".join(map(str, self.parts)) if self.parts else "()"

    def multiplicities(self):
        return Counter(self.parts)


def enumerate_partitions(n: int):
    """Yield every partition of n once, lexicographically decreasing.

    For n = 5 the order is 5, 4+1, 3+2, 3+1+1, 2+2+1, 2+1+1+1, 1+1+1+1+1.
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n == 0:
        yield Partition._trusted(())
        return
    parts = [n]
    while True:
        yield Partition._trusted(tuple(parts))
        # strip trailing 1s, then decrement the last part > 1
        ones = 0
        while parts and parts[-1] == 1:
            parts.pop()
            ones += 1
        if not parts:
            return
        m = parts.pop() - 1
        rest = ones + 1 + m
        while rest >= m:
            parts.append(m)
            rest -= m
        if rest:
            parts.append(rest)


def _mult(lam):
    if isinstance(lam, Partition):
        return lam.multiplicities()
    return Counter(lam)


def least_r_gap(lam, r: int) -> int:
    """Smallest positive integer occurring fewer than r times as a part.

    The empty partition gives 1. ``r = 0`` (the unbounded g_0) is not a value
    this function can return; use :func:`gap_drops` for comparisons with it.
    """
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    mult = _mult(lam)
    m = 1
    while mult[m] >= r:
        m += 1
    return m


def gap_drops(lam, r: int) -> bool:
    """True when g_r(lam) < g_{r-1}(lam), with g_0 treated as infinite."""
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    if r == 1:
        return True
    return least_r_gap(lam, r) < least_r_gap(lam, r - 1)


def rank(lam) -> int:
    parts = tuple(lam)
    return (max(parts) if parts else 0) - len(parts)


def crank(lam) -> int:
    """Andrews-Garvan crank.

    Largest part when there are no 1s, otherwise
    #{parts > omega} - omega where omega is the number of 1s.
    """
    parts = tuple(lam)
    omega = parts.count(1)
    if omega == 0:
        return max(parts) if parts else 0
    return sum(1 for p in parts if p > omega) - omega


@dataclass(frozen=True)
class PartitionStatistics:
    least_r_gap: dict
    rank: int
    crank: int
    omega: int
    mu: int
    largest: int
    length: int


def statistics(lam, rs=range(1, 7)) -> PartitionStatistics:
    """All per-partition statistics from a single multiplicity map."""
    parts = tuple(lam)
    mult = Counter(parts)
    largest = parts[0] if parts else 0
    omega = mult[1]
    mu = sum(c for p, c in mult.items() if p > omega)
    gaps = {}
    for r in rs:
        if r < 1:
            raise ValueError(f"r must be >= 1, got {r}")
        m = 1
        while mult[m] >= r:
            m += 1
        gaps[r] = m
    return PartitionStatistics(
        least_r_gap=gaps,
        rank=largest - len(parts),
        crank=largest if omega == 0 else mu - omega,
        omega=omega,
        mu=mu,
        largest=largest,
        length=len(parts),
    )

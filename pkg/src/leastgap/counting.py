"""Partition-theoretic sequences, each reachable by independent routes.

Every sequence function takes a ``mode``:

``fast``
    the convolution identity with p(n) (or a series product where that is
    the natural closed form);
``oracle``
    brute force over :func:`enumerate_partitions` (small n only);
``dp``
    a counting program over the defining multiplicity / residue constraints,
    which scales to n in the hundreds without touching p's recurrence.
"""

import threading
from fractions import Fraction
from functools import lru_cache

from . import series
from .figurate import gen_pentagonal, pentagonal_sign, polygonal, triangular
from .partitions import enumerate_partitions, gap_drops, least_r_gap, statistics

CACHE_MAGIC = "pcache"
CACHE_VERSION = "v1"


class CacheFormatError(ValueError):
    """A p(n) cache file that cannot be trusted."""

    def __init__(self, message, line=None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class MemoTable:
    """Growable table of p(0), p(1), ... filled by Euler's pentagonal recurrence.

    Readers never block; growth is serialized behind a lock.
    """

    def __init__(self):
        self._values = [1]
        self._lock = threading.Lock()

    @property
    def high_water(self):
        return len(self._values) - 1

    def values(self, upto=None):
        if upto is not None:
            self.extend(upto)
            return self._values[: upto + 1]
        return list(self._values)

    def extend(self, n):
        if n <= self.high_water:
            return
        with self._lock:
            vals = list(self._values)
            for m in range(len(vals), n + 1):
                total = 0
                k = 1
                while (g := gen_pentagonal(k)) <= m:
                    # (-1)^ceil(k/2) moved to the right-hand side
                    total -= pentagonal_sign(k) * vals[m - g]
                    k += 1
                vals.append(total)
            self._values = vals

    def __getitem__(self, n):
        if n < 0:
            return 0
        if n > self.high_water:
            self.extend(n)
        return self._values[n]

    def clear(self):
        with self._lock:
            self._values = [1]

    def dumps(self):
        lines = [f"{CACHE_MAGIC} {CACHE_VERSION} {self.high_water}"]
        lines.extend(str(v) for v in self._values)
        return "\n".join(lines) + "\n"

    def loads(self, text):
        """Replace the table with the contents of a ``pcache v1`` file.

        Raises CacheFormatError (table untouched) on a bad header, a
        non-decimal line, a short file, or values breaking the recurrence.
        """
        lines = text.splitlines()
        if not lines:
            raise CacheFormatError("empty cache file", line=1)
        head = lines[0].split()
        if len(head) != 3 or head[0] != CACHE_MAGIC or head[1] != CACHE_VERSION:
            raise CacheFormatError(f"bad header {lines[0]!r}", line=1)
        if not head[2].isdigit():
            raise CacheFormatError(f"bad max_n in header {lines[0]!r}", line=1)
        max_n = int(head[2])
        body = lines[1:]
        if len(body) != max_n + 1:
            raise CacheFormatError(
                f"header promises {max_n + 1} values, found {len(body)}",
                line=len(lines) + 1,
            )
        vals = []
        for i, raw in enumerate(body):
            s = raw.strip()
            if not s.isdecimal():
                raise CacheFormatError(f"non-decimal value {raw!r} for p({i})", line=i + 2)
            vals.append(int(s))
        check = MemoTable()
        check.extend(max_n)
        for i, (got, want) in enumerate(zip(vals, check._values)):
            if got != want:
                raise CacheFormatError(f"p({i}) = {got} breaks the recurrence", line=i + 2)
        with self._lock:
            if len(vals) > len(self._values):
                self._values = vals
        return max_n


MEMO = MemoTable()


def _mode(mode, allowed):
    if mode not in allowed:
        raise ValueError(f"mode must be one of {sorted(allowed)}, got {mode!r}")


def _require_r(r):
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")


def _require_n(n):
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")


def p(n: int, mode: str = "fast") -> int:
    """Euler's partition function; 0 for negative n."""
    _mode(mode, {"fast", "oracle", "dp"})
    if n < 0:
        return 0
    if mode == "fast":
        return MEMO[n]
    if mode == "oracle":
        return sum(1 for _ in enumerate_partitions(n))
    return _dp_at(dp_partition_counts, n)


# ---------------------------------------------------------------------------
# convolution sums against p


def shifted_sum(n, shifts, p_of=None):
    """sum of sign * p(n - shift) over (sign, shift) pairs, stopping past n."""
    p_of = p_of or MEMO.__getitem__
    total = 0
    for sign, shift in shifts:
        if shift > n:
            break
        total += sign * p_of(n - shift)
    return total


def _rT_terms(n, r, sign=lambda k: 1):
    k = 0
    while (shift := r * triangular(k)) <= n:
        yield k, sign(k), shift
        k += 1


def sum_rT(n, r):
    """sum_k p(n - r T_k)."""
    return sum(s * MEMO[n - t] for _, s, t in _rT_terms(n, r))


def sum_signed_rT(n, r):
    """sum_k (-1)^{T_k} p(n - r T_k)."""
    return sum(s * MEMO[n - t] for _, s, t in _rT_terms(n, r, lambda k: (-1) ** triangular(k)))


def sum_rT_classes(n, r, classes):
    """sum of p(n - r T_k) over k whose residue mod 4 lies in classes."""
    return sum(MEMO[n - t] for k, _, t in _rT_terms(n, r) if k % 4 in classes)


def sum_polygonal(n, r):
    """sum_k p(n - P(r+2, -k))."""
    def shifts():
        k = 0
        while True:
            yield 1, polygonal(r + 2, -k)
            k += 1
    return shifted_sum(n, shifts())


def sum_pentagonal_signed(n, p_of=None, bisect=False):
    """sum_k (-1)^ceil(k/2) p(n - G_k), optionally only over even G_k."""
    def shifts():
        k = 0
        while True:
            g = gen_pentagonal(k)
            w = 1 if (not bisect or g % 2 == 0) else 0
            yield w * pentagonal_sign(k), g
            k += 1
    return shifted_sum(n, shifts(), p_of)


def sum_squares(n, weight=lambda k: (-1) ** k, start=0):
    """sum_{k >= start} weight(k) p(n - k^2)."""
    return shifted_sum(n, ((weight(k), k * k) for k in _count(start)))


def _count(start):
    k = start
    while True:
        yield k
        k += 1


def sum_rank_pentagonal(n):
    """sum_{k>=0} (-1)^k p(n - k(3k+1)/2)."""
    return shifted_sum(n, (((-1) ** k, k * (3 * k + 1) // 2) for k in _count(0)))


def sum_alternating_triangular(n, index_rule=lambda k: k):
    """sum_k (-1)^k p(n - T_{index_rule(k)})."""
    return shifted_sum(n, (((-1) ** k, triangular(index_rule(k))) for k in _count(0)))


# ---------------------------------------------------------------------------
# counting programs (definition-level routes)


def _coin_change(allowed, N):
    """Number of partitions of 0..N into parts from ``allowed``."""
    c = [0] * (N + 1)
    c[0] = 1
    for part in allowed:
        if part > N:
            continue
        for i in range(part, N + 1):
            c[i] += c[i - part]
    return c


@lru_cache(maxsize=None)
def dp_partition_counts(N):
    return tuple(_coin_change(range(1, N + 1), N))


@lru_cache(maxsize=None)
def dp_residue_restricted(modulus, forbidden, N):
    """Partitions of 0..N into parts whose residue mod ``modulus`` avoids ``forbidden``."""
    forbidden = frozenset(f % modulus for f in forbidden)
    return tuple(_coin_change((j for j in range(1, N + 1) if j % modulus not in forbidden), N))


def _mul_trunc(a, b, N):
    out = [0] * (N + 1)
    for i, ai in enumerate(a):
        if ai:
            for j in range(N + 1 - i):
                out[i + j] += ai * b[j]
    return out


@lru_cache(maxsize=None)
def _least_gap_profile(r, N):
    """List indexed by m of per-n counts of partitions with g_r = m.

    g_r = m means parts 1..m-1 occur at least r times and m occurs at most
    r-1 times; all larger parts are free.
    """
    full = dp_partition_counts(N)
    out = [None]
    m = 1
    while r * triangular(m - 1) <= N:
        # partitions with part m removed from the allowed set
        free = list(full)
        for i in range(N, m - 1, -1):
            free[i] -= free[i - m]
        shift = r * triangular(m - 1)
        counts = [0] * (N + 1)
        for i in range(r):
            for j in range(N + 1 - shift - i * m):
                counts[j + shift + i * m] += free[j]
        out.append(counts)
        m += 1
    return out


@lru_cache(maxsize=None)
def dp_S_table(r, N):
    prof = _least_gap_profile(r, N)
    return tuple(sum(m * prof[m][n] for m in range(1, len(prof))) for n in range(N + 1))


@lru_cache(maxsize=None)
def dp_G_table(r, N):
    """Partitions with g_r < g_{r-1}: parts below m occur >= r times, m exactly r-1 times."""
    full = dp_partition_counts(N)
    if r == 1:
        return full
    counts = [0] * (N + 1)
    m = 1
    while r * triangular(m - 1) + (r - 1) * m <= N:
        free = list(full)
        for i in range(N, m - 1, -1):
            free[i] -= free[i - m]
        shift = r * triangular(m - 1) + (r - 1) * m
        for j in range(N + 1 - shift):
            counts[j + shift] += free[j]
        m += 1
    return tuple(counts)


@lru_cache(maxsize=None)
def dp_parity_table(N):
    """(even, odd) counts by number of parts."""
    even = [0] * (N + 1)
    odd = [0] * (N + 1)
    even[0] = 1
    for part in range(1, N + 1):
        for i in range(part, N + 1):
            even[i], odd[i] = even[i] + odd[i - part], odd[i] + even[i - part]
    return tuple(even), tuple(odd)


def _dp_even(N):
    return dp_parity_table(N)[0]


@lru_cache(maxsize=None)
def dp_rank_nonneg(N):
    """Partitions with largest part >= number of parts.

    E[c][s] counts partitions of s into exactly c parts, all <= j, after part
    j is admitted; those new to step j are q^j * E[c-1] and have largest
    part exactly j, so they count when c <= j.
    """
    E = [[0] * (N + 1) for _ in range(N + 1)]
    E[0][0] = 1
    out = [0] * (N + 1)
    out[0] = 1
    for j in range(1, N + 1):
        for c in range(1, N - j + 2):
            prev, cur = E[c - 1], E[c]
            if c <= j:
                for s in range(j, N + 1):
                    v = prev[s - j]
                    if v:
                        cur[s] += v
                        out[s] += v
            else:
                for s in range(j, N + 1):
                    v = prev[s - j]
                    if v:
                        cur[s] += v
    return tuple(out)


@lru_cache(maxsize=None)
def _exact_parts_table(N):
    """P[m][c]: partitions of m into exactly c parts."""
    P = [[0] * (N + 1) for _ in range(N + 1)]
    P[0][0] = 1
    for m in range(1, N + 1):
        for c in range(1, m + 1):
            P[m][c] = P[m - 1][c - 1] + P[m - c][c]
    return P


@lru_cache(maxsize=None)
def dp_crank_nonneg(N):
    """Partitions with nonnegative crank.

    No 1s: the crank is the largest part, always >= 0. With w >= 1 ones:
    the remaining parts split into parts 2..w (free) and parts > w, of
    which there must be at least w.
    """
    no_ones = _coin_change(range(2, N + 1), N)
    out = list(no_ones)
    P = _exact_parts_table(N)
    small = [0] * (N + 1)
    small[0] = 1
    w = 1
    while w + w * (w + 1) <= N:
        if w >= 2:
            for i in range(w, N + 1):
                small[i] += small[i - w]
        # big[t]: partitions of t into >= w parts, each > w
        big = [0] * (N + 1)
        for t in range(N + 1):
            c = w
            while c * (w + 1) <= t:
                big[t] += P[t - c * w][c]
                c += 1
        conv = _mul_trunc(small, big, N)
        for n in range(w, N + 1):
            out[n] += conv[n - w]
        w += 1
    return tuple(out)


_LARGEST = {}
_LARGEST_LOCK = threading.Lock()


def _dp_at(builder, n, *args):
    """Value at n from the largest table ``builder(*args, N)`` built so far."""
    key = (builder, args)
    table = _LARGEST.get(key)
    if table is None or len(table) <= n:
        table = builder(*args, n)
        with _LARGEST_LOCK:
            cur = _LARGEST.get(key)
            if cur is None or len(cur) < len(table):
                _LARGEST[key] = table
    return table[n]


# ---------------------------------------------------------------------------
# public sequences


def q_distinct(n: int, mode: str = "fast") -> int:
    """Partitions of n into distinct parts."""
    _mode(mode, {"fast", "oracle"})
    _require_n(n)
    if mode == "fast":
        return series.euler_product(1, 1, n, sign=1)[n]
    return sum(1 for lam in enumerate_partitions(n) if len(set(lam.parts)) == len(lam))


def S_r(n: int, r: int, mode: str = "fast") -> int:
    """Sum of least r-gaps over all partitions of n."""
    _mode(mode, {"fast", "oracle", "dp"})
    _require_n(n)
    _require_r(r)
    if mode == "fast":
        return sum_rT(n, r)
    if mode == "oracle":
        return sum(least_r_gap(lam, r) for lam in enumerate_partitions(n))
    return _dp_at(dp_S_table, n, r)


def G_r(n: int, r: int, mode: str = "fast") -> int:
    """Partitions of n with g_r < g_{r-1} (g_0 unbounded)."""
    _mode(mode, {"fast", "oracle", "dp"})
    _require_n(n)
    _require_r(r)
    if mode == "fast":
        return sum_polygonal(n, r) - sum_rT(n, r)
    if mode == "oracle":
        return sum(1 for lam in enumerate_partitions(n) if gap_drops(lam, r))
    return _dp_at(dp_G_table, n, r)


def _u_forbidden(r):
    return (0, r, 3 * r)


def u_allows(part, r):
    return part % (4 * r) not in _u_forbidden(r)


def U_r(n: int, r: int, mode: str = "fast") -> int:
    """Partitions of n into parts not congruent to 0, r, 3r mod 4r."""
    _mode(mode, {"fast", "oracle", "dp"})
    _require_n(n)
    _require_r(r)
    if mode == "fast":
        return sum_signed_rT(n, r)
    if mode == "oracle":
        return sum(1 for lam in enumerate_partitions(n) if all(u_allows(x, r) for x in lam))
    return _dp_at(dp_residue_restricted, n, 4 * r, _u_forbidden(r))


L_FORBIDDEN = (0, 2, 12, 14, 16, 18, 20, 30)


def L(n: int, mode: str = "fast") -> int:
    """Partitions of n into parts avoiding 0, 2, 12, 14, 16, 18, 20, 30 mod 32."""
    _mode(mode, {"fast", "oracle", "dp"})
    _require_n(n)
    if mode == "fast":
        return series.gen_L(n)[n]
    if mode == "oracle":
        return sum(1 for lam in enumerate_partitions(n) if all(x % 32 not in L_FORBIDDEN for x in lam))
    return _dp_at(dp_residue_restricted, n, 32, L_FORBIDDEN)


def R_nonneg_rank(n: int, mode: str = "fast") -> int:
    _mode(mode, {"fast", "oracle", "dp"})
    _require_n(n)
    if mode == "fast":
        return sum_rank_pentagonal(n)
    if mode == "oracle":
        return sum(1 for lam in enumerate_partitions(n) if _rank(lam) >= 0)
    return _dp_at(dp_rank_nonneg, n)


def _rank(lam):
    parts = lam.parts
    return (parts[0] if parts else 0) - len(parts)


def C_nonneg_crank(n: int, mode: str = "fast") -> int:
    _mode(mode, {"fast", "oracle", "dp"})
    _require_n(n)
    if mode == "fast":
        return sum_alternating_triangular(n)
    if mode == "oracle":
        return sum(1 for lam in enumerate_partitions(n) if statistics(lam, rs=()).crank >= 0)
    return _dp_at(dp_crank_nonneg, n)


def p_even_parts(n: int, mode: str = "fast") -> int:
    """Partitions of n with an even number of parts."""
    _mode(mode, {"fast", "oracle", "dp"})
    _require_n(n)
    if mode == "fast":
        return sum_squares(n)
    if mode == "oracle":
        return sum(1 for lam in enumerate_partitions(n) if len(lam) % 2 == 0)
    return _dp_at(_dp_even, n)


def p_odd_parts(n: int, mode: str = "fast") -> int:
    return p(n, mode) - p_even_parts(n, mode)


def half(x):
    """x / 2, kept exact; an integer when x is even."""
    return x // 2 if x % 2 == 0 else Fraction(x, 2)

"""Truncated formal power series in q with exact integer coefficients.

A series of order N carries the coefficients of q^0 .. q^N and nothing else;
arithmetic between series of different orders is refused rather than
silently truncated.
"""

import json

from .figurate import triangular


class FormalPowerSeries:
    __slots__ = ("_coeffs",)

    def __init__(self, coeffs, order=None):
        coeffs = [int(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("truncation order must be non-negative")
        if len(coeffs) > order + 1:
            coeffs = coeffs[: order + 1]
        else:
            coeffs.extend([0] * (order + 1 - len(coeffs)))
        self._coeffs = tuple(coeffs)

    @classmethod
    def one(cls, order):
        return cls([1], order)

    @classmethod
    def monomial(cls, exponent, order, coeff=1):
        c = [0] * (order + 1)
        if exponent <= order:
            c[exponent] = coeff
        return cls(c, order)

    @property
    def order(self):
        return len(self._coeffs) - 1

    @property
    def coeffs(self):
        return self._coeffs

    def __getitem__(self, i):
        if not 0 <= i <= self.order:
            raise IndexError(f"coefficient q^{i} lies beyond order {self.order}")
        return self._coeffs[i]

    def __len__(self):
        return len(self._coeffs)

    def __eq__(self, other):
        if not isinstance(other, FormalPowerSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def _check(self, other):
        if not isinstance(other, FormalPowerSeries):
            raise TypeError(f"expected FormalPowerSeries, got {type(other).__name__}")
        if other.order != self.order:
            raise ValueError(f"truncation orders differ: {self.order} vs {other.order}")

    def __add__(self, other):
        self._check(other)
        return FormalPowerSeries([a + b for a, b in zip(self._coeffs, other._coeffs)])

    def __sub__(self, other):
        self._check(other)
        return FormalPowerSeries([a - b for a, b in zip(self._coeffs, other._coeffs)])

    def __neg__(self):
        return FormalPowerSeries([-a for a in self._coeffs])

    def __mul__(self, other):
        if isinstance(other, int):
            return FormalPowerSeries([other * a for a in self._coeffs])
        self._check(other)
        n = self.order
        a, b = self._coeffs, other._coeffs
        out = [0] * (n + 1)
        for i, ai in enumerate(a):
            if ai:
                for j in range(n + 1 - i):
                    bj = b[j]
                    if bj:
                        out[i + j] += ai * bj
        return FormalPowerSeries(out)

    __rmul__ = __mul__

    def truncate(self, order):
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return FormalPowerSeries(self._coeffs[: order + 1])

    def inverse(self):
        return fps_inverse(self)

    def __repr__(self):
        return f"FormalPowerSeries({list(self._coeffs)!r}, order={self.order})"

    def __str__(self):
        terms = []
        for i, c in enumerate(self._coeffs):
            if not c:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                mono = "q" if i == 1 else f"q^{i}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(("+ " if c > 0 else "- ") + body)
        return " ".join(terms) if terms else "0"

    def to_json(self):
        return json.dumps([str(c) for c in self._coeffs])

    @classmethod
    def from_json(cls, text):
        return cls([int(s) for s in json.loads(text)])


def fps_add(a, b):
    return a + b


def fps_sub(a, b):
    return a - b


def fps_mul(a, b):
    return a * b


def fps_inverse(a):
    """Reciprocal of a series whose constant term is +1 or -1."""
    c0 = a[0]
    if c0 not in (1, -1):
        raise ValueError(f"constant term {c0} is not a unit in the integers")
    n = a.order
    ac = a.coeffs
    nz = [(i, ac[i]) for i in range(1, n + 1) if ac[i]]
    b = [0] * (n + 1)
    b[0] = c0
    for k in range(1, n + 1):
        s = 0
        for i, ai in nz:
            if i > k:
                break
            s += ai * b[k - i]
        b[k] = -s * c0
    return FormalPowerSeries(b)


def _times_binomial(coeffs, e, sign, n):
    # in place: coeffs *= (1 + sign*q^e), high to low
    for i in range(n, e - 1, -1):
        coeffs[i] += sign * coeffs[i - e]


def euler_product(a: int, b: int, N: int, sign: int = -1):
    """Expand prod_{k>=0} (1 + sign*q^(a+kb)) to order N.

    ``sign=-1`` gives (q^a; q^b)_inf, ``sign=+1`` gives (-q^a; q^b)_inf.
    """
    if a < 1:
        raise ValueError(f"base exponent must be >= 1, got {a}")
    if b < 1:
        raise ValueError(f"step must be >= 1, got {b}")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    coeffs = [0] * (N + 1)
    coeffs[0] = 1
    e = a
    while e <= N:
        _times_binomial(coeffs, e, sign, N)
        e += b
    return FormalPowerSeries(coeffs)


def multi_product(specs, N: int):
    """Product of euler_product(a, b, N) over the (a, b) pairs in specs."""
    out = FormalPowerSeries.one(N)
    for a, b in specs:
        out = out * euler_product(a, b, N)
    return out


def theta_triangular(sign: int, N: int):
    """sum_k (sign*q)^{T_k}: coefficient sign**T_k at q^{T_k}."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    coeffs = [0] * (N + 1)
    k = 0
    while (t := triangular(k)) <= N:
        coeffs[t] = sign ** t
        k += 1
    return FormalPowerSeries(coeffs)


def theta_square(N: int):
    """1 + 2 * sum_{k>=1} (-1)^k q^{k^2}."""
    coeffs = [0] * (N + 1)
    coeffs[0] = 1
    k = 1
    while k * k <= N:
        coeffs[k * k] = 2 * (-1) ** k
        k += 1
    return FormalPowerSeries(coeffs)


def partition_series(N: int):
    """1/(q;q)_inf, the generating series of p(n)."""
    return fps_inverse(euler_product(1, 1, N))


MOD32_SPECS = ((2, 32), (12, 32), (14, 32), (16, 32), (18, 32), (20, 32), (30, 32), (32, 32))


def mod32_product(N: int):
    return multi_product(MOD32_SPECS, N)


def gen_S_r(r: int, N: int):
    """(q^{2r}; q^{2r}) / ((q;q) (q^r; q^{2r})), whose q^n coefficient is S_r(n)."""
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    den = euler_product(1, 1, N) * euler_product(r, 2 * r, N)
    return euler_product(2 * r, 2 * r, N) * fps_inverse(den)


def gen_U_r(r: int, N: int):
    """(q^r, q^{3r}, q^{4r}; q^{4r}) / (q;q), whose q^n coefficient is U_r(n)."""
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    num = multi_product(((r, 4 * r), (3 * r, 4 * r), (4 * r, 4 * r)), N)
    return num * partition_series(N)


def gen_L(N: int):
    """Mod-32 product over (q;q), whose q^n coefficient is L(n)."""
    return mod32_product(N) * partition_series(N)

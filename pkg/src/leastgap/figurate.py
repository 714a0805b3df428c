"""Triangular, generalized pentagonal and polygonal numbers.

Values are used as exponents and shifts, never as coefficients, so they are
kept within the signed 64-bit range and anything larger raises.
"""

INT64_MAX = 2**63 - 1


def _checked(value):
    if value > INT64_MAX or value < -INT64_MAX - 1:
        raise OverflowError(f"figurate value {value} exceeds 64-bit range")
    return value


def _require_nonnegative(k, name="k"):
    if k < 0:
        raise ValueError(f"{name} must be non-negative, got {k}")


def triangular(k: int) -> int:
    """Return k(k+1)/2."""
    _require_nonnegative(k)
    return _checked(k * (k + 1) // 2)


def gen_pentagonal(k: int) -> int:
    """k-th generalized pentagonal number, ceil(k/2) * ceil((3k+1)/2) / 2.

    Runs 0, 1, 2, 5, 7, 12, 15, ... (k = 0, 1, 2, ...), so the sign
    ``(-1)**ceil(k/2)`` of Euler's pentagonal series pairs naturally with it.
    """
    _require_nonnegative(k)
    a = -(-k // 2)
    b = -(-(3 * k + 1) // 2)
    return _checked(a * b // 2)


def polygonal(s: int, n: int) -> int:
    """n-th s-gonal number ((s-2)n^2 - (s-4)n)/2; generalized for n < 0."""
    if s < 3:
        raise ValueError(f"polygon needs at least 3 sides, got s={s}")
    return _checked((n * n * (s - 2) - n * (s - 4)) // 2)


def pentagonal_sign(k: int) -> int:
    """Sign (-1)**ceil(k/2) attached to gen_pentagonal(k)."""
    _require_nonnegative(k)
    return -1 if (-(-k // 2)) % 2 else 1


def triangulars_upto(limit):
    """Yield (k, T_k) for every T_k <= limit."""
    k = 0
    while True:
        t = triangular(k)
        if t > limit:
            return
        yield k, t
        k += 1


def twice_pentagonals_upto(limit):
    """Set of 2*G_k that do not exceed limit."""
    out = set()
    k = 0
    while 2 * gen_pentagonal(k) <= limit:
        out.add(2 * gen_pentagonal(k))
        k += 1
    return out

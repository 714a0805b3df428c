"""Registry of the partition identities and a coefficient-by-coefficient checker.

Each identity is a pair of *vector* recipes ``side(n_max, r) -> list`` giving
the values for n = 0..n_max. The two sides are built from routes that share
as little as possible: convolution sums against the memoized p(n) on one
side, definition-level counting programs or series products on the other.
"""

import json
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from . import counting as ct
from . import series
from .figurate import twice_pentagonals_upto

DEFAULT_R = tuple(range(1, 7))
SELF_TEST_ID = "T0-corrupted-test-double"


@dataclass(frozen=True)
class IdentityDescriptor:
    id: str
    statement: str
    lhs: Callable
    rhs: Callable
    parameterized: bool = False
    default_N: int = 300


@dataclass
class IdentityReport:
    id: str
    n_range: tuple
    r_range: Optional[tuple]
    status: str
    first_mismatch: Optional[dict] = None
    elapsed: float = 0.0

    @property
    def passed(self):
        return self.status == "pass"

    def to_dict(self):
        return {
            "id": self.id,
            "n_range": list(self.n_range),
            "r_range": list(self.r_range) if self.r_range is not None else None,
            "status": self.status,
            "first_mismatch": self.first_mismatch,
            "elapsed": round(self.elapsed, 6),
        }

    def to_json(self):
        return json.dumps(self.to_dict())

    def summary(self):
        rs = ""
        if self.r_range:
            rs = f" r={_fmt_rset(self.r_range)}"
        head = f"{self.status.upper():4} {self.id:<24} n<={self.n_range[1]}{rs}"
        if self.first_mismatch:
            m = self.first_mismatch
            where = f"n={m['n']}" + (f", r={m['r']}" if m["r"] is not None else "")
            return f"{head}  first mismatch at {where}: lhs={m['lhs']} rhs={m['rhs']}"
        return f"{head}  ({self.elapsed:.3f}s)"


def _fmt_rset(rs):
    rs = sorted(rs)
    if len(rs) > 1 and rs == list(range(rs[0], rs[-1] + 1)):
        return f"{rs[0]}..{rs[-1]}"
    return ",".join(map(str, rs))


def _fmt_value(v):
    if isinstance(v, Fraction) and v.denominator != 1:
        return f"{v.numerator}/{v.denominator}"
    return str(int(v))


# ---------------------------------------------------------------------------
# vector recipes


def _per_n(fn):
    """Lift a scalar f(n) or f(n, r) into a vector recipe."""
    def vec(N, r=None):
        if r is None:
            return [fn(n) for n in range(N + 1)]
        return [fn(n, r) for n in range(N + 1)]
    return vec


def _halves(*vectors, signs):
    return [ct.half(sum(s * v[n] for s, v in zip(signs, vectors))) for n in range(len(vectors[0]))]


def _dp_p(N):
    return ct.dp_partition_counts(N)


def _er_lhs(N, r=None):
    # p here comes from the coin-change count, not from the recurrence itself
    table = _dp_p(N)
    return [ct.sum_pentagonal_signed(n, p_of=lambda m: table[m] if m >= 0 else 0) for n in range(N + 1)]


def _delta(N, r=None):
    return [1] + [0] * N


def _bis1_lhs(N, r=None):
    return [ct.sum_pentagonal_signed(n, bisect=True) for n in range(N + 1)]


def _L_dp(N, r=None):
    return list(ct.dp_residue_restricted(32, ct.L_FORBIDDEN, N))


def _eq1_lhs(N, r=None):
    s = series.euler_product(1, 1, N) * series.fps_inverse(series.euler_product(2, 4, N))
    return list(s.coeffs)


def _eq1_rhs(N, r=None):
    return list(series.theta_triangular(-1, N).coeffs)


def _S(N, r):
    return ct.dp_S_table(r, N)


def _G(N, r):
    return ct.dp_G_table(r, N)


def _U(N, r):
    return ct.dp_residue_restricted(4 * r, (0, r, 3 * r), N)


def _pe(N):
    return ct.dp_parity_table(N)[0]


def _po(N):
    return ct.dp_parity_table(N)[1]


def _T1_rhs(sign):
    def rhs(N, r):
        return _halves(_S(N, r), _U(N, r), signs=(1, sign))
    return rhs


def _parity_lhs(N, r):
    return [v % 2 for v in _S(N, r)]


def _parity_rhs(N, r):
    return [v % 2 for v in _U(N, r)]


def _c1_rhs(N, r=None):
    return [ct.q_distinct(n // 2) if n % 2 == 0 else 0 for n in range(N + 1)]


def _twice_pent_indicator(N):
    tp = twice_pentagonals_upto(N)
    return [1 if n in tp else 0 for n in range(N + 1)]


def _c6_lhs(N, r=None):
    return [v % 2 for v in _S(N, 1)]


def _t2_rhs(N, r):
    return [s + g for s, g in zip(_S(N, r), _G(N, r))]


def _eq11_lhs(N, r=None):
    return [ct.MEMO[n] + 2 * ct.sum_squares(n, start=1) for n in range(N + 1)]


def _eq11_rhs(N, r=None):
    return [e - o for e, o in zip(_pe(N), _po(N))]


def _eq12_lhs(N, r=None):
    return [ct.MEMO[n] + ct.sum_squares(n, start=1) for n in range(N + 1)]


def _sq_lhs(parity):
    def lhs(N, r=None):
        return [ct.sum_squares(n, weight=lambda k: 1 if k % 2 == parity else 0) for n in range(N + 1)]
    return lhs


def _T2_plus(N, r, other, sign):
    base = [s + g for s, g in zip(_S(N, r), _G(N, r))]
    return _halves(base, other, signs=(1, sign))


def _shift_sum(shift_of_k, sign_of_k=lambda k: 1):
    def lhs(N, r=None):
        return [ct.shifted_sum(n, ((sign_of_k(k), shift_of_k(k)) for k in ct._count(0))) for n in range(N + 1)]
    return lhs


def _R(N):
    return ct.dp_rank_nonneg(N)


def _C(N):
    return ct.dp_crank_nonneg(N)


def _crank_u1_index(offset):
    return lambda k: k + 2 * (k // 2) + offset


def _crank_u1_lhs(offset):
    idx = _crank_u1_index(offset)
    return _shift_sum(lambda k: ct.triangular(idx(k)), lambda k: (-1) ** k)


def _crank_u1_rhs(sign):
    def rhs(N, r=None):
        return _halves(_C(N), _U(N, 1), signs=(1, sign))
    return rhs


def _corrupted_rhs(N, r):
    vals = list(_S(N, r))
    if N >= 7:
        vals[7] += 1
    return vals


_REGISTRY = (
    IdentityDescriptor(
        "ER", "Euler's recurrence: sum_k (-1)^ceil(k/2) p(n - G_k) = [n = 0]",
        _er_lhs, _delta, default_N=500),
    IdentityDescriptor(
        "BIS1", "Even-G_k bisection of Euler's recurrence equals L(n), parts avoiding 0,2,12,14,16,18,20,30 mod 32",
        _bis1_lhs, _L_dp),
    IdentityDescriptor(
        "EQ1", "Series: (q;q)_inf / (q^2;q^4)_inf = sum_k (-q)^{T_k}",
        _eq1_lhs, _eq1_rhs, default_N=200),
    IdentityDescriptor(
        "T0", "sum_k p(n - r T_k) = S_r(n)",
        lambda N, r: [ct.sum_rT(n, r) for n in range(N + 1)], _S, parameterized=True),
    IdentityDescriptor(
        "T1i", "sum_k p(n - r T_{4k}) + p(n - r T_{4k+3}) = (S_r(n) + U_r(n)) / 2",
        lambda N, r: [ct.sum_rT_classes(n, r, (0, 3)) for n in range(N + 1)], _T1_rhs(1),
        parameterized=True),
    IdentityDescriptor(
        "T1ii", "sum_k p(n - r T_{4k+1}) + p(n - r T_{4k+2}) = (S_r(n) - U_r(n)) / 2",
        lambda N, r: [ct.sum_rT_classes(n, r, (1, 2)) for n in range(N + 1)], _T1_rhs(-1),
        parameterized=True),
    IdentityDescriptor(
        "PARITY", "S_r(n) and U_r(n) have the same parity",
        _parity_lhs, _parity_rhs, parameterized=True),
    IdentityDescriptor(
        "COR1", "sum_k (-1)^{T_k} p(n - r T_k) = U_r(n)",
        lambda N, r: [ct.sum_signed_rT(n, r) for n in range(N + 1)], _U, parameterized=True),
    IdentityDescriptor(
        "C1", "sum_k (-1)^{T_k} p(n - T_k) = q(n/2) for even n, 0 for odd n",
        lambda N, r=None: [ct.sum_signed_rT(n, 1) for n in range(N + 1)], _c1_rhs),
    IdentityDescriptor(
        "C6", "S_1(n) is odd exactly when n is twice a generalized pentagonal number",
        _c6_lhs, lambda N, r=None: _twice_pent_indicator(N)),
    IdentityDescriptor(
        "T2", "sum_k p(n - P(r+2, -k)) = S_r(n) + G_r(n)",
        lambda N, r: [ct.sum_polygonal(n, r) for n in range(N + 1)], _t2_rhs, parameterized=True),
    IdentityDescriptor(
        "EQ11", "p(n) + 2 sum_{k>=1} (-1)^k p(n - k^2) = p_e(n) - p_o(n)",
        _eq11_lhs, _eq11_rhs),
    IdentityDescriptor(
        "EQ12", "p(n) + sum_{k>=1} (-1)^k p(n - k^2) = p_e(n)",
        _eq12_lhs, lambda N, r=None: list(_pe(N))),
    IdentityDescriptor(
        "SQ-EVEN", "sum_k p(n - (2k)^2) = (S_2(n) + G_2(n) + p_e(n)) / 2",
        _sq_lhs(0), lambda N, r=None: _T2_plus(N, 2, _pe(N), 1)),
    IdentityDescriptor(
        "SQ-ODD", "sum_k p(n - (2k+1)^2) = (S_2(n) + G_2(n) - p_e(n)) / 2",
        _sq_lhs(1), lambda N, r=None: _T2_plus(N, 2, _pe(N), -1)),
    IdentityDescriptor(
        "RANK-I", "sum_k p(n - k(6k+1)) = (S_3(n) + G_3(n) + R(n)) / 2",
        _shift_sum(lambda k: k * (6 * k + 1)), lambda N, r=None: _T2_plus(N, 3, _R(N), 1)),
    IdentityDescriptor(
        "RANK-II", "sum_k p(n - (2k+1)(3k+2)) = (S_3(n) + G_3(n) - R(n)) / 2",
        _shift_sum(lambda k: (2 * k + 1) * (3 * k + 2)), lambda N, r=None: _T2_plus(N, 3, _R(N), -1)),
    IdentityDescriptor(
        "R10", "R(n) = sum_k (-1)^k p(n - k(3k+1)/2), R counting nonnegative rank",
        _per_n(ct.sum_rank_pentagonal), lambda N, r=None: list(_R(N))),
    IdentityDescriptor(
        "CRANK", "C(n) = sum_k (-1)^k p(n - T_k), C counting nonnegative crank",
        _per_n(ct.sum_alternating_triangular), lambda N, r=None: list(_C(N))),
    IdentityDescriptor(
        "CRANK-PAR", "C(n) is odd exactly when n is twice a generalized pentagonal number",
        lambda N, r=None: [v % 2 for v in _C(N)], lambda N, r=None: _twice_pent_indicator(N)),
    IdentityDescriptor(
        "CRANK-U1i", "sum_k (-1)^k p(n - T_{k+2floor(k/2)}) = (C(n) + U_1(n)) / 2",
        _crank_u1_lhs(0), _crank_u1_rhs(1)),
    IdentityDescriptor(
        "CRANK-U1ii", "sum_k (-1)^k p(n - T_{k+2floor(k/2)+2}) = (C(n) - U_1(n)) / 2",
        _crank_u1_lhs(2), _crank_u1_rhs(-1)),
)

_SELF_TEST = IdentityDescriptor(
    SELF_TEST_ID, "Harness self-test: T0 with S_r(7) deliberately off by one; must fail",
    lambda N, r: [ct.sum_rT(n, r) for n in range(N + 1)], _corrupted_rhs, parameterized=True)

_BY_ID = {d.id: d for d in _REGISTRY + (_SELF_TEST,)}
assert len(_BY_ID) == len(_REGISTRY) + 1


def registry():
    """Every identity, in reporting order (the self-test double excluded)."""
    return list(_REGISTRY)


def lookup(identity_id):
    try:
        return _BY_ID[identity_id]
    except KeyError:
        raise KeyError(f"unknown identity {identity_id!r}") from None


def verify(identity_id: str, n_max: int, r_set=None) -> IdentityReport:
    """Compare both sides for n = 0..n_max (and each r), stopping at the first mismatch."""
    desc = lookup(identity_id)
    if n_max < 0:
        raise ValueError(f"n_max must be non-negative, got {n_max}")
    if r_set is not None and not desc.parameterized:
        raise ValueError(f"identity {identity_id} takes no r parameter")
    if desc.parameterized:
        rs = tuple(sorted(set(r_set))) if r_set is not None else DEFAULT_R
        if not rs or min(rs) < 1:
            raise ValueError(f"r values must be >= 1, got {rs}")
    else:
        rs = (None,)

    t0 = time.perf_counter()
    ct.MEMO.extend(n_max)
    sides = {r: (desc.lhs(n_max, r), desc.rhs(n_max, r)) if r is not None
             else (desc.lhs(n_max), desc.rhs(n_max)) for r in rs}
    mismatch = None
    for n in range(n_max + 1):
        for r in rs:
            lhs, rhs = sides[r]
            if lhs[n] != rhs[n]:
                mismatch = {"n": n, "r": r, "lhs": _fmt_value(lhs[n]), "rhs": _fmt_value(rhs[n])}
                break
        if mismatch:
            break
    return IdentityReport(
        id=desc.id,
        n_range=(0, n_max),
        r_range=rs if desc.parameterized else None,
        status="fail" if mismatch else "pass",
        first_mismatch=mismatch,
        elapsed=time.perf_counter() - t0,
    )


def verify_all(n_max, r_set=None, ids=None):
    out = []
    for d in registry():
        if ids is not None and d.id not in ids:
            continue
        out.append(verify(d.id, n_max, r_set if d.parameterized else None))
    return out

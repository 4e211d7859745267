"""Elliptic curves y^2 = x^3 + a*x + b over prime fields: exact point counts
two ways, and the per-prime fingerprint pipeline that compares the cokernel
group order |det(I - L_p)| with the curve's point count.

The two counting loops are the hot kernels of the package.  A compiled
backend (rmtorus._ecount, Cython) is used when it imported successfully and
the prime fits in a machine word; otherwise the pure-Python fallbacks below
run.  Both backends implement the same exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Sequence

from .intmat import AbelianGroup, IMat2, build_Lp, cokernel_group, mat_det, mat_pow, mat_trace, matrix_A
from .quadratic import QuadraticIrrational, cf_expand
from .units import pi_index

try:
    from . import _ecount
except ImportError:
    _ecount = None

BACKEND = "compiled" if _ecount is not None else "python"

_COMPILED_LIMIT = 2**31  # products must fit in signed 64-bit in the kernels


@dataclass(frozen=True)
class Curve:
    """Short Weierstrass curve with integer coefficients; must be non-singular."""

    a: int
    b: int

    def __post_init__(self):
        if self.discriminant() == 0:
            raise ValueError(f"singular curve: a={self.a}, b={self.b}")

    def discriminant(self) -> int:
        return -16 * (4 * self.a**3 + 27 * self.b**2)

    def __str__(self):
        return f"y^2 = x^3 + {self.a}*x + {self.b}"


def is_prime(n: int) -> bool:
    """Deterministic trial division, adequate for word-sized inputs."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    i = 5
    while i * i <= n:
        if n % i == 0 or n % (i + 2) == 0:
            return False
        i += 6
    return True


def is_good_prime(e: Curve, p: int) -> bool:
    """True iff p > 3 and p does not divide the discriminant."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return p > 3 and e.discriminant() % p != 0


def _require_good(e: Curve, p: int) -> None:
    if not is_good_prime(e, p):
        raise ValueError(f"p={p} is not a good prime for {e}")


def _naive_count_py(a: int, b: int, p: int) -> int:
    count = 1  # point at infinity
    a %= p
    b %= p
    for x in range(p):
        rhs = ((x * x % p) * x + a * x + b) % p
        for y in range(p):
            if y * y % p == rhs:
                count += 1
    return count


def _charsum_count_py(a: int, b: int, p: int) -> int:
    e = (p - 1) // 2
    a %= p
    b %= p
    s = 0
    for x in range(p):
        v = ((x * x % p) * x + a * x + b) % p
        if v == 0:
            continue
        s += 1 if pow(v, e, p) == 1 else -1
    return p + 1 + s


def count_points_naive(e: Curve, p: int) -> int:
    """|E(F_p)| by full O(p^2) enumeration; the independent oracle."""
    _require_good(e, p)
    if _ecount is not None and p < _COMPILED_LIMIT:
        return _ecount.naive_count(e.a, e.b, p)
    return _naive_count_py(e.a, e.b, p)


def count_points(e: Curve, p: int) -> tuple[int, int]:
    """(|E(F_p)|, a_p) via the quadratic-character sum; a_p = p + 1 - count."""
    _require_good(e, p)
    if _ecount is not None and p < _COMPILED_LIMIT:
        n = _ecount.charsum_count(e.a, e.b, p)
    else:
        n = _charsum_count_py(e.a, e.b, p)
    ap = p + 1 - n
    if ap * ap > 4 * p:
        raise ArithmeticError(f"count {n} violates |a_p| <= 2*sqrt({p})")
    return n, ap


def hasse_bound(p: int) -> int:
    """floor(2*sqrt(p))."""
    return isqrt(4 * p)


@dataclass(frozen=True)
class Fingerprint:
    """Per-prime data of the unit/matrix pipeline for one theta."""

    p: int
    pi: int
    T: int
    Lp: IMat2
    det_iml: int
    group: AbelianGroup

    def __post_init__(self):
        if self.det_iml != 1 + self.p - self.T:
            raise ValueError("det(I - L_p) must equal 1 + p - T")


def fingerprint(
    theta: QuadraticIrrational, primes: Sequence[int], cap: int = 10**6
) -> list[Fingerprint]:
    """For each p: the index pi(p), T = tr(A^pi(p)) for the period matrix A of
    theta, the matrix L_p, det(I - L_p), and the cokernel group."""
    a = matrix_A(cf_expand(theta).period)
    rows = []
    for p in primes:
        if p < 2:
            raise ValueError("primes must be >= 2")
        k = pi_index(theta, p, cap=cap)
        t = mat_trace(mat_pow(a, k))
        lp = build_Lp(t, p)
        det_iml = mat_det(IMat2(1 - lp.a, -lp.b, -lp.c, 1 - lp.d))
        rows.append(Fingerprint(p, k, t, lp, det_iml, cokernel_group(lp)))
    return rows


@dataclass(frozen=True)
class MatchEntry:
    data: Fingerprint
    ec_count: int
    match: bool


@dataclass(frozen=True)
class MatchReport:
    curve: Curve
    entries: tuple[MatchEntry, ...]
    skipped: tuple[int, ...]

    def matching(self) -> list[int]:
        return [e.data.p for e in self.entries if e.match]

    def mismatching(self) -> list[int]:
        return [e.data.p for e in self.entries if not e.match]


def match_curve(
    theta: QuadraticIrrational,
    e: Curve,
    primes: Sequence[int],
    cap: int = 10**6,
) -> MatchReport:
    """Per good prime, compare |det(I - L_p)| with |E(F_p)|.  The report
    records agreement where it happens; it asserts nothing about whether
    matches must exist."""
    good = [p for p in primes if is_good_prime(e, p)]
    skipped = tuple(p for p in primes if p not in good)
    entries = []
    for row in fingerprint(theta, good, cap=cap):
        n, _ = count_points(e, row.p)
        entries.append(MatchEntry(row, n, abs(row.det_iml) == n))
    return MatchReport(e, tuple(entries), skipped)

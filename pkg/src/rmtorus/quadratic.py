"""Exact real quadratic irrationals and their periodic continued fractions.

A value is the integer triple (P, D, Q) meaning (P + sqrt(D))/Q, with D > 0
not a perfect square and Q != 0.  The sign of the irrational part lives in Q,
so the numerator always carries +sqrt(D).  Triples are kept in a reduced form
satisfying Q | D - P^2, which makes the continued fraction recurrence purely
integral: no floating point is used anywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt


def _is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


@dataclass(frozen=True, eq=False)
class QuadraticIrrational:
    """(P + sqrt(D)) / Q with Q | D - P^2.  Build unreduced triples via canonicalize()."""

    P: int
    D: int
    Q: int

    def __post_init__(self):
        if self.D <= 0 or _is_square(self.D):
            raise ValueError(f"D must be positive and not a perfect square, got {self.D}")
        if self.Q == 0:
            raise ValueError("Q must be nonzero")
        if (self.D - self.P * self.P) % self.Q != 0:
            raise ValueError(
                f"({self.P},{self.D},{self.Q}) violates Q | D - P^2; use canonicalize()"
            )

    def _key(self):
        # P/Q, D/Q^2 and sign(Q) pin down the real number exactly, independent
        # of which (equivalent) triple represents it.
        return (Fraction(self.P, self.Q), Fraction(self.D, self.Q * self.Q), self.Q > 0)

    def __eq__(self, other):
        if not isinstance(other, QuadraticIrrational):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def floor(self) -> int:
        s = isqrt(self.D)  # sqrt(D) is irrational, so floor(P + sqrt(D)) = P + s
        if self.Q > 0:
            return (self.P + s) // self.Q
        return (-self.P - s - 1) // (-self.Q)

    def trace(self) -> Fraction:
        """Sum of the value and its conjugate, 2P/Q."""
        return Fraction(2 * self.P, self.Q)

    def norm(self) -> Fraction:
        """Product of the value and its conjugate, (P^2 - D)/Q^2."""
        return Fraction(self.P * self.P - self.D, self.Q * self.Q)

    def conjugate(self) -> QuadraticIrrational:
        return canonicalize(-self.P, self.D, -self.Q)

    def __str__(self):
        return f"({self.P}+sqrt({self.D}))/{self.Q}"


@dataclass(frozen=True)
class ContinuedFraction:
    """Eventually periodic expansion: preperiod then period repeated forever."""

    preperiod: tuple[int, ...]
    period: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "preperiod", tuple(self.preperiod))
        object.__setattr__(self, "period", tuple(self.period))
        if not self.period:
            raise ValueError("period must be nonempty")
        if any(a < 1 for a in self.period):
            raise ValueError("period entries must be >= 1")
        if any(a < 1 for a in self.preperiod[1:]):
            raise ValueError("preperiod entries after the first must be >= 1")
        n = len(self.period)
        for d in range(1, n):
            if n % d == 0 and self.period == self.period[:d] * (n // d):
                raise ValueError(f"period {self.period} is a repetition of length {d}")


def canonicalize(P: int, D: int, Q: int) -> QuadraticIrrational:
    """Reduce (P, D, Q) to the stored form: strip joint square content from the
    triple, then rescale so that Q | D - P^2.  Idempotent."""
    if D <= 0 or _is_square(D):
        raise ValueError(f"D must be positive and not a perfect square, got {D}")
    if Q == 0:
        raise ValueError("Q must be nonzero")
    while True:
        g = gcd(P, Q)
        if g > 1 and D % (g * g) == 0:
            P //= g
            Q //= g
            D //= g * g
        else:
            break
    if (D - P * P) % Q != 0:
        s = abs(Q)
        P *= s
        D *= s * s
        Q *= s
    return QuadraticIrrational(P, D, Q)


def _from_parts(P: int, m: int, D: int, Q: int) -> QuadraticIrrational:
    """Canonical value of (P + m*sqrt(D))/Q for any integer multiplier m != 0."""
    if m == 0:
        raise ValueError("value is rational (zero irrational part)")
    if m < 0:
        P, m, Q = -P, -m, -Q
    g = gcd(gcd(P, m), Q)
    if g > 1:
        P //= g
        m //= g
        Q //= g
    return canonicalize(P, D * m * m, Q)


def _mobius(theta: QuadraticIrrational, a: int, b: int, c: int, d: int) -> QuadraticIrrational:
    """Exact (a*theta + b)/(c*theta + d) for integers with ad - bc != 0."""
    det = a * d - b * c
    if det == 0:
        raise ValueError("transform is singular")
    P, D, Q = theta.P, theta.D, theta.Q
    A = a * P + b * Q
    C = c * P + d * Q
    den = C * C - c * c * D
    # c*theta + d = 0 would force theta rational
    assert den != 0
    return _from_parts(A * C - a * c * D, Q * det, D, den)


def _expand_cycle(
    theta: QuadraticIrrational,
) -> tuple[tuple[int, ...], tuple[int, ...], QuadraticIrrational]:
    """Run the integer recurrence until a (P, Q) state repeats.

    Returns (preperiod, period, surd at the cycle start).  The period starts
    at the first repeated state.  Once the surd is reduced there are O(D)
    states; reaching the reduced range from a tall input shrinks P, Q like
    Euclid's algorithm, so the cap gets a term linear in their bit size.
    """
    seen: dict[tuple[int, int], int] = {}
    quotients: list[int] = []
    surds: list[QuadraticIrrational] = []
    cur = theta
    cap = 2 * theta.D + 8 * (abs(theta.P).bit_length() + abs(theta.Q).bit_length()) + 64
    for _ in range(cap):
        state = (cur.P, cur.Q)
        if state in seen:
            i = seen[state]
            return tuple(quotients[:i]), tuple(quotients[i:]), surds[i]
        seen[state] = len(quotients)
        surds.append(cur)
        a = cur.floor()
        quotients.append(a)
        # theta' = 1/(theta - a):  P' = a*Q - P,  Q' = (D - P'^2)/Q  (exact)
        P1 = a * cur.Q - cur.P
        Q1 = (cur.D - P1 * P1) // cur.Q
        cur = QuadraticIrrational(P1, cur.D, Q1)
    raise RuntimeError(f"no cycle within {cap} steps; recurrence invariant broken")


def cf_expand(theta: QuadraticIrrational) -> ContinuedFraction:
    """Minimal-period continued fraction of theta, found by exact cycle detection."""
    pre, per, _ = _expand_cycle(theta)
    return ContinuedFraction(pre, per)


def cf_value(cf: ContinuedFraction) -> QuadraticIrrational:
    """Exact value of an eventually periodic continued fraction.

    The periodic tail y > 1 solves the fixed-point equation of the period's
    matrix product; the preperiod is then unwound exactly.
    """
    m00, m01, m10, m11 = 1, 0, 0, 1
    for a in cf.period:
        m00, m01, m10, m11 = m00 * a + m01, m00, m10 * a + m11, m10
    # m10*y^2 + (m11 - m00)*y - m01 = 0,  root with y > 1
    B = m00 - m11
    disc = B * B + 4 * m01 * m10
    value = _from_parts(B, 1, disc, 2 * m10)
    for a in reversed(cf.preperiod):
        value = _mobius(value, a, 1, 1, 0)
    return value


def conj_trace_norm(
    theta: QuadraticIrrational,
) -> tuple[QuadraticIrrational, Fraction, Fraction]:
    """Conjugate (P - sqrt(D))/Q together with the exact trace and norm."""
    return theta.conjugate(), theta.trace(), theta.norm()

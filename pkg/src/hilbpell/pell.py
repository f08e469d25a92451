"""Exact solvers for the two Pell-type equations behind the cone trichotomy.

* ``fundamental_pell(D)`` — least nontrivial solution of X² - D·Y² = 1.
* ``solve_case_b(n, d)`` — least-x positive solution of (n-1)·X² - d·Y² = 1,
  or None when the equation has no positive integer solutions.

Everything is arbitrary-precision integer arithmetic; the solvers are
deterministic and terminate with provable completeness bounds (see the
comments on the solution-class enumeration below).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from math import gcd, isqrt


class PerfectSquareError(ValueError):
    """Raised when a continued-fraction expansion of √D needs non-square D."""


class NotASolutionError(ValueError):
    """Raised when a claimed Pell solution fails exact substitution."""


@dataclass(frozen=True)
class PellProblem:
    """The equation a·X² - b·Y² = 1 with positive integer coefficients."""

    a: int
    b: int

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise ValueError("Pell coefficients must be positive integers")

    @classmethod
    def case_b(cls, n: int, d: int) -> "PellProblem":
        return cls(n - 1, d)

    @classmethod
    def case_c(cls, n: int, d: int) -> "PellProblem":
        return cls(1, d * (n - 1))

    @classmethod
    def fundamental(cls, D: int) -> "PellProblem":
        return cls(1, D)

    def residual(self, x: int, y: int) -> int:
        return self.a * x * x - self.b * y * y

    def is_solution(self, x: int, y: int) -> bool:
        return self.residual(x, y) == 1

    def __str__(self) -> str:
        ax2 = "X^2" if self.a == 1 else f"{self.a}*X^2"
        return f"{ax2} - {self.b}*Y^2 = 1"


@dataclass(frozen=True)
class PellSolution:
    """A nonnegative solution pair; ``minimal`` marks solver-certified minima."""

    x: int
    y: int
    minimal: bool = False

    def __post_init__(self):
        if self.x < 1 or self.y < 0:
            raise ValueError("solutions are reported with x >= 1, y >= 0")

    def as_pair(self) -> tuple[int, int]:
        return (self.x, self.y)


def is_perfect_square(m: int) -> tuple[bool, int]:
    """Exact integer-square test; returns (True, root) or (False, 0)."""
    if m < 0:
        return (False, 0)
    r = isqrt(m)
    if r * r == m:
        return (True, r)
    return (False, 0)


def continued_fraction_sqrt(D: int) -> tuple[int, tuple[int, ...]]:
    """Canonical periodic continued fraction of √D, as (a0, period digits).

    Uses the classical (P, Q) recursion; the period ends at the first
    partial quotient equal to 2·a0 (with Q back at 1).
    """
    if D < 2:
        raise PerfectSquareError(f"√{D} has no nontrivial expansion")
    square, a0 = is_perfect_square(D)
    if square:
        raise PerfectSquareError(f"{D} is a perfect square")
    a0 = isqrt(D)
    period: list[int] = []
    P, Q = 0, 1
    a = a0
    while True:
        P = a * Q - P
        Q = (D - P * P) // Q
        a = (a0 + P) // Q
        period.append(a)
        if a == 2 * a0 and Q == 1:
            return (a0, tuple(period))


@functools.lru_cache(maxsize=None)
def fundamental_pell(D: int) -> PellSolution:
    """Least solution with x, y >= 1 of X² - D·Y² = 1.

    For this equation the least-x, least-y and least-y/x conventions all
    pick the same solution (x and y increase together along convergents);
    the test suite confirms this against brute force rather than assuming
    it for any generalized equation.
    """
    square, _ = is_perfect_square(D)
    if D < 2 or square:
        raise PerfectSquareError(f"X^2 - {D}*Y^2 = 1 has no nontrivial solution")
    a0, period = continued_fraction_sqrt(D)
    # Convergent recursion; the fundamental solution appears at the end of
    # the first period (even length) or the second (odd length).
    p_prev, p = 1, a0
    q_prev, q = 0, 1
    digits = list(period) * 2
    for a in digits:
        if p * p - D * q * q == 1 and q >= 1:
            break
        p, p_prev = a * p + p_prev, p
        q, q_prev = a * q + q_prev, q
    if p * p - D * q * q != 1:
        raise AssertionError(f"continued fraction failed to solve X^2-{D}Y^2=1")
    return PellSolution(p, q, minimal=True)


def _negative_pell(D: int) -> PellSolution | None:
    """Least solution of X² - D·Y² = -1, or None (period must be odd)."""
    a0, period = continued_fraction_sqrt(D)
    if len(period) % 2 == 0:
        return None
    p_prev, p = 1, a0
    q_prev, q = 0, 1
    for a in period:
        if p * p - D * q * q == -1:
            return PellSolution(p, q, minimal=True)
        p, p_prev = a * p + p_prev, p
        q, q_prev = a * q + q_prev, q
    if p * p - D * q * q == -1:
        return PellSolution(p, q, minimal=True)
    return None


def _pqa_class_representatives(D: int, N: int) -> list[tuple[int, int]]:
    """Representatives of every solution class of U² - D·Y² = N (N > 0).

    Completeness bound (LMM method): for each f with f² | N write
    m = N / f²; every class of primitive solutions of U² - D·Y² = m has a
    representative (G, B) produced by the PQa recursion started at
    (P₀, Q₀) = (z, |m|) with z² ≡ D (mod |m|), at an index where Q = ±1,
    and such indices occur before the (P, Q) state sequence first repeats.
    A start whose recursion attains G² - D·B² = -m instead combines with
    the least solution of X² - D·Y² = -1 when that exists; otherwise the
    start contributes no class.  Representatives here need not be
    class-minimal; minimization happens in the orbit walk afterwards.
    """
    reps: list[tuple[int, int]] = []
    f = 1
    while f * f <= N:
        if N % (f * f) == 0:
            m = N // (f * f)
            if m == 1:
                reps.append((f, 0))
            else:
                for z in range(m):
                    if (z * z - D) % m != 0:
                        continue
                    reps.extend(
                        (f * u, f * y) for u, y in _pqa_scan(D, m, z)
                    )
        f += 1
    return reps


def _pqa_scan(D: int, m: int, z: int) -> list[tuple[int, int]]:
    """Run the PQa recursion from (P₀, Q₀) = (z, m) until the state repeats,
    collecting a solution of U² - D·Y² = ±m at every Q = ±1 index."""
    found: list[tuple[int, int]] = []
    sqrt_d = isqrt(D)
    P, Q = z, m
    # G/B convergent pair for the quadratic irrational (P + √D)/Q.
    G_prev, G = Q, -P
    B_prev, B = 0, 1
    seen: set[tuple[int, int]] = set()
    while (P, Q) not in seen:
        seen.add((P, Q))
        a = (P + sqrt_d) // Q if Q > 0 else (P + sqrt_d + 1) // Q - 1
        P_next = a * Q - P
        Q_next = (D - P_next * P_next) // Q
        G_prev, G = G, a * G + G_prev
        B_prev, B = B, a * B + B_prev
        P, Q = P_next, Q_next
        if Q in (1, -1):
            r = G * G - D * B * B
            if r == m:
                found.append((G, B))
            elif r == -m:
                neg = _negative_pell(D)
                if neg is not None:
                    t, s = neg.x, neg.y
                    found.append((G * t + B * s * D, G * s + B * t))
    return found


def _square_discriminant_solutions(a: int, b: int) -> PellSolution | None:
    """Solve a·X² - b·Y² = 1 when a·b = k² by finite divisor factoring.

    Multiplying by a gives (a·X - k·Y)(a·X + k·Y) = a, so a·X and k·Y come
    from the finitely many divisor pairs e·f = a; no fundamental unit
    exists in this degenerate case.
    """
    k = isqrt(a * b)
    best: tuple[int, int] | None = None
    e = 1
    while e * e <= a:
        if a % e == 0:
            f = a // e
            # aX = (e+f)/2, kY = (f-e)/2 with matching parity.
            if (e + f) % 2 == 0:
                u, w = (e + f) // 2, (f - e) // 2
                if u % a == 0 and w % k == 0:
                    x, y = u // a, w // k
                    if x >= 1 and y >= 1:
                        if best is None or (x, y) < best:
                            best = (x, y)
        e += 1
    if best is None:
        return None
    return PellSolution(best[0], best[1], minimal=True)


def _orbit_minimum(
    seed: tuple[int, int], D: int, unit: tuple[int, int], modulus: int
) -> tuple[int, int] | None:
    """Minimal (u, y) with u ≡ 0 (mod modulus), u, y >= 1 in the unit orbit
    of ``seed`` inside the solutions of U² - D·Y² = N (N > 0).

    Within one orbit the positive solutions form a ray along which u and y
    both strictly increase, so the first congruence hit is the orbit
    minimum.  The congruence classes of (u, y) mod ``modulus`` are
    periodic under the unit action (the action matrix is invertible mod
    ``modulus``), so the walk stops as soon as a state repeats.
    """
    t, s = unit
    u, y = seed
    # Normalize to the element with minimal y >= 1 on the positive ray.
    if u < 0 or (u == 0 and y < 0):
        u, y = -u, -y
    while y < 1:
        u, y = u * t + y * s * D, u * s + y * t
    while True:
        u_dn, y_dn = u * t - y * s * D, y * t - u * s
        if y_dn >= 1 and u_dn >= 1:
            u, y = u_dn, y_dn
        else:
            break
    seen: set[tuple[int, int]] = set()
    while (u % modulus, y % modulus) not in seen:
        seen.add((u % modulus, y % modulus))
        if u % modulus == 0:
            return (u, y)
        u, y = u * t + y * s * D, u * s + y * t
    return None


@functools.lru_cache(maxsize=None)
def solve_case_b(n: int, d: int) -> PellSolution | None:
    """Least-x positive solution of (n-1)·X² - d·Y² = 1, else None.

    Multiplies through by a = n-1 to get U² - a·d·Y² = a with U = a·X,
    enumerates solution-class representatives of the generalized equation,
    and walks each class orbit for the least element with U ≡ 0 (mod a).
    """
    if n < 2 or d < 1:
        raise ValueError("need n >= 2 and d >= 1")
    a = n - 1
    square, _ = is_perfect_square(a * d)
    if square:
        return _square_discriminant_solutions(a, d)
    if a == 1:
        sol = fundamental_pell(d)
        return PellSolution(sol.x, sol.y, minimal=True)
    D = a * d
    unit = fundamental_pell(D)
    reps = _pqa_class_representatives(D, a)
    best: tuple[int, int] | None = None
    for rep in reps:
        hit = _orbit_minimum(rep, D, (unit.x, unit.y), a)
        if hit is None:
            continue
        x, y = hit[0] // a, hit[1]
        if best is None or (x, y) < best:
            best = (x, y)
    if best is None:
        return None
    sol = PellSolution(best[0], best[1], minimal=True)
    if not PellProblem.case_b(n, d).is_solution(sol.x, sol.y):
        raise NotASolutionError(
            f"internal error: ({sol.x}, {sol.y}) fails {PellProblem.case_b(n, d)}"
        )
    return sol

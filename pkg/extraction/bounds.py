"""
Upper and lower bound calculators for three-uniform Ramsey numbers.

Large quantities are returned in log2 space; exact rationals are kept when
they stay small enough to be worth printing.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, lgamma, log, log2
from typing import Optional

import numpy as np

from core.errors import InvalidInputError
from game.runner import builder_budget

EXACT_EXPONENT_LIMIT = 4096

# Known two-color graph Ramsey numbers r(s, n), s <= n
KNOWN_RAMSEY = {
    (1, 1): 1, (2, 2): 2,
    (3, 3): 6, (3, 4): 9, (3, 5): 14, (3, 6): 18, (3, 7): 23, (3, 8): 28, (3, 9): 36,
    (4, 4): 18, (4, 5): 25,
}


@dataclass(frozen=True)
class BoundValue:
    log2: float
    exact: Optional[Fraction] = None

    @property
    def ceil(self) -> Optional[int]:
        if self.exact is None:
            return None
        return -((-self.exact.numerator) // self.exact.denominator)


def _check_alpha(alpha) -> Fraction:
    value = Fraction(str(alpha)) if isinstance(alpha, float) else Fraction(alpha)
    if not 0 < value <= Fraction(1, 2):
        raise InvalidInputError(f"alpha must lie in (0, 1/2], got {alpha}")
    return value


def bound_thm21(s: int, n: int, alpha=Fraction(1, 2)) -> BoundValue:
    """
    (v+1) alpha^-r (1-alpha)^(r-m) with (v, r, m) the builder budget for (s-1, n-1).

    Args:
        s: Red set size, at least 3
        n: Blue set size, at least 3
        alpha: Threshold in (0, 1/2]

    Returns:
        BoundValue with the log2 value and, for moderate exponents, the exact rational

    Raises:
        InvalidInputError: If s, n or alpha is out of range
    """
    if s < 3 or n < 3:
        raise InvalidInputError(f"Targets must be at least 3, got ({s}, {n})")
    a = _check_alpha(alpha)
    v, r, m = builder_budget(s - 1, n - 1)
    value_log2 = log2(v + 1) - r * log2(a) + (r - m) * log2(1 - a)
    exact = None
    if m <= EXACT_EXPONENT_LIMIT:
        exact = (v + 1) * (1 / a) ** r * (1 / (1 - a)) ** (m - r)
    return BoundValue(log2=value_log2, exact=exact)


def thm21_log2(s: int, n: int, alpha: float) -> float:
    v, r, m = builder_budget(s - 1, n - 1)
    return log2(v + 1) - r * log2(alpha) + (r - m) * log2(1 - alpha)


def optimal_alpha(s: int, n: int, grid: int = 5000) -> dict:
    """
    Grid minimiser of the extraction bound over alpha in (0, 1/2], refined once.

    Returns:
        The grid minimiser, its log2 bound and the closed choice r/m
    """
    if s < 3 or n < 3:
        raise InvalidInputError(f"Targets must be at least 3, got ({s}, {n})")
    v, r, m = builder_budget(s - 1, n - 1)

    def values(alphas: np.ndarray) -> np.ndarray:
        return np.log2(v + 1) - r * np.log2(alphas) + (r - m) * np.log2(1 - alphas)

    alphas = np.linspace(0.5 / grid, 0.5, grid)
    best = int(np.argmin(values(alphas)))
    step = alphas[1] - alphas[0]
    fine = np.linspace(max(alphas[best] - step, 1e-12), min(alphas[best] + step, 0.5), grid)
    fine_best = int(np.argmin(values(fine)))
    closed = min(r / m, 0.5)
    return {
        "alpha": float(fine[fine_best]),
        "log2_bound": float(values(fine)[fine_best]),
        "alpha_closed": closed,
        "log2_bound_closed": thm21_log2(s, n, closed),
    }


def corollary23_log2_bound(s: int, n: int) -> float:
    """
    Exponent (s-3)/(s-2)! * (s+n)^(s-2) * log2(64n/s).

    Raises:
        InvalidInputError: Unless 4 <= s <= n
    """
    if s < 4 or s > n:
        raise InvalidInputError(f"Need 4 <= s <= n, got ({s}, {n})")
    return (s - 3) / factorial(s - 2) * (s + n) ** (s - 2) * log2(64 * n / s)


@dataclass(frozen=True)
class TowerBound:
    """
    2^2^...^top with ``height`` twos; ``top_exact`` is set when height is 1.
    """

    k: int
    height: int
    top: float
    top_exact: Optional[int] = None

    def describe(self) -> str:
        return "2^" * self.height + f"{self.top:g}"


def ramsey_base(s: int, n: int, base_table: Optional[dict] = None) -> int:
    """Graph Ramsey value from ``base_table`` or the Erdos-Szekeres bound C(s+n-2, s-1)."""
    if s <= 1 or n <= 1:
        return 1
    if base_table is not None:
        key = (min(s, n), max(s, n))
        if key in base_table:
            return base_table[key]
    return comb(s + n - 2, s - 1)


def erdos_rado_recursion_bound(k: int, s: int, n: int, base_table: Optional[dict] = None) -> TowerBound:
    """
    Iterate r_k(s, n) <= 2^C(r_{k-1}(s-1, n-1), k-1) down to graphs.

    Args:
        k: Uniformity, at least 3
        s: Red set size
        n: Blue set size
        base_table: Graph Ramsey values to use where known, else Erdos-Szekeres

    Returns:
        Tower description of the bound
    """
    if k < 3:
        raise InvalidInputError(f"Uniformity must be at least 3, got {k}")
    if k == 3:
        exponent = comb(ramsey_base(s - 1, n - 1, base_table), 2)
        return TowerBound(k=3, height=1, top=float(exponent), top_exact=exponent)
    inner = erdos_rado_recursion_bound(k - 1, s - 1, n - 1, base_table)
    # log2 C(R, k-1) <= (k-1) log2 R - log2 (k-1)!
    if inner.height == 1:
        top = (k - 1) * inner.top - log2(factorial(k - 1))
    else:
        top = inner.top + log2(k - 1)
    return TowerBound(k=k, height=inner.height + 1, top=top)


def thm25_log2log2(k: int) -> float:
    """log2 log2 of (v+1) 2^m, the alpha = 1/2 bound for r_3(k, k)."""
    if k < 3:
        raise InvalidInputError(f"k must be at least 3, got {k}")
    v, _, m = builder_budget(k - 1, k - 1)
    return log2(log2(v + 1) + m)


def random_coloring_expectation(N: int, s: int, n: int, p: Optional[float] = None) -> dict:
    """
    Expected red K_s plus blue K_n count in a p-random coloring of K_N, in log2.

    ``p`` defaults to (s/(n+s))^0.9.
    """
    if p is None:
        p = (s / (n + s)) ** 0.9

    def log2_comb(a: float, b: int) -> float:
        if b > a:
            return float("-inf")
        return (lgamma(a + 1) - lgamma(b + 1) - lgamma(a - b + 1)) / log(2)

    red = log2_comb(N, s) + comb(s, 2) * log2(p)
    blue = log2_comb(N, n) + comb(n, 2) * log2(1 - p)
    total = float(np.logaddexp2(red, blue))
    return {"p": p, "log2_red": red, "log2_blue": blue, "log2_total": total}


def lift_lower_bound_log2(s: int, n: int, r2_lower: Optional[float] = None) -> float:
    """
    log2 of (r(s-1, n/4) - 1)^(n/24).

    Without ``r2_lower`` the random-coloring estimate ((l+s')/s')^(s'/3) with
    s' = s-1 and l = n/4 is used.
    """
    if s < 4 or s > n:
        raise InvalidInputError(f"Need 4 <= s <= n, got ({s}, {n})")
    if r2_lower is None:
        small, ell = s - 1, n / 4
        r2_lower = ((ell + small) / small) ** (small / 3)
    if r2_lower <= 1:
        return float("-inf")
    return n / 24 * log2(r2_lower - 1)


def k43e_log2_bound(n: int) -> float:
    """log2 of (2en)^n."""
    return n * log2(2 * np.e * n)

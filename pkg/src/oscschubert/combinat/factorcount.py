"""Counting real factorizations of a real polynomial's derivative."""

from __future__ import annotations

from collections import Counter

__all__ = ["nu", "predicted_real_counts", "admissible_derivative_root_counts"]


def _bivariate_mul(a: Counter, b: Counter) -> Counter:
    out: Counter = Counter()
    for (i1, j1), c1 in a.items():
        for (i2, j2), c2 in b.items():
            out[(i1 + i2, j1 + j2)] += c1 * c2
    return out


def nu(k: int, n: int, r: int) -> int:
    """Coefficient of ``x^(n-k-1) y^(k-1)`` in ``(x+y)^r (x^2+y^2)^c``, ``c = (n-2-r)/2``.

    This is the number of ways to split a real polynomial of degree n-2
    with r distinct real roots (and c conjugate pairs) into real monic
    factors of degrees n-k-1 and k-1.
    """
    if not 0 <= r <= n - 2 or (n - 2 - r) % 2:
        raise ValueError(f"need 0 <= r <= n-2 with r = n-2 mod 2; got n={n}, r={r}")
    if not 1 <= k <= n - 1:
        raise ValueError(f"need 1 <= k <= n-1, got k={k}, n={n}")
    c = (n - 2 - r) // 2
    poly: Counter = Counter({(0, 0): 1})
    linear = Counter({(1, 0): 1, (0, 1): 1})
    quadratic = Counter({(2, 0): 1, (0, 2): 1})
    for _ in range(r):
        poly = _bivariate_mul(poly, linear)
    for _ in range(c):
        poly = _bivariate_mul(poly, quadratic)
    return poly.get((n - k - 1, k - 1), 0)


def admissible_derivative_root_counts(n: int, r_box: int) -> list[int]:
    """Real-root counts r of f' allowed by Rolle when f has r_box real roots."""
    if not 0 <= r_box <= n - 1 or (n - 1 - r_box) % 2:
        raise ValueError(f"need 0 <= r_box <= n-1 with r_box = n-1 mod 2; got n={n}, r_box={r_box}")
    low = max(r_box - 1, (n - 2) % 2)
    return list(range(low, n - 1, 2))


def predicted_real_counts(k: int, n: int, r_box: int) -> list[int]:
    """Sorted set of real-solution counts possible for osculation type ``r_box``."""
    return sorted({nu(k, n, r) for r in admissible_derivative_root_counts(n, r_box)})

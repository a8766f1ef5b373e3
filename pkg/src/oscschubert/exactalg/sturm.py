"""Exact real-root counting with Sturm sequences."""

from __future__ import annotations

from .unipoly import UniPoly, poly_gcd

__all__ = ["sturm_sequence", "sturm_count_real_roots", "sign_variations", "NotSquarefreeError"]


class NotSquarefreeError(ValueError):
    """Raised when a Sturm count is requested for a polynomial with repeated roots."""


def sturm_sequence(p: UniPoly) -> list[UniPoly]:
    """``p, p', -rem(p, p'), ...`` down to the last nonzero remainder."""
    seq = [p, p.derivative()]
    while seq[-1]:
        r = seq[-2] % seq[-1]
        if not r:
            break
        seq.append(-r)
    if not seq[-1]:
        seq.pop()
    return seq


def sign_variations(signs) -> int:
    nz = [s for s in signs if s]
    return sum(1 for a, b in zip(nz, nz[1:]) if (a > 0) != (b > 0))


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def sturm_count_real_roots(p: UniPoly) -> int:
    """Number of distinct real roots of a squarefree nonzero ``p``.

    Signs at +/- infinity come from leading coefficients and degree parity,
    so no numeric evaluation is involved.
    """
    if p.is_zero():
        raise ValueError("Sturm count of the zero polynomial")
    if p.degree <= 0:
        return 0
    seq = sturm_sequence(p)
    if seq[-1].degree > 0:
        raise NotSquarefreeError(
            f"polynomial has repeated roots (gcd with derivative has degree {seq[-1].degree})"
        )
    at_pos = [_sign(q.leading_coefficient()) for q in seq]
    at_neg = [s if q.degree % 2 == 0 else -s for q, s in zip(seq, at_pos)]
    return sign_variations(at_neg) - sign_variations(at_pos)


def count_real_roots(p: UniPoly) -> int:
    """Distinct real roots of any nonzero polynomial (squarefree part first)."""
    from .unipoly import squarefree_part

    return sturm_count_real_roots(squarefree_part(p))


def is_squarefree(p: UniPoly) -> bool:
    return poly_gcd(p, p.derivative()).degree == 0

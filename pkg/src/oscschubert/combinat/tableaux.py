"""Standard Young tableaux of skew shapes and their sign-imbalance."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from ..errors import ResourceError
from .partitions import SkewShape

__all__ = [
    "Tableau",
    "enumerate_tableaux",
    "tableau_sign",
    "sign_imbalance",
    "gaussian_binomial_at_minus_one",
    "multinomial",
    "DEFAULT_MAX_CELLS",
]

DEFAULT_MAX_CELLS = 12


@dataclass(frozen=True)
class Tableau:
    """A standard filling; ``word[i]`` is the entry of the i-th cell in reading order."""

    shape: SkewShape
    word: tuple[int, ...]

    def __post_init__(self):
        cells = self.shape.cells()
        if len(self.word) != len(cells) or sorted(self.word) != list(range(1, len(cells) + 1)):
            raise ValueError("a standard tableau uses each of 1..N exactly once")
        where = dict(zip(cells, self.word))
        for (r, c), v in where.items():
            right, below = where.get((r, c + 1)), where.get((r + 1, c))
            if (right is not None and right <= v) or (below is not None and below <= v):
                raise ValueError(f"filling {self.word} is not increasing at cell {(r, c)}")

    def entry(self, r: int, c: int) -> int:
        return dict(zip(self.shape.cells(), self.word))[(r, c)]

    def rows(self) -> list[list[int]]:
        out: dict[int, list[int]] = {}
        for (r, _), v in zip(self.shape.cells(), self.word):
            out.setdefault(r, []).append(v)
        return [out.get(r, []) for r in range(len(self.shape.outer))]

    def __str__(self):
        lines = []
        for r, row in enumerate(self.rows()):
            pad = "   " * self.shape.inner.part(r)
            lines.append(pad + "".join(f"{v:>3}" for v in row))
        return "\n".join(lines)


def enumerate_tableaux(shape: SkewShape | str, max_cells: int = DEFAULT_MAX_CELLS) -> list[Tableau]:
    """All standard tableaux of ``shape``; the standard filling comes first."""
    if isinstance(shape, str):
        shape = SkewShape.parse(shape)
    cells = shape.cells()
    if len(cells) > max_cells:
        raise ResourceError(
            f"shape {shape} has {len(cells)} cells, over the budget of {max_cells}",
            cells=len(cells),
            budget=max_cells,
        )
    index = {cell: i for i, cell in enumerate(cells)}
    # a cell may be filled once the cells left of and above it (inside the shape) are
    blockers = []
    for r, c in cells:
        blockers.append([index[x] for x in ((r, c - 1), (r - 1, c)) if x in index])

    word = [0] * len(cells)
    out: list[Tableau] = []

    def place(value: int):
        if value > len(cells):
            out.append(Tableau(shape, tuple(word)))
            return
        for i in range(len(cells)):
            if word[i] == 0 and all(word[j] for j in blockers[i]):
                word[i] = value
                place(value + 1)
                word[i] = 0

    place(1)
    return out


def permutation_sign(word) -> int:
    """Sign of a permutation given in one-line notation (any distinct labels)."""
    order = {v: i for i, v in enumerate(sorted(word))}
    perm = [order[v] for v in word]
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def tableau_sign(t: Tableau) -> int:
    """Sign of the permutation taking the standard filling to ``t``."""
    return permutation_sign(t.word)


def sign_imbalance(shape: SkewShape | str, max_cells: int = DEFAULT_MAX_CELLS) -> int:
    """``|sum of sign(T)|`` over standard tableaux of ``shape``."""
    return abs(sum(tableau_sign(t) for t in enumerate_tableaux(shape, max_cells)))


def gaussian_binomial_at_minus_one(N: int, K: int) -> int:
    """Evaluate the q-binomial ``[N choose K]_q`` at ``q = -1``.

    The q-polynomial is expanded exactly (as the generating function of
    K-subsets of {1..N} by the sum of their elements, shifted) before the
    evaluation.
    """
    if not 0 <= K <= N:
        raise ValueError(f"need 0 <= K <= N, got N={N}, K={K}")
    # coefficients of [N choose K]_q via the recurrence
    #   [N,K] = [N-1,K-1] + q^K [N-1,K]
    table: dict[tuple[int, int], list[int]] = {}

    def coeffs(a: int, b: int) -> list[int]:
        if b == 0 or b == a:
            return [1]
        key = (a, b)
        if key not in table:
            left = coeffs(a - 1, b - 1)
            right = coeffs(a - 1, b)
            out = [0] * max(len(left), len(right) + b)
            for i, c in enumerate(left):
                out[i] += c
            for i, c in enumerate(right):
                out[i + b] += c
            table[key] = out
        return table[key]

    return sum(c * (-1) ** i for i, c in enumerate(coeffs(N, K)))


def multinomial(top: int, *parts: int) -> int:
    """``top! / prod(parts!)`` when the parts sum to ``top``, else 0."""
    if any(p < 0 for p in parts) or sum(parts) != top:
        return 0
    out, rest = 1, top
    for p in parts:
        out *= comb(rest, p)
        rest -= p
    return out


def shuffle_sign_sum(a: int, b: int) -> int:
    """Signed count of shuffles of two increasing words of lengths a and b."""
    total = 0
    for pos in combinations(range(a + b), a):
        inversions = sum(p - i for i, p in enumerate(pos))
        total += (-1) ** inversions
    return total

"""Partitions, skew shapes, and Schubert problem specifications."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Partition",
    "SkewShape",
    "SchubertProblemSpec",
    "complement",
    "hook_complement",
    "is_symmetric",
    "diag_length",
    "parse_problem",
]


class Partition(tuple):
    """Weakly decreasing tuple of positive integers (trailing zeros dropped).

    >>> Partition([2, 1, 0]) == Partition([2, 1])
    True
    >>> str(Partition.parse("3.1.1"))
    '3.1.1'
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts {parts} are not weakly decreasing")
        while parts and parts[-1] == 0:
            parts.pop()
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip()
        if not text or text in ("0", "()", "empty"):
            return cls()
        return cls(int(p) for p in text.split("."))

    @property
    def size(self) -> int:
        return sum(self)

    weight = size

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """0-indexed part, zero beyond the length."""
        return self[i] if 0 <= i < len(self) else 0

    def padded(self, k: int) -> tuple[int, ...]:
        if len(self) > k:
            raise ValueError(f"{self} has more than {k} parts")
        return tuple(self) + (0,) * (k - len(self))

    def transpose(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def fits(self, k: int, n: int) -> bool:
        return len(self) <= k and (not self or self[0] <= n - k)

    def contains(self, other: "Partition") -> bool:
        return len(other) <= len(self) and all(a >= b for a, b in zip(self, other))

    def cells(self) -> list[tuple[int, int]]:
        return [(r, c) for r, p in enumerate(self) for c in range(p)]

    def __str__(self):
        return ".".join(str(p) for p in self) if self else "0"

    def __repr__(self):
        return f"Partition({list(self)})"


def _as_partition(x) -> Partition:
    if isinstance(x, Partition):
        return x
    if isinstance(x, str):
        return Partition.parse(x)
    return Partition(x)


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = Partition()

    def __post_init__(self):
        object.__setattr__(self, "outer", _as_partition(self.outer))
        object.__setattr__(self, "inner", _as_partition(self.inner))
        if not self.outer.contains(self.inner):
            raise ValueError(f"{self.inner} is not contained in {self.outer}")

    @classmethod
    def parse(cls, text: str) -> "SkewShape":
        outer, _, inner = text.partition("/")
        return cls(Partition.parse(outer), Partition.parse(inner or "0"))

    def cells(self) -> list[tuple[int, int]]:
        """Cells in reading order: rows top to bottom, each left to right."""
        return [
            (r, c)
            for r, p in enumerate(self.outer)
            for c in range(self.inner.part(r), p)
        ]

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def __str__(self):
        return f"{self.outer}/{self.inner}" if self.inner else str(self.outer)


def complement(lam, k: int, n: int) -> Partition:
    """The partition filling out the k x (n-k) rectangle with ``lam``."""
    lam = _as_partition(lam)
    if not lam.fits(k, n):
        raise ValueError(f"{lam} does not fit in the {k}x{n - k} rectangle")
    p = lam.padded(k)
    return Partition(n - k - p[k - 1 - i] for i in range(k))


def hook_complement(k: int, n: int) -> Partition:
    """``((n-k-1)^(k-1), 0)``: its complement is the full hook ``(n-k, 1^(k-1))``."""
    if k < 2 or n - k < 2:
        raise ValueError(f"hook family needs 2 <= k and 2 <= n-k, got k={k}, n={n}")
    return Partition([n - k - 1] * (k - 1))


def is_symmetric(lam) -> bool:
    lam = _as_partition(lam)
    return lam == lam.transpose()


def diag_length(lam) -> int:
    lam = _as_partition(lam)
    return sum(1 for i, p in enumerate(lam, start=1) if p >= i)


@dataclass(frozen=True)
class SchubertProblemSpec:
    """A Schubert problem in Gr(k, n): conditions with multiplicities.

    Conditions keep their first-seen order; repeated partitions are merged.
    """

    k: int
    n: int
    conditions: tuple[tuple[Partition, int], ...]

    def __post_init__(self):
        merged: dict[Partition, int] = {}
        for lam, mult in self.conditions:
            lam = _as_partition(lam)
            if mult < 1:
                raise ValueError(f"multiplicity of {lam} must be positive")
            if not lam:
                raise ValueError("the empty partition is not a Schubert condition")
            merged[lam] = merged.get(lam, 0) + int(mult)
        object.__setattr__(self, "conditions", tuple(merged.items()))
        if not 1 <= self.k < self.n:
            raise ValueError(f"need 1 <= k < n, got k={self.k}, n={self.n}")
        for lam, _ in self.conditions:
            if not lam.fits(self.k, self.n):
                raise ValueError(f"{lam} does not fit in the {self.k}x{self.n - self.k} rectangle")
        total = sum(lam.size * m for lam, m in self.conditions)
        if total != self.k * (self.n - self.k):
            raise ValueError(
                f"condition weights sum to {total}, but dim Gr({self.k},{self.n}) = "
                f"{self.k * (self.n - self.k)}"
            )

    @classmethod
    def parse(cls, text: str) -> "SchubertProblemSpec":
        return parse_problem(text)

    @property
    def partitions(self) -> tuple[Partition, ...]:
        return tuple(lam for lam, _ in self.conditions)

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(m for _, m in self.conditions)

    def expanded(self) -> list[Partition]:
        return [lam for lam, m in self.conditions for _ in range(m)]

    def multiplicity(self, lam) -> int:
        return dict(self.conditions).get(_as_partition(lam), 0)

    def transpose(self) -> "SchubertProblemSpec":
        """The dual problem in Gr(n-k, n)."""
        return SchubertProblemSpec(
            self.n - self.k, self.n, tuple((lam.transpose(), m) for lam, m in self.conditions)
        )

    def to_text(self) -> str:
        conds = ", ".join(f"{lam}^{m}" if m > 1 else str(lam) for lam, m in self.conditions)
        return f"GR({self.k},{self.n}): {conds}"

    def __str__(self):
        return self.to_text()


_PROBLEM_RE = re.compile(r"^\s*GR\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*:\s*(.+?)\s*$", re.IGNORECASE)
_COND_RE = re.compile(r"^(\d+(?:\.\d+)*)(?:\^(\d+))?$")


def parse_problem(text: str) -> SchubertProblemSpec:
    """Parse ``GR(k,n): cond(, cond)*`` with ``cond := partition('^'mult)?``."""
    m = _PROBLEM_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse problem {text!r}; expected 'GR(k,n): 2.1^2, 1^3'")
    k, n, body = int(m.group(1)), int(m.group(2)), m.group(3)
    conds = []
    for piece in body.split(","):
        piece = piece.strip()
        cm = _COND_RE.match(piece)
        if not cm:
            raise ValueError(f"bad condition {piece!r} in {text!r}")
        conds.append((Partition.parse(cm.group(1)), int(cm.group(2) or 1)))
    return SchubertProblemSpec(k, n, tuple(conds))


def partitions_in_box(rows: int, width: int, size: int | None = None) -> Iterator[Partition]:
    """All partitions with at most ``rows`` parts, each at most ``width``."""

    def rec(prefix, max_part, remaining_rows):
        if size is None or sum(prefix) == size:
            yield Partition(prefix)
        if remaining_rows == 0:
            return
        for p in range(min(max_part, width), 0, -1):
            if size is not None and sum(prefix) + p > size:
                continue
            yield from rec(prefix + [p], p, remaining_rows - 1)

    yield from rec([], width, rows)


def hook_problem(k: int, n: int) -> SchubertProblemSpec:
    """The factorization family ``(hook complement, 1^(n-1))`` in Gr(k, n)."""
    return SchubertProblemSpec(k, n, ((hook_complement(k, n), 1), (Partition([1]), n - 1)))


def as_partition(x) -> Partition:
    return _as_partition(x)

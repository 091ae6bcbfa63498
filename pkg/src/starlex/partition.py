"""Integer partitions in nondecreasing form, ordered shortlex.

A partition of ``n`` is stored as a nondecreasing tuple of positive parts.
Shortlex compares lengths first and then the first differing part.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import total_ordering
from typing import Iterator, Sequence

__all__ = [
    "Partition",
    "CaseKind",
    "ConsecutiveCase",
    "enumerate_partitions",
    "partitions_of_length",
    "shortlex_cmp",
    "concat",
    "repeat",
    "classify_consecutive",
    "successor_tail_holds",
    "lex_successor",
    "max_of_length",
    "min_of_length",
    "pendant_shape",
]


@total_ordering
@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if not parts:
            raise ValueError("a partition needs at least one part")
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(x > y for x, y in zip(parts, parts[1:])):
            raise ValueError(f"parts must be nondecreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(parts))

    @classmethod
    def from_sequence(cls, seq: Sequence[int]) -> "Partition":
        """Sort and validate an arbitrary sequence; zero parts are dropped."""
        return cls(tuple(sorted(p for p in seq if p != 0)))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        body = text.strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise ValueError(f"expected '[p1,p2,...]', got {text!r}")
        inner = body[1:-1].strip()
        if not inner:
            raise ValueError("empty partition")
        return cls(tuple(int(tok) for tok in inner.split(",")))

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __lt__(self, other: "Partition") -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return shortlex_cmp(self, other) < 0

    def __str__(self) -> str:
        return "[" + ",".join(str(p) for p in self.parts) + "]"


def shortlex_cmp(a: Partition, b: Partition) -> int:
    """Return -1, 0 or 1 as ``a`` precedes, equals or follows ``b``."""
    if len(a) != len(b):
        return -1 if len(a) < len(b) else 1
    for x, y in zip(a.parts, b.parts):
        if x != y:
            return -1 if x < y else 1
    return 0


def _nondecreasing(total: int, k: int, lo: int) -> Iterator[tuple[int, ...]]:
    if k == 1:
        if total >= lo:
            yield (total,)
        return
    for first in range(lo, total // k + 1):
        for rest in _nondecreasing(total - first, k - 1, first):
            yield (first,) + rest


def partitions_of_length(n: int, k: int) -> list[Partition]:
    """P(n, k) in lexicographic order."""
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    return [Partition(p) for p in _nondecreasing(n, k, 1)]


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of ``n``, strictly increasing in shortlex order."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    out: list[Partition] = []
    for k in range(1, n + 1):
        out.extend(partitions_of_length(n, k))
    return out


def concat(a: Sequence[int], b: Sequence[int]) -> list[int]:
    return list(a) + list(b)


def repeat(a: Sequence[int], n: int) -> list[int]:
    if n < 0:
        raise ValueError("repeat count must be nonnegative")
    return list(a) * n


def max_of_length(n: int, k: int) -> Partition:
    """Shortlex maximum of P(n, k): the most balanced partition."""
    q, r = divmod(n, k)
    return Partition((q,) * (k - r) + (q + 1,) * r)


def min_of_length(n: int, k: int) -> Partition:
    return Partition((1,) * (k - 1) + (n - k + 1,))


def _case_one_tail(a: Sequence[int], i: int) -> int:
    """Last part of the Case I successor built at pivot ``i`` (1-based)."""
    k = len(a)
    ai = a[i - 1]
    return a[k - 1] + sum(a[j - 1] - ai - 1 for j in range(i, k))


def lex_successor(a: Partition) -> tuple[Partition, int] | None:
    """Next partition of the same length and its pivot, or None at the top."""
    k = len(a)
    for i in range(k - 1, 0, -1):
        tail = _case_one_tail(a.parts, i)
        if tail >= a[i - 1] + 1:
            parts = a.parts[: i - 1] + (a[i - 1] + 1,) * (k - i) + (tail,)
            return Partition(parts), i
    return None


class CaseKind(enum.Enum):
    CASE_I = "CaseI"
    CASE_II = "CaseII"
    NOT_CONSECUTIVE = "NotConsecutive"


@dataclass(frozen=True)
class ConsecutiveCase:
    kind: CaseKind
    pivot: int | None = None

    def __str__(self) -> str:
        if self.kind is CaseKind.CASE_I:
            return f"CaseI(i={self.pivot})"
        return self.kind.value


NOT_CONSECUTIVE = ConsecutiveCase(CaseKind.NOT_CONSECUTIVE)


def classify_consecutive(a: Partition, b: Partition) -> ConsecutiveCase:
    """Recognise ``b`` as the shortlex successor of ``a`` and name the case.

    Case I requires the pivot to be the first differing index, the tail to
    match the closed form, and no later pivot to admit a valid successor.
    """
    if a.n != b.n:
        raise ValueError(f"partitions of different integers: {a} and {b}")
    n, k = a.n, len(a)
    if len(b) == k:
        i = next((j + 1 for j in range(k) if a[j] != b[j]), None)
        if i is None or i > k - 1:
            return NOT_CONSECUTIVE
        if any(b[j - 1] != a[i - 1] + 1 for j in range(i, k)):
            return NOT_CONSECUTIVE
        if b[k - 1] != _case_one_tail(a.parts, i):
            return NOT_CONSECUTIVE
        later = any(
            _case_one_tail(a.parts, j) >= a[j - 1] + 1 for j in range(i + 1, k)
        )
        return NOT_CONSECUTIVE if later else ConsecutiveCase(CaseKind.CASE_I, i)
    if len(b) == k + 1 and n > k:
        if a == max_of_length(n, k) and b.parts == (1,) * k + (n - k,):
            return ConsecutiveCase(CaseKind.CASE_II)
    return NOT_CONSECUTIVE


def successor_tail_holds(a: Partition, b: Partition, i: int) -> bool:
    case = classify_consecutive(a, b)
    if case != ConsecutiveCase(CaseKind.CASE_I, i):
        raise ValueError(f"{a} -> {b} is not a Case I pair with pivot {i} ({case})")
    k = len(a)
    return b[k - 1] + 1 >= a[k - 1]


def pendant_shape(p: Partition) -> tuple[int, int, int] | None:
    """Write ``p`` as the multiset [a]*s + [b] (b = 0 for none).

    Returns ``(a, b, s)`` with ``a`` the part of highest multiplicity (ties
    broken toward the larger value), or None when no such form exists.
    """
    counts: dict[int, int] = {}
    for x in p.parts:
        counts[x] = counts.get(x, 0) + 1
    if len(counts) == 1:
        (a, s), = counts.items()
        return a, 0, s
    if len(counts) != 2:
        return None
    (x, cx), (y, cy) = sorted(counts.items(), key=lambda kv: (kv[1], kv[0]))
    # x has the lower multiplicity (or the smaller value on a tie)
    if cx != 1:
        return None
    return y, x, cy

"""Partitions with a fixed declared length.

A partition here is always zero-padded to the length it was declared with,
so ``Partition((2, 1, 0))`` and ``Partition((2, 1))`` are different values.
Comparisons between partitions of different lengths are errors.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator, Sequence


@dataclass(frozen=True, order=False)
class Partition:
    """Weakly decreasing tuple of nonnegative integers of fixed length."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        for p in parts:
            if isinstance(p, bool) or not isinstance(p, int):
                raise TypeError(f"partition entries must be integers, got {p!r}")
            if p < 0:
                raise ValueError(f"partition entries must be nonnegative: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition entries must be weakly decreasing: {parts}")

    @classmethod
    def of(cls, parts: Iterable[int], length: int | None = None) -> "Partition":
        """Build a partition, zero-padding (or trimming zeros) to ``length``."""
        parts = tuple(parts)
        if length is None:
            return cls(parts)
        if length < len(parts):
            if any(parts[length:]):
                raise ValueError(f"{parts} has more than {length} nonzero parts")
            parts = parts[:length]
        return cls(parts + (0,) * (length - len(parts)))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"

    @property
    def length(self) -> int:
        return len(self.parts)

    def stripped(self) -> tuple[int, ...]:
        """The nonzero parts only."""
        return tuple(p for p in self.parts if p)

    def padded(self, length: int) -> "Partition":
        return Partition.of(self.parts, length)

    def fits_box(self, rows: int, cols: int) -> bool:
        return len(self.stripped()) <= rows and all(p <= cols for p in self.parts)

    def to_json(self) -> list[int]:
        return list(self.parts)


def conjugate(p: Partition) -> Partition:
    """Transpose of the Young diagram, declared with length ``p[0]``."""
    width = p.parts[0] if p.parts else 0
    return Partition(tuple(sum(1 for a in p.parts if a >= j) for j in range(1, width + 1)))


def weight(p: Partition) -> int:
    return sum(p.parts)


def lex_compare(p: Partition, q: Partition) -> int:
    """Return -1, 0 or 1 as ``p`` is lexicographically less, equal or greater."""
    if len(p) != len(q):
        raise ValueError(f"cannot compare partitions of lengths {len(p)} and {len(q)}")
    for a, b in zip(p.parts, q.parts):
        if a != b:
            return 1 if a > b else -1
    return 0


def enumerate_box(k: int, b: int) -> list[Partition]:
    """All partitions with at most ``k`` parts, each at most ``b``.

    Each result has length ``k``; the list is in strictly decreasing
    lexicographic order and has ``comb(k + b, k)`` entries.
    """
    if k < 1:
        raise ValueError(f"box height must be positive, got {k}")
    if b < 0:
        raise ValueError(f"box width must be nonnegative, got {b}")

    out: list[Partition] = []

    def rec(prefix: list[int], cap: int):
        if len(prefix) == k:
            out.append(Partition(tuple(prefix)))
            return
        for a in range(cap, -1, -1):
            prefix.append(a)
            rec(prefix, a)
            prefix.pop()

    rec([], b)
    assert len(out) == comb(k + b, k)
    return out


def partitions_of(m: int, max_parts: int | None = None, max_part: int | None = None) -> list[tuple[int, ...]]:
    """Partitions of ``m`` as bare tuples (no zeros), decreasing lex order."""
    out: list[tuple[int, ...]] = []
    cap0 = m if max_part is None else min(m, max_part)

    def rec(rest: int, cap: int, prefix: tuple[int, ...]):
        if rest == 0:
            out.append(prefix)
            return
        if max_parts is not None and len(prefix) == max_parts:
            return
        for a in range(min(rest, cap), 0, -1):
            rec(rest - a, a, prefix + (a,))

    rec(m, cap0, ())
    return out


def parse_partition(text: str, length: int | None = None) -> Partition:
    """Parse ``"2,1,0"`` (an empty string is the empty partition)."""
    text = text.strip()
    if text in ("", "()", "[]"):
        entries: Sequence[int] = ()
    else:
        try:
            entries = [int(t) for t in text.strip("()[]").split(",")]
        except ValueError:
            raise ValueError(f"malformed partition {text!r}") from None
    return Partition.of(entries, length)

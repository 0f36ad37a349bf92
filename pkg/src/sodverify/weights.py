"""Dominant integral weights of GL(k) and their dimensions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .partitions import Partition


@dataclass(frozen=True)
class GLWeight:
    """Weakly decreasing integer vector; the rank is its length.

    Entries may be negative: ``GLWeight((0, -1))`` indexes the dual of the
    standard representation of GL(2).
    """

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        for e in entries:
            if isinstance(e, bool) or not isinstance(e, int):
                raise TypeError(f"weight entries must be integers, got {e!r}")
        if any(entries[i] < entries[i + 1] for i in range(len(entries) - 1)):
            raise ValueError(f"weight entries must be weakly decreasing: {entries}")

    @classmethod
    def zero(cls, rank: int) -> "GLWeight":
        return cls((0,) * rank)

    @classmethod
    def from_partition(cls, p: Partition) -> "GLWeight":
        return cls(p.parts)

    @property
    def rank(self) -> int:
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.entries)) + ")"

    def is_zero(self) -> bool:
        return not any(self.entries)

    def to_json(self) -> list[int]:
        return list(self.entries)


def dual(w: GLWeight) -> GLWeight:
    return GLWeight(tuple(-e for e in reversed(w.entries)))


def det_shift(w: GLWeight, c: int) -> GLWeight:
    """Tensor with the ``c``-th power of the determinant."""
    return GLWeight(tuple(e + c for e in w.entries))


def dim(w: GLWeight | Partition | Iterable[int]) -> int:
    """Exact Weyl dimension of the irreducible GL(rank) module of highest weight ``w``."""
    entries = tuple(w.entries if isinstance(w, GLWeight) else w)
    r = len(entries)
    num = 1
    den = 1
    for i in range(r):
        for j in range(i + 1, r):
            num *= entries[i] - entries[j] + j - i
            den *= j - i
    q, rem = divmod(num, den)
    if rem or q <= 0:
        raise ValueError(f"{entries} is not a dominant weight")
    return q


def parse_weight(text: str) -> GLWeight:
    text = text.strip().strip("()[]")
    if not text:
        return GLWeight(())
    try:
        return GLWeight(tuple(int(t) for t in text.split(",")))
    except ValueError as exc:
        raise ValueError(f"malformed weight {text!r}: {exc}") from None

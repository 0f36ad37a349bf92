"""Littlewood-Richardson coefficients and GL(k) tensor decompositions.

LR tableaux are enumerated letter by letter: the boxes holding letter ``i``
form a horizontal strip added to the shape built so far, subject to the
lattice-word condition against letter ``i - 1``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from .partitions import Partition
from .weights import GLWeight, dim, dual


def _strips(
    shape: tuple[int, ...],
    size: int,
    prev_cum: tuple[int, ...] | None,
    bound: tuple[int, ...] | None,
) -> Iterator[tuple[int, ...]]:
    """Horizontal strips of ``size`` boxes on ``shape`` obeying the lattice rule.

    ``shape`` is padded with enough zero rows to hold any strip.  ``prev_cum[r]``
    is the number of the previous letter in rows ``0..r``; ``None`` for the
    first letter.  Yields the per-row box counts.
    """
    rows = len(shape)
    counts = [0] * rows

    def rec(r: int, left: int, placed: int):
        if left == 0:
            yield tuple(counts)
            return
        if r == rows:
            return
        room = left
        if r > 0:
            room = min(room, shape[r - 1] - shape[r])
        if bound is not None:
            room = min(room, (bound[r] if r < len(bound) else 0) - shape[r])
        if prev_cum is not None:
            # letters through row r may not outnumber the previous letter in rows above
            room = min(room, (prev_cum[r - 1] if r > 0 else 0) - placed)
        for x in range(max(room, -1), -1, -1):
            counts[r] = x
            yield from rec(r + 1, left - x, placed + x)
        counts[r] = 0

    yield from rec(0, size, 0)


def _lr_shapes(
    a: tuple[int, ...],
    b: tuple[int, ...],
    max_rows: int | None = None,
    bound: tuple[int, ...] | None = None,
) -> Counter:
    """Outer shapes of all LR tableaux of content ``b`` on inner shape ``a``.

    Shapes are returned as tuples without trailing zeros, counted with
    multiplicity.  Shapes with more than ``max_rows`` rows are never built.
    """
    a = tuple(p for p in a if p)
    b = tuple(p for p in b if p)
    rows = len(a) + len(b)
    if max_rows is not None:
        rows = min(rows, max_rows)
    if len(a) > rows:
        return Counter()
    start = a + (0,) * (rows - len(a))
    result: Counter = Counter()

    def rec(shape: tuple[int, ...], i: int, prev_cum):
        if i == len(b):
            result[tuple(p for p in shape if p)] += 1
            return
        for strip in _strips(shape, b[i], prev_cum, bound):
            new = tuple(s + x for s, x in zip(shape, strip))
            cum = []
            total = 0
            for x in strip:
                total += x
                cum.append(total)
            rec(new, i + 1, tuple(cum))

    rec(start, 0, None)
    return result


@lru_cache(maxsize=None)
def _expand_cached(a, b, max_rows):
    return tuple(_lr_shapes(a, b, max_rows).items())


def lr_expand(a, b, max_rows: int | None = None) -> dict[tuple[int, ...], int]:
    """``s_a * s_b`` as ``{c: c^c_{a,b}}``, keeping only ``c`` with at most ``max_rows`` rows."""
    return dict(_expand_cached(tuple(a), tuple(b), max_rows))


def lr_coefficient(a: Partition, b: Partition, c: Partition) -> int:
    """Number of LR tableaux of shape ``c/a`` and content ``b``."""
    if sum(a) + sum(b) != sum(c):
        return 0
    ca, cc = a.stripped(), c.stripped()
    if len(ca) > len(cc) or any(x > y for x, y in zip(ca, cc)):
        return 0
    shapes = _lr_shapes(ca, b.stripped(), max_rows=len(cc), bound=cc)
    return shapes.get(cc, 0)


@dataclass
class WeightMultiset:
    """Multiset of GL(rank) weights, i.e. a decomposition into irreducibles."""

    rank: int
    entries: dict[GLWeight, int] = field(default_factory=dict)

    def __post_init__(self):
        for w, m in self.entries.items():
            if w.rank != self.rank:
                raise ValueError(f"weight {w} does not have rank {self.rank}")
            if m < 1:
                raise ValueError(f"multiplicity of {w} must be positive, got {m}")

    def __getitem__(self, w: GLWeight) -> int:
        return self.entries.get(w, 0)

    def __contains__(self, w) -> bool:
        return w in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    def items(self) -> list[tuple[GLWeight, int]]:
        """Entries sorted by decreasing lex weight."""
        return sorted(self.entries.items(), key=lambda wm: wm[0].entries, reverse=True)

    def total_dimension(self) -> int:
        return sum(m * dim(w) for w, m in self.entries.items())

    def as_dict(self) -> dict[tuple[int, ...], int]:
        return {w.entries: m for w, m in self.entries.items()}

    def to_json(self) -> list[dict]:
        return [{"weight": w.to_json(), "mult": m} for w, m in self.items()]


@lru_cache(maxsize=None)
def _tensor_cached(u: tuple[int, ...], v: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], int], ...]:
    k = len(u)
    su = -min(u) if u else 0
    sv = -min(v) if v else 0
    pu = tuple(x + su for x in u)
    pv = tuple(x + sv for x in v)
    out = []
    for c, m in _expand_cached(pu, pv, k):
        padded = c + (0,) * (k - len(c))
        out.append((tuple(x - su - sv for x in padded), m))
    return tuple(out)


def tensor_decompose(u: GLWeight, v: GLWeight) -> WeightMultiset:
    """Decompose ``S^u (x) S^v`` into irreducible GL(k) modules."""
    if u.rank != v.rank:
        raise ValueError(f"rank mismatch: {u.rank} vs {v.rank}")
    pairs = _tensor_cached(u.entries, v.entries)
    return WeightMultiset(u.rank, {GLWeight(w): m for w, m in pairs})


def hom_decompose(alpha: Partition, alpha_prime: Partition, k: int) -> WeightMultiset:
    """Irreducible summands of ``Hom(S^alpha R, S^alpha' R)`` for R of rank ``k``."""
    a = _fit(alpha, k)
    ap = _fit(alpha_prime, k)
    return tensor_decompose(dual(GLWeight.from_partition(a)), GLWeight.from_partition(ap))


def _fit(p: Partition, k: int) -> Partition:
    try:
        return p.padded(k)
    except ValueError:
        raise ValueError(f"partition {p} does not fit rank {k}") from None


"""Block tuples for partial flag varieties Fl(k_1, ..., k_m; n).

The flag variety is an iterated relative grassmannian: level i is a
Gr(k_i, k_{i+1}) bundle (with k_{m+1} = n), so level i contributes a
partition alpha(i) of length k_i with parts at most k_{i+1} - k_i, and
semiorthogonality is checked one level at a time.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import comb, prod
from typing import Sequence

from .decomposition import SemiorthReport, verify_semiorthogonality
from .koszul import twist_class
from .partitions import Partition, enumerate_box


@dataclass(frozen=True)
class FlagBlock:
    alphas: tuple[Partition, ...]
    position: int
    twist: int

    def concatenated(self) -> tuple[int, ...]:
        return tuple(x for a in self.alphas for x in a.parts)

    def to_json(self) -> dict:
        return {
            "alphas": [a.to_json() for a in self.alphas],
            "position": self.position,
            "twist": self.twist,
        }


def _check_flag(ks: Sequence[int], n: int) -> list[int]:
    ks = list(ks)
    if not ks:
        raise ValueError("need at least one k")
    if ks[0] < 1:
        raise ValueError(f"k_1 must be at least 1, got {ks[0]}")
    if any(a >= b for a, b in zip(ks, ks[1:])):
        raise ValueError(f"ks must be strictly increasing, got {ks}")
    if ks[-1] >= n:
        raise ValueError(f"k_m must be less than n, got k_m={ks[-1]}, n={n}")
    return ks


def _levels(ks: list[int], n: int) -> list[tuple[int, int]]:
    """Relative grassmannian parameters ``(k_i, k_{i+1})`` per level."""
    return list(zip(ks, ks[1:] + [n]))


def flag_blocks(ks: Sequence[int], n: int, period: int | None = None) -> list[FlagBlock]:
    ks = _check_flag(ks, n)
    boxes = [enumerate_box(k, top - k) for k, top in _levels(ks, n)]
    tuples = sorted(product(*boxes), key=lambda t: tuple(x for a in t for x in a.parts), reverse=True)
    out = []
    for i, alphas in enumerate(tuples):
        total = sum(twist_class(a) for a in alphas)
        out.append(FlagBlock(tuple(alphas), i, total % period if period else total))
    return out


@dataclass(frozen=True)
class FlagRankAudit:
    count: int
    expected: int

    @property
    def equal(self) -> bool:
        return self.count == self.expected

    def to_json(self) -> dict:
        return {"count": self.count, "expected": self.expected, "equal": self.equal}


def flag_rank_audit(ks: Sequence[int], n: int) -> FlagRankAudit:
    ks = _check_flag(ks, n)
    expected = prod(comb(top, k) for k, top in _levels(ks, n))
    return FlagRankAudit(len(flag_blocks(ks, n)), expected)


def relative_semiorth_check(ks: Sequence[int], n: int, level: int, order: str = "desc") -> SemiorthReport:
    """Semiorthogonality of the level-``level`` factor (1-based), a relative Gr(k_i, k_{i+1})."""
    ks = _check_flag(ks, n)
    if not 1 <= level <= len(ks):
        raise ValueError(f"level must be in 1..{len(ks)}, got {level}")
    k, top = _levels(ks, n)[level - 1]
    return verify_semiorthogonality(k, top, order=order)


@dataclass
class FlagReport:
    ks: list[int]
    n: int
    blocks: list[FlagBlock]
    levels: list[SemiorthReport] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.levels)

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json(self) -> dict:
        return {
            "ks": list(self.ks),
            "n": self.n,
            "blocks": [b.to_json() for b in self.blocks],
            "levels": [r.to_json() for r in self.levels],
            "verdict": self.verdict,
        }


def verify_flag(ks: Sequence[int], n: int, order: str = "desc", period: int | None = None) -> FlagReport:
    """Flag verdict: the conjunction of the level-wise relative checks."""
    ks = _check_flag(ks, n)
    report = FlagReport(ks, n, flag_blocks(ks, n, period))
    for level in range(1, len(ks) + 1):
        report.levels.append(relative_semiorth_check(ks, n, level, order))
    return report

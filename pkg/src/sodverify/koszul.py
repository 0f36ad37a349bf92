"""Graded terms of the Koszul resolution of the diagonal on Gr(k, n).

The m-th term decomposes into pairs ``(alpha, alpha*)`` with ``|alpha| = m``,
alpha in the k x (n-k) box.  Each pair carries the twist index ``m``: the
corresponding twisted sheaves are modules over the m-th tensor power of the
Azumaya algebra, which is all the verifier needs to know about them.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .partitions import Partition, conjugate, enumerate_box, partitions_of, weight
from .weights import dim


@dataclass(frozen=True)
class KoszulTerm:
    m: int
    pairs: tuple[tuple[Partition, Partition], ...]
    twist: int

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "twist": self.twist,
            "pairs": [{"alpha": a.to_json(), "conj": c.to_json()} for a, c in self.pairs],
        }


def twist_class(alpha: Partition, period: int | None = None) -> int:
    """``|alpha|``, reduced modulo the period of the Brauer class if one is given."""
    if period is not None and period < 1:
        raise ValueError(f"period must be positive, got {period}")
    t = weight(alpha)
    return t % period if period else t


def koszul_terms(k: int, n: int, period: int | None = None) -> list[KoszulTerm]:
    """Terms ``m = 0 .. k(n-k)``; conjugates are padded to length ``n - k``."""
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got k={k}, n={n}")
    by_weight: dict[int, list[tuple[Partition, Partition]]] = {m: [] for m in range(k * (n - k) + 1)}
    for alpha in enumerate_box(k, n - k):
        by_weight[weight(alpha)].append((alpha, conjugate(alpha).padded(n - k)))
    return [
        KoszulTerm(m, tuple(pairs), m % period if period else m)
        for m, pairs in sorted(by_weight.items())
    ]


@dataclass(frozen=True)
class CauchyCheck:
    lhs: int
    rhs: int

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs

    def to_json(self) -> dict:
        return {"lhs": self.lhs, "rhs": self.rhs, "equal": self.equal}


def cauchy_dimension_check(dim_v: int, dim_w: int, m: int) -> CauchyCheck:
    """Compare ``dim Lambda^m(V (x) W)`` with the Schur-pair sum over ``|alpha| = m``."""
    if dim_v < 1 or dim_w < 1 or m < 0:
        raise ValueError(f"need positive dimensions and m >= 0, got {dim_v}, {dim_w}, {m}")
    lhs = comb(dim_v * dim_w, m)
    rhs = 0
    for alpha in partitions_of(m, max_parts=dim_v, max_part=dim_w):
        a = Partition.of(alpha, dim_v)
        rhs += dim(a) * dim(conjugate(a).padded(dim_w))
    return CauchyCheck(lhs, rhs)

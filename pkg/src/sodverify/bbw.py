"""Borel-Bott-Weil for irreducible homogeneous bundles on Gr(k, n).

A bundle ``S^delta T (x) S^gamma R`` (T the rank n-k quotient, R the rank k
subbundle of the tautological sequence) is encoded by the length-n vector
``delta | gamma``, quotient slot first.  With this convention ``R = O(-1)``
on P^1 and ``H^0(R^*)`` on Gr(2, 4) is the four-dimensional dual standard
representation.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .lr import hom_decompose
from .partitions import Partition
from .weights import GLWeight, dim


@dataclass(frozen=True)
class HomogeneousBundleWeight:
    delta: GLWeight  # quotient slot, rank n - k
    gamma: GLWeight  # subbundle slot, rank k
    n: int | None = None

    def __post_init__(self):
        total = self.delta.rank + self.gamma.rank
        if self.n is None:
            object.__setattr__(self, "n", total)
        elif self.n != total:
            raise ValueError(
                f"slot ranks {self.delta.rank} + {self.gamma.rank} do not add up to n = {self.n}"
            )
        if self.gamma.rank < 1:
            raise ValueError("subbundle slot must have positive rank")

    @property
    def k(self) -> int:
        return self.gamma.rank


@dataclass(frozen=True)
class CohomologyResult:
    """Either acyclic (``degree is None``) or a single group in one degree."""

    degree: int | None = None
    weight: GLWeight | None = None

    @property
    def is_acyclic(self) -> bool:
        return self.degree is None

    @property
    def dimension(self) -> int | None:
        return None if self.weight is None else dim(self.weight)

    def __str__(self) -> str:
        if self.is_acyclic:
            return "acyclic"
        return f"H^{self.degree} = S^{self.weight} E (dim {self.dimension})"


ACYCLIC = CohomologyResult()


def bbw(w: HomogeneousBundleWeight) -> CohomologyResult:
    n = w.n
    rho = range(n - 1, -1, -1)
    v = [a + r for a, r in zip(w.delta.entries + w.gamma.entries, rho)]
    if len(set(v)) < n:
        return ACYCLIC
    inversions = sum(1 for i in range(n) for j in range(i + 1, n) if v[i] < v[j])
    v.sort(reverse=True)
    out = GLWeight(tuple(a - r for a, r in zip(v, rho)))
    return CohomologyResult(inversions, out)


def bbw_subbundle(gamma: GLWeight, n: int) -> CohomologyResult:
    """Cohomology of ``S^gamma R`` alone on Gr(rank gamma, n)."""
    return bbw(HomogeneousBundleWeight(GLWeight.zero(n - gamma.rank), gamma, n))


@dataclass(frozen=True)
class PushforwardSummand:
    beta: GLWeight
    mult: int
    result: CohomologyResult

    def to_json(self) -> dict:
        return {
            "beta": self.beta.to_json(),
            "mult": self.mult,
            "degree": self.result.degree,
            "dim": self.result.dimension,
        }


@dataclass(frozen=True)
class PushforwardReport:
    alpha: Partition
    alpha_prime: Partition
    summands: tuple[PushforwardSummand, ...]

    @property
    def is_acyclic(self) -> bool:
        return all(s.result.is_acyclic for s in self.summands)

    def nonzero(self) -> list[PushforwardSummand]:
        return [s for s in self.summands if not s.result.is_acyclic]

    def to_json(self) -> dict:
        return {
            "alpha": self.alpha.to_json(),
            "alpha_prime": self.alpha_prime.to_json(),
            "acyclic": self.is_acyclic,
            "summands": [s.to_json() for s in self.summands],
        }


def pushforward_hom(alpha: Partition, alpha_prime: Partition, k: int, n: int) -> PushforwardReport:
    """Pushforward of ``Hom(S^alpha R, S^alpha' R)`` from Gr(k, n) to the base."""
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got k={k}, n={n}")
    for p in (alpha, alpha_prime):
        if not p.fits_box(k, n - k):
            raise ValueError(f"partition {p} does not fit the {k} x {n - k} box")
    alpha, alpha_prime = alpha.padded(k), alpha_prime.padded(k)
    summands = tuple(
        PushforwardSummand(beta, m, bbw_subbundle(beta, n))
        for beta, m in hom_decompose(alpha, alpha_prime, k).items()
    )
    return PushforwardReport(alpha, alpha_prime, summands)


def line_bundle_oracle(d: int, m: int) -> list[int]:
    """``[h^0, ..., h^m]`` of ``O(d)`` on P^m."""
    if m < 1:
        raise ValueError(f"projective dimension must be positive, got {m}")
    table = [0] * (m + 1)
    if d >= 0:
        table[0] = comb(d + m, m)
    if d <= -m - 1:
        table[m] = comb(-d - 1, m)
    return table

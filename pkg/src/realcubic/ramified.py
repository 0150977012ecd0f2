"""Ramified connected sums, cusp local models, and handle counts.

Double branched covers enter the classification only through a handful of
computable facts: an Euler-characteristic formula for perturbations, the
(p, q) local model of a cusp and its facet indices, the index shift from
branch locus to double cover, the unknotted-handle rule, and the binomial
handle counts of the higher-dimensional spiral construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .topology import RealLocusDescriptor


@dataclass(frozen=True)
class PerturbationData:
    chi_P: int
    chi_P_plus: int
    chi_L: int


def euler_perturbation(d: PerturbationData) -> int:
    """chi of the perturbed double cover: chi(P) + 2 chi(P+) - chi(L).

    Both perturbation orders of the defining polynomial give one deformation
    type (quasi-homogeneous rescaling), so the formula needs no orientation
    choice.
    """
    return d.chi_P + 2 * d.chi_P_plus - d.chi_L


@dataclass(frozen=True)
class CuspLocalModel:
    p: int
    q: int

    @property
    def facet_plus_index(self) -> int:  # facet c > 0
        return self.q

    @property
    def facet_minus_index(self) -> int:  # facet c < 0
        return self.p

    @property
    def handle(self) -> tuple[int, int]:
        return (self.p, self.q)

    # the coorientation points into the thinner region of the discriminant
    coorientation: str = "into thinner region"


def cusp_local_model(p: int, q: int) -> CuspLocalModel:
    if p < 0 or q < 0:
        raise ValueError("p and q must be nonnegative")
    return CuspLocalModel(p, q)


def lift_morse_index(q: int) -> int:
    """Index shift from the branch locus to the double cover."""
    if q < 0:
        raise ValueError("Morse index must be nonnegative")
    return q + 1


def add_unknotted_handle(d: RealLocusDescriptor, p: int, q: int
                         ) -> RealLocusDescriptor:
    """Connected sum with an unknotted S^p x S^q: costs an extra S^1 x S^(n-1)."""
    n = d.dimension
    if p + q != n:
        raise ValueError(f"handle ({p}, {q}) does not fit dimension {n}")
    return d.with_handle(1, n - 1).with_handle(p, q)


def handle_counts(n: int, k: int) -> int:
    """Number of index-k handles in the n-dimensional spiral construction."""
    if not 0 <= k < (n + 1) / 2:
        raise ValueError(f"index k = {k} out of range for dimension {n}")
    return comb(n + 1, k)


def nodal_parameter(n: int, k: int) -> int:
    """The parameter value t = (n + 1 - 2k)^2 at which the k-handles appear."""
    if not 0 <= k < (n + 1) / 2:
        raise ValueError(f"index k = {k} out of range for dimension {n}")
    return (n + 1 - 2 * k) ** 2

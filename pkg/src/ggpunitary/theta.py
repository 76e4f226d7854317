"""Unipotent theta correspondence for the dual pair (U_n, U_n').

On unipotent labels the Weil representation of U_n x U_n' contains
``pi_lam (x) pi_mu`` exactly once when the transposes of ``lam`` and ``mu``
are 2-transverse, and not at all otherwise.  The members of a lift are found
by scanning every partition of the target rank.
"""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import Partition, is_2_transverse, partitions_of, transpose

__all__ = ["ThetaSet", "theta_set", "theta_multiplicity", "alvis_curtis_dual"]


@dataclass(frozen=True)
class ThetaSet:
    source: Partition
    target_size: int
    members: tuple[Partition, ...]

    def __contains__(self, mu) -> bool:
        return mu in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


def theta_set(lam: Partition, target: int) -> ThetaSet:
    """The unipotent constituents of the big theta lift of ``pi_lam`` to U_target."""
    if target < 0:
        raise ValueError("target rank must be non-negative")
    lam = Partition(lam)
    lam_t = transpose(lam)
    members = tuple(mu for mu in partitions_of(target) if is_2_transverse(lam_t, transpose(mu)))
    return ThetaSet(lam, target, members)


def theta_multiplicity(lam: Partition, mu: Partition) -> int:
    return int(is_2_transverse(transpose(Partition(lam)), transpose(Partition(mu))))


def alvis_curtis_dual(lam: Partition) -> Partition:
    """Label of the (sign-normalised) Alvis-Curtis dual of ``pi_lam``."""
    return transpose(Partition(lam))

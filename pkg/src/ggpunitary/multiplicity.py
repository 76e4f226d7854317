"""Gan-Gross-Prasad multiplicities for unipotent representations of U_n(F_q)."""

from __future__ import annotations

import enum
import warnings

from .partitions import Partition, is_2_transverse, partitions_of, transpose
from .theta import theta_set

__all__ = [
    "GgpModel",
    "SmallFieldWarning",
    "ggp_model",
    "unipotent_multiplicity",
    "ggp_partners",
    "duality_diagram_check",
    "extended_multiplicity",
    "check_field_size",
]


class GgpModel(enum.Enum):
    BESSEL = "bessel"
    FOURIER_JACOBI = "fourier-jacobi"


class SmallFieldWarning(UserWarning):
    """q is below the range where the large-q hypothesis is comfortably met."""


def ggp_model(n: int, m: int) -> GgpModel:
    if n < m:
        raise ValueError("first group must be the larger")
    if m < 0:
        raise ValueError("group ranks must be non-negative")
    return GgpModel.BESSEL if (n - m) % 2 else GgpModel.FOURIER_JACOBI


def check_field_size(q: int) -> bool:
    """Warn (without changing any value) when ``q < 5``; returns True if warned."""
    if q < 5:
        warnings.warn(
            f"q={q}: multiplicities are reported for all odd q, but the "
            "large-q hypothesis on regular characters is only guaranteed from q >= 5",
            SmallFieldWarning,
            stacklevel=2,
        )
        return True
    return False


def unipotent_multiplicity(lam: Partition, mu: Partition) -> int:
    """dim Hom(pi_lam, pi_mu) over the smaller unitary group; always 0 or 1.

    The predicate is symmetric, so the arguments may come in either order.
    """
    return int(is_2_transverse(Partition(lam), Partition(mu)))


def ggp_partners(lam: Partition, m: int) -> tuple[Partition, ...]:
    """Unipotent ``pi_mu`` of U_m with non-zero multiplicity against ``pi_lam``."""
    lam = Partition(lam)
    if not 0 <= m <= lam.size:
        raise ValueError(f"need 0 <= m <= |lam| = {lam.size}, got m = {m}")
    return tuple(mu for mu in partitions_of(m) if is_2_transverse(lam, mu))


def duality_diagram_check(lam: Partition, m: int) -> bool:
    """Compare branching of ``pi_lam`` with the theta lift of its Alvis-Curtis dual.

    Both routes must land on the same set of labels of U_m.
    """
    lam = Partition(lam)
    direct = set(ggp_partners(lam, m))
    via_theta = {transpose(mu) for mu in theta_set(transpose(lam), m).members}
    return direct == via_theta


def extended_multiplicity(lam: Partition, mu: Partition, ell: int, pi_is_regular: bool) -> int:
    """Multiplicity of ``pi_lam`` against ``R(pi (x) pi_mu)`` induced from U_ell x U_m.

    ``pi`` lies in a Lusztig series E(U_ell, s) with 1 not an eigenvalue of s;
    only its regularity matters.  ``ell = 0`` is the purely unipotent case.
    """
    lam, mu = Partition(lam), Partition(mu)
    n, m = lam.size, mu.size
    if m > n:
        raise ValueError("first group must be the larger")
    if ell < 0:
        raise ValueError("ell must be non-negative")
    if ell + m > n + 1:
        raise ValueError(f"parameter range outside ell + m <= n + 1 (ell={ell}, m={m}, n={n})")
    regular = pi_is_regular or ell == 0
    return int(regular and is_2_transverse(lam, mu))

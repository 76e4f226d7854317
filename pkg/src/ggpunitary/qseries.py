"""Exact group orders and character degrees for finite unitary groups.

All quantities are Python integers evaluated at a concrete q.  Signs coming
from Deligne-Lusztig theory are dropped; every degree is positive.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Sequence

from sympy import factorint, integer_nthroot

from .partitions import Partition, transpose

__all__ = [
    "FactoredOrder",
    "is_odd_prime_power",
    "require_odd_prime_power",
    "unitary_group_order",
    "general_linear_order",
    "hook_lengths",
    "unipotent_degree",
    "regular_character_degree",
    "lusztig_induction_degree",
    "weil_dimension",
]


@dataclass(frozen=True)
class FactoredOrder:
    """A group order ``q**p_exponent * p_prime_part`` over the base field F_q."""

    q: int
    p_exponent: int
    p_prime_part: int

    @property
    def total(self) -> int:
        return self.q**self.p_exponent * self.p_prime_part

    @property
    def p_part(self) -> int:
        return self.q**self.p_exponent

    def __mul__(self, other: "FactoredOrder") -> "FactoredOrder":
        if self.q != other.q:
            raise ValueError("orders over different base fields")
        return FactoredOrder(self.q, self.p_exponent + other.p_exponent,
                             self.p_prime_part * other.p_prime_part)

    def check(self, p: int) -> None:
        """Raise if the p'-part is divisible by the characteristic ``p``."""
        if self.p_prime_part % p == 0:
            raise ValueError(f"p'-part {self.p_prime_part} divisible by p={p}")

    @classmethod
    def one(cls, q: int) -> "FactoredOrder":
        return cls(q, 0, 1)


def is_odd_prime_power(q: int) -> bool:
    if q < 3 or q % 2 == 0:
        return False
    return len(factorint(q)) == 1


def require_odd_prime_power(q: int) -> None:
    if q % 2 == 0:
        raise ValueError("characteristic must be odd")
    if not is_odd_prime_power(q):
        raise ValueError(f"q={q} is not an odd prime power")


def _check_q(q: int) -> None:
    if q < 2:
        raise ValueError("q must be at least 2")


def unitary_group_order(n: int, q: int, degree: int = 1) -> FactoredOrder:
    """|U_n(q**degree)|, with the q-exponent expressed in the base ``q``."""
    _check_q(q)
    Q = q**degree
    pprime = prod(Q**i - (-1) ** i for i in range(1, n + 1))
    return FactoredOrder(q, degree * n * (n - 1) // 2, pprime)


def general_linear_order(m: int, Q: int, degree: int = 1) -> FactoredOrder:
    """|GL_m(Q)| where ``Q = q**degree``; the q-exponent is in the base ``q``."""
    _check_q(Q)
    q, exact = integer_nthroot(Q, degree)
    if not exact:
        raise ValueError(f"{Q} is not a {degree}-th power")
    q = int(q)
    pprime = prod(Q**i - 1 for i in range(1, m + 1))
    return FactoredOrder(q, degree * m * (m - 1) // 2, pprime)


def hook_lengths(lam: Partition) -> list[int]:
    lam_t = transpose(lam)
    return [lam[i] - j + lam_t[j] - i - 1 for i in range(len(lam)) for j in range(lam[i])]


def unipotent_degree(lam: Partition, q: int) -> int:
    """Degree of the unipotent character ``pi_lam`` of U_n(q).

    This is the GL_n generic degree evaluated at -q (Ennola duality):
    ``(-q)**n(lam) * prod((-q)**i - 1) / prod((-q)**h - 1)`` up to sign, the
    second product over the hook lengths ``h`` of ``lam``.
    """
    _check_q(q)
    lam = Partition(lam)
    t = -q
    n = lam.size
    num = prod(t**i - 1 for i in range(1, n + 1))
    den = prod(t**h - 1 for h in hook_lengths(lam))
    quot, rem = divmod(num, den)
    if rem:
        raise ArithmeticError("hook formula divisibility violated")
    n_lam = sum(i * part for i, part in enumerate(lam))
    return abs(t**n_lam * quot)


def regular_character_degree(class_type, k: int, q: int) -> int:
    """Degree of the regular character in the Lusztig series of any ``s`` of the given type.

    Equals ``[U_k : C(s)]_{p'} * |C(s)|_p``.  ``class_type`` is a
    :class:`~ggpunitary.classes.ClassType`.
    """
    if class_type.total != k:
        raise ValueError(f"class type of rank {class_type.total} used for U_{k}")
    ambient = unitary_group_order(k, q)
    cent = class_type.centralizer_order(q)
    index, rem = divmod(ambient.p_prime_part, cent.p_prime_part)
    if rem:
        raise ArithmeticError("centralizer p'-part does not divide the group order")
    return index * cent.p_part


def lusztig_induction_degree(
    ambient: FactoredOrder,
    levi_factors: Sequence[FactoredOrder],
    inner_degrees: Sequence[int],
) -> int:
    """|deg R_L^G(pi)| = [G : L]_{p'} * deg(pi) for a rational Levi L = prod of factors."""
    levi = prod(f.p_prime_part for f in levi_factors)
    index, rem = divmod(ambient.p_prime_part, levi)
    if rem:
        raise ValueError("Levi is not a rational Levi of the ambient group")
    return index * prod(inner_degrees)


def weil_dimension(n: int, q: int) -> int:
    _check_q(q)
    return q**n

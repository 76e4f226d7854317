"""Multiplicity-free decompositions of pi_lam|U_{n-1} and pi_lam (x) omega_n.

Each summand is ``R(pi_s^reg (x) pi_mu)`` Lusztig-induced from U_k x U_m, with
``mu`` 2-transverse to ``lam`` and ``s`` running over the semisimple classes
of U_k(F_q) that avoid the eigenvalue 1.  Summands are grouped by the type of
``s``; all classes of one type contribute the same degree.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .classes import ClassFamily, enumerate_class_types
from .multiplicity import ggp_partners
from .partitions import Partition
from .qseries import (
    lusztig_induction_degree,
    regular_character_degree,
    require_odd_prime_power,
    unipotent_degree,
    unitary_group_order,
    weil_dimension,
)

__all__ = [
    "DecompositionKind",
    "DecompositionTerm",
    "Decomposition",
    "VerificationReport",
    "restriction_decomposition",
    "weil_decomposition",
    "verify_dimension_identity",
]


class DecompositionKind(enum.Enum):
    RESTRICTION = "restriction"
    WEIL_TENSOR = "weil"


@dataclass(frozen=True)
class DecompositionTerm:
    target_partition: Partition
    rank_of_s: int
    family: ClassFamily
    per_class_degree: int

    @property
    def contribution(self) -> int:
        return self.family.count * self.per_class_degree

    @property
    def label(self) -> tuple:
        return (self.target_partition, self.family.class_type)

    def to_json(self) -> dict:
        return {
            "lambda_prime": list(self.target_partition),
            "s_rank": self.rank_of_s,
            "class_type": self.family.class_type.to_json(),
            "class_count": str(self.family.count),
            "degree": str(self.per_class_degree),
        }


@dataclass(frozen=True)
class Decomposition:
    source: Partition
    q: int
    kind: DecompositionKind
    terms: tuple[DecompositionTerm, ...] = field(default=())

    @property
    def total_degree(self) -> int:
        return sum(t.contribution for t in self.terms)

    @property
    def expected_degree(self) -> int:
        deg = unipotent_degree(self.source, self.q)
        if self.kind is DecompositionKind.WEIL_TENSOR:
            deg *= weil_dimension(self.source.size, self.q)
        return deg

    def is_multiplicity_free(self) -> bool:
        labels = [t.label for t in self.terms]
        return len(labels) == len(set(labels))


@dataclass
class VerificationReport:
    ok: bool
    total: int
    expected: int
    contributions: list[tuple[DecompositionTerm, int]]

    def lines(self) -> list[str]:
        out = [
            f"{t.target_partition!s:>10}  k={t.rank_of_s}  {t.family.class_type.label()}"
            f"  x{t.family.count}  deg {t.per_class_degree}  -> {c}"
            for t, c in self.contributions
        ]
        out.append(f"total={self.total} expected={self.expected} {'OK' if self.ok else 'MISMATCH'}")
        return out


def _decompose(lam: Partition, q: int, kind: DecompositionKind) -> Decomposition:
    require_odd_prime_power(q)
    lam = Partition(lam)
    n = lam.size
    ambient_rank = n - 1 if kind is DecompositionKind.RESTRICTION else n
    ambient = unitary_group_order(ambient_rank, q)
    terms = []
    for m in range(ambient_rank + 1):
        partners = ggp_partners(lam, m)
        if not partners:
            continue
        k = ambient_rank - m
        levi = [unitary_group_order(k, q), unitary_group_order(m, q)]
        families = enumerate_class_types(k, q, exclude_one=True)
        for mu in partners:
            mu_degree = unipotent_degree(mu, q)
            for fam in families:
                reg = regular_character_degree(fam.class_type, k, q)
                deg = lusztig_induction_degree(ambient, levi, [reg, mu_degree])
                terms.append(DecompositionTerm(mu, k, fam, deg))
    return Decomposition(lam, q, kind, tuple(terms))


def restriction_decomposition(lam: Partition, q: int) -> Decomposition:
    """Decompose ``pi_lam`` of U_n(F_q) restricted to U_{n-1}(F_q)."""
    if not lam:
        raise ValueError("restriction needs |lam| >= 1")
    return _decompose(lam, q, DecompositionKind.RESTRICTION)


def weil_decomposition(lam: Partition, q: int) -> Decomposition:
    """Decompose ``pi_lam (x) omega_n`` for the Weil representation omega_n of U_n(F_q)."""
    return _decompose(lam, q, DecompositionKind.WEIL_TENSOR)


def verify_dimension_identity(d: Decomposition) -> VerificationReport:
    contributions = [(t, t.contribution) for t in d.terms]
    total = sum(c for _, c in contributions)
    expected = d.expected_degree
    return VerificationReport(total == expected, total, expected, contributions)

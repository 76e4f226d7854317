"""Semisimple conjugacy classes of U_k(F_q), described by type.

Eigenvalues of a semisimple element of U_k(F_q) come in orbits of the map
``x -> x**(-q)`` on the multiplicative group of the algebraic closure.  A
class is determined by which orbits occur and with what multiplicity; its
*type* remembers only the orbit sizes and the multiplicities.  An orbit of
odd size ``d`` taken with multiplicity ``m`` contributes U_m(q^d) to the
centralizer, an orbit of even size ``d`` contributes GL_m(q^d).
"""

from __future__ import annotations

import itertools
import os
from collections import Counter
from dataclasses import dataclass, field
from math import factorial, perm, prod

from sympy import divisors
from sympy.functions.combinatorial.numbers import mobius

from .finite_field import GF
from .partitions import Partition, format_partition, partitions_of
from .qseries import FactoredOrder, general_linear_order, unitary_group_order

__all__ = [
    "ClassType",
    "ClassFamily",
    "orbit_count",
    "orbit_pool",
    "enumerate_class_types",
    "centralizer_order",
    "brute_force_orbit_census",
    "oracle_limit",
]

DEFAULT_ORACLE_LIMIT = 10**7


@dataclass(frozen=True, order=True)
class ClassType:
    """Orbit size ``d`` -> partition of the multiplicities of the size-``d`` orbits used."""

    assignment: tuple[tuple[int, Partition], ...] = ()

    def __post_init__(self):
        ds = [d for d, _ in self.assignment]
        if ds != sorted(set(ds)):
            raise ValueError("orbit sizes must be distinct and increasing")
        if any(d < 1 or not parts for d, parts in self.assignment):
            raise ValueError("every orbit size needs a non-empty multiplicity partition")

    @classmethod
    def from_mapping(cls, mapping: dict[int, Partition]) -> "ClassType":
        return cls(tuple((d, Partition(mapping[d])) for d in sorted(mapping)))

    @property
    def total(self) -> int:
        return sum(d * parts.size for d, parts in self.assignment)

    def as_dict(self) -> dict[int, Partition]:
        return dict(self.assignment)

    def centralizer_order(self, q: int) -> FactoredOrder:
        return centralizer_order(self, q)

    def label(self) -> str:
        if not self.assignment:
            return "{}"
        return "{" + "; ".join(f"d={d}: {format_partition(p)}" for d, p in self.assignment) + "}"

    def to_json(self) -> dict[str, list[int]]:
        return {str(d): list(p) for d, p in self.assignment}


@dataclass(frozen=True)
class ClassFamily:
    class_type: ClassType
    count: int = field(compare=False)


def oracle_limit() -> int:
    raw = os.environ.get("GGP_ORACLE_LIMIT")
    return int(raw) if raw else DEFAULT_ORACLE_LIMIT


def orbit_count(d: int, q: int) -> int:
    """Number of orbits of size exactly ``d`` of ``x -> x**(-q)``."""
    if d < 1:
        raise ValueError("orbit size must be positive")
    total = sum(int(mobius(d // e)) * (q**e - (-1) ** e) for e in divisors(d))
    count, rem = divmod(total, d)
    assert rem == 0, (d, q)
    return count


def orbit_pool(d: int, q: int, exclude_one: bool) -> int:
    """Orbits of size ``d`` available as eigenvalue packets."""
    n = orbit_count(d, q)
    # {1} is always a singleton orbit; {-1} is never excluded
    return n - 1 if d == 1 and exclude_one else n


def _placements(parts: Partition, pool: int) -> int:
    """Ways to give the multiplicities ``parts`` to distinct orbits out of ``pool``."""
    if len(parts) > pool:
        return 0
    return perm(pool, len(parts)) // prod(factorial(c) for c in Counter(parts).values())


def _weight_splits(k: int, d: int):
    """Yield {d': weight} with sum(d' * weight) == k and every d' >= d."""
    if k == 0:
        yield {}
        return
    for size in range(d, k + 1):
        for w in range(1, k // size + 1):
            for rest in _weight_splits(k - size * w, size + 1):
                yield {size: w, **rest}


def enumerate_class_types(k: int, q: int, exclude_one: bool = True) -> list[ClassFamily]:
    """All semisimple class types of U_k(F_q) with their class counts.

    Types whose count would be zero (not enough orbits of some size) are
    left out.  Ordered by the natural ordering of :class:`ClassType`.
    """
    if k < 0:
        raise ValueError("rank must be non-negative")
    families = []
    for weights in _weight_splits(k, 1):
        choices = [
            [(d, parts) for parts in partitions_of(w)] for d, w in sorted(weights.items())
        ]
        for combo in itertools.product(*choices):
            count = prod(_placements(parts, orbit_pool(d, q, exclude_one)) for d, parts in combo)
            if count:
                families.append(ClassFamily(ClassType(tuple(combo)), count))
    families.sort(key=lambda f: f.class_type)
    return families


def centralizer_order(class_type: ClassType, q: int) -> FactoredOrder:
    order = FactoredOrder.one(q)
    for d, parts in class_type.assignment:
        for m in parts:
            if d % 2:
                order = order * unitary_group_order(m, q, degree=d)
            else:
                order = order * general_linear_order(m, q**d, degree=d)
    return order


def brute_force_orbit_census(d_max: int, q: int) -> dict[int, int]:
    """Count orbits of ``x -> x**(-q)`` by size, enumerating actual finite fields.

    Orbits of size ``d`` live in the subgroup of order ``q**d - (-1)**d`` of
    F_{q^{2d}}^x, so for each ``d`` the field F_{q^{2d}} is built explicitly and
    every nonzero element is pushed through the map.  ``q`` must be prime.
    """
    if d_max < 1:
        raise ValueError("d_max must be positive")
    if q**(2 * d_max) > oracle_limit():
        raise ValueError("oracle range")
    census = {}
    for d in range(1, d_max + 1):
        field_ = GF(q, 2 * d)
        sigma = {x: field_.inv(field_.frobenius(x)) for x in field_.elements()}
        seen: set[int] = set()
        exact = 0
        for x in field_.elements():
            if x in seen:
                continue
            orbit = [x]
            y = sigma[x]
            while y != x:
                orbit.append(y)
                y = sigma[y]
            seen.update(orbit)
            if len(orbit) == d:
                exact += 1
        census[d] = exact
    return census

from collections import Counter

import pytest
from sympy import divisors

from ggpunitary.classes import (
    ClassFamily,
    ClassType,
    brute_force_orbit_census,
    centralizer_order,
    enumerate_class_types,
    orbit_count,
    orbit_pool,
)
from ggpunitary.partitions import Partition
from ggpunitary.qseries import unitary_group_order
from matrix_model import F9, IDENTITY, conjugacy_classes, det, element_order, unitary_group

T = ClassType.from_mapping


def as_table(families):
    return {f.class_type: f.count for f in families}


def recursive_census(k, q, exclude_one):
    """Assign multiplicities to concrete, individually labelled orbits."""
    orbits = [(d, i) for d in range(1, k + 1) for i in range(orbit_pool(d, q, exclude_one))]
    table = Counter()

    def walk(idx, left, chosen):
        if left == 0:
            by_size = {}
            for d, mult in chosen:
                by_size.setdefault(d, []).append(mult)
            key = T({d: sorted(ms, reverse=True) for d, ms in by_size.items()})
            table[key] += 1
            return
        if idx == len(orbits):
            return
        d = orbits[idx][0]
        walk(idx + 1, left, chosen)
        for mult in range(1, left // d + 1):
            walk(idx + 1, left - d * mult, chosen + [(d, mult)])

    walk(0, k, [])
    return dict(table)


class TestOrbitCount:
    @pytest.mark.parametrize("d,q,n", [(1, 3, 4), (2, 3, 2), (3, 3, 8), (1, 2, 3), (2, 2, 0)])
    def test_examples(self, d, q, n):
        assert orbit_count(d, q) == n

    @pytest.mark.parametrize("q", [2, 3, 5, 7, 9])
    def test_fixed_point_identity(self, q):
        for d in range(1, 13):
            assert sum(e * orbit_count(e, q) for e in divisors(d)) == q**d - (-1) ** d

    @pytest.mark.parametrize("q", [2, 3])
    def test_against_field_enumeration(self, q):
        census = brute_force_orbit_census(3, q)
        assert census == {d: orbit_count(d, q) for d in (1, 2, 3)}

    @pytest.mark.parametrize("d_max,q,expected", [(2, 3, {1: 4, 2: 2}), (1, 2, {1: 3}),
                                                  (3, 3, {1: 4, 2: 2, 3: 8})])
    def test_census_examples(self, d_max, q, expected):
        assert brute_force_orbit_census(d_max, q) == expected

    def test_census_limit(self, monkeypatch):
        monkeypatch.setenv("GGP_ORACLE_LIMIT", "100")
        with pytest.raises(ValueError, match="oracle range"):
            brute_force_orbit_census(3, 3)

    def test_bad_size(self):
        with pytest.raises(ValueError):
            orbit_count(0, 3)

    def test_pool(self):
        assert orbit_pool(1, 3, True) == 3
        assert orbit_pool(1, 3, False) == 4
        assert orbit_pool(2, 3, True) == 2


class TestEnumeration:
    def test_k1(self):
        assert as_table(enumerate_class_types(1, 3, True)) == {T({1: [1]}): 3}

    def test_k2(self):
        fams = enumerate_class_types(2, 3, True)
        assert as_table(fams) == {T({1: [1, 1]}): 3, T({1: [2]}): 3, T({2: [1]}): 2}
        assert sum(f.count for f in fams) == 8

    @pytest.mark.parametrize("exclude", [True, False])
    def test_k0(self, exclude):
        assert enumerate_class_types(0, 5, exclude) == [ClassFamily(ClassType(), 1)]

    @pytest.mark.parametrize("exclude", [True, False])
    def test_against_recursive_oracle(self, exclude):
        for k in range(6):
            assert as_table(enumerate_class_types(k, 3, exclude)) == recursive_census(k, 3, exclude)

    @pytest.mark.parametrize("q", [3, 5, 7, 9])
    def test_total_class_count(self, q):
        # all semisimple classes of U_k(q): q^k + q^(k-1)
        for k in range(1, 7):
            assert sum(f.count for f in enumerate_class_types(k, q, False)) == q**k + q ** (k - 1)

    def test_invariants(self):
        for k in range(6):
            fams = enumerate_class_types(k, 3, True)
            types = [f.class_type for f in fams]
            assert types == sorted(types)
            for f in fams:
                assert f.count >= 1 and f.class_type.total == k
                for d, parts in f.class_type.assignment:
                    assert len(parts) <= orbit_pool(d, 3, True)

    def test_pool_exhaustion_omits(self):
        # q=2 has no size-2 orbits and only two size-1 orbits besides {1}
        table = as_table(enumerate_class_types(2, 2, True))
        assert table == {T({1: [1, 1]}): 1, T({1: [2]}): 2}

    def test_negative(self):
        with pytest.raises(ValueError):
            enumerate_class_types(-1, 3)


class TestClassType:
    def test_validation(self):
        with pytest.raises(ValueError):
            ClassType(((2, Partition([1])), (1, Partition([1]))))
        with pytest.raises(ValueError):
            ClassType(((1, Partition()),))

    def test_rendering(self):
        c = T({1: [1, 1], 2: [1]})
        assert c.total == 4
        assert c.label() == "{d=1: 1,1; d=2: 1}"
        assert c.to_json() == {"1": [1, 1], "2": [1]}
        assert c.as_dict() == {1: (1, 1), 2: (1,)}
        assert ClassType().label() == "{}"


class TestCentralizers:
    @pytest.mark.parametrize("mapping,order", [({1: [1, 1]}, 16), ({2: [1]}, 8), ({1: [2]}, 96)])
    def test_examples(self, mapping, order):
        assert centralizer_order(T(mapping), 3).total == order
        assert T(mapping).centralizer_order(3).total == order

    def test_lagrange(self):
        for k in range(6):
            order = unitary_group_order(k, 3).total
            for f in enumerate_class_types(k, 3, False):
                assert order % f.class_type.centralizer_order(3).total == 0

    def test_mixed_factors(self):
        c = T({1: [2, 1], 2: [1], 3: [1]})
        expected = (unitary_group_order(2, 3).total * unitary_group_order(1, 3).total
                    * 8 * unitary_group_order(1, 27).total)
        assert centralizer_order(c, 3).total == expected


@pytest.fixture(scope="module")
def semisimple_classes():
    group = unitary_group()
    semisimple = [g for g in group if element_order(g) % 3]
    return group, conjugacy_classes(semisimple, group)


class TestMatrixModel:
    """Semisimple classes of the explicit group U_2(3) against the census."""

    def test_class_count(self, semisimple_classes):
        _, classes = semisimple_classes
        assert len(classes) == sum(f.count for f in enumerate_class_types(2, 3, False)) == 12

    @pytest.mark.parametrize("exclude_one", [False, True])
    def test_centralizer_multiset(self, semisimple_classes, exclude_one):
        group, classes = semisimple_classes
        f = F9
        observed = Counter()
        for rep, cls in classes:
            g_minus_1 = (f.add(rep[0], f.neg(1)), rep[1], rep[2], f.add(rep[3], f.neg(1)))
            if exclude_one and det(g_minus_1) == 0:
                continue
            observed[len(group) // len(cls)] += 1
        expected = Counter()
        for fam in enumerate_class_types(2, 3, exclude_one):
            expected[fam.class_type.centralizer_order(3).total] += fam.count
        assert observed == expected

    def test_identity_is_central(self, semisimple_classes):
        group, classes = semisimple_classes
        assert any(rep == IDENTITY and len(cls) == 1 for rep, cls in classes)

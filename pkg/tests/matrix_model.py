"""Brute-force model of U_2(3) inside GL_2(F_9), used as an oracle.

The hermitian form is the identity matrix and conjugation is x -> x**3.
"""

from functools import lru_cache
from itertools import product

from ggpunitary.finite_field import GF

F9 = GF(3, 2)
ZERO, ONE = 0, 1


def mat_mul(a, b):
    f = F9
    (a11, a12, a21, a22), (b11, b12, b21, b22) = a, b
    return (
        f.add(f.mul(a11, b11), f.mul(a12, b21)),
        f.add(f.mul(a11, b12), f.mul(a12, b22)),
        f.add(f.mul(a21, b11), f.mul(a22, b21)),
        f.add(f.mul(a21, b12), f.mul(a22, b22)),
    )


def det(a):
    f = F9
    return f.add(f.mul(a[0], a[3]), f.neg(f.mul(a[1], a[2])))


def conj_transpose(a):
    fr = F9.frobenius
    return (fr(a[0]), fr(a[2]), fr(a[1]), fr(a[3]))


IDENTITY = (ONE, ZERO, ZERO, ONE)


def all_matrices():
    field = [0] + F9.elements()
    return product(field, repeat=4)


@lru_cache(maxsize=None)
def unitary_group():
    return tuple(g for g in all_matrices() if mat_mul(conj_transpose(g), g) == IDENTITY)


def element_order(g):
    k, x = 1, g
    while x != IDENTITY:
        x = mat_mul(x, g)
        k += 1
    return k


def inverse(g):
    # unitary, so the inverse is the conjugate transpose
    return conj_transpose(g)


def conjugacy_classes(elements, group):
    remaining = set(elements)
    classes = []
    while remaining:
        g = min(remaining)
        cls = {mat_mul(mat_mul(h, g), inverse(h)) for h in group}
        classes.append((g, cls))
        remaining -= cls
    return classes

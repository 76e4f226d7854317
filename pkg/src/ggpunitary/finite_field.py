"""Small prime-power fields F_{p^n}, used only as brute-force oracles.

Elements are encoded as integers whose base-``p`` digits are the polynomial
coefficients (lowest degree first).  The modulus is always the first monic
irreducible polynomial of degree ``n`` in the order of that same encoding, so
every table built here is reproducible.
"""

from __future__ import annotations

from functools import lru_cache

from sympy import isprime

__all__ = ["GF", "first_irreducible"]


def _digits(x: int, p: int, n: int) -> list[int]:
    out = []
    for _ in range(n):
        x, r = divmod(x, p)
        out.append(r)
    return out


def _polymod_mul(a: list[int], b: list[int], modulus: list[int], p: int) -> list[int]:
    """Multiply coefficient lists and reduce by the monic ``modulus``."""
    n = len(modulus) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    for k in range(len(prod) - 1, n - 1, -1):
        c = prod[k]
        if c:
            for j in range(n + 1):
                prod[k - n + j] = (prod[k - n + j] - c * modulus[j]) % p
    return (prod + [0] * n)[:n]


def _has_root_free_factorisation(coeffs: list[int], p: int) -> bool:
    """True if the monic polynomial ``coeffs`` has no factor of degree <= n/2."""
    n = len(coeffs) - 1
    for d in range(1, n // 2 + 1):
        for low in range(p**d):
            g = _digits(low, p, d) + [1]
            if _divides(g, coeffs, p):
                return False
    return True


def _divides(g: list[int], f: list[int], p: int) -> bool:
    f = f.copy()
    dg = len(g) - 1
    for k in range(len(f) - 1, dg - 1, -1):
        c = f[k]
        if c:
            for j in range(dg + 1):
                f[k - dg + j] = (f[k - dg + j] - c * g[j]) % p
    return not any(f[:dg])


@lru_cache(maxsize=None)
def first_irreducible(p: int, n: int) -> tuple[int, ...]:
    """Coefficients (constant term first, monic) of the reference modulus."""
    if not isprime(p):
        raise ValueError(f"{p} is not prime")
    for low in range(p**n):
        coeffs = _digits(low, p, n) + [1]
        if n == 1 or (coeffs[0] and _has_root_free_factorisation(coeffs, p)):
            return tuple(coeffs)
    raise AssertionError("no irreducible polynomial found")


class GF:
    """The field with ``p**n`` elements, backed by full multiplication tables.

    Intended for fields of a few thousand elements at most.
    """

    def __init__(self, p: int, n: int = 1):
        self.p, self.n = p, n
        self.order = p**n
        self.modulus = first_irreducible(p, n)
        self._log, self._exp = self._build_logs()

    def __repr__(self):
        return f"GF({self.p}^{self.n})"

    def add(self, a: int, b: int) -> int:
        p = self.p
        out, place = 0, 1
        while a or b:
            a, ra = divmod(a, p)
            b, rb = divmod(b, p)
            out += ((ra + rb) % p) * place
            place *= p
        return out

    def neg(self, a: int) -> int:
        p = self.p
        out, place = 0, 1
        while a:
            a, r = divmod(a, p)
            out += ((-r) % p) * place
            place *= p
        return out

    def _mul_slow(self, a: int, b: int) -> int:
        da, db = _digits(a, self.p, self.n), _digits(b, self.p, self.n)
        res = _polymod_mul(da, db, list(self.modulus), self.p)
        return sum(c * self.p**i for i, c in enumerate(res))

    def _build_logs(self):
        # find the smallest primitive element by brute force
        size = self.order - 1
        for g in range(2 if self.order > 2 else 1, self.order):
            exp = [1]
            x = 1
            for _ in range(size - 1):
                x = self._mul_slow(x, g)
                if x == 1:
                    break
                exp.append(x)
            if len(exp) == size:
                log = {x: k for k, x in enumerate(exp)}
                return log, exp
        raise AssertionError("no primitive element")

    @property
    def generator(self) -> int:
        return self._exp[1 % len(self._exp)]

    def elements(self):
        """Nonzero elements as successive powers of the generator."""
        return list(self._exp)

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e <= 0:
                raise ZeroDivisionError("0 has no inverse")
            return 0
        return self._exp[(self._log[a] * e) % (self.order - 1)]

    def inv(self, a: int) -> int:
        return self.pow(a, -1)

    def frobenius(self, a: int, k: int = 1) -> int:
        """``a ** (p**k)``, computed by repeated p-th powering with slow multiplication."""
        for _ in range(k):
            x = 1
            for _ in range(self.p):
                x = self._mul_slow(x, a)
            a = x
        return a

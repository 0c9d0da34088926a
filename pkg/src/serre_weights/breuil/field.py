"""F_{p^2} as F_p[t]/(f) with table-driven arithmetic.

Elements are ints c0 + c1*p standing for c0 + c1*t.  f is the
lexicographically smallest monic irreducible quadratic t^2 + a t + b,
ordered by (a, b).
"""

from __future__ import annotations

from functools import lru_cache


def smallest_irreducible_quadratic(p: int) -> tuple[int, int]:
    squares = {(s * s) % p for s in range(p)}
    for a in range(p):
        for b in range(p):
            # t^2 + a t + b is irreducible iff its discriminant is a non-square
            if (a * a - 4 * b) % p not in squares:
                return a, b
    raise ValueError(f"no irreducible quadratic mod {p}")


class CoeffField:
    """The field with p^2 elements, with a fixed generator zeta of its units."""

    def __init__(self, p: int):
        self.p = p
        self.order = p * p
        self.poly = smallest_irreducible_quadratic(p)
        a, b = self.poly
        self.zero, self.one = 0, 1
        self._mul = [[self._slow_mul(x, y) for y in range(self.order)]
                     for x in range(self.order)]
        self.zeta = self._find_generator()
        # exp/log tables for zeta
        self.exp = [1] * (self.order - 1)
        for k in range(1, self.order - 1):
            self.exp[k] = self._mul[self.exp[k - 1]][self.zeta]
        self.log = {x: k for k, x in enumerate(self.exp)}
        self._frob = [self._pow_slow(x, p) for x in range(self.order)]
        assert (a * a - 4 * b) % p != 0

    def _slow_mul(self, x: int, y: int) -> int:
        p = self.p
        a, b = self.poly
        x0, x1 = x % p, x // p
        y0, y1 = y % p, y // p
        # t^2 = -a t - b
        c0 = x0 * y0 - b * x1 * y1
        c1 = x0 * y1 + x1 * y0 - a * x1 * y1
        return c0 % p + (c1 % p) * p

    def _pow_slow(self, x: int, k: int) -> int:
        r = 1
        for _ in range(k):
            r = self._mul[r][x]
        return r

    def _find_generator(self) -> int:
        n = self.order - 1
        primes = [q for q in range(2, n + 1) if n % q == 0 and all(q % d for d in range(2, q))]
        for g in range(2, self.order):
            if all(self._pow_slow(g, n // q) != 1 for q in primes):
                return g
        raise ArithmeticError("no generator found")

    def add(self, x: int, y: int) -> int:
        p = self.p
        return (x % p + y % p) % p + ((x // p + y // p) % p) * p

    def neg(self, x: int) -> int:
        p = self.p
        return (-(x % p)) % p + ((-(x // p)) % p) * p

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        return self._mul[x][y]

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("inverse of 0 in F_{p^2}")
        return self.exp[(-self.log[x]) % (self.order - 1)]

    def zeta_pow(self, k: int) -> int:
        return self.exp[k % (self.order - 1)]

    def frobenius(self, x: int) -> int:
        return self._frob[x]

    def from_int(self, k: int) -> int:
        """Image of an integer in the prime field."""
        return k % self.p

    def fmt(self, x: int) -> str:
        if x == 0:
            return "0"
        k = self.log[x]
        return "1" if k == 0 else f"z^{k}"


@lru_cache(maxsize=None)
def coeff_field(p: int) -> CoeffField:
    return CoeffField(p)

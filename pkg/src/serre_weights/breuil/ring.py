"""Truncated polynomials k_E[u]/u^N and linear algebra over them.

Polynomials are sparse dicts {degree: coefficient} with coefficients in
the CoeffField encoding; zero coefficients are never stored.  The ring is
a chain ring (every nonzero element is u^v times a unit), so a Smith normal
form exists and gives membership tests and syzygies for
finitely generated submodules of free modules.
"""

from __future__ import annotations

from dataclasses import dataclass

from .field import CoeffField

Poly = dict  # {int: int}


class TruncRing:
    def __init__(self, field: CoeffField, N: int):
        self.F = field
        self.N = N

    # construction -------------------------------------------------------

    def monomial(self, k: int, c: int = 1) -> Poly:
        if k >= self.N or c == 0:
            return {}
        return {k: c}

    def const(self, c: int) -> Poly:
        return self.monomial(0, c)

    # arithmetic -------------------------------------------------------------

    def add(self, f: Poly, g: Poly) -> Poly:
        F = self.F
        out = dict(f)
        for k, c in g.items():
            s = F.add(out.get(k, 0), c)
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return out

    def neg(self, f: Poly) -> Poly:
        return {k: self.F.neg(c) for k, c in f.items()}

    def sub(self, f: Poly, g: Poly) -> Poly:
        return self.add(f, self.neg(g))

    def mul(self, f: Poly, g: Poly) -> Poly:
        F, N = self.F, self.N
        out: Poly = {}
        for i, a in f.items():
            for j, b in g.items():
                k = i + j
                if k >= N:
                    continue
                s = F.add(out.get(k, 0), F.mul(a, b))
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return out

    def scale(self, f: Poly, c: int) -> Poly:
        if c == 0:
            return {}
        return {k: self.F.mul(a, c) for k, a in f.items()}

    def shift(self, f: Poly, k: int) -> Poly:
        """f * u^k (k >= 0) or exact division by u^{-k} (k < 0, dropping nothing)."""
        return {i + k: c for i, c in f.items() if 0 <= i + k < self.N}

    def valuation(self, f: Poly) -> int:
        return min(f) if f else self.N

    def inverse_unit(self, f: Poly, prec: int | None = None) -> Poly:
        """Inverse of a unit modulo u^prec (default N)."""
        prec = self.N if prec is None else prec
        F = self.F
        c0 = f.get(0, 0)
        if c0 == 0:
            raise ZeroDivisionError("not a unit")
        inv0 = F.inv(c0)
        if len(f) == 1:
            return {0: inv0}
        # g_k = -inv0 * sum_{i>=1} f_i g_{k-i}
        g = [0] * prec
        g[0] = inv0
        terms = sorted((i, c) for i, c in f.items() if i > 0)
        for k in range(1, prec):
            s = 0
            for i, c in terms:
                if i > k:
                    break
                if g[k - i]:
                    s = F.add(s, F.mul(c, g[k - i]))
            g[k] = F.neg(F.mul(inv0, s))
        return {k: c for k, c in enumerate(g) if c}

    # the two semilinear operations --------------------------------------

    def frob_u(self, f: Poly, p: int) -> Poly:
        """u -> u^p, coefficients untouched (k_E-linear)."""
        return {k * p: c for k, c in f.items() if k * p < self.N}

    def twist_u(self, f: Poly, zeta_exp: int) -> Poly:
        """u^k -> (zeta^{zeta_exp})^k u^k."""
        F = self.F
        return {k: F.mul(c, F.zeta_pow(zeta_exp * k)) for k, c in f.items()}

    def fmt(self, f: Poly) -> str:
        if not f:
            return "0"
        parts = []
        for k in sorted(f):
            c = self.F.fmt(f[k])
            parts.append(c if k == 0 else (f"u^{k}" if c == "1" else f"{c}*u^{k}"))
        return " + ".join(parts)


# vectors over the ring --------------------------------------------------------

Vec = tuple  # tuple of Poly


def vzero(d: int) -> Vec:
    return tuple({} for _ in range(d))


def vadd(R: TruncRing, x: Vec, y: Vec) -> Vec:
    return tuple(R.add(a, b) for a, b in zip(x, y))


def vsmul(R: TruncRing, s: Poly, x: Vec) -> Vec:
    return tuple(R.mul(s, a) for a in x)


def viszero(x: Vec) -> bool:
    return all(not a for a in x)


@dataclass
class SmithForm:
    """D = U A V with D diagonal, D[t][t] = u^{vals[t]} for t < rank."""

    R: TruncRing
    rows: list  # the generators A, as Vecs
    U: list  # k x k, lists of Poly
    V: list  # d x d
    vals: list  # pivot valuations

    @property
    def rank(self) -> int:
        return len(self.vals)

    def coordinates(self, x: Vec) -> list | None:
        """Coefficients c with x = sum c_i rows[i], or None if x is not in the span."""
        R = self.R
        d = len(x)
        y = [{} for _ in range(d)]
        for j in range(d):
            for t in range(d):
                if x[t] and self.V[t][j]:
                    y[j] = R.add(y[j], R.mul(x[t], self.V[t][j]))
        z = []
        for t in range(d):
            if t < self.rank:
                if R.valuation(y[t]) < self.vals[t]:
                    return None
                z.append(R.shift(y[t], -self.vals[t]))
            elif y[t]:
                return None
        k = len(self.rows)
        coeffs = [{} for _ in range(k)]
        for t, zt in enumerate(z):
            if not zt:
                continue
            for i in range(k):
                if self.U[t][i]:
                    coeffs[i] = R.add(coeffs[i], R.mul(zt, self.U[t][i]))
        return coeffs

    def contains(self, x: Vec) -> bool:
        return self.coordinates(x) is not None

    def syzygies(self) -> list:
        """Generators of {c : sum c_i rows[i] = 0}."""
        R = self.R
        out = []
        for t in range(len(self.rows)):
            if t < self.rank:
                s = R.monomial(R.N - self.vals[t])
                if not s:
                    continue
                out.append([R.mul(s, a) for a in self.U[t]])
            else:
                out.append(list(self.U[t]))
        return out

    def is_everything(self) -> bool:
        d = len(self.V)
        return self.rank == d and all(v == 0 for v in self.vals)


def smith_form(R: TruncRing, rows: list, d: int) -> SmithForm:
    """Smith normal form of the k x d matrix whose rows are the given Vecs."""
    k = len(rows)
    A = [list(r) for r in rows]
    U = [[R.const(1) if i == j else {} for j in range(k)] for i in range(k)]
    V = [[R.const(1) if i == j else {} for j in range(d)] for i in range(d)]
    vals = []
    for t in range(min(k, d)):
        best = None
        for i in range(t, k):
            for j in range(t, d):
                v = R.valuation(A[i][j])
                if v < R.N and (best is None or v < best[0]):
                    best = (v, i, j)
        if best is None:
            break
        v, i, j = best
        A[t], A[i] = A[i], A[t]
        U[t], U[i] = U[i], U[t]
        for row in A:
            row[t], row[j] = row[j], row[t]
        for row in V:
            row[t], row[j] = row[j], row[t]
        # normalise the pivot to u^v
        w = R.shift(A[t][t], -v)
        winv = R.inverse_unit(w, R.N - v)
        if winv != {0: 1}:
            A[t] = [R.mul(winv, a) for a in A[t]]
            U[t] = [R.mul(winv, a) for a in U[t]]
        # clear the pivot column below
        for i2 in range(t + 1, k):
            if not A[i2][t]:
                continue
            q = R.neg(R.shift(A[i2][t], -v))
            A[i2] = [R.add(a, R.mul(q, b)) for a, b in zip(A[i2], A[t])]
            U[i2] = [R.add(a, R.mul(q, b)) for a, b in zip(U[i2], U[t])]
        # clear the pivot row to the right
        for j2 in range(t + 1, d):
            if not A[t][j2]:
                continue
            q = R.neg(R.shift(A[t][j2], -v))
            for row in A:
                row[j2] = R.add(row[j2], R.mul(q, row[t]))
            for row in V:
                row[j2] = R.add(row[j2], R.mul(q, row[t]))
        vals.append(v)
    return SmithForm(R, [tuple(r) for r in rows], U, V, vals)

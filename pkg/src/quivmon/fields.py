"""Exact linear algebra over prime fields F_p (small p)."""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np

from .errors import NonPrimeField

SUPPORTED_PRIMES = (2, 3, 5, 7)


def check_prime(q: int) -> int:
    if q < 2 or any(q % k == 0 for k in range(2, int(q**0.5) + 1)):
        raise NonPrimeField(f"{q} is not a prime")
    return q


def row_reduce(A, p: int):
    """Reduced row echelon form mod ``p``; returns ``(R, pivot_columns)``."""
    R = np.array(A, dtype=np.int64) % p
    if R.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    rows, cols = R.shape
    r = 0
    pivots = []
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            R[[r, piv]] = R[[piv, r]]
        R[r] = (R[r] * pow(int(R[r, c]), -1, p)) % p
        col = R[:, c].copy()
        col[r] = 0
        if col.any():
            R = (R - np.outer(col, R[r])) % p
        pivots.append(c)
        r += 1
    return R, pivots


def rank_mod(A, p: int) -> int:
    A = np.asarray(A)
    if A.size == 0:
        return 0
    return len(row_reduce(A, p)[1])


def nullspace_mod(A, p: int) -> np.ndarray:
    """Basis (as rows) of ``{x : A x = 0}`` over F_p."""
    A = np.asarray(A, dtype=np.int64)
    cols = A.shape[1]
    if A.shape[0] == 0 or cols == 0:
        return np.eye(cols, dtype=np.int64)
    R, pivots = row_reduce(A, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for b, f in enumerate(free):
        basis[b, f] = 1
        for r, pc in enumerate(pivots):
            basis[b, pc] = (-R[r, f]) % p
    return basis


def inv_mod(A, p: int) -> np.ndarray:
    A = np.asarray(A, dtype=np.int64)
    n = A.shape[0]
    R, pivots = row_reduce(np.hstack([A, np.eye(n, dtype=np.int64)]), p)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return R[:, n:]


def det_mod(A, p: int) -> int:
    A = np.array(A, dtype=np.int64) % p
    n = A.shape[0]
    det = 1
    for c in range(n):
        nz = np.flatnonzero(A[c:, c])
        if nz.size == 0:
            return 0
        piv = c + int(nz[0])
        if piv != c:
            A[[c, piv]] = A[[piv, c]]
            det = -det
        det = det * int(A[c, c]) % p
        inv = pow(int(A[c, c]), -1, p)
        for r in range(c + 1, n):
            if A[r, c]:
                A[r] = (A[r] - A[r, c] * inv * A[c]) % p
    return det % p


def projective_points(basis: np.ndarray, p: int):
    """Nonzero vectors of the row span of ``basis``, one per line through the origin."""
    k = basis.shape[0]
    for lead in range(k):
        for tail in itertools.product(range(p), repeat=k - lead - 1):
            yield (np.array((0,) * lead + (1,) + tail, dtype=np.int64) @ basis) % p


def gl_order(n: int, q: int) -> int:
    out = 1
    for k in range(n):
        out *= q**n - q**k
    return out


@lru_cache(maxsize=None)
def gl_generators(n: int, p: int) -> tuple:
    """Generators of GL_n(F_p) as ``(g, g^-1)`` pairs: transvections and one scaling."""
    gens = []
    for i in range(n):
        for j in range(n):
            if i != j:
                g = np.eye(n, dtype=np.int64)
                g[i, j] = 1
                gi = np.eye(n, dtype=np.int64)
                gi[i, j] = p - 1
                gens.append((g, gi))
    if n and p > 2:
        a = primitive_root(p)
        g = np.eye(n, dtype=np.int64)
        g[0, 0] = a
        gi = np.eye(n, dtype=np.int64)
        gi[0, 0] = pow(a, -1, p)
        gens.append((g, gi))
    return tuple(gens)


def primitive_root(p: int) -> int:
    for a in range(2, p):
        if len({pow(a, k, p) for k in range(1, p)}) == p - 1:
            return a
    return 1


def _conway_like_modulus(p: int, m: int) -> tuple:
    """Smallest monic irreducible polynomial of degree ``m`` over F_p (low-to-high coefficients)."""
    for tail in itertools.product(range(p), repeat=m):
        poly = tail + (1,)
        if poly[0] == 0 and m > 1:
            continue
        if _irreducible(poly, p):
            return poly
    raise ValueError(f"no irreducible polynomial of degree {m} over F_{p}")


def _irreducible(poly, p):
    m = len(poly) - 1
    if m == 1:
        return True
    # brute force: no monic factor of degree 1..m//2
    for k in range(1, m // 2 + 1):
        for tail in itertools.product(range(p), repeat=k):
            if _polymod(poly, tail + (1,), p) == (0,) * k:
                return False
    return True


def _polymod(a, b, p):
    a = list(a)
    db = len(b) - 1
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] % p
        if c:
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % p
    return tuple(x % p for x in a[:db])


class GaloisField:
    """``F_{p^m}`` with table arithmetic; elements are ints whose base-p digits are coefficients.

    The prime subfield is ``{0, ..., p-1}``, so matrices over F_p embed unchanged.
    """

    MAX_ORDER = 256

    def __init__(self, p: int, m: int = 1):
        check_prime(p)
        self.p, self.m = p, m
        self.order = p**m
        if self.order > self.MAX_ORDER:
            raise ValueError(f"F_{p}^{m} has {self.order} elements; at most {self.MAX_ORDER} supported")
        n = self.order
        digits = np.array([[(x // p**k) % p for k in range(m)] for x in range(n)], dtype=np.int64)
        weights = p ** np.arange(m)
        self.add = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights
        self.neg = ((-digits) % p) @ weights
        self.sub = self.add[:, self.neg]
        modulus = _conway_like_modulus(p, m)
        mul = np.zeros((n, n), dtype=np.int64)
        for a in range(n):
            for b in range(a, n):
                prod = [0] * (2 * m - 1)
                for i in range(m):
                    if digits[a, i]:
                        for j in range(m):
                            prod[i + j] += digits[a, i] * digits[b, j]
                red = _polymod(prod, modulus, p) if m > 1 else (prod[0] % p,)
                mul[a, b] = mul[b, a] = int(np.dot(red, weights))
        self.mul = mul
        self.inv = np.zeros(n, dtype=np.int64)
        for a in range(1, n):
            self.inv[a] = int(np.flatnonzero(mul[a] == 1)[0])

    def __repr__(self):
        return f"GaloisField({self.p}, {self.m})"

    def __eq__(self, other):
        return isinstance(other, GaloisField) and (self.p, self.m) == (other.p, other.m)

    def __hash__(self):
        return hash((self.p, self.m))

    def matmul(self, A, B):
        A, B = np.asarray(A), np.asarray(B)
        out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
        for k in range(A.shape[1]):
            out = self.add[out, self.mul[A[:, k][:, None], B[k][None, :]]]
        return out

    def row_reduce(self, A):
        R = np.array(A, dtype=np.int64)
        rows, cols = R.shape
        r = 0
        pivots = []
        for c in range(cols):
            if r == rows:
                break
            nz = np.flatnonzero(R[r:, c])
            if nz.size == 0:
                continue
            piv = r + int(nz[0])
            if piv != r:
                R[[r, piv]] = R[[piv, r]]
            R[r] = self.mul[R[r], self.inv[R[r, c]]]
            for rr in range(rows):
                if rr != r and R[rr, c]:
                    R[rr] = self.sub[R[rr], self.mul[R[rr, c], R[r]]]
            pivots.append(c)
            r += 1
        return R, pivots

    def nullspace(self, A):
        A = np.asarray(A, dtype=np.int64)
        cols = A.shape[1]
        if A.shape[0] == 0 or cols == 0:
            return np.eye(cols, dtype=np.int64)
        R, pivots = self.row_reduce(A)
        free = [c for c in range(cols) if c not in pivots]
        basis = np.zeros((len(free), cols), dtype=np.int64)
        for b, f in enumerate(free):
            basis[b, f] = 1
            for r, pc in enumerate(pivots):
                basis[b, pc] = self.neg[R[r, f]]
        return basis

    def projective_points(self, basis):
        """Nonzero vectors of the row span of ``basis``, one per line."""
        k = basis.shape[0]
        for lead in range(k):
            for tail in itertools.product(range(self.order), repeat=k - lead - 1):
                coeffs = np.array([(0,) * lead + (1,) + tail], dtype=np.int64)
                yield self.matmul(coeffs, basis)[0]


@lru_cache(maxsize=None)
def galois_field(p: int, m: int = 1) -> GaloisField:
    return GaloisField(p, m)

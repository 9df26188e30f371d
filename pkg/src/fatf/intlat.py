"""Exact integer linear algebra: matrices, lattices in Hermite normal form,
kernels, images, intersections, indices, preimages, and finite-order analysis.

Everything is arbitrary-precision; no floating point is used anywhere.
Matrices act on row vectors from the right (v -> v*M).
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence


class DimensionError(ValueError):
    """Shapes of the operands are incompatible."""


class NotSublatticeError(ValueError):
    """A lattice claimed to be contained in another is not."""


class InfiniteIndexError(ValueError):
    """A finite index was required but the index is infinite."""


Vec = tuple[int, ...]


def _as_vec(v: Iterable[int]) -> Vec:
    return tuple(int(x) for x in v)


class IntMatrix:
    """Immutable integer matrix, row-major."""

    __slots__ = ("entries", "_cols")

    def __init__(self, entries: Sequence[Sequence[int]], cols: Optional[int] = None):
        rows = tuple(_as_vec(r) for r in entries)
        if rows:
            w = len(rows[0])
            if any(len(r) != w for r in rows):
                raise DimensionError("ragged rows")
        else:
            if cols is None:
                raise DimensionError("empty matrix needs an explicit column count")
            w = cols
        if cols is not None and rows and w != cols:
            raise DimensionError("cols argument disagrees with row length")
        self.entries = rows
        self._cols = w

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return self._cols

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def zeros(cls, r: int, c: int) -> "IntMatrix":
        return cls([[0] * c for _ in range(r)], cols=c)

    @classmethod
    def hstack(cls, blocks: Sequence["IntMatrix"]) -> "IntMatrix":
        if not blocks:
            raise DimensionError("hstack of nothing")
        r = blocks[0].rows
        if any(b.rows != r for b in blocks):
            raise DimensionError("hstack: row counts differ")
        return cls(
            [sum((list(b.entries[i]) for b in blocks), []) for i in range(r)],
            cols=sum(b.cols for b in blocks),
        )

    def row(self, i: int) -> Vec:
        return self.entries[i]

    def apply_row(self, v: Sequence[int]) -> Vec:
        """v * self for a row vector v of length self.rows."""
        if len(v) != self.rows:
            raise DimensionError("vector/matrix size mismatch")
        c = self.cols
        out = [0] * c
        for vi, row in zip(v, self.entries):
            if vi:
                for j in range(c):
                    out[j] += vi * row[j]
        return tuple(out)

    def __mul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise DimensionError("matrix product size mismatch")
        return IntMatrix([other.apply_row(r) for r in self.entries], cols=other.cols)

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionError("matrix sum size mismatch")
        return IntMatrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)],
            cols=self.cols,
        )

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return self + (-other)

    def __neg__(self) -> "IntMatrix":
        return IntMatrix([[-a for a in r] for r in self.entries], cols=self.cols)

    def scale(self, k: int) -> "IntMatrix":
        return IntMatrix([[k * a for a in r] for r in self.entries], cols=self.cols)

    def __pow__(self, k: int) -> "IntMatrix":
        if self.rows != self.cols:
            raise DimensionError("power of a non-square matrix")
        if k < 0:
            raise ValueError("negative power")
        result = IntMatrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def trace(self) -> int:
        return sum(self.entries[i][i] for i in range(min(self.rows, self.cols)))

    def is_zero(self) -> bool:
        return all(a == 0 for r in self.entries for a in r)

    def is_identity(self) -> bool:
        return self.rows == self.cols and all(
            self.entries[i][j] == (1 if i == j else 0)
            for i in range(self.rows)
            for j in range(self.cols)
        )

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, IntMatrix)
            and self.entries == other.entries
            and self.cols == other.cols
        )

    def __hash__(self) -> int:
        return hash((self.entries, self.cols))

    def __repr__(self) -> str:
        return f"IntMatrix({[list(r) for r in self.entries]!r})"


def _row_echelon(rows: list[list[int]]) -> tuple[list[list[int]], list[list[int]], list[int]]:
    """In-place HNF row reduction with a unimodular transform.

    Returns (H, U, pivot_cols) with U * input = H; H is in row Hermite normal
    form (positive pivots, entries above a pivot reduced into [0, pivot)),
    nonzero rows first.
    """
    m = len(rows)
    ncols = len(rows[0]) if rows else 0
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    r = 0
    pivot_cols: list[int] = []
    for j in range(ncols):
        # gcd-eliminate below position r in column j
        while True:
            nz = [i for i in range(r, m) if rows[i][j] != 0]
            if not nz:
                break
            i0 = min(nz, key=lambda i: abs(rows[i][j]))
            if i0 != r:
                rows[r], rows[i0] = rows[i0], rows[r]
                U[r], U[i0] = U[i0], U[r]
            if len(nz) == 1:
                break
            p = rows[r][j]
            for i in range(r + 1, m):
                if rows[i][j]:
                    q = rows[i][j] // p
                    if q:
                        for t in range(ncols):
                            rows[i][t] -= q * rows[r][t]
                        for t in range(m):
                            U[i][t] -= q * U[r][t]
        if r < m and rows[r][j] != 0:
            if rows[r][j] < 0:
                rows[r] = [-x for x in rows[r]]
                U[r] = [-x for x in U[r]]
            p = rows[r][j]
            for i in range(r):
                q = rows[i][j] // p
                if q:
                    for t in range(ncols):
                        rows[i][t] -= q * rows[r][t]
                    for t in range(m):
                        U[i][t] -= q * U[r][t]
            pivot_cols.append(j)
            r += 1
            if r == m:
                break
    return rows, U, pivot_cols


class Lattice:
    """Sublattice of Z^d given by a canonical HNF basis (rows)."""

    __slots__ = ("ambient", "basis")

    def __init__(self, ambient: int, basis: IntMatrix):
        if basis.cols != ambient:
            raise DimensionError("basis width disagrees with ambient dimension")
        self.ambient = ambient
        self.basis = basis

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], ambient: int) -> "Lattice":
        mat = [list(map(int, r)) for r in rows]
        for r in mat:
            if len(r) != ambient:
                raise DimensionError("row width disagrees with ambient dimension")
        H, _, piv = _row_echelon(mat)
        return cls(ambient, IntMatrix([H[i] for i in range(len(piv))], cols=ambient))

    @classmethod
    def zero(cls, ambient: int) -> "Lattice":
        return cls(ambient, IntMatrix([], cols=ambient))

    @classmethod
    def full(cls, ambient: int) -> "Lattice":
        return cls(ambient, IntMatrix.identity(ambient))

    @property
    def rank(self) -> int:
        return self.basis.rows

    def coords(self, v: Sequence[int]) -> Optional[Vec]:
        """Integer coordinates of v in the HNF basis, or None if v is outside."""
        if len(v) != self.ambient:
            raise DimensionError("vector dimension mismatch")
        res = list(map(int, v))
        xs = []
        for row in self.basis.entries:
            j = next(t for t, a in enumerate(row) if a != 0)
            q, rem = divmod(res[j], row[j])
            if rem:
                return None
            xs.append(q)
            if q:
                for t in range(j, self.ambient):
                    res[t] -= q * row[t]
        if any(res):
            return None
        return tuple(xs)

    def rational_coords(self, v: Sequence[int]) -> Optional[tuple[Fraction, ...]]:
        """Coordinates of v in the rational span of the basis, or None."""
        res = [Fraction(int(x)) for x in v]
        xs = []
        for row in self.basis.entries:
            j = next(t for t, a in enumerate(row) if a != 0)
            q = res[j] / row[j]
            xs.append(q)
            if q:
                for t in range(j, self.ambient):
                    res[t] -= q * row[t]
        if any(res):
            return None
        return tuple(xs)

    def contains(self, v: Sequence[int]) -> bool:
        return self.coords(v) is not None

    def member_vector(self, x: Sequence[int]) -> Vec:
        return self.basis.apply_row(x)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Lattice)
            and self.ambient == other.ambient
            and self.basis == other.basis
        )

    def __hash__(self) -> int:
        return hash((self.ambient, self.basis))

    def __repr__(self) -> str:
        return f"Lattice({self.ambient}, {[list(r) for r in self.basis.entries]!r})"


def hnf(M: IntMatrix) -> Lattice:
    """Canonical HNF row lattice of M."""
    return Lattice.from_rows(M.entries, M.cols)


def image_lattice(M: IntMatrix) -> Lattice:
    """Row lattice {v*M : v in Z^rows}, canonical."""
    return hnf(M)


def kernel_lattice(M: IntMatrix) -> Lattice:
    """{v in Z^rows : v*M = 0} as a lattice in Z^rows."""
    rows = [list(r) for r in M.entries]
    _, U, piv = _row_echelon(rows)
    ker = U[len(piv):]
    return Lattice.from_rows(ker, M.rows)


def lattice_intersect(L1: Lattice, L2: Lattice) -> Lattice:
    if L1.ambient != L2.ambient:
        raise DimensionError("intersecting lattices of different ambient dimension")
    stacked = IntMatrix(list(L1.basis.entries) + list(L2.basis.entries), cols=L1.ambient)
    ker = kernel_lattice(stacked)
    r1 = L1.rank
    rows = [L1.basis.apply_row(k[:r1]) for k in ker.basis.entries]
    return Lattice.from_rows(rows, L1.ambient)


def _coordinate_matrix(sub: Lattice, sup: Lattice) -> IntMatrix:
    if sub.ambient != sup.ambient:
        raise DimensionError("lattices of different ambient dimension")
    coords = []
    for row in sub.basis.entries:
        c = sup.coords(row)
        if c is None:
            raise NotSublatticeError("first lattice is not contained in the second")
        coords.append(c)
    return IntMatrix(coords, cols=sup.rank)


def lattice_index(sub: Lattice, sup: Lattice):
    """[sup : sub]; math.inf when the ranks differ."""
    C = _coordinate_matrix(sub, sup)
    if sub.rank != sup.rank:
        return math.inf
    H = Lattice.from_rows(C.entries, C.cols)
    idx = 1
    for i, row in enumerate(H.basis.entries):
        idx *= row[i]
    return idx


def coset_reps(sub: Lattice, sup: Lattice) -> list[Vec]:
    """One representative per coset of sub in sup; the zero vector comes first."""
    C = _coordinate_matrix(sub, sup)
    if sub.rank != sup.rank:
        raise InfiniteIndexError("coset representatives require finite index")
    H = Lattice.from_rows(C.entries, C.cols).basis
    # H is square upper triangular with positive diagonal; tuples with
    # 0 <= x_i < H[i][i] hit each coset exactly once.
    ranges = [range(H.entries[i][i]) for i in range(H.rows)]
    return [sup.basis.apply_row(x) for x in itertools.product(*ranges)]


def smith_divisors(M: IntMatrix) -> list[int]:
    """Nonzero elementary divisors d1 | d2 | ... of M."""
    A = [list(r) for r in M.entries]
    rows, cols = len(A), M.cols
    divisors = []
    top = 0
    while top < rows and top < cols:
        # find a nonzero entry in the remaining block
        pos = None
        best = None
        for i in range(top, rows):
            for j in range(top, cols):
                if A[i][j] and (best is None or abs(A[i][j]) < best):
                    best = abs(A[i][j])
                    pos = (i, j)
        if pos is None:
            break
        i0, j0 = pos
        A[top], A[i0] = A[i0], A[top]
        for row in A:
            row[top], row[j0] = row[j0], row[top]
        while True:
            p = A[top][top]
            done = True
            for i in range(top + 1, rows):
                if A[i][top]:
                    q = A[i][top] // p
                    for t in range(top, cols):
                        A[i][t] -= q * A[top][t]
                    if A[i][top]:
                        A[top], A[i] = A[i], A[top]
                        done = False
                        break
            if not done:
                continue
            for j in range(top + 1, cols):
                if A[top][j]:
                    q = A[top][j] // p
                    for i in range(top, rows):
                        A[i][j] -= q * A[i][top]
                    if A[top][j]:
                        for i in range(top, rows):
                            A[i][top], A[i][j] = A[i][j], A[i][top]
                        done = False
                        break
            if done:
                break
        divisors.append(abs(A[top][top]))
        top += 1
    # enforce the divisibility chain
    for i in range(len(divisors)):
        for j in range(i + 1, len(divisors)):
            a, b = divisors[i], divisors[j]
            g = math.gcd(a, b)
            divisors[i], divisors[j] = g, a * b // g if g else 0
    return divisors


def is_direct_summand(sub: Lattice, sup: Lattice) -> bool:
    """True iff sup/sub is torsion-free (all elementary divisors are 1)."""
    C = _coordinate_matrix(sub, sup)
    return all(d == 1 for d in smith_divisors(C))


def lattice_preimage(domain: Lattice, M: IntMatrix, target: Lattice) -> Lattice:
    """{v in domain : v*M in target}, canonical."""
    if M.rows != domain.ambient or M.cols != target.ambient:
        raise DimensionError("preimage dimensions are inconsistent")
    mapped = IntMatrix([M.apply_row(r) for r in domain.basis.entries], cols=target.ambient)
    stacked = IntMatrix(list(mapped.entries) + list(target.basis.entries), cols=target.ambient)
    ker = kernel_lattice(stacked)
    r = domain.rank
    rows = [domain.basis.apply_row(k[:r]) for k in ker.basis.entries]
    return Lattice.from_rows(rows, domain.ambient)


def solve_left(M: IntMatrix, b: Sequence[int]) -> Optional[Vec]:
    """Deterministic x with x*M = b over Z, or None.

    Free coordinates (rows of the HNF with no pivot) are set to zero.
    """
    if len(b) != M.cols:
        raise DimensionError("right-hand side has the wrong length")
    rows = [list(r) for r in M.entries]
    H, U, piv = _row_echelon(rows)
    res = list(map(int, b))
    y = [0] * M.rows
    for i, j in enumerate(piv):
        q, rem = divmod(res[j], H[i][j])
        if rem:
            return None
        y[i] = q
        if q:
            for t in range(j, M.cols):
                res[t] -= q * H[i][t]
    if any(res):
        return None
    x = [0] * M.rows
    for i in range(M.rows):
        if y[i]:
            for t in range(M.rows):
                x[t] += y[i] * U[i][t]
    return tuple(x)


def matrix_inverse(M: IntMatrix) -> IntMatrix:
    """Exact inverse of a unimodular integer matrix."""
    if M.rows != M.cols:
        raise DimensionError("inverse of a non-square matrix")
    rows = [list(r) for r in M.entries]
    H, U, piv = _row_echelon(rows)
    if len(piv) != M.rows or any(H[i][i] != 1 for i in range(M.rows)):
        raise ValueError("matrix is not unimodular")
    return IntMatrix(U, cols=M.rows)


# ---------------------------------------------------------------------------
# finite-order analysis


def charpoly(Q: IntMatrix) -> list[int]:
    """Coefficients of det(xI - Q), ascending degree, exact (Faddeev-LeVerrier)."""
    if Q.rows != Q.cols:
        raise DimensionError("characteristic polynomial of a non-square matrix")
    m = Q.rows
    coeffs_desc = [1]
    M = IntMatrix.identity(m)
    for k in range(1, m + 1):
        M = Q * M
        t = M.trace()
        assert t % k == 0
        c = -(t // k)
        coeffs_desc.append(c)
        M = M + IntMatrix.identity(m).scale(c)
    return list(reversed(coeffs_desc))


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _poly_divmod_monic(a: list[int], b: list[int]) -> tuple[list[int], list[int]]:
    """Divide a by monic b over Z; returns (quotient, remainder)."""
    assert b[-1] == 1
    a = list(a)
    db = len(b) - 1
    q = [0] * max(len(a) - db, 1)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            q[i - db] = c
            for j in range(db + 1):
                a[i - db + j] -= c * b[j]
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return q, a


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> tuple[int, ...]:
    """Coefficients of the d-th cyclotomic polynomial, ascending degree."""
    if d == 1:
        return (-1, 1)
    poly = [-1] + [0] * (d - 1) + [1]  # x^d - 1
    for e in range(1, d):
        if d % e == 0:
            poly, rem = _poly_divmod_monic(poly, list(cyclotomic(e)))
            assert rem == [0]
    return tuple(poly)


def euler_phi(d: int) -> int:
    if d < 1:
        raise ValueError("totient of a non-positive integer")
    result = d
    p = 2
    n = d
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


def _unity_divisors(chi: list[int], m: int) -> list[int]:
    """All d with phi(d) <= m whose cyclotomic polynomial divides chi."""
    out = []
    for d in range(1, 2 * m * m + 2):
        if euler_phi(d) <= m:
            _, rem = _poly_divmod_monic(chi, list(cyclotomic(d)))
            if rem == [0]:
                out.append(d)
    return out


def unity_exponent(Q: IntMatrix) -> int:
    """Least s with Per Q = Fix Q^s: lcm of the orders of the root-of-unity
    eigenvalues of Q (1 when there are none)."""
    chi = charpoly(Q)
    s = 1
    for d in _unity_divisors(chi, Q.rows):
        s = math.lcm(s, d)
    return s


def matrix_order(Q: IntMatrix):
    """Least k >= 1 with Q^k = I, or math.inf.

    A finite-order integer matrix is diagonalizable with root-of-unity
    eigenvalues, so its order equals the lcm of their orders; a single
    power check settles finiteness.
    """
    if Q.rows != Q.cols:
        raise DimensionError("order of a non-square matrix")
    if Q.rows == 0:
        return 1
    s = unity_exponent(Q)
    if (Q ** s).is_identity():
        return s
    return math.inf


def split_ker(Q: IntMatrix, k: int, v: Sequence[int]) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    """Rational decomposition v = v1 + v2 with v1(Q - I) = 0 and
    v2(Q^{k-1} + ... + I) = 0; unique, and rational in general."""
    if Q.rows != Q.cols:
        raise DimensionError("split of a non-square matrix")
    if not (Q ** k).is_identity():
        raise ValueError("Q^k is not the identity")
    m = Q.rows
    S = IntMatrix.zeros(m, m)
    power = IntMatrix.identity(m)
    for _ in range(k):
        S = S + power
        power = power * Q
    vS = S.apply_row(v) if m else ()
    v1 = tuple(Fraction(x, k) for x in vS)
    v2 = tuple(Fraction(int(a)) - b for a, b in zip(v, v1))
    return v1, v2

"""Exact integer and rational linear algebra.

Everything here works on Python ints and :class:`fractions.Fraction`; there is
no floating point anywhere.  The module provides

* :class:`IntMatrix`, a small immutable integer matrix,
* :func:`smith_normal_form` with unimodular transforms,
* :func:`cokernel`, returning an :class:`AbelianGroupPresentation`,
* :func:`cone_membership`, decided by an exact two-phase simplex,
* :func:`inertia` of a symmetric rational matrix (congruence diagonalisation).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "IntMatrix",
    "AbelianGroupPresentation",
    "smith_normal_form",
    "cokernel",
    "cone_membership",
    "solve_rational",
    "nonnegative_solution",
    "rank",
    "inertia",
]


class IntMatrix:
    """Immutable matrix of arbitrary-precision integers."""

    __slots__ = ("_rows", "_ncols")

    def __init__(self, rows: Iterable[Iterable[int]], ncols: int | None = None):
        data = tuple(tuple(int(x) for x in row) for row in rows)
        if data:
            widths = {len(r) for r in data}
            if len(widths) != 1:
                raise ValueError("ragged rows")
            width = widths.pop()
            if ncols is not None and ncols != width:
                raise ValueError("column count mismatch")
            ncols = width
        elif ncols is None:
            ncols = 0
        self._rows = data
        self._ncols = ncols

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, m: int, n: int) -> IntMatrix:
        return cls([[0] * n for _ in range(m)], n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], nrows: int) -> IntMatrix:
        return cls([[col[i] for col in columns] for i in range(nrows)], len(columns))

    @property
    def rows(self) -> int:
        return len(self._rows)

    @property
    def cols(self) -> int:
        return self._ncols

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self._rows[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self._rows[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self._rows)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self._rows]

    @property
    def T(self) -> IntMatrix:
        return IntMatrix(zip(*self._rows), self.rows) if self._rows else IntMatrix([], 0)

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        ocols = other.T._rows
        return IntMatrix(
            [[sum(a * b for a, b in zip(r, c)) for c in ocols] for r in self._rows],
            other.cols,
        )

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        """Matrix-vector product."""
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(sum(a * b for a, b in zip(r, v)) for r in self._rows)

    def __pow__(self, k: int) -> IntMatrix:
        if self.rows != self.cols or k < 0:
            raise ValueError("only non-negative powers of square matrices")
        result, base = IntMatrix.identity(self.rows), self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def __neg__(self) -> IntMatrix:
        return IntMatrix([[-x for x in r] for r in self._rows], self.cols)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.shape, self._rows))

    def __repr__(self) -> str:
        return f"IntMatrix({self.tolist()})"

    def det(self) -> int:
        """Determinant by fraction-free Bareiss elimination."""
        n = self.rows
        if n != self.cols:
            raise ValueError("determinant of a non-square matrix")
        if n == 0:
            return 1
        a = self.tolist()
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k] != 0:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def is_unimodular(self) -> bool:
        return self.rows == self.cols and self.det() in (1, -1)

    def is_diagonal(self) -> bool:
        return all(x == 0 for i, r in enumerate(self._rows) for j, x in enumerate(r) if i != j)

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self._rows[i][i] for i in range(min(self.shape)))


@dataclass(frozen=True)
class AbelianGroupPresentation:
    """Finitely generated abelian group ``Z^free_rank + sum Z/d_i``."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        if any(d < 2 for d in self.torsion):
            raise ValueError("torsion coefficients must be >= 2")
        if any(b % a for a, b in zip(self.torsion, self.torsion[1:])):
            raise ValueError("torsion coefficients must form a divisibility chain")

    @property
    def is_free(self) -> bool:
        return not self.torsion

    def __str__(self) -> str:
        parts = [f"Z^{self.free_rank}"] if self.free_rank else []
        parts += [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) or "0"


def smith_normal_form(A: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return ``(U, D, V)`` with ``U @ A @ V == D``.

    ``U`` and ``V`` are unimodular and ``D`` is diagonal with non-negative
    entries ``d_1 | d_2 | ...``.
    """
    m, n = A.shape
    D = A.tolist()
    U = IntMatrix.identity(m).tolist()
    V = IntMatrix.identity(n).tolist()

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for M in (D, V):
            for r in M:
                r[i], r[j] = r[j], r[i]

    def add_row(src, dst, q):  # row_dst -= q * row_src
        for M in (D, U):
            M[dst] = [a - q * b for a, b in zip(M[dst], M[src])]

    def add_col(src, dst, q):  # col_dst -= q * col_src
        for M in (D, V):
            for r in M:
                r[dst] -= q * r[src]

    for t in range(min(m, n)):
        nonzero = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, n) if D[i][j]]
        if not nonzero:
            break
        _, pi, pj = min(nonzero)
        swap_rows(t, pi)
        swap_cols(t, pj)
        while True:
            done = True
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(t, i, D[i][t] // D[t][t])
                    if D[i][t]:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(t, j, D[t][j] // D[t][t])
                    if D[t][j]:
                        swap_cols(t, j)
                        done = False
            if not done:
                continue
            # divisibility: fold any offending row into row t and repeat
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % D[t][t]),
                None,
            )
            if bad is None:
                break
            add_row(bad, t, -1)
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]

    return IntMatrix(U, m), IntMatrix(D, n), IntMatrix(V, n)


def cokernel(A: IntMatrix) -> AbelianGroupPresentation:
    """Presentation of ``Z^rows`` modulo the span of the columns of ``A``."""
    _, D, _ = smith_normal_form(A)
    diag = [d for d in D.diagonal() if d]
    return AbelianGroupPresentation(A.rows - len(diag), tuple(d for d in diag if d > 1))


def _as_fractions(vectors):
    return [[Fraction(x) for x in v] for v in vectors]


def rank(vectors: Sequence[Sequence]) -> int:
    """Rank of a list of rational row vectors."""
    rows = _as_fractions(vectors)
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c] / rows[r][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
    return r


def solve_rational(A: Sequence[Sequence], b: Sequence) -> list[Fraction] | None:
    """Some exact solution of ``A x = b`` over Q, or ``None`` if inconsistent.

    Free variables are set to zero.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    M = [[Fraction(x) for x in row] + [Fraction(bi)] for row, bi in zip(A, b)]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(m):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [a - f * p for a, p in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    if any(M[i][n] != 0 for i in range(r, m)):
        return None
    x = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        x[c] = M[i][n]
    return x


def _simplex_max(A, b, c):
    """Maximise ``c.x`` subject to ``A x = b, x >= 0`` exactly.

    Returns ``(status, value, point)`` with status one of ``"optimal"``,
    ``"infeasible"``, ``"unbounded"``.  Bland's rule prevents cycling.
    """
    m = len(A)
    n = len(c)
    A = [[Fraction(x) for x in row] for row in A]
    b = [Fraction(x) for x in b]
    for i in range(m):
        if b[i] < 0:
            A[i] = [-x for x in A[i]]
            b[i] = -b[i]

    # tableau rows: coefficients for n original + m artificial variables, rhs last
    T = [A[i] + [Fraction(int(i == k)) for k in range(m)] + [b[i]] for i in range(m)]
    basis = [n + i for i in range(m)]
    width = n + m

    def pivot(r, col):
        inv = 1 / T[r][col]
        T[r] = [x * inv for x in T[r]]
        for i in range(m):
            if i != r and T[i][col]:
                f = T[i][col]
                T[i] = [a - f * p for a, p in zip(T[i], T[r])]
        basis[r] = col

    def run(cost, allowed):
        while True:
            # reduced costs for a maximisation problem
            entering = None
            for j in range(width):
                if j not in allowed or j in basis:
                    continue
                rc = cost[j] - sum(cost[basis[i]] * T[i][j] for i in range(m))
                if rc > 0:
                    entering = j
                    break
            if entering is None:
                return "optimal"
            best = None
            for i in range(m):
                if T[i][entering] > 0:
                    ratio = T[i][-1] / T[i][entering]
                    if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                        best = (ratio, i)
            if best is None:
                return "unbounded"
            pivot(best[1], entering)

    phase1 = [Fraction(0)] * n + [Fraction(-1)] * m
    run(phase1, set(range(width)))
    if sum(T[i][-1] for i in range(m) if basis[i] >= n) != 0:
        return "infeasible", None, None
    # drive remaining (zero-valued) artificials out of the basis where possible
    for i in range(m):
        if basis[i] >= n:
            col = next((j for j in range(n) if T[i][j] != 0), None)
            if col is not None:
                pivot(i, col)
    cost = [Fraction(x) for x in c] + [Fraction(0)] * m
    status = run(cost, set(range(n)))
    if status == "unbounded":
        return status, None, None
    point = [Fraction(0)] * n
    for i in range(m):
        if basis[i] < n:
            point[basis[i]] = T[i][-1]
    value = sum(cost[basis[i]] * T[i][-1] for i in range(m))
    return "optimal", value, point


def cone_membership(generators: Sequence[Sequence], x: Sequence, strict: bool = False) -> bool:
    """Decide whether ``x`` lies in the cone spanned by ``generators``.

    With ``strict=True`` the question is membership in the topological
    interior.  The interior is non-empty only for a full-dimensional cone, and
    then ``x`` is interior iff ``x = sum l_i g_i`` with every ``l_i > 0``.  That
    is decided by maximising ``s`` subject to ``x = sum (mu_i + s) g_i``,
    ``mu >= 0``, ``0 <= s <= 1``.
    """
    dim = len(x)
    if any(len(g) != dim for g in generators):
        raise ValueError("dimension mismatch between generators and point")
    gens = _as_fractions(generators)
    x = [Fraction(v) for v in x]
    k = len(gens)

    if not strict:
        if not gens:
            return all(v == 0 for v in x)
        A = [[g[row] for g in gens] for row in range(dim)]
        status, _, _ = _simplex_max(A, x, [0] * k)
        return status != "infeasible"

    if dim == 0:
        return True
    if not gens or rank(gens) < dim:
        return False
    total = [sum(g[row] for g in gens) for row in range(dim)]
    # variables: mu_1..mu_k, s, slack t with s + t = 1
    A = [[g[row] for g in gens] + [total[row], 0] for row in range(dim)]
    A.append([0] * k + [1, 1])
    status, value, _ = _simplex_max(A, x + [Fraction(1)], [0] * k + [1, 0])
    return status == "optimal" and value > 0


def nonnegative_solution(A: Sequence[Sequence], b: Sequence) -> list[Fraction] | None:
    """A vertex solution of ``A x = b, x >= 0`` over Q, or ``None``."""
    status, _, point = _simplex_max(A, b, [0] * (len(A[0]) if A else 0))
    return point if status == "optimal" else None


def inertia(sym: Sequence[Sequence]) -> tuple[int, int, int]:
    """``(positive, negative, zero)`` counts of a symmetric rational matrix.

    Uses symmetric Gaussian elimination (congruence), so Sylvester's law of
    inertia makes the count exact.
    """
    n = len(sym)
    M = [[Fraction(v) for v in row] for row in sym]
    pos = neg = 0
    active = list(range(n))
    while active:
        p = next((i for i in active if M[i][i] != 0), None)
        if p is None:
            # all diagonal entries vanish: find an off-diagonal entry and mix
            pair = next(((i, j) for i in active for j in active if i < j and M[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            # row/col i += row/col j makes M[i][i] = 2 M[i][j] != 0
            for r in range(n):
                M[i][r] += M[j][r]
            for r in range(n):
                M[r][i] += M[r][j]
            continue
        d = M[p][p]
        if d > 0:
            pos += 1
        else:
            neg += 1
        active.remove(p)
        for i in active:
            if M[i][p]:
                f = M[i][p] / d
                for j in range(n):
                    M[i][j] -= f * M[p][j]
                for j in range(n):
                    M[j][i] -= f * M[j][p]
    return pos, neg, n - pos - neg

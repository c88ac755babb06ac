"""Exact integer matrices and the mutation rule.

Everything here is plain Python integers, so arithmetic is exact at any
magnitude.  Matrices are immutable; all operations return new values.
Direction indices ``k`` are 1-based, matching the usual convention for
mutation directions; error messages use 1-based coordinates throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence


class SignSkewSymmetryError(ValueError):
    """An exchange matrix (or a mutation of one) is not sign-skew-symmetric."""


def positive_part(a: int) -> int:
    """max(a, 0)."""
    return a if a > 0 else 0


class IntMatrix:
    """Dense integer matrix (row-major), treated as immutable after construction."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, entries: Iterable[Sequence[int]]):
        data = tuple(tuple(row) for row in entries)
        if not data or not data[0]:
            raise ValueError("matrix must have at least one row and one column")
        width = len(data[0])
        for r, row in enumerate(data):
            if len(row) != width:
                raise ValueError(f"row {r + 1} has {len(row)} entries, expected {width}")
            for v in row:
                if not isinstance(v, int) or isinstance(v, bool):
                    raise TypeError(f"matrix entries must be integers, got {v!r}")
        self._data = data
        self.rows = len(data)
        self.cols = width

    @staticmethod
    def identity(n: int) -> "IntMatrix":
        return IntMatrix([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def __getitem__(self, ij: tuple[int, int]) -> int:
        """Entry at 0-based (i, j)."""
        i, j = ij
        return self._data[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self._data[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self._data)

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self._data]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def transpose(self) -> "IntMatrix":
        return IntMatrix([self.column(j) for j in range(self.cols)])

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        cols = [other.column(j) for j in range(other.cols)]
        return IntMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self._data]
        )

    def __neg__(self) -> "IntMatrix":
        return IntMatrix([[-v for v in row] for row in self._data])

    def __eq__(self, other) -> bool:
        return isinstance(other, IntMatrix) and self._data == other._data

    def __hash__(self) -> int:
        return hash(self._data)

    def __repr__(self) -> str:
        return f"IntMatrix({self.to_lists()!r})"

    def __str__(self) -> str:
        width = max(len(str(v)) for row in self._data for v in row)
        return "\n".join(" ".join(str(v).rjust(width) for v in row) for row in self._data)

    def det(self) -> int:
        """Exact determinant via fraction-free Bareiss elimination."""
        if not self.is_square:
            raise ValueError("determinant requires a square matrix")
        n = self.rows
        m = [list(row) for row in self._data]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k] != 0:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            prev = m[k][k]
        return sign * m[n - 1][n - 1]


def stack(top: IntMatrix, bottom: IntMatrix) -> IntMatrix:
    if top.cols != bottom.cols:
        raise ValueError("stacked matrices must have the same number of columns")
    return IntMatrix(list(top._data) + list(bottom._data))


def _check_direction(A: IntMatrix, k: int) -> int:
    if not 1 <= k <= A.cols:
        raise ValueError(f"direction k={k} out of range 1..{A.cols}")
    return k - 1


def mutate_matrix(A: IntMatrix, k: int) -> IntMatrix:
    """Mutate an (m+n) x n integer matrix in direction k (1-based).

    Entries in row k or column k flip sign; elsewhere
    a_ij + a_ik*[-a_kj]_+ + [a_ik]_+*a_kj.
    """
    kk = _check_direction(A, k)
    out = []
    for i in range(A.rows):
        row = []
        for j in range(A.cols):
            a = A[i, j]
            if i == kk or j == kk:
                row.append(-a)
            else:
                aik, akj = A[i, kk], A[kk, j]
                row.append(a + aik * positive_part(-akj) + positive_part(aik) * akj)
        out.append(row)
    return IntMatrix(out)


def is_sign_skew_symmetric(B: IntMatrix) -> bool:
    """True iff b_ij*b_ji < 0 or b_ij = b_ji = 0 for all pairs."""
    if not B.is_square:
        raise ValueError("sign-skew-symmetry is defined for square matrices only")
    n = B.rows
    for i in range(n):
        if B[i, i] != 0:
            return False
        for j in range(i + 1, n):
            p = B[i, j] * B[j, i]
            if p >= 0 and not (B[i, j] == 0 and B[j, i] == 0):
                return False
    return True


def is_acyclic(B: IntMatrix) -> bool:
    """True iff the sign-pattern digraph (edge i->j when b_ij > 0) has no oriented cycle."""
    if not is_sign_skew_symmetric(B):
        raise SignSkewSymmetryError("acyclicity is defined for sign-skew-symmetric matrices")
    n = B.rows
    # 0 = unseen, 1 = on current DFS path, 2 = done
    state = [0] * n
    adj = [[j for j in range(n) if B[i, j] > 0] for i in range(n)]

    def visit(v: int) -> bool:
        state[v] = 1
        for w in adj[v]:
            if state[w] == 1:
                return False
            if state[w] == 0 and not visit(w):
                return False
        state[v] = 2
        return True

    return all(state[v] != 0 or visit(v) for v in range(n))


@dataclass(frozen=True)
class SkewSymmetrizer:
    """Positive integer diagonal S with S*B skew-symmetric, normalized to gcd 1."""

    diag: tuple[int, ...]

    def __post_init__(self):
        if not self.diag or any(s <= 0 for s in self.diag):
            raise ValueError("symmetrizer entries must be positive")
        if gcd(*self.diag) != 1:
            raise ValueError("symmetrizer must be normalized to gcd 1")

    @property
    def n(self) -> int:
        return len(self.diag)

    def symmetrizes(self, B: IntMatrix) -> bool:
        """Entrywise check that s_i*b_ij = -s_j*b_ji."""
        n = self.n
        if B.rows != n or B.cols != n:
            return False
        return all(
            self.diag[i] * B[i, j] == -self.diag[j] * B[j, i]
            for i in range(n)
            for j in range(n)
        )


def find_skew_symmetrizer(B: IntMatrix) -> SkewSymmetrizer | None:
    """Minimal positive integer diagonal S with S*B skew-symmetric, or None.

    Ratios s_j/s_i = -b_ij/b_ji are propagated over connected components of
    the nonzero pattern with exact rationals, denominators are cleared per
    component, and the result is verified globally before being returned.
    """
    if not is_sign_skew_symmetric(B):
        raise SignSkewSymmetryError("input must be sign-skew-symmetric")
    n = B.rows
    vals: list[Fraction | None] = [None] * n
    for root in range(n):
        if vals[root] is not None:
            continue
        vals[root] = Fraction(1)
        component = [root]
        queue = [root]
        while queue:
            i = queue.pop()
            for j in range(n):
                if B[i, j] == 0:
                    continue
                ratio = vals[i] * Fraction(-B[i, j], B[j, i])
                if vals[j] is None:
                    vals[j] = ratio
                    component.append(j)
                    queue.append(j)
                elif vals[j] != ratio:
                    return None
        # clear denominators and reduce within the component
        denom = lcm(*(vals[i].denominator for i in component))
        scaled = [int(vals[i] * denom) for i in component]
        common = gcd(*scaled)
        for i, v in zip(component, scaled):
            vals[i] = Fraction(v // common)
    s = SkewSymmetrizer(tuple(int(v) for v in vals))
    if not s.symmetrizes(B):
        return None
    return s


def c_mutate(Bt: IntMatrix, Ct: IntMatrix, k: int) -> IntMatrix:
    """C-matrix recurrence: bottom block of the stacked (B over C) mutation."""
    if Bt.cols != Ct.cols:
        raise ValueError("B and C must have the same number of columns")
    full = mutate_matrix(stack(Bt, Ct), k)
    return IntMatrix(full._data[Bt.rows:])


def g_mutate(Gt: IntMatrix, Bt: IntMatrix, Ct: IntMatrix, B0: IntMatrix, k: int) -> IntMatrix:
    """G-matrix recurrence in direction k (1-based).

    Column k becomes -g_k + sum_l g_l*[b_lk]_+ - sum_l b0_l*[c_lk]_+ (columns
    read against row index i); other columns are unchanged.  Must agree with
    the grading degrees of the mutated cluster variables.
    """
    n = Gt.rows
    for name, M in (("G", Gt), ("B", Bt), ("C", Ct), ("B0", B0)):
        if M.rows != n or M.cols != n:
            raise ValueError(f"{name} must be {n}x{n}")
    kk = _check_direction(Gt, k)
    out = [list(row) for row in Gt._data]
    for i in range(n):
        acc = -Gt[i, kk]
        for l in range(n):
            acc += Gt[i, l] * positive_part(Bt[l, kk])
            acc -= B0[i, l] * positive_part(Ct[l, kk])
        out[i][kk] = acc
    return IntMatrix(out)


class ExtendedExchangeMatrix:
    """An (m+n) x n matrix B-tilde = (B over C) with sign-skew-symmetric top block."""

    __slots__ = ("n", "m", "full")

    def __init__(self, full: IntMatrix, n: int):
        if not 1 <= n <= full.rows:
            raise ValueError(f"rank n={n} out of range for a {full.rows}-row matrix")
        if full.cols != n:
            raise ValueError(f"extended matrix must have n={n} columns, got {full.cols}")
        top = IntMatrix(full._data[:n])
        if not is_sign_skew_symmetric(top):
            raise SignSkewSymmetryError("top n x n block is not sign-skew-symmetric")
        self.full = full
        self.n = n
        self.m = full.rows - n

    @property
    def B(self) -> IntMatrix:
        return IntMatrix(self.full._data[: self.n])

    @property
    def C(self) -> IntMatrix:
        if self.m == 0:
            raise ValueError("no coefficient rows (m = 0)")
        return IntMatrix(self.full._data[self.n:])

    @staticmethod
    def principal(B: IntMatrix) -> "ExtendedExchangeMatrix":
        """(B over I_n), the principal-coefficient extended matrix."""
        if not B.is_square:
            raise ValueError("exchange matrix must be square")
        return ExtendedExchangeMatrix(stack(B, IntMatrix.identity(B.rows)), B.rows)

    def mutate(self, k: int) -> "ExtendedExchangeMatrix":
        """Mutation of the full matrix; raises if the new top block loses the
        sign pattern (which is how non-totally-sign-skew-symmetric inputs
        surface)."""
        return ExtendedExchangeMatrix(mutate_matrix(self.full, k), self.n)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ExtendedExchangeMatrix)
            and self.n == other.n
            and self.full == other.full
        )

    def __hash__(self) -> int:
        return hash((self.n, self.full))

    def __repr__(self) -> str:
        return f"ExtendedExchangeMatrix(n={self.n}, m={self.m}, full={self.full.to_lists()!r})"

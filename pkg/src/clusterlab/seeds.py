"""Labeled seeds with principal coefficients and their mutation.

A seed holds its n cluster variables expanded in the coordinates of the
initial seed (Laurent in x1..xn, polynomial in y1..yn) together with the
2n x n extended exchange matrix.  Storing variables expanded makes seed
equality a canonical-form comparison, which is what the injectivity
checks need.
"""

from __future__ import annotations

import hashlib
import json
from typing import Sequence

from .intmat import ExtendedExchangeMatrix, IntMatrix
from .laurent import LaurentPoly


class SeedInvariantError(RuntimeError):
    """A theorem-backed invariant (positivity, constant term 1) failed."""


Grading = tuple[tuple[int, ...], ...]


def principal_grading(B0: IntMatrix) -> Grading:
    """Degree vectors for the Z^n-grading: deg(x_i) = e_i, deg(y_j) = -b_j."""
    n = B0.rows
    degs = [tuple(1 if t == i else 0 for t in range(n)) for i in range(n)]
    degs += [tuple(-B0[t, j] for t in range(n)) for j in range(n)]
    return tuple(degs)


class Seed:
    """Labeled seed of the principal-coefficient pattern with initial matrix b0."""

    __slots__ = ("b0", "vars", "ext", "_fingerprint")

    def __init__(self, b0: IntMatrix, vars: Sequence[LaurentPoly], ext: ExtendedExchangeMatrix,
                 check: bool = True):
        n = ext.n
        if ext.m != n:
            raise ValueError("principal-coefficient seeds need m = n coefficient rows")
        if len(vars) != n:
            raise ValueError(f"expected {n} cluster variables, got {len(vars)}")
        if b0.rows != n or b0.cols != n:
            raise ValueError("initial exchange matrix has the wrong shape")
        self.b0 = b0
        self.vars = tuple(vars)
        self.ext = ext
        self._fingerprint = None
        if check:
            grading = principal_grading(b0)
            for i, v in enumerate(self.vars):
                if not v.is_nonnegative() or v.is_zero:
                    raise SeedInvariantError(
                        f"cluster variable {i + 1} has a nonpositive coefficient: {v}"
                    )
                v.multidegree(grading)  # raises NotHomogeneousError on failure

    @property
    def n(self) -> int:
        return self.ext.n

    def g_matrix(self) -> IntMatrix:
        """Matrix whose column i is the multidegree of cluster variable i."""
        grading = principal_grading(self.b0)
        cols = [v.multidegree(grading) for v in self.vars]
        return IntMatrix([[cols[j][i] for j in range(self.n)] for i in range(self.n)])

    def c_matrix(self) -> IntMatrix:
        return self.ext.C

    def f_polynomials(self) -> tuple[LaurentPoly, ...]:
        return tuple(f_polynomial_of(v) for v in self.vars)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "B0": self.b0.to_lists(),
            "ext": self.ext.full.to_lists(),
            "vars": [str(v) for v in self.vars],
        }

    def fingerprint(self) -> str:
        """SHA-256 of the canonical JSON serialization (an accelerator only;
        equality decisions always fall back to structural comparison)."""
        if self._fingerprint is None:
            blob = json.dumps(self.to_json_dict(), sort_keys=True, separators=(",", ":"))
            self._fingerprint = hashlib.sha256(blob.encode()).hexdigest()
        return self._fingerprint

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Seed)
            and self.b0 == other.b0
            and self.ext == other.ext
            and self.vars == other.vars
        )

    def __hash__(self) -> int:
        return hash((self.b0, self.ext, self.vars))

    def __repr__(self) -> str:
        return f"Seed(n={self.n}, vars={[str(v) for v in self.vars]})"


def new_principal_seed(B: IntMatrix, check: bool = True) -> Seed:
    """Initial seed: variables (x1..xn), extended matrix (B over I_n)."""
    ext = ExtendedExchangeMatrix.principal(B)
    n = B.rows
    vars = tuple(LaurentPoly.x(n, n, i) for i in range(1, n + 1))
    return Seed(B, vars, ext, check=check)


class TermBudgetError(RuntimeError):
    """A polynomial product grew past the configured work budget."""


def _mul_capped(a: LaurentPoly, b: LaurentPoly, max_ops: int | None) -> LaurentPoly:
    # term-pair count is both the op count and a bound on the result size
    if max_ops is not None and len(a.terms) * len(b.terms) > max_ops:
        raise TermBudgetError(
            f"product of {len(a.terms)}- and {len(b.terms)}-term polynomials "
            f"exceeds the work budget of {max_ops} term pairs")
    return a * b


def _pow_capped(base: LaurentPoly, e: int, max_ops: int | None) -> LaurentPoly:
    result = None
    sq = base
    while e:
        if e & 1:
            result = sq if result is None else _mul_capped(result, sq, max_ops)
        e >>= 1
        if e:
            sq = _mul_capped(sq, sq, max_ops)
    return result


def mutate_seed(s: Seed, k: int, check: bool = True,
                max_ops: int | None = None) -> Seed:
    """Mutation in direction k (1-based): the exchange relation
    x'_k * x_k = prod_i gen_i^[b~_ik]_+ + prod_i gen_i^[-b~_ik]_+
    over the current generators (frozen variables included), with the
    extended matrix mutated alongside.

    max_ops caps the term-pair work of each intermediate product; wild
    instances blow past any realistic budget within a few mutations, and
    failing fast beats grinding on a product that cannot finish.
    """
    n = s.n
    if not 1 <= k <= n:
        raise ValueError(f"direction k={k} out of range 1..{n}")
    col = s.ext.full.column(k - 1)
    gens = list(s.vars) + [LaurentPoly.y(n, n, j) for j in range(1, n + 1)]

    plus = LaurentPoly.constant(n, n, 1)
    minus = LaurentPoly.constant(n, n, 1)
    for gen, b in zip(gens, col):
        if b > 0:
            plus = _mul_capped(plus, _pow_capped(gen, b, max_ops), max_ops)
        elif b < 0:
            minus = _mul_capped(minus, _pow_capped(gen, -b, max_ops), max_ops)

    new_var = (plus + minus).exact_div(s.vars[k - 1])
    new_vars = list(s.vars)
    new_vars[k - 1] = new_var
    return Seed(s.b0, new_vars, s.ext.mutate(k), check=check)


def g_vector_of(v: LaurentPoly, B0: IntMatrix) -> tuple[int, ...]:
    """Multidegree of a cluster variable under the principal grading of B0."""
    return v.multidegree(principal_grading(B0))


def f_polynomial_of(v: LaurentPoly) -> LaurentPoly:
    """Specialization x_1 = ... = x_n = 1; a y-polynomial with constant term 1."""
    ones = {f"x{i}": LaurentPoly.constant(v.n, v.m, 1) for i in range(1, v.n + 1)}
    f = v.substitute(ones)
    if f.constant_term() != 1:
        raise SeedInvariantError(
            f"F-polynomial constant term is {f.constant_term()}, expected 1: {f}"
        )
    return f


def hat_y(B0: IntMatrix) -> tuple[LaurentPoly, ...]:
    """The monomials y_k * prod_i x_i^{b_ik} of the initial seed."""
    n = B0.rows
    return tuple(
        LaurentPoly.monomial(
            n, n, 1,
            xexp=tuple(B0[i, k] for i in range(n)),
            yexp=tuple(1 if j == k else 0 for j in range(n)),
        )
        for k in range(n)
    )


def reconstruct_separation(g: Sequence[int], F: LaurentPoly, B0: IntMatrix) -> LaurentPoly:
    """(prod_j x_j^{g_j}) * F(y-hat_1, ..., y-hat_n): rebuilds a cluster
    variable from its g-vector and F-polynomial, independently of the
    mutation path that produced it."""
    n = B0.rows
    hats = hat_y(B0)
    assignment = {f"y{j}": hats[j - 1] for j in range(1, n + 1)}
    prefix = LaurentPoly.monomial(n, n, 1, xexp=tuple(g))
    return prefix * F.substitute(assignment)


def max_monomial_shape_ok(f: LaurentPoly) -> bool:
    """True iff f has a unique maximal monomial under divisibility, with
    coefficient 1, divisible by every other occurring monomial."""
    if f.is_zero:
        return False
    width = f.n + f.m
    top = tuple(max(e[i] for e in f.terms) for i in range(width))
    return f.terms.get(top) == 1

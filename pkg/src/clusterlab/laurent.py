"""Sparse exact Laurent polynomials in x1..xn (integer exponents) and
y1..ym (nonnegative exponents) over arbitrary-precision integers.

A polynomial is a map from exponent vectors (the n x-exponents followed by
the m y-exponents) to nonzero integer coefficients, which makes equality a
plain dict comparison.  The monomial order used for leading terms and for
canonical serialization is graded-lexicographic on the concatenated
exponent vector: compare total degree first, then the vector itself.
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping, Sequence

Exponents = tuple[int, ...]


class DivisionFailureError(ArithmeticError):
    """Exact division has no Laurent-polynomial quotient."""


class NotHomogeneousError(ValueError):
    """Terms of a polynomial disagree under the requested grading."""


def _grlex_key(e: Exponents) -> tuple:
    return (sum(e), e)


class LaurentPoly:
    """Exact sparse Laurent polynomial with signature (n, m)."""

    __slots__ = ("n", "m", "terms")

    def __init__(self, n: int, m: int, terms: Mapping[Exponents, int] | None = None):
        if n < 0 or m < 0:
            raise ValueError("variable counts must be nonnegative")
        self.n = n
        self.m = m
        clean: dict[Exponents, int] = {}
        for exps, coeff in (terms or {}).items():
            if len(exps) != n + m:
                raise ValueError(f"exponent vector of length {len(exps)}, expected {n + m}")
            if any(e < 0 for e in exps[n:]):
                raise ValueError(f"negative y-exponent in {exps}")
            if coeff:
                clean[tuple(exps)] = coeff
        self.terms = clean

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls, n: int, m: int) -> "LaurentPoly":
        return cls(n, m)

    @classmethod
    def constant(cls, n: int, m: int, c: int) -> "LaurentPoly":
        return cls(n, m, {(0,) * (n + m): c})

    @classmethod
    def monomial(cls, n: int, m: int, coeff: int, xexp: Sequence[int] = (), yexp: Sequence[int] = ()) -> "LaurentPoly":
        xs = tuple(xexp) + (0,) * (n - len(xexp))
        ys = tuple(yexp) + (0,) * (m - len(yexp))
        return cls(n, m, {xs + ys: coeff})

    @classmethod
    def x(cls, n: int, m: int, i: int) -> "LaurentPoly":
        """The generator x_i, i in 1..n."""
        if not 1 <= i <= n:
            raise IndexError(f"x index {i} out of range 1..{n}")
        return cls.monomial(n, m, 1, xexp=tuple(1 if t == i - 1 else 0 for t in range(n)))

    @classmethod
    def y(cls, n: int, m: int, j: int) -> "LaurentPoly":
        """The generator y_j, j in 1..m."""
        if not 1 <= j <= m:
            raise IndexError(f"y index {j} out of range 1..{m}")
        return cls.monomial(n, m, 1, yexp=tuple(1 if t == j - 1 else 0 for t in range(m)))

    # ------------------------------------------------------------------
    # basic structure

    def _check_signature(self, other: "LaurentPoly") -> None:
        if self.n != other.n or self.m != other.m:
            raise ValueError(
                f"signature mismatch: ({self.n},{self.m}) vs ({other.n},{other.m})"
            )

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exps: Exponents) -> int:
        return self.terms.get(tuple(exps), 0)

    def constant_term(self) -> int:
        return self.terms.get((0,) * (self.n + self.m), 0)

    def leading_exponents(self) -> Exponents:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self.terms, key=_grlex_key)

    def is_nonnegative(self) -> bool:
        """True iff every stored coefficient is positive (zero is vacuously true)."""
        return all(c > 0 for c in self.terms.values())

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LaurentPoly)
            and self.n == other.n
            and self.m == other.m
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.n, self.m, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"LaurentPoly({self.n}, {self.m}, {str(self)!r})"

    # ------------------------------------------------------------------
    # ring operations

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check_signature(other)
        out = dict(self.terms)
        for exps, coeff in other.terms.items():
            s = out.get(exps, 0) + coeff
            if s:
                out[exps] = s
            else:
                out.pop(exps, None)
        return LaurentPoly(self.n, self.m, out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.n, self.m, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check_signature(other)
        out: dict[Exponents, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return LaurentPoly(self.n, self.m, out)

    def inverse(self) -> "LaurentPoly":
        """Inverse of a single-monomial unit; anything else is not invertible here."""
        if len(self.terms) != 1:
            raise DivisionFailureError("only single monomials are invertible")
        (exps, coeff), = self.terms.items()
        if coeff not in (1, -1):
            raise DivisionFailureError(f"coefficient {coeff} is not a unit over the integers")
        inv = tuple(-e for e in exps)
        if any(e < 0 for e in inv[self.n:]):
            raise DivisionFailureError("inverse would need a negative y-exponent")
        return LaurentPoly(self.n, self.m, {inv: coeff})

    def __pow__(self, e: int) -> "LaurentPoly":
        if e < 0:
            return self.inverse() ** (-e)
        result = LaurentPoly.constant(self.n, self.m, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    # ------------------------------------------------------------------
    # exact division

    def exact_div(self, d: "LaurentPoly") -> "LaurentPoly":
        """Quotient q with q*d == self, or DivisionFailureError.

        Single-monomial divisors reduce to exponent subtraction.  General
        divisors are handled by shifting both operands so all exponents are
        nonnegative and running exact multivariate reduction against the
        leading term under the graded-lex order; any non-divisible leading
        step fails.
        """
        self._check_signature(d)
        if d.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero:
            return LaurentPoly.zero(self.n, self.m)

        if len(d.terms) == 1:
            (de, dc), = d.terms.items()
            out = {}
            for exps, coeff in self.terms.items():
                q, r = divmod(coeff, dc)
                if r:
                    raise DivisionFailureError(f"coefficient {coeff} not divisible by {dc}")
                e = tuple(a - b for a, b in zip(exps, de))
                if any(v < 0 for v in e[self.n:]):
                    raise DivisionFailureError("quotient would need a negative y-exponent")
                out[e] = q
            return LaurentPoly(self.n, self.m, out)

        width = self.n + self.m
        vp = tuple(min(e[i] for e in self.terms) for i in range(width))
        vd = tuple(min(e[i] for e in d.terms) for i in range(width))
        shift = tuple(a - b for a, b in zip(vp, vd))
        if any(s < 0 for s in shift[self.n:]):
            raise DivisionFailureError("quotient would need a negative y-exponent")

        num = {tuple(a - b for a, b in zip(e, vp)): c for e, c in self.terms.items()}
        den = {tuple(a - b for a, b in zip(e, vd)): c for e, c in d.terms.items()}
        lt_d = max(den, key=_grlex_key)
        lc_d = den[lt_d]

        quot: dict[Exponents, int] = {}
        while num:
            lt_r = max(num, key=_grlex_key)
            t = tuple(a - b for a, b in zip(lt_r, lt_d))
            if any(v < 0 for v in t):
                raise DivisionFailureError("leading monomial not divisible")
            qc, rem = divmod(num[lt_r], lc_d)
            if rem:
                raise DivisionFailureError(
                    f"leading coefficient {num[lt_r]} not divisible by {lc_d}"
                )
            quot[t] = qc
            for e, c in den.items():
                key = tuple(a + b for a, b in zip(t, e))
                s = num.get(key, 0) - qc * c
                if s:
                    num[key] = s
                else:
                    num.pop(key, None)

        return LaurentPoly(
            self.n, self.m,
            {tuple(a + b for a, b in zip(e, shift)): c for e, c in quot.items()},
        )

    # ------------------------------------------------------------------
    # substitution and grading

    def substitute(self, assignment: Mapping[str, "LaurentPoly"]) -> "LaurentPoly":
        """Image of the polynomial under variable -> value, names "x<i>"/"y<j>".

        Unassigned variables map to themselves.  A variable occurring with a
        negative exponent must receive an invertible (unit monomial) value.
        """
        values: list[LaurentPoly | None] = [None] * (self.n + self.m)
        for name, value in assignment.items():
            idx = self._var_index(name)
            self._check_signature(value)
            values[idx] = value

        result = LaurentPoly.zero(self.n, self.m)
        for exps, coeff in self.terms.items():
            residual = [0] * (self.n + self.m)
            term = LaurentPoly.constant(self.n, self.m, coeff)
            for idx, e in enumerate(exps):
                if e == 0:
                    continue
                v = values[idx]
                if v is None:
                    residual[idx] = e
                else:
                    term = term * v ** e
            result = result + term * LaurentPoly(self.n, self.m, {tuple(residual): 1})
        return result

    def multidegree(self, grading: Sequence[Sequence[int]]) -> tuple[int, ...]:
        """Common degree vector of all terms under the grading, which assigns
        each of the n+m variables an integer vector; NotHomogeneousError if
        the terms disagree."""
        if self.is_zero:
            raise ValueError("the zero polynomial has no multidegree")
        if len(grading) != self.n + self.m:
            raise ValueError(f"grading must assign all {self.n + self.m} variables")
        deg = None
        for exps in self.terms:
            d = tuple(
                sum(e * g[i] for e, g in zip(exps, grading))
                for i in range(len(grading[0]))
            )
            if deg is None:
                deg = d
            elif d != deg:
                raise NotHomogeneousError(f"terms of degree {deg} and {d} in {self}")
        return deg

    def _var_index(self, name: str) -> int:
        m = re.fullmatch(r"([xy])(\d+)", name)
        if m:
            idx = int(m.group(2)) - 1
            if m.group(1) == "x" and 0 <= idx < self.n:
                return idx
            if m.group(1) == "y" and 0 <= idx < self.m:
                return self.n + idx
        raise ValueError(f"unknown variable {name!r} for signature ({self.n},{self.m})")

    # ------------------------------------------------------------------
    # canonical text form

    def __str__(self) -> str:
        """Canonical text form: terms in descending graded-lex order,
        e.g. "2*x1^-1*x2*y1 + 1"."""
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms, key=_grlex_key, reverse=True):
            coeff = self.terms[exps]
            factors = []
            for i, e in enumerate(exps):
                if e == 0:
                    continue
                name = f"x{i + 1}" if i < self.n else f"y{i - self.n + 1}"
                factors.append(name if e == 1 else f"{name}^{e}")
            mag = abs(coeff)
            if factors:
                body = "*".join(factors) if mag == 1 else "*".join([str(mag)] + factors)
            else:
                body = str(mag)
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f" + {body}" if coeff > 0 else f" - {body}")
        return "".join(parts)


_TERM_RE = re.compile(r"(\d+)|([xy]\d+)(?:\^(-?\d+))?|(\*)")


def parse(text: str, n: int, m: int) -> LaurentPoly:
    """Parse the canonical text form back into a polynomial.

    Accepts exactly what str() produces: integer coefficients, "*"-joined
    x/y factors with optional "^exp", terms joined by " + " / " - ".
    """
    s = text.strip()
    if s == "0":
        return LaurentPoly.zero(n, m)
    terms: dict[Exponents, int] = {}
    pos = 0
    sign = 1
    if s.startswith("-"):
        sign = -1
        pos = 1
    while True:
        end = _find_term_end(s, pos)
        exps, coeff = _parse_term(s[pos:end], n, m)
        key = exps
        terms[key] = terms.get(key, 0) + sign * coeff
        if end == len(s):
            break
        op = s[end:end + 3]
        if op == " + ":
            sign = 1
        elif op == " - ":
            sign = -1
        else:
            raise ValueError(f"malformed polynomial near offset {end}: {s[end:end + 8]!r}")
        pos = end + 3
    return LaurentPoly(n, m, terms)


def _find_term_end(s: str, start: int) -> int:
    plus = s.find(" + ", start)
    minus = s.find(" - ", start)
    candidates = [i for i in (plus, minus) if i != -1]
    return min(candidates) if candidates else len(s)


def _parse_term(term: str, n: int, m: int) -> tuple[Exponents, int]:
    if not term:
        raise ValueError("empty term")
    coeff = 1
    exps = [0] * (n + m)
    pos = 0
    expect_factor = True
    saw_coeff = False
    while pos < len(term):
        match = _TERM_RE.match(term, pos)
        if not match or match.start() != pos:
            raise ValueError(f"malformed term {term!r}")
        number, var, exponent, star = match.group(1), match.group(2), match.group(3), match.group(4)
        if star:
            if expect_factor:
                raise ValueError(f"malformed term {term!r}")
            expect_factor = True
        elif number is not None:
            if not expect_factor or saw_coeff or pos != 0:
                raise ValueError(f"malformed term {term!r}")
            coeff = int(number)
            saw_coeff = True
            expect_factor = False
        else:
            if not expect_factor:
                raise ValueError(f"malformed term {term!r}")
            kind, idx = var[0], int(var[1:]) - 1
            if kind == "x":
                if not 0 <= idx < n:
                    raise ValueError(f"variable {var} out of range for n={n}")
                slot = idx
            else:
                if not 0 <= idx < m:
                    raise ValueError(f"variable {var} out of range for m={m}")
                slot = n + idx
            e = int(exponent) if exponent is not None else 1
            exps[slot] += e
            expect_factor = False
        pos = match.end()
    if expect_factor:
        raise ValueError(f"malformed term {term!r}")
    return tuple(exps), coeff

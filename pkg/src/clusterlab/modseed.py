"""Seed images under evaluation homomorphisms into F_p.

Sending every x_i and y_j to a unit mod p = 2^61 - 1 and running the
exchange relation on the values tracks, per seed, the tuple of its
cluster-variable images.  Equal seeds always produce equal images, so a
differing image is a proof of seed distinctness, a sound certificate
usable at depths where the Laurent polynomials themselves are far too
large to materialize.  The points are drawn from a PRNG seeded by the
initial matrix, so runs are reproducible.
"""

from __future__ import annotations

import hashlib
import json
import random
from dataclasses import dataclass

from .intmat import ExtendedExchangeMatrix, IntMatrix, g_mutate

PRIME = (1 << 61) - 1
_SALT = "seed-evaluation-v1"


class EvaluationDeadEnd(RuntimeError):
    """A division by a zero value made an evaluation point unusable.

    With random units mod a 61-bit prime this has negligible probability;
    it aborts the run rather than silently weakening the certificates.
    """


@dataclass(frozen=True)
class EvaluationPoint:
    xs: tuple[int, ...]
    ys: tuple[int, ...]


def evaluation_points(B0: IntMatrix, count: int) -> tuple[EvaluationPoint, ...]:
    payload = json.dumps([_SALT, B0.to_lists()], separators=(",", ":"))
    digest = hashlib.sha256(payload.encode()).digest()
    rng = random.Random(int.from_bytes(digest[:8], "big"))
    n = B0.rows
    pts = []
    for _ in range(count):
        xs = tuple(rng.randrange(2, PRIME - 1) for _ in range(n))
        ys = tuple(rng.randrange(2, PRIME - 1) for _ in range(n))
        pts.append(EvaluationPoint(xs, ys))
    return tuple(pts)


@dataclass(frozen=True)
class CertifiedState:
    """Matrix data of a seed plus its variable images at each point."""

    ext: ExtendedExchangeMatrix
    g: IntMatrix
    values: tuple[tuple[int, ...], ...]  # values[point][variable]

    def key(self):
        return (self.ext, self.g, self.values)


def origin_state(B0: IntMatrix, points: tuple[EvaluationPoint, ...]) -> CertifiedState:
    return CertifiedState(
        ExtendedExchangeMatrix.principal(B0),
        IntMatrix.identity(B0.rows),
        tuple(pt.xs for pt in points),
    )


def mutate_state(state: CertifiedState, k: int, B0: IntMatrix,
                 points: tuple[EvaluationPoint, ...]) -> CertifiedState:
    """Image of seed mutation: the exchange relation evaluated in F_p."""
    n = state.ext.n
    if not 1 <= k <= n:
        raise ValueError(f"direction k={k} out of range 1..{n}")
    col = state.ext.full.column(k - 1)
    new_values = []
    for pt, vals in zip(points, state.values):
        gens = vals + pt.ys
        plus = 1
        minus = 1
        for gv, b in zip(gens, col):
            if b > 0:
                plus = plus * pow(gv, b, PRIME) % PRIME
            elif b < 0:
                minus = minus * pow(gv, -b, PRIME) % PRIME
        old = vals[k - 1]
        if old == 0:
            raise EvaluationDeadEnd(
                f"variable {k} evaluates to 0 mod p; certificates degenerate")
        new_k = (plus + minus) * pow(old, PRIME - 2, PRIME) % PRIME
        new_values.append(vals[:k - 1] + (new_k,) + vals[k:])
    return CertifiedState(
        state.ext.mutate(k),
        g_mutate(state.g, state.ext.B, state.ext.C, B0, k),
        tuple(new_values),
    )

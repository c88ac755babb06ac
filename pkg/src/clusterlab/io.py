"""Input parsing and the seed payload shared by the CLI and the service.

Matrix literals are JSON objects, either {"n": ..., "B": [[...], ...]} for
a square exchange matrix (principal coefficients implied) or
{"n": ..., "m": ..., "Bt": [[...], ...]} for an extended matrix given
row-major with m coefficient rows below the n exchange rows.
"""

from __future__ import annotations

import json
from math import lcm
from pathlib import Path

from .intmat import (
    ExtendedExchangeMatrix,
    IntMatrix,
    SkewSymmetrizer,
    find_skew_symmetrizer,
)
from .seeds import Seed

PAYLOAD_VERSION = 1


class MatrixFormatError(ValueError):
    pass


def _int_rows(raw, rows: int, cols: int, what: str) -> list[list[int]]:
    if (not isinstance(raw, list) or len(raw) != rows
            or any(not isinstance(r, list) or len(r) != cols for r in raw)):
        raise MatrixFormatError(f"{what} must be a {rows}x{cols} array of arrays")
    for r in raw:
        for v in r:
            if not isinstance(v, int) or isinstance(v, bool):
                raise MatrixFormatError(f"{what} entries must be integers")
    return [list(r) for r in raw]


def parse_matrix_literal(obj) -> IntMatrix | ExtendedExchangeMatrix:
    if not isinstance(obj, dict):
        raise MatrixFormatError("matrix literal must be a JSON object")
    n = obj.get("n")
    if not isinstance(n, int) or n < 1:
        raise MatrixFormatError('"n" must be a positive integer')
    if "B" in obj:
        return IntMatrix(_int_rows(obj["B"], n, n, '"B"'))
    if "Bt" in obj:
        m = obj.get("m")
        if not isinstance(m, int) or m < 0:
            raise MatrixFormatError('"m" must be a non-negative integer')
        return ExtendedExchangeMatrix(IntMatrix(_int_rows(obj["Bt"], n + m, n, '"Bt"')), n)
    raise MatrixFormatError('matrix literal needs a "B" or "Bt" field')


def load_matrix_file(path: str | Path) -> IntMatrix | ExtendedExchangeMatrix:
    try:
        obj = json.loads(Path(path).read_text())
    except OSError as e:
        raise MatrixFormatError(f"cannot read {path}: {e.strerror}") from e
    except json.JSONDecodeError as e:
        raise MatrixFormatError(f"{path} is not valid JSON: {e}") from e
    return parse_matrix_literal(obj)


def load_matrix_source(source: str) -> IntMatrix | ExtendedExchangeMatrix:
    """An inline JSON object (anything starting with "{") or a file path."""
    if source.lstrip().startswith("{"):
        try:
            obj = json.loads(source)
        except json.JSONDecodeError as e:
            raise MatrixFormatError(f"inline matrix is not valid JSON: {e}") from e
        return parse_matrix_literal(obj)
    return load_matrix_file(source)


def principal_base(mat: IntMatrix | ExtendedExchangeMatrix) -> IntMatrix:
    """Exchange matrix for seed computations.  An explicit extended matrix
    must carry the identity coefficient block, since variables, C, G and
    F-polynomials are all defined relative to principal coefficients."""
    if isinstance(mat, IntMatrix):
        return mat
    if mat.m != mat.n or mat.C != IntMatrix.identity(mat.n):
        raise MatrixFormatError(
            "extended matrix must have an identity coefficient block "
            "(principal coefficients) for seed computations")
    return mat.B


def column_sign_coherence(C: IntMatrix) -> list[bool]:
    out = []
    for j in range(C.cols):
        col = C.column(j)
        out.append(not (any(v > 0 for v in col) and any(v < 0 for v in col)))
    return out


def duality_ok(seed: Seed, G: IntMatrix, S: SkewSymmetrizer) -> bool:
    """Integer-cleared form of the two dual-matrix identities plus the
    unimodularity of G, for one seed."""
    n = seed.n
    L = lcm(*S.diag)
    S_hat = IntMatrix([[L // S.diag[i] if i == j else 0 for j in range(n)]
                       for i in range(n)])
    S_mat = IntMatrix([[S.diag[i] if i == j else 0 for j in range(n)]
                       for i in range(n)])
    L_eye = IntMatrix([[L if i == j else 0 for j in range(n)] for i in range(n)])
    Gt = G.transpose()
    return (G @ seed.ext.B @ S_hat @ Gt == seed.b0 @ S_hat
            and S_mat @ seed.ext.C @ S_hat @ Gt == L_eye
            and G.det() in (1, -1))


def seed_payload(seed: Seed, S: SkewSymmetrizer | None = None,
                 symmetrizer_known: bool = False) -> dict:
    """Canonical JSON view of one seed.  Pass ``symmetrizer_known=True``
    when ``S`` was already looked up (possibly absent); otherwise it is
    computed from the seed's initial exchange matrix."""
    if not symmetrizer_known:
        S = find_skew_symmetrizer(seed.b0)
    G = seed.g_matrix()
    C = seed.c_matrix()
    return {
        "v": PAYLOAD_VERSION,
        "n": seed.n,
        "variables": [str(v) for v in seed.vars],
        "f_polynomials": [str(f) for f in seed.f_polynomials()],
        "g_vectors": [list(G.column(j)) for j in range(seed.n)],
        "B": seed.ext.B.to_lists(),
        "Bt": seed.ext.full.to_lists(),
        "C": C.to_lists(),
        "G": G.to_lists(),
        "sign_coherent": column_sign_coherence(C),
        "symmetrizer": list(S.diag) if S else None,
        "duality_ok": duality_ok(seed, G, S) if S else None,
        "fingerprint": seed.fingerprint(),
    }

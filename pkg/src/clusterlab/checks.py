"""Property harness over an exploration atlas.

Every check scans stored atlas data and returns a structured result; a
failing check carries the witness path of the offending seed and a small
counterexample payload instead of raising.  All arithmetic is exact: the
duality identities are verified after clearing the symmetrizer
denominators with one integer scalar.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import lcm

from .explore import ExplorationAtlas, AtlasEntry, StateAtlas, explore, explore_states
from .intmat import (
    IntMatrix,
    SignSkewSymmetryError,
    SkewSymmetrizer,
    find_skew_symmetrizer,
    is_sign_skew_symmetric,
)
from .laurent import LaurentPoly
from .seeds import Seed, max_monomial_shape_ok, reconstruct_separation

PASS = "PASS"
FAIL = "FAIL"
SKIPPED = "SKIPPED"


@dataclass
class CheckResult:
    check: str
    status: str
    seeds_covered: int
    witness_path: list[int] | None = None
    counterexample: dict | None = None
    note: str | None = None

    def to_json_dict(self) -> dict:
        d = {"check": self.check, "status": self.status, "seeds_covered": self.seeds_covered}
        if self.witness_path is not None:
            d["witness_path"] = self.witness_path
        if self.counterexample is not None:
            d["counterexample"] = self.counterexample
        if self.note is not None:
            d["note"] = self.note
        return d


@dataclass
class VerificationReport:
    instance: dict
    depth: int
    seed_count: int
    variable_count: int
    closed: bool
    layer_sizes: list[int]
    results: list[CheckResult]

    @property
    def failures(self) -> int:
        return sum(1 for r in self.results if r.status == FAIL)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def exit_code(self, require_closure: bool = False) -> int:
        """CI contract: 0 all pass, 2 property failure, 3 truncated-only."""
        if self.failures:
            return 2
        if require_closure and not self.closed:
            return 3
        return 0

    def to_json_dict(self) -> dict:
        return {
            "v": 1,
            "instance": self.instance,
            "depth": self.depth,
            "seeds": self.seed_count,
            "distinct_variables": self.variable_count,
            "closure": self.closed,
            "layer_sizes": self.layer_sizes,
            "passed": self.passed,
            "failures": self.failures,
            "checks": [r.to_json_dict() for r in self.results],
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_json_dict(), indent=indent, sort_keys=False)


def _pass(name: str, atlas: ExplorationAtlas, note: str | None = None) -> CheckResult:
    return CheckResult(name, PASS, len(atlas), note=note)


def _fail(name: str, atlas: ExplorationAtlas, entry: AtlasEntry, counterexample: dict) -> CheckResult:
    return CheckResult(name, FAIL, len(atlas), witness_path=list(entry.path),
                       counterexample=counterexample)


def _column_sign_coherent(col: tuple[int, ...]) -> bool:
    return not (any(v > 0 for v in col) and any(v < 0 for v in col))


def check_sign_coherence(atlas: ExplorationAtlas) -> CheckResult:
    """Every column of every C-matrix has its nonzero entries of one sign."""
    for entry in atlas.entries:
        for j in range(entry.c.cols):
            col = entry.c.column(j)
            if not _column_sign_coherent(col):
                return _fail("sign_coherence", atlas, entry,
                             {"column": j + 1, "c_column": list(col)})
    return _pass("sign_coherence", atlas)


def check_positivity(atlas: ExplorationAtlas) -> CheckResult:
    """Every coefficient of every stored cluster variable is positive."""
    for entry in atlas.entries:
        for i, v in enumerate(entry.seed.vars):
            if not v.is_nonnegative():
                bad = next(c for c in v.terms.values() if c <= 0)
                return _fail("positivity", atlas, entry,
                             {"variable": i + 1, "coefficient": bad, "value": str(v)})
    return _pass("positivity", atlas)


def _diag(values) -> IntMatrix:
    n = len(values)
    return IntMatrix([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])


def check_duality(atlas: ExplorationAtlas, S: SkewSymmetrizer) -> CheckResult:
    """G B S^-1 G^T = B0 S^-1, S C S^-1 G^T = I, det G = +-1, at every seed.

    Both identities are multiplied through by L = lcm(S) so they become
    integer matrix equalities; this is the same statement, just with the
    denominators cleared.
    """
    B0 = atlas.origin.ext.B
    L = lcm(*S.diag)
    S_hat = _diag([L // s for s in S.diag])  # L * S^-1
    S_mat = _diag(list(S.diag))
    L_eye = _diag([L] * S.n)
    rhs1 = B0 @ S_hat
    for entry in atlas.entries:
        G, C, B = entry.g, entry.c, entry.seed.ext.B
        Gt = G.transpose()
        if G @ B @ S_hat @ Gt != rhs1:
            return _fail("duality", atlas, entry,
                         {"identity": "G*B*S^-1*G^T = B0*S^-1",
                          "lhs": (G @ B @ S_hat @ Gt).to_lists(), "rhs": rhs1.to_lists()})
        if S_mat @ C @ S_hat @ Gt != L_eye:
            return _fail("duality", atlas, entry,
                         {"identity": "S*C*S^-1*G^T = I",
                          "lhs": (S_mat @ C @ S_hat @ Gt).to_lists()})
        if G.det() not in (1, -1):
            return _fail("duality", atlas, entry,
                         {"identity": "det(G) = +-1", "det": G.det()})
    return _pass("duality", atlas)


def check_lemma_identity_seed(atlas: ExplorationAtlas) -> CheckResult:
    """G = I happens exactly at the origin seed."""
    eye = IntMatrix.identity(atlas.origin.n)
    hits = [e for e in atlas.entries if e.g == eye]
    for entry in hits:
        if entry.seed != atlas.origin:
            return _fail("lemma_identity_seed", atlas, entry,
                         {"reason": "seed with G = I differs from the origin"})
    if len(hits) != 1:
        return CheckResult("lemma_identity_seed", FAIL, len(atlas),
                           counterexample={"reason": f"{len(hits)} seeds have G = I, expected 1"})
    return _pass("lemma_identity_seed", atlas)


def _injectivity(name: str, atlas: ExplorationAtlas, key_fn) -> CheckResult:
    seen: dict[str, AtlasEntry] = {}
    for entry in atlas.entries:
        key = key_fn(entry)
        other = seen.get(key)
        if other is not None and other.seed != entry.seed:
            return _fail(name, atlas, entry,
                         {"key": json.loads(key), "other_path": list(other.path)})
        seen.setdefault(key, entry)
    return _pass(name, atlas)


def check_c_determines_seed(atlas: ExplorationAtlas) -> CheckResult:
    """The main-theorem check: C-matrix -> seed is injective over the atlas."""
    return _injectivity("c_determines_seed", atlas,
                        lambda e: json.dumps(e.c.to_lists()))


def check_g_determines_seed(atlas: ExplorationAtlas) -> CheckResult:
    return _injectivity("g_determines_seed", atlas,
                        lambda e: json.dumps(e.g.to_lists()))


def check_triple_determines_seed(atlas: ExplorationAtlas) -> CheckResult:
    """Weak version: (G, C, B) -> seed is injective over the atlas."""
    return _injectivity(
        "triple_determines_seed", atlas,
        lambda e: json.dumps([e.g.to_lists(), e.c.to_lists(), e.seed.ext.B.to_lists()]),
    )


def check_separation(atlas: ExplorationAtlas) -> CheckResult:
    """Rebuilding every variable from its g-vector and F-polynomial via the
    separation formula reproduces the stored variable exactly."""
    B0 = atlas.origin.b0
    ones = None
    for entry in atlas.entries:
        for i, v in enumerate(entry.seed.vars):
            if ones is None:
                ones = {f"x{t}": LaurentPoly.constant(v.n, v.m, 1) for t in range(1, v.n + 1)}
            g = entry.g.column(i)
            f = v.substitute(ones)
            if reconstruct_separation(g, f, B0) != v:
                return _fail("separation", atlas, entry,
                             {"variable": i + 1, "g_vector": list(g), "f_polynomial": str(f)})
    return _pass("separation", atlas)


def check_f_polynomials(atlas: ExplorationAtlas, require_max_monomial: bool) -> CheckResult:
    """Constant term 1 for every F-polynomial; in the skew-symmetrizable case
    also a unique maximal monomial with coefficient 1 divisible by every
    other occurring monomial."""
    ones = None
    for entry in atlas.entries:
        for i, v in enumerate(entry.seed.vars):
            if ones is None:
                ones = {f"x{t}": LaurentPoly.constant(v.n, v.m, 1) for t in range(1, v.n + 1)}
            f = v.substitute(ones)
            if f.constant_term() != 1:
                return _fail("f_polynomials", atlas, entry,
                             {"variable": i + 1, "constant_term": f.constant_term(),
                              "f_polynomial": str(f)})
            if require_max_monomial and not max_monomial_shape_ok(f):
                return _fail("f_polynomials", atlas, entry,
                             {"variable": i + 1, "reason": "no unique maximal monomial",
                              "f_polynomial": str(f)})
    note = None if require_max_monomial else "constant-term check only (no symmetrizer)"
    return _pass("f_polynomials", atlas, note=note)


def check_triple_certified(satlas: StateAtlas) -> CheckResult:
    """Counterexample hunt for (G, C, B) -> seed injectivity on certified
    states.  State dedup already merged vertices agreeing on matrices AND
    on every variable image, so any surviving pair with equal (G, C, B)
    exhibits two provably distinct seeds sharing the triple."""
    seen: dict = {}
    for entry in satlas.entries:
        key = (entry.state.g, entry.state.ext.C, entry.state.ext.B)
        other = seen.get(key)
        if other is not None:
            return CheckResult(
                "triple_determines_seed_certified", FAIL, len(satlas),
                witness_path=list(entry.path),
                counterexample={
                    "other_path": list(other.path),
                    "reason": "equal (G, C, B) but variable images differ",
                })
        seen[key] = entry
    return CheckResult(
        "triple_determines_seed_certified", PASS, len(satlas),
        note=f"variable images at {satlas.point_count} points mod 2^61-1")


# ----------------------------------------------------------------------
# corrupted canaries: negative controls proving the harness can fail

def corrupt_flip_coefficient(atlas: ExplorationAtlas) -> ExplorationAtlas:
    """Negate one coefficient of one cluster variable of the first
    non-origin seed; positivity (and separation) must then fail."""
    if len(atlas) < 2:
        raise ValueError("canary needs at least one non-origin seed")
    entry = atlas.entries[1]
    victim = entry.seed.vars[0]
    exps = victim.leading_exponents()
    terms = dict(victim.terms)
    terms[exps] = -terms[exps]
    vars = list(entry.seed.vars)
    vars[0] = LaurentPoly(victim.n, victim.m, terms)
    seed = Seed(entry.seed.b0, vars, entry.seed.ext, check=False)
    return atlas.replace(1, AtlasEntry(seed, entry.c, entry.g, entry.path))


def corrupt_perturb_c(atlas: ExplorationAtlas) -> ExplorationAtlas:
    """Damage the stored C-matrix of the first non-origin seed: inject a
    mixed-sign column (rank >= 2) or bump an entry (rank 1), so the
    sign-coherence or duality check must fail."""
    if len(atlas) < 2:
        raise ValueError("canary needs at least one non-origin seed")
    entry = atlas.entries[1]
    rows = entry.c.to_lists()
    if len(rows) >= 2:
        rows[0][0] = 1
        rows[1][0] = -1
    else:
        rows[0][0] += 1
    return atlas.replace(1, AtlasEntry(entry.seed, IntMatrix(rows), entry.g, entry.path))


CANARY_MODES = {
    "flip-coeff": corrupt_flip_coefficient,
    "perturb-c": corrupt_perturb_c,
}


# ----------------------------------------------------------------------
# full suite

def run_full_suite(B0: IntMatrix, depth: int, max_seeds: int = 100_000,
                   check_assertions: bool = True, workers: int = 1,
                   canary: str | None = None,
                   certified_depth: int | None = None,
                   ) -> tuple[ExplorationAtlas, VerificationReport]:
    """Explore, then run every check that applies to the input class.

    Skew-symmetrizable inputs get the full battery.  Without a symmetrizer
    the duality check and the single-matrix injectivity checks (including
    the G = I lemma) are out of scope and reported as SKIPPED; the triple
    (G, C, B) injectivity and the constant-term F-check still run.

    certified_depth additionally hunts (G, C, B) counterexamples on
    evaluation-certified states to that depth; this scales to depths where
    the variables themselves are too large to compute.
    """
    if not is_sign_skew_symmetric(B0):
        raise SignSkewSymmetryError("input exchange matrix is not sign-skew-symmetric")
    atlas = explore(B0, depth, max_seeds=max_seeds, check=check_assertions, workers=workers)
    if canary is not None:
        atlas = CANARY_MODES[canary](atlas)
    S = find_skew_symmetrizer(B0)

    results = [
        check_positivity(atlas),
        check_sign_coherence(atlas),
        check_separation(atlas),
        check_f_polynomials(atlas, require_max_monomial=S is not None),
    ]
    skipped_note = "requires a skew-symmetrizer; none exists for this input"
    if S is not None:
        results.append(check_duality(atlas, S))
        results.append(check_lemma_identity_seed(atlas))
        results.append(check_c_determines_seed(atlas))
        results.append(check_g_determines_seed(atlas))
    else:
        for name in ("duality", "lemma_identity_seed", "c_determines_seed",
                     "g_determines_seed"):
            results.append(CheckResult(name, SKIPPED, 0, note=skipped_note))
    results.append(check_triple_determines_seed(atlas))
    if certified_depth is not None:
        satlas = explore_states(B0, certified_depth, max_states=max_seeds)
        results.append(check_triple_certified(satlas))

    report = VerificationReport(
        instance={
            "n": B0.rows,
            "B0": B0.to_lists(),
            "symmetrizer": list(S.diag) if S else None,
            "canary": canary,
        },
        depth=depth,
        seed_count=len(atlas),
        variable_count=atlas.distinct_variables(),
        closed=atlas.closed,
        layer_sizes=list(atlas.layer_sizes),
        results=results,
    )
    return atlas, report

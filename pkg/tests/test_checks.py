import pytest

from clusterlab.checks import (
    CANARY_MODES,
    check_c_determines_seed,
    check_duality,
    check_f_polynomials,
    check_lemma_identity_seed,
    check_positivity,
    check_separation,
    check_sign_coherence,
    check_triple_certified,
    corrupt_flip_coefficient,
    corrupt_perturb_c,
    run_full_suite,
)
from clusterlab.explore import explore, explore_states
from clusterlab.intmat import IntMatrix, SignSkewSymmetryError, find_skew_symmetrizer

A2 = IntMatrix([[0, 1], [-1, 0]])
B2 = IntMatrix([[0, 1], [-2, 0]])
ACYCLIC = IntMatrix([[0, 1, 1], [-1, 0, 1], [-2, -3, 0]])

CHECK_NAMES = [
    "positivity", "sign_coherence", "separation", "f_polynomials",
    "duality", "lemma_identity_seed", "c_determines_seed",
    "g_determines_seed", "triple_determines_seed",
]


@pytest.fixture(scope="module")
def a2_atlas():
    return explore(A2, 12)


class TestPositiveRuns:
    def test_a2_all_pass(self, a2_atlas):
        _, rep = run_full_suite(A2, 12)
        assert [r.check for r in rep.results] == CHECK_NAMES
        assert all(r.status == "PASS" for r in rep.results)
        assert rep.passed and rep.failures == 0
        assert rep.seed_count == 10 and rep.variable_count == 5
        assert rep.exit_code() == 0
        assert rep.exit_code(require_closure=True) == 0

    def test_b2_duality_uses_weighted_symmetrizer(self, a2_atlas):
        atlas = explore(B2, 8)
        S = find_skew_symmetrizer(B2)
        assert S.diag == (2, 1)
        assert check_duality(atlas, S).status == "PASS"

    def test_every_check_reports_coverage(self, a2_atlas):
        for fn in (check_positivity, check_sign_coherence, check_separation,
                   check_c_determines_seed, check_lemma_identity_seed):
            assert fn(a2_atlas).seeds_covered == 10

    def test_wild_instance_skips_symmetrizer_checks(self):
        _, rep = run_full_suite(ACYCLIC, 3)
        by_name = {r.check: r for r in rep.results}
        for name in ("duality", "lemma_identity_seed", "c_determines_seed",
                     "g_determines_seed"):
            assert by_name[name].status == "SKIPPED"
        assert by_name["triple_determines_seed"].status == "PASS"
        assert by_name["f_polynomials"].note is not None
        assert rep.exit_code() == 0
        assert rep.exit_code(require_closure=True) == 3  # truncated

    def test_certified_row_appended_on_request(self):
        _, rep = run_full_suite(ACYCLIC, 3, certified_depth=5)
        last = rep.results[-1]
        assert last.check == "triple_determines_seed_certified"
        assert last.status == "PASS"
        assert last.seeds_covered == 75

    def test_rejects_non_sign_skew_symmetric(self):
        with pytest.raises(SignSkewSymmetryError):
            run_full_suite(IntMatrix([[0, 1], [1, 0]]), 3)


class TestNegativeControls:
    def test_flip_coefficient_breaks_positivity(self, a2_atlas):
        bad = corrupt_flip_coefficient(a2_atlas)
        res = check_positivity(bad)
        assert res.status == "FAIL"
        assert res.witness_path == list(bad.entries[1].path)
        assert res.counterexample["coefficient"] < 0

    def test_perturb_c_breaks_sign_coherence_and_duality(self, a2_atlas):
        bad = corrupt_perturb_c(a2_atlas)
        assert check_sign_coherence(bad).status == "FAIL"
        S = find_skew_symmetrizer(A2)
        assert check_duality(bad, S).status == "FAIL"

    def test_canary_modes_exit_two(self):
        for mode in CANARY_MODES:
            _, rep = run_full_suite(A2, 3, canary=mode)
            assert rep.failures > 0
            assert rep.exit_code() == 2
            failed = {r.check for r in rep.results if r.status == "FAIL"}
            if mode == "flip-coeff":
                assert "positivity" in failed
            else:
                assert "sign_coherence" in failed

    def test_f_polynomial_check_catches_missing_max_monomial(self, a2_atlas):
        bad = corrupt_flip_coefficient(a2_atlas)
        res = check_f_polynomials(bad, require_max_monomial=True)
        assert res.status == "FAIL"

    def test_certified_check_detects_planted_collision(self):
        satlas = explore_states(A2, 4)
        # plant: copy matrices of entry 1 onto entry 2's images
        a, b = satlas.entries[1], satlas.entries[2]
        from clusterlab.explore import StateEntry
        from clusterlab.modseed import CertifiedState
        forged = CertifiedState(a.state.ext, a.state.g, b.state.values)
        satlas.entries[2] = StateEntry(forged, b.path)
        res = check_triple_certified(satlas)
        assert res.status == "FAIL"
        assert res.counterexample["other_path"] == list(a.path)


class TestReportShape:
    def test_json_dict_schema(self):
        _, rep = run_full_suite(A2, 12)
        d = rep.to_json_dict()
        assert d["v"] == 1
        assert d["instance"]["B0"] == A2.to_lists()
        assert d["instance"]["symmetrizer"] == [1, 1]
        assert d["closure"] is True
        assert d["passed"] is True
        for row in d["checks"]:
            assert set(row) >= {"check", "status", "seeds_covered"}

    def test_failing_row_carries_witness(self):
        _, rep = run_full_suite(A2, 3, canary="flip-coeff")
        row = next(r for r in rep.to_json_dict()["checks"] if r["status"] == "FAIL")
        assert "witness_path" in row and "counterexample" in row

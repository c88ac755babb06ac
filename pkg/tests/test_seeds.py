import pytest
from hypothesis import given, settings, strategies as st

from clusterlab.intmat import IntMatrix, SignSkewSymmetryError
from clusterlab.laurent import parse
from clusterlab.seeds import (
    Seed,
    SeedInvariantError,
    f_polynomial_of,
    g_vector_of,
    hat_y,
    max_monomial_shape_ok,
    mutate_seed,
    new_principal_seed,
    principal_grading,
    reconstruct_separation,
)

A2 = IntMatrix([[0, 1], [-1, 0]])
A3 = IntMatrix([[0, 1, 0], [-1, 0, 1], [0, -1, 0]])
B2 = IntMatrix([[0, 1], [-2, 0]])


def seed_after(B0, path):
    s = new_principal_seed(B0)
    for k in path:
        s = mutate_seed(s, k)
    return s


class TestConstruction:
    def test_origin(self):
        s = new_principal_seed(A2)
        assert [str(v) for v in s.vars] == ["x1", "x2"]
        assert s.c_matrix() == IntMatrix.identity(2)
        assert s.g_matrix() == IntMatrix.identity(2)
        assert [str(f) for f in s.f_polynomials()] == ["1", "1"]

    def test_rejects_bad_matrix(self):
        with pytest.raises(SignSkewSymmetryError):
            new_principal_seed(IntMatrix([[0, 1], [1, 0]]))

    def test_grading(self):
        assert principal_grading(A2) == ((1, 0), (0, 1), (0, 1), (-1, 0))


class TestMutation:
    def test_a2_direction_1(self):
        s = seed_after(A2, [1])
        assert str(s.vars[0]) == "x1^-1*x2 + x1^-1*y1"
        assert str(s.vars[1]) == "x2"
        assert s.c_matrix().to_lists() == [[-1, 1], [0, 1]]
        assert s.g_matrix().to_lists() == [[-1, 0], [1, 1]]
        assert [str(f) for f in s.f_polynomials()] == ["y1 + 1", "1"]

    def test_a2_two_steps(self):
        s = seed_after(A2, [1, 2])
        assert str(s.vars[1]) == "x2^-1*y1*y2 + x1^-1 + x1^-1*x2^-1*y1"
        assert s.c_matrix().to_lists() == [[0, -1], [1, -1]]
        assert s.g_matrix().to_lists() == [[-1, -1], [1, 0]]
        assert str(s.f_polynomials()[1]) == "y1*y2 + y1 + 1"
        assert g_vector_of(s.vars[1], A2) == (-1, 0)

    def test_b2_weighted_exchange(self):
        s = seed_after(B2, [1])
        assert str(s.vars[0]) == "x1^-1*x2^2 + x1^-1*y1"

    def test_involution(self):
        origin = new_principal_seed(A2)
        assert mutate_seed(mutate_seed(origin, 1), 1) == origin

    @given(st.lists(st.integers(1, 3), min_size=0, max_size=5))
    @settings(max_examples=25, deadline=None)
    def test_path_then_reversed_path_returns(self, path):
        origin = new_principal_seed(A3)
        s = origin
        for k in path:
            s = mutate_seed(s, k)
        for k in reversed(path):
            s = mutate_seed(s, k)
        assert s == origin

    def test_direction_out_of_range(self):
        with pytest.raises(ValueError):
            mutate_seed(new_principal_seed(A2), 3)


class TestInvariantExtraction:
    def test_hat_y(self):
        s = new_principal_seed(A2)
        h1, h2 = hat_y(A2)
        assert str(h1) == "x2^-1*y1"
        assert str(h2) == "x1*y2"
        assert s.n == 2

    def test_f_polynomial_constant_term_guard(self):
        with pytest.raises(SeedInvariantError):
            f_polynomial_of(parse("y1", 2, 2))

    def test_separation_rebuilds_every_a2_variable(self):
        s = seed_after(A2, [1, 2, 1])
        for i, v in enumerate(s.vars):
            g = s.g_matrix().column(i)
            assert reconstruct_separation(g, f_polynomial_of(v), A2) == v

    def test_max_monomial_shape(self):
        assert max_monomial_shape_ok(parse("y1*y2 + y1 + 1", 2, 2))
        assert not max_monomial_shape_ok(parse("y1 + y2", 2, 2))
        assert not max_monomial_shape_ok(parse("2*y1*y2 + y1 + 1", 2, 2))


class TestSerialization:
    def test_fingerprint_stability(self):
        a = seed_after(A2, [1, 2])
        b = seed_after(A2, [1, 2])
        assert a.fingerprint() == b.fingerprint()
        assert a.fingerprint() != seed_after(A2, [2, 1]).fingerprint()

    def test_json_dict_round_trip_text(self):
        s = seed_after(A2, [1])
        d = s.to_json_dict()
        assert d["vars"] == ["x1^-1*x2 + x1^-1*y1", "x2"]
        assert d["n"] == 2

    def test_unchecked_seed_allows_corruption(self):
        s = seed_after(A2, [1])
        bad_vars = [-s.vars[0], s.vars[1]]
        corrupted = Seed(s.b0, bad_vars, s.ext, check=False)
        assert not corrupted.vars[0].is_nonnegative()
        with pytest.raises(SeedInvariantError):
            Seed(s.b0, bad_vars, s.ext, check=True)

"""Named-constant tests: closed radical forms in low dimension, internal
identities linking the constant families, and the comparison-table
reporting conventions."""

import math

import pytest

from capdisc.constants import (
    ConstantsRow,
    TABLE1_LATTICES,
    c_alpha_asymptotic,
    c_alpha_conjectured,
    c_asymptotic,
    c_conjectured,
    c_uniform,
    fig3_grid,
    sphere_surface_area,
    stolarsky_constant,
    table1,
)


class TestStolarskyConstant:
    def test_values(self):
        assert stolarsky_constant(2) == pytest.approx(0.25, rel=1e-15)
        assert stolarsky_constant(3) == pytest.approx(2.0 / (3.0 * math.pi), rel=1e-15)

    def test_monotone_decreasing(self):
        vals = [stolarsky_constant(d) for d in range(2, 51)]
        assert all(a > b for a, b in zip(vals, vals[1:]))
        assert vals[-1] > 0.0

    def test_domain(self):
        with pytest.raises(ValueError):
            stolarsky_constant(1)


class TestSurfaceArea:
    def test_values(self):
        assert sphere_surface_area(2) == pytest.approx(4.0 * math.pi, rel=1e-15)
        assert sphere_surface_area(3) == pytest.approx(2.0 * math.pi**2, rel=1e-15)


class TestLowerBoundConstants:
    def test_c2_star(self):
        assert c_uniform(2) == pytest.approx(1.0 / math.sqrt(6.0 * math.sqrt(6.0 * math.pi)), rel=1e-14)
        assert c_uniform(2) == pytest.approx(0.1959291678902056, abs=1e-15)

    def test_c2_star3(self):
        assert c_asymptotic(2) == pytest.approx(1.0 / math.sqrt(3.0 * math.sqrt(math.pi)), rel=1e-14)

    def test_c4_star3(self):
        want = 3.0 ** (3.0 / 8.0) / (2.0 ** (5.0 / 8.0) * math.sqrt(5.0) * math.pi**0.25)
        assert c_asymptotic(4) == pytest.approx(want, rel=1e-14)

    @pytest.mark.parametrize("d", [2, 4, 8, 24])
    def test_ordering_chain(self, d):
        # proven-for-all-N < liminf < conjectured-optimal
        assert c_uniform(d) < c_asymptotic(d) < c_conjectured(TABLE1_LATTICES[d])

    def test_star3_squared_identity(self):
        # c_d***^2 = C_d * c_{1,d}^asymp ties the two families together
        for d in range(2, 31):
            assert c_asymptotic(d) ** 2 == pytest.approx(
                stolarsky_constant(d) * c_alpha_asymptotic(1.0, d), rel=1e-14
            )


class TestAlphaFamilies:
    def test_alpha_zero_limits(self):
        assert c_alpha_asymptotic(0.0, 2) == 1.0
        assert c_alpha_conjectured(0.0, "A2") == 1.0
        assert c_alpha_asymptotic(1e-9, 4) == pytest.approx(1.0, abs=1e-6)

    def test_alpha_two_vanishing(self):
        # 1/Gamma(1 - alpha/2) kills the asymptotic constant at alpha -> 2
        assert c_alpha_asymptotic(1.999, 2) < 1e-2
        assert c_alpha_asymptotic(1.9999, 8) < 1e-3

    def test_domain(self):
        with pytest.raises(ValueError):
            c_alpha_asymptotic(2.0, 2)
        with pytest.raises(ValueError):
            c_alpha_conjectured(-0.1, "A2")

    def test_conjectured_above_asymptotic(self):
        for row in fig3_grid([0.25, 0.5, 1.0, 1.5, 1.9]):
            assert row["c_conj"] > row["c_asymp"], row
            assert 0.0 < row["rel_error"] < 0.5

    def test_leech_near_two(self):
        # the Leech gap approaches ~25% as alpha -> 2
        rows = fig3_grid([1.999], lattices=["Leech"])
        assert rows[0]["rel_error"] == pytest.approx(0.25, abs=0.05)

    def test_conjectured_alpha1_consistency(self):
        # c_conjectured is the sqrt of C_d times the alpha = 1 conjectured value
        for name in ("A2", "E8"):
            from capdisc.lattices import lattice

            lat = lattice(name)
            want = math.sqrt(stolarsky_constant(lat.dim) * c_alpha_conjectured(1.0, lat))
            assert c_conjectured(lat) == pytest.approx(want, rel=1e-14)


class TestTable1:
    def test_layout(self):
        rows = table1()
        assert [(r.d, r.lattice) for r in rows] == [
            (2, "A2"),
            (4, "D4"),
            (8, "E8"),
            (24, "Leech"),
        ]

    def test_printed_conventions(self):
        rows = table1()
        assert [r.diff_printed for r in rows] == ["0.013", "0.013", "0.012", "0.010"]
        assert [r.rel_error_percent for r in rows] == [3, 4, 5, 7]

    def test_row_invariants(self):
        for r in table1():
            assert r.diff > 0.0
            assert 0.0 < r.rel_error < 0.1
            assert r.c_conj == pytest.approx(r.c_star3 + r.diff, rel=1e-15)

    def test_row_properties(self):
        r = ConstantsRow(2, "A2", 0.5, 0.4)
        assert r.diff == pytest.approx(0.1)
        assert r.rel_error == pytest.approx(0.2)
        assert r.diff_printed == "0.099"  # truncation, not rounding
        assert r.rel_error_percent == 20

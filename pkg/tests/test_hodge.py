"""Hodge tables: closed formulas against the basis route, plus fixed values."""

from fractions import Fraction
from math import comb, gcd

import pytest

from hodgemoments.families import Family
from hodgemoments.hodge import (
    CoprimalityRequired,
    dims_airy,
    dims_kl,
    hodge_airy_closed,
    hodge_airy_from_basis,
    hodge_kl3_div3,
    hodge_kl_closed,
    hodge_kl_from_basis,
    hodge_v21,
    mixed_hodge_kl3,
    mixed_hodge_tilde_kl3,
    verify,
    verify_sweep,
)

GOLDEN_2_10 = (0, 0, 0, 1, 0, 1, 1, 1, 1, 2, 1, 1, 2, 1, 1, 1, 1, 0, 1, 0, 0, 0)


class TestKloostermanPure:
    def test_golden_tuple_closed(self):
        assert hodge_kl_closed(2, 10).anti_diagonal() == GOLDEN_2_10

    def test_golden_tuple_basis(self):
        assert hodge_kl_from_basis(2, 10).anti_diagonal() == GOLDEN_2_10

    def test_closed_rejects_non_coprime(self):
        with pytest.raises(CoprimalityRequired):
            hodge_kl_closed(2, 6)

    @pytest.mark.parametrize("n,k", [(1, 3), (1, 5), (2, 4), (2, 7), (3, 3), (4, 3)])
    def test_routes_agree_coprime(self, n, k):
        closed = hodge_kl_closed(n, k)
        basis = hodge_kl_from_basis(n, k)
        assert closed.levels == basis.levels
        assert closed.total() == dims_kl(n, k).dim_mid

    @pytest.mark.parametrize("k", [3, 6, 9])
    def test_routes_agree_tower(self, k):
        assert hodge_kl3_div3(k).levels == hodge_kl_from_basis(2, k).levels

    def test_symmetry_and_weight(self):
        dm = hodge_kl_closed(2, 5)
        assert dm.weight == 11
        for (p, q), h in dm.levels.items():
            assert p + q == 11
            assert dm.levels[(q, p)] == h

    def test_degenerate_2_3_is_all_zero(self):
        assert dims_kl(2, 3).dim_mid == 0
        closed = hodge_kl3_div3(3)
        basis = hodge_kl_from_basis(2, 3)
        assert closed.total() == 0
        assert basis.total() == 0
        assert closed.levels == basis.levels
        assert set(closed.nonzero()) == set()

    def test_known_2_6_diamond(self):
        dm = hodge_kl_from_basis(2, 6)
        assert dm.nonzero() == {(3, 10): 1, (5, 8): 1, (8, 5): 1, (10, 3): 1}


class TestDims:
    @pytest.mark.parametrize("n,k", [(1, 2), (2, 3), (2, 8), (3, 5), (4, 3)])
    def test_h1_from_ambient_count(self, n, k):
        from hodgemoments.cyclo import vanishing_tuple_count
        rep = dims_kl(n, k)
        ambient = comb(n + k, n)
        assert rep.dim_h1 == (ambient - vanishing_tuple_count(n + 1, k)) // (n + 1)
        assert rep.dim_mid == rep.dim_h1 - rep.soln_zero - rep.soln_infty
        assert rep.irregularity == rep.dim_h1

    @pytest.mark.parametrize("n,k", [(2, 3), (2, 6), (3, 4)])
    def test_tilde_is_m_times_z(self, n, k):
        z = dims_kl(n, k)
        t = dims_kl(n, k, Family.KL_TILDE_T)
        assert t.dim_h1 == (n + 1) * z.dim_h1

    def test_airy_examples(self):
        assert dims_airy(3, 2).dim_h1 == 2
        assert dims_airy(2, 5).dim_h1 == 3
        with pytest.raises(CoprimalityRequired):
            dims_airy(2, 4)

    def test_golden_dims(self):
        rep = dims_kl(2, 10)
        assert rep.dim_h1 == comb(12, 2) // 3
        assert rep.dim_mid == sum(GOLDEN_2_10)


class TestAiry:
    def test_3_2_fractional_levels(self):
        dm = hodge_airy_closed(3, 2)
        assert dm.levels == {
            (Fraction(5, 4), Fraction(7, 4)): 1,
            (Fraction(3, 2), Fraction(3, 2)): 0,
            (Fraction(7, 4), Fraction(5, 4)): 1,
        }
        assert dm.total() == dims_airy(3, 2).dim_h1

    @pytest.mark.parametrize("n,k", [(2, 3), (2, 5), (3, 2), (3, 4), (4, 3)])
    def test_routes_agree(self, n, k):
        assert hodge_airy_closed(n, k).levels == hodge_airy_from_basis(n, k).levels

    def test_integer_levels_render_as_ints(self):
        # when n + 1 divides the numerator the level collapses to an int
        dm = hodge_airy_closed(2, 5)
        kinds = {type(p) for p, q in dm.levels}
        assert kinds <= {int, Fraction}


class TestV21:
    def test_both_routes(self):
        closed = hodge_v21("closed")
        basis = hodge_v21("basis")
        assert closed.levels == basis.levels
        assert closed.nonzero() == {(4, 5): 1, (5, 4): 1}

    def test_unknown_route_rejected(self):
        with pytest.raises(ValueError):
            hodge_v21("guess")


class TestMixedTables:
    def test_tilde_k3_fixed_table(self):
        dm = mixed_hodge_tilde_kl3(3)
        assert dm.kind == "mixed"
        assert dm.nonzero() == {
            (1, 6): 1, (2, 5): 1, (3, 4): 1, (4, 3): 1, (4, 4): 1,
            (5, 2): 1, (5, 5): 1, (6, 1): 1, (7, 7): 1,
        }
        assert dm.total() == comb(5, 2) - 1

    def test_kl3_k6_fixed_table(self):
        dm = mixed_hodge_kl3(6)
        assert dm.nonzero() == {
            (3, 10): 1, (5, 8): 1, (7, 7): 2, (8, 5): 1, (9, 9): 1,
            (10, 3): 1, (11, 11): 1, (13, 13): 1,
        }
        assert dm.total() == dims_kl(2, 6).dim_h1

    @pytest.mark.parametrize("k", range(1, 13))
    def test_tilde_total(self, k):
        from hodgemoments.cyclo import vanishing_tuple_count
        assert mixed_hodge_tilde_kl3(k).total() == comb(k + 2, 2) - vanishing_tuple_count(3, k)

    @pytest.mark.parametrize("k", [3, 6, 9, 12])
    def test_kl3_total_and_diagonal(self, k):
        dm = mixed_hodge_kl3(k)
        assert dm.total() == dims_kl(2, k).dim_h1
        diag = sum(h for (p, q), h in dm.levels.items() if p == q)
        assert diag == 1 + k // 2 + 1

    def test_kl3_rejects_non_divisible(self):
        with pytest.raises(ValueError):
            mixed_hodge_kl3(4)


class TestVerify:
    @pytest.mark.parametrize("n,k", [(1, 2), (2, 3), (2, 4), (2, 6), (3, 2)])
    def test_reports_all_pass(self, n, k):
        report = verify(n, k)
        failed = [c.name for c in report.checks if not c.passed]
        assert not failed, failed
        assert report.all_pass

    def test_sweep_covers_grid(self):
        reports = verify_sweep(2, 4)
        assert {(r.n, r.k) for r in reports} == {(n, k) for n in (1, 2)
                                                 for k in (1, 2, 3, 4)}
        assert all(r.all_pass for r in reports)

    def test_check_names_stable(self):
        names = {c.name for c in verify(2, 4).checks}
        assert "counting-clauses" in names
        assert "route-kl" in names
        assert "step-series" in names

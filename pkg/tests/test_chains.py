"""Graded chain construction, the degree-1 differential, and basis extraction."""

import pytest

from hodgemoments.chains import (
    BadFamilyParams,
    build_chain,
    cohomology_basis,
    coker_slice_dims,
    corner_action,
    eigenvector_product,
    eta_power_vector,
    jordan_block_sizes,
    kernel_slice_dims,
    middle_cohomology_basis,
    shift_action,
    shift_coker_dims,
)
from hodgemoments.counting import (
    block_multiplicity,
    bottom_multiplicity,
    lattice_step,
)
from hodgemoments.cyclo import CycloInt, vanishing_tuple_count
from hodgemoments.families import Family
from hodgemoments.hodge import dims_kl
from hodgemoments.multiindex import weak_compositions, weight


def test_shift_action_leibniz_hand_cases():
    # v0 v1 v2 -> v1^2 v2 + v0 v2^2
    assert shift_action((1, 1, 1)) == {(0, 2, 1): 1, (1, 0, 2): 1}
    # v0^3 -> 3 v0^2 v1
    assert shift_action((3, 0, 0)) == {(2, 1, 0): 3}
    # the top slot has nowhere to go
    assert shift_action((0, 0, 2)) == {}


def test_corner_action_hand_cases():
    assert corner_action((0, 0, 2)) == {(1, 0, 1): 2}
    assert corner_action((1, 1, 0)) == {}


class TestChainConstruction:
    def test_rejects_bad_params(self):
        with pytest.raises(BadFamilyParams):
            build_chain(Family.KL_Z, 0, 3)
        with pytest.raises(BadFamilyParams):
            build_chain(Family.AIRY_Z, 1, 2)
        with pytest.raises(BadFamilyParams):
            build_chain(Family.V21, 2, 4)

    def test_slice_dims_2_2(self):
        chain = build_chain(Family.KL_Z, 2, 2)
        # degree d slice: monomials z^a v^I with 3a + wt(I) = d, |I| = 2
        assert [len(chain.slice_monomials(d)) for d in range(6)] == [1, 1, 2, 2, 2, 2]

    def test_theta_bar_raises_degree_by_one(self):
        chain = build_chain(Family.KL_Z, 2, 3)
        for d in range(5):
            tgt = set(chain.slice_index(d + 1))
            for mono in chain.slice_monomials(d):
                img = chain.theta_bar_mono(mono)
                assert set(img) <= tgt, (d, mono)

    def test_tilde_slices_stabilize(self):
        chain = build_chain(Family.KL_TILDE_T, 2, 3)
        sizes = [len(chain.slice_monomials(d)) for d in range(9)]
        # t-chart slices grow until every multi-index is reachable, then stop
        assert sizes == [1, 2, 4, 6, 8, 9, 10, 10, 10]

    def test_airy_chain_has_n_slots(self):
        chain = build_chain(Family.AIRY_Z, 3, 2)
        assert all(len(ix) == 3 for ix in chain.labels)


class TestEigenvectors:
    def test_product_is_homogeneous(self):
        for index in weak_compositions(3, 3):
            vec = eigenvector_product(2, 3, index)
            assert vec
            for (a, jj), c in vec.items():
                assert a + weight(jj) == 6
                assert isinstance(c, CycloInt)

    def test_single_factor_expansion(self):
        # f_0 with n = 1: v_0 zeta^0 t + v_1, all coefficients rational
        vec = eigenvector_product(1, 1, (1, 0))
        assert set(vec) == {(1, (1, 0)), (0, (0, 1))}

    def test_eta_power_is_integral(self):
        vec = eta_power_vector(3)
        assert all(isinstance(c, int) for c in vec.values())
        # eta = z^2 v0^3 + z v1^3 + v2^3 - 3 z v0 v1 v2 in the z chart reads
        # t^6 v0^3 + t^3 v1^3 + v2^3 - 3 t^3 v0 v1 v2 in t powers
        assert vec == {(6, (3, 0, 0)): 1, (3, (0, 3, 0)): 1,
                       (0, (0, 0, 3)): 1, (3, (1, 1, 1)): -3}

    def test_eta_power_needs_divisibility(self):
        with pytest.raises(BadFamilyParams):
            eta_power_vector(4)


def test_tower_slice_degrees():
    chain = build_chain(Family.KL_Z, 2, 3)
    assert chain.tower is not None
    assert chain.tower_slice(5) is None
    assert chain.tower_slice(6) is not None
    assert chain.tower_slice(7) is None
    assert chain.tower_slice(9) is not None  # z * eta


def test_no_tower_outside_divisible_case():
    assert build_chain(Family.KL_Z, 2, 4).tower is None
    assert build_chain(Family.KL_Z, 3, 3).tower is None


@pytest.mark.parametrize("n,k", [(1, 3), (2, 4), (2, 5), (3, 5)])
def test_coker_dims_match_steps_coprime(n, k):
    chain = build_chain(Family.KL_Z, n, k)
    dims = coker_slice_dims(chain)
    assert dims == [lattice_step(n, k, d) for d in range(len(dims))]
    assert sum(dims) == dims_kl(n, k).dim_h1


def test_kernel_dims_tilde():
    chain = build_chain(Family.KL_TILDE_T, 2, 3)
    dims = kernel_slice_dims(chain)
    dk = vanishing_tuple_count(3, 3)
    assert dims == [(dk if d >= 6 else 0) for d in range(len(dims))]


def test_kernel_dims_tilde_coprime_all_zero():
    chain = build_chain(Family.KL_TILDE_T, 2, 4)
    assert not any(kernel_slice_dims(chain))


class TestBases:
    def test_full_basis_coprime_matches_steps(self):
        chain = build_chain(Family.KL_Z, 2, 4)
        full = cohomology_basis(chain)
        assert full.cardinalities() == {d: lattice_step(2, 4, d)
                                        for d in range(7) if lattice_step(2, 4, d)}
        assert full.total() == dims_kl(2, 4).dim_h1

    def test_full_basis_tower_case(self):
        chain = build_chain(Family.KL_Z, 2, 6)
        full = cohomology_basis(chain)
        assert full.cardinalities() == {0: 1, 2: 1, 3: 1, 4: 1, 5: 1,
                                        6: 2, 8: 1, 9: 1}

    def test_middle_basis_drops_local_solutions(self):
        chain = build_chain(Family.KL_Z, 2, 4)
        rep = dims_kl(2, 4)
        mid = middle_cohomology_basis(chain)
        assert mid.total() == rep.dim_mid
        w = 2 * 4 + 1
        cards = mid.cardinalities()
        assert all(cards.get(d, 0) == cards.get(w - d, 0) for d in range(w + 1))

    def test_middle_basis_tower_case_low_half(self):
        chain = build_chain(Family.KL_Z, 2, 6)
        mid = middle_cohomology_basis(chain)
        cards = mid.cardinalities()
        assert cards == {3: 1, 5: 1, 8: 1, 9: 1}
        low = sum(c for d, c in cards.items() if d <= 6)
        assert 2 * low == mid.total()

    @pytest.mark.parametrize("n,k", [(2, 4), (2, 6), (3, 5)])
    def test_middle_vectors_are_homogeneous_off_z0(self, n, k):
        # every middle representative carries its nominal degree and avoids
        # the z^0 layer, where the local solutions at 0 live
        chain = build_chain(Family.KL_Z, n, k)
        mid = middle_cohomology_basis(chain)
        seen = 0
        for d, vecs in mid.vectors.items():
            for vec in vecs:
                assert vec, d
                seen += 1
                for (a, j), c in vec.items():
                    assert a > 0
                    assert chain.zweight * a + chain.weights[j] == d
        assert seen == mid.total()

    def test_tilde_basis_totals(self):
        chain = build_chain(Family.KL_TILDE_T, 2, 3)
        rep = dims_kl(2, 3, Family.KL_TILDE_T)
        full = cohomology_basis(chain)
        mid = middle_cohomology_basis(chain)
        assert full.total() == rep.dim_h1 == 9
        assert mid.total() == rep.dim_mid == 6
        assert full.cardinalities() == {0: 1, 1: 1, 2: 2, 3: 2, 4: 2, 5: 1}
        assert mid.cardinalities() == {1: 1, 2: 1, 3: 1, 4: 2, 5: 1}


class TestShiftOperator:
    @pytest.mark.parametrize("n,k", [(1, 4), (2, 3), (2, 5), (3, 3)])
    def test_jordan_blocks_match_multiplicities(self, n, k):
        expected = {}
        for d in range((n * k) // 2 + 1):
            q = block_multiplicity(n, k, d)
            if q:
                expected[n * k - 2 * d + 1] = expected.get(n * k - 2 * d + 1, 0) + q
        assert jordan_block_sizes(n, k) == expected

    @pytest.mark.parametrize("n,k", [(1, 5), (2, 4), (3, 2)])
    def test_coker_of_shift_counts_bottoms(self, n, k):
        got = shift_coker_dims(n, k)
        assert got == [bottom_multiplicity(n, k, d) for d in range(n * k + 1)]
        assert sum(got) == sum(jordan_block_sizes(n, k).values())

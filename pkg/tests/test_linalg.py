"""Sparse echelon machinery, cross-checked against sympy's dense routines."""

from fractions import Fraction

import sympy
from hypothesis import given, settings, strategies as st

from hodgemoments.linalg import (
    SparseEchelon,
    TrackedEchelon,
    coker_complement,
    kernel_basis,
    matrix_rank,
)


def sparse_rows(nrows=5, ncols=5, lo=-6, hi=6):
    entry = st.integers(lo, hi)
    row = st.lists(entry, min_size=ncols, max_size=ncols)
    return st.lists(row, min_size=0, max_size=nrows)


def to_sparse(dense_rows):
    return [{j: c for j, c in enumerate(row) if c} for row in dense_rows]


@settings(max_examples=150)
@given(sparse_rows())
def test_rank_matches_sympy(rows):
    vectors = to_sparse(rows)
    got = matrix_rank(vectors)
    if rows:
        expected = sympy.Matrix(rows).rank()
    else:
        expected = 0
    assert got == expected


@settings(max_examples=100)
@given(sparse_rows(nrows=6, ncols=4))
def test_kernel_combos_vanish(rows):
    vectors = to_sparse(rows)
    kers = kernel_basis(vectors)
    for combo in kers:
        acc = {}
        for i, c in combo.items():
            for j, v in vectors[i].items():
                acc[j] = acc.get(j, 0) + c * v
        assert all(val == 0 for val in acc.values())
    # rank-nullity over the row span
    assert len(kers) == len(vectors) - matrix_rank(vectors)


@settings(max_examples=100)
@given(sparse_rows(nrows=5, ncols=5))
def test_tracked_reduce_reconstructs(rows):
    vectors = to_sparse(rows)
    ech = TrackedEchelon()
    for i, v in enumerate(vectors):
        ech.add_row(v, i)
    probe = {0: Fraction(3), 2: Fraction(-1), 4: Fraction(2)}
    residual, combo = ech.reduce(probe)
    acc = dict(residual)
    for tag, c in combo.items():
        for j, v in vectors[tag].items():
            acc[j] = acc.get(j, 0) + c * v
    acc = {j: v for j, v in acc.items() if v}
    assert acc == {j: v for j, v in probe.items() if v}
    # residual avoids every pivot column
    assert not set(residual) & set(ech.pivot_cols)


def test_coker_complement_picks_unreached_columns():
    # span of e0 + e1 and e2 inside Q^4: complement is columns 1 and 3
    vectors = [{0: 1, 1: 1}, {2: 5}]
    assert coker_complement(vectors, 4) == [1, 3]


def test_coker_complement_full_rank_is_empty():
    vectors = [{0: 1}, {1: 2}, {2: -1}]
    assert coker_complement(vectors, 3) == []


@settings(max_examples=100)
@given(sparse_rows(nrows=5, ncols=4))
def test_coker_complement_size(rows):
    vectors = to_sparse(rows)
    comp = coker_complement(vectors, 4)
    assert len(comp) == 4 - matrix_rank(vectors)


class TestSparseEchelon:
    def test_duplicate_row_is_dependent(self):
        ech = SparseEchelon()
        assert ech.add_row({0: 2, 1: 3})
        assert not ech.add_row({0: 4, 1: 6})
        assert ech.rank == 1

    def test_zero_row_never_adds(self):
        ech = SparseEchelon()
        assert not ech.add_row({})
        assert ech.rank == 0

    def test_copy_is_independent(self):
        ech = SparseEchelon()
        ech.add_row({0: 1})
        dup = ech.copy()
        dup.add_row({1: 1})
        assert ech.rank == 1
        assert dup.rank == 2

"""Sparse exact linear algebra over Z and Q.

Vectors are dicts mapping column index to a nonzero value.  The workhorse is
a forward echelon with fraction-free updates: integer rows are combined by
cross-multiplication and stripped by their gcd, so no true division happens
until a row is finally normalized.  Fraction entries are accepted too (the
same elimination runs field-style); only a handful of small matrices need
that path.

There is no back-substitution: stored rows keep their pivot as the smallest
column of their support, which is all that rank, pivot-set and membership
questions require.
"""

import heapq
from fractions import Fraction
from math import gcd


def _strip_int_row(vec, pivot):
    g = 0
    for v in vec.values():
        g = gcd(g, v)
        if g == 1:
            break
    if g > 1:
        for c in list(vec):
            vec[c] //= g
    if vec[pivot] < 0:
        for c in list(vec):
            vec[c] = -vec[c]


class SparseEchelon:
    """Incremental echelon of sparse rows; tracks rank and pivot columns."""

    def __init__(self):
        self.rows = {}  # pivot column -> row dict

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def pivot_cols(self):
        return self.rows.keys()

    def copy(self) -> "SparseEchelon":
        dup = SparseEchelon()
        dup.rows = {p: dict(r) for p, r in self.rows.items()}
        return dup

    def _eliminate(self, vec):
        """Remove every pivot column from vec's support, in ascending order."""
        heap = list(vec)
        heapq.heapify(heap)
        seen = set()
        while heap:
            c = heapq.heappop(heap)
            if c in seen or c not in vec or not vec[c]:
                continue
            seen.add(c)
            row = self.rows.get(c)
            if row is None:
                continue
            a = vec[c]
            b = row[c]
            if isinstance(a, int) and isinstance(b, int):
                g = gcd(a, b)
                sv, sr = b // g, -(a // g)
            else:
                sv, sr = 1, -Fraction(a) / Fraction(b)
            if sv != 1:
                for cc in list(vec):
                    vec[cc] *= sv
            for cc, v in row.items():
                nv = vec.get(cc, 0) + sr * v
                if nv:
                    if cc not in vec and cc not in seen:
                        heapq.heappush(heap, cc)
                    vec[cc] = nv
                elif cc in vec:
                    del vec[cc]
        return vec

    def add_row(self, vec) -> bool:
        """Insert a copy of vec; True if it was independent of current rows."""
        vec = {c: v for c, v in vec.items() if v}
        self._eliminate(vec)
        if not vec:
            return False
        pivot = min(vec)
        if all(isinstance(v, int) for v in vec.values()):
            _strip_int_row(vec, pivot)
        else:
            lead = vec[pivot]
            for c in list(vec):
                vec[c] = Fraction(vec[c]) / lead
        self.rows[pivot] = vec
        return True

    def contains(self, vec) -> bool:
        """Membership of vec in the row span (no insertion)."""
        probe = {c: v for c, v in vec.items() if v}
        self._eliminate(probe)
        return not probe


class TrackedEchelon:
    """Echelon over Q that remembers how each row combines the inputs.

    reduce(vec) returns (residual, combo) with
        vec == residual + sum combo[tag] * original_row[tag]
    and residual supported away from all pivot columns.
    """

    def __init__(self):
        self.rows = {}  # pivot -> (row dict, combo dict), row[pivot] == 1

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def pivot_cols(self):
        return self.rows.keys()

    def reduce(self, vec):
        out = {c: Fraction(v) for c, v in vec.items() if v}
        combo = {}
        heap = list(out)
        heapq.heapify(heap)
        seen = set()
        while heap:
            c = heapq.heappop(heap)
            if c in seen or c not in out or not out[c]:
                continue
            seen.add(c)
            hit = self.rows.get(c)
            if hit is None:
                continue
            row, rcombo = hit
            scale = out[c]  # row is pivot-normalized
            for cc, v in row.items():
                nv = out.get(cc, 0) - scale * v
                if nv:
                    if cc not in out and cc not in seen:
                        heapq.heappush(heap, cc)
                    out[cc] = nv
                elif cc in out:
                    del out[cc]
            for t, v in rcombo.items():
                nv = combo.get(t, 0) + scale * v
                if nv:
                    combo[t] = nv
                elif t in combo:
                    del combo[t]
        return out, combo

    def add_row(self, vec, tag):
        """Insert vec under tag; returns None, or a kernel combo if dependent.

        A kernel combo is a dict of tags whose weighted sum of original rows
        vanishes (the coefficient of tag itself is 1).
        """
        residual, combo = self.reduce(vec)
        if not residual:
            kernel = {t: -v for t, v in combo.items()}
            kernel[tag] = Fraction(1)
            return kernel
        pivot = min(residual)
        lead = residual[pivot]
        row = {c: v / lead for c, v in residual.items()}
        stored_combo = {t: -v / lead for t, v in combo.items()}
        stored_combo[tag] = Fraction(1) / lead
        self.rows[pivot] = (row, stored_combo)
        return None


def matrix_rank(vectors) -> int:
    ech = SparseEchelon()
    n = 0
    for v in vectors:
        if ech.add_row(v):
            n += 1
    return n


def kernel_basis(vectors) -> list[dict]:
    """Basis of combinations of the given vectors summing to zero.

    Input vectors are indexed 0..len-1; each kernel element is a dict
    index -> Fraction.
    """
    ech = TrackedEchelon()
    out = []
    for i, v in enumerate(vectors):
        ker = ech.add_row(v, i)
        if ker is not None:
            out.append(ker)
    return out


def coker_complement(vectors, ncols: int) -> list[int]:
    """Indices of standard basis vectors spanning the cokernel of the span.

    Reduction is left to right in column order, so the returned monomial
    indices are the ones no pivot reaches.
    """
    ech = SparseEchelon()
    for v in vectors:
        ech.add_row(v)
    piv = ech.pivot_cols
    return [c for c in range(ncols) if c not in piv]

"""The 15-dimensional SL(3) representation inside the fourth tensor power.

The space is cut from (C^3)^(x4) by a hook-shape Young symmetrizer:
symmetrize over the row group (all permutations of slots 0,1,2) and
antisymmetrize over the column group (identity and the swap of slots 0,3).
The raw sum S of signed permutation operators satisfies S^2 = c S for a
scalar c; the projector is S / c.  Idempotency, the rank, and commutation
with the shift and corner derivations are all asserted exactly at build
time, so a wrong normalization cannot slip through.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product

from .families import Family
from .chains import GradedChain
from .linalg import SparseEchelon, TrackedEchelon

EXPECTED_DIM = 15


class DimensionMismatch(ArithmeticError):
    """The projected space does not have the expected dimension or grading."""


def _tensor_basis():
    basis = list(product(range(3), repeat=4))
    return basis, {t: i for i, t in enumerate(basis)}


def _apply_perm(perm, tup):
    out = [0] * len(tup)
    for s, v in enumerate(tup):
        out[perm[s]] = v
    return tuple(out)


def _compose(g, h):
    # apply h first, then g
    return tuple(g[h[s]] for s in range(len(g)))


def _signed_group_elements():
    rows = [p + (3,) for p in permutations((0, 1, 2))]
    cols = [((0, 1, 2, 3), 1), ((3, 1, 2, 0), -1)]
    for g in rows:
        for h, sign in cols:
            yield _compose(g, h), sign


def _tensor_shift_columns(basis, pos):
    cols = []
    for t in basis:
        col = {}
        for s in range(4):
            if t[s] < 2:
                u = t[:s] + (t[s] + 1,) + t[s + 1:]
                col[pos[u]] = col.get(pos[u], 0) + 1
        cols.append(col)
    return cols


def _tensor_corner_columns(basis, pos):
    cols = []
    for t in basis:
        col = {}
        for s in range(4):
            if t[s] == 2:
                u = t[:s] + (0,) + t[s + 1:]
                col[pos[u]] = col.get(pos[u], 0) + 1
        cols.append(col)
    return cols


def _apply_columns(cols, vec):
    out = {}
    for j, c in vec.items():
        for i, e in cols[j].items():
            nv = out.get(i, 0) + c * e
            if nv:
                out[i] = nv
            elif i in out:
                del out[i]
    return out


@dataclass(frozen=True)
class ProjectedSpace:
    """Image of the symmetrizer: graded basis and induced derivations."""

    dim: int
    weights: tuple[int, ...]
    basis: tuple          # per basis vector: {tensor index: Fraction}
    nmat: tuple           # induced shift columns over the projected basis
    emat: tuple           # induced corner columns
    projector: tuple      # 81 columns, {row: Fraction}
    idem_scalar: int      # S^2 = idem_scalar * S for the raw signed sum S


@lru_cache(maxsize=None)
def young_projector() -> ProjectedSpace:
    basis, pos = _tensor_basis()
    dim = len(basis)
    raw = [dict() for _ in range(dim)]  # columns of S
    for perm, sign in _signed_group_elements():
        for j, t in enumerate(basis):
            i = pos[_apply_perm(perm, t)]
            raw[j][i] = raw[j].get(i, 0) + sign
    raw = [{i: c for i, c in col.items() if c} for col in raw]
    # S^2 must be an exact scalar multiple of S
    square = [_apply_columns(raw, col) for col in raw]
    scalar = None
    for j in range(dim):
        for i, c in raw[j].items():
            if scalar is None:
                scalar = Fraction(square[j].get(i, 0), c)
            elif Fraction(square[j].get(i, 0), c) != scalar:
                raise DimensionMismatch("signed permutation sum is not quasi-idempotent")
        if square[j].keys() != raw[j].keys():
            raise DimensionMismatch("signed permutation sum is not quasi-idempotent")
    if scalar is None or scalar <= 0 or scalar.denominator != 1:
        raise DimensionMismatch(f"unusable idempotency scalar {scalar}")
    scalar = int(scalar)
    proj = [{i: Fraction(c, scalar) for i, c in col.items()} for col in raw]

    shift_cols = _tensor_shift_columns(basis, pos)
    corner_cols = _tensor_corner_columns(basis, pos)
    for name, cols in (("shift", shift_cols), ("corner", corner_cols)):
        for j in range(dim):
            left = _apply_columns(cols, proj[j])
            right = _apply_columns(proj, cols[j])
            if left != right:
                raise DimensionMismatch(f"projector does not commute with the {name}")

    # graded image basis: independent projector columns, weight by weight
    wt = [sum(t) for t in basis]
    chosen = []
    solvers = {}
    for w in range(9):
        solver = TrackedEchelon()
        solvers[w] = solver
        for j in range(dim):
            if wt[j] != w or not proj[j]:
                continue
            if any(wt[i] != w for i in proj[j]):
                raise DimensionMismatch("projector failed to preserve the grading")
            tag = len(chosen)
            if solver.add_row(proj[j], tag) is None:
                chosen.append((w, dict(proj[j])))
    if len(chosen) != EXPECTED_DIM:
        raise DimensionMismatch(f"projected space has dimension {len(chosen)},"
                                f" expected {EXPECTED_DIM}")

    def induced(cols, delta):
        out = []
        for i, (w, vec) in enumerate(chosen):
            img = _apply_columns(cols, vec)
            if not img:
                out.append({})
                continue
            target = solvers.get(w + delta)
            if target is None:
                raise DimensionMismatch("derivation image leaves the graded range")
            residual, combo = target.reduce(img)
            if residual:
                raise DimensionMismatch("derivation image leaves the projected space")
            out.append({t: c for t, c in combo.items() if c})
        return out

    nmat = induced(shift_cols, +1)
    emat = induced(corner_cols, -2)
    return ProjectedSpace(
        dim=EXPECTED_DIM,
        weights=tuple(w for w, _ in chosen),
        basis=tuple({i: c for i, c in vec.items()} for _, vec in chosen),
        nmat=tuple(nmat),
        emat=tuple(emat),
        projector=tuple(proj),
        idem_scalar=scalar,
    )


def v21_jordan_blocks() -> dict[int, int]:
    """Jordan type of the induced shift on the projected space: size -> count."""
    ps = young_projector()
    base = [dict(col) for col in ps.nmat]
    ranks = [ps.dim]
    cur = base
    while True:
        ech = SparseEchelon()
        for col in cur:
            ech.add_row(dict(col))
        ranks.append(ech.rank)
        if ech.rank == 0:
            break
        cur = [_apply_columns(base, col) for col in cur]
    blocks = {}
    for s in range(1, len(ranks)):
        nxt = ranks[s + 1] if s + 1 < len(ranks) else 0
        count = (ranks[s - 1] - ranks[s]) - (ranks[s] - nxt)
        if count:
            blocks[s] = count
    return blocks


def v21_chain(max_degree: int = 11) -> GradedChain:
    """The graded chain over the projected 15-dimensional space."""
    ps = young_projector()
    return GradedChain(
        family=Family.V21,
        n=2,
        k=4,
        max_degree=max_degree,
        zweight=3,
        ezshift=1,
        scale=1,
        labels=list(range(ps.dim)),
        weights=list(ps.weights),
        nmat=[dict(c) for c in ps.nmat],
        emat=[dict(c) for c in ps.emat],
        tower=None,
    )

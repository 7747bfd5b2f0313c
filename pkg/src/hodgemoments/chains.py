"""Graded two-term complexes and their cohomology bases.

A chain is the module C[z] (x) V for a weight-graded space V carrying two
derivations: the shift N (weight +1) and the corner E (weight -(dim-1) on
multi-indices).  The degree of z^a v is zweight * a + wt(v), and the
degree-raising map is

    theta_bar = scale * (N + z^{ezshift} E),

which is homogeneous of degree +1 in every family:

    KL_Z        zweight n+1, ezshift 1,   scale 1
    KL_TILDE_T  zweight 1,   ezshift n+1, scale n+1
    AIRY_Z      zweight n,   ezshift 1,   scale 1
    V21         zweight 3,   ezshift 1,   scale 1   (projected 15-dim V)

Cohomology in each degree d is the cokernel of theta_bar from the degree
d-1 slice, further divided by the power tower z^* eta when n = 2 and 3 | k.
The "middle" basis removes the directions that extend to solutions at 0
(complement of the shift image in the z^0 layer) and, in the tower case,
the z^{k/3} v_0^k line in degree k.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, gcd

from .cyclo import CycloInt
from .families import Family
from .linalg import SparseEchelon, TrackedEchelon
from .multiindex import MultiIndex, weak_compositions, weight

Mono = tuple[int, int]  # (z_power, basis index into the graded space V)


class BadFamilyParams(ValueError):
    """The (family, n, k) combination does not define this construction."""


class DegenerateReduction(ArithmeticError):
    """The z^0 reduction failed to reproduce its input; arithmetic bug."""


def shift_action(index: MultiIndex) -> dict[MultiIndex, int]:
    """Leibniz action of the shift v_i -> v_{i+1} on a monomial v^I."""
    out = {}
    m = len(index)
    for i in range(m - 1):
        if index[i]:
            tgt = list(index)
            tgt[i] -= 1
            tgt[i + 1] += 1
            out[tuple(tgt)] = index[i]
    return out


def corner_action(index: MultiIndex) -> dict[MultiIndex, int]:
    """Leibniz action of the corner v_{m-1} -> v_0 on a monomial v^I."""
    m = len(index)
    if not index[m - 1]:
        return {}
    tgt = list(index)
    tgt[m - 1] -= 1
    tgt[0] += 1
    return {tuple(tgt): index[m - 1]}


@dataclass
class GradedChain:
    family: Family
    n: int
    k: int
    max_degree: int
    zweight: int
    ezshift: int
    scale: int
    labels: list            # per basis index: a multi-index, or an int for V21
    weights: list[int]
    nmat: list[dict]        # column j -> {i: coeff}, raises weight by 1
    emat: list[dict]        # column j -> {i: coeff}
    tower: dict | None      # {(z_power, j): int} for the eta power, else None
    tower_degree: int = 0
    _slices: dict = field(default_factory=dict, repr=False)
    _by_weight: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        by_w = {}
        for j, w in enumerate(self.weights):
            by_w.setdefault(w, []).append(j)
        self._by_weight = by_w

    def slice_monomials(self, d: int) -> list[Mono]:
        """Basis (z_power, j) of the degree-d slice, z_power ascending."""
        if d < 0:
            return []
        if d not in self._slices:
            monos = []
            for a in range(d // self.zweight + 1):
                w = d - self.zweight * a
                for j in self._by_weight.get(w, ()):
                    monos.append((a, j))
            self._slices[d] = monos
        return self._slices[d]

    def slice_index(self, d: int) -> dict[Mono, int]:
        return {mono: i for i, mono in enumerate(self.slice_monomials(d))}

    def theta_bar_mono(self, mono: Mono) -> dict[Mono, int]:
        """theta_bar of a chain monomial, as chain monomials (degree +1)."""
        a, j = mono
        out = {}
        for i, c in self.nmat[j].items():
            key = (a, i)
            out[key] = out.get(key, 0) + self.scale * c
        for i, c in self.emat[j].items():
            key = (a + self.ezshift, i)
            out[key] = out.get(key, 0) + self.scale * c
        return out

    def theta_bar_rows(self, d: int):
        """Images of the degree-d slice, as index vectors in the d+1 slice."""
        tgt = self.slice_index(d + 1)
        rows = []
        for mono in self.slice_monomials(d):
            img = self.theta_bar_mono(mono)
            rows.append({tgt[t]: c for t, c in img.items() if c})
        return rows

    def tower_slice(self, d: int) -> dict[Mono, int] | None:
        """The tower element of degree d, if the family carries one."""
        if self.tower is None or d < self.tower_degree:
            return None
        excess = d - self.tower_degree
        if excess % self.zweight:
            return None
        r = excess // self.zweight
        return {(a + r, j): c for (a, j), c in self.tower.items()}


def _coprimality_ok(family: Family, n: int, k: int) -> bool:
    if family is Family.AIRY_Z:
        return gcd(k, n) == 1
    if family in (Family.KL_Z, Family.KL_TILDE_T):
        return gcd(k, n + 1) == 1 or (n == 2 and k % 3 == 0)
    return True


def _has_tower(family: Family, n: int, k: int) -> bool:
    return family in (Family.KL_Z, Family.KL_TILDE_T) and n == 2 and k % 3 == 0


def eigenvector_product(n: int, k: int, index: MultiIndex) -> dict:
    """Product of twisted eigenvectors f_i = sum_j zeta^{i(n-j)} t^{n-j} v_j.

    Returns {(t_power, J): CycloInt} over multi-indices J with |J| = |index|;
    every monomial satisfies t_power + wt(J) = n * |index|.
    """
    m = n + 1
    if len(index) != m:
        raise ValueError(f"expected {m} slots")
    if sum(index) != k:
        raise ValueError("index does not sum to k")
    acc = {(0, (0,) * m): CycloInt.one(m)}
    for i in range(m):
        for _ in range(index[i]):
            nxt = {}
            for (a, jj), c in acc.items():
                for slot in range(m):
                    tgt = list(jj)
                    tgt[slot] += 1
                    key = (a + n - slot, tuple(tgt))
                    add = c * CycloInt.zeta_power(m, i * (n - slot))
                    nxt[key] = nxt[key] + add if key in nxt else add
            acc = nxt
    return {key: c for key, c in acc.items() if c}


def eta_power_vector(k: int) -> dict:
    """eta^{k/3} for n = 2, 3 | k, in t-coordinates: {(t_power, J): int}.

    The cyclotomic coefficients collapse to plain integers; anything else is
    an arithmetic bug, not an input condition.
    """
    if k % 3:
        raise BadFamilyParams("the tower exists only when 3 divides k")
    ell = k // 3
    vec = eigenvector_product(2, k, (ell, ell, ell))
    out = {}
    for key, c in vec.items():
        if not c.is_rational():
            raise ArithmeticError(f"tower coefficient at {key} is irrational: {c}")
        out[key] = c.rational_part()
    return out


def build_chain(family: Family, n: int, k: int, max_degree: int | None = None) -> GradedChain:
    """Assemble the chain for a symmetric-power family.

    max_degree defaults to n*k + 2, one degree past the top of cohomology,
    so downstream basis extraction can verify the support closes off.
    """
    if family is Family.V21:
        raise BadFamilyParams("the V21 chain is built by weyl.v21_chain")
    if family not in (Family.KL_Z, Family.KL_TILDE_T, Family.AIRY_Z):
        raise BadFamilyParams(f"unknown family {family}")
    if n < 1 or k < 1:
        raise BadFamilyParams("n and k must be positive")
    if family is Family.AIRY_Z and n < 2:
        raise BadFamilyParams("the Airy family needs n >= 2")
    m = n + 1 if family in (Family.KL_Z, Family.KL_TILDE_T) else n
    if max_degree is None:
        max_degree = n * k + 2
    labels = sorted(weak_compositions(k, m))
    weights = [weight(ix) for ix in labels]
    pos = {ix: j for j, ix in enumerate(labels)}
    nmat = []
    emat = []
    for ix in labels:
        nmat.append({pos[t]: c for t, c in shift_action(ix).items()})
        emat.append({pos[t]: c for t, c in corner_action(ix).items()})
    if family is Family.KL_Z:
        zweight, ezshift, scale = n + 1, 1, 1
    elif family is Family.KL_TILDE_T:
        zweight, ezshift, scale = 1, n + 1, n + 1
    else:
        zweight, ezshift, scale = n, 1, 1
    tower = None
    tower_degree = 0
    if _has_tower(family, n, k):
        raw = eta_power_vector(k)
        tower = {}
        for (a, jj), c in raw.items():
            if family is Family.KL_Z:
                if a % 3:
                    raise ArithmeticError("tower t-power not divisible by the chart weight")
                tower[(a // 3, pos[jj])] = c
            else:
                tower[(a, pos[jj])] = c
        tower_degree = 2 * k
    chain = GradedChain(family, n, k, max_degree, zweight, ezshift, scale,
                        labels, weights, nmat, emat, tower, tower_degree)
    if family is Family.KL_TILDE_T and max_degree >= n * k:
        stable = comb(n + k, n)
        if len(chain.slice_monomials(max_degree)) != stable:
            raise RuntimeError("tilde slices failed to stabilize; bad construction")
    return chain


def coker_slice_dims(chain: GradedChain) -> list[int]:
    """dim coker(theta_bar: slice d-1 -> slice d) for d = 0..max_degree."""
    out = []
    for d in range(chain.max_degree + 1):
        ech = SparseEchelon()
        rank = 0
        for row in chain.theta_bar_rows(d - 1) if d else []:
            if ech.add_row(row):
                rank += 1
        out.append(len(chain.slice_monomials(d)) - rank)
    return out


def kernel_slice_dims(chain: GradedChain) -> list[int]:
    """dim ker(theta_bar restricted to slice d) for d = 0..max_degree-1."""
    out = []
    for d in range(chain.max_degree):
        ech = SparseEchelon()
        null = 0
        for row in chain.theta_bar_rows(d):
            if not ech.add_row(row):
                null += 1
        out.append(null)
    return out


@dataclass(frozen=True)
class BasisSet:
    """Cohomology basis data: per-degree representative vectors.

    kind is "full" or "mid".  Vectors map chain monomials (z_power, j) to
    integer coefficients; they are echelon representatives, canonical only
    up to the stated quotients, so tests should rely on cardinalities,
    degrees and the stated support properties rather than exact entries.
    """

    family: Family
    n: int
    k: int
    kind: str
    vectors: dict  # degree -> tuple of {Mono: int}

    def cardinalities(self) -> dict[int, int]:
        return {d: len(v) for d, v in self.vectors.items() if v}

    def total(self) -> int:
        return sum(len(v) for v in self.vectors.values())


def _degree_quotient(chain: GradedChain, d: int):
    """Echelon of im(theta_bar) + tower at degree d, and the leftover monos."""
    ech = SparseEchelon()
    for row in (chain.theta_bar_rows(d - 1) if d else []):
        ech.add_row(row)
    tow = chain.tower_slice(d)
    if tow is not None:
        idx = chain.slice_index(d)
        ech.add_row({idx[mono]: c for mono, c in tow.items()})
    monos = chain.slice_monomials(d)
    piv = ech.pivot_cols
    reps = [monos[i] for i in range(len(monos)) if i not in piv]
    return ech, reps


def _check_support_closed(chain: GradedChain, counts: dict[int, int], what: str):
    top = chain.max_degree
    if counts.get(top, 0):
        raise RuntimeError(
            f"{what} basis still nonzero in degree {top}; raise max_degree "
            f"(support should end by degree {chain.n * chain.k + 1})")


def cohomology_basis(chain: GradedChain) -> BasisSet:
    """Monomial representatives of coker(theta_bar) (+ tower quotient) per degree."""
    if not _coprimality_ok(chain.family, chain.n, chain.k):
        raise BadFamilyParams("cohomology basis needs coprimality or n=2 with 3|k")
    vectors = {}
    for d in range(chain.max_degree + 1):
        _, reps = _degree_quotient(chain, d)
        vectors[d] = tuple({mono: 1} for mono in reps)
    out = BasisSet(chain.family, chain.n, chain.k, "full", vectors)
    _check_support_closed(chain, out.cardinalities(), "full")
    return out


def _shift_solver(chain: GradedChain, d: int):
    """Tracked echelon of N applied to the weight d-1 layer of V."""
    solver = TrackedEchelon()
    for j in chain._by_weight.get(d - 1, ()):
        col = chain.nmat[j]
        if col:
            solver.add_row(col, j)
        else:
            # zero column: j is in the kernel, contributes nothing to the image
            pass
    return solver


def middle_cohomology_basis(chain: GradedChain) -> BasisSet:
    """The mid-part basis: as the full basis, minus the directions that carry
    local solutions.

    Per degree d the modulus starts from the full-basis quotient (image of
    theta_bar plus tower), then adds the z^0 embeddings of the shift-cokernel
    complement (weight-d monomials of V left over by N), and when 3 | k the
    z^{k/3} v_0^k line in degree k.  Selected representatives are rewritten
    to have zero z^0 component by pushing their z^0 part through N.
    """
    if chain.family is Family.AIRY_Z:
        raise BadFamilyParams("middle equals full cohomology for the Airy family;"
                              " use cohomology_basis")
    if chain.family in (Family.KL_Z, Family.KL_TILDE_T):
        if not _coprimality_ok(chain.family, chain.n, chain.k):
            raise BadFamilyParams("middle basis needs coprimality or n=2 with 3|k")
    has_tower = chain.tower is not None
    vectors = {}
    for d in range(chain.max_degree + 1):
        ech, reps = _degree_quotient(chain, d)
        idx = chain.slice_index(d)
        solver = _shift_solver(chain, d)
        piv = solver.pivot_cols
        for j in chain._by_weight.get(d, ()):
            if j not in piv:
                ech.add_row({idx[(0, j)]: 1})
        line_mono = None
        if has_tower and d == chain.k:
            a_line = chain.k // chain.zweight if chain.family is Family.KL_Z else chain.k
            j_line = chain.labels.index((chain.k,) + (0,) * (len(chain.labels[0]) - 1))
            line_mono = (a_line, j_line)
            ech.add_row({idx[line_mono]: 1})
        chosen = []
        for mono in reps:
            if not ech.add_row({idx[mono]: 1}):
                continue
            a, j = mono
            if a > 0:
                vec = {mono: Fraction(1)}
            else:
                residual, combo = solver.reduce({j: 1})
                _check_reduction(chain, j, residual, combo)
                vec = {}
                for src, c in combo.items():
                    for i, e in chain.emat[src].items():
                        key = (chain.ezshift, i)
                        nv = vec.get(key, 0) - chain.scale * c * e
                        if nv:
                            vec[key] = nv
                        elif key in vec:
                            del vec[key]
            if line_mono is not None and line_mono in vec:
                del vec[line_mono]
            chosen.append(_primitive(vec))
        vectors[d] = tuple(chosen)
    out = BasisSet(chain.family, chain.n, chain.k, "mid", vectors)
    _check_support_closed(chain, out.cardinalities(), "mid")
    return out


def _check_reduction(chain: GradedChain, j: int, residual, combo):
    """Verify v_j == residual + N(sum combo) exactly."""
    recon = dict(residual)
    for src, c in combo.items():
        for i, e in chain.nmat[src].items():
            nv = recon.get(i, 0) + c * e
            if nv:
                recon[i] = nv
            elif i in recon:
                del recon[i]
    if recon != {j: Fraction(1)}:
        raise DegenerateReduction(
            f"z^0 reduction of basis vector {chain.labels[j]} failed to reconstruct")


def _primitive(vec: dict) -> dict:
    """Clear denominators, strip the gcd, sign by the smallest monomial."""
    if not vec:
        return {}
    denom = 1
    for v in vec.values():
        f = Fraction(v)
        denom = denom * f.denominator // gcd(denom, f.denominator)
    ints = {mono: int(Fraction(v) * denom) for mono, v in vec.items()}
    g = 0
    for v in ints.values():
        g = gcd(g, v)
    if g > 1:
        ints = {mono: v // g for mono, v in ints.items()}
    if ints[min(ints)] < 0:
        ints = {mono: -v for mono, v in ints.items()}
    return ints


def jordan_block_sizes(n: int, k: int) -> dict[int, int]:
    """Jordan type of the shift derivation on the |I| = k layer: size -> count."""
    labels = sorted(weak_compositions(k, n + 1))
    pos = {ix: j for j, ix in enumerate(labels)}
    cols = []
    for ix in labels:
        cols.append({pos[t]: c for t, c in shift_action(ix).items()})
    dim = len(labels)
    ranks = [dim]
    cur = cols
    while True:
        ech = SparseEchelon()
        r = 0
        for col in cur:
            if ech.add_row(col):
                r += 1
        ranks.append(r)
        if r == 0:
            break
        nxt = []
        for col in cur:
            img = {}
            for j, c in col.items():
                for i, e in cols[j].items():
                    nv = img.get(i, 0) + c * e
                    if nv:
                        img[i] = nv
                    elif i in img:
                        del img[i]
            nxt.append(img)
        cur = nxt
    blocks = {}
    for s in range(1, len(ranks)):
        count = (ranks[s - 1] - ranks[s]) - ((ranks[s] - ranks[s + 1]) if s + 1 < len(ranks) else 0)
        if count:
            blocks[s] = count
    return blocks


def shift_coker_dims(n: int, k: int) -> list[int]:
    """Graded dims of coker(N) on the |I| = k layer, weights 0..n*k."""
    labels = sorted(weak_compositions(k, n + 1))
    pos = {ix: j for j, ix in enumerate(labels)}
    by_w = {}
    for ix in labels:
        by_w.setdefault(weight(ix), []).append(ix)
    out = []
    for w in range(n * k + 1):
        layer = by_w.get(w, [])
        layer_pos = {ix: i for i, ix in enumerate(layer)}
        ech = SparseEchelon()
        rank = 0
        for src in by_w.get(w - 1, []):
            row = {layer_pos[t]: c for t, c in shift_action(src).items()}
            if ech.add_row(row):
                rank += 1
        out.append(len(layer) - rank)
    return out

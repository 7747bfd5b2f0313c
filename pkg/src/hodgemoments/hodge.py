"""Hodge diamonds, dimension reports, and the consistency verifier.

Every table exists twice: a closed route (generating function or explicit
formula) and a basis route (linear algebra over the graded chains).  The
verifier runs both and reports disagreements as data instead of raising.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd

from .chains import (BadFamilyParams, build_chain, cohomology_basis, coker_slice_dims,
                     eigenvector_product, jordan_block_sizes, kernel_slice_dims,
                     middle_cohomology_basis, shift_coker_dims)
from .counting import (block_multiplicity, block_multiplicity_n2_closed,
                       bottom_multiplicity, lattice_step, lattice_step_n2_closed,
                       lattice_step_series, solution_dim_at_infinity,
                       solution_dim_at_zero)
from .cyclo import CycloInt, vanishing_tuple_count
from .families import Family
from .multiindex import weak_compositions
from .series import expand_rational
from .weyl import v21_chain


class NonIntegralDimension(ArithmeticError):
    """A dimension formula produced a non-integer."""


class CoprimalityRequired(ValueError):
    """The requested closed formula needs the coprimality hypothesis."""


def _level(x) -> "int | Fraction":
    f = Fraction(x)
    return f.numerator if f.denominator == 1 else f


@dataclass(frozen=True)
class HodgeDiamond:
    family: Family
    n: int
    k: int
    weight: int
    kind: str                  # "pure" or "mixed"
    levels: dict               # (p, q) -> multiplicity, zeros included on support

    def nonzero(self) -> dict:
        return {pq: h for pq, h in self.levels.items() if h}

    def total(self) -> int:
        return sum(self.levels.values())

    def anti_diagonal(self) -> tuple[int, ...]:
        """h^{p, weight-p} for p = 0..weight (integer-level diamonds)."""
        return tuple(self.levels.get((p, self.weight - p), 0)
                     for p in range(self.weight + 1))

    def sorted_entries(self):
        return sorted(self.levels.items(), key=lambda item: (item[0][0], item[0][1]))


@dataclass(frozen=True)
class DimReport:
    family: Family
    n: int
    k: int
    dim_h1: int
    dim_mid: int
    soln_zero: int
    soln_infty: int
    irregularity: int


def dims_kl(n: int, k: int, family: Family = Family.KL_Z) -> DimReport:
    """Cohomology dimensions for the Kloosterman families."""
    if family not in (Family.KL_Z, Family.KL_TILDE_T):
        raise ValueError("dims_kl covers the Kloosterman families only")
    m = n + 1
    ambient = comb(n + k, n)
    dk = vanishing_tuple_count(m, k)
    if family is Family.KL_Z:
        num = ambient - dk
        if num % m:
            raise NonIntegralDimension(f"({ambient} - {dk}) not divisible by {m}")
        h1 = num // m
    else:
        h1 = ambient - dk
    s0 = solution_dim_at_zero(n, k)
    sinf = solution_dim_at_infinity(n, k, family)
    return DimReport(family, n, k, h1, h1 - s0 - sinf, s0, sinf, h1)


def dims_airy(n: int, k: int) -> DimReport:
    """Cohomology dimensions for the Airy family (middle equals full)."""
    if n < 2:
        raise ValueError("the Airy family needs n >= 2")
    if gcd(k, n) != 1:
        raise CoprimalityRequired(f"gcd({k}, {n}) != 1")
    num = comb(k + n - 1, n - 1)
    if num % n:
        raise NonIntegralDimension(f"binom({k + n - 1}, {n - 1}) not divisible by {n}")
    h1 = num // n
    return DimReport(Family.AIRY_Z, n, k, h1, h1, 0, 0, h1)


def _pure_diamond(family: Family, n: int, k: int, weight: int, half) -> HodgeDiamond:
    """Assemble a pure diamond from h(p) on the low half, mirrored upward."""
    levels = {}
    for p in range(weight + 1):
        src = p if 2 * p <= weight else weight - p
        levels[(p, weight - p)] = half(src)
    return HodgeDiamond(family, n, k, weight, "pure", levels)


def hodge_kl_closed(n: int, k: int) -> HodgeDiamond:
    """Closed-route Hodge numbers on weight n*k + 1, coprime case."""
    if gcd(k, n + 1) != 1:
        raise CoprimalityRequired(f"gcd({k}, {n + 1}) != 1")
    w = n * k + 1
    series = lattice_step_series(n, w + 1, k + 1)

    def half(p: int) -> int:
        return series.coeff(p - n - 1, k) if p >= n + 1 else 0

    return _pure_diamond(Family.KL_Z, n, k, w, half)


def hodge_kl3_div3(k: int) -> HodgeDiamond:
    """Closed-route pure Hodge numbers for n = 2 with 3 | k."""
    if k % 3:
        raise ValueError("this table needs 3 | k")

    def half(p: int) -> int:
        base = p // 6 + (1 if p % 6 in (3, 5) else 0)
        return base - (1 if p == k else 0)

    return _pure_diamond(Family.KL_Z, 2, k, 2 * k + 1, half)


def hodge_kl_from_basis(n: int, k: int, max_degree: "int | None" = None) -> HodgeDiamond:
    """Basis-route Hodge numbers: degree-d middle classes land in h^{w-d, d}.

    When gcd(k, n+1) = 1 the filtration jump at every degree is sharp and the
    middle cardinalities are mirror-symmetric, so every degree contributes
    directly.  When n = 2 and 3 | k the jump is only sharp for d <= k; the
    upper half of the diamond is then filled in by Hodge symmetry, and the
    total is checked against the basis (the low half must carry exactly half
    of the middle dimension).
    """
    chain = build_chain(Family.KL_Z, n, k, max_degree)
    mid = middle_cohomology_basis(chain)
    cards = mid.cardinalities()
    w = n * k + 1
    levels = {(p, w - p): 0 for p in range(w + 1)}
    if gcd(k, n + 1) == 1:
        for d, count in cards.items():
            levels[(w - d, d)] += count
    else:
        low = {d: c for d, c in cards.items() if d <= k}
        assert 2 * sum(low.values()) == mid.total()
        for d, count in low.items():
            levels[(w - d, d)] += count
            levels[(d, w - d)] += count
    return HodgeDiamond(Family.KL_Z, n, k, w, "pure", levels)


def _airy_support(n: int, k: int):
    top = n * k - n - k + 1
    return [(Fraction(p + n + k, n + 1), Fraction(n * k + 1 - p, n + 1))
            for p in range(top + 1)]


def hodge_airy_closed(n: int, k: int) -> HodgeDiamond:
    """Closed-route Airy Hodge numbers; levels are (n+1)-th fractions."""
    if n < 2:
        raise ValueError("the Airy family needs n >= 2")
    if gcd(k, n) != 1:
        raise CoprimalityRequired(f"gcd({k}, {n}) != 1")
    top = n * k - n - k + 1
    series = expand_rational([1, -1], [(n, 0)] + [(i, 1) for i in range(n)],
                             max(top + 1, 1), k + 1)
    levels = {}
    for p in range(top + 1):
        key = (_level(Fraction(p + n + k, n + 1)), _level(Fraction(n * k + 1 - p, n + 1)))
        levels[key] = series.coeff(p, k)
    return HodgeDiamond(Family.AIRY_Z, n, k, k + 1, "pure", levels)


def hodge_airy_from_basis(n: int, k: int, max_degree: "int | None" = None) -> HodgeDiamond:
    """Basis route: a degree-d class contributes at level (n*k + 1 - d)/(n + 1)."""
    chain = build_chain(Family.AIRY_Z, n, k, max_degree)
    basis = cohomology_basis(chain)
    levels = {(_level(p), _level(q)): 0 for p, q in _airy_support(n, k)}
    for d, count in basis.cardinalities().items():
        key = (_level(Fraction(n * k + 1 - d, n + 1)), _level(Fraction(d + n + k, n + 1)))
        levels[key] += count
    return HodgeDiamond(Family.AIRY_Z, n, k, k + 1, "pure", levels)


V21_WEIGHT = 9


def hodge_v21(route: str = "basis") -> HodgeDiamond:
    """Hodge numbers of the 15-dimensional family on weight 9."""
    levels = {(p, V21_WEIGHT - p): 0 for p in range(V21_WEIGHT + 1)}
    if route == "closed":
        levels[(4, 5)] = 1
        levels[(5, 4)] = 1
    elif route == "basis":
        mid = middle_cohomology_basis(v21_chain())
        for d, count in mid.cardinalities().items():
            levels[(V21_WEIGHT - d, d)] += count
    else:
        raise ValueError(f"unknown route {route!r}")
    return HodgeDiamond(Family.V21, 2, 4, V21_WEIGHT, "pure", levels)


def _mixed_diamond(k: int, pure_at, diag_center: int) -> HodgeDiamond:
    w = 2 * k + 1
    levels = {}
    for p in range(w + 1):
        levels[(p, w - p)] = pure_at(p)
    levels[(k + 1, k + 1)] = diag_center
    for p in range(k + 2, w + 1):
        levels[(p, p)] = 1 if p % 2 else 0
    return HodgeDiamond(Family.KL_TILDE_T, 2, k, w, "mixed", levels)


def mixed_hodge_tilde_kl3(k: int) -> HodgeDiamond:
    """Mixed Hodge numbers of the full tilde cohomology for n = 2, any k."""
    dk = vanishing_tuple_count(3, k)

    def pure_at(p: int) -> int:
        q = 2 * k + 1 - p
        val = (min(p, q) + 1) // 2
        if p in (k, k + 1):
            val -= dk
        return val

    center = (1 if k % 2 == 0 else 0) + dk
    return _mixed_diamond(k, pure_at, center)


def mixed_hodge_kl3(k: int) -> HodgeDiamond:
    """Mixed Hodge numbers of the full cohomology for n = 2 with 3 | k."""
    if k % 3:
        raise ValueError("this table needs 3 | k")
    pure = hodge_kl3_div3(k)

    def pure_at(p: int) -> int:
        return pure.levels[(p, 2 * k + 1 - p)]

    center = (1 if k % 2 == 0 else 0) + 1
    dm = _mixed_diamond(k, pure_at, center)
    return HodgeDiamond(Family.KL_Z, 2, k, 2 * k + 1, "mixed", dm.levels)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class ConsistencyReport:
    n: int
    k: int
    checks: tuple
    notes: tuple

    @property
    def all_pass(self) -> bool:
        return all(c.passed for c in self.checks)


def _theta_bar_tilde_labelled(n: int, vec: dict) -> dict:
    """theta_bar of the tilde chain on {(t_power, J): coeff} dictionaries.

    Coefficients may live in any commutative ring (CycloInt included).
    """
    from .chains import corner_action, shift_action
    out = {}

    def bump(key, c):
        if key in out:
            out[key] = out[key] + c
        else:
            out[key] = c

    for (a, jj), c in vec.items():
        for tgt, e in shift_action(jj).items():
            bump((a, tgt), c * ((n + 1) * e))
        for tgt, e in corner_action(jj).items():
            bump((a + n + 1, tgt), c * ((n + 1) * e))
    return {key: c for key, c in out.items() if c}


def _scale_shift_labelled(vec: dict, scalar, t_shift: int) -> dict:
    return {(a + t_shift, jj): scalar * c for (a, jj), c in vec.items()}


def _dict_eq(x: dict, y: dict) -> bool:
    return {k: v for k, v in x.items() if v} == {k: v for k, v in y.items() if v}


def verify(n: int, k: int) -> ConsistencyReport:
    """Run every closed-vs-independent check that applies to (n, k)."""
    checks = []
    notes = []

    def record(name, passed, detail=""):
        checks.append(CheckResult(name, bool(passed), detail if not passed else ""))

    m = n + 1
    coprime = gcd(k, m) == 1
    tower_case = n == 2 and k % 3 == 0
    w = n * k + 1

    # counting clauses; the step counts are supported on [0, nk-n] and mirror
    # around nk-n (forced by the functional equation of the step series), and
    # the tighter bound nk-n-k+1 with its own mirror belongs to the rank-n
    # grading used by the Airy family (slots 0..n-1, z-weight n)
    if coprime:
        top = n * k - n
        zero_beyond = all(lattice_step(n, k, d) == 0 for d in range(top + 1, w + 2))
        mirror = all(lattice_step(n, k, d) == lattice_step(n, k, top - d)
                     for d in range(top + 1))
        diff = all(lattice_step(n, k, d) - lattice_step(n, k, w - d)
                   == block_multiplicity(n, k, d) for d in range(w + 1))
        record("counting-clauses", zero_beyond and mirror and diff,
               f"zero_beyond={zero_beyond} mirror={mirror} diff={diff}")
    if n >= 2 and gcd(k, n) == 1:
        atop = n * k - n - k + 1
        zero_beyond = all(lattice_step(n - 1, k, d) == 0
                          for d in range(atop + 1, n * k + 2))
        mirror = all(lattice_step(n - 1, k, d) == lattice_step(n - 1, k, atop - d)
                     for d in range(atop + 1))
        record("counting-clauses-airy", zero_beyond and mirror,
               f"zero_beyond={zero_beyond} mirror={mirror}")

    if n == 2:
        ok = all(lattice_step(2, k, d) == lattice_step_n2_closed(k, d)
                 for d in range(k + 1))
        ok = ok and all(block_multiplicity(2, k, d) == block_multiplicity_n2_closed(k, d)
                        for d in range(k + 1))
        record("counting-closed-n2", ok)

    series = lattice_step_series(n, w + 1, k + 1)
    ok = all(series.coeff(d, k) == lattice_step(n, k, d) for d in range(w + 1))
    record("step-series", ok)

    if coprime:
        ok = all(lattice_step(n, k, p) - bottom_multiplicity(n, k, p)
                 == lattice_step(n, k, p - n - 1)
                 for p in range(w + 1) if 2 * p <= w)
        record("hidden-step-identity", ok)

    # shift operator structure
    expected_blocks = {}
    for d in range((n * k) // 2 + 1):
        q = block_multiplicity(n, k, d)
        if q:
            expected_blocks[n * k - 2 * d + 1] = expected_blocks.get(n * k - 2 * d + 1, 0) + q
    got_blocks = jordan_block_sizes(n, k)
    record("jordan-blocks", got_blocks == expected_blocks,
           f"got={got_blocks} expected={expected_blocks}")

    got_coker = shift_coker_dims(n, k)
    expected_coker = [bottom_multiplicity(n, k, d) for d in range(n * k + 1)]
    record("shift-coker", got_coker == expected_coker,
           f"got={got_coker} expected={expected_coker}")

    # chain routes
    if coprime or tower_case:
        chain = build_chain(Family.KL_Z, n, k)
        if coprime:
            dims = coker_slice_dims(chain)
            ok = all(dims[d] == lattice_step(n, k, d) for d in range(len(dims)))
            total_ok = sum(dims) == dims_kl(n, k).dim_h1
            record("coker-matches-steps", ok and total_ok,
                   f"dims={dims}")
        full = cohomology_basis(chain)
        mid = middle_cohomology_basis(chain)
        rep = dims_kl(n, k)
        record("basis-totals-kl",
               full.total() == rep.dim_h1 and mid.total() == rep.dim_mid,
               f"full={full.total()} mid={mid.total()} report={rep}")
        cards = mid.cardinalities()
        if coprime:
            mirror_ok = all(cards.get(d, 0) == cards.get(w - d, 0)
                            for d in range(w + 1))
            record("mid-degree-mirror", mirror_ok, f"mid={cards}")
        else:
            # the filtration jump is sharp only up to degree k here, so the
            # low half must carry exactly half of the middle dimension
            low = sum(c for d, c in cards.items() if d <= k)
            record("mid-low-half", 2 * low == mid.total(),
                   f"low={low} mid={cards}")
        closed = hodge_kl3_div3(k) if tower_case else hodge_kl_closed(n, k)
        basis = hodge_kl_from_basis(n, k)
        record("route-kl", closed.levels == basis.levels,
               f"closed={closed.nonzero()} basis={basis.nonzero()}")

    if n >= 2 and gcd(k, n) == 1:
        closed = hodge_airy_closed(n, k)
        basis = hodge_airy_from_basis(n, k)
        record("route-airy", closed.levels == basis.levels,
               f"closed={closed.nonzero()} basis={basis.nonzero()}")
        record("airy-dims", closed.total() == dims_airy(n, k).dim_h1,
               f"total={closed.total()}")

    # tilde chain
    if coprime or tower_case:
        tchain = build_chain(Family.KL_TILDE_T, n, k)
        trep = dims_kl(n, k, Family.KL_TILDE_T)
        tfull = cohomology_basis(tchain)
        tmid = middle_cohomology_basis(tchain)
        record("basis-totals-tilde",
               tfull.total() == trep.dim_h1 and tmid.total() == trep.dim_mid,
               f"full={tfull.total()} mid={tmid.total()} report={trep}")
        if n <= 3:
            kdims = kernel_slice_dims(tchain)
            dk = vanishing_tuple_count(m, k)
            ok = all(kdims[d] == (dk if d >= n * k else 0) for d in range(len(kdims)))
            record("tilde-kernel-dims", ok, f"kernel={kdims}")
    elif n <= 3:
        # outside the coprime and tower regimes the twisted eigenvectors still
        # pin the kernel rank from degree nk on, but they need not generate a
        # saturated module, so lower slices may already carry kernel
        tchain = build_chain(Family.KL_TILDE_T, n, k)
        kdims = kernel_slice_dims(tchain)
        dk = vanishing_tuple_count(m, k)
        tail = all(kdims[d] == dk for d in range(n * k, len(kdims)))
        monotone = all(kdims[d] <= kdims[d + 1] <= dk for d in range(n * k))
        record("tilde-kernel-tail", tail and monotone, f"kernel={kdims}")

    if n <= 3 and k <= 6:
        ok = True
        bad = None
        for index in weak_compositions(k, m):
            fvec = eigenvector_product(n, k, index)
            lhs = _theta_bar_tilde_labelled(n, fvec)
            c_index = CycloInt.from_exponents(m, index)
            rhs = _scale_shift_labelled(fvec, (m * c_index), 1)
            if not _dict_eq(lhs, rhs):
                ok = False
                bad = index
                break
        record("tilde-eigen-relation", ok, f"first failure at {bad}")

    # dimension relations
    if coprime or tower_case:
        zrep = dims_kl(n, k)
        trep = dims_kl(n, k, Family.KL_TILDE_T)
        record("dims-consistent",
               zrep.dim_mid >= 0 and trep.dim_mid >= 0
               and trep.dim_h1 == m * zrep.dim_h1,
               f"z={zrep} tilde={trep}")

    # mixed tables
    if n == 2:
        table = mixed_hodge_tilde_kl3(k)
        expected_total = comb(k + 2, 2) - vanishing_tuple_count(3, k)
        diag_total = sum(h for (p, q), h in table.levels.items() if p == q)
        record("mixed-tilde", table.total() == expected_total
               and diag_total == 1 + k // 2 + vanishing_tuple_count(3, k),
               f"total={table.total()} expected={expected_total} diag={diag_total}")
        if k % 3 == 0:
            table = mixed_hodge_kl3(k)
            expected_total = dims_kl(2, k).dim_h1
            diag_total = sum(h for (p, q), h in table.levels.items() if p == q)
            record("mixed-kl3", table.total() == expected_total
                   and diag_total == 1 + k // 2 + 1,
                   f"total={table.total()} expected={expected_total} diag={diag_total}")
            notes.append(
                "convention note: the degree-k correction to the pure 3|k table is "
                "applied before both congruence branches; applying it to only one "
                "branch would break the k=3 vanishing and the total-dimension sums.")

    return ConsistencyReport(n, k, tuple(checks), tuple(notes))


def verify_sweep(max_n: int, max_k: int) -> list[ConsistencyReport]:
    out = []
    for n in range(1, max_n + 1):
        for k in range(1, max_k + 1):
            out.append(verify(n, k))
    return out

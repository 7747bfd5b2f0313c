"""Exact cyclotomic integer arithmetic and shift-orbit counts.

Everything here happens in Z[x] / Phi_m(x) with Phi_m the m-th cyclotomic
polynomial, computed once by exact division.  The counts below classify
exponent tuples I (weak compositions of k into m parts) by the vanishing of
sum_j I_j zeta^j and by how the cyclic shift acts on them.
"""

from dataclasses import dataclass
from functools import lru_cache

from .multiindex import MultiIndex, canonical_rotation, rotate, weak_compositions
from .poly import normalize, poly_div_exact, one_minus


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Coefficients of Phi_m, constant term first."""
    if m < 1:
        raise ValueError("m must be positive")
    # x^m - 1 = prod over divisors d of m of Phi_d
    num = [-c for c in one_minus(m)]  # x^m - 1
    for d in range(1, m):
        if m % d == 0:
            num = poly_div_exact(num, list(cyclotomic_poly(d)))
    out = normalize(num)
    assert all(c.denominator == 1 for c in out)
    return tuple(int(c) for c in out)


def _reduce_mod_cyclotomic(coeffs: list[int], m: int) -> tuple[int, ...]:
    phi = cyclotomic_poly(m)
    deg = len(phi) - 1
    work = list(coeffs)
    for i in range(len(work) - 1, deg - 1, -1):
        c = work[i]
        if c:
            work[i] = 0
            for j, p in enumerate(phi[:-1]):
                work[i - deg + j] -= c * p
    while len(work) > deg:
        work.pop()
    while len(work) < deg:
        work.append(0)
    return tuple(work)


@dataclass(frozen=True)
class CycloInt:
    """An element of Z[zeta_m], stored in the power basis 1..zeta^{phi(m)-1}."""

    m: int
    coeffs: tuple[int, ...]

    @classmethod
    def zero(cls, m: int) -> "CycloInt":
        return cls(m, _reduce_mod_cyclotomic([], m))

    @classmethod
    def one(cls, m: int) -> "CycloInt":
        return cls(m, _reduce_mod_cyclotomic([1], m))

    @classmethod
    def zeta_power(cls, m: int, e: int) -> "CycloInt":
        e %= m
        return cls(m, _reduce_mod_cyclotomic([0] * e + [1], m))

    @classmethod
    def from_exponents(cls, m: int, index: MultiIndex) -> "CycloInt":
        """sum_j index[j] * zeta^j for a tuple of length m."""
        if len(index) != m:
            raise ValueError(f"expected {m} slots, got {len(index)}")
        return cls(m, _reduce_mod_cyclotomic(list(index), m))

    def __add__(self, other: "CycloInt") -> "CycloInt":
        self._check(other)
        return CycloInt(self.m, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "CycloInt") -> "CycloInt":
        self._check(other)
        return CycloInt(self.m, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other):
        if isinstance(other, int):
            return CycloInt(self.m, tuple(a * other for a in self.coeffs))
        self._check(other)
        prod = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[i + j] += a * b
        return CycloInt(self.m, _reduce_mod_cyclotomic(prod, self.m))

    __rmul__ = __mul__

    def __neg__(self) -> "CycloInt":
        return CycloInt(self.m, tuple(-a for a in self.coeffs))

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_part(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def _check(self, other: "CycloInt"):
        if self.m != other.m:
            raise ValueError("mixed cyclotomic orders")


def tuple_vanishes(m: int, index: MultiIndex) -> bool:
    return not CycloInt.from_exponents(m, index)


@dataclass(frozen=True)
class OrbitSet:
    """Cyclic-shift orbits of vanishing exponent tuples, by canonical reps."""

    m: int
    k: int
    reps: tuple[MultiIndex, ...]

    def __len__(self) -> int:
        return len(self.reps)


def vanishing_tuple_count(m: int, k: int) -> int:
    """Number of weak compositions I of k with sum_j I_j zeta^j = 0."""
    return sum(1 for index in weak_compositions(k, m) if tuple_vanishes(m, index))


@lru_cache(maxsize=None)
def vanishing_orbits(m: int, k: int) -> OrbitSet:
    reps = set()
    for index in weak_compositions(k, m):
        if tuple_vanishes(m, index):
            reps.add(canonical_rotation(index))
    return OrbitSet(m, k, tuple(sorted(reps)))


def vanishing_orbit_count(m: int, k: int) -> int:
    return len(vanishing_orbits(m, k))


def signed_shift_sum(index: MultiIndex) -> dict:
    """Formal sum over i of (-1)^{s_i} sigma^i(index), as tuple -> coefficient.

    s_i adds up the last i entries of the original tuple (s_0 = 0), matching
    the sign picked up by moving those entries past the rest one step at a
    time.
    """
    m = len(index)
    out = {}
    cur = index
    for i in range(m):
        s_i = sum(index[m - i:]) if i else 0
        sign = -1 if s_i % 2 else 1
        out[cur] = out.get(cur, 0) + sign
        cur = rotate(cur)
    return {t: c for t, c in out.items() if c}


def signed_orbit_count(m: int, k: int) -> int:
    """Orbits of vanishing tuples whose signed shift sum is nonzero."""
    return sum(1 for rep in vanishing_orbits(m, k).reps if signed_shift_sum(rep))

"""Dense univariate polynomial arithmetic over exact rationals.

A polynomial is a list of Fraction coefficients, constant term first, with no
trailing zeros.  The zero polynomial is the empty list.
"""

from fractions import Fraction


class RemainderNonzero(ArithmeticError):
    """Exact polynomial division left a nonzero remainder."""


def normalize(coeffs) -> list[Fraction]:
    out = [Fraction(c) for c in coeffs]
    while out and not out[-1]:
        out.pop()
    return out


def degree(f) -> int:
    """Degree with the convention deg 0 = -1."""
    return len(f) - 1


def one_minus(a: int) -> list[Fraction]:
    """The polynomial 1 - t^a for a >= 1."""
    if a < 1:
        raise ValueError("exponent must be positive")
    return [Fraction(1)] + [Fraction(0)] * (a - 1) + [Fraction(-1)]


def poly_add(f, g):
    n = max(len(f), len(g))
    out = []
    for i in range(n):
        a = f[i] if i < len(f) else 0
        b = g[i] if i < len(g) else 0
        out.append(a + b)
    return normalize(out)


def poly_sub(f, g):
    return poly_add(f, [-c for c in g])


def poly_mul(f, g):
    if not f or not g:
        return []
    out = [Fraction(0)] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if not a:
            continue
        for j, b in enumerate(g):
            if b:
                out[i + j] += a * b
    return normalize(out)


def poly_div_exact(f, g):
    """Quotient f / g, raising RemainderNonzero unless g divides f exactly."""
    g = normalize(g)
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    rem = normalize(f)
    if not rem:
        return []
    dq = len(rem) - len(g)
    if dq < 0:
        raise RemainderNonzero(f"degree {degree(rem)} < divisor degree {degree(g)}")
    quot = [Fraction(0)] * (dq + 1)
    lead = g[-1]
    for i in range(dq, -1, -1):
        c = rem[i + len(g) - 1] / lead
        quot[i] = c
        if c:
            for j, b in enumerate(g):
                rem[i + j] -= c * b
    if any(rem):
        raise RemainderNonzero("division left a nonzero remainder")
    return normalize(quot)


def coeff(f, d: int) -> Fraction:
    if 0 <= d < len(f):
        return f[d]
    return Fraction(0)

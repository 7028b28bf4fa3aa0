"""Shared oracle helpers for the test suite.

Everything here is deliberately independent of the package's own arithmetic:
mpmath for transcendental references, Akiyama-Tanigawa for Bernoulli numbers,
``math.comb``/``Fraction`` for exact values.
"""

from fractions import Fraction

import mpmath

ORACLE_BITS = 400

mpmath.mp.prec = ORACLE_BITS + 60


def mpf_to_fraction(x: "mpmath.mpf") -> Fraction:
    """Exact rational value of an mpf (mpf values are dyadic)."""
    sign, man, exp, _ = x._mpf_
    if man == 0:
        return Fraction(0)
    v = Fraction(man << exp) if exp >= 0 else Fraction(man, 1 << -exp)
    return -v if sign else v


def oracle_bracket(x: "mpmath.mpf", bits: int = ORACLE_BITS) -> tuple[Fraction, Fraction]:
    """Rational bracket [lo, hi] around a high-precision oracle value."""
    lo = mpf_to_fraction(mpmath.mpf(x))
    eps = Fraction(1, 2**bits) * (abs(lo) + 1)
    return lo - eps, lo + eps


def assert_encloses(iv, x: "mpmath.mpf") -> None:
    """The interval must contain the oracle value (up to oracle quantization)."""
    lo, hi = oracle_bracket(x)
    assert iv.lo.as_fraction() <= hi, f"{iv} entirely above oracle {x}"
    assert lo <= iv.hi.as_fraction(), f"{iv} entirely below oracle {x}"


def bernoulli_akiyama_tanigawa(n: int) -> list[Fraction]:
    """B_0..B_n by the Akiyama-Tanigawa triangle (B_1 = +1/2 convention;
    even-index values coincide with the generating-function convention)."""
    row = [Fraction(0)] * (n + 1)
    out = []
    for m in range(n + 1):
        row[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            row[j - 1] = j * (row[j - 1] - row[j])
        out.append(row[0])
    return out

"""Exact combinatorics: binomial coefficients, Catalan numbers, Bernoulli numbers.

Everything in this module is exact -- Python ints and ``fractions.Fraction``,
never floats -- so these values double as ground truth for the certified
bound comparisons elsewhere in the package.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from typing import Iterator

__all__ = [
    "binomial",
    "central_binomial",
    "central_binomials",
    "catalan",
    "BernoulliCache",
    "bernoulli",
]


def binomial(n: int, k: int) -> int:
    """C(n, k) via the multiplicative product with exact intermediate division.

    Each partial product is itself a binomial coefficient, so intermediates
    stay as small as the result; this is what keeps sweeps to n = 10**4 cheap
    compared to the factorial route.  Total in k: returns 0 for k < 0 or
    k > n.
    """
    if n < 0:
        raise ValueError("binomial: n must be >= 0")
    if k < 0 or k > n:
        return 0
    k = min(k, n - k)
    out = 1
    for i in range(1, k + 1):
        out = out * (n - k + i) // i
    return out


def central_binomial(n: int) -> int:
    """C(2n, n), the middle entry of row 2n of Pascal's triangle."""
    if n < 0:
        raise ValueError("central_binomial: n must be >= 0")
    return binomial(2 * n, n)


def central_binomials(n_lo: int, n_hi: int) -> Iterator[tuple[int, int]]:
    """Yield (n, C(2n, n)) for n_lo <= n <= n_hi by the ratio recurrence.

    C(2n+2, n+1) = C(2n, n) * 2(2n+1) / (n+1), with the division always exact.
    Amortizes a long sweep to one big-int multiply and divide per step.
    """
    if n_lo < 0 or n_hi < n_lo:
        raise ValueError("central_binomials: need 0 <= n_lo <= n_hi")
    b = central_binomial(n_lo)
    for n in range(n_lo, n_hi + 1):
        yield n, b
        b = b * (2 * (2 * n + 1)) // (n + 1)


def catalan(n: int) -> int:
    """Catalan number C(2n, n) / (n + 1); the division is always exact."""
    b = central_binomial(n)
    q, r = divmod(b, n + 1)
    assert r == 0  # (n+1) | C(2n,n) for all n >= 0
    return q


class BernoulliCache:
    """Monotonically growing cache of even-index Bernoulli numbers.

    Values follow the generating function t/(e^t - 1), i.e. B_1 = -1/2 and
    B_2 = 1/6.  Extension is serialized by an internal lock, so concurrent
    readers may share one cache; precomputing via :meth:`extend_to` before
    fanning out work is equivalent and avoids any contention.  Entries are
    never mutated once computed.
    """

    def __init__(self) -> None:
        self._even: list[Fraction] = [Fraction(1)]  # B_0, B_2, B_4, ...
        self._lock = threading.Lock()

    @property
    def high_water(self) -> int:
        """Largest even index m for which B_m is already cached."""
        return 2 * (len(self._even) - 1)

    def extend_to(self, m: int) -> None:
        """Ensure B_0 .. B_m are cached (m even, >= 0).

        Uses the defining recurrence sum_{k=0}^{n} C(n+1, k) B_k = 0 for
        n >= 1, restricted to even k plus the lone B_1 = -1/2 term.
        """
        if m % 2 != 0 or m < 0:
            raise ValueError("extend_to: m must be even and >= 0")
        with self._lock:
            while 2 * (len(self._even) - 1) < m:
                j = len(self._even)  # computing B_{2j}
                n = 2 * j
                acc = Fraction(n + 1, -2)  # k = 1 term: C(n+1, 1) * B_1
                for i in range(j):
                    acc += binomial(n + 1, 2 * i) * self._even[i]
                self._even.append(-acc / (n + 1))

    def get(self, m: int) -> Fraction:
        self.extend_to(m)
        return self._even[m // 2]


_SHARED_CACHE = BernoulliCache()


def bernoulli(m: int, cache: BernoulliCache | None = None) -> Fraction:
    """Bernoulli number B_m as an exact Fraction (even m, plus B_0 and B_1).

    Odd m >= 3 is rejected rather than returning 0: those values are never
    meaningful inputs here and a request for one indicates a caller bug.
    """
    if m < 0:
        raise ValueError("bernoulli: m must be >= 0")
    if m == 1:
        return Fraction(-1, 2)
    if m % 2 != 0:
        raise ValueError("bernoulli: odd index %d (all zero); not served" % m)
    return (cache or _SHARED_CACHE).get(m)

"""Ghost components, Witt coordinates, and the Burnside-ring operations.

The closed-walk counts c_n of a graph and the orbit counts s_n of its
periodic bi-infinite paths are linked by the triangular system
c_n = sum_{d|n} d*s_d, inverted exactly by Moebius sums.  Instances are
lazy: components are computed and memoized on demand, so objects with
infinite support are usable at any finite depth.
"""

from __future__ import annotations

import threading
from functools import lru_cache

from .errors import InvalidInput, NotRealizable
from .graphs import Graph
from .spectral import cycle_count, expand_log_exp


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    return tuple(d for d in range(1, n + 1) if n % d == 0)


@lru_cache(maxsize=None)
def mobius(n: int) -> int:
    """Moebius function by trial factorization; n stays desk-sized here."""
    if n < 1:
        raise InvalidInput("mobius needs n >= 1")
    result = 1
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    if m > 1:
        result = -result
    return result


def ghost_to_witt(c, n: int) -> int:
    """s_n = (1/n) * sum_{d|n} mobius(n/d) * c_d, with realizability checks.

    `c` maps divisors of n to integers (a callable or a mapping).
    """
    get = c if callable(c) else lambda d: c[d]
    total = sum(mobius(n // d) * get(d) for d in divisors(n))
    if total % n != 0:
        raise NotRealizable(f"divisor sum {total} at n={n} is not divisible by {n}")
    s = total // n
    if s < 0:
        raise NotRealizable(f"negative orbit count s_{n} = {s}")
    return s


def witt_to_ghost(s, n: int) -> int:
    """c_n = sum_{d|n} d * s_d."""
    get = s if callable(s) else lambda d: s.get(d, 0)
    return sum(d * get(d) for d in divisors(n))


class AlmostFiniteZSet:
    """Symbolic Z-set given by its ghost components c_n (n >= 1).

    Ghost and Witt components are memoized per instance behind a lock, so
    concurrent reads of one instance are safe.
    """

    def __init__(self, ghost_fn, label: str = ""):
        self._ghost_fn = ghost_fn
        self._ghost: dict[int, int] = {}
        self._witt: dict[int, int] = {}
        self._lock = threading.Lock()
        self.label = label

    def ghost(self, n: int) -> int:
        if n < 1:
            raise InvalidInput("ghost index must be >= 1")
        with self._lock:
            if n not in self._ghost:
                self._ghost[n] = int(self._ghost_fn(n))
            return self._ghost[n]

    def witt(self, n: int) -> int:
        with self._lock:
            if n in self._witt:
                return self._witt[n]
        value = ghost_to_witt(self.ghost, n)
        with self._lock:
            self._witt[n] = value
        return value

    def ghost_row(self, upto: int) -> list[int]:
        return [self.ghost(n) for n in range(1, upto + 1)]

    def witt_row(self, upto: int) -> list[int]:
        return [self.witt(n) for n in range(1, upto + 1)]

    def __repr__(self):
        return f"AlmostFiniteZSet({self.label or 'anonymous'})"


def from_graph(X: Graph) -> AlmostFiniteZSet:
    """The periodic bi-infinite paths of X: ghost components are tr(A^n)."""
    return AlmostFiniteZSet(lambda n: cycle_count(X, n), label="from-graph")


def from_witt(s: dict[int, int]) -> AlmostFiniteZSet:
    """Explicit finite orbit support: s[n] copies of the n-orbit."""
    for n, v in s.items():
        if n < 1 or v < 0:
            raise InvalidInput("orbit support needs n >= 1 and counts >= 0")
    S = AlmostFiniteZSet(lambda n: witt_to_ghost(s, n), label="from-witt")
    for n, v in s.items():
        S._witt[n] = v
    return S


def from_ghost(c: dict[int, int]) -> AlmostFiniteZSet:
    """Explicit ghost values; realizability is checked lazily on witt()."""
    def fn(n: int) -> int:
        if n not in c:
            raise InvalidInput(f"ghost component c_{n} not provided")
        return c[n]
    return AlmostFiniteZSet(fn, label="from-ghost")


ZERO = AlmostFiniteZSet(lambda n: 0, label="zero")


def burnside_add(S: AlmostFiniteZSet, T: AlmostFiniteZSet) -> AlmostFiniteZSet:
    """Disjoint union: ghost components (and Witt coordinates) add."""
    return AlmostFiniteZSet(lambda n: S.ghost(n) + T.ghost(n), label="sum")


def burnside_mul(S: AlmostFiniteZSet, T: AlmostFiniteZSet) -> AlmostFiniteZSet:
    """Product of Z-sets: ghost components multiply.

    On orbits this is Z/m x Z/n = gcd(m,n) copies of Z/lcm(m,n); Witt
    coordinates of the product are recovered by inversion and certified
    integral (NotRealizable here would indicate a bug, not bad input).
    """
    return AlmostFiniteZSet(lambda n: S.ghost(n) * T.ghost(n), label="product")


def zeta_exp_form(S: AlmostFiniteZSet, N: int) -> list[int]:
    """Coefficients of exp(sum c_n u^n / n) to order N."""
    return expand_log_exp(S.ghost, N)


def zeta_product_form(S: AlmostFiniteZSet, N: int) -> list[int]:
    """Coefficients of prod_{n>=1} (1 - u^n)^{-s_n} to order N.

    Each factor contributes binomial(s_n + m - 1, m) at u^{nm}; factors
    with n > N cannot affect the truncation.
    """
    if N < 0:
        raise InvalidInput("truncation order must be >= 0")
    coeffs = [1] + [0] * N
    for n in range(1, N + 1):
        s_n = S.witt(n)
        if s_n == 0:
            continue
        # multiply by (1 - u^n)^{-s_n} = sum_m C(s_n+m-1, m) u^{nm}
        factor = [0] * (N + 1)
        m = 0
        term = 1
        while n * m <= N:
            factor[n * m] = term
            term = term * (s_n + m) // (m + 1)
            m += 1
        out = [0] * (N + 1)
        for i, a in enumerate(coeffs):
            if a == 0:
                continue
            for j in range(0, N + 1 - i):
                if factor[j]:
                    out[i + j] += a * factor[j]
        coeffs = out
    return coeffs

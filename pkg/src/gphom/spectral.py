"""Exact integer linear algebra over the adjacency operator.

Characteristic polynomial (division-free Berkowitz), its reversal, closed
walk counts tr(A^n), and the zeta series in closed and expanded form.  No
floating point anywhere: coefficients are Python ints, intermediate series
arithmetic uses exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import IntegralityViolation, InvalidInput
from .graphs import Graph


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, coefficients ascending by degree."""

    coefficients: tuple[int, ...]

    @staticmethod
    def from_list(coeffs) -> "IntPolynomial":
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        return IntPolynomial(tuple(int(x) for x in c))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1 if self.coefficients else -1

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.coefficients):
            return self.coefficients[k]
        return 0

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if not self.coefficients or not other.coefficients:
            return IntPolynomial(())
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return IntPolynomial.from_list(out)

    def format(self, var: str = "x") -> str:
        """Canonical ascending text, e.g. '1 - 4*u^2'."""
        if not self.coefficients:
            return "0"
        parts = []
        for k, c in enumerate(self.coefficients):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                term = str(mag)
            else:
                power = var if k == 1 else f"{var}^{k}"
                term = power if mag == 1 else f"{mag}*{power}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts) if parts else "0"


def adjacency_matrix(X: Graph) -> list[list[int]]:
    """Entry (i, j) counts arcs from node i to node j, in node order."""
    idx = X.node_index
    n = len(X.nodes)
    A = [[0] * n for _ in range(n)]
    for a in X.arcs:
        A[idx[a.src]][idx[a.tgt]] += 1
    return A


def char_poly(A: list[list[int]]) -> IntPolynomial:
    """det(xI - A) by the Berkowitz algorithm (division-free, exact)."""
    n = len(A)
    # coefficients descending: [1] means the constant polynomial 1
    coeffs = [1]
    for k in range(1, n + 1):
        # principal k x k block; Toeplitz column from the new row/column
        a_kk = A[k - 1][k - 1]
        row = A[k - 1][:k - 1]     # R: row k-1 against previous
        col = [A[i][k - 1] for i in range(k - 1)]  # S: column into k-1
        # entries t_m = R * M^(m) * S with M the (k-1) principal block
        t = [a_kk]
        if k > 1:
            m = len(col)
            vec = col[:]
            t.append(sum(row[i] * vec[i] for i in range(m)))
            M = [r[:k - 1] for r in A[:k - 1]]
            for _ in range(k - 2):
                vec = [sum(M[i][j] * vec[j] for j in range(m)) for i in range(m)]
                t.append(sum(row[i] * vec[i] for i in range(m)))
        # multiply previous char poly by the Toeplitz column
        # new_poly has degree k: new[i] = prev[i] - sum_{m>=0} t[m]*prev[i-m-1]
        prev = coeffs
        new = [0] * (k + 1)
        for i, c in enumerate(prev):
            new[i] += c
        for m, tm in enumerate(t):
            for i, c in enumerate(prev):
                if i + m + 1 <= k:
                    new[i + m + 1] -= tm * c
        coeffs = new
    return IntPolynomial.from_list(list(reversed(coeffs)))


def reversed_char_poly(A: list[list[int]]) -> IntPolynomial:
    """det(I - uA) = u^n * a(1/u), trailing zeros dropped."""
    n = len(A)
    a = char_poly(A)
    # coefficient of u^k in u^n a(1/u) is the coefficient of x^{n-k} in a(x)
    return IntPolynomial.from_list([a[n - k] for k in range(n + 1)])


def cycle_count(X: Graph, n: int) -> int:
    """Number of closed walks of length n, i.e. tr(A^n), exactly."""
    if n < 1:
        raise InvalidInput("cycle count needs n >= 1")
    A = adjacency_matrix(X)
    size = len(A)
    total = 0
    for i in range(size):
        # row i of A^n via repeated vector-matrix products
        vec = A[i][:]
        for _ in range(n - 1):
            vec = [sum(vec[k] * A[k][j] for k in range(size)) for j in range(size)]
        total += vec[i]
    return total


@dataclass(frozen=True)
class ZetaSeries:
    """1/det(I - uA) as a rational form plus its truncated expansion."""

    denominator: IntPolynomial
    truncation_order: int
    coefficients: tuple[int, ...]   # z_0 .. z_N

    def __post_init__(self):
        if self.coefficients and self.coefficients[0] != 1:
            raise IntegralityViolation("zeta series must start with 1")


def expand_log_exp(ghost, N: int) -> list[int]:
    """Coefficients of exp(sum_{n>=1} ghost(n) u^n / n) up to order N.

    Uses the derivative recurrence k*z_k = sum_{i<=k} c_i z_{k-i} over exact
    rationals; the results are asserted integral (a theorem, and a self-test).
    """
    z: list[Fraction] = [Fraction(1)]
    for k in range(1, N + 1):
        acc = sum(Fraction(ghost(i)) * z[k - i] for i in range(1, k + 1))
        z.append(acc / k)
    out = []
    for k, v in enumerate(z):
        if v.denominator != 1:
            raise IntegralityViolation(f"zeta coefficient z_{k} = {v} not integral")
        out.append(int(v))
    return out


def zeta_series(X: Graph, N: int) -> ZetaSeries:
    """Zeta series of X to order N: exp form checked against det(I - uA)."""
    if N < 0:
        raise InvalidInput("truncation order must be >= 0")
    A = adjacency_matrix(X)
    denom = reversed_char_poly(A)
    counts: dict[int, int] = {}

    def ghost(n: int) -> int:
        if n not in counts:
            counts[n] = cycle_count(X, n)
        return counts[n]

    coeffs = expand_log_exp(ghost, N)
    # internal check: denominator * series == 1 + O(u^{N+1})
    for k in range(N + 1):
        acc = sum(denom[i] * coeffs[k - i] for i in range(0, min(k, denom.degree) + 1))
        expected = 1 if k == 0 else 0
        if acc != expected:
            raise IntegralityViolation(
                f"series does not invert the denominator at order {k}")
    return ZetaSeries(denom, N, tuple(coeffs))


def newton_power_sums(a: IntPolynomial, upto: int) -> list[int]:
    """Power sums p_1..p_upto of the roots of a monic polynomial.

    Newton's identities: p_k = -k*b_{n-k} - sum_{i=1}^{k-1} b_{n-i} p_{k-i},
    with b the coefficients of a (b_n = 1 leading).  Exact over ints.
    """
    n = a.degree
    if n < 0 or a[n] != 1:
        raise InvalidInput("expected a monic polynomial")
    p: list[int] = []
    for k in range(1, upto + 1):
        bk = a[n - k] if k <= n else 0
        acc = -k * bk
        for i in range(1, k):
            bi = a[n - i] if i <= n else 0
            acc -= bi * p[k - i - 1]
        p.append(acc)
    return p

"""Exact combinatorial numbers: Stirling set numbers, their k!-scaled variant,
harmonic numbers, binomial coefficients, Bernoulli numbers and polynomials.

Sign convention: Bernoulli numbers follow the generating function z/(e^z - 1),
so B_1 = -1/2.  Many references use B_1 = +1/2 instead; every special-value
identity in this library depends on the minus convention, so it is fixed here
and cross-checked by two independent algorithms (see :func:`bernoulli` and
:func:`bernoulli_akiyama_tanigawa`).
"""
from __future__ import annotations

import math
import threading
from fractions import Fraction
from typing import Callable, List, Sequence

from .exactpoly import Polynomial, Rational


class Triangle:
    """Memoized triangular table indexed by (n, k), 0 <= k <= n.

    Rows are grown on demand from a row-extension rule; extension is
    serialized by a lock, completed rows are immutable tuples and safe to
    read from any thread.
    """

    def __init__(self, first_row: Sequence, extend: Callable[[Sequence, int], Sequence]):
        self._rows: List[tuple] = [tuple(first_row)]
        self._extend = extend
        self._lock = threading.Lock()

    def _ensure(self, n: int) -> None:
        if n < len(self._rows):
            return
        with self._lock:
            while len(self._rows) <= n:
                m = len(self._rows)
                row = tuple(self._extend(self._rows[m - 1], m))
                assert len(row) == m + 1
                self._rows.append(row)

    def value(self, n: int, k: int):
        if n < 0 or k < 0 or k > n:
            raise ValueError(f"triangle index out of range: (n={n}, k={k})")
        self._ensure(n)
        return self._rows[n][k]

    def row(self, n: int) -> tuple:
        if n < 0:
            raise ValueError(f"negative row index: {n}")
        self._ensure(n)
        return self._rows[n]


def _stirling2_row(prev: Sequence, n: int) -> list:
    # S2(n,k) = k*S2(n-1,k) + S2(n-1,k-1)
    return [(k * prev[k] if k < n else 0) + (prev[k - 1] if k >= 1 else 0)
            for k in range(n + 1)]


def _sf_row(prev: Sequence, n: int) -> list:
    # SF(n,k) = k*(SF(n-1,k) + SF(n-1,k-1))
    return [k * ((prev[k] if k < n else 0) + (prev[k - 1] if k >= 1 else 0))
            for k in range(n + 1)]


_stirling2_triangle = Triangle((1,), _stirling2_row)
_sf_triangle = Triangle((1,), _sf_row)

_harmonic_lock = threading.Lock()
_harmonic_values: List[Fraction] = [Fraction(0)]  # index 0 is an internal base, never exposed

_bernoulli_lock = threading.Lock()
_bernoulli_values: List[Fraction] = [Fraction(1)]

_bernoulli_poly_lock = threading.Lock()
_bernoulli_polys: List[Polynomial] = [Polynomial.one()]


def stirling2(n: int, k: int) -> int:
    """Number of partitions of an n-set into k nonempty blocks."""
    if n < 0 or k < 0:
        raise ValueError("arguments must be nonnegative")
    if k > n:
        raise ValueError(f"k must not exceed n: got (n={n}, k={k})")
    return _stirling2_triangle.value(n, k)


def sf(n: int, k: int) -> int:
    """The scaled Stirling number k! * S2(n, k), counting ordered partitions
    of an n-set into k blocks; computed by its own triangle recurrence."""
    if n < 0 or k < 0:
        raise ValueError("arguments must be nonnegative")
    if k > n:
        raise ValueError(f"k must not exceed n: got (n={n}, k={k})")
    return _sf_triangle.value(n, k)


def sf_row(n: int) -> tuple:
    """Row n of the scaled-Stirling triangle: (SF(n,0), ..., SF(n,n))."""
    if n < 0:
        raise ValueError(f"negative row index: {n}")
    return _sf_triangle.row(n)


def harmonic(n: int) -> Fraction:
    """Exact n-th harmonic number, the partial sum 1 + 1/2 + ... + 1/n.

    n = 0 is rejected: no formula in this library evaluates H_0.
    """
    if n < 1:
        raise ValueError(f"harmonic(n) requires n >= 1, got {n}")
    if n >= len(_harmonic_values):
        with _harmonic_lock:
            while len(_harmonic_values) <= n:
                m = len(_harmonic_values)
                _harmonic_values.append(_harmonic_values[m - 1] + Fraction(1, m))
    return _harmonic_values[n]


def binomial(n: int, k: int) -> int:
    """Pascal-triangle binomial coefficient; 0 when k > n."""
    if n < 0 or k < 0:
        raise ValueError("arguments must be nonnegative")
    if k > n:
        return 0
    return math.comb(n, k)


def binomial_rat(x: Rational, k: int) -> Fraction:
    """Generalized binomial coefficient x(x-1)...(x-k+1) / k! for rational x."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    num = Fraction(1)
    for i in range(k):
        num *= x - i
    return num / math.factorial(k)


def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n with B_1 = -1/2.

    Primary route: B_n = sum_{v=1..n} SF(n,v) * (-1)^v / (v+1) for n >= 1
    (Worpitzky's summation), B_0 = 1.  Values are memoized; the independent
    Akiyama-Tanigawa route exists purely as a cross-check.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n >= len(_bernoulli_values):
        with _bernoulli_lock:
            while len(_bernoulli_values) <= n:
                m = len(_bernoulli_values)
                row = _sf_triangle.row(m)
                total = Fraction(0)
                for v in range(1, m + 1):
                    term = Fraction(row[v], v + 1)
                    total += -term if v % 2 else term
                _bernoulli_values.append(total)
    return _bernoulli_values[n]


def bernoulli_akiyama_tanigawa(n: int) -> Fraction:
    """Bernoulli number B_n (B_1 = -1/2) by the Akiyama-Tanigawa algorithm.

    Shares no code or tables with :func:`bernoulli`; the in-place
    transformation natively yields the +1/2 convention, so the result is
    reflected by (-1)^n to match the library's convention.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    row = [Fraction(1, j + 1) for j in range(n + 1)]
    for i in range(1, n + 1):
        for j in range(n + 1 - i):
            row[j] = (j + 1) * (row[j] - row[j + 1])
    return -row[0] if n % 2 else row[0]


def bernoulli_poly(n: int) -> Polynomial:
    """Bernoulli polynomial B_n(x): B_0(x) = 1, B_n'(x) = n*B_{n-1}(x),
    constant term B_n(0) = B_n.  Built by antidifferentiation plus constant
    fixing; results are memoized."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n >= len(_bernoulli_polys):
        with _bernoulli_poly_lock:
            while len(_bernoulli_polys) <= n:
                m = len(_bernoulli_polys)
                poly = _bernoulli_polys[m - 1].antiderivative() * m + bernoulli(m)
                _bernoulli_polys.append(poly)
    return _bernoulli_polys[n]

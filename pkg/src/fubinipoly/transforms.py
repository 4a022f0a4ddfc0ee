"""Sequence and coefficient transforms.

Sequences are plain tuples of exact scalars indexed from 0; they are kept
deliberately distinct from polynomial coefficient lists so that index-0
conventions never get tangled.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence, Tuple

from .combinat import binomial
from .exactpoly import Polynomial, Rational
from .fubini import fubini_direct

RationalSeq = Tuple[Rational, ...]


def binomial_transform(seq: Sequence[Rational]) -> RationalSeq:
    """Alternating binomial transform t_n = sum_{k=0..n} C(n,k) (-1)^k s_k.

    Self-inverse: applying it twice returns the original sequence.
    """
    out = []
    for n in range(len(seq)):
        total = 0
        for k in range(n + 1):
            term = binomial(n, k) * seq[k]
            total = total - term if k % 2 else total + term
        out.append(total)
    return tuple(out)


def hadamard(f: Polynomial, g: Polynomial) -> Polynomial:
    """Coefficient-wise product of two polynomials."""
    return Polynomial([a * b for a, b in zip(f.coefficients, g.coefficients)])


def euler_hadamard(f: Polynomial, g: Polynomial) -> Polynomial:
    """The coefficient-wise product computed the long way around: binomial-
    transform f's coefficients, then sum transformed coefficients against
    scaled derivatives of g,

        sum_{v=0..deg g} (-1)^v t_v * g^(v)(x) / v! * x^v.

    Must agree with :func:`hadamard` on every pair; the derivative chain is
    reused across terms so the whole sum is quadratic in the degree.
    """
    if g.is_zero() or f.is_zero():
        return Polynomial.zero()
    n = g.degree
    coeffs = [f.coefficient(v) for v in range(n + 1)]
    transformed = binomial_transform(coeffs)
    result = Polynomial.zero()
    deriv = g
    for v in range(n + 1):
        if transformed[v] != 0:
            scale = Fraction(transformed[v], math.factorial(v)) \
                if isinstance(transformed[v], int) else transformed[v] / math.factorial(v)
            if v % 2:
                scale = -scale
            result = result + Polynomial.monomial(scale, v) * deriv
        deriv = deriv.derivative()
    return result


def hfubini_via_derivatives(n: int) -> Polynomial:
    """Fhat_n assembled from the derivatives of F_n:

        Fhat_n(x) = sum_{v=1..n} (-1)^(v+1) F_n^(v)(x) / v! * x^v / v.

    Provided both as public API and as the third independent route to
    Fhat_n (next to the direct sum and the recurrence).
    """
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    deriv = fubini_direct(n)
    result = Polynomial.zero()
    for v in range(1, n + 1):
        deriv = deriv.derivative()
        result = result + Polynomial.monomial(Fraction(1, math.factorial(v) * v)
                                              * (-1) ** (v + 1), v) * deriv
    return result

"""q-calculus primitives: q-integers, q-factorials, Gaussian binomials,
q-Pochhammer symbols with arbitrary base, and the bracket falling factorial.

All values are exact elements of Q(q).  Results are memoized per argument
tuple; every function is pure, so cached and uncached runs are identical.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import UnsupportedNegativeUpper
from .field import F_ONE, F_ZERO, FieldElem, Polynomial, as_field, q


@lru_cache(maxsize=None)
def q_int(n: int) -> FieldElem:
    """[n] = 1 + q + ... + q^(n-1); [0] = 0."""
    if n < 0:
        raise ValueError("q_int wants a nonnegative index")
    if n == 0:
        return F_ZERO
    return FieldElem(Polynomial([1] * n))


@lru_cache(maxsize=None)
def q_factorial(n: int) -> FieldElem:
    """[n]! = [1][2]...[n]; [0]! = 1."""
    if n < 0:
        raise ValueError("q_factorial wants a nonnegative index")
    if n == 0:
        return F_ONE
    return q_factorial(n - 1) * q_int(n)


@lru_cache(maxsize=None)
def q_pochhammer(x: FieldElem, base: FieldElem, n: int) -> FieldElem:
    """(x; base)_n = prod_{j=0}^{n-1} (1 - base^j * x); empty product for n = 0."""
    if n < 0:
        raise ValueError("q_pochhammer wants a nonnegative length")
    if n == 0:
        return F_ONE
    x = as_field(x)
    base = as_field(base)
    return q_pochhammer(x, base, n - 1) * (F_ONE - base ** (n - 1) * x)


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> FieldElem:
    """Gaussian binomial in base q: (q;q)_n / ((q;q)_k (q;q)_{n-k}).

    Zero for k < 0 or k > n.  A negative upper index is rejected; the one
    k = 0 convention a determinant formula needs is applied at its use site.
    """
    if n < 0:
        raise UnsupportedNegativeUpper(f"q_binomial upper index {n} < 0")
    if k < 0 or k > n:
        return F_ZERO
    return gauss_binomial(n, k, q)


@lru_cache(maxsize=None)
def gauss_binomial(n: int, k: int, base: FieldElem) -> FieldElem:
    """Gaussian binomial with an arbitrary nonzero base element."""
    if n < 0:
        raise UnsupportedNegativeUpper(f"gauss_binomial upper index {n} < 0")
    if k < 0 or k > n:
        return F_ZERO
    k = min(k, n - k)
    base = as_field(base)
    num = F_ONE
    den = F_ONE
    for j in range(1, k + 1):
        num = num * (F_ONE - base ** (n - k + j))
        den = den * (F_ONE - base ** j)
    return num / den


@lru_cache(maxsize=None)
def bracket_falling(x: Fraction, n: int) -> FieldElem:
    """<x>_n = prod_{j=0}^{n-1} (x - [j]), with x a rational constant."""
    if n < 0:
        raise ValueError("bracket_falling wants a nonnegative length")
    if n == 0:
        return F_ONE
    x = Fraction(x)
    return bracket_falling(x, n - 1) * (as_field(x) - q_int(n - 1))

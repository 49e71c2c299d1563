"""Point-set generators: van der Corput / Hammersley, seeded uniform, grids."""
from __future__ import annotations

from fractions import Fraction

import numpy as np

from .exceptions import EmptyBoxError
from .geometry import PointSet

#: Generator recorded in CSV metadata for seeded random point sets.
RNG_NAME = "numpy.PCG64"
RNG_VERSION = 1

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
                 73, 79, 83, 89, 97)


def first_primes(count: int) -> list[int]:
    if count <= len(_SMALL_PRIMES):
        return list(_SMALL_PRIMES[:count])
    limit = 128
    while True:
        sieve = np.ones(limit + 1, dtype=bool)
        sieve[:2] = False
        for p in range(2, int(limit ** 0.5) + 1):
            if sieve[p]:
                sieve[p * p::p] = False
        primes = np.flatnonzero(sieve)
        if len(primes) >= count:
            return [int(p) for p in primes[:count]]
        limit *= 2


def radical_inverse_fraction(index: int, base: int) -> Fraction:
    if base < 2:
        raise EmptyBoxError("base must be at least 2")
    if index < 0:
        raise EmptyBoxError("index must be non-negative")
    num, den = 0, 1
    while index:
        index, digit = divmod(index, base)
        num = num * base + digit
        den *= base
    return Fraction(num, den)


def van_der_corput(index: int, base: int = 2) -> float:
    """Radical inverse of ``index`` in ``base``, correctly rounded to float.

    >>> [van_der_corput(i, 2) for i in range(4)]
    [0.0, 0.5, 0.25, 0.75]
    """
    return float(radical_inverse_fraction(index, base))


def _radical_inverse_array(indices: np.ndarray, base: int) -> np.ndarray:
    # num / base**ndigits with a common digit count; scaling both by the same
    # power keeps the quotient exact, so each entry matches van_der_corput()
    top = int(indices.max()) if indices.size else 0
    ndigits = 0
    while base ** ndigits <= top:
        ndigits += 1
    if base ** ndigits >= 2 ** 53:
        return np.array([van_der_corput(int(i), base) for i in indices])
    rest = indices.astype(np.int64).copy()
    num = np.zeros_like(rest)
    for _ in range(ndigits):
        rest, digit = np.divmod(rest, base)
        num = num * base + digit
    return num / float(base ** ndigits)


def hammersley(n: int, d: int) -> PointSet:
    """Point ``j`` is ``(j/n, phi_2(j), phi_3(j), ..., phi_{p_{d-1}}(j))``."""
    if n < 1:
        raise EmptyBoxError("hammersley needs n >= 1")
    if d < 2:
        raise EmptyBoxError("hammersley needs d >= 2; use van_der_corput for 1-D")
    j = np.arange(n, dtype=np.int64)
    cols = [j / n] + [_radical_inverse_array(j, p) for p in first_primes(d - 1)]
    return PointSet(np.column_stack(cols), d)


def random_uniform(n: int, d: int, seed: int) -> PointSet:
    if n < 0 or d < 1:
        raise EmptyBoxError("random_uniform needs n >= 0 and d >= 1")
    rng = np.random.Generator(np.random.PCG64(seed))
    return PointSet(rng.random((n, d)), d)


def grid(m: int, d: int) -> PointSet:
    """Cell centres of the regular ``m^d`` grid."""
    if m < 1 or d < 1:
        raise EmptyBoxError("grid needs m >= 1 and d >= 1")
    axis = (np.arange(m) + 0.5) / m
    mesh = np.meshgrid(*([axis] * d), indexing="ij")
    return PointSet(np.column_stack([g.ravel() for g in mesh]), d)

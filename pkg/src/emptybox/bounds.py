"""Closed-form bounds on empty-box volumes and on p(a, t, n).

``p(a, t, n)`` is the largest number of length-``n`` vectors over an
``a``-letter alphabet such that every ``t`` of them show every ``t``-letter
string in some coordinate. Binomials are exact integers throughout; only the
exponential growth bases are floats.

The probabilistic lower bound ``p(a, t, n) >= c1 * lambda1^n`` holds for
``n >= n0(a, t)`` with ``c1 = 1/a - eps``; neither ``eps`` nor ``n0`` has a
fixed value, so only ``lambda1`` is computed here.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .exceptions import EmptyBoxError
from .pointsets import first_primes


@dataclass(frozen=True)
class BoundReport:
    params: dict
    values: dict
    formulas: dict = field(default_factory=dict)

    def __post_init__(self):
        lo, hi = self.values.get("lower"), self.values.get("upper")
        if lo is not None and hi is not None and lo > hi:
            raise EmptyBoxError(f"inconsistent bounds: lower {lo} > upper {hi}")

    @property
    def lower(self):
        return self.values["lower"]

    @property
    def upper(self):
        return self.values["upper"]

    def to_dict(self) -> dict:
        return {"params": dict(self.params), "values": dict(self.values),
                "formulas": dict(self.formulas)}


def volume_lower_bound(n: int, d: int) -> float:
    """``log2(d) / (4 (n + log2 d))``, the guaranteed volume of the fast finder."""
    if d < 2:
        raise EmptyBoxError("volume_lower_bound needs d >= 2")
    if n < 0:
        raise EmptyBoxError("n must be non-negative")
    lg = math.log2(d)
    return lg / (4 * (n + lg))


def slicing_lower_bound(n: int) -> float:
    return 1.0 / (n + 1)


def volume_upper_bound_const(d: int) -> int:
    """``2^(d-1)`` times the product of the first ``d - 1`` primes.

    For every ``n`` some ``n``-point set in ``[0,1]^d`` has all its empty
    boxes smaller than this constant divided by ``n``.
    """
    if d < 2:
        raise EmptyBoxError("volume_upper_bound_const needs d >= 2")
    return 2 ** (d - 1) * math.prod(first_primes(d - 1))


def p_binary_exact(n: int) -> int:
    if n < 4:
        raise EmptyBoxError("p(n) is defined for n >= 4")
    return math.comb(n - 1, n // 2 - 1)


def block_params(a: int, n: int) -> tuple[int, int]:
    """``(b, k)`` with ``b = C(a, 2)`` blocks of size ``2k``, ``k = floor(n / 2b)``."""
    b = math.comb(a, 2)
    return b, n // (2 * b)


def block_lower_bound(a: int, n: int) -> int:
    _, k = block_params(a, n)
    return math.comb(2 * k, k) // 2 if k >= 1 else 0


def packing_upper_bound(a: int, n: int) -> int:
    """``floor(C(n, ceil(n/a)) / (a (a - 1)))``, valid for ``t = 2``."""
    return math.comb(n, -(-n // a)) // (a * (a - 1))


def antichain_upper_bound(a: int, n: int) -> int:
    return math.comb(n - 1, n // a - 1)


def p_bounds(a: int, t: int, n: int) -> BoundReport:
    if a < 2 or t < 2:
        raise EmptyBoxError("p_bounds needs a >= 2 and t >= 2")
    if n < a ** t:
        raise EmptyBoxError(f"p({a},{t},n) needs n >= a^t = {a ** t}, got n = {n}")
    lower, lower_id = t, "trivial: t <= p"
    if t == 2:
        blk = block_lower_bound(a, n)
        if blk > lower:
            lower, lower_id = blk, "block: C(2k,k)/2"
    pack = packing_upper_bound(a, n)
    anti = antichain_upper_bound(a, n)
    upper, upper_id = (pack, "packing: C(n,ceil(n/a))/(a(a-1))") if pack <= anti else \
        (anti, "antichain: C(n-1,floor(n/a)-1)")
    return BoundReport(
        params={"a": a, "t": t, "n": n},
        values={"lower": lower, "upper": upper},
        formulas={"lower": lower_id, "upper": upper_id},
    )


def lambda1(a: int, t: int) -> float:
    return a / (a ** t - 1) ** (1 / t)


def lambda2(a: int) -> float:
    return a / ((a - 1) ** (a - 1)) ** (1 / a)


def asymptotic_bases(a: int, t: int = 2) -> tuple[float, float, float]:
    """``(lambda1, lambda2, 2^(1/b))``: probabilistic lower, antichain upper and
    block-construction lower growth bases, with ``b = C(a, 2)``."""
    if a < 2 or t < 2:
        raise EmptyBoxError("asymptotic_bases needs a >= 2 and t >= 2")
    return lambda1(a, t), lambda2(a), 2.0 ** (1 / math.comb(a, 2))


def table1(alphabets=(2, 3, 4, 10)) -> list[dict]:
    """Growth of p(a, 2, n): exact for a = 2, exponential bases otherwise."""
    rows = []
    for a in alphabets:
        if a == 2:
            rows.append({"a": 2, "lower": "C(n-1,floor(n/2)-1)", "upper": "C(n-1,floor(n/2)-1)"})
        else:
            _, lam2, blk = asymptotic_bases(a)
            rows.append({"a": a, "lower": blk, "upper": lam2})
    return rows

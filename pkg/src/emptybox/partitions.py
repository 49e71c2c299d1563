"""Perfect vector sets and properly overlapping partitions.

A family of vectors over ``{0, ..., a-1}`` is *t-wise perfect* when every
``t`` of them, read coordinate by coordinate, show every string of length
``t``. Reading vector ``v`` as the partition of ``[n]`` that puts element ``r``
in part ``v[r]`` turns this into a family of partitions in which any ``t``
parts drawn from ``t`` distinct partitions intersect. Elements of ``[n]`` are
1-based here, vector positions 0-based.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .bounds import block_params
from .clique import colour_order, max_clique
from .exceptions import BudgetExceededError, ConstructionFailedError, EmptyBoxError

_SYMBOLS = "0123456789abcdefghijklmnopqrstuvwxyz"


@dataclass(frozen=True)
class VectorFamily:
    a: int
    n: int
    vectors: tuple

    def __post_init__(self):
        if self.a < 2:
            raise EmptyBoxError("alphabet size must be at least 2")
        vecs = tuple(tuple(int(s) for s in v) for v in self.vectors)
        for idx, v in enumerate(vecs):
            if len(v) != self.n:
                raise EmptyBoxError(f"vector {idx} has length {len(v)}, expected {self.n}")
            if any(not 0 <= s < self.a for s in v):
                raise EmptyBoxError(f"vector {idx} has a symbol outside [0, {self.a})")
        if len(set(vecs)) != len(vecs):
            raise EmptyBoxError("duplicate vectors: a perfect family is always a set")
        object.__setattr__(self, "vectors", vecs)

    @property
    def k(self) -> int:
        return len(self.vectors)

    @classmethod
    def from_strings(cls, strings, a: int = 2) -> "VectorFamily":
        strings = [s.strip() for s in strings if s.strip()]
        if not strings:
            raise EmptyBoxError("empty vector family")
        vecs = [tuple(int(ch, 36) for ch in s) for s in strings]
        return cls(a, len(vecs[0]), tuple(vecs))

    def to_strings(self) -> list[str]:
        return ["".join(_SYMBOLS[s] for s in v) for v in self.vectors]

    def to_text(self) -> str:
        return "\n".join(self.to_strings()) + "\n"

    def as_array(self) -> np.ndarray:
        return np.array(self.vectors, dtype=np.int64).reshape(self.k, self.n)


def _canonical_partition(parts, n: int, a: int):
    parts = [tuple(sorted(int(x) for x in p)) for p in parts]
    if len(parts) != a:
        raise EmptyBoxError(f"expected {a} parts, got {len(parts)}")
    if any(not p for p in parts):
        raise EmptyBoxError("partition has an empty part")
    flat = sorted(x for p in parts for x in p)
    if flat != list(range(1, n + 1)):
        raise EmptyBoxError(f"parts do not form a partition of [1..{n}]")
    return tuple(sorted(parts, key=lambda p: p[0]))


@dataclass(frozen=True)
class PartitionFamily:
    """Unordered ``a``-partitions of ``[n]``, each stored with parts sorted
    internally and ordered by their smallest element."""

    a: int
    n: int
    partitions: tuple

    def __post_init__(self):
        canon = tuple(_canonical_partition(p, self.n, self.a) for p in self.partitions)
        if len(set(canon)) != len(canon):
            raise EmptyBoxError("duplicate partitions in family")
        object.__setattr__(self, "partitions", canon)

    @property
    def k(self) -> int:
        return len(self.partitions)

    @classmethod
    def from_text(cls, text: str) -> "PartitionFamily":
        parts_list = []
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts_list.append([[int(x) for x in part.split(",")] for part in line.split("|")])
        if not parts_list:
            raise EmptyBoxError("empty partition family")
        a = len(parts_list[0])
        n = sum(len(p) for p in parts_list[0])
        return cls(a, n, tuple(parts_list))

    def to_text(self) -> str:
        return "".join("|".join(",".join(map(str, part)) for part in p) + "\n"
                       for p in self.partitions)

    def as_sets(self) -> set:
        return {frozenset(frozenset(part) for part in p) for p in self.partitions}


@dataclass(frozen=True)
class PerfectnessReport:
    is_perfect: bool
    t: int
    witness: tuple | None = None  # (vector indices, uncovered string)

    def __bool__(self):
        return self.is_perfect


def vectors_to_partitions(vf: VectorFamily) -> PartitionFamily:
    parts_list = []
    for idx, v in enumerate(vf.vectors):
        parts = [[r + 1 for r, s in enumerate(v) if s == sym] for sym in range(vf.a)]
        for sym, part in enumerate(parts):
            if not part:
                raise EmptyBoxError(f"vector {idx} never uses symbol {sym}: part {sym} is empty")
        parts_list.append(parts)
    return PartitionFamily(vf.a, vf.n, tuple(parts_list))


def partitions_to_vectors(pf: PartitionFamily) -> VectorFamily:
    vecs = []
    for p in pf.partitions:
        v = [0] * pf.n
        for label, part in enumerate(p):
            for x in part:
                v[x - 1] = label
        vecs.append(tuple(v))
    return VectorFamily(pf.a, pf.n, tuple(vecs))


def _as_vectors(family) -> VectorFamily:
    if isinstance(family, PartitionFamily):
        return partitions_to_vectors(family)
    return family


def verify_perfect(family, t: int = 2) -> PerfectnessReport:
    """Scan every ``t``-subset of vectors (ascending indices) for an uncovered string.

    The witness, if any, is the first failing subset and its first uncovered
    string, both in lexicographic order. Accepts a vector or partition family.
    """
    vf = _as_vectors(family)
    if t < 2:
        raise EmptyBoxError("t must be at least 2")
    if vf.k < t:
        raise EmptyBoxError(f"family has {vf.k} vectors, fewer than t = {t}")
    A = vf.as_array()
    cells = vf.a ** t
    weights = vf.a ** np.arange(t - 1, -1, -1, dtype=np.int64)
    # n < a^t can never cover all cells; the first subset already fails
    for combo in itertools.combinations(range(vf.k), t):
        seen = np.zeros(cells, dtype=bool)
        seen[weights @ A[list(combo)]] = True
        if not seen.all():
            code = int(np.argmin(seen))
            alpha = tuple(int(c) for c in np.unravel_index(code, (vf.a,) * t))
            return PerfectnessReport(False, t, (combo, alpha))
    return PerfectnessReport(True, t)


def construct_binary_optimal(n: int) -> PartitionFamily:
    """All 2-partitions ``A | B`` of ``[n]`` with ``1 in A`` and ``|A| = floor(n/2)``."""
    if n < 4:
        raise EmptyBoxError("need n >= 4 for a pairwise perfect binary family")
    half = n // 2
    everything = set(range(1, n + 1))
    parts_list = []
    for rest in itertools.combinations(range(2, n + 1), half - 1):
        A = (1,) + rest
        parts_list.append((A, tuple(sorted(everything - set(A)))))
    return PartitionFamily(2, n, tuple(parts_list))


def balanced_bipartitions(block: tuple) -> list[tuple[tuple, tuple]]:
    """Splits of an even-size block into equal halves; the half holding the
    block minimum comes first, ordered lexicographically."""
    k = len(block) // 2
    first, others = block[0], block[1:]
    out = []
    for rest in itertools.combinations(others, k - 1):
        half = (first,) + rest
        out.append((half, tuple(x for x in block if x not in half)))
    return out


def construct_block_family(a: int, n: int) -> PartitionFamily:
    """Pairwise properly overlapping ``a``-partitions from balanced block splits.

    ``[n]`` is cut into ``C(a, 2)`` consecutive blocks of size ``2k`` labelled
    by pairs ``i < j`` in lexicographic order, plus a leftover that joins part
    0. Member ``m`` sends the two halves of the ``m``-th balanced split of
    block ``(i, j)`` to parts ``i`` and ``j``. The family has ``C(2k, k)/2``
    members.
    """
    if a < 2:
        raise EmptyBoxError("a must be at least 2")
    b, k = block_params(a, n)
    if k == 0:
        raise EmptyBoxError(f"n too small for a: need n >= {2 * b}, got n = {n}")
    size = math.comb(2 * k, k) // 2
    if a == 2 and size < 2:
        raise EmptyBoxError("block family for a = 2 needs n >= 4")
    pairs = list(itertools.combinations(range(a), 2))
    splits = []
    for idx in range(b):
        block = tuple(range(idx * 2 * k + 1, (idx + 1) * 2 * k + 1))
        splits.append(balanced_bipartitions(block))
    leftover = tuple(range(b * 2 * k + 1, n + 1))
    family = []
    for m in range(size):
        parts = [[] for _ in range(a)]
        for (i, j), split in zip(pairs, splits):
            parts[i].extend(split[m][0])
            parts[j].extend(split[m][1])
        parts[0].extend(leftover)
        family.append(parts)
    return PartitionFamily(a, n, tuple(family))


def failure_probability_bound(a: int, t: int, n: int, k: int) -> float:
    """``a^t C(k, t) (1 - a^-t)^n``: union bound on a random family failing."""
    return a ** t * math.comb(k, t) * (1 - a ** -t) ** n


def random_perfect_family(a: int, t: int, n: int, k: int, seed: int,
                          max_attempts: int = 100) -> VectorFamily:
    """Draw ``k`` uniform vectors until the family is ``t``-wise perfect."""
    if k < t:
        raise EmptyBoxError(f"need k >= t, got k = {k}, t = {t}")
    if n < a ** t:
        raise EmptyBoxError(f"need n >= a^t = {a ** t}, got n = {n}")
    rng = np.random.Generator(np.random.PCG64(seed))
    witness = None
    for attempt in range(1, max_attempts + 1):
        draw = rng.integers(0, a, size=(k, n))
        rows = [tuple(r) for r in draw.tolist()]
        if len(set(rows)) < k:
            witness = "duplicate vectors"
            continue
        vf = VectorFamily(a, n, tuple(rows))
        report = verify_perfect(vf, t)
        if report.is_perfect:
            return vf
        witness = report.witness
    raise ConstructionFailedError(
        f"no {t}-wise perfect family of {k} vectors found in {max_attempts} attempts",
        attempts=max_attempts, last_witness=witness)


def canonical_partition_vectors(a: int, n: int, min_part: int = 1) -> np.ndarray:
    """Restricted growth strings of length ``n`` using exactly ``a`` symbols,
    one per unordered ``a``-partition of ``[n]``, with every part of size at
    least ``min_part``. Rows in lexicographic order."""
    rows = []
    for tail in itertools.product(range(a), repeat=n - 1):
        v = (0,) + tail
        top = 0
        ok = True
        for s in tail:
            if s > top + 1:
                ok = False
                break
            top = max(top, s)
        if not ok or top != a - 1:
            continue
        if min(v.count(s) for s in range(a)) >= min_part:
            rows.append(v)
    return np.array(rows, dtype=np.int64).reshape(len(rows), n)


def _pair_adjacency(V: np.ndarray, a: int) -> list[int]:
    m = len(V)
    adjacency = []
    rows = np.arange(m)[:, None]
    for u in range(m):
        seen = np.zeros((m, a * a), dtype=bool)
        seen[rows, V[u] * a + V] = True
        ok = seen.all(axis=1)
        ok[u] = False
        adjacency.append(int(sum(1 << int(v) for v in np.flatnonzero(ok))))
    return adjacency


def brute_force_family(a: int, t: int, n: int, budget: int = 10 ** 6) -> VectorFamily:
    """A maximum ``t``-wise perfect family, by exhaustive search.

    Only canonical vectors (one per unordered partition) are searched, since
    relabelling one partition's parts preserves the covering property. Parts
    smaller than ``a^(t-1)`` cannot meet every combination of parts from
    ``t - 1`` other partitions and are dropped up front.
    """
    if a < 2 or t < 2:
        raise EmptyBoxError("need a >= 2 and t >= 2")
    if n < a ** t:
        raise EmptyBoxError(f"need n >= a^t = {a ** t}, got n = {n}")
    limit = budget if t == 2 else math.isqrt(budget)
    if a ** n > limit:
        raise BudgetExceededError(f"a^n = {a ** n} exceeds the search budget {limit}")
    V = canonical_partition_vectors(a, n, min_part=a ** (t - 1))
    adjacency = _pair_adjacency(V, a)
    if t == 2:
        chosen = max_clique(adjacency)
    else:
        chosen = _max_twise_family(V, a, t, adjacency)
    return VectorFamily(a, n, tuple(tuple(V[i].tolist()) for i in chosen))


def _max_twise_family(V: np.ndarray, a: int, t: int, adjacency: list[int]) -> list[int]:
    # masks[v][s]: bitset of coordinates where vector v has symbol s
    masks = [[int(sum(1 << r for r in np.flatnonzero(row == s))) for s in range(a)] for row in V]
    full = (1 << V.shape[1]) - 1

    def covers(combo) -> bool:
        for alpha in itertools.product(range(a), repeat=len(combo)):
            acc = full
            for v, s in zip(combo, alpha):
                acc &= masks[v][s]
                if not acc:
                    return False
        return True

    best: list[int] = []

    def extend(family: list[int], candidates: int):
        # invariant: every candidate completes each (t-1)-subset of family
        nonlocal best
        if len(family) > len(best):
            best = list(family)
        order, colours = colour_order(candidates, adjacency)
        for idx in range(len(order) - 1, -1, -1):
            if len(family) + colours[idx] <= len(best):
                return
            c = order[idx]
            candidates &= ~(1 << c)
            nxt = 0
            rest = candidates & adjacency[c]
            while rest:
                x = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                if all(covers(sub + (c, x)) for sub in itertools.combinations(family, t - 2)):
                    nxt |= 1 << x
            family.append(c)
            extend(family, nxt)
            family.pop()

    extend([], (1 << len(V)) - 1)
    return sorted(best)


def brute_force_p(a: int, t: int, n: int, budget: int = 10 ** 6) -> int:
    """Exact ``p(a, t, n)``; raises :class:`BudgetExceededError` when ``a^n`` is too large."""
    return brute_force_family(a, t, n, budget).k


def lym_check(family) -> float:
    """Sum of ``(a - 1) / C(n, |part|)`` over every part of every partition.

    At most 1 for any pairwise properly overlapping family.
    """
    pf = family if isinstance(family, PartitionFamily) else vectors_to_partitions(family)
    total = sum(Fraction(pf.a - 1, math.comb(pf.n, len(part)))
                for p in pf.partitions for part in p)
    return float(total)

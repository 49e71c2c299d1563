"""Exact maximum clique by branch and bound with a greedy-colouring bound.

Vertex sets are Python ints used as bitsets. ``adjacency[v]`` is the bitset of
neighbours of ``v``.
"""
from __future__ import annotations


def colour_order(candidates: int, adjacency: list[int]):
    """Greedy sequential colouring; returns vertices with their colour numbers,
    in non-decreasing colour order."""
    order, colours = [], []
    uncoloured = candidates
    colour = 0
    while uncoloured:
        colour += 1
        available = uncoloured
        while available:
            v = (available & -available).bit_length() - 1
            available &= ~(1 << v) & ~adjacency[v]
            uncoloured &= ~(1 << v)
            order.append(v)
            colours.append(colour)
    return order, colours


def max_clique(adjacency: list[int]) -> list[int]:
    """Vertices of one maximum clique, sorted ascending."""
    n = len(adjacency)
    best: list[int] = []

    def expand(current: list[int], candidates: int):
        nonlocal best
        order, colours = colour_order(candidates, adjacency)
        for idx in range(len(order) - 1, -1, -1):
            if len(current) + colours[idx] <= len(best):
                return
            v = order[idx]
            current.append(v)
            new_cand = candidates & adjacency[v]
            if new_cand:
                expand(current, new_cand)
            elif len(current) > len(best):
                best = list(current)
            current.pop()
            candidates &= ~(1 << v)

    if n:
        expand([], (1 << n) - 1)
    return sorted(best)

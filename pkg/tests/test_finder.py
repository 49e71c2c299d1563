import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from emptybox.exceptions import EmptyBoxError
from emptybox.finder import (
    CaseTag,
    SlabSelection,
    encode_points,
    find_collision,
    find_large_empty_box,
    floor_log2,
    select_min_slab,
)
from emptybox.geometry import AxisBox, PointSet, is_empty_box, strictly_inside
from emptybox.pointsets import random_uniform


def guarantee(n, d):
    return math.log2(d) / (4 * (n + math.log2(d)))


def brute_slab_counts(X, k):
    """Count first coordinates per half-open slab [i/(k+1), (i+1)/(k+1)), x = 1 in the last."""
    counts = [0] * (k + 1)
    for x in X[:, 0]:
        for i in range(k + 1):
            lo, hi = i / (k + 1), (i + 1) / (k + 1)
            if lo <= x < hi or (i == k and x == 1.0):
                counts[i] += 1
                break
    return counts


@st.composite
def point_sets(draw, max_d=12, max_n=60, grid=None):
    d = draw(st.integers(2, max_d))
    n = draw(st.integers(0, max_n))
    if grid:
        coord = st.integers(0, grid).map(lambda i: i / grid)
    else:
        coord = st.floats(0.0, 1.0, allow_nan=False)
    rows = draw(st.lists(st.lists(coord, min_size=d, max_size=d), min_size=n, max_size=n))
    return PointSet(np.array(rows, dtype=float).reshape(n, d), d)


class TestFloorLog2:
    @pytest.mark.parametrize("d, ell", [(1, 0), (2, 1), (3, 1), (4, 2), (7, 2), (8, 3), (1023, 9), (1024, 10)])
    def test_values(self, d, ell):
        assert floor_log2(d) == ell

    def test_bracketing_powers(self):
        for d in range(1, 5000):
            ell = floor_log2(d)
            assert 2 ** ell <= d < 2 ** (ell + 1)


class TestSelectMinSlab:
    def test_empty_input(self):
        sel = select_min_slab(PointSet.empty(5))
        assert (sel.k, sel.slab_index, sel.m, sel.lo, sel.hi) == (0, 0, 0, 0.0, 1.0)

    def test_hand_counted_example(self):
        xs = [0.1, 0.1, 0.1, 0.3, 0.3, 0.3, 0.6, 0.6, 0.9]
        X = np.column_stack([xs] + [[0.5] * 9] * 3)
        sel = select_min_slab(X)
        assert (sel.ell, sel.k, sel.slab_index, sel.m) == (2, 3, 3, 1)
        assert (sel.lo, sel.hi) == (0.75, 1.0)
        assert sel.inside_points.tolist() == [8]

    def test_rejects_one_dimension(self):
        with pytest.raises(EmptyBoxError, match="d >= 2"):
            select_min_slab([[0.5]])

    def test_x_equal_one_goes_to_last_slab(self):
        X = np.array([[1.0, 0.5], [1.0, 0.5], [0.2, 0.5], [0.6, 0.1]])
        sel = select_min_slab(X)
        assert sel.k == 2
        assert brute_slab_counts(X, 2) == [1, 1, 2]
        assert sel.slab_index == 0

    def test_uniform_spread_d2(self):
        X = np.column_stack([np.linspace(0, 1, 10), np.full(10, 0.5)])
        sel = select_min_slab(X)
        counts = brute_slab_counts(X, sel.k)
        assert min(counts) <= 1 and sel.m == min(counts)

    @settings(max_examples=200, deadline=None)
    @given(point_sets(grid=24))
    def test_agrees_with_brute_force_counts(self, S):
        sel = select_min_slab(S)
        counts = brute_slab_counts(S.points, sel.k)
        assert sel.slab_index == counts.index(min(counts))
        assert sel.m == min(counts) <= sel.ell

    @pytest.mark.parametrize("order", ["C", "F"])
    def test_many_rows_span_several_chunks(self, order):
        n, d = 100_003, 4
        k = n // 3
        rng = np.random.default_rng(11)
        X = rng.random((n, d))
        X[:5000, 0] = rng.integers(0, k + 2, 5000) / (k + 1)  # exact boundaries, incl. 1.0
        X = np.asarray(X, order=order)
        sel = select_min_slab(X)
        bounds = np.array([i / (k + 1) for i in range(k + 1)])
        owner = np.searchsorted(bounds, X[:, 0], side="right") - 1
        counts = np.bincount(owner, minlength=k + 1)
        assert sel.k == k and sel.slab_index == int(np.argmin(counts))
        assert sel.inside_points.tolist() == np.flatnonzero(owner == sel.slab_index).tolist()


class TestEncodePoints:
    def test_midpoint_comparison(self):
        X = np.array([[0.1, 0.7], [0.3, 0.1], [0.3, 0.1], [0.6, 0.1], [0.6, 0.1], [0.9, 0.1]])
        sel = select_min_slab(X)
        assert (sel.k, sel.slab_index, sel.lo, sel.hi) == (3, 0, 0.0, 0.25)
        assert encode_points(sel, X).tolist() == [[0], [1]]

    def test_exact_midpoint_is_zero(self):
        sel = SlabSelection(k=3, ell=1, slab_index=0, lo=0.0, hi=0.25, inside_points=np.array([0]))
        bits = encode_points(sel, [[0.125, 0.5]])
        assert bits.tolist() == [[0], [0]]

    def test_empty_slab(self):
        sel = select_min_slab(PointSet.empty(3))
        assert encode_points(sel, PointSet.empty(3)).shape == (3, 0)


def brute_collision(bits):
    d, m = bits.shape
    rows = [tuple(r) for r in bits.tolist()]
    for i, r in enumerate(rows):
        if all(b == 0 for b in r):
            return CaseTag.ZERO_VECTOR, (i,)
    for i, r in enumerate(rows):
        if all(b == 1 for b in r):
            return CaseTag.ONES_VECTOR, (i,)
    for i, j in itertools.combinations(range(d), 2):
        if rows[i] == rows[j]:
            return CaseTag.DUPLICATE_PAIR, (i, j)
    return None


class TestFindCollision:
    def test_zero_vector(self):
        bits = np.array([[0, 1], [1, 0], [1, 1], [0, 0]])
        cert = find_collision(bits)
        assert (cert.case, cert.axes) == (CaseTag.ZERO_VECTOR, (3,))

    def test_duplicate_pair(self):
        bits = np.array([[0, 1], [1, 0], [0, 1], [1, 1]])
        cert = find_collision(bits)
        # axis 3 is all ones, which takes precedence over the duplicate
        assert (cert.case, cert.axes) == (CaseTag.ONES_VECTOR, (3,))
        bits = np.array([[0, 1], [1, 0], [0, 1], [1, 0]])
        cert = find_collision(bits)
        assert (cert.case, cert.axes, cert.uncovered) == (CaseTag.DUPLICATE_PAIR, (0, 2), "01")

    def test_single_bit(self):
        cert = find_collision(np.array([[0], [1]]))
        assert (cert.case, cert.axes) == (CaseTag.ZERO_VECTOR, (0,))

    def test_precondition(self):
        with pytest.raises(EmptyBoxError):
            find_collision(np.zeros((3, 2), dtype=np.uint8))
        with pytest.raises(EmptyBoxError):
            find_collision(np.zeros((3, 0), dtype=np.uint8))

    @settings(max_examples=300, deadline=None)
    @given(st.integers(2, 70).flatmap(
        lambda d: st.tuples(st.just(d), st.integers(1, floor_log2(d))).flatmap(
            lambda dm: st.lists(st.lists(st.integers(0, 1), min_size=dm[1], max_size=dm[1]),
                                min_size=dm[0], max_size=dm[0]))))
    def test_matches_brute_force(self, rows):
        bits = np.array(rows, dtype=np.uint8)
        cert = find_collision(bits)
        expected = brute_collision(bits)
        assert expected is not None
        assert (cert.case, cert.axes) == expected


class TestFindLargeEmptyBox:
    def test_no_points(self):
        res = find_large_empty_box(PointSet.empty(2))
        assert res.box == AxisBox.unit(2)
        assert res.certificate.case is CaseTag.WHOLE_SLAB
        assert res.volume == 1.0

    def test_single_centre_point(self):
        res = find_large_empty_box([[0.5, 0.5]])
        assert res.certificate.case is CaseTag.ZERO_VECTOR
        assert res.box == AxisBox((0.5, 0.0), (1.0, 1.0))
        assert res.volume == 0.5 >= 1 / 8

    def test_quarter_box_case(self):
        # one point in the unit slab, high on axis 0 and low on axis 1 except
        # axes 1 and 2 match -> d=4, m = 2 points
        X = np.array([[0.9, 0.9, 0.9, 0.1], [0.1, 0.1, 0.1, 0.9]])
        res = find_large_empty_box(X)
        assert res.selection.k == 0 and res.selection.m == 2
        assert res.certificate.case is CaseTag.DUPLICATE_PAIR
        assert res.certificate.axes == (0, 1)
        assert res.box == AxisBox((0, 0.5, 0, 0), (0.5, 1, 1, 1))
        assert res.volume == 0.25
        assert is_empty_box(res.box, X)

    def test_d16_n100(self):
        S = random_uniform(100, 16, seed=7)
        res = find_large_empty_box(S)
        assert is_empty_box(res.box, S)
        assert res.volume >= 4 / 416

    def test_rejects_d1(self):
        with pytest.raises(EmptyBoxError):
            find_large_empty_box([[0.3]])

    def test_deterministic(self):
        S = random_uniform(500, 9, seed=3)
        a, b = find_large_empty_box(S), find_large_empty_box(S.points.copy())
        assert a.box == b.box and a.certificate == b.certificate

    @settings(max_examples=300, deadline=None)
    @given(st.one_of(point_sets(), point_sets(grid=8), point_sets(max_d=70, max_n=40, grid=4)))
    def test_sound_and_large(self, S):
        res = find_large_empty_box(S)
        # independent per-point scan, not the vectorised mask
        assert not any(strictly_inside(res.box, p) for p in S.points.tolist())
        assert all(0.0 <= a < b <= 1.0 for a, b in zip(res.box.lo, res.box.hi))
        ell = floor_log2(S.dim)
        assert res.volume >= (ell + 1) / (4 * (S.n + ell + 1)) * (1 - 1e-12)
        assert res.volume >= guarantee(S.n, S.dim) - 1e-12

    @settings(max_examples=100, deadline=None)
    @given(point_sets(max_d=6, max_n=30))
    def test_volume_is_slab_fraction(self, S):
        res = find_large_empty_box(S)
        slab = res.selection.hi - res.selection.lo
        factor = {CaseTag.WHOLE_SLAB: 1, CaseTag.ZERO_VECTOR: 2, CaseTag.ONES_VECTOR: 2,
                  CaseTag.DUPLICATE_PAIR: 4}[res.certificate.case]
        assert res.volume == pytest.approx(slab / factor, rel=1e-12)

    def test_points_on_slab_boundaries(self):
        d, n = 4, 30
        ell = floor_log2(d)
        k = n // (ell + 1)
        xs = [i / (k + 1) for i in range(k + 1)] * 3
        X = np.column_stack([xs[:n]] + [np.full(n, 0.5)] * (d - 1))
        res = find_large_empty_box(X)
        assert is_empty_box(res.box, X)
        assert res.volume >= guarantee(n, d)

    def test_rejects_bad_first_coordinate(self):
        with pytest.raises(EmptyBoxError):
            find_large_empty_box([[1.5, 0.5], [0.2, 0.2]])
        with pytest.raises(EmptyBoxError):
            find_large_empty_box([[np.nan, 0.5]])

    def test_rejects_bad_point_in_slab(self):
        # the single point lands in the chosen slab, so all its coordinates are read
        with pytest.raises(EmptyBoxError):
            find_large_empty_box([[0.5, -0.1]])

    def test_raw_array_only_read_where_needed(self):
        # n=3, d=2: k=1, slab [0.5, 1] is empty, so row 0's second coordinate is
        # never read and the whole-slab answer stands (it is empty whatever y is)
        X = np.array([[0.1, 7.0], [0.2, 0.5], [0.3, 0.5]])
        res = find_large_empty_box(X)
        assert res.certificate.case is CaseTag.WHOLE_SLAB
        assert res.box == AxisBox((0.5, 0.0), (1.0, 1.0))

    def test_layout_does_not_matter(self):
        X = random_uniform(300, 12, seed=5).points
        a = find_large_empty_box(np.ascontiguousarray(X))
        b = find_large_empty_box(np.asfortranarray(X))
        assert a.box == b.box and a.certificate == b.certificate

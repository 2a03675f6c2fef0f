"""Recursive signed decomposition: hypervolume, EHVI, term structure."""

import itertools
import math
import random

import numpy as np
import pytest

from ehvi import (
    DimensionError,
    GaussianBelief,
    ProblemFrame,
    ReferenceBoundError,
    box_integral,
    dominated_volume,
    ehvi_wfg,
    exclusive_volume,
    full_region_integral,
    hypervolume,
    limit,
    nondominated_filter,
    signed_box_terms,
    validate_front,
    wfg_dominated_measure,
)
from helpers import min_front, random_belief, random_front
from oracles import brute_hvi, brute_hypervolume, rasterized_hv, staircase_hv_2d


def test_limit_examples():
    assert limit((1.0, 5.0), (3.0, 2.0)) == (3.0, 5.0)
    assert limit((2.0, 2.0), (2.0, 2.0)) == (2.0, 2.0)
    s, a = (1.0, 4.0, 2.0), (3.0, 0.0, 5.0)
    out = limit(s, a)
    assert all(x >= y for x, y in zip(out, s))
    assert all(x >= y for x, y in zip(out, a))
    with pytest.raises(DimensionError):
        limit((1.0, 2.0), (1.0, 2.0, 3.0))


def test_hypervolume_worked_example():
    assert dominated_volume([(1.0, 3.0), (2.0, 2.0), (3.0, 1.0)], (4.0, 4.0)) == 6.0
    assert hypervolume(min_front((4.0, 4.0), [(1, 3), (2, 2), (3, 1)])) == 6.0
    frame = ProblemFrame(2, (4.0, 4.0))
    generic = wfg_dominated_measure(
        [(1.0, 3.0), (2.0, 2.0), (3.0, 1.0)], frame, lambda b: b.volume()
    )
    assert generic == pytest.approx(6.0, rel=1e-14)


def test_hypervolume_trivial_cases():
    assert dominated_volume([], (4.0, 4.0)) == 0.0
    assert dominated_volume([(1.0, 2.0)], (4.0, 5.0)) == 3.0 * 3.0
    assert dominated_volume([(1.0, 2.0, 3.0)], (4.0, 4.0, 4.0)) == 3.0 * 2.0 * 1.0


def test_hypervolume_out_of_bound_point_rejected():
    with pytest.raises(ReferenceBoundError):
        dominated_volume([(5.0, 1.0)], (4.0, 4.0))


def test_hypervolume_matches_rasterization():
    for m, n, seed in [(2, 5, 0), (2, 8, 1), (3, 5, 2), (3, 8, 3)]:
        front = random_front(m, n, seed)
        exact = hypervolume(front)
        approx = rasterized_hv(front.points, front.reference, resolution=400)
        assert abs(exact - approx) <= 0.01 * exact


def test_hypervolume_matches_staircase_2d():
    for n, seed in [(1, 0), (5, 1), (12, 2), (30, 3)]:
        front = random_front(2, n, seed)
        assert hypervolume(front) == pytest.approx(
            staircase_hv_2d(front.points, front.reference), rel=1e-12
        )


def test_hypervolume_matches_inclusion_exclusion():
    for m, n, seed in [(2, 7, 0), (3, 6, 1), (4, 5, 2)]:
        front = random_front(m, n, seed)
        assert hypervolume(front) == pytest.approx(
            brute_hypervolume(front.points, front.reference), rel=1e-12
        )


def test_dominated_point_injection_is_invisible():
    front = random_front(3, 6, 5)
    ref = front.reference
    base = dominated_volume(front.points, ref)
    rng = np.random.default_rng(6)
    extras = []
    for p in front.points[:3]:
        extras.append(tuple(min(x + float(d), r - 1e-9) for x, d, r in
                            zip(p, rng.uniform(0.01, 0.5, 3), ref)))
    mixed = list(front.points) + extras
    assert dominated_volume(mixed, ref) == pytest.approx(base, rel=1e-12)
    assert dominated_volume(nondominated_filter(mixed), ref) == pytest.approx(base, rel=1e-12)


def test_hypervolume_monotone_growth():
    front = random_front(3, 8, 7)
    frame = ProblemFrame(3, front.reference)
    for k in range(1, front.n + 1):
        subset = nondominated_filter(front.points[:k])
        grown = hypervolume(validate_front(frame, subset))
        if k > 1:
            assert grown > prev
        prev = grown


def test_order_invariance():
    front = random_front(3, 10, 8)
    ref = front.reference
    base = dominated_volume(front.points, ref)
    pts = list(front.points)
    rng = random.Random(9)
    for _ in range(5):
        rng.shuffle(pts)
        assert dominated_volume(pts, ref) == pytest.approx(base, rel=1e-12)


def test_ehvi_wfg_empty_front_is_full_region():
    frame = ProblemFrame(2, (0.0, 0.0))
    std = GaussianBelief((0.0, 0.0), (1.0, 1.0))
    res = ehvi_wfg(validate_front(frame, []), std)
    assert res.value == full_region_integral(frame, std)
    assert res.boxes == 0


def test_ehvi_decomposition_identity():
    for m, n, seed in [(2, 8, 0), (3, 10, 1), (4, 8, 2)]:
        front = random_front(m, n, seed)
        belief = random_belief(m, seed + 20)
        full = full_region_integral(front.frame, belief)
        dominated = wfg_dominated_measure(
            front.points, front.frame, lambda b: box_integral(b, belief)
        )
        res = ehvi_wfg(front, belief)
        assert res.value + dominated == pytest.approx(full, rel=1e-12)


def test_prune_soundness():
    for m, n, seed in [(2, 8, 3), (3, 7, 4)]:
        front = random_front(m, n, seed)
        belief = random_belief(m, seed + 30)
        for measure in (lambda b: b.volume(), lambda b: box_integral(b, belief)):
            pruned = wfg_dominated_measure(front.points, front.frame, measure, prune=True)
            raw = wfg_dominated_measure(front.points, front.frame, measure, prune=False)
            assert raw == pytest.approx(pruned, rel=1e-12)


def test_term_count_bound_and_reporting():
    for m, n, seed in [(2, 10, 0), (3, 8, 1), (3, 14, 2), (4, 10, 3), (5, 8, 4)]:
        front = random_front(m, n, seed)
        res = ehvi_wfg(front, random_belief(m, seed + 40))
        assert 1 <= res.boxes <= 2**n - 1
        terms = signed_box_terms(front.points, front.reference)
        assert len(terms) == res.boxes


def test_signed_terms_sign_matches_depth():
    front = random_front(3, 8, 11)
    for t in signed_box_terms(front.points, front.reference):
        assert t.sign == (-1) ** t.depth
        assert t.box.upper == front.reference


def test_signed_terms_pointwise_indicator():
    for m, n, seed in [(2, 6, 0), (3, 6, 1), (3, 10, 2)]:
        front = random_front(m, n, seed)
        ref = front.reference
        terms = signed_box_terms(front.points, ref)
        rng = np.random.default_rng([13, seed])
        for _ in range(40):
            y = tuple(rng.uniform(-10.5, -0.05, m))
            if not all(v < r for v, r in zip(y, ref)):
                continue
            indicator = sum(
                t.sign for t in terms if all(v > lo for v, lo in zip(y, t.box.lower))
            )
            covered = any(all(a <= v for a, v in zip(p, y)) for p in front.points)
            assert indicator == (1 if covered else 0)


def test_signed_terms_measure_identity():
    front = random_front(3, 7, 14)
    ref = front.reference
    terms = signed_box_terms(front.points, ref)
    total = sum(
        t.sign * math.prod(r - lo for r, lo in zip(ref, t.box.lower)) for t in terms
    )
    assert total == pytest.approx(hypervolume(front), rel=1e-12)


def test_exclusive_volume_matches_inclusion_exclusion():
    front = random_front(3, 6, 15)
    rng = np.random.default_rng(16)
    for _ in range(20):
        y = tuple(rng.uniform(-9.9, -0.2, 3))
        got = exclusive_volume(y, front.points, front.reference)
        want = brute_hvi(y, front.points, front.reference)
        assert got == pytest.approx(want, rel=1e-12, abs=1e-12)


def test_ehvi_wfg_nonnegative_and_bounded_by_full():
    for seed in range(5):
        front = random_front(3, 9, seed)
        belief = random_belief(3, seed + 60)
        res = ehvi_wfg(front, belief)
        full = full_region_integral(front.frame, belief)
        assert 0.0 <= res.value <= full * (1.0 + 1e-12)

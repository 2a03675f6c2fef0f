"""Randomized invariants. Each suite runs 1000 generated cases.

The acceptance module calls these functions directly, so every test here
must stay a zero-argument callable.
"""

import math

from hypothesis import given, settings
from hypothesis import strategies as st

from ehvi import (
    GaussianBelief,
    HyperBox,
    Orientation,
    ProblemFrame,
    box_integral,
    dominates,
    from_internal,
    nondominated_filter,
    psi,
    std_normal_cdf,
    staircase_insert,
    to_internal,
)
from ehvi.clm3 import SweepState
from helpers import slab_integral

CASES = settings(max_examples=1000, deadline=None)

finite = st.floats(allow_nan=False, allow_infinity=False)


@CASES
@given(
    a=st.floats(-20.0, 20.0),
    b=st.floats(-20.0, 20.0),
    mu=st.floats(-10.0, 10.0),
    sigma=st.floats(0.5, 5.0),
)
def test_psi_monotone_and_derivative(a, b, mu, sigma):
    lo, hi = min(a, b), max(a, b)
    assert psi(lo, mu, sigma) <= psi(hi, mu, sigma)

    h = 1e-5
    central = (psi(a + h, mu, sigma) - psi(a - h, mu, sigma)) / (2.0 * h)
    assert abs(central - std_normal_cdf((a - mu) / sigma)) <= 1e-6


@CASES
@given(
    m=st.integers(2, 3),
    data=st.data(),
)
def test_box_integral_additive_and_bounded(m, data):
    mean = tuple(data.draw(st.floats(-5.0, 5.0)) for _ in range(m))
    sd = tuple(data.draw(st.floats(0.5, 3.0)) for _ in range(m))
    lower = tuple(
        mean[j] + data.draw(st.floats(-8.0, 7.5)) * sd[j] for j in range(m)
    )
    widths = tuple(data.draw(st.floats(0.1, 6.0)) for _ in range(m))
    upper = tuple(lower[j] + widths[j] for j in range(m))
    belief = GaussianBelief(mean, sd)
    box = HyperBox(lower, upper)

    whole = box_integral(box, belief)
    assert 0.0 <= whole <= math.prod(widths) * (1.0 + 1e-12)

    axis = data.draw(st.integers(0, m - 1))
    t = data.draw(st.floats(0.05, 0.95))
    mid = lower[axis] + t * widths[axis]
    left_upper = tuple(mid if j == axis else upper[j] for j in range(m))
    right_lower = tuple(mid if j == axis else lower[j] for j in range(m))
    parts = box_integral(HyperBox(lower, left_upper), belief) + box_integral(
        HyperBox(right_lower, upper), belief
    )
    assert math.isclose(whole, parts, rel_tol=1e-12, abs_tol=1e-300)


@CASES
@given(
    points=st.lists(
        st.tuples(st.integers(0, 5), st.integers(0, 5), st.integers(0, 5)),
        min_size=0,
        max_size=12,
    )
)
def test_nondominated_filter_invariants(points):
    pts = [tuple(float(c) for c in p) for p in points]
    front = nondominated_filter(pts)

    assert nondominated_filter(front) == front
    assert front == sorted(front)

    source = set(pts)
    for p in front:
        assert p in source
    for a in front:
        for b in front:
            assert not dominates(a, b)
    for p in pts:
        assert p in set(front) or any(
            dominates(q, p) or q == p for q in front
        )


@CASES
@given(
    count=st.integers(1, 10),
    data=st.data(),
)
def test_staircase_running_integral_consistent(count, data):
    mean = (data.draw(st.floats(-6.0, -1.0)), data.draw(st.floats(-6.0, -1.0)))
    sd = (data.draw(st.floats(0.5, 3.0)), data.draw(st.floats(0.5, 3.0)))
    belief = GaussianBelief(mean, sd)
    state = SweepState(belief=belief, reference=(0.0, 0.0))
    running = 0.0
    for _ in range(count):
        point = (data.draw(st.floats(-8.0, -0.1)), data.draw(st.floats(-8.0, -0.1)))
        running += staircase_insert(state, point)
        recomputed = slab_integral(state.keys, state.vals, (0.0, 0.0), belief)
        assert math.isclose(running, recomputed, rel_tol=1e-12, abs_tol=1e-300)


@CASES
@given(
    m=st.integers(2, 5),
    data=st.data(),
)
def test_orientation_involution_and_dominance(m, data):
    a = tuple(data.draw(st.floats(-100.0, 100.0)) for _ in range(m))
    b = tuple(data.draw(st.floats(-100.0, 100.0)) for _ in range(m))
    frames = {
        orientation: ProblemFrame(m, (1000.0,) * m, orientation)
        for orientation in (Orientation.MINIMIZE, Orientation.MAXIMIZE)
    }

    for frame in frames.values():
        assert to_internal(frame, to_internal(frame, a)) == a
        assert from_internal(frame, to_internal(frame, a)) == a

    max_frame = frames[Orientation.MAXIMIZE]
    max_dominates = all(x >= y for x, y in zip(a, b)) and a != b
    internal = dominates(to_internal(max_frame, a), to_internal(max_frame, b))
    assert internal == max_dominates
    assert dominates(a, b) == (all(x <= y for x, y in zip(a, b)) and a != b)

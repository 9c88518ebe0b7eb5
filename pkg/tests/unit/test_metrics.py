"""Unit tests for the correlation index and source matching."""

import itertools

import numpy as np
import pytest

from fastica_kit.utils.errors import DegenerateInputError
from fastica_kit.utils.metrics import (
    MatchReport,
    correlation,
    correlation_matrix,
    match_sources,
    optimal_assignment,
)


@pytest.mark.unit
def test_correlation_examples(rng):
    """Test self, negative-affine and orthogonal correlations."""
    x = rng.normal(size=200)
    assert correlation(x, x) == pytest.approx(1.0, abs=1e-12)
    assert correlation(x, -2 * x + 7) == pytest.approx(-1.0, abs=1e-12)
    assert correlation([1, -1, 1, -1], [1, 1, -1, -1]) == 0.0


@pytest.mark.unit
def test_correlation_is_symmetric_and_affine_equivariant(rng):
    """Test C(x, y) = C(y, x) and C(ax + b, y) = sign(a) C(x, y)."""
    for _ in range(100):
        x = rng.normal(size=500)
        y = 0.3 * x + rng.normal(size=500)
        a = rng.uniform(0.1, 10.0) * rng.choice([-1.0, 1.0])
        b = rng.uniform(-100.0, 100.0)

        assert correlation(x, y) == pytest.approx(correlation(y, x), abs=1e-12)
        assert correlation(a * x + b, y) == pytest.approx(
            np.sign(a) * correlation(x, y), abs=1e-10
        )


@pytest.mark.unit
def test_correlation_errors():
    """Test zero variance and length mismatch."""
    with pytest.raises(DegenerateInputError):
        correlation([3.0, 3.0, 3.0], [1.0, 2.0, 3.0])
    with pytest.raises(ValueError, match="Length mismatch"):
        correlation([1.0, 2.0], [1.0, 2.0, 3.0])


@pytest.mark.unit
def test_match_identity():
    """Test that estimates equal to the sources match one-to-one."""
    sources = np.array([[1.0, 2.0, 0.0, -1.0], [0.0, 1.0, 1.0, 3.0]])
    report = match_sources(sources, sources)
    assert isinstance(report, MatchReport)
    assert report.assignment == [0, 1]
    assert report.signs == [1, 1]
    assert report.c_ave == pytest.approx(1.0)


@pytest.mark.unit
def test_match_recovers_swap_and_sign(canonical_sources):
    """Test a row swap plus a negation is undone exactly."""
    estimates = canonical_sources[[1, 0, 2]].copy()
    estimates[2] *= -1

    report = match_sources(canonical_sources, estimates)

    assert report.assignment == [1, 0, 2]
    assert report.signs == [1, 1, -1]
    assert report.c_ave == pytest.approx(1.0)


@pytest.mark.unit
def test_c_ave_invariant_under_permutation_and_sign(canonical_sources, rng):
    """Test that reordering or flipping estimate rows leaves c_ave unchanged."""
    estimates = canonical_sources + 0.5 * rng.normal(size=canonical_sources.shape)
    baseline = match_sources(canonical_sources, estimates).c_ave
    for permutation in itertools.permutations(range(3)):
        flipped = estimates[list(permutation)] * rng.choice([-1.0, 1.0], size=(3, 1))
        assert match_sources(canonical_sources, flipped).c_ave == pytest.approx(
            baseline, abs=1e-12
        )


@pytest.mark.unit
def test_independent_noise_scores_low(rng):
    """Test that unrelated channels give c_ave well below 0.1."""
    sources = rng.normal(size=(3, 10000))
    estimates = rng.normal(size=(3, 10000))
    assert match_sources(sources, estimates).c_ave < 0.1


@pytest.mark.unit
@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_assignment_matches_brute_force(m):
    """Test optimal assignment against exhaustive search over all permutations."""
    rng = np.random.default_rng(100 + m)
    for _ in range(100):
        scores = np.abs(rng.uniform(-1.0, 1.0, size=(m, m)))
        assignment = optimal_assignment(scores)

        assert sorted(assignment.tolist()) == list(range(m))
        chosen = scores[np.arange(m), assignment].sum()
        best = max(
            scores[np.arange(m), list(permutation)].sum()
            for permutation in itertools.permutations(range(m))
        )
        assert chosen == pytest.approx(best, abs=1e-12)


@pytest.mark.unit
def test_match_with_estimate_resembling_both_sources():
    """Test pairing when one estimate correlates with both sources."""
    t = np.linspace(0, 1, 400)
    s0 = np.sin(2 * np.pi * 5 * t)
    s1 = np.sign(np.sin(2 * np.pi * 3 * t + 0.3))
    sources = np.vstack([s0, s1])
    estimates = np.vstack([s0 + 0.9 * s1, s0])

    report = match_sources(sources, estimates)
    c = np.abs(correlation_matrix(sources, estimates))
    assert report.assignment == [1, 0]
    assert report.c_ave == pytest.approx((c[0, 1] + c[1, 0]) / 2)


@pytest.mark.unit
def test_correlation_matrix_shape_and_degenerate_channel():
    """Test shape checking and the offending channel index."""
    good = np.array([[1.0, 2.0, 3.0], [3.0, 1.0, 2.0]])
    with pytest.raises(ValueError, match="same shape"):
        correlation_matrix(good, good[:1])

    bad = good.copy()
    bad[1] = 4.0
    with pytest.raises(DegenerateInputError) as excinfo:
        match_sources(good, bad)
    assert excinfo.value.channel == 1

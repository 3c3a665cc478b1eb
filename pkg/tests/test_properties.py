"""Randomized property suites run under several distinct seeds."""

import pytest

from circuitarray.properties import (dual_pipeline_suite, field_axiom_suite,
                                     metric_suite, symmetry_suite,
                                     transform_soundness_suite)

SEEDS = (0, 1, 2)


@pytest.mark.parametrize("seed", SEEDS)
def test_field_axioms_rational(seed):
    rep = field_axiom_suite("rational", seed=seed, rounds=40)
    assert rep.passed, rep.render(True)


@pytest.mark.parametrize("seed", SEEDS)
def test_field_axioms_symbolic(seed):
    rep = field_axiom_suite("symbolic", seed=seed, rounds=15)
    assert rep.passed, rep.render(True)


@pytest.mark.parametrize("seed", SEEDS)
def test_metric_axioms(seed):
    rep = metric_suite(seed=seed, graphs=8)
    assert rep.passed, rep.render(True)


@pytest.mark.parametrize("seed", SEEDS)
def test_grid_symmetry(seed):
    rep = symmetry_suite(seed=seed, rounds=6)
    assert rep.passed, rep.render(True)


def test_transform_soundness_sample():
    rep = transform_soundness_suite(seed=0, graphs=20)
    assert rep.passed, rep.render(True)


def test_dual_pipeline_sample():
    rep = dual_pipeline_suite(seed=0, random_grids=8, nmax_all_one=6)
    assert rep.passed, rep.render(True)


def test_field_kind_validated():
    with pytest.raises(ValueError):
        field_axiom_suite("complex", seed=0)

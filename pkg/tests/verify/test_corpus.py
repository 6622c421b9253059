import numpy as np
import pytest

from hardyops.config.limits import RANDOM_ZERO_RADIUS
from hardyops.operators.assembly import OperatorKind
from hardyops.operators.symbols import symbol_rational
from hardyops.verify.checks import VANISHING_CLASSES
from hardyops.verify.classify import SymbolClass, classify_symbol
from hardyops.verify.corpus import (
    CORPUS_CONFIGS,
    exact_vanishing_cases,
    kernel_class_instances,
    outside_instances,
    random_instances,
    random_thetas,
    vanishing_corpus,
)


@pytest.fixture(scope="module")
def corpus():
    return vanishing_corpus()


def test_corpus_pairs_members_with_offenders(corpus):
    labels = [case.label for case in corpus]

    assert len(corpus) == CORPUS_CONFIGS * len(VANISHING_CLASSES) * 2
    assert len(set(labels)) == len(labels)
    assert sum(case.member for case in corpus) == len(corpus) // 2


def test_corpus_membership_matches_classifier(corpus):
    for case in corpus:
        assert classify_symbol(case.phi, case.eta, case.theta, VANISHING_CLASSES[case.kind]) == case.member, case.label


def test_btto_cases_use_real_zeros(corpus):
    for case in corpus:
        if case.kind is OperatorKind.BTTO:
            assert np.allclose(np.imag(case.theta.zeros), 0.0)


def test_exact_cases_match_classifier():
    for case in exact_vanishing_cases():
        assert classify_symbol(case.phi, case.eta, case.theta, VANISHING_CLASSES[case.kind]) == case.member


def test_random_instances_depend_only_on_seed():
    first = random_instances(3, 4)
    second = random_instances(3, 4)

    assert [instance.label for instance in first] == ["random-000", "random-001", "random-002", "random-003"]
    for a, b in zip(first, second):
        np.testing.assert_array_equal(a.phi.coeffs, b.phi.coeffs)
        assert a.theta == b.theta
        assert a.eta == b.eta


@pytest.mark.parametrize("seed", [1, 7, 2024])
def test_outside_instances_are_never_eta_bar_members(seed):
    for instance in outside_instances(seed, 40):
        exact = symbol_rational(instance.phi)

        assert instance.phi.lo <= -(instance.eta.degree + 1)
        assert not classify_symbol(exact, instance.eta, instance.theta, SymbolClass.ETA_BAR_HINF), instance.label


def test_random_zeros_stay_inside_radius():
    for theta in random_thetas(5, 30):
        assert 1 <= theta.degree <= 4
        assert np.all(np.abs(theta.zeros) <= RANDOM_ZERO_RADIUS + 1e-12)


def test_kernel_class_labels():
    instances = kernel_class_instances(2, 3)

    assert [instance.label for instance in instances] == ["kernel-000", "kernel-001", "kernel-002"]

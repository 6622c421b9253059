'''
Named check suites over the bundled corpus and seeded random instances.

A suite is planned completely before anything runs: every instance is drawn
from generators seeded by the run seed and a fixed per-suite stream, so the
reports depend only on (config, seed) and never on the number of jobs.
'''

from __future__ import annotations

import logging
from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import StrEnum
from functools import partial

import numpy as np

from hardyops.fourier.rational import RationalSymbol
from hardyops.inner.functions import blaschke
from hardyops.schemas.run_config import RunConfig
from hardyops.verify.checks import (
    check_adjoint_defects,
    check_backward_shift,
    check_commutator_formula,
    check_decompositions,
    check_intertwining,
    check_projection_identity,
    check_rho_defect,
    check_rto_defect,
    check_vanishing,
    probe_intertwining,
)
from hardyops.verify.corpus import (
    exact_vanishing_cases,
    kernel_class_instances,
    outside_instances,
    random_instances,
    random_polynomial,
    random_thetas,
    vanishing_corpus,
)
from hardyops.verify.records import CheckReport, Status, Verdict

logger = logging.getLogger(__name__)

RANDOM_PROJECTION_THETAS = 20
RANDOM_DEFECT_INSTANCES = 100
KERNEL_CLASS_INSTANCES = 20
ADJOINT_DEFECT_INSTANCES = 20
INTERTWINING_INSTANCES = 50
PROBE_INSTANCES = 20
COMMUTATOR_INSTANCES = 20
DECOMPOSITION_INSTANCES = 30


class SuiteName(StrEnum):
    ALL = "all"
    DEFECTS = "defects"
    VANISHING = "vanishing"
    DECOMPOSITIONS = "decompositions"
    INTERTWINING = "intertwining"
    PROJECTIONS = "projections"


# independent random streams per suite, so adding checks to one suite
# never reshuffles the instances of another
_STREAMS = {
    SuiteName.PROJECTIONS: 1,
    SuiteName.DEFECTS: 2,
    SuiteName.INTERTWINING: 3,
    SuiteName.DECOMPOSITIONS: 4,
}


@dataclass(frozen=True, slots=True)
class PlannedCheck:
    check_id: str
    run: Callable[..., CheckReport]


@dataclass(frozen=True, slots=True)
class SuiteResult:
    suite: SuiteName
    seed: int
    reports: tuple[CheckReport, ...]

    @property
    def failed(self) -> bool:
        return any(report.is_certified_failure for report in self.reports)

    def count(self, verdict: Verdict) -> int:
        return sum(1 for report in self.reports if report.verdict is verdict)

    def summary(self) -> str:
        heuristic = sum(1 for report in self.reports if report.status is Status.HEURISTIC)
        return (
            f"suite {self.suite.value}: {len(self.reports)} checks, "
            f"{self.count(Verdict.PASS)} passed, {self.count(Verdict.FAIL)} failed, "
            f"{self.count(Verdict.INCONCLUSIVE)} inconclusive, {heuristic} heuristic"
        )


def stream_seed(seed: int, suite: SuiteName, part: int = 0) -> int:
    """
    Child seed for one part of one suite.
    """
    state = np.random.SeedSequence([seed, _STREAMS[suite], part]).generate_state(1)
    return int(state[0])


def _common(config: RunConfig) -> dict:
    return {"expansion_factor": config.internal_expansion_factor, "seed": config.seed}


def plan_projections(config: RunConfig) -> list[PlannedCheck]:
    n = config.window
    common = {**_common(config), "threshold": config.tol_identity}
    fixed = {
        "z2": blaschke(0, 0),
        "b0.5": blaschke(0.5),
        "b0.5-b-0.3": blaschke(0.5, -0.3),
    }
    shift_fixed = {
        "z3": blaschke(0, 0, 0),
        "b0.5": blaschke(0.5),
        "b0.5-b0.3i": blaschke(0.5, 0.3j),
    }
    thetas = random_thetas(stream_seed(config.seed, SuiteName.PROJECTIONS), RANDOM_PROJECTION_THETAS)

    planned = []
    for label, theta in fixed.items():
        check_id = f"projections/identity/{label}"
        planned.append(PlannedCheck(check_id, partial(check_projection_identity, theta, n, check_id=check_id, **common)))
    for index, theta in enumerate(thetas):
        check_id = f"projections/identity/random-{index:03d}"
        planned.append(PlannedCheck(check_id, partial(check_projection_identity, theta, n, check_id=check_id, **common)))
    for label, theta in shift_fixed.items():
        check_id = f"projections/backward_shift/{label}"
        planned.append(PlannedCheck(check_id, partial(check_backward_shift, theta, n, check_id=check_id, **common)))
    for index, theta in enumerate(thetas):
        check_id = f"projections/backward_shift/random-{index:03d}"
        planned.append(PlannedCheck(check_id, partial(check_backward_shift, theta, n, check_id=check_id, **common)))
    return planned


def plan_defects(config: RunConfig) -> list[PlannedCheck]:
    n = config.window
    common = {**_common(config), "threshold": config.tol_identity}
    z = blaschke(0)
    fixed = [
        ("rto", "exact-z", check_rto_defect, RationalSymbol.monomial(-1), z, z),
        ("rto", "member-z", check_rto_defect, RationalSymbol.monomial(1), z, blaschke(0, 0)),
        ("rho", "exact-z", check_rho_defect, RationalSymbol.constant(1.0), z, z),
    ]
    instances = random_instances(stream_seed(config.seed, SuiteName.DEFECTS), RANDOM_DEFECT_INSTANCES)
    kernel = kernel_class_instances(stream_seed(config.seed, SuiteName.DEFECTS, 1), KERNEL_CLASS_INSTANCES)

    planned = []
    for name, label, check, phi, eta, theta in fixed:
        check_id = f"defects/{name}/{label}"
        planned.append(PlannedCheck(check_id, partial(check, phi, eta, theta, n, check_id=check_id, **common)))
    for instance in instances:
        for name, check in (("rto", check_rto_defect), ("rho", check_rho_defect)):
            check_id = f"defects/{name}/{instance.label}"
            run = partial(check, instance.phi, instance.eta, instance.theta, n, check_id=check_id, **common)
            planned.append(PlannedCheck(check_id, run))
    for instance in kernel:
        check_id = f"defects/rho/{instance.label}"
        run = partial(check_rho_defect, instance.phi, instance.eta, instance.theta, n, check_id=check_id, **common)
        planned.append(PlannedCheck(check_id, run))
    for instance in instances[:ADJOINT_DEFECT_INSTANCES]:
        check_id = f"defects/adjoint/{instance.label}"
        run = partial(check_adjoint_defects, instance.phi, instance.eta, instance.theta, n, check_id=check_id, **common)
        planned.append(PlannedCheck(check_id, run))
    return planned


def plan_intertwining(config: RunConfig) -> list[PlannedCheck]:
    n = config.window
    common = {**_common(config), "threshold": config.tol_identity}
    rng = np.random.default_rng(stream_seed(config.seed, SuiteName.INTERTWINING))
    fixed = [
        ("z-b0.5", RationalSymbol.from_coefficients([1.0, 1.0], [1.0]), blaschke(0), blaschke(0.5)),
        ("one-z2", RationalSymbol.monomial(1), blaschke(), blaschke(0, 0)),
    ]
    instances = random_instances(stream_seed(config.seed, SuiteName.INTERTWINING, 1), INTERTWINING_INSTANCES)

    planned = []
    for label, psi, eta, theta in fixed:
        check_id = f"intertwining/forward/{label}"
        planned.append(PlannedCheck(check_id, partial(check_intertwining, psi, eta, theta, n, check_id=check_id, **common)))
    for instance in instances:
        psi = random_polynomial(rng, 5)
        check_id = f"intertwining/forward/{instance.label}"
        run = partial(check_intertwining, psi, instance.eta, instance.theta, n, check_id=check_id, **common)
        planned.append(PlannedCheck(check_id, run))

    check_id = "intertwining/probe/z-z3"
    run = partial(
        probe_intertwining,
        RationalSymbol.monomial(-2),
        blaschke(0),
        blaschke(0, 0, 0),
        n,
        separation_factor=config.separation_factor,
        check_id=check_id,
        **common,
    )
    planned.append(PlannedCheck(check_id, run))
    outside = outside_instances(stream_seed(config.seed, SuiteName.INTERTWINING, 2), PROBE_INSTANCES)
    for instance in outside:
        check_id = f"intertwining/probe/{instance.label}"
        run = partial(
            probe_intertwining,
            instance.phi,
            instance.eta,
            instance.theta,
            n,
            separation_factor=config.separation_factor,
            check_id=check_id,
            **common,
        )
        planned.append(PlannedCheck(check_id, run))
    for instance in instances[:COMMUTATOR_INSTANCES]:
        check_id = f"intertwining/commutator/{instance.label}"
        run = partial(check_commutator_formula, instance.phi, instance.eta, instance.theta, n, check_id=check_id, **common)
        planned.append(PlannedCheck(check_id, run))
    return planned


def plan_decompositions(config: RunConfig) -> list[PlannedCheck]:
    n = config.window
    common = {**_common(config), "threshold": config.tol_identity}
    fixed = [
        ("z2-z", RationalSymbol.from_laurent(-1, [1.0, 1.0, 1.0]), blaschke(0), blaschke(0, 0)),
        ("b0.5", RationalSymbol.monomial(-2), blaschke(), blaschke(0.5)),
    ]
    instances = random_instances(stream_seed(config.seed, SuiteName.DECOMPOSITIONS), DECOMPOSITION_INSTANCES)

    planned = []
    for label, phi, eta, theta in fixed:
        check_id = f"decompositions/{label}"
        planned.append(PlannedCheck(check_id, partial(check_decompositions, phi, eta, theta, n, check_id=check_id, **common)))
    for instance in instances:
        check_id = f"decompositions/{instance.label}"
        run = partial(check_decompositions, instance.phi, instance.eta, instance.theta, n, check_id=check_id, **common)
        planned.append(PlannedCheck(check_id, run))
    return planned


def plan_vanishing(config: RunConfig) -> list[PlannedCheck]:
    n = config.window
    planned = []
    for case in [*exact_vanishing_cases(), *vanishing_corpus()]:
        check_id = f"vanishing/{case.label}"
        run = partial(
            check_vanishing,
            case.kind,
            case.phi,
            case.eta,
            case.theta,
            n,
            threshold=config.tol_vanishing,
            separation_factor=config.separation_factor,
            check_id=check_id,
            **_common(config),
        )
        planned.append(PlannedCheck(check_id, run))
    return planned


_PLANNERS: dict[SuiteName, Callable[[RunConfig], list[PlannedCheck]]] = {
    SuiteName.PROJECTIONS: plan_projections,
    SuiteName.DEFECTS: plan_defects,
    SuiteName.INTERTWINING: plan_intertwining,
    SuiteName.DECOMPOSITIONS: plan_decompositions,
    SuiteName.VANISHING: plan_vanishing,
}


def plan_suite(name: SuiteName, config: RunConfig) -> list[PlannedCheck]:
    name = SuiteName(name)
    if name is SuiteName.ALL:
        return [check for planner in _PLANNERS.values() for check in planner(config)]
    return _PLANNERS[name](config)


def run_suite(name: SuiteName, config: RunConfig) -> SuiteResult:
    '''
    Plan and run one suite.

    Args:
        name (SuiteName): Suite to run; ALL runs every suite.
        config (RunConfig): Window, tolerances, seed and job count.

    Returns:
        SuiteResult: Reports sorted by check_id.
    '''
    name = SuiteName(name)
    planned = plan_suite(name, config)
    logger.info("running suite %s: %d checks on %d jobs", name.value, len(planned), config.jobs)

    if config.jobs == 1:
        reports = [check.run() for check in planned]
    else:
        with ThreadPoolExecutor(max_workers=config.jobs) as pool:
            reports = list(pool.map(lambda check: check.run(), planned))

    result = SuiteResult(name, config.seed, tuple(sorted(reports, key=lambda report: report.check_id)))
    logger.info(result.summary())
    return result

'''
Check reports and the verdict rule shared by every suite.

A report carries the residual of one identity on its trusted window, the
threshold it was judged against and a digest of its inputs. Vanishing
checks fail above the threshold; separation checks need the residual to
clear separation_factor x threshold, and anything in between is
INCONCLUSIVE rather than a failure. Only a CERTIFIED FAIL fails a suite.
'''

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from enum import StrEnum
from typing import Any

_DIGEST_VERSION = "hardyops-check-v1"


class Status(StrEnum):
    CERTIFIED = "CERTIFIED"
    HEURISTIC = "HEURISTIC"


class Expectation(StrEnum):
    VANISH = "VANISH"        # residual must stay below the threshold
    SEPARATE = "SEPARATE"    # residual must clear separation_factor x threshold


class Verdict(StrEnum):
    PASS = "PASS"
    FAIL = "FAIL"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True, slots=True)
class CheckReport:
    """
    Outcome of one check, re-runnable from inputs_digest plus the run config.
    """

    check_id: str
    statement: str
    residual: float
    threshold: float
    passed: bool
    trusted_window: tuple[tuple[int, int], ...]
    inputs_digest: str
    status: Status
    expectation: Expectation
    verdict: Verdict
    seed: int | None = None
    notes: str = ""

    @property
    def is_certified_failure(self) -> bool:
        return self.status is Status.CERTIFIED and self.verdict is Verdict.FAIL

    def to_dict(self) -> dict[str, Any]:
        return {
            "check_id": self.check_id,
            "statement": self.statement,
            "residual": self.residual,
            "threshold": self.threshold,
            "passed": self.passed,
            "trusted_window": [list(pair) for pair in self.trusted_window],
            "inputs_digest": self.inputs_digest,
            "status": self.status.value,
            "expectation": self.expectation.value,
            "verdict": self.verdict.value,
            "seed": self.seed,
            "notes": self.notes,
        }

    def summary_line(self) -> str:
        return (
            f"{self.verdict.value:<12} {self.status.value:<9} {self.check_id} "
            f"residual={self.residual:.3e} threshold={self.threshold:.1e}"
        )


def digest(inputs: dict[str, Any]) -> str:
    '''
    Stable fingerprint of a check's inputs.

    Args:
        inputs (dict[str, Any]): JSON-ready description of the inputs and
            numerical parameters.

    Returns:
        str: Hex sha256 of the canonical JSON encoding.
    '''
    canonical = json.dumps(
        inputs,
        ensure_ascii=False,
        allow_nan=False,
        separators=(",", ":"),
        sort_keys=True,
    )
    return hashlib.sha256(f"{_DIGEST_VERSION}\0{canonical}".encode("utf-8")).hexdigest()


def judge(
    residual: float,
    threshold: float,
    expectation: Expectation,
    separation_factor: float,
) -> tuple[bool, Verdict]:
    """
    Vanishing checks pass at or below the threshold. Separation checks pass
    at or above separation_factor x threshold and are INCONCLUSIVE in between.
    """
    if expectation is Expectation.VANISH:
        passed = residual <= threshold
        return passed, Verdict.PASS if passed else Verdict.FAIL

    if residual >= separation_factor * threshold:
        return True, Verdict.PASS
    if residual > threshold:
        return False, Verdict.INCONCLUSIVE
    return False, Verdict.FAIL


def build_report(
    check_id: str,
    statement: str,
    residual: float,
    threshold: float,
    *,
    inputs: dict[str, Any],
    certified: bool,
    trusted_window: tuple[tuple[int, int], ...],
    expectation: Expectation = Expectation.VANISH,
    separation_factor: float = 10.0,
    seed: int | None = None,
    notes: str = "",
) -> CheckReport:
    residual = float(residual)
    passed, verdict = judge(residual, threshold, expectation, separation_factor)
    return CheckReport(
        check_id=check_id,
        statement=statement,
        residual=residual,
        threshold=float(threshold),
        passed=passed,
        trusted_window=tuple(tuple(int(i) for i in pair) for pair in trusted_window),
        inputs_digest=digest({**inputs, "threshold": threshold, "seed": seed}),
        status=Status.CERTIFIED if certified else Status.HEURISTIC,
        expectation=expectation,
        verdict=verdict,
        seed=seed,
        notes=notes,
    )

import pytest

from hardyops.utils.domain_exceptions import (
    AssemblyError,
    AtomSingularity,
    BasisMismatch,
    HardyOpsError,
    InvalidInnerFunction,
    InvalidSpecError,
    NoCircleAnnulus,
    NotFiniteBlaschke,
    PoleOnCircle,
    WindowTooSmall,
)


def test_hardyops_error_stores_fields():
    exc = HardyOpsError(exit_code=3, code="SOMETHING", message="went wrong", detail={"x": 1})

    assert exc.exit_code == 3
    assert exc.code == "SOMETHING"
    assert exc.message == "went wrong"
    assert exc.detail == {"x": 1}
    assert str(exc) == "went wrong"


def test_invalid_spec_error_exits_with_two():
    exc = InvalidSpecError(code="BAD", message="bad input")

    assert exc.exit_code == 2
    assert exc.detail is None


def test_assembly_error_exits_with_three():
    exc = AssemblyError(code="BROKEN", message="could not assemble")

    assert exc.exit_code == 3


@pytest.mark.parametrize(
    ("exception_type", "base", "code"),
    [
        (InvalidInnerFunction, InvalidSpecError, "INVALID_INNER_FUNCTION"),
        (NoCircleAnnulus, InvalidSpecError, "NO_CIRCLE_ANNULUS"),
        (PoleOnCircle, AssemblyError, "POLE_ON_CIRCLE"),
        (AtomSingularity, AssemblyError, "ATOM_SINGULARITY"),
        (NotFiniteBlaschke, AssemblyError, "NOT_FINITE_BLASCHKE"),
        (WindowTooSmall, AssemblyError, "WINDOW_TOO_SMALL"),
        (BasisMismatch, AssemblyError, "BASIS_MISMATCH"),
    ],
)
def test_specific_errors_carry_their_code(exception_type, base, code):
    exc = exception_type("message", detail=[1, 2])

    assert isinstance(exc, base)
    assert exc.code == code
    assert exc.message == "message"
    assert exc.detail == [1, 2]


def test_domain_errors_can_be_caught_as_hardyops_error():
    with pytest.raises(HardyOpsError) as exc_info:
        raise WindowTooSmall("window must contain at least two indices.")

    assert exc_info.value.exit_code == 3

from typing import Any, Optional


class HardyOpsError(Exception):
    def __init__(self, *, exit_code: int, code: str, message: str, detail=None):
        self.exit_code = exit_code
        self.code = code
        self.message = message
        self.detail = detail
        super().__init__(message)


class InvalidSpecError(HardyOpsError):
    def __init__(self, *, code: str, message: str, detail: Optional[Any] = None):
        super().__init__(exit_code=2, code=code, message=message, detail=detail)


class AssemblyError(HardyOpsError):
    def __init__(self, *, code: str, message: str, detail: Optional[Any] = None):
        super().__init__(exit_code=3, code=code, message=message, detail=detail)


class InvalidInnerFunction(InvalidSpecError):
    def __init__(self, message: str, detail: Optional[Any] = None):
        super().__init__(code="INVALID_INNER_FUNCTION", message=message, detail=detail)


class NoCircleAnnulus(InvalidSpecError):
    def __init__(self, message: str, detail: Optional[Any] = None):
        super().__init__(code="NO_CIRCLE_ANNULUS", message=message, detail=detail)


class PoleOnCircle(AssemblyError):
    def __init__(self, message: str, detail: Optional[Any] = None):
        super().__init__(code="POLE_ON_CIRCLE", message=message, detail=detail)


class AtomSingularity(AssemblyError):
    def __init__(self, message: str, detail: Optional[Any] = None):
        super().__init__(code="ATOM_SINGULARITY", message=message, detail=detail)


class NotFiniteBlaschke(AssemblyError):
    def __init__(self, message: str, detail: Optional[Any] = None):
        super().__init__(code="NOT_FINITE_BLASCHKE", message=message, detail=detail)


class WindowTooSmall(AssemblyError):
    def __init__(self, message: str, detail: Optional[Any] = None):
        super().__init__(code="WINDOW_TOO_SMALL", message=message, detail=detail)


class BasisMismatch(AssemblyError):
    def __init__(self, message: str, detail: Optional[Any] = None):
        super().__init__(code="BASIS_MISMATCH", message=message, detail=detail)

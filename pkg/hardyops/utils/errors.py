'''
Exception-to-exit-code mapping for the command-line entry points.

Keeps one place where library errors become process exit codes:
- invalid user input (bad grammar, bad descriptors) exits with 2
- assembly failures exit with 3
- anything unexpected is logged with a traceback and exits with 3
'''

import logging
import sys

from hardyops.parsing.grammar import SpecParseError
from hardyops.utils.domain_exceptions import HardyOpsError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INVALID_SPEC = 2
EXIT_ASSEMBLY_FAILED = 3


def exit_code_for(exc: BaseException) -> int:
    '''
    Map an exception raised by a command to its process exit code.

    Args:
        exc (BaseException): The exception raised while running a command.

    Returns:
        int: 2 for invalid specs, the error's own code for domain errors, 3 otherwise.
    '''
    if isinstance(exc, SpecParseError):
        return EXIT_INVALID_SPEC

    if isinstance(exc, HardyOpsError):
        return exc.exit_code

    return EXIT_ASSEMBLY_FAILED


def report_failure(exc: BaseException, *, command: str) -> int:
    '''
    Log and print a command failure, returning the exit code to use.

    Args:
        exc (BaseException): The exception raised by the command.
        command (str): Sub-command name used in the human-readable message.

    Returns:
        int: The exit code from exit_code_for.
    '''
    code = exit_code_for(exc)

    if isinstance(exc, HardyOpsError):
        logger.info("domain error %s: %s", exc.code, exc.message)
        suffix = f" ({exc.detail})" if exc.detail is not None else ""
        print(f"{command} failed [{exc.code}]: {exc.message}{suffix}", file=sys.stderr)
    elif isinstance(exc, SpecParseError):
        logger.info("spec parse error: %s", exc)
        print(f"{command} failed: {exc}", file=sys.stderr)
    else:
        logger.error("unhandled: %s", exc, exc_info=True)
        print(f"{command} failed: {exc}", file=sys.stderr)

    return code

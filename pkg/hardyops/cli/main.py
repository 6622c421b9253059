from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Sequence
from pathlib import Path

from hardyops.config.settings import settings
from hardyops.exports.writers import (
    reports_summary,
    write_basis,
    write_matrix,
    write_reports,
    write_series,
    write_study,
)
from hardyops.inner.functions import InnerFunction
from hardyops.operators.assembly import UNIT, OperatorKind, assemble
from hardyops.operators.symbols import symbol_config, symbol_series
from hardyops.parsing.grammar import parse_inner, parse_symbol
from hardyops.schemas.run_config import RunConfig, build_run_config
from hardyops.schemas.sidecar import MatrixSidecar
from hardyops.utils.errors import EXIT_CHECK_FAILED, EXIT_OK, report_failure
from hardyops.verify.rank import rank_study
from hardyops.verify.records import Status, Verdict
from hardyops.verify.suites import SuiteName, run_suite

logger = logging.getLogger(__name__)


def _positive_int(value: str) -> int:
    try:
        parsed = int(value)
    except ValueError as exc:
        raise argparse.ArgumentTypeError("value must be an integer.") from exc

    if parsed < 1:
        raise argparse.ArgumentTypeError("value must be greater than zero.")

    return parsed


def _windows(value: str) -> tuple[int, ...]:
    try:
        return tuple(_positive_int(token.strip()) for token in value.split(",") if token.strip())
    except argparse.ArgumentTypeError as exc:
        raise argparse.ArgumentTypeError(f"windows must be comma-separated positive integers: {value!r}") from exc


def _config_flags() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("-N", "--window", type=int, help="Last reported index N.")
    parent.add_argument("--expansion-factor", type=int, help="Internal expansion order per window index.")
    parent.add_argument("--tol-identity", type=float, help="Threshold for identity checks.")
    parent.add_argument("--tol-vanishing", type=float, help="Threshold for vanishing checks.")
    parent.add_argument("--tol-rank", type=float, help="Relative singular-value threshold for numerical rank.")
    parent.add_argument("--separation-factor", type=float, help="Factor a non-vanishing residual must clear.")
    parent.add_argument("--seed", type=int, help="Random seed; falls back to HARDYOPS_SEED.")
    parent.add_argument("--jobs", type=_positive_int, help="Worker threads for independent checks.")
    parent.add_argument("--config", type=Path, help="Flat key=value file with run configuration.")
    parent.add_argument("--output-dir", type=Path, help="Directory for written files.")
    parent.add_argument("--format", choices=("json", "csv"), help="Report format for verify.")
    return parent


def _operator_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--kind",
        required=True,
        choices=[kind.value for kind in OperatorKind],
        help="Operator to build.",
    )
    parser.add_argument("--phi", required=True, help="Symbol: laurent:, rational: or kronecker: spec.")
    parser.add_argument("--eta", help="Beurling inner function, blaschke: spec (default 1).")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hardyops",
        description="Assemble and verify restricted Toeplitz and Hankel operators on Hardy space.",
    )
    commands = parser.add_subparsers(dest="command", required=True)
    config = _config_flags()

    assemble_parser = commands.add_parser(
        "assemble",
        parents=[config],
        help="Write one operator matrix as CSV with a JSON sidecar.",
    )
    _operator_flags(assemble_parser)
    assemble_parser.add_argument("--theta", help="Model inner function, blaschke: spec.")
    assemble_parser.add_argument(
        "--dump-bases",
        action="store_true",
        help="Also write the domain and codomain bases and the symbol coefficients.",
    )

    verify_parser = commands.add_parser("verify", parents=[config], help="Run a check suite.")
    verify_parser.add_argument(
        "--suite",
        choices=[suite.value for suite in SuiteName],
        default=SuiteName.ALL.value,
        help="Suite to run.",
    )

    study_parser = commands.add_parser(
        "study",
        parents=[config],
        help="Numerical rank and singular values across windows.",
    )
    _operator_flags(study_parser)
    study_parser.add_argument("--theta", required=True, help="Model inner function, may carry atoms.")
    study_parser.add_argument("--windows", type=_windows, required=True, help="Ascending windows, e.g. 50,100,200.")
    study_parser.add_argument("--top-k", type=_positive_int, default=5, help="Singular values kept per window.")
    return parser


def _run_config(arguments: argparse.Namespace) -> RunConfig:
    return build_run_config(
        config_file=arguments.config,
        overrides={
            "window": arguments.window,
            "internal_expansion_factor": arguments.expansion_factor,
            "tol_identity": arguments.tol_identity,
            "tol_vanishing": arguments.tol_vanishing,
            "tol_rank": arguments.tol_rank,
            "separation_factor": arguments.separation_factor,
            "seed": arguments.seed,
            "jobs": arguments.jobs,
            "output_dir": arguments.output_dir,
            "format": arguments.format,
        },
    )


def _inner(spec: str | None) -> InnerFunction | None:
    return None if spec is None else parse_inner(spec)


def cmd_assemble(arguments: argparse.Namespace) -> int:
    config = _run_config(arguments)
    eta, theta = _inner(arguments.eta), _inner(arguments.theta)
    phi = parse_symbol(arguments.phi, eta=eta, theta=theta)
    kind = OperatorKind(arguments.kind)

    matrix = assemble(
        kind,
        phi,
        eta,
        theta,
        window=config.window,
        expansion_factor=config.internal_expansion_factor,
    )
    rows, cols = matrix.trusted_window()
    sidecar = MatrixSidecar(
        kind=kind.value,
        shape=matrix.shape,
        domain=matrix.domain.to_config(),
        codomain=matrix.codomain.to_config(),
        entry_error=matrix.entry_error,
        trusted_rows=rows,
        trusted_cols=cols,
        certified=matrix.certified,
        window=config.window,
        expansion_factor=config.internal_expansion_factor,
        symbol=symbol_config(phi),
        eta=None if eta is None else eta.to_config(),
        theta=None if theta is None else theta.to_config(),
    )

    stem = config.output_dir / f"{kind.value}-N{config.window}"
    written = list(write_matrix(matrix, sidecar, stem))
    if arguments.dump_bases:
        order = config.internal_expansion_factor * (config.window + 1)
        written.append(write_basis(matrix.domain, stem.with_name(f"{stem.name}-domain.csv")))
        written.append(write_basis(matrix.codomain, stem.with_name(f"{stem.name}-codomain.csv")))
        written.append(write_series(symbol_series(phi, order), stem.with_name(f"{stem.name}-symbol.txt")))

    for path in written:
        print(path)
    print(
        f"assembled {kind.value} {matrix.shape[0]}x{matrix.shape[1]} "
        f"(entry_error {matrix.entry_error:.3e}, certified={matrix.certified})",
        file=sys.stderr,
    )
    return EXIT_OK


def cmd_verify(arguments: argparse.Namespace) -> int:
    config = _run_config(arguments)
    result = run_suite(SuiteName(arguments.suite), config)

    data, summary = write_reports(result.reports, config.output_dir / f"verify-{result.suite.value}", config.format)
    print(data)
    print(summary)

    sys.stderr.write(reports_summary(result.reports))
    print(result.summary(), file=sys.stderr)

    heuristic_failures = [
        report
        for report in result.reports
        if report.status is Status.HEURISTIC and report.verdict is not Verdict.PASS
    ]
    if heuristic_failures:
        logger.warning("%d heuristic checks did not pass", len(heuristic_failures))

    return EXIT_CHECK_FAILED if result.failed else EXIT_OK


def cmd_study(arguments: argparse.Namespace) -> int:
    config = _run_config(arguments)
    eta, theta = _inner(arguments.eta), parse_inner(arguments.theta)
    phi = parse_symbol(arguments.phi, eta=eta, theta=theta)
    kind = OperatorKind(arguments.kind)

    study = rank_study(
        kind,
        phi,
        UNIT if eta is None else eta,
        theta,
        arguments.windows,
        expansion_factor=config.internal_expansion_factor,
        tol_rank=config.tol_rank,
        top_k=arguments.top_k,
    )

    for path in write_study(study, config.output_dir / f"study-{kind.value}", arguments.top_k):
        print(path)
    print(f"{kind.value}: ranks {list(study.ranks)} -> {study.verdict.value} ({study.status.value})", file=sys.stderr)
    return EXIT_OK


_COMMANDS = {
    "assemble": cmd_assemble,
    "verify": cmd_verify,
    "study": cmd_study,
}


def main(
    argv: Sequence[str] | None = None,
) -> int:
    arguments = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if settings.debug else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )

    try:
        return _COMMANDS[arguments.command](arguments)
    except Exception as exc:
        return report_failure(exc, command=arguments.command)


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())

'''
CSV, JSON and text writers for series, bases, matrices, reports and studies.

Floats are written with repr-exact formatting and rows in a fixed order, so
identical inputs produce byte-identical files.
'''

from __future__ import annotations

import csv
import io
import json
import logging
from collections.abc import Iterable, Sequence
from pathlib import Path

from hardyops.fourier.series import CoeffSeries
from hardyops.operators.matrix import OperatorMatrix
from hardyops.schemas.sidecar import MatrixSidecar
from hardyops.spaces.bases import Basis, materialize, span, stack
from hardyops.verify.rank import RankStudy
from hardyops.verify.records import CheckReport

logger = logging.getLogger(__name__)

REPORT_COLUMNS = (
    "check_id",
    "statement",
    "residual",
    "threshold",
    "passed",
    "inputs_digest",
    "status",
    "expectation",
    "verdict",
    "seed",
    "notes",
)


def _number(value: float) -> str:
    return repr(float(value))


def _write_text(path: Path, text: str) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8", newline="")
    logger.info("wrote %s", path)
    return path


def _named(stem: Path, suffix: str) -> Path:
    return stem.with_name(stem.name + suffix)


def _csv_text(rows: Iterable[Sequence[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerows(rows)
    return buffer.getvalue()


def series_record(series: CoeffSeries) -> str:
    """
    tail_bound header, then one `index re im` line per stored coefficient.
    """
    lines = [f"tail_bound {_number(series.tail_bound)}"]
    for offset, value in enumerate(series.coeffs.tolist()):
        lines.append(f"{series.lo + offset} {_number(value.real)} {_number(value.imag)}")
    return "\n".join(lines) + "\n"


def write_series(series: CoeffSeries, path: Path) -> Path:
    return _write_text(path, series_record(series))


def basis_csv(basis: Basis) -> str:
    '''
    One row per basis vector over the common coefficient span.

    Returns:
        str: Header `vector,c<i>_re,c<i>_im,...` followed by the rows.
    '''
    vectors = materialize(basis)
    lo, hi = span(vectors)
    coordinates = stack(vectors, lo, hi)

    header = ["vector"]
    for index in range(lo, hi + 1):
        header.extend((f"c{index}_re", f"c{index}_im"))

    rows = [header]
    for k in range(coordinates.shape[1]):
        row = [str(k)]
        for value in coordinates[:, k].tolist():
            row.extend((_number(value.real), _number(value.imag)))
        rows.append(row)
    return _csv_text(rows)


def write_basis(basis: Basis, path: Path) -> Path:
    return _write_text(path, basis_csv(basis))


def matrix_csv(matrix: OperatorMatrix) -> str:
    """
    Row-major entries, each as an `re,im` pair.
    """
    rows = []
    for row in matrix.entries.tolist():
        cells = []
        for value in row:
            cells.extend((_number(value.real), _number(value.imag)))
        rows.append(cells)
    return _csv_text(rows)


def write_matrix(matrix: OperatorMatrix, sidecar: MatrixSidecar, stem: Path) -> tuple[Path, Path]:
    '''
    Write the matrix CSV and its JSON sidecar next to each other.

    Args:
        matrix (OperatorMatrix): Assembled operator.
        sidecar (MatrixSidecar): Description of bases, sizes and trust.
        stem (Path): Output path without suffix.

    Returns:
        tuple[Path, Path]: (csv path, json path).
    '''
    csv_path = _write_text(_named(stem, ".csv"), matrix_csv(matrix))
    json_path = _write_text(
        _named(stem, ".json"),
        json.dumps(sidecar.model_dump(mode="json"), indent=2, ensure_ascii=False, allow_nan=False) + "\n",
    )
    return csv_path, json_path


def reports_json(reports: Sequence[CheckReport]) -> str:
    return json.dumps([report.to_dict() for report in reports], indent=2, ensure_ascii=False, allow_nan=False) + "\n"


def reports_csv(reports: Sequence[CheckReport]) -> str:
    rows = [list(REPORT_COLUMNS)]
    for report in reports:
        fields = report.to_dict()
        rows.append(["" if fields[name] is None else str(fields[name]) for name in REPORT_COLUMNS])
    return _csv_text(rows)


def reports_summary(reports: Sequence[CheckReport]) -> str:
    return "".join(f"{report.summary_line()}\n" for report in reports)


def write_reports(reports: Sequence[CheckReport], stem: Path, fmt: str = "json") -> tuple[Path, Path]:
    '''
    Write the machine-readable reports and the one-line-per-check summary.

    Args:
        reports (Sequence[CheckReport]): Reports in their canonical order.
        stem (Path): Output path without suffix.
        fmt (str): "json" for a JSON array, "csv" for one row per report.

    Returns:
        tuple[Path, Path]: (reports path, summary path).
    '''
    if fmt == "csv":
        data = _write_text(_named(stem, ".csv"), reports_csv(reports))
    else:
        data = _write_text(_named(stem, ".json"), reports_json(reports))
    summary = _write_text(_named(stem, ".txt"), reports_summary(reports))
    return data, summary


def study_csv(study: RankStudy, top_k: int) -> str:
    """
    One row per window: N, numerical rank and the leading singular values.
    """
    rows = [["N", "rank", *(f"s{i + 1}" for i in range(top_k))]]
    for sample in study.samples:
        values = [_number(s) for s in sample.singular_values]
        values.extend([""] * (top_k - len(values)))
        rows.append([str(sample.window), str(sample.numerical_rank), *values])
    return _csv_text(rows)


def study_verdict_line(study: RankStudy) -> str:
    return f"verdict {study.verdict.value} status {study.status.value}: {study.note}\n"


def write_study(study: RankStudy, stem: Path, top_k: int) -> tuple[Path, Path]:
    csv_path = _write_text(_named(stem, ".csv"), study_csv(study, top_k))
    verdict_path = _write_text(_named(stem, ".verdict.txt"), study_verdict_line(study))
    return csv_path, verdict_path

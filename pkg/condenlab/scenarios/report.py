# -*- coding: utf-8 -*-
# @Time    : 2024/5/17 09:26
# @Author  : YQ Tsui
# @File    : report.py
# @Purpose : CSV, JSON and SVG output of trajectories

import json
import logging
import math
import os
import re
import tempfile
import threading
from pathlib import Path
from typing import Callable, Iterable, Optional, Union

import matplotlib
from matplotlib.figure import Figure
from pandas.api.types import is_bool_dtype, is_numeric_dtype

from ..core.errors import ReportError
from .trajectory import Trajectory, plain_value

logger = logging.getLogger(__name__)

SVG_RC = {
    "svg.hashsalt": "condenlab",
    "svg.fonttype": "none",
    "path.simplify": False,
}
# held while rcParams are swapped for a figure
_SVG_LOCK = threading.Lock()


def _atomic_write(path: Path, write: Callable[[str], None]):
    fd, tmp = tempfile.mkstemp(prefix=f".{path.name}.", suffix=".tmp", dir=path.parent)
    os.close(fd)
    try:
        write(tmp)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _json_value(value):
    value = plain_value(value)
    if isinstance(value, float) and not math.isfinite(value):
        return None
    if isinstance(value, list):
        return [_json_value(v) for v in value]
    if isinstance(value, dict):
        return {k: _json_value(v) for k, v in value.items()}
    return value


def to_json_document(trajectory: Trajectory) -> dict:
    return {
        "metadata": _json_value(trajectory.metadata),
        "columns": trajectory.columns,
        "rows": [[_json_value(v) for v in row] for row in trajectory.table.itertuples(index=False, name=None)],
    }


def _write_csv(trajectory: Trajectory, path: Path):
    def write(tmp: str):
        with open(tmp, "w", encoding="utf-8", newline="") as f:
            trajectory.table.to_csv(f, index=False, lineterminator="\n")

    _atomic_write(path, write)


def _write_json(trajectory: Trajectory, path: Path):
    text = json.dumps(to_json_document(trajectory), sort_keys=True, indent=2, allow_nan=False) + "\n"

    def write(tmp: str):
        with open(tmp, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)

    _atomic_write(path, write)


def plot_columns(trajectory: Trajectory) -> list[str]:
    """Numeric, non-boolean columns other than the x column."""
    table = trajectory.table
    return [
        str(col)
        for col in table.columns[1:]
        if is_numeric_dtype(table[col]) and not is_bool_dtype(table[col])
    ]


def _slug(name: str) -> str:
    return re.sub(r"[^A-Za-z0-9_.-]+", "_", name).strip("_") or "column"


def _write_svg(trajectory: Trajectory, column: str, path: Path):
    table = trajectory.table
    x_col = table.columns[0]
    if is_numeric_dtype(table[x_col]) and not is_bool_dtype(table[x_col]):
        x, x_label = table[x_col].to_numpy(dtype=float), str(x_col)
    else:
        x, x_label = list(range(len(table))), "row"

    with _SVG_LOCK, matplotlib.rc_context(SVG_RC):
        fig = Figure(figsize=(8, 4))
        ax = fig.add_subplot()
        (line,) = ax.plot(x, table[column].to_numpy(dtype=float))
        line.set_gid(_slug(column))
        ax.set_xlabel(x_label)
        ax.set_ylabel(column)
        ax.set_title(f"{trajectory.scenario}: {column}")
        fig.tight_layout()
        _atomic_write(path, lambda tmp: fig.savefig(tmp, format="svg", metadata={"Date": None}))


def emit_report(
    trajectory: Trajectory,
    formats: Iterable[str],
    output_dir: Union[str, Path],
    stem: Optional[str] = None,
) -> list[Path]:
    """
    Writes a trajectory to disk. Each file is written to a temporary name and renamed into place.

    csv: header row plus one line per row, LF line endings. json: metadata, columns and rows.
    svg: one line plot per numeric column against the first column. An empty trajectory still
    gets its CSV header and JSON metadata; SVG output is skipped for it.

    :param trajectory: The run to write.
    :type trajectory: Trajectory
    :param formats: Any of csv, json and svg.
    :type formats: Iterable[str]
    :param output_dir: Target directory; created if missing.
    :type output_dir: Union[str, Path]
    :param stem: File name stem; defaults to ``<scenario>_seed<seed>``.
    :type stem: str, optional
    :return: Paths written, in format order.
    :rtype: list[Path]
    :raises ReportError: When the directory or a file cannot be written.
    """
    out = Path(output_dir)
    stem = stem or f"{trajectory.scenario}_seed{trajectory.seed}"
    written = []
    try:
        out.mkdir(parents=True, exist_ok=True)
        for fmt in dict.fromkeys(formats):
            if fmt == "csv":
                path = out / f"{stem}.csv"
                _write_csv(trajectory, path)
                written.append(path)
            elif fmt == "json":
                path = out / f"{stem}.json"
                _write_json(trajectory, path)
                written.append(path)
            elif fmt == "svg":
                if trajectory.empty:
                    logger.warning("%s: empty trajectory, no figures written", trajectory.scenario)
                    continue
                columns = plot_columns(trajectory)
                if len(columns) < len(trajectory.columns) - 1:
                    logger.warning("%s: non-numeric columns are not plotted", trajectory.scenario)
                for column in columns:
                    path = out / f"{stem}_{_slug(column)}.svg"
                    _write_svg(trajectory, column, path)
                    written.append(path)
            else:
                raise ReportError(f"unknown output format {fmt!r}")
    except OSError as e:
        if isinstance(e, ReportError):
            raise
        raise ReportError(f"cannot write report to {out}: {e}") from e
    for path in written:
        logger.info("wrote %s", path)
    return written

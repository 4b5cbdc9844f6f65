"""Decomposition matrices: specialize canonical basis vectors at q = 1."""

from __future__ import annotations

import csv
import io
import json
import logging
from dataclasses import dataclass, field

from .afun import a1
from .canonical import CanonicalBasis
from .laurent import ZERO, LaurentPoly
from .mpart import Multipartition, ParamSet, enumerate_dpartitions

log = logging.getLogger(__name__)

FORMATS = ("text", "csv", "json")


@dataclass
class DecompositionMatrix:
    """Rows: every multipartition of rank n. Columns: FLOTW labels.

    Both are listed by increasing a_1 (canonical order among ties), so the
    matrix is lower unitriangular on the FLOTW rows. ``entries`` keeps the
    q-polynomials; integer decomposition numbers come from ``value``.
    """

    params: ParamSet
    n: int
    rows: list[Multipartition]
    cols: list[Multipartition]
    entries: dict[tuple[Multipartition, Multipartition], LaurentPoly] = field(default_factory=dict)

    def poly(self, row: Multipartition, col: Multipartition) -> LaurentPoly:
        return self.entries.get((row, col), ZERO)

    def value(self, row: Multipartition, col: Multipartition) -> int:
        return self.poly(row, col).eval_at_one()

    def column(self, col: Multipartition, q_mode: bool = False) -> dict[Multipartition, object]:
        out = {}
        for row in self.rows:
            c = self.poly(row, col)
            if c:
                out[row] = c if q_mode else c.eval_at_one()
        return out


def _a_order(mps, p: ParamSet) -> list[Multipartition]:
    return sorted(mps, key=lambda mp: (a1(mp, p), mp.sort_key()))


def assemble(basis: CanonicalBasis) -> DecompositionMatrix:
    p = basis.params
    rows = _a_order(enumerate_dpartitions(basis.rank, p.d), p)
    cols = _a_order(basis.entries, p)
    m = DecompositionMatrix(p, basis.rank, rows, cols)
    for col in cols:
        for row, c in basis[col].terms.items():
            m.entries[(row, col)] = c
            if c.eval_at_one() < 0:
                log.warning("negative decomposition number at (%s, %s)", row, col)
    return m


def _cell(m: DecompositionMatrix, row, col, q_mode: bool) -> str:
    c = m.poly(row, col)
    if not c or (not q_mode and c.eval_at_one() == 0):
        return "."
    return str(c) if q_mode else str(c.eval_at_one())


def to_text(m: DecompositionMatrix, q_mode: bool = False) -> str:
    grid = [[""] + [str(c) for c in m.cols]]
    for row in m.rows:
        grid.append([str(row)] + [_cell(m, row, col, q_mode) for col in m.cols])
    widths = [max(len(line[k]) for line in grid) for k in range(len(grid[0]))]
    lines = []
    for line in grid:
        first = line[0].ljust(widths[0])
        rest = [cell.rjust(w) for cell, w in zip(line[1:], widths[1:])]
        lines.append("  ".join([first] + rest).rstrip())
    return "\n".join(lines) + "\n"


def to_csv(m: DecompositionMatrix) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([""] + [str(c) for c in m.cols])
    for row in m.rows:
        w.writerow([str(row)] + [m.value(row, col) for col in m.cols])
    return buf.getvalue()


def to_json(m: DecompositionMatrix, q_mode: bool = False) -> str:
    columns = []
    for col in m.cols:
        entries = []
        for row, c in m.column(col, q_mode=True).items():
            if q_mode:
                value = [[exp, coeff] for exp, coeff in c.terms()]
            else:
                value = c.eval_at_one()
                if value == 0:
                    continue
            entries.append({"row": str(row), "value": value})
        columns.append({"label": str(col), "entries": entries})
    doc = {
        "e": m.params.e,
        "d": m.params.d,
        "v": list(m.params.v),
        "n": m.n,
        "rows": [str(r) for r in m.rows],
        "columns": columns,
    }
    return json.dumps(doc, indent=2) + "\n"


def from_json(text: str) -> DecompositionMatrix:
    """Read back what :func:`to_json` writes. Integer values load as constants."""
    doc = json.loads(text)
    p = ParamSet(doc["e"], tuple(doc["v"]))
    if p.d != doc["d"]:
        raise ValueError(f"d={doc['d']} disagrees with v of length {p.d}")
    rows = [Multipartition.parse(r) for r in doc["rows"]]
    cols = [Multipartition.parse(c["label"]) for c in doc["columns"]]
    m = DecompositionMatrix(p, doc["n"], rows, cols)
    for col, col_doc in zip(cols, doc["columns"]):
        for entry in col_doc["entries"]:
            value = entry["value"]
            if isinstance(value, int):
                poly = LaurentPoly.constant(value)
            else:
                poly = LaurentPoly.from_terms((exp, coeff) for exp, coeff in value)
            m.entries[(Multipartition.parse(entry["row"]), col)] = poly
    return m


def serialize(m: DecompositionMatrix, fmt: str = "text", q_mode: bool = False) -> str:
    if fmt == "text":
        return to_text(m, q_mode)
    if fmt == "csv":
        if q_mode:
            raise ValueError("csv output is only available for specialized (q=1) matrices")
        return to_csv(m)
    if fmt == "json":
        return to_json(m, q_mode)
    raise ValueError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")

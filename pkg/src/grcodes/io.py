"""Plain-text matrices, code bundles, alist files and JSON summaries."""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from grcodes.codes import LinearCode
from grcodes.errors import ParseError
from grcodes.groupring import format_element

SCHEMA_VERSION = 1


def _rows_text(M: np.ndarray) -> list[str]:
    return [" ".join(str(int(x)) for x in row) for row in np.asarray(M)]


def format_matrix(M, field: str) -> str:
    """Header ``ncols nrows field``, then one space-separated row per line."""
    M = np.asarray(M)
    if M.ndim != 2:
        raise ValueError("expected a 2-D matrix")
    lines = [f"{M.shape[1]} {M.shape[0]} {field}"] + _rows_text(M)
    return "\n".join(lines) + "\n"


def _parse_rows(lines: list[str], ncols: int, what: str) -> np.ndarray:
    rows = []
    for line in lines:
        try:
            row = [int(x) for x in line.split()]
        except ValueError:
            raise ParseError(f"non-integer entry in {what}", line, 0) from None
        if len(row) != ncols:
            raise ParseError(f"{what} row has {len(row)} entries, expected {ncols}", line, 0)
        rows.append(row)
    return np.array(rows, dtype=np.int64).reshape(len(rows), ncols)


def parse_matrix(text: str) -> tuple[np.ndarray, str]:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty matrix file", text, 0)
    head = lines[0].split()
    if len(head) != 3:
        raise ParseError("matrix header must be 'ncols nrows field'", lines[0], 0)
    n, k, field = int(head[0]), int(head[1]), head[2]
    M = _parse_rows(lines[1:], n, "matrix")
    if M.shape[0] != k:
        raise ParseError(f"expected {k} rows, found {M.shape[0]}", lines[0], 0)
    return M, field


# -- code bundle ----------------------------------------------------------------


@dataclass(frozen=True)
class Bundle:
    n: int
    k: int
    field: str
    group: str
    element: str
    basis: str
    generator: np.ndarray
    check: np.ndarray


def format_bundle(code: LinearCode, group: str = "-", field: str | None = None) -> str:
    """Header ``n k field group element basis``, generator rows, blank line, check rows."""
    prov = code.provenance
    field = field or f"gf{code.p}"
    elem = format_element(prov.element, compact=True) if prov.element is not None else "-"
    basis = str(prov.basis) if prov.basis is not None else "-"
    if prov.element is not None and group == "-":
        group = str(prov.element.group)
    head = f"{code.n} {code.k} {field} {group} {elem} {basis}"
    return "\n".join([head, *_rows_text(code.generator), "", *_rows_text(code.check)]) + "\n"


def parse_bundle(text: str) -> Bundle:
    lines = text.splitlines()
    if not lines:
        raise ParseError("empty bundle", text, 0)
    head = lines[0].split()
    if len(head) != 6:
        raise ParseError("bundle header must be 'n k field group element basis'", lines[0], 0)
    n, k = int(head[0]), int(head[1])
    body = lines[1:]
    try:
        blank = next(i for i, ln in enumerate(body) if not ln.strip())
    except StopIteration:
        raise ParseError("bundle is missing the blank line before the check rows", text, 0) from None
    G = _parse_rows(body[:blank], n, "generator")
    H = _parse_rows([ln for ln in body[blank + 1 :] if ln.strip()], n, "check")
    if G.shape[0] != k:
        raise ParseError(f"header says k={k}, found {G.shape[0]} generator rows", lines[0], 0)
    return Bundle(n, k, head[2], head[3], head[4], head[5], G, H)


# -- alist --------------------------------------------------------------------


def format_alist(H) -> str:
    """MacKay alist for a 0/1 matrix with ``N`` columns and ``M`` rows."""
    H = np.asarray(H) % 2
    m, n = H.shape
    cols = [np.flatnonzero(H[:, j]) + 1 for j in range(n)]
    rows = [np.flatnonzero(H[i]) + 1 for i in range(m)]
    cmax = max((len(c) for c in cols), default=0)
    rmax = max((len(r) for r in rows), default=0)

    def padded(lists, width):
        out = []
        for lst in lists:
            vals = [int(x) for x in lst] + [0] * (width - len(lst))
            out.append(" ".join(map(str, vals)))
        return out

    lines = [
        f"{n} {m}",
        f"{cmax} {rmax}",
        " ".join(str(len(c)) for c in cols),
        " ".join(str(len(r)) for r in rows),
        *padded(cols, cmax),
        *padded(rows, rmax),
    ]
    return "\n".join(lines) + "\n"


def parse_alist(text: str) -> np.ndarray:
    lines = text.splitlines()
    try:
        n, m = map(int, lines[0].split())
        H = np.zeros((m, n), dtype=np.int64)
        for j in range(n):
            for x in map(int, lines[4 + j].split()):
                if x:
                    H[x - 1, j] = 1
        for i in range(m):
            for x in map(int, lines[4 + n + i].split()):
                if x and not H[i, x - 1]:
                    raise ParseError("row and column lists disagree", lines[4 + n + i], 0)
    except (IndexError, ValueError):
        raise ParseError("malformed alist", text[:80], 0) from None
    return H


# -- json ---------------------------------------------------------------------


def json_summary(code: LinearCode, flags: dict | None = None, extra: dict | None = None) -> str:
    """Versioned parameter summary; matrices stay in the text bundle."""
    prov = code.provenance
    doc = {
        "schema": SCHEMA_VERSION,
        "n": code.n,
        "k": code.k,
        "d": code.distance_value,
        "field": f"gf{code.p}",
        "flags": flags or {},
        "provenance": {
            "element": format_element(prov.element) if prov.element is not None else None,
            "group": str(prov.element.group) if prov.element is not None else None,
            "basis": list(prov.basis.indices) if prov.basis is not None else None,
            "side": prov.side,
            "kind": prov.kind,
            "note": prov.note,
        },
    }
    if extra:
        doc.update(extra)
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"

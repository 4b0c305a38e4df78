"""
Сериализация матриц COD в текст, JSON, CSV и LaTeX.

Текст и JSON читаются обратно без потерь (см. :mod:`codforge.formats`);
CSV и LaTeX предназначены только для вывода.
"""

import csv
import io
import json

from .matrix import CODMatrix, Entry


def to_text(m: CODMatrix) -> str:
    return str(m) + "\n"


def _json_cell(e: Entry):
    if e.is_zero:
        return None
    return {"v": e.var, "s": e.sign, "c": e.conj}


def to_json_dict(m: CODMatrix) -> dict:
    """Словарь JSON-представления; таблица имён включается, если она есть."""
    data = {
        "p": m.p,
        "n": m.n,
        "k": m.k,
        "cells": [[_json_cell(e) for e in row] for row in m.cells],
    }
    if m.names is not None:
        data["names"] = {str(v): str(name) for v, name in sorted(m.names.items())}
    return data


def to_json(m: CODMatrix) -> str:
    return json.dumps(to_json_dict(m), ensure_ascii=False) + "\n"


def to_csv(m: CODMatrix) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, quoting=csv.QUOTE_ALL, lineterminator="\n")
    for row in m.cells:
        writer.writerow([str(e) for e in row])
    return buffer.getvalue()


def to_latex(m: CODMatrix) -> str:
    """
    Окружение ``pmatrix`` с ячейками вида ``-z_{2}^{*}``.

    Example:
        >>> print(to_latex(CODMatrix([[Entry(1), Entry(2)]], 2)), end="")
        \\begin{pmatrix}
        z_{1} & z_{2} \\\\
        \\end{pmatrix}
    """
    lines = ["\\begin{pmatrix}"]
    for row in m.cells:
        lines.append(" & ".join(e.latex() for e in row) + " \\\\")
    lines.append("\\end{pmatrix}")
    return "\n".join(lines) + "\n"

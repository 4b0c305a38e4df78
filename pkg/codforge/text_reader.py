import re
from pathlib import Path

from .abstract import MatrixReader
from .errors import ArgumentError, ParseError
from .matrix import CODMatrix, Entry

_TOKEN = re.compile(r"\S+")


class TextReader(MatrixReader):
    """
    Ридер текстового формата: одна строка матрицы на строку файла,
    ячейки разделены пробелами, запись ячейки ``0`` | [``-``] ``z`` <id> [``*``].

    Пустые строки и строки, начинающиеся с ``#``, пропускаются.

    Example:
        >>> m = TextReader.parse_text("z1 z2\\n-z2* z1*\\n")
        >>> m.params
        (2, 2, 2)
    """

    def __init__(self, filepath: str | Path):
        super().__init__(filepath)

    @classmethod
    def parse_text(cls, text: str) -> CODMatrix:
        rows = []
        width = None
        first_line = None
        for lineno, line in enumerate(text.splitlines(), 1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            row = []
            for match in _TOKEN.finditer(line):
                try:
                    row.append(Entry.from_token(match.group()))
                except ParseError as e:
                    raise ParseError(str(e), lineno, match.start() + 1) from None
            if width is None:
                width, first_line = len(row), lineno
            elif len(row) != width:
                raise ParseError(
                    f"Ожидалось {width} ячеек, как в строке {first_line}, получено {len(row)}", lineno
                )
            rows.append(row)
        if not rows:
            raise ParseError("Входные данные не содержат ни одной строки матрицы")
        try:
            return CODMatrix(rows, width)
        except ArgumentError as e:
            raise ParseError(str(e)) from None

"""
Единая точка разбора и сериализации матриц.

Формат входа определяется автоматически: если первый непробельный символ
равен ``{``, содержимое читается как JSON, иначе как текст.
"""

from pathlib import Path
from typing import TextIO

from .errors import ArgumentError, ParseError
from .json_reader import JsonReader
from .matrix import CODMatrix
from .text_reader import TextReader
from .writers import to_csv, to_json, to_latex, to_text

FORMATS = ("text", "json", "csv", "latex")

_WRITERS = {"text": to_text, "json": to_json, "csv": to_csv, "latex": to_latex}
_READERS = {"text": TextReader, "json": JsonReader}


def detect_format(text: str) -> str:
    return "json" if text.lstrip().startswith("{") else "text"


def parse(text: str, fmt: str | None = None) -> CODMatrix:
    """
    Разбирает матрицу из строки.

    Args:
        text (str): Содержимое в текстовом или JSON-формате.
        fmt (str | None): ``"text"``, ``"json"`` или None для автоопределения.

    Returns:
        CODMatrix: Прочитанная матрица.

    Raises:
        ArgumentError: Если формат не поддерживает чтение.
        ParseError: Если содержимое некорректно.
    """
    fmt = fmt or detect_format(text)
    if fmt not in _READERS:
        raise ArgumentError(f"Формат {fmt!r} не поддерживает чтение; допустимы text и json")
    return _READERS[fmt].parse_text(text)


def serialize(m: CODMatrix, fmt: str = "text") -> str:
    if fmt not in _WRITERS:
        raise ArgumentError(f"Неизвестный формат {fmt!r}; допустимы {', '.join(FORMATS)}")
    return _WRITERS[fmt](m)


def read_matrix(source: str | Path | TextIO) -> CODMatrix:
    """
    Читает матрицу из файла или открытого потока с автоопределением формата.

    Args:
        source (str | Path | TextIO): Путь к файлу или поток (например, sys.stdin).

    Returns:
        CODMatrix: Прочитанная матрица.
    """
    try:
        if hasattr(source, "read"):
            return parse(source.read())
        with open(source, "r", encoding="utf-8") as handle:
            head = handle.read(4096)
        reader_cls = _READERS[detect_format(head)]
        with reader_cls(source) as reader:
            return reader.read()
    except UnicodeDecodeError as e:
        name = getattr(source, "name", source)
        raise ParseError(f"Вход {name} не в кодировке UTF-8: {e.reason}") from e

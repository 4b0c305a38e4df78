import json
from pathlib import Path

from .abstract import MatrixReader
from .errors import ArgumentError, ParseError
from .f2vec import F2Vec
from .matrix import ZERO, CODMatrix, Entry


class JsonReader(MatrixReader):
    """
    Ридер JSON-формата.

    Ожидается объект ``{"p", "n", "k", "cells", "names"?}``, где ``cells`` есть
    список строк, а каждая ячейка либо ``null``, либо ``{"v": id, "s": ±1, "c": bool}``.
    Поля ``p``, ``n`` и ``k`` сверяются с фактическими размерами матрицы.
    """

    def __init__(self, filepath: str | Path):
        super().__init__(filepath)

    @staticmethod
    def _entry(raw, r: int, c: int) -> Entry:
        if raw is None:
            return ZERO
        if not isinstance(raw, dict) or not {"v", "s", "c"} <= set(raw):
            raise ParseError(f"Ячейка ({r}, {c}) должна быть null или объектом с полями v, s, c")
        v, s, conj = raw["v"], raw["s"], raw["c"]
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise ParseError(f"Ячейка ({r}, {c}): номер переменной должен быть целым >= 1")
        if s not in (1, -1) or isinstance(s, bool) or not isinstance(conj, bool):
            raise ParseError(f"Ячейка ({r}, {c}): некорректный знак или флаг сопряжения")
        return Entry(v, s, conj)

    @classmethod
    def parse_text(cls, text: str) -> CODMatrix:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError(f"Некорректный JSON: {e.msg}", e.lineno, e.colno) from None
        if not isinstance(data, dict) or not isinstance(data.get("cells"), list):
            raise ParseError("Ожидался JSON-объект с полем cells")
        rows = []
        for r, raw_row in enumerate(data["cells"], 1):
            if not isinstance(raw_row, list):
                raise ParseError(f"Строка {r} поля cells должна быть списком")
            rows.append([cls._entry(raw, r, c) for c, raw in enumerate(raw_row, 1)])
        if not rows:
            raise ParseError("Поле cells не содержит строк")
        n = data.get("n", len(rows[0]))
        names = None
        if data.get("names") is not None:
            try:
                names = {int(key): F2Vec.parse(value) for key, value in data["names"].items()}
            except (AttributeError, TypeError, ValueError) as e:
                raise ParseError(f"Некорректная таблица имён: {e}") from None
        try:
            m = CODMatrix(rows, n, names)
        except (ArgumentError, TypeError) as e:
            raise ParseError(str(e)) from None
        for key, actual in (("p", m.p), ("k", m.k)):
            if key in data and data[key] != actual:
                raise ParseError(f"Поле {key}={data[key]} не совпадает с фактическим значением {actual}")
        return m

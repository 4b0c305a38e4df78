"""
Символьная модель комплексного ортогонального дизайна (COD).

Ячейка матрицы либо ноль, либо ``±z_j`` / ``±z_j^*``: линейная обработка
внутри ячейки не допускается. Проверка ортогональности вынесена в модуль
:mod:`codforge.verify`; здесь только типы данных и их инварианты.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .errors import ArgumentError, ParseError
from .f2vec import F2Vec


@dataclass(frozen=True)
class Entry:
    """
    Одна ячейка матрицы.

    Attributes:
        var (int): Номер переменной 1..k; 0 означает нулевую ячейку.
        sign (int): Знак +1 или -1.
        conj (bool): True, если переменная входит сопряжённой.
    """

    var: int = 0
    sign: int = 1
    conj: bool = False

    def __post_init__(self):
        if self.var < 0:
            raise ArgumentError(f"Номер переменной не может быть отрицательным: {self.var}")
        if self.sign not in (1, -1):
            raise ArgumentError(f"Знак должен быть +1 или -1, получено {self.sign}")
        if self.var == 0 and (self.sign != 1 or self.conj):
            # у нуля нет знака и сопряжения
            object.__setattr__(self, "sign", 1)
            object.__setattr__(self, "conj", False)

    @property
    def is_zero(self) -> bool:
        return self.var == 0

    def negated(self) -> "Entry":
        return self if self.is_zero else Entry(self.var, -self.sign, self.conj)

    def conjugated(self) -> "Entry":
        return self if self.is_zero else Entry(self.var, self.sign, not self.conj)

    @classmethod
    def from_token(cls, token: str) -> "Entry":
        """
        Разбирает запись текстового формата: ``0`` | [``-``] ``z`` <id> [``*``].

        Raises:
            ParseError: Если токен не соответствует грамматике (без позиции).

        Example:
            >>> Entry.from_token("-z2*")
            Entry(var=2, sign=-1, conj=True)
        """
        if token == "0":
            return ZERO
        body = token
        sign = 1
        if body.startswith("-"):
            sign, body = -1, body[1:]
        conj = body.endswith("*")
        if conj:
            body = body[:-1]
        if not body.startswith("z") or not body[1:].isdigit() or int(body[1:]) == 0:
            raise ParseError(f"Некорректная запись ячейки {token!r}")
        return cls(int(body[1:]), sign, conj)

    def latex(self) -> str:
        if self.is_zero:
            return "0"
        sign = "-" if self.sign < 0 else ""
        star = "^{*}" if self.conj else ""
        return f"{sign}z_{{{self.var}}}{star}"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        return f"{'-' if self.sign < 0 else ''}z{self.var}{'*' if self.conj else ''}"


ZERO = Entry()


@dataclass(frozen=True)
class CODMatrix:
    """
    Матрица-кандидат p x n над {0, ±z_j, ±z_j^*}.

    Корректность COD не является инвариантом типа: непроверенные кандидаты
    представимы, а оракулом служит :func:`codforge.verify.is_cod`.

    Attributes:
        cells (Tuple[Tuple[Entry, ...], ...]): Строки матрицы.
        n (int): Число столбцов (антенн).
        names (Mapping[int, F2Vec] | None): Имена переменных для матриц,
            построенных генераторами. Не участвуют в сравнении.
        k (int): Число различных переменных.
    """

    cells: Tuple[Tuple[Entry, ...], ...]
    n: int
    names: Optional[Mapping[int, F2Vec]] = field(default=None, compare=False, repr=False)
    k: int = field(init=False, compare=False)

    def __post_init__(self):
        cells = tuple(tuple(row) for row in self.cells)
        object.__setattr__(self, "cells", cells)
        if self.n < 1:
            raise ArgumentError(f"Число столбцов должно быть положительным, получено {self.n}")
        if not cells:
            raise ArgumentError("Матрица должна содержать хотя бы одну строку")
        seen = set()
        for r, row in enumerate(cells, 1):
            if len(row) != self.n:
                raise ArgumentError(f"Строка {r} содержит {len(row)} ячеек вместо {self.n}")
            for entry in row:
                if not isinstance(entry, Entry):
                    raise ArgumentError(f"Ячейка строки {r} не является Entry: {entry!r}")
                if not entry.is_zero:
                    seen.add(entry.var)
        k = len(seen)
        if seen != set(range(1, k + 1)):
            raise ArgumentError(f"Номера переменных должны образовывать 1..{k}, получено {sorted(seen)}")
        if self.names is not None:
            names = dict(self.names)
            if set(names) != seen:
                raise ArgumentError("Таблица имён должна покрывать ровно переменные матрицы")
            object.__setattr__(self, "names", names)
        object.__setattr__(self, "k", k)

    @classmethod
    def relabeled(cls, rows: Sequence[Sequence[Entry]], n: int,
                  names: Optional[Mapping[int, F2Vec]] = None) -> "CODMatrix":
        """
        Строит матрицу, перенумеровывая переменные в 1..k.

        Если передана таблица имён (старый номер -> F2Vec), новый номер равен
        рангу имени по значению; иначе номера выдаются по первому вхождению
        при обходе строк слева направо и сверху вниз.

        Args:
            rows (Sequence[Sequence[Entry]]): Строки с произвольными номерами переменных.
            n (int): Число столбцов.
            names (Mapping[int, F2Vec] | None): Имена по старым номерам.

        Returns:
            CODMatrix: Матрица с каноническими номерами.
        """
        order: List[int] = []
        for row in rows:
            for entry in row:
                if not entry.is_zero and entry.var not in order:
                    order.append(entry.var)
        new_names = None
        if names is not None:
            order.sort(key=lambda v: names[v].value)
        mapping = {old: new for new, old in enumerate(order, 1)}
        if names is not None:
            new_names = {mapping[old]: names[old] for old in order}
        cells = [
            [e if e.is_zero else Entry(mapping[e.var], e.sign, e.conj) for e in row]
            for row in rows
        ]
        return cls(cells, n, new_names)

    @property
    def p(self) -> int:
        return len(self.cells)

    @property
    def params(self) -> Tuple[int, int, int]:
        return self.p, self.n, self.k

    @property
    def rate(self) -> Fraction:
        return Fraction(self.k, self.p)

    def cell(self, r: int, c: int) -> Entry:
        """Ячейка (r, c) в нумерации с 1."""
        if not (1 <= r <= self.p and 1 <= c <= self.n):
            raise ArgumentError(f"Ячейка ({r}, {c}) вне матрицы {self.p}x{self.n}")
        return self.cells[r - 1][c - 1]

    def occurrences(self) -> Dict[int, List[Tuple[int, int, Entry]]]:
        """
        Вхождения каждой переменной в порядке обхода по строкам.

        Returns:
            Dict[int, List[Tuple[int, int, Entry]]]: var -> [(строка, столбец, ячейка)],
            индексы с 0.
        """
        occ: Dict[int, List[Tuple[int, int, Entry]]] = {v: [] for v in range(1, self.k + 1)}
        for r, row in enumerate(self.cells):
            for c, entry in enumerate(row):
                if not entry.is_zero:
                    occ[entry.var].append((r, c, entry))
        return occ

    def nonzero_count(self, r: int) -> int:
        """Число ненулевых ячеек строки r (с 1)."""
        return sum(1 for e in self.cells[r - 1] if not e.is_zero)

    def take_rows(self, rows: Iterable[int]) -> "CODMatrix":
        """Подматрица из строк ``rows`` (с 1) с перенумерованными переменными."""
        picked = [self.cells[r - 1] for r in rows]
        return CODMatrix.relabeled(picked, self.n, self.names)

    def __str__(self) -> str:
        return "\n".join(" ".join(str(e) for e in row) for row in self.cells)


@dataclass(frozen=True)
class BjForm:
    """
    Блочная форма строк, содержащих переменную z_j.

    После перестановки строк и столбцов и нормировки знаков строк левый
    верхний блок равен z_j I_{n1}, правый нижний z_j^* I_{n2}, правый верхний
    блок равен M_j, а левый нижний -M_j^H.

    Attributes:
        j (int): Номер переменной.
        n1 (int): Число несопряжённых вхождений z_j.
        n2 (int): Число сопряжённых вхождений z_j.
        row_order (Tuple[int, ...]): Строки (с 1): сначала несопряжённые, затем сопряжённые.
        col_order (Tuple[int, ...]): Столбцы (с 1), в которых стоит z_j в этих строках.
        row_signs (Tuple[int, ...]): Множители строк, делающие знак z_j положительным.
        Mj (Tuple[Tuple[Entry, ...], ...]): Блок n1 x n2.
    """

    j: int
    n1: int
    n2: int
    row_order: Tuple[int, ...]
    col_order: Tuple[int, ...]
    row_signs: Tuple[int, ...]
    Mj: Tuple[Tuple[Entry, ...], ...]

    @property
    def has_zero_in_Mj(self) -> bool:
        return any(e.is_zero for row in self.Mj for e in row)

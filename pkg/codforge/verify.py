"""
Точная символьная проверка ортогональности и структурные предикаты COD.

Переменные z_j и z_j^* считаются независимыми коммутирующими символами,
поэтому вся проверка сводится к целочисленной арифметике над мономами
второй степени и полностью воспроизводима.
"""

import logging
from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

from .errors import ArgumentError, PreconditionError, StructuralError
from .f2vec import F2Vec
from .matrix import BjForm, CODMatrix, Entry

logger = logging.getLogger(__name__)

# символ: (номер переменной, сопряжена ли); моном: упорядоченная пара символов
Symbol = Tuple[int, bool]
Monomial = Tuple[Symbol, Symbol]
Polynomial = Dict[Monomial, int]


@dataclass(frozen=True)
class Verdict:
    """
    Результат проверки предиката.

    Attributes:
        ok (bool): Значение предиката.
        witness (Any): Свидетельство нарушения, если ``ok`` ложно.
    """

    ok: bool
    witness: Any = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class GramWitness:
    """Первая ячейка матрицы Грама, отличная от ожидаемой, и её невязка."""

    row: int
    col: int
    residual: Tuple[Tuple[Monomial, int], ...]

    def __str__(self) -> str:
        return f"ячейка ({self.row}, {self.col}): {format_polynomial(dict(self.residual))}"


def _monomial(left: Entry, right: Entry) -> Tuple[Monomial, int]:
    # conj(left) * right
    a = (left.var, not left.conj)
    b = (right.var, right.conj)
    return (a, b) if a <= b else (b, a), left.sign * right.sign


def format_polynomial(poly: Polynomial) -> str:
    """
    Текстовая запись многочлена, например ``z1 z1* - z2 z3*``.

    Пустой многочлен записывается как ``0``.
    """
    if not poly:
        return "0"
    parts = []
    for mono in sorted(poly):
        coeff = poly[mono]
        body = " ".join(f"z{v}{'*' if c else ''}" for v, c in mono)
        if abs(coeff) != 1:
            body = f"{abs(coeff)} {body}"
        parts.append(("- " if coeff < 0 else "+ ") + body)
    text = " ".join(parts)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]


def zero_pattern(m: CODMatrix, r: int) -> F2Vec:
    """
    Нулевой шаблон строки r: бит i равен 1, если ячейка (r, i) ненулевая.

    Args:
        m (CODMatrix): Матрица.
        r (int): Номер строки, 1 <= r <= p.

    Returns:
        F2Vec: Вектор длины n.

    Raises:
        ArgumentError: Если строка вне диапазона.
    """
    if not 1 <= r <= m.p:
        raise ArgumentError(f"Строка {r} вне диапазона 1..{m.p}")
    return F2Vec.from_bits(0 if e.is_zero else 1 for e in m.cells[r - 1])


def symbolic_gram(m: CODMatrix) -> List[List[Polynomial]]:
    """
    Вычисляет O^H O символьно.

    Ячейка (a, b) равна сумме conj(m[r, a]) * m[r, b] по всем строкам;
    мономы с нулевым коэффициентом удаляются.

    Returns:
        List[List[Dict[Monomial, int]]]: Матрица n x n многочленов.
    """
    acc: Dict[Tuple[int, int], Counter] = defaultdict(Counter)
    for row in m.cells:
        nonzero = [(c, e) for c, e in enumerate(row) if not e.is_zero]
        for a, left in nonzero:
            for b, right in nonzero:
                mono, coeff = _monomial(left, right)
                acc[a, b][mono] += coeff
    gram: List[List[Polynomial]] = []
    for a in range(m.n):
        gram.append([
            {mono: coeff for mono, coeff in acc.get((a, b), Counter()).items() if coeff}
            for b in range(m.n)
        ])
    return gram


def _expected_diagonal(k: int) -> Polynomial:
    return {((j, False), (j, True)): 1 for j in range(1, k + 1)}


def is_cod(m: CODMatrix) -> Verdict:
    """
    Проверяет тождество O^H O = (|z_1|^2 + ... + |z_k|^2) I.

    Returns:
        Verdict: При нарушении свидетель :class:`GramWitness` указывает первую
        неверную ячейку в порядке обхода по строкам (индексы с 1).

    Example:
        >>> is_cod(CODMatrix([[Entry(1)]], 1)).ok
        True
    """
    gram = symbolic_gram(m)
    expected = _expected_diagonal(m.k)
    for a in range(m.n):
        for b in range(m.n):
            cell = gram[a][b]
            target = expected if a == b else {}
            if cell != target:
                residual = Counter(cell)
                residual.subtract(target)
                witness = GramWitness(
                    a + 1, b + 1, tuple(sorted((mono, c) for mono, c in residual.items() if c))
                )
                logger.debug("Матрица %dx%d не является COD: %s", m.p, m.n, witness)
                return Verdict(False, witness)
    return Verdict(True)


def _check_indices(m: CODMatrix, r1: int, r2: int, c1: int, c2: int) -> None:
    if r1 == r2 or c1 == c2:
        raise ArgumentError("Строки и столбцы подматрицы 2x2 должны быть различны")
    for r in (r1, r2):
        if not 1 <= r <= m.p:
            raise ArgumentError(f"Строка {r} вне диапазона 1..{m.p}")
    for c in (c1, c2):
        if not 1 <= c <= m.n:
            raise ArgumentError(f"Столбец {c} вне диапазона 1..{m.n}")


def is_alamouti(m: CODMatrix, r1: int, r2: int, c1: int, c2: int) -> bool:
    """
    Проверяет, что подматрица на строках r1, r2 и столбцах c1, c2 имеет вид
    блока Аламоути с точностью до отрицания и сопряжения переменных.

    Блок [[a, b], [c, d]] подходит, если все четыре ячейки ненулевые,
    a и d содержат одну переменную x, b и c другую переменную y, флаги
    сопряжения a и d (и b и c) различны, а скалярное произведение столбцов
    conj(a) b + conj(c) d сокращается.

    Args:
        m (CODMatrix): Матрица.
        r1 (int): Первая строка (с 1).
        r2 (int): Вторая строка (с 1).
        c1 (int): Первый столбец (с 1).
        c2 (int): Второй столбец (с 1).

    Returns:
        bool: True, если подматрица является блоком Аламоути.

    Raises:
        ArgumentError: Если индексы совпадают или вне диапазона.
    """
    _check_indices(m, r1, r2, c1, c2)
    a, b = m.cell(r1, c1), m.cell(r1, c2)
    c, d = m.cell(r2, c1), m.cell(r2, c2)
    if any(e.is_zero for e in (a, b, c, d)):
        return False
    if a.var != d.var or b.var != c.var or a.var == b.var:
        return False
    if a.conj == d.conj or b.conj == c.conj:
        return False
    mono1, coeff1 = _monomial(a, b)
    mono2, coeff2 = _monomial(c, d)
    return mono1 == mono2 and coeff1 + coeff2 == 0


def _column_index(m: CODMatrix) -> Optional[Dict[Tuple[int, int], int]]:
    # (переменная, столбец) -> строка; None, если переменная повторяется в столбце
    index: Dict[Tuple[int, int], int] = {}
    for r, row in enumerate(m.cells, 1):
        for c, e in enumerate(row, 1):
            if e.is_zero:
                continue
            if (e.var, c) in index:
                return None
            index[e.var, c] = r
    if len(index) != m.k * m.n:
        return None
    return index


def is_cod_fast(m: CODMatrix) -> bool:
    """
    Быстрая проверка COD через покрытие блоками Аламоути.

    Если каждая переменная встречается ровно один раз в каждом столбце,
    матрица является COD тогда и только тогда, когда каждая пара ненулевых
    ячеек одной строки входит в блок Аламоути. Иначе используется
    :func:`is_cod`.
    """
    index = _column_index(m)
    if index is None:
        return is_cod(m).ok
    for r1, row in enumerate(m.cells, 1):
        nonzero = [(c, e) for c, e in enumerate(row, 1) if not e.is_zero]
        for pos, (c1, x) in enumerate(nonzero):
            for c2, y in nonzero[pos + 1:]:
                r2 = index.get((y.var, c1))
                if r2 is None or r2 == r1 or index.get((x.var, c2)) != r2:
                    return False
                if not is_alamouti(m, r1, r2, c1, c2):
                    return False
    return True


def is_first_type(m: CODMatrix) -> Verdict:
    """
    Проверяет, что COD не содержит подматрицы diag(±z_j, ±z_j^*).

    Returns:
        Verdict: При нарушении свидетель (r1, r2, c1, c2, j) с индексами от 1.

    Raises:
        PreconditionError: Если m не является COD.
    """
    if not is_cod(m):
        raise PreconditionError("Предикат первого типа определён только для COD")
    for j, occ in m.occurrences().items():
        for pos, (r1, c1, e1) in enumerate(occ):
            for r2, c2, e2 in occ[pos + 1:]:
                if e1.conj == e2.conj or r1 == r2 or c1 == c2:
                    continue
                if m.cells[r1][c2].is_zero and m.cells[r2][c1].is_zero:
                    return Verdict(False, (r1 + 1, r2 + 1, c1 + 1, c2 + 1, j))
    return Verdict(True)


def is_conjugation_separated(m: CODMatrix) -> bool:
    """Каждая строка содержит либо только сопряжённые, либо только обычные переменные."""
    for row in m.cells:
        if len({e.conj for e in row if not e.is_zero}) > 1:
            return False
    return True


def extract_Bj(m: CODMatrix, j: int) -> BjForm:
    """
    Приводит строки, содержащие z_j, к блочной форме.

    Строки с несопряжённым z_j идут первыми, затем строки с z_j^*; внутри
    каждой группы строки упорядочены по столбцу вхождения. Знак каждой
    строки выбирается так, чтобы z_j входила со знаком плюс.

    Args:
        m (CODMatrix): COD.
        j (int): Номер переменной.

    Returns:
        BjForm: Размеры блоков, порядок строк и столбцов и блок M_j.

    Raises:
        PreconditionError: Если m не COD.
        ArgumentError: Если переменная j не встречается в m.
        StructuralError: Если блочная структура нарушена.
    """
    if not 1 <= j <= m.k:
        raise ArgumentError(f"Переменная z{j} не встречается в матрице")
    if not is_cod(m):
        raise PreconditionError("Блочная форма определена только для COD")
    occ = m.occurrences()[j]
    columns = [c for _, c, _ in occ]
    if len(set(columns)) != len(columns) or len(columns) != m.n:
        raise StructuralError(f"Переменная z{j} должна встречаться ровно один раз в каждом столбце")
    plain = sorted((c, r, e) for r, c, e in occ if not e.conj)
    conj = sorted((c, r, e) for r, c, e in occ if e.conj)
    ordered = plain + conj
    rows = [r for _, r, _ in ordered]
    cols = [c for c, _, _ in ordered]
    signs = [e.sign for _, _, e in ordered]
    block = [
        [m.cells[r][c] if s > 0 else m.cells[r][c].negated() for c in cols]
        for r, s in zip(rows, signs)
    ]
    n1 = len(plain)
    for a in range(m.n):
        for b in range(m.n):
            if a == b or (a < n1) != (b < n1):
                continue
            if not block[a][b].is_zero:
                raise StructuralError(f"Диагональный блок формы B_{j} содержит лишний элемент")
    mj = tuple(tuple(block[a][b] for b in range(n1, m.n)) for a in range(n1))
    for a in range(n1):
        for b in range(m.n - n1):
            if block[n1 + b][a] != mj[a][b].conjugated().negated():
                raise StructuralError(f"Левый нижний блок формы B_{j} не равен -M_j^H")
    return BjForm(
        j=j,
        n1=n1,
        n2=m.n - n1,
        row_order=tuple(r + 1 for r in rows),
        col_order=tuple(c + 1 for c in cols),
        row_signs=tuple(signs),
        Mj=mj,
    )

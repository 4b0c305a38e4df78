"""
Явные конструкции комплексных ортогональных дизайнов.

Строки всех дизайнов индексируются векторами alpha над F_2 и идут в порядке
возрастания значения alpha. Ячейка (alpha, i) базового дизайна G_n равна 0,
если alpha(i) = 0, иначе ``(-1)^theta(alpha, i) * z_{phi(alpha, i)}``,
причём переменная сопряжена, когда alpha(n+1) = 1. Имена переменных
(векторы phi) сохраняются в таблице имён матрицы, а номера переменных
равны рангу имени по значению.

Example:
    >>> gen_Gw(3, 2).params
    (4, 3, 3)
    >>> optimal(4).params
    (4, 4, 3)
"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Tuple, Union

from .errors import ArgumentError, PreconditionError, ResourceError, StructuralError
from .f2vec import MAX_LENGTH, F2Vec, enumerate_weight, ones, unit, weight_range
from .matrix import ZERO, CODMatrix, Entry
from .unionfind import ParityUnionFind
from .verify import is_cod

logger = logging.getLogger(__name__)

DESIGN_CAP = 16

# ячейка до нумерации переменных: (знак, имя, сопряжение) или None для нуля
_Cell = Optional[Tuple[int, F2Vec, bool]]


def theta(alpha: F2Vec, i: int, n: int) -> int:
    """
    Знаковая функция базового дизайна.

    Для чётного i возвращает (wt_{i,n+1}(alpha) + i/2) mod 2, для нечётного
    (wt_{i,n+1}(alpha) + (i-1)/2 + alpha(n+1)) mod 2.

    Args:
        alpha (F2Vec): Индекс строки длины n+1.
        i (int): Номер столбца, 1 <= i <= n.
        n (int): Число столбцов.

    Returns:
        int: 0 или 1; ячейка имеет знак (-1)^theta.

    Raises:
        ArgumentError: Если длина alpha или i не согласованы с n.

    Example:
        >>> theta(F2Vec.from_bits([1, 1, 1, 0]), 2, 3)
        1
    """
    _check_column(alpha, i, n)
    wt = weight_range(alpha, i, n + 1)
    if i % 2 == 0:
        return (wt + i // 2) % 2
    return (wt + (i - 1) // 2 + alpha.bit(n + 1)) % 2


def phi(alpha: F2Vec, i: int, n: int) -> F2Vec:
    """
    Имя переменной в ячейке (alpha, i): alpha xor alpha(n+1) e xor e_i.

    Raises:
        ArgumentError: Если длина alpha или i не согласованы с n.
        PreconditionError: Если alpha(i) = 0 (ячейка нулевая).
    """
    _check_column(alpha, i, n)
    if not alpha.bit(i):
        raise PreconditionError(f"Ячейка ({alpha}, {i}) нулевая: alpha({i}) = 0")
    result = alpha ^ unit(n + 1, i)
    if alpha.bit(n + 1):
        result = result ^ ones(n + 1)
    return result


def psi(alpha: F2Vec, n: int) -> int:
    """Чётность alpha на чётных позициях: alpha(2) + alpha(4) + ... + alpha(n) mod 2."""
    if n % 2:
        raise ArgumentError(f"Функция psi определена только для чётного n, получено {n}")
    if alpha.length != n:
        raise ArgumentError(f"Ожидался вектор длины {n}, получено {alpha.length}")
    return sum(alpha.bit(2 * i) for i in range(1, n // 2 + 1)) % 2


def _check_column(alpha: F2Vec, i: int, n: int) -> None:
    if alpha.length != n + 1:
        raise ArgumentError(f"Ожидался вектор длины {n + 1}, получено {alpha.length}")
    if not 1 <= i <= n:
        raise ArgumentError(f"Столбец {i} вне диапазона 1..{n}")


def _check_n(n: int) -> None:
    if not 1 <= n < MAX_LENGTH:
        raise ArgumentError(f"Число антенн должно быть от 1 до {MAX_LENGTH - 1}, получено {n}")


def _g_row(alpha: F2Vec, n: int) -> List[_Cell]:
    conj = bool(alpha.bit(n + 1))
    row: List[_Cell] = []
    for i in range(1, n + 1):
        if alpha.bit(i):
            row.append((-1 if theta(alpha, i, n) else 1, phi(alpha, i, n), conj))
        else:
            row.append(None)
    return row


def _assemble(rows: Iterable[List[_Cell]], n: int) -> CODMatrix:
    # временный номер переменной: значение имени + 1
    names: Dict[int, F2Vec] = {}
    cells = []
    for row in rows:
        out = []
        for cell in row:
            if cell is None:
                out.append(ZERO)
                continue
            sign, name, conj = cell
            names[name.value + 1] = name
            out.append(Entry(name.value + 1, sign, conj))
        cells.append(out)
    return CODMatrix.relabeled(cells, n, names)


def gen_G(n: int, allow_large: bool = False) -> CODMatrix:
    """
    Базовый дизайн G_n с параметрами [2^(n+1), n, 2^n].

    Args:
        n (int): Число антенн.
        allow_large (bool): Снять ограничение n <= DESIGN_CAP.

    Returns:
        CODMatrix: Дизайн со строками по всем alpha из F_2^(n+1).

    Raises:
        ArgumentError: Если n < 1.
        ResourceError: Если n > DESIGN_CAP и allow_large не задан.
    """
    _check_n(n)
    if n > DESIGN_CAP and not allow_large:
        raise ResourceError(f"Дизайн G_{n} содержит 2^{n + 1} строк; ограничение n <= {DESIGN_CAP}")
    logger.debug("Построение G_%d", n)
    m = _assemble((_g_row(F2Vec(n + 1, v), n) for v in range(1 << (n + 1))), n)
    logger.info("Построен G_%d: [%d, %d, %d]", n, *m.params)
    return m


def _gw_rows(n: int, w: int) -> List[F2Vec]:
    first = [a.extend(n + 1) for a in enumerate_weight(n, w + 1)]
    top = 1 << n
    second = [F2Vec(n + 1, a.value | top) for a in enumerate_weight(n, n - w + 1)]
    return first + second


def gen_Gw(n: int, w: int) -> CODMatrix:
    """
    Подматрица G_n на строках веса w+1 без бита n+1 и строках веса n-w+2
    с битом n+1.

    Параметры результата [C(n,w-1) + C(n,w+1), n, C(n,w)]. Крайние значения
    w = -1 и w = n+1 дают одну нулевую строку.

    Args:
        n (int): Число антенн.
        w (int): Параметр семейства, -1 <= w <= n+1.

    Returns:
        CODMatrix: Дизайн G_n^w.

    Raises:
        ArgumentError: Если n < 1 или w вне диапазона.

    Example:
        >>> print(gen_Gw(2, 1))
        z2 z1
        z1* -z2*
    """
    _check_n(n)
    if not -1 <= w <= n + 1:
        raise ArgumentError(f"Параметр w должен лежать в [-1, {n + 1}], получено {w}")
    rows = _gw_rows(n, w)
    m = _assemble((_g_row(alpha, n) for alpha in rows), n)
    logger.info("Построен G_%d^%d: [%d, %d, %d]", n, w, *m.params)
    return m


def _check_h(n: int) -> None:
    if n < 4 or n % 4:
        raise ArgumentError(
            f"Дополнение столбцом возможно только при n = 2m с чётным m, получено n = {n}; "
            "при нечётном m соответствующая система знаков противоречива"
        )


def _h_row(alpha: F2Vec, n: int) -> List[_Cell]:
    row = _g_row(alpha, n - 1)
    if alpha.bit(n):
        row.append((-1 if psi(alpha, n) else 1, alpha ^ unit(n, n), False))
    else:
        row.append(None)
    return row


def gen_H(n: int, allow_large: bool = False) -> CODMatrix:
    """
    Дизайн H_n = (G_{n-1}, L_n) с параметрами [2^n, n, 2^(n-1)].

    Дополнительный столбец L_n(alpha) = alpha(n) (-1)^psi(alpha) z_{alpha xor e_n}
    содержит только несопряжённые переменные.

    Raises:
        ArgumentError: Если n не делится на 4.
        ResourceError: Если n > DESIGN_CAP и allow_large не задан.
    """
    _check_h(n)
    if n > DESIGN_CAP and not allow_large:
        raise ResourceError(f"Дизайн H_{n} содержит 2^{n} строк; ограничение n <= {DESIGN_CAP}")
    m = _assemble((_h_row(F2Vec(n, v), n) for v in range(1 << n)), n)
    logger.info("Построен H_%d: [%d, %d, %d]", n, *m.params)
    return m


def gen_Hm(n: int) -> CODMatrix:
    """
    Подматрица H_n на строках веса m+1, n = 2m; параметры [C(n,m+1), n, C(n-1,m)].

    Raises:
        ArgumentError: Если n не делится на 4.
    """
    _check_h(n)
    m = n // 2
    design = _assemble((_h_row(alpha, n) for alpha in enumerate_weight(n, m + 1)), n)
    logger.info("Построен H_%d^%d: [%d, %d, %d]", n, m, *design.params)
    return design


def optimal(n: int) -> CODMatrix:
    """
    COD первого типа максимальной скорости и минимальной задержки для n антенн.

    Для n, кратного 4, это H_n^m, иначе G_n^w с w = ceil(n/2).
    """
    _check_n(n)
    if n % 4 == 0:
        return gen_Hm(n)
    return gen_Gw(n, (n + 1) // 2)


@dataclass(frozen=True)
class PadConstraint:
    """
    Уравнение на знаки дополнительного столбца: x_a + x_b = parity (mod 2).

    Attributes:
        row_a (int): Строка (с 1) дизайна G_{n-1}^m.
        row_b (int): Парная строка, образующая блок Аламоути со столбцом ``column``.
        column (int): Столбец, через который строки связаны.
        parity (int): 1, если знаки должны быть противоположны.
    """

    row_a: int
    row_b: int
    column: int
    parity: int


@dataclass(frozen=True)
class Success:
    """
    Согласованное назначение знаков.

    Attributes:
        column (Tuple[Entry, ...]): Дополнительный столбец в нумерации переменных ``matrix``.
        assignment (Dict[int, int]): Строка (с 1) -> знак ячейки столбца.
        matrix (CODMatrix): Дополненный дизайн, прошедший проверку is_cod.
    """

    column: Tuple[Entry, ...]
    assignment: Dict[int, int]
    matrix: CODMatrix


@dataclass(frozen=True)
class Contradiction:
    """Нечётный цикл уравнений, доказывающий несовместность системы знаков."""

    cycle: Tuple[PadConstraint, ...]

    @property
    def parity(self) -> int:
        return sum(c.parity for c in self.cycle) % 2


PadOutcome = Union[Success, Contradiction]


def pad_constraints(n: int) -> Tuple[List[F2Vec], List[PadConstraint]]:
    """
    Строки G_{n-1}^m (как векторы длины n) и уравнения на знаки столбца n.

    Ячейка нового столбца в строке alpha равна x(alpha) z_{alpha xor e_n}
    при alpha(n) = 1 и нулю иначе. Ортогональность столбцов i и n на паре
    строк alpha, beta = alpha xor e xor e_i xor e_n, образующих блок
    Аламоути, даёт уравнение x(alpha) + x(beta) = 1 + theta(alpha, i) + theta(beta, i).
    """
    if n < 4 or n % 2:
        raise ArgumentError(f"Попытка дополнения определена для n = 2m, m >= 2; получено {n}")
    m = n // 2
    rows = _gw_rows(n - 1, m)
    index = {alpha: r for r, alpha in enumerate(rows, 1)}
    full = ones(n)
    constraints = []
    for alpha in rows:
        if not alpha.bit(n):
            continue
        for i in range(1, n):
            if not alpha.bit(i):
                continue
            beta = alpha ^ full ^ unit(n, i) ^ unit(n, n)
            if index[alpha] >= index[beta]:
                continue
            parity = 1 ^ theta(alpha, i, n - 1) ^ theta(beta, i, n - 1)
            constraints.append(PadConstraint(index[alpha], index[beta], i, parity))
    return rows, constraints


def pad_column_attempt(n: int) -> PadOutcome:
    """
    Пытается дополнить G_{n-1}^m (n = 2m) столбцом до COD [C(n,m+1), n, C(n-1,m)].

    Система знаков решается Union-Find с чётностями. При противоречии
    возвращается нечётный цикл: путь в остовном лесе между концами
    конфликтующего уравнения плюс само уравнение. Отрицательный ответ
    является результатом, а не ошибкой.

    Args:
        n (int): Чётное число антенн, n >= 4.

    Returns:
        Success | Contradiction: Дополненный дизайн или нечётный цикл.

    Raises:
        ArgumentError: Если n нечётно или меньше 4.
    """
    rows, constraints = pad_constraints(n)
    uf = ParityUnionFind(len(rows) + 1)
    for constraint in constraints:
        if not uf.union(constraint.row_a, constraint.row_b, constraint.parity, constraint):
            path = uf.path(constraint.row_a, constraint.row_b)
            cycle = tuple(edge[3] for edge in path) + (constraint,)
            logger.info("Дополнение G_%d^%d столбцом невозможно: цикл длины %d", n - 1, n // 2, len(cycle))
            return Contradiction(cycle)

    assignment: Dict[int, int] = {}
    padded = []
    for r, alpha in enumerate(rows, 1):
        row = _g_row(alpha, n - 1)
        if alpha.bit(n):
            sign = -1 if uf.value(r) else 1
            assignment[r] = sign
            row.append((sign, alpha ^ unit(n, n), False))
        else:
            row.append(None)
        padded.append(row)
    matrix = _assemble(padded, n)
    if not is_cod(matrix):
        raise StructuralError(f"Согласованное назначение знаков не дало COD при n = {n}")
    column = tuple(row[-1] for row in matrix.cells)
    logger.info("Дополнение G_%d^%d столбцом построено", n - 1, n // 2)
    return Success(column, assignment, matrix)


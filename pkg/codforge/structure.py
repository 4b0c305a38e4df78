"""
Эквивалентность, атомарное разложение и канонизация COD.

Два COD эквивалентны, если один получается из другого перестановками
строк и столбцов, сопряжением, отрицанием и переименованием переменных,
отрицанием строк и столбцов. Для COD первого типа класс эквивалентности
полностью определяется сигнатурой: кратностями атомарных классов
в разложении.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple, Union

import numpy as np

from .errors import (
    ArgumentError,
    CanonicalizationError,
    ClassificationError,
    PreconditionError,
    UnsupportedInputError,
)
from .generators import gen_Gw, gen_Hm
from .matrix import CODMatrix, Entry
from .params import AtomicClass, ParamSolution, gw_triple, hm_triple
from .unionfind import ParityUnionFind, UnionFind
from .verify import is_cod, is_first_type, zero_pattern

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RowPerm:
    """Перестановка строк: новая строка t равна старой строке ``order[t-1]``."""

    order: Tuple[int, ...]

    def __str__(self) -> str:
        return f"RowPerm({', '.join(map(str, self.order))})"


@dataclass(frozen=True)
class ColPerm:
    """Перестановка столбцов: новый столбец t равен старому столбцу ``order[t-1]``."""

    order: Tuple[int, ...]

    def __str__(self) -> str:
        return f"ColPerm({', '.join(map(str, self.order))})"


@dataclass(frozen=True)
class ConjVar:
    var: int

    def __str__(self) -> str:
        return f"ConjVar(z{self.var})"


@dataclass(frozen=True)
class NegVar:
    var: int

    def __str__(self) -> str:
        return f"NegVar(z{self.var})"


@dataclass(frozen=True)
class RenameVar:
    """Обмен номерами двух переменных (вместе с их именами)."""

    a: int
    b: int

    def __str__(self) -> str:
        return f"RenameVar(z{self.a}, z{self.b})"


@dataclass(frozen=True)
class NegRow:
    row: int

    def __str__(self) -> str:
        return f"NegRow({self.row})"


@dataclass(frozen=True)
class NegCol:
    col: int

    def __str__(self) -> str:
        return f"NegCol({self.col})"


EquivOp = Union[RowPerm, ColPerm, ConjVar, NegVar, RenameVar, NegRow, NegCol]


def _check_perm(order: Sequence[int], size: int, what: str) -> None:
    if sorted(order) != list(range(1, size + 1)):
        raise ArgumentError(f"Перестановка {what} должна быть перестановкой 1..{size}: {tuple(order)}")


def _check_var(m: CODMatrix, var: int) -> None:
    if not 1 <= var <= m.k:
        raise ArgumentError(f"Переменная z{var} вне диапазона 1..{m.k}")


def apply_equiv(m: CODMatrix, op: EquivOp) -> CODMatrix:
    """
    Применяет одну операцию эквивалентности и возвращает новую матрицу.

    Args:
        m (CODMatrix): Исходная матрица (не изменяется).
        op (EquivOp): Операция.

    Returns:
        CODMatrix: Преобразованная матрица.

    Raises:
        ArgumentError: Если индексы операции не подходят для m.
    """
    cells = [list(row) for row in m.cells]
    names = m.names
    if isinstance(op, RowPerm):
        _check_perm(op.order, m.p, "строк")
        cells = [cells[r - 1] for r in op.order]
    elif isinstance(op, ColPerm):
        _check_perm(op.order, m.n, "столбцов")
        cells = [[row[c - 1] for c in op.order] for row in cells]
    elif isinstance(op, (ConjVar, NegVar)):
        _check_var(m, op.var)
        change = Entry.conjugated if isinstance(op, ConjVar) else Entry.negated
        cells = [[change(e) if e.var == op.var else e for e in row] for row in cells]
    elif isinstance(op, RenameVar):
        _check_var(m, op.a)
        _check_var(m, op.b)
        swap = {op.a: op.b, op.b: op.a}
        cells = [
            [Entry(swap[e.var], e.sign, e.conj) if e.var in swap else e for e in row]
            for row in cells
        ]
        if names is not None:
            names = dict(names)
            names[op.a], names[op.b] = m.names[op.b], m.names[op.a]
    elif isinstance(op, NegRow):
        if not 1 <= op.row <= m.p:
            raise ArgumentError(f"Строка {op.row} вне диапазона 1..{m.p}")
        cells[op.row - 1] = [e.negated() for e in cells[op.row - 1]]
    elif isinstance(op, NegCol):
        if not 1 <= op.col <= m.n:
            raise ArgumentError(f"Столбец {op.col} вне диапазона 1..{m.n}")
        for row in cells:
            row[op.col - 1] = row[op.col - 1].negated()
    else:
        raise ArgumentError(f"Неизвестная операция эквивалентности: {op!r}")
    return CODMatrix(cells, m.n, names)


def replay(m: CODMatrix, transcript: Sequence[EquivOp]) -> CODMatrix:
    """Последовательно применяет операции протокола."""
    for op in transcript:
        m = apply_equiv(m, op)
    return m


def scramble(m: CODMatrix, ops: int = 6, seed: Optional[int] = None) -> Tuple[CODMatrix, Tuple[EquivOp, ...]]:
    """
    Случайная последовательность операций эквивалентности.

    Args:
        m (CODMatrix): Исходная матрица.
        ops (int): Число операций.
        seed (int | None): Зерно генератора numpy для воспроизводимости.

    Returns:
        Tuple[CODMatrix, Tuple[EquivOp, ...]]: Перемешанная матрица и протокол,
        который воспроизводит её через :func:`replay`.
    """
    rng = np.random.default_rng(seed)
    kinds = ["row_perm", "col_perm", "neg_row", "neg_col"]
    if m.k >= 1:
        kinds += ["conj_var", "neg_var"]
    if m.k >= 2:
        kinds.append("rename_var")
    transcript: List[EquivOp] = []
    for _ in range(ops):
        kind = kinds[int(rng.integers(len(kinds)))]
        if kind == "row_perm":
            op = RowPerm(tuple((rng.permutation(m.p) + 1).tolist()))
        elif kind == "col_perm":
            op = ColPerm(tuple((rng.permutation(m.n) + 1).tolist()))
        elif kind == "neg_row":
            op = NegRow(int(rng.integers(1, m.p + 1)))
        elif kind == "neg_col":
            op = NegCol(int(rng.integers(1, m.n + 1)))
        elif kind == "conj_var":
            op = ConjVar(int(rng.integers(1, m.k + 1)))
        elif kind == "neg_var":
            op = NegVar(int(rng.integers(1, m.k + 1)))
        else:
            a, b = (rng.choice(m.k, size=2, replace=False) + 1).tolist()
            op = RenameVar(a, b)
        transcript.append(op)
        m = apply_equiv(m, op)
    return m, tuple(transcript)


def catenate(*designs: CODMatrix) -> CODMatrix:
    """
    Катенация: матрицы ставятся друг под другом, переменные разводятся сдвигом номеров.

    Raises:
        ArgumentError: Если список пуст или число столбцов различается.
    """
    if not designs:
        raise ArgumentError("Для катенации нужна хотя бы одна матрица")
    n = designs[0].n
    cells = []
    offset = 0
    for design in designs:
        if design.n != n:
            raise ArgumentError(f"Число столбцов различается: {n} и {design.n}")
        for row in design.cells:
            cells.append([e if e.is_zero else Entry(e.var + offset, e.sign, e.conj) for e in row])
        offset += design.k
    return CODMatrix(cells, n)


@dataclass
class AtomicPart:
    """
    Атомарная часть COD.

    Attributes:
        rows (Tuple[int, ...]): Номера строк исходной матрицы (с 1), по возрастанию.
        matrix (CODMatrix): Подматрица с перенумерованными переменными.
        cls (AtomicClass | None): Класс части; None, пока не классифицирована.
    """

    rows: Tuple[int, ...]
    matrix: CODMatrix
    cls: Optional[AtomicClass] = field(default=None)


def decompose_atomic(m: CODMatrix) -> List[AtomicPart]:
    """
    Единственное разложение COD на атомарные части.

    Строки, содержащие общую переменную, попадают в одну часть; нулевая
    строка образует отдельную часть. Части упорядочены по наименьшему
    номеру строки.

    Raises:
        PreconditionError: Если m не является COD.
    """
    if not is_cod(m):
        raise PreconditionError("Разложение на атомарные части определено только для COD")
    uf = UnionFind(m.p)
    for occ in m.occurrences().values():
        first = occ[0][0]
        for r, _, _ in occ[1:]:
            uf.union(first, r)
    groups = sorted(uf.all_group_members().values(), key=lambda rows: rows[0])
    parts = [AtomicPart(tuple(r + 1 for r in rows), m.take_rows(r + 1 for r in rows)) for rows in groups]
    logger.info("Матрица [%d, %d, %d] разложена на %d атомарных частей", *m.params, len(parts))
    return parts


def classify_atomic(part: AtomicPart, n: int) -> AtomicClass:
    """
    Класс атомарной части по её параметрам.

    Параметр w определяется по самой плотной строке части: w + 1 есть
    наибольшее число ненулевых ячеек в строке. Классы Gw{w} и Gw{n-w}
    эквивалентны, поэтому тег не зависит от порядка строк.
    Части с параметрами [C(n,w-1) + C(n,w+1), n, C(n,w)] относятся к классу
    Gw{w}; при n, кратном 4, и 2w = n части с параметрами
    [C(n,m-1), n, C(n-1,m-1)] относятся к классу Hm.

    Args:
        part (AtomicPart): Атомарная часть COD первого типа.
        n (int): Число столбцов.

    Returns:
        AtomicClass: Класс части.

    Raises:
        ArgumentError: Если число столбцов части не равно n.
        ClassificationError: Если параметры не совпадают ни с одним классом.
    """
    m = part.matrix
    if m.n != n:
        raise ArgumentError(f"Часть имеет {m.n} столбцов, ожидалось {n}")
    w = max(m.nonzero_count(r) for r in range(1, m.p + 1)) - 1
    if m.params == tuple(gw_triple(n, w)):
        return AtomicClass("G", w)
    if n % 4 == 0 and 2 * w == n and m.params == tuple(hm_triple(n)):
        return AtomicClass("H", w)
    raise ClassificationError(
        f"Атомарная часть с параметрами [{m.p}, {m.n}, {m.k}] и строкой веса {w + 1} "
        "не соответствует ни одному классу COD первого типа"
    )


class CanonicalForm(NamedTuple):
    cls: AtomicClass
    matrix: CODMatrix
    transcript: Tuple[EquivOp, ...]


@lru_cache(maxsize=None)
def _target(cls: AtomicClass, n: int) -> CODMatrix:
    return gen_Hm(n) if cls.is_h else gen_Gw(n, cls.w)


def _propagate(source: CODMatrix, target: CODMatrix, start: int, seed: int,
               target_at: Dict[Tuple[int, int], int]) -> Optional[Tuple[List[int], Dict[int, int], Dict[int, int]]]:
    # строки и переменные однозначно выводятся из образа строки start
    row_map: List[Optional[int]] = [None] * source.p
    row_used: Dict[int, int] = {}
    var_map: Dict[int, int] = {}
    var_used: Dict[int, int] = {}
    conj_flip: Dict[int, int] = {}
    occ = source.occurrences()
    row_map[start], row_used[seed] = seed, start
    queue = [start]
    while queue:
        r = queue.pop()
        t = row_map[r]
        if zero_pattern(source, r + 1) != zero_pattern(target, t + 1):
            return None
        for c, e in enumerate(source.cells[r]):
            if e.is_zero:
                continue
            u = target.cells[t][c]
            if var_map.setdefault(e.var, u.var) != u.var or var_used.setdefault(u.var, e.var) != e.var:
                return None
            if conj_flip.setdefault(e.var, int(e.conj != u.conj)) != int(e.conj != u.conj):
                return None
            for r2, c2, _ in occ[e.var]:
                t2 = target_at.get((u.var, c2))
                if t2 is None:
                    return None
                if row_map[r2] is None:
                    if t2 in row_used:
                        return None
                    row_map[r2], row_used[t2] = t2, r2
                    queue.append(r2)
                elif row_map[r2] != t2:
                    return None
    if any(t is None for t in row_map):
        return None
    return row_map, var_map, conj_flip


def _solve_signs(source: CODMatrix, target: CODMatrix, row_map: List[int],
                 var_map: Dict[int, int], neg_cols: Tuple[int, ...]) -> Optional[Tuple[List[int], List[int]]]:
    # узлы: переменные 0..k-1, строки k..k+p-1; уравнение nu_v + rho_r = b
    uf = ParityUnionFind(source.k + source.p)
    for r, row in enumerate(source.cells):
        for c, e in enumerate(row):
            if e.is_zero:
                continue
            u = target.cells[row_map[r]][c]
            b = int(e.sign != u.sign) ^ int(c + 1 in neg_cols)
            if not uf.union(e.var - 1, source.k + r, b):
                return None
    var_signs = [uf.value(v) for v in range(source.k)]
    row_signs = [uf.value(source.k + r) for r in range(source.p)]
    return var_signs, row_signs


def _rename_ops(var_map: Dict[int, int], k: int) -> List[RenameVar]:
    # pos: исходная переменная -> текущий номер; holder: номер -> исходная переменная
    pos = {v: v for v in range(1, k + 1)}
    holder = {v: v for v in range(1, k + 1)}
    ops = []
    inverse = {u: v for v, u in var_map.items()}
    for t in range(1, k + 1):
        v = inverse[t]
        if pos[v] == t:
            continue
        other = holder[t]
        ops.append(RenameVar(t, pos[v]))
        holder[pos[v]], pos[other] = other, pos[v]
        holder[t], pos[v] = v, t
    return ops


def _column_negations(n: int):
    # сначала без отрицаний столбцов, затем подмножества по возрастанию размера
    yield ()
    for size in range(1, n + 1):
        yield from combinations(range(1, n + 1), size)


def canonicalize_atomic(part: AtomicPart, n: int) -> CanonicalForm:
    """
    Приводит атомарную часть COD первого типа к каноническому виду.

    Каноническая форма класса Gw{w} есть G_n^w, класса Hm есть H_n^m.
    Образ самой плотной строки части перебирается среди строк канонической формы с тем
    же нулевым шаблоном; дальше соответствие строк и переменных
    распространяется по вхождениям переменных. Знаки находятся решением
    системы уравнений над F_2 для отрицаний переменных и строк. Отрицания
    столбцов добавляются, только если без них система несовместна; для
    классов с n != 2w они не требуются.

    Протокол применяется к ``part.matrix`` в порядке: NegCol, ConjVar,
    NegVar, RenameVar, NegRow, RowPerm.

    Args:
        part (AtomicPart): Атомарная часть; если ``part.cls`` задан, он определяет цель.
        n (int): Число столбцов.

    Returns:
        CanonicalForm: Класс, каноническая матрица и протокол.

    Raises:
        ClassificationError: Если часть не классифицируется.
        CanonicalizationError: Если эквивалентность с канонической формой не найдена.
    """
    cls = part.cls or classify_atomic(part, n)
    source = part.matrix
    target = _target(cls, n)
    if source.params != target.params:
        raise CanonicalizationError(
            f"Параметры части {source.params} не совпадают с параметрами класса {cls} {target.params}"
        )
    target_at = {(e.var, c): t for t, row in enumerate(target.cells) for c, e in enumerate(row) if not e.is_zero}
    densest = max(target.nonzero_count(t) for t in range(1, target.p + 1))
    start = next((r for r in range(source.p) if source.nonzero_count(r + 1) == densest), None)
    if start is None:
        raise CanonicalizationError(f"В части нет строки с {densest} ненулевыми ячейками, как у класса {cls}")
    pattern = zero_pattern(source, start + 1)
    seeds = [t for t in range(target.p) if zero_pattern(target, t + 1) == pattern]
    propagated = [res for res in (_propagate(source, target, start, s, target_at) for s in seeds) if res is not None]
    logger.debug("Класс %s: %d затравок, %d согласованных соответствий", cls, len(seeds), len(propagated))

    for neg_cols in _column_negations(n):
        for row_map, var_map, conj_flip in propagated:
            signs = _solve_signs(source, target, row_map, var_map, neg_cols)
            if signs is None:
                continue
            var_signs, row_signs = signs
            transcript: List[EquivOp] = [NegCol(c) for c in neg_cols]
            transcript += [ConjVar(v) for v in sorted(conj_flip) if conj_flip[v]]
            transcript += [NegVar(v + 1) for v, s in enumerate(var_signs) if s]
            transcript += _rename_ops(var_map, source.k)
            transcript += [NegRow(r + 1) for r, s in enumerate(row_signs) if s]
            order = [0] * source.p
            for r, t in enumerate(row_map):
                order[t] = r + 1
            if order != list(range(1, source.p + 1)):
                transcript.append(RowPerm(tuple(order)))
            if replay(source, transcript) != target:
                raise CanonicalizationError(f"Протокол для класса {cls} не воспроизводит каноническую форму")
            logger.info("Часть [%d, %d, %d] приведена к %s за %d операций", *source.params, cls, len(transcript))
            return CanonicalForm(cls, target, tuple(transcript))
    raise CanonicalizationError(f"Часть [{source.p}, {source.n}, {source.k}] не эквивалентна канонической форме {cls}")


@dataclass(frozen=True)
class Signature(ParamSolution):
    """
    Сигнатура COD первого типа: кратности атомарных классов.

    Индексы w > n/2 сворачиваются в n - w; часть двойного размера при
    n = 2w учитывается как одна единица t_{n/2}, часть класса Hm как t_h.
    """

    def merged_middle(self) -> int:
        """Число частей среднего веса в единицах половинного размера: 2 t_{n/2} + t_h."""
        return 2 * self.t[-1] + (self.t_h or 0)

    def as_solution(self) -> ParamSolution:
        return ParamSolution(self.n, self.t, self.t_h)

    def as_dict(self) -> dict:
        data = {"n": self.n, "t": {str(w): c for w, c in enumerate(self.t, -1)}}
        if self.t_h is not None:
            data["t_h"] = self.t_h
        return data


def signature(m: CODMatrix) -> Signature:
    """
    Сигнатура COD первого типа.

    Raises:
        UnsupportedInputError: Если m не COD или не первого типа.
        ClassificationError: Если атомарная часть не классифицируется.
    """
    if not is_cod(m):
        raise UnsupportedInputError("Сигнатура определена только для COD")
    if not is_first_type(m):
        raise UnsupportedInputError("Сигнатура определена только для COD первого типа")
    n = m.n
    t = [0] * (n // 2 + 2)
    t_h = 0 if n % 4 == 0 else None
    for part in decompose_atomic(m):
        cls = classify_atomic(part, n)
        if cls.is_h:
            t_h += 1
        else:
            t[min(cls.w, n - cls.w) + 1] += 1
    return Signature(n, tuple(t), t_h)


def equivalent(m1: CODMatrix, m2: CODMatrix) -> bool:
    """
    Эквивалентность двух COD первого типа по совпадению сигнатур.

    Матрицы с разным числом столбцов не эквивалентны.

    Raises:
        UnsupportedInputError: Если одна из матриц не COD первого типа.
    """
    s1, s2 = signature(m1), signature(m2)
    return s1 == s2


def realize(solution: ParamSolution, n: Optional[int] = None) -> CODMatrix:
    """
    Строит катенацию канонических атомарных дизайнов, реализующую решение.

    Raises:
        ArgumentError: Если решение пустое или n не совпадает с ``solution.n``.
    """
    n = solution.n if n is None else n
    if n != solution.n:
        raise ArgumentError(f"Решение построено для n = {solution.n}, запрошено n = {n}")
    atoms = []
    for cls, count in solution.items():
        atoms += [_target(cls, n)] * count
    if not atoms:
        raise ArgumentError("Пустое решение не задаёт матрицу")
    return catenate(*atoms)

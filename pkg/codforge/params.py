"""
Алгебра параметров COD первого типа.

Каждый COD первого типа с n столбцами разбивается на атомарные части, а
параметры атомарных частей образуют конечную таблицу :func:`atomic_params`.
Поэтому существование COD [p, n, k] сводится к поиску неотрицательных
целых кратностей атомарных классов, дающих в сумме ровно p строк и k
переменных, а число таких решений равно числу неэквивалентных COD.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import List, NamedTuple, Optional, Tuple

import pandas as pd

from .errors import ArgumentError

logger = logging.getLogger(__name__)


def binom(n: int, r: int) -> int:
    """Биномиальный коэффициент с C(n, r) = 0 при r < 0 или r > n."""
    return comb(n, r) if 0 <= r <= n else 0


@dataclass(frozen=True, order=True)
class AtomicClass:
    """
    Класс атомарного COD первого типа.

    Attributes:
        kind (str): ``"G"`` для части, эквивалентной G_n^w, ``"H"`` для H_n^m.
        w (int): Параметр семейства (для ``"H"`` равен n/2).
    """

    kind: str
    w: int

    def __post_init__(self):
        if self.kind not in ("G", "H"):
            raise ArgumentError(f"Неизвестный вид атомарного класса {self.kind!r}")

    @property
    def is_h(self) -> bool:
        return self.kind == "H"

    def __str__(self) -> str:
        return "Hm" if self.is_h else f"Gw{{{self.w}}}"


class ParamTriple(NamedTuple):
    """Параметры [p, n, k]: задержка, число антенн и число переменных."""

    p: int
    n: int
    k: int

    @property
    def rate(self) -> Fraction:
        return Fraction(self.k, self.p)


def gw_triple(n: int, w: int) -> ParamTriple:
    return ParamTriple(binom(n, w - 1) + binom(n, w + 1), n, binom(n, w))


def hm_triple(n: int) -> ParamTriple:
    m = n // 2
    return ParamTriple(binom(n, m - 1), n, binom(n - 1, m - 1))


def atomic_params(n: int) -> List[Tuple[AtomicClass, ParamTriple]]:
    """
    Таблица параметров атомарных COD первого типа.

    Для w = -1..floor(n/2) тройка [C(n,w-1) + C(n,w+1), n, C(n,w)]; при n,
    кратном 4, дополнительно класс H с тройкой [C(n,m-1), n, C(n-1,m-1)].

    Args:
        n (int): Число антенн, n >= 1.

    Returns:
        List[Tuple[AtomicClass, ParamTriple]]: Классы в порядке возрастания w, класс H последним.

    Raises:
        ArgumentError: Если n < 1.

    Example:
        >>> [tuple(t) for _, t in atomic_params(3)]
        [(1, 3, 0), (3, 3, 1), (4, 3, 3)]
    """
    if n < 1:
        raise ArgumentError(f"Число антенн должно быть положительным, получено {n}")
    table = [(AtomicClass("G", w), gw_triple(n, w)) for w in range(-1, n // 2 + 1)]
    if n % 4 == 0:
        table.append((AtomicClass("H", n // 2), hm_triple(n)))
    return table


@dataclass(frozen=True)
class ParamSolution:
    """
    Кратности атомарных классов.

    Attributes:
        n (int): Число антенн.
        t (Tuple[int, ...]): t_w для w = -1..floor(n/2), по порядку.
        t_h (int | None): Число частей класса H; None, если n не кратно 4.
    """

    n: int
    t: Tuple[int, ...]
    t_h: Optional[int] = None

    def __post_init__(self):
        if len(self.t) != self.n // 2 + 2:
            raise ArgumentError(f"Ожидалось {self.n // 2 + 2} кратностей t, получено {len(self.t)}")
        if any(c < 0 for c in self.t) or (self.t_h is not None and self.t_h < 0):
            raise ArgumentError("Кратности должны быть неотрицательными")
        if (self.t_h is not None) != (self.n % 4 == 0):
            raise ArgumentError("Кратность t_h задаётся тогда и только тогда, когда n кратно 4")

    def count(self, w: int) -> int:
        """Кратность t_w, -1 <= w <= floor(n/2)."""
        if not -1 <= w <= self.n // 2:
            raise ArgumentError(f"Индекс {w} вне диапазона -1..{self.n // 2}")
        return self.t[w + 1]

    def items(self) -> List[Tuple[AtomicClass, int]]:
        """Пары (класс, кратность) в порядке :func:`atomic_params`."""
        pairs = [(AtomicClass("G", w), c) for w, c in enumerate(self.t, -1)]
        if self.t_h is not None:
            pairs.append((AtomicClass("H", self.n // 2), self.t_h))
        return pairs

    def totals(self) -> ParamTriple:
        """Параметры [p, n, k] катенации, задаваемой решением."""
        p = k = 0
        for (_, triple), (_, count) in zip(atomic_params(self.n), self.items()):
            p += count * triple.p
            k += count * triple.k
        return ParamTriple(p, self.n, k)

    def __str__(self) -> str:
        parts = [f"t_{w}={c}" for w, c in enumerate(self.t, -1) if c]
        if self.t_h:
            parts.append(f"t_h={self.t_h}")
        return " ".join(parts) if parts else "0"


def feasible(p: int, n: int, k: int) -> List[ParamSolution]:
    """
    Все разложения [p, n, k] в сумму атомарных параметров.

    Перебор ведётся по классам в порядке убывания задержки; ветви
    отсекаются, если оставшееся число переменных не достижимо при
    максимальной (или минимальной) скорости оставшихся классов.
    Кратности двух последних классов находятся из линейной системы 2x2
    без перебора.

    Args:
        p (int): Задержка, p >= 1.
        n (int): Число антенн, n >= 1.
        k (int): Число переменных, k >= 0.

    Returns:
        List[ParamSolution]: Решения в лексикографическом порядке; пустой список,
        если COD первого типа с такими параметрами не существует.

    Raises:
        ArgumentError: Если параметры вне области определения.

    Example:
        >>> [str(s) for s in feasible(7, 3, 4)]
        ['t_0=1 t_1=1']
    """
    if p < 1 or n < 1 or k < 0:
        raise ArgumentError(f"Ожидалось p >= 1, n >= 1, k >= 0; получено [{p}, {n}, {k}]")
    table = atomic_params(n)
    order = sorted(range(len(table)), key=lambda idx: -table[idx][1].p)
    triples = [table[idx][1] for idx in order]
    max_rate_suffix = [Fraction(0)] * (len(triples) + 1)
    min_rate_suffix = [Fraction(10 ** 9)] * (len(triples) + 1)
    for pos in range(len(triples) - 1, -1, -1):
        max_rate_suffix[pos] = max(max_rate_suffix[pos + 1], triples[pos].rate)
        min_rate_suffix[pos] = min(min_rate_suffix[pos + 1], triples[pos].rate)

    found: List[Tuple[int, ...]] = []
    counts = [0] * len(triples)

    def search(pos: int, rest_p: int, rest_k: int) -> None:
        if rest_p == 0:
            if rest_k == 0:
                found.append(tuple(counts))
            return
        if rest_k > rest_p * max_rate_suffix[pos] or rest_k < rest_p * min_rate_suffix[pos]:
            return
        if pos == len(triples) - 2:
            solve_last_two(rest_p, rest_k)
            return
        triple = triples[pos]
        top = rest_p // triple.p
        if triple.k:
            top = min(top, rest_k // triple.k)
        for c in range(top, -1, -1):
            counts[pos] = c
            search(pos + 1, rest_p - c * triple.p, rest_k - c * triple.k)
        counts[pos] = 0

    def solve_last_two(rest_p: int, rest_k: int) -> None:
        a, b = triples[-2], triples[-1]
        # один из двух классов всегда w = -1 с k = 0, поэтому det != 0
        det = a.p * b.k - b.p * a.k
        num_a = rest_p * b.k - b.p * rest_k
        num_b = a.p * rest_k - a.k * rest_p
        if num_a % det or num_b % det:
            return
        c_a, c_b = num_a // det, num_b // det
        if c_a >= 0 and c_b >= 0:
            counts[-2], counts[-1] = c_a, c_b
            found.append(tuple(counts))
            counts[-2] = counts[-1] = 0

    search(0, p, k)
    solutions = []
    for sorted_counts in found:
        by_class = [0] * len(table)
        for pos, idx in enumerate(order):
            by_class[idx] = sorted_counts[pos]
        t_h = by_class[-1] if n % 4 == 0 else None
        t = tuple(by_class[: n // 2 + 2])
        solutions.append(ParamSolution(n, t, t_h))
    solutions.sort(key=lambda s: (s.t, s.t_h or 0))
    logger.debug("feasible(%d, %d, %d): %d решений", p, n, k, len(solutions))
    return solutions


def count_inequivalent(p: int, n: int, k: int) -> int:
    """Число попарно неэквивалентных COD первого типа с параметрами [p, n, k]."""
    return len(feasible(p, n, k))


def feasibility_frame(p: int, n: int, k: int) -> pd.DataFrame:
    """
    Решения :func:`feasible` в виде таблицы: по столбцу на каждую кратность.

    Returns:
        pd.DataFrame: Столбцы ``t_-1 .. t_{n//2}`` и ``t_h`` при n, кратном 4.
    """
    columns = [f"t_{w}" for w in range(-1, n // 2 + 1)]
    if n % 4 == 0:
        columns.append("t_h")
    rows = []
    for solution in feasible(p, n, k):
        row = list(solution.t)
        if solution.t_h is not None:
            row.append(solution.t_h)
        rows.append(row)
    return pd.DataFrame(rows, columns=columns)


def max_rate(n: int) -> Fraction:
    """
    Максимальная скорость COD с n антеннами: (m+1)/(2m), m = ceil(n/2).

    Example:
        >>> max_rate(14)
        Fraction(4, 7)
    """
    if n < 1:
        raise ArgumentError(f"Число антенн должно быть положительным, получено {n}")
    m = (n + 1) // 2
    return Fraction(m + 1, 2 * m)


def min_delay(n: int) -> int:
    """Минимальная задержка COD максимальной скорости; удваивается при n = 2 mod 4."""
    if n < 1:
        raise ArgumentError(f"Число антенн должно быть положительным, получено {n}")
    m = (n + 1) // 2
    delay = binom(2 * m, m - 1)
    return 2 * delay if n % 4 == 2 else delay


def _decimal(rate: Fraction) -> float:
    return float(f"{float(rate):.4g}")


def tradeoff_table(n: int) -> pd.DataFrame:
    """
    Компромисс скорость/задержка для семейства G_n^w, w = 0..floor(n/2).

    Скорость строго возрастает по w, задержка не убывает. При n, кратном 4,
    добавляется строка ``w = "H"`` для H_n^m.

    Args:
        n (int): Число антенн.

    Returns:
        pd.DataFrame: Столбцы w, p, k, rate_num, rate_den, rate_decimal.

    Example:
        >>> int(tradeoff_table(14).iloc[-1]["p"])
        6006
    """
    if n < 1:
        raise ArgumentError(f"Число антенн должно быть положительным, получено {n}")
    rows = []
    for w in range(0, n // 2 + 1):
        triple = gw_triple(n, w)
        rows.append((w, triple.p, triple.k, triple.rate))
    if n % 4 == 0:
        triple = hm_triple(n)
        rows.append(("H", triple.p, triple.k, triple.rate))
    return pd.DataFrame(
        [
            {
                "w": w,
                "p": p,
                "k": k,
                "rate_num": rate.numerator,
                "rate_den": rate.denominator,
                "rate_decimal": _decimal(rate),
            }
            for w, p, k, rate in rows
        ],
        columns=["w", "p", "k", "rate_num", "rate_den", "rate_decimal"],
    )

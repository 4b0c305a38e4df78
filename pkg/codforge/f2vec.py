"""
Векторы фиксированной длины над полем F_2.

Позиции нумеруются с 1. Бит с номером ``i`` имеет вес ``2**(i-1)``, то есть
позиция 1 младшая, а позиция ``L`` старшая. Поэтому сравнение векторов
совпадает со сравнением их целочисленных значений, и, например,
``alpha ^ e_i ^ e_j > alpha`` при ``alpha(i) = 0, alpha(j) = 1`` тогда и
только тогда, когда ``j < i``.

Example:
    >>> v = unit(3, 1) ^ unit(3, 2) ^ unit(3, 3)
    >>> str(v)
    '(1,1,1)'
    >>> weight_range(F2Vec.from_bits([1, 1, 1, 0]), 2, 4)
    2
"""

from dataclasses import dataclass
from typing import Iterable, Iterator, List

from .errors import ArgumentError, ParseError

MAX_LENGTH = 64


@dataclass(frozen=True, order=True)
class F2Vec:
    """
    Вектор из F_2^L, упакованный в одно целое число.

    Attributes:
        length (int): Длина L, 1 <= L <= 64.
        value (int): Значение sum(alpha(i) * 2**(i-1)).
    """

    length: int
    value: int

    def __post_init__(self):
        if not 1 <= self.length <= MAX_LENGTH:
            raise ArgumentError(f"Длина вектора должна быть от 1 до {MAX_LENGTH}, получено {self.length}")
        if not 0 <= self.value < (1 << self.length):
            raise ArgumentError(f"Значение {self.value} не помещается в {self.length} бит")

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "F2Vec":
        """
        Строит вектор по последовательности битов alpha(1), ..., alpha(L).

        Args:
            bits (Iterable[int]): Биты 0/1, первый элемент соответствует позиции 1.

        Returns:
            F2Vec: Построенный вектор.

        Raises:
            ArgumentError: Если встретился бит не из {0, 1}.
        """
        bits = list(bits)
        value = 0
        for pos, b in enumerate(bits):
            if b not in (0, 1):
                raise ArgumentError(f"Бит должен быть 0 или 1, получено {b!r}")
            value |= b << pos
        return cls(len(bits), value)

    @classmethod
    def parse(cls, text: str) -> "F2Vec":
        """
        Разбирает текстовую форму ``"(b1,b2,...,bL)"``.

        Raises:
            ParseError: Если строка не соответствует формату.
        """
        body = text.strip()
        if not (body.startswith("(") and body.endswith(")")):
            raise ParseError(f"Ожидался вектор вида (b1,...,bL), получено {text!r}")
        parts = [p.strip() for p in body[1:-1].split(",")]
        if not all(p in ("0", "1") for p in parts):
            raise ParseError(f"Вектор содержит недопустимые биты: {text!r}")
        return cls.from_bits(int(p) for p in parts)

    def bit(self, i: int) -> int:
        """Возвращает alpha(i) для 1 <= i <= L."""
        if not 1 <= i <= self.length:
            raise ArgumentError(f"Позиция {i} вне диапазона 1..{self.length}")
        return (self.value >> (i - 1)) & 1

    @property
    def bits(self) -> tuple:
        return tuple((self.value >> pos) & 1 for pos in range(self.length))

    def weight(self) -> int:
        return bin(self.value).count("1")

    def extend(self, length: int) -> "F2Vec":
        """Тот же вектор, дополненный нулями в старших позициях до длины ``length``."""
        if length < self.length:
            raise ArgumentError(f"Нельзя укоротить вектор длины {self.length} до {length}")
        return F2Vec(length, self.value)

    def __xor__(self, other: "F2Vec") -> "F2Vec":
        return xor(self, other)

    def __str__(self) -> str:
        return "(" + ",".join(str(b) for b in self.bits) + ")"


def zeros(length: int) -> F2Vec:
    return F2Vec(length, 0)


def ones(length: int) -> F2Vec:
    """Вектор e = (1, 1, ..., 1)."""
    return F2Vec(length, (1 << length) - 1)


def unit(length: int, i: int) -> F2Vec:
    """
    Единичный вектор e_i.

    Args:
        length (int): Длина L.
        i (int): Номер единичной позиции, 1 <= i <= L.

    Returns:
        F2Vec: Вектор с единственной единицей в позиции i.

    Raises:
        ArgumentError: Если i вне диапазона.

    Example:
        >>> str(unit(4, 4))
        '(0,0,0,1)'
    """
    if not 1 <= i <= length:
        raise ArgumentError(f"Позиция {i} вне диапазона 1..{length}")
    return F2Vec(length, 1 << (i - 1))


def xor(a: F2Vec, b: F2Vec) -> F2Vec:
    if a.length != b.length:
        raise ArgumentError(f"Длины векторов не совпадают: {a.length} и {b.length}")
    return F2Vec(a.length, a.value ^ b.value)


def weight_range(v: F2Vec, s: int, t: int) -> int:
    """
    Вес на отрезке позиций: wt_{s,t}(v) = v(s) + ... + v(t).

    Args:
        v (F2Vec): Вектор.
        s (int): Начало отрезка (включительно).
        t (int): Конец отрезка (включительно).

    Returns:
        int: Число единиц в позициях s..t.

    Raises:
        ArgumentError: Если не выполнено 1 <= s <= t <= L.
    """
    if not 1 <= s <= t <= v.length:
        raise ArgumentError(f"Некорректный отрезок [{s}, {t}] для длины {v.length}")
    mask = ((1 << (t - s + 1)) - 1) << (s - 1)
    return bin(v.value & mask).count("1")


def _masks_of_weight(length: int, w: int) -> Iterator[int]:
    # Перебор Госпера: маски веса w в порядке возрастания значения
    if w == 0:
        yield 0
        return
    limit = 1 << length
    val = (1 << w) - 1
    while val < limit:
        yield val
        low = val & -val
        ripple = val + low
        val = ripple | (((val ^ ripple) >> 2) // low)


def enumerate_weight(length: int, w: int) -> List[F2Vec]:
    """
    Все векторы длины ``length`` веса ``w`` в порядке возрастания значения.

    Для w вне [0, L] возвращается пустой список, что позволяет вызывающему
    коду не разбирать вырожденные случаи с нулевым биномиальным коэффициентом.

    Example:
        >>> [str(v) for v in enumerate_weight(4, 2)[:3]]
        ['(1,1,0,0)', '(1,0,1,0)', '(0,1,1,0)']
    """
    if not 1 <= length <= MAX_LENGTH:
        raise ArgumentError(f"Длина вектора должна быть от 1 до {MAX_LENGTH}, получено {length}")
    if not 0 <= w <= length:
        return []
    return [F2Vec(length, mask) for mask in _masks_of_weight(length, w)]

"""
Исключения библиотеки codforge.

Все ошибки наследуются от :class:`CodforgeError` и дополнительно от
встроенного ``ValueError`` или ``RuntimeError``, поэтому вызывающий код,
перехватывающий стандартные исключения, продолжает работать.
"""


class CodforgeError(Exception):
    """Базовый класс всех ошибок codforge."""


class ArgumentError(CodforgeError, ValueError):
    """Аргумент вне допустимого диапазона (индекс, длина, параметр семейства)."""


class PreconditionError(CodforgeError, ValueError):
    """Операция определена только для COD, а получен другой объект."""


class StructuralError(CodforgeError, ValueError):
    """Нарушена структура COD (например, блок B_j не имеет формы -M_j^H)."""


class ClassificationError(CodforgeError, ValueError):
    """Атомарная часть не совпадает ни с одним допустимым набором параметров."""


class CanonicalizationError(ClassificationError):
    """Не удалось построить эквивалентность с канонической формой."""


class UnsupportedInputError(CodforgeError, ValueError):
    """Вход вне области применимости теории (COD не первого типа)."""


class ResourceError(CodforgeError, RuntimeError):
    """Запрошенная конструкция превышает ограничение на размер."""


class ParseError(CodforgeError, ValueError):
    """
    Ошибка разбора текстового или JSON-представления матрицы.

    Attributes:
        line (int | None): Номер строки (с 1), если известен.
        column (int | None): Номер столбца (с 1), если известен.
    """

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            where = f"строка {line}" if column is None else f"строка {line}, столбец {column}"
            message = f"{message} ({where})"
        super().__init__(message)

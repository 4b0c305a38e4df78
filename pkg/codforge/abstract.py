from abc import ABC, abstractmethod
from pathlib import Path

from .errors import ParseError
from .matrix import CODMatrix


class MatrixReader(ABC):
    """
    Абстрактный базовый класс для чтения матриц COD из файлов.

    Открывает файл в with-блоке и разбирает его содержимое целиком:
    матрица небольшая и всегда читается за один проход.

    Attributes:
        filepath (Path): Путь к файлу с матрицей.
        file (file object or None): Открытый файловый дескриптор или None, если файл закрыт.
    """

    def __init__(self, filepath: str | Path):
        """
        Args:
            filepath (str | Path): Путь к файлу в виде строки или объекта pathlib.Path.
        """
        self.filepath = Path(filepath)
        self.file = None

    @classmethod
    @abstractmethod
    def parse_text(cls, text: str) -> CODMatrix:
        """
        Разбирает текстовое содержимое в матрицу.

        Args:
            text (str): Содержимое файла.

        Returns:
            CODMatrix: Прочитанная матрица.

        Raises:
            ParseError: Если содержимое не соответствует формату.
        """

    def read(self) -> CODMatrix:
        """
        Читает матрицу из открытого файла.

        Raises:
            ParseError: Если файл не открыт или содержимое некорректно.
        """
        if self.file is None:
            raise ParseError(f"Файл {self.filepath} не открыт; используйте with-блок")
        return self.parse_text(self.file.read())

    def close(self):
        """Закрывает открытый файл, если он ещё не закрыт."""
        if self.file and not self.file.closed:
            self.file.close()
        self.file = None

    def __enter__(self):
        self.file = open(self.filepath, "r", encoding="utf-8")
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.close()

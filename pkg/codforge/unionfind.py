"""
Системы непересекающихся множеств (Union-Find).

:class:`UnionFind` используется для разбиения строк COD на атомарные части,
:class:`ParityUnionFind` хранит дополнительно чётность относительно корня и
решает системы уравнений x_a + x_b = c над F_2 (знаки строк и переменных).
"""

from collections import defaultdict, deque
from typing import Any, Dict, List, Optional, Tuple


class UnionFind:
    """
    Union-Find с объединением по размеру и сжатием путей.

    В ``parents`` для корня хранится размер группы со знаком минус,
    для остальных элементов номер родителя.
    """

    def __init__(self, n: int):
        self.n = n
        self.parents = [-1] * n

    def find(self, x: int) -> int:
        if self.parents[x] < 0:
            return x
        self.parents[x] = self.find(self.parents[x])
        return self.parents[x]

    def union(self, x: int, y: int) -> None:
        root_x = self.find(x)
        root_y = self.find(y)
        if root_x == root_y:
            return
        # присоединяем меньшую группу к большей
        if self.parents[root_x] > self.parents[root_y]:
            root_x, root_y = root_y, root_x
        self.parents[root_x] += self.parents[root_y]
        self.parents[root_y] = root_x

    def all_group_members(self) -> Dict[int, List[int]]:
        group_members = defaultdict(list)
        for member in range(self.n):
            group_members[self.find(member)].append(member)
        return group_members


class ParityUnionFind:
    """
    Union-Find с чётностями: для каждого элемента известна чётность
    x_elem + x_root над F_2.

    Принятые рёбра запоминаются вместе с произвольной полезной нагрузкой,
    чтобы при противоречии можно было предъявить нечётный цикл.

    Example:
        >>> uf = ParityUnionFind(3)
        >>> uf.union(0, 1, 1), uf.union(1, 2, 1), uf.union(0, 2, 1)
        (True, True, False)
    """

    def __init__(self, n: int):
        self.n = n
        self.parents = [-1] * n
        self.parity = [0] * n
        self._forest: Dict[int, List[Tuple[int, int, Any]]] = defaultdict(list)

    def find(self, x: int) -> Tuple[int, int]:
        """
        Возвращает корень группы и чётность x относительно корня.

        Returns:
            Tuple[int, int]: (корень, чётность).
        """
        path = []
        while self.parents[x] >= 0:
            path.append(x)
            x = self.parents[x]
        root = x
        # сжатие путей: пересчитываем чётности от корня вниз
        acc = 0
        for node in reversed(path):
            acc ^= self.parity[node]
            self.parity[node] = acc
            self.parents[node] = root
        return root, (self.parity[path[0]] if path else 0)

    def union(self, x: int, y: int, parity: int, payload: Any = None) -> bool:
        """
        Добавляет уравнение x_x + x_y = parity.

        Args:
            x (int): Первый элемент.
            y (int): Второй элемент.
            parity (int): Правая часть 0 или 1.
            payload (Any): Данные ребра, возвращаемые :meth:`path`.

        Returns:
            bool: False, если уравнение противоречит уже принятым.
        """
        root_x, par_x = self.find(x)
        root_y, par_y = self.find(y)
        if root_x == root_y:
            return (par_x ^ par_y) == parity
        if self.parents[root_x] > self.parents[root_y]:
            root_x, root_y = root_y, root_x
        self.parents[root_x] += self.parents[root_y]
        self.parents[root_y] = root_x
        self.parity[root_y] = par_x ^ par_y ^ parity
        self._forest[x].append((y, parity, payload))
        self._forest[y].append((x, parity, payload))
        return True

    def value(self, x: int) -> int:
        """Значение x в решении, где все корни равны 0."""
        return self.find(x)[1]

    def path(self, x: int, y: int) -> Optional[List[Tuple[int, int, int, Any]]]:
        """
        Путь между x и y по принятым рёбрам.

        Returns:
            List[Tuple[int, int, int, Any]] | None: Рёбра (от, к, чётность, нагрузка)
            или None, если x и y в разных группах.
        """
        previous: Dict[int, Optional[Tuple[int, int, Any]]] = {x: None}
        queue = deque([x])
        while queue:
            node = queue.popleft()
            if node == y:
                break
            for nxt, par, payload in self._forest[node]:
                if nxt not in previous:
                    previous[nxt] = (node, par, payload)
                    queue.append(nxt)
        if y not in previous:
            return None
        edges = []
        node = y
        while previous[node] is not None:
            prev, par, payload = previous[node]
            edges.append((prev, node, par, payload))
            node = prev
        edges.reverse()
        return edges

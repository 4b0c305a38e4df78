import logging
from collections import Counter
from typing import Any, Dict

import matplotlib.pyplot as plt
from matplotlib.figure import Figure

from .errors import CodforgeError
from .matrix import CODMatrix
from .params import gw_triple, hm_triple, max_rate, min_delay
from .structure import decompose_atomic, signature
from .verify import is_cod, is_conjugation_separated, is_first_type, zero_pattern

logger = logging.getLogger(__name__)


def plot_tradeoff(n: int) -> Figure:
    """
    Строит график компромисса скорость/задержка для семейства G_n^w.

    По оси абсцисс откладывается задержка (логарифмическая шкала), по оси
    ординат скорость; каждая точка подписана значением w. При n, кратном 4,
    отдельным маркером отмечается H_n^m, а горизонтальная линия показывает
    верхнюю границу скорости.

    Args:
        n (int): Число антенн.

    Returns:
        Figure: Построенная фигура; отображение и сохранение остаются вызывающему коду.
    """
    ws = list(range(-1, n // 2 + 1))
    triples = [gw_triple(n, w) for w in ws]
    # w = -1 даёт нулевую скорость и не отображается на логарифмической шкале
    points = [(w, t) for w, t in zip(ws, triples) if t.k > 0]

    fig = plt.figure(figsize=(10, 6))
    ax = fig.add_subplot(1, 1, 1)
    ax.plot([t.p for _, t in points], [float(t.rate) for _, t in points],
            marker="o", color="blue", linewidth=2, label="G_n^w")
    for w, t in points:
        ax.annotate(f"w={w}", (t.p, float(t.rate)), textcoords="offset points", xytext=(4, 4))
    if n % 4 == 0:
        h = hm_triple(n)
        ax.plot([h.p], [float(h.rate)], marker="s", color="green", linestyle="none", label="H_n^m")
    ax.axhline(y=float(max_rate(n)), color="red", linestyle="--", alpha=0.7, label="max rate")
    ax.set_xscale("log")
    ax.set_title(f"Code rate and delay for n = {n}")
    ax.set_xlabel("Decoding delay p")
    ax.set_ylabel("Code rate k/p")
    ax.legend()
    ax.grid(True, linestyle="--", alpha=0.3)
    fig.tight_layout()
    return fig


def analyze(m: CODMatrix) -> Dict[str, Any]:
    """
    Сводный отчёт по матрице.

    Отчёт содержит параметры, скорость, вердикты проверок, число строк
    каждого веса, число атомарных частей и сигнатуру (для COD первого
    типа), а также сравнение с границами скорости и задержки.

    Args:
        m (CODMatrix): Анализируемая матрица.

    Returns:
        Dict[str, Any]: Отчёт, сериализуемый в JSON.
    """
    cod = is_cod(m)
    report: Dict[str, Any] = {
        "p": m.p,
        "n": m.n,
        "k": m.k,
        "rate": str(m.rate),
        "cod": cod.ok,
        "conjugation_separated": is_conjugation_separated(m),
        "row_weights": {
            str(w): c for w, c in sorted(Counter(zero_pattern(m, r).weight() for r in range(1, m.p + 1)).items())
        },
        "max_rate": str(max_rate(m.n)),
        "min_delay": min_delay(m.n),
    }
    if not cod:
        report["witness"] = str(cod.witness)
        return report
    first_type = is_first_type(m)
    report["first_type"] = first_type.ok
    report["atomic_parts"] = len(decompose_atomic(m))
    if first_type:
        try:
            report["signature"] = signature(m).as_dict()
        except CodforgeError as e:
            logger.warning("Сигнатура не вычислена: %s", e)
    else:
        report["first_type_witness"] = list(first_type.witness)
    report["optimal"] = bool(first_type) and m.rate == max_rate(m.n) and m.p == min_delay(m.n)
    return report

"""
Командная строка codforge.

Грамматика::

    codforge <verb> [--family G|Gw|H|Hm] [--n INT] [--w INT] [--p INT] [--k INT]
             [--format text|json|csv|latex] [--seed INT] [--allow-large] [-v] [FILE ...]

Коды возврата: 0 при успехе и положительном ответе, 1 при отрицательном
ответе (не COD, не эквивалентны, параметры недопустимы), 2 при ошибке
использования, разбора или вычисления.
"""

import argparse
import json
import logging
import sys
from typing import List, Optional, Sequence, TextIO

import pandas as pd

from .analyze_tradeoff import analyze
from .errors import ArgumentError, CodforgeError
from .formats import FORMATS, read_matrix, serialize
from .generators import gen_G, gen_Gw, gen_H, gen_Hm
from .matrix import CODMatrix
from .params import feasibility_frame, feasible, tradeoff_table
from .structure import canonicalize_atomic, decompose_atomic, equivalent, scramble
from .verify import is_cod
from .writers import to_json_dict

logger = logging.getLogger(__name__)

VERBS = ("generate", "verify", "analyze", "decompose", "canonicalize", "equivalent", "feasible", "tradeoff")
SCRAMBLE_OPS = 8


class _Parser(argparse.ArgumentParser):
    # ошибки argparse превращаются в код 2 без выхода из процесса
    def exit(self, status=0, message=None):
        if message:
            self._print_message(message, sys.stderr)
        raise _ParserExit(status)


class _ParserExit(Exception):
    def __init__(self, status: int):
        super().__init__(status)
        self.status = status


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="codforge", description="Комплексные ортогональные дизайны первого типа")
    parser.add_argument("verb", choices=VERBS, help="Выполняемая операция")
    parser.add_argument("files", nargs="*", metavar="FILE", help="Файлы с матрицами (по умолчанию stdin)")
    parser.add_argument("--family", choices=("G", "Gw", "H", "Hm"), help="Семейство для generate")
    parser.add_argument("--n", type=int, help="Число антенн")
    parser.add_argument("--w", type=int, help="Параметр семейства Gw")
    parser.add_argument("--p", type=int, help="Задержка")
    parser.add_argument("--k", type=int, help="Число переменных")
    parser.add_argument("--format", choices=FORMATS, default="text", help="Формат вывода")
    parser.add_argument("--seed", type=int, help="Зерно для случайного перемешивания в generate")
    parser.add_argument("--allow-large", action="store_true", help="Снять ограничение размера G и H")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="Подробный журнал (-vv для отладки)")
    return parser


def _require(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{name}" for name in names if getattr(args, name) is None]
    if missing:
        raise ArgumentError(f"Операция {args.verb} требует параметров {', '.join(missing)}")


def _read_inputs(files: Sequence[str], stdin: TextIO, count: int) -> List[CODMatrix]:
    if len(files) > count:
        raise ArgumentError(f"Ожидалось не более {count} файлов, получено {len(files)}")
    matrices = [read_matrix(path) for path in files]
    if len(matrices) < count:
        if len(matrices) < count - 1:
            raise ArgumentError(f"Ожидалось {count} входные матрицы")
        matrices.append(read_matrix(stdin))
    return matrices


def _latex_table(frame: pd.DataFrame) -> str:
    lines = [r"\begin{tabular}{" + "r" * len(frame.columns) + "}", r"\hline"]
    lines.append(" & ".join(str(c).replace("_", r"\_") for c in frame.columns) + r" \\ \hline")
    for row in frame.itertuples(index=False):
        lines.append(" & ".join(str(v) for v in row) + r" \\")
    lines += [r"\hline", r"\end{tabular}"]
    return "\n".join(lines) + "\n"


def _emit_frame(frame: pd.DataFrame, fmt: str, out: TextIO) -> None:
    if fmt == "csv":
        out.write(frame.to_csv(index=False))
    elif fmt == "json":
        out.write(frame.to_json(orient="records") + "\n")
    elif fmt == "latex":
        out.write(_latex_table(frame))
    else:
        out.write(frame.to_string(index=False) + "\n")


def _generate(args, out: TextIO) -> int:
    _require(args, "family", "n")
    if args.family == "G":
        m = gen_G(args.n, allow_large=args.allow_large)
    elif args.family == "Gw":
        _require(args, "w")
        m = gen_Gw(args.n, args.w)
    elif args.family == "H":
        m = gen_H(args.n, allow_large=args.allow_large)
    else:
        m = gen_Hm(args.n)
    if args.seed is not None:
        m, ops = scramble(m, SCRAMBLE_OPS, args.seed)
        logger.info("Применены операции: %s", ", ".join(map(str, ops)))
    out.write(serialize(m, args.format))
    return 0


def _verify(args, stdin: TextIO, out: TextIO) -> int:
    (m,) = _read_inputs(args.files, stdin, 1)
    verdict = is_cod(m)
    if args.format == "json":
        witness = None if verdict.ok else str(verdict.witness)
        out.write(json.dumps({"cod": verdict.ok, "witness": witness}, ensure_ascii=False) + "\n")
    else:
        out.write("COD: yes\n" if verdict.ok else f"COD: no\nwitness: {verdict.witness}\n")
    return 0 if verdict.ok else 1


def _analyze(args, stdin: TextIO, out: TextIO) -> int:
    (m,) = _read_inputs(args.files, stdin, 1)
    report = analyze(m)
    if args.format == "json":
        out.write(json.dumps(report, ensure_ascii=False) + "\n")
    else:
        for key, value in report.items():
            out.write(f"{key}: {value}\n")
    return 0


def _decompose(args, stdin: TextIO, out: TextIO) -> int:
    (m,) = _read_inputs(args.files, stdin, 1)
    parts = decompose_atomic(m)
    if args.format == "json":
        payload = [
            {"rows": list(part.rows), "params": list(part.matrix.params), "matrix": to_json_dict(part.matrix)}
            for part in parts
        ]
        out.write(json.dumps(payload, ensure_ascii=False) + "\n")
        return 0
    for i, part in enumerate(parts, 1):
        p, n, k = part.matrix.params
        out.write(f"part {i}: rows {','.join(map(str, part.rows))} [{p}, {n}, {k}]\n")
        out.write(serialize(part.matrix, args.format))
    return 0


def _canonicalize(args, stdin: TextIO, out: TextIO) -> int:
    (m,) = _read_inputs(args.files, stdin, 1)
    forms = [canonicalize_atomic(part, m.n) for part in decompose_atomic(m)]
    if args.format == "json":
        payload = [
            {"class": str(f.cls), "matrix": to_json_dict(f.matrix), "transcript": [str(op) for op in f.transcript]}
            for f in forms
        ]
        out.write(json.dumps(payload, ensure_ascii=False) + "\n")
        return 0
    for i, form in enumerate(forms, 1):
        out.write(f"part {i}: class {form.cls}\n")
        out.write(serialize(form.matrix, args.format))
        out.write("transcript: " + ("; ".join(map(str, form.transcript)) or "identity") + "\n")
    return 0


def _equivalent(args, stdin: TextIO, out: TextIO) -> int:
    m1, m2 = _read_inputs(args.files, stdin, 2)
    answer = equivalent(m1, m2)
    if args.format == "json":
        out.write(json.dumps({"equivalent": answer}) + "\n")
    else:
        out.write(f"equivalent: {'yes' if answer else 'no'}\n")
    return 0 if answer else 1


def _feasible(args, out: TextIO) -> int:
    _require(args, "p", "n", "k")
    solutions = feasible(args.p, args.n, args.k)
    if args.format == "text":
        out.write("\n".join(str(s) for s in solutions) + "\n" if solutions else "infeasible\n")
    else:
        _emit_frame(feasibility_frame(args.p, args.n, args.k), args.format, out)
    return 0 if solutions else 1


def _tradeoff(args, out: TextIO) -> int:
    _require(args, "n")
    _emit_frame(tradeoff_table(args.n), args.format, out)
    return 0


def run(argv: Optional[Sequence[str]] = None, stdin: Optional[TextIO] = None,
        stdout: Optional[TextIO] = None) -> int:
    """
    Выполняет одну команду и возвращает код возврата.

    Args:
        argv (Sequence[str] | None): Аргументы без имени программы; по умолчанию sys.argv[1:].
        stdin (TextIO | None): Поток для чтения матриц; по умолчанию sys.stdin.
        stdout (TextIO | None): Поток вывода; по умолчанию sys.stdout.

    Returns:
        int: 0, 1 или 2.
    """
    stdin = stdin or sys.stdin
    out = stdout or sys.stdout
    try:
        args = build_parser().parse_intermixed_args(argv)
    except _ParserExit as e:
        return 2 if e.status else 0
    level = logging.WARNING if args.verbose == 0 else logging.INFO if args.verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    try:
        if args.verb == "generate":
            return _generate(args, out)
        if args.verb == "feasible":
            return _feasible(args, out)
        if args.verb == "tradeoff":
            return _tradeoff(args, out)
        handler = {
            "verify": _verify,
            "analyze": _analyze,
            "decompose": _decompose,
            "canonicalize": _canonicalize,
            "equivalent": _equivalent,
        }[args.verb]
        return handler(args, stdin, out)
    except (CodforgeError, OSError) as e:
        print(f"Ошибка: {e}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

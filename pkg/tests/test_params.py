import time
from fractions import Fraction
from itertools import product

import pytest

from codforge import (
    ArgumentError,
    AtomicClass,
    ParamSolution,
    ParamTriple,
    atomic_params,
    count_inequivalent,
    feasibility_frame,
    feasible,
    max_rate,
    min_delay,
    realize,
    signature,
    tradeoff_table,
)
from codforge.params import binom, gw_triple, hm_triple


def _reachable(n, limit):
    """Перебор всех кратностей: число решений для каждой пары (p, k) с p <= limit."""
    triples = [t for _, t in atomic_params(n)]
    counts = {}
    for combo in product(*[range(limit // t.p + 1) for t in triples]):
        p = sum(c * t.p for c, t in zip(combo, triples))
        k = sum(c * t.k for c, t in zip(combo, triples))
        if 1 <= p <= limit:
            counts[(p, k)] = counts.get((p, k), 0) + 1
    return counts


# --- атомарная таблица ---

def test_binom_outside_range():
    assert binom(4, -1) == 0
    assert binom(4, 5) == 0
    assert binom(4, 2) == 6


def test_atomic_params_three():
    table = atomic_params(3)
    assert [str(cls) for cls, _ in table] == ["Gw{-1}", "Gw{0}", "Gw{1}"]
    assert [tuple(t) for _, t in table] == [(1, 3, 0), (3, 3, 1), (4, 3, 3)]


def test_atomic_params_four_has_h():
    table = atomic_params(4)
    assert [tuple(t) for _, t in table] == [(1, 4, 0), (4, 4, 1), (7, 4, 4), (8, 4, 6), (4, 4, 3)]
    assert table[-1][0] == AtomicClass("H", 2)
    assert str(table[-1][0]) == "Hm"


@pytest.mark.parametrize("n", range(1, 13))
def test_atomic_params_start_with_zero_row(n):
    table = atomic_params(n)
    assert tuple(table[0][1]) == (1, n, 0)
    assert len(table) == n // 2 + 2 + (n % 4 == 0)


def test_triples():
    assert gw_triple(5, 6) == ParamTriple(1, 5, 0)
    assert hm_triple(8) == ParamTriple(56, 8, 35)
    assert ParamTriple(4, 3, 3).rate == Fraction(3, 4)


def test_atomic_class_kind():
    with pytest.raises(ArgumentError):
        AtomicClass("X", 0)
    with pytest.raises(ArgumentError):
        atomic_params(0)


# --- поиск решений ---

def test_feasible_examples():
    assert [str(s) for s in feasible(4, 3, 3)] == ["t_1=1"]
    assert feasible(2, 3, 2) == []
    assert [str(s) for s in feasible(7, 3, 4)] == ["t_0=1 t_1=1"]


@pytest.mark.parametrize("n", range(1, 9))
def test_single_zero_row(n):
    t = (1,) + (0,) * (n // 2 + 1)
    assert feasible(1, n, 0) == [ParamSolution(n, t, 0 if n % 4 == 0 else None)]


def test_double_middle_versus_padded():
    solutions = feasible(8, 4, 6)
    assert [str(s) for s in solutions] == ["t_h=2", "t_2=1"]
    assert count_inequivalent(8, 4, 6) == 2


def test_feasible_large_delay_is_fast():
    start = time.perf_counter()
    solutions = feasible(20000, 3, 5000)
    elapsed = time.perf_counter() - start
    assert len(solutions) == 1667
    assert solutions[0].t == (5000, 5000, 0)
    assert solutions[-1].t == (13330, 2, 1666)
    assert elapsed < 2.0


def test_feasible_large_delay_matches_formula():
    # n = 3: t_-1 + 3*t_0 + 4*t_1 = p, t_0 + 3*t_1 = k
    p, k = 600, 200
    expected = sorted((p - 3 * k + 5 * a, k - 3 * a, a) for a in range(k // 3 + 1))
    assert [s.t for s in feasible(p, 3, k)] == expected


@pytest.mark.parametrize("args", [(0, 3, 0), (1, 0, 0), (1, 3, -1)])
def test_feasible_arguments(args):
    with pytest.raises(ArgumentError):
        feasible(*args)


def test_feasibility_frame():
    frame = feasibility_frame(8, 4, 6)
    assert list(frame.columns) == ["t_-1", "t_0", "t_1", "t_2", "t_h"]
    assert frame.values.tolist() == [[0, 0, 0, 0, 2], [0, 0, 0, 1, 0]]
    empty = feasibility_frame(2, 3, 2)
    assert list(empty.columns) == ["t_-1", "t_0", "t_1"]
    assert empty.empty
    assert feasibility_frame(7, 3, 4).values.tolist() == [[0, 1, 1]]


@pytest.mark.parametrize("n", range(1, 6))
def test_feasible_is_complete(n):
    limit = 12
    counts = _reachable(n, limit)
    for p in range(1, limit + 1):
        for k in range(0, p + 1):
            assert count_inequivalent(p, n, k) == counts.get((p, k), 0), (p, n, k)


@pytest.mark.parametrize("n", range(1, 9))
def test_feasible_is_sound(n):
    for p in range(1, 13):
        for k in range(0, p + 1):
            for solution in feasible(p, n, k):
                assert solution.totals() == (p, n, k)
                m = realize(solution)
                assert m.params == (p, n, k)
                assert signature(m).as_solution() == solution


@pytest.mark.parametrize("n", range(1, 9))
def test_feasible_rates_respect_bound(n):
    bound = max_rate(n)
    for p in range(1, 13):
        for k in range(0, p + 1):
            if feasible(p, n, k):
                assert Fraction(k, p) <= bound


# --- ParamSolution ---

def test_param_solution_validation():
    with pytest.raises(ArgumentError):
        ParamSolution(3, (0, 1))
    with pytest.raises(ArgumentError):
        ParamSolution(4, (0, 0, 0, 0))
    with pytest.raises(ArgumentError):
        ParamSolution(3, (0, 0, 0), 1)
    with pytest.raises(ArgumentError):
        ParamSolution(3, (0, -1, 0))


def test_param_solution_accessors():
    solution = ParamSolution(4, (0, 1, 0, 1), 2)
    assert solution.count(0) == 1
    assert solution.count(2) == 1
    with pytest.raises(ArgumentError):
        solution.count(3)
    assert [(str(cls), c) for cls, c in solution.items()] == [
        ("Gw{-1}", 0), ("Gw{0}", 1), ("Gw{1}", 0), ("Gw{2}", 1), ("Hm", 2),
    ]
    assert solution.totals() == (4 + 8 + 8, 4, 1 + 6 + 6)
    assert str(solution) == "t_0=1 t_2=1 t_h=2"
    assert str(ParamSolution(3, (0, 0, 0))) == "0"


# --- границы и компромисс ---

@pytest.mark.parametrize(
    "n, rate, delay",
    [(1, Fraction(1), 1), (2, Fraction(1), 2), (4, Fraction(3, 4), 4),
     (5, Fraction(2, 3), 15), (8, Fraction(5, 8), 56), (14, Fraction(4, 7), 6006)],
)
def test_bounds(n, rate, delay):
    assert max_rate(n) == rate
    assert min_delay(n) == delay


def test_bounds_arguments():
    with pytest.raises(ArgumentError):
        max_rate(0)
    with pytest.raises(ArgumentError):
        min_delay(-3)
    with pytest.raises(ArgumentError):
        tradeoff_table(0)


def test_tradeoff_fourteen():
    frame = tradeoff_table(14)
    assert list(frame.columns) == ["w", "p", "k", "rate_num", "rate_den", "rate_decimal"]
    assert len(frame) == 8
    assert frame.iloc[1][["w", "p", "k", "rate_num", "rate_den"]].tolist() == [1, 92, 14, 7, 46]
    assert frame.iloc[-1][["w", "p", "k", "rate_num", "rate_den"]].tolist() == [7, 6006, 3432, 4, 7]
    assert frame.iloc[-1]["rate_decimal"] == pytest.approx(0.5714)
    assert "7,6006,3432,4,7,0.5714" in frame.to_csv(index=False).splitlines()


def test_tradeoff_two():
    frame = tradeoff_table(2)
    assert frame[["w", "p", "k"]].values.tolist() == [[0, 2, 1], [1, 2, 2]]
    assert frame.iloc[-1]["rate_decimal"] == 1.0


def test_tradeoff_padded_row():
    frame = tradeoff_table(8)
    assert frame.iloc[-1][["w", "p", "k", "rate_num", "rate_den"]].tolist() == ["H", 56, 35, 5, 8]


@pytest.mark.parametrize("n", range(1, 21))
def test_tradeoff_monotone(n):
    frame = tradeoff_table(n).iloc[: n // 2 + 1]
    rates = [Fraction(int(a), int(b)) for a, b in zip(frame["rate_num"], frame["rate_den"])]
    delays = frame["p"].tolist()
    assert all(a < b for a, b in zip(rates, rates[1:]))
    assert all(a <= b for a, b in zip(delays, delays[1:]))
    assert rates[-1] == max_rate(n)

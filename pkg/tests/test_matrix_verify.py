from fractions import Fraction
from math import comb

import pytest

from codforge import (
    ArgumentError,
    CODMatrix,
    Entry,
    F2Vec,
    ParseError,
    PreconditionError,
    TextReader,
    ZERO,
    catenate,
    extract_Bj,
    gen_G,
    gen_Gw,
    gen_H,
    gen_Hm,
    is_alamouti,
    is_cod,
    is_cod_fast,
    is_conjugation_separated,
    is_first_type,
    ones,
    symbolic_gram,
    unit,
    zero_pattern,
)
from codforge.verify import format_polynomial

from .conftest import EQ3_TEXT


def _diag_sum(k):
    return {((j, False), (j, True)): 1 for j in range(1, k + 1)}


def _first_type_corpus():
    designs = [gen_Gw(n, w) for n in range(1, 7) for w in range(-1, n + 2)]
    designs += [gen_Hm(4), gen_Hm(8), TextReader.parse_text(EQ3_TEXT)]
    designs.append(catenate(gen_Gw(4, 1), gen_Gw(4, 2)))
    designs.append(catenate(gen_Gw(3, 0), gen_Gw(3, 2), gen_Gw(3, -1)))
    return designs


# --- Entry и CODMatrix ---

def test_entry_tokens():
    assert Entry.from_token("-z2*") == Entry(2, -1, True)
    assert Entry.from_token("z10") == Entry(10)
    assert Entry.from_token("0") is ZERO
    assert str(Entry(3, -1, True)) == "-z3*"
    assert Entry(3, -1, True).latex() == "-z_{3}^{*}"


@pytest.mark.parametrize("token", ["z", "z0", "x1", "--z1", "z1**", "1"])
def test_entry_bad_tokens(token):
    with pytest.raises(ParseError):
        Entry.from_token(token)


def test_zero_has_no_sign():
    assert Entry(0, -1, True) == ZERO
    assert ZERO.negated() is ZERO


def test_matrix_params(eq3):
    assert eq3.params == (4, 3, 3)
    assert eq3.rate == Fraction(3, 4)
    assert eq3.cell(2, 1) == Entry(2, -1, True)
    with pytest.raises(ArgumentError):
        eq3.cell(5, 1)


def test_variable_ids_must_be_contiguous():
    with pytest.raises(ArgumentError):
        CODMatrix([[Entry(1), Entry(3)]], 2)
    with pytest.raises(ArgumentError):
        CODMatrix([[Entry(1), Entry(2)]], 3)


def test_take_rows_relabels(eq3):
    part = eq3.take_rows([3, 4])
    assert str(part) == "-z1* 0 z2*\n0 z1* -z3*"
    assert part.k == 3


# --- нулевые шаблоны и матрица Грама ---

def test_zero_pattern(eq3):
    assert str(zero_pattern(eq3, 1)) == "(1,1,1)"
    assert str(zero_pattern(eq3, 4)) == "(0,1,1)"
    assert zero_pattern(TextReader.parse_text("0 0 0"), 1).value == 0
    with pytest.raises(ArgumentError):
        zero_pattern(eq3, 5)


def test_gram_of_eq3(eq3):
    gram = symbolic_gram(eq3)
    for a in range(3):
        for b in range(3):
            assert gram[a][b] == (_diag_sum(3) if a == b else {})


def test_gram_single_cell():
    assert symbolic_gram(TextReader.parse_text("z1")) == [[{((1, False), (1, True)): 1}]]


def test_negated_cell_breaks_orthogonality():
    m = TextReader.parse_text(EQ3_TEXT.replace("z1 z2 z3", "-z1 z2 z3", 1))
    assert symbolic_gram(m)[0][1]
    verdict = is_cod(m)
    assert not verdict
    assert (verdict.witness.row, verdict.witness.col) == (1, 2)


def test_is_cod(eq3, diag_pair):
    assert is_cod(eq3)
    assert is_cod(diag_pair)
    assert is_cod(TextReader.parse_text("z1 z2\n-z2* z1*"))


def test_wrong_conjugation_has_witness():
    m = TextReader.parse_text(EQ3_TEXT.replace("0 z3* -z2*", "0 z3 -z2*"))
    verdict = is_cod(m)
    assert not verdict.ok
    assert (verdict.witness.row, verdict.witness.col) == (2, 3)
    assert dict(verdict.witness.residual)
    assert str(verdict.witness).startswith("ячейка (2, 3)")


def test_format_polynomial():
    assert format_polynomial({}) == "0"
    assert format_polynomial({((1, False), (1, True)): 1}) == "z1 z1*"
    assert format_polynomial({((1, True), (2, False)): -2}) == "-2 z1* z2"


# --- предикаты ---

def test_alamouti_blocks(eq3, diag_pair):
    assert is_alamouti(eq3, 1, 2, 1, 2)
    assert is_alamouti(eq3, 1, 4, 2, 3)
    assert is_alamouti(TextReader.parse_text("z1 z2\n-z2* z1*"), 1, 2, 1, 2)
    assert not is_alamouti(diag_pair, 1, 2, 1, 2)
    # одинаковое сопряжение в обеих строках не образует блок
    assert not is_alamouti(TextReader.parse_text("z1 z2\n-z2 z1"), 1, 2, 1, 2)


def test_alamouti_index_errors(eq3):
    with pytest.raises(ArgumentError):
        is_alamouti(eq3, 1, 1, 1, 2)
    with pytest.raises(ArgumentError):
        is_alamouti(eq3, 1, 5, 1, 2)
    with pytest.raises(ArgumentError):
        is_alamouti(eq3, 1, 2, 1, 4)


def test_first_type(eq3, diag_pair):
    assert is_first_type(eq3)
    verdict = is_first_type(diag_pair)
    assert not verdict
    assert verdict.witness == (1, 2, 1, 2, 1)
    assert is_first_type(gen_G(1))


def test_first_type_requires_cod():
    with pytest.raises(PreconditionError):
        is_first_type(TextReader.parse_text("z1 z1"))


def test_conjugation_separation(eq3):
    assert is_conjugation_separated(eq3)
    assert not is_conjugation_separated(gen_H(4))
    assert is_conjugation_separated(TextReader.parse_text("0 0 0"))


@pytest.mark.parametrize(
    "m",
    [
        gen_Gw(3, 2),
        gen_Gw(5, 2),
        gen_H(4),
        gen_Hm(4),
        gen_G(3),
        TextReader.parse_text("z1 0\n0 z1*"),
        TextReader.parse_text(EQ3_TEXT.replace("0 z3* -z2*", "0 z3 -z2*")),
        TextReader.parse_text("z1 z2\n-z2 z1"),
        TextReader.parse_text("z1 z1"),
    ],
)
def test_fast_check_agrees_with_gram(m):
    assert is_cod_fast(m) == is_cod(m).ok


# --- блочная форма B_j ---

def test_bj_form_of_eq3(eq3):
    form = extract_Bj(eq3, 1)
    assert (form.n1, form.n2) == (1, 2)
    assert form.row_order == (1, 2, 3)
    assert form.col_order == (1, 2, 3)
    assert form.Mj == ((Entry(2), Entry(3)),)
    assert not form.has_zero_in_Mj


def test_bj_form_of_alamouti():
    m = gen_Gw(2, 1)
    j = next(v for v, name in m.names.items() if name == F2Vec.from_bits([1, 0, 0]))
    form = extract_Bj(m, j)
    assert (form.n1, form.n2) == (1, 1)
    assert len(form.Mj) == 1 and not form.Mj[0][0].is_zero


def test_bj_form_exposes_zero(diag_pair):
    form = extract_Bj(diag_pair, 1)
    assert (form.n1, form.n2) == (1, 1)
    assert form.has_zero_in_Mj


def test_bj_form_errors(eq3):
    with pytest.raises(ArgumentError):
        extract_Bj(eq3, 4)
    with pytest.raises(PreconditionError):
        extract_Bj(TextReader.parse_text("z1 z1"), 1)


def test_bj_forms_of_first_type_designs_have_no_zero():
    for n in range(2, 6):
        for w in range(0, n + 1):
            m = gen_Gw(n, w)
            for j in range(1, m.k + 1):
                assert not extract_Bj(m, j).has_zero_in_Mj


# --- свойства COD первого типа ---

def test_each_variable_once_per_column():
    for m in _first_type_corpus():
        for occ in m.occurrences().values():
            columns = [c for _, c, _ in occ]
            assert len(columns) == len(set(columns))


def test_shared_variable_patterns():
    # одинаковое сопряжение: шаблоны отличаются ровно в двух столбцах;
    # разное: совпадают ровно в двух столбцах
    for m in _first_type_corpus():
        full = ones(m.n)
        for occ in m.occurrences().values():
            for pos, (r1, c1, e1) in enumerate(occ):
                for r2, c2, e2 in occ[pos + 1:]:
                    diff = zero_pattern(m, r1 + 1) ^ zero_pattern(m, r2 + 1)
                    expected = unit(m.n, c1 + 1) ^ unit(m.n, c2 + 1)
                    if e1.conj != e2.conj:
                        expected = expected ^ full
                    assert diff == expected


def test_pattern_transposition_closure():
    for m in _first_type_corpus():
        patterns = {zero_pattern(m, r) for r in range(1, m.p + 1)}
        full = ones(m.n)
        for alpha in patterns:
            for i in range(1, m.n + 1):
                for j in range(i + 1, m.n + 1):
                    if alpha.bit(i) != alpha.bit(j):
                        assert alpha ^ unit(m.n, i) ^ unit(m.n, j) in patterns
                    if alpha.bit(i) and alpha.bit(j):
                        assert alpha ^ unit(m.n, i) ^ unit(m.n, j) ^ full in patterns


def test_pattern_completeness():
    for m in _first_type_corpus():
        weights = {zero_pattern(m, r).weight() for r in range(1, m.p + 1)}
        patterns = {zero_pattern(m, r) for r in range(1, m.p + 1)}
        for weight in weights:
            w = weight - 1
            for required in (w + 1, m.n - w + 1):
                if 0 <= required <= m.n:
                    assert sum(1 for a in patterns if a.weight() == required) == comb(m.n, required)

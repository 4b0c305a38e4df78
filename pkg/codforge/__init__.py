"""
codforge: библиотека для построения, проверки и классификации
комплексных ортогональных дизайнов (COD) первого типа.
"""
# Модель и проверка
from .f2vec import F2Vec, enumerate_weight, ones, unit, weight_range, xor, zeros
from .matrix import ZERO, BjForm, CODMatrix, Entry
from .verify import (
    Verdict,
    extract_Bj,
    is_alamouti,
    is_cod,
    is_cod_fast,
    is_conjugation_separated,
    is_first_type,
    symbolic_gram,
    zero_pattern,
)

# Чтение и запись
from .abstract import MatrixReader
from .json_reader import JsonReader
from .text_reader import TextReader
from .formats import parse, read_matrix, serialize

# Конструкции
from .generators import (
    Contradiction,
    PadConstraint,
    Success,
    gen_G,
    gen_Gw,
    gen_H,
    gen_Hm,
    optimal,
    pad_column_attempt,
    phi,
    psi,
    theta,
)

# Структура и параметры
from .structure import (
    AtomicPart,
    CanonicalForm,
    ColPerm,
    ConjVar,
    NegCol,
    NegRow,
    NegVar,
    RenameVar,
    RowPerm,
    Signature,
    apply_equiv,
    canonicalize_atomic,
    catenate,
    classify_atomic,
    decompose_atomic,
    equivalent,
    realize,
    replay,
    scramble,
    signature,
)
from .params import (
    AtomicClass,
    ParamSolution,
    ParamTriple,
    atomic_params,
    count_inequivalent,
    feasibility_frame,
    feasible,
    max_rate,
    min_delay,
    tradeoff_table,
)

# Анализ
from .analyze_tradeoff import analyze, plot_tradeoff
from .errors import (
    ArgumentError,
    CanonicalizationError,
    ClassificationError,
    CodforgeError,
    ParseError,
    PreconditionError,
    ResourceError,
    StructuralError,
    UnsupportedInputError,
)


# Метаданные пакета
__version__ = "1.0.0"
__author__ = "codforge team"
__license__ = "MIT"

"""Additive cyclic codes on Z2^alpha x Z4^beta: construction, duality, analysis.

The package builds codes from generator tuples (b, ell, f, h), computes
type parameters and cardinalities from degree formulas, enumerates
codewords exactly, produces dual codes in closed form, and cross-checks
everything against brute-force oracles.  See the cli module (installed
as the ``z2z4cyclic`` command) for the command-line surface.
"""

from .analysis import (
    CheckResult,
    CodeReport,
    code_report,
    construct_mdss,
    construct_self_dual_family,
    is_mdss,
    is_self_dual,
    is_separable,
    iter_valid_specs,
    min_distance,
    report_dict,
    report_line,
    search_codes,
    verify_code,
)
from .code import (
    ENUM_CAP,
    CardinalityFamily,
    CodeType,
    Codeword,
    CyclicCodeSpec,
    cardinality,
    cardinality_family,
    circ_product,
    code_type,
    code_type_from_words,
    codeword_matrix,
    contains,
    cyclic_shift,
    enumerate_codewords,
    format_codeword,
    format_spec_text,
    gray_map,
    inner_product,
    orthogonal_all_shifts,
    parse_codeword,
    parse_spec_text,
    project_xy,
    spanning_set,
    star,
    subcode_order_two,
    validate_spec,
    words_equal,
)
from .dual import (
    AMBIENT_CAP,
    DualDegrees,
    DualResult,
    brute_force_dual,
    brute_force_dual_matrix,
    dual_degrees,
    dual_generators,
    dual_spec,
    hensel_divisibility_check,
)
from .errors import (
    AmbientMismatch,
    DivisorZero,
    EvenLengthUnsupported,
    GcdUndefined,
    InvalidParameter,
    InvalidSpec,
    NotADivisor,
    NotInvertible,
    NotMonic,
    ParseError,
    ReciprocalOfZero,
    TooLarge,
    TrivialCode,
    Z2Z4Error,
)
from .gf2poly import BinPoly, divisors_xn1, factor_xn1, theta
from .z4poly import QuatPoly, hensel_lift

__version__ = "0.1.0"

__all__ = [
    "AMBIENT_CAP",
    "AmbientMismatch",
    "BinPoly",
    "CardinalityFamily",
    "CheckResult",
    "CodeReport",
    "CodeType",
    "Codeword",
    "CyclicCodeSpec",
    "DivisorZero",
    "DualDegrees",
    "DualResult",
    "ENUM_CAP",
    "EvenLengthUnsupported",
    "GcdUndefined",
    "InvalidParameter",
    "InvalidSpec",
    "NotADivisor",
    "NotInvertible",
    "NotMonic",
    "ParseError",
    "QuatPoly",
    "ReciprocalOfZero",
    "TooLarge",
    "TrivialCode",
    "Z2Z4Error",
    "brute_force_dual",
    "brute_force_dual_matrix",
    "cardinality",
    "cardinality_family",
    "circ_product",
    "code_report",
    "code_type",
    "code_type_from_words",
    "codeword_matrix",
    "construct_mdss",
    "construct_self_dual_family",
    "contains",
    "cyclic_shift",
    "divisors_xn1",
    "dual_degrees",
    "dual_generators",
    "dual_spec",
    "enumerate_codewords",
    "factor_xn1",
    "format_codeword",
    "format_spec_text",
    "gray_map",
    "hensel_divisibility_check",
    "hensel_lift",
    "inner_product",
    "is_mdss",
    "is_self_dual",
    "is_separable",
    "iter_valid_specs",
    "min_distance",
    "orthogonal_all_shifts",
    "parse_codeword",
    "parse_spec_text",
    "project_xy",
    "report_dict",
    "report_line",
    "search_codes",
    "spanning_set",
    "star",
    "subcode_order_two",
    "theta",
    "validate_spec",
    "verify_code",
    "words_equal",
]

"""Structural analysis: distances, classifications, constructions, search.

The minimum distance is the Hamming distance of the Gray image
(equivalently, binary weight plus Lee weight), computed by exhaustive
enumeration.  Classification predicates (MDSS, self-dual, separable)
reduce to exact integer comparisons on the type parameters plus set
equalities on enumerated codes, so there is no floating point anywhere.

search_codes sweeps every valid generator tuple over small block
lengths: b runs over binary divisors of x^alpha - 1, the pair (f, h)
over monic Z4 divisor pairs of x^beta - 1 obtained as Hensel lifts of
binary divisor pairs, and ell over exactly the residues allowed by the
divisibility condition.  Tuples generating the same codeword set are
collapsed.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass

import numpy as np

from . import gf2poly as gf2
from . import z4poly as z4
from .code import (
    ENUM_CAP,
    _LEE,
    CodeType,
    CyclicCodeSpec,
    _deg,
    _row_word,
    _span_rows,
    cardinality,
    cardinality_family,
    code_type,
    code_type_from_words,
    codeword_matrix,
    circ_product,
    cyclic_shift,
    inner_product,
    validate_spec,
    words_equal,
)
from .dual import (
    AMBIENT_CAP,
    brute_force_dual_matrix,
    dual_degrees,
    dual_spec,
    hensel_divisibility_check,
)
from .errors import InvalidParameter, TooLarge, TrivialCode
from .gf2poly import BinPoly
from .z4poly import QuatPoly


@dataclass(frozen=True)
class CodeReport:
    """Summary of one code: type, metric, and classification flags."""

    type: CodeType
    min_distance: int | None
    is_mdss: bool
    is_self_dual: bool
    is_separable: bool
    is_cyclic_verified: bool


# -- distance and classification ------------------------------------------


def _gray_weights(mat: np.ndarray, alpha: int) -> np.ndarray:
    """Hamming weight of the Gray image of each row (binary + Lee weight)."""
    return mat[:, :alpha].sum(axis=1) + _LEE[mat[:, alpha:]].sum(axis=1)


def min_distance(spec: CyclicCodeSpec, cap: int = ENUM_CAP) -> int:
    """Minimum Gray-image Hamming weight over the nonzero codewords."""
    mat = codeword_matrix(spec, cap)
    if len(mat) < 2:
        raise TrivialCode("the trivial code has no minimum distance")
    weights = _gray_weights(mat, spec.alpha)
    return int(weights[weights > 0].min())


def _mdss_gap(spec: CyclicCodeSpec, d: int, t: CodeType) -> int:
    """Integer slack in the Singleton-type bound; zero means equality."""
    return (spec.alpha + 2 * spec.beta - t.gamma - 2 * t.delta) - (d - 1)


def is_mdss(spec: CyclicCodeSpec, cap: int = ENUM_CAP) -> bool:
    """Whether d - 1 equals alpha + 2*beta - gamma - 2*delta exactly."""
    try:
        d = min_distance(spec, cap)
    except TrivialCode:
        return False
    return _mdss_gap(spec, d, code_type(spec)) == 0


def is_self_dual(spec: CyclicCodeSpec, cap: int = ENUM_CAP) -> bool:
    """Set equality of the code with its dual (size fast-path first)."""
    t = code_type(spec)
    if 2 * (t.gamma + 2 * t.delta) != spec.alpha + 2 * spec.beta:
        return False
    return words_equal(codeword_matrix(spec, cap), codeword_matrix(dual_spec(spec), cap))


def is_separable(spec: CyclicCodeSpec) -> bool:
    """Whether the code splits as C_X x C_Y, read off as kappa2 = delta1 = 0."""
    t = code_type(spec)
    return t.kappa2 == 0 and t.delta1 == 0


def _cyclic_closed(mat: np.ndarray, alpha: int) -> bool:
    """Whether the canonical word matrix is closed under the block shift."""
    shifted = np.concatenate(
        [np.roll(mat[:, :alpha], -1, axis=1), np.roll(mat[:, alpha:], -1, axis=1)], axis=1
    )
    return bool(np.array_equal(np.unique(shifted, axis=0), mat))


def code_report(spec: CyclicCodeSpec, cap: int = ENUM_CAP) -> CodeReport:
    """Type, minimum distance, and all classification flags in one pass."""
    mat = codeword_matrix(spec, cap)
    t = code_type(spec)
    if len(mat) < 2:
        d = None
    else:
        weights = _gray_weights(mat, spec.alpha)
        d = int(weights[weights > 0].min())
    self_dual = False
    if 2 * (t.gamma + 2 * t.delta) == spec.alpha + 2 * spec.beta:
        self_dual = words_equal(mat, codeword_matrix(dual_spec(spec), cap))
    return CodeReport(
        type=t,
        min_distance=d,
        is_mdss=d is not None and _mdss_gap(spec, d, t) == 0,
        is_self_dual=self_dual,
        is_separable=t.kappa2 == 0 and t.delta1 == 0,
        is_cyclic_verified=_cyclic_closed(mat, spec.alpha),
    )


# -- named constructions ---------------------------------------------------


def construct_self_dual_family(alpha: int, beta: int) -> CyclicCodeSpec:
    """The self-dual code with b = x^(alpha/2) - 1, ell = 0, f = 1, h = x^beta - 1."""
    if not isinstance(alpha, int) or alpha < 2 or alpha % 2:
        raise InvalidParameter("alpha must be a positive even integer")
    return validate_spec(
        alpha, beta, gf2.xn1(alpha // 2), BinPoly.zero(), QuatPoly.one(), z4.xn1(beta)
    )


def construct_mdss(alpha: int, beta: int) -> CyclicCodeSpec:
    """The code with b = x - 1, ell = 1, f = h = 1, of type (a, b; a-1, b; a-1)."""
    return validate_spec(
        alpha, beta, BinPoly.parse("x+1"), BinPoly.one(), QuatPoly.one(), QuatPoly.one()
    )


# -- exhaustive small-parameter search -------------------------------------


def iter_valid_specs(alpha: int, beta: int):
    """Every valid generator tuple for the given block lengths, lazily.

    b runs over all binary divisors of x^alpha - 1; each irreducible
    factor of x^beta - 1 is routed to f, h, or g through its Hensel
    lift; ell runs over exactly the multiples of b/gcd(b, (x^beta-1)/f)
    below deg b, which is precisely the divisibility condition.
    """
    basics = [z4.hensel_lift(p, beta) for p in gf2.factor_xn1(beta)]
    xb1 = gf2.xn1(beta)
    for b in gf2.divisors_xn1(alpha):
        for assign in itertools.product((0, 1, 2), repeat=len(basics)):
            f = QuatPoly.one()
            h = QuatPoly.one()
            for lift, slot in zip(basics, assign):
                if slot == 0:
                    f = f * lift
                elif slot == 1:
                    h = h * lift
            cofactor = gf2.exact_div(xb1, f.reduce_mod2())
            base = gf2.exact_div(b, gf2.gcd(b, cofactor))
            room = _deg(b) - _deg(base)
            for bits in range(1 << room):
                t = BinPoly._make([(bits >> i) & 1 for i in range(room)])
                yield validate_spec(alpha, beta, b, base * t, f, h)


def _spec_sort_key(spec: CyclicCodeSpec):
    return (
        spec.alpha,
        spec.beta,
        _deg(spec.b),
        spec.b.coeffs,
        spec.ell.coeffs,
        spec.f.coeffs,
        spec.h.coeffs,
    )


_PREDICATES = ("self_dual", "mdss", "separable")


def search_codes(
    alpha_max: int,
    beta_set,
    predicate: str,
    cap: int = ENUM_CAP,
) -> list[tuple[CyclicCodeSpec, CodeReport]]:
    """All codes with alpha <= alpha_max, beta in beta_set matching the predicate.

    Distinct tuples generating equal codeword sets are collapsed to the
    earliest tuple in sort order, so the result is deterministic.
    """
    if predicate not in _PREDICATES:
        raise InvalidParameter(f"predicate must be one of {', '.join(_PREDICATES)}")
    if not isinstance(alpha_max, int) or alpha_max < 1:
        raise InvalidParameter("alpha_max must be a positive integer")
    results = []
    for alpha in range(1, alpha_max + 1):
        for beta in sorted(set(beta_set)):
            seen: set[bytes] = set()
            for spec in sorted(iter_valid_specs(alpha, beta), key=_spec_sort_key):
                key = codeword_matrix(spec, cap).tobytes()
                if key in seen:
                    continue
                seen.add(key)
                report = code_report(spec, cap)
                matched = {
                    "self_dual": report.is_self_dual,
                    "mdss": report.is_mdss,
                    "separable": report.is_separable,
                }[predicate]
                if matched:
                    results.append((spec, report))
    return results


# -- report serialization ---------------------------------------------------


def report_dict(spec: CyclicCodeSpec, report: CodeReport) -> dict:
    """JSON-ready view of a report; the line format carries the same data."""
    return {
        "spec": {
            "alpha": spec.alpha,
            "beta": spec.beta,
            "b": str(spec.b),
            "ell": str(spec.ell),
            "f": str(spec.f),
            "h": str(spec.h),
        },
        "type": str(report.type),
        "min_distance": report.min_distance,
        "is_mdss": report.is_mdss,
        "is_self_dual": report.is_self_dual,
        "is_separable": report.is_separable,
        "is_cyclic_verified": report.is_cyclic_verified,
    }


def report_line(spec: CyclicCodeSpec, report: CodeReport) -> str:
    """One-line record with the same fields as report_dict."""
    d = "-" if report.min_distance is None else report.min_distance
    flags = (
        f"min_distance={d}"
        f" is_mdss={'yes' if report.is_mdss else 'no'}"
        f" is_self_dual={'yes' if report.is_self_dual else 'no'}"
        f" is_separable={'yes' if report.is_separable else 'no'}"
        f" is_cyclic_verified={'yes' if report.is_cyclic_verified else 'no'}"
    )
    return (
        f"alpha={spec.alpha} beta={spec.beta} b={spec.b} ell={spec.ell}"
        f" f={spec.f} h={spec.h} type={report.type} {flags}"
    )


# -- invariant suite ---------------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one named invariant check."""

    name: str
    ok: bool
    detail: str


def _sample_rows(spec: CyclicCodeSpec, rng: random.Random, count: int) -> np.ndarray:
    """Uniform random codewords from the spanning-set decomposition."""
    rows, widths = _span_rows(spec)
    if not len(rows):
        return np.zeros((count, spec.alpha + spec.beta), dtype=np.int16)
    coeff = np.array(
        [[rng.randrange(1 << w) for w in widths] for _ in range(count)], dtype=np.int16
    )
    out = coeff @ rows
    out[:, : spec.alpha] %= 2
    out[:, spec.alpha :] %= 4
    return out


def verify_code(
    spec: CyclicCodeSpec,
    seed: int = 0,
    cap: int = ENUM_CAP,
    ambient_cap: int = AMBIENT_CAP,
) -> list[CheckResult]:
    """Run every invariant the construction promises, on one spec.

    Returns the named checks that actually ran; enumeration-bound checks
    are skipped (not reported) when a size exceeds the caps.
    """
    rng = random.Random(seed)
    out: list[CheckResult] = []

    def check(name: str, ok: bool, detail: str) -> None:
        out.append(CheckResult(name, bool(ok), detail))

    t = code_type(spec)
    fam = cardinality_family(t)
    g2h2 = gf2.exact_div(gf2.xn1(spec.beta), spec.f.reduce_mod2())
    check(
        "defining-conditions",
        (not gf2.xn1(spec.alpha) % spec.b)
        and (spec.f * spec.h * spec.g == z4.xn1(spec.beta))
        and (not (spec.ell * g2h2) % spec.b),
        "b | x^alpha-1, f*h*g = x^beta-1, b | ell*(x^beta-1)/f mod 2",
    )
    check(
        "hensel-divisibility",
        hensel_divisibility_check(spec),
        "Hensel lift of b/gcd(b, ell*g) divides h",
    )

    mat = codeword_matrix(spec, cap)
    check(
        "cardinality-formula",
        len(mat) == cardinality(spec) == fam.c,
        f"|C| = {len(mat)} = 2^{t.gamma} * 4^{t.delta}",
    )
    measured = code_type_from_words(spec.alpha, spec.beta, mat)
    check(
        "type-parameters",
        measured == t,
        f"measured {measured} vs formula {t}",
    )
    check("cyclic-closure", _cyclic_closed(mat, spec.alpha), "shifted word set equals word set")
    rows, _ = _span_rows(spec)
    check(
        "spanning-set-size",
        len(rows) == t.gamma + t.delta,
        f"{len(rows)} spanning rows for gamma + delta = {t.gamma + t.delta}",
    )
    n_x = len(np.unique(mat[:, : spec.alpha], axis=0))
    n_y = len(np.unique(mat[:, spec.alpha :], axis=0))
    check(
        "projection-sizes",
        n_x == fam.c_x and n_y == fam.c_y,
        f"|C_X| = {n_x}, |C_Y| = {n_y}",
    )
    separable_formula = t.kappa2 == 0 and t.delta1 == 0
    check(
        "separability-agreement",
        separable_formula == spec.ell.is_zero == (n_x * n_y == len(mat)),
        f"kappa2/delta1 test {separable_formula}, ell = 0 is {spec.ell.is_zero}, "
        f"|C_X|*|C_Y| = {n_x * n_y} vs |C| = {len(mat)}",
    )
    gray = np.concatenate(
        [mat[:, : spec.alpha], mat[:, spec.alpha :] >> 1, (mat[:, spec.alpha :] + 1) >> 1 & 1],
        axis=1,
    )
    check(
        "gray-injectivity",
        len(np.unique(gray, axis=0)) == len(mat),
        "Gray images are pairwise distinct",
    )

    dspec = dual_spec(spec)
    dd = dual_degrees(spec)
    td = code_type(dspec)
    check(
        "dual-type-formulas",
        (td.gamma, td.delta, td.kappa) == (dd.gamma_bar, dd.delta_bar, dd.kappa_bar),
        f"dual type {td} vs predicted ({dd.gamma_bar},{dd.delta_bar},{dd.kappa_bar})",
    )
    check(
        "cardinality-product",
        fam.c * fam.c_dual == 2 ** (spec.alpha + 2 * spec.beta),
        f"|C| * |C_dual| = {fam.c * fam.c_dual} = 2^{spec.alpha + 2 * spec.beta}",
    )
    dual_mat = codeword_matrix(dspec, cap) if fam.c_dual <= cap else None
    if dual_mat is not None:
        if 2 ** (spec.alpha + 2 * spec.beta) <= ambient_cap:
            brute = brute_force_dual_matrix(spec, ambient_cap)
            check(
                "dual-oracle",
                words_equal(dual_mat, brute),
                f"formula dual = brute-force dual: {len(brute)} codewords",
            )
        redual = codeword_matrix(dual_spec(dspec), cap)
        check(
            "duality-involution",
            words_equal(redual, mat),
            "dual of the dual reproduces the codeword set",
        )

    sample_c = _sample_rows(spec, rng, 64)
    sample_d = _sample_rows(dspec, rng, 64)
    ips = (
        2 * (sample_c[:, : spec.alpha] * sample_d[:, : spec.alpha]).sum(axis=1)
        + (sample_c[:, spec.alpha :] * sample_d[:, spec.alpha :]).sum(axis=1)
    ) % 4
    check(
        "orthogonality",
        not ips.any(),
        f"{len(sample_c)} sampled pairs from C x C_dual have zero inner product",
    )
    pairs = 8
    circ_ok = True
    shift_ok = True
    m = math.lcm(spec.alpha, spec.beta)
    for i in range(pairs):
        w1 = _row_word(sample_c[i], spec.alpha)
        w2 = _row_word(sample_d[i], spec.alpha)
        circ_zero = circ_product(w1, w2).is_zero
        shifts_zero = all(inner_product(w1, cyclic_shift(w2, k)) == 0 for k in range(m))
        circ_ok = circ_ok and circ_zero
        shift_ok = shift_ok and (circ_zero == shifts_zero)
    check("circ-orthogonality", circ_ok, f"{pairs} sampled pairs have zero circ product")
    check(
        "circ-shift-equivalence",
        shift_ok,
        "circ product vanishes exactly when all shifted inner products do",
    )
    return out

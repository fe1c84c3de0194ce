"""Dual codes in closed form, plus a brute-force dual oracle.

The dual of an additive cyclic code is again additive cyclic, and its
generator tuple (b_bar, ell_bar, f_bar, h_bar) can be written directly
in terms of the original tuple: reciprocals and gcds give b_bar and the
binary images of f_bar*h_bar and f_bar, Hensel lifting carries those
back to Z4, and ell_bar is assembled from modular inverses of
rho = ell/gcd(b, ell).  Separable codes (ell = 0) take a shortcut where
every dual factor is a normalized reciprocal.

brute_force_dual is the independent check: it scans the whole ambient
space for vectors orthogonal to the spanning set, which is what the
definition of the dual says and nothing more.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import gf2poly as gf2
from . import z4poly as z4
from .code import (
    Codeword,
    CyclicCodeSpec,
    _deg,
    _row_word,
    _span_rows,
    cardinality_family,
    code_type,
    validate_spec,
)
from .errors import TooLarge
from .gf2poly import BinPoly
from .z4poly import QuatPoly

AMBIENT_CAP = 2**24

_BLOCK = 1 << 16


@dataclass(frozen=True)
class DualDegrees:
    """Predicted degrees of the dual tuple and the dual type parameters."""

    deg_b_bar: int
    deg_f_bar: int
    deg_h_bar: int
    deg_g_bar: int
    gamma_bar: int
    delta_bar: int
    kappa_bar: int


@dataclass(frozen=True)
class DualResult:
    """Dual generator tuple; mu1/mu2/rho are None on the separable path."""

    b_bar: BinPoly
    ell_bar: BinPoly
    f_bar: QuatPoly
    h_bar: QuatPoly
    g_bar: QuatPoly
    mu1: BinPoly | None
    mu2: BinPoly | None
    rho: BinPoly | None


def dual_degrees(spec: CyclicCodeSpec) -> DualDegrees:
    """Degrees of (b_bar, f_bar, h_bar, g_bar) and the dual type, by formula."""
    gl = gf2.gcd(spec.b, spec.ell)
    glg = gf2.gcd(spec.b, spec.ell * spec.g.reduce_mod2())
    t = code_type(spec)
    return DualDegrees(
        deg_b_bar=spec.alpha - _deg(gl),
        deg_f_bar=_deg(spec.g) + _deg(gl) - _deg(glg),
        deg_h_bar=_deg(spec.h) - _deg(spec.b) - _deg(gl) + 2 * _deg(glg),
        deg_g_bar=_deg(spec.f) + _deg(spec.b) - _deg(glg),
        gamma_bar=spec.alpha + t.gamma - 2 * t.kappa,
        delta_bar=spec.beta - t.gamma - t.delta + t.kappa,
        kappa_bar=spec.alpha - t.kappa,
    )


def _mu(ell: BinPoly, rho_star: BinPoly, modulus: BinPoly) -> BinPoly:
    """x^deg(ell) * rho*^-1 reduced mod modulus; zero when the modulus is 1."""
    if modulus.degree < 1:
        return BinPoly.zero()
    return (BinPoly.x(_deg(ell)) * gf2.modinv(rho_star, modulus)) % modulus


def dual_generators(spec: CyclicCodeSpec) -> DualResult:
    """The dual code's generator tuple, computed in closed form.

    The result is validated end to end: the tuple must pass every
    generator-tuple condition and its degrees must match dual_degrees.
    A failure of either check is an internal error, never a data error.
    """
    a, beta = spec.alpha, spec.beta
    if spec.ell.is_zero:
        b_bar = gf2.exact_div(gf2.xn1(a), spec.b.reciprocal())
        ell_bar = BinPoly.zero()
        f_bar = z4.make_monic(spec.g.reciprocal())
        h_bar = z4.make_monic(spec.h.reciprocal())
        mu1 = mu2 = rho = None
    else:
        gl = gf2.gcd(spec.b, spec.ell)
        glg = gf2.gcd(spec.b, spec.ell * spec.g.reduce_mod2())
        b_star, gl_star, glg_star = spec.b.reciprocal(), gl.reciprocal(), glg.reciprocal()
        f2_star = spec.f.reduce_mod2().reciprocal()
        h2_star = spec.h.reduce_mod2().reciprocal()
        b_bar = gf2.exact_div(gf2.xn1(a), gl_star)
        fh_bar_bin = gf2.exact_div(gf2.xn1(beta) * glg_star, f2_star * b_star)
        f_bar_bin = gf2.exact_div(gf2.xn1(beta) * gl_star, f2_star * h2_star * glg_star)
        f_bar = z4.hensel_lift(f_bar_bin, beta)
        fh_bar = z4.hensel_lift(fh_bar_bin, beta)
        # rho is coprime to b/gcd(b, ell), so both inverses below exist.
        rho = gf2.exact_div(spec.ell, gl)
        rho_star = rho.reciprocal()
        cofactor1 = gf2.exact_div(b_star, glg_star)
        cofactor2 = gf2.exact_div(b_star, gl_star)
        mu1 = _mu(spec.ell, rho_star, cofactor1)
        mu2 = _mu(spec.ell, rho_star, cofactor2)
        m = math.lcm(a, beta)
        e1 = (m - _deg(spec.f)) % a
        e2 = (m - _deg(spec.f * spec.h)) % a
        ell_bar = gf2.exact_div(gf2.xn1(a), b_star) * (
            gf2.exact_div(glg_star, gl_star) * BinPoly.x(e1) * mu1
            + cofactor1 * BinPoly.x(e2) * mu2
        )
        ell_bar = ell_bar.fold(a) % b_bar
        h_bar, rem = divmod(fh_bar, f_bar)
        if rem:
            raise ArithmeticError(
                f"internal error: ({fh_bar}) is not divisible by ({f_bar}) over Z4"
            )
    g_bar = z4.exact_divide_xn1(f_bar * h_bar, beta)
    dual = validate_spec(a, beta, b_bar, ell_bar, f_bar, h_bar)
    dd = dual_degrees(spec)
    got = (_deg(dual.b), _deg(dual.f), _deg(dual.h), _deg(dual.g))
    want = (dd.deg_b_bar, dd.deg_f_bar, dd.deg_h_bar, dd.deg_g_bar)
    if got != want:
        raise ArithmeticError(f"internal error: dual degrees {got} differ from predicted {want}")
    return DualResult(b_bar, ell_bar, f_bar, h_bar, g_bar, mu1, mu2, rho)


def dual_spec(spec: CyclicCodeSpec) -> CyclicCodeSpec:
    """The dual code as a validated generator tuple."""
    d = dual_generators(spec)
    return validate_spec(spec.alpha, spec.beta, d.b_bar, d.ell_bar, d.f_bar, d.h_bar)


def brute_force_dual_matrix(spec: CyclicCodeSpec, cap: int = AMBIENT_CAP) -> np.ndarray:
    """All ambient vectors orthogonal to the code, as a canonical matrix.

    Scans the full ambient space in blocks and keeps vectors orthogonal
    to every spanning row (orthogonality to a spanning set extends to
    the whole code by additivity).  The survivor count is asserted
    against the dual cardinality formula.
    """
    a, beta = spec.alpha, spec.beta
    total = 2 ** (a + 2 * beta)
    if total > cap:
        raise TooLarge(f"ambient space has {total} vectors, above the cap of {cap}")
    rows, _ = _span_rows(spec)
    shifts = np.concatenate([np.arange(a), a + 2 * np.arange(beta)])
    masks = np.concatenate([np.ones(a, dtype=np.int64), 3 * np.ones(beta, dtype=np.int64)])
    weights = np.concatenate([2 * rows[:, :a], rows[:, a:]], axis=1).T
    keep = []
    for lo in range(0, total, _BLOCK):
        idx = np.arange(lo, min(lo + _BLOCK, total), dtype=np.int64)
        vecs = ((idx[:, None] >> shifts) & masks).astype(np.int16)
        ok = np.all((vecs @ weights) % 4 == 0, axis=1)
        keep.append(vecs[ok])
    words = np.unique(np.vstack(keep), axis=0)
    expected = cardinality_family(code_type(spec)).c_dual
    if len(words) != expected:
        raise ArithmeticError(
            f"internal error: ambient scan found {len(words)} dual words, formula says {expected}"
        )
    return words


def brute_force_dual(spec: CyclicCodeSpec, cap: int = AMBIENT_CAP) -> set[Codeword]:
    """The dual codeword set, by definition (every ambient vector is tested)."""
    return {_row_word(row, spec.alpha) for row in brute_force_dual_matrix(spec, cap)}


def hensel_divisibility_check(spec: CyclicCodeSpec) -> bool:
    """Whether the Hensel lift of b/gcd(b, ell*g) divides h over Z4.

    True for every valid generator tuple; exposed as a diagnostic so
    property tests can exercise the statement directly.
    """
    quotient = gf2.exact_div(spec.b, gf2.gcd(spec.b, spec.ell * spec.g.reduce_mod2()))
    try:
        lift = z4.hensel_lift(quotient, spec.beta)
    except Exception:
        return False
    return not (spec.h % lift)

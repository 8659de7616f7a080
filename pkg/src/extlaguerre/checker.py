"""Deciding Laguerre-Polya membership from the ``A_{2k}``.

For a polynomial ``f`` and an admissible generator, ``f`` is in the class
iff every ``A_{2k}`` is nonnegative on the real line, and only
``k <= nM/2`` can be nonzero, so the check is finite and exact.  Every
verdict is cross-checked against the Sturm real-rootedness oracle.

For non-polynomial ``f`` only a grid scan is available and it never
claims membership.
"""

from __future__ import annotations

import enum
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial
from typing import Callable, Sequence

import mpmath
from mpmath import mp

from .errors import (
    AllRootsReal,
    CertificationFailed,
    InternalInconsistency,
    NotAdmissible,
    ZeroPolynomial,
)
from .exactpoly import (
    RationalPoly,
    evaluate,
    find_negative_point,
    is_real_rooted,
    nonneg_on_reals,
)
from .groots import GeneratorSpec, polynomial_roots
from .jets import TaylorJet, make_jet
from .operators import ak_exact_poly, ak_series_numeric

__all__ = [
    "Status",
    "Witness",
    "LPVerdict",
    "RootDecomposition",
    "ComplexRootWitness",
    "ScanRow",
    "decide_lp",
    "witness_from_complex_root",
    "grid_scan",
    "scan_verdict",
]


class Status(enum.Enum):
    IN_LP = "InLP"
    NOT_IN_LP = "NotInLP"
    NUMERIC_ONLY = "NumericOnly"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Witness:
    k: int  # A_{2k} is negative at x_star
    x_star: Fraction
    value: Fraction


@dataclass
class LPVerdict:
    status: Status
    witness: Witness | None = None
    oracle_agreement: bool = True
    coefficients: list[RationalPoly] = field(default_factory=list, repr=False)
    scan_summary: dict | None = None


@dataclass(frozen=True)
class RootDecomposition:
    """``z0 = x0 + alpha_s * t0`` with real ``x0`` and nonzero real ``t0``."""

    z0: complex
    alpha_s: complex
    x0: object
    t0: object


@dataclass(frozen=True)
class ComplexRootWitness:
    decomposition: RootDecomposition
    k: int
    x_star: Fraction
    value: Fraction


def _require_admissible(f: RationalPoly, gen: GeneratorSpec) -> None:
    if f.is_zero():
        raise ZeroPolynomial("f must not be identically zero")
    if not gen.admissible:
        raise NotAdmissible(
            f"{gen.g} is not admissible (even, nonnegative, with a non-real root)"
        )


def decide_lp(f: RationalPoly, gen: GeneratorSpec) -> LPVerdict:
    """Exact membership decision for polynomial ``f``."""
    _require_admissible(f, gen)
    coeffs = ak_exact_poly(f, gen)
    for k, a in enumerate(coeffs):
        if k % 2 and not a.is_zero():
            raise InternalInconsistency(f"odd coefficient A_{k} = {a} is not zero")
    witness = None
    for k in range(len(coeffs) // 2 + 1):
        a = coeffs[2 * k] if 2 * k < len(coeffs) else RationalPoly()
        if not nonneg_on_reals(a):
            x = find_negative_point(a)
            witness = Witness(k, x, evaluate(a, x))
            break
    status = Status.IN_LP if witness is None else Status.NOT_IN_LP
    oracle = is_real_rooted(f)
    if oracle != (status is Status.IN_LP):
        raise InternalInconsistency(
            f"criterion says {status} but real-rootedness oracle says {oracle} for {f}"
        )
    return LPVerdict(status, witness, True, coeffs)


def _rational_near(x, digits: int) -> Fraction:
    q = Fraction(mpmath.nstr(x, digits + 5, min_fixed=-math.inf, max_fixed=math.inf))
    return q.limit_denominator(10**digits)


def witness_from_complex_root(
    f: RationalPoly,
    gen: GeneratorSpec,
    alpha_s=None,
    max_digits: int = 60,
) -> ComplexRootWitness:
    """Certified negative ``A_{2k}`` at the real point from a non-real root.

    A non-real root ``z0`` of ``f`` (the upper-half-plane one with smallest
    real part) is written as ``x0 + alpha_s t0``.  Since
    ``Phi(x0, t0) = sum A_{2k}(x0) t0^(2k) = 0`` and ``Phi(x0, .)`` is not
    identically zero, some ``A_{2k}(x0)`` is negative; it is certified by
    exact evaluation at a rational point close to ``x0``.

    ``alpha_s`` overrides the default choice (first non-real alpha in
    (Re, Im) order).
    """
    _require_admissible(f, gen)
    if is_real_rooted(f):
        raise AllRootsReal(f"{f} has only real roots")
    bits = gen.precision_bits
    coeffs = ak_exact_poly(f, gen)
    with mp.workprec(bits + 32):
        tol = mpmath.mpf(2) ** (-(bits // 2))
        # roots come in conjugate pairs; take the upper one
        upper = [r for r in polynomial_roots(f, bits) if r.imag > tol]
        z0 = min(upper, key=lambda r: (r.real, r.imag))
        if alpha_s is None:
            alpha_s = gen.nonreal_roots()[0]
        else:
            alpha_s = mpmath.mpc(alpha_s)
            if abs(alpha_s.imag) <= tol:
                raise ValueError("alpha_s must be non-real")
        t0 = z0.imag / alpha_s.imag
        x0 = z0.real - alpha_s.real * t0
        decomposition = RootDecomposition(complex(z0), complex(alpha_s), x0, t0)
        evens = coeffs[0::2]
        digits = 6
        while digits <= max_digits:
            x_star = _rational_near(x0, digits)
            for k, a in enumerate(evens):
                value = evaluate(a, x_star)
                if value < 0:
                    return ComplexRootWitness(decomposition, k, x_star, value)
            digits *= 2
    raise CertificationFailed(
        f"no certified negative A_2k near x0={mpmath.nstr(x0, 20)} at {max_digits} digits"
    )


@dataclass(frozen=True)
class ScanRow:
    x: float
    values: tuple  # A_0, A_2, ..., A_K at x
    minimum: float
    violation: bool


JetSource = Callable[[object, int], TaylorJet]


def _jet_source(jet_source) -> JetSource:
    if callable(jet_source):
        return jet_source
    name, params = jet_source
    return partial(make_jet, name, params)


def grid_scan(
    jet_source,
    gen: GeneratorSpec,
    xs: Sequence,
    K: int,
    tol: float = 1e-10,
    workers: int = 1,
) -> list[ScanRow]:
    """Series-route values of ``A_0, A_2, ..., A_K`` at each grid point.

    ``jet_source`` is ``(name, params)`` for a registered jet generator or a
    callable ``(x, order) -> TaylorJet``.  An entry below
    ``-tol * (1 + max |A_j(x)|)`` marks the row as a violation candidate.
    Rows come back in grid order regardless of ``workers``.  With
    ``workers > 1`` the points are spread over worker processes, so a
    callable source must be picklable (a module-level function).
    """
    task = partial(_scan_row, jet_source, gen, K, tol)
    if workers > 1:
        # mpmath keeps its precision in one process-wide context, so the
        # workers are processes rather than threads
        with ProcessPoolExecutor(workers) as pool:
            return list(pool.map(task, xs, chunksize=max(1, len(xs) // (4 * workers))))
    return [task(x) for x in xs]


def _scan_row(jet_source, gen: GeneratorSpec, K: int, tol: float, x) -> ScanRow:
    series = ak_series_numeric(_jet_source(jet_source)(x, K), gen, K)
    evens = tuple(series.values[0::2])
    scale = max(abs(v) for v in series.values)
    low = min(evens)
    return ScanRow(float(x), evens, low, low < -tol * (1 + scale))


def scan_verdict(rows: Sequence[ScanRow]) -> LPVerdict:
    """Summarize a scan.  Never claims membership."""
    bad = [r for r in rows if r.violation]
    summary = {
        "points": len(rows),
        "violations": len(bad),
        "min": min((r.minimum for r in rows), default=None),
        "violation_xs": [r.x for r in bad],
    }
    return LPVerdict(Status.NUMERIC_ONLY, None, True, [], summary)

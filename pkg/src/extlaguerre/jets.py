"""Taylor jets: a point plus the derivative values of ``f`` there.

Generators are registered by name so the command line can refer to them::

    >>> jet = make_jet("gauss-poly", {"b": 1, "coeffs": [1]}, x=0, order=2)
    >>> [float(d) for d in jet.derivs]
    [1.0, 0.0, -2.0]

``poly`` jets at rational points are exact (``Fraction`` values); the
transcendental ones are evaluated in mpmath at ``precision_bits``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import mpmath
from mpmath import mp

from .exactpoly import RationalPoly, as_rational

JET_PRECISION = 64

__all__ = ["TaylorJet", "JET_GENERATORS", "register_jet", "make_jet", "poly_jet"]


@dataclass(frozen=True)
class TaylorJet:
    x: object
    derivs: tuple

    def __post_init__(self):
        if not self.derivs:
            raise ValueError("a jet needs at least f(x)")

    @property
    def order(self) -> int:
        return len(self.derivs) - 1


JetFactory = Callable[[dict, object, int, int], TaylorJet]
JET_GENERATORS: dict[str, JetFactory] = {}


def register_jet(name: str):
    def deco(fn: JetFactory) -> JetFactory:
        JET_GENERATORS[name] = fn
        return fn

    return deco


def make_jet(name: str, params: dict | None, x, order: int,
             precision_bits: int = JET_PRECISION) -> TaylorJet:
    try:
        factory = JET_GENERATORS[name]
    except KeyError:
        raise ValueError(
            f"unknown jet generator {name!r}; known: {sorted(JET_GENERATORS)}"
        ) from None
    return factory(params or {}, x, order, precision_bits)


def poly_jet(f: RationalPoly, x, order: int) -> TaylorJet:
    """Exact jet of a rational polynomial at a rational point."""
    xq = as_rational(x)
    taylor = f.taylor_coeffs(xq)
    derivs = [
        (taylor[m] if m < len(taylor) else Fraction(0)) * math.factorial(m)
        for m in range(order + 1)
    ]
    return TaylorJet(xq, tuple(derivs))


def _coeffs_param(params: dict, default=(1,)) -> RationalPoly:
    return RationalPoly([as_rational(c) for c in params.get("coeffs", default)])


@register_jet("poly")
def _poly(params, x, order, precision_bits):
    return poly_jet(_coeffs_param(params), x, order)


@register_jet("gauss-poly")
def _gauss_poly(params, x, order, precision_bits):
    """``exp(-b z^2) * f1(z)`` with ``b >= 0``."""
    b = as_rational(params.get("b", 1))
    if b < 0:
        raise ValueError("gauss-poly needs b >= 0")
    f1 = _coeffs_param(params)
    with mp.workprec(precision_bits):
        xm = mpmath.mpf(as_rational(x).numerator) / as_rational(x).denominator
        bm = mpmath.mpf(b.numerator) / b.denominator
        # h = exp(-b z^2):  h^(k+1) = -2b (z h^(k) + k h^(k-1))
        h = [mpmath.exp(-bm * xm * xm)]
        if order >= 1:
            h.append(-2 * bm * xm * h[0])
        for k in range(1, order):
            h.append(-2 * bm * (xm * h[k] + k * h[k - 1]))
        taylor = f1.taylor_coeffs(as_rational(x))
        f1d = [
            mpmath.mpf(taylor[m].numerator) / taylor[m].denominator * math.factorial(m)
            if m < len(taylor) else mpmath.mpf(0)
            for m in range(order + 1)
        ]
        derivs = [
            mpmath.fsum(math.comb(n, k) * h[k] * f1d[n - k] for k in range(n + 1))
            for n in range(order + 1)
        ]
    return TaylorJet(x, tuple(derivs))


def _trig(shift: int):
    def factory(params, x, order, precision_bits):
        a = as_rational(params.get("a", 1))
        with mp.workprec(precision_bits):
            xq = as_rational(x)
            arg = mpmath.mpf(a.numerator) / a.denominator * (
                mpmath.mpf(xq.numerator) / xq.denominator
            )
            am = mpmath.mpf(a.numerator) / a.denominator
            c, s = mpmath.cos(arg), mpmath.sin(arg)
            # cycle of cos: cos, -sin, -cos, sin
            cycle = [c, -s, -c, s]
            derivs = tuple(am**n * cycle[(n + shift) % 4] for n in range(order + 1))
        return TaylorJet(x, derivs)

    return factory


register_jet("cos")(_trig(0))
register_jet("sin")(_trig(3))

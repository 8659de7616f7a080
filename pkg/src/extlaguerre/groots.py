"""Generator polynomials: admissibility checks and numeric roots.

A generator ``g(z) = sum c_l z^l = prod_j (z + alpha_j)`` is admissible
when it is even, has nonnegative coefficients and at least one non-real
root.  The alphas are the *negated* roots of ``g``; they are found by
Aberth iteration in mpmath at a configurable working precision.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath
from mpmath import mp

from .errors import (
    AllRootsReal,
    GeneratorError,
    NegativeCoefficient,
    NoConvergence,
    NonPositiveLeading,
    OddCoefficientPresent,
)
from .exactpoly import RationalPoly, real_root_count, square_free_decomposition

DEFAULT_PRECISION = 128

__all__ = [
    "DEFAULT_PRECISION",
    "GeneratorSpec",
    "validate_g",
    "find_roots",
    "polynomial_roots",
    "preset",
    "PRESET_NAMES",
]


@dataclass(frozen=True)
class GeneratorSpec:
    """A validated, monic generator together with its alphas.

    ``admissible`` means the even/nonnegative/non-real-root hypotheses all
    hold.  ``relaxed`` marks generators accepted without the evenness test;
    these carry no decision guarantee.
    """

    g: RationalPoly
    roots: tuple
    admissible: bool
    relaxed: bool = False
    precision_bits: int = DEFAULT_PRECISION

    @property
    def M(self) -> int:
        return self.g.degree

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self.g.coeffs

    @property
    def is_even(self) -> bool:
        return all(c == 0 for c in self.g.coeffs[1::2])

    def nonreal_roots(self) -> list:
        """Non-real alphas sorted by (Re, Im)."""
        tol = mpmath.mpf(2) ** (-(self.precision_bits // 2))
        out = [a for a in self.roots if abs(a.imag) > tol]
        return sorted(out, key=lambda a: (a.real, a.imag))


def validate_g(
    g: RationalPoly, relaxed: bool = False, precision_bits: int = DEFAULT_PRECISION
) -> GeneratorSpec:
    """Check the generator hypotheses and compute its alphas.

    ``g`` is normalized to monic (scaling by a positive constant does not
    move the roots).  With ``relaxed=True`` odd coefficients are allowed.
    """
    if g.degree < 1:
        raise GeneratorError("generator must have degree >= 1")
    if g.lc <= 0:
        raise NonPositiveLeading(f"leading coefficient of {g} must be positive")
    g = g.monic()
    even = all(c == 0 for c in g.coeffs[1::2])
    if not even and not relaxed:
        raise OddCoefficientPresent(f"{g} is not even")
    if any(c < 0 for c in g.coeffs):
        raise NegativeCoefficient(f"{g} has a negative coefficient")
    real_with_mult = sum(
        mult * real_root_count(factor)
        for factor, mult in square_free_decomposition(g)
    )
    if real_with_mult >= g.degree:
        raise AllRootsReal(f"every root of {g} is real")
    roots = find_roots(g, precision_bits)
    return GeneratorSpec(
        g=g,
        roots=tuple(roots),
        admissible=even,
        relaxed=relaxed,
        precision_bits=precision_bits,
    )


def _to_mpf(q: Fraction):
    return mpmath.mpf(q.numerator) / q.denominator


def _horner2(a, z):
    p = a[-1]
    dp = mpmath.mpc(0)
    for c in reversed(a[:-1]):
        dp = dp * z + p
        p = p * z + c
    return p, dp


def _aberth(coeffs, precision_bits: int, max_iter: int):
    """Roots of the polynomial with ascending rational ``coeffs``."""
    n = len(coeffs) - 1
    lc = coeffs[-1]
    a = [_to_mpf(c / lc) for c in coeffs]
    if n == 1:
        return [mpmath.mpc(-a[0])]
    norm = sum(abs(c) for c in a)
    tol = mpmath.mpf(2) ** (-precision_bits) * (1 + norm)
    center = -a[n - 1] / n
    radius = 2 * max(
        (abs(a[i]) ** (mpmath.mpf(1) / (n - i)) for i in range(n)), default=1
    )
    if radius == 0:
        radius = mpmath.mpf(1)
    z = [
        center + radius * mpmath.expj(2 * mpmath.pi * k / n + mpmath.mpf("0.4"))
        for k in range(n)
    ]
    done = [False] * n
    for _ in range(max_iter):
        for k in range(n):
            if done[k]:
                continue
            p, dp = _horner2(a, z[k])
            if abs(p) <= tol:
                done[k] = True
                continue
            if dp == 0:
                z[k] += radius * mpmath.mpf(2) ** (-precision_bits // 4)
                continue
            ratio = p / dp
            s = mpmath.fsum(1 / (z[k] - z[j]) for j in range(n) if j != k and z[k] != z[j])
            z[k] -= ratio / (1 - ratio * s)
        if all(done):
            return z
    raise NoConvergence(
        f"Aberth iteration did not converge in {max_iter} steps; raise precision"
    )


def _symmetrize(roots, precision_bits: int):
    """Pair conjugates exactly; snap near-real roots onto the real axis."""
    tol = mpmath.mpf(2) ** (-(precision_bits // 2))
    upper, lower, real = [], [], []
    for r in roots:
        scale = 1 + abs(r)
        if r.imag > tol * scale:
            upper.append(r)
        elif r.imag < -tol * scale:
            lower.append(r)
        else:
            real.append(mpmath.mpc(r.real, 0))
    if len(upper) != len(lower):
        raise NoConvergence("computed roots are not closed under conjugation")
    out = list(real)
    for u in upper:
        j = min(range(len(lower)), key=lambda i: abs(lower[i] - mpmath.conj(u)))
        l = lower.pop(j)
        mid = (u + mpmath.conj(l)) / 2
        out.append(mid)
        out.append(mpmath.conj(mid))
    return sorted(out, key=lambda r: (r.real, r.imag))


def polynomial_roots(
    p: RationalPoly, precision_bits: int = DEFAULT_PRECISION, max_iter: int = 2000
) -> list:
    """All complex roots of ``p`` (with multiplicity), conjugate-closed.

    Iteration runs on the exact square-free factors, so every root seen by
    the solver is simple; repeated roots come back repeated.
    """
    if p.degree < 1:
        return []
    out = []
    with mp.workprec(precision_bits + 32):
        for factor, mult in square_free_decomposition(p):
            roots = _aberth(list(factor.coeffs), precision_bits, max_iter)
            out.extend(_symmetrize(roots, precision_bits) * mult)
        return sorted(out, key=lambda r: (r.real, r.imag))


def find_roots(
    g: RationalPoly, precision_bits: int = DEFAULT_PRECISION, max_iter: int = 2000
) -> list:
    """The alphas of ``g = prod (z + alpha_j)``, i.e. the negated roots."""
    roots = polynomial_roots(g, precision_bits, max_iter)
    with mp.workprec(precision_bits + 32):
        return sorted((-r for r in roots), key=lambda r: (r.real, r.imag))


PRESET_NAMES = ("classic", "quartic4", "cyclo:m", "example3")


def preset(name: str) -> tuple[RationalPoly, bool]:
    """Resolve a preset name to ``(g, relaxed)``."""
    name = name.strip().lower()
    if name == "classic":
        return RationalPoly([1, 0, 1]), False
    if name == "quartic4":
        return RationalPoly([4, 0, 0, 0, 1]), False
    if name == "example3":
        return RationalPoly([1, 1, 1]), True
    if name.startswith("cyclo:"):
        m = int(name.split(":", 1)[1])
        if m < 1:
            raise GeneratorError("cyclo:m needs m >= 1")
        return RationalPoly([1] + [0] * (2 * m - 1) + [1]), False
    raise GeneratorError(f"unknown generator preset {name!r}")

"""The coefficient functions ``A_k`` of ``Phi(z, t) = prod_j f(z + alpha_j t)``.

Three independent routes compute them:

* series product (numeric): multiply the Taylor series of each
  ``f(x + alpha_j t)`` in ``t`` and read off coefficients;
* partition expansion (numeric): sum over partitions of ``k`` weighted by
  monomial symmetric values of the alphas;
* exact resultant: ``Phi(z, t) = Res_s(g(s), f(z - s t))`` over Q, giving
  every ``A_k`` as an exact polynomial.

Also here: the classical ``L_n`` operator and the symbolic form of ``A_k``
in terms of formal derivatives of ``f``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Sequence

import mpmath
from mpmath import mp

from .errors import JetTooShort, NotAdmissible, ZeroPolynomial
from .exactpoly import BivarPoly, RationalPoly, as_rational, resultant_in_s
from .groots import GeneratorSpec, validate_g
from .jets import TaylorJet
from .symfunc import elementary_sym_eval, monomial_sym_exact, partitions

__all__ = [
    "CoeffSeries",
    "SymTerm",
    "SymbolicAk",
    "ak_series_numeric",
    "ak_partition_numeric",
    "phi_exact",
    "ak_exact_poly",
    "ln_direct",
    "ln_exact",
    "emit_symbolic",
    "example2_identity",
]


@dataclass
class CoeffSeries:
    """``A_0(x) .. A_K(x)`` from one route.

    ``imag_residue`` holds ``|Im A_k|`` left over from complex arithmetic
    (series route only).
    """

    values: list
    origin: str
    imag_residue: list | None = None

    def __len__(self):
        return len(self.values)

    def __getitem__(self, k):
        return self.values[k]


def _to_mpf(v):
    if isinstance(v, Fraction):
        return mpmath.mpf(v.numerator) / v.denominator
    return mpmath.mpf(v)


def _check_jet(jet: TaylorJet, K: int) -> None:
    if jet.order < K:
        raise JetTooShort(f"need derivatives up to order {K}, jet has {jet.order}")


def ak_series_numeric(jet: TaylorJet, gen: GeneratorSpec, K: int) -> CoeffSeries:
    """``A_0..A_K`` at ``jet.x`` by multiplying truncated series in ``t``."""
    _check_jet(jet, K)
    with mp.workprec(gen.precision_bits):
        taylor = [
            _to_mpf(jet.derivs[m]) / math.factorial(m) for m in range(K + 1)
        ]
        prod = [mpmath.mpc(1)] + [mpmath.mpc(0)] * K
        for alpha in gen.roots:
            series = []
            apow = mpmath.mpc(1)
            for m in range(K + 1):
                series.append(taylor[m] * apow)
                apow *= alpha
            nxt = [mpmath.mpc(0)] * (K + 1)
            for i, pi in enumerate(prod):
                if pi == 0:
                    continue
                for j in range(K + 1 - i):
                    nxt[i + j] += pi * series[j]
            prod = nxt
        values = [float(c.real) for c in prod]
        residue = [float(abs(c.imag)) for c in prod]
    return CoeffSeries(values, "R1", residue)


class SymTerm(NamedTuple):
    coefficient: Fraction
    orders: tuple  # derivative orders lambda_1 >= ... >= lambda_r
    f_power: int  # M - r


def _deriv_text(order: int) -> str:
    if order <= 3:
        return "f" + "'" * order
    return f"f^({order})"


def _deriv_latex(order: int) -> str:
    if order == 0:
        return "f"
    if order <= 3:
        return "f" + "'" * order
    return f"f^{{({order})}}"


def _grouped(orders) -> list[tuple[int, int]]:
    out: list[tuple[int, int]] = []
    for o in orders:
        if out and out[-1][0] == o:
            out[-1] = (o, out[-1][1] + 1)
        else:
            out.append((o, 1))
    return out


@dataclass
class SymbolicAk:
    """``A_k`` as a combination of products of formal derivatives of ``f``.

    Each term is ``coefficient * f**f_power * prod f^(orders[j])`` with
    ``coefficient = m_lambda(alpha) / (lambda_1! ... lambda_r!)``.
    """

    k: int
    M: int
    terms: list[SymTerm] = field(default_factory=list)

    def as_dict(self) -> dict[tuple, Fraction]:
        return {(t.orders, t.f_power): t.coefficient for t in self.terms}

    def scaled(self, c) -> "SymbolicAk":
        c = as_rational(c)
        return SymbolicAk(
            self.k, self.M, [t._replace(coefficient=t.coefficient * c) for t in self.terms]
        )

    def _monomial_factors(self, term: SymTerm, deriv, power) -> list[str]:
        factors = [power("f", term.f_power)] if term.f_power else []
        factors += [power(deriv(o), mult) for o, mult in _grouped(term.orders)]
        return factors

    def to_text(self) -> str:
        if not self.terms:
            return "0"

        def power(base, n):
            return base if n == 1 else f"{base}^{n}"

        out = ""
        for term in self.terms:
            c = term.coefficient
            mag = abs(c)
            factors = self._monomial_factors(term, _deriv_text, power)
            body = "*".join(factors) if factors else "1"
            if mag != 1 or not factors:
                coef = str(mag.numerator) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
                body = coef + ("*" + body if factors else "")
            if not out:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out

    def to_latex(self) -> str:
        if not self.terms:
            return "0"

        def power(base, n):
            if n == 1:
                return base
            if base == "f":
                return f"f^{{{n}}}"
            return f"({base})^{{{n}}}"

        out = ""
        for term in self.terms:
            c = term.coefficient
            mag = abs(c)
            factors = self._monomial_factors(term, _deriv_latex, power)
            body = " ".join(factors)
            if mag != 1 or not factors:
                if mag.denominator == 1:
                    coef = str(mag.numerator)
                else:
                    coef = rf"\frac{{{mag.numerator}}}{{{mag.denominator}}}"
                body = coef + (" " + body if factors else "")
            if not out:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out

    def instantiate(self, f: RationalPoly) -> RationalPoly:
        """Substitute a concrete polynomial for ``f``."""
        derivs = {}
        acc = RationalPoly()
        for term in self.terms:
            prod = f ** term.f_power
            for o in term.orders:
                if o not in derivs:
                    derivs[o] = f.derivative(o)
                prod = prod * derivs[o]
            acc = acc + prod * term.coefficient
        return acc

    def evaluate(self, derivs: Sequence):
        """Value for the given derivative values ``[f, f', f'', ...]``."""
        total = 0
        for term in self.terms:
            v = term.coefficient * derivs[0] ** term.f_power
            for o in term.orders:
                v = v * derivs[o]
            total = total + v
        return total


def emit_symbolic(gen: GeneratorSpec, k: int) -> SymbolicAk:
    """Closed form of ``A_k`` for the generator ``gen``, zero terms dropped."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    M = gen.M
    terms = []
    for lam in partitions(k, M):
        m = monomial_sym_exact(lam, gen.g)
        if m == 0:
            continue
        coef = m / math.prod(math.factorial(part) for part in lam)
        terms.append(SymTerm(coef, tuple(lam), M - len(lam)))
    return SymbolicAk(k, M, terms)


def ak_partition_numeric(jet: TaylorJet, gen: GeneratorSpec, K: int) -> CoeffSeries:
    """``A_0..A_K`` at ``jet.x`` from the partition expansion."""
    _check_jet(jet, K)
    with mp.workprec(gen.precision_bits):
        d = [_to_mpf(v) for v in jet.derivs[: K + 1]]
        values = []
        for k in range(K + 1):
            sym = emit_symbolic(gen, k)
            total = mpmath.mpf(0)
            for term in sym.terms:
                v = _to_mpf(term.coefficient) * d[0] ** term.f_power
                for o in term.orders:
                    v *= d[o]
                total += v
            values.append(float(total))
    return CoeffSeries(values, "R2")


def phi_exact(f: RationalPoly, gen: GeneratorSpec) -> BivarPoly:
    """``Phi(z, t)`` as ``Res_s(g(s), f(z - s t))``, exactly."""
    if f.is_zero():
        raise ZeroPolynomial("f must not be identically zero")
    b = []
    for m in range(f.degree + 1):
        # s^m coefficient of f(z - s t): (-t)^m f^(m)(z) / m!
        dm = f.derivative(m) / math.factorial(m)
        b.append(BivarPoly.from_z(dm, t_power=m, scale=(-1) ** m))
    a = [BivarPoly.constant(c) for c in gen.g.coeffs]
    return resultant_in_s(a, b)


def ak_exact_poly(f: RationalPoly, gen: GeneratorSpec) -> list[RationalPoly]:
    """``[A_0(z), ..., A_{nM}(z)]`` as exact polynomials.

    Requires an admissible generator, or a relaxed one (then odd entries
    need not vanish).
    """
    if f.is_zero():
        raise ZeroPolynomial("f must not be identically zero")
    if not (gen.admissible or gen.relaxed):
        raise NotAdmissible(f"{gen.g} is not an admissible generator")
    phi = phi_exact(f, gen)
    top = f.degree * gen.M
    return [phi.coeff_t(k) for k in range(top + 1)]


def ln_direct(jet: TaylorJet, n: int):
    """``L_n[f](x)`` from a jet; exact when the jet holds Fractions."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    _check_jet(jet, 2 * n)
    d = jet.derivs
    total = 0
    for k in range(2 * n + 1):
        sign = -1 if (k + n) % 2 else 1
        total = total + sign * math.comb(2 * n, k) * d[k] * d[2 * n - k]
    if all(isinstance(v, (int, Fraction)) for v in d[: 2 * n + 1]):
        return Fraction(total) / math.factorial(2 * n)
    return total / math.factorial(2 * n)


def ln_exact(f: RationalPoly, n: int) -> RationalPoly:
    """``L_n[f](z)`` as an exact polynomial."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if f.is_zero():
        raise ZeroPolynomial("f must not be identically zero")
    derivs = [f.derivative(k) for k in range(2 * n + 1)]
    acc = RationalPoly()
    for k in range(2 * n + 1):
        sign = -1 if (k + n) % 2 else 1
        acc = acc + derivs[k] * derivs[2 * n - k] * (sign * math.comb(2 * n, k))
    return acc / math.factorial(2 * n)


def example2_identity(f_roots: Sequence, m: int, k: int) -> tuple[RationalPoly, RationalPoly]:
    """Both sides of the ``g = z^(2m) + 1`` elementary-symmetric identity.

    ``f = prod (z + r_i)``.  Returns ``(A_{2mk}, f^(2m) e_k((z + r_i)^(-2m)))``
    with the right side cleared of denominators, which is
    ``e_{n-k}((z + r_1)^(2m), ..., (z + r_n)^(2m))``.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    rs = [as_rational(r) for r in f_roots]
    n = len(rs)
    factors = [RationalPoly([r, 1]) for r in rs]
    f = RationalPoly([1])
    for p in factors:
        f = f * p
    gen = validate_g(RationalPoly([1] + [0] * (2 * m - 1) + [1]))
    A = ak_exact_poly(f, gen)
    idx = 2 * m * k
    lhs = A[idx] if idx < len(A) else RationalPoly()
    if k > n:
        return lhs, RationalPoly()
    rhs = elementary_sym_eval(n - k, [p ** (2 * m) for p in factors])
    return lhs, RationalPoly([rhs]) if not isinstance(rhs, RationalPoly) else rhs

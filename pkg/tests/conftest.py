"""Shared fixtures and hypothesis strategies.

sympy serves only as an independent oracle here; the package itself
never imports it.
"""

from fractions import Fraction
from functools import lru_cache

import pytest
import sympy
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from extlaguerre import RationalPoly, generator

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

Z = sympy.Symbol("z")


@lru_cache(maxsize=None)
def gen(name: str):
    return generator(name)


@pytest.fixture
def classic():
    return gen("classic")


@pytest.fixture
def quartic4():
    return gen("quartic4")


@pytest.fixture
def cyclo2():
    return gen("cyclo:2")


def small_rationals(max_num: int = 9, max_den: int = 4):
    return st.builds(
        Fraction,
        st.integers(-max_num, max_num),
        st.integers(1, max_den),
    )


def rational_polys(max_degree: int = 6, nonzero: bool = True):
    coeffs = st.lists(small_rationals(), min_size=1, max_size=max_degree + 1)
    polys = coeffs.map(RationalPoly)
    return polys.filter(lambda p: not p.is_zero()) if nonzero else polys


def planted_real(max_degree: int = 8):
    """Monic polynomial with planted rational roots, plus the roots."""
    roots = st.lists(small_rationals(6, 3), min_size=1, max_size=max_degree)
    return roots.map(lambda rs: (RationalPoly.from_roots(rs), rs))


def planted_complex(max_degree: int = 8):
    """Polynomial with at least one planted non-real conjugate pair."""

    @st.composite
    def build(draw):
        a = draw(small_rationals(6, 3))
        b = draw(small_rationals(6, 3).filter(lambda q: q != 0))
        quad = RationalPoly([a * a + b * b, -2 * a, 1])  # (z - a)^2 + b^2
        rest = draw(st.lists(small_rationals(6, 3), max_size=max_degree - 2))
        scale = draw(st.sampled_from([1, 2, Fraction(1, 3), -1]))
        return quad * RationalPoly.from_roots(rest) * scale

    return build()


def to_sympy(p: RationalPoly):
    return sum(sympy.Rational(c.numerator, c.denominator) * Z**i for i, c in enumerate(p.coeffs))


def from_sympy(expr) -> RationalPoly:
    poly = sympy.Poly(sympy.expand(expr), Z)
    if poly.is_zero:
        return RationalPoly()
    out = [Fraction(0)] * (poly.degree() + 1)
    for (i,), c in poly.terms():
        out[i] = Fraction(int(c.p), int(c.q))
    return RationalPoly(out)


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        ok, detail = results[n]
        terminalreporter.write_line(f"[criterion {n}] {'PASS' if ok else 'FAIL'}: {detail}")

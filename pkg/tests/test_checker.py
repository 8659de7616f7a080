import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import gen, planted_complex, planted_real, rational_polys
from extlaguerre.checker import (
    Status,
    decide_lp,
    grid_scan,
    scan_verdict,
    witness_from_complex_root,
)
from extlaguerre.errors import AllRootsReal, JetTooShort, NotAdmissible, ZeroPolynomial
from extlaguerre.exactpoly import RationalPoly, evaluate, is_real_rooted
from extlaguerre.jets import TaylorJet, make_jet
from extlaguerre.operators import ak_exact_poly

P = RationalPoly.parse
DECISION_GENS = ["classic", "quartic4", "cyclo:2"]


class TestDecide:
    def test_in_lp(self, classic):
        v = decide_lp(P("z^2-1"), classic)
        assert v.status is Status.IN_LP and v.witness is None and v.oracle_agreement
        assert v.coefficients[0::2] == [P("(z^2-1)^2"), P("2z^2+2"), RationalPoly([1])]

    def test_not_in_lp(self, classic):
        v = decide_lp(P("z^2+1"), classic)
        assert v.status is Status.NOT_IN_LP
        assert (v.witness.k, v.witness.x_star, v.witness.value) == (1, 0, -2)

    def test_cubic_quartic4(self, quartic4):
        assert decide_lp(P("z(z-1)(z+1)"), quartic4).status is Status.IN_LP

    def test_errors(self, classic):
        with pytest.raises(ZeroPolynomial):
            decide_lp(RationalPoly(), classic)
        with pytest.raises(NotAdmissible):
            decide_lp(P("z"), gen("example3"))

    @given(st.one_of(planted_real(8).map(lambda c: c[0]), planted_complex(8), rational_polys(6)),
           st.sampled_from(DECISION_GENS))
    def test_matches_sturm_ground_truth(self, f, g):
        v = decide_lp(f, gen(g))
        assert (v.status is Status.IN_LP) == is_real_rooted(f)
        if v.witness is not None:
            a = v.coefficients[2 * v.witness.k]
            assert evaluate(a, v.witness.x_star) == v.witness.value < 0


class TestComplexRootWitness:
    def test_classic(self, classic):
        w = witness_from_complex_root(P("z^2+1"), classic)
        d = w.decomposition
        assert abs(d.z0 - 1j) < 1e-30
        assert abs(float(d.x0)) < 1e-30 and abs(abs(float(d.t0)) - 1) < 1e-30
        assert (w.k, w.x_star, w.value) == (1, 0, -2)

    def test_quartic4_with_alpha_override(self, quartic4):
        w = witness_from_complex_root(P("z^2+1"), quartic4, alpha_s=1 + 1j)
        d = w.decomposition
        assert float(d.t0) == pytest.approx(1) and float(d.x0) == pytest.approx(-1)
        # A_4 = 8z^4 - 48z^2 + 8, so A_4(-1) = -32
        assert (w.k, w.x_star, w.value) == (2, -1, -32)

    def test_quartic4_default_alpha(self, quartic4):
        # default alpha_s is -1-i; t0 flips sign, x0 is unchanged
        w = witness_from_complex_root(P("z^2+1"), quartic4)
        assert complex(w.decomposition.alpha_s) == pytest.approx(-1 - 1j)
        assert float(w.decomposition.x0) == pytest.approx(-1)
        assert float(w.decomposition.t0) == pytest.approx(-1)

    def test_cubic(self, classic):
        f = P("(z^2+4)(z-1)")
        w = witness_from_complex_root(f, classic)
        d = w.decomposition
        assert abs(d.z0 - 2j) < 1e-30
        assert abs(float(d.x0)) < 1e-30 and abs(abs(float(d.t0)) - 2) < 1e-30
        assert w.k <= 3 and w.x_star == 0 and w.value < 0
        assert evaluate(ak_exact_poly(f, classic)[2 * w.k], 0) == w.value

    def test_real_rooted_rejected(self, classic):
        with pytest.raises(AllRootsReal):
            witness_from_complex_root(P("z^2-1"), classic)

    def test_real_alpha_rejected(self, classic):
        with pytest.raises(ValueError):
            witness_from_complex_root(P("z^2+1"), classic, alpha_s=1.0)

    @given(planted_complex(8), st.sampled_from(DECISION_GENS))
    def test_always_certifies(self, f, g):
        gspec = gen(g)
        w = witness_from_complex_root(f, gspec)
        d = w.decomposition
        assert abs(d.z0 - (complex(d.x0) + d.alpha_s * float(d.t0))) <= 1e-12 * (1 + abs(d.z0))
        assert d.t0 != 0
        a = ak_exact_poly(f, gspec)[2 * w.k]
        assert evaluate(a, w.x_star) == w.value < 0


class TestNegativeRootsRelaxed:
    @settings(max_examples=60)
    @given(st.lists(st.builds(Fraction, st.integers(1, 12), st.integers(1, 4)), min_size=1, max_size=5),
           st.lists(st.builds(Fraction, st.integers(0, 40), st.integers(1, 8)), min_size=1, max_size=6))
    def test_negative_roots_give_nonneg_on_halfline(self, rs, xs):
        f = RationalPoly.from_roots([-r for r in rs])
        A = ak_exact_poly(f, gen("example3"))
        n = f.degree
        for k in range(2 * n + 1):
            for x in xs:
                assert evaluate(A[k], x) >= 0


def _gauss_third(x, order):
    return make_jet("gauss-poly", {"b": "1/3", "coeffs": [2, 1, 1]}, x, order)


class TestGridScan:
    def test_cos_values(self, classic):
        xs = [0, math.pi / 4, 1]
        rows = grid_scan(("cos", {}), classic, xs, 4)
        for x, row in zip(xs, rows):
            # L_1[cos] = 1 and L_2[cos] = 1/3 identically
            assert row.values == pytest.approx([math.cos(x) ** 2, 1, 1 / 3], abs=1e-14)
            assert min(row.values) >= -1e-12 and not row.violation

    def test_gauss(self, classic):
        row, = grid_scan(("gauss-poly", {"b": 1, "coeffs": [1]}), classic, [0], 2)
        assert row.values[1] == pytest.approx(2)

    def test_poly_flagged(self, classic):
        row, = grid_scan(("poly", {"coeffs": [1, 0, 1]}), classic, [0], 2)
        assert row.values[1] == -2 and row.violation

    def test_callable_source_and_workers(self, quartic4):
        source = _gauss_third
        xs = [i / 7 - 2 for i in range(29)]
        random.Random(0).shuffle(xs)
        serial = grid_scan(source, quartic4, xs, 8)
        parallel = grid_scan(source, quartic4, xs, 8, workers=4)
        assert serial == parallel
        assert [r.x for r in serial] == xs

    def test_short_jet(self, classic):
        with pytest.raises(JetTooShort):
            grid_scan(lambda x, order: TaylorJet(x, (1, 0)), classic, [0], 4)

    def test_verdict_never_in_lp(self, classic):
        rows = grid_scan(("cos", {}), classic, [0, 0.5], 4)
        v = scan_verdict(rows)
        assert v.status is Status.NUMERIC_ONLY and v.witness is None
        assert v.scan_summary["points"] == 2 and v.scan_summary["violations"] == 0

"""Extended Laguerre coefficient functions and Laguerre-Polya membership.

For a generator ``g(z) = prod_j (z + alpha_j)`` and a polynomial or
entire ``f``, ``Phi(z, t) = prod_j f(z + alpha_j t) = sum_k A_k(z) t^k``.
This package computes the ``A_k`` exactly (for polynomial ``f``) or
numerically from Taylor jets, and decides whether a polynomial ``f`` lies
in the Laguerre-Polya class by testing every ``A_{2k}`` for nonnegativity.
"""

from .checker import (
    ComplexRootWitness,
    LPVerdict,
    RootDecomposition,
    Status,
    Witness,
    decide_lp,
    grid_scan,
    scan_verdict,
    witness_from_complex_root,
)
from .errors import *  # noqa: F401,F403
from .exactpoly import (
    BivarPoly,
    RationalPoly,
    evaluate,
    find_negative_point,
    is_real_rooted,
    nonneg_on_reals,
    real_root_count,
    resultant,
    square_free_part,
    sturm_count,
)
from .groots import GeneratorSpec, find_roots, preset, validate_g
from .jets import TaylorJet, make_jet, poly_jet
from .operators import (
    SymbolicAk,
    ak_exact_poly,
    ak_partition_numeric,
    ak_series_numeric,
    emit_symbolic,
    example2_identity,
    ln_direct,
    ln_exact,
    phi_exact,
)
from .symfunc import (
    elementary_sym_eval,
    monomial_sym_exact,
    partitions,
    power_sums_from_coeffs,
)

__version__ = "0.1.0"


def generator(name: str = "classic", relaxed: bool = False, precision_bits: int = 128) -> GeneratorSpec:
    """Validated generator from a preset name (``classic``, ``quartic4``,
    ``example3``, ``cyclo:m``) or a polynomial expression."""
    key = name.strip().lower()
    if key in ("classic", "quartic4", "example3") or key.startswith("cyclo:"):
        g, implied = preset(key)
        return validate_g(g, relaxed or implied, precision_bits)
    return validate_g(RationalPoly.parse(name), relaxed, precision_bits)

"""Exact matrix-factorization toolkit for Y1^3 + Y2^3 + Y3^3 + Y4^3.

Polynomials cross the boundary as strings in the grammar used by the CLI
(`Y1^3+Y2^3`, `Y1-e*Y4`, ...); matrices are lists of rows of such strings.
"""

from ._mfkit import (
    MfkitError,
    catalog_matrix,
    classify_counts,
    complete_factorization,
    decide_equiv,
    f4,
    fitting_basis,
    groebner_basis,
    verify_catalog,
)

__all__ = [
    "MfkitError",
    "catalog_matrix",
    "classify_counts",
    "complete_factorization",
    "decide_equiv",
    "f4",
    "fitting_basis",
    "groebner_basis",
    "verify_catalog",
]

"""Exact arithmetic for regular quadratic forms over iterated Laurent
series fields: diagonalization, Witt-class components, anisotropy and
isometry decisions, loop-form construction, and loop-cocycle bookkeeping.

Inputs are strings in the same grammar the command line tool accepts
(``diag(1, 3*t1)``, ``[[0, 1], [1, 0]]``, ``{{}: diag(1), {1}: diag(3)}``,
``cocycle(m=2, r=1, e=1, units=(3), exp=[[1]])``); fields are named
``Fp:<p>`` (odd prime) or ``R``.
"""

from ._core import (
    BaseField,
    LibraryError,
    ParseFailure,
    build_loop_form,
    canonical_form,
    canonical_poly,
    classify,
    cocycle_conjugate,
    cocycle_form,
    diagonalize,
    is_anisotropic,
    is_isometric,
    validate_cocycle,
    witt_class,
    witt_decompose,
    witt_index,
)

__all__ = [
    "BaseField",
    "LibraryError",
    "ParseFailure",
    "build_loop_form",
    "canonical_form",
    "canonical_poly",
    "classify",
    "cocycle_conjugate",
    "cocycle_form",
    "diagonalize",
    "is_anisotropic",
    "is_isometric",
    "validate_cocycle",
    "witt_class",
    "witt_decompose",
    "witt_index",
]

__version__ = "0.1.0"

"""Exact Weingarten calculus for the unitary, orthogonal and symplectic groups.

Thin wrapper around the C++ core. All exact values cross the boundary as
`fractions.Fraction` or arbitrary-precision `int`, so nothing is ever rounded.
"""

from ._core import (  # noqa: F401
    WgCapError,
    WgDomainError,
    WgParseError,
    WgSingularError,
    catalan,
    catalan_quotient_max,
    compose,
    coset_type,
    count_paths_orthogonal,
    count_paths_unitary,
    count_paths_unitary_class,
    cycle_type,
    estimate,
    moebius,
    norm,
    sample_trace,
    verify,
    wg_full_cycle,
    wg_orthogonal,
    wg_symplectic_magnitudes,
    wg_unitary,
    wg_unitary_series,
)

__all__ = [
    "WgCapError",
    "WgDomainError",
    "WgParseError",
    "WgSingularError",
    "catalan",
    "catalan_quotient_max",
    "compose",
    "coset_type",
    "count_paths_orthogonal",
    "count_paths_unitary",
    "count_paths_unitary_class",
    "cycle_type",
    "estimate",
    "moebius",
    "norm",
    "sample_trace",
    "verify",
    "wg_full_cycle",
    "wg_orthogonal",
    "wg_symplectic_magnitudes",
    "wg_unitary",
    "wg_unitary_series",
]

"""Python access to the qpb verification library."""

from ._qpb import (
    ConfigurationError,
    ParseError,
    QpbError,
    canonical,
    check_ids,
    hilbert_line,
    hilbert_spectral,
    ladder,
    normal_order,
    pv_quadrature,
    run_suite,
    suites,
    to_momentum,
    verify,
)

__all__ = [
    "ConfigurationError",
    "ParseError",
    "QpbError",
    "canonical",
    "check_ids",
    "hilbert_line",
    "hilbert_spectral",
    "ladder",
    "normal_order",
    "pv_quadrature",
    "run_suite",
    "suites",
    "to_momentum",
    "verify",
]

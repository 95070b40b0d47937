"""Williamson sequences and their doubling from odd order n to order 2n."""

from .hadamard import circulant, is_hadamard, matrix_identity_check, williamson_array
from .search import SearchReport, enumerate_symmetric, search_williamson, sum_of_squares_filter
from .seqcore import (
    BinarySequence,
    CorrelationSpectrum,
    OddOrderError,
    SequenceError,
    half_rotate,
    interleave,
    is_palindromic,
    is_symmetric,
    make_sequence,
    negate,
    paf,
    paf_spectrum,
    pcf,
    pcf_spectrum,
    rotate,
    row_sum,
)
from .williamson import (
    NotWilliamsonError,
    VerificationReport,
    WilliamsonQuad,
    double,
    normalize_quad,
    paf_sum,
    verify_quad,
)

__version__ = "0.1.0"

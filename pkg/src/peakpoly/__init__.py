"""Exact descent and peak statistics for permutations.

The package computes descent polynomials d(S,n) and peak polynomials
p(I,n) in the binomial basis with arbitrary-precision integers, counts
and enumerates the underlying permutation classes, manipulates the
order-reversing flip involutions that connect the two families, and
ships a brute-force verification suite for every identity it relies on.
"""
from .core import (
    CapExceeded,
    DEFAULT_CAP,
    MAX_CAP,
    Perm,
    Positions,
    SignedPerm,
    as_permutation,
    as_signed_permutation,
    descent_set,
    initial_overlap_k,
    initial_set,
    is_admissible,
    is_permutation,
    is_signed_permutation,
    markings,
    mask_to_positions,
    peak_set,
    peaks_of,
    position_set,
    positions_to_mask,
    resolve_cap,
    spike_set,
    spikes_of,
    valley_set,
    valleys_of,
)
from .enumeration import (
    DescentClassQuery,
    PeakClassQuery,
    count_descent_class,
    enumerate_descent_class,
    enumerate_peak_class,
    parallel_count,
    peak_poly_value,
)
from .flips import (
    FlipAdmission,
    admits_flip,
    canonical_descent_set,
    fl,
    flip_profile,
    psi,
    psi_set,
)
from .polynomials import (
    BinomialPolynomial,
    binomial,
    descent_coeffs,
    descent_poly_via_peaks,
    peak_coeffs,
    peak_poly_via_moebius,
    prefix_interval_class,
)
from .verify import (
    FlipTable,
    FlipTableRow,
    VerificationReport,
    check_flip_bijection,
    check_flip_table_partition,
    check_marked_lemma,
    check_spike_sum,
    flip_admission_table,
)

__version__ = "1.0.0"

__all__ = [
    "BinomialPolynomial",
    "CapExceeded",
    "DEFAULT_CAP",
    "DescentClassQuery",
    "FlipAdmission",
    "FlipTable",
    "FlipTableRow",
    "MAX_CAP",
    "PeakClassQuery",
    "Perm",
    "Positions",
    "SignedPerm",
    "VerificationReport",
    "admits_flip",
    "as_permutation",
    "as_signed_permutation",
    "binomial",
    "canonical_descent_set",
    "check_flip_bijection",
    "check_flip_table_partition",
    "check_marked_lemma",
    "check_spike_sum",
    "count_descent_class",
    "descent_coeffs",
    "descent_poly_via_peaks",
    "descent_set",
    "enumerate_descent_class",
    "enumerate_peak_class",
    "fl",
    "flip_admission_table",
    "flip_profile",
    "initial_overlap_k",
    "initial_set",
    "is_admissible",
    "is_permutation",
    "is_signed_permutation",
    "markings",
    "mask_to_positions",
    "parallel_count",
    "peak_coeffs",
    "peak_poly_value",
    "peak_poly_via_moebius",
    "peak_set",
    "peaks_of",
    "position_set",
    "positions_to_mask",
    "prefix_interval_class",
    "psi",
    "psi_set",
    "resolve_cap",
    "spike_set",
    "spikes_of",
    "valley_set",
    "valleys_of",
]

"""Desk-scale computations around the canonical polynomial van der Waerden theorem."""

from .polynomial import IntPolynomial, difference, evaluate, family_max_diff_degree, parse_poly
from .patterns import (
    PatternFamily,
    PatternInstance,
    XDomain,
    count_instances,
    enumerate_instances,
    y_bound,
)
from .coloring import (
    Coloring,
    DensityReport,
    ScanReport,
    classify_instance,
    max_window_density,
    non_rainbow_upper_bound,
    normalize,
    random_coloring,
    scan_coloring,
)
from .counting import (
    CountingQuery,
    ValueHistogram,
    pair_ratio,
    moment_count,
    moment_count_bruteforce,
    pair_count,
    pair_count_windowed,
    value_histogram,
)
from .fourier import (
    FourierGrid,
    holder_chain_report,
    moment_integral,
    pair_integral,
    sample_phase_sum,
    sample_set_transform,
)
from .search import Mode, SearchResult, canonical_vdw_number, mono_vdw_number, verify_witness
from .harness import ExperimentConfig, emit_report, proof_pipeline, scaling_study

__version__ = "0.1.0"

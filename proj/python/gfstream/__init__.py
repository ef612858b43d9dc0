"""Exact streaming of lower-triangular Toeplitz convolutions via generating
functions: series arithmetic over exact rationals, constant-buffer streamers
for rational generating functions, Hankel rank/determinant certificates, Pade
approximation, and the correlated-noise continual-counting scaffold.

Rationals are plain ``fractions.Fraction`` values; a series is the list of
its coefficients ``[a_0, a_1, ...]``.
"""

from gfstream._core import (
    DegreeReport,
    Mechanism,
    MechanismReport,
    RankCertificate,
    RationalGF,
    Report,
    ReportLine,
    StreamRun,
    Streamer,
    approx_error,
    catalog,
    check_comp_relation,
    compose_par,
    compose_seq,
    dense_streamer,
    detect_degree,
    expand,
    hankel_det,
    hankel_rank,
    mechanism_run,
    pade,
    parse_series,
    rational_streamer,
    render_series,
    run,
    series_add,
    series_div,
    series_inv,
    series_mul,
    series_scale,
    series_shift_mul_x,
    series_sqrt,
    series_sub,
    space_lower_bound,
    verify_catalan_dets,
    verify_corank,
    verify_junod,
    verify_sqrt_dets,
)

__all__ = [
    "DegreeReport",
    "Mechanism",
    "MechanismReport",
    "RankCertificate",
    "RationalGF",
    "Report",
    "ReportLine",
    "StreamRun",
    "Streamer",
    "approx_error",
    "catalog",
    "check_comp_relation",
    "compose_par",
    "compose_seq",
    "dense_streamer",
    "detect_degree",
    "expand",
    "hankel_det",
    "hankel_rank",
    "mechanism_run",
    "pade",
    "parse_series",
    "rational_streamer",
    "render_series",
    "run",
    "series_add",
    "series_div",
    "series_inv",
    "series_mul",
    "series_scale",
    "series_shift_mul_x",
    "series_sqrt",
    "series_sub",
    "space_lower_bound",
    "verify_catalan_dets",
    "verify_corank",
    "verify_junod",
    "verify_sqrt_dets",
]

__version__ = "0.1.0"

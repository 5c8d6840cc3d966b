"""Folded ribbon knot constructions: exact ribbonlength, validity checks,
knot-type certification and bound tables."""

from ._core import (
    Construction,
    DomainError,
    ExactLength,
    KnotDiagram,
    Topology,
    certify,
    check_allowed,
    comparison_table,
    components,
    crossing_number,
    diagram_length,
    fold_local,
    generate,
    half_twists_svg,
    is_regular,
    jones,
    jones_string,
    max_allowed_width,
    construction_bound,
    pd_code,
    report_json,
    ribbonlength,
    step2_planar_length,
    stick_count,
    sublinear_coeff,
    table_csv,
    topology,
    twist_crossover,
)

__all__ = [name for name in dir() if not name.startswith("_")]

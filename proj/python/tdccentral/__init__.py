"""Exact total dominator colorings of central graphs."""

from ._tdccentral import (
    CapacityError,
    CentralGraph,
    Graph,
    GraphParseError,
    MalformedColoringError,
    ParameterError,
    UndefinedInvariantError,
    UnsupportedFamilyError,
    build_family,
    central,
    chromatic_number,
    classify,
    complement,
    components,
    construct_tdc_central,
    construct_tds_central_complete,
    disjoint_union,
    dominated_classes,
    formula_complement_central,
    formula_value,
    gamma_t_bruteforce,
    graph6_decode,
    graph6_encode,
    is_proper,
    is_tdc,
    join,
    longest_path,
    tdc_number,
    tdc_number_bruteforce,
    theorem_report_json,
    total_domination_number,
)

__all__ = [
    "CapacityError",
    "CentralGraph",
    "Graph",
    "GraphParseError",
    "MalformedColoringError",
    "ParameterError",
    "UndefinedInvariantError",
    "UnsupportedFamilyError",
    "build_family",
    "central",
    "chromatic_number",
    "classify",
    "complement",
    "components",
    "construct_tdc_central",
    "construct_tds_central_complete",
    "disjoint_union",
    "dominated_classes",
    "formula_complement_central",
    "formula_value",
    "gamma_t_bruteforce",
    "graph6_decode",
    "graph6_encode",
    "is_proper",
    "is_tdc",
    "join",
    "longest_path",
    "tdc_number",
    "tdc_number_bruteforce",
    "theorem_report_json",
    "total_domination_number",
]

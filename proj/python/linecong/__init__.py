"""Exact checks for congruences of lines with a fundamental curve."""

from ._core import (
    DEFAULT_SEED,
    __version__,
    check_c_prime_square,
    classify,
    classify_report,
    cn1,
    cn1_matches_closed_form,
    degree_cn1,
    double_point_relation,
    h0_twist,
    linecase,
    planarity,
    plane_relation_unit,
    porteous_a,
    split,
    strata,
    verify,
)


def survivors(d_max=50):
    return [r for r in classify(d_max) if r["status"] == "survives"]


__all__ = [
    "DEFAULT_SEED",
    "__version__",
    "check_c_prime_square",
    "classify",
    "classify_report",
    "cn1",
    "cn1_matches_closed_form",
    "degree_cn1",
    "double_point_relation",
    "h0_twist",
    "linecase",
    "planarity",
    "plane_relation_unit",
    "porteous_a",
    "split",
    "strata",
    "survivors",
    "verify",
]

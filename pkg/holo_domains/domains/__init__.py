"""
Domains Module
==============

Membership decisions for the tube, the extended tube, Jost points and the
two-point cut plane, each returning a Verdict with a margin and, for
Inside, a re-checkable certificate.

Usage:
    from holo_domains.domains import in_tube, in_extended_tube_s2, verify_certificate

    verdict = in_extended_tube_s2(config)
    if verdict:
        assert verify_certificate(config, verdict.certificate)
"""

from .tube import (
    in_tube,
    tube_margins,
    project_suborder,
    suborders,
    check_containment,
)

from .extended_tube import (
    Arc,
    tube_arcs,
    arc_intersection,
    arc_depth,
    arc_signature,
    half_circle_margin,
    in_extended_tube_s2,
    in_extended_tube_search,
    search_candidates,
    verify_certificate,
)

from .jost import (
    PROBABLY_INSIDE,
    is_jost_s2,
    jost_sampling,
    quadrant_margins,
)

from .cuts import (
    cut_distance,
    two_point_cut_test,
)

__all__ = [
    # Tube
    "in_tube",
    "tube_margins",
    "project_suborder",
    "suborders",
    "check_containment",
    # Extended tube
    "Arc",
    "tube_arcs",
    "arc_intersection",
    "arc_depth",
    "arc_signature",
    "half_circle_margin",
    "in_extended_tube_s2",
    "in_extended_tube_search",
    "search_candidates",
    "verify_certificate",
    # Jost points
    "PROBABLY_INSIDE",
    "is_jost_s2",
    "jost_sampling",
    "quadrant_margins",
    # Cuts
    "cut_distance",
    "two_point_cut_test",
]

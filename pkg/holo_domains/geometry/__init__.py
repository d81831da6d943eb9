"""
Geometry Module
===============
Complexified Minkowski space: metric, vectors, light-cone tests,
configurations and difference coordinates.

Usage:
    from holo_domains.geometry import Configuration, differences, in_open_forward_cone

    c = Configuration.build([[-1j, 0], [0, 0]])
    xi = differences(c)
    verdict = in_open_forward_cone(xi[0].imag.scale(-1), c.metric)
"""

from .vectors import (
    Metric,
    RealVector,
    ComplexVector,
    minkowski_product,
    square,
)

from .cones import (
    forward_cone_margin,
    in_open_forward_cone,
    is_spacelike,
    spectral_condition,
)

from .configuration import (
    Configuration,
    differences,
    difference_array,
    lightcone_coords,
    from_lightcone,
    translate,
)

__all__ = [
    # Vectors
    "Metric",
    "RealVector",
    "ComplexVector",
    "minkowski_product",
    "square",
    # Cones
    "forward_cone_margin",
    "in_open_forward_cone",
    "is_spacelike",
    "spectral_condition",
    # Configurations
    "Configuration",
    "differences",
    "difference_array",
    "lightcone_coords",
    "from_lightcone",
    "translate",
]

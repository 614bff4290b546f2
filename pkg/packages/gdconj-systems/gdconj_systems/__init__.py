from gdconj_systems.coding import (
    Chain,
    Cylinder,
    Itinerary,
    breakpoints,
    chain,
    delta,
    descend,
    exact_breakpoints,
    interval,
    itinerary_of,
    walk,
)
from gdconj_systems.enclosure import Enclosure
from gdconj_systems.errors import CompatibilityError, DepthLimitError, ItineraryError
from gdconj_systems.system import (
    VERTICES,
    System,
    SystemPair,
    affine_system,
    dyadic_system,
    is_dyadic,
    lf_system,
    validate_compatibility,
)

__all__ = [
    "VERTICES",
    "Chain",
    "Cylinder",
    "CompatibilityError",
    "DepthLimitError",
    "Enclosure",
    "Itinerary",
    "ItineraryError",
    "System",
    "SystemPair",
    "affine_system",
    "breakpoints",
    "chain",
    "delta",
    "descend",
    "dyadic_system",
    "exact_breakpoints",
    "interval",
    "is_dyadic",
    "itinerary_of",
    "lf_system",
    "validate_compatibility",
    "walk",
]

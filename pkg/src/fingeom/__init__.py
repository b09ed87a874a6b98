"""fingeom: finite incidence geometry engine over GF(2).

Subpackages build the concrete spaces (Grassmannians, hyperbolic
quadrics, half-spin spaces), chamber systems and sheaves, and verify
their axioms by exhaustive or seeded-sampled search.
"""

__version__ = "0.1.0"

from .backend import ACTIVE as BACKEND

"""Exact homological invariants of squarefree modules over a polynomial ring.

Squarefree modules and complexes are stored as finite representations of
the Boolean lattice 2^[n]; everything downstream (Alexander duality, the
dualizing functor, Ext against the canonical module, Betti and Bass
numbers, resolutions, linear strands, Hochster-type formulas, local
cohomology Hilbert functions and characteristic cycles) is computed with
exact linear algebra over Q or GF(p).
"""

from .field import QQ, Field

__version__ = "0.1.0"

__all__ = ["Field", "QQ", "__version__"]

"""hexamagic: exact finite-geometry census of three-qubit magic configurations.

The package reconstructs the symplectic polar space W(5,2) over the 63
three-qubit Pauli observables, the classically embedded split Cayley
hexagon of order two with all 16 383 of its geometric hyperplanes
classified into 25 automorphism orbits, the complete censuses of the
12 096 magic pentagrams and of the 40 320 glued-triangle (18_2, 12_3)
configurations, and the exact GHZ/SLOCC classification of every edge's
common eigenvectors.
"""
from . import entangle, graphs, groups, hexagon, magic, pauli, space
from .kernels import LANE as kernel_lane
from .pipeline import Pipeline

__version__ = "0.1.0"
__all__ = [
    "entangle",
    "graphs",
    "groups",
    "hexagon",
    "magic",
    "pauli",
    "space",
    "Pipeline",
    "kernel_lane",
]

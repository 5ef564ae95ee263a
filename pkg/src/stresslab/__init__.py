"""stresslab: exact computation with simplicial polytopes and spheres.

Builds rational-coordinate simplicial polytopes and spheres, computes
their affine stress spaces, Artinian reductions of face rings, socles and
graded Betti tables over exact rational arithmetic, and runs a battery of
verifiable identities relating all of these.
"""

from ._backend import BACKEND

__version__ = "0.1.0"

__all__ = ["BACKEND", "__version__"]

"""Spectral workbench for planar obstacle domains.

Computes Dirichlet-Laplacian spectra of a convex domain with a circular
obstacle removed, evaluates heat traces, spectral zeta functions and
regularized determinants, constructs the heart of the outer domain, and
runs obstacle-placement experiments (sweeps, localization, Hadamard
derivative checks).
"""

__version__ = "0.1.0"

CODE_VERSION = __version__

from .geometry import (  # noqa: F401
    ConvexDomain,
    FoldLine,
    GeometryError,
    HeartPolygon,
    ObstacleDomain,
    compute_heart,
    contains,
    is_interior_reflection,
    max_fold_offset,
)

"""skeinlab: Laurent expansions and skein relations for curves on punctured surfaces.

The package computes exact Laurent expansions (with principal coefficients) of
the elements attached to tagged arcs and closed curves on a triangulated
surface, and builds/verifies the skein relations that resolve crossings and
incompatible taggings.
"""

__version__ = "0.1.0"

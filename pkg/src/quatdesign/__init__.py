"""Exact verification toolkit for the exceptional quaternion groups on S^3.

Subpackages cover: exact quadratic-field scalars, quaternion algebra, the
finite unit groups 2T/2O/2I and their cyclic/dihedral relatives, Gegenbauer
machinery, harmonic-strength computations, linear-programming minimality
certificates, maximal-order shell enumeration, and spherical theta tables.
"""

__version__ = "1.0.0"

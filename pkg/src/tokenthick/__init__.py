"""Token graphs and certified girth-4 decompositions on the plane and projective plane."""

__version__ = "0.1.0"

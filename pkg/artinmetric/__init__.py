"""artinmetric: word-metric geometry of dihedral Artin groups."""

__version__ = "0.1.0"

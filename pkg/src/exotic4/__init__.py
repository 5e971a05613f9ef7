"""Finitely presented group machinery for Lefschetz-fibration and
Luttinger-surgery constructions of small exotic 4-manifolds."""

__version__ = "0.1.0"

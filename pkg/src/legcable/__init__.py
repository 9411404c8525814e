"""Legendrian and transverse classification of cable knots, computed from finite atlases."""

__version__ = "0.1.0"

"""Quivers, Cartan matrices and structural invariants of finite monoid algebras."""

from monoidquiver._core import Monoid, MonoidError, families

__all__ = ["Monoid", "MonoidError", "families"]
__version__ = "0.1.0"

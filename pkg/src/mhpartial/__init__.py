"""Exact verification of partial comodule coalgebras over multiplier Hopf algebras."""

from .exact import Field
from .report import CheckReport

__version__ = "0.1.0"

__all__ = ["CheckReport", "Field", "__version__"]

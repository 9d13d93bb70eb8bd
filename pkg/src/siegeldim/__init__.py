"""Dimension formulas for degree 2 Siegel modular forms of level 2 and 4, verified exactly."""

from .exactmath import RationalFunction, parse_rf, rf_equal, rf_expand

__version__ = "0.1.0"

__all__ = ["RationalFunction", "parse_rf", "rf_equal", "rf_expand", "__version__"]

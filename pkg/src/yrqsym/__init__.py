"""Young row-strict quasisymmetric Schur functions and composition tableaux."""

__version__ = "0.1.0"

"""Exact psi-extended Stirling numbers, Bell numbers and Dobinski-type
formulas, with machine checks of the identities relating them."""

__version__ = "0.1.0"

"""Verification toolkit for l-regular partition congruences"""

__version__ = "0.1.0"

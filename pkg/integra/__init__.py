"""
integra: machine-checkable integrality certificates over commutative rings and
ideal semifiltrations.
"""

__version__ = "0.1.0"

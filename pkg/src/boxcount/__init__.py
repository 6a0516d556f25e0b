"""Exact partition-function toolkit for coloured 3D partitions and pyramids.

Everything is integer arithmetic on truncated multivariate power series:
enumeration, transfer-operator evaluation, and closed product formulas can
each produce the same series, and the test suite checks them against each
other term by term.
"""

from boxcount.series import Monomial, Series

__all__ = ["Monomial", "Series"]

__version__ = "0.1.0"

"""Finite set-theoretic solutions of the Yang-Baxter equation and their quadratic algebras."""

from .core import (
    ActionTables,
    BadLabel,
    BudgetExceeded,
    NotBijective,
    Permutation,
    PropertyReport,
    QuadraticSet,
    YBError,
    actions,
    check_conditions,
    fixed_points,
    flip,
    from_function,
    from_table,
    order_of_r,
)

__version__ = "0.1.0"

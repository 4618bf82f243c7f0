"""Shortest sequences of reversals sorting signed permutations."""

from .driver import Sorter, sort
from .perm import ContractViolation, Interval, InvalidInput, apply_script, frame

__all__ = ["Sorter", "sort", "ContractViolation", "Interval", "InvalidInput",
           "apply_script", "frame"]
__version__ = "0.1.0"

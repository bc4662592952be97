"""exlie: exact-arithmetic exceptional Lie algebra computations over Q(i)."""

from .scalars import QI, Q, qi, parse_scalar

__all__ = ["QI", "Q", "qi", "parse_scalar"]
__version__ = "0.1.0"

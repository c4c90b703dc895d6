"""
Exact polynomial arithmetic with ring checks
"""

from enum import Enum
from typing import Optional, Union

from app.models.ring import Polynomial
from app.utils.exceptions import RingMismatchError


class ArithOp(str, Enum):
    ADD = "add"
    MUL = "mul"
    NEG = "neg"
    SCALAR_MUL = "scalar_mul"


def poly_arith(op: ArithOp, lhs: Polynomial, rhs: Optional[Union[Polynomial, int]] = None) -> Polynomial:
    """Apply op; results are normalized sympy polynomials.

    ``neg`` ignores rhs. ``scalar_mul`` accepts a constant polynomial or a
    plain integer as rhs.
    """
    op = ArithOp(op)
    if op == ArithOp.NEG:
        return -lhs
    if op == ArithOp.SCALAR_MUL:
        if isinstance(rhs, int):
            return lhs * lhs.ring.domain.convert(rhs)
        _check_same_ring(lhs, rhs)
        if not rhs.is_ground:
            raise ValueError("scalar_mul expects a constant right operand")
        return lhs * rhs
    _check_same_ring(lhs, rhs)
    if op == ArithOp.ADD:
        return lhs + rhs
    return lhs * rhs


def power(f: Polynomial, exponent: int) -> Polynomial:
    """Repeated multiplication"""
    result = f.ring.one
    for _ in range(exponent):
        result = poly_arith(ArithOp.MUL, result, f)
    return result


def _check_same_ring(lhs: Polynomial, rhs: Polynomial) -> None:
    if getattr(rhs, "ring", None) != lhs.ring:
        raise RingMismatchError(lhs.ring, getattr(rhs, "ring", type(rhs).__name__))

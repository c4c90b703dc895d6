"""
Exception handling and error management utilities
"""

import functools
import logging
from typing import Any, Callable, Dict, Optional

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DERIVED_MISMATCH = 1
EXIT_INPUT_ERROR = 2


class FormalCohomologyError(Exception):
    """Base exception for the toolkit"""
    def __init__(self, message: str, exit_code: int = EXIT_INPUT_ERROR, details: Dict[str, Any] = None):
        self.message = message
        self.exit_code = exit_code
        self.details = details or {}
        super().__init__(self.message)


class RingMismatchError(FormalCohomologyError):
    """Operands live in different polynomial rings"""
    def __init__(self, left: Any, right: Any):
        super().__init__(
            "operands belong to different rings",
            details={"left": str(left), "right": str(right)},
        )


class FieldSpecError(FormalCohomologyError):
    """Unknown field or non-prime characteristic"""
    def __init__(self, spec: str, reason: str):
        super().__init__(f"bad field spec '{spec}': {reason}", details={"spec": spec})


class ParseError(FormalCohomologyError):
    """Syntax error in polynomial or session text"""
    def __init__(self, message: str, position: int, line: Optional[int] = None, column: Optional[int] = None):
        self.position = position
        self.line = line
        self.column = column
        where = f"line {line}, column {column}" if line is not None else f"position {position}"
        super().__init__(
            f"{message} at {where}",
            details={"position": position, "line": line, "column": column},
        )
        self.reason = message

    def relocate(self, offset: int, text: str) -> "ParseError":
        """Return the same error shifted by offset inside a larger text"""
        absolute = offset + self.position
        line = text.count("\n", 0, absolute) + 1
        column = absolute - (text.rfind("\n", 0, absolute) + 1) + 1
        return type(self)(self.reason, absolute, line, column)


class UnknownVariableError(ParseError):
    """Identifier that is not a ring variable"""


class CharacteristicError(ParseError):
    """Literal not representable in the coefficient field (e.g. 1/2 over F_2)"""


class SessionError(ParseError):
    """Session grammar violation or missing declaration"""


class TooManyVariablesError(FormalCohomologyError):
    """Independent-set search refused"""
    def __init__(self, count: int, limit: int):
        super().__init__(
            f"dimension search over {count} variables exceeds the limit of {limit}",
            details={"variables": count, "limit": limit},
        )


class NonMonomialInputError(FormalCohomologyError):
    """Monomial-only routine given a non-monomial polynomial"""
    def __init__(self, what: str, polynomial: str):
        super().__init__(f"{what} must be monomial, got '{polynomial}'", details={"polynomial": polynomial})


class BoxTooLargeError(FormalCohomologyError):
    """Cech degree box exceeds the cell budget"""
    def __init__(self, cells: int, budget: int):
        super().__init__(
            f"degree box has {cells} cells, budget is {budget}",
            details={"cells": cells, "budget": budget},
        )


class EmptyVarietyError(FormalCohomologyError):
    """Preimage ideal is the unit ideal"""
    def __init__(self, message: str = "preimage ideal contains 1; the variety is empty"):
        super().__init__(message, exit_code=EXIT_OK)


class ToricInputError(FormalCohomologyError):
    """Malformed weights for a toric presentation"""


class InvariantViolationError(FormalCohomologyError):
    """An internal cross-check between independent computations failed"""
    def __init__(self, message: str, details: Dict[str, Any] = None):
        super().__init__(message, exit_code=EXIT_DERIVED_MISMATCH, details=details)


def handle_cli_errors(func: Callable[..., int]) -> Callable[..., int]:
    """Map toolkit exceptions raised by a CLI command to exit codes"""

    @functools.wraps(func)
    def wrapper(*args, **kwargs) -> int:
        try:
            return func(*args, **kwargs)
        except InvariantViolationError as exc:
            logger.error(f"Invariant violation: {exc.message} - {exc.details}")
            return exc.exit_code
        except FormalCohomologyError as exc:
            logger.error(f"{type(exc).__name__}: {exc.message}")
            return exc.exit_code
        except FileNotFoundError as exc:
            logger.error(f"File not found: {exc.filename}")
            return EXIT_INPUT_ERROR
        except PermissionError as exc:
            logger.error(f"Permission error: {str(exc)}")
            return EXIT_INPUT_ERROR

    return wrapper

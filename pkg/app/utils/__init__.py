"""
Utilities Package
Common utilities and helper functions
"""

from app.utils.exceptions import handle_cli_errors
from app.utils.logging import setup_logging

__all__ = [
    "handle_cli_errors",
    "setup_logging"
]

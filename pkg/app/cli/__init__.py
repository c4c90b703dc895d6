"""
Command surface: session files, report rendering and the built-in corpus
"""

from app.cli.corpus import CORPUS, run_corpus
from app.cli.runner import SessionRunner, execute_session
from app.cli.session import parse_session

__all__ = [
    "CORPUS",
    "SessionRunner",
    "execute_session",
    "parse_session",
    "run_corpus",
]

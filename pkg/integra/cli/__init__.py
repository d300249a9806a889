"""
The integra command line: one verb per library operation.
"""

from .app import app, main, run
from .handlers import registry
from .params import Command, CommandError, Outcome

__all__ = ["app", "main", "run", "registry", "Command", "CommandError", "Outcome"]

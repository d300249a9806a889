# Library imports
import logging
from rich.console import Console
from rich.logging import RichHandler

# Local imports
from integra.utils.settings import IntegraSettings, get_settings


def make_console(settings: IntegraSettings | None = None) -> Console:
    settings = settings or get_settings()
    match settings.color:
        case "always":
            return Console(stderr=True, force_terminal=True)
        case "never":
            return Console(stderr=True, no_color=True, highlight=False)
        case _:
            return Console(stderr=True)


def configure_logging(console: Console, verbose: bool = False) -> None:
    logger = logging.getLogger("integra")
    for handler in list(logger.handlers):
        if isinstance(handler, RichHandler):
            logger.removeHandler(handler)
    handler = RichHandler(console=console, show_time=False, show_path=False)
    logger.addHandler(handler)
    logger.setLevel(logging.DEBUG if verbose else logging.WARNING)
    logger.propagate = False

# Library imports
import logging
from pydantic import ValidationError

# Local imports
from integra.cli.handler_registry import HandlerRegistry
from integra.cli.params import Command, Outcome
from integra.utils.serialization import DocumentError, describe_validation_error
from integra.utils.types import EXIT_MALFORMED, IntegraError, ParanoidCheckFailed

logger = logging.getLogger(__name__)


class CommandProcessor:
    def __init__(self, registry: HandlerRegistry):
        self.registry = registry

    def process(self, command: Command) -> Outcome:
        handler = self.registry.get_handler(command.verb)
        if handler is None:
            return Outcome(exit_code=EXIT_MALFORMED, diagnostic=f"unknown verb '{command.verb}'")

        try:
            return handler(command)
        except DocumentError as e:
            return Outcome(exit_code=EXIT_MALFORMED, diagnostic=str(e))
        except ParanoidCheckFailed as e:
            return Outcome(exit_code=e.verdict.exit_code, document=e.document, diagnostic=str(e))
        except IntegraError as e:
            logger.debug("%s failed with %s", command.verb, type(e).__name__)
            return Outcome(exit_code=EXIT_MALFORMED, diagnostic=f"{command.verb}: {e}")
        except ValidationError as e:
            return Outcome(exit_code=EXIT_MALFORMED, diagnostic=f"{command.verb}: {describe_validation_error(e)}")

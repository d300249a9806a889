# Library imports
from typing import Callable, Dict, Optional


class HandlerRegistry:
    """Verb name to handler. Check verbs print a verdict line, the others emit a document."""

    def __init__(self):
        self._derivations: Dict[str, Callable] = {}
        self._checks: Dict[str, Callable] = {}
        self._registered: list[str] = []

    def register(self, verb: str, func: Callable, check: bool = False):
        if verb in self._registered:
            raise RuntimeError(f"Verb '{verb}' already registered")
        target = self._checks if check else self._derivations
        target[verb] = func
        self._registered.append(verb)

    def get_handler(self, verb: str) -> Optional[Callable]:
        return self._derivations.get(verb) or self._checks.get(verb)

    def is_check(self, verb: str) -> bool:
        return verb in self._checks

    def verbs(self) -> list[str]:
        return list(self._registered)

    def describe(self, verb: str) -> str:
        handler = self.get_handler(verb)
        doc = (handler.__doc__ or "").strip() if handler else ""
        return doc.splitlines()[0] if doc else verb

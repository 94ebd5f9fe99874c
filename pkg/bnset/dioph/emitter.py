from __future__ import annotations

import logging
from typing import Callable, Dict, List, Type

from bnset.dioph.polynomial import DPolynomial
from bnset.exceptions import UnknownEmitterError

logger = logging.getLogger(__name__)


def emit_text(p: DPolynomial, format: str) -> str:
    emitter = Emitter.by_name(format)
    return emitter.emit(p)


class Emitter:
    registry: Dict[str, Type["Emitter"]] = {}

    @classmethod
    def register(cls, names: List[str]) -> Callable[[Type[Emitter]], Type[Emitter]]:
        def decorator(subclass: Type[Emitter]) -> Type[Emitter]:
            for name in names:
                Emitter.registry[name] = subclass
            return subclass

        return decorator

    @classmethod
    def by_name(cls, name: str) -> Emitter:
        key = name.lower()
        if key not in Emitter.registry:
            names = ", ".join(sorted(Emitter.registry.keys()))
            raise UnknownEmitterError(f"Invalid format: {name} (not in {names})")
        subclass = Emitter.registry[key]
        logger.debug("Emit with %s", subclass.__name__)
        return subclass()

    def emit(self, polynomial: DPolynomial) -> str:
        raise NotImplementedError

# Library imports
import logging
from typing import Any, Mapping

# Local imports
from integra.rings import dense_poly
from integra.rings.polynomial_rings import MonicQuotientRing, TowerLayer
from integra.rings.scalar_rings import IntegerRing
from integra.utils.types import NoCanonicalMap

logger = logging.getLogger(__name__)


def tower_generator(target, var: str) -> Any | None:
    """The class of the tower variable `var` inside target, or None."""
    if not isinstance(target, TowerLayer):
        return None
    if target.var == var:
        return target.generator()
    inner = tower_generator(target.base, var)
    if inner is None:
        return None
    return target.constant(inner)


def map_payload(a: Any, source, target, bindings: Mapping[str, Any] | None = None) -> Any:
    """
    Image of a under the structure map source -> target.

    Tower variables of source are sent to their binding (a payload of target)
    if one is given, otherwise to the variable of the same name in target.
    """
    bindings = bindings or {}
    if source == target:
        return a
    if isinstance(source, TowerLayer):
        image = bindings.get(source.var)
        if image is None:
            image = tower_generator(target, source.var)
        if image is None:
            raise NoCanonicalMap(source, target, f"variable '{source.var}' has no image")
        if isinstance(source, MonicQuotientRing):
            modulus = [map_payload(c, source.base, target, bindings) for c in source.mod]
            if not target.is_zero(dense_poly.evaluate(target, modulus, image)):
                raise NoCanonicalMap(source, target, f"image of '{source.var}' is not a root of the modulus")
        coeffs = [map_payload(c, source.base, target, bindings) for c in source.coefficients(a)]
        return dense_poly.evaluate(target, coeffs, image)
    if isinstance(source, IntegerRing):
        return target.from_int(a)
    if isinstance(target, TowerLayer):
        return target.constant(map_payload(a, source, target.base, bindings))
    raise NoCanonicalMap(source, target)


def has_canonical_map(source, target) -> bool:
    try:
        map_payload(source.one(), source, target)
    except NoCanonicalMap:
        return False
    return True

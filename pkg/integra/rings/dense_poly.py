"""
Dense univariate polynomial arithmetic over a BaseRing.

Polynomials are tuples of coefficient payloads, lowest degree first, with
trailing zeros stripped; the zero polynomial is the empty tuple.
"""

# Library imports
from typing import Any, Sequence


def strip(ring, coeffs: Sequence[Any]) -> tuple:
    end = len(coeffs)
    while end and ring.is_zero(coeffs[end - 1]):
        end -= 1
    return tuple(coeffs[:end])


def degree(p: Sequence[Any]) -> int:
    return len(p) - 1


def coefficient(ring, p: Sequence[Any], i: int) -> Any:
    return p[i] if 0 <= i < len(p) else ring.zero()


def padded(ring, p: Sequence[Any], length: int) -> list:
    return list(p) + [ring.zero()] * (length - len(p))


def add(ring, a: Sequence[Any], b: Sequence[Any]) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = ring.add(out[i], c)
    return strip(ring, out)


def neg(ring, a: Sequence[Any]) -> tuple:
    return tuple(ring.neg(c) for c in a)


def sub(ring, a: Sequence[Any], b: Sequence[Any]) -> tuple:
    return add(ring, a, neg(ring, b))


def scale(ring, c: Any, a: Sequence[Any]) -> tuple:
    return strip(ring, [ring.mul(c, x) for x in a])


def shift(ring, a: Sequence[Any], k: int) -> tuple:
    """Multiply by X^k."""
    if not a:
        return ()
    return (ring.zero(),) * k + tuple(a)


def mul(ring, a: Sequence[Any], b: Sequence[Any]) -> tuple:
    if not a or not b:
        return ()
    out = [ring.zero()] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if ring.is_zero(x):
            continue
        for j, y in enumerate(b):
            out[i + j] = ring.add(out[i + j], ring.mul(x, y))
    return strip(ring, out)


def monic_remainder(ring, a: Sequence[Any], modulus: Sequence[Any]) -> tuple:
    """Remainder of a modulo a monic polynomial; no division in the base ring."""
    d = degree(modulus)
    out = list(a)
    for top in range(len(out) - 1, d - 1, -1):
        c = out[top]
        if ring.is_zero(c):
            continue
        offset = top - d
        for i, m in enumerate(modulus):
            out[offset + i] = ring.sub(out[offset + i], ring.mul(c, m))
    return strip(ring, out[:d] if len(out) > d else out)


def evaluate(ring, p: Sequence[Any], x: Any) -> Any:
    """Horner's scheme inside a single ring."""
    acc = ring.zero()
    for c in reversed(p):
        acc = ring.add(ring.mul(acc, x), c)
    return acc


def monomial(ring, c: Any, k: int) -> tuple:
    if ring.is_zero(c):
        return ()
    return (ring.zero(),) * k + (c,)

# Library imports
import heapq
import logging
from typing import Any, Iterator, Literal
from pydantic import BaseModel, ConfigDict

# Local imports
from integra.certificates.models import RingCertificate
from integra.certificates.verification import ensure_verified
from integra.linalg.operations import charpoly_coefficients
from integra.lombardi.witness import BasisIndexSet, MembershipWitness
from integra.utils.types import DerivationOptions, IndexOutOfRange, MalformedCertificate

logger = logging.getLogger(__name__)

Monomial = tuple[int, int]


class RewriteStep(BaseModel):
    """One substitution: u^i x^j is either basic or replaced through a relation."""

    model_config = ConfigDict(frozen=True)

    monomial: Monomial
    case: Literal["basis", "relation1", "relation2"]
    coefficient: Any
    replacements: tuple[Monomial, ...] = ()


def rewrite_steps(w: MembershipWitness, i: int, j: int) -> Iterator[RewriteStep]:
    """
    Rewrite u^i x^j, largest monomial first in lexicographic order. Every
    replacement monomial is lexicographically smaller than the one it replaces,
    so each monomial is visited once with its final coefficient.
    """
    if j >= w.mu + w.nu:
        raise IndexOutOfRange(j, w.mu + w.nu)
    if i < 0 or j < 0:
        raise IndexOutOfRange(min(i, j), w.mu + w.nu)
    base = w.base
    basis = w.basis()
    pending: dict[Monomial, Any] = {(i, j): base.one()}
    heap: list[tuple[int, int]] = [(-i, -j)]
    while heap:
        neg_i, neg_j = heapq.heappop(heap)
        current = (-neg_i, -neg_j)
        c = pending.pop(current)
        if base.is_zero(c):
            continue
        if current in basis:
            yield RewriteStep(monomial=current, case="basis", coefficient=c)
            continue
        ci, cj = current
        if ci >= w.m and cj >= w.mu:
            case, terms = "relation2", [(a + ci - w.m, b + cj - w.mu, d) for a, b, d in w.rel2]
        elif ci >= w.n and cj < w.mu:
            case, terms = "relation1", [(a + ci - w.n, b + cj, d) for a, b, d in w.rel1]
        else:
            raise IndexOutOfRange(cj, w.mu + w.nu)
        for a, b, d in terms:
            key = (a, b)
            if key in pending:
                pending[key] = base.add(pending[key], base.mul(c, d))
            else:
                pending[key] = base.mul(c, d)
                heapq.heappush(heap, (-a, -b))
        yield RewriteStep(
            monomial=current, case=case, coefficient=c, replacements=tuple((a, b) for a, b, _ in terms)
        )


def normal_form(w: MembershipWitness, i: int, j: int) -> dict[Monomial, Any]:
    """u^i x^j as an A-linear combination of the basis monomials; zero coefficients omitted."""
    return {step.monomial: step.coefficient for step in rewrite_steps(w, i, j) if step.case == "basis"}


def action_rows(w: MembershipWitness, basis: BasisIndexSet | None = None) -> tuple:
    basis = basis or w.basis()
    base = w.base
    positions = basis.positions
    rows = []
    for i, j in basis.members:
        row = [base.zero()] * len(positions)
        for monomial, c in normal_form(w, i + 1, j).items():
            row[positions[monomial]] = c
        rows.append(tuple(row))
    return tuple(rows)


def lombardi_polynomial(w: MembershipWitness) -> tuple:
    """Characteristic polynomial of u acting on the span of the basis monomials."""
    basis = w.basis()
    if len(basis) == 0:
        return (w.base.one(),)
    logger.debug("rewriting module of rank %d", len(basis))
    return charpoly_coefficients(w.base, action_rows(w, basis))


def lombardi_cert(w: MembershipWitness, options: DerivationOptions | None = None) -> RingCertificate:
    if not w.has_context:
        raise MalformedCertificate("the witness names no algebra, u and x")
    w.check_relations()
    out = RingCertificate(
        base=w.base,
        algebra=w.algebra,
        element=w.u,
        coeffs=lombardi_polynomial(w),
        bindings=w.bindings,
    )
    return ensure_verified(out, "lombardi", options)

# Library imports
import logging
from pathlib import Path
from typing import Callable

# Local imports
from integra.certificates import (
    ModulePresentation,
    RingCertificate,
    module_to_cert,
    nilpotency_cert,
    pad,
    verify,
)
from integra.cli.handler_registry import HandlerRegistry
from integra.cli.params import (
    Command,
    CommandError,
    DegreeOneParams,
    InverseLikeParams,
    NilpotentParams,
    Outcome,
    ReesMemberParams,
    SemifilTruncationParams,
    TruncationParams,
    TwoSidedParams,
    load_certificate,
    load_semifil_certificate,
)
from integra.constructions import (
    diff_cert,
    inverse_like_cert,
    negate_cert,
    product_cert,
    sum_cert,
    transitivity_cert,
    truncation_cert,
    two_sided_cert,
)
from integra.lombardi import MembershipWitness, joint_cert, lombardi_cert, product_base_cert, relative_joint_cert
from integra.rees_reduction import (
    ReesCertificate,
    degree_one_test,
    drop,
    drop_accel,
    drop_two,
    lift,
    lift_accel,
    lift_two,
    semifil_mixed_product,
    semifil_product,
    semifil_sum,
    semifil_transitivity,
    semifil_truncation,
    verify_rees,
)
from integra.rings import RingElement
from integra.semifiltrations import ReesHandle, Semifiltration, rees_member_payload, validate
from integra.utils.serialization import load_document, parse_payload
from integra.utils.types import DegreeOneStatus, Membership

logger = logging.getLogger(__name__)

registry = HandlerRegistry()

MEMBERSHIP_EXIT = {Membership.MEMBER: 0, Membership.NOT_MEMBER: 1, Membership.UNKNOWN: 2}
DEGREE_ONE_EXIT = {DegreeOneStatus.INTEGRAL: 0, DegreeOneStatus.NOT_INTEGRAL: 1, DegreeOneStatus.UNKNOWN: 2}


def verb(name: str, check: bool = False):
    def decorator(fn: Callable[[Command], Outcome]) -> Callable[[Command], Outcome]:
        registry.register(name, fn, check=check)
        return fn

    return decorator


def derived(cmd: Command, document: RingCertificate) -> Outcome:
    if not cmd.paranoid:
        return Outcome(document=document)
    verdict = verify(document)
    logger.debug("%s output: %s", cmd.verb, verdict.line())
    return Outcome(exit_code=verdict.exit_code, document=document)


def derived_rees(cmd: Command, document: ReesCertificate) -> Outcome:
    if not cmd.paranoid:
        return Outcome(document=document)
    return Outcome(exit_code=verify_rees(document).exit_code, document=document)


def _target(paths: tuple[Path, ...]) -> Semifiltration | None:
    return load_document(paths[1], Semifiltration) if len(paths) > 1 else None


def _required(value, flag: str, cmd: Command):
    if value is None:
        raise CommandError(f"'{cmd.verb}' needs {flag}")
    return value


@verb("verify", check=True)
def handle_verify(cmd: Command) -> Outcome:
    """Check a ring or semifiltration certificate."""
    (path,) = cmd.expect(1)
    verdict = verify(load_certificate(path))
    return Outcome(exit_code=verdict.exit_code, line=verdict.line())


@verb("verify-sf", check=True)
def handle_verify_sf(cmd: Command) -> Outcome:
    """Check a semifiltration certificate."""
    (path,) = cmd.expect(1)
    verdict = verify(load_semifil_certificate(path))
    return Outcome(exit_code=verdict.exit_code, line=verdict.line())


@verb("pad")
def handle_pad(cmd: Command) -> Outcome:
    """Raise a certificate to a larger degree (--degree) with leading zero coefficients."""
    (path,) = cmd.expect(1)
    return derived(cmd, pad(load_certificate(path), _required(cmd.degree, "--degree", cmd)))


@verb("nilpotent")
def handle_nilpotent(cmd: Command) -> Outcome:
    """Certificate for u over (A, (0)) from u^n = 0."""
    (path,) = cmd.expect(1)
    p = load_document(path, NilpotentParams)
    return derived(cmd, nilpotency_cert(p.ring, RingElement(ring=p.ring, value=p.element), p.degree))


@verb("from-module")
def handle_from_module(cmd: Command) -> Outcome:
    """Certificate from a finitely generated faithful module presentation."""
    (path,) = cmd.expect(1)
    return derived(cmd, module_to_cert(load_document(path, ModulePresentation)))


## Constructive core


@verb("sum")
def handle_sum(cmd: Command) -> Outcome:
    """Certificate for x + y."""
    cx, cy = cmd.expect(2)
    return derived(cmd, sum_cert(load_certificate(cx), load_certificate(cy), cmd.options))


@verb("prod")
def handle_prod(cmd: Command) -> Outcome:
    """Certificate for x·y."""
    cx, cy = cmd.expect(2)
    return derived(cmd, product_cert(load_certificate(cx), load_certificate(cy), cmd.options))


@verb("neg")
def handle_neg(cmd: Command) -> Outcome:
    """Certificate for -x."""
    (path,) = cmd.expect(1)
    return derived(cmd, negate_cert(load_certificate(path), cmd.options))


@verb("diff")
def handle_diff(cmd: Command) -> Outcome:
    """Certificate for x - y."""
    cx, cy = cmd.expect(2)
    return derived(cmd, diff_cert(load_certificate(cx), load_certificate(cy), cmd.options))


@verb("trans")
def handle_trans(cmd: Command) -> Outcome:
    """Certificate for u over A from v over A and u over A[v]."""
    cv, cu = cmd.expect(2)
    return derived(cmd, transitivity_cert(load_certificate(cv), load_certificate(cu), cmd.options))


@verb("trunc")
def handle_trunc(cmd: Command) -> Outcome:
    """Certificate for a truncated relation a_k + a_(k+1) v + ... + a_n v^(n-k)."""
    (path,) = cmd.expect(1)
    p = load_document(path, TruncationParams)
    cert = truncation_cert(p.base, p.algebra, p.element_value, p.coeffs, p.k, p.bindings, cmd.options)
    return derived(cmd, cert)


@verb("two-sided")
def handle_two_sided(cmd: Command) -> Outcome:
    """Certificate for u given as a polynomial in v and as v^-beta times one."""
    (path,) = cmd.expect(1)
    p = load_document(path, TwoSidedParams)
    cert = two_sided_cert(
        p.base,
        p.algebra,
        RingElement(ring=p.algebra, value=p.v),
        RingElement(ring=p.algebra, value=p.u),
        p.s,
        p.t,
        p.bindings,
        cmd.options,
    )
    return derived(cmd, cert)


@verb("inv-like")
def handle_inverse_like(cmd: Command) -> Outcome:
    """Certificate for u from v·u integral and b(v)·u = 1 style relations."""
    (path,) = cmd.expect(1)
    p = load_document(path, InverseLikeParams)
    v = RingElement(ring=p.algebra, value=p.v)
    return derived(cmd, inverse_like_cert(p.base, p.algebra, v, p.b, p.certificate, cmd.options))


## Semifiltrations


@verb("sf-validate", check=True)
def handle_sf_validate(cmd: Command) -> Outcome:
    """Bounded check of the semifiltration axioms (--bound)."""
    (path,) = cmd.expect(1)
    report = validate(load_document(path, Semifiltration), cmd.bound)
    return Outcome(exit_code=report.exit_code, line=report.line())


@verb("rees-member", check=True)
def handle_rees_member(cmd: Command) -> Outcome:
    """Membership of a polynomial in the Rees algebra of a semifiltration."""
    (path,) = cmd.expect(1)
    p = load_document(path, ReesMemberParams)
    handle = ReesHandle(semifiltration=p.semifiltration, variable=p.variable)
    answer = rees_member_payload(handle, handle.ambient.coerce(p.polynomial))
    return Outcome(exit_code=MEMBERSHIP_EXIT[answer], line=answer.value.upper())


## Rees reduction


@verb("rees-lift")
def handle_rees_lift(cmd: Command) -> Outcome:
    """Semifiltration certificate for u to a ring certificate for uY over the Rees algebra."""
    (path,) = cmd.expect(1)
    return derived_rees(cmd, lift(load_semifil_certificate(path), cmd.options))


@verb("rees-drop")
def handle_rees_drop(cmd: Command) -> Outcome:
    """Rees certificate for uY back to a semifiltration certificate for u."""
    paths = cmd.expect(1, 2)
    rc = load_document(paths[0], ReesCertificate)
    return derived(cmd, drop(rc, _target(paths), cmd.options))


@verb("rees-lift2")
def handle_rees_lift_two(cmd: Command) -> Outcome:
    """Two-semifiltration form: over (A, (I·J)) to over the Rees algebra with the J part kept (--backward reverses)."""
    if cmd.backward:
        paths = cmd.expect(1, 2)
        rc = load_document(paths[0], ReesCertificate)
        return derived(cmd, drop_two(rc, _target(paths), cmd.options))
    (path,) = cmd.expect(1)
    return derived_rees(cmd, lift_two(load_semifil_certificate(path), cmd.options))


@verb("rees-accel")
def handle_rees_accel(cmd: Command) -> Outcome:
    """Accelerated form: over (A, (I_(lambda rho))) to u·Y^lambda (--lambda, --backward reverses)."""
    if cmd.backward:
        paths = cmd.expect(1, 2)
        rc = load_document(paths[0], ReesCertificate)
        return derived(cmd, drop_accel(rc, _target(paths), cmd.options))
    (path,) = cmd.expect(1)
    lam = _required(cmd.lam, "--lambda", cmd)
    return derived_rees(cmd, lift_accel(load_semifil_certificate(path), lam, cmd.options))


@verb("sf-sum")
def handle_sf_sum(cmd: Command) -> Outcome:
    """Semifiltration certificate for x + y."""
    cx, cy = cmd.expect(2)
    return derived(cmd, semifil_sum(load_semifil_certificate(cx), load_semifil_certificate(cy), cmd.options))


@verb("sf-prod")
def handle_sf_prod(cmd: Command) -> Outcome:
    """Semifiltration certificate for x·y with both factors over the same semifiltration."""
    cx, cy = cmd.expect(2)
    return derived(cmd, semifil_product(load_semifil_certificate(cx), load_semifil_certificate(cy), cmd.options))


@verb("sf-mixed")
def handle_sf_mixed(cmd: Command) -> Outcome:
    """Semifiltration certificate for x·y with y integral over the ring only."""
    cx, cy = cmd.expect(2)
    cert = semifil_mixed_product(load_semifil_certificate(cx), load_certificate(cy), cmd.options)
    return derived(cmd, cert)


@verb("sf-trans")
def handle_sf_trans(cmd: Command) -> Outcome:
    """Semifiltration transitivity: v over A and u over (A[v], (I_rho A[v]))."""
    cv, cu = cmd.expect(2)
    cert = semifil_transitivity(load_certificate(cv), load_semifil_certificate(cu), cmd.options)
    return derived(cmd, cert)


@verb("sf-trunc")
def handle_sf_trunc(cmd: Command) -> Outcome:
    """Semifiltration truncation of a relation with a_i in I_(n-i)."""
    (path,) = cmd.expect(1)
    p = load_document(path, SemifilTruncationParams)
    v = RingElement(ring=p.algebra, value=p.element)
    cert = semifil_truncation(p.semifiltration, p.algebra, v, p.coeffs, p.k, p.bindings, cmd.options)
    return derived(cmd, cert)


@verb("sf-deg1", check=True)
def handle_sf_degree_one(cmd: Command) -> Outcome:
    """Decide degree-one integrality of u·1_B over (A, (I_rho))."""
    (path,) = cmd.expect(1)
    p = load_document(path, DegreeOneParams)
    u = RingElement(ring=p.semifiltration.ring, value=p.element)
    status = degree_one_test(p.semifiltration, p.algebra, u)
    return Outcome(exit_code=DEGREE_ONE_EXIT[status], line=status.value.upper())


## Membership relations


@verb("lombardi")
def handle_lombardi(cmd: Command) -> Outcome:
    """Certificate from a pair of membership relations u^n in A[u]x and x^mu u^m in A[u,x]."""
    (path,) = cmd.expect(1)
    return derived(cmd, lombardi_cert(load_document(path, MembershipWitness), cmd.options))


@verb("joint")
def handle_joint(cmd: Command) -> Outcome:
    """u over A from u over A[x] and over A[y] with xy in A (--xy)."""
    cx_path, cy_path = cmd.expect(2)
    cx, cy = load_certificate(cx_path), load_certificate(cy_path)
    payload = parse_payload(_required(cmd.xy, "--xy", cmd))
    ring = getattr(cx.base, "base", cx.base)
    return derived(cmd, joint_cert(cx, cy, RingElement(ring=ring, value=payload), cmd.options))


@verb("joint-xy")
def handle_joint_xy(cmd: Command) -> Outcome:
    """u over A[xy] from u over A[x] and over A[y]."""
    cx, cy = cmd.expect(2)
    return derived(cmd, product_base_cert(load_certificate(cx), load_certificate(cy), cmd.options))


@verb("joint-relative")
def handle_joint_relative(cmd: Command) -> Outcome:
    """Semifiltration form of joint-xy."""
    cx, cy = cmd.expect(2)
    cert = relative_joint_cert(load_semifil_certificate(cx), load_semifil_certificate(cy), cmd.options)
    return derived(cmd, cert)

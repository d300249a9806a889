from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st
from pydantic import ValidationError

from integra.rings import (
    Ideal,
    IntegerRing,
    ModularRing,
    MonicQuotientRing,
    PolynomialRing,
    RationalRing,
    RingElement,
    conjunction,
    constant,
    contains,
    embed,
    extend_ideal,
    fresh_variable,
    generator,
    hom,
    ideal_membership,
    ideal_product,
    poly_eval,
    ring_eq,
    ring_pow,
)
from integra.utils.types import Membership, NoCanonicalMap, RingMismatch

small_ints = st.integers(min_value=-50, max_value=50)
payloads = st.lists(small_ints, min_size=0, max_size=4)


class TestScalarRings:
    def test_modular_coercion_reduces(self, Z12):
        assert Z12.coerce(-1) == 11
        assert Z12.coerce(25) == 1

    def test_modular_units(self, Z12):
        assert Z12.is_unit(5)
        assert not Z12.is_unit(4)

    def test_rational_payloads(self, Q):
        assert Q.coerce([2, 4]) == Fraction(1, 2)
        assert Q.to_json(Fraction(1, 2)) == [1, 2]
        assert Q.to_json(Fraction(3)) == 3

    def test_rational_rejects_zero_denominator(self, Q):
        with pytest.raises(ValueError):
            Q.coerce([1, 0])

    def test_booleans_are_not_integers(self, Z):
        with pytest.raises(ValueError):
            Z.coerce(True)

    def test_modulus_must_be_at_least_two(self):
        with pytest.raises(ValidationError):
            ModularRing(m=1)


class TestTowers:
    def test_quotient_reduces_products(self, sqrt2_ring):
        a = sqrt2_ring.generator()
        assert sqrt2_ring.mul(a, a) == (2,)

    def test_nested_quotient(self, sqrt2_sqrt3_ring):
        b = sqrt2_sqrt3_ring.generator()
        assert sqrt2_sqrt3_ring.mul(b, b) == ((3,),)

    def test_non_monic_modulus_rejected(self, Z):
        with pytest.raises(ValidationError):
            MonicQuotientRing(base=Z, mod=[1, 2], var="a")

    def test_constant_modulus_rejected(self, Z):
        with pytest.raises(ValidationError):
            MonicQuotientRing(base=Z, mod=[1], var="a")

    def test_repeated_variable_rejected(self, v_ring):
        with pytest.raises(ValidationError):
            PolynomialRing(base=v_ring, var="v")

    def test_fresh_variable(self, v_ring):
        assert fresh_variable("v", v_ring) == "v1"
        assert fresh_variable("w", v_ring) == "w"

    def test_descriptor_round_trip(self, sqrt2_sqrt3_ring):
        dumped = sqrt2_sqrt3_ring.model_dump(mode="json")
        assert dumped["mod"] == [[-3], [], [1]]
        assert MonicQuotientRing.model_validate(dumped) == sqrt2_sqrt3_ring


class TestElements:
    def test_arithmetic_operators(self, sqrt2_ring):
        a = generator(sqrt2_ring)
        two = constant(sqrt2_ring, 2)
        assert ring_eq(a * a, two)
        assert (a + a - a).value == a.value
        assert (-a).value == (0, -1)
        assert (a**4).value == (4,)
        assert ring_pow(a, 3).value == (0, 2)

    def test_mixing_rings_fails(self, Z, Q):
        with pytest.raises(RingMismatch):
            RingElement(ring=Z, value=1) + RingElement(ring=Q, value=1)

    def test_embed_integers_into_rationals(self, Z, Q):
        assert embed(RingElement(ring=Z, value=3), Q).value == Fraction(3)

    def test_no_map_from_rationals_to_integers(self, Z, Q):
        with pytest.raises(NoCanonicalMap):
            embed(RingElement(ring=Q, value=[1, 2]), Z)

    def test_hom_with_bound_variable(self, v_ring, sqrt2_ring):
        v_squared = RingElement(ring=v_ring, value=[0, 0, 1])
        a = RingElement(ring=sqrt2_ring, value=[0, 1])
        assert hom(v_squared, sqrt2_ring, {"v": a}).value == (2,)

    def test_hom_without_binding_fails(self, v_ring, sqrt2_ring):
        with pytest.raises(NoCanonicalMap):
            hom(RingElement(ring=v_ring, value=[0, 1]), sqrt2_ring)

    def test_quotient_map_checks_the_modulus(self, Z, sqrt2_ring):
        cube_root = MonicQuotientRing(base=Z, mod=[-2, 0, 0, 1], var="a")
        with pytest.raises(NoCanonicalMap):
            embed(generator(cube_root), sqrt2_ring)

    def test_poly_eval(self, Z, sqrt2_ring):
        p = RingElement(ring=PolynomialRing(base=Z, var="X"), value=[-2, 0, 1])
        assert poly_eval(p, generator(sqrt2_ring)).is_zero()

    @given(payloads, payloads, payloads)
    def test_quotient_ring_laws(self, x, y, z):
        ring = MonicQuotientRing(base=IntegerRing(), mod=[-2, 0, 1], var="a")
        a, b, c = ring.coerce(x), ring.coerce(y), ring.coerce(z)
        assert ring.mul(a, ring.add(b, c)) == ring.add(ring.mul(a, b), ring.mul(a, c))
        assert ring.mul(ring.mul(a, b), c) == ring.mul(a, ring.mul(b, c))
        assert ring.mul(a, b) == ring.mul(b, a)
        assert ring.add(a, ring.neg(a)) == ring.zero()

    @given(payloads, payloads)
    def test_modular_polynomial_laws(self, x, y):
        ring = PolynomialRing(base=ModularRing(m=12), var="X")
        a, b = ring.coerce(x), ring.coerce(y)
        assert ring.mul(a, b) == ring.mul(b, a)
        assert ring.sub(ring.add(a, b), b) == a
        assert ring.mul(a, ring.one()) == a


class TestIdeals:
    def test_integer_ideals_collapse_to_gcd(self, Z):
        assert Ideal.of(Z, [4, 6]).gens == (2,)
        assert Ideal.of(Z, [0, 0]).gens == (0,)
        assert Ideal.of(Z, []).is_zero_ideal()

    def test_modular_ideals(self, Z12):
        assert Ideal.of(Z12, [8]).gens == (4,)
        assert Ideal.of(Z12, [5]).is_unit_ideal()

    def test_rational_ideals_are_trivial(self, Q):
        assert Ideal.of(Q, [[3, 7]]).is_unit_ideal()

    def test_polynomial_ideal_over_field_uses_gcd(self, Q):
        ring = PolynomialRing(base=Q, var="x")
        ideal = Ideal.of(ring, [[-1, 0, 1], [1, 1]])
        assert ideal.gens == ((Fraction(1), Fraction(1)),)
        assert contains(ideal, ring.coerce([1, 2, 1])) == Membership.MEMBER
        assert contains(ideal, ring.coerce([1, 0, 1])) == Membership.NOT_MEMBER

    def test_integer_membership(self, Z):
        ideal = Ideal.of(Z, [6])
        assert ideal_membership(RingElement(ring=Z, value=-12), ideal) == Membership.MEMBER
        assert ideal_membership(RingElement(ring=Z, value=3), ideal) == Membership.NOT_MEMBER

    def test_zero_is_always_member(self, v_ring):
        ideal = Ideal.of(v_ring, [[0, 1], [2]])
        assert contains(ideal, ()) == Membership.MEMBER

    def test_extended_ideal_rule(self, v_ring):
        ideal = Ideal.of(v_ring, [[2]])
        assert contains(ideal, v_ring.coerce([2, 4])) == Membership.MEMBER
        assert contains(ideal, v_ring.coerce([2, 3])) == Membership.NOT_MEMBER

    def test_membership_abstains_when_undecidable(self, v_ring):
        ideal = Ideal.of(v_ring, [[0, 1], [2]])
        assert contains(ideal, v_ring.coerce([0, 3])) == Membership.UNKNOWN

    def test_product_and_extension(self, Z, v_ring):
        product = ideal_product(Ideal.of(Z, [2]), Ideal.of(Z, [3]))
        assert product.gens == (6,)
        assert extend_ideal(product, v_ring).gens == ((6,),)

    def test_conjunction(self):
        assert conjunction([Membership.MEMBER, Membership.UNKNOWN]) == Membership.UNKNOWN
        assert conjunction([Membership.UNKNOWN, Membership.NOT_MEMBER]) == Membership.NOT_MEMBER
        assert conjunction([]) == Membership.MEMBER

    @given(st.integers(min_value=-100, max_value=100), st.integers(min_value=1, max_value=30))
    def test_integer_membership_matches_divisibility(self, x, d):
        expected = Membership.MEMBER if x % d == 0 else Membership.NOT_MEMBER
        assert contains(Ideal.of(IntegerRing(), [d]), x) == expected


LAW_RINGS = [
    IntegerRing(),
    ModularRing(m=12),
    ModularRing(m=7),
    RationalRing(),
    PolynomialRing(base=IntegerRing(), var="X"),
    MonicQuotientRing(base=IntegerRing(), mod=[-2, 0, 1], var="a"),
    MonicQuotientRing(base=ModularRing(m=5), mod=[1, 1, 0, 1], var="t"),
]


def elements_of(ring):
    match ring:
        case IntegerRing() | ModularRing():
            return small_ints
        case RationalRing():
            return st.tuples(small_ints, st.integers(min_value=1, max_value=20)).map(list)
        case _:
            return payloads


class TestRingLaws:
    @pytest.mark.parametrize("ring", LAW_RINGS, ids=lambda r: r.label())
    @settings(max_examples=1000, deadline=None)
    @given(data=st.data())
    def test_commutative_ring_axioms(self, ring, data):
        a, b, c = (ring.coerce(data.draw(elements_of(ring))) for _ in range(3))
        assert ring.add(ring.add(a, b), c) == ring.add(a, ring.add(b, c))
        assert ring.mul(ring.mul(a, b), c) == ring.mul(a, ring.mul(b, c))
        assert ring.mul(a, b) == ring.mul(b, a)
        assert ring.mul(a, ring.add(b, c)) == ring.add(ring.mul(a, b), ring.mul(a, c))
        assert ring.add(a, ring.zero()) == a
        assert ring.mul(a, ring.one()) == a

    @pytest.mark.parametrize(
        "target",
        [
            ModularRing(m=12),
            RationalRing(),
            PolynomialRing(base=IntegerRing(), var="X"),
            MonicQuotientRing(base=IntegerRing(), mod=[-2, 0, 1], var="a"),
            PolynomialRing(base=MonicQuotientRing(base=IntegerRing(), mod=[-2, 0, 1], var="a"), var="Y"),
        ],
        ids=lambda r: r.label(),
    )
    @settings(max_examples=300, deadline=None)
    @given(small_ints, small_ints)
    def test_embed_is_a_homomorphism(self, target, x, y):
        a, b = RingElement(ring=IntegerRing(), value=x), RingElement(ring=IntegerRing(), value=y)
        assert ring_eq(embed(a + b, target), embed(a, target) + embed(b, target))
        assert ring_eq(embed(a * b, target), embed(a, target) * embed(b, target))
        assert ring_eq(embed(constant(IntegerRing(), 1), target), constant(target, 1))

    @settings(max_examples=300, deadline=None)
    @given(small_ints, small_ints)
    def test_embed_into_polynomial_chains_is_injective(self, x, y):
        target = PolynomialRing(base=PolynomialRing(base=IntegerRing(), var="X"), var="Y")
        images = embed(RingElement(ring=IntegerRing(), value=x), target), embed(
            RingElement(ring=IntegerRing(), value=y), target
        )
        assert ring_eq(*images) == (x == y)

    def test_embed_examples(self, Z, sqrt2_ring):
        assert embed(RingElement(ring=Z, value=5), ModularRing(m=3)).value == 2
        assert embed(RingElement(ring=Z, value=7), sqrt2_ring).value == (7,)
        assert embed(RingElement(ring=Z, value=7), PolynomialRing(base=Z, var="Y")).value == (7,)


class TestIdealExamples:
    def test_product_of_non_principal_ideals(self, Z):
        ring = PolynomialRing(base=Z, var="X")
        ideal = Ideal.of(ring, [[2], [0, 1]])
        assert ideal_product(ideal, ideal).gens == ((4,), (0, 2), (0, 0, 1))

    def test_unit_ideal_is_neutral(self, Z):
        assert ideal_product(Ideal.of(Z, [10]), Ideal.unit(Z)) == Ideal.of(Z, [10])

    @settings(max_examples=1000, deadline=None)
    @given(st.integers(min_value=-10**4, max_value=10**4), st.lists(st.integers(-500, 500), min_size=1, max_size=3))
    def test_membership_agrees_with_an_independent_gcd(self, x, gens):
        d = 0
        for g in gens:
            d = sympy.igcd(d, g)
        expected = x == 0 if d == 0 else x % d == 0
        answer = contains(Ideal.of(IntegerRing(), gens), x)
        assert answer == (Membership.MEMBER if expected else Membership.NOT_MEMBER)

    @given(st.lists(st.integers(-60, 60), max_size=4))
    def test_normalization_is_idempotent(self, gens):
        once = Ideal.of(IntegerRing(), gens)
        assert Ideal.of(IntegerRing(), once.gens) == once

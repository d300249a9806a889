import pytest
from hypothesis import given
from hypothesis import strategies as st
from pydantic import TypeAdapter, ValidationError

from integra.rings import IntegerRing, MonicQuotientRing, PolynomialRing, RingElement
from integra.rings.ideals import Ideal
from integra.semifiltrations import (
    AcceleratedRule,
    ConstantRule,
    ExplicitRule,
    ExtendedRule,
    PowersRule,
    ReesHandle,
    Semifiltration,
    accelerated,
    extended,
    ideal_at,
    powers,
    product,
    rees_member,
    rees_member_payload,
    rees_product_witness,
    trivial,
    validate,
)
from integra.utils.types import HypothesisFailed, Membership, RingMismatch, SemifilValidity

adapter = TypeAdapter(Semifiltration)


class TestIdealAt:
    def test_powers(self, powers_of_two):
        assert [ideal_at(powers_of_two, i).gens for i in range(4)] == [(1,), (2,), (4,), (8,)]

    def test_constant(self, const_two):
        assert ideal_at(const_two, 0).is_unit_ideal()
        assert ideal_at(const_two, 5).gens == (2,)

    def test_trivial(self, Z):
        assert ideal_at(trivial(Z), 7).is_unit_ideal()

    def test_product(self, powers_of_two, powers_of_three):
        assert ideal_at(product(powers_of_two, powers_of_three), 2).gens == (36,)

    def test_accelerated(self, powers_of_two):
        rule = accelerated(powers_of_two, 3)
        assert ideal_at(rule, 2).gens == (64,)
        assert ideal_at(accelerated(powers_of_two, 0), 5).is_unit_ideal()

    def test_extended(self, powers_of_two, v_ring):
        rule = extended(powers_of_two, v_ring)
        assert isinstance(rule, ExtendedRule)
        assert ideal_at(rule, 2).gens == ((4,),)
        assert extended(powers_of_two, powers_of_two.ring) is powers_of_two

    def test_explicit_prefix_then_tail(self, Z, powers_of_two):
        rule = ExplicitRule(prefix=[Ideal.unit(Z), Ideal.of(Z, [3])], tail=powers_of_two)
        assert ideal_at(rule, 1).gens == (3,)
        assert ideal_at(rule, 2).gens == (4,)

    def test_negative_index(self, powers_of_two):
        with pytest.raises(ValueError):
            ideal_at(powers_of_two, -1)

    def test_no_map_to_extend_along(self, Q, Z):
        with pytest.raises(ValidationError):
            ExtendedRule(inner=powers(Ideal.of(Q, [1])), target=Z)

    def test_product_factors_share_a_ring(self, powers_of_two, Z12):
        with pytest.raises(ValidationError):
            product(powers_of_two, powers(Ideal.of(Z12, [2])))

    def test_json_descriptors(self, powers_of_two):
        rule = accelerated(powers_of_two, 2)
        dumped = rule.model_dump(mode="json", by_alias=True)
        assert dumped == {
            "semifil": "accel",
            "lambda": 2,
            "inner": {"semifil": "powers", "ideal": {"ring": {"ring": "Z"}, "gens": [2]}},
        }
        assert adapter.validate_python(dumped) == rule

    def test_unknown_tag_is_rejected(self):
        with pytest.raises(ValidationError):
            adapter.validate_python({"semifil": "filtration", "ring": {"ring": "Z"}})


class TestValidate:
    def test_powers_are_valid(self, powers_of_two):
        report = validate(powers_of_two)
        assert report.status == SemifilValidity.VALID
        assert report.line() == "VALID"
        assert report.exit_code == 0

    def test_constant_and_product_are_valid(self, const_two, powers_of_two, powers_of_three):
        assert validate(const_two).status == SemifilValidity.VALID
        assert validate(product(powers_of_two, powers_of_three), bound=4).status == SemifilValidity.VALID

    def test_first_counterexample(self, Z, powers_of_two):
        rule = ExplicitRule(prefix=[Ideal.unit(Z), Ideal.of(Z, [3])], tail=powers_of_two)
        report = validate(rule)
        assert report.status == SemifilValidity.INVALID
        assert (report.a, report.b) == (1, 1)
        assert report.line() == "INVALID 1 1 9"
        assert report.exit_code == 1

    def test_first_ideal_must_be_the_ring(self, Z, powers_of_two):
        rule = ExplicitRule(prefix=[Ideal.of(Z, [2])], tail=powers_of_two)
        assert validate(rule).line() == "INVALID 0 0 1"

    def test_bound_must_be_positive(self, powers_of_two):
        with pytest.raises(ValueError):
            validate(powers_of_two, bound=0)

    def test_undecided_ring(self, v_ring):
        rule = ConstantRule(ideal=Ideal.of(v_ring, [[0, 1], [2]]))
        assert validate(rule, bound=2).status == SemifilValidity.UNKNOWN

    def test_explicit_chain_fails_at_one_one(self, Z):
        rule = ExplicitRule(
            prefix=[Ideal.unit(Z), Ideal.of(Z, [2]), Ideal.of(Z, [8])], tail=ConstantRule(ideal=Ideal.of(Z, [8]))
        )
        assert validate(rule, bound=2).line() == "INVALID 1 1 4"

    def test_undecided_first_ideal(self, Z):
        dual_numbers = MonicQuotientRing(base=Z, mod=[0, 0, 1], var="e")
        rule = ExplicitRule(
            prefix=[Ideal.of(dual_numbers, [[0, 1]])], tail=ConstantRule(ideal=Ideal.zero_ideal(dual_numbers))
        )
        report = validate(rule, bound=1)
        assert report.status == SemifilValidity.UNKNOWN
        assert report.line() == "UNKNOWN"

    @given(st.integers(min_value=2, max_value=30), st.integers(min_value=0, max_value=3))
    def test_accelerated_powers_stay_valid(self, d, lam):
        rule = AcceleratedRule(inner=PowersRule(ideal=Ideal.of(IntegerRing(), [d])), lam=lam)
        assert validate(rule, bound=3).status == SemifilValidity.VALID


class TestRees:
    def test_membership(self, powers_of_two):
        handle = ReesHandle(semifiltration=powers_of_two)
        assert rees_member_payload(handle, (5, 2, 4)) == Membership.MEMBER
        assert rees_member_payload(handle, (5, 3)) == Membership.NOT_MEMBER
        assert rees_member_payload(handle, ()) == Membership.MEMBER

    def test_membership_checks_the_ambient_ring(self, powers_of_two, Z):
        handle = ReesHandle(semifiltration=powers_of_two)
        with pytest.raises(RingMismatch):
            rees_member(handle, RingElement(ring=PolynomialRing(base=Z, var="T"), value=[1]))
        p = RingElement(ring=handle.ambient, value=[1, 2])
        assert rees_member(handle, p) == Membership.MEMBER

    def test_variable_must_be_fresh(self, v_ring):
        with pytest.raises(ValidationError):
            ReesHandle(semifiltration=trivial(v_ring), variable="v")

    def test_closed_under_products(self, powers_of_two):
        handle = ReesHandle(semifiltration=powers_of_two)
        p = RingElement(ring=handle.ambient, value=[3, 2])
        q = RingElement(ring=handle.ambient, value=[1, 6, 4])
        assert rees_product_witness(handle, p, q) == Membership.MEMBER

    def test_product_needs_members(self, powers_of_two):
        handle = ReesHandle(semifiltration=powers_of_two)
        p = RingElement(ring=handle.ambient, value=[3, 1])
        with pytest.raises(HypothesisFailed):
            rees_product_witness(handle, p, p)

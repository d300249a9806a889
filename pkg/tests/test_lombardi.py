import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from pydantic import ValidationError

from integra.certificates import RingCertificate, SemifilCertificate, verify
from integra.lombardi import (
    BasisIndexSet,
    MembershipWitness,
    action_rows,
    extract_nu,
    joint_cert,
    lombardi_cert,
    lombardi_polynomial,
    normal_form,
    product_base_cert,
    relative_joint_cert,
    rewrite_steps,
)
from integra.constructions import two_sided_cert
from integra.rings import IntegerRing, ModularRing, MonicQuotientRing, PolynomialRing, RingElement
from integra.semifiltrations import extended
from integra.utils.types import (
    HypothesisFailed,
    IndexOutOfRange,
    MalformedCertificate,
    RelationFailed,
    VerdictStatus,
)


@pytest.fixture
def sqrt2_witness(Z, sqrt2_ring):
    """u = x and u·x = 2 with u = x = a"""
    return MembershipWitness(
        base=Z,
        n=1,
        m=1,
        mu=1,
        nu=1,
        rel1=[[0, 1, 1]],
        rel2=[[0, 0, 2]],
        algebra=sqrt2_ring,
        u=[0, 1],
        x=[0, 1],
    )


def over_variable(Z, algebra, var: str, coeffs, element, semifiltration=None):
    layer = PolynomialRing(base=Z, var=var)
    fields = dict(base=layer, algebra=algebra, element=element, coeffs=coeffs, bindings={var: [0, 1]})
    if semifiltration is None:
        return RingCertificate(**fields)
    return SemifilCertificate(**fields, semifiltration=extended(semifiltration, layer))


class TestBasis:
    def test_members_in_lexicographic_order(self):
        basis = BasisIndexSet(n=2, m=1, mu=1, nu=2)
        assert basis.members == ((0, 0), (0, 1), (0, 2), (1, 0))
        assert (1, 0) in basis
        assert (1, 1) not in basis

    @given(*(st.integers(min_value=0, max_value=4) for _ in range(4)))
    def test_size_is_the_degree(self, n, m, mu, nu):
        assert len(BasisIndexSet(n=n, m=m, mu=mu, nu=nu)) == n * mu + m * nu


class TestWitness:
    def test_ranges_are_checked(self, Z):
        with pytest.raises(ValidationError):
            MembershipWitness(base=Z, n=1, m=1, mu=1, nu=1, rel1=[[1, 0, 1]])

    def test_mu_plus_nu_positive(self, Z):
        with pytest.raises(ValidationError):
            MembershipWitness(base=Z, n=1, m=1, mu=0, nu=0)

    def test_context_needs_both_elements(self, Z, sqrt2_ring):
        with pytest.raises(ValidationError):
            MembershipWitness(base=Z, n=1, m=1, mu=1, nu=1, algebra=sqrt2_ring, u=[0, 1])

    def test_json_terms(self, sqrt2_witness):
        dumped = sqrt2_witness.model_dump(mode="json", exclude_none=True)
        assert dumped["rel1"] == [[0, 1, 1]]
        assert dumped["u"] == [0, 1]
        assert MembershipWitness.model_validate(dumped) == sqrt2_witness

    def test_relations_are_checked(self, Z, sqrt2_ring):
        w = MembershipWitness(
            base=Z, n=1, m=1, mu=1, nu=1, rel1=[[0, 1, 1]], rel2=[[0, 0, 3]], algebra=sqrt2_ring, u=[0, 1], x=[0, 1]
        )
        with pytest.raises(RelationFailed):
            lombardi_cert(w)


class TestRewriting:
    def test_normal_forms(self, sqrt2_witness):
        assert normal_form(sqrt2_witness, 1, 1) == {(0, 0): 2}
        assert normal_form(sqrt2_witness, 2, 0) == {(0, 0): 2}
        assert normal_form(sqrt2_witness, 0, 1) == {(0, 1): 1}

    def test_steps_visit_each_monomial_once(self, sqrt2_witness):
        steps = list(rewrite_steps(sqrt2_witness, 2, 0))
        assert [s.monomial for s in steps] == [(2, 0), (1, 1), (0, 0)]
        assert [s.case for s in steps] == ["relation1", "relation2", "basis"]

    def test_replacements_decrease_lexicographically(self, sqrt2_witness):
        for step in rewrite_steps(sqrt2_witness, 4, 1):
            assert all(r < step.monomial for r in step.replacements), step

    def test_x_degree_is_bounded(self, sqrt2_witness):
        with pytest.raises(IndexOutOfRange):
            normal_form(sqrt2_witness, 0, 2)

    def test_action_and_polynomial(self, sqrt2_witness):
        assert action_rows(sqrt2_witness) == ((0, 1), (2, 0))
        assert lombardi_polynomial(sqrt2_witness) == (-2, 0, 1)

    def test_certificate(self, sqrt2_witness):
        out = lombardi_cert(sqrt2_witness)
        assert out.coeffs == (-2, 0, 1)
        assert out.degree == sqrt2_witness.degree
        assert verify(out).status == VerdictStatus.VERIFIED

    def test_certificate_needs_a_context(self, Z):
        w = MembershipWitness(base=Z, n=1, m=1, mu=1, nu=1, rel1=[[0, 1, 1]], rel2=[[0, 0, 2]])
        assert lombardi_polynomial(w) == (-2, 0, 1)
        with pytest.raises(MalformedCertificate):
            lombardi_cert(w)

    @given(st.integers(min_value=-30, max_value=30))
    def test_integers_equal_to_x(self, c):
        ring = IntegerRing()
        w = MembershipWitness(
            base=ring, n=1, m=1, mu=1, nu=1, rel1=[[0, 1, 1]], rel2=[[0, 0, c * c]], algebra=ring, u=c, x=c
        )
        assert lombardi_cert(w).coeffs == (-c * c, 0, 1)


class TestJoint:
    def test_extract_nu(self, Z, sqrt2_ring):
        cx = over_variable(Z, sqrt2_ring, "x", [[0, -1], [1]], [0, 1])
        assert extract_nu(cx) == (1, ((0, 1, 1),))

    def test_joint(self, Z, sqrt2_ring):
        cx = over_variable(Z, sqrt2_ring, "x", [[0, -1], [1]], [0, 1])
        cy = over_variable(Z, sqrt2_ring, "y", [[0, -1], [1]], [0, 1])
        out = joint_cert(cx, cy, RingElement(ring=Z, value=2))
        assert out.base == Z
        assert out.coeffs == (-2, 0, 1)
        assert out.bindings is None

    def test_joint_checks_xy(self, Z, sqrt2_ring):
        cx = over_variable(Z, sqrt2_ring, "x", [[0, -1], [1]], [0, 1])
        cy = over_variable(Z, sqrt2_ring, "y", [[0, -1], [1]], [0, 1])
        with pytest.raises(HypothesisFailed):
            joint_cert(cx, cy, RingElement(ring=Z, value=3))

    def test_joint_needs_bindings(self, Z, sqrt2_ring):
        cx = over_variable(Z, sqrt2_ring, "x", [[0, -1], [1]], [0, 1])
        cy = cx.model_copy(update={"bindings": None})
        with pytest.raises(HypothesisFailed):
            joint_cert(cx, cy, RingElement(ring=Z, value=2))

    def test_product_base(self, Z, sqrt2_ring):
        cx = over_variable(Z, sqrt2_ring, "x", [[0, -1], [1]], [0, 1])
        cy = over_variable(Z, sqrt2_ring, "y", [[0, -1], [1]], [0, 1])
        out = product_base_cert(cx, cy)
        assert out.base == PolynomialRing(base=Z, var="t")
        assert out.coeffs == ((0, -1), (), (1,))
        assert out.bindings == {"t": (2,)}

    def test_relative_joint(self, Z, sqrt2_ring, powers_of_two):
        cx = over_variable(Z, sqrt2_ring, "x", [[0, -2], [1]], [0, 2], powers_of_two)
        cy = over_variable(Z, sqrt2_ring, "y", [[0, -2], [1]], [0, 2], powers_of_two)
        assert verify(cx).status == VerdictStatus.VERIFIED
        out = relative_joint_cert(cx, cy)
        t_ring = PolynomialRing(base=Z, var="t")
        assert out.base == t_ring
        assert out.coeffs == ((0, -4), (), (1,))
        assert out.bindings == {"t": (2,)}
        assert out.semifiltration == extended(powers_of_two, t_ring)
        assert verify(out).status == VerdictStatus.VERIFIED


def solved_terms(pairs, lhs: int, u: int, x: int, p: int, coefficients: list) -> list:
    """Terms over the given index pairs whose (0, 0) coefficient makes the relation hold mod p."""
    rest = [(i, j, c) for (i, j), c in zip(pairs, coefficients) if (i, j) != (0, 0)]
    c00 = (lhs - sum(c * pow(u, i, p) * pow(x, j, p) for i, j, c in rest)) % p
    return [(0, 0, c00)] + rest


def scalar_witness(data, p: int, n: int, m: int, mu: int, nu: int) -> MembershipWitness:
    """A witness whose relations hold for scalar u and x in Z/p."""
    residues = st.integers(min_value=0, max_value=p - 1)
    u, x = data.draw(residues), data.draw(residues)
    pairs1 = [(i, j) for i in range(n) for j in range(nu + 1)]
    pairs2 = sorted({(i, j) for i in range(m) for j in range(mu + 1)} | {(i, j) for i in range(m + 1) for j in range(mu)})
    rel1 = solved_terms(pairs1, pow(u, n, p), u, x, p, data.draw(st.lists(residues, min_size=len(pairs1), max_size=len(pairs1))))
    rel2 = solved_terms(
        pairs2, pow(u, m, p) * pow(x, mu, p), u, x, p, data.draw(st.lists(residues, min_size=len(pairs2), max_size=len(pairs2)))
    )
    ring = ModularRing(m=p)
    return MembershipWitness(base=ring, n=n, m=m, mu=mu, nu=nu, rel1=rel1, rel2=rel2, algebra=ring, u=u, x=x)


# realizable shapes: n >= 1 for relation one, m + mu >= 1 for relation two
SHAPES = [
    (n, m, mu, nu)
    for n in range(1, 4)
    for m in range(4)
    for mu in range(4)
    for nu in range(4)
    if mu + nu >= 1 and m + mu >= 1
]


class TestFiniteModels:
    @pytest.mark.parametrize("n, m, mu, nu", SHAPES)
    @settings(max_examples=3, deadline=None, derandomize=True)
    @given(data=st.data())
    def test_normal_form_matches_evaluation_mod_five(self, n, m, mu, nu, data):
        w = scalar_witness(data, 5, n, m, mu, nu)
        u, x = w.u, w.x
        for i in range(3 * max(n, m) + 1):
            for j in range(mu + nu):
                combination = normal_form(w, i, j)
                assert set(combination) <= set(w.basis().members)
                value = sum(c * pow(u, a, 5) * pow(x, b, 5) for (a, b), c in combination.items()) % 5
                assert value == pow(u, i, 5) * pow(x, j, 5) % 5, (i, j)

    @settings(max_examples=250, deadline=None, derandomize=True)
    @given(st.data(), st.sampled_from(SHAPES), st.sampled_from([2, 3, 5, 7, 11, 13]))
    def test_certificates_vanish_in_every_model(self, data, shape, p):
        w = scalar_witness(data, p, *shape)
        out = lombardi_cert(w)
        assert out.degree == w.degree
        assert out.coeffs[-1] == 1
        assert verify(out).status == VerdictStatus.VERIFIED


class TestTwoSidedShape:
    def test_silver_ratio_agrees_with_two_sided(self, Z):
        # u = 1 + v and u·v = 3v + 1 with v^2 = 2v + 1
        algebra = MonicQuotientRing(base=Z, mod=[-1, -2, 1], var="v")
        w = MembershipWitness(
            base=Z,
            n=1,
            m=1,
            mu=1,
            nu=1,
            rel1=[[0, 0, 1], [0, 1, 1]],
            rel2=[[0, 1, 3], [0, 0, 1]],
            algebra=algebra,
            u=[1, 1],
            x=[0, 1],
        )
        ours = lombardi_cert(w)
        theirs = two_sided_cert(
            Z, algebra, RingElement(ring=algebra, value=[0, 1]), RingElement(ring=algebra, value=[1, 1]), [1, 1], [3, 1]
        )
        assert ours.degree == theirs.degree == 2
        assert ours.element == theirs.element
        assert verify(ours).status == verify(theirs).status == VerdictStatus.VERIFIED

    @settings(max_examples=100, deadline=None, derandomize=True)
    @given(st.data(), st.integers(min_value=1, max_value=3), st.integers(min_value=1, max_value=3))
    def test_random_two_sided_data(self, data, alpha, beta):
        p = 7
        residues = st.integers(min_value=0, max_value=p - 1)
        ring = ModularRing(m=p)
        v = data.draw(residues)
        s = data.draw(st.lists(residues, min_size=alpha + 1, max_size=alpha + 1))
        u = sum(c * pow(v, k, p) for k, c in enumerate(s)) % p
        head = data.draw(st.lists(residues, min_size=beta, max_size=beta))
        t = head + [(u * pow(v, beta, p) - sum(c * pow(v, beta - k, p) for k, c in enumerate(head))) % p]
        w = MembershipWitness(
            base=ring,
            n=1,
            m=1,
            mu=beta,
            nu=alpha,
            rel1=[[0, j, c] for j, c in enumerate(s)],
            rel2=[[0, beta - k, c] for k, c in enumerate(t)],
            algebra=ring,
            u=u,
            x=v,
        )
        ours = lombardi_cert(w)
        theirs = two_sided_cert(ring, ring, RingElement(ring=ring, value=v), RingElement(ring=ring, value=u), s, t)
        assert ours.degree == theirs.degree == alpha + beta
        assert verify(ours).status == verify(theirs).status == VerdictStatus.VERIFIED

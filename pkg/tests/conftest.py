import pytest

from integra.certificates import RingCertificate, attach_semifiltration
from integra.rings import IntegerRing, ModularRing, MonicQuotientRing, PolynomialRing, RationalRing
from integra.rings.ideals import Ideal
from integra.semifiltrations import ConstantRule, PowersRule


@pytest.fixture
def Z():
    return IntegerRing()


@pytest.fixture
def Q():
    return RationalRing()


@pytest.fixture
def Z12():
    return ModularRing(m=12)


@pytest.fixture
def sqrt2_ring(Z):
    """Z[a]/(a^2 - 2)"""
    return MonicQuotientRing(base=Z, mod=[-2, 0, 1], var="a")


@pytest.fixture
def sqrt2_sqrt3_ring(sqrt2_ring):
    """Z[a]/(a^2 - 2)[b]/(b^2 - 3)"""
    return MonicQuotientRing(base=sqrt2_ring, mod=[[-3], [], [1]], var="b")


@pytest.fixture
def fourth_root_ring(Z):
    """Z[r]/(r^4 - 2)"""
    return MonicQuotientRing(base=Z, mod=[-2, 0, 0, 0, 1], var="r")


@pytest.fixture
def v_ring(Z):
    return PolynomialRing(base=Z, var="v")


@pytest.fixture
def sqrt2_cert(Z, sqrt2_ring):
    return RingCertificate(base=Z, algebra=sqrt2_ring, element=[0, 1], coeffs=[-2, 0, 1])


@pytest.fixture
def x_cert(Z, sqrt2_sqrt3_ring):
    """sqrt(2) inside the biquadratic ring"""
    return RingCertificate(base=Z, algebra=sqrt2_sqrt3_ring, element=[[0, 1]], coeffs=[-2, 0, 1])


@pytest.fixture
def y_cert(Z, sqrt2_sqrt3_ring):
    """sqrt(3) inside the biquadratic ring"""
    return RingCertificate(base=Z, algebra=sqrt2_sqrt3_ring, element=[[], [1]], coeffs=[-3, 0, 1])


@pytest.fixture
def powers_of_two(Z):
    return PowersRule(ideal=Ideal.of(Z, [2]))


@pytest.fixture
def powers_of_three(Z):
    return PowersRule(ideal=Ideal.of(Z, [3]))


@pytest.fixture
def const_two(Z):
    return ConstantRule(ideal=Ideal.of(Z, [2]))


@pytest.fixture
def sqrt2_over_const_two(sqrt2_cert, const_two):
    return attach_semifiltration(sqrt2_cert, const_two)

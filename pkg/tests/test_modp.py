import pytest
from hypothesis import given, strategies as st

from equivariant_sw.errors import ZeroDivisionModP
from equivariant_sw.modp import PrimeModulus, Residue, as_exponent, inv, ratio

from conftest import brute_inverse, brute_quotient
from strategies import SMALL_PRIMES, primes, residues


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_inv_one(p):
    assert inv(Residue(1, p)) == Residue(1, p)


@pytest.mark.parametrize("a,p,expected", [(4, 5, 4), (2, 3, 2)])
def test_inv_examples(a, p, expected):
    assert brute_inverse(a, p) == expected
    assert inv(Residue(a, p)).value == expected


def test_inv_zero_raises():
    with pytest.raises(ZeroDivisionModP):
        inv(Residue(0, 5))


@pytest.mark.parametrize(
    "num,den,p,expected",
    [
        ([2, 3], [1, 4], 5, 4),
        ([], [], 7, 1),
        ([1], [2], 3, 2),
    ],
)
def test_ratio_examples(num, den, p, expected):
    assert ratio([Residue(x, p) for x in num], [Residue(x, p) for x in den], p).value == expected


def test_ratio_matches_brute_force():
    for p in SMALL_PRIMES:
        for n in range(p):
            for d in range(1, p):
                assert ratio([n], [d], p).value == brute_quotient(n, d, p)


def test_ratio_zero_denominator():
    with pytest.raises(ZeroDivisionModP):
        ratio([1], [2, 5], 5)


def test_ratio_requires_modulus_for_plain_ints():
    with pytest.raises(ValueError):
        ratio([1], [2])


def test_as_exponent_examples():
    p = PrimeModulus(5)
    assert as_exponent(p(2)) == 2
    assert as_exponent(p(3) * inv(p(4))) == 2
    assert as_exponent(p(2) * inv(p(4))) == 3
    with pytest.raises(ZeroDivisionModP):
        as_exponent(p(0))


@pytest.mark.parametrize("bad", [1, 2, 4, 9, 15, 0, -3])
def test_modulus_rejects_non_odd_primes(bad):
    with pytest.raises(ValueError):
        PrimeModulus(bad)


def test_negative_values_normalize():
    assert Residue(-1, 3).value == 2
    assert Residue(-2, 3) == Residue(1, 3)
    assert Residue(-1, 3) == 2


def test_mixed_moduli_rejected():
    with pytest.raises(ValueError):
        Residue(1, 3) + Residue(1, 5)


@given(residues(nonzero=True))
def test_inverse_properties(pa):
    p, a = pa
    x = Residue(a, p)
    assert inv(inv(x)) == x
    assert (x * inv(x)).value == 1


@given(primes, st.data())
def test_ratio_permutation_and_cancellation(p, data):
    nz = st.integers(1, p - 1)
    num = data.draw(st.lists(st.integers(0, p - 1), max_size=6))
    den = data.draw(st.lists(nz, max_size=6))
    extra = data.draw(st.lists(nz, max_size=3))
    base = ratio(num, den, p)
    assert ratio(data.draw(st.permutations(num)), data.draw(st.permutations(den)), p) == base
    assert ratio(num + extra, den + extra, p) == base


@given(residues(nonzero=True))
def test_as_exponent_range(pa):
    p, a = pa
    e = as_exponent(Residue(a, p))
    assert 1 <= e <= p - 1
    assert (e - a) % p == 0


@given(primes, st.integers(-1000, 1000), st.integers(-1000, 1000))
def test_field_ops_match_integer_arithmetic(p, x, y):
    a, b = Residue(x, p), Residue(y, p)
    assert (a + b).value == (x + y) % p
    assert (a - b).value == (x - y) % p
    assert (a * b).value == (x * y) % p
    assert (-a).value == (-x) % p
    if y % p:
        assert (a / b) * b == a

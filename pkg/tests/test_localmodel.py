import itertools
import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from equivariant_sw.errors import (
    DimensionMismatchError,
    EmptyStratumError,
    InvalidMatchingError,
    PositiveDimensionError,
)
from equivariant_sw.localmodel import (
    COMPUTED,
    NEGATIVE_DIMENSION_ZERO,
    CancellationData,
    all_matchings,
    build_local_model,
    cancel,
    canonical_matching,
    multiplicity,
    multiplicity_from_cancellation,
    psi_exponents,
)
from equivariant_sw.modp import PrimeModulus
from equivariant_sw.reps import ModelSpec, dim_d_lift

from conftest import brute_quotient
from strategies import balanced_models, models


def residual_data(p, m, n):
    return CancellationData(PrimeModulus(p), (0,) * p, tuple(m), tuple(n))


def random_residuals(rng, p, size):
    """Random disjoint residual multisets I, I' of the given size."""
    weights = list(range(1, p))
    rng.shuffle(weights)
    cut = rng.randint(1, len(weights) - 1)
    src, dst = weights[:cut], weights[cut:]
    m, n = [0] * p, [0] * p
    for _ in range(size):
        m[rng.choice(src)] += 1
        n[rng.choice(dst)] += 1
    return residual_data(p, m, n)


def brute_exponent(i, o, p):
    """Smallest e in 1..p-1 with e * i = o (mod p)."""
    return next(e for e in range(1, p) if (e * i - o) % p == 0)


def test_build_local_model_example2(ex2_raw):
    lm = build_local_model(ex2_raw, 1)
    assert lm.aprime.mult == (0, 2, 1)
    assert lm.bprime.mult == (0, 2, 1)
    lm = build_local_model(ex2_raw, 2)
    assert lm.aprime.mult == (0, 1, 2)
    assert lm.bprime.mult == (0, 2, 1)


def test_build_local_model_zero_shift():
    m = ModelSpec.build(5, [2, 1, 3, 0, 2], [1, 2, 0, 1, 1], h0=2)
    lm = build_local_model(m, 0)
    for k in range(1, 5):
        assert lm.aprime[k] == m.a[k]
        assert lm.bprime[k] == m.b[k]
    assert lm.aprime[0] == lm.bprime[0] == 0


def test_build_local_model_empty_stratum():
    m = ModelSpec.build(3, [0, 2, 0], [0, 0, 0], h0=3)
    with pytest.raises(EmptyStratumError):
        build_local_model(m, 0)
    assert build_local_model(m, 0, allow_empty=True).j == 0


def test_rprime_is_carried_not_cancelled():
    m = ModelSpec.build(3, [1, 2, 2], [1, 1, 1], h0=1, h=[0, 1, 0], r=[0, 2, 1])
    lm = build_local_model(m, 2)
    assert lm.rprime_dim == 3
    assert cancel(lm).residual_in == (2,)


def test_cancel_examples(ex2_raw, z5):
    data = cancel(build_local_model(ex2_raw, 1))
    assert data.residual_in == () and data.residual_out == ()
    data = cancel(build_local_model(ex2_raw, 2))
    assert data.residual_in == (2,) and data.residual_out == (1,)
    assert data.e == (0, 1, 1)
    data = cancel(build_local_model(z5, 0))
    assert data.residual_in == (1, 4) and data.residual_out == (2, 3)
    assert not set(data.residual_in) & set(data.residual_out)


def test_cancel_dimension_mismatch():
    # d(c, G_0) = 2*2 - 4 = 0 but d(c) = 2*3 - 4 != 0
    m = ModelSpec.build(3, [3, 1, 0], [1, 0, 0], h0=3)
    with pytest.raises(DimensionMismatchError):
        cancel(build_local_model(m, 0))
    with pytest.raises(DimensionMismatchError):
        multiplicity(m, 0)


def test_psi_exponents_examples(z5):
    data = cancel(build_local_model(z5, 0))
    assert psi_exponents(data, ((1, 2), (4, 3))) == (2, 2)
    assert psi_exponents(data, ((4, 2), (1, 3))) == (3, 3)
    assert psi_exponents(residual_data(5, [0] * 5, [0] * 5), ()) == ()


def test_psi_exponents_invalid_matching(z5):
    data = cancel(build_local_model(z5, 0))
    with pytest.raises(InvalidMatchingError):
        psi_exponents(data, ((1, 2),))
    with pytest.raises(InvalidMatchingError):
        psi_exponents(data, ((1, 2), (1, 3)))


def test_multiplicity_example2(ex2_raw):
    res = [multiplicity(ex2_raw, j) for j in range(3)]
    assert [r.value.value for r in res] == [0, 1, 2]
    assert res[0].reason == NEGATIVE_DIMENSION_ZERO
    assert res[1].reason == res[2].reason == COMPUTED
    assert res[2].exponents == (brute_exponent(2, 1, 3),)


def test_multiplicity_example1(ex1_raw):
    assert [multiplicity(ex1_raw, j).value.value for j in range(3)] == [1, 0, 0]


def test_multiplicity_z5(z5):
    r = multiplicity(z5, 0)
    assert r.value.value == 4
    assert r.exponents == (2, 2)


def test_multiplicity_positive_dimension():
    m = ModelSpec.build(3, [4, 0, 0], [0, 1, 1], h0=3)
    with pytest.raises(PositiveDimensionError):
        multiplicity(m, 0)


@given(models())
def test_empty_strata_have_negative_dimension(model):
    # a_j = 0 forces d(c, G_j) = -2 b_j - 1 - h0 < 0, so m_j = 0 there
    for j in range(model.order):
        if model.a[j] == 0:
            assert dim_d_lift(model, j) < 0
            assert multiplicity(model, j).reason == NEGATIVE_DIMENSION_ZERO


def test_matching_independence_exhaustive():
    """Every matching of every residual pair of size <= 4 for p in {3, 5, 7}."""
    for p in (3, 5, 7):
        nonzero = range(1, p)
        for size in range(1, 5):
            for src in itertools.combinations_with_replacement(nonzero, size):
                for dst in itertools.combinations_with_replacement(nonzero, size):
                    if set(src) & set(dst):
                        continue
                    m = [src.count(k) for k in range(p)]
                    n = [dst.count(k) for k in range(p)]
                    data = residual_data(p, m, n)
                    expected = brute_quotient(math.prod(dst) % p, math.prod(src) % p, p)
                    values = {multiplicity_from_cancellation(data, mt).value for mt in all_matchings(data)}
                    assert values == {expected}
                    for mt in all_matchings(data):
                        exps = psi_exponents(data, mt)
                        assert math.prod(exps) % p == expected
                        assert all(e == brute_exponent(i, o, p) for e, (i, o) in zip(exps, mt))


def test_matching_independence_random_500():
    rng = random.Random(20261016)
    for _ in range(500):
        p = rng.choice([5, 7, 11, 13])
        size = rng.randint(5, 9)
        data = random_residuals(rng, p, size)
        dst = list(data.residual_out)
        rng.shuffle(dst)
        mt = tuple(zip(data.residual_in, dst))
        expected = brute_quotient(math.prod(data.residual_out) % p, math.prod(data.residual_in) % p, p)
        assert multiplicity_from_cancellation(data, mt).value == expected
        assert math.prod(psi_exponents(data, mt)) % p == expected


def test_all_matchings_count():
    data = residual_data(7, [0, 2, 1, 0, 0, 0, 0], [0, 0, 0, 1, 1, 1, 0])
    assert len(list(all_matchings(data))) == 6
    data = residual_data(7, [0, 1, 1, 1, 0, 0, 0], [0, 0, 0, 0, 2, 1, 0])
    assert len(list(all_matchings(data))) == 3


@settings(max_examples=200)
@given(balanced_models())
def test_consistency_on_balanced_models(mj):
    model, j = mj
    assert dim_d_lift(model, j) == 0
    data = cancel(build_local_model(model, j, allow_empty=True))
    assert sum(data.m) == sum(data.n)
    assert 0 not in data.residual_in and 0 not in data.residual_out
    exps = psi_exponents(data, canonical_matching(data))
    assert all(1 <= e < model.order for e in exps)


@settings(max_examples=200)
@given(balanced_models(), st.integers(0, 6), st.integers(1, 3))
def test_rank_independence(mj, k, bump):
    model, j = mj
    before = multiplicity(model, j).value
    k %= model.order
    bumped = ModelSpec(
        model.p, model.a.bumped(k, bump), model.b.bumped(k, bump), model.h0, model.h
    )
    assert multiplicity(bumped, j).value == before


@pytest.mark.parametrize("name", ["k3-fermat-z3", "zhang-z3", "z5-local"])
def test_fixture_rank_independence(name):
    from equivariant_sw import fixtures

    fx = fixtures.get(name)
    for rank in (1, 2, 3):
        m = fx.builder(rank)
        assert tuple(multiplicity(m, j).value.value for j in range(m.order)) == fx.expected_mult

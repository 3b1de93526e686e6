"""Local models at fixed strata and the multiplicity of a fixed zero.

At a zero on the stratum B_j the normal directions are ``V' = sum_{k != 0} C_k^{a'_k} + R'``
and the non-invariant target is ``W' = sum_{k != 0} C_k^{b'_k} + R'`` with

    a'_k = a_{k+j},     b'_k = b_{k+j} + h_k      (indices mod p).

Common summands cancel through a linear G-map; the residual weights are
matched pairwise and realized by ``z -> z^(i'/i)``. The multiplicity is
``prod i' / prod i`` in F_p.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import permutations
from typing import Iterator, Optional

from equivariant_sw.errors import (
    DimensionMismatchError,
    EmptyStratumError,
    InvalidMatchingError,
    PositiveDimensionError,
)
from equivariant_sw.modp import PrimeModulus, Residue, as_exponent, ratio
from equivariant_sw.reps import ModelSpec, WeightVector, dim_d_lift

NEGATIVE_DIMENSION_ZERO = "negative-dimension-zero"
COMPUTED = "computed"


@dataclass(frozen=True)
class LocalModel:
    j: int
    aprime: WeightVector
    bprime: WeightVector
    rprime_dim: int = 0

    def __post_init__(self):
        if self.aprime[0] != 0 or self.bprime[0] != 0:
            raise ValueError("local model carries no weight-0 summand")

    @property
    def modulus(self) -> PrimeModulus:
        return self.aprime.modulus


@dataclass(frozen=True)
class CancellationData:
    modulus: PrimeModulus
    e: tuple[int, ...]
    m: tuple[int, ...]
    n: tuple[int, ...]

    @property
    def p(self) -> int:
        return self.modulus.p

    @property
    def residual_in(self) -> tuple[int, ...]:
        """The multiset I as a sorted tuple of weights (weight k repeated m_k times)."""
        return tuple(k for k, mk in enumerate(self.m) for _ in range(mk))

    @property
    def residual_out(self) -> tuple[int, ...]:
        return tuple(k for k, nk in enumerate(self.n) for _ in range(nk))

    @property
    def size(self) -> int:
        return sum(self.m)


Matching = tuple[tuple[int, int], ...]


def build_local_model(model: ModelSpec, j: int, *, allow_empty: bool = False) -> LocalModel:
    p = model.order
    j %= p
    if model.a[j] == 0 and not allow_empty:
        raise EmptyStratumError(f"stratum B_{j} is empty (a[{j}] = 0)")
    ap = [0] * p
    bp = [0] * p
    for k in range(1, p):
        ap[k] = model.a[k + j]
        bp[k] = model.b[k + j] + model.h[k]
    return LocalModel(
        j=j,
        aprime=WeightVector(model.p, tuple(ap)),
        bprime=WeightVector(model.p, tuple(bp)),
        rprime_dim=model.r.total(),
    )


def cancel(local: LocalModel) -> CancellationData:
    e = tuple(min(x, y) for x, y in zip(local.aprime, local.bprime))
    m = tuple(x - ek for x, ek in zip(local.aprime, e))
    n = tuple(y - ek for y, ek in zip(local.bprime, e))
    if sum(m) != sum(n):
        raise DimensionMismatchError(
            f"stratum B_{local.j}: dim V_r = {sum(m)} but dim W_r = {sum(n)} "
            "(model has d(c) != 0 or d(c,G_j) != 0)"
        )
    return CancellationData(local.modulus, e, m, n)


def canonical_matching(data: CancellationData) -> Matching:
    """Pair residual weights in ascending order on both sides."""
    return tuple(zip(data.residual_in, data.residual_out))


def all_matchings(data: CancellationData) -> Iterator[Matching]:
    """Every distinct pairing of the residual multisets (factorial growth: keep size small)."""
    src = data.residual_in
    seen = set()
    for perm in permutations(data.residual_out):
        if perm in seen:
            continue
        seen.add(perm)
        yield tuple(zip(src, perm))


def _check_matching(data: CancellationData, matching: Matching) -> None:
    srcs = Counter(i for i, _ in matching)
    dsts = Counter(o for _, o in matching)
    if srcs != Counter(data.residual_in):
        raise InvalidMatchingError(f"sources {sorted(srcs.elements())} != I {data.residual_in}")
    if dsts != Counter(data.residual_out):
        raise InvalidMatchingError(f"targets {sorted(dsts.elements())} != I' {data.residual_out}")
    for i, o in matching:
        if i % data.p == 0 or o % data.p == 0:
            raise InvalidMatchingError(f"weight-0 residual in pair ({i}, {o})")


def psi_exponents(data: CancellationData, matching: Matching) -> tuple[int, ...]:
    """Exponents ``i'_k / i_k`` in F_p, as integers in {1, ..., p-1}."""
    _check_matching(data, matching)
    return tuple(
        as_exponent(Residue(o, data.modulus) / Residue(i, data.modulus)) for i, o in matching
    )


@dataclass(frozen=True)
class MultiplicityResult:
    j: int
    value: Residue
    reason: str
    d_lift: int
    exponents: tuple[int, ...] = ()
    matching: Matching = ()
    empty_stratum: bool = False
    cancellation: Optional[CancellationData] = None

    @property
    def nonzero(self) -> bool:
        return self.value.value != 0


def multiplicity_from_cancellation(data: CancellationData, matching: Matching | None = None) -> Residue:
    if matching is None:
        matching = canonical_matching(data)
    _check_matching(data, matching)
    return ratio([o for _, o in matching], [i for i, _ in matching], data.modulus)


def multiplicity(model: ModelSpec, j: int) -> MultiplicityResult:
    p = model.order
    j %= p
    d = dim_d_lift(model, j)
    if d > 0:
        raise PositiveDimensionError(f"d(c,G_{j}) = {d} > 0: multiplicity undefined")
    if d < 0:
        return MultiplicityResult(j, Residue(0, model.p), NEGATIVE_DIMENSION_ZERO, d)
    data = cancel(build_local_model(model, j, allow_empty=True))
    matching = canonical_matching(data)
    exps = psi_exponents(data, matching)
    value = multiplicity_from_cancellation(data, matching)
    assert value == ratio(exps, [], model.p)
    return MultiplicityResult(
        j=j,
        value=value,
        reason=COMPUTED,
        d_lift=d,
        exponents=exps,
        matching=matching,
        empty_stratum=model.a[j] == 0,
        cancellation=data,
    )


def multiplicities(model: ModelSpec) -> tuple[MultiplicityResult, ...]:
    return tuple(multiplicity(model, j) for j in range(model.order))

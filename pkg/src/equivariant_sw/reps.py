"""Weight bookkeeping for Z_p x S^1 representations.

A model is the weight data of a finite-dimensional approximation

    f_0 : V + R -> W + R + H

where ``V = sum_j C_j^{a_j}``, ``W = sum_j C_j^{b_j}``, ``H = H_0 + H'`` with
``H' = sum_k C_k^{h_k}`` and ``R = R_0 + R'``. Everything here is exact
integer arithmetic; b_1 = 0 throughout.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Optional, Sequence

from equivariant_sw.errors import StructuralError
from equivariant_sw.modp import PrimeModulus


@dataclass(frozen=True)
class WeightVector:
    """Multiplicities ``mult[j]`` of the weight-j representation C_j of Z_p."""

    modulus: PrimeModulus
    mult: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "mult", tuple(int(m) for m in self.mult))
        if len(self.mult) != self.modulus.p:
            raise StructuralError(
                "mult", f"expected {self.modulus.p} entries, got {len(self.mult)}"
            )
        for k, m in enumerate(self.mult):
            if m < 0:
                raise StructuralError(f"mult[{k}]", f"negative multiplicity {m}")

    @classmethod
    def of(cls, p: PrimeModulus | int, mult: Sequence[int]) -> "WeightVector":
        modulus = p if isinstance(p, PrimeModulus) else PrimeModulus(p)
        return cls(modulus, tuple(mult))

    @classmethod
    def zeros(cls, p: PrimeModulus | int) -> "WeightVector":
        modulus = p if isinstance(p, PrimeModulus) else PrimeModulus(p)
        return cls(modulus, (0,) * modulus.p)

    @property
    def p(self) -> int:
        return self.modulus.p

    def __getitem__(self, k: int) -> int:
        return self.mult[k % self.p]

    def __iter__(self):
        return iter(self.mult)

    def __len__(self):
        return len(self.mult)

    def total(self) -> int:
        return sum(self.mult)

    def shifted(self, j: int) -> "WeightVector":
        """Multiplicities of ``self (x) C_{-j}``: entry k is ``mult[(k + j) mod p]``."""
        p = self.p
        return WeightVector(self.modulus, tuple(self.mult[(k + j) % p] for k in range(p)))

    def bumped(self, k: int, by: int = 1) -> "WeightVector":
        m = list(self.mult)
        m[k % self.p] += by
        return WeightVector(self.modulus, tuple(m))

    def to_list(self) -> list[int]:
        return list(self.mult)


@dataclass(frozen=True)
class ModelSpec:
    """Weight data of one equivariant finite-dimensional model, plus optional SW values.

    ``sw_lift[j]`` is SW(X, c, G_j); ``None`` entries are unknown. ``chamber`` is an
    opaque label attached to the value set (only meaningful when ``h0 == 1``).
    """

    p: PrimeModulus
    a: WeightVector
    b: WeightVector
    h0: int
    h: WeightVector
    r0: int = 0
    r: Optional[WeightVector] = None
    label: str = ""
    sw_total: Optional[int] = None
    sw_lift: Optional[tuple[Optional[int], ...]] = None
    chamber: Optional[str] = None

    def __post_init__(self):
        p = self.p.p
        if self.r is None:
            object.__setattr__(self, "r", WeightVector.zeros(self.p))
        for name in ("a", "b", "h", "r"):
            wv = getattr(self, name)
            if wv.modulus != self.p:
                raise StructuralError(name, f"weight vector is mod {wv.p}, model is mod {p}")
        for name in ("h0", "r0"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int) or v < 0:
                raise StructuralError(name, f"must be a non-negative integer, got {v!r}")
        if self.h[0] != 0:
            raise StructuralError("h[0]", "H' has no weight-0 part; put fixed directions in h0")
        if self.r[0] != 0:
            raise StructuralError("r[0]", "R' has no weight-0 part; put fixed directions in r0")
        if self.sw_lift is not None:
            lifts = tuple(None if v is None else int(v) for v in self.sw_lift)
            if len(lifts) != p:
                raise StructuralError("sw.lifts", f"expected {p} entries, got {len(lifts)}")
            object.__setattr__(self, "sw_lift", lifts)

    @classmethod
    def build(
        cls,
        p: int,
        a: Sequence[int],
        b: Sequence[int],
        h0: int,
        h: Sequence[int] | None = None,
        r0: int = 0,
        r: Sequence[int] | None = None,
        *,
        label: str = "",
        sw_total: int | None = None,
        sw_lift: Sequence[int | None] | None = None,
        chamber: str | None = None,
    ) -> "ModelSpec":
        modulus = PrimeModulus(p)
        return cls(
            p=modulus,
            a=WeightVector.of(modulus, a),
            b=WeightVector.of(modulus, b),
            h0=h0,
            h=WeightVector.of(modulus, h) if h is not None else WeightVector.zeros(modulus),
            r0=r0,
            r=WeightVector.of(modulus, r) if r is not None else WeightVector.zeros(modulus),
            label=label,
            sw_total=sw_total,
            sw_lift=tuple(sw_lift) if sw_lift is not None else None,
            chamber=chamber,
        )

    @property
    def order(self) -> int:
        return self.p.p

    @property
    def b_plus(self) -> int:
        return self.h0 + 2 * self.h.total()

    @property
    def b_plus_fixed(self) -> int:
        return self.h0

    def with_sw(self, total=None, lifts=None, chamber=None) -> "ModelSpec":
        return replace(
            self,
            sw_total=total,
            sw_lift=tuple(lifts) if lifts is not None else None,
            chamber=chamber,
        )


def index_g0(model: ModelSpec) -> tuple[int, ...]:
    """The G_0-index of the Dirac operator as the virtual weight vector ``(a_j - b_j)_j``."""
    return tuple(x - y for x, y in zip(model.a, model.b))


def twist(model: ModelSpec, j: int) -> ModelSpec:
    """Re-base the model on the lift G_j: spinor weights shift by -j, forms are untouched.

    SW values follow the relabelling: lift k of the result is lift k + j of the input.
    """
    p = model.order
    j %= p
    if j == 0:
        return model
    lifts = None
    if model.sw_lift is not None:
        lifts = tuple(model.sw_lift[(k + j) % p] for k in range(p))
    return replace(
        model,
        a=model.a.shifted(j),
        b=model.b.shifted(j),
        sw_lift=lifts,
        label=f"{model.label}@twist{j}" if model.label else f"twist{j}",
    )


def dim_d(model: ModelSpec) -> int:
    """Virtual dimension d(c) = 2 ind_C D - (1 + b_+)."""
    return 2 * sum(index_g0(model)) - (1 + model.b_plus)


def dim_d_lift(model: ModelSpec, j: int) -> int:
    """Virtual dimension d(c, G_j) = 2 (a_j - b_j) - (1 + b_+^G)."""
    return 2 * (model.a[j] - model.b[j]) - (1 + model.h0)


@dataclass(frozen=True)
class StratumEntry:
    j: int
    index: int
    d_lift: int
    nonempty: bool
    stratum_dim: Optional[int]  # real dim of R_+ x P(C_j^{a_j}) x R_0; None when empty


@dataclass(frozen=True)
class LiftIndexReport:
    d: int
    strata: tuple[StratumEntry, ...]

    @property
    def nonempty(self) -> tuple[int, ...]:
        return tuple(s.j for s in self.strata if s.nonempty)

    @property
    def d_lifts(self) -> tuple[int, ...]:
        return tuple(s.d_lift for s in self.strata)


def fixed_strata(model: ModelSpec) -> LiftIndexReport:
    strata = []
    for j in range(model.order):
        aj = model.a[j]
        strata.append(
            StratumEntry(
                j=j,
                index=aj - model.b[j],
                d_lift=dim_d_lift(model, j),
                nonempty=aj > 0,
                stratum_dim=2 * aj - 1 + model.r0 if aj > 0 else None,
            )
        )
    return LiftIndexReport(d=dim_d(model), strata=tuple(strata))


PASS, WARN, FAIL = "pass", "warn", "fail"


@dataclass(frozen=True)
class Check:
    name: str
    status: str
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[Check, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        """True when no hypothesis fails (warnings allowed)."""
        return all(c.status != FAIL for c in self.checks)

    @property
    def theorem_strict(self) -> bool:
        return all(c.status == PASS for c in self.checks)

    @property
    def chamber_mode(self) -> bool:
        return any(c.name == "b_plus_fixed" and c.status == WARN for c in self.checks)

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def validate(model: ModelSpec) -> ValidationReport:
    """Check the hypotheses of the congruence theorem against the weight data.

    Structural problems raise :class:`StructuralError` at construction time, so
    anything reaching this function is structurally sound.
    """
    p = model.order
    checks = [Check("p_odd_prime", PASS, f"p = {p}")]

    bp = model.b_plus
    checks.append(Check("b_plus", PASS if bp >= 2 else FAIL, f"b_+ = {bp}"))

    if model.h0 >= 2:
        checks.append(Check("b_plus_fixed", PASS, f"b_+^G = {model.h0}"))
    elif model.h0 == 1:
        checks.append(
            Check(
                "b_plus_fixed",
                WARN,
                "b_+^G = 1: invariants depend on chambers; checking per chamber",
            )
        )
    else:
        checks.append(Check("b_plus_fixed", FAIL, "b_+^G = 0: no reducible-avoiding perturbation"))

    d = dim_d(model)
    checks.append(Check("d_zero", PASS if d == 0 else FAIL, f"d(c) = {d}"))

    d_lifts = [dim_d_lift(model, j) for j in range(p)]
    bad = [j for j, dj in enumerate(d_lifts) if dj > 0]
    checks.append(
        Check(
            "d_lift_nonpositive",
            FAIL if bad else PASS,
            f"d(c,G_j) = {tuple(d_lifts)}" + (f"; positive at j = {bad}" if bad else ""),
        )
    )
    return ValidationReport(tuple(checks))

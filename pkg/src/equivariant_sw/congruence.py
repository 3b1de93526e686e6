"""Both sides of SW(X,c) = sum_j m_j SW(X,c,G_j) (mod p) and a verdict."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from equivariant_sw.errors import OverdeterminedError, UnderdeterminedError
from equivariant_sw.localmodel import MultiplicityResult, multiplicities
from equivariant_sw.modp import Residue
from equivariant_sw.reps import ModelSpec, validate

HOLDS, FAILS, UNDERDETERMINED = "holds", "fails", "underdetermined"


@dataclass(frozen=True)
class CongruenceReport:
    p: int
    multiplicities: tuple[MultiplicityResult, ...]
    lhs: Optional[Residue]
    rhs: Optional[Residue]
    verdict: str
    chamber: Optional[str] = None
    missing: tuple[int, ...] = ()
    # (j, m_j, SW(X,c,G_j)) for every lift contributing to the right-hand side
    terms: tuple[tuple[int, int, int], ...] = ()
    warnings: tuple[str, ...] = field(default_factory=tuple)

    @property
    def mult_values(self) -> tuple[int, ...]:
        return tuple(m.value.value for m in self.multiplicities)


def congruence_report(model: ModelSpec) -> CongruenceReport:
    report = validate(model)
    warnings = tuple(c.detail for c in report.checks if c.status != "pass")
    mults = multiplicities(model)
    p = model.order

    lhs = Residue(model.sw_total, model.p) if model.sw_total is not None else None
    lifts = model.sw_lift or (None,) * p
    missing, terms = [], []
    for m in mults:
        if not m.nonzero:
            continue
        if lifts[m.j] is None:
            missing.append(m.j)
        else:
            terms.append((m.j, m.value.value, lifts[m.j]))

    rhs = None
    if not missing:
        rhs = sum((Residue(mj * sw, model.p) for _, mj, sw in terms), Residue(0, model.p))

    if lhs is None or rhs is None:
        verdict = UNDERDETERMINED
    else:
        verdict = HOLDS if lhs == rhs else FAILS

    return CongruenceReport(
        p=p,
        multiplicities=mults,
        lhs=lhs,
        rhs=rhs,
        verdict=verdict,
        chamber=model.chamber,
        missing=tuple(missing),
        terms=tuple(terms),
        warnings=warnings,
    )


@dataclass(frozen=True)
class SolvedValue:
    target: str  # "total" or "lift <j>"
    lift: Optional[int]
    value: Residue
    note: str = "determined mod p only"


def solve_missing(model: ModelSpec) -> SolvedValue:
    """Deduce the single unknown SW value (mod p) that makes the congruence hold."""
    mults = multiplicities(model)
    p = model.order
    lifts = model.sw_lift or (None,) * p
    unknown_lifts = [m.j for m in mults if m.nonzero and lifts[m.j] is None]
    n_unknown = len(unknown_lifts) + (model.sw_total is None)
    if n_unknown == 0:
        raise OverdeterminedError("all required SW values are supplied; nothing to solve")
    if n_unknown > 1:
        raise UnderdeterminedError(f"{n_unknown} unknowns; the congruence fixes only one")

    known_rhs = sum(
        (m.value * lifts[m.j] for m in mults if m.nonzero and lifts[m.j] is not None),
        Residue(0, model.p),
    )
    if model.sw_total is None:
        return SolvedValue("total", None, known_rhs)
    j = unknown_lifts[0]
    value = (Residue(model.sw_total, model.p) - known_rhs) / mults[j].value
    return SolvedValue(f"lift {j}", j, value)

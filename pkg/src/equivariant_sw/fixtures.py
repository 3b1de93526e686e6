"""Built-in models with their expected outputs.

Symbolic ranks x = y = z in the displayed maps are instantiated at ``rank``
(default 1); every expected output is rank independent.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from equivariant_sw.reps import ModelSpec


@dataclass(frozen=True)
class ChamberValues:
    total: int
    lifts: tuple[Optional[int], ...]
    source: str = ""


@dataclass(frozen=True)
class Fixture:
    name: str
    description: str
    builder: Callable[[int], ModelSpec]
    expected_mult: tuple[int, ...]
    expected_d_lift: tuple[int, ...]
    chambers: dict[str, ChamberValues] = field(default_factory=dict)
    # chamber name -> expected verdict
    expected_verdict: dict[str, str] = field(default_factory=dict)
    provenance: dict[str, str] = field(default_factory=dict)
    default_chamber: Optional[str] = None
    notes: tuple[str, ...] = ()

    def model(self, rank: int = 1, chamber: Optional[str] = None) -> ModelSpec:
        m = self.builder(rank)
        chamber = chamber if chamber is not None else self.default_chamber
        if chamber is None:
            return m
        try:
            vals = self.chambers[chamber]
        except KeyError:
            raise KeyError(
                f"fixture {self.name!r} has no chamber {chamber!r}; "
                f"choose from {sorted(self.chambers)}"
            ) from None
        return m.with_sw(vals.total, vals.lifts, chamber if len(self.chambers) > 1 else None)

    def models(self, rank: int = 1) -> list[ModelSpec]:
        """One model per chamber value set (a single model when there are none)."""
        if not self.chambers:
            return [self.model(rank)]
        return [self.model(rank, c) for c in self.chambers]


def _k3_fermat(rank: int) -> ModelSpec:
    x = y = z = rank
    return ModelSpec.build(
        3, a=[x + 2, y, z], b=[x, y, z], h0=3, h=[0, 0, 0], label="k3-fermat-z3"
    )


def _zhang(rank: int) -> ModelSpec:
    x = y = z = rank
    return ModelSpec.build(
        3, a=[x, y + 1, z + 1], b=[x, y, z], h0=1, h=[0, 1, 0], label="zhang-z3"
    )


def _z5_local(rank: int) -> ModelSpec:
    # Lift 0 leaves V_r = C_1 + C_4 and W_r = C_2 + C_3 after cancellation;
    # rank pads weight 0 equally on both sides.
    x = rank - 1
    return ModelSpec.build(
        5, a=[3 + x, 1, 0, 0, 1], b=[1 + x, 0, 1, 1, 0], h0=3, label="z5-local"
    )


FIXTURES: dict[str, Fixture] = {
    f.name: f
    for f in [
        Fixture(
            name="k3-fermat-z3",
            description="Fermat quartic K3 with Z_3 permuting coordinates, spin lift G_0",
            builder=_k3_fermat,
            expected_mult=(1, 0, 0),
            expected_d_lift=(0, -4, -4),
            chambers={"default": ChamberValues(1, (1, None, None), "SW(X,c) = SW(X,c,G_0) = 1")},
            expected_verdict={"default": "holds"},
            default_chamber="default",
            provenance={
                "map": "C_0^{x+2} + C_1^y + C_2^z -> C_0^x + C_1^y + C_2^z + R^3",
                "mult": "SW(X,c) = SW(X,c,G_0) mod 3",
            },
        ),
        Fixture(
            name="zhang-z3",
            description="Zhang's Z_3 action on K3 with b_+^G = 1 (two chambers)",
            builder=_zhang,
            expected_mult=(0, 1, 2),
            expected_d_lift=(-2, 0, 0),
            chambers={
                "plus": ChamberValues(1, (None, 1, 0), "chamber C_+: 1 = 1 + 2*0"),
                "minus": ChamberValues(1, (None, 0, -1), "chamber C_-: 1 = 0 + 2*(-1)"),
            },
            expected_verdict={"plus": "holds", "minus": "holds"},
            provenance={
                "map": "C_0^x + C_1^{y+1} + C_2^{z+1} -> C_0^x + C_1^y + C_2^z + R + C_1",
                "mult": "SW(X,c) = SW(X,c,G_1) + 2 SW(X,c,G_2) mod 3",
            },
            notes=(
                "sign-refined identity SW(X,c) = SW(X,c,G_1) - SW(X,c,G_2) is an exact "
                "integer statement beyond the mod-3 congruence; not computed",
            ),
        ),
        Fixture(
            name="z5-local",
            description="Z_5 local model with V_r = C_1 + C_4, W_r = C_2 + C_3 at lift 0",
            builder=_z5_local,
            expected_mult=(4, 0, 0, 0, 0),
            expected_d_lift=(0, -2, -6, -6, -2),
            provenance={
                "mult": "psi = (z^2, w^2): 2*2 = 4; psi = (w^3, z^3): 3*3 = 9 = 4 mod 5; "
                "2*3 / 1*4 = 4 in F_5",
            },
        ),
    ]
}


def get(name: str) -> Fixture:
    key = name.removeprefix("fixtures/").removesuffix(".json")
    try:
        return FIXTURES[key]
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; known: {sorted(FIXTURES)}") from None


def names() -> list[str]:
    return list(FIXTURES)


def _z2_minus_zbar():
    from equivariant_sw.oracle import EquivariantSystem, Monomial

    # z^2 and zbar both have weight 2 when z has weight 1 (p = 3)
    return EquivariantSystem(
        3, (1,), (2,), ((Monomial(1 + 0j, (2,), (0,)), Monomial(-1 + 0j, (0,), (1,))),)
    )


SYSTEMS = {"z2-minus-zbar": _z2_minus_zbar}


def get_system(name: str):
    key = name.removeprefix("systems/").removesuffix(".json")
    try:
        return SYSTEMS[key]()
    except KeyError:
        raise KeyError(f"unknown system {name!r}; known: {sorted(SYSTEMS)}") from None

"""Brute-force zero counting on small Z_p-equivariant polynomial maps.

A system is a map ``P: C^n -> C^n`` built from monomials ``z^alpha zbar^beta``;
we solve ``P(z) = target``. Zeros are found by grid-seeded Newton iteration on
the realified map, signed by the determinant of the real Jacobian (standard
complex orientation, variables ordered ``x_1, y_1, x_2, y_2, ...``), and then
grouped into orbits of the weight action ``z_i -> exp(2 pi i w_i / p) z_i``.

Zeros are kept inside the polydisc ``|z_i| <= box``. A polydisc is invariant
under the action, so an orbit is never split by the search boundary.
"""

from __future__ import annotations

import itertools
import math
import warnings
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np
from scipy.spatial import cKDTree

from equivariant_sw.errors import (
    EquivariantSWError,
    InfeasibleWeightsError,
    NonSplitSystemError,
    OrbitInconsistencyError,
    ZeroTargetError,
)
from equivariant_sw.localmodel import CancellationData, Matching, canonical_matching, psi_exponents
from equivariant_sw.modp import PrimeModulus, Residue


class NotEquivariantError(EquivariantSWError, ValueError):
    pass


class NearSingularZeroWarning(UserWarning):
    pass


class NonConvergenceWarning(UserWarning):
    pass


@dataclass(frozen=True)
class Tolerances:
    newton: float = 1e-10  # residual norm for convergence
    cluster: float = 1e-6  # dedup / orbit matching radius
    regularity: float = 1e-8  # |det J| cutoff for a regular zero
    max_iter: int = 60


@dataclass(frozen=True)
class SearchSpec:
    box: float = 2.0
    grid: int = 21  # seeds per real axis
    exclude_origin: bool = True
    origin_fraction: float = 1e-3  # exclusion radius as a fraction of the box

    @property
    def exclusion_radius(self) -> float:
        return self.origin_fraction * self.box if self.exclude_origin else 0.0


@dataclass(frozen=True)
class Monomial:
    coefficient: complex
    alpha: tuple[int, ...]  # holomorphic powers
    beta: tuple[int, ...]  # antiholomorphic powers

    @property
    def degree(self) -> int:
        return sum(self.alpha) + sum(self.beta)

    @property
    def holomorphic(self) -> bool:
        return not any(self.beta)

    def weight(self, in_weights: Sequence[int], p: int) -> int:
        return sum((a - b) * w for a, b, w in zip(self.alpha, self.beta, in_weights)) % p


@dataclass(frozen=True)
class EquivariantSystem:
    p: int
    in_weights: tuple[int, ...]
    out_weights: tuple[int, ...]
    terms: tuple[tuple[Monomial, ...], ...]
    target: Optional[tuple[complex, ...]] = None

    def __post_init__(self):
        PrimeModulus(self.p)
        n = len(self.in_weights)
        if len(self.out_weights) != n or len(self.terms) != n:
            raise ValueError(
                f"system must be square: {n} inputs, {len(self.out_weights)} outputs, "
                f"{len(self.terms)} term lists"
            )
        if self.target is None:
            object.__setattr__(self, "target", (0j,) * n)
        elif len(self.target) != n:
            raise ValueError("target length must match the number of outputs")
        for c, mons in enumerate(self.terms):
            for mon in mons:
                if len(mon.alpha) != n or len(mon.beta) != n:
                    raise ValueError(f"output {c}: monomial exponent length != {n}")
                w = mon.weight(self.in_weights, self.p)
                if w != self.out_weights[c] % self.p:
                    raise NotEquivariantError(
                        f"output {c}: monomial alpha={mon.alpha} beta={mon.beta} has weight "
                        f"{w}, expected {self.out_weights[c] % self.p}"
                    )

    @property
    def n(self) -> int:
        return len(self.in_weights)

    @property
    def holomorphic(self) -> bool:
        return all(m.holomorphic for mons in self.terms for m in mons)

    @property
    def is_equivariant(self) -> bool:
        """Whether ``P - target`` commutes with the action (targets only allowed at weight 0)."""
        return all(
            t == 0 or w % self.p == 0 for t, w in zip(self.target, self.out_weights)
        )

    def _packed(self):
        cache = self.__dict__.get("_packed_cache")
        if cache is None:
            cache = []
            for mons in self.terms:
                coef = np.array([m.coefficient for m in mons], dtype=complex)
                al = np.array([m.alpha for m in mons], dtype=int).reshape(len(mons), self.n)
                be = np.array([m.beta for m in mons], dtype=int).reshape(len(mons), self.n)
                cache.append((coef, al, be))
            object.__setattr__(self, "_packed_cache", cache)
        return cache

    def evaluate(self, Z: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Return ``(F, dF/dz, dF/dzbar)`` at points ``Z`` of shape (N, n).

        ``F`` has shape (N, n) and already subtracts the target; the derivative
        arrays have shape (N, n_out, n_in).
        """
        Z = np.atleast_2d(np.asarray(Z, dtype=complex))
        N, n = Z.shape
        F = np.empty((N, n), dtype=complex)
        Fz = np.zeros((N, n, n), dtype=complex)
        Fzb = np.zeros((N, n, n), dtype=complex)
        packed = self._packed()
        top = max((int(al.max(initial=0)) for _, al, _ in packed), default=0)
        top = max([top] + [int(be.max(initial=0)) for _, _, be in packed])
        # power tables [N, n, top + 1]
        Pz = np.ones((N, n, top + 1), dtype=complex)
        for k in range(1, top + 1):
            Pz[:, :, k] = Pz[:, :, k - 1] * Z
        Pzb = Pz.conj()
        for c, (coef, al, be) in enumerate(packed):
            if coef.size == 0:
                F[:, c] = -self.target[c]
                continue
            # per-input factors z_i^a_i zbar_i^b_i, each [N, M]
            fac = [Pz[:, i, al[:, i]] * Pzb[:, i, be[:, i]] for i in range(n)]
            mono = fac[0].copy()
            for i in range(1, n):
                mono *= fac[i]
            F[:, c] = mono @ coef - self.target[c]
            for i in range(n):
                ai = al[:, i]
                bi = be[:, i]
                rest = np.ones_like(mono)
                for k in range(n):
                    if k != i:
                        rest *= fac[k]
                if ai.any():
                    d = Pz[:, i, np.maximum(ai - 1, 0)] * Pzb[:, i, bi]
                    Fz[:, c, i] = (rest * d) @ (coef * ai)
                if bi.any():
                    d = Pz[:, i, ai] * Pzb[:, i, np.maximum(bi - 1, 0)]
                    Fzb[:, c, i] = (rest * d) @ (coef * bi)
        return F, Fz, Fzb

    def __call__(self, z) -> np.ndarray:
        return self.evaluate(np.asarray(z, dtype=complex).reshape(1, self.n))[0][0]

    def real_jacobian(self, Z: np.ndarray) -> np.ndarray:
        _, Fz, Fzb = self.evaluate(Z)
        return realify_jacobian(Fz, Fzb)

    def act(self, z: np.ndarray, m: int = 1) -> np.ndarray:
        """Apply the m-th power of the generator to input points."""
        phase = np.exp(2j * np.pi * m * np.asarray(self.in_weights) / self.p)
        return np.asarray(z) * phase


def realify_jacobian(Fz: np.ndarray, Fzb: np.ndarray) -> np.ndarray:
    """Real Jacobian of shape (N, 2n, 2n) from the Wirtinger derivatives."""
    N, n, _ = Fz.shape
    dx = Fz + Fzb  # d f / d x_i
    dy = 1j * (Fz - Fzb)  # d f / d y_i
    J = np.empty((N, 2 * n, 2 * n))
    J[:, 0::2, 0::2] = dx.real
    J[:, 0::2, 1::2] = dy.real
    J[:, 1::2, 0::2] = dx.imag
    J[:, 1::2, 1::2] = dy.imag
    return J


def _to_real(Z: np.ndarray) -> np.ndarray:
    X = np.empty(Z.shape[:-1] + (2 * Z.shape[-1],))
    X[..., 0::2] = Z.real
    X[..., 1::2] = Z.imag
    return X


def _to_complex(X: np.ndarray) -> np.ndarray:
    return X[..., 0::2] + 1j * X[..., 1::2]


def jacobian_fd_error(system: EquivariantSystem, Z: np.ndarray, step: float = 1e-6) -> float:
    """Max relative deviation between the analytic real Jacobian and central differences."""
    Z = np.atleast_2d(np.asarray(Z, dtype=complex))
    J = system.real_jacobian(Z)
    X = _to_real(Z)
    n2 = X.shape[1]
    Jfd = np.empty_like(J)
    for k in range(n2):
        dX = np.zeros(n2)
        dX[k] = step
        Fp = _to_real(system.evaluate(_to_complex(X + dX))[0])
        Fm = _to_real(system.evaluate(_to_complex(X - dX))[0])
        Jfd[:, :, k] = (Fp - Fm) / (2 * step)
    scale = np.maximum(np.abs(J).max(axis=(1, 2), keepdims=True), 1.0)
    return float((np.abs(J - Jfd) / scale).max()) if J.size else 0.0


# ---------------------------------------------------------------- zeros


@dataclass(frozen=True)
class SignedZero:
    coordinates: tuple[complex, ...]
    sign: int
    cluster_radius: float
    residual: float = 0.0
    det: float = 1.0
    regular: bool = True

    @property
    def z(self) -> np.ndarray:
        return np.array(self.coordinates, dtype=complex)


def newton_zero_count(
    system: EquivariantSystem,
    search: SearchSpec = SearchSpec(),
    tol: Tolerances = Tolerances(),
) -> list[SignedZero]:
    """All distinct regular zeros of ``system`` in the search polydisc, signed."""
    n = system.n
    if n == 0:
        return [SignedZero((), 1, tol.cluster)]

    axis = np.linspace(-search.box, search.box, search.grid)
    seeds = np.array(list(itertools.product(axis, repeat=2 * n)))
    X = seeds.copy()
    active = np.ones(len(X), dtype=bool)
    converged = np.zeros(len(X), dtype=bool)
    blowup = 10.0 * search.box + 10.0

    for _ in range(tol.max_iter):
        idx = np.flatnonzero(active)
        if idx.size == 0:
            break
        Zc = _to_complex(X[idx])
        F, Fz, Fzb = system.evaluate(Zc)
        res = np.linalg.norm(F, axis=1)
        done = res < tol.newton
        converged[idx[done]] = True
        active[idx[done]] = False
        idx, F, Fz, Fzb = idx[~done], F[~done], Fz[~done], Fzb[~done]
        if idx.size == 0:
            break
        J = realify_jacobian(Fz, Fzb)
        det = np.linalg.det(J)
        ok = np.abs(det) > 1e-14
        active[idx[~ok]] = False
        idx, J, F = idx[ok], J[ok], F[ok]
        step = np.linalg.solve(J, _to_real(F)[..., None])[..., 0]
        # cap steps to keep far seeds from jumping across the domain
        norm = np.linalg.norm(step, axis=1, keepdims=True)
        step *= np.minimum(1.0, search.box / np.maximum(norm, 1e-300))
        X[idx] -= step
        lost = np.abs(X[idx]).max(axis=1) > blowup
        active[idx[lost]] = False

    if not converged.any():
        warnings.warn(
            f"no seed met the residual tolerance {tol.newton} "
            f"({len(seeds)} seeds, box {search.box})",
            NonConvergenceWarning,
            stacklevel=2,
        )
        return []

    Z = _to_complex(X[converged])
    # two polishing steps so duplicates collapse far below the cluster radius
    for _ in range(2):
        F, Fz, Fzb = system.evaluate(Z)
        J = realify_jacobian(Fz, Fzb)
        good = np.abs(np.linalg.det(J)) > 1e-14
        if good.any():
            st = np.linalg.solve(J[good], _to_real(F[good])[..., None])[..., 0]
            Z[good] = Z[good] - _to_complex(st)

    inside = np.all(np.abs(Z) <= search.box, axis=1)
    if search.exclude_origin:
        inside &= np.linalg.norm(Z, axis=1) > search.exclusion_radius
    Z = Z[inside]
    if len(Z) == 0:
        return []

    reps = _dedup(Z, tol.cluster)
    F, Fz, Fzb = system.evaluate(reps)
    dets = np.linalg.det(realify_jacobian(Fz, Fzb))
    res = np.linalg.norm(F, axis=1)
    out = []
    for z, d, r in zip(reps, dets, res):
        if r >= tol.newton:
            continue
        regular = abs(d) >= tol.regularity
        if not regular:
            warnings.warn(
                f"near-singular zero at {np.round(z, 8)} (|det J| = {abs(d):.2e})",
                NearSingularZeroWarning,
                stacklevel=2,
            )
        out.append(
            SignedZero(
                tuple(complex(c) for c in z),
                int(np.sign(d)) or 1,
                tol.cluster,
                float(r),
                float(d),
                bool(regular),
            )
        )
    out.sort(key=lambda s: tuple(itertools.chain.from_iterable((c.real, c.imag) for c in s.coordinates)))
    return out


def _dedup(Z: np.ndarray, radius: float) -> np.ndarray:
    X = _to_real(Z)
    tree = cKDTree(X)
    taken = np.zeros(len(X), dtype=bool)
    reps = []
    for i in range(len(X)):
        if taken[i]:
            continue
        nbrs = tree.query_ball_point(X[i], radius)
        taken[nbrs] = True
        reps.append(Z[i])
    return np.array(reps)


# --------------------------------------------------------------- orbits


@dataclass(frozen=True)
class Orbit:
    representative: tuple[complex, ...]
    size: int
    total_sign: int
    members: tuple[int, ...]


@dataclass(frozen=True)
class OrbitReport:
    p: int
    orbits: tuple[Orbit, ...]

    @property
    def fixed_count(self) -> int:
        return sum(o.total_sign for o in self.orbits if o.size == 1)

    @property
    def free_count(self) -> int:
        return sum(o.total_sign for o in self.orbits if o.size == self.p)

    @property
    def total(self) -> int:
        return sum(o.total_sign for o in self.orbits)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(o.size for o in self.orbits)


def orbit_partition(
    zeros: Sequence[SignedZero],
    weights: Sequence[int],
    p: int,
    cluster: float = Tolerances.cluster,
) -> OrbitReport:
    """Group zeros under the weight action; every image must be a computed zero."""
    if not zeros:
        return OrbitReport(p, ())
    Z = np.array([z.coordinates for z in zeros], dtype=complex).reshape(len(zeros), -1)
    tree = cKDTree(_to_real(Z))
    phase = np.exp(2j * np.pi * np.asarray(weights) / p)
    assigned = np.full(len(zeros), -1)
    orbits = []
    for i in range(len(zeros)):
        if assigned[i] >= 0:
            continue
        members = []
        img = Z[i]
        for m in range(p):
            d, k = tree.query(_to_real(img))
            if d > cluster * max(1.0, float(np.abs(img).max(initial=0.0))):
                raise OrbitInconsistencyError(
                    f"image g^{m} of zero {np.round(Z[i], 8)} is not a computed zero "
                    f"(nearest at distance {d:.2e}); rerun with a denser grid"
                )
            if assigned[k] >= 0 and assigned[k] != len(orbits):
                raise OrbitInconsistencyError(f"zero {k} reached from two different orbits")
            if k not in members:
                members.append(int(k))
            img = img * phase
        signs = {zeros[k].sign for k in members}
        if len(signs) != 1:
            raise OrbitInconsistencyError(f"orbit of zero {i} mixes signs {signs}")
        size = len(members)
        if p % size:
            raise OrbitInconsistencyError(f"orbit of size {size} does not divide p = {p}")
        assigned[members] = len(orbits)
        orbits.append(
            Orbit(zeros[i].coordinates, size, sum(zeros[k].sign for k in members), tuple(members))
        )
    return OrbitReport(p, tuple(orbits))


# --------------------------------------------------------- split systems


def split_system(
    exponents: Sequence[int],
    targets: Sequence[complex],
    *,
    p: int | None = None,
    in_weights: Sequence[int] | None = None,
    out_weights: Sequence[int] | None = None,
    sources: Sequence[int] | None = None,
) -> EquivariantSystem:
    """The system ``z_{sources[k]}^{e_k} = targets[k]``.

    Without weights, inputs get weight 1 and output k weight ``e_k`` modulo the
    smallest odd prime exceeding every exponent.
    """
    exponents = [int(e) for e in exponents]
    n = len(exponents)
    if len(targets) != n:
        raise ValueError("one target per exponent")
    if any(e < 1 for e in exponents):
        raise ValueError(f"exponents must be >= 1, got {exponents}")
    if any(t == 0 for t in targets):
        raise ZeroTargetError("zero target is not generic (the origin is a degenerate zero)")
    if sources is None:
        sources = list(range(n))
    if sorted(sources) != list(range(n)):
        raise ValueError(f"sources must be a permutation of 0..{n - 1}")
    if p is None:
        p = 3
        while p <= max(exponents, default=1) or not _is_odd_prime(p):
            p += 2
    if in_weights is None:
        in_weights = [1] * n
    if out_weights is None:
        out_weights = [(exponents[k] * in_weights[sources[k]]) % p for k in range(n)]
    terms = []
    for k, e in enumerate(exponents):
        alpha = [0] * n
        alpha[sources[k]] = e
        terms.append((Monomial(1 + 0j, tuple(alpha), (0,) * n),))
    return EquivariantSystem(
        p, tuple(in_weights), tuple(out_weights), tuple(terms), tuple(complex(t) for t in targets)
    )


def _is_odd_prime(q: int) -> bool:
    try:
        PrimeModulus(q)
        return True
    except ValueError:
        return False


def _split_structure(system: EquivariantSystem) -> list[tuple[int, int, complex]]:
    """(source input, exponent, coefficient) per output, or raise."""
    n = system.n
    used = set()
    out = []
    for c, mons in enumerate(system.terms):
        if len(mons) != 1:
            raise NonSplitSystemError(f"output {c} has {len(mons)} monomials")
        mon = mons[0]
        if not mon.holomorphic:
            raise NonSplitSystemError(f"output {c} is not holomorphic")
        nz = [i for i in range(n) if mon.alpha[i]]
        if len(nz) != 1 or nz[0] in used:
            raise NonSplitSystemError(f"output {c} does not depend on a single fresh input")
        if mon.coefficient == 0:
            raise NonSplitSystemError(f"output {c} has zero coefficient")
        used.add(nz[0])
        out.append((nz[0], mon.alpha[nz[0]], mon.coefficient))
    return out


def enumerate_split_zeros(system: EquivariantSystem) -> list[SignedZero]:
    """Exact zeros of a split system: every root of every coordinate, all sign +1."""
    struct = _split_structure(system)
    if any(t == 0 for t in system.target):
        raise ZeroTargetError("split enumeration needs nonzero targets")
    n = system.n
    per_input: list[list[complex]] = [[] for _ in range(n)]
    for c, (i, e, coef) in enumerate(struct):
        w = system.target[c] / coef
        r = abs(w) ** (1.0 / e)
        th = np.angle(w)
        per_input[i] = [r * np.exp(1j * (th + 2 * np.pi * m) / e) for m in range(e)]
    zeros = [
        SignedZero(tuple(complex(c) for c in combo), 1, 0.0)
        for combo in itertools.product(*per_input)
    ]
    zeros.sort(key=lambda s: tuple(itertools.chain.from_iterable((c.real, c.imag) for c in s.coordinates)))
    return zeros


def default_targets(n: int, scale: float = 0.7) -> tuple[complex, ...]:
    """Deterministic generic targets: distinct moduli and irrational-looking phases."""
    return tuple(scale * (1 - 0.1 * k) * np.exp(1j * (0.37 + 0.91 * k)) for k in range(n))


def realize_matching(
    data: CancellationData,
    matching: Matching,
    targets: Sequence[complex] | None = None,
) -> EquivariantSystem:
    """Split system for psi - target: inputs in ascending I order, outputs in ascending I' order."""
    exps = psi_exponents(data, matching)
    n = len(matching)
    ins = list(data.residual_in)
    outs = list(data.residual_out)
    in_pos, out_pos = {}, {}
    # positions for repeated weights are handed out left to right
    src_index = []
    dst_index = []
    for i, o in matching:
        k = ins.index(i, in_pos.get(i, 0))
        in_pos[i] = k + 1
        src_index.append(k)
        c = outs.index(o, out_pos.get(o, 0))
        out_pos[o] = c + 1
        dst_index.append(c)
    order = np.argsort(dst_index)
    if targets is None:
        targets = default_targets(n)
    return split_system(
        [exps[t] for t in order],
        list(targets),
        p=data.p,
        in_weights=ins,
        out_weights=outs,
        sources=[src_index[t] for t in order],
    )


@dataclass(frozen=True)
class LocalDegree:
    exponents: tuple[int, ...]
    degree: int
    residue: Residue
    enumerated: tuple[SignedZero, ...]
    newton: Optional[tuple[SignedZero, ...]] = None
    newton_agrees: Optional[bool] = None
    max_location_error: Optional[float] = None


def compare_zero_sets(
    exact: Sequence[SignedZero], numeric: Sequence[SignedZero], tol: float
) -> tuple[bool, float]:
    """Match zero sets one-to-one within ``tol``; signs must agree. Returns (ok, max distance)."""
    if len(exact) != len(numeric):
        return False, math.inf
    if not exact:
        return True, 0.0
    A = _to_real(np.array([z.coordinates for z in exact], dtype=complex).reshape(len(exact), -1))
    B = _to_real(np.array([z.coordinates for z in numeric], dtype=complex).reshape(len(numeric), -1))
    if A.shape[1] == 0:
        return all(a.sign == b.sign for a, b in zip(exact, numeric)), 0.0
    tree = cKDTree(B)
    d, k = tree.query(A)
    ok = len(set(k.tolist())) == len(k) and bool(np.all(d <= tol))
    ok = ok and all(exact[i].sign == numeric[k[i]].sign for i in range(len(exact)))
    return ok, float(d.max())


def local_degree(
    data: CancellationData,
    matching: Matching | None = None,
    *,
    targets: Sequence[complex] | None = None,
    newton: bool = True,
    search: SearchSpec | None = None,
    tol: Tolerances = Tolerances(),
) -> LocalDegree:
    """Degree of psi at the fixed zero by exact enumeration (and Newton as a cross-check)."""
    if matching is None:
        matching = canonical_matching(data)
    exps = psi_exponents(data, matching)
    system = realize_matching(data, matching, targets) if matching else None
    if system is None:
        exact = [SignedZero((), 1, 0.0)]
    else:
        exact = enumerate_split_zeros(system)
    degree = sum(z.sign for z in exact)
    assert degree == math.prod(exps)
    residue = Residue(degree, data.modulus)
    if not newton:
        return LocalDegree(exps, degree, residue, tuple(exact))
    if system is None:
        numeric = [SignedZero((), 1, tol.cluster)]
    else:
        if search is None:
            search = SearchSpec(grid=LOCAL_GRID_BY_DIM.get(system.n, 5), exclude_origin=False)
        numeric = newton_zero_count(system, search, tol)
    ok, err = compare_zero_sets(exact, numeric, tol.cluster)
    return LocalDegree(exps, degree, residue, tuple(exact), tuple(numeric), ok, err)


# ----------------------------------------------------- random instances


def equivariant_monomials(
    p: int,
    in_weights: Sequence[int],
    out_weight: int,
    degree_bound: int,
    holomorphic: bool = False,
) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All (alpha, beta) with 1 <= |alpha| + |beta| <= degree_bound and the right weight."""
    n = len(in_weights)
    nvars = n if holomorphic else 2 * n
    found = []
    for deg in range(1, degree_bound + 1):
        for combo in itertools.combinations_with_replacement(range(nvars), deg):
            alpha = [0] * n
            beta = [0] * n
            for v in combo:
                if v < n:
                    alpha[v] += 1
                else:
                    beta[v - n] += 1
            w = sum((a - b) * wi for a, b, wi in zip(alpha, beta, in_weights)) % p
            if w == out_weight % p:
                found.append((tuple(alpha), tuple(beta)))
    return found


def random_equivariant_system(
    seed: int | Sequence[int],
    p: int,
    in_weights: Sequence[int],
    out_weights: Sequence[int],
    degree_bound: int = 4,
    coefficient_scale: float = 1.0,
    *,
    holomorphic: bool = False,
) -> EquivariantSystem:
    """Every equivariant monomial of degree <= ``degree_bound`` with a Gaussian coefficient."""
    if len(in_weights) != len(out_weights):
        raise ValueError("need as many outputs as inputs")
    if degree_bound < 1:
        raise ValueError("degree_bound must be >= 1")
    rng = np.random.default_rng(seed)
    terms = []
    for c, w in enumerate(out_weights):
        mons = equivariant_monomials(p, in_weights, w, degree_bound, holomorphic)
        if not mons:
            raise InfeasibleWeightsError(
                f"p={p}, in_weights={tuple(in_weights)}: no monomial of degree <= "
                f"{degree_bound} has weight {w} (output {c})"
            )
        coefs = coefficient_scale * (rng.standard_normal(len(mons)) + 1j * rng.standard_normal(len(mons)))
        terms.append(tuple(Monomial(complex(k), al, be) for k, (al, be) in zip(coefs, mons)))
    return EquivariantSystem(p, tuple(in_weights), tuple(out_weights), tuple(terms))


@dataclass(frozen=True)
class TrialResult:
    trial: int
    seed: tuple[int, int]
    n: int
    in_weights: tuple[int, ...]
    out_weights: tuple[int, ...]
    zeros: int
    orbit_sizes: tuple[int, ...]
    free_count: int
    grid: int
    passed: bool
    message: str = ""
    near_singular: int = 0


@dataclass(frozen=True)
class FreeCheckReport:
    p: int
    trials: tuple[TrialResult, ...]
    degree_bound: int

    @property
    def passed(self) -> int:
        return sum(t.passed for t in self.trials)

    @property
    def failures(self) -> tuple[TrialResult, ...]:
        return tuple(t for t in self.trials if not t.passed)

    @property
    def ok(self) -> bool:
        return self.passed == len(self.trials)


# escalation schedules (seeds per real axis) by complex dimension; a 4-real-dim
# grid of 21 points is ~200k seeds, so higher dimensions start coarse
GRID_BY_DIM = {1: (21, 41, 81), 2: (7, 9, 13, 17)}
LOCAL_GRID_BY_DIM = {0: 1, 1: 21, 2: 11, 3: 5}


def check_free_divisibility(
    system: EquivariantSystem,
    search: SearchSpec,
    tol: Tolerances = Tolerances(),
) -> tuple[list[SignedZero], OrbitReport]:
    if not system.is_equivariant:
        raise NotEquivariantError("free-part check needs an equivariant system (no symmetry-breaking target)")
    if any(w % system.p == 0 for w in system.in_weights):
        raise ValueError("free-part check needs all input weights nonzero mod p")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", NonConvergenceWarning)
        warnings.simplefilter("ignore", NearSingularZeroWarning)
        zeros = newton_zero_count(system, search, tol)
    return zeros, orbit_partition(zeros, system.in_weights, system.p, tol.cluster)


def free_divisibility_check(
    p: int,
    trials: int = 100,
    degree_bound: int = 4,
    search: SearchSpec = SearchSpec(),
    *,
    seed: int = 0,
    max_dim: int = 2,
    tol: Tolerances = Tolerances(),
    grids: dict[int, Sequence[int]] | None = None,
) -> FreeCheckReport:
    """Random equivariant systems with nonzero weights; zeros off the origin must come in
    free orbits of size p, so every signed free count is divisible by p.

    The grid escalates on orbit inconsistency (a missed root); ``search.grid`` is
    used as an extra last resort.
    """
    grids = grids or GRID_BY_DIM
    PrimeModulus(p)
    results = []
    for t in range(trials):
        rng = np.random.default_rng([seed, t])
        n = int(rng.integers(1, max_dim + 1))
        while True:
            ins = tuple(int(w) for w in rng.integers(1, p, size=n))
            outs = tuple(int(w) for w in rng.integers(1, p, size=n))
            try:
                system = random_equivariant_system((seed, t), p, ins, outs, degree_bound)
                break
            except InfeasibleWeightsError:
                continue
        schedule = list(grids.get(n, (search.grid,)))
        if search.grid not in schedule:
            schedule.append(search.grid)
        message = ""
        report = None
        zeros: list[SignedZero] = []
        grid = schedule[0]
        for grid in schedule:
            spec = SearchSpec(search.box, grid, True, search.origin_fraction)
            try:
                zeros, report = check_free_divisibility(system, spec, tol)
                message = ""
                break
            except OrbitInconsistencyError as exc:
                message = f"grid {grid}: {exc}"
        if report is None:
            results.append(
                TrialResult(t, (seed, t), n, ins, outs, len(zeros), (), 0, grid, False, message)
            )
            continue
        sizes = report.sizes
        ok = all(s == p for s in sizes) and report.free_count % p == 0
        if not ok:
            message = f"orbit sizes {sizes}, free count {report.free_count}"
        results.append(
            TrialResult(
                t, (seed, t), n, ins, outs, len(zeros), sizes, report.free_count, grid, ok,
                message, sum(not z.regular for z in zeros),
            )
        )
    return FreeCheckReport(p, tuple(results), degree_bound)

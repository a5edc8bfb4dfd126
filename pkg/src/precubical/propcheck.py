"""Random instances and the executable theorem suite.

Instances are face-closed random sub-collections of tensor products of
random directed multigraphs, so every generated set passes validation by
construction.  Each named property evaluates one algebraic identity exactly
on random data; a trial's randomness is derived from (config seed, trial
index) alone, so reports are reproducible.  Failing trials are shrunk by
greedily deleting maximal cubes while the failure persists.

Anticommutativity is special: at the cochain level it is genuinely false
(see ``anticommutativity_cochain``), and on cohomology it is reported as an
empirical statistic, never asserted.
"""

from __future__ import annotations

import hashlib
import random
import time
from dataclasses import dataclass
from typing import Callable, Optional

from . import textformat
from .cochains import (
    Chain,
    Cochain,
    TensorChain,
    boundary,
    coboundary,
    cup,
    diagonal,
    tensor_boundary,
    unit_cochain,
)
from .cohomology import cohomology_groups, delta_matrix
from .core import (
    CubeId,
    PrecubicalSet,
    iterated_face,
    remove_at,
    remove_at_shift,
    shift_above,
    tensor_many,
)
from .exactlinalg import field_rank_and_kernel, is_prime, kernel_basis
from .rings import CoeffRing, Z


@dataclass(frozen=True)
class GenConfig:
    """Shape of the random-instance distribution.

    ``explicit_factors`` overrides the random graphs; ``fixed_instance``
    pins the instance entirely so that only the random cochain data varies
    between trials.
    """

    seed: int = 0
    max_dim: int = 3
    vertices: int = 3
    edges: int = 3
    factors: int = 2
    fraction: float = 0.75
    ring: CoeffRing = Z
    explicit_factors: Optional[tuple[PrecubicalSet, ...]] = None
    fixed_instance: Optional[PrecubicalSet] = None

    def __post_init__(self) -> None:
        if not 0 < self.fraction <= 1:
            raise ValueError("sampling fraction must lie in (0, 1]")
        if self.max_dim > 3:
            raise ValueError("random instances are capped at dimension 3")
        if self.explicit_factors is None and not 1 <= self.factors <= 3:
            raise ValueError("number of tensor factors must be 1..3")
        if self.vertices < 1:
            raise ValueError("factors need at least one vertex")


@dataclass(frozen=True)
class FailureRecord:
    seed: str
    instance_digest: str
    detail: str
    minimized: str


@dataclass(frozen=True)
class PropertyReport:
    name: str
    trials: int
    failures: tuple[FailureRecord, ...]
    elapsed: float
    assertion: bool = True

    def __post_init__(self) -> None:
        if len(self.failures) > self.trials:
            raise ValueError("more failures than trials")

    @property
    def agreement(self) -> float:
        if self.trials == 0:
            return 1.0
        return (self.trials - len(self.failures)) / self.trials


def instance_digest(x: PrecubicalSet) -> str:
    text = textformat.serialize(x)
    return hashlib.sha256(text.encode()).hexdigest()[:12]


def restrict(x: PrecubicalSet, keep: dict[int, list[bool]]) -> PrecubicalSet:
    """Sub-precubical set on the kept cubes, closed downward under faces."""
    flags = {n: list(keep.get(n, [False] * x.count(n))) for n in range(x.maxdim + 1)}
    for n in range(x.maxdim, 0, -1):
        for u in x.cubes(n):
            if flags[n][u.index]:
                for i in range(1, n + 1):
                    for eps in (0, 1):
                        f = x.face(u, i, eps)
                        flags[n - 1][f.index] = True

    new_index: dict[int, dict[int, int]] = {}
    counts = []
    labels = {}
    for n in range(x.maxdim + 1):
        mapping = {}
        names = []
        for i in range(x.count(n)):
            if flags[n][i]:
                mapping[i] = len(names)
                names.append(x.labels(n)[i])
        new_index[n] = mapping
        counts.append(len(names))
        labels[n] = names
    while counts and counts[-1] == 0:
        counts.pop()
        labels.pop(len(counts))

    faces: dict[int, list[list[tuple[CubeId, CubeId]]]] = {}
    for n in range(1, len(counts)):
        per_dim = []
        for i in range(x.count(n)):
            if not flags[n][i]:
                continue
            pairs = []
            for d in range(1, n + 1):
                lo = x.face(CubeId(n, i), d, 0)
                hi = x.face(CubeId(n, i), d, 1)
                pairs.append(
                    (
                        CubeId(n - 1, new_index[n - 1][lo.index]),
                        CubeId(n - 1, new_index[n - 1][hi.index]),
                    )
                )
            per_dim.append(pairs)
        faces[n] = per_dim
    return PrecubicalSet(counts, faces, labels)


def _random_graph(rng: random.Random, vertices: int, edges: int) -> PrecubicalSet:
    pairs = [
        [(CubeId(0, rng.randrange(vertices)), CubeId(0, rng.randrange(vertices)))]
        for _ in range(edges)
    ]
    return PrecubicalSet([vertices, edges], {1: pairs})


def _generate(cfg: GenConfig, rng: random.Random) -> PrecubicalSet:
    if cfg.explicit_factors is not None:
        parts = cfg.explicit_factors
    else:
        parts = tuple(
            _random_graph(rng, cfg.vertices, cfg.edges)
            for _ in range(cfg.factors)
        )
    full = tensor_many(list(parts))
    if full.maxdim > cfg.max_dim:
        raise ValueError(
            f"generated dimension {full.maxdim} exceeds the cap {cfg.max_dim}"
        )
    keep = {
        n: [rng.random() < cfg.fraction for _ in range(full.count(n))]
        for n in range(full.maxdim + 1)
    }
    return restrict(full, keep)


def random_precubical(cfg: GenConfig) -> PrecubicalSet:
    """Deterministic in cfg.seed; always passes validation."""
    return _generate(cfg, random.Random(cfg.seed))


# -- random data --------------------------------------------------------------


def _random_value(ring: CoeffRing, rng: random.Random) -> int:
    if ring.modulus:
        return rng.randrange(ring.modulus)
    return rng.randint(-3, 3)


def _random_cochain(
    x: PrecubicalSet, n: int, ring: CoeffRing, rng: random.Random
) -> Cochain:
    return Cochain(n, ring, [_random_value(ring, rng) for _ in range(x.count(n))])


def _random_chain(x: PrecubicalSet, n: int, rng: random.Random) -> Chain:
    return Chain(n, {u: rng.randint(-3, 3) for u in x.cubes(n)})


def _random_tensor_chain(
    x: PrecubicalSet, n: int, rng: random.Random
) -> TensorChain:
    coeffs: dict[tuple[CubeId, CubeId], int] = {}
    split_dims = [p for p in range(n + 1) if x.count(p) and x.count(n - p)]
    if split_dims:
        for _ in range(6):
            p = rng.choice(split_dims)
            a = CubeId(p, rng.randrange(x.count(p)))
            b = CubeId(n - p, rng.randrange(x.count(n - p)))
            coeffs[(a, b)] = coeffs.get((a, b), 0) + rng.randint(-3, 3)
    return TensorChain(n, coeffs)


def _random_cocycle(
    x: PrecubicalSet, n: int, ring: CoeffRing, rng: random.Random
) -> Cochain:
    mat = delta_matrix(x, n, ring)
    if ring.modulus == 0:
        basis = kernel_basis(mat)
    else:
        _, basis = field_rank_and_kernel(mat, ring.modulus)
    vec = [0] * x.count(n)
    for b in basis:
        c = _random_value(ring, rng)
        for i, v in enumerate(b):
            vec[i] += c * v
    return Cochain(n, ring, vec)


# -- the properties ------------------------------------------------------------

CheckFn = Callable[[PrecubicalSet, CoeffRing, random.Random], Optional[str]]


def _check_dd_zero(x: PrecubicalSet, ring: CoeffRing, rng: random.Random) -> Optional[str]:
    for n in range(2, x.maxdim + 1):
        c = _random_chain(x, n, rng)
        if not boundary(x, boundary(x, c)).is_zero():
            return f"boundary twice of a {n}-chain is nonzero: {c!r}"
        tc = _random_tensor_chain(x, n, rng)
        if not tensor_boundary(x, tensor_boundary(x, tc)).is_zero():
            return f"tensor boundary twice of a {n}-chain is nonzero: {tc!r}"
    return None


def _check_delta_delta_zero(
    x: PrecubicalSet, ring: CoeffRing, rng: random.Random
) -> Optional[str]:
    for n in range(0, x.maxdim + 1):
        phi = _random_cochain(x, n, ring, rng)
        if not coboundary(x, coboundary(x, phi)).is_zero():
            return f"coboundary twice of a {n}-cochain is nonzero: {phi!r}"
    return None


def _check_diagonal_chain_map(
    x: PrecubicalSet, ring: CoeffRing, rng: random.Random
) -> Optional[str]:
    for n in range(1, x.maxdim + 1):
        c = _random_chain(x, n, rng)
        lhs = tensor_boundary(x, diagonal(x, c))
        rhs = diagonal(x, boundary(x, c))
        if lhs != rhs:
            return f"diagonal fails to commute with the boundary on {c!r}"
    return None


def _check_leibniz(
    x: PrecubicalSet, ring: CoeffRing, rng: random.Random
) -> Optional[str]:
    for p in range(0, x.maxdim + 1):
        for q in range(0, x.maxdim - p + 1):
            phi = _random_cochain(x, p, ring, rng)
            psi = _random_cochain(x, q, ring, rng)
            lhs = coboundary(x, cup(x, phi, psi))
            rhs = cup(x, coboundary(x, phi), psi) + cup(
                x, phi, coboundary(x, psi)
            ).scaled(-1 if p % 2 else 1)
            if lhs != rhs:
                return (
                    f"Leibniz fails for degrees ({p}, {q}): phi={phi!r}, "
                    f"psi={psi!r}"
                )
    return None


def _check_associativity(
    x: PrecubicalSet, ring: CoeffRing, rng: random.Random
) -> Optional[str]:
    for p in range(0, x.maxdim + 1):
        for q in range(0, x.maxdim - p + 1):
            for r in range(0, x.maxdim - p - q + 1):
                phi = _random_cochain(x, p, ring, rng)
                psi = _random_cochain(x, q, ring, rng)
                chi = _random_cochain(x, r, ring, rng)
                if cup(x, cup(x, phi, psi), chi) != cup(x, phi, cup(x, psi, chi)):
                    return f"associativity fails for degrees ({p}, {q}, {r})"
    return None


def _check_distributivity(
    x: PrecubicalSet, ring: CoeffRing, rng: random.Random
) -> Optional[str]:
    for p in range(0, x.maxdim + 1):
        for q in range(0, x.maxdim - p + 1):
            phi = _random_cochain(x, p, ring, rng)
            psi = _random_cochain(x, q, ring, rng)
            chi = _random_cochain(x, q, ring, rng)
            if cup(x, phi, psi + chi) != cup(x, phi, psi) + cup(x, phi, chi):
                return f"left distributivity fails for degrees ({p}, {q})"
            if cup(x, psi + chi, phi) != cup(x, psi, phi) + cup(x, chi, phi):
                return f"right distributivity fails for degrees ({q}, {p})"
    return None


def _check_unit(
    x: PrecubicalSet, ring: CoeffRing, rng: random.Random
) -> Optional[str]:
    one = unit_cochain(x, ring)
    for n in range(0, x.maxdim + 1):
        xi = _random_cochain(x, n, ring, rng)
        if cup(x, one, xi) != xi:
            return f"left unit fails on a {n}-cochain {xi!r}"
        if cup(x, xi, one) != xi:
            return f"right unit fails on a {n}-cochain {xi!r}"
    return None


def _check_cocycle_closure(
    x: PrecubicalSet, ring: CoeffRing, rng: random.Random
) -> Optional[str]:
    if ring.modulus != 0 and not is_prime(ring.modulus):
        raise ValueError(
            "cocycle generation needs Z or prime-field coefficients; "
            f"got {ring.name}"
        )
    for p in range(0, x.maxdim + 1):
        for q in range(0, x.maxdim - p + 1):
            phi = _random_cocycle(x, p, ring, rng)
            psi = _random_cocycle(x, q, ring, rng)
            if not coboundary(x, cup(x, phi, psi)).is_zero():
                return (
                    f"product of cocycles of degrees ({p}, {q}) is not a "
                    f"cocycle"
                )
            # a coboundary times a cocycle is again a coboundary, with the
            # primitive exhibited explicitly
            theta = _random_cochain(x, p, ring, rng)
            if coboundary(x, cup(x, theta, psi)) != cup(
                x, coboundary(x, theta), psi
            ):
                return (
                    f"explicit primitive fails for degrees ({p}, {q}): "
                    f"theta={theta!r}"
                )
    return None


def _check_prop21_identities(
    x: PrecubicalSet, ring: CoeffRing, rng: random.Random
) -> Optional[str]:
    for n in range(1, x.maxdim + 1):
        if not x.count(n):
            continue
        for _ in range(5):
            u = CubeId(n, rng.randrange(x.count(n)))
            p = rng.randint(1, n)
            members = tuple(sorted(rng.sample(range(1, n + 1), p)))
            mu = rng.randint(1, p)
            eps = rng.randint(0, 1)
            eta = rng.randint(0, 1)

            lhs = x.face(iterated_face(x, u, members, eta), mu, eps)
            rhs = iterated_face(
                x, x.face(u, members[mu - 1], eps), remove_at_shift(members, mu), eta
            )
            if lhs != rhs:
                return (
                    f"face/iterated-face commutation (general ends) fails on "
                    f"{u} with subset {members}, mu={mu}, eps={eps}, eta={eta}"
                )

            lhs = x.face(iterated_face(x, u, members, eps), mu, eps)
            rhs = iterated_face(x, u, remove_at(members, mu), eps)
            if lhs != rhs:
                return (
                    f"face/iterated-face commutation (matching ends) fails on "
                    f"{u} with subset {members}, mu={mu}, eps={eps}"
                )

            if p < n:
                outside = [j for j in range(1, n + 1) if j not in members]
                j = rng.choice(outside)
                lhs2 = iterated_face(x, u, members, eps)
                rhs2 = iterated_face(
                    x, x.face(u, j, eps), shift_above(members, j), eps
                )
                if lhs2 != rhs2:
                    return (
                        f"single-face decomposition fails on {u} with subset "
                        f"{members}, j={j}, eps={eps}"
                    )
    return None


def _check_anticommutativity_cochain(
    x: PrecubicalSet, ring: CoeffRing, rng: random.Random
) -> Optional[str]:
    for p in range(0, x.maxdim + 1):
        for q in range(0, x.maxdim - p + 1):
            phi = _random_cochain(x, p, ring, rng)
            psi = _random_cochain(x, q, ring, rng)
            flipped = cup(x, psi, phi).scaled(-1 if (p * q) % 2 else 1)
            if cup(x, phi, psi) != flipped:
                return (
                    f"cochain-level anticommutativity fails for degrees "
                    f"({p}, {q})"
                )
    return None


PROPERTY_CHECKS: dict[str, CheckFn] = {
    "dd_zero": _check_dd_zero,
    "delta_delta_zero": _check_delta_delta_zero,
    "diagonal_chain_map": _check_diagonal_chain_map,
    "leibniz": _check_leibniz,
    "associativity": _check_associativity,
    "distributivity": _check_distributivity,
    "unit": _check_unit,
    "cocycle_closure": _check_cocycle_closure,
    "prop21_identities": _check_prop21_identities,
    "anticommutativity_cochain": _check_anticommutativity_cochain,
}

# properties asserted by the suite; the rest are report-only
ASSERTION_PROPERTIES: tuple[str, ...] = (
    "dd_zero",
    "delta_delta_zero",
    "diagonal_chain_map",
    "leibniz",
    "associativity",
    "distributivity",
    "unit",
    "cocycle_closure",
    "prop21_identities",
)

# identities on arbitrary chains/cochains; these run over any Z/m, while the
# remaining assertions need kernel computations (Z or prime fields only)
COCHAIN_LEVEL_PROPERTIES: tuple[str, ...] = tuple(
    p for p in ASSERTION_PROPERTIES if p != "cocycle_closure"
)


def _maximal_cubes(x: PrecubicalSet) -> list[CubeId]:
    referenced: set[CubeId] = set()
    for n in range(1, x.maxdim + 1):
        for u in x.cubes(n):
            for i in range(1, n + 1):
                referenced.add(x.face(u, i, 0))
                referenced.add(x.face(u, i, 1))
    out = [u for u in x.all_cubes() if u not in referenced]
    out.sort(key=lambda u: (-u.dim, u.index))
    return out


def _delete_cube(x: PrecubicalSet, victim: CubeId) -> PrecubicalSet:
    keep = {
        n: [
            not (n == victim.dim and i == victim.index)
            for i in range(x.count(n))
        ]
        for n in range(x.maxdim + 1)
    }
    return restrict(x, keep)


def _minimize(
    x: PrecubicalSet, still_fails: Callable[[PrecubicalSet], Optional[str]]
) -> tuple[PrecubicalSet, str]:
    detail = still_fails(x)
    assert detail is not None
    shrinking = True
    while shrinking:
        shrinking = False
        for victim in _maximal_cubes(x):
            candidate = _delete_cube(x, victim)
            candidate_detail = still_fails(candidate)
            if candidate_detail is not None:
                x, detail = candidate, candidate_detail
                shrinking = True
                break
    return x, detail


def check(prop: str, cfg: GenConfig, trials: int) -> PropertyReport:
    """Evaluate one named identity on ``trials`` random instances."""
    if prop not in PROPERTY_CHECKS:
        known = ", ".join(sorted(PROPERTY_CHECKS))
        raise ValueError(f"unknown property {prop!r}; known: {known}")
    if trials < 1:
        raise ValueError("at least one trial is required")
    if prop == "cocycle_closure" and cfg.ring.modulus and not is_prime(cfg.ring.modulus):
        raise ValueError(
            f"cocycle_closure needs Z or prime-field coefficients, got "
            f"{cfg.ring.name}"
        )

    fn = PROPERTY_CHECKS[prop]
    start = time.perf_counter()
    failures: list[FailureRecord] = []
    for t in range(trials):
        trial_seed = f"{cfg.seed}:{t}"
        inst_rng = random.Random(trial_seed + ":instance")
        if cfg.fixed_instance is not None:
            instance = cfg.fixed_instance
        else:
            instance = _generate(cfg, inst_rng)

        def run(inst: PrecubicalSet) -> Optional[str]:
            return fn(inst, cfg.ring, random.Random(trial_seed + ":data"))

        detail = run(instance)
        if detail is not None:
            small, small_detail = _minimize(instance, run)
            failures.append(
                FailureRecord(
                    seed=trial_seed,
                    instance_digest=instance_digest(small),
                    detail=small_detail,
                    minimized=textformat.serialize(small),
                )
            )
    elapsed = time.perf_counter() - start
    return PropertyReport(
        name=prop,
        trials=trials,
        failures=tuple(failures),
        elapsed=elapsed,
        assertion=prop in ASSERTION_PROPERTIES,
    )


def anticommutativity_report(
    x: PrecubicalSet, ring: CoeffRing, trials: int, seed: int = 0
) -> PropertyReport:
    """Compare generator products against the graded-sign flip, on classes.

    Report-only: tabulates how often the class of a*b equals (-1)^(pq) times
    the class of b*a over random generator pairs.  Nothing is asserted; the
    underlying claim is checked empirically, not enforced.
    """
    if not ring.commutative:
        raise ValueError("the comparison only makes sense over a commutative ring")
    start = time.perf_counter()
    groups = cohomology_groups(x, ring)
    pool = [
        (g.dim, i)
        for g in groups
        for i in range(len(g.generators))
    ]
    rng = random.Random(seed)
    failures: list[FailureRecord] = []
    digest = instance_digest(x)
    for _ in range(trials):
        if not pool:
            break
        p, i = rng.choice(pool)
        q, j = rng.choice(pool)
        a = groups[p].generators[i]
        b = groups[q].generators[j]
        if p + q > x.maxdim:
            continue
        target = groups[p + q]
        fwd = target.class_of(cup(x, a, b))
        rev = target.class_of(cup(x, b, a))
        expected = target.negate_coords(rev) if (p * q) % 2 else rev
        if fwd != expected:
            failures.append(
                FailureRecord(
                    seed=str(seed),
                    instance_digest=digest,
                    detail=(
                        f"classes disagree for generators ({p},{i}) and "
                        f"({q},{j}): {fwd} vs {expected}"
                    ),
                    minimized="",
                )
            )
    elapsed = time.perf_counter() - start
    return PropertyReport(
        name="anticommutativity_cohomology",
        trials=trials,
        failures=tuple(failures),
        elapsed=elapsed,
        assertion=False,
    )

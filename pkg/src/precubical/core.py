"""Finite precubical sets: face tables, validation, and face-map combinatorics.

A precubical set is stored as a dimension-graded inventory of cubes together
with a dense face table: for every n-cube u, every direction i in 1..n and
every end eps in {0, 1} the table holds the (n-1)-cube obtained by collapsing
direction i to eps.  Direction indices are 1-based everywhere in the public
API; the storage layer converts internally.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Iterable, Mapping, NamedTuple, Optional, Sequence

# Subset enumeration is 2^n per cube, so the supported dimension is capped.
MAX_DIM = 12


class CubeId(NamedTuple):
    """A cube addressed by its dimension and its position in that dimension."""

    dim: int
    index: int


class SubsetWithSign(NamedTuple):
    """An ordered subset of {1..n} with its complement and permutation sign.

    ``sign`` is the signature of the permutation of 1..n obtained by writing
    the members in increasing order followed by the complement in increasing
    order.
    """

    n: int
    members: tuple[int, ...]
    complement: tuple[int, ...]
    sign: int


def permutation_sign(seq: Sequence[int]) -> int:
    """Signature (+1/-1) of a sequence of distinct integers, by inversions."""
    inv = 0
    for a, b in itertools.combinations(seq, 2):
        if a > b:
            inv += 1
    return -1 if inv % 2 else 1


def subset_with_sign(n: int, members: Iterable[int]) -> SubsetWithSign:
    """Package a subset of {1..n} with its complement and signature."""
    g = tuple(sorted(set(members)))
    if g and (g[0] < 1 or g[-1] > n):
        raise ValueError(f"subset {g} is not contained in {{1..{n}}}")
    in_g = set(g)
    k = tuple(i for i in range(1, n + 1) if i not in in_g)
    # With both halves increasing, the inversions of members+complement are
    # counted by how far each member sits above its position.
    inv = sum(m - r for r, m in enumerate(g, start=1))
    return SubsetWithSign(n, g, k, -1 if inv % 2 else 1)


@lru_cache(maxsize=None)
def subsets_with_sign(n: int, p: int) -> tuple[SubsetWithSign, ...]:
    """All size-p subsets of {1..n} in lexicographic order, with signs."""
    if not 0 <= p <= n:
        raise ValueError(f"subset size {p} out of range for ambient size {n}")
    return tuple(
        subset_with_sign(n, combo)
        for combo in itertools.combinations(range(1, n + 1), p)
    )


def remove_at(members: Sequence[int], mu: int) -> tuple[int, ...]:
    """Drop the mu-th member (1-based), keeping ambient indexing."""
    return tuple(members[: mu - 1]) + tuple(members[mu:])


def remove_at_shift(members: Sequence[int], mu: int) -> tuple[int, ...]:
    """Drop the mu-th member and shift later members down into {1..n-1}."""
    return tuple(members[: mu - 1]) + tuple(m - 1 for m in members[mu:])


def shift_above(members: Sequence[int], j: int) -> tuple[int, ...]:
    """Reindex into {1..n-1} after direction j (not a member) is consumed."""
    if j in members:
        raise ValueError(f"direction {j} is a member of {tuple(members)}")
    return tuple(m - 1 if m > j else m for m in members)


@dataclass(frozen=True)
class Violation:
    """One defect found by ``validate``.

    kind is one of:
      - "missing-face": a face-table slot is empty; indices = (i, eps)
      - "bad-face": a slot holds a cube of the wrong dimension or an index
        out of range; indices = (i, eps)
      - "identity": the face-commutation law fails; indices = (i, j, alpha,
        beta) with i < j
    """

    kind: str
    cube: CubeId
    indices: tuple[int, ...]
    message: str


FaceTable = Mapping[int, Sequence[Sequence[tuple[Optional[CubeId], Optional[CubeId]]]]]


class PrecubicalSet:
    """Immutable dimension-graded cube inventory with a dense face table.

    Parameters
    ----------
    cube_counts:
        Number of cubes per dimension 0..maxdim.
    faces:
        Mapping dim -> per-cube list; the entry for an n-cube is a sequence
        of n ``(face_at_0, face_at_1)`` pairs of CubeId (may be None to model
        a structurally incomplete table, which ``validate`` will report).
    labels:
        Optional mapping dim -> per-cube label strings, unique per dimension.
        Missing labels are auto-generated.
    """

    __slots__ = ("_counts", "_faces", "_labels")

    def __init__(
        self,
        cube_counts: Sequence[int],
        faces: FaceTable,
        labels: Optional[Mapping[int, Sequence[str]]] = None,
    ):
        counts = tuple(int(c) for c in cube_counts)
        if any(c < 0 for c in counts):
            raise ValueError("cube counts must be nonnegative")
        if len(counts) - 1 > MAX_DIM:
            raise ValueError(
                f"dimension {len(counts) - 1} exceeds the supported maximum {MAX_DIM}"
            )
        self._counts = counts

        table: dict[int, tuple[Optional[CubeId], ...]] = {}
        for n in range(1, len(counts)):
            per_dim = faces.get(n) if faces else None
            flat: list[Optional[CubeId]] = [None] * (counts[n] * n * 2)
            if per_dim is not None:
                if len(per_dim) != counts[n]:
                    raise ValueError(
                        f"face table for dimension {n} lists {len(per_dim)} cubes, "
                        f"expected {counts[n]}"
                    )
                for u, pairs in enumerate(per_dim):
                    pairs = list(pairs)
                    if len(pairs) != n:
                        raise ValueError(
                            f"cube {u} of dimension {n} lists {len(pairs)} face "
                            f"pairs, expected {n}"
                        )
                    for i0, (f0, f1) in enumerate(pairs):
                        flat[(u * n + i0) * 2] = f0
                        flat[(u * n + i0) * 2 + 1] = f1
            table[n] = tuple(flat)
        self._faces = table

        if labels is None:
            labels = {}
        lab: dict[int, tuple[str, ...]] = {}
        for n, count in enumerate(counts):
            given = labels.get(n)
            if given is not None:
                names = tuple(str(s) for s in given)
                if len(names) != count:
                    raise ValueError(
                        f"{len(names)} labels for dimension {n}, expected {count}"
                    )
            else:
                names = tuple(f"x{n}_{i}" for i in range(count))
            if len(set(names)) != len(names):
                raise ValueError(f"duplicate labels in dimension {n}")
            lab[n] = names
        self._labels = lab

    # -- basic inventory -------------------------------------------------

    @property
    def cube_counts(self) -> tuple[int, ...]:
        return self._counts

    @property
    def maxdim(self) -> int:
        """Top dimension; -1 for the empty precubical set."""
        return len(self._counts) - 1

    def count(self, n: int) -> int:
        if 0 <= n < len(self._counts):
            return self._counts[n]
        return 0

    def cubes(self, n: int) -> Iterable[CubeId]:
        return (CubeId(n, i) for i in range(self.count(n)))

    def all_cubes(self) -> Iterable[CubeId]:
        for n in range(len(self._counts)):
            yield from self.cubes(n)

    def label(self, u: CubeId) -> str:
        return self._labels[u.dim][u.index]

    def labels(self, n: int) -> tuple[str, ...]:
        return self._labels.get(n, ())

    def find_label(self, n: int, name: str) -> Optional[CubeId]:
        try:
            return CubeId(n, self._labels[n].index(name))
        except (KeyError, ValueError):
            return None

    # -- faces -------------------------------------------------------------

    def raw_face(self, u: CubeId, i: int, eps: int) -> Optional[CubeId]:
        """Face-table slot as stored; None when the slot was never filled."""
        n = u.dim
        if not 1 <= i <= n:
            raise ValueError(f"direction {i} out of range 1..{n}")
        if eps not in (0, 1):
            raise ValueError(f"end {eps} must be 0 or 1")
        return self._faces[n][(u.index * n + (i - 1)) * 2 + eps]

    def face(self, u: CubeId, i: int, eps: int) -> CubeId:
        """The (n-1)-cube at end eps of u in direction i (1-based)."""
        f = self.raw_face(u, i, eps)
        if f is None:
            raise ValueError(
                f"missing face entry for cube {self.label(u)} "
                f"(dimension {u.dim}), direction {i}, end {eps}"
            )
        return f

    # -- equality ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PrecubicalSet):
            return NotImplemented
        return (
            self._counts == other._counts
            and self._faces == other._faces
            and self._labels == other._labels
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"PrecubicalSet(cube_counts={list(self._counts)})"


def validate(x: PrecubicalSet) -> list[Violation]:
    """Check structural completeness and the face-commutation identities.

    Returns every violation found; the empty list means the face data is a
    precubical set.  Identity checks involving a structurally broken slot are
    skipped (the broken slot itself is reported).
    """
    report: list[Violation] = []
    broken: set[tuple[int, int]] = set()

    for n in range(1, x.maxdim + 1):
        for u in x.cubes(n):
            ok = True
            for i in range(1, n + 1):
                for eps in (0, 1):
                    f = x.raw_face(u, i, eps)
                    if f is None:
                        report.append(
                            Violation(
                                "missing-face",
                                u,
                                (i, eps),
                                f"cube {x.label(u)} of dimension {n} has no "
                                f"face in direction {i}, end {eps}",
                            )
                        )
                        ok = False
                    elif f.dim != n - 1 or not 0 <= f.index < x.count(n - 1):
                        report.append(
                            Violation(
                                "bad-face",
                                u,
                                (i, eps),
                                f"cube {x.label(u)} of dimension {n}, direction "
                                f"{i}, end {eps}: face {f} is not a cube of "
                                f"dimension {n - 1}",
                            )
                        )
                        ok = False
            if not ok:
                broken.add((n, u.index))

    for n in range(2, x.maxdim + 1):
        for u in x.cubes(n):
            if (n, u.index) in broken:
                continue
            for i in range(1, n + 1):
                for j in range(i + 1, n + 1):
                    for alpha in (0, 1):
                        for beta in (0, 1):
                            fj = x.face(u, j, beta)
                            fi = x.face(u, i, alpha)
                            if (n - 1, fj.index) in broken or (
                                n - 1,
                                fi.index,
                            ) in broken:
                                continue
                            lhs = x.face(fj, i, alpha)
                            rhs = x.face(fi, j - 1, beta)
                            if lhs != rhs:
                                report.append(
                                    Violation(
                                        "identity",
                                        u,
                                        (i, j, alpha, beta),
                                        f"cube {x.label(u)}: face {i} end "
                                        f"{alpha} of face {j} end {beta} is "
                                        f"{lhs}, but face {j - 1} end {beta} "
                                        f"of face {i} end {alpha} is {rhs}",
                                    )
                                )
    return report


def iterated_face(
    x: PrecubicalSet,
    u: CubeId,
    kept: Iterable[int] | SubsetWithSign,
    eps: int,
) -> CubeId:
    """Collapse every direction of u not in ``kept`` to the end ``eps``.

    The complement directions are eliminated largest-first so the remaining
    indices never shift.  The result's dimension is the number of kept
    directions.
    """
    n = u.dim
    if isinstance(kept, SubsetWithSign):
        if kept.n != n:
            raise ValueError(
                f"subset over ambient size {kept.n} applied to a cube of "
                f"dimension {n}"
            )
        complement = kept.complement
    else:
        members = sorted(set(kept))
        if members and (members[0] < 1 or members[-1] > n):
            raise ValueError(
                f"kept directions {members} are not a subset of {{1..{n}}}"
            )
        in_kept = set(members)
        complement = tuple(i for i in range(1, n + 1) if i not in in_kept)
    for k in reversed(complement):
        u = x.face(u, k, eps)
    return u


# -- builders ---------------------------------------------------------------


def interval() -> PrecubicalSet:
    """One directed edge with distinct endpoints."""
    a, b = CubeId(0, 0), CubeId(0, 1)
    return PrecubicalSet(
        [2, 1],
        {1: [[(a, b)]]},
        {0: ["v0", "v1"], 1: ["e"]},
    )


def circle() -> PrecubicalSet:
    """One vertex and one loop edge."""
    o = CubeId(0, 0)
    return PrecubicalSet(
        [1, 1],
        {1: [[(o, o)]]},
        {0: ["o"], 1: ["t"]},
    )


def torus() -> PrecubicalSet:
    """The one-vertex torus: edges t1, t2 and one square glued along both."""
    o = CubeId(0, 0)
    t1, t2 = CubeId(1, 0), CubeId(1, 1)
    return PrecubicalSet(
        [1, 2, 1],
        {
            1: [[(o, o)], [(o, o)]],
            2: [[(t1, t1), (t2, t2)]],
        },
        {0: ["o"], 1: ["t1", "t2"], 2: ["v"]},
    )


def standard_cube(n: int) -> PrecubicalSet:
    """The full n-cube: one k-face per word in {0,1,*}^n with k stars."""
    if n < 0:
        raise ValueError("cube dimension must be nonnegative")
    if n > MAX_DIM:
        raise ValueError(f"dimension {n} exceeds the supported maximum {MAX_DIM}")

    words: list[list[str]] = [[] for _ in range(n + 1)]
    for combo in itertools.product("01*", repeat=n):
        word = "".join(combo)
        words[word.count("*")].append(word)
    for bucket in words:
        bucket.sort()
    index_of = [{w: i for i, w in enumerate(bucket)} for bucket in words]

    faces: dict[int, list[list[tuple[CubeId, CubeId]]]] = {}
    for p in range(1, n + 1):
        per_dim = []
        for word in words[p]:
            stars = [pos for pos, ch in enumerate(word) if ch == "*"]
            pairs = []
            for i in range(p):
                lo = word[: stars[i]] + "0" + word[stars[i] + 1 :]
                hi = word[: stars[i]] + "1" + word[stars[i] + 1 :]
                pairs.append(
                    (CubeId(p - 1, index_of[p - 1][lo]), CubeId(p - 1, index_of[p - 1][hi]))
                )
            per_dim.append(pairs)
        faces[p] = per_dim

    labels = {p: ["c" + w for w in words[p]] for p in range(n + 1)}
    return PrecubicalSet([len(b) for b in words], faces, labels)


def tensor_product(x: PrecubicalSet, y: PrecubicalSet) -> PrecubicalSet:
    """Product set whose n-cubes are pairs (a, b) with dim a + dim b = n.

    Direction i acts on the left factor when i <= dim a, otherwise on the
    right factor with the index shifted down by dim a.  Pairs are enumerated
    by left dimension, then left index, then right index.
    """
    if x.maxdim < 0 or y.maxdim < 0:
        return PrecubicalSet([], {})
    total = x.maxdim + y.maxdim
    if total > MAX_DIM:
        raise ValueError(
            f"product dimension {total} exceeds the supported maximum {MAX_DIM}"
        )

    pairs: list[list[tuple[int, int, int]]] = [[] for _ in range(total + 1)]
    index_of: dict[tuple[int, int, int, int], int] = {}
    for n in range(total + 1):
        for p in range(n + 1):
            q = n - p
            for xi in range(x.count(p)):
                for yi in range(y.count(q)):
                    index_of[(p, q, xi, yi)] = len(pairs[n])
                    pairs[n].append((p, xi, yi))

    faces: dict[int, list[list[tuple[CubeId, CubeId]]]] = {}
    for n in range(1, total + 1):
        per_dim = []
        for p, xi, yi in pairs[n]:
            q = n - p
            entry = []
            for i in range(1, n + 1):
                if i <= p:
                    fx0 = x.face(CubeId(p, xi), i, 0)
                    fx1 = x.face(CubeId(p, xi), i, 1)
                    entry.append(
                        (
                            CubeId(n - 1, index_of[(p - 1, q, fx0.index, yi)]),
                            CubeId(n - 1, index_of[(p - 1, q, fx1.index, yi)]),
                        )
                    )
                else:
                    fy0 = y.face(CubeId(q, yi), i - p, 0)
                    fy1 = y.face(CubeId(q, yi), i - p, 1)
                    entry.append(
                        (
                            CubeId(n - 1, index_of[(p, q - 1, xi, fy0.index)]),
                            CubeId(n - 1, index_of[(p, q - 1, xi, fy1.index)]),
                        )
                    )
            per_dim.append(entry)
        faces[n] = per_dim

    labels: dict[int, list[str]] = {}
    collision = False
    for n in range(total + 1):
        names = [
            f"{x.labels(p)[xi]}|{y.labels(n - p)[yi]}" for p, xi, yi in pairs[n]
        ]
        if len(set(names)) != len(names):
            collision = True
            break
        labels[n] = names
    if collision:
        labels = {}

    return PrecubicalSet(
        [len(pairs[n]) for n in range(total + 1)],
        faces,
        labels or None,
    )


def tensor_many(factors: Sequence[PrecubicalSet]) -> PrecubicalSet:
    """Left-associated tensor product of one or more factors."""
    if not factors:
        raise ValueError("need at least one factor")
    return reduce(tensor_product, factors)

"""Chains, tensor chains and cochains over a precubical set.

Chains carry integer coefficients (formal sums of cubes); cochains are total
functions from the n-cubes to a coefficient ring.  The operations here are
the signed boundary, the tensor-complex boundary, the subset-signed diagonal
into the tensor complex, the coboundary, and the cup product that pairs
0-end faces of the first factor with 1-end faces of the second, weighted by
the subset signature.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .core import CubeId, PrecubicalSet, iterated_face, subsets_with_sign
from .rings import CoeffRing


class Chain:
    """Finitely supported integer combination of cubes of one dimension."""

    __slots__ = ("dim", "coeffs")

    def __init__(self, dim: int, coeffs: Mapping[CubeId, int] | None = None):
        self.dim = dim
        clean: dict[CubeId, int] = {}
        for u, a in (coeffs or {}).items():
            if u.dim != dim:
                raise ValueError(f"cube {u} in a chain of dimension {dim}")
            if a != 0:
                clean[u] = clean.get(u, 0) + a
        self.coeffs = {u: a for u, a in clean.items() if a != 0}

    @classmethod
    def of_cube(cls, u: CubeId, coeff: int = 1) -> "Chain":
        return cls(u.dim, {u: coeff})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "Chain") -> "Chain":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        merged = dict(self.coeffs)
        for u, a in other.coeffs.items():
            merged[u] = merged.get(u, 0) + a
        return Chain(self.dim, merged)

    def __neg__(self) -> "Chain":
        return Chain(self.dim, {u: -a for u, a in self.coeffs.items()})

    def __sub__(self, other: "Chain") -> "Chain":
        return self + (-other)

    def scaled(self, c: int) -> "Chain":
        return Chain(self.dim, {u: c * a for u, a in self.coeffs.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Chain):
            return NotImplemented
        return self.dim == other.dim and self.coeffs == other.coeffs

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"Chain(dim={self.dim}, {self.coeffs!r})"


class TensorChain:
    """Integer combination of cube pairs (a, b) with dim a + dim b fixed."""

    __slots__ = ("dim", "coeffs")

    def __init__(
        self, dim: int, coeffs: Mapping[tuple[CubeId, CubeId], int] | None = None
    ):
        self.dim = dim
        clean: dict[tuple[CubeId, CubeId], int] = {}
        for (a, b), c in (coeffs or {}).items():
            if a.dim + b.dim != dim:
                raise ValueError(
                    f"pair ({a}, {b}) in a tensor chain of dimension {dim}"
                )
            if c != 0:
                clean[(a, b)] = clean.get((a, b), 0) + c
        self.coeffs = {k: c for k, c in clean.items() if c != 0}

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "TensorChain") -> "TensorChain":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        merged = dict(self.coeffs)
        for k, c in other.coeffs.items():
            merged[k] = merged.get(k, 0) + c
        return TensorChain(self.dim, merged)

    def __neg__(self) -> "TensorChain":
        return TensorChain(self.dim, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other: "TensorChain") -> "TensorChain":
        return self + (-other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TensorChain):
            return NotImplemented
        return self.dim == other.dim and self.coeffs == other.coeffs

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"TensorChain(dim={self.dim}, {self.coeffs!r})"


class Cochain:
    """Total function from the n-cubes of a fixed set to ring elements."""

    __slots__ = ("dim", "ring", "values")

    def __init__(self, dim: int, ring: CoeffRing, values: Iterable[int]):
        self.dim = dim
        self.ring = ring
        self.values = tuple(ring.normalize(v) for v in values)

    @classmethod
    def zero(cls, x: PrecubicalSet, dim: int, ring: CoeffRing) -> "Cochain":
        return cls(dim, ring, [0] * x.count(dim))

    @classmethod
    def dual(
        cls, x: PrecubicalSet, u: CubeId, ring: CoeffRing, value: int = 1
    ) -> "Cochain":
        """The cochain taking ``value`` on u and zero elsewhere."""
        vals = [0] * x.count(u.dim)
        vals[u.index] = value
        return cls(u.dim, ring, vals)

    def __call__(self, u: CubeId) -> int:
        if u.dim != self.dim:
            raise ValueError(f"cube {u} evaluated by a {self.dim}-cochain")
        return self.values[u.index]

    def is_zero(self) -> bool:
        return all(v == self.ring.zero for v in self.values)

    def __add__(self, other: "Cochain") -> "Cochain":
        self._match(other)
        r = self.ring
        return Cochain(
            self.dim, r, [r.add(a, b) for a, b in zip(self.values, other.values)]
        )

    def __neg__(self) -> "Cochain":
        r = self.ring
        return Cochain(self.dim, r, [r.neg(a) for a in self.values])

    def __sub__(self, other: "Cochain") -> "Cochain":
        self._match(other)
        r = self.ring
        return Cochain(
            self.dim, r, [r.sub(a, b) for a, b in zip(self.values, other.values)]
        )

    def scaled(self, c: int) -> "Cochain":
        r = self.ring
        return Cochain(self.dim, r, [r.mul(c, a) for a in self.values])

    def _match(self, other: "Cochain") -> None:
        if self.ring != other.ring:
            raise ValueError(
                f"coefficient ring mismatch: {self.ring} vs {other.ring}"
            )
        if self.dim != other.dim or len(self.values) != len(other.values):
            raise ValueError("cochain dimension mismatch")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Cochain):
            return NotImplemented
        return (
            self.dim == other.dim
            and self.ring == other.ring
            and self.values == other.values
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"Cochain(dim={self.dim}, ring={self.ring}, values={self.values})"


# -- chain-level operations ---------------------------------------------------


def boundary(x: PrecubicalSet, c: Chain) -> Chain:
    """Signed sum of faces: each direction i contributes (-1)^i (top - bottom)."""
    if c.dim < 1:
        raise ValueError("boundary of a 0-chain is undefined")
    out: dict[CubeId, int] = {}
    for u, a in c.coeffs.items():
        for i in range(1, c.dim + 1):
            s = -a if i % 2 else a
            hi = x.face(u, i, 1)
            lo = x.face(u, i, 0)
            out[hi] = out.get(hi, 0) + s
            out[lo] = out.get(lo, 0) - s
    return Chain(c.dim - 1, out)


def tensor_boundary(x: PrecubicalSet, c: TensorChain) -> TensorChain:
    """Boundary on pairs: act on the left factor, then on the right with the
    sign (-1)^(dim of left); factors of dimension 0 contribute nothing."""
    if c.dim < 1:
        raise ValueError("boundary of a 0-dimensional tensor chain is undefined")
    out: dict[tuple[CubeId, CubeId], int] = {}

    def put(key: tuple[CubeId, CubeId], val: int) -> None:
        out[key] = out.get(key, 0) + val

    for (a, b), coeff in c.coeffs.items():
        for i in range(1, a.dim + 1):
            s = -coeff if i % 2 else coeff
            put((x.face(a, i, 1), b), s)
            put((x.face(a, i, 0), b), -s)
        right_sign = -1 if a.dim % 2 else 1
        for i in range(1, b.dim + 1):
            s = (-1 if i % 2 else 1) * right_sign * coeff
            put((a, x.face(b, i, 1)), s)
            put((a, x.face(b, i, 0)), -s)
    return TensorChain(c.dim - 1, out)


def diagonal(x: PrecubicalSet, c: Chain) -> TensorChain:
    """Subset-signed diagonal into the tensor complex.

    Each generator u of dimension n contributes, for every subset of the
    directions, the pair (0-end face over the subset, 1-end face over the
    complement) with the subset's permutation sign.
    """
    out: dict[tuple[CubeId, CubeId], int] = {}
    n = c.dim
    for u, a in c.coeffs.items():
        for p in range(n + 1):
            for sub in subsets_with_sign(n, p):
                left = iterated_face(x, u, sub, 0)
                right = iterated_face(x, u, sub.complement, 1)
                key = (left, right)
                out[key] = out.get(key, 0) + a * sub.sign
    return TensorChain(n, out)


# -- cochain-level operations -------------------------------------------------


def coboundary(x: PrecubicalSet, phi: Cochain) -> Cochain:
    """Alternating signed sum of face evaluations, one dimension up."""
    n = phi.dim
    r = phi.ring
    vals = []
    for u in x.cubes(n + 1):
        acc = r.zero
        for i in range(1, n + 2):
            term = r.sub(phi(x.face(u, i, 1)), phi(x.face(u, i, 0)))
            acc = r.add(acc, r.neg(term) if i % 2 else term)
        vals.append(acc)
    return Cochain(n + 1, r, vals)


def cup(x: PrecubicalSet, phi: Cochain, psi: Cochain) -> Cochain:
    """Signed pairing of front 0-end faces with back 1-end faces.

    For each (p+q)-cube, sum over all size-p subsets of the directions: the
    subset sign times phi on the 0-end face over the subset times psi on the
    1-end face over the complement.  Factor order is preserved.
    """
    if phi.ring != psi.ring:
        raise ValueError(
            f"coefficient ring mismatch: {phi.ring} vs {psi.ring}"
        )
    p, q = phi.dim, psi.dim
    n = p + q
    r = phi.ring
    vals = []
    for u in x.cubes(n):
        acc = r.zero
        for sub in subsets_with_sign(n, p):
            a = phi(iterated_face(x, u, sub, 0))
            b = psi(iterated_face(x, u, sub.complement, 1))
            prod = r.mul(a, b)
            acc = r.add(acc, r.neg(prod) if sub.sign < 0 else prod)
        vals.append(acc)
    return Cochain(n, r, vals)


def unit_cochain(x: PrecubicalSet, ring: CoeffRing) -> Cochain:
    """The 0-cochain taking the ring unit on every vertex."""
    return Cochain(0, ring, [ring.one] * x.count(0))

"""Cohomology groups and the graded ring multiplication table.

Degree-n classes are computed as the kernel of the degree-n coboundary
matrix modulo the image of the degree-(n-1) one.  Over the integers the
quotient is extracted with Smith normal form, which supplies canonical
coordinates, explicit cocycle generators and exact reduction of arbitrary
cocycles to class coordinates; over a prime field plain elimination does the
same job.  Coordinates list the free summands first, then the torsion
summands in invariant-factor order; torsion coordinates are residues.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .cochains import Cochain, cup
from .core import PrecubicalSet
from .exactlinalg import (
    IntMatrix,
    SmithForm,
    field_rank_and_kernel,
    inverse_unimodular,
    is_prime,
    kernel_basis,
    lattice_solve,
    smith_normal_form,
)
from .rings import CoeffRing, Z


def delta_matrix(x: PrecubicalSet, n: int, ring: CoeffRing = Z) -> IntMatrix:
    """Matrix of the degree-n coboundary in the cube bases.

    Rows are indexed by (n+1)-cubes, columns by n-cubes, both in enumeration
    order; the (u, v) entry is the signed number of times v occurs among the
    faces of u.  Entries are reduced into canonical residues for modular
    rings.
    """
    rows = x.count(n + 1)
    cols = x.count(n)
    entries = [[0] * cols for _ in range(rows)]
    for u in x.cubes(n + 1):
        row = entries[u.index]
        for i in range(1, n + 2):
            s = -1 if i % 2 else 1
            row[x.face(u, i, 1).index] += s
            row[x.face(u, i, 0).index] -= s
    if ring.modulus:
        entries = [[ring.normalize(v) for v in row] for row in entries]
    return IntMatrix(rows, cols, entries)


class IntegerQuotient:
    """ker(delta_out) / im(delta_in) over the integers, with reduction data.

    Generators are unit coordinate vectors in the Smith basis of the image
    lattice inside the kernel lattice; a stored sign per generator keeps the
    first nonzero entry of each generator vector positive.
    """

    def __init__(self, delta_out: IntMatrix, delta_in: IntMatrix):
        if delta_out.cols != delta_in.rows:
            raise ValueError("coboundary matrices do not compose")
        self.delta_out = delta_out
        self.ambient = delta_out.cols

        basis = kernel_basis(delta_out)
        self.kernel_matrix = IntMatrix.from_columns(basis, rows=self.ambient)
        self.kernel_snf: SmithForm = smith_normal_form(self.kernel_matrix)
        k = len(basis)

        image_coords = []
        for j in range(delta_in.cols):
            sol = lattice_solve(self.kernel_snf, delta_in.column(j))
            if sol is None:
                raise ValueError(
                    "image is not contained in the kernel; the input is not "
                    "a cochain complex"
                )
            image_coords.append(sol)
        image_matrix = IntMatrix.from_columns(image_coords, rows=k)
        snf = smith_normal_form(image_matrix)

        self.transform = snf.U
        self.diag = snf.diag
        self.image_rank = snf.rank
        self.free_indices = tuple(range(snf.rank, k))
        self.torsion_indices = tuple(
            i for i in range(snf.rank) if snf.diag[i] > 1
        )
        self.torsion = tuple(snf.diag[i] for i in self.torsion_indices)
        self.free_rank = len(self.free_indices)

        inv = inverse_unimodular(snf.U) if k else IntMatrix.identity(0)
        gens = []
        signs = []
        for i in self.free_indices + self.torsion_indices:
            vec = self.kernel_matrix.mul_vec(inv.column(i))
            lead = next((v for v in vec if v), 1)
            sign = -1 if lead < 0 else 1
            gens.append([sign * v for v in vec])
            signs.append(sign)
        self.generators = tuple(tuple(g) for g in gens)
        self.signs = tuple(signs)

    def is_cocycle(self, vec: Sequence[int]) -> bool:
        return all(v == 0 for v in self.delta_out.mul_vec(vec))

    def coords_of(self, vec: Sequence[int]) -> tuple[int, ...]:
        if not self.is_cocycle(vec):
            raise ValueError("not a cocycle")
        x = lattice_solve(self.kernel_snf, vec)
        if x is None:
            raise ValueError("cocycle lies outside the kernel lattice")
        w = self.transform.mul_vec(x)
        out = []
        pos = 0
        for i in self.free_indices:
            out.append(self.signs[pos] * w[i])
            pos += 1
        for i in self.torsion_indices:
            out.append((self.signs[pos] * w[i]) % self.diag[i])
            pos += 1
        return tuple(out)

    def negate_coords(self, coords: Sequence[int]) -> tuple[int, ...]:
        out = list(coords)
        for pos in range(self.free_rank):
            out[pos] = -out[pos]
        for pos, d in enumerate(self.torsion, start=self.free_rank):
            out[pos] = (-out[pos]) % d
        return tuple(out)


class FieldQuotient:
    """ker / im over the field with p elements."""

    def __init__(self, delta_out: IntMatrix, delta_in: IntMatrix, p: int):
        if delta_out.cols != delta_in.rows:
            raise ValueError("coboundary matrices do not compose")
        self.p = p
        self.delta_out = delta_out
        self.ambient = delta_out.cols

        _, kernel = field_rank_and_kernel(delta_out, p)

        span: list[list[int]] = []
        image: list[list[int]] = []
        for j in range(delta_in.cols):
            col = [v % p for v in delta_in.column(j)]
            if self._extends_span(span, col):
                image.append(col)
        gens: list[list[int]] = []
        for vec in kernel:
            if self._extends_span(span, vec):
                gens.append(vec)
        self.image_basis = image
        self.generators = tuple(tuple(g) for g in gens)
        self.free_rank = len(gens)
        self.torsion: tuple[int, ...] = ()
        self.solver_columns = image + gens

    def _extends_span(self, span: list[list[int]], vec: Sequence[int]) -> bool:
        """Gaussian growth of a row-echelon span; True if vec was independent."""
        p = self.p
        v = [x % p for x in vec]
        for row in span:
            lead = next(i for i, x in enumerate(row) if x)
            if v[lead]:
                c = (v[lead] * pow(row[lead], p - 2, p)) % p
                v = [(a - c * b) % p for a, b in zip(v, row)]
        if any(v):
            span.append(v)
            return True
        return False

    def is_cocycle(self, vec: Sequence[int]) -> bool:
        return all(v % self.p == 0 for v in self.delta_out.mul_vec(vec))

    def coords_of(self, vec: Sequence[int]) -> tuple[int, ...]:
        if not self.is_cocycle(vec):
            raise ValueError("not a cocycle")
        p = self.p
        cols = self.solver_columns
        width = len(cols)
        rows = [
            [cols[j][i] % p for j in range(width)] + [vec[i] % p]
            for i in range(self.ambient)
        ]
        pivots: list[int] = []
        r = 0
        for j in range(width):
            pivot_row = next((i for i in range(r, len(rows)) if rows[i][j]), None)
            if pivot_row is None:
                continue
            rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
            inv = pow(rows[r][j], p - 2, p)
            rows[r] = [(x * inv) % p for x in rows[r]]
            for i in range(len(rows)):
                if i != r and rows[i][j]:
                    c = rows[i][j]
                    rows[i] = [(x - c * y) % p for x, y in zip(rows[i], rows[r])]
            pivots.append(j)
            r += 1
        if any(row[width] for row in rows[r:]):
            raise ValueError("cocycle lies outside the kernel")
        solution = [0] * width
        for row_idx, j in enumerate(pivots):
            solution[j] = rows[row_idx][width]
        return tuple(solution[len(self.image_basis):])

    def negate_coords(self, coords: Sequence[int]) -> tuple[int, ...]:
        return tuple((-c) % self.p for c in coords)


@dataclass
class CohomologyGroup:
    """One graded piece: free rank, invariant factors, cocycle generators.

    ``generators`` lists a cochain per free summand, then one per torsion
    summand; ``class_of`` maps any cocycle to its coordinates in that order
    (torsion coordinates reduced mod the invariant factor).
    """

    dim: int
    ring: CoeffRing
    free_rank: int
    torsion: tuple[int, ...]
    generators: tuple[Cochain, ...]
    quotient: object = field(repr=False)

    @property
    def total_generators(self) -> int:
        return len(self.generators)

    def is_trivial(self) -> bool:
        return not self.generators

    def class_of(self, z: Cochain) -> tuple[int, ...]:
        if z.ring != self.ring:
            raise ValueError(f"ring mismatch: {z.ring} vs {self.ring}")
        if z.dim != self.dim:
            raise ValueError(f"dimension mismatch: {z.dim} vs {self.dim}")
        return self.quotient.coords_of(list(z.values))

    def negate_coords(self, coords: Sequence[int]) -> tuple[int, ...]:
        return self.quotient.negate_coords(coords)

    def describe(self) -> str:
        """Human form: Z, Z^2, (Z/3)^2, Z ⊕ Z/2, or 0."""
        parts = []
        if self.ring.modulus == 0:
            if self.free_rank == 1:
                parts.append("Z")
            elif self.free_rank > 1:
                parts.append(f"Z^{self.free_rank}")
            parts.extend(f"Z/{d}" for d in self.torsion)
        else:
            m = self.ring.modulus
            if self.free_rank == 1:
                parts.append(f"Z/{m}")
            elif self.free_rank > 1:
                parts.append(f"(Z/{m})^{self.free_rank}")
        return " ⊕ ".join(parts) if parts else "0"


def cohomology_groups(
    x: PrecubicalSet, ring: CoeffRing = Z
) -> list[CohomologyGroup]:
    """Groups in degrees 0..maxdim, with generators lifted to cochains.

    Coefficients must be the integers or a prime field; group extraction
    over a composite modulus is refused.
    """
    if ring.modulus != 0 and not is_prime(ring.modulus):
        raise ValueError(
            f"cohomology groups need Z or Z/p with p prime; Z/{ring.modulus} "
            f"has a composite modulus (cochain operations still work there)"
        )
    groups = []
    for n in range(x.maxdim + 1):
        delta_out = delta_matrix(x, n, ring)
        if n == 0:
            delta_in = IntMatrix.zeros(x.count(0), 0)
        else:
            delta_in = delta_matrix(x, n - 1, ring)
        if ring.modulus == 0:
            quotient: object = IntegerQuotient(delta_out, delta_in)
        else:
            quotient = FieldQuotient(delta_out, delta_in, ring.modulus)
        gens = tuple(
            Cochain(n, ring, vec) for vec in quotient.generators
        )
        groups.append(
            CohomologyGroup(
                dim=n,
                ring=ring,
                free_rank=quotient.free_rank,
                torsion=quotient.torsion,
                generators=gens,
                quotient=quotient,
            )
        )
    return groups


def class_of(group: CohomologyGroup, z: Cochain) -> tuple[int, ...]:
    """Coordinates of the class of the cocycle z; coboundaries map to zero."""
    return group.class_of(z)


@dataclass
class RingTable:
    """Multiplication table of the graded ring in generator coordinates.

    ``products[(p, q)][i][j]`` is the coordinate vector, in the degree p+q
    group, of the product of generator i of degree p with generator j of
    degree q; degrees past the top dimension have no generators, so those
    entries are empty vectors.
    """

    groups: tuple[CohomologyGroup, ...]
    products: dict[tuple[int, int], tuple[tuple[tuple[int, ...], ...], ...]]

    def product(self, p: int, q: int, i: int, j: int) -> tuple[int, ...]:
        return self.products[(p, q)][i][j]


def ring_table(x: PrecubicalSet, ring: CoeffRing = Z) -> RingTable:
    """Tabulate every generator product, reduced to class coordinates."""
    groups = cohomology_groups(x, ring)
    top = x.maxdim
    products: dict[tuple[int, int], tuple[tuple[tuple[int, ...], ...], ...]] = {}
    for p in range(top + 1):
        for q in range(top + 1):
            rows = []
            for gi in groups[p].generators:
                row = []
                for gj in groups[q].generators:
                    if p + q <= top:
                        row.append(groups[p + q].class_of(cup(x, gi, gj)))
                    else:
                        row.append(())
                rows.append(tuple(row))
            products[(p, q)] = tuple(rows)
    return RingTable(groups=tuple(groups), products=products)

"""Coefficient rings for cochains: the integers and the integers mod m.

Ring elements are plain Python ints; modular rings keep them in canonical
residue form 0..m-1.  The cochain product never reorders factors, so a
noncommutative ring supplied through the same interface would work; both
shipped kinds are commutative.
"""

from __future__ import annotations


class CoeffRing:
    """Base interface.  ``modulus`` is 0 for the integers, m >= 2 otherwise."""

    modulus: int = 0

    @property
    def commutative(self) -> bool:
        return True

    @property
    def name(self) -> str:
        return "Z" if self.modulus == 0 else f"Z/{self.modulus}"

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1 if self.modulus != 1 else 0

    def normalize(self, a: int) -> int:
        return a if self.modulus == 0 else a % self.modulus

    def add(self, a: int, b: int) -> int:
        return self.normalize(a + b)

    def sub(self, a: int, b: int) -> int:
        return self.normalize(a - b)

    def neg(self, a: int) -> int:
        return self.normalize(-a)

    def mul(self, a: int, b: int) -> int:
        return self.normalize(a * b)

    def eq(self, a: int, b: int) -> bool:
        return self.normalize(a) == self.normalize(b)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CoeffRing):
            return NotImplemented
        return self.modulus == other.modulus

    def __hash__(self) -> int:
        return hash(("CoeffRing", self.modulus))

    def __repr__(self) -> str:
        return self.name


class IntegerRing(CoeffRing):
    modulus = 0


class ModularRing(CoeffRing):
    def __init__(self, m: int):
        if m < 2:
            raise ValueError(f"modulus must be at least 2, got {m}")
        self.modulus = m


Z = IntegerRing()


def Zmod(m: int) -> ModularRing:
    return ModularRing(m)


def parse_ring(spec: str) -> CoeffRing:
    """Parse a coefficient spec: "Z" or "Z/m" with m >= 2."""
    text = spec.strip()
    if text == "Z":
        return Z
    if text.startswith("Z/"):
        try:
            m = int(text[2:])
        except ValueError:
            raise ValueError(f"bad coefficient spec {spec!r}") from None
        if m < 2:
            raise ValueError(f"modulus must be at least 2, got {m}")
        return ModularRing(m)
    raise ValueError(f"bad coefficient spec {spec!r} (expected Z or Z/m)")

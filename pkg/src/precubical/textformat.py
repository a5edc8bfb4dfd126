"""Plain-text interchange format for precubical sets.

A document has two sections.  ``dims:`` lists the cube labels per dimension,
ascending from 0; ``faces:`` gives, for every cube of dimension n >= 1, its n
bottom/top face pairs as ``[low, high]`` groups:

    dims:
      0: o
      1: t1 t2
      2: v
    faces:
      t1: [o, o]
      t2: [o, o]
      v: [t1, t1] [t2, t2]

Labels may not contain whitespace or any of ``[ ] , : #`` and must be unique
across the whole document.  ``#`` starts a comment.  ``serialize`` emits the
canonical form shown above (two-space indent, single spaces, trailing
newline); canonical documents round-trip byte-identically.
"""

from __future__ import annotations

import re

from .core import CubeId, PrecubicalSet

_LABEL_RE = re.compile(r"^[^\s\[\],:#]+$")
_PAIR_RE = re.compile(r"\[\s*([^\s\[\],:#]+)\s*,\s*([^\s\[\],:#]+)\s*\]")


class ParseError(ValueError):
    """Document error, carrying the 1-based line it was found on."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def serialize(x: PrecubicalSet) -> str:
    """Canonical text form; labels must be unique across dimensions."""
    seen: dict[str, int] = {}
    for n in range(x.maxdim + 1):
        for name in x.labels(n):
            if name in seen:
                raise ValueError(
                    f"label {name!r} appears in dimensions {seen[name]} and "
                    f"{n}; the text format needs document-wide unique labels"
                )
            if not _LABEL_RE.match(name):
                raise ValueError(f"label {name!r} contains reserved characters")
            seen[name] = n

    lines = ["dims:"]
    for n in range(x.maxdim + 1):
        names = " ".join(x.labels(n))
        lines.append(f"  {n}: {names}" if names else f"  {n}:")
    lines.append("faces:")
    for n in range(1, x.maxdim + 1):
        for u in x.cubes(n):
            pairs = " ".join(
                f"[{x.label(x.face(u, i, 0))}, {x.label(x.face(u, i, 1))}]"
                for i in range(1, n + 1)
            )
            lines.append(f"  {x.label(u)}: {pairs}")
    return "\n".join(lines) + "\n"


def parse(text: str) -> PrecubicalSet:
    """Parse a document; raises ParseError with a line number on any defect."""
    dims: list[list[str]] = []
    label_dim: dict[str, int] = {}
    label_pos: dict[str, int] = {}
    face_lines: dict[str, tuple[int, str]] = {}

    section = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        stripped = line.strip()
        if stripped == "dims:":
            if section is not None:
                raise ParseError(lineno, "duplicate dims: section")
            section = "dims"
            continue
        if stripped == "faces:":
            if section != "dims":
                raise ParseError(lineno, "faces: section before dims:")
            section = "faces"
            continue
        if section is None:
            raise ParseError(lineno, f"expected dims: header, got {stripped!r}")

        head, sep, rest = stripped.partition(":")
        if not sep:
            raise ParseError(lineno, f"expected '<name>: ...', got {stripped!r}")
        head = head.strip()
        rest = rest.strip()

        if section == "dims":
            try:
                n = int(head)
            except ValueError:
                raise ParseError(
                    lineno, f"dimension must be an integer, got {head!r}"
                ) from None
            if n != len(dims):
                raise ParseError(
                    lineno, f"expected dimension {len(dims)}, got {n}"
                )
            names = rest.split()
            for pos, name in enumerate(names):
                if not _LABEL_RE.match(name):
                    raise ParseError(lineno, f"bad label {name!r}")
                if name in label_dim:
                    raise ParseError(lineno, f"duplicate label {name!r}")
                label_dim[name] = n
                label_pos[name] = pos
            dims.append(names)
        else:
            if head in face_lines:
                raise ParseError(lineno, f"duplicate faces entry for {head!r}")
            if head not in label_dim:
                raise ParseError(lineno, f"faces entry for unknown cube {head!r}")
            if label_dim[head] == 0:
                raise ParseError(lineno, f"vertex {head!r} cannot have faces")
            face_lines[head] = (lineno, rest)

    if section is None:
        raise ParseError(1, "empty document: missing dims: section")

    counts = [len(names) for names in dims]
    faces: dict[int, list[list[tuple[CubeId, CubeId]]]] = {}
    for n in range(1, len(dims)):
        per_dim: list[list[tuple[CubeId, CubeId]]] = []
        for name in dims[n]:
            if name not in face_lines:
                raise ParseError(
                    len(text.splitlines()) or 1,
                    f"no faces entry for cube {name!r} of dimension {n}",
                )
            lineno, body = face_lines.pop(name)
            pairs: list[tuple[CubeId, CubeId]] = []
            pos = 0
            for match in _PAIR_RE.finditer(body):
                if body[pos:match.start()].strip():
                    raise ParseError(
                        lineno,
                        f"unexpected text {body[pos:match.start()].strip()!r} "
                        f"in faces of {name!r}",
                    )
                ids = []
                for ref in match.groups():
                    if ref not in label_dim:
                        raise ParseError(
                            lineno,
                            f"face of {name!r} references missing label {ref!r}",
                        )
                    if label_dim[ref] != n - 1:
                        raise ParseError(
                            lineno,
                            f"face of {name!r} references {ref!r} of dimension "
                            f"{label_dim[ref]}, expected {n - 1}",
                        )
                    ids.append(CubeId(n - 1, label_pos[ref]))
                pairs.append((ids[0], ids[1]))
                pos = match.end()
            if body[pos:].strip():
                raise ParseError(
                    lineno,
                    f"unexpected text {body[pos:].strip()!r} in faces of {name!r}",
                )
            if len(pairs) != n:
                raise ParseError(
                    lineno,
                    f"cube {name!r} of dimension {n} lists {len(pairs)} face "
                    f"pairs, expected {n}",
                )
            per_dim.append(pairs)
        faces[n] = per_dim

    labels = {n: names for n, names in enumerate(dims)}
    return PrecubicalSet(counts, faces, labels)

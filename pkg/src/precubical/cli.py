"""Command-line surface.

Subcommands: ``validate``, ``cohomology``, ``cup``, ``ring-table`` and
``check``.  Exit codes: 0 on success, 1 on a mathematical failure (identity
violations, failing properties), 2 on usage or document errors.  The
environment variable ``PRECUBICAL_SEED`` supplies the default seed for
``check``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from . import textformat
from .cochains import Cochain, cup
from .cohomology import CohomologyGroup, RingTable, cohomology_groups, ring_table
from .core import (
    PrecubicalSet,
    circle,
    interval,
    standard_cube,
    tensor_product,
    torus,
    validate,
)
from .propcheck import (
    ASSERTION_PROPERTIES,
    GenConfig,
    PropertyReport,
    anticommutativity_report,
    check,
)
from .rings import CoeffRing, parse_ring

USAGE_ERROR = 2
MATH_ERROR = 1

BUILTINS = {
    "interval": interval,
    "circle": circle,
    "torus": torus,
    "square": lambda: standard_cube(2),
    "cube3": lambda: standard_cube(3),
    "t3": lambda: tensor_product(torus(), circle()),
}


class CliError(Exception):
    def __init__(self, message: str, code: int = USAGE_ERROR):
        super().__init__(message)
        self.code = code


def _load_instance(path: Optional[str], builtin: Optional[str]) -> PrecubicalSet:
    if (path is None) == (builtin is None):
        raise CliError("give exactly one of a document path or --builtin NAME")
    if builtin is not None:
        try:
            factory = BUILTINS[builtin]
        except KeyError:
            names = ", ".join(sorted(BUILTINS))
            raise CliError(f"unknown builtin {builtin!r}; known: {names}") from None
        return factory()
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from None
    try:
        return textformat.parse(text)
    except textformat.ParseError as exc:
        raise CliError(f"{path}: {exc}") from None


def _parse_coeff(spec: str) -> CoeffRing:
    try:
        return parse_ring(spec)
    except ValueError as exc:
        raise CliError(str(exc)) from None


def _require_group_ring(ring: CoeffRing) -> None:
    from .exactlinalg import is_prime

    if ring.modulus and not is_prime(ring.modulus):
        raise CliError(
            f"cohomology groups need Z or Z/p with p prime; Z/{ring.modulus} "
            f"has a composite modulus (use the cup command for cochain-level "
            f"work over composite moduli)"
        )


def _parse_cochain_spec(x: PrecubicalSet, spec: str, ring: CoeffRing) -> Cochain:
    """Parse 'label=value,label=value' with an optional 'dim:' prefix.

    Unlisted cubes default to zero; the dimension is inferred from the
    labels when no prefix is given.
    """
    body = spec.strip()
    forced_dim: Optional[int] = None
    head, sep, rest = body.partition(":")
    if sep and head.strip().lstrip("-").isdigit():
        forced_dim = int(head)
        body = rest

    assignments = []
    if body.strip():
        for item in body.split(","):
            label, sep, value = item.partition("=")
            label = label.strip()
            if not sep or not label:
                raise CliError(
                    f"bad cochain entry {item!r}; expected label=value"
                )
            try:
                assignments.append((label, int(value.strip())))
            except ValueError:
                raise CliError(f"bad integer value in {item!r}") from None

    if forced_dim is None:
        dims_seen = set()
        for label, _ in assignments:
            owners = [
                n for n in range(x.maxdim + 1) if x.find_label(n, label) is not None
            ]
            if not owners:
                raise CliError(f"no cube labelled {label!r}")
            if len(owners) > 1:
                raise CliError(
                    f"label {label!r} exists in dimensions {owners}; prefix "
                    f"the spec with 'dim:' to disambiguate"
                )
            dims_seen.add(owners[0])
        if len(dims_seen) > 1:
            raise CliError(
                f"cochain entries span dimensions {sorted(dims_seen)}"
            )
        if not dims_seen:
            raise CliError(
                "cannot infer the dimension of an empty cochain; prefix the "
                "spec with 'dim:'"
            )
        dim = dims_seen.pop()
    else:
        dim = forced_dim
        if dim < 0:
            raise CliError("cochain dimension must be nonnegative")

    values = [0] * x.count(dim)
    for label, value in assignments:
        cube = x.find_label(dim, label)
        if cube is None:
            raise CliError(f"no cube labelled {label!r} in dimension {dim}")
        values[cube.index] = value
    return Cochain(dim, ring, values)


# -- output helpers -----------------------------------------------------------


def _generator_entries(x: PrecubicalSet, g: Cochain) -> dict[str, int]:
    return {
        x.labels(g.dim)[i]: v for i, v in enumerate(g.values) if v != 0
    }


def _print_groups(x: PrecubicalSet, groups: Sequence[CohomologyGroup]) -> None:
    for g in groups:
        print(f"H^{g.dim} = {g.describe()}")
        for i, gen in enumerate(g.generators):
            entries = " ".join(
                f"{label}={v}" for label, v in _generator_entries(x, gen).items()
            )
            print(f"  generator h{g.dim}_{i}: {entries}")


def _groups_json(
    x: PrecubicalSet, ring: CoeffRing, groups: Sequence[CohomologyGroup]
) -> dict:
    return {
        "coefficients": ring.name,
        "cube_counts": list(x.cube_counts),
        "groups": [
            {
                "dim": g.dim,
                "free_rank": g.free_rank,
                "torsion": list(g.torsion),
                "generators": [
                    {
                        "name": f"h{g.dim}_{i}",
                        "values": _generator_entries(x, gen),
                    }
                    for i, gen in enumerate(g.generators)
                ],
            }
            for g in groups
        ],
    }


def _coords_str(coords: tuple[int, ...], degree: int) -> str:
    if not coords or all(c == 0 for c in coords):
        return "0"
    parts = []
    for i, c in enumerate(coords):
        if c == 0:
            continue
        name = f"h{degree}_{i}"
        if c == 1:
            parts.append(name)
        elif c == -1:
            parts.append(f"-{name}")
        else:
            parts.append(f"{c}*{name}")
    return " + ".join(parts).replace("+ -", "- ")


def _print_ring_table(x: PrecubicalSet, table: RingTable) -> None:
    print("generators:")
    for g in table.groups:
        names = " ".join(f"h{g.dim}_{i}" for i in range(len(g.generators)))
        print(f"  deg {g.dim}: {names}" if names else f"  deg {g.dim}: (none)")
    print("products:")
    top = len(table.groups) - 1
    for p in range(top + 1):
        for q in range(top + 1):
            rows = table.products[(p, q)]
            for i, row in enumerate(rows):
                for j, coords in enumerate(row):
                    lhs = f"h{p}_{i} * h{q}_{j}"
                    print(f"  {lhs} = {_coords_str(coords, p + q)}")


def _ring_table_json(x: PrecubicalSet, ring: CoeffRing, table: RingTable) -> dict:
    return {
        "coefficients": ring.name,
        "generators": [
            {
                "dim": g.dim,
                "names": [f"h{g.dim}_{i}" for i in range(len(g.generators))],
                "free_rank": g.free_rank,
                "torsion": list(g.torsion),
            }
            for g in table.groups
        ],
        "products": [
            {
                "p": p,
                "q": q,
                "i": i,
                "j": j,
                "coords": list(coords),
            }
            for (p, q) in sorted(table.products)
            for i, row in enumerate(table.products[(p, q)])
            for j, coords in enumerate(row)
        ],
    }


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2, sort_keys=False))


# -- subcommands ---------------------------------------------------------------


def _cmd_validate(args: argparse.Namespace) -> int:
    x = _load_instance(args.file, args.builtin)
    report = validate(x)
    if not report:
        print("valid")
        return 0
    for violation in report:
        print(violation.message)
    return MATH_ERROR


def _cmd_cohomology(args: argparse.Namespace) -> int:
    x = _load_instance(args.file, args.builtin)
    ring = _parse_coeff(args.coeff)
    _require_group_ring(ring)
    groups = cohomology_groups(x, ring)
    if args.json:
        _emit_json(_groups_json(x, ring, groups))
    elif not groups:
        print("(empty precubical set)")
    else:
        _print_groups(x, groups)
    return 0


def _cmd_cup(args: argparse.Namespace) -> int:
    x = _load_instance(args.file, args.builtin)
    ring = _parse_coeff(args.coeff)
    phi = _parse_cochain_spec(x, args.p_cochain, ring)
    psi = _parse_cochain_spec(x, args.q_cochain, ring)
    result = cup(x, phi, psi)
    entries = _generator_entries(x, result)
    if args.json:
        _emit_json(
            {
                "coefficients": ring.name,
                "dim": result.dim,
                "values": entries,
            }
        )
    else:
        print(f"dim {result.dim}")
        if entries:
            for label, v in entries.items():
                print(f"  {label}: {v}")
        else:
            print("  (zero cochain)")
    return 0


def _cmd_ring_table(args: argparse.Namespace) -> int:
    x = _load_instance(args.file, args.builtin)
    ring = _parse_coeff(args.coeff)
    _require_group_ring(ring)
    table = ring_table(x, ring)
    if args.json:
        _emit_json(_ring_table_json(x, ring, table))
    elif not table.groups:
        print("(empty precubical set)")
    else:
        _print_ring_table(x, table)
    return 0


def _print_report(report: PropertyReport) -> None:
    kind = "" if report.assertion else " [report only]"
    print(
        f"{report.name}: {report.trials} trials, {len(report.failures)} "
        f"failures ({report.elapsed:.2f}s){kind}"
    )
    if not report.assertion:
        print(f"  agreement: {100.0 * report.agreement:.1f}%")
    for f in report.failures:
        print(f"  seed {f.seed} instance {f.instance_digest}: {f.detail}")


def _cmd_check(args: argparse.Namespace) -> int:
    from .exactlinalg import is_prime
    from .propcheck import COCHAIN_LEVEL_PROPERTIES

    ring = _parse_coeff(args.coeff)
    if args.props == "all":
        if ring.modulus and not is_prime(ring.modulus):
            # composite moduli cannot generate cocycles, so "all" means the
            # cochain-level identities there
            names = list(COCHAIN_LEVEL_PROPERTIES)
        else:
            names = list(ASSERTION_PROPERTIES)
    else:
        names = [p.strip() for p in args.props.split(",") if p.strip()]
    fixed = None
    if args.file or args.builtin:
        fixed = _load_instance(args.file, args.builtin)
    cfg = GenConfig(seed=args.seed, ring=ring, fixed_instance=fixed)
    print(f"seed {args.seed}, coefficients {ring.name}")
    failed = False
    for name in names:
        try:
            if name == "anticommutativity_cohomology":
                # classes-level reporter; needs a concrete instance
                if fixed is None:
                    raise CliError(
                        "anticommutativity_cohomology needs a fixed instance "
                        "(a document or --builtin)"
                    )
                report = anticommutativity_report(
                    fixed, ring, args.trials, seed=args.seed
                )
            else:
                report = check(name, cfg, args.trials)
        except ValueError as exc:
            raise CliError(str(exc)) from None
        _print_report(report)
        if report.assertion and report.failures:
            failed = True
    return MATH_ERROR if failed else 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="precubical",
        description=(
            "Exact cohomology rings of finite precubical sets: validation, "
            "groups with generators, cup products, ring tables and a "
            "property-test harness."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_instance_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("file", nargs="?", default=None, help="precubical set document")
        p.add_argument("--builtin", help=f"built-in set: {', '.join(sorted(BUILTINS))}")

    p = sub.add_parser("validate", help="check the face identities of a document")
    add_instance_args(p)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("cohomology", help="groups and generator cocycles")
    add_instance_args(p)
    p.add_argument("--coeff", default="Z", help="coefficients: Z or Z/p (default Z)")
    p.add_argument("--json", action="store_true", help="stable-keyed JSON output")
    p.set_defaults(func=_cmd_cohomology)

    p = sub.add_parser("cup", help="cup product of two explicit cochains")
    add_instance_args(p)
    p.add_argument(
        "--p-cochain", required=True,
        help="first factor, e.g. 't2=1' or '1:t1=2,t2=-1'",
    )
    p.add_argument("--q-cochain", required=True, help="second factor")
    p.add_argument("--coeff", default="Z", help="coefficients: Z or Z/m (default Z)")
    p.add_argument("--json", action="store_true", help="stable-keyed JSON output")
    p.set_defaults(func=_cmd_cup)

    p = sub.add_parser("ring-table", help="generator names and multiplication table")
    add_instance_args(p)
    p.add_argument("--coeff", default="Z", help="coefficients: Z or Z/p (default Z)")
    p.add_argument("--json", action="store_true", help="stable-keyed JSON output")
    p.set_defaults(func=_cmd_ring_table)

    p = sub.add_parser("check", help="run the property suite")
    add_instance_args(p)
    p.add_argument(
        "--props", default="all",
        help="comma-separated property names, or 'all'",
    )
    p.add_argument("--trials", type=int, default=100)
    p.add_argument(
        "--seed", type=int,
        default=int(os.environ.get("PRECUBICAL_SEED", "0")),
        help="base seed (default: $PRECUBICAL_SEED or 0)",
    )
    p.add_argument("--coeff", default="Z", help="coefficients (default Z)")
    p.set_defaults(func=_cmd_check)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())

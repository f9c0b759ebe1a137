"""Command-line entry point: ``fusionkit <command> ...``.

Exit codes: 0 success, 1 domain refusal (e.g. a non-admissible pair),
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import formats, tolerances
from .characters import character_table
from .diagram import emit_dot, frobenius_diagram
from .errors import FusionKitError, ParseError, SchemaMismatch
from .fixtures import format_results, run_fixtures
from .fusion import FusionAlgebra, Hypergroup, check_fusion_axioms, join, normalize_to_hypergroup
from .groups import FiniteGroup, build_group, parse_subgroup
from .pair import build_pair_algebra, certificates


class UsageError(Exception):
    pass


def _write(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _group_arg(value: str) -> FiniteGroup:
    """A group spec string or a path to a saved group document."""
    path = Path(value)
    if path.suffix == ".json" and path.exists():
        G = formats.load(path)
        if not isinstance(G, FiniteGroup):
            raise UsageError(f"{value} does not contain a group")
        return G
    return build_group(value)


def _load_algebra(path: str) -> FusionAlgebra:
    entity = formats.load(path)
    if not isinstance(entity, FusionAlgebra):
        raise UsageError(f"{path} does not contain a fusion algebra")
    return entity


# ---------------------------------------------------------------------------


def cmd_group(args) -> int:
    G = _group_arg(args.spec)
    text = G.to_cayley_text() if args.format == "cayley" else formats.serialize(G)
    _write(text, args.output)
    return 0


def cmd_table(args) -> int:
    table = character_table(_group_arg(args.group))
    _write(table.to_text() if args.format == "text" else formats.serialize(table), args.output)
    return 0


def _pair(args):
    G = _group_arg(args.spec)
    return G, parse_subgroup(G, args.subgroup)


def cmd_pair_check(args) -> int:
    G, H = _pair(args)
    inter = parse_subgroup(G, args.intermediate) if args.intermediate else None
    result = build_pair_algebra(G, H, strict=False)
    certs = certificates(G, H, inter)
    names = ", ".join(c.name for c in certs if c.holds) or "none"
    print(f"admissible: {'yes' if result.admissible else 'no'}; certificates: {names}")
    if args.verbose:
        for c in certs:
            print(f"  {c}")
    if not result.admissible:
        w = result.witness
        print(f"witness: tau={w.tau} g={w.g_label} s={w.s_label}")
        print(f"  {w}")
        return 1
    return 0


def cmd_pair_fuse(args) -> int:
    G, H = _pair(args)
    result = build_pair_algebra(G, H)
    if args.output:
        formats.save(result.algebra, args.output)
    else:
        print("\n".join(result.algebra.equations()))
    return 0


def cmd_algebra_equations(args) -> int:
    entity = formats.load(args.file)
    if isinstance(entity, (FusionAlgebra, Hypergroup)):
        print("\n".join(entity.equations()))
        return 0
    raise UsageError(f"{args.file} does not contain an algebra or hypergroup")


def cmd_algebra_normalize(args) -> int:
    K = normalize_to_hypergroup(_load_algebra(args.file))
    _write(formats.serialize(K), args.output)
    return 0


def cmd_algebra_join(args) -> int:
    F = _load_algebra(args.file)
    report = check_fusion_axioms(F)
    if not report.ok:
        raise FusionKitError("; ".join(map(str, report.failures())))
    _write(formats.serialize(join(F, name=args.name)), args.output)
    return 0


def cmd_diagram(args) -> int:
    G, H = _pair(args)
    d = frobenius_diagram(G, H)
    _write(formats.serialize(d) if args.json else emit_dot(d), args.output)
    return 0


def cmd_fixtures_run(args) -> int:
    results = run_fixtures(args.only or None)
    sys.stdout.write(format_results(results, verbose=args.verbose))
    failed = [r for r in results if not r.passed]
    misprints = [r for r in results if not r.verbatim]
    print(f"{len(results) - len(failed)}/{len(results)} fixtures pass; "
          f"{len(misprints)} with reference misprints")
    if failed or (args.strict and misprints):
        return 1
    return 0


# ---------------------------------------------------------------------------


def _positive(text: str) -> float:
    value = float(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("tolerance must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fusionkit", description="Fusion rule algebras of finite group pairs.")
    p.add_argument("--eps-eq", type=_positive, default=None, help="equality tolerance (default 1e-8)")
    p.add_argument("--eps-int", type=_positive, default=None, help="integrality tolerance (default 1e-6)")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("group", help="build a group and print its Cayley table")
    g.add_argument("spec", help='group spec such as S4, D4, Z2xZ2, "semidirect(Z3,Z4,inv)"')
    g.add_argument("-o", "--output")
    g.add_argument("--format", choices=["json", "cayley"], default="json")
    g.set_defaults(func=cmd_group)

    t = sub.add_parser("table", help="character table of a group")
    t.add_argument("group", help="group spec or .fkgroup.json file")
    t.add_argument("-o", "--output")
    t.add_argument("--format", choices=["text", "json"], default="text")
    t.set_defaults(func=cmd_table)

    pair = sub.add_parser("pair", help="admissibility and the pair algebra").add_subparsers(dest="action", required=True)
    for name, func, helptext in (("check", cmd_pair_check, "test admissibility and list certificates"),
                                 ("fuse", cmd_pair_fuse, "build the fusion rule algebra")):
        q = pair.add_parser(name, help=helptext)
        q.add_argument("spec")
        q.add_argument("--subgroup", nargs="+", required=True, metavar="GEN",
                       help='generators, e.g. "(12)" "(123)"; "G" for the whole group, "e" for trivial')
        q.set_defaults(func=func)
        if name == "check":
            q.add_argument("--intermediate", nargs="+", metavar="GEN",
                           help="generators of an intermediate subgroup for the transitivity test")
            q.add_argument("-v", "--verbose", action="store_true")
        else:
            q.add_argument("-o", "--output", help="write the algebra as .fkalg.json")

    alg = sub.add_parser("algebra", help="operate on a saved algebra").add_subparsers(dest="action", required=True)
    q = alg.add_parser("equations", help="print structure equations")
    q.add_argument("file")
    q.set_defaults(func=cmd_algebra_equations)
    q = alg.add_parser("normalize", help="normalize to a hypergroup")
    q.add_argument("file")
    q.add_argument("-o", "--output")
    q.set_defaults(func=cmd_algebra_normalize)
    q = alg.add_parser("join", help="adjoin an order-two element")
    q.add_argument("file")
    q.add_argument("-o", "--output")
    q.add_argument("--name", default="Y1")
    q.set_defaults(func=cmd_algebra_join)

    d = sub.add_parser("diagram", help="Frobenius diagram as DOT")
    d.add_argument("spec")
    d.add_argument("--subgroup", nargs="+", required=True, metavar="GEN")
    d.add_argument("-o", "--output")
    d.add_argument("--json", action="store_true", help="emit the JSON document instead of DOT")
    d.set_defaults(func=cmd_diagram)

    fx = sub.add_parser("fixtures", help="reference regression suite").add_subparsers(dest="action", required=True)
    q = fx.add_parser("run")
    q.add_argument("--strict", action="store_true", help="fail on reference misprints too")
    q.add_argument("-v", "--verbose", action="store_true")
    q.add_argument("--only", nargs="+", metavar="KEY")
    q.set_defaults(func=cmd_fixtures_run)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        with tolerances.tolerances(args.eps_eq, args.eps_int):
            return args.func(args)
    except (ParseError, SchemaMismatch, UsageError, FileNotFoundError) as exc:
        print(f"fusionkit: error: {exc}", file=sys.stderr)
        return 2
    except FusionKitError as exc:
        print(f"fusionkit: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

"""Command-line entry point.

Exit codes: 0 success or property holds, 1 property fails or not isomorphic,
2 invalid input, 3 work limit exceeded.
"""

import argparse
import sys

from .algebra import Property, check_property, t_map
from .birack import (
    BirackProperty,
    InvolutiveBirack,
    birack_isomorphism,
    check_birack_property,
    check_braid,
    mp_level,
    retraction,
)
from .enumerate import Kind, counts, stream
from .errors import WorkLimitExceeded, YBMeshError
from .io import (
    birack_file,
    catalog_write,
    format_mesh,
    format_record,
    format_solution,
    read_mesh,
    read_solution,
    solution_birack,
    solution_lq,
    write_text,
)
from .isotope import birack_isotope, to_distributive
from .mesh import iyb_mesh, mesh_sum, standard_generators

OK, FALSE, INVALID, OVER_BUDGET = 0, 1, 2, 3

LQ_PROPERTIES = {
    "distributive": (Property.LEFT_DISTRIBUTIVE, 2),
    "2reductive": (Property.M_REDUCTIVE, 2),
    "2permutational": (Property.M_PERMUTATIONAL, 2),
    "medial": (Property.MEDIAL, 2),
    "right-cyclic": (Property.RIGHT_CYCLIC, 2),
    "idempotent": (Property.IDEMPOTENT, 2),
    "star": (Property.CONDITION_STAR, 2),
}
BIRACK_PROPERTIES = ("braid", "involutive", "lri")
PROPERTIES = sorted(set(LQ_PROPERTIES) | set(BIRACK_PROPERTIES) | {"non-degenerate"})

BRUTEFORCE_MAX = 6


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    p = _Parser(prog="ybmesh", description="Involutive solutions of multipermutation level 2.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("enumerate", help="list or count isomorphism classes")
    e.add_argument("--kind", required=True, choices=[k.value for k in Kind])
    e.add_argument("--size", required=True, type=int)
    e.add_argument("--count-only", action="store_true")
    e.add_argument("--out")
    e.add_argument("--jobs", type=int, default=None)

    c = sub.add_parser("check", help="test a property of a table")
    c.add_argument("file")
    c.add_argument("--property", required=True, choices=PROPERTIES)

    s = sub.add_parser("sum", help="sum of a mesh file")
    s.add_argument("meshfile")
    s.add_argument("--out")

    i = sub.add_parser("isotope", help="isotope by a permutation given as images")
    i.add_argument("file")
    i.add_argument("--perm", required=True)
    i.add_argument("--out")

    d = sub.add_parser("to-distributive", help="the L_e^-1 isotope")
    d.add_argument("file")
    d.add_argument("--element", required=True, type=int)
    d.add_argument("--out")

    r = sub.add_parser("retract", help="retraction quotient")
    r.add_argument("file")
    r.add_argument("--out")

    lv = sub.add_parser("level", help="multipermutation level")
    lv.add_argument("file")

    iso = sub.add_parser("iso", help="isomorphism test")
    iso.add_argument("file1")
    iso.add_argument("file2")

    y = sub.add_parser("iyb", help="mesh realising an abelian group as a permutation group")
    y.add_argument("--group", required=True)
    y.add_argument("--generators")
    y.add_argument("--out")

    t = sub.add_parser("tables", help="reproduce the count tables")
    t.add_argument("--max-n", required=True, type=int)
    t.add_argument("--jobs", type=int, default=1)
    return p


def _parse_ints(text, sep=None):
    try:
        return [int(v) for v in text.replace(",", " ").split()] if sep is None else [
            int(v) for v in text.split(sep) if v.strip()
        ]
    except ValueError:
        raise UsageError(f"expected integers, got {text!r}") from None


def _parse_generators(text, rank):
    if text is None:
        return None
    gens = []
    for token in text.split():
        coords = tuple(_parse_ints(token, ","))
        if len(coords) != rank and not (rank == 0 and coords == (0,)):
            raise UsageError(f"generator {token!r} does not have {rank} coordinates")
        gens.append(coords if rank else ())
    if not gens and rank == 0:
        gens = [()]
    return gens


def _emit_birack(b, out):
    write_text(format_solution(birack_file(b)), out)


def _cmd_enumerate(args):
    if args.size < 1:
        raise UsageError("--size must be positive")
    entries = stream(args.kind, args.size, jobs=args.jobs)
    if args.count_only:
        print(len({e.canonical_key for e in entries}))
        return OK
    if args.out:
        catalog_write(entries, args.out)
    else:
        for entry in entries:
            print(format_record(entry))
    return OK


def _cmd_check(args):
    sf = read_solution(args.file)
    prop = args.property
    if prop in LQ_PROPERTIES:
        tag, m = LQ_PROPERTIES[prop]
        result = check_property(solution_lq(sf), tag, m)
    elif prop == "non-degenerate":
        result = t_map(solution_lq(sf))[1]
    else:
        lq = solution_lq(sf)
        if sf.bullet is None:
            b = solution_birack(sf)
        else:
            b = InvolutiveBirack(lq, sf.bullet)
        if prop == "braid":
            result = bool(check_braid(b))
        elif prop == "involutive":
            result = check_birack_property(b, BirackProperty.INVOLUTIVE)
        else:
            result = check_birack_property(b, BirackProperty.LRI)
    print("true" if result else "false")
    return OK if result else FALSE


def _cmd_sum(args):
    _emit_birack(mesh_sum(read_mesh(args.meshfile)), args.out)
    return OK


def _cmd_isotope(args):
    b = solution_birack(read_solution(args.file))
    pi = _parse_ints(args.perm)
    _emit_birack(birack_isotope(b, pi).result, args.out)
    return OK


def _cmd_to_distributive(args):
    b = solution_birack(read_solution(args.file))
    _emit_birack(to_distributive(b, args.element).result, args.out)
    return OK


def _cmd_retract(args):
    b = solution_birack(read_solution(args.file))
    _emit_birack(retraction(b).quotient, args.out)
    return OK


def _cmd_level(args):
    level = mp_level(solution_birack(read_solution(args.file)))
    if level is None:
        print("not-multipermutation")
        return FALSE
    print(level)
    return OK


def _cmd_iso(args):
    a = solution_birack(read_solution(args.file1))
    b = solution_birack(read_solution(args.file2))
    h = birack_isomorphism(a, b)
    if h is None:
        print("none")
        return FALSE
    print(" ".join(map(str, h)))
    return OK


def _cmd_iyb(args):
    # "1" (or an empty list) names the trivial group
    factors = [d for d in _parse_ints(args.group, ",") if d != 1]
    gens = _parse_generators(args.generators, len(factors))
    if gens is None:
        gens = standard_generators(factors)
    write_text(format_mesh(iyb_mesh(factors, gens)), args.out)
    return OK


def _fmt_row(label, values, width):
    cells = [("-" if v is None else str(v)).rjust(width) for v in values]
    return f"{label:<36}" + " ".join(cells)


def _cmd_tables(args):
    top = args.max_n
    if top < 1:
        raise UsageError("--max-n must be positive")
    sizes = range(1, top + 1)
    rows = {}
    for n in sizes:
        kinds = [Kind.TWO_REDUCTIVE, Kind.LEVEL2_NONDISTRIBUTIVE]
        if n <= BRUTEFORCE_MAX:
            kinds += [Kind.ALL_INVOLUTIVE, Kind.RACK]
        report = counts(n, kinds, jobs=args.jobs)
        rows[n] = report
    width = max(6, len(str(max(r.counts[Kind.TWO_REDUCTIVE] for r in rows.values()))) + 1)

    def series(kind):
        return [rows[n].counts.get(kind) for n in sizes]

    print("Racks and 2-reductive racks")
    print(_fmt_row("n", list(sizes), width))
    print(_fmt_row("racks", series(Kind.RACK), width))
    print(_fmt_row("2-reductive", series(Kind.TWO_REDUCTIVE), width))
    print()
    print("Involutive solutions")
    print(_fmt_row("n", list(sizes), width))
    print(_fmt_row("involutive solutions", series(Kind.ALL_INVOLUTIVE), width))
    print(_fmt_row("multipermutation of level 2", [rows[n].level2_total for n in sizes], width))
    print(_fmt_row("2-reductive", series(Kind.TWO_REDUCTIVE), width))
    print(_fmt_row("2-permutational, not 2-reductive", series(Kind.LEVEL2_NONDISTRIBUTIVE), width))
    return OK


COMMANDS = {
    "enumerate": _cmd_enumerate,
    "check": _cmd_check,
    "sum": _cmd_sum,
    "isotope": _cmd_isotope,
    "to-distributive": _cmd_to_distributive,
    "retract": _cmd_retract,
    "level": _cmd_level,
    "iso": _cmd_iso,
    "iyb": _cmd_iyb,
    "tables": _cmd_tables,
}


def run(argv=None):
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else INVALID
    except UsageError as exc:
        print(f"ybmesh: error: {exc}", file=sys.stderr)
        return INVALID
    except WorkLimitExceeded as exc:
        print(f"ybmesh: work limit exceeded: {exc}", file=sys.stderr)
        return OVER_BUDGET
    except (YBMeshError, ValueError) as exc:
        print(f"ybmesh: invalid input: {exc}", file=sys.stderr)
        return INVALID
    except OSError as exc:
        print(f"ybmesh: {exc.strerror or exc}: {exc.filename or ''}".rstrip(": "), file=sys.stderr)
        return INVALID


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

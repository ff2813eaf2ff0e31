"""``arthur-calc``: command-line front end.

Exit status is 0 on success, 1 on malformed input and 2 when an operation
is called outside its domain.  ``--json`` switches every command to a
stable machine-readable schema.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Sequence

from . import oracles
from .arthur import arthur_status, enumerate_apars, enumerate_lparams
from .errors import DomainError, OracleMismatchError, ParseError
from .fibers import fiber_orbits, fiber_partitions
from .orbits import closure_compare, dbv_orbit
from .packets import dual_orbits, generalized_weak_packet, weak_packet
from .parameters import (
    LParameter,
    classify,
    dll_data,
    hat_psi,
    lambda_of_phi,
    lambda_of_psi,
    pA,
    pD,
    partition_of_phi,
    phi_of_psi,
)
from .partitions import collapse, dbv_partition, dominance, is_special, transpose
from .syntax import (
    format_lambda,
    format_parameter,
    format_typed,
    label_table,
    lambda_json,
    orbit_json,
    parameter_json,
    parse_arthur,
    parse_group,
    parse_lambda,
    parse_lparameter,
    parse_orbit,
    parse_parameter,
    parse_partition,
    parse_type,
    partition_json,
)


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; those are parse errors here."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


class _Out:
    def __init__(self, args):
        self.json = args.json

    def emit(self, text: str, data) -> None:
        if self.json:
            print(json.dumps(data, sort_keys=True))
        else:
            print(text)


# --- partition / orbit / fiber ----------------------------------------------------


def _partition_cmd(args, out: _Out) -> None:
    op = args.op
    if op == "transpose":
        p = transpose(parse_partition(args.args[0]))
        out.emit(str(p), partition_json(p))
        return
    if op == "dominance":
        rel = dominance(parse_partition(args.args[0]), parse_partition(args.args[1]))
        out.emit(str(rel), rel.value)
        return
    X, p = parse_type(args.args[0]), parse_partition(args.args[1])
    if op == "collapse":
        q = collapse(p, X)
        out.emit(format_typed(q, X), {"type": X.value, "partition": partition_json(q)})
    elif op == "dbv":
        q, Y = dbv_partition(p, X)
        out.emit(format_typed(q, Y), {"type": Y.value, "partition": partition_json(q)})
    else:
        flag = is_special(p, X)
        out.emit(str(flag).lower(), flag)


def _orbit_cmd(args, out: _Out) -> None:
    if args.op == "dbv":
        o = dbv_orbit(parse_orbit(args.args[0]))
        out.emit(str(o), orbit_json(o))
    else:
        rel = closure_compare(parse_orbit(args.args[0]), parse_orbit(args.args[1]))
        out.emit(str(rel), rel.value)


def _fiber_cmd(args, out: _Out) -> None:
    if len(args.args) == 1:
        target = parse_orbit(args.args[0])
        orbits = fiber_orbits(target)
        if args.oracle:
            slow = oracles.preimage_brute(target.partition, target.type)
            oracles.check_equal("fiber", sorted({o.partition for o in orbits}, key=lambda q: q.parts, reverse=True), slow)
        out.emit("\n".join(map(str, orbits)), [orbit_json(o) for o in orbits])
        return
    X, p = parse_type(args.args[0]), parse_partition(args.args[1])
    fiber = fiber_partitions(p, X)
    if args.oracle:
        oracles.check_equal("fiber", [q for q, _ in fiber], oracles.preimage_brute(p, X))
    out.emit(
        "\n".join(format_typed(q, Y) for q, Y in fiber),
        [{"type": Y.value, "partition": partition_json(q)} for q, Y in fiber],
    )


# --- parameters -----------------------------------------------------------------


def _param_cmd(args, out: _Out) -> None:
    labels = args.labels
    op = args.op
    if op in ("phi-of-psi", "hat"):
        psi = parse_arthur(args.args[0], labels)
        res = phi_of_psi(psi) if op == "phi-of-psi" else hat_psi(psi)
        out.emit(format_parameter(res), parameter_json(res))
    elif op == "lambda":
        param = parse_parameter(args.args[0], labels)
        lam = lambda_of_phi(param) if isinstance(param, LParameter) else lambda_of_psi(param)
        out.emit(format_lambda(lam), lambda_json(lam))
    elif op == "partitions":
        param = parse_parameter(args.args[0], labels)
        if isinstance(param, LParameter):
            p = partition_of_phi(param)
            out.emit(f"p: {p}", {"p": partition_json(p)})
        else:
            d, a, p = pD(param), pA(param), partition_of_phi(phi_of_psi(param))
            out.emit(
                f"pD: {d}\npA: {a}\np(phi_psi): {p}",
                {"pD": partition_json(d), "pA": partition_json(a), "p_phi_psi": partition_json(p)},
            )
    elif op == "classify":
        flags = classify(parse_parameter(args.args[0], labels)).as_dict()
        text = "\n".join(f"{k}: {'n/a' if v is None else str(v).lower()}" for k, v in flags.items())
        out.emit(text, flags)
    elif op == "arthur-type":
        G, phi = parse_group(args.args[0]), parse_lparameter(args.args[1], labels)
        status, psi = arthur_status(phi, G)
        text = format_parameter(psi) if psi is not None and status.name == "WITNESS" else f"none ({status.value})"
        out.emit(text, {"status": status.value, "psi": parameter_json(psi) if psi is not None else None})
    else:  # dll
        G, phi = parse_group(args.args[0]), parse_lparameter(args.args[1], labels)
        lam, p = dll_data(phi, G)
        out.emit(
            f"s: {format_lambda(lam)}\nx: {format_typed(p, G.dual_type)}",
            {"s": lambda_json(lam), "x": {"type": G.dual_type.value, "partition": partition_json(p)}},
        )


def _enum_cmd(args, out: _Out) -> None:
    G, lam = parse_group(args.group), parse_lambda(args.lam, args.labels)
    if args.op == "lparams":
        items = enumerate_lparams(lam, G)
        slow = oracles.lparams_brute if args.oracle else None
    else:
        items = enumerate_apars(lam, G)
        slow = oracles.apars_brute if args.oracle else None
    if slow is not None:
        oracles.check_equal(f"enum {args.op}", items, slow(lam, G))
    if args.limit is not None:
        items = items[: args.limit]
    out.emit("\n".join(format_parameter(x) for x in items), [parameter_json(x) for x in items])


def _weak_packet_cmd(args, out: _Out) -> None:
    G, psi0 = parse_group(args.group), parse_arthur(args.psi0, args.labels)
    rep = weak_packet(psi0, G)
    if args.oracle:
        _check_fiber_against_oracle(rep.lpar_fiber, rep.lam, G, rep.target)
    lines = [
        f"group: {G}",
        f"lambda: {format_lambda(rep.lam)}",
        f"target: {rep.target}",
        f"lpar_fiber: {len(rep.lpar_fiber)}",
    ]
    for phi in rep.lpar_fiber:
        psi = rep.witnesses[phi]
        lines.append(f"  {format_parameter(phi)}  <-  {format_parameter(psi) if psi else 'none'}")
    lines.append(f"apar_fiber: {len(rep.apar_fiber)}")
    lines += [f"  {format_parameter(psi)}" for psi in rep.apar_fiber]
    lines.append(f"leq_set: {len(rep.leq_set)}")
    lines.append(f"all_arthur: {str(rep.all_arthur).lower()}")
    data = {
        "group": G.name,
        "lambda": lambda_json(rep.lam),
        "target": orbit_json(rep.target),
        "lpar_fiber": [parameter_json(phi) for phi in rep.lpar_fiber],
        "witnesses": [parameter_json(rep.witnesses[phi]) if rep.witnesses[phi] else None for phi in rep.lpar_fiber],
        "apar_fiber": [parameter_json(psi) for psi in rep.apar_fiber],
        "leq_set": [parameter_json(phi) for phi in rep.leq_set],
        "all_arthur": rep.all_arthur,
    }
    out.emit("\n".join(lines), data)


def _check_fiber_against_oracle(fiber, lam, G, target) -> None:
    slow = [phi for phi in oracles.lparams_brute(lam, G) if target in dual_orbits(partition_of_phi(phi), G)]
    oracles.check_equal("lpar_fiber", list(fiber), slow)


def _generalized_cmd(args, out: _Out) -> None:
    G, target = parse_group(args.group), parse_orbit(args.orbit)
    lam = parse_lambda(args.lam, args.labels)
    items = generalized_weak_packet(target, lam, G)
    if args.oracle:
        oracles.check_equal("enum apars", enumerate_apars(lam, G), oracles.apars_brute(lam, G))
    if args.limit is not None:
        items = items[: args.limit]
    out.emit("\n".join(format_parameter(x) for x in items), [parameter_json(x) for x in items])


# --- parser ---------------------------------------------------------------------


def _common(suppress: bool) -> argparse.ArgumentParser:
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", default=default(False), help="machine-readable output")
    p.add_argument("--limit", type=int, default=default(None), help="cap the number of enumerated items")
    p.add_argument("--oracle", action="store_true", default=default(False), help="re-verify against brute force")
    p.add_argument(
        "--rho",
        action="append",
        default=default([]),
        metavar="NAME:DIM:KIND[:ur]",
        help="declare a rho label; KIND is O, S or N=PARTNER",
    )
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common(suppress=True)
    parser = _Parser(prog="arthur-calc", description=__doc__.splitlines()[0], parents=[_common(False)])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def leaf(name: str, handler: Callable, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(handler=handler)
        return p

    p = leaf("partition", _partition_cmd, "operations on partitions")
    p.add_argument("op", choices=["transpose", "collapse", "dbv", "dominance", "special"])
    p.add_argument("args", nargs="+", help="TYPE and/or partitions, e.g. C '[4,2^3]'")

    p = leaf("orbit", _orbit_cmd, "operations on nilpotent orbits")
    p.add_argument("op", choices=["dbv", "compare"])
    p.add_argument("args", nargs="+", help="orbits, e.g. 'D:[2,2]#I'")

    p = leaf("fiber", _fiber_cmd, "preimage of a special partition or orbit under duality")
    p.add_argument("args", nargs="+", help="TYPE PARTITION, or a single ORBIT")

    p = leaf("param", _param_cmd, "operations on L- and Arthur parameters")
    p.add_argument("op", choices=["phi-of-psi", "lambda", "partitions", "hat", "arthur-type", "classify", "dll"])
    p.add_argument("args", nargs="+", help="[GROUP] PARAMETER")

    p = leaf("enum", _enum_cmd, "enumerate parameters with a given infinitesimal parameter")
    p.add_argument("op", choices=["lparams", "apars"])
    p.add_argument("group")
    p.add_argument("lam", metavar="LAMBDA")

    p = leaf("weak-packet", _weak_packet_cmd, "parameter-level weak packet of an anti-tempered psi0")
    p.add_argument("group")
    p.add_argument("psi0")

    p = leaf("generalized-weak-packet", _generalized_cmd, "Arthur parameters with dual orbit below a target")
    p.add_argument("group")
    p.add_argument("orbit")
    p.add_argument("lam", metavar="LAMBDA")
    return parser


_ARITY = {
    ("partition", "transpose"): 1,
    ("partition", "dominance"): 2,
    ("partition", "collapse"): 2,
    ("partition", "dbv"): 2,
    ("partition", "special"): 2,
    ("orbit", "dbv"): 1,
    ("orbit", "compare"): 2,
    ("param", "arthur-type"): 2,
    ("param", "dll"): 2,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    expected = _ARITY.get((args.command, getattr(args, "op", None)))
    if args.command == "param" and expected is None:
        expected = 1
    if args.command == "fiber" and len(args.args) not in (1, 2):
        parser.error("fiber takes TYPE PARTITION or a single ORBIT")
    if expected is not None and len(args.args) != expected:
        parser.error(f"{args.command} {args.op} takes {expected} argument(s), got {len(args.args)}")
    try:
        args.labels = label_table(args.rho)
        args.handler(args, _Out(args))
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1
    except OracleMismatchError as exc:
        print(f"oracle mismatch: {exc}", file=sys.stderr)
        return 2
    except (DomainError, ValueError) as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Text syntax and JSON encoding for partitions, orbits, groups and parameters.

Grammar (whitespace is insignificant)::

    partition  := "[" [ part ( "," part )* ] "]"        part := INT [ "^" INT ]
    orbit      := TYPE ":" partition [ "#" ( "I" | "II" ) ]
    lsummand   := NAME [ "[" HALFINT "]" ] ":" "S" INT
    asummand   := NAME ":" "S" INT ":" "S" INT
    parameter  := summand ( "+" summand )*
    lambda     := NAME "[" HALFINT "]" [ "^" INT ] ( "+" ... )*   | parameter
    group      := ( "SO" | "Sp" ) INT
    rho decl   := NAME ":" INT ":" ( "O" | "S" | "N=" NAME ) [ ":ur" ]

Printers emit the canonical form, so ``parse(format(x)) == x``.
"""

from __future__ import annotations

import re
from typing import Mapping

from .errors import ParseError
from .orbits import NilpotentOrbit, VeryEvenLabel
from .parameters import (
    TRIVIAL,
    ArthurParameter,
    ASummand,
    Duality,
    Family,
    GroupContext,
    HalfInt,
    InfinitesimalParameter,
    LParameter,
    LSummand,
    Rho,
    lambda_of_phi,
    lambda_of_psi,
)
from .partitions import ClassicalType, Partition

Labels = Mapping[str, Rho]

DEFAULT_LABELS: dict[str, Rho] = {"1": TRIVIAL}

_TOKEN = re.compile(
    r"\s*(?:(?P<halfint>-?\d+/2)|(?P<int>-?\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_']*)|(?P<punct>[\[\],^:#+=]))"
)


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                bad = len(text) - len(text[pos:].lstrip())
                raise ParseError(f"unexpected character {text[bad]!r}", text, bad)
            kind = m.lastgroup
            self.tokens.append((kind, m.group(kind), m.start(kind)))
            pos = m.end()
        self.i = 0

    def peek(self) -> tuple[str, str, int] | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def next(self, expect: str | None = None, what: str | None = None) -> tuple[str, str, int]:
        tok = self.peek()
        if tok is None:
            raise ParseError(f"expected {what or expect} but input ended", self.text, len(self.text))
        if expect is not None and tok[1] != expect and tok[0] != expect:
            raise ParseError(f"expected {what or expect!r}, found {tok[1]!r}", self.text, tok[2])
        self.i += 1
        return tok

    def accept(self, value: str) -> bool:
        tok = self.peek()
        if tok is not None and tok[1] == value:
            self.i += 1
            return True
        return False

    def positive_int(self, what: str) -> int:
        kind, value, pos = self.next(what=what)
        if kind != "int" or int(value) < 1:
            raise ParseError(f"expected {what} (positive integer), found {value!r}", self.text, pos)
        return int(value)

    def done(self) -> None:
        tok = self.peek()
        if tok is not None:
            raise ParseError(f"unexpected trailing token {tok[1]!r}", self.text, tok[2])


# --- partitions and orbits ---------------------------------------------------


def _partition(sc: _Scanner) -> Partition:
    sc.next("[")
    parts: list[int] = []
    if not sc.accept("]"):
        while True:
            part = sc.positive_int("a part")
            mult = sc.positive_int("a multiplicity") if sc.accept("^") else 1
            parts.extend([part] * mult)
            if sc.accept("]"):
                break
            sc.next(",", what="',' or ']'")
    return Partition(tuple(parts))


def parse_partition(text: str) -> Partition:
    sc = _Scanner(text)
    p = _partition(sc)
    sc.done()
    return p


def parse_type(text: str) -> ClassicalType:
    try:
        return ClassicalType(text.strip().upper())
    except ValueError:
        raise ParseError(f"unknown classical type {text.strip()!r} (expected B, C or D)", text, 0) from None


def parse_orbit(text: str) -> NilpotentOrbit:
    sc = _Scanner(text)
    kind, value, pos = sc.next("name", what="a classical type")
    X = parse_type(value)
    sc.next(":")
    p = _partition(sc)
    label = None
    if sc.accept("#"):
        kind, value, pos = sc.next("name", what="label I or II")
        try:
            label = VeryEvenLabel(value)
        except ValueError:
            raise ParseError(f"unknown label {value!r}", text, pos) from None
    sc.done()
    return NilpotentOrbit(X, p, label)


def format_partition(p: Partition) -> str:
    return str(p)


def format_typed(p: Partition, X: ClassicalType) -> str:
    return f"{X}:{p}"


def format_orbit(o: NilpotentOrbit) -> str:
    return str(o)


# --- groups and labels -------------------------------------------------------

_GROUP = re.compile(r"^\s*(SO|Sp)(\d+)\s*$")


def parse_group(text: str) -> GroupContext:
    m = _GROUP.match(text)
    if not m:
        raise ParseError("expected a group like SO11, Sp10 or SO10", text, 0)
    dim = int(m.group(2))
    if m.group(1) == "Sp":
        if dim % 2:
            raise ParseError(f"Sp{dim}: the rank of a symplectic group is even", text, m.start(2))
        return GroupContext(Family.SP, dim // 2)
    if dim % 2:
        return GroupContext(Family.SO_ODD, (dim - 1) // 2)
    return GroupContext(Family.SO_EVEN, dim // 2)


def parse_rho_declaration(text: str) -> list[Rho]:
    """``eta:1:O:ur`` or ``chi:1:N=chiv``; the partner of a pair is declared too."""
    fields = text.strip().split(":")
    if len(fields) not in (3, 4) or not fields[0]:
        raise ParseError("expected NAME:DIM:KIND[:ur]", text, 0)
    name, dim_s, kind = fields[:3]
    unramified = False
    if len(fields) == 4:
        if fields[3] != "ur":
            raise ParseError(f"unknown flag {fields[3]!r}", text, text.rindex(":") + 1)
        unramified = True
    if not dim_s.isdigit() or int(dim_s) < 1:
        raise ParseError(f"bad dimension {dim_s!r}", text, len(name) + 1)
    dim = int(dim_s)
    if kind in ("O", "S"):
        return [Rho(name, dim, Duality(kind), None, unramified)]
    if kind.startswith("N=") and len(kind) > 2:
        return list(Rho.nonselfdual_pair(name, kind[2:], dim, unramified))
    raise ParseError(f"unknown duality kind {kind!r} (expected O, S or N=PARTNER)", text, len(name) + len(dim_s) + 2)


def label_table(declarations: list[str] | None = None) -> dict[str, Rho]:
    table = dict(DEFAULT_LABELS)
    for decl in declarations or []:
        for rho in parse_rho_declaration(decl):
            table[rho.name] = rho
    return table


def _rho(sc: _Scanner, labels: Labels) -> Rho:
    kind, value, pos = sc.next(what="a rho label")
    if kind not in ("name", "int"):
        raise ParseError(f"expected a rho label, found {value!r}", sc.text, pos)
    if value not in labels:
        raise ParseError(f"undeclared rho label {value!r}", sc.text, pos)
    return labels[value]


def _halfint(sc: _Scanner) -> HalfInt:
    kind, value, pos = sc.next(what="a half-integer")
    if kind not in ("int", "halfint"):
        raise ParseError(f"expected a half-integer, found {value!r}", sc.text, pos)
    return HalfInt.of(value)


def _block(sc: _Scanner) -> int:
    kind, value, pos = sc.next(what="S<n>")
    m = re.fullmatch(r"S(\d+)", value) if kind == "name" else None
    if not m or int(m.group(1)) < 1:
        raise ParseError(f"expected S<n> with n >= 1, found {value!r}", sc.text, pos)
    return int(m.group(1))


# --- parameters -------------------------------------------------------------


def parse_parameter(text: str, labels: Labels | None = None) -> LParameter | ArthurParameter:
    """Parse either kind of parameter; mixing summand kinds is an error."""
    labels = DEFAULT_LABELS if labels is None else labels
    sc = _Scanner(text)
    lsum: list[LSummand] = []
    asum: list[ASummand] = []
    while True:
        start = sc.peek()
        rho = _rho(sc, labels)
        twist = _halfint_in_brackets(sc)
        sc.next(":")
        a = _block(sc)
        if sc.accept(":"):
            if twist is not None:
                raise ParseError("Arthur summands take no twist", text, start[2])
            asum.append(ASummand(rho, a, _block(sc)))
        else:
            lsum.append(LSummand(rho, twist or HalfInt(0), a))
        if lsum and asum:
            raise ParseError("cannot mix L-parameter and Arthur summands", text, start[2])
        if not sc.accept("+"):
            break
    sc.done()
    return LParameter(tuple(lsum)) if lsum else ArthurParameter(tuple(asum))


def _halfint_in_brackets(sc: _Scanner) -> HalfInt | None:
    if not sc.accept("["):
        return None
    x = _halfint(sc)
    sc.next("]")
    return x


def parse_lparameter(text: str, labels: Labels | None = None) -> LParameter:
    param = parse_parameter(text, labels)
    if not isinstance(param, LParameter):
        raise ParseError("expected an L-parameter (summands rho[x]:Sa)", text, 0)
    return param


def parse_arthur(text: str, labels: Labels | None = None) -> ArthurParameter:
    param = parse_parameter(text, labels)
    if not isinstance(param, ArthurParameter):
        raise ParseError("expected an Arthur parameter (summands rho:Sa:Sb)", text, 0)
    return param


def parse_lambda(text: str, labels: Labels | None = None) -> InfinitesimalParameter:
    """An exponent list ``1[3/2]^2 + 1[1/2]``, or any parameter (its lambda is taken)."""
    labels = DEFAULT_LABELS if labels is None else labels
    if ":" in text:
        param = parse_parameter(text, labels)
        return lambda_of_phi(param) if isinstance(param, LParameter) else lambda_of_psi(param)
    sc = _Scanner(text)
    exps = []
    while True:
        rho = _rho(sc, labels)
        sc.next("[")
        x = _halfint(sc)
        sc.next("]")
        mult = sc.positive_int("a multiplicity") if sc.accept("^") else 1
        exps.extend([(rho, x)] * mult)
        if not sc.accept("+"):
            break
    sc.done()
    return InfinitesimalParameter(tuple(exps))


def format_lsummand(s: LSummand) -> str:
    twist = f"[{s.twist}]" if s.twist.twice else ""
    return f"{s.rho}{twist}:S{s.a}"


def format_asummand(s: ASummand) -> str:
    return f"{s.rho}:S{s.a}:S{s.b}"


def format_parameter(param: LParameter | ArthurParameter) -> str:
    if not param.summands:
        return "0"
    fmt = format_lsummand if isinstance(param, LParameter) else format_asummand
    return " + ".join(fmt(s) for s in param.summands)


def format_lambda(lam: InfinitesimalParameter) -> str:
    chunks = []
    counts = lam.counter()
    for rho, x in dict.fromkeys(lam.exps):
        m = counts[(rho, x)]
        chunks.append(f"{rho}[{x}]" + (f"^{m}" if m > 1 else ""))
    return " + ".join(chunks) if chunks else "0"


# --- JSON ---------------------------------------------------------------------


def halfint_json(x: HalfInt) -> dict:
    return {"twice": x.twice}


def rho_json(rho: Rho) -> dict:
    return {
        "name": rho.name,
        "dim": rho.dim,
        "duality": rho.duality.name,
        "partner": rho.partner,
        "unramified": rho.unramified,
    }


def partition_json(p: Partition) -> list[int]:
    return list(p.parts)


def orbit_json(o: NilpotentOrbit) -> dict:
    return {"type": o.type.value, "partition": partition_json(o.partition), "label": o.label.value if o.label else None}


def parameter_json(param: LParameter | ArthurParameter) -> list[dict]:
    if isinstance(param, LParameter):
        return [{"rho": s.rho.name, "twist": halfint_json(s.twist), "a": s.a} for s in param.summands]
    return [{"rho": s.rho.name, "a": s.a, "b": s.b} for s in param.summands]


def lambda_json(lam: InfinitesimalParameter) -> list[dict]:
    return [{"rho": rho.name, "exp": halfint_json(x)} for rho, x in lam.exps]


def parameter_from_json(data: list[dict], labels: Labels | None = None) -> LParameter | ArthurParameter:
    labels = DEFAULT_LABELS if labels is None else labels
    if data and "twist" in data[0]:
        return LParameter(tuple(LSummand(labels[d["rho"]], HalfInt(d["twist"]["twice"]), d["a"]) for d in data))
    return ArthurParameter(tuple(ASummand(labels[d["rho"]], d["a"], d["b"]) for d in data))

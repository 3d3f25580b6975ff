"""Command-line front end: file parsing, law checks, and equivalence verification.

Structure files (suggested suffix .pogs) are line oriented, with `#` starting
a comment and tokens separated by whitespace::

    pogs 1
    S <n> [element names]
    G <m> [sort names]
    T <a> <g> <b> <value>     one line per cell, all n*m*n required
    O <i> <j>                 i below j; reflexive pairs are implicit,
                              the transitive closure is NOT taken

Fuzzy files (suggested suffix .fz)::

    fz 1
    S <n>
    F <i> <p>/<q>             one grade per element, in [0, 1]

Exit codes: 0 when every requested check passes or is consistent, 1 when a
property or an equivalence fails (the report carries a witness), 2 for
input or usage errors. Reports are deterministic: fixed line order, exact
rationals always rendered as p/q.
"""

from __future__ import annotations

import io
import sys
from concurrent.futures import ProcessPoolExecutor
from contextlib import redirect_stderr, redirect_stdout
from dataclasses import dataclass
from fractions import Fraction

import argparse

from .automorphisms import (
    enumerate_automorphisms,
    is_automorphism,
    is_characteristic_interior_ideal,
)
from .fuzzy import (
    FuzzySubset,
    image_levels,
    is_fuzzy_characteristic_interior_ideal,
    is_fuzzy_interior_ideal,
    is_fuzzy_subsemigroup,
    t_cut,
)
from .generator import GeneratorConfig, OrdersMode, iter_structures
from .ideals import enumerate_interior_ideals, is_interior_ideal, is_subsemigroup
from .structures import (
    GammaSemigroup,
    InputError,
    PartialOrder,
    PoGammaSemigroup,
    Witness,
    validate_compatibility,
    validate_gamma_semigroup,
    validate_partial_order,
)
from .theorems import ALL_CHECKS, extract_midpoint_witness, merge_summaries, sweep

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

_LAW_CODES = frozenset({"associativity", "order-axiom", "compatibility"})


class ParseError(InputError):
    """File diagnostic with a code, an optional line number and witness."""

    def __init__(self, msg, *, code="syntax", line=None, witness=None):
        super().__init__(msg)
        self.msg = msg
        self.code = code
        self.line = line
        self.witness = witness


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"usage error: {message}\n{self.format_usage()}")


def _frac(g: Fraction) -> str:
    return f"{g.numerator}/{g.denominator}"


def _render_value(v) -> str:
    if isinstance(v, Fraction):
        return _frac(v)
    if isinstance(v, tuple):
        return ",".join(str(x) for x in v)
    return str(v)


_WITNESS_FIELDS = {
    "associativity": ("a", "alpha", "b", "beta", "c"),
    "reflexive": ("a",),
    "antisymmetric": ("a", "b"),
    "transitive": ("a", "b", "c"),
    "compatibility": ("a", "b", "c", "gamma", "side"),
    "subsemigroup": ("x", "gamma", "y", "lhs", "rhs"),
    "interior": ("x", "alpha", "a", "beta", "y", "lhs", "rhs"),
    "downward": ("a", "b"),
    "antitone": ("x", "y", "mu_x", "mu_y"),
    "invariance": ("perm", "x", "mu_x", "mu_fx"),
    "operation": ("x", "gamma", "y"),
    "order": ("x", "y"),
    "cut": ("level", "clause"),
}


def render_witness(w: Witness) -> str:
    names = _WITNESS_FIELDS.get(w.clause, ())
    parts = []
    for i, v in enumerate(w.data):
        name = names[i] if i < len(names) else f"v{i}"
        parts.append(f"{name}={_render_value(v)}")
    return f"witness {w.clause}: " + " ".join(parts)


# ---------------------------------------------------------------- file formats


@dataclass(frozen=True)
class StructureFile:
    """Syntactic content of a structure file, before law validation."""

    n: int
    m: int
    element_names: tuple[str, ...] | None
    sort_names: tuple[str, ...] | None
    table: tuple
    order_pairs: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class FuzzyFile:
    n: int
    grades: FuzzySubset


def _significant(text: str):
    for num, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield num, line.split()


def _int_token(tok: str, line: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"{what} {tok!r} is not an integer", line=line) from None


def _count_header(tokens, line, tag, what):
    if len(tokens) < 2:
        raise ParseError(f"{tag} line needs a count", line=line)
    count = _int_token(tokens[1], line, what + " count")
    if count < 1:
        raise ParseError(f"{what} count must be positive", line=line)
    names = None
    if len(tokens) > 2:
        if len(tokens) - 2 != count:
            raise ParseError(
                f"{tag} line names {len(tokens) - 2} of {count} {what}s", line=line
            )
        names = tuple(tokens[2:])
    return count, names


def parse_structure_file(text: str) -> StructureFile:
    lines = list(_significant(text))
    if not lines:
        raise ParseError("empty file")
    num, tokens = lines[0]
    if tokens != ["pogs", "1"]:
        raise ParseError("expected header \"pogs 1\"", line=num)
    if len(lines) < 3:
        raise ParseError("missing S and G headers", line=num)
    num, tokens = lines[1]
    if tokens[0] != "S":
        raise ParseError("expected \"S <n>\" after the header", line=num)
    n, element_names = _count_header(tokens, num, "S", "element")
    num, tokens = lines[2]
    if tokens[0] != "G":
        raise ParseError("expected \"G <m>\" after the carrier line", line=num)
    m, sort_names = _count_header(tokens, num, "G", "sort")

    entries: dict[tuple[int, int, int], int] = {}
    order_pairs: set[tuple[int, int]] = set()
    for num, tokens in lines[3:]:
        tag = tokens[0]
        if tag == "T":
            if len(tokens) != 5:
                raise ParseError("T line needs \"T <a> <g> <b> <value>\"", line=num)
            a, g, b, v = (_int_token(t, num, "table field") for t in tokens[1:])
            if not 0 <= a < n or not 0 <= b < n or not 0 <= v < n:
                raise ParseError(
                    f"table entry ({a},{g},{b}) = {v} out of range [0, {n})",
                    code="range",
                    line=num,
                )
            if not 0 <= g < m:
                raise ParseError(
                    f"sort id {g} out of range [0, {m})", code="range", line=num
                )
            if (a, g, b) in entries:
                raise ParseError(f"duplicate table entry ({a},{g},{b})", line=num)
            entries[(a, g, b)] = v
        elif tag == "O":
            if len(tokens) != 3:
                raise ParseError("O line needs \"O <i> <j>\"", line=num)
            i, j = (_int_token(t, num, "order field") for t in tokens[1:])
            if not 0 <= i < n or not 0 <= j < n:
                raise ParseError(
                    f"order pair ({i},{j}) out of range [0, {n})",
                    code="range",
                    line=num,
                )
            if i != j:
                order_pairs.add((i, j))
        else:
            raise ParseError(f"unrecognized line tag {tag!r}", line=num)

    for a in range(n):
        for g in range(m):
            for b in range(n):
                if (a, g, b) not in entries:
                    raise ParseError(
                        f"missing table entry for ({a},{g},{b})", code="totality"
                    )
    table = tuple(
        tuple(tuple(entries[(a, g, b)] for b in range(n)) for g in range(m))
        for a in range(n)
    )
    return StructureFile(n, m, element_names, sort_names, table, tuple(sorted(order_pairs)))


def parse_structure(text: str) -> PoGammaSemigroup:
    """Parse and fully validate; diagnostics carry a code, line and witness."""
    sf = parse_structure_file(text)
    sgp = GammaSemigroup(sf.n, sf.m, sf.table)
    order = PartialOrder.from_pairs(sf.n, sf.order_pairs)
    v = validate_gamma_semigroup(sf.n, sf.m, sf.table)
    if not v:
        raise ParseError(
            "operation table breaks the associative law",
            code="associativity",
            witness=v.witness,
        )
    v = validate_partial_order(order)
    if not v:
        raise ParseError(
            "order relation breaks a partial-order axiom",
            code="order-axiom",
            witness=v.witness,
        )
    v = validate_compatibility(sgp, order)
    if not v:
        raise ParseError(
            "order is not compatible with the operation",
            code="compatibility",
            witness=v.witness,
        )
    return PoGammaSemigroup(sgp, order)


def render_structure(s: PoGammaSemigroup, element_names=None, sort_names=None) -> str:
    """Canonical text form; parse_structure(render_structure(s)) rebuilds s."""
    lines = ["pogs 1"]
    head = f"S {s.n}"
    if element_names:
        head += " " + " ".join(element_names)
    lines.append(head)
    head = f"G {s.m}"
    if sort_names:
        head += " " + " ".join(sort_names)
    lines.append(head)
    tbl = s.sgp.table
    for a in range(s.n):
        for g in range(s.m):
            for b in range(s.n):
                lines.append(f"T {a} {g} {b} {tbl[a][g][b]}")
    for i, j in s.order.pairs():
        lines.append(f"O {i} {j}")
    return "\n".join(lines) + "\n"


def _fraction_token(tok: str, line: int) -> Fraction:
    try:
        value = Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"cannot read grade {tok!r}", line=line) from None
    if value < 0 or value > 1:
        raise ParseError(f"grade {_frac(value)} outside [0, 1]", code="range", line=line)
    return value


def parse_fuzzy(text: str) -> FuzzySubset:
    lines = list(_significant(text))
    if not lines:
        raise ParseError("empty file")
    num, tokens = lines[0]
    if tokens != ["fz", "1"]:
        raise ParseError("expected header \"fz 1\"", line=num)
    if len(lines) < 2:
        raise ParseError("missing S header", line=num)
    num, tokens = lines[1]
    if tokens[0] != "S":
        raise ParseError("expected \"S <n>\" after the header", line=num)
    n, _ = _count_header(tokens, num, "S", "element")
    grades: dict[int, Fraction] = {}
    for num, tokens in lines[2:]:
        if tokens[0] != "F":
            raise ParseError(f"unrecognized line tag {tokens[0]!r}", line=num)
        if len(tokens) != 3:
            raise ParseError("F line needs \"F <i> <p>/<q>\"", line=num)
        i = _int_token(tokens[1], num, "element id")
        if not 0 <= i < n:
            raise ParseError(f"element id {i} out of range [0, {n})", code="range", line=num)
        if i in grades:
            raise ParseError(f"duplicate grade for element {i}", line=num)
        grades[i] = _fraction_token(tokens[2], num)
    for i in range(n):
        if i not in grades:
            raise ParseError(f"missing grade for element {i}", code="totality")
    return tuple(grades[i] for i in range(n))


def render_fuzzy(mu: FuzzySubset) -> str:
    lines = ["fz 1", f"S {len(mu)}"]
    for i, g in enumerate(mu):
        lines.append(f"F {i} {_frac(g)}")
    return "\n".join(lines) + "\n"


# ------------------------------------------------------------------- commands


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def cmd_validate(args):
    s = parse_structure(_read(args.structure))
    lines = [
        f"structure: n={s.n} m={s.m}",
        f"order pairs: {len(s.order.pairs())}",
        "result: valid",
    ]
    return EXIT_OK, lines


def cmd_auts(args):
    s = parse_structure(_read(args.structure))
    auts = enumerate_automorphisms(s)
    lines = [f"automorphisms: {len(auts)}"]
    for p in auts:
        lines.append("perm " + " ".join(str(x) for x in p))
    return EXIT_OK, lines


def cmd_ideals(args):
    s = parse_structure(_read(args.structure))
    ideals = enumerate_interior_ideals(s)
    if args.characteristic:
        ideals = [a for a in ideals if is_characteristic_interior_ideal(s, a)]
        label = "characteristic interior ideals"
    else:
        label = "interior ideals"
    lines = [f"{label}: {len(ideals)}"]
    for a in ideals:
        lines.append("set " + " ".join(str(x) for x in sorted(a)))
    return EXIT_OK, lines


def cmd_cuts(args):
    mu = parse_fuzzy(_read(args.fuzzy))
    levels = image_levels(mu)
    lines = ["levels: " + " ".join(_frac(v) for v in levels)]
    if not args.levels:
        for v in levels:
            members = " ".join(str(x) for x in sorted(t_cut(mu, v)))
            lines.append(f"cut {_frac(v)}: {members}")
    return EXIT_OK, lines


_CRISP_PREDICATES = {
    "subsemigroup": is_subsemigroup,
    "interior": is_interior_ideal,
    "characteristic": is_characteristic_interior_ideal,
}
_FUZZY_PREDICATES = {
    "fuzzy-subsemigroup": is_fuzzy_subsemigroup,
    "fuzzy-interior": is_fuzzy_interior_ideal,
    "fuzzy-characteristic": is_fuzzy_characteristic_interior_ideal,
}


def _subset_flag(raw: str) -> frozenset:
    try:
        members = frozenset(int(tok) for tok in raw.split(",") if tok.strip() != "")
    except ValueError:
        raise InputError(f"cannot read --subset {raw!r}") from None
    return members


def cmd_check(args):
    s = parse_structure(_read(args.structure))
    name = args.predicate
    if name in _CRISP_PREDICATES:
        if args.subset is None:
            raise InputError(f"check {name} needs --subset")
        if args.fuzzy is not None:
            raise InputError(f"check {name} takes no fuzzy file")
        verdict = _CRISP_PREDICATES[name](s, _subset_flag(args.subset))
    else:
        if args.fuzzy is None:
            raise InputError(f"check {name} needs a fuzzy file")
        if args.subset is not None:
            raise InputError(f"check {name} takes no --subset")
        mu = parse_fuzzy(_read(args.fuzzy))
        if len(mu) != s.n:
            raise InputError(
                f"fuzzy subset is over {len(mu)} elements, structure has {s.n}"
            )
        verdict = _FUZZY_PREDICATES[name](s, mu)
    lines = [f"check {name}: {'pass' if verdict.ok else 'fail'}"]
    if verdict.witness is not None:
        lines.append(render_witness(verdict.witness))
    return (EXIT_OK if verdict.ok else EXIT_FAIL), lines


_MIDPOINT_FIELDS = {
    "subsemigroup": ("x", "gamma", "y"),
    "interior": ("x", "alpha", "a", "beta", "y"),
}


def cmd_witness(args):
    s = parse_structure(_read(args.structure))
    mu = parse_fuzzy(_read(args.fuzzy))
    if len(mu) != s.n:
        raise InputError(f"fuzzy subset is over {len(mu)} elements, structure has {s.n}")
    w = extract_midpoint_witness(s, mu)
    if w is None:
        return EXIT_OK, ["midpoint witness: none"]
    names = _MIDPOINT_FIELDS[w.clause]
    elements = " ".join(f"{k}={v}" for k, v in zip(names, w.elements))
    lines = [
        f"midpoint witness: {w.clause}",
        f"elements: {elements}",
        f"t0: {_frac(w.t0)}",
        "cut at t0: " + " ".join(str(x) for x in sorted(w.cut_at_t0)),
    ]
    return EXIT_FAIL, lines


def _parse_grades_flag(raw: str) -> tuple[Fraction, ...]:
    toks = [t for t in raw.split(",") if t.strip() != ""]
    if not toks:
        raise InputError("--grades must list at least one rational")
    out = []
    for tok in toks:
        try:
            out.append(Fraction(tok))
        except (ValueError, ZeroDivisionError):
            raise InputError(f"cannot read grade {tok!r} in --grades") from None
    return tuple(out)


_TARGET_CHECKS = {
    "thm33": ("level",),
    "thm34": ("char",),
    "lemma1": ("lemma",),
    "all": ALL_CHECKS,
}

_CHECK_LABELS = {"level": "level", "char": "char", "lemma": "lemma"}


def _sweep_job(payload):
    structures, base, grades, checks, sample, seed = payload
    return sweep(
        structures, grades, checks=checks, sample=sample, seed=seed, index_base=base
    )


def _structure_line(s: PoGammaSemigroup) -> str:
    flat = ",".join(
        str(s.sgp.table[a][g][b])
        for a in range(s.n)
        for g in range(s.m)
        for b in range(s.n)
    )
    pairs = ";".join(f"{i}<{j}" for i, j in s.order.pairs())
    return f"n={s.n} m={s.m} table={flat} pairs={pairs}"


def _render_refutation(r) -> list[str]:
    if r.check == "level":
        subject = ",".join(_frac(g) for g in r.subject)
    else:
        subject = ",".join(str(x) for x in r.subject)
    fwd = "pass" if r.report.forward else "fail"
    back = "pass" if r.report.backward else "fail"
    lines = [
        f"REFUTATION {r.check} structure={r.structure_index} subject={subject} "
        f"forward={fwd} backward={back}"
    ]
    if r.report.witness is not None:
        lines.append(render_witness(r.report.witness))
    lines.append("structure " + _structure_line(r.structure))
    return lines


def cmd_verify(args):
    grades = _parse_grades_flag(args.grades)
    mode = (
        OrdersMode.ALL_COMPATIBLE if args.orders == "all" else OrdersMode.DISCRETE_ONLY
    )
    config = GeneratorConfig(
        max_n=args.max_n,
        max_m=args.max_m,
        orders=mode,
        grade_set=grades,
        seed=args.seed,
    )
    checks = _TARGET_CHECKS[args.target]
    if args.sample is not None and args.sample < 1:
        raise InputError("--sample must be positive")
    if args.jobs < 1:
        raise InputError("--jobs must be positive")
    structures = list(iter_structures(config))
    jobs = min(args.jobs, max(1, len(structures)))
    if jobs == 1:
        summary = sweep(
            structures,
            config.grade_set,
            checks=checks,
            sample=args.sample,
            seed=args.seed,
        )
    else:
        size = (len(structures) + jobs - 1) // jobs
        payloads = []
        for w in range(jobs):
            chunk = structures[w * size : (w + 1) * size]
            if chunk:
                payloads.append(
                    (chunk, w * size, config.grade_set, checks, args.sample, args.seed)
                )
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_sweep_job, payloads))
        summary = merge_summaries(parts)
    lines = [
        f"verify {args.target}",
        f"max-n: {args.max_n}",
        f"max-m: {args.max_m}",
        f"orders: {args.orders}",
        "grades: " + ",".join(_frac(g) for g in config.grade_set),
        "mode: exhaustive"
        if args.sample is None
        else f"mode: sample {args.sample} seed {args.seed}",
        f"structures: {summary.structures}",
    ]
    counts = {
        "level": summary.level_checks,
        "char": summary.char_checks,
        "lemma": summary.lemma_checks,
    }
    refuted = {"level": 0, "char": 0, "lemma": 0}
    for r in summary.refutations:
        refuted[r.check] += 1
    for c in checks:
        lines.append(
            f"{_CHECK_LABELS[c]} checks: {counts[c]} refutations: {refuted[c]}"
        )
    for r in summary.refutations:
        lines.extend(_render_refutation(r))
    ok = not summary.refutations
    lines.append("result: consistent" if ok else "result: refuted")
    return (EXIT_OK if ok else EXIT_FAIL), lines


# ------------------------------------------------------------------- plumbing


def build_arg_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="pogs",
        description="Finite partially ordered Gamma-semigroups: checks and verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("validate", help="parse a structure file and check its laws")
    p.add_argument("structure", help="structure file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("auts", help="list carrier automorphisms")
    p.add_argument("structure")
    p.set_defaults(func=cmd_auts)

    p = sub.add_parser("ideals", help="enumerate interior ideals")
    p.add_argument("structure")
    group = p.add_mutually_exclusive_group()
    group.add_argument(
        "--interior", action="store_true", help="interior ideals (the default)"
    )
    group.add_argument(
        "--characteristic",
        action="store_true",
        help="only automorphism-invariant interior ideals",
    )
    p.set_defaults(func=cmd_ideals)

    p = sub.add_parser("cuts", help="attained levels of a fuzzy subset and their cuts")
    p.add_argument("fuzzy", help="fuzzy subset file")
    p.add_argument("--levels", action="store_true", help="print the levels only")
    p.set_defaults(func=cmd_cuts)

    p = sub.add_parser("check", help="decide one predicate for given input")
    p.add_argument(
        "predicate",
        choices=sorted(_CRISP_PREDICATES) + sorted(_FUZZY_PREDICATES),
    )
    p.add_argument("structure")
    p.add_argument("fuzzy", nargs="?", help="fuzzy subset file, for the fuzzy-* predicates")
    p.add_argument("--subset", help="comma-separated element ids, for the crisp predicates")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser(
        "witness", help="midpoint threshold whose cut breaks the matching crisp law"
    )
    p.add_argument("structure")
    p.add_argument("fuzzy")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("verify", help="equivalence checks over an enumerated corpus")
    p.add_argument("target", choices=sorted(_TARGET_CHECKS))
    p.add_argument("--max-n", type=int, default=2, help="largest carrier size (default 2)")
    p.add_argument("--max-m", type=int, default=1, help="largest sort count (default 1)")
    p.add_argument(
        "--orders",
        choices=["discrete", "all"],
        default="all",
        help="discrete order only, or all compatible orders (default all)",
    )
    p.add_argument(
        "--grades",
        default="0,1/2,1",
        help="comma-separated grade set, must contain 0 and 1 (default 0,1/2,1)",
    )
    p.add_argument("--seed", type=int, default=0, help="seed for sampled runs")
    p.add_argument(
        "--sample",
        type=int,
        default=None,
        help="sample this many fuzzy subsets per structure instead of all of them",
    )
    p.add_argument(
        "--jobs",
        type=int,
        default=1,
        help="worker processes; the report does not depend on this",
    )
    p.set_defaults(func=cmd_verify)
    return parser


def run_command(argv) -> tuple[int, str]:
    """Execute one command line; returns (exit code, report text)."""
    parser = build_arg_parser()
    captured = io.StringIO()
    try:
        with redirect_stdout(captured), redirect_stderr(captured):
            args = parser.parse_args(list(argv))
    except _UsageError as e:
        return EXIT_USAGE, captured.getvalue() + str(e)
    except SystemExit as e:  # --help
        code = e.code if isinstance(e.code, int) else 0
        return code, captured.getvalue()
    try:
        code, lines = args.func(args)
    except ParseError as e:
        loc = f" line {e.line}" if e.line is not None else ""
        lines = [f"error[{e.code}]{loc}: {e.msg}"]
        if e.witness is not None:
            lines.append(render_witness(e.witness))
        if e.code in _LAW_CODES:
            code = EXIT_FAIL
            lines.append("result: invalid")
        else:
            code = EXIT_USAGE
    except InputError as e:
        return EXIT_USAGE, f"error[input]: {e}\n"
    except OSError as e:
        return EXIT_USAGE, f"error[io]: {e}\n"
    return code, "".join(line + "\n" for line in lines)


def main(argv=None) -> int:
    code, report = run_command(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(report)
    return code

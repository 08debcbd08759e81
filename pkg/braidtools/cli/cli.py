# BKL Braid Workshop - Command Line Interface
# Braid notation parser, printers and batch subcommands
"""
Command Line Module

Braid notation, one syllable per whitespace-separated token, each optionally
followed by ^<int>:

    d               delta
    e               identity
    a(i,j)          band generator a_{i,j}
    s(i)            Artin generator sigma_i, read as a_{i+1,i}
    [i1,i2,...]     descending cycle; indices up to 2n-1 wrap around mod n
    [4,3][5,2,1]    juxtaposed parallel cycles form one simple factor
    .               factor separator, ignored (it appears in printed normal forms)

Juxtaposed cycles that share an index start a new factor, so [4,2][4,3][2,1]
is the product of three band generators. Disjoint juxtaposed cycles that
cross are rejected.

Subcommands: nf, solve, power-conj, sss-brute, uss-bound, props.
"""
from __future__ import annotations

import argparse
import json
import logging
import random
import re
import sys
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, TextIO

from ..braidword import (
    BraidWord,
    DeltaPower,
    NormalForm,
    Simple,
    SimpleInverse,
    Syllable,
    exponent_sum,
    normalize,
    power,
)
from ..conjugacy import Conjugator, apply, compose, invert, to_super_summit
from ..errors import (
    BadParameters,
    BadPower,
    BraidError,
    BraidSyntaxError,
    IndexOutOfRange,
    NotParallel,
)
from ..ncp import (
    DescendingCycle,
    SimpleElement,
    cycles_of,
    is_parallel,
    simple_from_cycles,
)
from ..oracle import SummitOracle, catalan, run_property_suites
from ..periodic import CycleMergeTrace, PeriodicSolver, SolverConfig, VerdictKind

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1

_SYLLABLE = re.compile(
    r"""
    (?:
        (?P<dot>\.)
      | (?P<e>e)
      | (?P<d>d)
      | a\(\s*(?P<ai>-?\d+)\s*,\s*(?P<aj>-?\d+)\s*\)
      | s\(\s*(?P<si>-?\d+)\s*\)
      | (?P<cycles>(?:\[[^\[\]]*\])+)
    )
    (?:\^(?P<power>[^\s\[]*))?
    """,
    re.VERBOSE,
)
_CYCLE = re.compile(r"\[([^\[\]]*)\]")


@dataclass
class BraidExpr:
    """
    Parsed braid notation.

    Attributes:
        n: Strand count
        terms: (factors, power) pairs; factors is the product a syllable stands for
    """

    n: int
    terms: List[tuple] = field(default_factory=list)

    def to_word(self) -> BraidWord:
        syllables: List[Syllable] = []
        for factors, exponent in self.terms:
            if factors is None:
                syllables.append(DeltaPower(exponent))
            elif exponent > 0:
                syllables.extend(Simple(a) for a in factors * exponent)
            elif exponent < 0:
                syllables.extend(SimpleInverse(a) for a in list(reversed(factors)) * -exponent)
        return BraidWord(self.n, tuple(syllables))


def _parse_power(text: Optional[str]) -> int:
    if text is None:
        return 1
    try:
        return int(text)
    except ValueError:
        raise BadPower(f"power '^{text}' is not an integer")


def _parse_int(text: str) -> int:
    try:
        return int(text.strip())
    except ValueError:
        raise BraidSyntaxError(f"'{text.strip()}' is not an index")


def _group_cycles(n: int, text: str) -> List[SimpleElement]:
    """Split juxtaposed cycles into simple factors."""
    factors: List[SimpleElement] = []
    group: List[DescendingCycle] = []
    for body in _CYCLE.findall(text):
        indices = [_parse_int(part) for part in body.split(",")] if body.strip() else []
        try:
            cycle = DescendingCycle.parse(n, indices)
        except BadParameters as e:
            raise BraidSyntaxError(f"[{body}]: {e}")
        if any(cycle.block & other.block for other in group):
            factors.append(simple_from_cycles(n, group))
            group = []
        for other in group:
            if not is_parallel(cycle, other):
                raise NotParallel(f"cycles {other} and {cycle} in one factor cross")
        group.append(cycle)
    if group:
        factors.append(simple_from_cycles(n, group))
    return factors


def parse_expr(n: int, text: str) -> BraidExpr:
    """
    Parse braid notation into a BraidExpr.

    Raises:
        BraidSyntaxError: On unreadable input
        IndexOutOfRange: If an index is outside 1..n (or 1..2n-1 inside cycles)
        NotParallel: If cycles meant as one factor cross
        BadPower: If a ^ suffix is not an integer
    """
    expr = BraidExpr(n)
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        match = _SYLLABLE.match(text, pos)
        if match is None or match.end() == pos:
            raise BraidSyntaxError(f"cannot read '{text[pos:pos + 12]}' at position {pos}")
        if match.end() < len(text) and not text[match.end()].isspace() and match.group("cycles") is None:
            if text[match.end()] != "[":
                raise BraidSyntaxError(f"unexpected '{text[match.end()]}' at position {match.end()}")
        pos = match.end()
        exponent = _parse_power(match.group("power"))

        if match.group("dot") or match.group("e"):
            continue
        if match.group("d"):
            expr.terms.append((None, exponent))
        elif match.group("ai") is not None:
            i, j = int(match.group("ai")), int(match.group("aj"))
            if not (1 <= i <= n and 1 <= j <= n):
                raise IndexOutOfRange(f"a({i},{j}) outside 1..{n}")
            if i == j:
                raise BraidSyntaxError(f"a({i},{j}) needs two different indices")
            expr.terms.append(([simple_from_cycles(n, [[max(i, j), min(i, j)]])], exponent))
        elif match.group("si") is not None:
            i = int(match.group("si"))
            if not 1 <= i < n:
                raise IndexOutOfRange(f"s({i}) outside 1..{n - 1}")
            expr.terms.append(([simple_from_cycles(n, [[i + 1, i]])], exponent))
        else:
            expr.terms.append((_group_cycles(n, match.group("cycles")), exponent))
    return expr


def parse_braid(n: int, text: str) -> BraidWord:
    """Parse braid notation into a word in the simple elements."""
    return parse_expr(n, text).to_word()


def simple_to_lists(a: SimpleElement) -> List[List[int]]:
    return [list(c.indices) for c in cycles_of(a)]


def normal_form_to_dict(g: NormalForm) -> Dict:
    return {
        "n": g.n,
        "inf": g.inf,
        "factors": [simple_to_lists(a) for a in g.factors],
    }


def conjugator_to_dict(x: Conjugator) -> Dict:
    return {"word": str(x), "normal_form": str(x.normal_form())}


def _bool_text(value: Optional[bool]) -> str:
    if value is None:
        return "skipped"
    return "true" if value else "false"


def _emit(out: TextIO, args: argparse.Namespace, payload: Dict, text: str) -> None:
    if args.json:
        json.dump({"schema": SCHEMA_VERSION, "command": args.command, **payload}, out, indent=2)
        out.write("\n")
    else:
        out.write(text + "\n")


def _cmd_nf(args: argparse.Namespace, out: TextIO) -> int:
    g = normalize(parse_braid(args.n, args.word))
    payload = normal_form_to_dict(g)
    payload.update(sup=g.sup, exponent_sum=exponent_sum(g))
    _emit(out, args, payload, str(g))
    return 0


def _cmd_solve(args: argparse.Namespace, out: TextIO) -> int:
    alpha = normalize(parse_braid(args.n, args.word))
    solver = PeriodicSolver(SolverConfig(verify=not args.no_verify))
    trace = CycleMergeTrace()
    verdict = solver.solve(alpha, trace)

    if verdict.kind is VerdictKind.NON_PERIODIC:
        _emit(out, args, {"n": args.n, "kind": verdict.kind.value, "verified": None}, verdict.kind.value)
        return 0

    gamma = verdict.conjugator.normal_form()
    payload = {
        "n": args.n,
        "input": normal_form_to_dict(alpha),
        "kind": verdict.kind.value,
        "k": verdict.k,
        "conjugator": conjugator_to_dict(verdict.conjugator),
        "verified": verdict.verified,
    }
    if trace.rounds:
        payload["merge_rounds"] = [[str(c) for c in chain] for chain in trace.rounds]
        payload["pure_strand"] = trace.t
    text = f"{verdict.kind.value} k={verdict.k} gamma={gamma} verified={_bool_text(verdict.verified)}"
    _emit(out, args, payload, text)
    return 0


def _cmd_power_conj(args: argparse.Namespace, out: TextIO) -> int:
    g = normalize(parse_braid(args.n, args.word))
    summit, to_summit = to_super_summit(g)
    result = PeriodicSolver().power_conjugacy(summit, args.r)
    # conjugator^-1 h conjugator = g^r
    conjugator = compose(result.conjugator, invert(to_summit))
    verified = None
    if not args.no_verify:
        verified = apply(conjugator, result.h) == power(g, args.r)
    payload = {
        "n": args.n,
        "r": args.r,
        "h": normal_form_to_dict(result.h),
        "conjugator": conjugator_to_dict(conjugator),
        "iterations": result.iterations,
        "verified": verified,
    }
    text = (
        f"h={result.h} conjugator={conjugator.normal_form()} "
        f"iterations={result.iterations} verified={_bool_text(verified)}"
    )
    _emit(out, args, payload, text)
    return 0 if verified is not False else 1


def _cmd_sss_brute(args: argparse.Namespace, out: TextIO) -> int:
    table = SummitOracle().brute_sss_epsilon(args.n, args.k)
    lines = [str(g) for g in table.sorted()] + [f"size={len(table)}"]
    _emit(out, args, table.to_dict(), "\n".join(lines))
    return 0


def _cmd_uss_bound(args: argparse.Namespace, out: TextIO) -> int:
    elements = SummitOracle().uss_lower_bound(args.n, args.u, args.k)
    listing = sorted(str(g) for g in elements)
    payload = {
        "n": args.n,
        "u": args.u,
        "k": args.k,
        "count": len(elements),
        "catalan": catalan(args.k),
        "distinct": True,
        "elements": listing,
    }
    lines = listing + [f"count={len(elements)} catalan={catalan(args.k)} distinct=true"]
    _emit(out, args, payload, "\n".join(lines))
    return 0


def _cmd_props(args: argparse.Namespace, out: TextIO) -> int:
    rng = random.Random(args.seed)
    results = run_property_suites(args.n, rng, samples=args.samples)
    ok = all(r["ok"] for r in results)
    lines = [
        f"{r['name']}: checked={r['checked']} failures={r['failures']}"
        for r in results
    ]
    lines.append("all passed" if ok else "FAILURES")
    _emit(out, args, {"n": args.n, "seed": args.seed, "suites": results, "ok": ok}, "\n".join(lines))
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Machine-readable output")
    common.add_argument("--no-verify", action="store_true", help="Skip conjugator verification")
    common.add_argument("--seed", type=int, default=0, help="Seed for randomized suites")
    common.add_argument("-v", "--verbose", action="store_true", help="Debug logging to stderr")

    parser = argparse.ArgumentParser(
        prog="bkl_workshop",
        description="Normal forms and periodic conjugacy in the braid groups B_n (BKL structure).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nf", parents=[common], help="Left normal form of a braid")
    p.add_argument("-n", type=int, required=True, help="Strand count")
    p.add_argument("word", help="Braid in cycle notation")
    p.set_defaults(handler=_cmd_nf)

    p = sub.add_parser("solve", parents=[common], help="Decide periodicity and find a conjugator")
    p.add_argument("-n", type=int, required=True, help="Strand count")
    p.add_argument("word", help="Braid in cycle notation")
    p.set_defaults(handler=_cmd_solve)

    p = sub.add_parser("power-conj", parents=[common], help="Power a periodic braid inside summit sets")
    p.add_argument("-n", type=int, required=True, help="Strand count")
    p.add_argument("-r", type=int, required=True, help="Exponent")
    p.add_argument("word", help="Braid in cycle notation")
    p.set_defaults(handler=_cmd_power_conj)

    p = sub.add_parser("sss-brute", parents=[common], help="Brute-force super summit set of epsilon^k")
    p.add_argument("-n", type=int, required=True, help="Strand count")
    p.add_argument("-k", type=int, required=True, help="Exponent of epsilon")
    p.set_defaults(handler=_cmd_sss_brute)

    p = sub.add_parser("uss-bound", parents=[common], help="Catalan-size family of ultra summit elements")
    p.add_argument("-n", type=int, required=True, help="Strand count")
    p.add_argument("-u", type=int, required=True, help="Power of delta")
    p.add_argument("-k", type=int, required=True, help="Length of the descending cycle")
    p.set_defaults(handler=_cmd_uss_bound)

    p = sub.add_parser("props", parents=[common], help="Run the closure and identity property suites")
    p.add_argument("-n", type=int, required=True, help="Strand count")
    p.add_argument("--samples", type=int, default=200, help="Random samples per randomized suite")
    p.set_defaults(handler=_cmd_props)

    return parser


def run(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    """
    Run one subcommand.

    Args:
        argv: Arguments without the program name (default: sys.argv[1:])
        out: Stream for results (default: sys.stdout)

    Returns:
        Exit code: 0 on success, 1 on a braid error or failed check
    """
    args = build_parser().parse_args(argv)
    out = out or sys.stdout
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.handler(args, out)
    except BraidError as e:
        print(f"Error: {e}", file=sys.stderr)
        return 1

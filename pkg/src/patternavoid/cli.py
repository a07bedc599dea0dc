"""Command-line interface.

    patternavoid decide --pattern xyx
    patternavoid construct --k 8 --iterations 3 --format json
    patternavoid verify --pattern xxyy --iterations 3
    patternavoid props --k 8 --k 12
    patternavoid zimin 4

Exit codes: 0 success, 1 usage or runtime error, 2 verification found an
instance (``verify`` only), 3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from typing import Any, Optional

from . import analysis
from .construction import (
    DEFAULT_MAX_J_LENGTH,
    build_blocks,
    build_permutations,
    choose_k,
    j_word,
)
from .errors import PatternAvoidError, SearchBudgetExceeded
from .words import (
    DEFAULT_MAX_HOST_LENGTH,
    Occurrence,
    Pattern,
    SearchLimits,
    Substitution,
    Word,
    XI,
    find_instance,
    make_pattern,
)
from .zimin import BlockingWitness, is_blocking, zimin

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_VIOLATION = 2
EXIT_BUDGET = 3


class Refused(PatternAvoidError):
    """A precondition of the command does not hold."""


@dataclass(frozen=True)
class Verdict:
    pattern: str
    alpha: int
    avoidable: bool
    witness: Optional[BlockingWitness] = None
    k: Optional[int] = None

    def __post_init__(self):
        if (self.witness is None) == (self.k is None):
            raise ValueError("a verdict carries exactly one of witness / k")

    @property
    def claimed_bound(self) -> int:
        return 2 * self.alpha + 4


def decide(u: Pattern, depth: Optional[int] = None,
           limits: Optional[SearchLimits] = None) -> Verdict:
    blocking, witness = is_blocking(u, depth, limits)
    if blocking:
        return Verdict(str(u), u.alpha, False, witness=witness)
    return Verdict(str(u), u.alpha, True, k=choose_k(u.alpha))


# -- JSON encoding ---------------------------------------------------------

def mapping_to_json(s: Substitution) -> dict[str, list[int]]:
    return {v: list(w.letters) for v, w in s.bindings.items()}


def mapping_from_json(data: dict[str, list[int]], alphabet: str = XI,
                      size: Optional[int] = None) -> Substitution:
    return Substitution({v: Word(tuple(ls), alphabet, size) for v, ls in data.items()})


def verdict_to_json(v: Verdict) -> dict[str, Any]:
    witness = None
    if v.witness is not None:
        witness = {
            "rank": v.witness.rank,
            "position": v.witness.position,
            "mapping": mapping_to_json(v.witness.mapping),
        }
    return {
        "pattern": v.pattern,
        "alpha": v.alpha,
        "avoidable": v.avoidable,
        "witness": witness,
        "k": v.k,
        "claimed_bound": v.claimed_bound,
    }


def verdict_from_json(data: dict[str, Any]) -> Verdict:
    witness = None
    if data["witness"] is not None:
        w = data["witness"]
        witness = BlockingWitness(w["rank"], mapping_from_json(w["mapping"]), w["position"])
    verdict = Verdict(data["pattern"], data["alpha"], data["avoidable"], witness, data["k"])
    if verdict.claimed_bound != data["claimed_bound"]:
        raise ValueError("claimed_bound does not equal 2*alpha + 4")
    return verdict


def occurrence_to_json(occ: Occurrence) -> dict[str, Any]:
    return {"start": occ.start, "span": occ.span, "mapping": mapping_to_json(occ.assignment)}


def _dump(command: str, inputs: dict, key: str, payload: Any) -> str:
    return json.dumps({"command": command, "inputs": inputs, key: payload}, sort_keys=True)


# -- rendering ---------------------------------------------------------------

def render_word(w: Word, fmt: str) -> str:
    if fmt == "compact":
        return w.to_text()
    return str(w)


def _plain_verdict(v: Verdict, show_witness: bool) -> str:
    lines = [f"pattern: {v.pattern}", f"alpha: {v.alpha}"]
    if v.avoidable:
        lines += ["avoidable", f"k: {v.k}", f"claimed_bound: {v.claimed_bound}"]
    else:
        w = v.witness
        lines += ["unavoidable", f"witness: Z_{w.rank} at position {w.position}: {w.mapping.render()}"]
        if show_witness:
            image = zimin(w.rank).word.factor(w.position, sum(
                len(w.mapping[s]) for s in v.pattern))
            lines.append(f"image: {image}")
        lines.append(f"claimed_bound: {v.claimed_bound}")
    return "\n".join(lines)


# -- commands -------------------------------------------------------------

def _limits(args) -> SearchLimits:
    return SearchLimits(
        max_host_length=args.max_host_length,
        budget_seconds=args.budget_seconds,
    )


def cmd_decide(args) -> int:
    u = make_pattern(args.pattern)
    verdict = decide(u, args.zimin_depth, _limits(args))
    if args.format == "json":
        inputs = {"pattern": args.pattern, "zimin_depth": args.zimin_depth}
        print(_dump("decide", inputs, "verdict", verdict_to_json(verdict)))
    else:
        print(_plain_verdict(verdict, args.witness))
    return EXIT_OK


def _iterations_for(k: int, length: int) -> int:
    m = max(1, math.ceil(math.log(length, k)))
    while k ** m < length:
        m += 1
    return m


def _system(args):
    if args.k is not None:
        return build_blocks(k=args.k)
    if args.alpha is not None:
        return build_blocks(alpha=args.alpha)
    raise Refused("give --k or --alpha")


def cmd_construct(args) -> int:
    system = _system(args)
    if args.length is not None:
        m = _iterations_for(system.k, args.length)
        word = j_word(system, m, args.max_length).word[:args.length]
    else:
        m = args.iterations
        word = j_word(system, m, args.max_length).word
    if args.format == "json":
        inputs = {"k": system.k, "iterations": m, "length": args.length}
        print(_dump("construct", inputs, "word", list(word.letters)))
    else:
        print(render_word(word, args.format))
    return EXIT_OK


def cmd_verify(args) -> int:
    u = make_pattern(args.pattern)
    verdict = decide(u, args.zimin_depth, _limits(args))
    if not verdict.avoidable:
        raise Refused(f"pattern {u} is unavoidable; verification would be vacuous")
    k = args.k if args.k is not None else verdict.k
    if u.alpha > k // 2 - 1:
        raise Refused(f"pattern has {u.alpha} variables; k={k} covers at most {k // 2 - 1}")
    system = build_blocks(k=k)
    jm = j_word(system, args.iterations, args.max_length)
    occ = find_instance(jm.word, u, _limits(args))
    if args.format == "json":
        inputs = {"pattern": args.pattern, "k": k, "iterations": args.iterations}
        report = {
            "passed": occ is None,
            "length": len(jm),
            "occurrence": None if occ is None else occurrence_to_json(occ),
        }
        print(_dump("verify", inputs, "report", report))
    elif occ is None:
        print(f"PASS: J_{args.iterations} (k={k}, length {len(jm)}) avoids {u}")
    else:
        print(f"VIOLATION: instance of {u} at positions {occ.start}..{occ.start + occ.span - 1}: "
              f"{occ.assignment.render()}")
    return EXIT_OK if occ is None else EXIT_VIOLATION


def property_suite(k: int) -> list[analysis.PropertyReport]:
    system = build_blocks(k=k)
    reports = [
        analysis.check_lemma1_a(system),
        analysis.check_lemma1_b(system),
        analysis.check_lemma1_c(system),
        analysis.check_even_surplus(system, k // 2 - 1),
        analysis.check_class_preservation(system),
        analysis.check_c_remark(system),
    ]
    m = 3 if k == 8 else 2
    reports.append(analysis.check_square_free(j_word(system, m).word))
    return reports


def cmd_props(args) -> int:
    ks = args.k or [8, 12]
    for k in ks:
        # reject bad sizes before running anything
        build_permutations(k)
    results = [(k, property_suite(k)) for k in ks]
    passed = all(r.passed for _, reps in results for r in reps)
    if args.format == "json":
        report = {
            "passed": passed,
            "results": [{"k": k, "reports": [r.as_dict() for r in reps]} for k, reps in results],
        }
        print(_dump("props", {"k": ks}, "report", report))
    else:
        for k, reps in results:
            for r in reps:
                status = "PASS" if r.passed else "FAIL"
                line = f"k={k} {status} {r.name}"
                if not r.passed:
                    line += f" counterexample={json.dumps(r.counterexample, sort_keys=True)}"
                print(line)
        print("ALL PASS" if passed else "FAILURES")
    return EXIT_OK if passed else EXIT_VIOLATION


def cmd_zimin(args) -> int:
    z = zimin(args.n)
    if args.format == "json":
        print(_dump("zimin", {"n": args.n}, "word", list(z.word.letters)))
    else:
        print(z.word)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="patternavoid", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats=("plain", "json")):
        p.add_argument("--format", choices=formats, default="plain")
        p.add_argument("--max-host-length", type=int, default=DEFAULT_MAX_HOST_LENGTH,
                       help="matcher guard on host length")
        p.add_argument("--budget-seconds", type=float, default=None,
                       help="wall-clock budget for the matcher")

    p = sub.add_parser("decide", help="decide avoidability of a pattern")
    p.add_argument("--pattern", required=True)
    p.add_argument("--zimin-depth", type=int, default=None)
    p.add_argument("--witness", action="store_true", help="also print the witness image")
    common(p)
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("construct", help="print J_m")
    p.add_argument("--k", type=int)
    p.add_argument("--alpha", type=int)
    p.add_argument("--iterations", type=int, default=1)
    p.add_argument("--length", type=int, default=None, help="print this many letters instead")
    p.add_argument("--max-length", type=int, default=DEFAULT_MAX_J_LENGTH)
    common(p, ("plain", "compact", "json"))
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check that J_m avoids a pattern")
    p.add_argument("--pattern", required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--iterations", type=int, default=3)
    p.add_argument("--max-length", type=int, default=DEFAULT_MAX_J_LENGTH)
    p.add_argument("--zimin-depth", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("props", help="run the block property suite")
    p.add_argument("--k", type=int, action="append")
    common(p)
    p.set_defaults(func=cmd_props)

    p = sub.add_parser("zimin", help="print Z_n")
    p.add_argument("n", type=int)
    common(p)
    p.set_defaults(func=cmd_zimin)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        # argparse exits with 2, which is reserved for violations here
        return EXIT_OK if e.code in (0, None) else EXIT_ERROR
    try:
        return args.func(args)
    except SearchBudgetExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (PatternAvoidError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())

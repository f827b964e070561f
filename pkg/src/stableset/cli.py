"""Command-line surface.

Subcommands: solve, verify, contract, topology, random.  Results go to
stdout as JSON.  Exit codes: 0 success, 1 solver error, 2 oracle mismatch,
64 usage error.  Timings are opt-in (--timings) so default output stays
byte-stable.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import io as sio
from .bitset import from_members, members
from .contraction import equipotence_classes
from .errors import StablesetError
from .oracle import cross_verify, random_problem
from .order_topology import (Poset, dm_completion, excluded_set_topology,
                             frink_ideals, is_precontinuous, nachbin_closed,
                             weak_t1_separation)
from .relations import (DecisionProblem, asymmetric_part, strict_poset_order,
                        transitive_closure, trap_relation)
from .solutions import (Concept, SchwartzMethod, SociallyInterp, core,
                        duggan_set, m_stable_sets, schwartz_set, solve,
                        w_stable_sets)

EXIT_OK = 0
EXIT_SOLVER_ERROR = 1
EXIT_VERIFY_MISMATCH = 2
EXIT_USAGE = 64

_FAMILY_CONCEPTS = {
    "vnm": Concept.VNM,
    "gss": Concept.GENERALIZED,
    "sss": Concept.SOCIALLY,
    "mss": Concept.M_STABLE,
    "wss": Concept.W_STABLE,
    "ess": Concept.EXTENDED,
}
_SET_CONCEPTS = ("core", "schwartz", "duggan")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="stableset", exit_on_error=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", exit_on_error=False)
    p_solve.add_argument("--concept", required=True,
                         choices=list(_SET_CONCEPTS) + list(_FAMILY_CONCEPTS))
    p_solve.add_argument("--input", required=True)
    p_solve.add_argument("--interp", choices=[i.value for i in SociallyInterp],
                         default=SociallyInterp.RESTRICT_CLOSURE.value)
    p_solve.add_argument("--method", choices=[m.value for m in SchwartzMethod],
                         default=SchwartzMethod.CONDENSATION.value)
    p_solve.add_argument("--max-n", type=int, default=None)
    p_solve.add_argument("--timings", action="store_true")

    p_verify = sub.add_parser("verify", exit_on_error=False)
    p_verify.add_argument("--concept", required=True,
                          choices=list(_FAMILY_CONCEPTS))
    p_verify.add_argument("--trials", type=int, default=100)
    p_verify.add_argument("--max-n", type=int, default=8)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--interp", choices=[i.value for i in SociallyInterp],
                          default=SociallyInterp.RESTRICT_CLOSURE.value)
    p_verify.add_argument("--timings", action="store_true")

    p_contract = sub.add_parser("contract", exit_on_error=False)
    p_contract.add_argument("--input", required=True)
    p_contract.add_argument("--dot", action="store_true")

    p_topo = sub.add_parser("topology", exit_on_error=False)
    p_topo.add_argument("--check", required=True,
                        choices=["dm", "frink", "precont", "excluded", "t1",
                                 "nachbin"])
    p_topo.add_argument("--input", required=True)
    p_topo.add_argument("--excluded", default=None,
                        help="comma-separated indices generating the topology")
    p_topo.add_argument("--generator",
                        choices=["schwartz", "duggan", "wss", "mss"],
                        default="schwartz")

    p_random = sub.add_parser("random", exit_on_error=False)
    p_random.add_argument("--n", type=int, required=True)
    p_random.add_argument("--density", type=float, default=0.5)
    p_random.add_argument("--seed", type=int, default=0)
    p_random.add_argument("--tournament", action="store_true")

    return parser


def _load(path: str) -> DecisionProblem:
    return sio.parse_instance(Path(path).read_text())


def _emit(doc: dict):
    json.dump(doc, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


def _cmd_solve(args) -> int:
    started = time.perf_counter()
    p = _load(args.input)
    doc: dict = {"concept": args.concept}
    if args.concept == "core":
        doc["set"] = sio.set_document(core(p))
    elif args.concept == "schwartz":
        doc["set"] = sio.set_document(
            schwartz_set(p, SchwartzMethod(args.method), max_n=args.max_n))
        doc["method"] = args.method
    elif args.concept == "duggan":
        doc["set"] = sio.set_document(duggan_set(p))
    else:
        concept = _FAMILY_CONCEPTS[args.concept]
        family = solve(p, concept, interp=SociallyInterp(args.interp),
                       max_n=args.max_n)
        doc["family"] = sio.family_document(family)
        if concept is Concept.SOCIALLY:
            doc["interp"] = args.interp
        if doc["family"]["count"] == 0:
            doc["note"] = "no stable set"
    if args.timings:
        doc["timings"] = {"total_s": round(time.perf_counter() - started, 6)}
    _emit(doc)
    return EXIT_OK


def _cmd_verify(args) -> int:
    started = time.perf_counter()
    concept = _FAMILY_CONCEPTS[args.concept]
    interp = SociallyInterp(args.interp)
    failures = []
    for trial in range(args.trials):
        seed = args.seed + trial
        n = 1 + (seed % args.max_n)
        density = (0.2, 0.5, 0.8)[seed % 3]
        p = random_problem(n, density, seed)
        report = cross_verify(p, concept, interp=interp, max_n=args.max_n)
        if not report.passed:
            failures.append({
                "seed": seed, "n": n, "density": density,
                "only_constructive": [list(members(v))
                                      for v in report.only_constructive],
                "only_oracle": [list(members(v)) for v in report.only_oracle],
            })
    doc = {"concept": args.concept, "trials": args.trials,
           "status": "PASS" if not failures else "FAIL",
           "failures": failures}
    if args.timings:
        doc["timings"] = {"total_s": round(time.perf_counter() - started, 6)}
    _emit(doc)
    return EXIT_OK if not failures else EXIT_VERIFY_MISMATCH


def _cmd_contract(args) -> int:
    p = _load(args.input)
    c = equipotence_classes(p)
    if args.dot:
        sys.stdout.write(sio.export_dot(p, c))
        return EXIT_OK
    doc = {
        "classes": [list(members(cls)) for cls in c.classes],
        "condensation_edges": sorted([i, j] for i, j in c.cond.pairs()),
    }
    _emit(doc)
    return EXIT_OK


def _strict_for_generator(p: DecisionProblem, generator: str):
    if generator == "duggan":
        trap = trap_relation(p)
        return transitive_closure(trap)
    return asymmetric_part(transitive_closure(asymmetric_part(p.rel)))


def _generator_set(p: DecisionProblem, generator: str) -> int:
    if generator == "schwartz":
        return schwartz_set(p)
    if generator == "duggan":
        return duggan_set(p)
    if generator == "wss":
        return next(iter(w_stable_sets(p)))
    return next(iter(m_stable_sets(p)))


def _cmd_topology(args) -> int:
    p = _load(args.input)
    doc: dict = {"check": args.check}
    if args.check in ("dm", "frink", "precont"):
        poset = Poset(strict_poset_order(p))
        if args.check == "dm":
            lattice = dm_completion(poset)
            doc["cuts"] = [list(members(c)) for c in lattice.cuts]
        elif args.check == "frink":
            doc["ideals"] = [list(members(i)) for i in frink_ideals(poset)]
        else:
            doc["precontinuous"] = is_precontinuous(poset)
    elif args.check == "excluded":
        excluded = (from_members(int(v) for v in args.excluded.split(","))
                    if args.excluded else _generator_set(p, args.generator))
        top = excluded_set_topology(p.n, excluded)
        doc["excluded"] = list(members(excluded))
        doc["open_count"] = len(top.opens)
        doc["compact_subcover"] = [list(members(top.compactness_witness()))]
    elif args.check == "t1":
        excluded = _generator_set(p, args.generator)
        top = excluded_set_topology(p.n, excluded)
        strict = _strict_for_generator(p, args.generator)
        doc["generator"] = args.generator
        doc["separated"] = weak_t1_separation(top, strict)
    else:  # nachbin
        excluded = (from_members(int(v) for v in args.excluded.split(","))
                    if args.excluded else _generator_set(p, args.generator))
        top = excluded_set_topology(p.n, excluded)
        doc["nachbin_closed"] = nachbin_closed(top, strict_poset_order(p))
    _emit(doc)
    return EXIT_OK


def _cmd_random(args) -> int:
    p = random_problem(args.n, args.density, args.seed,
                       tournament=args.tournament)
    sys.stdout.write(sio.serialize_instance(p) + "\n")
    return EXIT_OK


def run_cli(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except argparse.ArgumentError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help, or argparse paths that still exit
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    handlers = {
        "solve": _cmd_solve,
        "verify": _cmd_verify,
        "contract": _cmd_contract,
        "topology": _cmd_topology,
        "random": _cmd_random,
    }
    try:
        return handlers[args.command](args)
    except (StablesetError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_SOLVER_ERROR


def main():  # console entry point
    raise SystemExit(run_cli())

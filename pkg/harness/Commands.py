"""
Command-line entry point: ``dav``, ``egz``, ``constants``, ``verify``,
``lemma`` and ``sumset``.

Exit codes
----------
0  success, every check held
1  usage, parse or precondition error
2  a search ran out of budget (inconclusive)
3  falsification candidate or failing lemma instance
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from algebra.Errors import (
    CapacityError,
    InconclusiveSearch,
    PostconditionError,
    PreconditionError,
    StructuralError,
)
from algebra.GroupSpec import GroupSpec
from algebra.TextSyntax import (
    format_element,
    format_sequence,
    parse_group,
    parse_n_range,
    parse_sequence,
    parse_weights,
)
from extremal.ExtremalSearch import (
    DEFAULT_MAX_NODES,
    SearchBudget,
    classical_constants,
    egz_constant,
    max_zero_sum_free_length,
)
from extremal.SearchTracer import SearchTracer
from harness.Campaign import EXIT_FALSIFIED, EXIT_INCONCLUSIVE, EXIT_OK, Campaign, CampaignConfig
from harness.Reporter import open_output, write_records, write_rows
from lemmas import LemmaSuites
from sumengine.SumProfile import sum_profile

logger = logging.getLogger(__name__)

EXIT_USAGE = 1


class _Parser(argparse.ArgumentParser):
    """Argument parser whose usage errors exit with 1; 2 is reserved for inconclusive searches."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


# ---------------------------------------------------------------------
# Parser construction
# ---------------------------------------------------------------------
def _add_group_flags(p: argparse.ArgumentParser) -> None:
    target = p.add_mutually_exclusive_group(required=True)
    target.add_argument("--n", type=_positive_int, help="cyclic group Z/n")
    target.add_argument("--group", help="product group, e.g. 2x4")


def _add_budget_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--budget-nodes", type=_positive_int, default=DEFAULT_MAX_NODES,
                   help="node cap per search (default: %(default)s)")
    p.add_argument("--budget-len", type=_positive_int, default=None,
                   help="longest sequence explored (default: 4|G| + 16)")
    p.add_argument("--no-unit-pruning", action="store_true", help="search every DFS root")
    p.add_argument("--jobs", type=_positive_int, default=1)


def _add_output_flags(p: argparse.ArgumentParser, formats: Sequence[str], default: str) -> None:
    p.add_argument("--format", choices=list(formats), default=default)
    p.add_argument("--out", default=None, help="output path (default: stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="zerosum", description="Weighted zero-sum constants and checkers.")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG")
    parser.add_argument("-q", "--quiet", action="store_true", help="hide progress bars")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, text in (("dav", "weighted Davenport constant D_A"), ("egz", "weighted EGZ constant E_A")):
        p = sub.add_parser(name, help=text)
        _add_group_flags(p)
        p.add_argument("--weights", default="1", help="comma separated weights (default: 1)")
        _add_budget_flags(p)
        _add_output_flags(p, ("text", "csv", "json"), "text")
        p.add_argument("--trace", action="store_true", help="print search trace records to stderr")

    p = sub.add_parser("constants", help="classical D(G), E(G) and the check E(G) = D(G) + |G| - 1")
    _add_group_flags(p)
    _add_budget_flags(p)
    _add_output_flags(p, ("text", "csv", "json"), "text")
    p.add_argument("--trace", action="store_true", help="print search trace records to stderr")

    p = sub.add_parser("verify", help="compare E_A with D_A + n - 1 over a grid")
    p.add_argument("--n", dest="n_range", default="2-8", help="order range, e.g. 2-8 (default: %(default)s)")
    p.add_argument("--family", action="append", default=None,
                   help="weight family (repeatable): singleton, pm1, units, all-subsets, gcd-diff, "
                        "random:k:count, explicit:1,3")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--timing", action="store_true", help="measure elapsed_ms (off keeps output byte-identical)")
    p.add_argument("--all-subsets-max-n", type=_positive_int, default=8)
    _add_budget_flags(p)
    _add_output_flags(p, ("csv", "json"), "csv")

    p = sub.add_parser("lemma", help="randomized and exhaustive lemma suites")
    p.add_argument("which", choices=sorted(_SUITES))
    p.add_argument("--order-max", type=_positive_int)
    p.add_argument("--instances", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--n-max", type=_positive_int)
    p.add_argument("--n", type=_positive_int)
    p.add_argument("--m-max", type=_positive_int)
    p.add_argument("--length-max", type=int)
    p.add_argument("--extra-lengths", type=int)
    p.add_argument("--exhaustive-order-max", type=int, help="dgm: exhaustive grid up to this group order")
    p.add_argument("--exhaustive-m-max", type=_positive_int)
    p.add_argument("--exhaustive-n-max", type=int, help="oracle: exhaustive grid up to this order")
    p.add_argument("--exhaustive-length-max", type=int)
    _add_output_flags(p, ("text", "csv", "json"), "text")

    p = sub.add_parser("sumset", help="rows Sigma_k of a weighted sequence")
    _add_group_flags(p)
    p.add_argument("--weights", default="1")
    p.add_argument("--sequence", required=True, help="e.g. 1,1,3 or 0:1,1:0 for products")
    p.add_argument("--max-len", type=int, default=None, help="largest k (default: |S|)")
    _add_output_flags(p, ("text", "csv", "json"), "text")
    return parser


# ---------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------
def _group_of(args: argparse.Namespace) -> GroupSpec:
    if getattr(args, "group", None):
        return parse_group(args.group)
    return GroupSpec.cyclic(args.n)


def _budget_of(args: argparse.Namespace, G: GroupSpec) -> SearchBudget:
    return SearchBudget.for_group(
        G, max_length=args.budget_len, max_nodes=args.budget_nodes, allow_unit_pruning=not args.no_unit_pruning
    )


def _dump_trace(tracer: Optional[SearchTracer]) -> None:
    if tracer is None:
        return
    for record in tracer.get_logs():
        print(json.dumps(record), file=sys.stderr)


def _report_inconclusive(exc: InconclusiveSearch) -> int:
    witness = exc.best_witness
    print(f"{exc}", file=sys.stderr)
    if witness is not None:
        print(f"best witness so far: {format_sequence(witness)}", file=sys.stderr)
    return EXIT_INCONCLUSIVE


# ---------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------
def cmd_constant(args: argparse.Namespace) -> int:
    """``dav`` and ``egz``."""
    G = _group_of(args)
    A = parse_weights(args.weights, G)
    tracer = SearchTracer() if args.trace else None
    budget = _budget_of(args, G)
    try:
        if args.command == "dav":
            result = max_zero_sum_free_length(G, A, budget, args.jobs, tracer)
        else:
            result = egz_constant(G, A, G.order, budget, args.jobs, tracer)
    except InconclusiveSearch as exc:
        _dump_trace(tracer)
        return _report_inconclusive(exc)
    _dump_trace(tracer)
    write_records([result.as_dict()], args.format, args.out)
    return EXIT_OK


def cmd_constants(args: argparse.Namespace) -> int:
    G = _group_of(args)
    tracer = SearchTracer() if args.trace else None
    try:
        d, e = classical_constants(G, _budget_of(args, G), args.jobs, tracer)
    except InconclusiveSearch as exc:
        _dump_trace(tracer)
        return _report_inconclusive(exc)
    _dump_trace(tracer)
    holds = e.value == d.value + G.order - 1
    records = [d.as_dict(), e.as_dict()]
    write_records(records, args.format, args.out)
    verdict = "holds" if holds else "FAILS"
    print(f"E(G) = D(G) + |G| - 1 for {G.label()}: {verdict}", file=sys.stderr)
    if not holds:
        logger.error("Classical identity fails for %s: D=%d, E=%d, witness %s",
                     G.label(), d.value, e.value, format_sequence(e.witness))
        return EXIT_FALSIFIED
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    config = CampaignConfig(
        n_range=parse_n_range(args.n_range),
        weight_families=args.family or ["singleton"],
        max_nodes=args.budget_nodes,
        max_length=args.budget_len,
        allow_unit_pruning=not args.no_unit_pruning,
        jobs=args.jobs,
        seed=args.seed,
        output_format=args.format,
        output_path=args.out,
        timing=args.timing,
        all_subsets_max_n=args.all_subsets_max_n,
        quiet=args.quiet,
    )
    campaign = Campaign(config)
    rows = campaign.run()
    write_rows(rows, config.output_format, config.output_path)
    print(campaign.summary(), file=sys.stderr)
    for row in campaign.mismatches():
        print(f"MISMATCH n={row.n} A={{{row.weights}}}: E_A={row.e_a}, D_A + n - 1 = {row.predicted}",
              file=sys.stderr)
        print(f"  witness_d = {row.witness_d}", file=sys.stderr)
        print(f"  witness_e = {row.witness_e}", file=sys.stderr)
    for row in campaign.failures():
        print(f"FAILED n={row.n} A={{{row.weights}}}: lower-bound certificate rejected", file=sys.stderr)
        print(f"  witness_d = {row.witness_d}", file=sys.stderr)
    return campaign.exit_code()


# suite name -> (runner, CLI arguments it accepts)
_SUITES: Dict[str, Tuple[Callable[..., LemmaSuites.SuiteReport], Tuple[str, ...]]] = {
    "dgm": (LemmaSuites.run_dgm_suite,
            ("order_max", "instances", "seed", "m_max", "exhaustive_order_max", "exhaustive_m_max")),
    "shift": (LemmaSuites.run_shift_suite, ("n", "instances", "seed", "m_max")),
    "yz": (LemmaSuites.run_yz_suite, ("n_max", "extra_lengths")),
    "yz-corollary": (LemmaSuites.run_yz_corollary_suite, ("order_max", "instances", "seed", "extra_lengths")),
    "oracle": (LemmaSuites.run_oracle_suite,
               ("n_max", "length_max", "instances", "seed", "exhaustive_n_max", "exhaustive_length_max")),
}


def cmd_lemma(args: argparse.Namespace) -> int:
    runner, accepted = _SUITES[args.which]
    kwargs: Dict[str, Any] = {name: getattr(args, name) for name in accepted if getattr(args, name) is not None}
    report = runner(quiet=args.quiet, **kwargs)
    if args.format == "csv":
        write_records([report.as_record()], "csv", args.out)
        for failure in report.failures:
            print("FAIL " + json.dumps(failure), file=sys.stderr)
        return EXIT_OK if report.passed else EXIT_FALSIFIED
    with open_output(args.out) as out:
        if args.format == "json":
            out.write(json.dumps(report.as_dict(), indent=2) + "\n")
        else:
            out.write(report.summary() + "\n")
            for failure in report.failures:
                out.write("FAIL " + json.dumps(failure) + "\n")
    return EXIT_OK if report.passed else EXIT_FALSIFIED


def cmd_sumset(args: argparse.Namespace) -> int:
    G = _group_of(args)
    A = parse_weights(args.weights, G)
    S = parse_sequence(args.sequence, G)
    max_len = len(S) if args.max_len is None else args.max_len
    profile = sum_profile(S, A, G, max_len)
    rows: List[Tuple[int, List[str]]] = [
        (k, [format_element(g) for g in sorted(profile.row(k))]) for k in range(max_len + 1)
    ]
    if args.format == "csv":
        write_records([{"k": k, "sums": ",".join(sums)} for k, sums in rows], "csv", args.out)
        return EXIT_OK
    with open_output(args.out) as out:
        if args.format == "json":
            out.write(json.dumps([{"k": k, "sums": sums} for k, sums in rows], indent=2) + "\n")
        else:
            for k, sums in rows:
                out.write(f"Sigma_{k}: {{{', '.join(sums)}}}\n")
    return EXIT_OK


_COMMANDS: Dict[str, Callable[[argparse.Namespace], int]] = {
    "dav": cmd_constant,
    "egz": cmd_constant,
    "constants": cmd_constants,
    "verify": cmd_verify,
    "lemma": cmd_lemma,
    "sumset": cmd_sumset,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    level = logging.WARNING if args.verbose == 0 else logging.INFO if args.verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)

    try:
        return _COMMANDS[args.command](args)
    except (StructuralError, PreconditionError, CapacityError) as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PostconditionError as exc:
        logger.error("Postcondition failed: %s", exc)
        return EXIT_FALSIFIED

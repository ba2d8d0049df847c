"""Command-line front end.

Exit codes: 0 on success, 1 when a sweep finds a counterexample or an
exploration finds a hit, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import sys

from .claims import ClaimId
from .conditions import condition_report
from .connectivity import is_k_strong, is_strong, strong_components_ordered
from .core import CANONICAL_MAX_ORDER, bits
from .families import generate, parse_spec, recognize_all
from .io import read_digraph, write_digraph
from .search import SEARCH_MAX_ORDER, find_dpn, find_hamiltonian_bypass, find_hamiltonian_cycle
from .sweep import EXPLORE_CONDITIONS, explore_open_problem, sweep

EXIT_OK, EXIT_FOUND, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read_input(path: str | None):
    if path is None or path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as e:
            raise UsageError(f"cannot read {path}: {e.strerror}") from None
    return read_digraph(text)


def cmd_gen(args, out) -> int:
    out.write(write_digraph(generate(parse_spec(args.spec)), args.format))
    return EXIT_OK


def cmd_check(args, out) -> int:
    G = _read_input(args.file)
    lines = [f"order = {G.order}", f"arcs = {G.arc_count()}"]
    if G.order >= 2:
        lines += condition_report(G).lines()
    lines.append(f"strong = {str(is_strong(G)).lower()}")
    lines.append(f"two_strong = {str(is_k_strong(G, 2)).lower()}")
    comps = strong_components_ordered(G).components
    lines.append("components = " + " ".join("{" + ",".join(map(str, bits(c))) + "}" for c in comps))
    if G.order > CANONICAL_MAX_ORDER:
        lines.append(f"family = unavailable (order > {CANONICAL_MAX_ORDER})")
    else:
        labels = recognize_all(G)
        lines += [f"family = {lab}" for lab in labels] or ["family = none"]
    out.write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_witness(args, out) -> int:
    G = _read_input(args.file)
    if G.order > SEARCH_MAX_ORDER:
        raise UsageError(f"witness search supports order <= {SEARCH_MAX_ORDER}")
    kind = args.kind
    if kind == "hamcycle":
        w = find_hamiltonian_cycle(G)
    elif kind == "bypass":
        w = find_hamiltonian_bypass(G) if G.order >= 3 else None
    elif kind.startswith("dpn:"):
        try:
            n = int(kind[4:])
        except ValueError:
            raise UsageError(f"bad witness kind {kind!r}") from None
        w = find_dpn(G, n)
    else:
        raise UsageError(f"unknown witness kind {kind!r}; use hamcycle, bypass or dpn:<n>")
    out.write((str(w) if w else "NONE") + "\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    claim = ClaimId.parse(args.claim)
    if args.mode == "sampled" and (args.seed is None or args.count is None):
        raise UsageError("sampled mode needs --seed and --count")
    report = sweep(
        args.p,
        claim,
        mode=args.mode,
        seed=args.seed,
        count=args.count,
        workers=args.workers,
        long_running=args.long_running,
    )
    out.write(report.to_text())
    if args.timing:
        print(report.timing_line(), file=sys.stderr)
    return EXIT_FOUND if report.counterexamples else EXIT_OK


def cmd_explore(args, out) -> int:
    if args.p > 5 and args.seed is None:
        raise UsageError("sampled exploration (p > 5) needs --seed")
    forms = explore_open_problem(args.condition, args.p, budget=args.budget, seed=args.seed, workers=args.workers)
    out.write(f"condition = {args.condition}\np = {args.p}\nfound = {len(forms)}\n")
    out.writelines(f"form = {f}\n" for f in forms)
    return EXIT_FOUND if forms else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hambypass", description="Hamiltonian bypass toolkit for small digraphs")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", help="emit a family member")
    g.add_argument("spec", help="dpk:p,k d0:p[:b64] t5 c3 kstar:p kbip:a,b kbipminus:a bypass:p,n cycle:p")
    g.add_argument("--format", choices=("d6", "edges"), default="d6")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("check", help="report conditions, connectivity and family labels")
    c.add_argument("file", nargs="?", help="input file (default stdin)")
    c.set_defaults(func=cmd_check)

    w = sub.add_parser("witness", help="search for a witness")
    w.add_argument("file", nargs="?", help="input file (default stdin)")
    w.add_argument("--kind", required=True, help="hamcycle | bypass | dpn:<n>")
    w.set_defaults(func=cmd_witness)

    v = sub.add_parser("verify", help="sweep a claim over digraphs of one order")
    v.add_argument("--claim", required=True, help=", ".join(c.value for c in ClaimId))
    v.add_argument("--p", type=int, required=True)
    v.add_argument("--mode", choices=("exhaustive", "sampled"), default="exhaustive")
    v.add_argument("--seed", type=int)
    v.add_argument("--count", type=int)
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--long-running", action="store_true", help="allow the exhaustive p = 6 sweep")
    v.add_argument("--timing", action="store_true", help="print wall time to stderr")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("explore", help="look for strong bypass-free digraphs meeting a condition")
    e.add_argument("--condition", required=True, choices=sorted(EXPLORE_CONDITIONS))
    e.add_argument("--p", type=int, required=True)
    e.add_argument("--budget", type=int, default=0)
    e.add_argument("--seed", type=int)
    e.add_argument("--workers", type=int, default=1)
    e.set_defaults(func=cmd_explore)
    return parser


def run_cli(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except (UsageError, ValueError) as e:
        print(f"hambypass: error: {e}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run_cli())

"""Command-line front end.

Every command prints one report: the result fields, an echo of the inputs,
the ordered trace, the tool version and a SHA-256 of the canonical JSON.
Exit status is 0 on success, 2 for domain errors, 1 for usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .classifier import (
    FACTS,
    CaseLabel,
    ClassificationVerdict,
    Kind,
    classify_max_nodal,
    classify_near_max,
    elliptic_fibre_search,
    existence_status,
    nonminimal_decision_tree,
    record_bmy_enumeration,
)
from .f2 import doubly_even_subspace_search, nodal_embedding_obstruction
from .invariants import bmy_solution_enumerator, contract, noether
from .lattice import (
    Gram,
    ade_gram,
    determinant,
    direct_sum,
    signature,
    smith_normal_form,
    square_discriminant_test,
)
from .report import Citation, Report, Trace
from .singularities import (
    OrbifoldSurface,
    bmy_check,
    hj_string,
    max_singular_points_filter,
    orbifold_euler,
    solve_discrepancies,
)

__all__ = ["main", "run", "replay", "REPLAYS"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _bool(text: str) -> bool:
    t = text.strip().lower()
    if t in ("true", "1", "yes"):
        return True
    if t in ("false", "0", "no"):
        return False
    raise argparse.ArgumentTypeError(f"expected true or false, got {text!r}")


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace("−", "-").split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _read_gram(text: str, stdin) -> Gram:
    if text == "-":
        text = stdin.read()
    return Gram.from_json(text.replace("−", "-"))


def _verdict_result(v: ClassificationVerdict) -> dict:
    return {"cases": [c.to_json() for c in v.cases], "excluded": [c.to_json() for c in v.excluded]}


# ---- command handlers: each returns (result dict, trace list) ----


def _lattice(args, stdin):
    if args.action == "ade":
        g = ade_gram(args.type)
        return {"gram": g.to_json(), "det": str(determinant(g))}, []
    g = _read_gram(args.gram, stdin)
    if args.action == "det":
        return {"det": str(determinant(g))}, []
    if args.action == "signature":
        return {"signature": signature(g)}, []
    if args.action == "smith":
        return {"smith": smith_normal_form(g)}, []
    if args.action == "square-test":
        return {"det": str(determinant(g)), "square": square_discriminant_test(g)}, []
    if args.action == "direct-sum":
        h = _read_gram(args.other, stdin)
        return {"gram": direct_sum(g, h).to_json()}, []
    raise UsageError(f"unknown lattice action {args.action}")


def _sing(args, stdin):
    if args.action == "resolve":
        chain = hj_string(args.n, args.q)
        return {"chain": chain, "resolution": solve_discrepancies(chain)}, []
    if args.action == "discrepancy":
        return {"resolution": solve_discrepancies(args.chain)}, []
    if args.action == "orbifold-euler":
        return {"e_orb": orbifold_euler(args.euler, args.orders)}, []
    if args.action == "bmy":
        # an A_{m-1} chain has local group of order m
        strings = tuple(solve_discrepancies([-2] * (m - 1)) for m in args.orders)
        s = OrbifoldSurface(args.euler, strings, args.ksq)
        return {"e_orb": orbifold_euler(s), "verdict": bmy_check(s, args.canonical)}, []
    if args.action == "max-points":
        return {"k_max": max_singular_points_filter(args.euler, args.min_order)}, []
    raise UsageError(f"unknown sing action {args.action}")


def _invariants(args, stdin):
    if args.action == "noether":
        return {"invariants": noether(args.q, args.pg, args.h11)}, []
    if args.action == "contract":
        return {"contraction": contract(noether(args.q, args.pg, args.h11), args.mu)}, []
    if args.action == "enumerate":
        sols = bmy_solution_enumerator(Fraction(args.bound), args.h11_min)
        return {"solutions": [list(s) for s in sols], "count": len(sols)}, []
    raise UsageError(f"unknown invariants action {args.action}")


def _obstruct(args, stdin):
    if args.action == "mod2":
        return nodal_embedding_obstruction(args.mu, args.h11).to_json(), []
    if args.action == "search":
        w = doubly_even_subspace_search(args.mu, args.dim)
        return {"mu": args.mu, "target_dim": args.dim, "witness": w}, []
    raise UsageError(f"unknown obstruct action {args.action}")


def _classify(args, stdin):
    if args.action == "max-nodal":
        v = classify_max_nodal(args.nef)
        return _verdict_result(v), v.trace
    if args.action == "near-max":
        v = classify_near_max(args.q, args.pg, args.h11, args.nef, args.kind)
        return _verdict_result(v), v.trace
    if args.action == "tree":
        v = nonminimal_decision_tree(args.kind)
        return _verdict_result(v), v.trace
    if args.action == "fibres":
        found = elliptic_fibre_search(args.euler, args.nodal)
        return {"multisets": [[f.name for f in m] for m in found], "count": len(found)}, []
    if args.action == "status":
        label = CaseLabel.make(args.tag) if args.ksq is None else CaseLabel.make(args.tag, ksq=args.ksq)
        return {"label": args.tag, "status": existence_status(label)}, []
    raise UsageError(f"unknown classify action {args.action}")


# ---- replays ----


def _dedupe(labels):
    out = []
    for c in labels:
        if c not in out:
            out.append(c)
    return out


def _replay_max_nodal():
    trace = Trace()
    cases = []
    for nef in (True, False):
        v = classify_max_nodal(nef)
        trace.extend(v.trace)
        cases += v.cases
    return ClassificationVerdict(tuple(cases), trace.freeze())


def _replay_near_max():
    trace = Trace()
    cases, excluded = [], []
    for q, pg, h11 in record_bmy_enumeration(trace, 2, 2):
        v = classify_near_max(q, pg, h11, nef_canonical=True)
        trace.extend(v.trace)
        cases += v.cases
        excluded += v.excluded
    for kind in Kind:
        v = nonminimal_decision_tree(kind)
        trace.extend(v.trace)
        cases += v.cases
        excluded += v.excluded
    return ClassificationVerdict(tuple(_dedupe(cases)), trace.freeze(), tuple(_dedupe(excluded)))


def _replay_cor():
    # resolving the nodes of S gives X with q = pg = 0 and mu = h11 - 1
    trace = Trace()
    trace.add("lookup", {"fact": "rational_singularities"}, {"statement": FACTS["rational_singularities"]},
              Citation.CLASSIFICATION)
    v = _replay_max_nodal()
    trace.extend(v.trace)
    cases = []
    for c in v.cases:
        if c.tag == "F2":
            trace.add("lookup", {"fact": "cone"}, {"statement": FACTS["cone"]}, Citation.CLASSIFICATION)
            cases.append(CaseLabel.make("cone", nodes=1))
        else:
            cases.append(CaseLabel.make(c.tag, nodes=0))
    return ClassificationVerdict(tuple(cases), trace.freeze())


REPLAYS = {
    "theorem-1.3": ("surfaces with h11 - 1 disjoint nodal curves", _replay_max_nodal),
    "theorem-1.4": ("surfaces with h11 - 2 disjoint nodal curves", _replay_near_max),
    "cor-1.2": ("rational homology planes with only nodes", _replay_cor),
}


def replay(theorem: str) -> Report:
    key = theorem if theorem in REPLAYS else f"theorem-{theorem}"
    if key not in REPLAYS:
        raise ValueError(f"unknown replay {theorem!r}")
    title, fn = REPLAYS[key]
    v = fn()
    return Report(f"replay {key}: {title}", {"theorem": key}, _verdict_result(v), list(v.trace), __version__)


def _replay(args, stdin):
    r = replay(args.theorem)
    args.title = r.title
    return r.result, r.trace


# ---- parser ----


def _build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--input", help="read option values from a JSON object ('-' for stdin)")

    p = _Parser(prog="nodalcalc", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    lat = sub.add_parser("lattice", help="Gram matrix arithmetic").add_subparsers(
        dest="action", required=True, parser_class=_Parser
    )
    for name in ("det", "signature", "smith", "square-test"):
        sp = lat.add_parser(name, parents=[common])
        sp.add_argument("--gram", required=True, help="JSON array of arrays, or '-' for stdin")
    sp = lat.add_parser("direct-sum", parents=[common])
    sp.add_argument("--gram", required=True)
    sp.add_argument("--other", required=True)
    sp = lat.add_parser("ade", parents=[common])
    sp.add_argument("--type", required=True, help="A1, D4, E8, ...")

    sing = sub.add_parser("sing", help="quotient singularities").add_subparsers(
        dest="action", required=True, parser_class=_Parser
    )
    sp = sing.add_parser("resolve", parents=[common])
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp = sing.add_parser("discrepancy", parents=[common])
    sp.add_argument("--chain", type=_int_list, required=True, help="e.g. --chain=-3,-2")
    sp = sing.add_parser("orbifold-euler", parents=[common])
    sp.add_argument("--euler", type=int, required=True)
    sp.add_argument("--orders", type=_int_list, default=[])
    sp = sing.add_parser("bmy", parents=[common])
    sp.add_argument("--euler", type=int, required=True)
    sp.add_argument("--orders", type=_int_list, default=[])
    sp.add_argument("--ksq", type=Fraction)
    sp.add_argument("--canonical", choices=("nef", "anti_nef"), default="nef")
    sp = sing.add_parser("max-points", parents=[common])
    sp.add_argument("--euler", type=int, required=True)
    sp.add_argument("--min-order", type=int, required=True)

    inv = sub.add_parser("invariants", help="surface invariants").add_subparsers(
        dest="action", required=True, parser_class=_Parser
    )
    for name in ("noether", "contract"):
        sp = inv.add_parser(name, parents=[common])
        sp.add_argument("--q", type=int, required=True)
        sp.add_argument("--pg", type=int, required=True)
        sp.add_argument("--h11", type=int, required=True)
        if name == "contract":
            sp.add_argument("--mu", type=int, required=True)
    sp = inv.add_parser("enumerate", parents=[common])
    sp.add_argument("--bound", type=Fraction, required=True)
    sp.add_argument("--h11-min", type=int, default=1)

    obs = sub.add_parser("obstruct", help="mod-2 obstruction").add_subparsers(
        dest="action", required=True, parser_class=_Parser
    )
    sp = obs.add_parser("mod2", parents=[common])
    sp.add_argument("--mu", type=int, required=True)
    sp.add_argument("--h11", type=int, required=True, help="ambient rank")
    sp = obs.add_parser("search", parents=[common])
    sp.add_argument("--mu", type=int, required=True)
    sp.add_argument("--dim", type=int, required=True)

    cls = sub.add_parser("classify", help="classification verdicts").add_subparsers(
        dest="action", required=True, parser_class=_Parser
    )
    sp = cls.add_parser("max-nodal", parents=[common])
    sp.add_argument("--nef", type=_bool, required=True)
    sp = cls.add_parser("near-max", parents=[common])
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--pg", type=int, required=True)
    sp.add_argument("--h11", type=int, required=True)
    sp.add_argument("--nef", type=_bool, default=True)
    sp.add_argument("--kind", choices=[k.value for k in Kind])
    sp = cls.add_parser("tree", parents=[common])
    sp.add_argument("--kind", choices=[k.value for k in Kind], required=True)
    sp = cls.add_parser("fibres", parents=[common])
    sp.add_argument("--euler", type=int, required=True)
    sp.add_argument("--nodal", type=int, required=True)
    sp = cls.add_parser("status", parents=[common])
    sp.add_argument("--tag", required=True)
    sp.add_argument("--ksq", type=int)

    sp = sub.add_parser("replay", parents=[common], help="replay a full classification proof")
    sp.add_argument("theorem", choices=sorted(REPLAYS))
    return p


_HANDLERS = {
    "lattice": _lattice,
    "sing": _sing,
    "invariants": _invariants,
    "obstruct": _obstruct,
    "classify": _classify,
    "replay": _replay,
}

_ENVELOPE = {"command", "action", "format", "input"}


def _apply_input(args, stdin):
    source = args.input
    text = stdin.read() if source == "-" else source
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise UsageError(f"--input is not valid JSON: {e}") from None
    if not isinstance(data, dict):
        raise UsageError("--input must be a JSON object")
    for key, value in data.items():
        attr = key.replace("-", "_")
        if attr in _ENVELOPE or not hasattr(args, attr):
            raise UsageError(f"unknown input field {key!r}")
        if attr in ("bound", "ksq") and value is not None:
            value = Fraction(value)
        if attr == "gram" and not isinstance(value, str):
            value = json.dumps(value)
        setattr(args, attr, value)


def run(argv, stdout=None, stderr=None, stdin=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    stdin = stdin or sys.stdin
    argv = list(argv)
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "input", None):
            _apply_input(args, stdin)
    except UsageError as e:
        parser.print_usage(stderr)
        print(str(e), file=stderr)
        return 1
    except SystemExit as e:  # --help / --version
        return int(e.code or 0)
    inputs = {k: v for k, v in sorted(vars(args).items()) if k not in _ENVELOPE}
    title = " ".join(x for x in (args.command, getattr(args, "action", None)) if x)
    try:
        result, trace = _HANDLERS[args.command](args, stdin)
    except (ValueError, ArithmeticError) as e:
        print(f"nodalcalc: {e}", file=stderr)
        return 2
    except UsageError as e:
        print(str(e), file=stderr)
        return 1
    title = getattr(args, "title", title)
    report = Report(title, inputs, result, list(trace), __version__)
    out = report.render_text() if args.format == "text" else report.dumps()
    stdout.write(out)
    return 0


def main(argv=None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())

"""Command-line entry point.

Exit status: 0 success, 1 the checked property fails, 2 usage or input
error, 3 internal invariant violation (the labeler trace goes to stderr).
"""

from __future__ import annotations

import argparse
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from .corpus import GenParams, random_hypertree, random_small_hypertree, trial_params
from .errors import InvariantViolation, NotAHypertreeError, ValidationError
from .formats import ParseError, parse_ht, parse_labeling, to_dot, write_ht, write_labeling
from .hypergraph import Hypergraph
from .labeler import label
from .labeling import histogram, is_k_cordial, is_strong_on
from .oracle import DEFAULT_BUDGET, Decision, count_k_cordial, exists_k_cordial

OK, FAILS, USAGE, INVARIANT = 0, 1, 2, 3


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _load_ht(path: str) -> Hypergraph:
    try:
        return parse_ht(_read(path))
    except (ParseError, ValidationError) as exc:
        raise InputError(f"{path}: {exc}") from None


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def cmd_gen(args) -> int:
    try:
        p = GenParams(args.seed, args.edges, args.size_min, args.size_max)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _emit(write_ht(random_hypertree(p)), args.out)
    return OK


def cmd_label(args) -> int:
    H = _load_ht(args.inp)
    try:
        f, trace = label(H, args.k)
    except NotAHypertreeError as exc:
        raise InputError(f"{args.inp}: {exc}") from None
    _emit(write_labeling(H, f), args.out)
    if args.trace:
        sys.stderr.write("\n".join(trace.describe()) + "\n")
        sys.stdout.write(to_dot(H, f))
    return OK


def _format_counts(counts: Sequence[int]) -> str:
    return " ".join(f"{a}:{c}" for a, c in enumerate(counts))


def cmd_verify(args) -> int:
    H = _load_ht(args.inp)
    try:
        f = parse_labeling(_read(args.labels), H)
    except ParseError as exc:
        raise InputError(f"{args.labels}: {exc}") from None
    if f.modulus != args.k:
        raise InputError(f"labeling is over Z_{f.modulus}, expected Z_{args.k}")
    h = histogram(H, f)
    ok = is_k_cordial(H, f)
    print(f"vertex counts {_format_counts(h.vertex_counts)}")
    print(f"edge counts   {_format_counts(h.edge_counts)}")
    print(f"{args.k}-cordial: {'yes' if ok else 'no'}")
    return OK if ok else FAILS


def cmd_oracle(args) -> int:
    H = _load_ht(args.inp)
    if args.k < 2:
        raise InputError("k must be at least 2")
    res = exists_k_cordial(H, args.k, args.budget)
    print(res.decision.value)
    if res.witness is not None:
        print("witness " + " ".join(map(str, res.witness.labels)))
    print(f"nodes {res.nodes_explored}")
    if args.count:
        print(f"count {count_k_cordial(H, args.k, max_vertices=max(12, H.n))}")
    if res.decision is Decision.EXHAUSTED_UNSAT:
        return FAILS
    return OK


@dataclass(frozen=True)
class TrialResult:
    trial: int
    edges: int
    vertices: int
    ok: bool
    detail: str = ""


def stress_trial(k: int, seed: int, trial: int, max_edges: int) -> TrialResult:
    T = random_hypertree(trial_params(seed, trial, max_edges))
    try:
        f, trace = label(T, k)
    except InvariantViolation as exc:
        lines = exc.trace.describe() if exc.trace is not None else []
        return TrialResult(trial, T.m, T.n, False, "\n".join([str(exc), write_ht(T).rstrip(), *lines]))
    ok = is_k_cordial(T, f) and (trace.case != 0 or not trace.config or is_strong_on(T, f, trace.config))
    return TrialResult(trial, T.m, T.n, ok, "" if ok else write_ht(T).rstrip())


def _run_trials(fn, jobs: int, argsets) -> list:
    # results come back in submission order whatever the scheduling
    if jobs <= 1:
        return [fn(*a) for a in argsets]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(fn, *zip(*argsets), chunksize=16))


def cmd_stress(args) -> int:
    if args.k not in (2, 3):
        raise InputError("stress covers k = 2 and k = 3")
    argsets = [(args.k, args.seed, t, args.max_edges) for t in range(args.trials)]
    results = _run_trials(stress_trial, args.jobs, argsets)
    bad = [r for r in results if not r.ok]
    for r in bad:
        print(f"trial {r.trial} (m={r.edges}, n={r.vertices}) FAILED")
        print(r.detail)
    print(f"verified {len(results) - len(bad)}/{len(results)} trials for k={args.k}")
    return INVARIANT if bad else OK


def probe_trial(k: int, seed: int, trial: int, max_vertices: int, budget: int) -> tuple[str, str]:
    T = random_small_hypertree(random.Random(f"{seed}:probe:{trial}").getrandbits(63), max_vertices)
    res = exists_k_cordial(T, k, budget)
    return res.decision.value, write_ht(T)


def cmd_probe(args) -> int:
    if args.k < 2:
        raise InputError("k must be at least 2")
    argsets = [(args.k, args.seed, t, args.max_vertices, args.budget) for t in range(args.trials)]
    results = _run_trials(probe_trial, args.jobs, argsets)
    tally = {d.value: 0 for d in Decision}
    for t, (decision, text) in enumerate(results):
        tally[decision] += 1
        if decision == Decision.EXHAUSTED_UNSAT.value:
            print(f"# trial {t}: not {args.k}-cordial")
            sys.stdout.write(text)
    print(" ".join(f"{d}={c}" for d, c in tally.items()))
    return FAILS if tally[Decision.EXHAUSTED_UNSAT.value] else OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hypercordial", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="write a seeded random hypertree")
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--edges", type=int, required=True)
    g.add_argument("--size-min", type=int, default=2)
    g.add_argument("--size-max", type=int, default=3)
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen)

    lab = sub.add_parser("label", help="label a hypertree constructively")
    lab.add_argument("--k", type=int, choices=(2, 3), required=True)
    lab.add_argument("--in", dest="inp", required=True)
    lab.add_argument("--out")
    lab.add_argument("--trace", action="store_true", help="trace to stderr, DOT to stdout")
    lab.set_defaults(func=cmd_label)

    v = sub.add_parser("verify", help="check a labeling for k-cordiality")
    v.add_argument("--k", type=int, required=True)
    v.add_argument("--in", dest="inp", required=True)
    v.add_argument("--labels", required=True)
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("oracle", help="decide k-cordiality by exhaustive search")
    o.add_argument("--k", type=int, required=True)
    o.add_argument("--in", dest="inp", required=True)
    o.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    o.add_argument("--count", action="store_true")
    o.set_defaults(func=cmd_oracle)

    s = sub.add_parser("stress", help="label and verify many random hypertrees")
    s.add_argument("--k", type=int, choices=(2, 3), required=True)
    s.add_argument("--trials", type=int, required=True)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--max-edges", type=int, default=100)
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_stress)

    pr = sub.add_parser("probe", help="look for small hypertrees that are not k-cordial")
    pr.add_argument("--k", type=int, required=True)
    pr.add_argument("--trials", type=int, required=True)
    pr.add_argument("--seed", type=int, required=True)
    pr.add_argument("--max-vertices", type=int, default=14)
    pr.add_argument("--budget", type=int, default=10**6)
    pr.add_argument("--jobs", type=int, default=1)
    pr.set_defaults(func=cmd_probe)
    return p


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        if exc.trace is not None:
            print("\n".join(exc.trace.describe()), file=sys.stderr)
        return INVARIANT


def main() -> None:
    sys.exit(run())

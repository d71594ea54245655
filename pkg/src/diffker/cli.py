"""Command-line front end: bounds, D_r, greedy sequences, tables and oracle sweeps.

Exit codes: 0 success, 1 counterexample found, 2 bad input or a limit hit.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import limits as lim
from .bounds import (
    Arithmetic,
    Doubling,
    PiecewiseGn,
    Table,
    an_upper,
    bezout_exponents,
    c_bound,
    char_set_order_bound,
    component_order_bound,
    doubling_growth_bound,
    l_max,
    mu_sequence,
    nullstellensatz_T,
    recursive_tower_bound_m2,
    shifted_ackermann_bound,
)
from .consistency import d_r
from .counts import to_decimal
from .errors import ComparablePair, DiffkerError, LimitExceeded
from .lattice import AntichainSequence, validate_antichain
from .oracle import brute, sweeps
from .oracle.report import VerificationReport

LIMIT_CELL = ">LIMIT"

BOUNDS = {
    "c": lambda a: c_bound(a.r, a.m, a.n),
    "pierce": lambda a: doubling_growth_bound(a.r, a.m, a.n),
    "leov-rec": lambda a: _m2(a) or recursive_tower_bound_m2(a.r, a.n),
    "leov-ack": lambda a: shifted_ackermann_bound(a.r, a.m, a.n),
    "an-upper": lambda a: an_upper(a.r, a.m, a.n),
}


class UsageError(DiffkerError):
    pass


def _m2(a):
    if a.m != 2:
        raise UsageError("leov-rec is defined for m = 2 only")


def _emit(obj):
    print(json.dumps(obj, sort_keys=True))


def parse_range(text):
    """'1..3' -> [1, 2, 3]; '1,4,5' -> [1, 4, 5]; '7' -> [7]."""
    out = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..")
            lo, hi = int(lo), int(hi)
            if hi < lo:
                raise argparse.ArgumentTypeError(f"empty range {part!r}")
            out.extend(range(lo, hi + 1))
        elif part:
            out.append(int(part))
    if not out or min(out) < 0:
        raise argparse.ArgumentTypeError(f"bad range {text!r}")
    return out


def nonneg(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def parse_growth(text, r, m, n):
    if text == "g":
        return PiecewiseGn(r, m, n)
    if text == "doubling":
        return Doubling(r)
    kind, _, arg = text.partition(":")
    if kind == "arith":
        return Arithmetic(int(arg))
    if kind == "table":
        return Table(int(v) for v in arg.split(","))
    raise UsageError(f"unknown growth function {text!r}; use g, doubling, arith:S or table:v1,v2,...")


# commands


def cmd_bound(a):
    rep = BOUNDS[a.which](a)
    if a.json:
        print(rep.dumps())
        return 0
    print(to_decimal(rep.value))
    if a.explain:
        _explain(rep)
    return 0


def _explain(rep):
    print(f"formula: {rep.formula_path.value}")
    for k, v in sorted(rep.intermediates.items()):
        print(f"  {k} = {to_decimal(v)}")
    for note in rep.notes:
        print(f"  note: {note}")


def _load_antichain(path):
    text = sys.stdin.read() if path == "-" else open(path).read()
    data = json.loads(text)
    if isinstance(data, list):
        return validate_antichain(data)
    return AntichainSequence.from_json(data)


def cmd_dr(a):
    try:
        seq = _load_antichain(a.file)
    except ComparablePair as e:
        print(f"error: not an antichain: {e}", file=sys.stderr)
        return 2
    res = d_r(seq, a.r)
    if a.json:
        print(res.dumps())
        return 0
    print(res.value)
    if a.explain:
        for ob in res.obligations:
            chain = " -> ".join(str(list(x)) for x in ob.chain)
            print(f"  tau={list(ob.tau)} copy={ob.index} i={ob.i + 1} j={ob.j + 1}: {chain}")
        if res.failure is not None:
            f = res.failure
            print(f"  at p={res.value - 1}: tau={list(f.tau)} copy={f.index} i={f.i + 1} j={f.j + 1} has no chain")
    return 0


def cmd_mu(a):
    seq = mu_sequence(PiecewiseGn(a.r, a.m, a.n), a.m, a.n)
    if a.json:
        print(seq.dumps())
        return 0
    for e in seq:
        print(" ".join(map(str, e.xi)), e.index)
    return 0


def cmd_lmax(a):
    f = parse_growth(a.growth, a.r, a.m, a.n)
    L = l_max(f, a.m, a.n)
    if a.json:
        _emit({"growth": repr(f), "m": a.m, "n": a.n, "L": to_decimal(L)})
    else:
        print(to_decimal(L))
    return 0


def _soft(fn):
    try:
        return fn()
    except LimitExceeded as e:
        return e


def cmd_apps(a):
    fields = {
        "char_set": lambda: char_set_order_bound(a.r, a.m, a.n),
        "component": lambda: component_order_bound(a.r, a.m, a.n),
        "nullstellensatz": lambda: nullstellensatz_T(a.r, a.m, a.n),
    }
    if a.dim_v is not None:
        fields["bezout"] = lambda: bezout_exponents(a.n, a.r, a.m, a.dim_v)
    out = {k: _soft(fn) for k, fn in fields.items()}
    if a.json:
        _emit({k: (v.to_json() if not isinstance(v, Exception) else {"error": str(v)}) for k, v in out.items()})
        return 0
    for k, v in out.items():
        if isinstance(v, Exception):
            print(f"{k}: {LIMIT_CELL} ({v})")
            continue
        print(f"{k}: {to_decimal(v.value)}")
        if k == "nullstellensatz":
            for name in ("alpha_T", "alpha_T-1"):
                if name in v.intermediates:
                    print(f"  {name} = {to_decimal(v.intermediates[name])}")
        if k == "bezout":
            print(f"  e_W = {to_decimal(v.intermediates['e_W'])}")
        if a.explain:
            _explain(v)
    return 0


def _cell(r, m, n, which):
    ns = argparse.Namespace(r=r, m=m, n=n)
    try:
        return BOUNDS[which](ns).value
    except LimitExceeded:
        return LIMIT_CELL
    except UsageError:
        return ""


def cmd_table(a):
    rows = [(r, m, n, _cell(r, m, n, a.which)) for m in a.ms for n in a.ns for r in a.rs]
    head = ["r", "m", "n", a.which]
    if a.format == "json":
        _emit([{"r": r, "m": m, "n": n, "value": v if isinstance(v, str) else to_decimal(v)} for r, m, n, v in rows])
        return 0
    text = [[str(r), str(m), str(n), v if isinstance(v, str) else to_decimal(v)] for r, m, n, v in rows]
    if a.format == "csv":
        print(",".join(head))
        for row in text:
            print(",".join(row))
    else:
        print("| " + " | ".join(head) + " |")
        print("|" + "---|" * len(head))
        for row in text:
            print("| " + " | ".join(row) + " |")
    return 0


# verification suites: lists of (function name, kwargs) so that tasks pickle


def _macaulay_tasks(a):
    pairs = [(a.m, a.d)] if a.m and a.d else [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3)]
    m_max = a.m or 4
    d_max = a.d or (4 if a.quick else 6)
    tasks = [("exhaustive_strict_macaulay", {"m": m, "d": d}) for m, d in pairs]
    tasks.append(("macaulay_identities", {"m_max": m_max, "d_max": d_max, "enum_d_max": min(d_max, 5)}))
    tasks.append(("exhaustive_block_converse_m2", {"d": min(d_max, 6)}))
    return tasks


def _sperner_tasks(a):
    ms = [a.m] if a.m else [2, 3]
    top = a.a_max or (60 if a.quick else 200)
    return [("check_sperner_lemma", {"m": m, "top": top}) for m in ms]


def _techlem1_tasks(a):
    pairs = [(a.m, a.d)] if a.m and a.d else [(2, 3), (3, 3), (3, 4), (4, 2)]
    total = a.samples or (2000 if a.quick else 10_000)
    each = -(-total // len(pairs))
    return [("check_techlem1", {"m": m, "d": d, "samples": each, "seed": a.seed}) for m, d in pairs]


def _triples(a, default):
    if a.r is not None and a.m:
        return [(a.r, a.m, a.n or 1)]
    return default


def _brute_tasks(a):
    default = [(1, 2, 1), (2, 2, 1), (1, 2, 2), (1, 3, 1), (2, 3, 1)]
    return [("brute_max_d", {"r": r, "m": m, "n": n}) for r, m, n in _triples(a, default)]


def _domination_tasks(a):
    default = [(1, 2, 1), (2, 2, 1), (1, 3, 1)] + ([] if a.quick else [(2, 3, 1)])
    return [("verify_hs_domination", {"r": r, "m": m, "n": n}) for r, m, n in _triples(a, default)]


def _sandwich_tasks(a):
    return [("sandwich", {}), ("acker_closed_forms", {})]


def _legacy_tasks(a):
    return [("legacy_dominance", {})]


SUITES = {
    "macaulay": _macaulay_tasks,
    "sperner": _sperner_tasks,
    "techlem1": _techlem1_tasks,
    "brute-c": _brute_tasks,
    "domination": _domination_tasks,
    "sandwich": _sandwich_tasks,
    "legacy": _legacy_tasks,
}

SYMBOLIC_TASKS = {"sandwich"}


def run_task(name, kwargs, bits, enumeration, iterations):
    fn = getattr(brute, name, None) or getattr(sweeps, name)
    with lim.limits(bits, enumeration, iterations):
        if name in SYMBOLIC_TASKS:
            with lim.symbolic():
                return fn(**kwargs)
        return fn(**kwargs)


def cmd_verify(a):
    names = list(SUITES) if a.suite == "all" else [a.suite]
    tasks = [t for s in names for t in SUITES[s](a)]
    extra = (a.bit_cap, a.enumeration_limit, a.budget)
    try:
        if a.jobs > 1:
            with ProcessPoolExecutor(a.jobs) as pool:
                futs = [pool.submit(run_task, n, kw, *extra) for n, kw in tasks]
                reports = [f.result() for f in futs]
        else:
            reports = [run_task(n, kw, *extra) for n, kw in tasks]
    except LimitExceeded as e:
        print(f"error: budget exhausted: {e}", file=sys.stderr)
        return 2
    if a.json:
        print(json.dumps([r.to_json() for r in reports], sort_keys=True, default=str))
    else:
        for r in reports:
            _print_report(r)
    return 0 if all(r.ok for r in reports) else 1


def _print_report(r: VerificationReport):
    status = "PASS" if r.ok else "FAIL"
    params = " ".join(f"{k}={v}" for k, v in sorted(r.params.items()))
    line = f"{status} {r.claim} [{params}] checked={r.checked} skipped={r.skipped}"
    if "max_D" in r.facts:
        line += f" max D = {r.facts['max_D']}"
    print(line)
    for f in r.failures[:10]:
        print("  counterexample: " + json.dumps(f, sort_keys=True, default=str))


# parser


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="structured JSON output")
    common.add_argument("--explain", action="store_true", help="show formula path and intermediates")
    common.add_argument("--bit-cap", type=positive, default=None,
                        help=f"bit-length cap for exact integers (default {lim.DEFAULT_BIT_CAP}, env DIFFKER_BIT_CAP)")
    common.add_argument("--enumeration-limit", type=positive, default=None,
                        help=f"cap on explicitly enumerated elements (default {lim.DEFAULT_ENUMERATION_LIMIT})")
    common.add_argument("--budget", type=positive, default=None,
                        help=f"iteration budget for loops and searches (default {lim.DEFAULT_ITERATION_BUDGET})")
    common.add_argument("--symbolic", action="store_true",
                        help="allow results of the form a*2^e+b beyond the bit cap")

    p = argparse.ArgumentParser(prog="diffker", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def rmn(sp, n_default=1):
        sp.add_argument("--r", type=nonneg, required=True)
        sp.add_argument("--m", type=positive, required=True)
        sp.add_argument("--n", type=positive, default=n_default)

    sp = sub.add_parser("bound", parents=[common], help="one bound C(r,m,n) or an older bound")
    rmn(sp)
    sp.add_argument("--which", choices=sorted(BOUNDS), default="c")
    sp.set_defaults(func=cmd_bound)

    sp = sub.add_parser("dr", parents=[common], help="D_r of an antichain given as JSON (file or -)")
    sp.add_argument("file")
    sp.add_argument("--r", type=nonneg, required=True)
    sp.set_defaults(func=cmd_dr)

    sp = sub.add_parser("mu", parents=[common], help="greedy maximal antichain sequence")
    rmn(sp)
    sp.set_defaults(func=cmd_mu)

    sp = sub.add_parser("lmax", parents=[common], help="maximal antichain-sequence length for a growth function")
    rmn(sp)
    sp.add_argument("--growth", default="g", help="g (default), doubling, arith:S or table:v1,v2,...")
    sp.set_defaults(func=cmd_lmax)

    sp = sub.add_parser("apps", parents=[common], help="application bounds")
    rmn(sp)
    sp.add_argument("--dim-v", type=nonneg, default=None)
    sp.set_defaults(func=cmd_apps)

    sp = sub.add_parser("verify", parents=[common], help="run oracle sweeps")
    sp.add_argument("--suite", choices=sorted(SUITES) + ["all"], default="all")
    sp.add_argument("--quick", action="store_true", help="smaller default parameters")
    sp.add_argument("--r", type=nonneg, default=None)
    sp.add_argument("--m", type=positive, default=None)
    sp.add_argument("--n", type=positive, default=None)
    sp.add_argument("--d", type=positive, default=None)
    sp.add_argument("--a-max", type=positive, default=None)
    sp.add_argument("--samples", type=positive, default=None)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--jobs", type=positive, default=1)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("table", parents=[common], help="table of bounds over ranges of r, m, n")
    sp.add_argument("--rs", type=parse_range, required=True)
    sp.add_argument("--ms", type=parse_range, required=True)
    sp.add_argument("--ns", type=parse_range, default=[1])
    sp.add_argument("--which", choices=sorted(BOUNDS), default="c")
    sp.add_argument("--format", choices=["csv", "json", "md"], default="csv")
    sp.set_defaults(func=cmd_table)
    return p


def main(argv=None):
    a = build_parser().parse_args(argv)
    try:
        with lim.limits(a.bit_cap, a.enumeration_limit, a.budget):
            if a.symbolic:
                with lim.symbolic():
                    return a.func(a)
            return a.func(a)
    except LimitExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (DiffkerError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line surface.

Commands: ``phi``, ``bound {density|colouring|discrete}``,
``construct {equispaced|alternating|blocks|blowup}``,
``optimize {density|partition}``, ``discrete {solve|scan|alpha|subadd}``,
``verify {suite}``.

Exit codes: 0 success, 1 property violation, 2 usage or input error,
3 capacity guard.  All floating-point output is printed with 12
significant digits; randomized commands take an explicit ``--seed``
(default 0), so identical command lines produce identical output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import __version__
from . import bounds as bounds_mod
from . import engine
from .circle import ArcSet, measure
from .constructions import (
    alternating_partition,
    block_colouring,
    blowup,
    equispaced_density,
)
from .discrete import (
    DiscreteColouring,
    DiscreteInstance,
    alpha_estimate,
    f_brute,
    f_exact_dp,
    scan_table,
    subadditivity_check,
)
from .errors import CapacityError, DomainError, InvalidInputError
from .optimizer import minimize_eta, minimize_partition, stationarity_report
from .verify import SUITES, run_suite

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3


def _fmt(x):
    """Round floats to 12 significant digits for stable output."""
    if isinstance(x, float):
        return float(f"{x:.12g}")
    if isinstance(x, dict):
        return {k: _fmt(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_fmt(v) for v in x]
    return x


def _emit(payload: dict, params: dict) -> None:
    out = {"tool": "arcphi", "version": __version__, "params": _fmt(params)}
    out.update(_fmt(payload))
    json.dump(out, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


def _read_arcset(path: str) -> ArcSet:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InvalidInputError(f"cannot read {path}: {exc}") from exc
    return ArcSet.from_json(text)


def _read_colouring(path: str) -> DiscreteColouring:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InvalidInputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"bad JSON: {exc}") from exc
    return DiscreteColouring.from_json_dict(data)


def _write_or_print(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_phi(args) -> int:
    A = _read_arcset(args.input)
    lam = measure(A)
    xi = lam / A.L
    profile = engine.g_profile(A)
    _emit(
        {
            "measure": lam,
            "xi": xi,
            "phi": engine.phi(A),
            "eta": engine.eta(A),
            "density_bound": bounds_mod.density_bound(xi, A.L),
            "g_breakpoints": [[x, y] for x, y in zip(profile.xs, profile.ys)],
        },
        {"input": args.input, "L": A.L},
    )
    return EXIT_OK


def cmd_bound(args) -> int:
    if args.kind == "density":
        value = bounds_mod.density_bound(args.xi, args.L)
        params = {"xi": args.xi, "L": args.L}
    elif args.kind == "colouring":
        value = bounds_mod.colouring_bound(args.k, args.L)
        params = {"k": args.k, "L": args.L}
    else:
        value = bounds_mod.discrete_bound(args.k, args.m, args.n)
        params = {"k": args.k, "m": args.m, "n": args.n}
    _emit({"bound": value, "kind": args.kind}, params)
    return EXIT_OK


def cmd_construct(args) -> int:
    if args.what == "equispaced":
        A = equispaced_density(args.xi, args.L, args.n)
        payload = {"arcset": A.to_json_dict(), "phi": engine.phi(A),
                   "eta": engine.eta(A)}
        params = {"xi": args.xi, "L": args.L, "n": args.n}
    elif args.what == "alternating":
        part, circle = alternating_partition(args.k, args.n)
        total = engine.phi_partition(part)
        bound = bounds_mod.colouring_bound(args.k, circle.L)
        payload = {"partition": part.to_json_dict(), "phi_sum": total,
                   "bound": bound, "slack": total - bound}
        params = {"k": args.k, "n": args.n}
    elif args.what == "blocks":
        c = block_colouring(args.k, args.n, args.t_blocks)
        payload = {"colouring": c.to_json_dict(), "witness": c.as_string()}
        params = {"k": args.k, "n": args.n, "t_blocks": args.t_blocks}
    else:  # blowup
        c = _read_colouring(args.colouring)
        part, circle = blowup(c, args.m)
        payload = {"partition": part.to_json_dict(),
                   "phi_sum": engine.phi_partition(part)}
        params = {"colouring": args.colouring, "m": args.m}
    text = json.dumps(
        {"tool": "arcphi", "version": __version__, "params": _fmt(params),
         **_fmt(payload)},
        indent=2, sort_keys=True) + "\n"
    _write_or_print(text, args.output)
    return EXIT_OK


def cmd_optimize(args) -> int:
    if args.what == "density":
        res = minimize_eta(
            args.xi, args.L, args.n,
            restarts=args.restarts, max_iters=args.max_iters,
            tol=args.tol, seed=args.seed, fixed_xi=not args.free_xi,
        )
        report = stationarity_report(res.best.to_arcset(), tol=1e-4)
        payload = {"result": res.to_json_dict(),
                   "stationarity": report.to_json_dict()}
        params = {"xi": args.xi, "L": args.L, "n": args.n,
                  "restarts": args.restarts, "max_iters": args.max_iters,
                  "tol": args.tol, "seed": args.seed,
                  "free_xi": args.free_xi}
    else:  # partition
        res = minimize_partition(
            args.k, args.L, args.n_per_part,
            restarts=args.restarts, max_iters=args.max_iters,
            tol=args.tol, seed=args.seed,
        )
        payload = {"result": res.to_json_dict()}
        params = {"k": args.k, "L": args.L, "n_per_part": args.n_per_part,
                  "restarts": args.restarts, "max_iters": args.max_iters,
                  "tol": args.tol, "seed": args.seed}
    text = json.dumps(
        {"tool": "arcphi", "version": __version__, "params": _fmt(params),
         **_fmt(payload)},
        indent=2, sort_keys=True) + "\n"
    _write_or_print(text, args.output)
    return EXIT_OK


def cmd_discrete(args) -> int:
    if args.what == "solve":
        inst = DiscreteInstance(k=args.k, m=args.m, n=args.n)
        if args.method == "brute":
            f, witness = f_brute(inst)
        else:
            f, witness = f_exact_dp(inst)
        payload = {"f": f, "witness": witness.as_string()}
        if args.n >= args.m:
            bound = bounds_mod.discrete_bound(args.k, args.m, args.n)
            payload.update({"bound": bound, "slack": f - bound})
        _emit(payload, {"k": args.k, "m": args.m, "n": args.n,
                        "method": args.method})
        return EXIT_OK
    if args.what == "scan":
        rows = scan_table(args.k, args.m, args.n_lo, args.n_max)
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["k", "m", "n", "f", "bound", "slack", "witness"])
        for row in rows:
            writer.writerow([
                row["k"], row["m"], row["n"], row["f"],
                f"{row['bound']:.12g}", f"{row['slack']:.12g}",
                row["witness"],
            ])
        _write_or_print(buf.getvalue(), args.output)
        return EXIT_OK
    if args.what == "alpha":
        lower, upper = alpha_estimate(args.k, args.m, args.n_max)
        _emit({"lower": lower, "upper": upper},
              {"k": args.k, "m": args.m, "n_max": args.n_max})
        return EXIT_OK
    # subadd
    rep = subadditivity_check(args.k, args.m, args.n1, args.n2)
    _emit({"passes": rep.passes, "slack": rep.slack, "detail": rep.detail},
          {"k": args.k, "m": args.m, "n1": args.n1, "n2": args.n2})
    return EXIT_OK if rep.passes else EXIT_VIOLATION


def cmd_verify(args) -> int:
    res = run_suite(args.suite, args.samples, args.seed)
    _emit(res.to_json_dict(), {"suite": args.suite, "samples": args.samples,
                               "seed": args.seed})
    return EXIT_OK if res.passed else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="arcphi",
        description="Window-overlap functionals on circular arc sets: exact "
                    "evaluation, bound certification, extremal search, and "
                    "path-power colouring solvers.",
    )
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("phi", help="evaluate an arc-set JSON file")
    sp.add_argument("input", help="path to {'L': ..., 'arcs': [[start, length], ...]}")
    sp.set_defaults(func=cmd_phi)

    sp = sub.add_parser("bound", help="closed-form lower bounds")
    bsub = sp.add_subparsers(dest="kind", required=True)
    b1 = bsub.add_parser("density")
    b1.add_argument("--xi", type=float, required=True)
    b1.add_argument("--L", type=float, required=True)
    b2 = bsub.add_parser("colouring")
    b2.add_argument("--k", type=int, required=True)
    b2.add_argument("--L", type=float, required=True)
    b3 = bsub.add_parser("discrete")
    b3.add_argument("--k", type=int, required=True)
    b3.add_argument("--m", type=int, required=True)
    b3.add_argument("--n", type=int, required=True)
    for b in (b1, b2, b3):
        b.set_defaults(func=cmd_bound)

    sp = sub.add_parser("construct", help="extremal configurations")
    csub = sp.add_subparsers(dest="what", required=True)
    c1 = csub.add_parser("equispaced")
    c1.add_argument("--xi", type=float, required=True)
    c1.add_argument("--L", type=float, required=True)
    c1.add_argument("--n", type=int, required=True)
    c2 = csub.add_parser("alternating")
    c2.add_argument("--k", type=int, required=True)
    c2.add_argument("--n", type=int, required=True)
    c3 = csub.add_parser("blocks")
    c3.add_argument("--k", type=int, required=True)
    c3.add_argument("--n", type=int, required=True)
    c3.add_argument("--t-blocks", dest="t_blocks", type=int, required=True)
    c4 = csub.add_parser("blowup")
    c4.add_argument("--colouring", required=True,
                    help="path to {'k': ..., 'colors': [...]} JSON")
    c4.add_argument("--m", type=int, required=True)
    for c in (c1, c2, c3, c4):
        c.add_argument("-o", "--output", default=None)
        c.set_defaults(func=cmd_construct)

    sp = sub.add_parser("optimize", help="numerical minimisation")
    osub = sp.add_subparsers(dest="what", required=True)
    o1 = osub.add_parser("density")
    o1.add_argument("--xi", type=float, required=True)
    o1.add_argument("--L", type=float, required=True)
    o1.add_argument("--n", type=int, required=True)
    o1.add_argument("--free-xi", action="store_true",
                    help="let the measure float (default keeps it at xi*L)")
    o2 = osub.add_parser("partition")
    o2.add_argument("--k", type=int, required=True)
    o2.add_argument("--L", type=float, required=True)
    o2.add_argument("--n-per-part", dest="n_per_part", type=int, required=True)
    for o in (o1, o2):
        o.add_argument("--restarts", type=int, default=16)
        o.add_argument("--max-iters", dest="max_iters", type=int, default=10_000)
        o.add_argument("--tol", type=float, default=1e-9)
        o.add_argument("--seed", type=int, default=0)
        o.add_argument("-o", "--output", default=None)
        o.set_defaults(func=cmd_optimize)

    sp = sub.add_parser("discrete", help="exact path-power colouring numbers")
    dsub = sp.add_subparsers(dest="what", required=True)
    d1 = dsub.add_parser("solve")
    d1.add_argument("--k", type=int, required=True)
    d1.add_argument("--m", type=int, required=True)
    d1.add_argument("--n", type=int, required=True)
    d1.add_argument("--method", choices=["dp", "brute"], default="dp")
    d2 = dsub.add_parser("scan")
    d2.add_argument("--k", type=int, required=True)
    d2.add_argument("--m", type=int, required=True)
    d2.add_argument("--n-lo", dest="n_lo", type=int, default=1)
    d2.add_argument("--n-max", dest="n_max", type=int, required=True)
    d2.add_argument("-o", "--output", default=None)
    d3 = dsub.add_parser("alpha")
    d3.add_argument("--k", type=int, required=True)
    d3.add_argument("--m", type=int, required=True)
    d3.add_argument("--n-max", dest="n_max", type=int, required=True)
    d4 = dsub.add_parser("subadd")
    d4.add_argument("--k", type=int, required=True)
    d4.add_argument("--m", type=int, required=True)
    d4.add_argument("--n1", type=int, required=True)
    d4.add_argument("--n2", type=int, required=True)
    for d in (d1, d2, d3, d4):
        d.set_defaults(func=cmd_discrete)

    sp = sub.add_parser("verify", help="run a named invariant suite")
    sp.add_argument("suite", choices=sorted(SUITES))
    sp.add_argument("--samples", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_verify)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (InvalidInputError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

    reflectory verify <suite> [--n N] [--k K] [--l L] [--trials T] [--seed S] [--tol X] [--json]
    reflectory scatter [--input PATH | --random --N N --n n --seed S] [--subset "1,3"]
                       [--emit-plot PATH] [--json]

Exit codes: 0 pass, 1 residual failure, 2 usage or input error.
"""

import argparse
import json
import sys

import numpy as np

from reflectory import loop_group as lg
from reflectory import matrix_core as mc
from reflectory import projective as pj
from reflectory import sampling as smp
from reflectory import schedules
from reflectory.errors import ReflectoryError
from reflectory.suites import ALGEBRAIC_TOL, SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser():
    p = _Parser(prog="reflectory", description="Yang-Baxter and reflection map verification")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="run a seeded verification suite")
    v.add_argument("suite", choices=sorted(SUITES))
    v.add_argument("--n", type=int, default=3)
    v.add_argument("--k", type=int, default=None)
    v.add_argument("--l", type=int, default=None)
    v.add_argument("--trials", type=int, default=20)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--tol", type=float, default=None)
    v.add_argument("--json", action="store_true")
    v.add_argument("--timing", action="store_true", help="include elapsed_ms in --json output")

    s = sub.add_parser("scatter", help="N-body polarization reflection for one ensemble")
    src = s.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", metavar="PATH")
    src.add_argument("--random", action="store_true")
    s.add_argument("--N", type=int, default=3)
    s.add_argument("--n", type=int, default=2)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--subset", default=None, help='boundary diag(+-1) with +1 on these 1-based slots, e.g. "1,3"')
    s.add_argument("--emit-plot", metavar="PATH", default=None)
    s.add_argument("--json", action="store_true")
    return p


def cmd_verify(args):
    if args.trials < 1:
        raise ValueError("--trials must be positive")
    report = run_suite(args.suite, n=args.n, k=args.k, l=args.l, trials=args.trials,
                       seed=args.seed, tol=args.tol, timing=args.timing or not args.json)
    if args.json:
        print(json.dumps(report, sort_keys=True))
    else:
        status = "PASS" if report["failures"] == 0 else "FAIL"
        print(f"{status} {report['suite']}: {report['trials_run']} trials, "
              f"{report['failures']} failures, max residual {report['max_residual']:.3e} "
              f"(tol {report['params']['tol']:.0e}, {report['elapsed_ms']:.0f} ms)")
    return EXIT_OK if report["failures"] == 0 else EXIT_FAIL


def _parse_subset(text, n):
    items = [t for t in text.replace(" ", "").split(",") if t]
    return mc.hermitian_unitary(n, [int(t) for t in items])


def _load_ensemble(args):
    if args.input:
        with open(args.input) as fh:
            obj = json.load(fh)
        if args.subset is not None:
            obj["boundary"] = mc.matrix_to_json(
                _parse_subset(args.subset, mc.matrix_from_json(obj["boundary"]).shape[0]))
        return pj.ensemble_from_json(obj)
    if args.N < 1 or args.n < 2:
        raise ValueError("--random needs --N >= 1 and --n >= 2")
    U = _parse_subset(args.subset, args.n) if args.subset is not None else None
    return smp.random_ensemble(args.N, args.n, args.seed, U=U)


def _vec(p):
    return [[float(x.real), float(x.imag)] for x in p]


def scatter_report(ens):
    pi = pj.n_body_reflection(ens)
    oracle = lg.n_body_via_loop(ens.params, [pj.j_delta(p) for p in ens.points], ens.boundary)
    oracle_res = max(mc.fro(pj.j_delta(p) - Q) for p, Q in zip(pi, oracle))
    params, points = pj.mirror_embedding(ens)
    left, right, out = pj.reflection_from_scattering(ens)
    rel = max(max(pj.proj_distance(a, b), pj.proj_distance(a, c))
              for a, b, c in zip(pi, left, right))
    return {
        "schema": 1,
        "ensemble": pj.ensemble_to_json(ens),
        "reflection": [{"alpha": [a.real, a.imag], "initial": _vec(p), "final": _vec(q)}
                       for a, p, q in zip(ens.params, ens.points, pi)],
        "embedding": [{"alpha": [a.real, a.imag], "initial": _vec(p), "final": _vec(q)}
                      for a, p, q in zip(params, points, out)],
        "oracle_residual": oracle_res,
        "scattering_relation_residual": rel,
    }


def emit_plot(ens, path):
    """Static schedule diagram: one column per event, one row per soliton."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    N = ens.N
    events = schedules.trace(schedules.sweep(N), N)
    fig, ax = plt.subplots(figsize=(1 + 0.5 * len(events), 1 + 0.6 * N))
    for t, ev in enumerate(events):
        if ev[0] == "B":
            ax.plot([t], [ev[1]], marker="s", color="black")
        else:
            ax.plot([t, t], [ev[1], ev[2]], marker="o", color="tab:blue")
    ax.set_yticks(range(N))
    ax.set_yticklabels([f"{a:.2g}" for a in ens.params])
    ax.set_xlabel("event (square: boundary reflection, bar: pairwise collision)")
    ax.set_xlim(-0.5, len(events) - 0.5)
    ax.invert_yaxis()
    fig.tight_layout()
    fig.savefig(path, format="svg", metadata={"Date": None})
    plt.close(fig)


def cmd_scatter(args):
    ens = _load_ensemble(args)
    report = scatter_report(ens)
    if args.emit_plot:
        emit_plot(ens, args.emit_plot)
    ok = max(report["oracle_residual"], report["scattering_relation_residual"]) <= ALGEBRAIC_TOL
    if args.json:
        print(json.dumps(report, sort_keys=True))
    else:
        np.set_printoptions(precision=6, suppress=True)
        print(f"{ens.N} solitons in C^{ens.n}")
        for i, (a, p, q) in enumerate(zip(ens.params, ens.points, report["reflection"])):
            final = np.array([complex(*x) for x in q["final"]])
            print(f"  [{i + 1}] alpha={a:.4g}\n      in  {p}\n      out {final}")
        print("mirror embedding (2N full-line solitons):")
        for e in report["embedding"]:
            print(f"  alpha={complex(*e['alpha']):.4g}")
        print(f"loop-group oracle residual     {report['oracle_residual']:.3e}")
        print(f"scattering relation residual   {report['scattering_relation_residual']:.3e}")
    return EXIT_OK if ok else EXIT_FAIL


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            return cmd_verify(args)
        return cmd_scatter(args)
    except (ReflectoryError, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"reflectory: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

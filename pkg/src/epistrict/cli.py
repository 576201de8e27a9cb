"""Command-line front end.

Subcommands: enumerate-states, pvm, wigner, measure, verify, moyal,
groupoid-check.  Structured results are JSON; tabular results are CSV.
Exit codes: 0 all checks passed, 1 a check failed, 2 usage or
configuration error.  Defaults may be placed in an `epistrict.json`
config file (flags win).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from fractions import Fraction

import numpy as np

from .epistricted import (
    EpistemicState,
    enumerate_pure_states,
    measure,
    ontic_support,
)
from .fields import PrimeField
from .symplectic import Subspace
from .weyl import QuditSystem
from .wigner import wigner_function
from . import equivalence, groupoid
from .moyal import (
    available_backends,
    commutator_bracket_error,
    default_observables,
    grid_for,
    moyal_star,
    moyal_star_via_chords,
)

_TERM = re.compile(r"([+-]?)\s*(\d*)\s*([qp])(\d*)")
_CONST = re.compile(r"([+-]?\s*\d+)(?![qp\d])")


class UsageError(Exception):
    pass


def parse_functional(text: str, n: int):
    """Coefficient vector + constant from strings like 'q+2p' or '2q1-p2+1'.

    Mode subscripts are 1-based; bare q/p mean mode 1.  Returns
    (coeffs tuple of length 2n, constant).
    """
    coeffs = [0] * (2 * n)
    stripped = text.replace(" ", "")
    pos = 0
    constant = 0
    while pos < len(stripped):
        m = _TERM.match(stripped, pos)
        if m and m.group(3):
            sign = -1 if m.group(1) == "-" else 1
            coeff = int(m.group(2)) if m.group(2) else 1
            mode = int(m.group(4)) if m.group(4) else 1
            if not 1 <= mode <= n:
                raise UsageError(f"mode {mode} out of range in {text!r}")
            idx = 2 * (mode - 1) + (0 if m.group(3) == "q" else 1)
            coeffs[idx] += sign * coeff
            pos = m.end()
            continue
        m = _CONST.match(stripped, pos)
        if m:
            constant += int(m.group(1).replace(" ", ""))
            pos = m.end()
            continue
        raise UsageError(f"cannot parse functional {text!r} at {stripped[pos:]!r}")
    return tuple(coeffs), constant


def parse_state(text: str, d: int, n: int) -> EpistemicState:
    """State from JSON like {"V": "q", "v": 0} or {"V": ["q","p2"], "v": [0,1]}."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"state is not valid JSON: {exc}")
    raw_rows = data.get("V", [])
    raw_vals = data.get("v", [])
    if isinstance(raw_rows, str):
        raw_rows = [raw_rows]
    if not isinstance(raw_vals, list):
        raw_vals = [raw_vals]
    field = PrimeField(d)
    rows = []
    for r in raw_rows:
        coeffs, const = parse_functional(r, n)
        if const:
            raise UsageError("known-set rows must be linear (no constant term)")
        rows.append(tuple(field.of(c) for c in coeffs))
    V = Subspace(field, 2 * n, tuple(rows))
    if V.dim != len(rows):
        raise UsageError("known-set functionals must be linearly independent")
    if len(raw_vals) != len(rows):
        raise UsageError("need one value per known functional")
    # values were given per input row; convert to the canonical basis
    state_rows = Subspace(field, 2 * n, tuple(rows))
    from . import linalg
    vals_canonical = []
    particular = linalg.solve(field, tuple(rows), tuple(field.of(v) for v in raw_vals)) \
        if rows else tuple()
    if rows and particular is None:
        raise UsageError("inconsistent valuation")
    for row in state_rows.rows:
        vals_canonical.append(linalg.dot(field, row, particular))
    return EpistemicState(state_rows, tuple(vals_canonical))


def _complex_pairs(M: np.ndarray):
    return [[[float(z.real), float(z.imag)] for z in row] for row in M]


def _emit(args, text: str):
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# --------------------------------------------------------------------------
# subcommands


def cmd_enumerate_states(args) -> int:
    field = PrimeField(args.d)
    states = enumerate_pure_states(field, args.n)
    out = []
    for st in states:
        out.append({
            "V": [list(map(int, row)) for row in st.V.rows],
            "v": [int(v) for v in st.values],
            "support": sorted([list(map(int, p)) for p in ontic_support(st).points()]),
        })
    _emit(args, json.dumps({"d": args.d, "n": args.n, "count": len(out),
                            "states": out}, indent=2) + "\n")
    return 0


def cmd_pvm(args) -> int:
    system = QuditSystem(args.d, args.n)
    coeffs, const = parse_functional(args.f, args.n)
    pvm = system.quadrature_pvm(coeffs, const)
    out = {
        "d": args.d, "n": args.n, "functional": args.f,
        "coeffs": list(coeffs), "constant": const,
        "weyl_label": list(pvm.weyl_label),
        "completeness_defect": pvm.completeness_defect(),
        "projectors": {str(k): _complex_pairs(P)
                       for k, P in sorted(pvm.projectors.items())},
    }
    _emit(args, json.dumps(out, indent=2) + "\n")
    return 0


def cmd_wigner(args) -> int:
    state = parse_state(args.state, args.d, args.n)
    system = QuditSystem(args.d, args.n)
    rho = equivalence.epistemic_to_quantum(system, state)
    table = wigner_function(system, rho).real_values()
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow([f"m_{x}{i+1}" for i in range(args.n) for x in "qp"] + ["value"])
    for m in sorted(table):
        writer.writerow(list(m) + [f"{table[m]:.12g}"])
    _emit(args, buf.getvalue())
    return 0


def cmd_measure(args) -> int:
    state = parse_state(args.state, args.d, args.n)
    obs = json.loads(args.observable) if args.observable.strip().startswith("{") \
        else {"W": args.observable}
    raw = obs.get("W", obs.get("V", []))
    if isinstance(raw, str):
        raw = [raw]
    field = PrimeField(args.d)
    rows = []
    for r in raw:
        coeffs, const = parse_functional(r, args.n)
        if const:
            raise UsageError("observable rows must be linear")
        rows.append(tuple(field.of(c) for c in coeffs))
    W = Subspace(field, 2 * args.n, tuple(rows))
    dist = measure(state, W)
    out = {
        "d": args.d, "n": args.n,
        "W": [list(map(int, row)) for row in W.rows],
        "outcomes": [
            {
                "valuation": [int(v) for v in o.valuation],
                "probability": str(o.probability),
                "probability_float": float(o.probability),
                "post_V": [list(map(int, row)) for row in o.post_state.V.rows],
                "post_v": [int(v) for v in o.post_state.values],
            }
            for o in dist.outcomes
        ],
    }
    _emit(args, json.dumps(out, indent=2) + "\n")
    return 0


def cmd_verify(args) -> int:
    rep = equivalence.verify_finite_equivalence(
        args.d, args.n, tol=args.tol,
        exhaustive_transforms=args.exhaustive,
        n_random_transforms=args.transforms, seed=args.seed)
    summary = {
        "d": args.d, "n": args.n, "checks": rep.checks,
        "max_error": rep.max_error, "passed": rep.passed,
        "failures": [{"check": name, "error": err} for name, err in rep.failures],
    }
    if args.csv:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["d", "n", "checks", "max_error", "passed"])
        writer.writerow([args.d, args.n, rep.checks,
                         f"{rep.max_error:.6e}", int(rep.passed)])
        _emit(args, buf.getvalue())
    else:
        _emit(args, json.dumps(summary, indent=2) + "\n")
    return 0 if rep.passed else 1


def cmd_moyal(args) -> int:
    if args.demo != "gaussians":
        raise UsageError(f"unknown demo {args.demo!r}")
    box = float(np.sqrt(2 * np.pi * args.hbar * args.N))
    hbars = [args.hbar / 2 ** i for i in range(args.levels)]
    rows = []
    prev = None
    worst_two_path = 0.0
    for h in hbars:
        grid = grid_for(h, box)
        f_obs, g_obs = default_observables(box)
        Q, P = grid.meshgrid()
        f = f_obs.sample(Q, P).astype(complex)
        g = g_obs.sample(Q, P).astype(complex)
        two_path = float(np.max(np.abs(
            moyal_star(grid, f, g) - moyal_star_via_chords(grid, f, g))))
        worst_two_path = max(worst_two_path, two_path)
        err = commutator_bracket_error(h, box)
        ratio = prev / err if prev is not None else float("nan")
        prev = err
        rows.append([h, grid.n_points, f"{err:.6e}",
                     f"{ratio:.3f}" if ratio == ratio else "",
                     f"{two_path:.3e}"])
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["hbar", "n_points", "commutator_error",
                     "error_ratio", "two_path_error"])
    writer.writerows(rows)
    _emit(args, buf.getvalue())
    ratios = [float(r[3]) for r in rows if r[3]]
    ok = worst_two_path < 1e-8 and all(3.0 < r < 5.0 for r in ratios)
    return 0 if ok else 1


def cmd_groupoid_check(args) -> int:
    report = groupoid_axiom_report(args.n, seed=args.seed, samples=args.samples)
    _emit(args, json.dumps(report, indent=2) + "\n")
    return 0 if all(v["passed"] for v in report["axioms"].values()) else 1


def groupoid_axiom_report(n: int, seed: int = 0, samples: int = 200) -> dict:
    """Exact checks of the pair-groupoid and double-structure identities."""
    from .fields import QQ
    import random

    rng = random.Random(seed)

    def rand_point():
        return tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 9))
                     for _ in range(2 * n))

    axioms = {}

    assoc = unit = inv = True
    for _ in range(samples):
        a, b, c, e = (rand_point() for _ in range(4))
        g = groupoid.PairGroupoidElement(QQ, a, b)
        h = groupoid.PairGroupoidElement(QQ, b, c)
        k = groupoid.PairGroupoidElement(QQ, c, e)
        if groupoid.compose(groupoid.compose(g, h), k) != \
           groupoid.compose(g, groupoid.compose(h, k)):
            assoc = False
        if groupoid.compose(g, groupoid.unit(QQ, b)) != g or \
           groupoid.compose(groupoid.unit(QQ, a), g) != g:
            unit = False
        if groupoid.compose(g, groupoid.inverse(g)) != groupoid.unit(QQ, a):
            inv = False
    axioms["composition_associative"] = {"passed": assoc, "samples": samples}
    axioms["units_neutral"] = {"passed": unit, "samples": samples}
    axioms["inverses"] = {"passed": inv, "samples": samples}
    axioms["multiplication_graph_lagrangian"] = {
        "passed": bool(groupoid.multiplication_graph_is_lagrangian(n, QQ)),
    }
    axioms["half_sum_difference_map_symplectic"] = {
        "passed": bool(groupoid.phi_is_symplectomorphism(n, QQ)),
    }
    return {"n": n, "axioms": axioms}


# --------------------------------------------------------------------------
# argument plumbing


def _load_config(path):
    if path is None:
        try:
            with open("epistrict.json") as fh:
                return json.load(fh)
        except FileNotFoundError:
            return {}
    with open(path) as fh:
        return json.load(fh)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="epistrict",
        description="Restricted classical theories, qudit stabilizer "
                    "subtheories, discrete Wigner functions, Moyal star product.")
    parser.add_argument("--config", help="JSON config file (default ./epistrict.json)")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_dn(p):
        p.add_argument("--d", type=int, help="odd prime dimension (default 3)")
        p.add_argument("--n", type=int, help="number of modes (default 1)")
        p.add_argument("--output", help="write output to a file instead of stdout")

    p = sub.add_parser("enumerate-states", help="all pure epistemic states")
    add_dn(p)
    p.set_defaults(func=cmd_enumerate_states)

    p = sub.add_parser("pvm", help="quadrature PVM of a functional")
    add_dn(p)
    p.add_argument("--f", required=True, help='functional, e.g. "q+2p"')
    p.set_defaults(func=cmd_pvm)

    p = sub.add_parser("wigner", help="Wigner table of a mapped epistemic state")
    add_dn(p)
    p.add_argument("--state", required=True,
                   help='JSON like {"V": "q", "v": 0}')
    p.set_defaults(func=cmd_wigner)

    p = sub.add_parser("measure", help="measure an isotropic observable set")
    add_dn(p)
    p.add_argument("--state", required=True)
    p.add_argument("--observable", required=True,
                   help='JSON like {"W": ["p"]} or a bare functional string')
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("verify", help="classical/quantum equivalence sweep")
    add_dn(p)
    p.add_argument("--exhaustive", action="store_true",
                   help="all affine symplectic maps (small d, n only)")
    p.add_argument("--transforms", type=int, default=10)
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--seed", type=int, help="RNG seed (default 0)")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("moyal", help="grid star-product error metrics")
    p.add_argument("--demo", default="gaussians")
    p.add_argument("--N", type=int, default=128, help="grid points at the first hbar")
    p.add_argument("--hbar", type=float, default=0.2)
    p.add_argument("--levels", type=int, default=3, help="hbar halvings to sweep")
    p.add_argument("--output")
    p.set_defaults(func=cmd_moyal)

    p = sub.add_parser("groupoid-check", help="pair-groupoid axiom report")
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, help="RNG seed (default 0)")
    p.add_argument("--output")
    p.set_defaults(func=cmd_groupoid_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help; keep both
        return int(exc.code or 0)
    try:
        config = _load_config(args.config)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: cannot read config: {exc}", file=sys.stderr)
        return 2
    for key in ("d", "n", "seed"):
        if hasattr(args, key) and getattr(args, key) is None:
            default = {"d": 3, "n": 1, "seed": 0}[key]
            setattr(args, key, int(config.get(key, default)))
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

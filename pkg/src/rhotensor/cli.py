"""Command-line front end.

Nodes follow Bourbaki numbering; weights are comma-separated integers in the
fundamental-weight basis (``--weight 2,0,1``).  Exit codes: 0 success or all
checks passed, 1 a verification failed, 2 usage error, 3 resource limit.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time

from . import __version__
from .eigencone import (
    eq4_triple_holds,
    ineq5_check,
    ineq5_sweep,
    maximal_parabolic,
    minimal_coset_reps,
    parabolic_table,
)
from .errors import (
    InternalConsistencyError,
    InvalidSpec,
    NonDominantInput,
    PreconditionViolated,
    ResourceLimit,
)
from .order import enumerate_dominant_below
from .polytope import (
    bounding_box,
    corollary8_membership,
    fmt_subset,
    in_polytope_by_definition,
    lemma7_check,
    prop9_decompose,
    rho_shift_identity,
    subsets,
)
from .reps import freudenthal_multiplicities, tensor_decompose, weyl_dim
from .rootsystem import build_root_datum, parse_spec, parse_weight, scale
from .verifier import (
    VerdictReport,
    conjecture4_probe,
    exterior_dim_check,
    kostant_check,
    require_not_heavy,
    saturation_factor,
)

SCHEMA_VERSION = "1"
HEAVY_COMMANDS = {"decompose", "mult", "kostant", "prop9", "ineq", "identity4", "probe-saturation"}


class UsageError(Exception):
    pass


def _env_int(name, default):
    v = os.environ.get(name)
    return int(v) if v not in (None, "") else default


def _env_flag(name):
    return os.environ.get(name, "").lower() in ("1", "true", "yes", "on")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", required=True, dest="lie_type",
                        help="Lie type as letter+rank, e.g. A2, B3, F4 (Bourbaki node numbering)")
    common.add_argument("--format", choices=("table", "json"), default="table")
    common.add_argument("--max-lattice-points", type=int,
                        default=_env_int("RHOTENSOR_MAX_LATTICE_POINTS", None),
                        help="cap on lattice points visited by enumerations (default 10^7)")
    common.add_argument("--threads", type=int, default=_env_int("RHOTENSOR_THREADS", 1),
                        help="worker processes for tensor product sums")
    common.add_argument("--allow-heavy", action="store_true",
                        default=_env_flag("RHOTENSOR_ALLOW_HEAVY"),
                        help="unlock representation computations for E6/E7/E8")

    p = argparse.ArgumentParser(prog="rhotensor", description=__doc__,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    sub.add_parser("roots", parents=[common], help="root datum summary")

    s = sub.add_parser("decompose", parents=[common], help="decompose V(lhs) (x) V(rhs)")
    s.add_argument("--lhs", required=True)
    s.add_argument("--rhs", required=True)

    s = sub.add_parser("mult", parents=[common], help="weight multiplicities of V(weight)")
    s.add_argument("--weight", required=True)
    s.add_argument("--beta", help="report only the multiplicity of this weight")

    s = sub.add_parser("kostant", parents=[common],
                       help="V(d lam) in V(d rho) (x) V(d rho) for all dominant lam <= 2 rho")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--factor", type=int, default=1, help="scaling factor d (default 1)")
    g.add_argument("--saturation", action="store_true",
                   help="use the tabulated saturation factor as d")

    s = sub.add_parser("vertices", parents=[common], help="vertex and convex hull checks")
    s.add_argument("--hull-sweep-rank", type=int, default=4,
                   help="run the lattice-point hull comparison up to this rank")

    s = sub.add_parser("prop9", parents=[common], help="lam = rho + beta decompositions")
    s.add_argument("--weight", help="a single dominant lam <= 2 rho (default: all of them)")

    s = sub.add_parser("ineq", parents=[common],
                       help="(w^-1 lam*)(x_P) <= (rho + w^-1 rho)(x_P) sweep")
    s.add_argument("--weight", help="a single dominant lam <= 2 rho (default: all of them)")

    s = sub.add_parser("identity4", parents=[common],
                       help="chi identity over triples of minimal coset representatives")
    s.add_argument("--max-triples", type=int, default=10**6,
                   help="per parabolic; above this a deterministic stride sample is used")

    sub.add_parser("dims", parents=[common], help="2^r dim(V(rho))^2 == 2^dim(g)")

    s = sub.add_parser("probe-saturation", parents=[common],
                       help="search small triples for d=1 saturation failures (simply laced)")
    s.add_argument("--height-cap", type=int, default=1)
    return p


def _weight(datum, text, name="weight"):
    try:
        w = parse_weight(text)
    except ValueError as e:
        raise UsageError(str(e)) from None
    if len(w) != datum.rank:
        raise UsageError(f"--{name} needs {datum.rank} coordinates, got {len(w)}")
    return w


def _wstr(w):
    return "[" + ",".join(str(x) for x in w) + "]"


def _q(x):
    return str(x) if getattr(x, "denominator", 1) != 1 else int(x)


# --- commands: each returns (status, payload, table_lines) ------------------

def cmd_roots(datum, args):
    from .rootsystem import to_root_basis
    payload = {
        "cartan": [list(r) for r in datum.cartan],
        "positive_roots": [list(r) for r in datum.positive_roots],
        "positive_roots_fundamental": [list(r) for r in datum.positive_roots_fund],
        "rho": list(datum.rho),
        "rho_root_basis": [_q(c) for c in to_root_basis(datum, datum.rho)],
        "num_positive_roots": datum.num_positive_roots,
        "dim_g": datum.dim_g,
        "root_lengths_half_squared": list(datum.root_lengths),
    }
    lines = [f"type {datum.spec}  rank {datum.rank}  N={datum.num_positive_roots}  "
             f"dim g={datum.dim_g}", "cartan (rows = simple roots in fundamental basis):"]
    lines += ["  " + " ".join(f"{x:3d}" for x in row) for row in datum.cartan]
    lines.append("positive roots (simple-root coordinates):")
    lines += ["  " + _wstr(r) for r in datum.positive_roots]
    return "info", payload, lines


def cmd_decompose(datum, args):
    lam, mu = _weight(datum, args.lhs, "lhs"), _weight(datum, args.rhs, "rhs")
    dec = tensor_decompose(datum, lam, mu, max(1, args.threads))
    comps = [{"weight": list(nu), "mult": m, "dim": weyl_dim(datum, nu)}
             for nu, m in dec.entries.items()]
    payload = {"lhs": list(lam), "rhs": list(mu), "components": comps,
               "total_dim": weyl_dim(datum, lam) * weyl_dim(datum, mu)}
    lines = [f"V{_wstr(lam)} (x) V{_wstr(mu)} in {datum.spec}:", f"{'weight':>16} {'mult':>6} {'dim':>12}"]
    lines += [f"{_wstr(c['weight']):>16} {c['mult']:>6} {c['dim']:>12}" for c in comps]
    lines.append(f"total dimension {payload['total_dim']}")
    return "info", payload, lines


def cmd_mult(datum, args):
    lam = _weight(datum, args.weight)
    ch = freudenthal_multiplicities(datum, lam)
    if args.beta:
        beta = _weight(datum, args.beta, "beta")
        m = ch.multiplicity(beta)
        return "info", {"weight": list(lam), "beta": list(beta), "mult": m}, \
            [f"mult of {_wstr(beta)} in V{_wstr(lam)}: {m}"]
    entries = [{"weight": list(w), "mult": m} for w, m in ch.entries.items()]
    payload = {"weight": list(lam), "dim": weyl_dim(datum, lam), "dominant_weights": entries}
    lines = [f"V{_wstr(lam)} in {datum.spec}: dim {payload['dim']}, dominant weights:"]
    lines += [f"  {_wstr(e['weight']):>16} {e['mult']:>8}" for e in entries]
    return "info", payload, lines


def _report_payload(rep: VerdictReport):
    d = rep.to_dict()
    lines = [f"{rep.campaign} {rep.spec}: {'PASS' if rep.passed else 'FAIL'} "
             f"({len(rep.cases) - rep.failures}/{len(rep.cases)} cases, {d['wall_time']} s)"]
    for c in rep.cases:
        if not c.passed:
            lines.append(f"  FAIL {c.case}: expected {c.expected}, observed {c.observed}")
    for k, v in rep.extra.items():
        if k != "multiplicities":
            lines.append(f"  {k}: {v}")
    return ("pass" if rep.passed else "fail"), d, lines


def cmd_kostant(datum, args):
    d = saturation_factor(datum.spec) if args.saturation else args.factor
    if d < 1:
        raise UsageError("--factor must be >= 1")
    rep = kostant_check(datum, d, allow_heavy=args.allow_heavy, threads=max(1, args.threads))
    return _report_payload(rep)


def cmd_dims(datum, args):
    return _report_payload(exterior_dim_check(datum))


def cmd_vertices(datum, args):
    t0 = time.perf_counter()
    rep = VerdictReport("vertices", str(datum.spec))
    faces = lemma7_check(datum)
    for rec in faces.records:
        rep.add({"J": fmt_subset(rec.J), "c_J": list(rec.c), "b_J": list(rec.b)},
                "b shape, c_J in face, single point",
                [rec.b_shape, rec.c_in_face, rec.single_point], rec.passed)
    rep.add("c_empty = 2rho and c_I = 0", True, faces.endpoints, faces.endpoints)
    rep.add("vertices pairwise distinct", True, faces.distinct, faces.distinct)
    rep.add("empty intersections for H not in K", 0, len(faces.empty_failures),
            not faces.empty_failures)
    rep.add("two-point witnesses for H strictly in K", 0, len(faces.witness_failures),
            not faces.witness_failures)
    for J in subsets(datum):
        ok = rho_shift_identity(datum, J)
        rep.add({"c_J - rho == w_o^J rho": fmt_subset(J)}, True, ok, ok)
    extra = {"empty_pairs": faces.empty_pairs, "witness_pairs": faces.witness_pairs}
    if datum.rank <= args.hull_sweep_rank:
        mismatches = [list(p) for p in bounding_box(datum)
                      if corollary8_membership(datum, p) != in_polytope_by_definition(datum, p)]
        rep.add("convex hull of c_J == definition on box lattice points", 0, len(mismatches),
                not mismatches)
        extra["hull_mismatches"] = mismatches
    rep.extra = extra
    rep.wall_time = time.perf_counter() - t0
    return _report_payload(rep)


def cmd_prop9(datum, args):
    t0 = time.perf_counter()
    rep = VerdictReport("prop9", str(datum.spec))
    if args.weight:
        lams = [_weight(datum, args.weight)]
    else:
        lams = enumerate_dominant_below(datum, scale(2, datum.rho))
    for lam in lams:
        try:
            beta = prop9_decompose(datum, lam)
            rep.add(list(lam), "beta weight of V(rho)", list(beta), True)
        except InternalConsistencyError as e:
            rep.add(list(lam), "beta weight of V(rho)", str(e), False)
    rep.wall_time = time.perf_counter() - t0
    return _report_payload(rep)


def cmd_ineq(datum, args):
    t0 = time.perf_counter()
    if args.weight:
        res = ineq5_check(datum, _weight(datum, args.weight))
    else:
        res = ineq5_sweep(datum)
    rep = VerdictReport("ineq", str(datum.spec))
    rep.add({"inequalities": res.checked}, 0, len(res.violations), res.passed)
    for v in res.violations:
        rep.add({"lam": list(v.lam), "node": v.node, "w": list(v.word)}, f"<= {_q(v.rhs)}",
                _q(v.lhs), False)
    rep.extra = {"checked": res.checked}
    rep.wall_time = time.perf_counter() - t0
    return _report_payload(rep)


def stride_sample(total: int, k: int):
    """``k`` distinct indices in ``range(total)`` spread by a fixed stride."""
    if k >= total:
        yield from range(total)
        return
    step = int(total * 0.6180339887) | 1
    while math.gcd(step, total) != 1:
        step += 2
    for i in range(k):
        yield (i * step) % total


def cmd_identity4(datum, args):
    t0 = time.perf_counter()
    rep = VerdictReport("identity4", str(datum.spec))
    counts = {}
    for node in range(1, datum.rank + 1):
        P = maximal_parabolic(datum, node)
        n = len(minimal_coset_reps(datum, P))
        tab = parabolic_table(datum, P)
        total = n ** 3
        bad = 0
        checked = 0
        for idx in stride_sample(total, args.max_triples):
            iu, rest = divmod(idx, n * n)
            iv, iw = divmod(rest, n)
            checked += 1
            if not eq4_triple_holds(tab, iu, iv, iw):
                bad += 1
        counts[f"P{node}"] = {"coset_reps": n, "triples": checked, "exhaustive": checked == total}
        rep.add({"parabolic": node, "triples": checked}, 0, bad, bad == 0)
    rep.extra = counts
    rep.wall_time = time.perf_counter() - t0
    return _report_payload(rep)


def cmd_probe(datum, args):
    if args.height_cap < 0:
        raise UsageError("--height-cap must be >= 0")
    rep = conjecture4_probe(datum, args.height_cap, allow_heavy=args.allow_heavy)
    status, payload, lines = _report_payload(rep)
    return "info", payload, lines


COMMANDS = {
    "roots": cmd_roots,
    "decompose": cmd_decompose,
    "mult": cmd_mult,
    "kostant": cmd_kostant,
    "vertices": cmd_vertices,
    "prop9": cmd_prop9,
    "ineq": cmd_ineq,
    "identity4": cmd_identity4,
    "dims": cmd_dims,
    "probe-saturation": cmd_probe,
}


def envelope(command, spec, status, payload) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "spec": {"family": spec.family, "rank": spec.rank},
        "status": status,
        "payload": payload,
    }


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    saved_cap = os.environ.get("RHOTENSOR_MAX_LATTICE_POINTS")
    if args.max_lattice_points is not None:
        os.environ["RHOTENSOR_MAX_LATTICE_POINTS"] = str(args.max_lattice_points)
    try:
        spec = parse_spec(args.lie_type)
        datum = build_root_datum(spec)
        if args.command in HEAVY_COMMANDS:
            require_not_heavy(datum, args.allow_heavy)
        status, payload, lines = COMMANDS[args.command](datum, args)
    except (InvalidSpec, UsageError, NonDominantInput, PreconditionViolated, ValueError) as e:
        print(f"rhotensor: error: {e}", file=stderr)
        return 2
    except (ResourceLimit, OverflowError, MemoryError) as e:
        print(f"rhotensor: resource limit: {e}", file=stderr)
        return 3
    except InternalConsistencyError as e:
        print(f"rhotensor: internal consistency failure: {e}", file=stderr)
        return 1
    finally:
        if saved_cap is None:
            os.environ.pop("RHOTENSOR_MAX_LATTICE_POINTS", None)
        else:
            os.environ["RHOTENSOR_MAX_LATTICE_POINTS"] = saved_cap
    if args.format == "json":
        json.dump(envelope(args.command, spec, status, payload), stdout, indent=2,
                  ensure_ascii=False)
        stdout.write("\n")
    else:
        stdout.write("\n".join(lines) + "\n")
    return 1 if status == "fail" else 0


def main():
    sys.exit(run())

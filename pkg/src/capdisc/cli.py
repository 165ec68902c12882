"""Command-line interface.

Subcommands: gen, disc, moments, energy-deficit, constants, curves,
zeta.  JSON or CSV goes to stdout (or --out); errors are emitted as a
JSON object on stderr with a nonzero exit code.  Numeric output uses 17
significant digits, '.' decimal, no separators.
"""

import argparse
import json
import math
import os
import sys


def _set_threads(n):
    if n is None:
        n = os.environ.get("CAPDISC_THREADS")
    if n:
        for var in ("OMP_NUM_THREADS", "OPENBLAS_NUM_THREADS", "MKL_NUM_THREADS", "NUMBA_NUM_THREADS"):
            os.environ.setdefault(var, str(n))


def _emit(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _gen(args):
    from . import pointsets

    kind = args.kind
    if kind == "random":
        cfg = pointsets.random_uniform(args.d, args.n, pointsets.SeedSpec(args.seed))
    elif kind == "fibonacci":
        cfg = pointsets.fibonacci_sphere(args.n)
    elif kind == "cross":
        cfg = pointsets.cross_polytope(args.d)
    elif kind == "simplex":
        cfg = pointsets.simplex_vertices(args.d)
    elif kind in ("curve:great_circle", "curve:spiral"):
        spec = pointsets.CurveSpec(kind.split(":", 1)[1], args.length, args.resolution)
        cfg = pointsets.curve_points(spec)
    else:
        raise ValueError(f"unknown kind {kind!r}")
    pointsets.save_points(cfg, args.out)


def _disc(args):
    from . import discrepancy, pointsets

    cfg = pointsets.load_points(args.input)
    if args.method == "stolarsky":
        rep = discrepancy.cap_discrepancy_stolarsky(cfg)
    else:
        rep = discrepancy.cap_discrepancy_montecarlo(
            cfg, args.samples, pointsets.SeedSpec(args.seed)
        )
    _emit(rep.to_json(indent=2) + "\n", args.out)


def _moments(args):
    from . import discrepancy, pointsets, specfun

    cfg = pointsets.load_points(args.input)
    S = discrepancy.moment_sums(cfg, args.m_max)
    a = specfun.dist_coeffs(args.m_max, 1.0)
    n = cfg.n
    lines = ["m,S,scaled,m_over_N,parity"]
    for m in range(1, args.m_max + 1):
        scaled = n**1.5 * a[m] * S[m]
        lines.append(
            "%d,%.17g,%.17g,%.17g,%s" % (m, S[m], scaled, m / n, "even" if m % 2 == 0 else "odd")
        )
    _emit("\n".join(lines) + "\n", args.out)


def _energy_deficit(args):
    from . import discrepancy, pointsets

    cfg = pointsets.load_points(args.input)
    ed = discrepancy.energy_deficit(cfg, args.alpha)
    _emit(json.dumps(ed.to_dict(), indent=2) + "\n", args.out)


def _constants(args):
    from . import constants

    if args.what == "table1":
        rows = constants.table1()
        if args.format == "json":
            data = [
                {
                    "d": r.d,
                    "lattice": r.lattice,
                    "c_conj": r.c_conj,
                    "c_star3": r.c_star3,
                    "diff": r.diff,
                    "rel_error": r.rel_error,
                    "diff_printed": r.diff_printed,
                    "rel_error_percent": r.rel_error_percent,
                }
                for r in rows
            ]
            _emit(json.dumps(data, indent=2) + "\n", args.out)
        else:
            lines = ["d,lattice,c_conj,c_star3,diff,rel_error,diff_printed,rel_error_percent"]
            for r in rows:
                lines.append(
                    "%d,%s,%.17g,%.17g,%.17g,%.17g,%s,%d"
                    % (r.d, r.lattice, r.c_conj, r.c_star3, r.diff, r.rel_error,
                       r.diff_printed, r.rel_error_percent)
                )
            _emit("\n".join(lines) + "\n", args.out)
        return
    # fig3-grid
    alphas = [float(a) for a in args.alphas.split(",")] if args.alphas else [
        0.1 * i for i in range(1, 20)
    ]
    lats = args.lattices.split(",") if args.lattices else None
    rows = constants.fig3_grid(alphas, lats)
    if args.format == "json":
        _emit(json.dumps(rows, indent=2) + "\n", args.out)
    else:
        lines = ["lattice,d,alpha,c_conj,c_asymp,rel_error"]
        for r in rows:
            lines.append(
                "%s,%d,%.17g,%.17g,%.17g,%.17g"
                % (r["lattice"], r["d"], r["alpha"], r["c_conj"], r["c_asymp"], r["rel_error"])
            )
        _emit("\n".join(lines) + "\n", args.out)


def _curves(args):
    from . import curves

    if args.lengths:
        lengths = [float(l) for l in args.lengths.split(",")]
        study = curves.curve_scaling_study(lengths, args.resolution)
        if args.format == "csv":
            _emit(study.to_csv(), args.out)
        else:
            _emit(study.to_json(indent=2) + "\n", args.out)
    else:
        from .pointsets import CurveSpec

        spec = CurveSpec(args.kind, args.length, args.resolution)
        rep = curves.curve_discrepancy(spec)
        _emit(rep.to_json(indent=2) + "\n", args.out)


def _zeta(args):
    from . import lattices

    lat = lattices.lattice(args.lattice)
    out = {"lattice": lat.name, "s": args.s, "method": args.method}
    if args.method == "closed":
        out["value"] = lattices.epstein_zeta_closed(lat, args.s)
    elif args.method == "gauss":
        out["value"] = lattices.epstein_zeta_gauss(lat, args.s)
    else:
        ts = lattices.epstein_zeta_direct(lat, args.s, args.radius)
        out.update({"value": ts.value, "tail_bound": ts.tail_bound, "count": ts.count})
    _emit(json.dumps(out, indent=2) + "\n", args.out)


def build_parser():
    p = argparse.ArgumentParser(prog="capdisc", description=__doc__)
    p.add_argument("--threads", type=int, default=None, help="cap internal parallelism")
    sub = p.add_subparsers(dest="cmd", required=True)

    g = sub.add_parser("gen", help="generate a point-set file")
    g.add_argument("--kind", required=True,
                   choices=["random", "fibonacci", "cross", "simplex",
                            "curve:great_circle", "curve:spiral"])
    g.add_argument("--d", type=int, default=2)
    g.add_argument("--n", type=int, default=100)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--length", type=float, default=2.0 * math.pi)
    g.add_argument("--resolution", type=float, default=64.0)
    g.add_argument("--out", required=True)
    g.set_defaults(fn=_gen)

    d = sub.add_parser("disc", help="cap L2 discrepancy of a point-set file")
    d.add_argument("--input", required=True)
    d.add_argument("--method", choices=["stolarsky", "mc"], default="stolarsky")
    d.add_argument("--samples", type=int, default=1_000_000)
    d.add_argument("--seed", type=int, default=0)
    d.add_argument("--out")
    d.set_defaults(fn=_disc)

    m = sub.add_parser("moments", help="moment deficits S(m) as CSV")
    m.add_argument("--input", required=True)
    m.add_argument("--m-max", dest="m_max", type=int, required=True)
    m.add_argument("--out")
    m.set_defaults(fn=_moments)

    e = sub.add_parser("energy-deficit", help="Riesz alpha-energy deficit")
    e.add_argument("--input", required=True)
    e.add_argument("--alpha", type=float, default=1.0)
    e.add_argument("--out")
    e.set_defaults(fn=_energy_deficit)

    c = sub.add_parser("constants", help="comparison table / figure grids")
    c.add_argument("what", choices=["table1", "fig3-grid"])
    c.add_argument("--alphas", help="comma list for fig3-grid")
    c.add_argument("--lattices", help="comma list, default all four")
    c.add_argument("--format", choices=["csv", "json"], default="csv")
    c.add_argument("--out")
    c.set_defaults(fn=_constants)

    cv = sub.add_parser("curves", help="curve discrepancy / scaling study")
    cv.add_argument("--kind", choices=["great_circle", "spiral"], default="great_circle")
    cv.add_argument("--length", type=float, default=2.0 * math.pi)
    cv.add_argument("--lengths", help="comma list: run a scaling study instead")
    cv.add_argument("--resolution", type=float, default=64.0)
    cv.add_argument("--format", choices=["csv", "json"], default="json")
    cv.add_argument("--out")
    cv.set_defaults(fn=_curves)

    z = sub.add_parser("zeta", help="Epstein zeta of a named lattice")
    z.add_argument("--lattice", required=True, choices=["A2", "D4", "E8", "Leech"])
    z.add_argument("--s", type=float, required=True)
    z.add_argument("--method", choices=["closed", "direct", "gauss"], default="closed")
    z.add_argument("--radius", type=float, default=10.0)
    z.add_argument("--out")
    z.set_defaults(fn=_zeta)

    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    _set_threads(args.threads)
    try:
        args.fn(args)
    except (ValueError, ArithmeticError, OSError, NotImplementedError) as exc:
        sys.stderr.write(json.dumps({"error": str(exc)}) + "\n")
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.  Machine-readable JSON goes to stdout, a short
human summary to stderr; rationals are serialized as "p/q" strings so the
boundary stays exact.  Exit codes: 0 success, 1 domain error (JSON error
object on stdout), 2 malformed arguments.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import characters, ehrhart, goldens, hives, kernels, sampling
from .core import Triple, Weight, ell, extend_to_un, is_compatible, weyl_dim
from .errors import HivelabError


def _frac(x) -> str:
    return str(Fraction(x))


def _jsonable(x):
    if isinstance(x, Fraction):
        return _frac(x)
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, (int, float, str)):
        return x
    if isinstance(x, Weight):
        return list(x.labels)
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    return str(x)


def _emit(payload: dict, summary: str = "") -> None:
    json.dump(_jsonable(payload), sys.stdout)
    sys.stdout.write("\n")
    if summary:
        print(summary, file=sys.stderr)


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _triple(args) -> Triple:
    return Triple.from_labels(args.n, args.lam, args.mu, args.nu)


def _add_weight_args(p, nu=True):
    p.add_argument("--n", type=int, required=True, help="rank of SU(n)")
    p.add_argument("--lambda", dest="lam", type=_ints, required=True, metavar="L1,L2,...")
    p.add_argument("--mu", type=_ints, required=True, metavar="M1,M2,...")
    if nu:
        p.add_argument("--nu", type=_ints, required=True, metavar="N1,N2,...")


def _add_common(p):
    p.add_argument("--node-limit", type=int, default=None, help="backtracking node budget")
    p.add_argument("--threads", type=int, default=1, help="worker processes for stretched counts")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hivelab", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lr", help="LR multiplicity of a triple")
    _add_weight_args(p)
    _add_common(p)

    p = sub.add_parser("hives", help="enumerate the hives of a triple")
    _add_weight_args(p)
    _add_common(p)
    p.add_argument("--output", default=None, help="write the hive list to this file")

    p = sub.add_parser("tensor", help="decompose lambda (x) mu")
    _add_weight_args(p, nu=False)
    _add_common(p)
    p.add_argument("--report", action="store_true", help="aggregate summary only")

    p = sub.add_parser("jn", help="kernel J_n of a triple")
    _add_weight_args(p)
    _add_common(p)
    p.add_argument("--shifted", action="store_true", help="evaluate at rho-shifted weights")
    p.add_argument(
        "--method",
        choices=["closed", "theorem1", "volume"],
        default="closed",
        help="closed form (n<=4), LR character sum (n<=6), or Ehrhart leading coefficient",
    )

    p = sub.add_parser("stretch", help="stretched multiplicities and LR polynomial")
    _add_weight_args(p)
    _add_common(p)
    p.add_argument("--s-max", type=int, default=None, help="counts for s=1..s_max")
    p.add_argument("--poly", action="store_true", help="interpolate the stretching polynomial")

    p = sub.add_parser("geometry", help="volume / boundary / interior of the hive polytope")
    _add_weight_args(p)
    _add_common(p)

    p = sub.add_parser("rn-table", help="character expansion of R_n or R-hat_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--variant", choices=["R", "Rhat"], default="R")

    p = sub.add_parser("checks", help="structural identity checks")
    p.add_argument(
        "kind", choices=["lemma3", "quantization", "localization", "conjecture2", "matriochka"]
    )
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--value", default=None, help="rational p/q for quantization")
    p.add_argument("--alpha", type=_ints, default=None, metavar="A1,...,An")
    p.add_argument("--beta", type=_ints, default=None, metavar="B1,...,Bn")
    p.add_argument("--lambda", dest="lam", type=_ints, default=None)
    p.add_argument("--mu", type=_ints, default=None)

    p = sub.add_parser("sample", help="Monte-Carlo spectra of A + B on random orbits")
    p.add_argument("--alpha", type=_ints, required=True, metavar="A1,...,An")
    p.add_argument("--beta", type=_ints, required=True, metavar="B1,...,Bn")
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--csv", default=None, help="write one spectrum per row to this file")

    p = sub.add_parser("compare-density", help="empirical vs analytic spectral density")
    p.add_argument("--alpha", type=_ints, required=True)
    p.add_argument("--beta", type=_ints, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bins", type=int, default=30)
    p.add_argument("--output", default=None, help="write the full bin report to this file")

    p = sub.add_parser("golden", help="run the published-value checks")
    p.add_argument("--tier", choices=["fast", "slow", "all"], default="all")

    return ap


def _cmd_lr(args):
    t = _triple(args)
    mult = hives.count_hives(t, node_limit=args.node_limit)
    _emit({"multiplicity": mult}, f"N = {mult}")
    return 0


def _cmd_hives(args):
    t = _triple(args)
    out = [h.to_json_dict() for h in hives.enumerate_hives(t, node_limit=args.node_limit)]
    if args.output:
        with open(args.output, "w") as fh:
            json.dump(out, fh)
        _emit({"count": len(out), "path": args.output}, f"{len(out)} hives -> {args.output}")
    else:
        _emit({"count": len(out), "hives": out}, f"{len(out)} hives")
    return 0


def _cmd_tensor(args):
    lam = Weight(args.n, args.lam)
    mu = Weight(args.n, args.mu)
    rep = hives.tensor_polytope_report(lam, mu, node_limit=args.node_limit)
    payload = {
        "distinct": rep.distinct,
        "total_multiplicity": rep.total_multiplicity,
        "max_multiplicity": rep.max_multiplicity,
    }
    if not args.report:
        payload["entries"] = [
            {"nu": list(e.nu.labels), "multiplicity": e.multiplicity} for e in rep.entries
        ]
    _emit(payload, f"{rep.distinct} irreps, total multiplicity {rep.total_multiplicity}")
    return 0


def _cmd_jn(args):
    t = _triple(args)
    if args.method == "closed":
        k = kernels.KernelInput.from_triple(t, shifted=args.shifted)
        value = kernels.jn_closed(k)
    elif args.method == "theorem1":
        value = characters.theorem1_rhs(t, "shifted" if args.shifted else "unshifted")
    else:
        if args.shifted:
            raise HivelabError("the volume route computes the unshifted kernel")
        value = ehrhart.jn_via_volume(t, node_limit=args.node_limit, threads=args.threads)
    _emit({"value": _frac(value)}, f"J_{args.n} = {value}")
    return 0


def _cmd_stretch(args):
    t = _triple(args)
    payload = {}
    if args.s_max:
        payload["counts"] = ehrhart.stretched_counts(
            t, args.s_max, node_limit=args.node_limit, threads=args.threads
        )
    if args.poly or not args.s_max:
        poly = ehrhart.stretching_polynomial(t, node_limit=args.node_limit, threads=args.threads)
        payload["polynomial"] = poly.to_strings()
    _emit(payload, "stretch done")
    return 0


def _cmd_geometry(args):
    t = _triple(args)
    g = ehrhart.geometry_report(t, node_limit=args.node_limit, threads=args.threads)
    _emit(
        {
            "degree": g.degree,
            "normalized_volume": _frac(g.normalized_volume),
            "normalized_boundary": _frac(g.normalized_boundary),
            "interior_points": g.interior_points,
            "lattice_points": g.lattice_points,
            "blichfeldt_ok": g.blichfeldt_ok,
            "polynomial": g.polynomial.to_strings(),
        },
        f"V = {g.normalized_volume}, A = {g.normalized_boundary}",
    )
    return 0


def _cmd_rn_table(args):
    combo = characters.rn_table(args.n, args.variant)
    terms = [
        {"kappa": list(k.labels), "r": _frac(r)}
        for k, r in sorted(combo.terms.items(), key=lambda kv: kv[0].labels)
    ]
    _emit({"n": args.n, "variant": args.variant, "terms": terms}, f"{len(terms)} terms")
    return 0


def _cmd_checks(args):
    kind = args.kind
    if kind == "lemma3":
        if args.n is None:
            raise HivelabError("lemma3 needs --n")
        rep = characters.lemma3_check(args.n)
        _emit(
            {"sum_r_dim": _frac(rep.sum_r_dim), "sum_rhat_dim": _frac(rep.sum_rhat_dim), "pass": rep.ok},
            f"lemma3 n={args.n}: {'pass' if rep.ok else 'FAIL'}",
        )
        return 0 if rep.ok else 1
    if kind == "quantization":
        if args.n is None or args.value is None:
            raise HivelabError("quantization needs --n and --value")
        ok = characters.quantization_check(Fraction(args.value), args.n)
        _emit({"pass": ok}, f"delta_{args.n} * {args.value} integral: {ok}")
        return 0 if ok else 1
    if kind == "localization":
        if args.alpha is not None and args.beta is not None:
            alpha, beta = args.alpha, args.beta
        elif args.lam is not None and args.mu is not None and args.n is not None:
            alpha = ell(Weight(args.n, args.lam))
            beta = ell(Weight(args.n, args.mu))
        else:
            raise HivelabError("localization needs --alpha/--beta or --n/--lambda/--mu")
        value = kernels.localization_sum(alpha, beta)
        from .core import superfactorial

        expected = Fraction(1, superfactorial(len(alpha) - 1))
        _emit(
            {"sum": _frac(value), "expected": _frac(expected), "pass": value == expected},
            f"localization: {value} (expected {expected})",
        )
        return 0 if value == expected else 1
    if kind == "conjecture2":
        if args.n is None:
            raise HivelabError("conjecture2 needs --n")
        rep = characters.conjecture2_scan(args.n)
        _emit(
            {"min_r": _frac(rep.min_r), "min_rhat": _frac(rep.min_rhat), "nonnegative": rep.nonnegative},
            f"min coefficients: {rep.min_r}, {rep.min_rhat}",
        )
        return 0
    # matriochka
    if args.n != 3 or args.lam is None or args.mu is None:
        raise HivelabError("matriochka needs --n 3 --lambda --mu")
    rep = hives.matriochka_report(Weight(3, args.lam), Weight(3, args.mu))
    _emit(
        {"max_multiplicity": rep.max_multiplicity, "nested": rep.nested},
        f"max multiplicity {rep.max_multiplicity}, nested: {rep.nested}",
    )
    return 0 if rep.nested else 1


def _cmd_sample(args):
    spectra = sampling.sample_spectra(args.alpha, args.beta, args.count, args.seed)
    payload = {
        "count": args.count,
        "seed": args.seed,
        "mean": [float(x) for x in spectra.mean(axis=0)],
        "trace": float(sum(args.alpha) + sum(args.beta)),
    }
    if args.csv:
        sampling.spectra_to_csv(spectra, args.csv)
        payload["csv"] = args.csv
    _emit(payload, f"{args.count} spectra sampled")
    return 0


def _cmd_compare_density(args):
    spectra = sampling.sample_spectra(args.alpha, args.beta, args.count, args.seed)
    cmp = sampling.compare_density(spectra, args.alpha, args.beta, args.bins)
    payload = {
        "l1_distance": cmp.l1_distance,
        "outside_mass": cmp.outside_mass,
        "bins": args.bins,
        "count": args.count,
    }
    if args.output:
        full = dict(payload)
        full["edges"] = [list(ax) for ax in cmp.edges]
        full["empirical"] = cmp.empirical.tolist()
        full["analytic"] = cmp.analytic.tolist()
        with open(args.output, "w") as fh:
            json.dump(full, fh)
        payload["output"] = args.output
    _emit(payload, f"L1 distance {cmp.l1_distance:.4f}")
    return 0


def _cmd_golden(args):
    results = goldens.run_goldens(args.tier)
    rows = []
    ok_all = True
    for r in results:
        ok_all &= r.ok
        rows.append({"name": r.name, "expected": _jsonable(r.expected), "actual": _jsonable(r.actual), "pass": r.ok})
        print(f"{'PASS' if r.ok else 'FAIL'}  {r.name}", file=sys.stderr)
    _emit({"pass": ok_all, "results": rows}, f"golden suite: {'all pass' if ok_all else 'FAILURES'}")
    return 0 if ok_all else 1


_COMMANDS = {
    "lr": _cmd_lr,
    "hives": _cmd_hives,
    "tensor": _cmd_tensor,
    "jn": _cmd_jn,
    "stretch": _cmd_stretch,
    "geometry": _cmd_geometry,
    "rn-table": _cmd_rn_table,
    "checks": _cmd_checks,
    "sample": _cmd_sample,
    "compare-density": _cmd_compare_density,
    "golden": _cmd_golden,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except HivelabError as exc:
        json.dump({"error": type(exc).__name__, "detail": str(exc)}, sys.stdout)
        sys.stdout.write("\n")
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OverflowError) as exc:
        json.dump({"error": type(exc).__name__, "detail": str(exc)}, sys.stdout)
        sys.stdout.write("\n")
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

"""``harmonic-bayes`` command-line interface.

Exit codes: 0 success, 2 input contract violation, 3 file I/O or parse
failure, 4 numerical degeneracy (for example a non-positive evidence).
"""

from __future__ import annotations

import argparse
import csv
import math
import re
import sys

import numpy as np

from . import io as cfile
from .basis import BasisKind, BasisSpec, Domain, moments, project, quadrature_for, reconstruct, reconstruct_uniform
from .bench import DIRECT_LIMIT, run_bench
from .densities import parse_density
from .diagnostics import DecayClass, fit_decay, recommend_K, suitability, tail_energy
from .errors import CoefficientFileError, HarmonicBayesError, InputContractError
from .oracles import grid_posterior
from .sequential import init, step
from .spectral import UNDERSHOOT_TOLERANCE, Engine, Mode, bayes_update

__all__ = ["main", "build_parser"]

ORACLE_POINTS = 100_000

_DEFAULT_DOMAIN = {
    BasisKind.FOURIER: (-math.pi, math.pi),
    BasisKind.COSINE: (0.0, 1.0),
}

_NUM = re.compile(r"^\s*([+-]?)\s*(\d*\.?\d*(?:[eE][+-]?\d+)?)\s*\*?\s*(pi)?\s*$")


def _parse_number(text: str) -> float:
    # accepts plain floats and multiples of pi: "pi", "-pi", "2pi", "0.5*pi"
    m = _NUM.match(text.lower())
    if not m or (not m.group(2) and not m.group(3)):
        raise InputContractError(f"cannot parse number {text!r}")
    sign = -1.0 if m.group(1) == "-" else 1.0
    value = float(m.group(2)) if m.group(2) else 1.0
    return sign * value * (math.pi if m.group(3) else 1.0)


def _parse_pair(text: str, what: str) -> tuple[float, float]:
    parts = text.split(",")
    if len(parts) != 2:
        raise InputContractError(f"{what} must be 'lo,hi', got {text!r}")
    return _parse_number(parts[0]), _parse_number(parts[1])


def _make_spec(basis: str, domain: str | None, K: int) -> BasisSpec:
    kind = BasisKind(basis)
    if kind is BasisKind.HERMITE:
        if domain not in (None, "real-line"):
            raise InputContractError("the hermite basis lives on the real line; omit --domain")
        return BasisSpec.hermite(K)
    if domain == "real-line":
        raise InputContractError(f"the {kind.value} basis needs a bounded domain")
    lo, hi = _parse_pair(domain, "--domain") if domain else _DEFAULT_DOMAIN[kind]
    d = Domain.periodic(lo, hi) if kind is BasisKind.FOURIER else Domain.interval(lo, hi)
    return BasisSpec(kind, d, K)


def _fmt(x: float) -> str:
    return format(x, ".10g")


def _decay_line(rep) -> str:
    if rep.decay_class is DecayClass.EXPONENTIAL:
        rate = f"gamma={_fmt(rep.gamma)}"
    elif rep.decay_class is DecayClass.ALGEBRAIC:
        rate = f"alpha={_fmt(rep.alpha)}"
    else:
        rate = "no rate"
    return f"decay: {rep.decay_class.value} ({rate}, window {rep.window[0]}..{rep.window[1]})"


# ---------------------------------------------------------------- project


def cmd_project(args, out) -> int:
    spec = _make_spec(args.basis, args.domain, args.K)
    density = parse_density(args.density, spec.domain, normalize=not args.raw)
    rule = None
    if args.M is not None:
        rule = quadrature_for(spec, args.M)
    coeffs = project(spec, density, rule, oversample=1.0 if rule is not None else 2.0)
    source = {"density": args.density, "normalized": not args.raw}
    if spec.domain.bounded:
        source["domain"] = [spec.domain.lo, spec.domain.hi]
    cfile.write(args.out, coeffs, source)
    rep = fit_decay(coeffs)
    total = float(np.sum(np.abs(coeffs.entries) ** 2))
    print(f"wrote {args.out}: {spec.kind.value} K={spec.K} N={spec.N} ({density.label})", file=out)
    print(f"energy: {_fmt(total)}; tail energy beyond K/2: {_fmt(tail_energy(coeffs, spec.K // 2))}", file=out)
    print(_decay_line(rep), file=out)
    if rep.decay_class is DecayClass.ALGEBRAIC and rep.alpha <= 1:
        print(f"warning: algebraic coefficient decay (alpha={_fmt(rep.alpha)}); "
              "expect Gibbs oscillation near the discontinuities", file=out)
    elif rep.decay_class is DecayClass.ALGEBRAIC:
        print(f"warning: algebraic coefficient decay (alpha={_fmt(rep.alpha)}); "
              "the truncation error shrinks only slowly with K", file=out)
    elif rep.decay_class is DecayClass.FLAT:
        print("warning: coefficient decay fits neither model clearly; check the tail energy "
              "before trusting this K", file=out)
    if args.epsilon is not None:
        k = recommend_K(density, spec, args.epsilon, spec.K)
        print(f"recommended K for epsilon={args.epsilon:g}: {k if k is not None else 'not reached'}", file=out)
    return 0


# ---------------------------------------------------------------- update


def _oracle_check(prior_file, like_file, spec, out) -> float | None:
    # grid-oracle evidence from the density descriptions stored in the files
    ps, ls = prior_file.source, like_file.source
    if not spec.domain.bounded or "density" not in ps or "density" not in ls:
        print("oracle: skipped (files carry no density description)", file=out)
        return None
    prior_fn = parse_density(ps["density"], spec.domain, normalize=ps.get("normalized", True))
    like_fn = parse_density(ls["density"], spec.domain, normalize=ls.get("normalized", True))
    g = grid_posterior(prior_fn, like_fn, spec.domain.lo, spec.domain.hi, ORACLE_POINTS)
    print(f"oracle_Z = {_fmt(g.evidence)}  (trapezoid, M={ORACLE_POINTS})", file=out)
    return g.evidence


def cmd_update(args, out) -> int:
    prior = cfile.read(args.prior)
    like = cfile.read(args.likelihood)
    res = bayes_update(prior.coeffs, like.coeffs, args.mode, args.engine, check_aliasing=args.check)
    cfile.write(args.out, res.posterior, {"update": {"mode": res.mode.value, "engine": res.engine.value}})
    print(f"evidence_Z = {_fmt(res.evidence_Z)}", file=out)
    if res.undershoot:
        print(f"min_density = {_fmt(res.min_density)}", file=out)
    else:
        floor = UNDERSHOOT_TOLERANCE * abs(res.max_density)
        print(f"min_density >= {-floor:.1e}  (no undershoot beyond round-off)", file=out)
    print(f"mass = {_fmt(res.mass)}", file=out)
    if args.check:
        print(f"aliasing_estimate = {res.aliasing_estimate:.3e}", file=out)
        Zg = _oracle_check(prior, like, res.posterior.spec, out)
        if Zg is not None:
            print(f"relative_Z_error = {abs(res.evidence_Z - Zg) / Zg:.3e}", file=out)
    if res.undershoot:
        print("warning: reconstructed posterior dips below zero (Gibbs undershoot)", file=out)
    return 0


# ---------------------------------------------------------------- sequential


def cmd_sequential(args, out) -> int:
    prior = cfile.read(args.prior)
    likes = [cfile.read(p).coeffs for p in args.likelihoods]
    state = init(prior.coeffs)
    rows = []
    for like in likes:
        state = step(state, like, args.mode, args.engine)
        mom = moments(state.current)
        rows.append((state.step_count, state.last.evidence_Z, state.log_evidence_sum, mom.mean, mom.variance))
    if args.out:
        cfile.write(args.out, state.current, {"sequential": {"steps": state.step_count}})
    fh = open(args.csv, "w", newline="", encoding="utf-8") if args.csv else out
    try:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["step", "Z", "log_evidence_sum", "mean", "variance"])
        for r in rows:
            w.writerow([r[0]] + [format(v, ".17g") for v in r[1:]])
    finally:
        if fh is not out:
            fh.close()
    return 0


# ---------------------------------------------------------------- diagnose


def cmd_diagnose(args, out) -> int:
    f = cfile.read(args.file)
    rep = fit_decay(f.coeffs)
    other = fit_decay(cfile.read(args.partner).coeffs) if args.partner else rep
    verdict = suitability(rep, other)
    K = f.coeffs.spec.K
    print(_decay_line(rep), file=out)
    print(f"fit quality: exponential R2={rep.exp_quality:.4f}, algebraic R2={rep.alg_quality:.4f}", file=out)
    print(f"tail energy beyond K/2 ({K // 2}): {_fmt(tail_energy(f.coeffs, K // 2))}", file=out)
    print(f"verdict: {verdict.verdict.value}", file=out)
    for r in verdict.reasons:
        print(f"  - {r}", file=out)
    return 0


# ---------------------------------------------------------------- bench


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise InputContractError(f"expected comma-separated integers, got {text!r}") from None


def cmd_bench(args, out) -> int:
    Ns = [n for chunk in args.N for n in _int_list(chunk)]
    report = run_bench(Ns, args.repeats, force=args.force)
    for n, engine, why in report.skipped:
        print(f"skipped N={n} {engine.value}: {why}", file=sys.stderr)
    fh = open(args.out, "w", newline="", encoding="utf-8") if args.out else out
    try:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["N", "engine", "wall_time", "repeats"])
        for r in report.records:
            w.writerow([r.N, r.engine.value, format(r.wall_time, ".6e"), r.repeats])
        if report.exponents:
            parts = [f"{e.value}={v:.3f}" for e, v in report.exponents.items()]
            fh.write("# exponent " + " ".join(parts) + "\n")
    finally:
        if fh is not out:
            fh.close()
    return 0


# ---------------------------------------------------------------- reconstruct


def cmd_reconstruct(args, out) -> int:
    coeffs = cfile.read(args.file).coeffs
    dom = coeffs.spec.domain
    if args.grid:
        parts = args.grid.split(",")
        if len(parts) != 3:
            raise InputContractError("--grid must be 'lo,hi,P'")
        lo, hi = _parse_number(parts[0]), _parse_number(parts[1])
        P = int(parts[2])
        if P < 2:
            raise InputContractError("--grid needs at least two points")
        thetas = np.linspace(lo, hi, P)
        vals = reconstruct(coeffs, thetas)
    elif dom.bounded:
        thetas, vals = reconstruct_uniform(coeffs, max(args.points, coeffs.spec.N))
    else:
        raise InputContractError("the real line needs an explicit --grid lo,hi,P")
    fh = open(args.out, "w", newline="", encoding="utf-8") if args.out else out
    try:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["theta", "density"])
        for t, v in zip(thetas, vals):
            w.writerow([format(t, ".17g"), format(v, ".17g")])
    finally:
        if fh is not out:
            fh.close()
    neg = int(np.sum(vals < -UNDERSHOOT_TOLERANCE * float(np.max(np.abs(vals)))))
    dest = out if args.out else sys.stderr
    print(f"negative density points: {neg} of {len(vals)} beyond round-off "
          f"(min {_fmt(float(vals.min()))})", file=dest)
    return 0


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="harmonic-bayes", description="Spectral Bayesian updates.")
    sub = p.add_subparsers(dest="command", required=True)

    def mode_engine(sp):
        sp.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.PADDED.value)
        sp.add_argument("--engine", choices=[e.value for e in Engine], default=Engine.FFT.value)

    sp = sub.add_parser("project", help="project a named density onto a basis")
    sp.add_argument("density", help="uniform | gaussian:MU,SIGMA | mixture:W,MU,S;... | indicator:A,B | grid:PATH")
    sp.add_argument("--basis", choices=[k.value for k in BasisKind], default="fourier")
    sp.add_argument("--domain", help="lo,hi; multiples of pi allowed. Attach negative values with =, e.g. --domain=-pi,pi")
    sp.add_argument("--K", type=int, required=True)
    sp.add_argument("--M", type=int, help="quadrature nodes (default 2N)")
    sp.add_argument("--raw", action="store_true",
                    help="do not renormalise gaussians/mixtures on the domain (likelihood form)")
    sp.add_argument("--epsilon", type=float, help="also recommend K for this relative L2 tolerance")
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_project)

    sp = sub.add_parser("update", help="posterior from prior and likelihood coefficient files")
    sp.add_argument("prior")
    sp.add_argument("likelihood")
    mode_engine(sp)
    sp.add_argument("--check", action="store_true",
                    help="also run the other mode (aliasing estimate) and the grid oracle")
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_update)

    sp = sub.add_parser("sequential", help="chain of updates; per-step CSV")
    sp.add_argument("prior")
    sp.add_argument("likelihoods", nargs="*")
    mode_engine(sp)
    sp.add_argument("--out", help="final posterior coefficient file")
    sp.add_argument("--csv", help="trajectory CSV path (default stdout)")
    sp.set_defaults(func=cmd_sequential)

    sp = sub.add_parser("diagnose", help="decay class and suitability verdict")
    sp.add_argument("file")
    sp.add_argument("partner", nargs="?", help="second file for a prior/likelihood verdict")
    sp.set_defaults(func=cmd_diagnose)

    sp = sub.add_parser("bench", help="time direct vs FFT convolution")
    sp.add_argument("--N", action="append", required=True, help="odd sizes, comma-separated; repeatable")
    sp.add_argument("--repeats", type=int, default=9)
    sp.add_argument("--force", action="store_true", help=f"allow the direct engine above N={DIRECT_LIMIT}")
    sp.add_argument("--out", help="CSV path (default stdout)")
    sp.set_defaults(func=cmd_bench)

    sp = sub.add_parser("reconstruct", help="evaluate a coefficient file on a grid")
    sp.add_argument("file")
    sp.add_argument("--grid", help="lo,hi,P: P equispaced points including both ends (e.g. --grid=-2,2,101)")
    sp.add_argument("--points", type=int, default=512, help="uniform points over a bounded domain")
    sp.add_argument("--out", help="CSV path (default stdout)")
    sp.set_defaults(func=cmd_reconstruct)
    return p


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except HarmonicBayesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return CoefficientFileError.exit_code


if __name__ == "__main__":
    sys.exit(main())

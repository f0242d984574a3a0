"""Command line interface: batch verification and single-shot demos.

    bracketwidth verify all --seed 1 --out report.json
    bracketwidth verify danielewski --p "z^3-z" --seed 7
    bracketwidth demo decompose --context dan --p "z^2-1" --element "x*z + y"

Exit codes: 0 all checks pass, 1 some check failed (or a demo element is
rejected), 2 usage or ring-parameter validation error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import poisson, vfields
from .errors import AlgebraError, ValidationError
from .exactpoly import Polynomial, format_poly, parse_poly
from .poisson import TORUS_SPACE
from .rings import (
    SPACE_X,
    SPACE_XYZ,
    CurveRing,
    DanRing,
    RatCurveRing,
    dan_normalize,
    format_dan,
    parse_ratcurve,
    ratcurve_from_poly,
)
from .suites import SUITES, Report, SuiteConfig, parse_space_sig, verify


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bracketwidth",
        description="exact certificates for bracket decompositions and obstructions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("suite", choices=["all", *SUITES])
    p_verify.add_argument("--p", dest="p_poly", help="defining polynomial p(z)")
    p_verify.add_argument("--h", dest="h_poly", help="curve polynomial h(x)")
    p_verify.add_argument("--poles", help="comma separated pole list, e.g. 0,1,-1")
    p_verify.add_argument("--space", help="product space signature, e.g. a:2,t:1")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--samples", type=int, default=100)
    p_verify.add_argument("--degree-bound", type=int, default=4)
    p_verify.add_argument("--out", help="write the JSON report to this path")
    p_verify.add_argument("--json", action="store_true",
                          help="print the JSON report to stdout")

    p_demo = sub.add_parser("demo", help="single-shot decomposition demos")
    demo_sub = p_demo.add_subparsers(dest="demo_command", required=True)
    p_dec = demo_sub.add_parser("decompose", help="decompose one element")
    p_dec.add_argument("--context", required=True,
                       choices=["dan", "torus", "ratcurve"])
    p_dec.add_argument("--element", required=True)
    p_dec.add_argument("--p", dest="p_poly", help="defining polynomial p(z)")
    p_dec.add_argument("--poles", help="comma separated pole list")
    return parser


def _config_from_args(args) -> SuiteConfig:
    kwargs = {
        "seed": args.seed,
        "samples": args.samples,
        "degree_bound": args.degree_bound,
    }
    if args.p_poly:
        DanRing.from_text(args.p_poly)  # validate early, exit 2 on bad input
        kwargs["p_texts"] = (args.p_poly,)
    if args.h_poly:
        CurveRing.from_text(args.h_poly)
        kwargs["h_texts"] = (args.h_poly,)
    if args.poles:
        RatCurveRing.from_text(args.poles)
        kwargs["pole_sets"] = (args.poles,)
    if args.space:
        parse_space_sig(args.space)
        kwargs["space_sigs"] = (args.space,)
    return SuiteConfig(**kwargs)


def _print_report(report: Report) -> None:
    for suite in report.suites:
        print(f"suite {suite.name}  params={json.dumps(suite.params, sort_keys=True)}")
        for check in suite.checks:
            mark = "PASS" if check.status == "pass" else "FAIL"
            line = f"  [{mark}] {check.id}: {check.description}"
            if check.status != "pass":
                line += f"  ({check.details})"
            print(line)
            if check.counterexample:
                print(f"         counterexample: {json.dumps(check.counterexample, sort_keys=True)}")
    total = sum(len(s.checks) for s in report.suites)
    failed = sum(1 for s in report.suites for c in s.checks if c.status != "pass")
    print(f"{total - failed}/{total} checks passed")


def cmd_verify(args) -> int:
    cfg = _config_from_args(args)
    report = verify(args.suite, cfg)
    payload = json.dumps(report.to_json(), indent=2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload)
    if args.json:
        sys.stdout.write(payload)
    else:
        _print_report(report)
    return 0 if report.passed else 1


def cmd_demo_decompose(args) -> int:
    if args.context == "torus":
        f = parse_poly(args.element, TORUS_SPACE)
        k, l, g = poisson.width1_torus(f)
        replay = poisson.pb_torus(poisson.torus_monomial(k, l), g) == f
        print(f"element: {format_poly(f)}")
        print(f"partner exponents: (k, l) = ({k}, {l})")
        print(f"g = {format_poly(g)}")
        print(f"replay {{x^{k}*y^{l}, g}} = input: {'OK' if replay else 'MISMATCH'}")
        return 0 if replay else 1

    if args.context == "ratcurve":
        if not args.poles:
            raise ValidationError("missing_poles", "--poles is required for ratcurve")
        ring = RatCurveRing.from_text(args.poles)
        mu = vfields.RatCurveField(ring, parse_ratcurve(ring, args.element))
        nu, delta = vfields.solve_width2_ratcurve(mu)
        ddx = vfields.RatCurveField(ring, ratcurve_from_poly(
            ring, Polynomial.constant(SPACE_X, 1)))
        xdx = vfields.RatCurveField(ring, ratcurve_from_poly(
            ring, Polynomial.var(SPACE_X, "x")))
        recomposed = (vfields.ratcurve_field_bracket(ddx, nu).coeff
                      + vfields.ratcurve_field_bracket(xdx, delta).coeff)
        replay = recomposed == mu.coeff
        print(f"field: {mu}")
        print(f"nu    = {nu}")
        print(f"delta = {delta}")
        print(f"replay [d/dx, nu] + [x*d/dx, delta] = input: "
              f"{'OK' if replay else 'MISMATCH'}")
        return 0 if replay else 1

    # context dan
    if not args.p_poly:
        raise ValidationError("missing_p", "--p is required for the dan context")
    ring = DanRing.from_text(args.p_poly)
    e = dan_normalize(ring, parse_poly(args.element, SPACE_XYZ))
    print(f"element: {format_dan(e)}")
    witness = poisson.e_omega_member(e)
    if witness is None:
        _, rank, aug = poisson.solve_rp_prime(ring, e.c)
        print(f"not in the divergence image: (r*p)' = c is infeasible "
              f"(rank {rank} vs augmented {aug})")
        return 1
    div_ok = poisson.div_dan(witness.preimage) == e
    print(f"divergence-image witness: r = {format_poly(witness.r)}")
    print(f"  preimage: {witness.preimage}")
    print(f"  replay div(preimage) = input: {'OK' if div_ok else 'MISMATCH'}")
    exit_code = 0 if div_ok else 1
    if ring.degree == 2:
        g, r = poisson.width2_dan_deg2(e)
        replay = poisson.replay_width2(e, g, r)
        partner = poisson.width2_partner(ring)
        print(f"two-bracket split: g = {format_dan(g)}")
        print(f"  r = {format_poly(r)}  partner = {format_dan(partner)}")
        print(f"  replay {{g, z+a}} + {{x, y*r}} = input: "
              f"{'OK' if replay else 'MISMATCH'}")
        if not replay:
            exit_code = 1
    return exit_code


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "demo" and args.demo_command == "decompose":
            return cmd_demo_decompose(args)
        parser.error("unknown command")
    except ValidationError as exc:
        print(f"validation error [{exc.code}]: {exc}", file=sys.stderr)
        return 2
    except AlgebraError as exc:
        print(f"error [{type(exc).__name__}]: {exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())

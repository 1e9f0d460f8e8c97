"""Command-line workbench: property suites, porism runs, scene tools.

Exit codes: 0 all checks passed, 1 a property check failed, 2 input or
validation error (bad scene, unknown suite, bad arguments).
"""
from __future__ import annotations

import argparse
import random
import sys
from fractions import Fraction

import numpy as np

from .algebra import pn_polynomial
from .closure import (
    dual_chain,
    generate_closing,
    porism_holds,
    primal_chain,
    two_line_closure,
)
from .errors import (
    DegenerateStart,
    FieldInsufficient,
    GenerationExhausted,
    InvalidConfiguration,
    MixedBackend,
    ParseError,
    UnknownSuite,
)
from .plane import ConicParam, ProjPoint, point_on_line
from .scene import SceneDocument, load_scene, save_scene
from .suites import run_suite
from .svg import render_scene

_CHAIN_TRIES = 60


def _sample_exact_start(rng: random.Random) -> ConicParam:
    return ConicParam(Fraction(rng.randint(-60, 60), rng.randint(1, 20)))


def cmd_verify(args) -> int:
    report = run_suite(args.suite, args.trials, args.seed)
    print(
        f"suite {report.suite}: trials={report.trials} "
        f"failures={len(report.failures)} resamples={report.resamples} "
        f"elapsed={report.elapsed:.2f}s"
    )
    for failure in report.failures:
        print(f"  trial {failure.index} seed {failure.seed}: {failure.instance}")
    return 0 if report.passed else 1


def _closed_dual_chains(config, starts: int, rng: random.Random) -> tuple[int, int]:
    closed = 0
    sampled = 0
    while sampled < starts:
        for _ in range(_CHAIN_TRIES):
            try:
                chain = dual_chain(config, _sample_exact_start(rng))
                break
            except DegenerateStart:
                continue
        else:
            raise GenerationExhausted("could not sample an admissible start")
        sampled += 1
        if chain.closed:
            closed += 1
    return closed, sampled


def _closed_primal_chains(config, starts: int, rng: random.Random) -> tuple[int, int]:
    float_lines = config.as_float().lines
    closed = 0
    sampled = 0
    while sampled < starts:
        for _ in range(_CHAIN_TRIES):
            try:
                start = point_on_line(
                    float_lines[0], ConicParam(rng.uniform(-8.0, 8.0))
                )
                chain = primal_chain(config, start)
                break
            except (DegenerateStart, FieldInsufficient):
                continue
        else:
            raise GenerationExhausted("could not sample an admissible start")
        sampled += 1
        if chain.closed:
            closed += 1
    return closed, sampled


def cmd_porism(args) -> int:
    scene = load_scene(args.scene)
    config = scene.configuration()
    holds = porism_holds(config)
    rng = random.Random(args.seed)
    if args.backend == "exact":
        closed, sampled = _closed_dual_chains(config, args.starts, rng)
    else:
        closed, sampled = _closed_primal_chains(config, args.starts, rng)
    expected = sampled if holds else 0
    agree = closed == expected
    print(f"porism_holds={'true' if holds else 'false'}")
    print(f"chains closed: {closed}/{sampled} ({args.backend} backend)")
    print(f"agreement: {'ok' if agree else 'MISMATCH'}")
    return 0 if agree else 1


def cmd_construct(args) -> int:
    config = generate_closing(args.n, args.seed)
    rng = random.Random(args.seed)
    chains = []
    for _ in range(_CHAIN_TRIES):
        try:
            chains.append(dual_chain(config, _sample_exact_start(rng)).params)
            break
        except DegenerateStart:
            continue
    scene = SceneDocument.from_configuration(config, chains=chains)
    save_scene(scene, args.out)
    print(f"wrote {args.n}-line closing scene to {args.out}")
    return 0


def _exact_roots(poly) -> list[Fraction]:
    coeffs = list(poly.coeffs)
    roots = []
    if coeffs and coeffs[0] == 0:
        roots.append(Fraction(0))
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
    if not coeffs:
        return roots
    constant = abs(coeffs[0].numerator)
    candidates = {d for d in range(1, constant + 1) if constant % d == 0}
    for magnitude in sorted(candidates):
        for sign in (1, -1):
            x = Fraction(sign * magnitude)
            if poly(x) == 0:
                roots.append(x)
    return sorted(roots)


def cmd_twolines(args) -> int:
    if args.mode == "check":
        if args.x is None:
            print("error: check mode needs --x", file=sys.stderr)
            return 2
        verdict = two_line_closure(Fraction(args.x), args.n)
        print(f"closes at n={args.n}: {'true' if verdict else 'false'}")
        return 0
    if args.n < 2:
        print("error: roots mode needs --n >= 2", file=sys.stderr)
        return 2
    poly = pn_polynomial(args.n - 1)
    exact = _exact_roots(poly)
    # highest-first float coefficients for the numeric localizer
    float_coeffs = [float(c) for c in reversed(poly.coeffs)]
    numeric = sorted(float(r.real) for r in np.roots(float_coeffs))
    print(f"closure parameter values for n={args.n}:")
    for r in numeric:
        match = next((e for e in exact if abs(float(e) - r) < 1e-9), None)
        if match is not None:
            num, den = match.numerator, match.denominator
            shown = f"{num}" if den == 1 else f"{num}/{den}"
            print(f"  x = {shown} (exact)")
        else:
            print(f"  x ~ {r:.6f} (irrational)")
    return 0


def cmd_plot(args) -> int:
    scene = load_scene(args.scene)
    svg = render_scene(scene, samples=args.samples)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(svg)
    print(f"wrote figure to {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="porism",
        description="exact projective workbench for conic closure theorems",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run a seeded property suite")
    p.add_argument("suite", help="two|pascal|aligned|moebius|dual-moebius|dalignes")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("porism", help="test closure of a scene's configuration")
    p.add_argument("scene", help="scene file path")
    p.add_argument("--starts", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--backend", choices=("exact", "float"), default="exact")
    p.set_defaults(func=cmd_porism)

    p = sub.add_parser("construct", help="generate a closing configuration scene")
    p.add_argument("n", type=int, help="number of lines, >= 2")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("twolines", help="closure analysis of the two-line system")
    p.add_argument("--mode", choices=("roots", "check"), default="roots")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x", help="rational closure parameter, check mode only")
    p.set_defaults(func=cmd_twolines)

    p = sub.add_parser("plot", help="render a scene to SVG")
    p.add_argument("scene", help="scene file path")
    p.add_argument("--out", required=True)
    p.add_argument("--samples", type=int, default=256)
    p.set_defaults(func=cmd_plot)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (
        ParseError,
        UnknownSuite,
        InvalidConfiguration,
        MixedBackend,
        FileNotFoundError,
        IsADirectoryError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GenerationExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

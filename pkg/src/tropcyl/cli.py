"""Command line interface: wall generation, counting, verification, rendering.

Exit codes: 0 success, 2 parse or configuration error, 3 cylinder not
primitive, 4 class outside the primitive counting scope, 5 identity
violation during verification, 6 unknown render target.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from dataclasses import replace

from . import classes as cls
from . import config as cfg
from .counting import (
    build_cylinder,
    contributing_classes,
    count_primitive_cylinder,
    default_table,
    splitting_sum,
)
from .deformation import replay_induction
from .errors import (
    ConfigError,
    IdentityViolation,
    NotPrimitiveCylinder,
    OutOfPrimitiveScope,
    TropcylError,
)
from .lattice import norm
from .svg import render_tree, render_walls
from .tropical import cylinder_tree
from .walls import RULES, generate_walls, is_wall_direction

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_NOT_PRIMITIVE = 3
EXIT_OUT_OF_SCOPE = 4
EXIT_IDENTITY = 5
EXIT_RENDER_TARGET = 6

DEFAULT_CONFIG = {
    "model": {
        "fan": {"rays": [[1, 0], [0, 1], [-1, -1]]},
        "blowups": [2, 2, 2],
    }
}


def _color_enabled() -> bool:
    return os.environ.get("TROPCYL_COLOR", "0") == "1"


def _status(ok: bool) -> str:
    word = "PASS" if ok else "FAIL"
    if _color_enabled():
        code = "32" if ok else "31"
        return f"\x1b[{code}m{word}\x1b[0m"
    return word


def _load_config(args) -> cfg.Config:
    data = cfg.load_json(args.config) if args.config else DEFAULT_CONFIG
    config = cfg.parse_config(data)
    walls = config.walls
    if getattr(args, "steps", None) is not None:
        walls = cfg.WallParams(args.steps, walls.norm_bound, walls.rule)
    if getattr(args, "norm_bound", None) is not None:
        walls = cfg.WallParams(walls.steps, args.norm_bound, walls.rule)
    if getattr(args, "rule", None) is not None:
        walls = cfg.WallParams(walls.steps, walls.norm_bound, args.rule)
    return cfg.Config(config.model, walls, config.anchors, config.render)


def _write_svg(path: str, text: str) -> None:
    with open(path, "w") as fh:
        fh.write(text)


def cmd_walls(args) -> int:
    config = _load_config(args)
    model = config.model
    if args.is_wall is not None:
        try:
            x, y = (int(p) for p in args.is_wall.split(","))
        except ValueError:
            raise ConfigError("--is-wall", "expected X,Y with integer entries")
        print("true" if is_wall_direction(model, (x, y)) else "false")
        return EXIT_OK
    walls = generate_walls(model, config.walls.steps, config.walls.norm_bound, config.walls.rule)
    if args.json:
        out = {
            "rule": walls.rule,
            "steps": walls.steps,
            "norm_bound": walls.norm_bound,
            "walls": [
                {"direction": list(d), "step": s, "norm": norm(model.fan, d)}
                for d, s in walls.directions
            ],
        }
        print(json.dumps(out, indent=2, sort_keys=True))
    else:
        for d, s in walls.directions:
            print(f"{d[0]},{d[1]} step {s} norm {norm(model.fan, d)}")
    if args.svg:
        _write_svg(args.svg, render_walls(walls, config.render))
    return EXIT_OK


def _load_spec(args, model):
    if not args.spec:
        raise ConfigError("spec", "a cylinder spec file is required")
    return cfg.parse_cylinder_spec(cfg.load_json(args.spec), model)


def _load_table(args, model):
    if args.table:
        return cfg.parse_table(cfg.load_json(args.table), model)
    return default_table(model)


def cmd_count(args) -> int:
    config = _load_config(args)
    model = config.model
    cyl, beta = _load_spec(args, model)
    table = _load_table(args, model)
    entries = contributing_classes(model, cyl, table)
    if args.json:
        out = {
            "twig_type": [list(w) for w in cyl.twig_type],
            "contributing": [
                {
                    "choice": list(choice),
                    "class": cfg.profile_to_dict(model, b),
                    "count": n,
                }
                for choice, b, n in entries
            ],
        }
        if beta is not None:
            out["query"] = {
                "class": cfg.profile_to_dict(model, beta),
                "count": count_primitive_cylinder(model, cyl, beta, table),
                "splitting_sum": splitting_sum(model, cyl, beta, table),
            }
        print(json.dumps(out, indent=2, sort_keys=True))
        return EXIT_OK
    for choice, b, n in entries:
        prof = cls.intersect(model, b)
        dE = " ".join(f"E{i}{j}:{c}" for (i, j), c in sorted(prof.dE))
        print(f"choice {','.join(map(str, choice))}  dD {list(prof.dD)}  {dE}  count {n}")
    if beta is not None:
        n = count_primitive_cylinder(model, cyl, beta, table)
        s = splitting_sum(model, cyl, beta, table)
        print(f"query count {n}  splitting_sum {s}")
    return EXIT_OK


def _random_twig(model, rng) -> tuple:
    dirs = list(model.exceptional_directions)
    t = rng.randint(1, min(3, len(dirs)))
    return tuple(rng.sample(dirs, t))


def _verify_one(model, cyl, table) -> int:
    entries = contributing_classes(model, cyl, table)
    for _, beta, n in entries:
        c = count_primitive_cylinder(model, cyl, beta, table)
        s = splitting_sum(model, cyl, beta, table)
        if not (c == s == n):
            raise IdentityViolation(
                f"closed form {c}, splitting sum {s}, product {n} for class {beta}"
            )
    steps = 0
    if entries:
        rep = replay_induction(model, cyl, entries[0][1], table)
        steps = sum(1 for ch in rep.checks if ch.name.startswith("splitting-"))
        if not rep.ok:
            bad = next(ch for ch in rep.checks if not ch.ok)
            raise IdentityViolation(f"{bad.name}: {bad.detail}")
    return steps


def cmd_verify(args) -> int:
    config = _load_config(args)
    model = config.model
    table = _load_table(args, model)
    if args.spec:
        cyl, _ = cfg.parse_cylinder_spec(cfg.load_json(args.spec), model)
        if not cyl.extended:
            cyl = replace(cyl, extended=True)
        steps = _verify_one(model, cyl, table)
        print(f"{_status(True)}, {steps} induction steps")
        return EXIT_OK
    if not model.exceptional_directions:
        print(f"{_status(True)}, 0 cases, 0 induction steps")
        return EXIT_OK
    rng = random.Random(args.seed if args.seed is not None else 0)
    cases = args.cases
    done = 0
    steps_total = 0
    while done < cases:
        twig = _random_twig(model, rng)
        try:
            cyl = build_cylinder(model, twig, extended=True)
            steps_total += _verify_one(model, cyl, table)
        except IdentityViolation:
            raise
        except TropcylError:
            continue
        done += 1
    print(f"{_status(True)}, {done} cases, {steps_total} induction steps")
    return EXIT_OK


def cmd_render(args) -> int:
    config = _load_config(args)
    model = config.model
    target = args.target
    if target == "walls":
        walls = generate_walls(
            model, config.walls.steps, config.walls.norm_bound, config.walls.rule
        )
        text = render_walls(walls, config.render)
    elif target == "cylinder":
        cyl, _ = _load_spec(args, model)
        text = render_tree(model, cylinder_tree(model, cyl), config.render)
    else:
        print(f"unknown render target: {target}", file=sys.stderr)
        return EXIT_RENDER_TARGET
    if args.svg:
        _write_svg(args.svg, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tropcyl")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", help="config JSON path")
        p.add_argument("--svg", help="write an SVG diagram to this path")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--seed", type=int, help="seed for randomized verification")
        p.add_argument("--table", help="elementary table JSON path")
        p.add_argument("--steps", type=int, help="wall generation steps")
        p.add_argument("--norm-bound", type=int, dest="norm_bound", help="prune walls above this fan norm")
        p.add_argument("--rule", choices=RULES, help="wall generation rule")

    p_walls = sub.add_parser("walls", help="generate and list the wall structure")
    common(p_walls)
    p_walls.add_argument("--is-wall", help="query a direction X,Y instead of listing")
    p_walls.set_defaults(func=cmd_walls)

    p_count = sub.add_parser("count", help="contributing classes and counts for a cylinder")
    common(p_count)
    p_count.add_argument("spec", nargs="?", help="cylinder spec JSON path")
    p_count.set_defaults(func=cmd_count)

    p_verify = sub.add_parser("verify", help="check counting identities and the induction replay")
    common(p_verify)
    p_verify.add_argument("spec", nargs="?", help="cylinder spec JSON path")
    p_verify.add_argument("--cases", type=int, default=20, help="randomized case count")
    p_verify.set_defaults(func=cmd_verify)

    p_render = sub.add_parser("render", help="write an SVG diagram")
    common(p_render)
    p_render.add_argument("target", help='"walls" or "cylinder"')
    p_render.add_argument("spec", nargs="?", help="cylinder spec JSON path")
    p_render.set_defaults(func=cmd_render)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NotPrimitiveCylinder as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_PRIMITIVE
    except OutOfPrimitiveScope as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_OUT_OF_SCOPE
    except IdentityViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IDENTITY
    except TropcylError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end (``lamplighter --help``)."""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from . import cayley, lamp2
from .an_ring import INF, mul_shift, pole_sequence, random_element, seq_a, x_sequence
from .errors import ConfigurationError, LamplighterError
from .graphio import FORMATS, export
from .group_gamma import GammaGroup, GroupElement
from .ring import parse_ring
from .trees import HnVertex, phi, phi_inv
from .words import format_word


def _group(args) -> GammaGroup:
    if args.n < 1:
        raise ConfigurationError("--n must be at least 1")
    return GammaGroup(args.n, parse_ring(args.ring))


def _read_payload(text: str) -> str:
    """A literal JSON string, '-' for stdin, or a path to a file."""
    if text == "-":
        return sys.stdin.read()
    if not text.lstrip().startswith("{") and Path(text).is_file():
        return Path(text).read_text()
    return text


def _emit(args, text: str):
    if getattr(args, "out", None):
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_eval(args) -> int:
    G = _group(args)
    g = G.eval_word(args.word)
    _emit(args, g.dumps())
    if args.board:
        cfg = lamp2.lamplighter_state(G, g)
        print(lamp2.render_board(cfg))
        print(lamp2.render_grid(cfg))
    return 0


def cmd_nf(args) -> int:
    G = _group(args)
    _emit(args, format_word(G.normal_form(G.eval_word(args.word))))
    return 0


def cmd_phi(args) -> int:
    g = GroupElement.from_json(_read_payload(args.element))
    G = GammaGroup(g.ctx.n, g.ctx.ring)
    _emit(args, phi(G, g).dumps())
    return 0


def cmd_phi_inv(args) -> int:
    G = _group(args)
    v = HnVertex.from_json(_read_payload(args.vertex), G.ring)
    _emit(args, phi_inv(G, v).dumps())
    return 0


def _ball(args):
    G = _group(args)
    build = cayley.cayley_ball if args.kind == "cayley" else cayley.hn_ball
    return build(G, args.radius, args.coeff_bound, args.workers)


def cmd_ball(args) -> int:
    graph = _ball(args)
    degrees = graph.degrees()
    summary = {
        "kind": graph.kind,
        "vertices": len(graph.vertices),
        "edges": len(graph.edges),
        "root_degree": degrees[graph.root],
        "layers": [sum(1 for v in graph.vertices if graph.layers[v] == d) for d in range(args.radius + 1)],
    }
    print(json.dumps(summary, sort_keys=True))
    if args.out:
        Path(args.out).write_text(export(graph, args.format))
    return 0


def cmd_export(args) -> int:
    _emit(args, export(_ball(args), args.format))
    return 0


def _propagation_report(G: GammaGroup, samples: int, seed: int) -> cayley.Report:
    """Iterative propagation vs polynomial sequences vs closed binomial forms."""
    if G.n != 2:
        raise ConfigurationError("the propagation check is for rank 2")
    rep = cayley.Report("propagation", {"n": 2, "ring": str(G.ring), "samples": samples, "seed": seed})
    rng = random.Random(seed)
    R = G.ring
    for _ in range(samples):
        f_hat = random_element(G.ctx, rng, terms=8)
        h = (rng.randint(-6, 6), rng.randint(-6, 6))
        f = mul_shift(f_hat, h)
        board = lamp2.config_from_poly(f)
        planes = [lamp2.HalfPlane(INF, h[0] + h[1]), lamp2.HalfPlane(0, h[0] - 1), lamp2.HalfPlane(1, h[1] - 1)]
        bs = [x_sequence(f_hat), pole_sequence(f_hat, 0), pole_sequence(f_hat, 1)]
        for star, plane, b, m in zip((INF, 0, 1), planes, bs, (h[1], h[1], h[0])):
            swept = lamp2.propagate(board, plane, 0, R)
            poly = seq_a(f, h, star)
            closed = lamp2.pascal_convert(b, m, star, R)
            if not swept == poly == closed:
                rep.fail(f"f_hat={f_hat} h={h} star={star}: swept {swept}, poly {poly}, closed {closed}")
    return rep


def cmd_verify(args) -> int:
    G = _group(args)
    if args.check == "iso":
        rep = cayley.verify_iso(G, args.radius, args.coeff_bound, args.workers)
    elif args.check == "relators":
        if args.pres is None:
            raise ConfigurationError("verify relators needs --pres")
        rep = cayley.verify_relators(G, args.pres, args.bound)
    elif args.check == "two-cells":
        rep = cayley.two_cell_report(G, args.radius, args.coeff_bound, args.workers)
    else:
        rep = _propagation_report(G, args.samples, args.seed)
    print(rep.dumps() if args.json else rep.to_text())
    if args.out:
        Path(args.out).write_text(rep.dumps() + "\n")
    return 0 if rep.passed else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ring", default="Z/2", help="Z or Z/<m> (default Z/2)")
    common.add_argument("--n", type=int, default=2, help="rank (default 2)")
    common.add_argument("--radius", type=int, default=2)
    common.add_argument("--coeff-bound", type=int, default=2, help="|r| bound for generators over Z")
    common.add_argument("--format", choices=FORMATS, default="json")
    common.add_argument("--out", help="write output here instead of stdout")
    common.add_argument("--workers", type=int, default=1, help="processes for ball expansion")

    p = argparse.ArgumentParser(prog="lamplighter", description="Lamplighter groups and horocyclic products of trees.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("eval", parents=[common], help="evaluate a word")
    s.add_argument("word", nargs="?", default="")
    s.add_argument("--board", action="store_true", help="also draw the rank-2 board")
    s.set_defaults(func=cmd_eval)

    s = sub.add_parser("nf", parents=[common], help="normal form of a word (rank 1 or 2)")
    s.add_argument("word", nargs="?", default="")
    s.set_defaults(func=cmd_nf)

    s = sub.add_parser("phi", parents=[common], help="element JSON -> vertex JSON")
    s.add_argument("element", help="JSON text, a file, or - for stdin")
    s.set_defaults(func=cmd_phi)

    s = sub.add_parser("phi-inv", parents=[common], help="vertex JSON -> element JSON")
    s.add_argument("vertex", help="JSON text, a file, or - for stdin")
    s.set_defaults(func=cmd_phi_inv)

    for name, func, text in (("ball", cmd_ball, "enumerate a ball and summarize it"),
                             ("export", cmd_export, "enumerate a ball and serialize it")):
        s = sub.add_parser(name, parents=[common], help=text)
        s.add_argument("--kind", choices=("cayley", "hn"), default="cayley")
        s.set_defaults(func=func)

    s = sub.add_parser("verify", parents=[common], help="run a verification suite")
    s.add_argument("check", choices=("iso", "relators", "two-cells", "propagation"))
    s.add_argument("--pres", help="presentation id, e.g. iii or gamma1-m")
    s.add_argument("--bound", type=int, default=4, help="relator parameter bound")
    s.add_argument("--samples", type=int, default=200)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--json", action="store_true", help="print the JSON report")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (LamplighterError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

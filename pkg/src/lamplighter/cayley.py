"""Balls in the Cayley graph of Gamma_n(R) and in H_n(R), and the checks run on them."""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Optional

from .errors import ConfigurationError
from .graphio import LabeledGraph, export, import_json
from .group_gamma import GammaGroup, GroupElement, resolve_presentation
from .ring import Ring
from .trees import HnVertex, hn_adjacent, labeled_neighbors, letter_case, phi, phi_inv
from .words import Token, format_word, parse_word

__all__ = [
    "Report",
    "cayley_ball",
    "hn_ball",
    "verify_iso",
    "verify_relators",
    "two_cell_report",
    "export",
    "import_json",
]

MAX_LISTED = 50


@dataclass
class Report:
    check: str
    config: dict
    passed: bool = True
    violations: list = field(default_factory=list)
    violation_count: int = 0
    stats: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    def fail(self, message: str):
        self.passed = False
        self.violation_count += 1
        if len(self.violations) < MAX_LISTED:
            self.violations.append(message)

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "config": self.config,
            "passed": self.passed,
            "violation_count": self.violation_count,
            "violations": self.violations,
            "stats": self.stats,
            "notes": self.notes,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=1)

    def to_text(self) -> str:
        cfg = " ".join(f"{k}={v}" for k, v in self.config.items())
        lines = [f"{self.check}: {'PASS' if self.passed else 'FAIL'} ({cfg})"]
        lines += [f"  {k}: {v}" for k, v in self.stats.items()]
        lines += [f"  note: {s}" for s in self.notes]
        lines += [f"  violation: {s}" for s in self.violations]
        if self.violation_count > len(self.violations):
            lines.append(f"  ... {self.violation_count - len(self.violations)} more")
        return "\n".join(lines)


def _config(G: GammaGroup, **extra) -> dict:
    return {"n": G.n, "ring": str(G.ring), **extra}


def _need_bound(ring: Ring, coeff_bound: Optional[int]) -> int:
    if ring.is_finite:
        return coeff_bound or 0
    if not coeff_bound or coeff_bound < 1:
        raise ConfigurationError("balls over an infinite ring need coeff_bound >= 1")
    return coeff_bound


# -- breadth-first search

@lru_cache(maxsize=None)
def _group(n: int, modulus: Optional[int]) -> GammaGroup:
    return GammaGroup(n, Ring(modulus))


@lru_cache(maxsize=None)
def _letters(n: int, modulus: Optional[int], bound: int) -> tuple:
    return tuple(_group(n, modulus).letters(bound))


def _expand_cayley(args) -> list:
    n, modulus, bound, elems = args
    G = _group(n, modulus)
    letters = _letters(n, modulus, bound)
    return [[(str(tok), tok.power > 0, G.mul(g, x)) for tok, x in letters] for g in elems]


def _expand_hn(args) -> list:
    n, modulus, bound, verts = args
    ring = Ring(modulus)
    out = []
    for v in verts:
        out.append([(f"down={j} up={k} r={r}", True, w) for (j, k, r), w in labeled_neighbors(v, ring, bound)])
    return out


def _map_chunks(fn: Callable, head: tuple, items: list, workers: int) -> list:
    if workers <= 1 or len(items) < 64:
        return fn(head + (items,))
    size = -(-len(items) // (workers * 4))
    chunks = [items[i:i + size] for i in range(0, len(items), size)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(fn, [head + (c,) for c in chunks]))
    return [r for part in parts for r in part]


def _bfs(kind: str, root, key_of, fn, head, radius: int, workers: int) -> LabeledGraph:
    """Layered BFS.  Edges come from ``forward`` moves whose target is in the ball."""
    if radius < 0:
        raise ConfigurationError("radius must be nonnegative")
    keys = {root: key_of(root)}
    layers = {root: 0}
    frontier = [root]
    found = []  # (source, target, label), forward moves only
    for depth in range(radius + 1):
        results = _map_chunks(fn, head, frontier, workers)
        nxt = []
        for src, moves in zip(frontier, results):
            for label, forward, dst in moves:
                if dst not in layers and depth < radius:
                    layers[dst] = depth + 1
                    keys[dst] = key_of(dst)
                    nxt.append(dst)
                if forward:
                    found.append((src, dst, label))
        frontier = sorted(nxt, key=keys.__getitem__)
    order = sorted(layers, key=lambda v: (layers[v], keys[v]))
    rank = {v: i for i, v in enumerate(order)}
    edges = sorted(
        ((s, t, label) for s, t, label in found if t in layers),
        key=lambda e: (rank[e[0]], rank[e[1]], e[2]),
    )
    if kind == "hn":
        # each edge was produced from both ends; keep one orientation
        edges = [e for e in edges if rank[e[0]] < rank[e[1]]]
    return LabeledGraph(
        kind=kind,
        root=keys[root],
        vertices=[keys[v] for v in order],
        layers={keys[v]: layers[v] for v in order},
        edges=[(keys[s], keys[t], label) for s, t, label in edges],
        objects={keys[v]: v for v in order},
    )


def cayley_ball(G: GammaGroup, radius: int, coeff_bound: Optional[int] = None, workers: int = 1) -> LabeledGraph:
    bound = _need_bound(G.ring, coeff_bound)
    head = (G.n, G.ring.modulus, bound)
    return _bfs("cayley", G.identity(), GroupElement.dumps, _expand_cayley, head, radius, workers)


def hn_ball(G: GammaGroup, radius: int, coeff_bound: Optional[int] = None, workers: int = 1) -> LabeledGraph:
    bound = _need_bound(G.ring, coeff_bound)
    head = (G.n, G.ring.modulus, bound)
    return _bfs("hn", phi(G, G.identity()), HnVertex.dumps, _expand_hn, head, radius, workers)


# -- checks

def verify_iso(G: GammaGroup, radius: int, coeff_bound: Optional[int] = None, workers: int = 1) -> Report:
    """Check that Phi carries the Cayley ball onto the H_n(R) ball, edge for edge."""
    bound = _need_bound(G.ring, coeff_bound)
    rep = Report("iso", _config(G, radius=radius, coeff_bound=bound))
    C = cayley_ball(G, radius, bound, workers)
    images = {}
    by_image = {}
    for key in C.vertices:
        g = C.objects[key]
        v = phi(G, g)
        images[key] = v
        other = by_image.setdefault(v, key)
        if other != key:
            rep.fail(f"phi not injective: {other} and {key} both map to {v}")
        if phi_inv(G, v) != g:
            rep.fail(f"phi_inv(phi(g)) != g for g = {key}")

    # every generator edge is an H-edge of the predicted type
    tokens = {str(tok): tok for tok, _ in G.letters(bound)}
    for s, t, label in C.edges:
        got = hn_adjacent(images[s], images[t])
        want = letter_case(tokens[label])
        if got is None:
            rep.fail(f"edge {s} --{label}--> {t} is not an H-edge")
        elif got[:2] != want:
            rep.fail(f"edge {s} --{label}--> {t}: moves {got[:2]}, expected {want}")

    # no loops or double edges among the letters at any vertex
    seen = {}
    for s, t, label in C.edges:
        if s == t:
            rep.fail(f"loop {label} at {s}")
        pair = frozenset((s, t))
        if pair in seen:
            rep.fail(f"double edge {seen[pair]} / {label} between {s} and {t}")
        seen[pair] = label

    # backward: each H-neighbor of an interior vertex is reached by a letter
    checked = 0
    for key in C.vertices:
        if C.layers[key] >= radius:
            continue
        g = C.objects[key]
        g_inv = G.inv(g)
        for move, w in labeled_neighbors(images[key], G.ring, bound):
            x = G.mul(g_inv, phi_inv(G, w))
            checked += 1
            if G.classify_letter(x) is None:
                rep.fail(f"H-neighbor via {move} of {key} is not a generator step")

    root_deg = len({G.mul(G.identity(), x) for _, x in G.letters(bound)})
    rep.stats.update({
        "cayley_vertices": len(C.vertices),
        "cayley_edges": len(C.edges),
        "root_degree": root_deg,
        "backward_checks": checked,
    })

    if G.ring.is_finite:
        expected = (G.n + 1) * G.n * G.ring.size
        if root_deg != expected:
            rep.fail(f"root degree {root_deg}, expected (n+1)n|R| = {expected}")
        H = hn_ball(G, radius, bound, workers)
        rep.stats["hn_vertices"] = len(H.vertices)
        rep.stats["hn_edges"] = len(H.edges)
        h_root_deg = len({w for _, w in labeled_neighbors(H.objects[H.root], G.ring, bound)})
        rep.stats["hn_root_degree"] = h_root_deg
        if h_root_deg != expected:
            rep.fail(f"H root degree {h_root_deg}, expected {expected}")
        image_keys = {images[k].dumps(): k for k in C.vertices}
        if set(image_keys) != set(H.vertices):
            extra = sorted(set(image_keys) - set(H.vertices))[:3]
            missing = sorted(set(H.vertices) - set(image_keys))[:3]
            rep.fail(f"vertex sets differ: images not in H ball {extra}, H vertices not hit {missing}")
        c_edges = {frozenset((images[s].dumps(), images[t].dumps())) for s, t, _ in C.edges}
        h_edges = {frozenset((s, t)) for s, t, _ in H.edges}
        if c_edges != h_edges:
            rep.fail(f"edge sets differ: {len(c_edges - h_edges)} Cayley-only, {len(h_edges - c_edges)} H-only")
        c_deg = C.degrees()
        h_deg = H.degrees()
        bad = [k for k in C.vertices if c_deg[k] != h_deg.get(images[k].dumps())]
        for k in bad:
            rep.fail(f"degree mismatch at {k}: {c_deg[k]} vs {h_deg.get(images[k].dumps())}")
    else:
        rep.notes.append(
            f"R = {G.ring} is infinite: generators restricted to |r| <= {bound}; "
            "checked injectivity, edge types and bounded H-neighbors of interior vertices, "
            "not equality with an H ball (bounded generators do not give bounded H labels)"
        )
    return rep


def verify_relators(G: GammaGroup, presentation: str, bound: int = 4) -> Report:
    pid = resolve_presentation(presentation, G.n)
    rep = Report("relators", _config(G, presentation=pid, bound=bound))
    words = G.relators(pid, bound)
    one = G.identity()
    for desc, w in words:
        if G.eval_word(w) != one:
            rep.fail(f"{desc}: {format_word(w)} evaluates to {G.eval_word(w)}")
    rep.stats["relators"] = len(words)
    return rep


# -- two-cells

def _greek(tok: Token) -> Token:
    r, j, *rest = tok.args
    name = "n" if rest else ("l" if j == 0 else "m")
    return Token(name, (r,), tok.power)


def _classify_triangle(word: tuple) -> Optional[int]:
    """1 for l[i+j] n[j]^-1 m[i]^-1, 2 for l[i]^-1 n[i] m[i], up to rotation and inversion."""
    variants = []
    for w in (word, tuple(t.inverse() for t in reversed(word))):
        for r in range(3):
            variants.append(w[r:] + w[:r])
    for a, b, c in variants:
        shape = [(a.name, a.power), (b.name, b.power), (c.name, c.power)]
        if shape == [("l", 1), ("n", -1), ("m", -1)] and a.args[0] == b.args[0] + c.args[0]:
            return 1
        if shape == [("l", -1), ("n", 1), ("m", 1)] and a.args[0] == b.args[0] == c.args[0]:
            return 2
    return None


def two_cell_report(G: GammaGroup, radius: int, coeff_bound: Optional[int] = None, workers: int = 1) -> Report:
    """Every 3-cycle in the ball is a relator triangle and every relator triangle in the ball is a 3-cycle."""
    if G.n != 2:
        raise ConfigurationError(f"the triangle check is for rank 2, got rank {G.n}")
    bound = _need_bound(G.ring, coeff_bound)
    rep = Report("two-cells", _config(G, radius=radius, coeff_bound=bound))
    C = cayley_ball(G, radius, bound, workers)
    idx = {k: i for i, k in enumerate(C.vertices)}
    step = {}  # (u, v) -> letter read walking from u to v
    adj = {i: set() for i in range(len(C.vertices))}
    for s, t, label in C.edges:
        u, v = idx[s], idx[t]
        (tok,) = parse_word(label)
        tok = _greek(tok)
        step[(u, v)] = tok
        step[(v, u)] = tok.inverse()
        adj[u].add(v)
        adj[v].add(u)

    found = {}
    counts = {1: 0, 2: 0}
    for u in adj:
        for v in adj[u]:
            if v <= u:
                continue
            for w in adj[u] & adj[v]:
                if w <= v:
                    continue
                word = (step[(u, v)], step[(v, w)], step[(w, u)])
                kind = _classify_triangle(word)
                if kind is None:
                    rep.fail(f"3-cycle at {C.vertices[u]} reads {format_word(word)}: not a relator")
                else:
                    counts[kind] += 1
                found[frozenset((u, v, w))] = kind

    # instantiate relator triangles inside the ball
    rng = range(-bound, bound + 1)
    instances = [((Token("l", (i + j,)), Token("n", (j,), -1), Token("m", (i,), -1)), 1)
                 for i in rng for j in rng if abs(i + j) <= bound]
    instances += [((Token("l", (i,), -1), Token("n", (i,)), Token("m", (i,))), 2) for i in rng]
    realized = set()
    for word, kind in instances:
        elems = [G.generator(t) for t in word]
        if G.eval_word(word) != G.identity():
            rep.fail(f"relator {format_word(word)} is not trivial")
            continue
        for key in C.vertices:
            g = C.objects[key]
            p1 = G.mul(g, elems[0])
            p2 = G.mul(p1, elems[1])
            k1, k2 = p1.dumps(), p2.dumps()
            if k1 in idx and k2 in idx:
                tri = frozenset((idx[key], idx[k1], idx[k2]))
                realized.add(tri)
                if tri not in found:
                    rep.fail(f"relator {format_word(word)} at {key} closes no 3-cycle in the ball")
    for tri in found:
        if tri not in realized:
            members = sorted(C.vertices[i] for i in tri)
            rep.fail(f"3-cycle {members} is not an instance of any relator")
    rep.stats.update({
        "vertices": len(C.vertices),
        "edges": len(C.edges),
        "triangles": len(found),
        "type1": counts[1],
        "type2": counts[2],
        "relator_instances": len(instances),
    })
    if not G.ring.is_finite:
        rep.notes.append(f"letters restricted to |i| <= {bound}")
    return rep

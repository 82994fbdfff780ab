"""Addresses in R-branching trees, the horocyclic product H_n(R), and the map Phi.

A tree vertex is addressed by the labels read along its downward path
(first label = the edge leaving the vertex) and its height.  A vertex of
H_n(R) is an (n+1)-tuple of addresses, coordinates ordered ``inf, 0, ..., n-1``,
whose heights sum to zero.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator, Optional, Union

from .an_ring import INF, AnContext, from_sequences, mul_shift, pole_sequence, seq_a, x_sequence
from .errors import InvalidVertexError
from .group_gamma import GammaGroup, GroupElement
from .ring import Ring

__all__ = [
    "TreeAddress",
    "HnVertex",
    "down",
    "up",
    "phi",
    "phi_inv",
    "hn_adjacent",
    "neighbors",
    "coord_names",
    "labeled_neighbors",
    "letter_case",
]

Coord = Union[str, int]


def _trim(labels) -> tuple:
    labels = list(labels)
    while labels and labels[-1] == 0:
        labels.pop()
    return tuple(labels)


@dataclass(frozen=True)
class TreeAddress:
    labels: tuple = ()
    height: int = 0

    def __post_init__(self):
        object.__setattr__(self, "labels", _trim(int(v) for v in self.labels))

    def down(self) -> "TreeAddress":
        return TreeAddress(self.labels[1:], self.height - 1)

    def up(self, label) -> "TreeAddress":
        return TreeAddress((int(label),) + self.labels, self.height + 1)

    def first_label(self) -> int:
        return self.labels[0] if self.labels else 0

    def to_json(self) -> dict:
        return {"labels": list(self.labels), "height": self.height}

    def __str__(self):
        return f"(({', '.join(map(str, self.labels))}), {self.height})"


def down(v: TreeAddress) -> TreeAddress:
    return v.down()


def up(v: TreeAddress, label) -> TreeAddress:
    return v.up(label)


def coord_names(n: int) -> list:
    return [INF] + list(range(n))


def _pos(c: Coord) -> int:
    return 0 if c == INF else int(c) + 1


@dataclass(frozen=True)
class HnVertex:
    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(self.coords))
        if sum(a.height for a in self.coords) != 0:
            heights = [a.height for a in self.coords]
            raise InvalidVertexError(f"heights {heights} do not sum to zero")

    @property
    def n(self) -> int:
        return len(self.coords) - 1

    def coord(self, c: Coord) -> TreeAddress:
        return self.coords[_pos(c)]

    def key(self):
        return tuple((a.labels, a.height) for a in self.coords)

    def to_json(self) -> dict:
        return {"coords": [a.to_json() for a in self.coords]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, data: Union[dict, str], ring: Optional[Ring] = None) -> "HnVertex":
        if isinstance(data, str):
            data = json.loads(data)
        red = ring.red if ring is not None else int
        return cls(tuple(
            TreeAddress(tuple(red(int(v)) for v in c.get("labels", [])), int(c["height"]))
            for c in data["coords"]
        ))

    def move(self, j: Coord, k: Coord, label: int) -> "HnVertex":
        """Down in coordinate j, up along ``label`` in coordinate k."""
        cs = list(self.coords)
        pj, pk = _pos(j), _pos(k)
        cs[pj] = cs[pj].down()
        cs[pk] = cs[pk].up(label)
        return HnVertex(tuple(cs))

    def __str__(self):
        return "(" + ", ".join(str(a) for a in self.coords) + ")"


def phi(G: GammaGroup, g: GroupElement) -> HnVertex:
    f, h = g.f, g.h
    coords = [TreeAddress(seq_a(f, h, INF), -sum(h))]
    coords.extend(TreeAddress(seq_a(f, h, i), h[i]) for i in range(G.n))
    return HnVertex(tuple(coords))


def phi_inv(G: GammaGroup, v: HnVertex) -> GroupElement:
    n = G.n
    ctx: AnContext = G.ctx
    if len(v.coords) != n + 1:
        raise InvalidVertexError(f"vertex has {len(v.coords)} coordinates, rank {n} needs {n + 1}")
    h_inf = v.coords[0].height
    h = [a.height for a in v.coords[1:]]

    # Transport each a-sequence back through the shift that produced it.
    q = [-x for x in h]
    q[0] = -(h_inf + h[0])
    b_inf = x_sequence(mul_shift(from_sequences(ctx, v.coords[0].labels), q))
    b_stars = []
    for star in range(n):
        seqs = [()] * n
        seqs[star] = v.coords[star + 1].labels
        q = [-x for x in h]
        q[star] = 0
        lifted = from_sequences(ctx, (), *seqs)
        b_stars.append(pole_sequence(mul_shift(lifted, q), star))
    f_hat = from_sequences(ctx, b_inf, *b_stars)
    return G.element(mul_shift(f_hat, h), h)


def hn_adjacent(v: HnVertex, w: HnVertex) -> Optional[tuple]:
    """(down coordinate, up coordinate, label) when w is one edge from v, else None."""
    if len(v.coords) != len(w.coords):
        return None
    diff = [p for p, (x, y) in enumerate(zip(v.coords, w.coords)) if x != y]
    if len(diff) != 2:
        return None
    names = coord_names(v.n)
    for pj, pk in (diff, diff[::-1]):
        if w.coords[pj] != v.coords[pj].down():
            continue
        label = w.coords[pk].first_label()
        if w.coords[pk] == v.coords[pk].up(label):
            return names[pj], names[pk], label
    return None


def labeled_neighbors(v: HnVertex, ring: Ring, coeff_bound: int = 0) -> Iterator[tuple]:
    """Yields ``((j, k, r), w)`` in a fixed order: j, then k over coordinates, then r."""
    names = coord_names(v.n)
    rs = ring.enumerate_ints(coeff_bound)
    for j in names:
        for k in names:
            if j == k:
                continue
            for r in rs:
                yield (j, k, r), v.move(j, k, r)


def neighbors(v: HnVertex, ring: Ring, coeff_bound: int = 0) -> list:
    return [w for _, w in labeled_neighbors(v, ring, coeff_bound)]


def letter_case(token) -> tuple:
    """The (down, up) coordinate pair a generating-set letter moves along."""
    r, j, *rest = token.args
    if not rest:
        return (INF, j) if token.power > 0 else (j, INF)
    (k,) = rest
    return (k, j) if token.power > 0 else (j, k)

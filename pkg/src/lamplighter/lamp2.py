"""The rank-2 lamplighter board.

An element f of A_2(R) is drawn on the integer grid: the entry at (i, j) is a
coefficient of x^i (1+x)^j.  Different boards can draw the same f; they are
related by triangle moves, coming from

    x^i (1+x)^(j+1) = x^i (1+x)^j + x^(i+1) (1+x)^j.

Half-plane propagation pushes every entry of a half-plane onto one line of it
without changing what the half-plane "sees".  The three half-planes

    H^inf_m = {p + q >= m},   H^0_m = {p <= m},   H^1_m = {q <= m}

recover the same sequences that ``an_ring.seq_a`` reads off the polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Union

from .an_ring import INF, AnContext, AnElement
from .errors import ConfigurationError
from .group_gamma import GammaGroup, GroupElement
from .ring import Ring, Z
from .words import Token, parse_word

__all__ = [
    "Configuration",
    "HalfPlane",
    "config_from_poly",
    "poly_from_config",
    "triangle_move",
    "propagate",
    "canonical_on_L",
    "pascal_convert",
    "lamplighter_state",
    "run_board",
    "render_board",
    "render_grid",
]

Entries = dict  # (i, j) -> int, no zeros


@dataclass(frozen=True)
class HalfPlane:
    kind: Union[str, int]  # INF, 0 or 1
    m: int

    def __post_init__(self):
        if self.kind not in (INF, 0, 1):
            raise ValueError(f"half-plane kind must be 'inf', 0 or 1, got {self.kind!r}")

    def __contains__(self, cell) -> bool:
        p, q = cell
        if self.kind == INF:
            return p + q >= self.m
        if self.kind == 0:
            return p <= self.m
        return q <= self.m


@dataclass
class Configuration:
    entries: Entries = field(default_factory=dict)
    pos: tuple = (0, 0)


def _clean(entries: dict, ring: Ring) -> Entries:
    return {k: v for k, c in entries.items() if (v := ring.red(c))}


def _bump(entries: dict, cell, c: int):
    entries[cell] = entries.get(cell, 0) + c


def config_from_poly(f: AnElement) -> Entries:
    if f.ctx.n != 2:
        raise ConfigurationError(f"boards exist for rank 2 only, got rank {f.ctx.n}")
    out = {(j, 0): c for j, c in f.laurent.items()}
    out.update({(0, -j): c for (_, j), c in f.poles.items()})
    return out


def poly_from_config(entries: Entries, ctx: AnContext) -> AnElement:
    if ctx.n != 2:
        raise ConfigurationError(f"boards exist for rank 2 only, got rank {ctx.n}")
    out = ctx.zero()
    for (i, j), c in sorted(entries.items()):
        out = out + ctx.monomial((i, j), c)
    return out


def triangle_move(entries: Entries, i: int, j: int, r, ring: Ring = Z) -> Entries:
    """Trade r at (i, j+1) for r at (i, j) and r at (i+1, j)."""
    r = int(r)
    out = dict(entries)
    _bump(out, (i, j + 1), -r)
    _bump(out, (i, j), r)
    _bump(out, (i + 1, j), r)
    return _clean(out, ring)


def propagate(entries: Entries, hp: HalfPlane, level: int, ring: Ring = Z) -> tuple:
    """Sweep the half-plane's entries onto its level line and read the line outward."""
    red = ring.red
    m = hp.m
    work = {k: c for k, c in entries.items() if k in hp and red(c)}

    def push(cell, c):
        if cell in hp:
            _bump(work, cell, c)

    if hp.kind in (INF, 0):
        rows = sorted({q for _, q in work}, reverse=True)
        # rows above the level fold downwards, top row first
        for q in range(rows[0] if rows else level, level, -1):
            for p in sorted(p for p, qq in list(work) if qq == q):
                c = red(work.pop((p, q)))
                if c:
                    push((p, q - 1), c)
                    push((p + 1, q - 1), c)
        # rows below the level fold upwards, bottom row first
        low = min((q for _, q in work), default=level)
        for q in range(low, level):
            row = [p for p, qq in work if qq == q]
            if not row:
                continue
            if hp.kind == INF:
                p = max(row)
                while p >= m - q:
                    c = red(work.pop((p, q), 0))
                    if c:
                        push((p - 1, q + 1), c)
                        push((p - 1, q), -c)
                    p -= 1
            else:
                p = min(row)
                while p <= m:
                    c = red(work.pop((p, q), 0))
                    if c:
                        push((p, q + 1), c)
                        push((p + 1, q), -c)
                    p += 1
        if hp.kind == INF:
            top = max((p for p, q in work if q == level), default=m - level - 1)
            seq = [work.get((p, level), 0) for p in range(m - level, top + 1)]
        else:
            bottom = min((p for p, q in work if q == level), default=m + 1)
            seq = [work.get((p, level), 0) for p in range(m, bottom - 1, -1)]
    else:
        # columns left of the level, left to right; each column bottom-up
        left = min((p for p, _ in work), default=level)
        for p in range(left, level):
            col = [q for pp, q in work if pp == p]
            if not col:
                continue
            q = min(col)
            while q <= m:
                c = red(work.pop((p, q), 0))
                if c:
                    push((p, q + 1), c)
                    push((p + 1, q), -c)
                q += 1
        # columns right of the level, right to left
        right = max((p for p, _ in work), default=level)
        for p in range(right, level, -1):
            for q in sorted(q for pp, q in list(work) if pp == p):
                c = red(work.pop((p, q)))
                if c:
                    push((p - 1, q + 1), c)
                    push((p - 1, q), -c)
        bottom = min((q for p, q in work if p == level), default=m + 1)
        seq = [work.get((level, q), 0) for q in range(m, bottom - 1, -1)]

    seq = [red(c) for c in seq]
    while seq and seq[-1] == 0:
        seq.pop()
    return tuple(seq)


def canonical_on_L(entries: Entries, k: int, l: int, ring: Ring = Z) -> Entries:
    """The unique equivalent board supported on row l and the column below (k, l)."""
    row_right = propagate(entries, HalfPlane(INF, k + l), l, ring)
    row_left = propagate(entries, HalfPlane(0, k - 1), l, ring)
    column = propagate(entries, HalfPlane(1, l - 1), k, ring)
    out = {}
    for t, c in enumerate(row_right):
        out[(k + t, l)] = c
    for t, c in enumerate(row_left):
        out[(k - 1 - t, l)] = c
    for t, c in enumerate(column):
        out[(k, l - 1 - t)] = c
    return _clean(out, ring)


def pascal_convert(seq: Iterable[int], m: int, star, ring: Ring = Z, inverse: bool = False) -> tuple:
    """Closed-form b -> a sequence conversion (or a -> b with ``inverse``).

    For the inf and 0 sequences m is the lamplighter's second coordinate; for
    the 1 sequence it is the first coordinate.  Negative m gives infinite
    binomial sums, which stop at the end of the finite input.
    """
    b = [int(v) for v in seq]
    size = len(b)
    if star not in (INF, 0, 1):
        raise ValueError(f"star must be 'inf', 0 or 1, got {star!r}")
    if inverse:
        m = -m
    rank1 = star == 1
    out = []
    for p in range(size):
        total = 0
        if m >= 0:
            for i in range(min(m, size - 1 - p) + 1):
                sign = -1 if rank1 and (i + m) % 2 else 1
                total += sign * b[p + i] * comb(m, i)
        else:
            for i in range(size - p):
                parity = -m if rank1 else i
                sign = -1 if parity % 2 else 1
                total += sign * b[p + i] * comb(i - 1 - m, i)
        out.append(ring.red(total))
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def lamplighter_state(G: GammaGroup, g: GroupElement) -> Configuration:
    if G.n != 2:
        raise ConfigurationError(f"boards exist for rank 2 only, got rank {G.n}")
    return Configuration(config_from_poly(g.f), (g.h[0], g.h[1]))


def run_board(word: Union[str, Iterable[Token]], ring: Ring = Z) -> Configuration:
    """Play a word in a, s, t directly on the board: a bumps the lamp, s and t walk."""
    if isinstance(word, str):
        word = parse_word(word)
    entries: dict = {}
    k = l = 0
    for tok in word:
        if tok.name == "a":
            _bump(entries, (k, l), tok.power)
        elif tok.name == "t":
            k += tok.power
        elif tok.name == "s":
            l += tok.power
        else:
            raise ConfigurationError(f"board walks read only a, s, t; got {tok}")
    return Configuration(_clean(entries, ring), (k, l))


def render_board(cfg: Configuration) -> str:
    lines = [f"({i},{j}): {v}" for (i, j), v in sorted(cfg.entries.items())]
    lines.append(f"pos: ({cfg.pos[0]},{cfg.pos[1]})")
    return "\n".join(lines)


def render_grid(cfg: Configuration) -> str:
    """Aligned text matrix, top row = largest second coordinate; [v] marks the lamplighter."""
    cells = list(cfg.entries) + [cfg.pos]
    p0, p1 = min(c[0] for c in cells), max(c[0] for c in cells)
    q0, q1 = min(c[1] for c in cells), max(c[1] for c in cells)
    width = max(len(str(v)) for v in list(cfg.entries.values()) + [0]) + 2
    rows = []
    for q in range(q1, q0 - 1, -1):
        row = []
        for p in range(p0, p1 + 1):
            v = str(cfg.entries.get((p, q), 0))
            row.append((f"[{v}]" if (p, q) == cfg.pos else v).rjust(width))
        rows.append(f"{q:>4} |" + "".join(row))
    rows.append("     +" + "-" * (width * (p1 - p0 + 1)))
    rows.append("      " + "".join(str(p).rjust(width) for p in range(p0, p1 + 1)))
    return "\n".join(rows)

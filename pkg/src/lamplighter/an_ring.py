"""Arithmetic in A_n(R) = R[x, 1/x, 1/(1+x), ..., 1/(n-1+x)].

Elements are kept as their coordinates in the basis

    1, x^j, x^-j, (1+x)^-j, ..., (n-1+x)^-j      (j = 1, 2, ...)

so equality is plain coefficient comparison.  Only multiplication by the
units x, 1+x, ..., n-1+x (and their inverses) is provided; that is all the
group law needs.

Internally a basis element is addressed as ``(l, j)``: ``l = None`` is the
monomial x^j (any integer j), ``l >= 1`` is the pole (l+x)^-j with j >= 1.
In the reduction rules below x^-j is also treated as the pole at l = 0.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .errors import NotInvertibleError, RingMismatchError
from .ring import Ring, RingElem

__all__ = [
    "AnContext",
    "AnElement",
    "INF",
    "mul_unit",
    "mul_shift",
    "coeff_x",
    "coeff_pole",
    "seq_a",
    "from_sequences",
    "random_element",
    "x_sequence",
    "pole_sequence",
]

INF = "inf"

Coeff = Union[int, RingElem]


@dataclass(frozen=True)
class AnContext:
    n: int
    ring: Ring

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"rank must be positive, got {self.n}")
        # every difference i - l of pole offsets must be a unit
        for k in range(2, self.n):
            if not self.ring(k).is_unit():
                raise NotInvertibleError(k, self.ring)

    def zero(self) -> "AnElement":
        return AnElement(self, {}, {})

    def one(self) -> "AnElement":
        return AnElement(self, {0: 1}, {})

    def coerce(self, c: Coeff) -> int:
        if isinstance(c, RingElem):
            if c.ring != self.ring:
                raise RingMismatchError(f"coefficient from {c.ring}, context is over {self.ring}")
            return c.value
        return self.ring.red(int(c))

    def from_basis(self, which, coeff: Coeff = 1) -> "AnElement":
        """``which`` is ``("x", j)`` for x^j or ``(l, j)`` for (l+x)^-j.

        ``(0, j)`` is read as x^-j.
        """
        c = self.coerce(coeff)
        kind, j = which
        if kind == "x":
            return AnElement(self, {j: c}, {})
        l = int(kind)
        if j < 1 or not 0 <= l < self.n:
            raise ValueError(f"no basis element ({l}+x)^-{j} in A_{self.n}")
        if l == 0:
            return AnElement(self, {-j: c}, {})
        return AnElement(self, {}, {(l, j): c})

    def monomial(self, exps: Sequence[int], coeff: Coeff = 1) -> "AnElement":
        """coeff * x^e0 (1+x)^e1 ... (n-1+x)^e_{n-1}."""
        return mul_shift(AnElement(self, {0: self.coerce(coeff)}, {}), exps)


class AnElement:
    """An element of A_n(R) in canonical sparse basis form.  Treat as immutable."""

    __slots__ = ("ctx", "laurent", "poles", "_key")

    def __init__(self, ctx: AnContext, laurent: dict, poles: dict, _clean: bool = False):
        self.ctx = ctx
        if not _clean:
            red = ctx.ring.red
            laurent = {j: v for j, c in laurent.items() if (v := red(c))}
            poles = {k: v for k, c in poles.items() if (v := red(c))}
            for (l, j) in poles:
                if not (1 <= l < ctx.n and j >= 1):
                    raise ValueError(f"bad pole key {(l, j)} for rank {ctx.n}")
        self.laurent = laurent
        self.poles = poles
        self._key = None

    # -- identity

    def key(self):
        if self._key is None:
            self._key = (tuple(sorted(self.laurent.items())), tuple(sorted(self.poles.items())))
        return self._key

    def __eq__(self, other):
        if not isinstance(other, AnElement):
            return NotImplemented
        return self.ctx == other.ctx and self.laurent == other.laurent and self.poles == other.poles

    def __hash__(self):
        return hash(self.key())

    def is_zero(self) -> bool:
        return not self.laurent and not self.poles

    def __bool__(self):
        return not self.is_zero()

    # -- module structure

    def _same(self, other: "AnElement"):
        if self.ctx != other.ctx:
            raise RingMismatchError(f"A_{self.ctx.n}({self.ctx.ring}) vs A_{other.ctx.n}({other.ctx.ring})")

    def __add__(self, other: "AnElement") -> "AnElement":
        self._same(other)
        red = self.ctx.ring.red
        lau = dict(self.laurent)
        for j, c in other.laurent.items():
            v = red(lau.get(j, 0) + c)
            if v:
                lau[j] = v
            else:
                lau.pop(j, None)
        pol = dict(self.poles)
        for k, c in other.poles.items():
            v = red(pol.get(k, 0) + c)
            if v:
                pol[k] = v
            else:
                pol.pop(k, None)
        return AnElement(self.ctx, lau, pol, _clean=True)

    def __neg__(self) -> "AnElement":
        red = self.ctx.ring.red
        return AnElement(
            self.ctx,
            {j: red(-c) for j, c in self.laurent.items()},
            {k: red(-c) for k, c in self.poles.items()},
            _clean=True,
        )

    def __sub__(self, other: "AnElement") -> "AnElement":
        return self + (-other)

    def scale(self, r: Coeff) -> "AnElement":
        c = self.ctx.coerce(r)
        return AnElement(
            self.ctx,
            {j: v * c for j, v in self.laurent.items()},
            {k: v * c for k, v in self.poles.items()},
        )

    # -- coefficient access

    def coeff_x(self, j: int) -> RingElem:
        return RingElem(self.ctx.ring, self.laurent.get(j, 0))

    def coeff_pole(self, i: int, j: int) -> RingElem:
        if i == 0:
            return self.coeff_x(-j)
        return RingElem(self.ctx.ring, self.poles.get((i, j), 0))

    def terms(self):
        """Basis terms as ``(("x", j) or (l, j), int coeff)``, deterministically ordered."""
        for j, c in sorted(self.laurent.items()):
            yield ("x", j), c
        for (l, j), c in sorted(self.poles.items()):
            yield (l, j), c

    # -- serialization

    def to_json(self) -> dict:
        poles: dict = {}
        for (l, j), c in self.poles.items():
            poles.setdefault(str(l), {})[str(j)] = c
        return {"laurent": {str(j): c for j, c in self.laurent.items()}, "poles": poles}

    @classmethod
    def from_json(cls, ctx: AnContext, data: dict) -> "AnElement":
        laurent = {int(j): int(c) for j, c in data.get("laurent", {}).items()}
        poles = {}
        for l, inner in data.get("poles", {}).items():
            for j, c in inner.items():
                poles[(int(l), int(j))] = int(c)
        return cls(ctx, laurent, poles)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))

    def __repr__(self):
        return f"AnElement({self})"

    def __str__(self):
        parts = []
        for (l, j), c in self.terms():
            if l == "x":
                mono = "1" if j == 0 else ("x" if j == 1 else f"x^{j}")
            else:
                mono = f"({l}+x)^-{j}"
            if mono == "1":
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# Reduction rules.  Each returns the image of one basis element as a list of
# (l, j, coeff) with l = None for x^j; coefficients are unreduced integers
# except where an inverse was taken.  Kept as module functions so the tests
# can corrupt one rule and check that the verifiers notice.


def times_linear_monomial(i, j, ring):
    """(i+x) * x^j."""
    if i == 0:
        return [(None, j + 1, 1)]
    return [(None, j, i), (None, j + 1, 1)]


def times_linear_pole(i, l, j, ring):
    """(i+x) * (l+x)^-j = (l+x)^-(j-1) + (i-l) (l+x)^-j, for l >= 1."""
    first = (None, 0, 1) if j == 1 else (l, j - 1, 1)
    return [first, (l, j, i - l)]


def _cross_pole(i, l, j, ring):
    """(i+x)^-1 (l+x)^-j for i != l; l = 0 stands for x^-j.

    Unrolls (i+x)^-1 (l+x)^-1 = c (l+x)^-1 - c (i+x)^-1 with c = (i-l)^-1.
    """
    c = ring.inv_int(i - l)
    out = []
    q = 1  # (-c)^(j-k)
    for k in range(j, 0, -1):
        out.append(_pole(l, k, c * q))
        q = ring.red(-c * q)
    out.append(_pole(i, 1, q))
    return out


def _pole(l, k, c):
    if l == 0:
        return (None, -k, c)
    return (l, k, c)


def over_linear_monomial(i, j, ring):
    """(i+x)^-1 * x^j."""
    if i == 0:
        return [(None, j - 1, 1)]
    if j < 0:
        return _cross_pole(i, 0, -j, ring)
    # (i+x)^-1 x^j = x^(j-1) - i (i+x)^-1 x^(j-1)
    out = []
    p = 1
    for k in range(j - 1, -1, -1):
        out.append((None, k, p))
        p = -i * p
    out.append((i, 1, p))
    return out


def over_linear_pole(i, l, j, ring):
    """(i+x)^-1 * (l+x)^-j for l >= 1."""
    if i == l:
        return [(l, j + 1, 1)]
    return _cross_pole(i, l, j, ring)


def mul_unit(f: AnElement, i: int, sign: int) -> AnElement:
    """(i+x)^sign * f, with 0+x meaning x."""
    ctx = f.ctx
    if not 0 <= i < ctx.n:
        raise ValueError(f"unit index {i} out of range for rank {ctx.n}")
    ring = ctx.ring
    lau: dict = {}
    pol: dict = {}

    def put(items, c):
        for l, j, d in items:
            if l is None:
                lau[j] = lau.get(j, 0) + c * d
            else:
                pol[(l, j)] = pol.get((l, j), 0) + c * d

    if sign == 1:
        if i == 0:
            # fast path: multiplying the monomials by x is a shift
            lau = {j + 1: c for j, c in f.laurent.items()}
        else:
            for j, c in f.laurent.items():
                put(times_linear_monomial(i, j, ring), c)
        for (l, j), c in f.poles.items():
            put(times_linear_pole(i, l, j, ring), c)
    elif sign == -1:
        if i == 0:
            lau = {j - 1: c for j, c in f.laurent.items()}
        else:
            for j, c in f.laurent.items():
                put(over_linear_monomial(i, j, ring), c)
        for (l, j), c in f.poles.items():
            put(over_linear_pole(i, l, j, ring), c)
    else:
        raise ValueError("sign must be +1 or -1")
    return AnElement(ctx, lau, pol)


def mul_shift(f: AnElement, h: Sequence[int]) -> AnElement:
    """f . h = f x^h0 (1+x)^h1 ... (n-1+x)^h_{n-1}."""
    if len(h) != f.ctx.n:
        raise ValueError(f"height vector of length {len(h)} for rank {f.ctx.n}")
    for i, e in enumerate(h):
        s = 1 if e > 0 else -1
        for _ in range(abs(e)):
            f = mul_unit(f, i, s)
    return f


def coeff_x(f: AnElement, j: int) -> RingElem:
    return f.coeff_x(j)


def coeff_pole(f: AnElement, i: int, j: int) -> RingElem:
    return f.coeff_pole(i, j)


def _trim(seq: list) -> tuple:
    while seq and seq[-1] == 0:
        seq.pop()
    return tuple(seq)


def x_sequence(f: AnElement) -> tuple:
    """Coefficients of x^0, x^1, ... (trimmed, as ints)."""
    top = max((j for j in f.laurent if j >= 0), default=-1)
    return _trim([f.laurent.get(j, 0) for j in range(top + 1)])


def pole_sequence(f: AnElement, star: int) -> tuple:
    """Coefficients of (star+x)^-1, (star+x)^-2, ... (trimmed, as ints)."""
    if star == 0:
        top = max((-j for j in f.laurent if j < 0), default=0)
        return _trim([f.laurent.get(-p, 0) for p in range(1, top + 1)])
    top = max((j for (l, j) in f.poles if l == star), default=0)
    return _trim([f.poles.get((star, p), 0) for p in range(1, top + 1)])


def height_inf(h: Sequence[int]) -> int:
    return -sum(h)


def seq_a(f: AnElement, h: Sequence[int], which) -> tuple:
    """The address sequence of f at heights h for coordinate ``which``.

    ``INF``: x^0, x^1, ... coefficients of x^h_inf f.
    ``star``: (star+x)^-1, ... coefficients of (star+x)^-h_star f.
    """
    n = f.ctx.n
    if which == INF:
        shift = [0] * n
        shift[0] = height_inf(h)
        return x_sequence(mul_shift(f, shift))
    star = int(which)
    shift = [0] * n
    shift[star] = -h[star]
    return pole_sequence(mul_shift(f, shift), star)


def from_sequences(ctx: AnContext, b_inf: Iterable[Coeff], *b_stars: Iterable[Coeff]) -> AnElement:
    """The element whose x^0.. and (star+x)^-1.. coefficients are the given sequences."""
    if len(b_stars) > ctx.n:
        raise ValueError(f"{len(b_stars)} pole sequences for rank {ctx.n}")
    lau = {}
    pol = {}
    for p, c in enumerate(b_inf):
        lau[p] = ctx.coerce(c)
    for star, seq in enumerate(b_stars):
        for p, c in enumerate(seq, start=1):
            if star == 0:
                lau[-p] = ctx.coerce(c)
            else:
                pol[(star, p)] = ctx.coerce(c)
    return AnElement(ctx, lau, pol)


def random_element(ctx: AnContext, rng: random.Random, terms: int = 6, spread: int = 4,
                   coeff_bound: int = 5) -> AnElement:
    """A random sum of up to ``terms`` basis elements with small exponents."""
    lau = {}
    pol = {}
    for _ in range(rng.randint(0, terms)):
        c = rng.randint(-coeff_bound, coeff_bound)
        l = rng.randrange(ctx.n)
        if l == 0 or rng.random() < 0.5:
            j = rng.randint(-spread, spread)
            lau[j] = lau.get(j, 0) + c
        else:
            j = rng.randint(1, spread)
            pol[(l, j)] = pol.get((l, j), 0) + c
    return AnElement(ctx, lau, pol)


def add(f: AnElement, g: AnElement) -> AnElement:
    return f + g


def neg(f: AnElement) -> AnElement:
    return -f


def scalar_mul(r: Coeff, f: AnElement) -> AnElement:
    return f.scale(r)


def zero(ctx: AnContext) -> AnElement:
    return ctx.zero()


def one(ctx: AnContext) -> AnElement:
    return ctx.one()


def from_basis(ctx: AnContext, which, coeff: Coeff = 1) -> AnElement:
    return ctx.from_basis(which, coeff)

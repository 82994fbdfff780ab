"""The metabelian groups Gamma_n(R) = A_n(R) x| Z^n.

Elements are pairs ``(f, h)`` with product ``(f, h)(g, k) = (f + g.h, h + k)``
where ``g.h`` multiplies ``g`` by the unit monomial with exponent vector ``h``.
Words act left to right by right multiplication.
"""

from __future__ import annotations

import json
from typing import Iterable, Optional, Sequence, Union

from .an_ring import AnContext, AnElement, mul_shift
from .errors import ConfigurationError, RingMismatchError, UnsupportedError
from .ring import Ring, RingElem, parse_ring
from .words import Token, format_word, invert_word, parse_word, power_word

__all__ = [
    "GammaGroup",
    "GroupElement",
    "PRESENTATIONS",
    "identity",
    "mul",
    "inv",
    "eq",
    "generator",
    "eval_word",
    "relators",
    "normal_form",
]


class GroupElement:
    __slots__ = ("f", "h", "_hash")

    def __init__(self, f: AnElement, h: Sequence[int]):
        self.f = f
        self.h = tuple(h)
        self._hash = None

    @property
    def ctx(self) -> AnContext:
        return self.f.ctx

    def key(self):
        return (self.f.key(), self.h)

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.h == other.h and self.f == other.f

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.key())
        return self._hash

    def to_json(self) -> dict:
        return {
            "ring": str(self.ctx.ring),
            "n": self.ctx.n,
            "f": self.f.to_json(),
            "h": list(self.h),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, data: Union[dict, str]) -> "GroupElement":
        if isinstance(data, str):
            data = json.loads(data)
        ctx = AnContext(int(data["n"]), parse_ring(data["ring"]))
        h = [int(v) for v in data["h"]]
        if len(h) != ctx.n:
            raise ValueError(f"height vector of length {len(h)} for rank {ctx.n}")
        return cls(AnElement.from_json(ctx, data["f"]), h)

    def __repr__(self):
        return f"({self.f}, {self.h})"


# Presentation ids and the (rank, ring) they apply to; relator words are built
# in GammaGroup.relators.
PRESENTATIONS = {
    "gamma1-i": "<a, t | [a, a^(t^k)]>",
    "gamma1-ii": "<lambda, mu | lambda^k (lambda^-1 mu lambda^-1)^k = mu^k lambda^-k>",
    "gamma1-iii": "<lambda_i | lambda_i^k lambda_j^-k = lambda_-j^k lambda_-i^-k>",
    "gamma1-2": "<lambda, mu | (lambda^k mu^-k)^2>, R = Z/2",
    "gamma1-m": "<lambda_0..lambda_(m-1) | family iii, (lambda_i^k lambda_j^-k)^m>, R = Z/m",
    "gamma2-i": "<a, s, t | [a, a^t], [s, t], a^s = a a^t>",
    "gamma2-ii": "<mu, nu, c, d | [mu, nu], mu^-1 c^2 nu = c, nu^-1 d^2 mu = d>",
    "gamma2-iii": "<lambda_i, mu_i, nu_i | lambda_i = nu_i mu_i, lambda_(i+j) = mu_i nu_j>",
    "cayley-complex": "same relators as gamma2-iii",
}


def _commutator(u: tuple, v: tuple) -> tuple:
    return invert_word(u) + invert_word(v) + u + v


def _t(name, *args, power=1):
    return Token(name, tuple(args), power)


class GammaGroup:
    """Gamma_n(R).  Raises NotInvertibleError unless 2..n-1 are units of R."""

    def __init__(self, n: int, ring: Ring):
        self.ctx = AnContext(n, ring)
        self._gen_cache: dict = {}

    @property
    def n(self) -> int:
        return self.ctx.n

    @property
    def ring(self) -> Ring:
        return self.ctx.ring

    def __eq__(self, other):
        return isinstance(other, GammaGroup) and self.ctx == other.ctx

    def __hash__(self):
        return hash(self.ctx)

    def __repr__(self):
        return f"Gamma_{self.n}({self.ring})"

    # -- group law

    def identity(self) -> GroupElement:
        return GroupElement(self.ctx.zero(), (0,) * self.n)

    def element(self, f: AnElement, h: Sequence[int]) -> GroupElement:
        if f.ctx != self.ctx:
            raise RingMismatchError(f"{f.ctx} is not the coefficient ring of {self}")
        if len(h) != self.n:
            raise ValueError(f"height vector of length {len(h)} for rank {self.n}")
        return GroupElement(f, h)

    def _check(self, g: GroupElement):
        if g.ctx != self.ctx:
            raise RingMismatchError(f"element of Gamma_{g.ctx.n}({g.ctx.ring}) used in {self}")

    def mul(self, g: GroupElement, k: GroupElement) -> GroupElement:
        self._check(g)
        self._check(k)
        f = g.f + mul_shift(k.f, g.h) if k.f else g.f
        return GroupElement(f, tuple(a + b for a, b in zip(g.h, k.h)))

    def inv(self, g: GroupElement) -> GroupElement:
        self._check(g)
        neg_h = tuple(-v for v in g.h)
        return GroupElement(-mul_shift(g.f, neg_h), neg_h)

    def pow(self, g: GroupElement, e: int) -> GroupElement:
        if e < 0:
            g, e = self.inv(g), -e
        out = self.identity()
        # square and multiply; e is small in practice but t^k can be large
        while e:
            if e & 1:
                out = self.mul(out, g)
            e >>= 1
            if e:
                g = self.mul(g, g)
        return out

    def eq(self, g: GroupElement, k: GroupElement) -> bool:
        return g == k

    # -- generators

    def pair(self, r, j: int) -> GroupElement:
        """(r, e_j)."""
        if not 0 <= j < self.n:
            raise ConfigurationError(f"index {j} out of range for rank {self.n}")
        e = [0] * self.n
        e[j] = 1
        return GroupElement(AnElement(self.ctx, {0: self.ctx.coerce(r)}, {}), e)

    def diff(self, r, j: int, k: int) -> GroupElement:
        """(r, e_j)(r, e_k)^-1."""
        if not 0 <= j < k < self.n:
            raise ConfigurationError(f"need 0 <= j < k < {self.n}, got j={j}, k={k}")
        return self.mul(self.pair(r, j), self.inv(self.pair(r, k)))

    def _named(self, name: str, args: tuple) -> GroupElement:
        n = self.n
        if name == "g":
            if len(args) == 2:
                return self.pair(args[0], args[1])
            return self.diff(*args)
        if name == "a":
            return GroupElement(self.ctx.one(), (0,) * n)
        if name == "t":
            return self.pair(0, 0)
        if name == "l":
            return self.pair(args[0], 0)
        if n == 1:
            if name == "mu":
                return self.pair(1, 0)
            raise ConfigurationError(f"letter {name!r} is not defined for rank 1")
        if name == "s":
            return self.pair(0, 1)
        if name == "m":
            return self.pair(args[0], 1)
        if name == "n":
            return self.diff(args[0], 0, 1)
        if name == "c":
            return self.pair(1, 0)
        if name == "d":
            return self.mul(self.inv(self.pair(0, 0)), self._named("a", ()))
        if name == "mu":
            return self.pair(0, 1)
        if name == "nu":
            return self.mul(self.inv(self.pair(0, 0)), self.pair(0, 1))
        raise ConfigurationError(f"unknown letter {name!r}")

    def generator(self, token: Union[Token, str]) -> GroupElement:
        if isinstance(token, str):
            (token,) = parse_word(token)
        base = token.base()
        g = self._gen_cache.get(base)
        if g is None:
            g = self._named(token.name, token.args)
            self._gen_cache[base] = g
        if token.power == 1:
            return g
        return self.pow(g, token.power)

    def eval_word(self, word: Union[str, Iterable[Token]]) -> GroupElement:
        if isinstance(word, str):
            word = parse_word(word)
        out = self.identity()
        for tok in word:
            out = self.mul(out, self.generator(tok))
        return out

    def letters(self, coeff_bound: int = 0) -> list:
        """The generating set of pairs and differences plus inverses, as (token, element).

        r runs over all of a finite ring, or over -coeff_bound..coeff_bound for Z.
        """
        if not self.ring.is_finite and coeff_bound < 1:
            raise ConfigurationError("an infinite ring needs coeff_bound >= 1")
        out = []
        rs = self.ring.enumerate_ints(coeff_bound)
        for j in range(self.n):
            for r in rs:
                tok = Token("g", (r, j))
                g = self.generator(tok)
                out.append((tok, g))
                out.append((tok.inverse(), self.inv(g)))
        for j in range(self.n):
            for k in range(j + 1, self.n):
                for r in rs:
                    tok = Token("g", (r, j, k))
                    g = self.generator(tok)
                    out.append((tok, g))
                    out.append((tok.inverse(), self.inv(g)))
        return out

    def classify_letter(self, x: GroupElement) -> Optional[Token]:
        """The generating-set letter equal to x, with any r in R, or None."""
        self._check(x)
        h = x.h
        nz = [(i, v) for i, v in enumerate(h) if v]
        cand = None
        ring = self.ring
        if len(nz) == 1 and nz[0][1] == 1:
            j = nz[0][0]
            cand = Token("g", (x.f.coeff_x(0).value, j))
        elif len(nz) == 1 and nz[0][1] == -1:
            j = nz[0][0]
            cand = Token("g", (ring.red(-x.f.coeff_pole(j, 1).value), j), -1)
        elif len(nz) == 2 and sorted(v for _, v in nz) == [-1, 1]:
            up = next(i for i, v in nz if v == 1)
            down = next(i for i, v in nz if v == -1)
            # (r,e_j)(r,e_k)^-1 has f = r (k-j) (k+x)^-1; its inverse f = r (j-k) (j+x)^-1
            j, k = min(up, down), max(up, down)
            if up == j:
                r = x.f.coeff_pole(k, 1).value * ring.inv_int(k - j)
                cand = Token("g", (ring.red(r), j, k))
            else:
                r = x.f.coeff_pole(j, 1).value * ring.inv_int(j - k)
                cand = Token("g", (ring.red(r), j, k), -1)
        if cand is not None and self.generator(cand) == x:
            return cand
        return None

    # -- presentations

    def relators(self, presentation: str, bound: int = 4) -> list:
        """Relator words of a presentation, parameters truncated to [-bound, bound].

        Returns a list of ``(description, word)`` pairs.
        """
        pid = resolve_presentation(presentation, self.n)
        n, ring = self.n, self.ring
        need_n = 1 if pid.startswith("gamma1") else 2
        if n != need_n:
            raise ConfigurationError(f"presentation {pid} is for rank {need_n}, group has rank {n}")
        ks = range(-bound, bound + 1)
        out = []
        a, t, s = (_t("a"),), (_t("t"),), (_t("s"),)

        if pid == "gamma1-i":
            for k in ks:
                conj = (_t("t", power=k),) + a + (_t("t", power=-k),)
                out.append((f"[a, a^(t^{k})]", _commutator(a, conj)))
        elif pid == "gamma1-ii":
            lam, mu = t, (_t("mu"),)
            for k in ks:
                w = power_word(lam, k) + power_word(invert_word(lam) + mu + invert_word(lam), k)
                w += power_word(lam, k) + power_word(mu, -k)
                out.append((f"k={k}", w))
        elif pid == "gamma1-iii":
            out.extend(_family_iii(ks, ks, ks))
        elif pid == "gamma1-2":
            if ring.modulus != 2:
                raise ConfigurationError(f"presentation {pid} needs R = Z/2, got {ring}")
            for k in ks:
                w = (_t("t", power=k), _t("mu", power=-k))
                out.append((f"k={k}", w * 2))
        elif pid == "gamma1-m":
            m = ring.modulus
            if m is None or m < 2:
                raise ConfigurationError(f"presentation {pid} needs R = Z/m with m >= 2, got {ring}")
            idx = range(m)
            out.extend(_family_iii(idx, idx, ks))
            for i in idx:
                for j in idx:
                    for k in ks:
                        w = (_t("l", i, power=k), _t("l", j, power=-k))
                        out.append((f"(l[{i}]^{k} l[{j}]^{-k})^{m}", w * m))
        elif pid == "gamma2-i":
            at = (_t("t"),) + a + (_t("t", power=-1),)
            out.append(("[a, a^t]", _commutator(a, at)))
            out.append(("[s, t]", _commutator(s, t)))
            out.append(("a^s = a a^t", (_t("s"),) + a + (_t("s", power=-1),) + invert_word(a + at)))
        elif pid == "gamma2-ii":
            mu, nu, c, d = (_t("mu"),), (_t("nu"),), (_t("c"),), (_t("d"),)
            out.append(("[mu, nu]", _commutator(mu, nu)))
            out.append(("mu^-1 c^2 nu = c", invert_word(mu) + c + c + nu + invert_word(c)))
            out.append(("nu^-1 d^2 mu = d", invert_word(nu) + d + d + mu + invert_word(d)))
        else:  # gamma2-iii / cayley-complex
            for i in ks:
                out.append((f"l[{i}] = n[{i}] m[{i}]",
                            (_t("l", i), _t("m", i, power=-1), _t("n", i, power=-1))))
            for i in ks:
                for j in ks:
                    out.append((f"l[{i + j}] = m[{i}] n[{j}]",
                                (_t("l", i + j), _t("n", j, power=-1), _t("m", i, power=-1))))
        return out

    # -- normal form

    def normal_form(self, g: GroupElement) -> tuple:
        """The unique word: conjugates of a by t, then by negative powers of s, then s^h1 t^h0."""
        self._check(g)
        if self.n > 2:
            raise UnsupportedError(f"no word normal form is available for rank {self.n}")
        out = []
        for k, m in sorted(g.f.laurent.items()):
            out.extend(_conj("t", k, m))
        for (_, j), m in sorted(g.f.poles.items(), key=lambda kv: -kv[0][1]):
            out.extend(_conj("s", -j, m))
        if self.n == 2 and g.h[1]:
            out.append(_t("s", power=g.h[1]))
        if g.h[0]:
            out.append(_t("t", power=g.h[0]))
        return tuple(out)

    def normal_form_str(self, g: GroupElement) -> str:
        return format_word(self.normal_form(g))


def _conj(letter: str, k: int, m: int) -> list:
    """letter^k a^m letter^-k, dropping trivial pieces."""
    if k == 0:
        return [_t("a", power=m)]
    return [_t(letter, power=k), _t("a", power=m), _t(letter, power=-k)]


def _family_iii(is_, js, ks):
    out = []
    for i in is_:
        for j in js:
            for k in ks:
                w = (_t("l", i, power=k), _t("l", j, power=-k), _t("l", -i, power=k), _t("l", -j, power=-k))
                out.append((f"i={i} j={j} k={k}", w))
    return out


def resolve_presentation(pid: str, n: int) -> str:
    """Accept full ids or the short forms i / ii / iii / 2 / m relative to the rank."""
    if pid in PRESENTATIONS:
        return pid
    full = f"gamma{n}-{pid}"
    if full in PRESENTATIONS:
        return full
    raise ConfigurationError(f"unknown presentation {pid!r}; known: {', '.join(PRESENTATIONS)}")


# function-style API


def identity(G: GammaGroup) -> GroupElement:
    return G.identity()


def mul(G: GammaGroup, g: GroupElement, k: GroupElement) -> GroupElement:
    return G.mul(g, k)


def inv(G: GammaGroup, g: GroupElement) -> GroupElement:
    return G.inv(g)


def eq(G: GammaGroup, g: GroupElement, k: GroupElement) -> bool:
    return G.eq(g, k)


def generator(G: GammaGroup, token) -> GroupElement:
    return G.generator(token)


def eval_word(G: GammaGroup, word) -> GroupElement:
    return G.eval_word(word)


def relators(G: GammaGroup, presentation: str, bound: int = 4) -> list:
    return G.relators(presentation, bound)


def normal_form(G: GammaGroup, g: GroupElement) -> tuple:
    return G.normal_form(g)

"""Independent models of A_n(R) used to check the canonical-basis arithmetic.

None of these touch the reduction rules in ``lamplighter.an_ring``:

* ``cleared``: multiply every basis term by a common denominator
  D = x^d0 (1+x)^d1 ... and expand with schoolbook polynomial arithmetic.
* ``evaluate``: substitute a rational number for x (only meaningful over Z).
* ``matrix``: the 2x2 upper-triangular model of a group element, evaluated at x = q.
"""

from fractions import Fraction


def poly_mul(p, q, mod=None):
    out = [0] * (len(p) + len(q) - 1) if p and q else []
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return poly_trim(out, mod)


def poly_add(p, q, mod=None):
    out = [0] * max(len(p), len(q))
    for i, a in enumerate(p):
        out[i] += a
    for i, b in enumerate(q):
        out[i] += b
    return poly_trim(out, mod)


def poly_trim(p, mod=None):
    if mod is not None:
        p = [c % mod for c in p]
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_pow_linear(i, e, mod=None):
    """(i + x)^e for e >= 0."""
    out = [1]
    for _ in range(e):
        out = poly_mul(out, [i, 1], mod)
    return poly_trim(out, mod)


def denominators(*elems):
    """Exponents d_0..d_{n-1} large enough to clear every pole of the given elements."""
    n = elems[0].ctx.n
    d = [0] * n
    for f in elems:
        for j in f.laurent:
            d[0] = max(d[0], -j)
        for (l, j) in f.poles:
            d[l] = max(d[l], j)
    return d


def cleared(f, d):
    """f * x^d0 (1+x)^d1 ... as a coefficient list, computed term by term."""
    mod = f.ctx.ring.modulus
    n = f.ctx.n
    out = []
    for j, c in f.laurent.items():
        shift = d[0] + j
        assert shift >= 0, "denominator too small"
        term = [0] * shift + [c]
        for i in range(1, n):
            term = poly_mul(term, poly_pow_linear(i, d[i], mod), mod)
        out = poly_add(out, term, mod)
    for (l, j), c in f.poles.items():
        assert d[l] >= j, "denominator too small"
        term = [0] * d[0] + [c]
        for i in range(1, n):
            term = poly_mul(term, poly_pow_linear(i, d[i] - (j if i == l else 0), mod), mod)
        out = poly_add(out, term, mod)
    return poly_trim(out, mod)


def evaluate(f, q):
    """f(q) as a Fraction, for f over Z."""
    q = Fraction(q)
    total = Fraction(0)
    for j, c in f.laurent.items():
        total += c * q ** j
    for (l, j), c in f.poles.items():
        total += c * (l + q) ** (-j)
    return total


def unit_value(h, q):
    q = Fraction(q)
    out = Fraction(1)
    for i, e in enumerate(h):
        out *= (i + q) ** e
    return out


def matrix(g, q):
    """((u, f), (0, 1)) at x = q, with u the unit monomial of the height vector."""
    return ((unit_value(g.h, q), evaluate(g.f, q)), (Fraction(0), Fraction(1)))


def matmul(a, b):
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2))
        for i in range(2)
    )

"""End-to-end acceptance checks, one summary line per criterion (see the terminal summary)."""

import random
import time

from lamplighter import an_ring, cayley
from lamplighter.an_ring import INF, AnContext, AnElement, from_sequences, mul_shift, pole_sequence, random_element, seq_a, x_sequence
from lamplighter.cayley import cayley_ball, export, hn_ball, two_cell_report, verify_iso, verify_relators
from lamplighter.errors import NotInvertibleError
from lamplighter.group_gamma import GammaGroup
from lamplighter.lamp2 import HalfPlane, config_from_poly, pascal_convert, propagate, triangle_move
from lamplighter.ring import Z, Zmod
from lamplighter.trees import TreeAddress, phi, phi_inv
from lamplighter.words import format_word

ISO_CONFIGS = [
    (1, Zmod(2), 4, None),
    (1, Zmod(3), 3, None),
    (2, Zmod(2), 3, None),
    (2, Zmod(3), 2, None),
    (3, Zmod(5), 2, None),
    (1, Z, 3, 2),
    (2, Z, 2, 2),
]


def _name(n, ring, radius=None, bound=None):
    extra = f", |r|<={bound}" if bound else ""
    return f"Gamma_{n}({ring}{extra})" + (f" r={radius}" if radius is not None else "")


def check(record, label, passed, detail=""):
    record(label, passed, detail)
    assert passed, detail


def test_c01_golden_rank_one_word(record):
    G = GammaGroup(1, Zmod(2))
    want = G.element(AnElement(G.ctx, {-4: 1, 0: 1, 1: 1, 3: 1}, {}), (5,))
    words = ["t^-4 a t^4 a t a t^2 a t^2", "a t^-1 a t^4 a t^-7 a t^3 a t^2 a t^4"]
    ok = all(G.eval_word(w) == want for w in words)
    best = float("inf")
    for _ in range(20):
        start = time.perf_counter()
        G.eval_word(words[0])
        best = min(best, time.perf_counter() - start)
    check(record, "1 rank-1 golden word", ok and best < 1e-3, f"exact={ok}, best eval {best * 1e6:.0f} us")


def test_c02_golden_rank_two_vertex(record):
    G = GammaGroup(2, Z)
    f_hat = from_sequences(G.ctx, (3, 1, 0, 2), (11, 3, 1), (-6, -4, -1, -1))
    v = phi(G, G.element(mul_shift(f_hat, (1, 2)), (1, 2)))
    want = (TreeAddress((5, 3, 4, 2), -3), TreeAddress((18, 5, 1), 1), TreeAddress((2, 3, 0, 1), 2))
    check(record, "2 rank-2 golden vertex", v.coords == want, str(v))


def test_c03_isomorphism(record):
    bad, times = [], []
    for n, ring, radius, bound in ISO_CONFIGS:
        start = time.perf_counter()
        rep = verify_iso(GammaGroup(n, ring), radius, bound)
        took = time.perf_counter() - start
        times.append(f"{_name(n, ring, radius, bound)} {took:.1f}s")
        if not rep.passed or took >= 60:
            bad.append(f"{_name(n, ring, radius, bound)}: {rep.violation_count} violations, {took:.1f}s")
    check(record, "3 verify_iso matrix", not bad, "; ".join(bad) or ", ".join(times))


def test_c04_root_degree(record):
    bad = []
    for n, ring, _, _ in ISO_CONFIGS:
        if not ring.is_finite:
            continue
        G = GammaGroup(n, ring)
        want = (n + 1) * n * ring.size
        C, H = cayley_ball(G, 1), hn_ball(G, 1)
        got = (C.degree(C.root), H.degree(H.root))
        if got != (want, want):
            bad.append(f"{_name(n, ring)}: {got} != {want}")
    check(record, "4 root degree (n+1)n|R|", not bad, "; ".join(bad) or "all finite configurations")


def test_c05_relators(record, monkeypatch):
    families = [
        (1, Z, ["gamma1-i", "gamma1-ii", "gamma1-iii"]),
        (1, Zmod(2), ["gamma1-2"]),
        (1, Zmod(3), ["gamma1-m"]),
        (1, Zmod(4), ["gamma1-m"]),
        (2, Z, ["gamma2-i", "gamma2-ii", "gamma2-iii", "cayley-complex"]),
    ]
    failures = total = 0
    for n, ring, pids in families:
        G = GammaGroup(n, ring)
        for pid in pids:
            rep = verify_relators(G, pid, 4)
            failures += rep.violation_count
            total += rep.stats["relators"]

    original = an_ring.times_linear_pole
    monkeypatch.setattr(
        an_ring,
        "times_linear_pole",
        lambda i, l, j, ring: [(r, k, c + 1) if (r, k) == (l, j) else (r, k, c) for r, k, c in original(i, l, j, ring)],
    )
    cayley._group.cache_clear()
    cayley._letters.cache_clear()
    try:
        mutant = verify_relators(GammaGroup(2, Z), "gamma2-iii", 4).violation_count
    finally:
        monkeypatch.undo()
        cayley._group.cache_clear()
        cayley._letters.cache_clear()
    detail = f"{total} relators, {failures} failures; mutant rule gives {mutant} failures"
    check(record, "5 relator suites + mutation", failures == 0 and mutant >= 1, detail)


TRIVIAL_WORDS = [
    "t s t^-1 s^-1",
    "s a s^-1 t a^-1 t^-1 a^-1",
    "a t a t^-1 a^-1 t a^-1 t^-1",
    "a s a s^-1 a^-1 s a^-1 s^-1",
    "a a^-1",
    "s^-1 s",
]


def test_c06_normal_form(record):
    """Half the words are spliced with trivial subwords so that equal elements actually occur."""
    G = GammaGroup(2, Z)
    rng = random.Random(2024)
    letters = ["a", "a^-1", "s", "s^-1", "t", "t^-1"]
    words = []
    for _ in range(1000):
        w = [rng.choice(letters) for _ in range(rng.randint(0, 12))]
        words.append(" ".join(w))
        cut = rng.randint(0, len(w))
        words.append(" ".join(w[:cut] + [rng.choice(TRIVIAL_WORDS)] + w[cut:]))
    by_elem, by_nf = {}, {}
    bad = 0
    for w in words:
        g = G.eval_word(w)
        nf = G.normal_form(g)
        if G.eval_word(nf) != g:
            bad += 1
        by_elem.setdefault(g, set()).add(format_word(nf))
        by_nf.setdefault(format_word(nf), set()).add(g)
    bad += sum(len(s) > 1 for s in by_elem.values()) + sum(len(s) > 1 for s in by_nf.values())
    detail = f"{len(words)} words, {len(by_elem)} distinct elements, {bad} discrepancies"
    check(record, "6 normal-form uniqueness", bad == 0, detail)


def test_c07_oracle_triangle(record):
    bad, samples = 0, 0
    for ring in (Z, Zmod(2), Zmod(5)):
        ctx = AnContext(2, ring)
        rng = random.Random(7 + (ring.modulus or 0))
        for _ in range(500):
            f_hat = random_element(ctx, rng, terms=8)
            h = (rng.randint(-6, 6), rng.randint(-6, 6))
            f = mul_shift(f_hat, h)
            board = config_from_poly(f)
            for _ in range(6):
                board = triangle_move(board, rng.randint(-5, 5), rng.randint(-5, 5), rng.randint(-2, 2), ring)
            planes = [HalfPlane(INF, h[0] + h[1]), HalfPlane(0, h[0] - 1), HalfPlane(1, h[1] - 1)]
            bs = [x_sequence(f_hat), pole_sequence(f_hat, 0), pole_sequence(f_hat, 1)]
            samples += 1
            for star, hp, b, m in zip((INF, 0, 1), planes, bs, (h[1], h[1], h[0])):
                if not propagate(board, hp, 0, ring) == seq_a(f, h, star) == pascal_convert(b, m, star, ring):
                    bad += 1
    check(record, "7 oracle triangle", bad == 0, f"{samples} samples x 3 half-planes, {bad} disagreements")


def test_c08_phi_bijection(record):
    bad = []
    for n, ring, _, _ in ISO_CONFIGS:
        G = GammaGroup(n, ring)
        rng = random.Random(n * 31 + (ring.modulus or 0))
        misses = 0
        for _ in range(1000):
            g = G.element(random_element(G.ctx, rng), [rng.randint(-6, 6) for _ in range(n)])
            misses += phi_inv(G, phi(G, g)) != g
        if misses:
            bad.append(f"{_name(n, ring)}: {misses}")
    check(record, "8 phi bijection round trips", not bad, "; ".join(bad) or f"1000 per configuration x {len(ISO_CONFIGS)}")


def test_c09_two_cells(record):
    start = time.perf_counter()
    rep = two_cell_report(GammaGroup(2, Z), 2, 2)
    took = time.perf_counter() - start
    stats = ", ".join(f"{k}={v}" for k, v in rep.stats.items())
    check(record, "9 two-cell check", rep.passed, f"{stats}, {took:.1f}s" if rep.passed else rep.to_text())


def test_c10_hypothesis(record):
    seen = []
    for n, ring in ((3, Zmod(2)), (4, Zmod(6))):
        try:
            GammaGroup(n, ring)
            seen.append(None)
        except NotInvertibleError as exc:
            seen.append((exc.value, str(exc)))
    ok_three = GammaGroup(3, Zmod(3)).ctx.n == 3
    ok = all(s is not None and s[0] == 2 and "2" in s[1] for s in seen) and ok_three
    check(record, "10 invertibility hypothesis", ok, "; ".join(str(s) for s in seen))


def test_c11_determinism(record):
    G = GammaGroup(2, Zmod(3))
    diffs = []
    for build in (cayley_ball, hn_ball):
        runs = [build(G, 2), build(G, 2), build(G, 2, workers=2)]
        for fmt in ("dot", "graphml", "edge-csv", "json"):
            texts = {export(g, fmt) for g in runs}
            if len(texts) != 1:
                diffs.append(f"{build.__name__}/{fmt}")
    reports = [
        (lambda w: verify_iso(G, 2, workers=w).dumps()),
        (lambda w: two_cell_report(GammaGroup(2, Z), 1, 1, workers=w).dumps()),
    ]
    for i, make in enumerate(reports):
        if len({make(1), make(1), make(2)}) != 1:
            diffs.append(f"report {i}")
    check(record, "11 determinism", not diffs, ", ".join(diffs) or "exports and reports byte-identical, serial and 2 workers")

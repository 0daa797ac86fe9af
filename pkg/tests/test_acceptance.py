"""Exit criteria. Everything is exact integer arithmetic: every tolerance is zero violations."""
import itertools
import random

import pytest

from po2.element import (
    ValidationError,
    dom_holes,
    evaluate,
    n_alpha,
    ran_holes,
    semantic_eq,
    validate,
)
from po2.green import d_class, d_related, h_class_size, h_related, l_related, r_related
from po2.oracle import (
    grid_project,
    mutate,
    pointwise_compose,
    random_element,
    random_idempotent,
    raw_grid_verdict,
    raw_verdict_grid_size,
)
from po2.ops import (
    alpha_h,
    alpha_v,
    compose,
    compose_all,
    identity,
    is_idempotent,
    is_idempotent_by_witness,
    is_unit,
    transpose_conjugate,
    varpi,
)
from po2.poset import Point, flip_point, flip_set, leq, strictly_less
from po2.semilattice import from_holes, holes_of, meet

from conftest import record

BASE_SEED = 900_000


def seeded(n, offset=0):
    out = []
    for s in range(BASE_SEED + offset, BASE_SEED + offset + n):
        out.append(random_element(s, random.Random(s).randint(0, 6)))
    return out


@pytest.fixture(scope="module")
def thousand():
    return seeded(1000)


def _report(k, title, violations, detail=""):
    record(k, title, violations, detail)
    assert violations == 0, f"criterion {k}: {violations} violations {detail}"


def test_01_normal_form_invariants(thousand):
    m = 30
    bad = 0
    for a in thousand:
        ev = flip_point if a.flipped else (lambda p: p)
        n = n_alpha(a)
        table = grid_project(a, m).table
        assert len(table) == m * m - sum(1 for p in dom_holes(a) if p[0] <= m and p[1] <= m)
        for p, q in table.items():
            bad += strictly_less(p, q)
            bad += strictly_less(flip_point(p), q)
            bad += not leq(q, ev(p))
            if p[0] >= n and p[1] >= n:
                bad += q != ev(p)
        if n > 1:
            # minimality: something above (n-1, n-1) is not yet settled
            big = max(m, 2 * a.bound + 2)
            bad += all(q == ev(p) for p, q in grid_project(a, big).table.items() if min(p) >= n - 1)
    _report(1, "normal-form invariants (1000 elements, grid 30)", bad)


def test_02_band_nesting():
    m, nmax = 30, 8
    preserve, flips = [], []
    s = 0
    while len(preserve) < 500:
        a = random_element(BASE_SEED + 5000 + s, random.Random(s).randint(1, 6))
        s += 1
        (flips if a.flipped else preserve).append(a)
    flips += [compose(a, varpi()) for a in preserve]
    bad = 0
    checked = 0
    for a in preserve + flips:
        table = grid_project(a, m).table
        first_h, second_h = (0, 1) if a.flipped else (1, 0)
        for n in range(1, nmax + 1):
            for p, q in table.items():
                if p[1] <= n:  # H^1 .. H^n
                    bad += q[first_h] > n
                if p[0] <= n:  # V^1 .. V^n
                    bad += q[second_h] > n
                checked += 1
        # first row goes to first row (or column) exactly when first column goes to first column (or row)
        row1 = {q for p, q in table.items() if p[1] == 1}
        col1 = {q for p, q in table.items() if p[0] == 1}
        if a.flipped:
            bad += not (all(q[0] == 1 for q in row1) and all(q[1] == 1 for q in col1))
        else:
            bad += not (all(q[1] == 1 for q in row1) and all(q[0] == 1 for q in col1))
        # band traces of dom and ran miss only finitely many points (all inside the window square)
        inner = m - a.core.max_shift
        images = set(table.values())
        for n in range(1, nmax + 1):
            for t in range(a.bound, inner + 1):
                for pt in ((n, t), (t, n)):
                    bad += pt not in table
                    bad += pt not in images
    _report(2, "band nesting (500 preserve + flipped, n <= 8)", bad, f"checks={checked}")


def test_03_range_holes_bounded(thousand):
    bad = sum(len(ran_holes(a)) > len(dom_holes(a)) for a in thousand)
    for l in range(1, 6):
        a = alpha_v(l)
        bad += (len(ran_holes(a)), len(dom_holes(a))) != (0, l)
    _report(3, "|ran holes| <= |dom holes| (1000 elements, alpha_V^1..5 exact)", bad)


def test_04_oracle_equivalence():
    m = 40
    els = seeded(1000, offset=20_000)
    bad = 0
    for a, b in zip(els[:500], els[500:]):
        s = max(a.core.max_shift, b.core.max_shift)
        lhs = grid_project(compose(a, b), m).table
        rhs = pointwise_compose(grid_project(a, m), grid_project(b, m)).table
        bad += sum(lhs[p] != rhs[p] for p in lhs.keys() & rhs.keys())
        inner = m - s
        sub = lambda t: {p for p in t if p[0] <= inner and p[1] <= inner}
        bad += sub(lhs) != sub(rhs)
    _report(4, "compose vs pointwise oracle (500 pairs, grid 40)", bad)


def test_05_units(thousand):
    bad = 0
    for a in thousand:
        u = is_unit(a)
        bad += u != (not dom_holes(a))
        bad += u != (semantic_eq(a, identity()) or semantic_eq(a, varpi()))
    i, w = identity(), varpi()
    table = {(x, y): compose(g, h) for (x, g), (y, h) in itertools.product((("I", i), ("w", w)), repeat=2)}
    expected = {("I", "I"): i, ("I", "w"): w, ("w", "I"): w, ("w", "w"): i}
    bad += sum(not semantic_eq(table[k], expected[k]) for k in expected)
    _report(5, "units {I, varpi} ~ Z2", bad)


def _directed_corpus():
    corpus = [identity(), varpi()]
    for l in range(1, 6):
        corpus += [alpha_v(l), alpha_h(l)]
    rng = random.Random(BASE_SEED + 6)
    idems = [from_holes({(1, 1)}), from_holes({(1, 2), (2, 1)}), from_holes({(5, 1)}), from_holes({(2, 3)})]
    while len(idems) < 20:
        idems.append(random_idempotent(rng, side=7, max_holes=5))
    corpus += idems
    corpus += [compose(e, varpi()) for e in idems]
    return corpus


def test_06_idempotent_criteria(thousand):
    corpus = _directed_corpus()
    assert len(corpus) == 12 + 20 + 20
    bad = 0
    for a in thousand + corpus:
        bad += is_idempotent(a) != is_idempotent_by_witness(a)
    idem_count = sum(is_idempotent(a) for a in thousand + corpus)
    _report(6, "idempotent checkers agree (1000 random + 52 directed)", bad, f"idempotents={idem_count}")


def test_07_semilattice():
    rng = random.Random(BASE_SEED + 7)
    bad = 0
    for _ in range(300):
        e1, e2, e3 = (random_idempotent(rng) for _ in range(3))
        bad += holes_of(meet(e1, e2)) != holes_of(e1) | holes_of(e2)
        bad += not semantic_eq(meet(e1, e2), meet(e2, e1))
        bad += not semantic_eq(meet(meet(e1, e2), e3), meet(e1, meet(e2, e3)))
        bad += not semantic_eq(meet(e1, e1), e1)
        bad += not semantic_eq(meet(e1, identity()), e1)
        bad += (holes_of(e1) == holes_of(e2)) != semantic_eq(e1, e2)
    _report(7, "idempotents ~ finite subsets under union (300 pairs)", bad)


def _sampled_closure(size=50):
    out = []
    s = 0
    while len(out) < size:
        a = random_element(BASE_SEED + 8000 + s, random.Random(s).randint(1, 6))
        s += 1
        for m in d_class(a):
            if not any(semantic_eq(m, x) for x in out):
                out.append(m)
    return out


def test_08_green_structure():
    bad = 0
    w = varpi()
    els = seeded(500, offset=30_000)
    rng = random.Random(BASE_SEED + 8)
    idems = [random_idempotent(rng, side=4, max_holes=4) for _ in range(100)]
    idems += [from_holes({(1, 2), (2, 1)}), from_holes({(3, 3)}), from_holes({(1, 4), (4, 1), (2, 2)})]
    for a in els + idems:
        dc = d_class(a)
        sym = semantic_eq(a, compose_all(w, a, w))
        bad += len(dc) not in (2, 4)
        bad += (len(dc) == 2) != sym
        bad += (h_class_size(a) == 2) != sym
        for mu, nu in itertools.product((identity(), w), repeat=2):
            bad += not d_related(a, compose_all(mu, a, nu))
    for e in idems:
        dom_sym = dom_holes(e) == flip_set(dom_holes(e))
        bad += h_class_size(e) != (2 if dom_sym else 1)
        bad += len(d_class(e)) != (2 if dom_sym else 4)

    closure = _sampled_closure(50)
    n = len(closure)
    rels = {}
    for name, rel in (("l", l_related), ("r", r_related), ("h", h_related), ("d", d_related)):
        rels[name] = [[rel(x, y) for y in closure] for x in closure]
    for name, mat in rels.items():
        bad += sum(not mat[i][i] for i in range(n))
        bad += sum(mat[i][j] != mat[j][i] for i in range(n) for j in range(n))
        for i, j in itertools.product(range(n), repeat=2):
            if mat[i][j]:
                bad += sum(mat[j][k] and not mat[i][k] for k in range(n))
    for i, j in itertools.product(range(n), repeat=2):
        if rels["h"][i][j]:
            bad += not (rels["l"][i][j] and rels["r"][i][j])
        if rels["l"][i][j] or rels["r"][i][j]:
            bad += not rels["d"][i][j]
    _report(8, "Green structure (500 elements, closure of 50)", bad, f"closure={n}")


def _subset(rng, pts):
    pts = sorted(pts)
    return set(rng.sample(pts, rng.randint(0, len(pts)))) if pts else set()


def test_09_one_sided_identities():
    rng = random.Random(BASE_SEED + 9)
    els = seeded(300, offset=40_000)
    w = varpi()
    bad = 0
    for a in els:
        s = _subset(rng, dom_holes(a))
        s2 = _subset(rng, ran_holes(a))
        bad += not semantic_eq(compose(from_holes(s), a), a)
        bad += not semantic_eq(compose(a, from_holes(s2)), a)
        # acts as the swap on ran a / on the flipped domain
        bad += not semantic_eq(compose(a, compose(from_holes(s2), w)), compose(a, w))
        bad += not semantic_eq(compose(compose(from_holes(flip_set(s)), w), a), compose(w, a))
    _report(9, "one-sided identities and swaps (300 elements)", bad)


def test_10_validator_soundness():
    rng = random.Random(BASE_SEED + 10)
    bad = 0
    rejected = 0
    for _ in range(500):
        a = random_element(rng.randrange(10**9), rng.randint(1, 6))
        if a.bound == 1:
            a = compose(a, alpha_v(rng.randint(1, 4)))
        raw, _kind = mutate(a, rng)
        try:
            validate(raw)
            verdict = True
        except ValidationError:
            verdict = False
            rejected += 1
        bad += verdict != raw_grid_verdict(raw, raw_verdict_grid_size(raw))[0]
    _report(10, "validator vs grid oracle on 500 mutations", bad, f"rejected={rejected}")

"""Acceptance criteria, one test each; the terminal summary prints a
PASS/FAIL line per criterion (see conftest.py)."""

import random
import time
from itertools import combinations, product

import pytest

from sbgraph import SignedBiGraph, chromatic_number, exists_k_coloring, reduce_multigraph
from sbgraph.cli import main
from sbgraph.core import is_isomorphic
from sbgraph.derivations import check, gen_lemma_bicomplete, gen_lemma_nabla, parse_script, serialize_script
from sbgraph.fuzz import OPS, fuzz_closure, random_bigraph, random_multigraph
from sbgraph.hajos import decompose_sb3_prime, run_bindings, sb3_prime
from sbgraph.sbg_format import parse_sbg, serialize_sbg
from sbgraph.signatures import is_antibalanced, is_balanced, sign_product, switch_set
from sbgraph.structure import is_nabla_complete

from oracles import brute_chromatic, brute_colorable

SEED = 20261015
# Every SBG/SBD text produced while running the criteria below; checked last.
EMITTED: list[tuple[str, str]] = []


def emit_graph(g):
    EMITTED.append(("sbg", serialize_sbg(g)))


def emit_script(s):
    EMITTED.append(("sbd", serialize_script(s)))


@pytest.mark.criterion("1. chi((K_n,+)) = n for n = 2..7, < 30 s")
def test_chi_complete_positive():
    t = time.perf_counter()
    for n in range(2, 8):
        g = SignedBiGraph.complete(n, "+")
        emit_graph(g)
        assert chromatic_number(g) == n
    assert time.perf_counter() - t < 30


@pytest.mark.criterion("2. chi((K_n,pm)) = 2n-2 for n = 2..5, < 60 s")
def test_chi_complete_bisigned():
    t = time.perf_counter()
    for n in range(2, 6):
        g = SignedBiGraph.complete(n, "pm")
        emit_graph(g)
        assert chromatic_number(g) == 2 * n - 2
    assert time.perf_counter() - t < 60


@pytest.mark.criterion("3. closure: 500 trials/op, n<=7, q in 2..5, zero violations, < 10 min")
def test_closure_suite():
    t = time.perf_counter()
    for q in (2, 3, 4, 5):
        summary = fuzz_closure(7, q, 500, seed=SEED)
        for op in OPS:
            st = summary.stats[op]
            assert st.trials >= 500, (q, op, st)
            assert st.violations == 0, (q, op, st.counterexample)
    assert time.perf_counter() - t < 600


@pytest.mark.criterion("4. sb3_prime equals its sb3/sb4 decomposition on 200 instances")
def test_sb3_prime_decomposition():
    rng = random.Random(SEED)
    done = 0
    while done < 200:
        g1 = random_bigraph(rng, rng.randint(2, 6), prefix="a")
        g2 = random_bigraph(rng, rng.randint(2, 6), prefix="b")
        if not g1.size() or not g2.size():
            continue
        e1, e2 = rng.choice(list(g1.edges())), rng.choice(list(g2.edges()))
        e1 = tuple(e1) if rng.random() < 0.5 else (e1.v, e1.u, e1.sign)
        e2 = tuple(e2) if rng.random() < 0.5 else (e2.v, e2.u, e2.sign)
        direct = sb3_prime(g1, e1, g2, e2).graph
        composed = run_bindings(decompose_sb3_prime(g1, e1, g2, e2), {"A": g1, "B": g2})
        assert direct == composed, (g1, e1, g2, e2)
        if done < 5:
            emit_graph(direct)
        done += 1


def _triangle_rule(g, want):
    return all(sign_product(g, [(a, b, next(iter(g.signs(a, b)))), (b, c, next(iter(g.signs(b, c)))),
                                (a, c, next(iter(g.signs(a, c))))]) == want
               for a, b, c in combinations(g.vertices, 3))


@pytest.mark.criterion("5. triangle criterion = balance/antibalance on just-complete n=4,5, < 60 s")
def test_triangle_criterion():
    t = time.perf_counter()
    for n in (4, 5):
        names = [f"v{i}" for i in range(1, n + 1)]
        pairs = list(combinations(names, 2))
        count = 0
        for signs in product((1, -1), repeat=len(pairs)):
            g = SignedBiGraph(names, [(u, v, s) for (u, v), s in zip(pairs, signs)])
            assert is_balanced(g) == _triangle_rule(g, 1)
            assert is_antibalanced(g) == _triangle_rule(g, -1)
            count += 1
        assert count == 2 ** len(pairs)
    assert time.perf_counter() - t < 60


@pytest.mark.criterion("6. nabla construction r=1,2 accepted with colorability checks, < 5 min")
def test_lemma_nabla():
    t = time.perf_counter()
    for r in (1, 2):
        script = gen_lemma_nabla(r)
        emit_script(script)
        report = check(script, verify_colorability=True)
        assert report.accepted, report.summary()
        assert not report.invariant_violation
        final = report.final
        emit_graph(final)
        assert final.order() == 3 * r
        assert is_nabla_complete(final) is not None
        if r == 1:
            assert brute_chromatic(final) == 3
    assert time.perf_counter() - t < 300


@pytest.mark.criterion("7. bicomplete construction r=3,4 accepted, final ~ (K_r,pm), < 5 min")
def test_lemma_bicomplete():
    t = time.perf_counter()
    for r in (3, 4):
        script = gen_lemma_bicomplete(r)
        emit_script(script)
        report = check(script)
        assert report.accepted, report.summary()
        emit_graph(report.final)
        assert is_isomorphic(report.final, SignedBiGraph.complete(r, "pm"))
    assert time.perf_counter() - t < 300


@pytest.mark.criterion("8. switching preserves chi, 200 trials, n<=6")
def test_switch_invariance():
    rng = random.Random(SEED)
    for _ in range(200):
        g = random_bigraph(rng, rng.randint(1, 6))
        s = [v for v in g.vertices if rng.random() < 0.5]
        h = switch_set(g, s)
        assert chromatic_number(g) == chromatic_number(h), (g, s)


@pytest.mark.criterion("9. exists_k_coloring = k^n enumeration, 1000 patterns on <=4 vertices, k<=5")
def test_coloring_vs_enumeration():
    rng = random.Random(SEED)
    for _ in range(1000):
        n = rng.randint(1, 4)
        names = [f"v{i}" for i in range(1, n + 1)]
        edges = []
        for u, v in combinations(names, 2):
            m = rng.randrange(4)
            edges += [(u, v, s) for s, bit in ((1, 1), (-1, 2)) if m & bit]
        g = SignedBiGraph(names, edges)
        for k in range(1, 6):
            c = exists_k_coloring(g, k)
            assert (c is not None) == brute_colorable(names, edges, k), (g, k)


@pytest.mark.criterion("10. multigraph reduction preserves k-colorability, 300 multigraphs, k<=6")
def test_multigraph_reduction():
    rng = random.Random(SEED)
    blocked = dict.fromkeys(range(1, 7), 0)
    for _ in range(300):
        # mixed densities so that every k up to 6 sees non-colorable inputs
        names, edges = random_multigraph(rng, rng.randint(1, 5), max_edges=rng.choice((14, 40, 60, 100)))
        g = reduce_multigraph(names, edges)
        for k in range(1, 7):
            expected = brute_colorable(names, edges, k)
            assert (exists_k_coloring(g, k) is not None) == expected, (edges, k)
            blocked[k] += not expected
    assert all(blocked.values()), blocked


@pytest.mark.criterion("11. parse(serialize(x)) == x for every emitted SBG/SBD")
def test_round_trip_everything_emitted(tmp_path, capsys):
    for cmd in (["gen", "lemma-nabla", "2"], ["gen", "lemma-bicomplete", "4"]):
        assert main(cmd) == 0
        EMITTED.append(("sbd", capsys.readouterr().out))
    k2 = tmp_path / "K2pm.sbg"
    k2.write_text(serialize_sbg(SignedBiGraph.complete(2, "pm")))
    assert main(["search", str(k2), "--q", "2", "--steps", "2"]) == 0
    EMITTED.append(("sbd", capsys.readouterr().out))
    k3 = tmp_path / "K3.sbg"
    k3.write_text(serialize_sbg(SignedBiGraph.complete(3)))
    assert main(["apply", str(k3), "sb4", "v2"]) == 0
    EMITTED.append(("sbg", capsys.readouterr().out))

    assert len(EMITTED) >= 20
    for kind, text in EMITTED:
        if kind == "sbg":
            assert serialize_sbg(parse_sbg(text)) == text
        else:
            script = parse_script(text, base_dir=tmp_path)
            assert serialize_script(script) == text
            assert parse_script(serialize_script(script), base_dir=tmp_path) == script

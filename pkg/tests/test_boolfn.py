import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from agpc.boolfn import (AffineMap, BFTTError, MaterializationBudgetExceeded, TruthTable,
                         VectorialFunction, anf, anf_text, anf_to_table, autocorrelation,
                         correlation_immunity_by_fixing, derivative, derivative_weights, evaluate,
                         materialize, mm_build, mm_exact_resiliency, nonlinearity, parse_anf,
                         pc_check, pc_degree, pc_order_check, pc_order_check_bruteforce,
                         read_bftt, resiliency_order, vectorial_criteria, walsh_spectrum,
                         write_bftt)
from agpc.boolfn.bftt import dumps, loads

AND = TruthTable.from_string("0001")


def parity(n):
    return TruthTable.from_function(n, lambda x: bin(x).count("1"))


def x(n, j):
    return TruthTable.variable(n, j)


def assert_parseval(w, n):
    assert int((np.asarray(w) ** 2).sum()) == 4 ** n


def random_affine_mm(rng, r, s, m=1):
    return mm_build([AffineMap(rng.integers(0, 2, (r, s)), rng.integers(0, 2, r)) for _ in range(m)])


def test_walsh_examples():
    w = walsh_spectrum(TruthTable.zero(3))
    assert w[0] == 8 and not w[1:].any()
    w = walsh_spectrum(x(3, 1))
    assert w[1] == 8 and np.count_nonzero(w) == 1
    assert walsh_spectrum(AND).tolist() == [2, 2, 2, -2]
    for t in (AND, x(3, 1), parity(5)):
        assert_parseval(walsh_spectrum(t), t.n)


def test_walsh_matches_definition():
    rng = np.random.default_rng(5)
    t = TruthTable(rng.integers(0, 2, 64))
    w = walsh_spectrum(t)
    for u in range(64):
        direct = sum((-1) ** (t(v) ^ (bin(u & v).count("1") & 1)) for v in range(64))
        assert w[u] == direct
    assert w[0] == 64 - 2 * t.weight


def test_resiliency_examples():
    assert resiliency_order(parity(3)) == 2
    assert resiliency_order(AND) == -1
    assert resiliency_order(TruthTable.variable(2, 1)) == 0


def test_resiliency_walsh_vs_definition():
    rng = np.random.default_rng(11)
    for _ in range(40):
        # half structured so that orders >= 0 show up
        if rng.random() < 0.5:
            t = random_affine_mm(rng, 4, 3).combination(1)
        else:
            t = TruthTable(rng.integers(0, 2, 128))
        w = walsh_spectrum(t)
        assert_parseval(w, 7)
        assert resiliency_order(t, w) == correlation_immunity_by_fixing(t)


def test_derivative_examples():
    assert derivative(AND, 0) == TruthTable.zero(2)
    assert derivative(AND, 0b01) == x(2, 2)
    p = parity(4)
    for a in range(1, 16):
        d = derivative(p, a)
        assert np.all(d.bits == bin(a).count("1") % 2)


def test_derivative_balance_matches_autocorrelation():
    rng = np.random.default_rng(2)
    for n in (5, 8, 10):
        t = TruthTable(rng.integers(0, 2, 1 << n))
        r = autocorrelation(t)
        ws = derivative_weights(t, range(1 << n))
        assert np.array_equal(r, (1 << n) - 2 * ws)
        for a in range(0, 1 << n, 7):
            assert ws[a] == derivative(t, a).weight


def test_pc_examples():
    assert pc_check(AND, 2) and pc_check(AND, 2, "derivative")
    assert not pc_check(x(2, 1), 1)
    bent = anf_to_table(parse_anf("x1x2+x3x4"), 4)
    assert pc_check(bent, 4) and pc_degree(bent) == 4


def test_pc_methods_agree():
    rng = np.random.default_rng(8)
    for n in (6, 7, 9):
        for _ in range(5):
            F = random_affine_mm(rng, n // 2, n - n // 2)
            t = F.combination(1)
            for l in range(1, n + 1):
                assert pc_check(t, l) == pc_check(t, l, "derivative")


def test_pc_bent_equivalence():
    rng = np.random.default_rng(9)
    for _ in range(20):
        F = mm_build([AffineMap(rng.integers(0, 2, (3, 3)), rng.integers(0, 2, 3))])
        t = F.combination(1)
        assert pc_check(t, 6) == nonlinearity(t)[1]


def test_pc_order_examples():
    t = TruthTable(np.random.default_rng(1).integers(0, 2, 32))
    for l in (1, 2, 3):
        assert pc_order_check(t, l, 0) == pc_check(t, l)
    assert pc_order_check(AND, 1, 1) is False
    assert pc_order_check(parity(3), 1, 1) is False
    assert pc_order_check_bruteforce(parity(3), 1, 1) is False
    assert pc_order_check(TruthTable.zero(12), 1, 6, budget=10) is None


def test_pc_order_matches_bruteforce():
    rng = np.random.default_rng(4)
    hits = 0
    for _ in range(25):
        r, s = (int(v) for v in rng.integers(2, 5, 2))
        t = random_affine_mm(rng, r, s).combination(1)
        for k in range(0, 3):
            for l in (1, 2, 3):
                got = pc_order_check(t, l, k)
                assert got == pc_order_check_bruteforce(t, l, k)
                hits += got
    assert hits > 0


def test_mm_build_examples():
    F = mm_build([AffineMap(np.eye(1), None)])
    assert materialize(F)[0] == AND
    F = mm_build([AffineMap([[1], [1]], None)])
    expect = TruthTable.from_function(3, lambda i: ((i & 1) ^ ((i >> 1) & 1)) & (i >> 2))
    assert F.combination(1) == expect
    with pytest.raises(ValueError):
        mm_build([AffineMap(np.eye(2), None), AffineMap(np.eye(3), None)])


def test_evaluate_matches_tables():
    rng = np.random.default_rng(7)
    hs = [TruthTable(rng.integers(0, 2, 16)), None]
    F = mm_build([AffineMap(rng.integers(0, 2, (5, 4)), rng.integers(0, 2, 5)) for _ in range(2)], hs)
    tables = materialize(F)
    assert materialize(F) is tables
    for xv in rng.integers(0, 1 << 9, 100):
        assert evaluate(F, int(xv)) == tuple(t(int(xv)) for t in tables)
    G = VectorialFunction.from_tables(tables)
    assert G.combination(3) == F.combination(3)


def test_materialize_budget():
    F = mm_build([AffineMap(np.zeros((14, 14)), None)])
    with pytest.raises(MaterializationBudgetExceeded):
        materialize(F, budget=26)


def test_mm_exact_resiliency_examples():
    r, s = 4, 2
    F = mm_build([AffineMap(np.zeros((r, s)), np.ones(r))])
    assert mm_exact_resiliency(F.structure, 1) == r - 1
    F = mm_build([AffineMap(np.zeros((r, s)), np.zeros(r))])
    assert mm_exact_resiliency(F.structure, 1) == -1


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 8), st.integers(1, 8), st.integers(0, 2 ** 32 - 1))
def test_mm_exact_resiliency_matches_tables(r, s, seed):
    rng = np.random.default_rng(seed)
    F = random_affine_mm(rng, r, s, m=2)
    for a in (1, 2, 3):
        assert mm_exact_resiliency(F.structure, a) == resiliency_order(F.combination(a))


def test_mm_resiliency_lemma():
    rng = np.random.default_rng(12)
    for _ in range(30):
        F = random_affine_mm(rng, 6, 3, m=2)
        for a in (1, 2, 3):
            phi, _ = F.structure.combination(a)
            lightest = min(bin(int(v)).count("1") for v in phi.image_table())
            assert resiliency_order(F.combination(a)) >= lightest - 1


def test_mm_nonconstant_h_falls_back():
    rng = np.random.default_rng(3)
    h = TruthTable(rng.integers(0, 2, 8))
    F = mm_build([AffineMap(rng.integers(0, 2, (4, 3)), None)], [h])
    assert mm_exact_resiliency(F.structure, 1) == resiliency_order(F.combination(1))


def test_anf_examples():
    assert anf(AND) == [(1, 2)]
    assert anf_text(anf(parity(3))) == "x1+x2+x3"
    assert anf_text(anf(TruthTable.from_string("1111"))) == "1"
    assert anf_text(anf(TruthTable.zero(2))) == "0"
    rng = np.random.default_rng(0)
    t = TruthTable(rng.integers(0, 2, 256))
    m = anf(t)
    assert anf_to_table(m, 8) == t
    assert parse_anf(anf_text(m)) == m


def test_nonlinearity_examples():
    assert nonlinearity(parity(4)) == (0, False)
    assert nonlinearity(AND) == (1, True)
    assert nonlinearity(anf_to_table(parse_anf("x1x2+x3x4"), 4)) == (6, True)


def test_vectorial_criteria():
    F = VectorialFunction.from_tables([x(2, 1), x(2, 2)])
    rep = vectorial_criteria(F, l=0, k=0, t=0)
    assert [c.resiliency for c in rep.combos] == [0, 0, 1]
    assert rep.passed
    G = VectorialFunction.from_tables([AND])
    rep = vectorial_criteria(G, l=2, k=0, t=-1)
    assert rep.achieved_l(0) == 2 and rep.passed
    assert rep.to_json()["achieved"]["t"] == -1


def test_vectorial_criteria_threads_deterministic():
    rng = np.random.default_rng(6)
    F = random_affine_mm(rng, 5, 5, m=3)
    a = vectorial_criteria(F, 2, 1, 0, max_order=2).to_json()
    b = vectorial_criteria(F, 2, 1, 0, max_order=2, threads=4).to_json()
    assert a == b


def test_bftt_roundtrip(tmp_path):
    rng = np.random.default_rng(1)
    tabs = [TruthTable(rng.integers(0, 2, 8)), TruthTable(rng.integers(0, 2, 8))]
    data = dumps(tabs)
    assert data[:8] == b"BFTT0001" and data[8:16] == bytes([3, 0, 0, 0, 2, 0, 0, 0])
    assert data[16] == sum(int(b) << i for i, b in enumerate(tabs[0].bits))
    write_bftt(tmp_path / "f.bftt", tabs)
    assert read_bftt(tmp_path / "f.bftt") == tabs
    one = loads(dumps([AND]))
    assert one == [AND] and len(dumps([AND])) == 17
    for bad in (data[:-1], b"XXXX" + data[4:], data + b"\0"):
        with pytest.raises(BFTTError):
            loads(bad)

import itertools

import numpy as np
import pytest

from agpc.codes import rank
from agpc.curve import (CurveFunction, Divisor, PoleError, RationalFunction, UnsupportedPlace,
                        divisor_max, divisor_min, divisor_ops, make_curve)
from agpc.field import field_make

X_FN = CurveFunction((0, 1), (), (1,))
Y_FN = CurveFunction((), (1,), (1,))
ONE = CurveFunction((1,), (), (1,))


def all_places(C):
    return C.places_of_degree(1) + C.places_of_degree(2)


def test_rational_place_counts():
    assert len(make_curve("p1-gf4").places_of_degree(1)) == 5
    assert len(make_curve("p1-gf8").places_of_degree(1)) == 9
    E = make_curve("elliptic-gf4")
    assert len(E.places_of_degree(1)) == 9
    assert E.places_of_degree(1)[0].label == "O"


def test_degree_two_places():
    assert len(make_curve("p1-gf4").places_of_degree(2)) == 6
    assert [p.label for p in make_curve("p1-gf2").places_of_degree(2)] == ["x^2+x+1"]
    for q in (2, 4, 8):
        E = make_curve("elliptic-gf%d" % q)
        K = E.big
        n2 = 1 + sum(1 for x in K.elements() for y in K.elements()
                     if K.mul(y, y) ^ y == K.mul(K.mul(x, x), x))
        assert len(E.places_of_degree(2)) == (n2 - E.count_points(1)) // 2
    with pytest.raises(UnsupportedPlace):
        make_curve("p1-gf4").places_of_degree(3)


def test_place_labels_roundtrip():
    for name in ("p1-gf4", "elliptic-gf4", "elliptic-gf8", "p1-gf8"):
        C = make_curve(name)
        for p in all_places(C):
            assert C.parse_place(p.label) == p


def test_bad_curve_names():
    for bad in ("p1-gf6", "hyper-gf4", "elliptic-gf1"):
        with pytest.raises(ValueError):
            make_curve(bad)


def test_divisor_ops():
    C = make_curve("p1-gf4")
    P = C.places_of_degree(1)[0]
    Q = C.places_of_degree(2)[0]
    D = Divisor.of((P, 1))
    E = Divisor.of((Q, 1))
    assert divisor_ops("max", D, D) == D
    assert divisor_max([D, E]) == D + E
    assert divisor_min([D, E]) == Divisor()
    assert divisor_ops("deg", Divisor.of((P, 2), (Q, 1))) == 4
    assert divisor_ops("disjoint", D, E)
    assert not divisor_ops("is_effective", D - E)
    other = make_curve("p1-gf8").places_of_degree(1)[0]
    with pytest.raises(ValueError):
        D + Divisor.of((other, 1))


def _check_rr(C, G):
    basis = C.rr_space(G)
    assert len(basis) == G.deg() - C.genus + 1
    for f in basis:
        for p in all_places(C):
            assert C.valuation(f, p) >= -G[p]
    return basis


def _divisors(C, max_deg):
    places = all_places(C)
    for r in range(1, 3):
        for combo in itertools.combinations(places, r):
            for coeffs in itertools.product((1, 2), repeat=r):
                D = Divisor.of(*zip(combo, coeffs))
                if 2 * C.genus - 1 <= D.deg() <= max_deg:
                    yield D


def test_rr_dimension_p1():
    C = make_curve("p1-gf4")
    for G in _divisors(C, 4):
        _check_rr(C, G)
    assert C.rr_space(Divisor()) == [RationalFunction((1,), (1,))]


@pytest.mark.parametrize("name", ["elliptic-gf2", "elliptic-gf4", "elliptic-gf8"])
def test_rr_dimension_elliptic(name):
    C = make_curve(name)
    count = 0
    for G in _divisors(C, 4):
        _check_rr(C, G)
        count += 1
        if count > 60:
            break
    assert count > 0


def test_rr_p1_degree_two():
    C = make_curve("p1-gf4")
    g = C.places_of_degree(2)[0]
    basis = C.rr_space(Divisor.of((g, 1)))
    assert [f.num for f in basis] == [(1,), (0, 1), (0, 0, 1)]
    assert all(f.den == g.key[1] for f in basis)


def test_rr_elliptic_three_o():
    E = make_curve("elliptic-gf4")
    basis = E.rr_space(Divisor.of((E.origin, 3)))
    assert sorted(-E.valuation(f, E.origin) for f in basis) == [0, 2, 3]
    assert basis[0] == ONE


def test_evaluate_examples():
    C = make_curve("p1-gf4")
    zero = C.places_of_degree(1)[0]
    assert C.evaluate(RationalFunction((1,), (1,)), zero) == 1
    assert C.evaluate(RationalFunction((0, 1), (1, 1)), zero) == 0
    with pytest.raises(PoleError):
        C.evaluate(RationalFunction((1,), (0, 1)), zero)
    E = make_curve("elliptic-gf4")
    for p in E.places_of_degree(1)[1:]:
        x, y = E.point_of(p)
        assert E.evaluate(X_FN, p) == x
        assert E.evaluate(Y_FN, p) == y
    with pytest.raises(PoleError):
        E.evaluate(X_FN, E.origin)


def test_local_expansions():
    C = make_curve("p1-gf4")
    assert C.local_expansion(RationalFunction((1,), (1,)), C.places_of_degree(1)[0], 3) == (0, [1, 0, 0])
    assert C.local_expansion(RationalFunction((0, 1), (1,)), C.places_of_degree(1)[0], 2) == (1, [1, 0])
    E = make_curve("elliptic-gf4")
    v, c = E.local_expansion(X_FN, E.origin, 2)
    assert v == -2 and c[0] == 1
    v, c = E.local_expansion(Y_FN, E.origin, 2)
    assert v == -3 and c[0] == 1


def test_local_expansion_satisfies_curve_equation():
    E = make_curve("elliptic-gf8")
    from agpc.curve import series as ser
    for p in E.places_of_degree(1)[:4] + E.places_of_degree(2)[:3]:
        K, _ = E.residue_field(p)
        xs, ys = E._coordinate_series(p, 12)
        lhs = ser.add(K, ser.mul(K, ys, ys), ys)
        rhs = ser.power(K, xs, 3, 12)
        diff = ser.normalize(ser.add(K, lhs, rhs))
        assert all(ser.coefficient(diff, e) == 0 for e in range(-6, 6))


def _span_on(C, funcs, pts):
    return np.array([[C.evaluate(f, p) for p in pts] for f in funcs], dtype=np.int64)


def test_min_is_intersection_p1():
    C = make_curve("p1-gf16")
    F = C.field
    rat = C.places_of_degree(1)
    quad = C.places_of_degree(2)
    cases = [
        (Divisor.of((rat[0], 2), (quad[0], 1)), Divisor.of((rat[0], 1), (quad[1], 1))),
        (Divisor.of((rat[1], 3)), Divisor.of((rat[1], 1), (rat[2], 2))),
        (Divisor.of((quad[2], 2)), Divisor.of((quad[2], 1), (rat[3], 1))),
    ]
    for U1, U2 in cases:
        sup = (U1 + U2).support()
        pts = [p for p in rat if p not in sup]
        A = _span_on(C, C.rr_space(U1), pts)
        B = _span_on(C, C.rr_space(U2), pts)
        M = _span_on(C, C.rr_space(divisor_min([U1, U2])), pts)
        inter = rank(A, F) + rank(B, F) - rank(np.vstack([A, B]), F)
        assert rank(M, F) == inter
        assert rank(np.vstack([A, M]), F) == rank(A, F)
        assert rank(np.vstack([B, M]), F) == rank(B, F)


def test_rr_rejects_bad_divisors():
    C = make_curve("p1-gf4")
    p = C.places_of_degree(1)[0]
    with pytest.raises(ValueError):
        C.rr_space(Divisor.of((p, -1)))

import json

import numpy as np
import pytest

from agpc.boolfn import AffineMap, TruthTable, pc_order_check_bruteforce, resiliency_order
from agpc.codes import LinearCode, code_from_rows
from agpc.curve import Divisor, make_curve
from agpc.field import field_make
from agpc.pipeline import (Claim, Theorem1Params, ValidationError, build_theorem1, carlet_check,
                           claimed_parameters, conventions_hash, dump_certificate,
                           kurosawa_satoh, ks_certificate, meets_claim, params_from_json, presets,
                           theorem1_certificate, validate_params, verify)
from agpc.pipeline.presets import example2


def replace(p, **kw):
    fields = dict(X=p.X, Xp=p.Xp, P=p.P, Pp=p.Pp, U=p.U, Up=p.Up, H=p.H, name=p.name)
    fields.update(kw)
    return Theorem1Params(**fields)


def test_example1_validates_and_claims():
    p = presets("example1")
    assert validate_params(p).ok
    assert p.variables == 20 and p.m == 2
    assert claimed_parameters(p) == Claim(5, 0, 0)


def test_validation_failures_are_named():
    p = presets("example1")
    rep = validate_params(replace(p, U=(p.U[0], p.U[0]), Up=(p.U[0], p.U[0])))
    assert not rep["pairwise_disjoint"].ok
    H = Divisor.of((p.X.places_of_degree(2)[2], 1))
    rep = validate_params(replace(p, H=H))
    assert not rep["H_degree"].ok and rep["pairwise_disjoint"].ok
    with pytest.raises(ValidationError):
        claimed_parameters(replace(p, U=(p.U[0], p.U[0]), Up=(p.U[0], p.U[0])))


def test_degree_one_h_breaks_window():
    # t' = 1 in the example-1 geometry: 1 + 4 is not < 5
    X = make_curve("p1-gf8")
    P = X.places_of_degree(1)[:5]
    quad = X.places_of_degree(2)
    U = (Divisor.of((quad[0], 1)), Divisor.of((quad[1], 1)))
    H = Divisor.of((X.places_of_degree(1)[7], 1))
    rep = validate_params(Theorem1Params(X, X, P, P, U, U, H))
    assert not rep["H_degree"].ok
    assert "1 + 4" in rep["H_degree"].detail


def test_dimension_mismatch():
    X = make_curve("p1-gf4")
    rat = X.places_of_degree(1)
    p = Theorem1Params(X, X, rat[:3], rat[:3], [Divisor.of((rat[3], 1))],
                       [Divisor.of((rat[3], 2))], Divisor.of((rat[4], 1)))
    rep = validate_params(p)
    assert not rep["dimension_match"].ok
    with pytest.raises(ValidationError):
        build_theorem1(p)


def test_example2_claim_arithmetic():
    p = example2(9, 1, 2, 2)
    assert claimed_parameters(p, check=False) == Claim(1, 6, 4)
    rep = validate_params(p)
    assert not rep["support_off_P"].ok


def test_example2_feasible_instance():
    p = presets("corollary2-g1")
    assert validate_params(p).ok
    assert claimed_parameters(p) == Claim(1, 4, 2)
    assert p.variables == 28


def test_degenerate_claim():
    E = make_curve("elliptic-gf4")
    rat = E.places_of_degree(1)
    U = [Divisor.of((rat[0], 1))]
    p = Theorem1Params(E, E, rat[2:], rat[2:], U, U, Divisor.of((rat[1], 2)))
    c = claimed_parameters(p)
    assert c.l == 0 and "no PC claim (l <= 0)" in c.notes()


def test_tiny_instance_full_oracle():
    b = build_theorem1(presets("example1-tiny"))
    F = b.function
    assert (F.n, F.m) == (12, 1)
    assert b.claim == Claim(2, 1, 0)
    assert b.audit["passed"] is True
    t = F.combination(1)
    assert pc_order_check_bruteforce(t, 2, 1)
    assert resiliency_order(t) >= 0
    ver = verify(F, b.claim, max_order=2)
    assert meets_claim(b.claim, ver) == {"l": True, "k": True, "t": True}


def test_phi_image_lies_in_coset():
    b = build_theorem1(presets("example1-tiny"))
    rng = np.random.default_rng(0)
    F2 = field_make(1)
    for phi, R, v in zip(b.function.structure.phis, b.R, b.v):
        code = LinearCode(F2, R)
        for y in rng.integers(0, 1 << phi.s, 20):
            val = phi(int(y))
            bits = np.array([(val >> i) & 1 for i in range(phi.r)])
            assert code.contains(bits ^ v)


def test_example1_structure_and_audit():
    b = build_theorem1(presets("example1"))
    assert (b.function.n, b.function.m) == (20, 2)
    assert b.function.structure.r == 10 and b.function.structure.s == 10
    # constants lie in every L(U'_i), so no v can avoid B'(C_L(P', max U'))
    assert b.v_fallback
    assert b.audit["passed"] is False


def test_corollary_structured_resiliency():
    b = build_theorem1(presets("corollary2-g1"))
    ver = verify(b.function, b.claim)
    assert ver["method"] == "structured"
    assert ver["t"] >= b.claim.t
    assert ver["l"] is None and ver["k"] is None


def test_ks_claims():
    b = kurosawa_satoh(*presets("ks-hamming"))
    assert (b.claim.l, b.claim.k) == (3, 2) and b.function.n == 14
    b = kurosawa_satoh(*presets("ks-repetition"))
    assert (b.claim.l, b.claim.k) == (1, 2) and b.function.n == 6
    ver = verify(b.function, b.claim)
    assert meets_claim(b.claim, ver) == {"l": True, "k": True, "t": True}
    with pytest.raises(ValueError):
        kurosawa_satoh(code_from_rows([[1, 1, 1]]), code_from_rows([[1, 0, 1], [0, 1, 1]]))


def test_corollary1_single_code():
    c = code_from_rows([[1, 0, 1, 1, 0], [0, 1, 0, 1, 1]])
    b = kurosawa_satoh(c, c)
    ver = verify(b.function, b.claim)
    assert ver["l"] >= b.claim.l and ver["k"] >= b.claim.k


def test_carlet_examples():
    assert carlet_check(AffineMap(np.eye(4), None), 1, 0) == (True, True)
    assert carlet_check(AffineMap(np.zeros((4, 4)), None), 1, 0) == (False, False)
    b = build_theorem1(presets("example1-tiny"))
    assert carlet_check(b.function.structure.phis[0], 2, 1) == (True, True)


def test_carlet_soundness_random():
    rng = np.random.default_rng(21)
    from agpc.boolfn import mm_build
    passes = 0
    for _ in range(50):
        r, s = (int(v) for v in rng.integers(2, 6, 2))
        phi = AffineMap(rng.integers(0, 2, (r, s)), rng.integers(0, 2, r))
        t = mm_build([phi]).combination(1)
        for l in (1, 2):
            for k in (0, 1):
                if all(carlet_check(phi, l, k)):
                    passes += 1
                    assert pc_order_check_bruteforce(t, l, k)
    assert passes > 0


def test_certificate_json(tmp_path):
    b = build_theorem1(presets("example1-tiny"))
    ver = verify(b.function, b.claim)
    cert = theorem1_certificate(b, ver)
    text = dump_certificate(cert)
    data = json.loads(text)
    for key in ("construction", "params", "claimed", "verified", "codes", "conventions_hash"):
        assert key in data
    assert data["verified"]["method"] == "exhaustive"
    assert data["conventions_hash"] == conventions_hash()
    assert all({"n", "k", "d_bound", "d_exact"} <= set(c) for c in data["codes"])
    again = params_from_json(data["params"])
    b2 = build_theorem1(again)
    assert b2.function.combination(1) == b.function.combination(1)
    assert dump_certificate(theorem1_certificate(b2, verify(b2.function, b2.claim))) == text


def test_ks_certificate():
    b = kurosawa_satoh(*presets("ks-hamming"))
    cert = ks_certificate(b, "ks-hamming")
    assert cert["claimed"]["l"] == 3 and cert["claimed"]["t"] is None
    assert cert["verified"]["method"] is None


def test_unknown_preset():
    with pytest.raises(KeyError):
        presets("example7")

"""Relation suites on small Fock modules, plus negative checks that the
verifier actually detects broken coefficients."""

from torfock.params import AlgebraParams, FockParams
from torfock.fock import FockSpace
from torfock.relations import Checker, run_relation_suite, _scale
from torfock.series import SeriesContext
from torfock._rat import Rat


def toroidal_fock(n, L=1, t0=0, c1=1, c2=1, charges=(0,), values=(1,), D=6):
    ctx = SeriesContext(L, D, c1, c2)
    alg = AlgebraParams(ctx, "toroidal", n, omega_exp=t0)
    vals = [ctx.rat(v) for v in values]
    return FockSpace(FockParams(alg, list(charges), vals))


def yangian_fock(n, c1=1, c2=1, charges=(0,), values=("97eps",), D=6):
    ctx = SeriesContext(1, D, c1, c2)
    alg = AlgebraParams(ctx, "yangian", n)
    vals = []
    for v in values:
        if isinstance(v, str) and v.endswith("eps"):
            vals.append(ctx.monomial(ctx.field.from_rat(Rat(int(v[:-3]))), 1))
        else:
            vals.append(ctx.rat(v))
    return FockSpace(FockParams(alg, list(charges), vals))


def assert_all_pass(records):
    for rec in records:
        assert rec["status"] == "pass", (rec["family"], rec["failures"][:3])
        assert not rec["skipped"], rec["family"]
    return {rec["family"]: rec for rec in records}


def test_toroidal_rank1_suite():
    fk = toroidal_fock(1)
    by = assert_all_pass(run_relation_suite(fk, max_boxes=4, K=2, serre_K=1))
    assert by["raise-lower"]["instances"] > 0
    assert by["pair-current-raise"]["instances"] > 0
    assert by["serre-raise"]["instances"] > 0
    assert by["cartan-raise"]["instances"] > 0


def test_toroidal_rank1_second_specialization():
    fk = toroidal_fock(1, c1=1, c2=3, values=(2,))
    assert_all_pass(run_relation_suite(fk, max_boxes=3, K=2, serre_K=1))


def test_toroidal_rank2_twisted():
    fk = toroidal_fock(2, L=3, t0=1)
    assert_all_pass(run_relation_suite(fk, max_boxes=3, K=2, serre_K=1))


def test_toroidal_rank3():
    fk = toroidal_fock(3)
    assert_all_pass(run_relation_suite(fk, max_boxes=3, K=1, serre_K=1))


def test_toroidal_rank2_tensor():
    fk = toroidal_fock(2, charges=(0, 1), values=(1, 3))
    assert_all_pass(run_relation_suite(fk, max_boxes=2, K=1, serre_K=1))


def test_toroidal_classical_spec():
    fk = toroidal_fock(2, c1=1, c2=0)
    assert_all_pass(run_relation_suite(fk, max_boxes=3, K=1, serre_K=1))


def test_yangian_rank1_suite():
    fk = yangian_fock(1)
    by = assert_all_pass(run_relation_suite(fk, max_boxes=4, K=2, serre_K=1))
    assert by["cartan-current"]["instances"] > 0
    assert by["serre-lower"]["instances"] > 0


def test_yangian_rank2():
    fk = yangian_fock(2)
    assert_all_pass(run_relation_suite(fk, max_boxes=3, K=2, serre_K=1))


def test_yangian_rank3():
    fk = yangian_fock(3)
    assert_all_pass(run_relation_suite(fk, max_boxes=3, K=1, serre_K=1))


def test_yangian_rank2_tensor():
    fk = yangian_fock(2, charges=(0, 1), values=("97eps", "31eps"))
    assert_all_pass(run_relation_suite(fk, max_boxes=2, K=1, serre_K=1))


def test_yangian_classical_spec():
    fk = yangian_fock(2, c2=0)
    assert_all_pass(run_relation_suite(fk, max_boxes=3, K=1, serre_K=1))


def test_vacuum_value_zero_allowed():
    # additive modules admit the zero evaluation parameter
    fk = yangian_fock(1, values=(0,))
    assert_all_pass(run_relation_suite(fk, max_boxes=3, K=1, serre_K=1))


def test_detects_scaled_pair_poly():
    fk = toroidal_fock(1)
    ck = Checker(fk)
    i, j, p1, p2 = ck.pair_specs("raise")[0]
    bad = _scale(p1, fk.ctx.rat(2))
    _, fails = ck.check_pair_current(((2, 1),), i, j, bad, p2, "raise", [-1, 0, 1])
    assert fails


def test_detects_wrong_serre_coefficient():
    fk = toroidal_fock(2)
    ck = Checker(fk)
    letters, sym_count, words, shifts = ck.serre_tables(0, 1)
    tampered = [(coeff if idx != 1 else -fk.alg.q, order)
                for idx, (coeff, order) in enumerate(words)]
    ck.serre_tables = lambda i, j: (letters, sym_count, tampered, shifts)
    fails = []
    for st in [((2, 1),), ((1, 1),)]:
        for i, j in [(0, 1), (1, 0)]:
            fails += ck.check_serre(st, i, j, "raise", [-1, 0, 1])[1]
    assert fails


def test_detects_wrong_diagonal_eigenvalue():
    fk = toroidal_fock(1)
    real = fk.t1_diag_eig
    fk.t1_diag_eig = lambda st, i, m: real(st, i, m) + fk.ctx.one()
    ck = Checker(fk)
    _, fails = ck.check_raise_lower(((1,),), 0, 0, 1)
    assert any(tag == "diag" for tag, *_rest in fails)

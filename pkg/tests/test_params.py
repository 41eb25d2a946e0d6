import pytest

from torfock._rat import Rat
from torfock.errors import ConfigError
from torfock.params import AlgebraParams, FockParams
from torfock.series import SeriesContext


def tctx(L=1, c1=1, c2=1, D=6):
    return SeriesContext(L, D=D, c1=c1, c2=c2)


def test_toroidal_parameter_identities():
    for L, t0 in ((1, 0), (3, 1), (4, 1)):
        ctx = tctx(L=L)
        for n in (1, 2, 3):
            alg = AlgebraParams(ctx, "toroidal", n, omega_exp=t0)
            prod = alg.q1 * alg.q2 * alg.q3
            assert prod.eq_upto(ctx.one())
            assert alg.q2.eq_upto(alg.q * alg.q)
            assert alg.d.eq_upto(alg.q1 * alg.q)
            assert alg.q1.eq_upto(alg.d * alg.qinv)
            assert alg.kappa.eq_upto(alg.q - alg.qinv)


def test_yangian_parameter_identities():
    ctx = tctx(c1=1, c2=3)
    for n in (1, 2, 3):
        alg = AlgebraParams(ctx, "yangian", n)
        assert (alg.h1 + alg.h2 + alg.h3).is_zero_upto(ctx.D)
        assert alg.h.eq_upto(alg.h2.scalar_mul(Rat(1, 2)))
        assert alg.h1.eq_upto(alg.beta - alg.h)
        assert alg.h3.eq_upto(-alg.beta - alg.h)
        assert alg.h2.coeff(1) == Rat(3, n)


def test_config_errors():
    ctx = tctx(L=4)
    with pytest.raises(ConfigError):
        AlgebraParams(ctx, "elliptic", 2)
    with pytest.raises(ConfigError):
        AlgebraParams(ctx, "toroidal", 0)
    with pytest.raises(ConfigError):
        AlgebraParams(ctx, "yangian", 2, omega_exp=1)


def test_cartan_tables_rank3():
    alg = AlgebraParams(tctx(), "toroidal", 3)
    assert [[alg.a(i, j) for j in range(3)] for i in range(3)] == [
        [2, -1, -1], [-1, 2, -1], [-1, -1, 2]]
    assert alg.m(0, 2) == 1 and alg.m(0, 1) == -1 and alg.m(1, 0) == 1
    assert alg.m(0, 0) == 0
    assert alg.d_factor(0, 1).eq_upto(alg.d.inv(), order=4)
    assert alg.d_factor(0, 2).eq_upto(alg.d)
    assert alg.d_factor(1, 1).eq_upto(alg.ctx.one())


def test_cartan_tables_rank4():
    alg = AlgebraParams(tctx(), "toroidal", 4)
    assert alg.a(0, 2) == 0 and alg.a(0, 3) == -1 and alg.a(2, 2) == 2
    assert alg.m(0, 2) == 0 and alg.m(0, 3) == 1 and alg.m(3, 0) == -1
    assert alg.d_factor(0, 2).eq_upto(alg.ctx.one())


def test_cartan_tables_small_ranks():
    alg2 = AlgebraParams(tctx(), "toroidal", 2)
    assert alg2.a(0, 0) == 2 and alg2.a(0, 1) == -2
    assert alg2.m(0, 1) == 0
    assert alg2.d_factor(0, 1).eq_upto(alg2.ctx.rat(-1))
    alg1 = AlgebraParams(tctx(), "toroidal", 1)
    assert alg1.a(0, 0) == 0 and alg1.m(0, 0) == 0
    assert alg1.d_factor(0, 0).eq_upto(alg1.ctx.one())


def test_g_poly_shapes():
    ctx = tctx(L=3)
    alg1 = AlgebraParams(ctx, "toroidal", 1, omega_exp=1)
    g = alg1.g_poly(0, 0)
    assert set(g) == {(3, 0), (2, 1), (1, 2), (0, 3)}
    assert g[(0, 3)].eq_upto(ctx.rat(-1))  # -q1 q2 q3
    assert g[(3, 0)].eq_upto(ctx.one())
    alg2 = AlgebraParams(ctx, "toroidal", 2, omega_exp=1)
    gd = alg2.g_poly(0, 0)
    assert gd[(0, 1)].eq_upto(-alg2.q2)
    go = alg2.g_poly(0, 1)
    assert go[(1, 1)].eq_upto(-(alg2.q1 + alg2.q3))
    assert go[(0, 2)].eq_upto(alg2.q1 * alg2.q3)
    alg3 = AlgebraParams(ctx, "toroidal", 3, omega_exp=1)
    g01 = alg3.g_poly(0, 1)
    # j = i+1: coefficient -q^{-1} d
    assert g01[(0, 1)].eq_upto(-(alg3.qinv * alg3.d))
    g02 = alg3.g_poly(0, 2)
    assert g02[(0, 1)].eq_upto(-(alg3.qinv * alg3.d.inv()), order=4)


def test_p_poly_shapes_and_signs():
    ctx = tctx(c1=1, c2=3)
    alg3 = AlgebraParams(ctx, "yangian", 3)
    # nearest neighbors degenerate to z - w - h1 and z - w - h3
    assert alg3.p_poly(0, 1)[(0, 0)].eq_upto(-alg3.h1)
    assert alg3.p_poly(1, 0)[(0, 0)].eq_upto(-alg3.h3)
    assert alg3.p_poly(1, 1)[(0, 0)].eq_upto(-alg3.h2)
    assert alg3.p_poly(0, 2)[(0, 0)].eq_upto(-alg3.h3)
    alg2 = AlgebraParams(ctx, "yangian", 2)
    assert alg2.p_poly(0, 1)[(2, 0)].eq_upto(ctx.rat(-1))
    assert alg2.p_poly(1, 0)[(2, 0)].eq_upto(ctx.one())
    assert alg2.p_poly(1, 0)[(0, 0)].eq_upto(alg2.h1 * alg2.h3)
    assert alg2.p_poly(0, 0)[(0, 0)].eq_upto(-alg2.h2)
    alg1 = AlgebraParams(ctx, "yangian", 1)
    p = alg1.p_poly(0, 0)
    assert p[(3, 0)].eq_upto(ctx.one()) and p[(0, 3)].eq_upto(ctx.rat(-1))
    e2 = alg1.h1 * alg1.h2 + alg1.h1 * alg1.h3 + alg1.h2 * alg1.h3
    assert p[(1, 0)].eq_upto(e2)
    assert p[(0, 0)].eq_upto(-(alg1.h1 * alg1.h2 * alg1.h3))


def test_b_coeff_zero_mode_is_cartan():
    ctx = tctx(L=3)
    for n in (1, 2, 3, 4):
        alg = AlgebraParams(ctx, "toroidal", n, omega_exp=1 if n > 1 else 0)
        for i in range(n):
            for j in range(n):
                assert alg.b_coeff(i, j, 0).eq_upto(ctx.rat(alg.a(i, j)))


def test_b_coeff_inversion_symmetry():
    # b(i,j;k) with (q,d) equals b(i,j;-k) with (1/q,1/d): realized by
    # flipping the slopes and the twist
    for L, t0 in ((1, 0), (3, 1)):
        ctx_p = SeriesContext(L, D=6, c1=1, c2=3)
        ctx_m = SeriesContext(L, D=6, c1=-1, c2=-3)
        for n in (1, 2, 3, 4):
            ap = AlgebraParams(ctx_p, "toroidal", n, omega_exp=t0)
            am = AlgebraParams(ctx_m, "toroidal", n, omega_exp=(-t0) % L)
            assert am.q.c == ap.qinv.c and am.d.c == ap.d.inv().c
            for i in range(n):
                for j in range(n):
                    for k in range(-5, 6):
                        b1 = ap.b_coeff(i, j, k)
                        b2 = am.b_coeff(i, j, -k)
                        assert b1.c == b2.c


def test_b_coeff_classical_limit_frozen():
    # at c2=0 the rank-1 coefficient is 2 - q1^k - q1^{-k}
    ctx = SeriesContext(1, D=6, c1=1, c2=0)
    alg = AlgebraParams(ctx, "toroidal", 1)
    b = alg.b_coeff(0, 0, 2)
    # 2 - e^{2 eps} - e^{-2 eps} = -4 eps^2 - (4/3) eps^4 - ...
    assert b.coeff(0) == 0 and b.coeff(1) == 0
    assert b.coeff(2) == -4
    assert b.coeff(3) == 0
    assert b.coeff(4) == Rat(-4, 3)
    direct = ctx.rat(2) - alg.q1.pow_int(2) - alg.q1.pow_int(-2)
    assert b.eq_upto(direct)


def test_b_coeff_rank3_shape():
    ctx = tctx(L=3)
    alg = AlgebraParams(ctx, "toroidal", 3, omega_exp=1)
    from torfock.series import qnum

    for k in (1, 2, -3):
        # m(0,1) = -1 so the twist power is d^k; m(0,2) = +1 gives d^{-k}
        want = qnum(alg.q, -k).scalar_mul(Rat(1, k)) * alg.d.pow_int(k)
        assert alg.b_coeff(0, 1, k).eq_upto(want)
        assert alg.b_coeff(0, 2, k).eq_upto(
            qnum(alg.q, -k).scalar_mul(Rat(1, k)) * alg.d.pow_int(-k))
        assert alg.b_coeff(1, 1, k).eq_upto(qnum(alg.q, 2 * k).scalar_mul(Rat(1, k)))
        assert alg.b_coeff(0, 0, k).c == alg.b_coeff(1, 1, k).c


def test_fock_colors_and_coords():
    ctx = tctx(L=1)
    alg = AlgebraParams(ctx, "toroidal", 2)
    fock = FockParams(alg, [0], [ctx.rat(1)])
    # lam=(3,1), p=0, rank 2, row 1: unreduced -2, reduced 0
    assert fock.color(0, 1, 3) == -2
    assert fock.color_mod(0, 1, 3) == 0
    assert fock.color(0, 2, 1) == 1
    # vacuum addable slot has color p+1
    assert fock.color(0, 1, 0) == 1
    chi = fock.coord(0, 2, 3)
    assert chi.eq_upto(alg.q1.pow_int(3) * alg.q3)
    yalg = AlgebraParams(ctx, "yangian", 2)
    yfock = FockParams(yalg, [0, 1], [ctx.zero(), ctx.monomial(97, 1)])
    x = yfock.coord(1, 2, 3)
    want = yalg.h1.scalar_mul(3) + yalg.h3 + ctx.monomial(97, 1)
    assert x.eq_upto(want)


def test_fock_params_validation():
    ctx = tctx()
    alg = AlgebraParams(ctx, "toroidal", 1)
    with pytest.raises(ConfigError):
        FockParams(alg, [0, 1], [ctx.one()])

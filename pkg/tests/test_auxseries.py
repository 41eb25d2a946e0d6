import pytest

from torfock._rat import Rat
from torfock.auxseries import AuxSeries
from torfock.errors import BadLeadingTerm, NonUnit, NotNilpotent
from torfock.series import SeriesContext


def mkctx(D=6):
    return SeriesContext(1, D=D, c1=1, c2=1)


def test_exp_linear_matches_direct_sum():
    ctx = mkctx()
    co = ctx.rat(Rat(3, 2))
    e = AuxSeries.exp_linear(ctx, "w", co, aux_prec=6)
    fact = 1
    for k in range(6):
        if k:
            fact *= k
        assert e.get(k).eq_upto(ctx.rat(Rat(3, 2) ** k / fact))


def test_mul_and_group_law():
    ctx = mkctx()
    a = AuxSeries.exp_linear(ctx, "w", ctx.rat(2), aux_prec=7)
    b = AuxSeries.exp_linear(ctx, "w", ctx.rat(-2), aux_prec=7)
    prod = a * b
    assert prod.is_zero_upto(aux_order=6, eps_order=ctx.D) is False
    one = AuxSeries.one(ctx, "w", 7)
    assert prod.eq_upto(one, aux_order=6)


def test_derivative_and_shift():
    ctx = mkctx()
    e = AuxSeries.exp_linear(ctx, "v", ctx.rat(5), aux_prec=8)
    de = e.derivative()
    assert de.eq_upto(e.scalar_mul(5), aux_order=6)
    sh = e.shift(2)
    assert sh.get(2).eq_upto(ctx.one())
    assert sh.var_val() == 2


def test_inverse_of_unit():
    ctx = mkctx()
    # 2 + v + eps v^2
    s = AuxSeries(ctx, "v", {0: ctx.rat(2), 1: ctx.one(), 2: ctx.eps()}, 7)
    inv = s.inv()
    one = AuxSeries.one(ctx, "v", 7)
    assert (s * inv).eq_upto(one, aux_order=5)
    with pytest.raises(NonUnit):
        AuxSeries(ctx, "v", {1: ctx.one()}, 7).inv()


def test_log_exp_round_trip_scalar_coeffs():
    ctx = mkctx()
    # 1 + v/2 + v^2/3: unit with scalar coefficients, log converges by
    # variable-order filtration alone
    s = AuxSeries(ctx, "v", {0: ctx.one(), 1: ctx.rat(Rat(1, 2)), 2: ctx.rat(Rat(1, 3))}, 7)
    back = s.log().exp()
    assert back.eq_upto(s, aux_order=6)


def test_exp_of_epsilon_small_argument():
    ctx = mkctx()
    # all coefficients of positive epsilon-order: converges by eps filtration
    g = AuxSeries(ctx, "v", {0: ctx.eps(), 1: ctx.eps(2), 2: ctx.eps()}, 9)
    e = g.exp()
    assert e.get(0).eq_upto(ctx.eps().exp())
    loggy = e.log()
    assert loggy.eq_upto(g, aux_order=8)


def test_sqrt_round_trip():
    ctx = mkctx()
    s = AuxSeries(ctx, "v", {0: ctx.one() + ctx.eps(), 1: ctx.rat(4), 2: ctx.eps(3)}, 6)
    # force leading 1: divide out the unit constant first
    s0 = s.scalar_mul(s.get(0).inv())
    r = s0.sqrt()
    assert (r * r).eq_upto(s0, aux_order=5)


def test_not_nilpotent_guard():
    ctx = mkctx()
    bad = AuxSeries(ctx, "v", {0: ctx.one()}, 5)  # exp(1) has no meaning here
    with pytest.raises((NotNilpotent, BadLeadingTerm)):
        bad.exp()
    with pytest.raises(BadLeadingTerm):
        AuxSeries(ctx, "v", {0: ctx.rat(2)}, 5).log()


def test_substitute_linear_exponential():
    ctx = mkctx()
    # exp(3 v) at v = eps + eps^2 equals exp(3 eps + 3 eps^2)
    e = AuxSeries.exp_linear(ctx, "v", ctx.rat(3), aux_prec=ctx.cap + 2)
    arg = ctx.eps() + ctx.eps(2)
    got = e.substitute(arg)
    want = arg.scalar_mul(3).exp()
    assert got.eq_upto(want, order=min(got.prec, want.prec) - 1)


def test_substitute_requires_positive_order():
    ctx = mkctx()
    e = AuxSeries.exp_linear(ctx, "v", ctx.rat(3), aux_prec=5)
    with pytest.raises(NotNilpotent):
        e.substitute(ctx.one() + ctx.eps())


def test_eval_at_rat_with_valuation_slope():
    ctx = mkctx()
    # sum_k eps^k v^k evaluated at v=2: sum (2 eps)^k = 1/(1-2 eps)
    n = ctx.cap + 1
    s = AuxSeries(ctx, "v", {k: ctx.eps(k) for k in range(n)}, n)
    got = s.eval_at_rat(Rat(2), per_power_val=1)
    want = (ctx.one() - ctx.monomial(2, 1)).inv()
    assert got.eq_upto(want, order=min(got.prec, want.prec) - 1)


def test_mixed_variables_rejected():
    ctx = mkctx()
    a = AuxSeries.one(ctx, "v", 5)
    b = AuxSeries.one(ctx, "w", 5)
    with pytest.raises(ValueError):
        a + b


def test_render_deterministic():
    ctx = mkctx()
    a = AuxSeries(ctx, "v", {2: ctx.eps(), 0: ctx.one()}, 5)
    b = AuxSeries(ctx, "v", {0: ctx.one(), 2: ctx.eps()}, 5)
    assert a.render() == b.render()

"""Smoke tests for the Python bindings: every exposed surface gets at least
one exact check against values computed independently in Python."""

from fractions import Fraction as F
from math import comb

import pytest

import gfstream as gf


def test_catalog_matches_closed_forms():
    assert gf.catalog("g_one", 4) == [1, 1, 1, 1, 1]
    assert gf.catalog("g_exp", 3) == [1, 2, 4, 8]
    assert gf.catalog("g_half", 3) == [F(1), F(1, 2), F(3, 8), F(5, 16)]
    assert gf.catalog("g_catalan", 5) == [1, 1, 2, 5, 14, 42]
    assert gf.catalog("g_half", 20) == [
        F(comb(2 * k, k), 4**k) for k in range(21)
    ]
    with pytest.raises(ValueError):
        gf.catalog("nope", 3)


def test_parse_and_series_ops():
    assert gf.parse_series("1/(1-x)", 4) == [1, 1, 1, 1, 1]
    assert gf.parse_series("(1-sqrt(1-4*x))/(2*x)", 6) == gf.catalog("g_catalan", 6)
    h = gf.catalog("g_half", 12)
    assert gf.series_mul(h, h) == gf.catalog("g_one", 12)
    assert gf.series_inv([F(1), F(-1)] + [F(0)] * 3) == gf.catalog("g_one", 4)
    assert gf.series_sqrt(gf.catalog("g_one", 10)) == gf.catalog("g_half", 10)
    assert gf.parse_series(gf.render_series(h), 12) == h
    with pytest.raises(ValueError):
        gf.parse_series("1+", 3)


def test_rational_gf_expand_and_pade():
    g = gf.RationalGF([1], [1, -2])
    assert g.degree == 1
    assert gf.expand(g, 3) == [1, 2, 4, 8]

    p = gf.pade(gf.catalog("g_half", 8), 2)
    assert p.P == [1, F(-1, 2)]
    assert p.Q == [1, -1, F(1, 8)]
    assert gf.approx_error(gf.catalog("g_half", 3), p, 3) == 0
    assert gf.approx_error(gf.catalog("g_half", 2), gf.pade(gf.catalog("g_half", 4), 1), 2) == F(1, 8)


def test_streamers():
    counting = gf.rational_streamer(gf.RationalGF([1], [1, -1]))
    r = gf.run(counting, [1, 2, 3])
    assert r.outputs == [1, 3, 6]
    assert r.max_buffer == 1

    dense = gf.dense_streamer(gf.catalog("g_half", 10))
    rd = gf.run(dense, [1, 0, 0])
    assert rd.outputs == [F(1), F(1, 2), F(3, 8)]
    assert rd.max_buffer == 3

    # oracle equivalence on a degree-2 instance
    g2 = gf.RationalGF([1], [1, F(-3, 2), F(1, 2)])
    z = [F(k * k - 3, 2) for k in range(30)]
    fast = gf.run(gf.rational_streamer(g2), z)
    slow = gf.run(gf.dense_streamer(gf.expand(g2, 29)), z)
    assert fast.outputs == slow.outputs
    assert fast.max_buffer == 2

    left = gf.rational_streamer(gf.RationalGF([1], [1, -1]))
    right = gf.rational_streamer(gf.RationalGF([1], [1, F(-1, 2)]))
    seq = gf.compose_seq(left, right)
    direct = gf.rational_streamer(g2)
    assert gf.run(seq, z).outputs == gf.run(direct, z).outputs

    par = gf.compose_par(left, right)
    assert gf.run(par, [1, 0, 0]).outputs == [2, F(3, 2), F(5, 4)]


def test_hankel_certificates():
    cat = gf.catalog("g_catalan", 24)
    assert all(gf.hankel_det(cat, d) == 1 for d in range(13))
    cb = gf.catalog("central_binomial", 24)
    assert all(gf.hankel_det(cb, d) == 2**d for d in range(13))

    cert = gf.space_lower_bound(gf.catalog("g_half", 6), 3, 3)
    assert cert.rank == 4
    assert cert.witness == [0, 1, 2, 3]

    assert gf.hankel_rank(gf.catalog("g_one", 10), 3, 5) == 1

    fib = gf.expand(gf.RationalGF([1], [1, -1, -1]), 20)
    report = gf.detect_degree(fib)
    assert report.degree == 2
    growing = gf.detect_degree(gf.catalog("g_half", 20))
    assert growing.degree is None
    assert growing.ranks == list(range(1, 12))


def test_verify_suites():
    assert gf.verify_catalan_dets(10).ok
    assert gf.verify_sqrt_dets(8).ok
    assert gf.verify_junod(3, 2, 6).ok
    assert gf.verify_corank(1, F(1, 2), 8).ok
    with pytest.raises(ValueError):
        gf.verify_junod(2, 2, 4)

    f = gf.parse_series("sqrt((1-x)*(1-1/2*x))", 18)
    g = gf.series_div(
        gf.series_sub(gf.parse_series("1-3/4*x", 20), gf.parse_series("sqrt((1-x)*(1-1/2*x))", 20)),
        gf.parse_series("x^2", 20),
    )
    rep = gf.check_comp_relation(f, g, -1, F(3, 4), F(1, 16), 8)
    assert rep.ok
    assert [l.d for l in rep.lines] == list(range(9))


def test_mechanism():
    rep = gf.mechanism_run(50, 3, 7, [1] * 50)
    assert rep.max_buffer == 4
    assert len(rep.outputs) == 50
    assert rep.shaper_gf.degree == 3

    # recorded noise: exact decomposition into counting + shaped noise
    shaper = gf.pade(gf.catalog("g_half", 40), 2)
    noise = [F(k % 5 - 2, 4) for k in range(40)]
    z = list(range(40))
    m = gf.Mechanism(shaper, noise)
    outs = [m.step(v) for v in z]
    prefix = 0
    shaped_coeffs = gf.expand(shaper, 39)
    for t in range(40):
        prefix += z[t]
        shaped = sum(shaped_coeffs[t - j] * noise[j] for j in range(t + 1))
        assert outs[t] == prefix + shaped

    # zero noise reduces to continual counting
    m0 = gf.Mechanism(shaper, [0] * 10)
    assert [m0.step(1) for _ in range(10)] == list(range(1, 11))

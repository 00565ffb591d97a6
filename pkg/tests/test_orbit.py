import numpy as np
import pytest

from coadjoint import (DegeneracyViolation, MaximalDegenerate, PoleOnChart,
                       build_group, chart_point, chart_transition, dress,
                       fibration, initial_point, su3_closed_form,
                       su3_transition_closed, weyl_group)
from coadjoint.quaternion import QuaternionMatrix
from helpers import random_chart, spectral_mismatch

SU3 = build_group("su", 3)


def test_dress_identity_chart():
    xi, eta = 1.0, 2.0
    op = dress(SU3, initial_point(SU3, (xi, eta)), chart_point(SU3, (0, 0, 0)))
    mu = np.array(op.coords)
    assert abs(mu[2] - xi) < 1e-14                       # mu_3 = xi
    assert abs(np.sqrt(3) * mu[7] - (2 * eta + xi)) < 1e-13
    others = np.delete(mu, [2, 7])
    assert np.max(np.abs(others)) < 1e-14


def test_su3_closed_form_hand_values():
    # z = 0, (xi,eta) = (1,0): mu_3 = 1, sqrt(3) mu_8 = 1, rest 0
    mu = su3_closed_form(initial_point(SU3, (1.0, 0.0)),
                         chart_point(SU3, (0.0, 0.0, 0.0)))
    assert abs(mu[2] - 1.0) < 1e-14
    assert abs(np.sqrt(3) * mu[7] - 1.0) < 1e-14
    assert np.max(np.abs(np.delete(mu, [2, 7]))) < 1e-14
    # z = (1,0,0), (xi,eta) = (1,0): mu_1 = -1, mu_2 = mu_3 = 0
    mu = su3_closed_form(initial_point(SU3, (1.0, 0.0)),
                         chart_point(SU3, (1.0, 0.0, 0.0)))
    assert abs(mu[0] + 1.0) < 1e-14
    assert abs(mu[1]) < 1e-14
    assert abs(mu[2]) < 1e-14


def test_dress_matches_closed_form():
    rng = np.random.default_rng(0)
    for _ in range(100):
        xi, eta = rng.uniform(0.1, 10.0, size=2)
        ip = initial_point(SU3, (xi, eta))
        pt = random_chart(SU3, rng)
        op = dress(SU3, ip, pt)
        mu = su3_closed_form(ip, pt)
        assert np.max(np.abs(np.array(op.coords) - mu)) < 1e-10


def test_degeneracy_violation():
    ip = initial_point(SU3, (0.0, 1.0))
    with pytest.raises(DegeneracyViolation):
        dress(SU3, ip, chart_point(SU3, (0.5, 0.0, 0.0)))
    # and the degenerate chart itself works, matching the closed form
    pt = chart_point(SU3, (0.0, 0.4 - 0.2j, 1.1j))
    op = dress(SU3, ip, pt)
    assert np.max(np.abs(np.array(op.coords) - su3_closed_form(ip, pt))) < 1e-12


def test_isospectrality():
    rng = np.random.default_rng(1)
    for family, n in [("su", 3), ("su", 4), ("sp", 2), ("so", 3), ("so", 4)]:
        spec = build_group(family, n)
        ip = initial_point(spec, tuple(rng.uniform(0.2, 3.0, spec.rank)))
        ref = ip.matrix_native if family == "sp" else ip.matrix
        ref_spec = spec.adapter.spectrum(ref)
        for _ in range(20):
            op = dress(spec, ip, random_chart(spec, rng))
            assert spectral_mismatch(op.spectrum(), ref_spec) < 1e-10


def test_casimir_constant():
    rng = np.random.default_rng(2)
    xi, eta = 1.3, 0.7
    ip = initial_point(SU3, (xi, eta))
    c0 = xi ** 2 + (xi + 2 * eta) ** 2 / 3.0   # value at z = 0
    for _ in range(50):
        op = dress(SU3, ip, random_chart(SU3, rng, scale=1.5))
        assert abs(np.sum(np.array(op.coords) ** 2) - c0) < 1e-9


def test_dress_sp2_native():
    sp2 = build_group("sp", 2)
    ip = initial_point(sp2, (1.0, 2.0))
    rng = np.random.default_rng(3)
    op = dress(sp2, ip, random_chart(sp2, rng))
    assert isinstance(op.mu_matrix, QuaternionMatrix)
    assert op.coords == ()   # group coordinates only exposed for SU(3)
    assert spectral_mismatch(op.spectrum(),
                             sp2.adapter.spectrum(ip.matrix_native)) < 1e-10


# ---------------------------------------------------------------------------
# chart transitions


def test_transition_closed_form_examples():
    z = su3_transition_closed((0,), (2.0, 3.0, 5.0))
    assert np.allclose(z, (0.5, -5.0, -3.0))
    z = su3_transition_closed((1,), (2.0, 3.0, 5.0))
    assert np.allclose(z, (1.0, 1.0 / 3.0, -5.0 / 3.0))


def test_transition_pole():
    with pytest.raises(PoleOnChart):
        su3_transition_closed((0,), (0.0, 1.0, 1.0))
    with pytest.raises(PoleOnChart):
        chart_transition(SU3, (0,), chart_point(SU3, (0.0, 1.0, 1.0)))


def test_transition_numeric_matches_closed():
    rng = np.random.default_rng(4)
    words = [(0,), (1,), (0, 1), (1, 0), (0, 1, 0)]
    for _ in range(20):
        pt = random_chart(SU3, rng)
        for word in words:
            try:
                closed = su3_transition_closed(word, pt.coords)
            except PoleOnChart:
                continue
            new = chart_transition(SU3, word, pt)
            assert np.max(np.abs(new.array() - np.array(closed))) < 1e-8


def test_transition_involution():
    rng = np.random.default_rng(5)
    pt = random_chart(SU3, rng)
    back = chart_transition(SU3, (0,), chart_transition(SU3, (0,), pt))
    assert np.max(np.abs(back.array() - pt.array())) < 1e-10
    assert back.chart == ()


def test_transition_chart_labels_compose():
    rng = np.random.default_rng(6)
    pt = random_chart(SU3, rng)
    a = chart_transition(SU3, (0,), pt)
    b = chart_transition(SU3, (1,), a)
    wg = weyl_group(SU3)
    assert b.chart == wg.element_by_word((0, 1)).word


def test_chart_compatibility_dressing():
    # dressing at z then conjugating by w equals dressing at the transformed
    # point (the torus phase emitted by the factorization commutes with the
    # diagonal initial point)
    rng = np.random.default_rng(7)
    wg = weyl_group(SU3)
    ip = initial_point(SU3, (1.2, 0.8))
    for word in [(0,), (1,)]:
        el = wg.element_by_word(word)
        for _ in range(10):
            pt = random_chart(SU3, rng)
            try:
                pt2 = chart_transition(SU3, word, pt)
            except PoleOnChart:
                continue
            mu1 = dress(SU3, ip, pt).mu_matrix
            mu2 = dress(SU3, ip, pt2).mu_matrix
            w = el.matrix
            moved = w.conj().T @ mu1 @ w
            assert spectral_mismatch(np.linalg.eigvals(moved),
                                     np.linalg.eigvals(mu2)) < 1e-10
            assert np.max(np.abs(moved - mu2)) < 1e-8


def test_transition_sp2_quaternionic():
    sp2 = build_group("sp", 2)
    rng = np.random.default_rng(8)
    pt = random_chart(sp2, rng)
    # the short simple reflection acts like the SU(2) flip on the quaternion
    new = chart_transition(sp2, (0,), pt)
    back = chart_transition(sp2, (0,), new)
    assert np.max(np.abs(back.array() - pt.array())) < 1e-10


# ---------------------------------------------------------------------------
# fibrations


def test_fibration_su3():
    fib = fibration(SU3, initial_point(SU3, (1.0, 1.0)))
    assert fib.base.label == "CP^2" and fib.base.real_dimension == 4
    assert fib.fiber.label == "CP^1" and fib.fiber.real_dimension == 2
    assert fib.total.real_dimension == 6


def test_fibration_su4():
    su4 = build_group("su", 4)
    fib = fibration(su4, initial_point(su4, (1.0, 1.0, 1.0)))
    assert fib.base.label == "CP^3"
    assert fib.fiber.label == "O^SU(3)"
    assert fib.total.real_dimension == \
        fib.base.real_dimension + fib.fiber.real_dimension == 12


def test_fibration_maximal_degenerate():
    su2 = build_group("su", 2)
    with pytest.raises(MaximalDegenerate):
        fibration(su2, initial_point(su2, (1.0,)))
    with pytest.raises(MaximalDegenerate):
        fibration(SU3, initial_point(SU3, (0.0, 1.0)))


def test_fibration_dimension_additivity():
    for family, n, w in [("su", 4, (1.0, 0.0, 1.0)), ("sp", 2, (1.0, 1.0)),
                         ("sp", 3, (1.0, 1.0, 1.0)), ("so", 4, (1.0, 1.0))]:
        spec = build_group(family, n)
        fib = fibration(spec, initial_point(spec, w))
        assert fib.total.real_dimension == \
            fib.base.real_dimension + fib.fiber.real_dimension

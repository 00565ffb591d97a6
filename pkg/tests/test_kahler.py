import numpy as np
import pytest

from coadjoint import (OutsideCell, StepUnderflow, build_group, chart_point,
                       cocycle_shift, dress, initial_point, integrality_check,
                       kks_pairing, metric, potential, potential_batch,
                       weyl_group)
from coadjoint._linalg import wirtinger_hessian
from coadjoint.kahler import KKS_METRIC_RATIO, basis_potential_batch
from helpers import haar_su, random_chart

SU3 = build_group("su", 3)
SU2 = build_group("su", 2)


def test_potential_values():
    ip = initial_point(SU3, (1.0, 2.0))
    assert abs(potential(SU3, ip, chart_point(SU3, (0, 0, 0)))) < 1e-14
    # (xi,eta) = (1,2), z = (1,0,0): r1^2 = 2, r2^2 = 1 -> Phi = ln 2
    assert abs(potential(SU3, ip, chart_point(SU3, (1, 0, 0)))
               - np.log(2.0)) < 1e-12


def test_potential_closed_form_su3():
    rng = np.random.default_rng(0)
    xi, eta = 0.9, 2.3
    ip = initial_point(SU3, (xi, eta))
    for _ in range(30):
        z1, z2, z3 = rng.standard_normal(3) + 1j * rng.standard_normal(3)
        val = potential(SU3, ip, chart_point(SU3, (z1, z2, z3)))
        r1sq = 1 + abs(z1) ** 2 + abs(z3 - z1 * z2) ** 2
        r2sq = 1 + abs(z2) ** 2 + abs(z3) ** 2
        assert abs(val - (xi * np.log(r1sq) + eta * np.log(r2sq))) < 1e-12


def test_potential_su2_rank_one():
    xi = 1.7
    ip = initial_point(SU2, (xi,))
    z = 0.3 - 1.2j
    val = potential(SU2, ip, chart_point(SU2, (z,)))
    assert abs(val - xi * np.log(1 + abs(z) ** 2)) < 1e-12
    at1 = potential(SU2, ip, chart_point(SU2, (1.0,)))
    assert abs(at1 - xi * np.log(2.0)) < 1e-12


def test_metric_su2_analytic():
    for xi in (1.0, 2.3):
        ip = initial_point(SU2, (xi,))
        for z in (0.0, 0.5 + 0.5j, 1.0 - 1.0j):
            g = metric(SU2, ip, chart_point(SU2, (z,))).g[0, 0].real
            exact = xi / (1 + abs(z) ** 2) ** 2
            assert abs(g - exact) < 1e-6


def test_metric_cp2_origin():
    eta = 1.0
    ip = initial_point(SU3, (0.0, eta))
    kt = metric(SU3, ip, chart_point(SU3, (0, 0, 0)))
    assert kt.active_labels == ("e2-e3", "e1-e3")
    assert np.max(np.abs(kt.g - eta * np.eye(2))) < 1e-7


def test_metric_hermitian_and_positive():
    rng = np.random.default_rng(1)
    ip = initial_point(SU3, (0.8, 1.4))
    for _ in range(200):
        kt = metric(SU3, ip, random_chart(SU3, rng))
        assert np.max(np.abs(kt.g - kt.g.conj().T)) < 1e-9
        assert kt.eigenvalues().min() > -1e-9


def test_metric_step_underflow():
    ip = initial_point(SU2, (1.0,))
    with pytest.raises(StepUnderflow):
        metric(SU2, ip, chart_point(SU2, (1e9,)), step=1e-4)


def test_closedness_of_omega():
    # d omega = 0 <=> d_c g_{a bbar} = d_a g_{c bbar} (holomorphic indices);
    # outer derivatives Richardson-extrapolated to keep the FD noise small
    rng = np.random.default_rng(2)
    ip = initial_point(SU3, (1.0, 0.6))
    z0 = 0.4 * (rng.standard_normal(3) + 1j * rng.standard_normal(3))

    def g_at(z):
        # a larger inner step keeps the outer difference above the FD noise
        return metric(SU3, ip, chart_point(SU3, z), step=1e-3).g

    def dg(direction, h):
        e = np.zeros(3)
        e[direction] = 1.0
        dx = (g_at(z0 + h * e) - g_at(z0 - h * e)) / (2 * h)
        dy = (g_at(z0 + 1j * h * e) - g_at(z0 - 1j * h * e)) / (2 * h)
        return 0.5 * (dx - 1j * dy)

    def dg_r(direction, h=1e-2):
        return (4.0 * dg(direction, h) - dg(direction, 2 * h)) / 3.0

    d0 = dg_r(0)
    d1 = dg_r(1)
    d2 = dg_r(2)
    grads = [d0, d1, d2]
    for a in range(3):
        for c in range(a + 1, 3):
            for b in range(3):
                assert abs(grads[c][a, b] - grads[a][c, b]) < 1e-6


def test_kks_pairing_basics():
    ip = initial_point(SU3, (1.0, 2.0))
    op = dress(SU3, ip, chart_point(SU3, (0.2, 0.1j, 0.0)))
    x = np.array([[0, 1, 0], [-1, 0, 0], [0, 0, 0]], dtype=complex)
    y = np.array([[0, 1j, 0], [1j, 0, 0], [0, 0, 0]], dtype=complex)
    assert kks_pairing(op, x, x) == 0.0
    assert abs(kks_pairing(op, x, y) + kks_pairing(op, y, x)) < 1e-12


def test_kks_matches_metric_with_frozen_scale():
    # SU(2), mu0 = -(i/2) xi diag(1,-1), root-direction generators at z = 0
    xi = 1.7
    ip = initial_point(SU2, (xi,))
    assert np.max(np.abs(ip.matrix + 0.5j * xi * np.diag([1, -1]))) < 1e-14
    op = dress(SU2, ip, chart_point(SU2, (0.0,)))
    x = np.array([[0, 1], [-1, 0]], dtype=complex)
    y = np.array([[0, 1j], [1j, 0]], dtype=complex)
    val = kks_pairing(op, x, y)
    g0 = metric(SU2, ip, chart_point(SU2, (0.0,))).g[0, 0].real
    assert abs(val - KKS_METRIC_RATIO * g0) < 1e-6


def test_cocycle_identity():
    ip = initial_point(SU3, (1.0, 1.0))
    pt = chart_point(SU3, (0.4, -0.2j, 1.0))
    zg, shift = cocycle_shift(SU3, ip, pt, np.eye(3, dtype=complex))
    assert np.max(np.abs(zg.array() - pt.array())) < 1e-12
    assert abs(shift) < 1e-12


def test_cocycle_covariance():
    rng = np.random.default_rng(3)
    ip = initial_point(SU3, (1.1, 0.4))
    worst = 0.0
    for _ in range(200):
        pt = random_chart(SU3, rng)
        g = haar_su(3, rng)
        try:
            zg, shift = cocycle_shift(SU3, ip, pt, g)
        except OutsideCell:
            continue
        lhs = potential(SU3, ip, zg) - potential(SU3, ip, pt)
        worst = max(worst, abs(lhs - shift))
    assert worst < 1e-8


def test_cocycle_weyl_element():
    # g = w1 at generic z is either outside the cell or satisfies covariance
    rng = np.random.default_rng(4)
    ip = initial_point(SU3, (1.0, 2.0))
    w1 = weyl_group(SU3).generators[0].matrix
    hit = miss = 0
    for _ in range(10):
        pt = random_chart(SU3, rng)
        try:
            zg, shift = cocycle_shift(SU3, ip, pt, w1)
        except OutsideCell:
            miss += 1
            continue
        hit += 1
        lhs = potential(SU3, ip, zg) - potential(SU3, ip, pt)
        assert abs(lhs - shift) < 1e-8
    assert hit > 0
    # at z1 = 0 the w1-cell is missed
    with pytest.raises(OutsideCell):
        cocycle_shift(SU3, ip, chart_point(SU3, (0.0, 1.0, 1.0)), w1)


def test_metric_invariance_under_cocycle_action():
    # pullback of ds^2 under z -> z_g equals ds^2: g(z) = J^T g(z_g) conj(J)
    rng = np.random.default_rng(5)
    ip = initial_point(SU3, (1.0, 0.7))
    done = 0
    while done < 5:
        pt = random_chart(SU3, rng, scale=0.7)
        g = haar_su(3, rng)
        try:
            zg, _ = cocycle_shift(SU3, ip, pt, g)
        except OutsideCell:
            continue
        # numerical holomorphic Jacobian of z -> z_g
        h = 1e-5
        jac = np.zeros((3, 3), dtype=complex)
        ok = True
        for a in range(3):
            e = np.zeros(3)
            e[a] = 1.0
            try:
                zp = cocycle_shift(SU3, ip,
                                   chart_point(SU3, pt.array() + h * e), g)[0]
                zm = cocycle_shift(SU3, ip,
                                   chart_point(SU3, pt.array() - h * e), g)[0]
            except OutsideCell:
                ok = False
                break
            jac[:, a] = (zp.array() - zm.array()) / (2 * h)
        if not ok:
            continue
        g_here = metric(SU3, ip, pt, step=1e-3).g
        g_there = metric(SU3, ip, zg, step=1e-3).g
        pulled = jac.T @ g_there @ np.conj(jac)
        assert np.max(np.abs(pulled - g_here)) < 1e-6
        done += 1


def test_integrality_examples():
    flags, ratios = integrality_check(SU2, initial_point(SU2, (3.0,)))
    assert flags == (True,) and abs(ratios[0] - 3.0) < 1e-12
    flags, ratios = integrality_check(SU2, initial_point(SU2, (2.5,)))
    assert flags == (False,)
    flags, _ = integrality_check(SU3, initial_point(SU3, (1.0, 2.0)))
    assert flags == (True, True)
    flags, _ = integrality_check(SU3, initial_point(SU3, (0.5, 1.0)))
    assert flags == (False, True)


def test_so4_potential_pair_crosscheck():
    # the classical potentials Phi_1 = ln(1+|z1|^2) - ln(1+|z2|^2) and
    # Phi_2 = ln(1+|z1|^2) + ln(1+|z2|^2) span the same space as the basis
    # potentials, and the metric of Phi = xi1 L1 + xi2 L2 is diagonal and
    # positive exactly on the open chamber
    so4 = build_group("so", 4)
    rng = np.random.default_rng(6)
    pts = rng.standard_normal((20, 2)) + 1j * rng.standard_normal((20, 2))
    l1 = np.log(1 + np.abs(pts[:, 0]) ** 2)
    l2 = np.log(1 + np.abs(pts[:, 1]) ** 2)
    phi1 = basis_potential_batch(so4, 0, pts)
    phi2 = basis_potential_batch(so4, 1, pts)
    assert np.max(np.abs(phi1 - l1)) < 1e-10
    assert np.max(np.abs(phi2 - l2)) < 1e-10
    # that pair = (Phi_1 - Phi_2, Phi_1 + Phi_2) of the basis potentials
    disp1, disp2 = phi1 - phi2, phi1 + phi2
    assert np.max(np.abs(disp1 - (l1 - l2))) < 1e-10
    assert np.max(np.abs(disp2 - (l1 + l2))) < 1e-10

    def hessian(weights, z0):
        ip = initial_point(so4, weights)
        return wirtinger_hessian(
            lambda b: potential_batch(so4, ip, b), z0)

    z0 = np.array([0.3 + 0.1j, -0.2 + 0.4j])
    for weights, positive in [((1.0, 0.5), True), ((0.5, 1.0), True),
                              ((0.0, 1.0), False), ((1.0, 0.0), False)]:
        g = hessian(weights, z0)
        assert abs(g[0, 1]) < 1e-8          # diagonal
        eig = np.linalg.eigvalsh(g)
        if positive:
            assert eig.min() > 1e-3
        else:
            assert abs(eig.min()) < 1e-6    # null direction on the wall


def test_potential_batch_matches_scalar():
    ip = initial_point(SU3, (1.0, 2.0))
    rng = np.random.default_rng(7)
    pts = rng.standard_normal((10, 3)) + 1j * rng.standard_normal((10, 3))
    vals = potential_batch(SU3, ip, pts)
    for row, v in zip(pts, vals):
        assert abs(potential(SU3, ip, chart_point(SU3, row)) - v) < 1e-12

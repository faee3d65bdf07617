import math

import numpy as np
import pytest

import entcorr

LN2 = math.log(2.0)


def phi_plus():
    psi = np.zeros(4, dtype=complex)
    psi[0] = psi[3] = 1 / math.sqrt(2)
    return np.outer(psi, psi.conj())


def werner(w):
    return w * phi_plus() + (1 - w) * np.eye(4) / 4


def test_bell_state_is_maximally_entangled():
    rho = phi_plus()
    assert entcorr.concurrence(rho) == pytest.approx(1.0, abs=1e-12)
    assert entcorr.entanglement_of_formation(rho) == pytest.approx(LN2, abs=1e-12)
    assert entcorr.negativity(rho) == pytest.approx(0.5, abs=1e-12)


def test_werner_concurrence():
    # C = max(0, (3w - 1) / 2)
    for w in (0.2, 1 / 3, 0.6, 0.9):
        assert entcorr.concurrence(werner(w)) == pytest.approx(max(0.0, (3 * w - 1) / 2), abs=1e-12)


def test_v_endpoints_and_bound_pieces():
    assert entcorr.v(0.0) == pytest.approx(0.0, abs=1e-15)
    assert entcorr.v(1.0) == pytest.approx(LN2, abs=1e-15)
    assert entcorr.u(0.25) == pytest.approx(entcorr.v(0.75), abs=1e-15)
    assert entcorr.u(0.6) == pytest.approx(entcorr.v(2 - 1.8), abs=1e-15)
    assert entcorr.u(0.7) == 0.0


def test_xi_vanishes_past_threshold():
    for kind in ("bures", "hellinger"):
        t = entcorr.threshold(kind)
        assert entcorr.xi(kind, t) == pytest.approx(0.0, abs=1e-12)
        assert entcorr.xi(kind, 0.0) == pytest.approx(LN2, abs=1e-15)
    # Hellinger deficit x^2/2 hits 2/3 at x = 2/sqrt 3
    assert entcorr.threshold("hellinger") == pytest.approx(2 / math.sqrt(3), abs=1e-12)


def test_s22_matches_max_ef_state():
    p = [0.55, 0.25, 0.15, 0.05]
    rho = entcorr.max_ef_state(p)
    assert entcorr.spectrum(rho) == pytest.approx(p, abs=1e-12)
    assert entcorr.entanglement_of_formation(rho) == pytest.approx(LN2 - entcorr.s22_ef(p), abs=1e-12)
    c = 0.55 - 0.15 - 2 * math.sqrt(0.25 * 0.05)
    assert entcorr.max_orbit_concurrence(p) == pytest.approx(c, abs=1e-15)


def test_pure_state_correlations():
    psi = entcorr.haar_pure(16, seed=7)
    p = np.sort(np.linalg.svd(psi.reshape(4, 4), compute_uv=False) ** 2)[::-1]
    assert entcorr.schmidt(psi, 4, 4) == pytest.approx(list(p), abs=1e-12)
    assert entcorr.c_on_pure(psi, 4, 4, "hellinger") == pytest.approx(math.sqrt(2 * (1 - p[0])), abs=1e-12)
    assert entcorr.c_on_pure(psi, 4, 4, "bures") == pytest.approx(math.sqrt(2 * (1 - math.sqrt(p[0]))), abs=1e-12)
    h = -sum(x * math.log(x) for x in p)
    assert entcorr.c_on_pure(psi, 4, 4, "mi") == pytest.approx(2 * h, abs=1e-12)


def test_distance_correlation_of_pure_state_numeric():
    psi = entcorr.haar_pure(8, seed=3)
    rho = np.outer(psi, psi.conj())
    exact = entcorr.c_on_pure(psi, 2, 4, "hellinger")
    assert entcorr.c_distance_numeric(rho, 2, 4, "hellinger") == pytest.approx(exact, abs=1e-8)


def test_partial_trace_and_purification():
    rho = werner(0.4)
    psi = entcorr.purify_into(rho, 4)
    back = entcorr.partial_trace(np.outer(psi, psi.conj()), 4, 4, keep_first=True)
    assert np.max(np.abs(back - rho)) < 1e-12


def test_beta_deform_identity():
    p = [0.4, 0.3, 0.2, 0.1]
    assert entcorr.beta_deform(p, 1.0) == pytest.approx(p, abs=1e-15)
    q = entcorr.beta_deform(p, 3.0)
    assert q[0] > p[0] and sum(q) == pytest.approx(1.0, abs=1e-14)


def test_verify_driver_reports_no_violation():
    r = entcorr.run_verify(kind="hellinger", samples=50, dim_b=8)
    assert r["command"] == "verify"
    assert r["passed"]
    assert r["summary"]["violations"] == 0
    assert len(r["rows"]) == 50


def test_bad_input_raises():
    with pytest.raises(ValueError):
        entcorr.xi("trace", 0.1)
    with pytest.raises(ValueError):
        entcorr.run_verify(samples=0)
    with pytest.raises(ValueError):
        entcorr.concurrence(np.eye(3) / 3)

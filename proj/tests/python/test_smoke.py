import math

import pytest

import diffinv


def test_forward_representations_agree():
    for a in (0.05, 0.2, 0.7, 2.0):
        assert diffinv.eval_I(a) == pytest.approx(diffinv.I_fourier(a), abs=1e-12)
    assert diffinv.I_fourier(0.1) == pytest.approx(diffinv.I_erfc_sum(0.1), abs=1e-14)


def test_true_a_round_trip():
    for c in (0.01, 0.3, 0.9):
        a = diffinv.true_a(c)
        assert diffinv.I_fourier(a) == pytest.approx(c, rel=1e-12)


def test_every_scheme_reconstructs_c():
    for name in diffinv.schemes():
        c = 0.05 if name in ("erfc", "loglog", "lambert-w", "p-expansion") else 0.6
        re = diffinv.relative_error(c, diffinv.estimate_a(c, name))
        assert re < 25.0, name
    assert diffinv.relative_error(0.3, diffinv.estimate_a(0.3)) < 5e-4


def test_unknown_scheme_and_domain_errors():
    with pytest.raises(ValueError):
        diffinv.estimate_a(0.5, "nope")
    with pytest.raises(diffinv.DomainError):
        diffinv.estimate_a(1.5)
    with pytest.raises(diffinv.AdmissibilityError):
        diffinv.reduce_drainage(h0=1.57, d=3.4, H=3.4 + 2.0)


def test_diffusivity_closed_loop():
    theta0, theta1, L, D0, T = 0.05, 0.4, 100.0, 1.5, 400.0
    Theta = diffinv.eval_theta(L / 2, T, theta0, theta1, L, D0)
    assert diffinv.diffusivity(theta0, theta1, L, Theta, T, "oracle") == pytest.approx(D0, rel=1e-10)


def test_drainage_closed_loop():
    h0, d, L, A, T = 1.57, 3.4, 22.0, 10.0, 3.0
    H = diffinv.eval_h(L, T, h0, d, L, A)
    assert diffinv.drain_spacing(h0, d, H, A, T, "oracle") == pytest.approx(2 * L, rel=1e-10)
    assert diffinv.drain_time(h0, d, H, A, 2 * L, "oracle") == pytest.approx(T, rel=1e-10)


def test_diffusivity_table_first_row():
    row = diffinv.diffusivity_table()[0]
    assert row["T"] == 100.0
    assert row["c2"] == pytest.approx(0.017699, abs=2e-6)
    assert row["D0"]["perfect-match"] == pytest.approx(1.82403, abs=1e-5)
    assert row["D0"]["first-order"] == pytest.approx(2.62849, abs=1e-5)


def test_threshold_table_rounds_to_reference_rows():
    rows = diffinv.threshold_table()
    assert [round(r["c_min"], 3) for r in rows] == [0.531, 0.316, 0.172, 0.102]
    assert [round(r["a_min"], 3) for r in rows] == [0.405, 0.251, 0.169, 0.131]


def test_simulation_is_seeded():
    a = diffinv.simulate_moisture(7, 5, [100.0, 200.0])
    b = diffinv.simulate_moisture(7, 5, [100.0, 200.0])
    assert a == b
    assert all(1.2 <= r["D0"] < 2.4 for r in a)
    assert [r["T"] for r in a] == [100.0, 200.0, 100.0, 200.0, 100.0]
    assert all(math.isfinite(r["Theta"]) for r in a)

import json
import math

import numpy as np
import pytest

import sfwit


def test_pauli_algebra():
    sx, sy, sz = sfwit.pauli("x"), sfwit.pauli("y"), sfwit.pauli("z")
    assert np.allclose(sx @ sy, 1j * sz)
    assert np.allclose(sx @ sx, np.eye(2))
    with pytest.raises(Exception):
        sfwit.pauli("w")


def test_canonical_states():
    singlet = sfwit.canonical_state("singlet")
    r = 1.0 / math.sqrt(2.0)
    assert np.allclose(singlet, [0.0, r, -r, 0.0])
    rho = np.outer(singlet, singlet.conj())
    assert sfwit.concurrence(rho) == pytest.approx(1.0, abs=1e-10)


def test_displacement_agreement():
    d1 = sfwit.displacement(0.8 + 0.2j, 40)
    d2 = sfwit.displacement_exp(0.8 + 0.2j, 40)
    assert np.max(np.abs(d1 - d2)) < 1e-8
    assert abs(d1[0, 0] - math.exp(-0.5 * abs(0.8 + 0.2j) ** 2)) < 1e-12


def test_coherent_and_thermal():
    amps = sfwit.coherent_amplitudes(1.0, 40)
    assert np.vdot(amps, amps).real == pytest.approx(1.0, abs=1e-10)
    diag = sfwit.thermal_diagonal(1.0, 40)
    nbar = float(np.dot(np.arange(41), diag))
    assert nbar == pytest.approx(sfwit.thermal_mean_occupation(1.0), abs=1e-10)


def test_closed_forms_match_oracles():
    for x in (-1.0, 0.0, 2.0):
        assert sfwit.closed_form_w(3, x, 1.2) == pytest.approx(
            sfwit.grid_oracle_w(3, x, 1.2), abs=1e-6
        )
    assert sfwit.closed_form_thermal(0.0, 1.0, 1.0) == pytest.approx(-2.0)
    assert sfwit.thermal_expectation(1.0, 1.0, 1.0) == pytest.approx(
        sfwit.closed_form_thermal(1.0, 1.0, 1.0), abs=1e-6
    )
    assert sfwit.closed_form_hybrid(3, 0.0, p=0.4) == pytest.approx(0.4)


def test_char_fn():
    beta = 0.5
    expected = math.exp(-0.5 * beta**2 / math.tanh(0.5))
    assert sfwit.char_fn_thermal(1.0, 1j * beta, 60) == pytest.approx(
        expected, abs=1e-10
    )

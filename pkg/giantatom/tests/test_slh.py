# Standard Library
import math

# Third Party
import numpy as np
import pytest
from numpy.testing import assert_allclose

# GiantAtom
from giantatom.core.atom import AtomSpec
from giantatom.core.bath import ConstantDOS, Environment
from giantatom.core.layout import CouplingLayout, MirrorSpec
from giantatom.dynamics.generator import build_generator, transition_rates
from giantatom.errors import ChannelCountError, SingularLoopError, TripletShapeError
from giantatom.slh import (
    SLHTriplet,
    attach_mirror,
    build_giant_atom,
    closed_form_amplitudes,
    concat,
    equivalence_report,
    feedback,
    giant_atom_triplet,
    identity_triplet,
    lowering,
    phase_triplet,
    rate_and_shift_from_triplet,
    series,
    sigma_z,
    to_master_equation,
)
from giantatom.slh.equivalence import EQUIVALENCE_COLUMNS
from giantatom.spectral.coupling import mirror_rate, relaxation_rate
from giantatom.spectral.lamb import ShiftMode, hilbert_shift_closed_form
from giantatom.spectral.symmetric import symmetric_mirror_lamb, symmetric_mirror_rate, symmetric_rate

ENV = Environment(dos=ConstantDOS(1.0))


def random_triplet(rng, n_channels=2, dim=2):
    q, _ = np.linalg.qr(rng.normal(size=(n_channels, n_channels)) + 1j * rng.normal(size=(n_channels, n_channels)))
    L = rng.normal(size=(n_channels, dim, dim)) + 1j * rng.normal(size=(n_channels, dim, dim))
    H = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return SLHTriplet(S=q, L=L, H=H + H.conj().T)


def test_series_associative():
    rng = np.random.default_rng(1)
    for _ in range(10):
        G1, G2, G3 = (random_triplet(rng) for _ in range(3))
        left = series(G3, series(G2, G1))
        right = series(series(G3, G2), G1)
        assert left.allclose(right, atol=1e-12)
        assert left.is_unitary()
        assert left.is_hermitian()


def test_identity_and_concat():
    rng = np.random.default_rng(2)
    G = random_triplet(rng)
    assert series(identity_triplet(2, 2), G).allclose(G)
    assert series(G, identity_triplet(2, 2)).allclose(G)
    stacked = concat(G, random_triplet(rng, n_channels=1))
    assert stacked.n_channels == 3
    assert_allclose(stacked.L[:2], G.L)


def test_phase_triplet():
    assert series(phase_triplet(0.4), phase_triplet(1.1)).allclose(phase_triplet(1.5))
    G = random_triplet(np.random.default_rng(6), n_channels=1)
    delayed = series(phase_triplet(0.7), G)
    assert_allclose(delayed.L, np.exp(0.7j) * G.L)
    assert_allclose(delayed.H, G.H)


@pytest.mark.parametrize("n_channels, dim", [(2, 2), (3, 2), (4, 3)])
def test_feedback_keeps_unitary_and_hermitian(n_channels, dim):
    rng = np.random.default_rng(8)
    checked = 0
    while checked < 20:
        G = random_triplet(rng, n_channels, dim)
        k, l = rng.choice(n_channels, size=2, replace=False)
        if abs(1 - G.S[k, l]) < 0.2:
            continue
        reduced = feedback(G, int(k), int(l))
        assert reduced.n_channels == n_channels - 1
        assert reduced.is_unitary(tol=1e-10)
        assert reduced.is_hermitian(tol=1e-10)
        checked += 1


def test_composition_errors():
    rng = np.random.default_rng(3)
    with pytest.raises(ChannelCountError):
        series(random_triplet(rng, 2), random_triplet(rng, 1))
    with pytest.raises(TripletShapeError):
        series(random_triplet(rng, dim=2), random_triplet(rng, dim=3))
    swap = SLHTriplet(S=np.array([[0.0, 1.0], [1.0, 0.0]]), L=np.zeros((2, 2, 2)), H=np.zeros((2, 2)))
    with pytest.raises(SingularLoopError):
        feedback(swap, 0, 1)
    with pytest.raises(ChannelCountError):
        feedback(swap, 0, 2)
    with pytest.raises(ChannelCountError):
        attach_mirror(concat(swap, swap), 0.3)


def test_small_atom_triplet():
    G = giant_atom_triplet([0.8], [], lowering(0, 2))
    assert G.n_channels == 2
    rate, shift = rate_and_shift_from_triplet(G)
    assert rate == pytest.approx(0.8)
    assert shift == pytest.approx(0.0, abs=1e-15)


def test_shift_read_from_sigma_z():
    jump = lowering(0, 3)
    for H in [0.35 * sigma_z(3), 0.7 * np.diag([0.0, 1.0, 0.0])]:
        G = SLHTriplet(S=np.eye(2), L=[0.3 * jump, 0.4j * jump], H=H)
        rate, shift = rate_and_shift_from_triplet(G)
        assert rate == pytest.approx(0.25)
        assert shift == pytest.approx(0.7)


def test_two_points_in_phase():
    rate, shift = rate_and_shift_from_triplet(giant_atom_triplet([0.5, 0.5], [0.0], lowering(0, 2)))
    assert rate == pytest.approx(2.0)
    assert shift == pytest.approx(0.0, abs=1e-15)


def test_triplet_matches_closed_form():
    rng = np.random.default_rng(4)
    for _ in range(50):
        n = int(rng.integers(1, 7))
        gammas = rng.uniform(0.0, 1.0, size=n)
        phases = rng.uniform(0.0, 2 * math.pi, size=n - 1)
        G = giant_atom_triplet(gammas, phases, lowering(0, 2))
        A_R, A_L, B, _ = closed_form_amplitudes(gammas, phases)
        rate, shift = rate_and_shift_from_triplet(G)
        assert rate == pytest.approx(abs(A_R) ** 2 + abs(A_L) ** 2, abs=1e-12)
        assert shift == pytest.approx(B, abs=1e-12)
        assert abs(G.L[0, 0, 1]) == pytest.approx(abs(A_R), abs=1e-12)
        assert abs(G.L[1, 0, 1]) == pytest.approx(abs(A_L), abs=1e-12)


def test_symmetric_triplet():
    gamma, phi = 0.3, 1.1
    G = giant_atom_triplet([gamma] * 5, [phi] * 4, lowering(0, 2))
    rate, _ = rate_and_shift_from_triplet(G)
    assert rate == pytest.approx(symmetric_rate(gamma, 5, phi), abs=1e-12)


@pytest.mark.parametrize("phi", [0.4, math.pi / 2, 2.0, 5.0])
def test_mirror_feedback(phi):
    G = giant_atom_triplet([0.6, 0.6], [phi], lowering(0, 2))
    rate, shift = rate_and_shift_from_triplet(attach_mirror(G, phi))
    assert rate == pytest.approx(symmetric_mirror_rate(0.6, 2, phi), abs=1e-12)
    assert shift == pytest.approx(symmetric_mirror_lamb(0.6, 2, phi), abs=1e-12)


def test_mirror_triplet_to_master_equation():
    layout = CouplingLayout(positions=(0.0, 0.8, 2.0), weights=(0.1, 0.2, 0.15))
    mirror = MirrorSpec(phase=0.7)
    gen = to_master_equation(build_giant_atom(layout, ENV, mirror=mirror))
    assert len(gen.channels) == 1
    assert gen.effective_rates()[0] == pytest.approx(mirror_rate(1.0, layout, mirror, ENV), abs=1e-12)


def test_build_giant_atom_matches_generator():
    layout = CouplingLayout(positions=(0.0, 1.0, 2.5), weights=(0.05, 0.08, 0.05))
    atom = AtomSpec(levels=3, omega10=2.0, anharmonicity=-0.4)
    G = build_giant_atom(layout, ENV, atom, detuning=atom.omega10)
    assert G.n_channels == 4
    from_network = to_master_equation(G)
    direct = build_generator(atom, layout, ENV, shift_mode=ShiftMode.HILBERT)
    assert from_network.allclose(direct, atol=1e-10)
    rates = [rate for rate in from_network.effective_rates()]
    assert sum(rates) == pytest.approx(sum(transition_rates(atom, layout, ENV)), abs=1e-12)
    with pytest.raises(TripletShapeError):
        rate_and_shift_from_triplet(G)


def test_default_two_level_network():
    layout = CouplingLayout(positions=(0.0, 0.9), weights=(0.2, 0.3))
    rate, shift = rate_and_shift_from_triplet(build_giant_atom(layout, ENV))
    assert rate == pytest.approx(relaxation_rate(1.0, 0, layout, ENV), abs=1e-12)
    assert shift == pytest.approx(hilbert_shift_closed_form(1.0, layout, ENV), abs=1e-12)


def test_equivalence_report():
    report = equivalence_report(n_layouts=200, max_points=6, seed=42, with_hilbert=False)
    assert list(report.table.columns) == list(EQUIVALENCE_COLUMNS)
    assert len(report.table) == 200
    assert report.max_rate_error < 1e-12
    assert report.max_shift_error < 1e-12
    assert math.isnan(report.max_hilbert_error)


def test_equivalence_report_hilbert():
    report = equivalence_report(n_layouts=5, max_points=4, seed=7)
    assert report.max_hilbert_error < 1e-5
    assert "max relative" in report.summary()

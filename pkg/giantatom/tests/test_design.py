# Standard Library
import math

# Third Party
import numpy as np
import pytest

# GiantAtom
from giantatom.core.bath import ConstantDOS, Environment
from giantatom.core.layout import CouplingLayout
from giantatom.design import (
    DesignBounds,
    DesignTarget,
    FitConfig,
    best_fit_scale,
    evaluate_objective,
    find_local_extrema,
    fit_layout,
    plateau_width,
    preset_fig3,
    preset_names,
    response,
    scenario_anharmonicity,
    scenario_inversion,
    scenario_multiphoton,
    valley_width,
)
from giantatom.errors import UnknownPresetError, ValidationError

ENV = Environment(dos=ConstantDOS(1.0))


def natural_grid(lo, hi, points):
    return np.linspace(lo, hi, points) * 2 * math.pi


def strength(layout, f):
    # |A|^2 on a natural-unit grid.
    return response(layout, f * 2 * math.pi, ENV) / (4 * math.pi)


def test_preset_lookup():
    assert preset_fig3("fig3-b") == preset_fig3("flat-maximum")
    assert "shallow-minima" in preset_names()
    assert preset_fig3("two-maxima", spacing=2.0).positions == (0.0, 2.0, 3.0, 6.0)
    with pytest.raises(UnknownPresetError):
        preset_fig3("fig3-d")


def test_preset_two_maxima():
    f = np.linspace(0.5, 1.5, 1001)
    maxima = find_local_extrema(f, strength(preset_fig3("fig3-a"), f), "max")
    top = sorted(maxima, key=lambda m: m[1])[-2:]
    (x1, y1), (x2, y2) = sorted(top)
    assert abs(y1 - y2) / max(y1, y2) < 0.01
    assert x1 == pytest.approx(0.648, abs=2e-3)
    assert x2 == pytest.approx(1.352, abs=2e-3)
    assert y1 == pytest.approx(7.1531, rel=1e-3)


def test_preset_flat_maximum():
    f = np.linspace(0.5, 1.5, 1001)
    plateau = plateau_width(f, strength(preset_fig3("fig3-b"), f), 0.9)
    reference = plateau_width(f, strength(CouplingLayout.symmetric(4), f), 0.9)
    assert plateau == pytest.approx(0.347, abs=2e-3)
    assert plateau >= 3 * reference


def test_preset_shallow_minima():
    peak = strength(preset_fig3("fig3-c"), np.linspace(0.5, 1.5, 1001)).max()
    assert peak == pytest.approx(100.0, rel=1e-9)
    f = np.linspace(0.3, 0.7, 4001)
    values = strength(preset_fig3("fig3-c"), f)
    center = int(np.argmin(values))
    assert f[center] == pytest.approx(0.5, abs=1e-3)
    width = valley_width(f, values, 0.01 * peak, center)
    assert width == pytest.approx(0.2216, abs=2e-3)

    g = np.linspace(0.55, 0.95, 4001)
    symmetric = strength(CouplingLayout.symmetric(4), g)
    zero = int(np.argmin(symmetric))
    assert g[zero] == pytest.approx(0.75, abs=1e-3)
    reference = valley_width(g, symmetric, 0.01 * 16.0, zero)
    assert width > 3 * reference


def test_extrema_refinement():
    x = np.linspace(0.0, 2 * math.pi, 101)
    ((xm, ym),) = find_local_extrema(x, np.sin(x), "max")
    assert xm == pytest.approx(math.pi / 2, abs=1e-4)
    assert ym == pytest.approx(1.0, abs=1e-4)
    ((xn, _),) = find_local_extrema(x, np.sin(x), "min")
    assert xn == pytest.approx(3 * math.pi / 2, abs=1e-4)


def test_target_validation():
    with pytest.raises(ValidationError):
        DesignTarget(omegas=[1.0, 0.5], rates=[1.0, 1.0])
    with pytest.raises(ValidationError):
        DesignTarget(omegas=[1.0, 2.0], rates=[1.0, -1.0])
    with pytest.raises(ValidationError):
        DesignTarget(omegas=[1.0, 2.0], rates=[1.0, 1.0], normalization="log")


def test_objective():
    layout = preset_fig3("fig3-a")
    omegas = natural_grid(0.5, 1.5, 201)
    target = DesignTarget.from_layout(layout, omegas, ENV)
    assert evaluate_objective(layout, target) == 0.0
    assert evaluate_objective(layout.scaled(1.1), target) > 0.0

    shape = DesignTarget.from_layout(layout.scaled(2.0), omegas, ENV, normalization="shape")
    assert best_fit_scale(response(layout, omegas, ENV), shape) == pytest.approx(4.0)
    assert evaluate_objective(layout, shape) == pytest.approx(0.0, abs=1e-12 * shape.norm)


def test_fit_recovers_symmetric_target():
    omegas = natural_grid(0.5, 1.5, 101)
    target = DesignTarget.from_layout(CouplingLayout.symmetric(4), omegas, ENV)
    result = fit_layout(target, 4, seed=3, cfg=FitConfig(n_restarts=2, max_iter=200))
    assert result.residual < 1e-6 * target.norm
    assert len(result.residuals) == 2


def test_fit_from_preset():
    layout = preset_fig3("flat-maximum")
    omegas = natural_grid(0.5, 1.5, 101)
    target = DesignTarget.from_layout(layout, omegas, ENV)
    result = fit_layout(target, 4, initial=layout, cfg=FitConfig(n_restarts=3, max_iter=300))
    assert result.residual < 1e-12 * target.norm
    frame = result.to_frame()
    assert list(frame.parameter[:3]) == ["residual", "iterations", "restart"]
    assert len(frame) == 3 + 2 * 4


def test_fit_is_seeded():
    omegas = natural_grid(0.5, 1.5, 51)
    target = DesignTarget.from_layout(preset_fig3("two-maxima"), omegas, ENV)
    cfg = FitConfig(n_restarts=3, max_iter=150)
    first = fit_layout(target, 3, seed=11, cfg=cfg)
    second = fit_layout(target, 3, seed=11, cfg=cfg)
    assert first.residuals == second.residuals
    assert first.layout == second.layout
    assert all(r >= first.residual for r in first.residuals)
    positions = first.layout.positions
    assert all(b - a >= DesignBounds().min_gap - 1e-12 for a, b in zip(positions, positions[1:]))


def test_fit_rejects_mismatched_initial():
    target = DesignTarget.from_layout(CouplingLayout.symmetric(3), natural_grid(0.5, 1.5, 11), ENV)
    with pytest.raises(ValidationError):
        fit_layout(target, 4, initial=CouplingLayout.symmetric(3))


def test_scenario_inversion():
    gamma = 1e-4
    report = scenario_inversion(n_points=10, gamma=gamma)
    assert report.gamma_10 == pytest.approx(0.0, abs=1e-12 * 100 * gamma)
    assert report.gamma_21 == pytest.approx(200 * gamma, rel=1e-9)
    assert report.inverted.any()
    # Without a drive the atom stays in the ground state.
    assert report.populations[0, 0] == pytest.approx(1.0)
    frame = report.to_frame()
    assert list(frame.columns) == ["amplitude", "p0", "p1", "p2", "inverted", "gamma_10", "gamma_21"]


def test_scenario_multiphoton():
    report = scenario_multiphoton(10, 1e-4)
    assert report.ideal
    assert report.at_maximum
    assert report.gamma_10 == pytest.approx(0.0, abs=1e-12 * 1e-2)
    assert not scenario_multiphoton(5, 1e-4).ideal


def test_scenario_anharmonicity_sign_change():
    gamma = 1e-4
    report = scenario_anharmonicity(10, gamma, grid=[0.95, 1.05])
    change = report.anharmonicity_change / gamma
    assert change[0] == pytest.approx(43.5114, rel=1e-4)
    assert change[1] == pytest.approx(-126.2750, rel=1e-4)
    assert report.valid.all()
    frame = report.to_frame()
    assert list(frame.columns) == [
        "omega10",
        "phi_over_2pi",
        "delta_10",
        "delta_21",
        "anharmonicity_change",
        "valid",
    ]


def test_scenarios_need_giant_atom():
    with pytest.raises(ValidationError):
        scenario_inversion(n_points=1)

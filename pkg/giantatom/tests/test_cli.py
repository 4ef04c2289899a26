# Standard Library
import logging
import math

# Third Party
import numpy as np
import pandas as pd
import pytest
import simplejson
from numpy.testing import assert_allclose

# GiantAtom
from giantatom.cli import parse_config, run, serialize_config
from giantatom.errors import ConfigError, ValidationError
from giantatom.scripts.run_giant_atom import main

SYMMETRIC_TEN = {
    "layout": {"positions": [float(k) for k in range(10)], "weights": [1.0] * 10},
    "grid": {"min": 0.8, "max": 1.2, "points": 21},
}

DECAY = {
    "atom": {"levels": 2, "omega10": 1.0},
    "layout": {"positions": [0.0], "weights": [0.1]},
    "simulation": {"points": 51},
}


@pytest.fixture(autouse=True)
def reset_package_logger():
    logger = logging.getLogger("giantatom")
    handlers, level, propagate = list(logger.handlers), logger.level, logger.propagate
    yield
    logger.handlers = handlers
    logger.setLevel(level)
    logger.propagate = propagate


def write_config(tmp_path, data, name="config.json"):
    path = tmp_path / name
    path.write_text(simplejson.dumps(data))
    return str(path)


def error_records(text):
    return [simplejson.loads(line) for line in text.splitlines() if line.startswith('{"error"')]


def test_parse_minimal_config():
    cfg = parse_config('{"layout": {"positions": [0, 1]}, "atom": {"omega10": 1}}')
    assert cfg.atom.levels == 2
    assert cfg.atom.omega10 == 1.0
    assert cfg.environment.temperature == 0.0
    assert cfg.environment.cutoff is None
    assert cfg.layout.velocity == 1.0
    assert cfg.format == "csv"


def test_parse_symmetric_ten_config():
    cfg = parse_config(simplejson.dumps(SYMMETRIC_TEN))
    assert len(cfg.layout.positions) == 10
    assert cfg.grid.points == 21


def test_negative_weight_is_rejected():
    data = {"layout": {"positions": [0.0, 1.0, 2.0], "weights": [1.0, -1.0, 1.0]}}
    with pytest.raises(ValidationError) as excinfo:
        parse_config(simplejson.dumps(data))
    assert excinfo.value.field == "layout.weights[1]"


@pytest.mark.parametrize(
    "text",
    [
        "[1, 2]",
        "{not json",
        '{"atom": {"spin": 1}}',
        '{"format": "xml"}',
        '{"shift_mode": "exact"}',
    ],
)
def test_bad_documents(text):
    with pytest.raises(ConfigError):
        parse_config(text)


def test_overrides_and_round_trip():
    cfg = parse_config(simplejson.dumps(SYMMETRIC_TEN), {"grid.points": 5, "seed": 7, "output": None})
    assert cfg.grid.points == 5
    assert cfg.seed == 7
    assert parse_config(serialize_config(cfg)) == cfg


def test_spectrum_symmetric_ten(tmp_path):
    out = tmp_path / "spectrum.csv"
    code = main(["spectrum", "--config", write_config(tmp_path, SYMMETRIC_TEN), "--output", str(out)])
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "omega,phi_over_2pi,gamma_10,delta_1"
    frame = pd.read_csv(out)
    assert len(frame) == 21
    resonance = frame.iloc[10]
    assert resonance.phi_over_2pi == pytest.approx(1.0)
    assert resonance.gamma_10 == pytest.approx(100 * 4 * math.pi, rel=1e-9)
    assert resonance.delta_1 == pytest.approx(0.0, abs=1e-8)


def test_output_is_deterministic(tmp_path):
    config = write_config(tmp_path, SYMMETRIC_TEN)
    first, second = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(["spectrum", "--config", config, "--output", str(first)]) == 0
    assert main(["spectrum", "--config", config, "--output", str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()
    assert b"\r\n" not in first.read_bytes()


def test_simulate_decay(tmp_path):
    out = tmp_path / "decay.csv"
    assert main(["simulate", "--config", write_config(tmp_path, DECAY), "--output", str(out)]) == 0
    frame = pd.read_csv(out)
    assert list(frame.columns) == ["t", "p0", "p1", "trace"]
    rate = 4 * math.pi * 0.01
    assert_allclose(frame.p1, np.exp(-rate * frame.t), rtol=0, atol=1e-6)
    assert frame.t.iloc[-1] == pytest.approx(10 / rate)


def test_steady(tmp_path):
    data = dict(DECAY, environment={"temperature": 2.0})
    out = tmp_path / "steady.csv"
    assert main(["steady", "--config", write_config(tmp_path, data), "--output", str(out)]) == 0
    frame = pd.read_csv(out)
    assert list(frame.columns) == ["level", "population"]
    omega10 = 2 * math.pi
    assert frame.population[1] / frame.population[0] == pytest.approx(math.exp(-omega10 / 2.0), rel=1e-8)


def test_symmetric_and_mirror(tmp_path):
    data = {"layout": {"positions": [0.0, 1.0, 2.0]}, "grid": {"min": 0.1, "max": 0.9, "points": 9}}
    config = write_config(tmp_path, data)
    out = tmp_path / "symmetric.csv"
    assert main(["symmetric", "--config", config, "--output", str(out)]) == 0
    assert list(pd.read_csv(out).columns) == ["phi_over_2pi", "gamma", "delta", "gamma_mirror", "delta_mirror"]
    out = tmp_path / "mirror.csv"
    assert main(["mirror", "--config", config, "--output", str(out)]) == 0
    frame = pd.read_csv(out)
    assert list(frame.columns) == ["omega", "phi_over_2pi", "gamma", "gamma_mirror", "delta_mirror_correction"]
    # Constructive interference with the reflection at most doubles the rate.
    assert (frame.gamma_mirror <= 2 * frame.gamma + 1e-9).all()


def test_slh_check(tmp_path):
    data = {"slh_check": {"n_layouts": 30, "max_points": 6, "hilbert": False}}
    out = tmp_path / "slh.csv"
    assert main(["slh-check", "--config", write_config(tmp_path, data), "--output", str(out), "--seed", "42"]) == 0
    frame = pd.read_csv(out)
    assert len(frame) == 30
    assert (frame.gamma_slh - frame.gamma_continuum).abs().max() < 1e-12
    assert (frame.delta_slh - frame.delta_b).abs().max() < 1e-12


def test_preset_json(tmp_path):
    out = tmp_path / "preset.json"
    assert main(["preset", "fig3-a", "--format", "json", "--output", str(out)]) == 0
    document = simplejson.loads(out.read_text())
    assert document["command"] == "preset"
    assert document["columns"] == ["omega", "phi_over_2pi", "gamma"]
    assert len(document["data"]["gamma"]) == 1001


def test_scenario_multiphoton(tmp_path):
    out = tmp_path / "multiphoton.csv"
    assert main(["scenario", "multiphoton", "--output", str(out)]) == 0
    frame = pd.read_csv(out).set_index("quantity")
    assert frame.value["ideal"] == 1.0


def test_design_from_layout(tmp_path):
    data = {
        "layout": {"positions": [0.0, 1.0, 1.5, 3.0]},
        "design": {"target": "layout", "initial": "layout", "n_restarts": 2, "max_iter": 50},
        "grid": {"points": 51},
    }
    out = tmp_path / "design.csv"
    assert main(["design", "--config", write_config(tmp_path, data), "--output", str(out)]) == 0
    frame = pd.read_csv(out).set_index("parameter")
    assert frame.value["residual"] == 0.0
    assert frame.value["position_3"] == pytest.approx(3.0)


def test_error_record_for_bad_config(tmp_path, capsys):
    data = {"layout": {"positions": [0.0, 1.0], "weights": [1.0, -2.0]}}
    code = main(["spectrum", "--config", write_config(tmp_path, data)])
    assert code != 0
    (record,) = error_records(capsys.readouterr().err)
    assert record["error"] == "ValidationError"
    assert record["field"] == "layout.weights[1]"


def test_error_record_for_missing_grid(capsys):
    cfg = parse_config("")
    assert run("spectrum", cfg) == 1
    (record,) = error_records(capsys.readouterr().err)
    assert record["error"] == "ConfigError"
    assert record["field"] == "grid"


def test_unknown_scenario(capsys):
    assert run("scenario", parse_config(""), "teleport") == 1
    (record,) = error_records(capsys.readouterr().err)
    assert record["field"] == "scenario"


def test_unknown_preset(capsys):
    assert run("preset", parse_config(""), "fig3-z") == 1
    (record,) = error_records(capsys.readouterr().err)
    assert record["error"] == "UnknownPresetError"


def reject_constant(name):
    raise ValueError(f"non-standard JSON constant {name}")


def test_json_output_has_no_nan(tmp_path):
    data = {"slh_check": {"n_layouts": 4, "max_points": 3, "hilbert": False}, "format": "json"}
    out = tmp_path / "slh.json"
    assert main(["slh-check", "--config", write_config(tmp_path, data), "--output", str(out)]) == 0
    text = out.read_text()
    assert "NaN" not in text
    document = simplejson.loads(text, parse_constant=reject_constant)
    assert document["data"]["delta_hilbert"] == [None] * 4


def test_progress_flag(tmp_path):
    assert parse_config("").progress is False
    assert parse_config('{"progress": true}').progress is True
    data = {"slh_check": {"n_layouts": 3, "max_points": 3, "hilbert": False}}
    out = tmp_path / "slh.csv"
    assert main(["slh-check", "--config", write_config(tmp_path, data), "--output", str(out), "--progress"]) == 0
    assert len(pd.read_csv(out)) == 3


def preset_frame(tmp_path, name, data):
    out = tmp_path / f"{name}.csv"
    assert main(["preset", "fig3-a", "--config", write_config(tmp_path, data, f"{name}.json"), "--output", str(out)]) == 0
    return pd.read_csv(out)


def test_preset_uses_environment_and_mode_coupling(tmp_path):
    base = preset_frame(tmp_path, "base", {})
    strong = preset_frame(tmp_path, "strong", {"layout": {"mode_coupling": 2.0}})
    ohmic = preset_frame(tmp_path, "ohmic", {"environment": {"dos": {"type": "ohmic", "value": 1.0}}})
    assert_allclose(strong.omega, base.omega)
    assert_allclose(strong.gamma, 4 * base.gamma, rtol=1e-12, atol=0)
    assert_allclose(ohmic.gamma, base.omega * base.gamma, rtol=1e-12, atol=0)

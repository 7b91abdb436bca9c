import io
import math
import subprocess
import sys

import pytest

from swavefilm.cli import (
    EXIT_IO,
    EXIT_MODEL,
    EXIT_USAGE,
    RunConfiguration,
    SweepAxis,
    UsageError,
    csv_header,
    emit_csv,
    format_config,
    main,
    parse_config,
)
from swavefilm.sweep import SweepRow

HEADER = "omega_ratio,d_nm,theta_deg,eps1,eps2,T,R,A,terms_used,tail_bound"
HEADER_ORACLE = "omega_ratio,d_nm,theta_deg,eps1,eps2,T,R,A,T_oracle,R_oracle,A_oracle,terms_used,tail_bound"


def test_defaults():
    cfg = parse_config([])
    assert cfg == RunConfiguration()
    assert (cfg.preset, cfg.eps_coll, cfg.eps1, cfg.eps2, cfg.d_nm, cfg.theta_deg) == (
        "sodium", 0.001, 1.0, 4.0, 100.0, 0.0)
    assert (cfg.omega_p, cfg.v_f) == (6.5e15, 8.52e7)


def test_figure_one_flags():
    cfg = parse_config("--preset sodium --eps2 4 --d-nm 100 --sweep omega:0.01:2.5:250".split())
    spec = cfg.sweep_spec()
    assert (spec.axis, spec.start, spec.stop, spec.steps) == ("omega_ratio", 0.01, 2.5, 250)
    assert spec.stack.eps2 == 4.0 and spec.stack.d_nm == 100.0


@pytest.mark.parametrize("token, value", [("40", 40.0), ("ceramic", 40.0), ("glass", 4.0), ("mica", 8.0)])
def test_substrate_values(token, value):
    assert parse_config(["--eps2", token]).eps2 == value


def test_theta_sweep_in_degrees():
    spec = parse_config(["--sweep", "theta:0:85:5"]).sweep_spec()
    assert spec.axis == "theta"
    assert spec.stop == pytest.approx(math.radians(85))


@pytest.mark.parametrize(
    "argv, fragment",
    [
        (["--eps2", "abc"], "abc"),
        (["--d-nm", "-3"], "d_nm"),
        (["--theta-deg", "90"], "theta"),
        (["--preset", "gold"], "gold"),
        (["--bogus", "1"], "bogus"),
        (["--sweep", "omega:0.1:1:3", "--sweep", "d:10:20:3"], "conflicting"),
        (["--sweep", "omega:0:1:3"], "0.01"),
        (["--sweep", "x:0:1:3"], "x"),
        (["--sweep", "omega:0.1:1"], "axis:start:stop:steps"),
        (["--max-terms", "4"], "max_terms"),
        (["--vf-scale", "0"], "vf-scale"),
    ],
)
def test_usage_errors(argv, fragment):
    with pytest.raises(UsageError, match=fragment):
        parse_config(argv)


def test_config_precedence(tmp_path):
    path = tmp_path / "run.cfg"
    path.write_text("# air / film / mica\neps2 = mica\nd_nm = 150   # nm\ntheta_deg = 10\n")
    cfg = parse_config(["--config", str(path), "--d-nm", "200"])
    assert cfg.eps2 == 8.0
    assert cfg.d_nm == 200.0
    assert cfg.theta_deg == 10.0
    assert cfg.eps1 == 1.0


def test_config_errors(tmp_path):
    path = tmp_path / "bad.cfg"
    path.write_text("colour = blue\n")
    with pytest.raises(UsageError, match="colour"):
        parse_config(["--config", str(path)])
    path.write_text("eps1 = 1,5\n")
    with pytest.raises(UsageError, match="1,5"):
        parse_config(["--config", str(path)])
    path.write_text("just words\n")
    with pytest.raises(UsageError, match="key = value"):
        parse_config(["--config", str(path)])


@pytest.mark.parametrize(
    "cfg",
    [
        RunConfiguration(),
        RunConfiguration(eps1=2.25, eps2=1.0, d_nm=123.456, theta_deg=33.3, omega=0.7,
                         sweep=SweepAxis("theta_deg", 0.0, 80.0, 17), oracle=True,
                         vf_scale=1e-3, rel_tol=1e-10, max_terms=5000, output="out.csv",
                         eps_coll=0.1 + 0.2),
        RunConfiguration(omega_p=1.234e16, v_f=1.1e8, sweep=SweepAxis("omega_ratio", 0.01, 2.5, 250)),
    ],
)
def test_config_round_trip(tmp_path, cfg):
    path = tmp_path / "round.cfg"
    path.write_text(format_config(cfg))
    assert parse_config([], str(path)) == cfg


def row(**kw):
    base = dict(omega_ratio=0.5, d_nm=100.0, theta=0.0, eps1=1.0, eps2=4.0)
    base.update(kw)
    return SweepRow(**base)


def test_csv_format():
    out = io.StringIO()
    emit_csv([row(transmittance=0.1, reflectance=0.7, absorptance=0.2, terms_used=42, tail_bound=1e-12)], out)
    assert out.getvalue() == HEADER + "\n0.5,100.0,0.0,1.0,4.0,0.1,0.7,0.2,42,1e-12\n"


def test_csv_oracle_header():
    assert ",".join(csv_header(True)) == HEADER_ORACLE


def test_csv_error_rows():
    out = io.StringIO()
    emit_csv([row(transmittance=0.1, reflectance=0.7, absorptance=0.2, terms_used=42, tail_bound=0.0),
              row(error="vanishing mode denominator at mode 0, oops", error_kind="ResonanceError")], out)
    lines = out.getvalue().splitlines()
    assert lines[0] == HEADER + ",error"
    assert lines[1].endswith(",42,0.0,")
    assert lines[2] == '0.5,100.0,0.0,1.0,4.0,NaN,NaN,NaN,NaN,NaN,"vanishing mode denominator at mode 0, oops"'


def test_main_default_run(capsys):
    assert main([]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == HEADER
    assert len(lines) == 2


def test_main_sweep_to_file(tmp_path):
    out = tmp_path / "fig1.csv"
    assert main(f"--eps2 4 --d-nm 100 --sweep omega:0.01:2.5:250 --output {out}".split()) == 0
    data = out.read_bytes()
    assert data.count(b"\n") == 251
    assert b"\r" not in data


def test_main_oracle_columns(tmp_path):
    out = tmp_path / "o.csv"
    assert main(["--oracle", "--vf-scale", "1e-3", "--sweep", "omega:0.2:2.5:6", "--output", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == HEADER_ORACLE
    for line in lines[1:]:
        values = [float(v) for v in line.split(",")]
        assert abs(values[5] - values[8]) < 1e-3


def test_exit_codes(tmp_path, capsys):
    assert main(["--eps1", "nope"]) == EXIT_USAGE
    assert main(["--eps-coll", "0", "--omega", "1"]) == EXIT_MODEL
    assert main(["--max-terms", "16", "--rel-tol", "1e-15"]) == EXIT_MODEL
    assert main(["--output", str(tmp_path / "missing" / "x.csv")]) == EXIT_IO
    assert main(["--config", str(tmp_path / "absent.cfg")]) == EXIT_IO


def test_deterministic_files(tmp_path):
    argv = "--sweep theta:0:85:30 --omega 1 --oracle".split()
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(argv + ["--output", str(a)]) == 0
    assert main(argv + ["--output", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "swavefilm", "--omega", "0.5"],
                         capture_output=True, text=True, check=True)
    assert out.stdout.startswith(HEADER + "\n0.5,100.0,0.0,1.0,4.0,0.0766341359455942")

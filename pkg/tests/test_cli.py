import json

from coadjoint.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_classify_generic(capsys):
    code, out = run(capsys, "classify", "--group", "su", "--n", "3",
                    "--weights", "1,1")
    assert code == 0
    rep = json.loads(out)
    res = rep["results"][0]
    assert res["kind"] == "generic"
    assert res["real_dimension"] == 6
    assert res["betti"] == [1, 2, 2, 1]
    assert rep["pass"] is True


def test_classify_degenerate(capsys):
    code, out = run(capsys, "classify", "--group", "su", "--n", "3",
                    "--weights", "0,1")
    assert code == 0
    res = json.loads(out)["results"][0]
    assert res["kind"] == "degenerate"
    assert res["betti"] == [1, 1, 1]
    assert res["stabilizer"] == "SU(2)xU(1)"


def test_classify_all_zero_exits_2(capsys):
    assert main(["classify", "--group", "su", "--n", "3",
                 "--weights", "0,0"]) == 2


def test_unsupported_group_exits_2(capsys):
    assert main(["verify", "--group", "so", "--n", "5",
                 "--weights", "1,1"]) == 2


def test_dress_degeneracy_exits_3(capsys):
    assert main(["dress", "--group", "su", "--n", "3", "--weights", "0,1",
                 "--z", "0.5,0;0,0;0,0"]) == 3


def test_dress_reports_residuals(capsys):
    code, out = run(capsys, "dress", "--group", "su", "--n", "3",
                    "--weights", "1,2", "--seed", "5")
    assert code == 0
    rep = json.loads(out)
    assert rep["residuals"]["closed_form"]["residual"] < 1e-10
    assert rep["residuals"]["isospectrality"]["pass"]


def test_dress_trivial_point(capsys):
    code, out = run(capsys, "dress", "--group", "su", "--n", "3",
                    "--weights", "1,2", "--z", "0,0;0,0;0,0")
    rep = json.loads(out)
    mu = rep["results"][0]["mu"]
    assert abs(mu[2] - 1.0) < 1e-12
    assert abs(3 ** 0.5 * mu[7] - 5.0) < 1e-12


def test_decompose(capsys):
    code, out = run(capsys, "decompose", "--group", "sp", "--n", "2",
                    "--weights", "1,1", "--z", "0,0;1,0;0,0;0,0")
    assert code == 0
    rep = json.loads(out)
    assert rep["residuals"]["multiply_back"]["pass"]
    assert rep["residuals"]["unitarity"]["pass"]
    assert abs(rep["results"][0]["a_parameters"][1] ** 2 - 2.0) < 1e-10


def test_verify_su3(capsys):
    code, out = run(capsys, "verify", "--group", "su", "--n", "3",
                    "--weights", "1,2", "--seed", "7", "--points", "20")
    assert code == 0
    rep = json.loads(out)
    assert rep["pass"] is True
    names = {c["name"] for c in rep["results"]}
    assert {"iwasawa_multiply_back", "compactness_kk*", "isospectrality",
            "su3_closed_form", "potential_covariance", "betti_sum",
            "pairing_identity"} <= names


def test_verify_sp2(capsys):
    code, out = run(capsys, "verify", "--group", "sp", "--n", "2",
                    "--weights", "1,1", "--seed", "3", "--points", "10")
    assert code == 0
    rep = json.loads(out)
    pairing = [c for c in rep["results"] if c["name"] == "pairing_identity"][0]
    assert pairing["pass"] and pairing["residual"] < 1e-6


def test_verify_deterministic(capsys):
    _, out1 = run(capsys, "verify", "--group", "su", "--n", "3",
                  "--weights", "1,2", "--seed", "7", "--points", "5")
    _, out2 = run(capsys, "verify", "--group", "su", "--n", "3",
                  "--weights", "1,2", "--seed", "7", "--points", "5")
    assert out1 == out2


def test_metric_grid_csv(capsys):
    code, out = run(capsys, "metric", "--group", "su", "--n", "2",
                    "--weights", "1", "--grid=-1:1:3,-1:1:3", "--out", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("z1_re,z1_im,g_11_re,g_11_im")
    assert len(lines) == 10
    row = lines[1].split(",")
    g = float(row[2])
    z = complex(float(row[0]), float(row[1]))
    assert abs(g - 1.0 / (1 + abs(z) ** 2) ** 2) < 1e-6


def test_dress_grid_csv(capsys):
    code, out = run(capsys, "dress", "--group", "su", "--n", "3",
                    "--weights", "1,2", "--grid=0:1:2,0:0:1;0,0;0,0",
                    "--out", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].split(",")[6] == "mu_1"
    # second row is z = (1, 0, 0): mu_3 = xi/r1^2 (1 - |z1|^2) = 0
    row = dict(zip(lines[0].split(","), lines[2].split(",")))
    assert abs(float(row["mu_3"])) < 1e-12
    assert abs(float(row["phi"]) - 0.6931471805599453) < 1e-12


def test_potential_json(capsys):
    code, out = run(capsys, "potential", "--group", "su", "--n", "3",
                    "--weights", "1,2", "--z", "1,0;0,0;0,0")
    rep = json.loads(out)
    assert abs(rep["results"][0]["phi"] - 0.6931471805599453) < 1e-12


def test_pairing_command(capsys):
    code, out = run(capsys, "pairing", "--group", "su", "--n", "2",
                    "--weights", "1", "--order", "64")
    assert code == 0
    rep = json.loads(out)
    assert rep["residuals"]["identity"]["pass"]


def test_betti_command(capsys):
    code, out = run(capsys, "betti", "--group", "su", "--n", "4",
                    "--weights", "1,1,1")
    rep = json.loads(out)
    assert rep["results"][0]["betti"] == [1, 3, 5, 6, 5, 3, 1]
    assert rep["results"][0]["leray_hirsch"]["ok"] is True


def test_output_file(tmp_path, capsys):
    path = tmp_path / "report.json"
    code = main(["classify", "--group", "su", "--n", "3", "--weights", "1,1",
                 "--output-file", str(path)])
    assert code == 0
    rep = json.loads(path.read_text())
    assert rep["results"][0]["betti_total"] == 6

import json

from eqcover import read_graph_file
from eqcover.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_and_verify_k16_table(tmp_path, capsys):
    g16 = tmp_path / "k16.g"
    cov = tmp_path / "k16.cov"
    code, out, err = run(capsys, "gen", "--family", "complete", "--parameter", "16", "--output", str(g16))
    assert code == 0 and err == ""
    code, out, err = run(capsys, "construct", "--op", "k16-table", "--output", str(cov))
    assert code == 0
    code, out, err = run(capsys, "verify", "--kind", "orientation", "--graph", str(g16), "--cover", str(cov))
    assert code == 0
    assert out == "VALID k=5\n"


def test_solve_sigma_k4(tmp_path, capsys):
    g4 = tmp_path / "k4.g"
    run(capsys, "gen", "--family", "complete", "--parameter", "4", "--output", str(g4))
    witness = tmp_path / "k4.sigma.cov"
    code, out, err = run(capsys, "solve", "--invariant", "sigma", "--graph", str(g4))
    assert code == 0
    assert out == "sigma = 3\n"
    assert witness.exists()
    code, out, err = run(capsys, "verify", "--kind", "orientation", "--graph", str(g4), "--cover", str(witness))
    assert code == 0


def test_verify_violation_line(tmp_path, capsys):
    g3 = tmp_path / "k3.g"
    g3.write_text("p 3 3\n0 1\n0 2\n1 2\n")
    cov = tmp_path / "two.cov"
    # both orientations point edges at vertex 0 inward
    cov.write_text(
        "cover orientation 2 3 3\n"
        "block 1\n1 0\n2 0\n1 2\n"
        "block 2\n1 0\n2 0\n2 1\n"
    )
    code, out, err = run(capsys, "verify", "--kind", "orientation", "--graph", str(g3), "--cover", str(cov))
    assert code == 1
    assert out == "VIOLATION v=0 e=(0,1) f=(0,2)\n"


def test_solve_budget_exit_code(tmp_path, capsys):
    g5 = tmp_path / "k5.g"
    run(capsys, "gen", "--family", "complete", "--parameter", "5", "--output", str(g5))
    code, out, err = run(capsys, "solve", "--invariant", "sigma", "--graph", str(g5), "--max-nodes", "10")
    assert code == 3
    assert out.startswith("sigma in [")


def test_malformed_graph_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.g"
    bad.write_text("p 3 1\n2 1\n")
    code, out, err = run(capsys, "verify", "--kind", "orientation", "--graph", str(bad), "--cover", str(bad))
    assert code == 2
    assert "line 2" in err
    assert out == ""


def test_malformed_flags_exit_2(tmp_path, capsys):
    code, out, err = run(capsys, "solve", "--invariant", "girth", "--graph", "x.g")
    assert code == 2


def test_unknown_family_exits_2(tmp_path, capsys):
    out_path = tmp_path / "g.g"
    code, out, err = run(capsys, "gen", "--family", "hypercube", "--parameter", "3", "--output", str(out_path))
    assert code == 2
    assert not out_path.exists()


def test_gen_triangle_plus_pendant_no_parameter(tmp_path, capsys):
    path = tmp_path / "tp.g"
    code, out, err = run(capsys, "gen", "--family", "triangle-plus-pendant", "--output", str(path))
    assert code == 0
    g = read_graph_file(str(path))
    assert g.edges == ((0, 1), (0, 2), (1, 2), (2, 3))


def test_linegraph_sidecar(tmp_path, capsys):
    g = tmp_path / "p3.g"
    run(capsys, "gen", "--family", "path", "--parameter", "3", "--output", str(g))
    out_path = tmp_path / "lp3.g"
    code, _, _ = run(capsys, "linegraph", "--graph", str(g), "--output", str(out_path))
    assert code == 0
    line = read_graph_file(str(out_path))
    assert (line.n, line.m) == (2, 1)
    sidecar = (tmp_path / "lp3.g.index").read_text()
    assert sidecar == "0 0 1\n1 1 2\n"


def test_eq_round_trip_via_files(tmp_path, capsys):
    g = tmp_path / "c5.g"
    run(capsys, "gen", "--family", "cycle", "--parameter", "5", "--output", str(g))
    sigma_cov = tmp_path / "c5.sigma.cov"
    run(capsys, "solve", "--invariant", "sigma", "--graph", str(g), "--output", str(sigma_cov))
    eq_cov = tmp_path / "c5.eq.cov"
    code, _, _ = run(
        capsys, "construct", "--op", "eq-from-orientation",
        "--graph", str(g), "--cover", str(sigma_cov), "--output", str(eq_cov),
    )
    assert code == 0
    lg = tmp_path / "lc5.g"
    run(capsys, "linegraph", "--graph", str(g), "--output", str(lg))
    code, out, _ = run(capsys, "verify", "--kind", "equivalence", "--graph", str(lg), "--cover", str(eq_cov))
    assert code == 0 and out == "VALID k=3\n"
    back = tmp_path / "back.cov"
    code, _, _ = run(
        capsys, "construct", "--op", "orientation-from-eq", "--triangle-free",
        "--graph", str(g), "--cover", str(eq_cov), "--output", str(back),
    )
    assert code == 0
    code, out, _ = run(capsys, "verify", "--kind", "orientation", "--graph", str(g), "--cover", str(back))
    assert code == 0


def test_construct_invalid_cover_exits_1(tmp_path, capsys):
    g4 = tmp_path / "k4.g"
    run(capsys, "gen", "--family", "complete", "--parameter", "4", "--output", str(g4))
    bad = tmp_path / "bad.cov"
    bad.write_text(
        "cover elbow 1 4 6\n"
        "block 1\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"
    )
    out_path = tmp_path / "never.cov"
    code, out, err = run(
        capsys, "construct", "--op", "orientation-from-elbow",
        "--graph", str(g4), "--cover", str(bad), "--output", str(out_path),
    )
    assert code == 1
    assert out.startswith("VIOLATION path=")
    assert not out_path.exists()


def test_construct_not_bipartite_exits_2(tmp_path, capsys):
    g3 = tmp_path / "k3.g"
    run(capsys, "gen", "--family", "complete", "--parameter", "3", "--output", str(g3))
    code, out, err = run(
        capsys, "construct", "--op", "bipartite", "--graph", str(g3),
        "--output", str(tmp_path / "never.cov"),
    )
    assert code == 2
    assert "odd cycle" in err


def test_bounds_text_and_json(tmp_path, capsys):
    g4 = tmp_path / "k4.g"
    run(capsys, "gen", "--family", "complete", "--parameter", "4", "--output", str(g4))
    code, out, err = run(capsys, "bounds", "--graph", str(g4))
    assert code == 0
    assert "chi: 4 [exact search]" in out
    assert "sigma: 3" in out
    code, out, err = run(capsys, "bounds", "--graph", str(g4), "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["sigma"]["lo"] == 3 and payload["sigma"]["exact"]


def test_bounds_witness_dir(tmp_path, capsys):
    g5 = tmp_path / "k5.g"
    run(capsys, "gen", "--family", "complete", "--parameter", "5", "--output", str(g5))
    wdir = tmp_path / "w"
    code, out, err = run(capsys, "bounds", "--graph", str(g5), "--witness-dir", str(wdir))
    assert code == 0
    assert (wdir / "sigma.cov").exists()
    assert (wdir / "chi.col").exists()
    assert "sigma_witness_file:" in out
    code, _, _ = run(capsys, "verify", "--kind", "orientation", "--graph", str(g5), "--cover", str(wdir / "sigma.cov"))
    assert code == 0


def test_outputs_byte_identical(tmp_path, capsys):
    g = tmp_path / "tp.g"
    run(capsys, "gen", "--family", "triangle-plus-pendant", "--output", str(g))
    _, out1, _ = run(capsys, "bounds", "--graph", str(g), "--json")
    _, out2, _ = run(capsys, "bounds", "--graph", str(g), "--json")
    assert out1 == out2
    cov1 = tmp_path / "a.cov"
    cov2 = tmp_path / "b.cov"
    run(capsys, "construct", "--op", "via-coloring", "--graph", str(g), "--output", str(cov1))
    run(capsys, "construct", "--op", "via-coloring", "--graph", str(g), "--output", str(cov2))
    assert cov1.read_bytes() == cov2.read_bytes()


def test_workers_flag_accepted(tmp_path, capsys):
    g = tmp_path / "c4.g"
    run(capsys, "gen", "--family", "cycle", "--parameter", "4", "--output", str(g))
    cov = tmp_path / "c4.cov"
    run(capsys, "construct", "--op", "bipartite", "--graph", str(g), "--output", str(cov))
    code, out, _ = run(
        capsys, "verify", "--kind", "orientation", "--graph", str(g),
        "--cover", str(cov), "--workers", "4",
    )
    assert code == 0 and out == "VALID k=2\n"


def test_solve_json(tmp_path, capsys):
    g = tmp_path / "k4.g"
    run(capsys, "gen", "--family", "complete", "--parameter", "4", "--output", str(g))
    code, out, _ = run(capsys, "solve", "--invariant", "elb", "--graph", str(g), "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["value"] == 2
    assert payload["status"] == "exact"


def test_elbow_complete_and_double_files(tmp_path, capsys):
    cov4 = tmp_path / "k4.elb.cov"
    code, _, _ = run(capsys, "construct", "--op", "elbow-complete", "--n", "4", "--output", str(cov4))
    assert code == 0
    g4 = tmp_path / "k4.g"
    run(capsys, "gen", "--family", "complete", "--parameter", "4", "--output", str(g4))
    code, out, _ = run(capsys, "verify", "--kind", "elbow", "--graph", str(g4), "--cover", str(cov4))
    assert code == 0 and out == "VALID k=2\n"
    big = tmp_path / "k16.elb.cov"
    gbig = tmp_path / "k16.g"
    code, _, _ = run(
        capsys, "construct", "--op", "elbow-double", "--graph", str(g4),
        "--cover", str(cov4), "--output", str(big), "--graph-output", str(gbig),
    )
    assert code == 0
    code, out, _ = run(capsys, "verify", "--kind", "elbow", "--graph", str(gbig), "--cover", str(big))
    assert code == 0 and out == "VALID k=3\n"


def test_coloring_from_elbow_file(tmp_path, capsys):
    g4 = tmp_path / "k4.g"
    run(capsys, "gen", "--family", "complete", "--parameter", "4", "--output", str(g4))
    cov = tmp_path / "k4.elb.cov"
    run(capsys, "construct", "--op", "elbow-complete", "--n", "4", "--output", str(cov))
    col = tmp_path / "k4.col"
    code, _, _ = run(
        capsys, "construct", "--op", "coloring-from-elbow",
        "--graph", str(g4), "--cover", str(cov), "--output", str(col),
    )
    assert code == 0
    from eqcover import parse_coloring

    coloring = parse_coloring(col.read_text(), 4)
    assert coloring.palette_size == 4


def test_construct_missing_required_flags_exit_2(tmp_path, capsys):
    code, out, err = run(capsys, "construct", "--op", "bipartite", "--output", str(tmp_path / "x.cov"))
    assert code == 2
    assert "requires --graph" in err
    code, out, err = run(capsys, "construct", "--op", "elbow-double", "--graph", str(tmp_path / "g.g"), "--output", str(tmp_path / "x.cov"))
    assert code == 2
    assert "requires --cover" in err
    code, out, err = run(capsys, "construct", "--op", "elbow-complete", "--output", str(tmp_path / "x.cov"))
    assert code == 2
    assert "requires --n" in err


def test_public_api_all_resolves():
    import eqcover

    missing = [name for name in eqcover.__all__ if not hasattr(eqcover, name)]
    assert missing == []


def test_solve_eq_and_eye_write_witness_files(tmp_path, capsys):
    g = tmp_path / "tpp.g"
    run(capsys, "gen", "--family", "triangle-plus-pendant", "--output", str(g))
    lg = tmp_path / "ltpp.g"
    run(capsys, "linegraph", "--graph", str(g), "--output", str(lg))
    code, out, _ = run(capsys, "solve", "--invariant", "eq", "--graph", str(lg))
    assert code == 0 and out == "eq = 2\n"
    code, out, _ = run(
        capsys, "verify", "--kind", "equivalence", "--graph", str(lg),
        "--cover", str(tmp_path / "ltpp.eq.cov"),
    )
    assert code == 0 and out == "VALID k=2\n"
    code, out, _ = run(capsys, "solve", "--invariant", "eye", "--graph", str(g))
    assert code == 0 and out == "eye = 2\n"
    code, out, _ = run(
        capsys, "verify", "--kind", "eyebrow", "--graph", str(g),
        "--cover", str(tmp_path / "tpp.eye.cov"),
    )
    assert code == 0 and out == "VALID k=2\n"

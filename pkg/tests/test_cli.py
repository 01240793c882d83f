import os
import subprocess
import sys

import pytest

from hgt.cli import main
from hgt.core import generate_named
from hgt.io import parse_graph, serialize_graph


@pytest.fixture(autouse=True)
def threads_env(monkeypatch):
    # main() exports --threads; keep that from leaking between tests
    monkeypatch.setenv("HGT_THREADS", "1")


@pytest.fixture
def files(tmp_path):
    def write(stem, name, **kw):
        p = tmp_path / f"{stem}.3g"
        p.write_text(serialize_graph(generate_named(name, **kw)))
        return str(p)
    return write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen(capsys, tmp_path):
    code, out, _ = run(capsys, "gen", "C-minus", "--param", "l=5")
    assert code == 0 and parse_graph(out) == generate_named("C-minus", l=5)
    target = tmp_path / "b.2g"
    assert run(capsys, "gen", "B", "--param", "k=2", "-o", str(target))[0] == 0
    assert target.read_text().startswith("%2graph v1\n")
    assert run(capsys, "gen", "nope")[0] == 2
    assert run(capsys, "gen", "C-minus", "--param", "l5")[0] == 2
    assert run(capsys, "gen", "C-minus", "--param", "l=x")[0] == 2


def test_check_uniform_and_verify(capsys, files, tmp_path):
    c5 = files("c5minus", "C-minus", l=5)
    cert = str(tmp_path / "c5minus.cert")
    for method in ("b2", "links", "21type"):
        code, out, _ = run(capsys, "check", "uniform-zero", c5, "--method", method, "--cert", cert)
        assert code == 0 and "certificate verified" in out
        assert run(capsys, "verify", c5, cert)[0] == 0
    k4m = files("k43minus", "K4-3-minus")
    code, out, _ = run(capsys, "check", "uniform-zero", k4m)
    assert code == 1 and "search complete" in out
    assert run(capsys, "check", "uniform-zero", k4m, "--budget", "1")[0] == 2


def test_verify_rejects_tampered(capsys, files, tmp_path):
    c5 = files("c5minus", "C-minus", l=5)
    cert = tmp_path / "c.cert"
    run(capsys, "check", "uniform-zero", c5, "--cert", str(cert))
    text = cert.read_text()
    bad = text.replace(" red\n", " TMP\n").replace(" green\n", " red\n").replace(" TMP\n", " green\n")
    cert.write_text(bad)
    code, out, _ = run(capsys, "verify", c5, str(cert))
    assert code == 1 and "INVALID" in out
    cert.write_text("%certificate layered\nlayer zz 1\n")
    assert run(capsys, "verify", c5, str(cert))[0] == 2


def test_check_layered(capsys, files, tmp_path):
    code, out, _ = run(capsys, "check", "layered", files("f_section4", "F"))
    assert code == 1 and "not layered (search complete" in out
    cert = str(tmp_path / "f1.cert")
    f1 = files("f1", "F1")
    assert run(capsys, "check", "layered", f1, "--cert", cert)[0] == 0
    assert run(capsys, "verify", f1, cert)[0] == 0


def test_check_linear(capsys, files):
    assert run(capsys, "check", "linear", files("fm", "fano-minus"))[0] == 0
    assert run(capsys, "check", "linear", files("k4", "K4-3"))[0] == 1


def test_transform(capsys, files, tmp_path):
    e = files("edge", "edge")
    out_path = tmp_path / "lin.3g"
    assert run(capsys, "transform", "linearize", e, "--vertex", "3", "-o", str(out_path))[0] == 0
    G = parse_graph(out_path.read_text())
    assert (G.n, G.num_edges) == (9, 7)
    code, out, _ = run(capsys, "transform", "linearize", files("k4", "K4-3"))
    assert code == 0 and parse_graph(out).n == 46
    code, out, _ = run(capsys, "transform", "blowup", e, "--factor", "2")
    assert code == 0 and parse_graph(out).num_edges == 8
    assert run(capsys, "transform", "blowup", e)[0] == 2
    code, out, _ = run(capsys, "transform", "tensor", e, e)
    assert code == 0 and parse_graph(out).num_edges == 6
    assert run(capsys, "transform", "linearize", e, "--vertex", "nope")[0] == 2


def test_guard_and_force(capsys, files):
    k4 = files("k4", "K4-3")
    code, _, err = run(capsys, "transform", "blowup", k4, "--factor", "100")
    assert code == 2 and "4000000" in err


def test_construct(capsys, tmp_path):
    target = tmp_path / "rb.3g"
    assert run(capsys, "construct", "rb", "--n", "30", "--seed", "1", "-o", str(target))[0] == 0
    assert parse_graph(target.read_text()).num_edges == 632
    code, out, _ = run(capsys, "construct", "twelve", "--part-size", "2")
    assert code == 0 and parse_graph(out).n == 24
    assert run(capsys, "construct", "rb", "--n", "30")[0] == 2
    assert run(capsys, "construct", "twelve")[0] == 2


def test_embed(capsys, files, tmp_path):
    e, k4 = files("edge", "edge"), files("k4", "K4-3")
    code, out, _ = run(capsys, "embed", e, k4, "--mode", "count")
    assert code == 0 and out == "embeddings 24\ncopies 4\n"
    code, out, _ = run(capsys, "embed", e, k4, "--mode", "find")
    assert code == 0 and out.count("map ") == 3
    rb = tmp_path / "rb.3g"
    run(capsys, "construct", "rb", "--n", "40", "--seed", "0", "-o", str(rb))
    assert run(capsys, "embed", k4, str(rb))[0] == 1
    assert run(capsys, "embed", k4, str(rb), "--budget", "2")[0] == 2


def test_stats(capsys, tmp_path):
    rb = tmp_path / "rb.3g"
    run(capsys, "construct", "rb", "--n", "20", "--seed", "0", "-o", str(rb))
    code, out, _ = run(capsys, "stats", str(rb), "--uniform-samples", "5", "--min-frac", "0.5", "--seed", "2")
    kv = dict(line.split("=") for line in out.splitlines())
    assert code == 0 and kv["vertices"] == "20" and kv["uniform_samples"] == "5"


def test_errors_exit_2(capsys, tmp_path):
    assert run(capsys, "check", "linear", str(tmp_path / "missing.3g"))[0] == 2
    bad = tmp_path / "bad.3g"
    bad.write_text("%3graph v1\nedge 0 1 2\nedge 0 1 2\n")
    code, _, err = run(capsys, "check", "linear", str(bad))
    assert code == 2 and "line 3" in err
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys)[0] == 2
    assert run(capsys, "--threads", "0", "gen", "edge")[0] == 2


def test_output_is_atomic(capsys, tmp_path, files):
    target = tmp_path / "out.3g"
    target.write_text("keep\n")
    assert run(capsys, "transform", "blowup", files("k4", "K4-3"), "--factor", "100", "-o", str(target))[0] == 2
    assert target.read_text() == "keep\n"
    assert sorted(os.listdir(tmp_path)) == ["k4.3g", "out.3g"]


def test_threads_flag_sets_env(capsys, files):
    run(capsys, "--threads", "3", "check", "linear", files("e", "edge"))
    assert os.environ["HGT_THREADS"] == "3"
    run(capsys, "check", "linear", files("e", "edge"), "--threads", "2")
    assert os.environ["HGT_THREADS"] == "2"


def test_threads_do_not_change_answers(capsys, files, tmp_path):
    z = files("z4", "Z-minus", r=4)
    a, b = tmp_path / "a.cert", tmp_path / "b.cert"
    run(capsys, "check", "uniform-zero", z, "--cert", str(a), "--threads", "1")
    run(capsys, "check", "uniform-zero", z, "--cert", str(b), "--threads", "3")
    assert a.read_text() == b.read_text()


def test_installed_entry_point(files):
    e = files("edge", "edge")
    env = dict(os.environ, HGT_THREADS="2")
    proc = subprocess.run([sys.executable, "-m", "hgt.cli", "check", "linear", e],
                          capture_output=True, text=True, env=env)
    assert proc.returncode == 0 and proc.stdout == "linear\n"
    proc = subprocess.run([sys.executable, "-m", "hgt.cli", "--version"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("hgt ")


def test_reproduce_filter(capsys):
    code, out, _ = run(capsys, "reproduce", "--filter", "blowup")
    assert code == 0 and out.startswith("PASS 12 blowup")
    assert run(capsys, "reproduce", "--filter", "nothing-matches")[0] == 2

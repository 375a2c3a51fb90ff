import csv
import json
import socket
import threading
import time

import pytest

from spectroham.cli import build_parser, main


def run_cli(*argv):
    return main(list(argv))


def test_check_text_output(capsys):
    assert run_cli("check", "D]o") == 0
    out = capsys.readouterr().out
    assert "graph6: D]o" in out
    assert "n=5 delta=2 kappa=2 alpha=3" in out
    assert "traceable=yes hamiltonian=no" in out
    assert out.count("consistent=yes") == 14
    assert "boundary" in out


def test_check_json_output(capsys):
    assert run_cli("check", "C~", "--format", "json") == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["consistent"] is True
    assert obj["graph6"] == "C~"
    assert len(obj["verdicts"]) == 14


def test_check_theorem_subset(capsys):
    assert run_cli("check", "D]o", "--theorems", "main3_laplacian:0") == 0
    out = capsys.readouterr().out
    assert out.count("main3_laplacian") == 1
    assert "dirac_ore" not in out


def test_check_file_input(tmp_path, capsys):
    path = tmp_path / "in.g6"
    path.write_bytes(b"C~\nD]o\n")
    assert run_cli("check", str(path)) == 0
    out = capsys.readouterr().out
    assert "graph6: C~" in out and "graph6: D]o" in out


def test_check_file_skip_bad(tmp_path, capsys):
    path = tmp_path / "in.g6"
    path.write_bytes(b"C~\n!!!\nD]o\n")
    assert run_cli("check", str(path)) == 2
    assert "error:" in capsys.readouterr().err
    assert run_cli("check", str(path), "--skip-bad") == 0


def test_check_malformed_graph6(capsys):
    assert run_cli("check", "!!!") == 2
    assert "error:" in capsys.readouterr().err


def test_verify_summary(capsys):
    assert run_cli("verify", "--n-max", "3") == 0
    out = capsys.readouterr().out
    assert "source:       enumeration" in out
    assert "scanned:      6" in out
    assert "inconsistent: 0" in out


def test_verify_writes_report(tmp_path, capsys):
    out_path = tmp_path / "rows.csv"
    assert run_cli("verify", "--n-max", "3", "--out", str(out_path)) == 0
    assert f"report: {out_path} (csv)" in capsys.readouterr().out
    with open(out_path, newline="") as fh:
        rows = list(csv.reader(fh))
    assert rows[0][0] == "graph6" and len(rows) == 7


def test_verify_jsonl_report(tmp_path):
    out_path = tmp_path / "rows.jsonl"
    assert run_cli("verify", "--n-max", "3", "--format", "jsonl",
                   "--out", str(out_path)) == 0
    lines = out_path.read_text().splitlines()
    assert len(lines) == 6
    assert json.loads(lines[0])["n"] == 1


def test_verify_rejects_large_n(capsys):
    assert run_cli("verify", "--n-max", "8") == 2
    assert "error:" in capsys.readouterr().err


def test_stream_summary(tmp_path, capsys):
    path = tmp_path / "graphs.g6"
    path.write_bytes(b"D]o\n")
    assert run_cli("stream", "--file", str(path),
                   "--theorems", "main3_laplacian:0") == 0
    out = capsys.readouterr().out
    assert "scanned:      1" in out
    assert "predicted:    0" in out
    assert "boundary:     1" in out


def test_stream_aborts_on_bad_line(tmp_path, capsys):
    path = tmp_path / "graphs.g6"
    path.write_bytes(b"D]o\n???x\n")
    assert run_cli("stream", "--file", str(path)) == 2
    err = capsys.readouterr().err
    assert ":2:" in err
    assert run_cli("stream", "--file", str(path), "--skip-bad") == 0


def test_extremal_text(capsys):
    assert run_cli("extremal", "--k", "2", "--s", "0") == 0
    out = capsys.readouterr().out
    assert "graph6: D]o" in out
    assert "hamiltonian=no" in out


def test_extremal_json(capsys):
    assert run_cli("extremal", "--k", "3", "--s", "1", "--format", "json") == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["graph6"] == "EFz_"
    assert abs(obj["mu1"] - 6.0) < 1e-9


def test_sample_summary(capsys):
    assert run_cli("sample", "--n", "8", "--count", "10", "--seed", "1") == 0
    out = capsys.readouterr().out
    assert "source:       sample" in out
    assert "scanned:      10" in out
    assert "inconsistent: 0" in out


def test_parser_rejects_unknown_command():
    with pytest.raises(SystemExit):
        build_parser().parse_args(["fnord"])
    with pytest.raises(SystemExit):
        build_parser().parse_args([])


class _FakeResponse:
    def __init__(self, status_code, body):
        self.status_code = status_code
        self._body = body
        self.text = json.dumps(body)

    def json(self):
        return self._body


def test_check_server_round_trip_faked(monkeypatch, capsys):
    calls = {}

    def fake_post(url, json=None, timeout=None):
        calls["url"] = url
        calls["payload"] = json
        return _FakeResponse(200, {"consistent": True, "graph6": "C~"})

    import httpx

    monkeypatch.setattr(httpx, "post", fake_post)
    assert run_cli("check", "C~", "--server", "http://example.invalid:1234/") == 0
    assert calls["url"] == "http://example.invalid:1234/check"
    assert calls["payload"] == {"graph6": "C~"}
    assert json.loads(capsys.readouterr().out)["consistent"] is True


def test_check_server_propagates_inconsistency(monkeypatch, capsys):
    import httpx

    monkeypatch.setattr(
        httpx, "post",
        lambda url, json=None, timeout=None: _FakeResponse(200, {"consistent": False}))
    assert run_cli("check", "C~", "--server", "http://x") == 1
    capsys.readouterr()


def test_check_server_http_error(monkeypatch, capsys):
    import httpx

    monkeypatch.setattr(
        httpx, "post",
        lambda url, json=None, timeout=None: _FakeResponse(400, {"detail": "bad"}))
    assert run_cli("check", "C~", "--server", "http://x") == 2
    assert "server error 400" in capsys.readouterr().err


def test_check_server_sends_options(monkeypatch, capsys):
    calls = {}

    def fake_post(url, json=None, timeout=None):
        calls["payload"] = json
        return _FakeResponse(200, {"consistent": True})

    import httpx

    monkeypatch.setattr(httpx, "post", fake_post)
    assert run_cli("check", "D]o", "--server", "http://x",
                   "--theorems", "dirac_ore", "--eps", "1e-6") == 0
    assert calls["payload"] == {"graph6": "D]o", "theorems": "dirac_ore", "eps": 1e-6}
    capsys.readouterr()


def test_check_against_live_server(capsys):
    import uvicorn

    from spectroham.service import app

    with socket.socket() as probe:
        probe.bind(("127.0.0.1", 0))
        port = probe.getsockname()[1]
    config = uvicorn.Config(app, host="127.0.0.1", port=port, log_level="error")
    server = uvicorn.Server(config)
    thread = threading.Thread(target=server.run, daemon=True)
    thread.start()
    try:
        deadline = time.time() + 10
        while not server.started:
            if time.time() > deadline:
                pytest.fail("service did not start")
            time.sleep(0.02)
        code = run_cli("check", "D]o", "--server", f"http://127.0.0.1:{port}")
        obj = json.loads(capsys.readouterr().out)
    finally:
        server.should_exit = True
        thread.join(timeout=10)
    assert code == 0
    assert obj["consistent"] is True
    assert obj["graph6"] == "D]o"
    assert len(obj["verdicts"]) == 14

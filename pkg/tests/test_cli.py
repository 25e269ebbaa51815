import io
import json
import os

import pytest

from superschur.characters import default_cache
from superschur.cli import _parse_hook, _parse_hooks, build_parser, main
from superschur.partitions import Hook


def run_cli(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


def test_parse_hook_helpers():
    assert _parse_hook("2,1") == Hook(2, 1)
    assert _parse_hooks("1,1;2,1") == [Hook(1, 1), Hook(2, 1)]
    assert _parse_hooks("1,1 2,2") == [Hook(1, 1), Hook(2, 2)]
    with pytest.raises(Exception):
        _parse_hook("2")


def test_mlambda_value():
    code, text = run_cli("mlambda", "--lambda", "2", "--hook", "1,1")
    assert code == 0 and text.strip() == "2"
    # bar variant sums over the one-box extensions (2) and (1,1)
    code, text = run_cli("mlambda", "--lambda", "1", "--hook", "1,1", "--bar")
    assert code == 0 and text.strip() == "2"


def test_mprime_routes_agree():
    for route in ("residue", "char"):
        code, text = run_cli("mprime", "--lambda", "2", "--hook", "1,1",
                             "--route", route)
        assert code == 0 and text.strip() == "2"


def test_mprime_empty_partition():
    code, text = run_cli("mprime", "--lambda", "-", "--hook", "1,1")
    assert code == 0 and text.strip() == "0"


def test_series_json_univariate():
    code, text = run_cli("series", "--mode", "prime", "--hook", "1,1",
                         "--n", "1", "--m", "0", "--degree", "5",
                         "--route", "char", "--format", "json")
    assert code == 0
    assert json.loads(text) == [0, 1, 2, 3, 4, 5]


def test_series_csv_univariate():
    code, text = run_cli("series", "--mode", "prime", "--hook", "1,1",
                         "--degree", "3", "--route", "char", "--format", "csv")
    assert code == 0
    lines = text.strip().splitlines()
    assert lines[0].startswith("degree")
    assert lines[1].split(",")[:2] == ["0", "0"]


def test_series_multivariate_json():
    code, text = run_cli("series", "--mode", "plain", "--hook", "1,1",
                         "--n", "1", "--m", "1", "--degree", "2",
                         "--route", "char", "--format", "json")
    assert code == 0
    rows = json.loads(text)
    assert all(set(r) == {"exponents", "coeff"} for r in rows)


def test_series_dump_poly():
    code, text = run_cli("series", "--mode", "prime", "--hook", "1,1",
                         "--degree", "2", "--route", "char", "--dump-poly")
    assert code == 0
    lines = text.strip().splitlines()
    assert lines[0] == "2 * t1^2"
    assert lines[1] == "1 * t1^1"


def test_verify_budzik_passes():
    code, text = run_cli("verify", "budzik", "--max-size", "3",
                         "--hooks", "1,1", "--format", "json")
    assert code == 0
    payload = json.loads(text)
    assert payload["summary"]["failures"] == 0
    assert payload["summary"]["cases"] == len(payload["reports"])


def test_verify_budzik_text_summary_first():
    code, text = run_cli("verify", "budzik", "--max-size", "2", "--hooks", "1,1")
    assert code == 0
    first = json.loads(text.splitlines()[0])
    assert first["suite"] == "budzik" and first["failures"] == 0


def test_verify_lemmas_passes():
    code, text = run_cli("verify", "lemmas", "--max-size", "3",
                         "--hooks", "1,1", "--degree", "3", "--format", "json")
    assert code == 0
    assert json.loads(text)["summary"]["failures"] == 0


def test_verify_qidentities_passes():
    code, text = run_cli("verify", "qidentities", "--degree", "12",
                         "--max-kl", "2", "--format", "json")
    assert code == 0
    assert json.loads(text)["summary"]["failures"] == 0


def test_bad_usage_exits_2():
    assert main(["mprime", "--lambda", "2"]) == 2  # missing --hook
    assert main(["nonsense"]) == 2
    assert main(["series", "--mode", "prime", "--hook", "1,1",
                 "--n", "0", "--m", "0"]) == 2  # no series variables


def test_cache_file_roundtrip(tmp_path):
    path = str(tmp_path / "cache.json")
    code, _ = run_cli("--cache", path, "mprime", "--lambda", "2,1",
                      "--hook", "1,1", "--route", "char")
    assert code == 0 and os.path.exists(path)
    data = json.loads(open(path).read())
    assert data  # character values were persisted
    # a second run loads the same file without error
    code, text = run_cli("--cache", path, "mprime", "--lambda", "2,1",
                         "--hook", "1,1", "--route", "char")
    assert code == 0 and text.strip() == "1"


def test_env_cache_variable(tmp_path, monkeypatch):
    path = str(tmp_path / "envcache.json")
    monkeypatch.setenv("SUPERSCHUR_CACHE", path)
    code, _ = run_cli("mlambda", "--lambda", "2", "--hook", "1,1")
    assert code == 0 and os.path.exists(path)


def test_parser_builds():
    parser = build_parser()
    args = parser.parse_args(["mlambda", "--lambda", "3,1", "--hook", "2,1"])
    assert args.lam == (3, 1) and args.hook == Hook(2, 1)

import json
import os

import pytest

from nil_graph.config.config_loader import (
    ensure_config_exists,
    get_config_path,
    get_default_config,
    get_dominating_time_limit,
    get_exact_dominating_cap,
    get_families,
    get_jobs,
    get_max_order,
    load_config,
    load_families_file,
    save_config,
)
from nil_graph.errors import ConfigError
from nil_graph.utils.logs import get_log_path, log


def test_config_lives_under_home(isolated_home):
    assert get_config_path() == os.path.join(str(isolated_home), "config", "config.json")
    assert ensure_config_exists()
    with open(get_config_path(), encoding="utf-8") as f:
        assert json.load(f) == get_default_config()


def test_missing_keys_fall_back_to_defaults():
    save_config({"max_order": 100, "families": {"zn_range": [2, 9]}})
    assert get_max_order() == 100
    assert get_exact_dominating_cap() == 512
    families = get_families()
    assert families["zn_range"] == [2, 9]
    assert families["gf_max_order"] == 343


def test_corrupt_config_is_ignored():
    os.makedirs(os.path.dirname(get_config_path()), exist_ok=True)
    with open(get_config_path(), "w", encoding="utf-8") as f:
        f.write("{not json")
    assert load_config() == get_default_config()


def test_bad_values_use_defaults():
    save_config({"jobs": "many", "max_order": None, "dominating_time_limit": "soon"})
    assert get_jobs() == 1
    assert get_max_order() == 4096
    assert get_dominating_time_limit() == 120.0


def test_dominating_time_limit():
    assert get_dominating_time_limit() == 120.0
    save_config({"dominating_time_limit": 2.5})
    assert get_dominating_time_limit() == 2.5


def test_environment_overrides(monkeypatch, tmp_path):
    monkeypatch.setenv("NILGRAPH_MAX_ORDER", "64")
    assert get_max_order() == 64
    monkeypatch.setenv("NILGRAPH_MAX_ORDER", "lots")
    with pytest.raises(ConfigError):
        get_max_order()

    alternative = tmp_path / "other.json"
    monkeypatch.setenv("NILGRAPH_CONFIG", str(alternative))
    save_config({"jobs": 3})
    assert get_config_path() == str(alternative)
    assert get_jobs() == 3


def test_families_files(tmp_path):
    block = tmp_path / "block.json"
    block.write_text(json.dumps({"zn_range": [2, 5], "products": ["Z2xZ3"]}), encoding="utf-8")
    families = load_families_file(str(block))
    assert families["zn_range"] == [2, 5]
    assert families["products"] == ["Z2xZ3"]
    assert families["specs"] == []

    broken = tmp_path / "broken.json"
    broken.write_text("[1, 2]", encoding="utf-8")
    with pytest.raises(ConfigError):
        load_families_file(str(broken))
    with pytest.raises(ConfigError):
        load_families_file(str(tmp_path / "missing.txt"))


def test_log_lines(capsys):
    log("SCAN", "3 rings")
    assert capsys.readouterr().err == "[SCAN] 3 rings\n"
    assert not os.path.exists(get_log_path())


def test_log_file(capsys):
    save_config({"log_to_file": True})
    log("VERIFY", "done")
    with open(get_log_path(), encoding="utf-8") as f:
        assert f.read() == "[VERIFY] done\n"

import pytest

from config.config import load_settings

KEYS = ["BERGE_NODE_CAP", "BERGE_GRAPH_CYCLE_CAP", "BERGE_PRUNE_EVERY", "BERGE_SEED", "BERGE_LOG_LEVEL"]


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for key in KEYS:
        monkeypatch.delenv(key, raising=False)


def test_defaults():
    settings = load_settings()
    assert settings.node_cap is None
    assert settings.graph_cycle_cap == 200_000
    assert settings.prune_every == 1
    assert settings.seed == 0
    assert settings.log_level == "WARNING"


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("BERGE_NODE_CAP", "5000")
    monkeypatch.setenv("BERGE_GRAPH_CYCLE_CAP", "0")
    monkeypatch.setenv("BERGE_SEED", "42")
    monkeypatch.setenv("BERGE_LOG_LEVEL", "debug")
    settings = load_settings()
    assert settings.node_cap == 5000
    assert settings.graph_cycle_cap is None
    assert settings.seed == 42
    assert settings.log_level == "DEBUG"


@pytest.mark.parametrize("key, value", [("BERGE_PRUNE_EVERY", "0"), ("BERGE_SEED", "abc"), ("BERGE_NODE_CAP", "-3")])
def test_bad_values(monkeypatch, key, value):
    monkeypatch.setenv(key, value)
    with pytest.raises(RuntimeError):
        load_settings()

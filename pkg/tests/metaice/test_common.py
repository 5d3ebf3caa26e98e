import configparser
import glob
import os

import pytest

from metaice.core._common import (
    WORKERS_ENV,
    RowType,
    Spin,
    parallel_map,
    resolve_workers,
    spins_from_text,
    spins_to_text,
)


def square(x):
    return x * x


def test_spin():
    assert Spin.from_char("+") is Spin.PLUS
    assert Spin.PLUS.flip() is Spin.MINUS
    assert str(Spin.MINUS) == "-"
    with pytest.raises(ValueError):
        Spin.from_char("0")


def test_spin_text():
    spins = spins_from_text("+--+")
    assert spins == (Spin.PLUS, Spin.MINUS, Spin.MINUS, Spin.PLUS)
    assert spins_to_text(spins) == "+--+"


@pytest.mark.parametrize("name", ["gamma", "Gamma", "g", "Γ"])
def test_row_type_names(name):
    assert RowType.from_name(name) is RowType.GAMMA


def test_row_type_invalid():
    with pytest.raises(ValueError):
        RowType.from_name("epsilon")
    assert RowType.DELTA.symbol == "Δ"


def test_resolve_workers(monkeypatch):
    monkeypatch.delenv(WORKERS_ENV, raising=False)
    assert resolve_workers() == 1
    monkeypatch.setenv(WORKERS_ENV, "3")
    assert resolve_workers() == 3
    assert resolve_workers(2) == 2
    monkeypatch.setenv(WORKERS_ENV, "many")
    with pytest.raises(ValueError):
        resolve_workers()
    with pytest.raises(ValueError):
        resolve_workers(0)


@pytest.mark.parametrize("workers", [1, 2])
def test_parallel_map_keeps_order(workers):
    items = list(range(10))
    assert parallel_map(square, items, workers) == [x * x for x in items]


def test_public_modules_require_typed_defs():
    root = os.path.join(os.path.dirname(__file__), os.pardir, os.pardir)
    config = configparser.ConfigParser()
    config.read(os.path.join(root, "mypy.ini"))
    paths = glob.glob(os.path.join(root, "metaice", "[!_]*.py"))
    assert len(paths) == 7
    for path in paths:
        section = "metaice." + os.path.splitext(os.path.basename(path))[0]
        assert config.has_section(section), f"mypy.ini has no [{section}]"
        assert not config.getboolean(section, "allow_untyped_defs")

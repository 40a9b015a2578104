"""Shared fixtures: packaged polytope databases and cached presentations."""

import pytest

from toricfano.polytope import load_fixture_file
from toricfano.cohomology import build_presentation

from importlib.resources import files

DATA = files("toricfano") / "data"


@pytest.fixture(scope="session")
def fano3():
    return {P.id: P for P in load_fixture_file(str(DATA / "fano3.txt"))}


@pytest.fixture(scope="session")
def fano4():
    return {P.id: P for P in load_fixture_file(str(DATA / "fano4.txt"))}


class PresCache:
    def __init__(self, polys):
        self.polys = polys
        self._cache = {}

    def __getitem__(self, pid):
        if pid not in self._cache:
            self._cache[pid] = build_presentation(self.polys[pid])
        return self._cache[pid]

    def __iter__(self):
        return iter(self.polys)


@pytest.fixture(scope="session")
def pres3(fano3):
    return PresCache(fano3)


@pytest.fixture(scope="session")
def pres4(fano4):
    return PresCache(fano4)

from __future__ import annotations

from pathlib import Path

import pytest

from ctrect import Filling, parse_filling

FIXTURES = Path(__file__).parent / "fixtures"


def load(name: str) -> Filling:
    return parse_filling((FIXTURES / name).read_text(encoding="utf-8"))


@pytest.fixture
def ct_u() -> Filling:
    return load("ct_u.txt")


@pytest.fixture
def rssyt_t() -> Filling:
    return load("rssyt_t.txt")

"""All eleven acceptance criteria at full corpus size.

Run with ``pytest -s tests/test_acceptance.py`` to see one line per criterion.
Set MFWSHARP_QUICK=1 for the reduced corpora.
"""

import os

import pytest

from mfwsharp.acceptance import CHECKS, AcceptanceConfig, Corpus


@pytest.fixture(scope="module")
def corpus():
    cfg = AcceptanceConfig()
    return Corpus(cfg.quick() if os.environ.get("MFWSHARP_QUICK") else cfg)


@pytest.mark.slow
@pytest.mark.parametrize("check", CHECKS, ids=[c.__name__.removeprefix("check_") for c in CHECKS])
def test_criterion(check, corpus):
    res = check(corpus)
    print(res.line())
    assert res.passed, res.line()

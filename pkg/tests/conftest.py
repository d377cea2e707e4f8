import json
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from mfwsharp.corpus import NAMED_BRAIDS
from mfwsharp.diagram import braid_closure, parse_braid, parse_pd

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

FIXTURES = Path(__file__).parent / "fixtures"


@st.composite
def braid_words(draw, max_strands=4, max_len=8, positive=False):
    n = draw(st.integers(2, max_strands))
    gens = st.integers(1, n - 1)
    if not positive:
        gens = st.tuples(gens, st.booleans()).map(lambda t: t[0] if t[1] else -t[0])
    word = draw(st.lists(gens, min_size=1, max_size=max_len))
    return n, word


def closures(**kw):
    return braid_words(**kw).map(lambda nw: braid_closure(*nw))


@pytest.fixture
def named():
    return {k: parse_braid(v) for k, v in NAMED_BRAIDS.items()}


@pytest.fixture
def trap_star():
    return parse_pd(json.loads((FIXTURES / "trap_star.json").read_text()))

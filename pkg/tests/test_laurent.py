from hypothesis import given
from hypothesis import strategies as st

from mfwsharp.laurent import A, A_INV, ONE, Z, LaurentPoly2, unlink

terms = st.dictionaries(
    st.tuples(st.integers(-4, 4), st.integers(-3, 3)), st.integers(-5, 5), max_size=6
)
polys = terms.map(LaurentPoly2)


def test_cancellation_gives_empty():
    assert (ONE + (-ONE)).terms == {}
    assert not (A - A)


def test_square_expansion():
    assert (A_INV - A) ** 2 == LaurentPoly2({(-2, 0): 1, (0, 0): -2, (2, 0): 1})


def test_scaled_unlink():
    assert A**2 * unlink(2) == LaurentPoly2({(1, -1): 1, (3, -1): -1})


def test_degrees():
    hopf = A * Z + LaurentPoly2({(1, -1): 1, (3, -1): -1})
    d = hopf.degrees()
    assert d["deg_a_max"] == 3 and d["deg_z_min"] == -1
    assert ONE.degrees() == {"deg_a_max": 0, "deg_a_min": 0, "deg_z_max": 0, "deg_z_min": 0}


def test_zero_has_no_degrees():
    import pytest

    with pytest.raises(ValueError, match="zero polynomial"):
        LaurentPoly2().degrees()


def test_conway_of_hopf():
    hopf = A * Z + LaurentPoly2({(1, -1): 1, (3, -1): -1})
    assert hopf.substitute_a_one() == Z
    assert ONE.substitute_a_one() == ONE


@given(polys, polys, polys)
def test_ring_laws(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@given(polys)
def test_mirror_is_an_involution(p):
    assert p.substitute_mirror().substitute_mirror() == p


@given(polys, polys)
def test_mirror_is_multiplicative(p, q):
    assert (p * q).substitute_mirror() == p.substitute_mirror() * q.substitute_mirror()


@given(polys)
def test_json_roundtrip(p):
    assert LaurentPoly2.from_json(p.to_json()) == p

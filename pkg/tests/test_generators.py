from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from framing_orbits.errors import InvalidInputError
from framing_orbits.generators import (
    KINDS,
    Generator,
    compress,
    invert_word,
    word_from_json,
    word_to_json,
)


def test_json_round_trip_each_kind():
    samples = [Generator.tau(3), Generator.pants_twist(1, 2, -2)]
    samples += [Generator(k, (1,), 5) for k in KINDS if k not in ("Tau", "PantsTwist")]
    assert word_from_json(word_to_json(samples)) == tuple(samples)


def test_big_power_from_decimal_string():
    g = Generator.from_json({"gen": "TwistA", "index": 1, "power": "123456789012345678901234567890"})
    assert g.power == 123456789012345678901234567890


@pytest.mark.parametrize("doc", [
    {"gen": "Nope", "index": 1},
    {"gen": "TwistA"},
    {"gen": "PantsTwist", "pair": [1]},
    {"gen": "PantsTwist", "pair": [2, 2]},
    {"gen": "TwistA", "index": 1, "power": True},
    "TwistA",
])
def test_malformed_generators(doc):
    with pytest.raises(InvalidInputError):
        Generator.from_json(doc)


def test_compress_merges_and_drops():
    w = [Generator.twist_a(1, 2), Generator.twist_a(1, -2), Generator.twist_b(1, 1),
         Generator.twist_b(1, 3), Generator.tau(), Generator.tau()]
    assert compress(w) == (Generator.twist_b(1, 4),)


gens = st.builds(
    Generator,
    st.sampled_from(["TwistA", "TwistB", "MixBoundary", "Psi"]),
    st.tuples(st.integers(1, 3)),
    st.integers(-5, 5),
)


@given(st.lists(gens, max_size=12))
def test_inverse_word_is_involution(word):
    assert invert_word(invert_word(word)) == tuple(word)
    assert str(Generator.twist_a(2, -1)) == "TwistA(2)^-1"

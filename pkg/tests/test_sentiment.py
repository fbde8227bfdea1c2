import random

from hypothesis import given, settings
from hypothesis import strategies as st

from arc_miner import ExtractionParams, extract, shifter_weight, tokenize
from arc_miner.lexicon import PolarityLexicon, ShifterLexicon

from oracles import brute_force_extract

PARAMS = ExtractionParams()
WEIGHTS = {
    "negator": -1.0,
    "amplifier": 1.5,
    "deamplifier": 0.5,
    "adversative": 0.25,
}

POLARITY = PolarityLexicon({"bad": -0.75, "good": 0.5, "great": 0.75})
SHIFTERS = ShifterLexicon(
    {"not": "negator", "really": "amplifier", "hardly": "deamplifier", "but": "adversative"}
)


class TestTokenize:
    def test_lowercase_split(self):
        assert tokenize("Hello WORLD") == ["hello", "world"]

    def test_internal_apostrophe_kept(self):
        assert tokenize("don't stop") == ["don't", "stop"]

    def test_surrounding_punctuation_trimmed(self):
        assert tokenize('"hello" — yes!') == ["hello", "yes"]

    def test_empty_and_whitespace(self):
        assert tokenize("") == []
        assert tokenize("  \t\n ") == []

    def test_digits_kept(self):
        assert tokenize("day 100!") == ["day", "100"]


class TestShifterWeight:
    def test_negator(self):
        assert shifter_weight("not", SHIFTERS, PARAMS) == -1.0

    def test_neutral_word(self):
        assert shifter_weight("day", SHIFTERS, PARAMS) == 1.0

    def test_deamplifier(self):
        assert shifter_weight("hardly", SHIFTERS, PARAMS) == 0.5

    def test_amplifier_and_adversative(self):
        assert shifter_weight("really", SHIFTERS, PARAMS) == 1.5
        assert shifter_weight("but", SHIFTERS, PARAMS) == 0.25


class TestExtract:
    def test_worked_negation_example(self):
        tokens = tokenize("this was not a bad day in the sun")
        series = extract(tokens, POLARITY, SHIFTERS, PARAMS)
        assert series.values[tokens.index("bad")] == 0.75
        assert all(v == 0.0 for i, v in enumerate(series.values) if tokens[i] != "bad")
        assert series.hit_indices == [tokens.index("bad")]

    def test_no_matches_all_zero(self):
        series = extract(["just", "plain", "words"], POLARITY, SHIFTERS, PARAMS)
        assert series.values == [0.0, 0.0, 0.0]
        assert series.hit_indices == []

    def test_double_negation(self):
        series = extract(["not", "not", "bad"], POLARITY, SHIFTERS, PARAMS)
        assert series.values[2] == (-1.0) * (-1.0) * (-0.75)

    def test_amplifier(self):
        series = extract(["really", "good", "day"], POLARITY, SHIFTERS, PARAMS)
        assert series.values[1] == 1.5 * 0.5

    def test_window_clipped_at_start(self):
        # hit at position 0 sees only the following tokens
        series = extract(["bad", "really"], POLARITY, SHIFTERS, PARAMS)
        assert series.values[0] == -0.75 * 1.5

    def test_neighboring_polarity_word_contributes_one(self):
        series = extract(["good", "bad"], POLARITY, SHIFTERS, PARAMS)
        assert series.values == [0.5, -0.75]

    def test_locality_outside_window(self):
        base = ["x"] * 10 + ["bad"] + ["x"] * 10
        changed = list(base)
        changed[0] = "really"  # more than window_radius away from the hit
        a = extract(base, POLARITY, SHIFTERS, PARAMS)
        b = extract(changed, POLARITY, SHIFTERS, PARAMS)
        assert a.values == b.values

    def test_zero_radius_ignores_context(self):
        params = ExtractionParams(window_radius=0)
        series = extract(["not", "bad"], POLARITY, SHIFTERS, params)
        assert series.values[1] == -0.75


ALPHABET = ["bad", "good", "great", "not", "really", "hardly", "but", "day", "sun", "x"]


def _random_stream(rng, max_len=500):
    return [rng.choice(ALPHABET) for _ in range(rng.randint(1, max_len))]


def test_oracle_equivalence_random_streams():
    rng = random.Random(1234)
    for _ in range(200):
        tokens = _random_stream(rng, max_len=80)
        series = extract(tokens, POLARITY, SHIFTERS, PARAMS)
        expected = brute_force_extract(
            tokens, POLARITY.entries, SHIFTERS.entries, WEIGHTS, PARAMS.window_radius
        )
        assert series.values == expected


@settings(max_examples=100, deadline=None)
@given(
    tokens=st.lists(st.sampled_from(ALPHABET), min_size=1, max_size=60),
    radius=st.integers(min_value=0, max_value=4),
)
def test_oracle_equivalence_property(tokens, radius):
    params = ExtractionParams(window_radius=radius)
    series = extract(tokens, POLARITY, SHIFTERS, params)
    assert series.values == brute_force_extract(
        tokens, POLARITY.entries, SHIFTERS.entries, WEIGHTS, radius
    )
    # hit/non-zero coincidence
    assert series.hit_indices == [i for i, t in enumerate(tokens) if t in POLARITY]

"""Sentiment, emotionality and surprisal complexity."""

from __future__ import annotations

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import msg
from valuescope import (
    LexiconSentimentScorer,
    PolarLexicon,
    ReferenceDictionary,
    build_reference,
    complexity,
    emotionality,
    language_scores,
    score_sentiment,
)

POS = ("good", "great", "love")
NEG = ("bad", "awful", "hate")


@pytest.fixture()
def lexicon():
    return PolarLexicon(POS, NEG)


class TestSentiment:
    def test_formula_three_pos_one_neg(self, lexicon):
        text = "good great love the good parts, one bad moment"
        # p=4, q=1 -> 0.5 + 3/10
        assert score_sentiment(text, lexicon) == pytest.approx(0.8)

    def test_neutral_when_no_polar_token(self, lexicon):
        assert score_sentiment("nothing polar here", lexicon) == 0.5

    def test_extremes(self, lexicon):
        assert score_sentiment("good great", lexicon) == 1.0
        assert score_sentiment("bad awful hate", lexicon) == 0.0

    def test_balanced_counts_are_neutral(self, lexicon):
        assert score_sentiment("good bad", lexicon) == 0.5

    def test_matching_is_token_based(self, lexicon):
        # "goodness" must not match "good"; punctuation must not block it.
        assert score_sentiment("goodness me", lexicon) == 0.5
        assert score_sentiment("GOOD!", lexicon) == 1.0

    def test_multi_token_term_rejected(self):
        with pytest.raises(ValueError, match="single token"):
            PolarLexicon(["very good"], ["bad"])

    def test_default_lexicon_loads_and_is_disjoint(self):
        lex = PolarLexicon.default()
        assert lex.positive and lex.negative
        assert not (lex.positive & lex.negative)

    @settings(max_examples=60, deadline=None)
    @given(
        st.lists(st.sampled_from(POS + NEG + ("the", "and", "word")), max_size=20)
    )
    def test_swapping_lexicon_mirrors_score(self, words):
        text = " ".join(words)
        straight = PolarLexicon(POS, NEG)
        swapped = PolarLexicon(NEG, POS)
        assert score_sentiment(text, straight) == pytest.approx(
            1.0 - score_sentiment(text, swapped), abs=1e-12
        )

    def test_scorer_class_wraps_lexicon(self, lexicon):
        scorer = LexiconSentimentScorer(lexicon)
        assert scorer("good") == 1.0


class TestEmotionality:
    def test_all_neutral_is_zero(self):
        assert emotionality([0.5, 0.5, 0.5]) == 0.0

    def test_worked_example(self):
        assert emotionality([0.2, 0.8]) == pytest.approx(0.3)

    def test_empty_is_none(self):
        assert emotionality([]) is None

    @settings(max_examples=60, deadline=None)
    @given(st.lists(st.floats(min_value=0.0, max_value=1.0), min_size=1, max_size=30))
    def test_zero_iff_all_neutral_and_bounded(self, sentiments):
        value = emotionality(sentiments)
        assert 0.0 <= value <= 0.5
        if all(s == 0.5 for s in sentiments):
            assert value == 0.0
        else:
            assert value > 0.0


class TestReferenceDictionary:
    def test_add_one_smoothing_worked_example(self):
        ref = build_reference(["a", "a", "b"])
        # N=3, V=2, denominator 6
        assert ref.probability("a") == pytest.approx(3 / 6, abs=1e-15)
        assert ref.probability("b") == pytest.approx(2 / 6, abs=1e-15)
        assert ref.probability("zzz") == pytest.approx(1 / 6, abs=1e-15)

    def test_probability_mass_bounded(self):
        ref = build_reference("the quick brown fox jumps".split() * 40)
        total = sum(ref.probabilities.values()) + ref.unseen
        assert total <= 1.0 + 1e-9

    def test_surprisal_is_cached_and_consistent(self):
        ref = build_reference(["a", "b", "b"])
        first = ref.surprisal("b")
        assert first == pytest.approx(-math.log(ref.probability("b")))
        assert ref.surprisal("b") == first

    def test_invalid_inputs_rejected(self):
        with pytest.raises(ValueError):
            build_reference([])
        with pytest.raises(ValueError):
            ReferenceDictionary({"a": 0.0}, unseen=0.1)
        with pytest.raises(ValueError):
            ReferenceDictionary({"a": 0.9, "b": 0.2}, unseen=0.1)
        with pytest.raises(ValueError):
            ReferenceDictionary({"a": 0.5}, unseen=0.0)

    def test_from_file(self, tmp_path):
        path = tmp_path / "ref.json"
        path.write_text('{"a": 2, "b": 1}')
        ref = ReferenceDictionary.from_file(str(path))
        assert ref.probability("a") == pytest.approx(3 / 6)

    def test_from_file_rejects_bad_counts(self, tmp_path):
        path = tmp_path / "ref.json"
        path.write_text('{"a": -1}')
        with pytest.raises(ValueError):
            ReferenceDictionary.from_file(str(path))


class TestComplexity:
    def test_uniform_dictionary_gives_log_v(self):
        v = 1024
        ref = ReferenceDictionary(
            {f"w{i}": 1.0 / v for i in range(v)}, unseen=1e-12
        )
        tokens = [f"w{i % v}" for i in range(5000)]
        assert complexity(tokens, ref) == pytest.approx(math.log(v), abs=1e-9)

    def test_rare_tokens_raise_complexity(self):
        ref = build_reference(["common"] * 99 + ["rare"])
        assert complexity(["rare"], ref) > complexity(["common"], ref)
        assert complexity(["never_seen"], ref) > complexity(["rare"], ref)

    def test_empty_tokens_is_none(self):
        ref = build_reference(["a"])
        assert complexity([], ref) is None

    def test_mean_over_tokens(self):
        ref = build_reference(["a", "a", "b"])
        solo_a = complexity(["a"], ref)
        solo_b = complexity(["b"], ref)
        assert complexity(["a", "b"], ref) == pytest.approx((solo_a + solo_b) / 2)


class TestLanguageScores:
    def test_bundle(self, lexicon):
        messages = [
            msg("m1", "x", 0.0, text="good good thing"),
            msg("m2", "y", 1.0, text="bad thing"),
        ]
        ref = build_reference(
            t for m in messages for t in ("good", "bad", "thing")
        )
        scores = language_scores(messages, LexiconSentimentScorer(lexicon), ref)
        assert scores.sentiment == pytest.approx((1.0 + 0.0) / 2)
        assert scores.emotionality == pytest.approx(0.5)
        assert scores.complexity == pytest.approx(
            complexity(["good", "good", "thing", "bad", "thing"], ref)
        )

    def test_empty_messages(self, lexicon):
        scores = language_scores([], LexiconSentimentScorer(lexicon), None)
        assert scores == pytest.approx((None, None, None)) or (
            scores.sentiment is None
            and scores.emotionality is None
            and scores.complexity is None
        )

    def test_without_reference_complexity_absent(self, lexicon):
        messages = [msg("m1", "x", 0.0, text="good")]
        scores = language_scores(messages, LexiconSentimentScorer(lexicon), None)
        assert scores.sentiment == 1.0
        assert scores.complexity is None

    def test_custom_callable_scorer(self):
        messages = [msg("m1", "x", 0.0, text="whatever")]
        scores = language_scores(messages, lambda text: 0.25, None)
        assert scores.sentiment == 0.25
        assert scores.emotionality == 0.25

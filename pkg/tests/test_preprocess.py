import random

import pytest

from lingoclust.corpus_io import DEFAULT_STOPWORD_PATH, Document, LingoConfig, load_stopwords
from lingoclust.preprocess import preprocess_corpus, stem_token, tokenize


class TestTokenize:
    def test_two_sentences(self):
        assert tokenize("a b c. a b d.") == [["a", "b", "c"], ["a", "b", "d"]]

    def test_empty_text(self):
        assert tokenize("") == []

    def test_alphanumeric_runs(self):
        assert tokenize("Web-Mining 2024!") == [["web", "mining", "2024"]]

    def test_newline_breaks_sentences(self):
        assert tokenize("one two\nthree") == [["one", "two"], ["three"]]

    def test_no_empty_tokens(self):
        for sentence in tokenize("...!!x?? -- y_z"):
            assert all(sentence)


class TestStemToken:
    # Expected stems follow the published suffix-stripping rules end to end.
    @pytest.mark.parametrize(
        "word,expected",
        [
            ("clusters", "cluster"),
            ("indexing", "index"),
            ("a", "a"),
            ("caresses", "caress"),
            ("ponies", "poni"),
            ("ties", "ti"),
            ("cats", "cat"),
            ("feed", "feed"),
            ("agreed", "agre"),
            ("plastered", "plaster"),
            ("bled", "bled"),
            ("motoring", "motor"),
            ("sing", "sing"),
            ("conflated", "conflat"),
            ("troubled", "troubl"),
            ("sized", "size"),
            ("hopping", "hop"),
            ("tanned", "tan"),
            ("falling", "fall"),
            ("hissing", "hiss"),
            ("fizzed", "fizz"),
            ("failing", "fail"),
            ("filing", "file"),
            ("happy", "happi"),
            ("sky", "sky"),
            ("relational", "relat"),
            ("conditional", "condit"),
            ("rational", "ration"),
            ("digitizer", "digit"),
            ("operator", "oper"),
            ("feudalism", "feudal"),
            ("decisiveness", "decis"),
            ("hopefulness", "hope"),
            ("callousness", "callous"),
            ("formaliti", "formal"),
            ("sensitiviti", "sensit"),
            ("sensibiliti", "sensibl"),
            ("triplicate", "triplic"),
            ("formative", "form"),
            ("formalize", "formal"),
            ("electriciti", "electr"),
            ("electrical", "electr"),
            ("hopeful", "hope"),
            ("goodness", "good"),
            ("revival", "reviv"),
            ("allowance", "allow"),
            ("inference", "infer"),
            ("airliner", "airlin"),
            ("gyroscopic", "gyroscop"),
            ("adjustable", "adjust"),
            ("defensible", "defens"),
            ("irritant", "irrit"),
            ("replacement", "replac"),
            ("adjustment", "adjust"),
            ("dependent", "depend"),
            ("adoption", "adopt"),
            ("communism", "commun"),
            ("activate", "activ"),
            ("homologous", "homolog"),
            ("effective", "effect"),
            ("bowdlerize", "bowdler"),
            ("probate", "probat"),
            ("rate", "rate"),
            ("cease", "ceas"),
            ("controll", "control"),
            ("roll", "roll"),
            ("generalizations", "gener"),
            ("oscillators", "oscil"),
        ],
    )
    def test_known_stems(self, word, expected):
        assert stem_token(word) == expected

    def test_deterministic(self):
        rng = random.Random(5)
        words = ["".join(rng.choice("abcdefgilmnorstu") for _ in range(rng.randint(1, 12))) for _ in range(500)]
        assert [stem_token(w) for w in words] == [stem_token(w) for w in words]


def corpus(*bodies):
    return [Document(id=i, title="", body=b) for i, b in enumerate(bodies, start=1)]


class TestPreprocessCorpus:
    def test_frequency_threshold_strict(self):
        docs = corpus("apple one", "apple two", "apple three")
        _, vocab = preprocess_corpus(docs, LingoConfig(term_frequency_threshold=2))
        assert "appl" in vocab  # frequency 3 > 2
        assert "one" not in vocab  # frequency 1 <= 2

    def test_term_at_threshold_excluded(self):
        docs = corpus("apple", "apple")
        _, vocab = preprocess_corpus(docs, LingoConfig(term_frequency_threshold=2))
        assert len(vocab) == 0

    def test_stopwords_flagged_but_out_of_vocabulary(self):
        docs = corpus("the apple", "the apple", "the apple")
        processed, vocab = preprocess_corpus(docs, LingoConfig())
        assert "the" not in vocab
        flags = [t.is_stopword for t in processed[0].tokens()]
        assert flags == [True, False]

    def test_missing_stopword_file(self):
        docs = corpus("apple apple apple")
        config = LingoConfig(stopword_list_path="/nonexistent/stopwords.txt")
        with pytest.raises(FileNotFoundError):
            preprocess_corpus(docs, config)

    def test_vocabulary_sorted_bijection(self):
        rng = random.Random(11)
        words = ["alpha", "beta", "gamma", "delta", "epsilon"]
        docs = corpus(*(" ".join(rng.choice(words) for _ in range(30)) for _ in range(4)))
        _, vocab = preprocess_corpus(docs, LingoConfig(term_frequency_threshold=1))
        assert list(vocab.terms) == sorted(vocab.terms)
        assert sorted(vocab.index.values()) == list(range(len(vocab)))
        assert all(vocab.terms[i] == s for s, i in vocab.index.items())

    def test_no_vocabulary_term_in_stopword_list(self):
        stopwords = load_stopwords(DEFAULT_STOPWORD_PATH)
        docs = corpus(
            "doing the doing", "doing a doing", "doing of doing"
        )  # 'doing' stems to 'do', a listed stop word
        _, vocab = preprocess_corpus(docs, LingoConfig())
        assert all(term not in stopwords for term in vocab.terms)

    def test_determinism(self):
        rng = random.Random(3)
        docs = corpus(
            *(
                " ".join(rng.choice(["red", "green", "blue", "the"]) for _ in range(25))
                for _ in range(5)
            )
        )
        first = preprocess_corpus(docs, LingoConfig())
        second = preprocess_corpus(docs, LingoConfig())
        assert first[0] == second[0]
        assert first[1] == second[1]

    def test_corpus_frequency_exceeds_threshold(self):
        rng = random.Random(9)
        docs = corpus(*(" ".join(rng.choice("xyzw") * 2 for _ in range(20)) for _ in range(3)))
        for threshold in (0, 1, 2, 5):
            _, vocab = preprocess_corpus(docs, LingoConfig(term_frequency_threshold=threshold))
            assert all(f > threshold for f in vocab.corpus_frequency)

    def test_sentence_boundaries_preserved(self):
        docs = corpus("one two. three four")
        processed, _ = preprocess_corpus(docs, LingoConfig())
        assert [len(s) for s in processed[0].sentences] == [2, 2]

    def test_stopword_file_comments_and_blanks(self, tmp_path):
        stopfile = tmp_path / "stop.txt"
        stopfile.write_text("# comment line\nfoo\n\nbar  # trailing comment\n")
        stopwords = load_stopwords(stopfile)
        assert stopwords == {"foo", "bar"}

#include "comet/ngram.hpp"

#include "comet/textutil.hpp"
#include "ngram_oracle.hpp"
#include "test_helpers.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace comet;

namespace {

std::vector<Sentence> sentences_from(const std::vector<std::string>& lines) {
    std::vector<Sentence> out;
    for (const auto& line : lines) out.push_back(split_whitespace(line));
    return out;
}

std::vector<Sentence> random_corpus(std::mt19937_64& rng, std::size_t n_sentences,
                                    int vocab_size) {
    std::vector<Sentence> corpus;
    for (std::size_t s = 0; s < n_sentences; ++s) {
        Sentence sent;
        const auto len = 4 + rng() % 9;
        for (std::size_t i = 0; i < len; ++i)
            sent.push_back(std::string(1, static_cast<char>('a' + rng() % vocab_size)));
        corpus.push_back(std::move(sent));
    }
    return corpus;
}

} // namespace

TEST_CASE("train: sliding window counts") {
    const auto model = NGramModel::train(sentences_from({"the cat sat on the mat"}));
    CHECK(model.prob({"the", "cat", "sat"}, "on") == 1.0);
    CHECK(model.prob({"cat", "sat", "on"}, "the") == 1.0);
    CHECK(model.prob({"sat", "on", "the"}, "mat") == 1.0);
    CHECK(model.context_count() == 3);
}

TEST_CASE("train: short sentences contribute nothing") {
    const auto model = NGramModel::train(sentences_from({"a b c"}));
    CHECK(model.context_count() == 0);
}

TEST_CASE("train: counts add across duplicates") {
    const auto model = NGramModel::train(sentences_from({"x y z w", "x y z w"}));
    CHECK(model.prob({"x", "y", "z"}, "w") == 1.0);
    CHECK(model.contexts().at("x y z").at("w") == 2);
}

TEST_CASE("prob: branching context from the two-sentence corpus") {
    const auto corpus =
        sentences_from({"the cat sat on the mat", "the cat sat on a log"});
    const auto model = NGramModel::train(corpus);
    CHECK(model.prob({"cat", "sat", "on"}, "the") == 0.5);
    CHECK(model.prob({"cat", "sat", "on"}, "a") == 0.5);
    CHECK(model.prob({"cat", "sat", "on"}, "zzz") == 0.0);
    CHECK(model.prob({"never", "seen", "ctx"}, "the") == 0.0);
    // agreement with the brute-force oracle
    CHECK(model.prob({"cat", "sat", "on"}, "the") ==
          oracle::prob(corpus, {"cat", "sat", "on"}, "the"));
}

TEST_CASE("probabilities per context sum to one") {
    std::mt19937_64 rng(17);
    const auto corpus = random_corpus(rng, 120, 5);
    const auto model = NGramModel::train(corpus);
    for (const auto& [key, nexts] : model.contexts()) {
        const auto tokens = split_whitespace(key);
        double sum = 0.0;
        for (const auto& [word, _] : nexts)
            sum += model.prob({tokens[0], tokens[1], tokens[2]}, word);
        CHECK(std::abs(sum - 1.0) < 1e-12);
    }
}

TEST_CASE("complete: branch below threshold stops immediately") {
    const auto model = NGramModel::train(
        sentences_from({"the cat sat on the mat", "the cat sat on a log"}));
    const auto result = model.complete({"the", "cat", "sat", "on"});
    CHECK(result.output == std::vector<std::string>{"the", "cat", "sat", "on"});
    CHECK(result.stop_reason == NGramModel::StopReason::below_threshold);
}

TEST_CASE("complete: single-path corpus runs to the end") {
    const auto model = NGramModel::train(sentences_from({"a b c d e"}));
    const auto result = model.complete({"a", "b", "c", "d"});
    CHECK(result.output == std::vector<std::string>{"a", "b", "c", "d", "e"});
    CHECK(result.stop_reason == NGramModel::StopReason::no_continuation);
}

TEST_CASE("complete: cyclic corpus hits the cap") {
    std::string line = "x";
    for (int i = 0; i < 60; ++i) line += " x";
    const auto model = NGramModel::train(sentences_from({line}));
    const auto result = model.complete({"x", "x", "x", "x"});
    CHECK(result.output.size() == 40);
    CHECK(result.stop_reason == NGramModel::StopReason::max_length);
}

TEST_CASE("complete: deterministic") {
    std::mt19937_64 rng(23);
    const auto corpus = random_corpus(rng, 60, 4);
    const auto model = NGramModel::train(corpus);
    const std::array<std::string, 4> prefix{"a", "b", "a", "b"};
    const auto r1 = model.complete(prefix, 0.0);
    const auto r2 = model.complete(prefix, 0.0);
    CHECK(r1.output == r2.output);
    CHECK(r1.stop_reason == r2.stop_reason);
}

TEST_CASE("oracle equivalence on random corpora") {
    std::mt19937_64 rng(101);
    for (int round = 0; round < 8; ++round) {
        const auto corpus = random_corpus(rng, 30 + rng() % 170, 4);
        const auto model = NGramModel::train(corpus);

        // prob agrees on every stored pair and on unseen probes
        for (const auto& [key, nexts] : model.contexts()) {
            const auto ctx_tokens = split_whitespace(key);
            const std::array<std::string, 3> ctx{ctx_tokens[0], ctx_tokens[1],
                                                 ctx_tokens[2]};
            for (const auto& [word, _] : nexts) {
                CHECK(std::abs(model.prob(ctx, word) - oracle::prob(corpus, ctx, word)) <
                      1e-12);
            }
            CHECK(model.prob(ctx, "unseen-word") ==
                  oracle::prob(corpus, ctx, "unseen-word"));
        }

        // generation agrees step by step at the three thresholds
        for (const double threshold : {0.9, 0.5, 0.0}) {
            for (int p = 0; p < 10; ++p) {
                std::array<std::string, 4> prefix;
                const auto& seed_sentence = corpus[rng() % corpus.size()];
                for (int i = 0; i < 4; ++i) prefix[i] = seed_sentence[i];
                const auto got = model.complete(prefix, threshold, 40);
                const auto want = oracle::complete(corpus, prefix, threshold, 40);
                CHECK(got.output == want.output);
                CHECK(std::string(to_string(got.stop_reason)) == want.stop_reason);
            }
        }
    }
}

TEST_CASE("every generated extension had conditional probability >= threshold") {
    std::mt19937_64 rng(7);
    const auto corpus = random_corpus(rng, 150, 3);
    const auto model = NGramModel::train(corpus);
    for (int p = 0; p < 20; ++p) {
        const auto& s = corpus[rng() % corpus.size()];
        const auto result = model.complete({s[0], s[1], s[2], s[3]}, 0.9, 40);
        for (std::size_t i = 4; i < result.output.size(); ++i) {
            const double pr = model.prob(
                {result.output[i - 3], result.output[i - 2], result.output[i - 1]},
                result.output[i]);
            CHECK(pr >= 0.9);
        }
    }
}

TEST_CASE("serialization round trip preserves all probabilities") {
    std::mt19937_64 rng(31);
    const auto corpus = random_corpus(rng, 80, 5);
    const auto model = NGramModel::train(corpus);
    const auto json = model.to_json_string();
    const auto back = NGramModel::from_json_string(json);
    CHECK(back.to_json_string() == json);
    for (const auto& [key, nexts] : model.contexts()) {
        const auto t = split_whitespace(key);
        for (const auto& [word, _] : nexts)
            CHECK(model.prob({t[0], t[1], t[2]}, word) ==
                  back.prob({t[0], t[1], t[2]}, word));
    }
    CHECK(back.vocab().tokens == model.vocab().tokens);

    test::TempDir dir;
    const auto path = dir.path() / "model.json";
    model.save(path);
    const auto loaded = NGramModel::load(path);
    CHECK(loaded.to_json_string() == json);
    CHECK_THROWS(NGramModel::load(dir.path() / "missing.json"));
}

TEST_CASE("model file rejects foreign json") {
    CHECK_THROWS(NGramModel::from_json_string("{\"magic\":\"other\"}"));
    CHECK_THROWS(NGramModel::from_json_string("not json at all"));
}

TEST_CASE("holdout_split: deterministic, disjoint, prefix extraction") {
    std::mt19937_64 rng(5);
    const auto corpus = random_corpus(rng, 100, 6);
    const auto a = holdout_split(corpus, 10, 42);
    const auto b = holdout_split(corpus, 10, 42);
    CHECK(a.holdout == b.holdout);
    CHECK(a.train == b.train);
    CHECK(a.prefixes == b.prefixes);
    CHECK(a.holdout.size() == 10);
    CHECK(a.train.size() == 90);
    CHECK_FALSE(a.scaled_down);

    const auto c = holdout_split(corpus, 10, 43);
    CHECK(a.holdout != c.holdout); // different seed, different sample

    // disjointness: train multiset + holdout multiset = corpus multiset
    auto sorted = [](std::vector<Sentence> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    auto merged = a.train;
    merged.insert(merged.end(), a.holdout.begin(), a.holdout.end());
    CHECK(sorted(merged) == sorted(corpus));

    for (std::size_t i = 0; i < a.holdout.size(); ++i)
        for (int k = 0; k < 4; ++k) CHECK(a.prefixes[i][k] == a.holdout[i][k]);
}

TEST_CASE("holdout_split: scales down when the corpus is small") {
    std::mt19937_64 rng(9);
    const auto corpus = random_corpus(rng, 5, 3);
    const auto split = holdout_split(corpus, 10000, 1);
    CHECK(split.scaled_down);
    CHECK(split.holdout.size() == 4);
    CHECK(split.train.size() == 1);
}

TEST_CASE("code artifact heuristics") {
    CHECK(has_code_artifact({"classplexapiphotophotoalbum"}));          // >= 20 chars
    CHECK(has_code_artifact({"the", "value", "x25", "works"}));          // letters + 2 digits
    CHECK(has_code_artifact({"x", "5", "is", "the", "default"}));        // identifier + number
    CHECK_FALSE(has_code_artifact({"use", "sha1", "now"}));              // only 1 digit
    CHECK(has_code_artifact({"output", "tfdatadatasetmap1234"}));        // letters + digits
    CHECK_FALSE(has_code_artifact({"plain", "words", "only", "here"}));
    CHECK_FALSE(has_code_artifact({}));
}

TEST_CASE("analyze_generations: categories and bleu-1 shares") {
    std::vector<NGramModel::Completion> results;
    std::vector<Sentence> references;

    auto completion = [](std::vector<std::string> tokens) {
        NGramModel::Completion c;
        for (int i = 0; i < 4; ++i) c.prefix[i] = tokens[static_cast<std::size_t>(i)];
        c.output = std::move(tokens);
        c.stop_reason = NGramModel::StopReason::below_threshold;
        return c;
    };

    // exact length-4 echo of its reference
    results.push_back(completion({"opens", "the", "file", "handle"}));
    references.push_back({"opens", "the", "file", "handle"});
    // length-4, not matching its reference
    results.push_back(completion({"reads", "the", "row", "data"}));
    references.push_back({"writes", "a", "column", "instead"});
    // code artifact: identifier + bare number
    results.push_back(completion({"x", "5", "is", "the", "default", "timeout"}));
    references.push_back({"x", "5", "is", "the", "default", "timeout"});
    // non-english output
    results.push_back(completion({"ceci", "calcule", "la", "somme", "des", "valeurs"}));
    references.push_back({"unrelated", "english", "reference", "sentence"});

    const auto analysis =
        analyze_generations(results, references, comet::test::classifier());
    CHECK(analysis.total == 4);
    CHECK(analysis.length4 == 2);
    CHECK(analysis.length4_bleu1 == 1);
    CHECK(analysis.code_artifacts == 1);
    CHECK(analysis.code_artifacts_bleu1 == 1);
    CHECK(analysis.non_english == 1);
    CHECK(analysis.non_english_bleu1 == 0);
    CHECK(analysis.average_length == doctest::Approx((4 + 4 + 6 + 6) / 4.0));
    CHECK_FALSE(analysis.to_json_string().empty());

    CHECK_THROWS_AS(analyze_generations(results, {}, comet::test::classifier()),
                    std::invalid_argument);
}

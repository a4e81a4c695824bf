#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_helpers.hpp"

#include <cstdlib>
#include <sys/wait.h>
#include <filesystem>
#include <fstream>
#include <string>

// Drives the installed binary end to end. The harness passes the binary
// path in COMET_CLI.

namespace fs = std::filesystem;

namespace {

std::string cli() {
    const char* env = std::getenv("COMET_CLI");
    REQUIRE_MESSAGE(env != nullptr, "COMET_CLI must point at the comet binary");
    return env;
}

fs::path test_data() { return fs::path(COMET_TEST_DATA_DIR); }

struct RunResult {
    int exit_code = -1;
    std::string output; // stdout + stderr
};

RunResult run(const std::string& args) {
    static int counter = 0;
    const auto capture =
        fs::temp_directory_path() / ("comet-cli-out-" + std::to_string(++counter) + ".txt");
    const std::string cmd = cli() + " " + args + " > " + capture.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.output = comet::test::read_file(capture);
    fs::remove(capture);
    return result;
}

} // namespace

TEST_CASE("version banner") {
    const auto result = run("--version");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("comet ") != std::string::npos);
    CHECK(result.output.find("table1-v1") != std::string::npos);
}

TEST_CASE("no subcommand is a usage error") {
    CHECK(run("").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
}

TEST_CASE("extract: matches the golden corpus byte for byte") {
    comet::test::TempDir dir;
    const auto out = dir.path() / "corpus.jsonl";
    const auto result = run("extract --root " + (test_data() / "mini_corpus").string() +
                            " --out " + out.string());
    REQUIRE(result.exit_code == 0);
    const auto got = comet::test::read_file(out);
    const auto golden =
        comet::test::read_file(test_data() / "golden" / "mini_corpus_extract.jsonl");
    CHECK(got == golden);
    CHECK(fs::exists(out.string() + ".manifest.json"));
}

TEST_CASE("extract: empty directory gives an empty corpus") {
    comet::test::TempDir dir;
    fs::create_directories(dir.path() / "empty");
    const auto out = dir.path() / "corpus.jsonl";
    const auto result = run("extract --root " + (dir.path() / "empty").string() + " --out " +
                            out.string() + " --report " + (dir.path() / "r.json").string());
    CHECK(result.exit_code == 0);
    CHECK(comet::test::read_file(out).empty());
    CHECK(comet::test::read_file(dir.path() / "r.json").find("\"files_opened\": 0") !=
          std::string::npos);
}

TEST_CASE("extract: missing root exits 2") {
    comet::test::TempDir dir;
    const auto result =
        run("extract --root /no/such/dir --out " + (dir.path() / "c.jsonl").string());
    CHECK(result.exit_code == 2);
}

TEST_CASE("filter: advanced keeps a subset of basic") {
    comet::test::TempDir dir;
    const auto corpus = (test_data() / "golden" / "mini_corpus_extract.jsonl").string();
    const auto basic = dir.path() / "basic.jsonl";
    const auto advanced = dir.path() / "adv.jsonl";
    REQUIRE(run("filter --mode basic --in " + corpus + " --out " + basic.string())
                .exit_code == 0);
    REQUIRE(run("filter --mode advanced --in " + corpus + " --out " + advanced.string() +
                " --report " + (dir.path() / "rep.json").string())
                .exit_code == 0);
    auto kept = [](const fs::path& p) {
        std::ifstream in(p);
        std::string line;
        int n = 0;
        while (std::getline(in, line))
            if (line.find("\"kept\"") != std::string::npos) ++n;
        return n;
    };
    const int kept_basic = kept(basic);
    const int kept_adv = kept(advanced);
    CHECK(kept_adv > 0);
    CHECK(kept_adv <= kept_basic);
    CHECK(comet::test::read_file(dir.path() / "rep.json").find("code_math") !=
          std::string::npos);
}

TEST_CASE("filter: unknown mode and malformed input exit 2") {
    comet::test::TempDir dir;
    const auto corpus = (test_data() / "golden" / "mini_corpus_extract.jsonl").string();
    CHECK(run("filter --mode fancy --in " + corpus + " --out " +
              (dir.path() / "x.jsonl").string())
              .exit_code == 2);

    const auto bad = dir.write("bad.jsonl", "{\"id\":1}\nnot json\n");
    const auto result = run("filter --mode basic --in " + bad.string() + " --out " +
                            (dir.path() / "y.jsonl").string());
    CHECK(result.exit_code == 2);
    CHECK(result.output.find(":1") != std::string::npos); // line number reported
}

TEST_CASE("stats: reruns are byte-identical") {
    comet::test::TempDir dir;
    const auto corpus = dir.path() / "corpus.jsonl";
    const auto loc = dir.path() / "loc.csv";
    REQUIRE(run("extract --root " + (test_data() / "mini_corpus").string() + " --out " +
                corpus.string() + " --loc " + loc.string())
                .exit_code == 0);
    const auto prefix1 = dir.path() / "s1";
    const auto prefix2 = dir.path() / "s2";
    REQUIRE(run("stats --in " + corpus.string() + " --loc " + loc.string() +
                " --out-prefix " + prefix1.string())
                .exit_code == 0);
    REQUIRE(run("stats --in " + corpus.string() + " --loc " + loc.string() +
                " --out-prefix " + prefix2.string())
                .exit_code == 0);
    for (const char* suffix : {".categories.json", ".categories.txt", ".histogram.csv",
                               ".histogram.json", ".histogram.txt"}) {
        CHECK(comet::test::read_file(prefix1.string() + suffix) ==
              comet::test::read_file(prefix2.string() + suffix));
    }
    const auto hist = comet::test::read_file(prefix1.string() + ".histogram.csv");
    CHECK(hist.find("bucket,files,loc,loc_avg") == 0);
    CHECK(run("stats --in /does/not/exist --loc " + loc.string() + " --out-prefix " +
              (dir.path() / "s3").string())
              .exit_code == 2);
}

TEST_CASE("train: fixed seed reproduces model and prefixes") {
    comet::test::TempDir dir;
    const auto sentences = dir.write("s.txt",
                                     "alpha beta gamma delta epsilon\n"
                                     "the quick brown fox jumps\n"
                                     "pack my box with five dozen jugs\n"
                                     "how vexingly quick daft zebras jump\n"
                                     "sphinx of black quartz judge my vow\n"
                                     "five boxing wizards jump quickly tonight\n");
    const auto m1 = dir.path() / "m1.json";
    const auto m2 = dir.path() / "m2.json";
    REQUIRE(run("train --in " + sentences.string() + " --model " + m1.string() +
                " --holdout 2 --seed 9")
                .exit_code == 0);
    REQUIRE(run("train --in " + sentences.string() + " --model " + m2.string() +
                " --holdout 2 --seed 9")
                .exit_code == 0);
    CHECK(comet::test::read_file(m1) == comet::test::read_file(m2));
    CHECK(comet::test::read_file(m1.string() + ".prefixes.txt") ==
          comet::test::read_file(m2.string() + ".prefixes.txt"));
    CHECK(comet::test::read_file(m1.string() + ".references.txt") ==
          comet::test::read_file(m2.string() + ".references.txt"));

    // oversized holdout scales down with a warning
    const auto result = run("train --in " + sentences.string() + " --model " +
                            (dir.path() / "m3.json").string() + " --holdout 100 --seed 1");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("scaled down") != std::string::npos);
}

TEST_CASE("generate: defaults and failure modes") {
    comet::test::TempDir dir;
    const auto sentences = dir.write("s.txt", "a b c d e\na b c d e\n");
    const auto model = dir.path() / "m.json";
    REQUIRE(run("train --in " + sentences.string() + " --model " + model.string() +
                " --holdout 0 --seed 1")
                .exit_code == 0);
    const auto prefixes = dir.write("p.txt", "a b c d\n");
    const auto out = dir.path() / "gen.jsonl";
    REQUIRE(run("generate --model " + model.string() + " --prefixes " + prefixes.string() +
                " --out " + out.string())
                .exit_code == 0);
    const auto gen = comet::test::read_file(out);
    CHECK(gen.find("\"output\":[\"a\",\"b\",\"c\",\"d\",\"e\"]") != std::string::npos);
    CHECK(gen.find("no_continuation") != std::string::npos);

    CHECK(run("generate --model /missing.json --prefixes " + prefixes.string() + " --out " +
              (dir.path() / "g2.jsonl").string())
              .exit_code == 2);
    const auto bad_prefix = dir.write("bad.txt", "only three tokens\n");
    CHECK(run("generate --model " + model.string() + " --prefixes " + bad_prefix.string() +
              " --out " + (dir.path() / "g3.jsonl").string())
              .exit_code == 2);
}

TEST_CASE("bleu: identical and disjoint inputs") {
    comet::test::TempDir dir;
    const auto a = dir.write("a.txt", "the cat sat on the mat\nopens the file handle now\n");
    const auto b = dir.write("b.txt", "xx yy zz ww vv uu\npp qq rr ss tt\n");
    const auto same = dir.path() / "same";
    REQUIRE(run("bleu --candidates " + a.string() + " --references " + a.string() +
                " --out-prefix " + same.string())
                .exit_code == 0);
    const auto same_report = comet::test::read_file(same.string() + ".report.json");
    CHECK(same_report.find("\"ones\": 2") != std::string::npos);
    CHECK(same_report.find("\"zeros\": 0") != std::string::npos);

    const auto disjoint = dir.path() / "disjoint";
    REQUIRE(run("bleu --candidates " + a.string() + " --references " + b.string() +
                " --out-prefix " + disjoint.string())
                .exit_code == 0);
    const auto disjoint_report = comet::test::read_file(disjoint.string() + ".report.json");
    CHECK(disjoint_report.find("\"zeros\": 2") != std::string::npos);

    // count mismatch is a usage error
    const auto c = dir.write("c.txt", "one single line here\n");
    CHECK(run("bleu --candidates " + a.string() + " --references " + c.string() +
              " --out-prefix " + (dir.path() / "m").string())
              .exit_code == 2);
}

TEST_CASE("vocab-overlap: four copies of one model") {
    comet::test::TempDir dir;
    const auto sentences = dir.write("s.txt", "alpha beta gamma delta\n");
    const auto model = dir.path() / "m.json";
    REQUIRE(run("train --in " + sentences.string() + " --model " + model.string() +
                " --holdout 0 --seed 1")
                .exit_code == 0);
    const auto out = dir.path() / "overlap.json";
    const auto models = model.string();
    REQUIRE(run("vocab-overlap --models " + models + "," + models + "," + models + "," +
                models + " --out " + out.string())
                .exit_code == 0);
    const auto report = comet::test::read_file(out);
    // 4 tokens + 3 specials in every copy: ABCD region holds everything
    CHECK(report.find("\"ABCD\": 7") != std::string::npos);
    CHECK(report.find("\"union\": 7") != std::string::npos);

    CHECK(run("vocab-overlap --models " + models + "," + models + " --out " +
              (dir.path() / "o2.json").string())
              .exit_code == 2);
}

TEST_CASE("filter: output independent of worker count") {
    comet::test::TempDir dir;
    const auto corpus = (test_data() / "golden" / "mini_corpus_extract.jsonl").string();
    const auto one = dir.path() / "jobs1.jsonl";
    const auto eight = dir.path() / "jobs8.jsonl";
    REQUIRE(run("filter --mode advanced --in " + corpus + " --out " + one.string() +
                " --jobs 1")
                .exit_code == 0);
    REQUIRE(run("filter --mode advanced --in " + corpus + " --out " + eight.string() +
                " --jobs 8")
                .exit_code == 0);
    CHECK(comet::test::read_file(one) == comet::test::read_file(eight));
}

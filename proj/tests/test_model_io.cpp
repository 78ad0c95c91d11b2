#include "mdbell/model_io.hpp"

#include "mdbell/catalog.hpp"

#include <doctest/doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

using namespace mdbell;

namespace {

std::string golden_path(const std::string& name) {
    return std::string(MDBELL_GOLDEN_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

const std::string kModelIv = "label: model IV\n"
                             "pairing: FullyLocal\n"
                             "lambda A0 A1 B0 B1 C0 C1 | xyz' xy'z x'yz x'y'z'\n"
                             "1 +1 +1 +1 +1 +1 +1 | 1 1/2 1 1/2\n"
                             "2 -1 +1 +1 -1 +1 +1 | 0 1/2 0 1/2\n";

void check_parse_error(const std::string& text, int line, int column,
                       const std::string& what) {
    try {
        read_model(text, "input");
        FAIL("expected a parse error: " << what);
    } catch (const ParseError& e) {
        CHECK(e.line() == line);
        CHECK(e.column() == column);
        CHECK(std::string(e.what()) == what);
    }
}

} // namespace

TEST_CASE("golden files round-trip byte for byte") {
    const std::array<std::pair<const char*, CatalogSpec>, 5> cases = {
        {{"model_i_p1_half_p2_half.txt",
          CatalogSpec::model_i(Rational(1) / 2, Rational(1) / 2)},
         {"model_ii_p_half.txt", CatalogSpec::with_p(CatalogId::II, Rational(1) / 2)},
         {"model_iii_p_half.txt", CatalogSpec::with_p(CatalogId::III, Rational(1) / 2)},
         {"model_iv_p_half.txt", CatalogSpec::with_p(CatalogId::IV, Rational(1) / 2)},
         {"model_v_p_half.txt", CatalogSpec::with_p(CatalogId::V, Rational(1) / 2)}}};
    for (const auto& [name, spec] : cases) {
        const std::string text = slurp(golden_path(name));
        const Model parsed = read_model(text, name);
        CHECK(write_model(parsed) == text);
        const Model built = build_catalog_model(spec);
        CHECK(parsed.responses == built.responses);
        CHECK(parsed.distributions == built.distributions);
    }
}

TEST_CASE("a written model reads back equal") {
    const Model model = build_catalog_model(CatalogSpec::with_p(CatalogId::V, Rational(3) / 7));
    Model labeled = model;
    labeled.label = "model V at 3/7";
    const std::string text = write_model(labeled);
    const Model back = read_model(text);
    CHECK(back == labeled);
    CHECK(back.label == "model V at 3/7");
    CHECK(write_model(back) == text);
}

TEST_CASE("comments, blank lines, and crlf endings are tolerated") {
    const std::string decorated = "# a catalog entry\n"
                                  "\n"
                                  "label: model IV\n"
                                  "   # indented comment\n"
                                  "pairing: FullyLocal\n"
                                  "lambda A0 A1 B0 B1 C0 C1 | xyz' xy'z x'yz x'y'z'\n"
                                  "\n"
                                  "1 +1 +1 +1 +1 +1 +1 | 1 1/2 1 1/2\n"
                                  "2 -1 +1 +1 -1 +1 +1 | 0 1/2 0 1/2\n";
    const Model plain = read_model(kModelIv);
    CHECK(read_model(decorated) == plain);

    std::string crlf;
    for (char c : kModelIv)
        if (c == '\n')
            crlf += "\r\n";
        else
            crlf += c;
    CHECK(read_model(crlf) == plain);

    // No trailing newline on the last row.
    const std::string trimmed(kModelIv.begin(), kModelIv.end() - 1);
    CHECK(read_model(trimmed) == plain);
}

TEST_CASE("parse errors carry the source position") {
    check_parse_error("pairing: FullyLocal\n", 2, 1, "input:2:1: expected 'lambda' header line");
    check_parse_error("pairing: FullyLocal\nlambda A0 A1 B0 B1 C0 C1\n", 3, 1,
                      "input:3:1: model has no response rows");
    check_parse_error("label: x\nlambda A0 A1 B0 B1 C0 C1\n1 +1 +1 +1 +1 +1 +1\n", 2, 1,
                      "input:2:1: expected 'pairing:' line");
    check_parse_error("pairing: Sideways\n", 1, 9,
                      "input:1:9: unknown pairing 'Sideways', expected FullyLocal, JointAB, "
                      "JointAC, or JointBC");
    check_parse_error("pairing: JointAB\nlambda A0 A1 B0 B1 C0 C1\n1 +1 +1 +1 +1 +1 +1\n", 2,
                      8, "input:2:8: expected response column 'A0B0'");
    check_parse_error("pairing: FullyLocal\nlambda A0 A1 B0 B1 C0 C1\n2 +1 +1 +1 +1 +1 +1\n",
                      3, 1, "input:3:1: expected row index 1");
    check_parse_error("pairing: FullyLocal\nlambda A0 A1 B0 B1 C0 C1\n1 +1 +1 +1 +1 1 +1\n", 3,
                      15, "input:3:15: response entry must be +1 or -1, got '1'");
    check_parse_error(
        "pairing: FullyLocal\nlambda A0 A1 B0 B1 C0 C1 | xyz xyz\n1 +1 +1 +1 +1 +1 +1 | 1 1\n",
        2, 32, "input:2:32: duplicate context column 'xyz'");
    check_parse_error("pairing: FullyLocal\nlambda A0 A1 B0 B1 C0 C1 | xw\n", 2, 28,
                      "input:2:28: not a context: 'xw' (expected at least two of x, y, z in "
                      "order, each optionally primed)");
    check_parse_error("pairing: FullyLocal\nlambda A0 A1 B0 B1 C0 C1 |\n", 2, 1,
                      "input:2:1: '|' with no context columns");
    check_parse_error(
        "pairing: FullyLocal\nlambda A0 A1 B0 B1 C0 C1 | xyz\n1 +1 +1 +1 +1 +1 +1 | 1/\n", 3,
        23, "input:3:23: not a rational number: '1/'");
    check_parse_error(
        "pairing: FullyLocal\nlambda A0 A1 B0 B1 C0 C1\n1 +1 +1 +1 +1 +1 +1 extra\n", 3, 21,
        "input:3:21: unexpected token 'extra'");
    check_parse_error(
        "pairing: FullyLocal\nlambda A0 A1 B0 B1 C0 C1 | xyz\n1 +1 +1 +1 +1 +1 +1\n", 3, 1,
        "input:3:1: expected '|' before probabilities");
}

TEST_CASE("distribution sums are validated with the context named") {
    const std::string text = "pairing: FullyLocal\n"
                             "lambda A0 A1 B0 B1 C0 C1 | xyz\n"
                             "1 +1 +1 +1 +1 +1 +1 | 1/4\n"
                             "2 -1 -1 -1 -1 -1 -1 | 1/4\n";
    CHECK_THROWS_WITH_AS(read_model(text),
                         "distribution for context xyz sums to 1/2, expected 1", Error);
}

TEST_CASE("bare strategy files omit the distribution section") {
    ResponseTable strategy;
    strategy.pairing = Pairing::JointBC;
    strategy.rows = {{1, -1, 1, -1, 1, 1}, {1, 1, 1, 1, -1, -1}};
    const std::string text = write_strategy(strategy);
    CHECK(text.find('|') == std::string::npos);
    CHECK(text.find("B0C0") != std::string::npos);
    CHECK(read_strategy(text) == strategy);

    const Model as_model = read_model(text);
    CHECK(as_model.distributions.columns.empty());
    CHECK(as_model.label.empty());
}

TEST_CASE("labels keep their internal spacing") {
    Model model = read_model(kModelIv);
    model.label = "two  spaces and a # hash";
    const Model back = read_model(write_model(model));
    CHECK(back.label == "two  spaces and a # hash");
}

TEST_CASE("file io reports unopenable paths") {
    CHECK_THROWS_WITH_AS(load_model("/nonexistent/dir/m.model"),
                         "cannot open file '/nonexistent/dir/m.model'", Error);
    const Model model = read_model(kModelIv);
    CHECK_THROWS_WITH_AS(save_model(model, "/nonexistent/dir/m.model"),
                         "cannot write file '/nonexistent/dir/m.model'", Error);

    const std::string path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                             "/mdbell_io_roundtrip.model";
    save_model(model, path);
    CHECK(load_model(path) == model);
    CHECK(load_strategy(path) == model.responses);
    std::remove(path.c_str());
}

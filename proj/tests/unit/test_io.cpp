#include <fstream>

#include "../corpus.hpp"
#include "helpers.hpp"
#include "polyss/generate.hpp"
#include "polyss/io.hpp"

using namespace polyss;
using testing::m;

namespace {

// A commuting square over Q: not anticommuting.
constexpr const char* kCommutingSquare = R"({
  "schema_version": "1",
  "field": {"kind": "rational"},
  "k": 2,
  "cells": [{"deg": [0,0], "dim": 1}, {"deg": [1,0], "dim": 1}, {"deg": [0,1], "dim": 1}, {"deg": [1,1], "dim": 1}],
  "diff": [{"i": 1, "from": [0,0], "matrix": [["1"]]}, {"i": 2, "from": [0,0], "matrix": [[1]]},
           {"i": 1, "from": [0,1], "matrix": [["1"]]}, {"i": 2, "from": [1,0], "matrix": [["1"]]}]
})";

std::string with(std::string text, const std::string& from, const std::string& to)
{
    text.replace(text.find(from), from.size(), to);
    return text;
}

} // namespace

TEST_SUITE("cli_io")
{
    const FieldSpec q = FieldSpec::rationals();

    TEST_CASE("a minimal complex")
    {
        const auto inst = parse_instance(R"({"schema_version": "1", "field": {"kind": "prime", "p": 3}, "k": 1,
            "cells": [{"deg": [0], "dim": 2}, {"deg": [1], "dim": 1}],
            "diff": [{"i": 1, "from": [0], "matrix": [["1", "-1"]]}]})");
        CHECK(!inst.is_snake());
        CHECK(inst.field == FieldSpec::prime(3));
        const auto& v = inst.polycomplex();
        CHECK(v.dim({0}) == 2);
        CHECK(v.partial(1, {0}) == m(FieldSpec::prime(3), {{1, 2}}));
        CHECK(!inst.filtration);
        CHECK_ERROR_KIND(inst.snake(), ErrorKind::parse);
    }

    TEST_CASE("axiom failures cite the indices and the cell")
    {
        try {
            parse_instance(kCommutingSquare);
            FAIL("expected an axiom error");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::axiom);
            CHECK(std::string(e.what()).find("(i, j, x) = (1, 2, (0,0))") != std::string::npos);
        }
        // Over GF(2) commuting is anticommuting.
        CHECK_NOTHROW(parse_instance(kCommutingSquare, FieldSpec::prime(2)));
        const auto fixed = with(kCommutingSquare, R"("from": [1,0], "matrix": [["1"]])", R"("from": [1,0], "matrix": [["-1"]])");
        CHECK_NOTHROW(parse_instance(fixed));
        // Missing maps are zero.
        const auto sparse = with(with(fixed, R"({"i": 1, "from": [0,0], "matrix": [["1"]]},)", ""),
                                 R"({"i": 1, "from": [0,1], "matrix": [["1"]]},)", "");
        CHECK(parse_instance(sparse).polycomplex().partial(1, {0, 0}).is_zero());
        CHECK(parse_instance(sparse).polycomplex().partial(1, {0, 1}).is_zero());
    }

    TEST_CASE("malformed input")
    {
        CHECK_ERROR_KIND(parse_instance("{"), ErrorKind::parse);
        CHECK_ERROR_KIND(parse_instance("[]"), ErrorKind::parse);
        CHECK_ERROR_KIND(parse_instance(with(kCommutingSquare, R"("k": 2,)", R"("k": 2, "colour": 1,)")), ErrorKind::parse);
        CHECK_ERROR_KIND(parse_instance(with(kCommutingSquare, R"("schema_version": "1")", R"("schema_version": "9")")),
                         ErrorKind::parse);
        CHECK_ERROR_KIND(parse_instance(with(kCommutingSquare, R"("kind": "rational")", R"("kind": "real")")), ErrorKind::parse);
        CHECK_ERROR_KIND(parse_instance(with(kCommutingSquare, R"([["1"]]}, {"i": 2)", R"([["1", "0"]]}, {"i": 2)")),
                         ErrorKind::shape);
        CHECK_ERROR_KIND(parse_instance(with(kCommutingSquare, R"([[1]])", R"([["x"]])")), ErrorKind::parse);
        CHECK_ERROR_KIND(parse_instance(with(kCommutingSquare, R"("deg": [1,1])", R"("deg": [1,1,0])")), ErrorKind::parse);
        CHECK_ERROR_KIND(parse_instance(with(kCommutingSquare, R"("i": 2, "from": [1,0])", R"("i": 3, "from": [1,0])")),
                         ErrorKind::parse);
        CHECK_ERROR_KIND(read_instance("/nonexistent/instance.json"), ErrorKind::parse);
        try {
            parse_instance(with(kCommutingSquare, R"("k": 2,)", R"("k": 2, "colour": 1,)"));
        } catch (const Error& e) {
            CHECK(std::string(e.what()).find("colour") != std::string::npos);
        }
    }

    TEST_CASE("fields and index lists")
    {
        CHECK(parse_field("prime:5") == FieldSpec::prime(5));
        CHECK(parse_field("gf7") == FieldSpec::prime(7));
        CHECK(parse_field("2") == FieldSpec::prime(2));
        CHECK(parse_field("rational") == q);
        CHECK(parse_field("q") == q);
        CHECK_ERROR_KIND(parse_field("reals"), ErrorKind::parse);
        CHECK_THROWS(parse_field("prime:4"));
        CHECK(parse_index_list("1,3") == std::vector<std::size_t>{1, 3});
        CHECK_ERROR_KIND(parse_index_list(""), ErrorKind::invalid_subset);
        CHECK_ERROR_KIND(parse_index_list("1,,2"), ErrorKind::invalid_subset);
    }

    TEST_CASE("snake files")
    {
        const auto inst = parse_instance(R"({"schema_version": "1", "field": {"kind": "rational"},
            "snake": {"dims": {"A": 1, "B": 2, "C": 1, "D": 1, "E": 2, "F": 1},
                      "maps": {"A->B": [["1"], ["0"]], "B->C": [["0", "1"]],
                               "D->E": [["1"], ["0"]], "E->F": [["0", "1"]],
                               "beta": [["0", "1"], ["0", "0"]]}}})");
        REQUIRE(inst.is_snake());
        CHECK(inst.snake().alpha == Matrix(q, 1, 1));
        CHECK(inst.snake().beta == m(q, {{0, 1}, {0, 0}}));
        CHECK_ERROR_KIND(inst.polycomplex(), ErrorKind::parse);
        CHECK_ERROR_KIND(parse_instance(R"({"schema_version": "1", "field": {"kind": "rational"},
            "snake": {"dims": {"A": 1, "B": 1, "C": 1, "D": 0, "E": 0, "F": 0},
                      "maps": {"A->B": [["1"]], "B->C": [["1"]]}}})"),
                         ErrorKind::snake_input);
    }

    TEST_CASE("property: serialization round-trips")
    {
        Rng rng(17);
        for (const FieldSpec& f : {FieldSpec::prime(2), FieldSpec::prime(5), q}) {
            for (int trial = 0; trial < 5; ++trial) {
                Instance inst;
                inst.field = f;
                DirectSumShape shape;
                shape.k = 2 + static_cast<std::size_t>(trial % 2);
                inst.content = random_direct_sum_polycomplex(f, shape, rng);
                if (trial == 3)
                    inst.filtration = std::vector<std::size_t>{1, 2};
                const auto text = serialize_instance(inst);
                const auto back = parse_instance(text);
                CHECK(back.field == f);
                CHECK(back.filtration == inst.filtration);
                CHECK(back.polycomplex().cells() == inst.polycomplex().cells());
                CHECK(back.polycomplex().partials() == inst.polycomplex().partials());
                CHECK(serialize_instance(back) == text);
            }
            Instance snake_inst;
            snake_inst.field = f;
            snake_inst.content = random_snake(f, 3, rng);
            const auto text = serialize_instance(snake_inst);
            CHECK(serialize_instance(parse_instance(text)) == text);
        }
        const auto path = std::filesystem::temp_directory_path() / "polyss_io_roundtrip.json";
        Instance inst;
        inst.field = FieldSpec::prime(3);
        inst.content = corpus::direct_sums(1, 3, 2, 4, 3)[0];
        std::ofstream(path) << serialize_instance(inst);
        CHECK(read_instance(path).polycomplex().partials() == inst.polycomplex().partials());
        std::filesystem::remove(path);
    }
}

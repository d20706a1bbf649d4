#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "mcda/csv.hpp"
#include "mcda/io.hpp"
#include "mcda/numeric.hpp"

using mcda::ParseError;
using mcda::Relation;
using mcda::Tfn;
namespace io = mcda::io;

TEST_CASE("bundled self-interaction matrix parses completely") {
  const auto input = test::load_study_ssim();
  CHECK(input.codes.size() == 8);
  CHECK(input.matrix.pair_count() == 28);
  int a_count = 0;
  for (int i = 0; i < 8; ++i) {
    for (int j = i + 1; j < 8; ++j) {
      if (input.matrix.at(i, j) == Relation::A) ++a_count;
    }
  }
  CHECK(a_count == 0);
  CHECK(input.matrix.at(0, 2) == Relation::X);  // CA1-CA3 mutual
  CHECK(input.matrix.at(0, 7) == Relation::V);
  CHECK(input.matrix.at(6, 7) == Relation::X);
}

TEST_CASE("ssim parser diagnostics") {
  SUBCASE("empty upper triangle") {
    const std::string text = ",X1,X2\nX1,*,\nX2,,*\n";
    CHECK_THROWS_WITH_AS(io::parse_ssim(text, "t.csv"), doctest::Contains("missing relation"),
                         ParseError);
  }
  SUBCASE("a 2x2 file with one X") {
    const auto input = io::parse_ssim(",X1,X2\nX1,*,X\nX2,,*\n", "t.csv");
    CHECK(input.matrix.pair_count() == 1);
    CHECK(input.matrix.at(0, 1) == Relation::X);
  }
  SUBCASE("unknown symbol names the cell") {
    CHECK_THROWS_WITH_AS(io::parse_ssim(",X1,X2\nX1,*,Q\nX2,,*\n", "t.csv"),
                         doctest::Contains("(X1, X2)"), ParseError);
  }
  SUBCASE("junk below the diagonal") {
    CHECK_THROWS_AS(io::parse_ssim(",X1,X2\nX1,*,V\nX2,V,*\n", "t.csv"), ParseError);
  }
  SUBCASE("row labels must match the header") {
    CHECK_THROWS_AS(io::parse_ssim(",X1,X2\nX2,*,V\nX1,,*\n", "t.csv"), ParseError);
  }
  SUBCASE("duplicate pair in the json mirror") {
    const std::string text = R"({"categories":["X1","X2"],
      "pairs":[{"row":"X1","col":"X2","symbol":"V"},
               {"row":"X1","col":"X2","symbol":"O"}]})";
    CHECK_THROWS_WITH_AS(io::parse_ssim_json(text, "t.json"), doctest::Contains("duplicate"),
                         ParseError);
  }
}

TEST_CASE("json mirror of the bundled ssim agrees with the csv") {
  const auto from_csv = test::load_study_ssim();
  const auto from_json = io::load_ssim(test::data_file("ssim.json"));
  CHECK(from_csv.codes == from_json.codes);
  for (int i = 0; i < 8; ++i) {
    for (int j = i + 1; j < 8; ++j) {
      CHECK(from_csv.matrix.at(i, j) == from_json.matrix.at(i, j));
    }
  }
}

TEST_CASE("bundled decision matrix parses in the lenient mode only") {
  CHECK_THROWS_WITH_AS(
      io::load_decision_matrix(test::data_file("decision_matrix.csv")),
      doctest::Contains("M3"), ParseError);

  const auto input = test::load_study_matrix();
  CHECK(input.matrix.rows() == 20);
  CHECK(input.matrix.cols() == 8);
  CHECK(input.weights[0] == Tfn(1, 1.2, 2));
  REQUIRE(input.unordered_cells.size() == 1);
  CHECK(input.unordered_cells[0].alternative == "M3");
  CHECK(input.unordered_cells[0].criterion == "CA4");
  CHECK(input.unordered_cells[0].value == Tfn::unordered(1.5, 1.2, 3));
}

TEST_CASE("decision matrix cell formats") {
  const std::string header = "alternative,C1\n";
  SUBCASE("decimal commas with semicolons") {
    const auto input = io::parse_decision_matrix(
        header + "WEIGHTS,\"0,5;1,4;2,5\"\nA1,\"0,5;1,4;2,5\"\n", "t.csv");
    CHECK(input.weights[0] == Tfn(0.5, 1.4, 2.5));
    CHECK(input.matrix.at(0, 0) == Tfn(0.5, 1.4, 2.5));
  }
  SUBCASE("decimal points with whitespace") {
    const auto input =
        io::parse_decision_matrix(header + "WEIGHTS,0.5 1.4 2.5\nA1,1 2 3\n", "t.csv");
    CHECK(input.matrix.at(0, 0) == Tfn(1, 2, 3));
  }
  SUBCASE("non-monotone triples are rejected with coordinates") {
    CHECK_THROWS_WITH_AS(
        io::parse_decision_matrix(header + "WEIGHTS,1;1;1\nA1,2;1;3\n", "t.csv"),
        doctest::Contains("non-monotone"), ParseError);
  }
  SUBCASE("ragged rows are rejected") {
    CHECK_THROWS_AS(io::parse_decision_matrix(
                        "alternative,C1,C2\nWEIGHTS,1;1;1\nA1,1;1;1\n", "t.csv"),
                    ParseError);
  }
  SUBCASE("unparseable numbers name the cell") {
    CHECK_THROWS_WITH_AS(
        io::parse_decision_matrix(header + "WEIGHTS,1;1;1\nA1,1;x;3\n", "t.csv"),
        doctest::Contains("C1"), ParseError);
  }
  SUBCASE("missing weights row") {
    CHECK_THROWS_WITH_AS(io::parse_decision_matrix(header + "A1,1;1;1\n", "t.csv"),
                         doctest::Contains("WEIGHTS"), ParseError);
  }
  SUBCASE("two components are not a triple") {
    CHECK_THROWS_WITH_AS(
        io::parse_decision_matrix(header + "WEIGHTS,1;1;1\nA1,1;2\n", "t.csv"),
        doctest::Contains("3 components"), ParseError);
  }
  SUBCASE("duplicate alternatives are rejected") {
    CHECK_THROWS_AS(io::parse_decision_matrix(
                        header + "WEIGHTS,1;1;1\nA1,1;1;1\nA1,1;1;1\n", "t.csv"),
                    ParseError);
  }
}

TEST_CASE("json mirror of the bundled decision matrix agrees with the csv") {
  const auto from_csv = test::load_study_matrix();
  const auto from_json = io::load_decision_matrix(test::data_file("decision_matrix.json"),
                                                  {.allow_unordered_cells = true});
  CHECK(from_csv.matrix.alternatives == from_json.matrix.alternatives);
  CHECK(from_csv.matrix.criteria == from_json.matrix.criteria);
  CHECK(from_csv.matrix.cells == from_json.matrix.cells);
  CHECK(from_csv.weights == from_json.weights);
}

TEST_CASE("orientation and category-map parsing") {
  const auto orientations = io::load_orientations(test::data_file("orientations.csv"));
  CHECK(orientations.at("CA1") == mcda::Orientation::Cost);
  CHECK(orientations.at("CA2") == mcda::Orientation::Benefit);

  CHECK_THROWS_WITH_AS(io::parse_orientations("criterion,orientation\nC1,upward\n", "t.csv"),
                       doctest::Contains("upward"), ParseError);

  const auto map = io::load_category_map(test::data_file("category_map_ranking.csv"));
  CHECK(map.at("M3") == "CA1");
  CHECK(map.at("M20") == "CA8");
  const auto catalog = io::load_category_map(test::data_file("category_map_catalog.csv"));
  CHECK(catalog.at("M3") == "CA2");

  CHECK_THROWS_WITH_AS(io::parse_category_map("motivator,category\nM1,CA1\nM1,CA2\n", "t.csv"),
                       doctest::Contains("duplicate"), ParseError);
}

TEST_CASE("factor table parsing") {
  const auto categories = io::parse_factors(io::read_file(test::data_file("categories.csv")),
                                            "categories.csv");
  REQUIRE(categories.size() == 8);
  CHECK(categories[0].code == "CA1");
  CHECK(categories[0].label == "Human resource");

  CHECK_THROWS_AS(io::parse_factors("index,code,label\n1,C1,a\n2,C1,b\n", "t.csv"), ParseError);
  CHECK_THROWS_AS(io::parse_factors("index,code,label\n1,C1,a\n1,C2,b\n", "t.csv"), ParseError);
}

TEST_CASE("rating table parsing") {
  const auto table = io::load_rating_table(test::data_file("kendall_ratings.csv"));
  CHECK(table.raters == 4);
  CHECK(table.subjects == 10);
  CHECK(table.at(0, 3) == 4);

  CHECK_THROWS_AS(io::parse_rating_table("rater,S1,S2\nR1,1\n", "t.csv"), ParseError);
  CHECK_THROWS_WITH_AS(io::parse_rating_table("rater,S1,S2\nR1,1,x\n", "t.csv"),
                       doctest::Contains("S2"), ParseError);
}

TEST_CASE("a weights-only file parses and blank lines are ignored") {
  const auto input =
      io::parse_decision_matrix("alternative,C1,C2\n\nWEIGHTS,1;1;1,0.5;1;2\n\n", "w.csv");
  CHECK(input.matrix.rows() == 0);
  CHECK(input.weights.size() == 2);
  CHECK(input.weights[1] == Tfn(0.5, 1, 2));
}

TEST_CASE("study config loads and validates") {
  const auto config = io::load_study_config(test::data_file("pipeline.json"));
  CHECK(config.name == "ai-ethics-motivators");
  CHECK(config.closure == mcda::ClosureMode::SinglePass);
  CHECK(config.extraction == mcda::ExtractionMode::PaperCompat);
  CHECK(config.separation == mcda::SeparationMode::PaperCompat);
  CHECK(config.allow_unordered_cells);
  CHECK(config.conical_order.size() == 8);
  CHECK(std::filesystem::exists(config.ssim));

  CHECK_THROWS_AS(io::load_study_config(test::data_file("does_not_exist.json")), mcda::Error);
}

TEST_CASE("csv writer quotes exactly when needed") {
  std::string out;
  mcda::csv::append_row(out, std::vector<std::string>{"plain", "with,comma", "with\"quote"});
  CHECK(out == "plain,\"with,comma\",\"with\"\"quote\"\n");
  const auto parsed = mcda::csv::parse(out, "roundtrip");
  REQUIRE(parsed.size() == 1);
  CHECK(parsed[0][1] == "with,comma");
  CHECK(parsed[0][2] == "with\"quote");
  CHECK_THROWS_AS(mcda::csv::parse("a,\"unterminated\n", "t.csv"), ParseError);
}

TEST_CASE("decision matrices round-trip exactly through the emitter") {
  std::mt19937 rng(81);
  for (int round = 0; round < 120; ++round) {
    const auto matrix = test::random_decision_matrix(rng, 1 + static_cast<int>(rng() % 6),
                                                     1 + static_cast<int>(rng() % 5));
    mcda::CriterionWeights weights;
    for (int j = 0; j < matrix.cols(); ++j) weights.push_back(test::random_positive_tfn(rng));

    const auto text = io::write_decision_matrix_csv(matrix, weights);
    const auto parsed = io::parse_decision_matrix(text, "roundtrip.csv");
    CHECK(parsed.matrix.alternatives == matrix.alternatives);
    CHECK(parsed.matrix.criteria == matrix.criteria);
    CHECK(parsed.matrix.cells == matrix.cells);  // bit-exact
    CHECK(parsed.weights == weights);
  }
}

TEST_CASE("self-interaction matrices round-trip through the emitter") {
  std::mt19937 rng(82);
  for (int round = 0; round < 120; ++round) {
    const int n = 2 + static_cast<int>(rng() % 7);
    io::SsimInput input{{}, test::random_ssim(rng, n)};
    for (int i = 0; i < n; ++i) input.codes.push_back("F" + std::to_string(i + 1));
    const auto parsed = io::parse_ssim(io::write_ssim_csv(input), "roundtrip.csv");
    CHECK(parsed.codes == input.codes);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        CHECK(parsed.matrix.at(i, j) == input.matrix.at(i, j));
      }
    }
  }
}

TEST_CASE("marked matrix files parse stars and power columns") {
  const auto input = io::parse_marked_matrix(
      io::read_file(test::data_file("expected/final_reachability.csv")),
      "final_reachability.csv");
  CHECK(input.codes.size() == 8);
  CHECK(input.matrix.at(0, 5) == mcda::Mark::Derived);   // (CA1, CA6)
  CHECK(input.matrix.at(0, 0) == mcda::Mark::One);
  CHECK(input.matrix.at(1, 0) == mcda::Mark::Zero);
  CHECK(input.matrix.at(4, 6) == mcda::Mark::One);       // star lost in the transcription
}

TEST_CASE("number parsing accepts both decimal marks") {
  CHECK(mcda::parse_number("0,5", "t") == 0.5);
  CHECK(mcda::parse_number(" 2.25 ", "t") == 2.25);
  CHECK_THROWS_AS(mcda::parse_number("1.2.3", "t"), ParseError);
  CHECK_THROWS_AS(mcda::parse_number("", "t"), ParseError);
}

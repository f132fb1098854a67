#include <doctest.h>

#include <json.hpp>

#include "placement/errors.hpp"
#include "placement/io.hpp"
#include "placement/transform.hpp"

using namespace placement;

namespace {

std::vector<Monomial> monomials(std::initializer_list<const char*> texts) {
  std::vector<Monomial> out;
  for (const char* t : texts) out.push_back(Monomial::parse(t));
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("board JSON round-trip") {
  for (const Board& board :
       {Board::path(4), Board::cycle(3), Board::grid(2, 3),
        disjoint_union(Board::path(2), Board::path(2))}) {
    Board back = io::board_from_json(io::board_to_json(board));
    CHECK(back == board);
    CHECK(back.grid_shape() == board.grid_shape());
  }
  CHECK_THROWS_AS(io::board_from_json("{}"), Error);
  CHECK_THROWS_AS(io::board_from_json("not json"), Error);
}

TEST_CASE("complex JSON round-trip and schema") {
  SimplicialComplex delta = legal_complex(col_ruleset(), Board::path(3));
  std::string text = io::complex_to_json(delta);
  CHECK(io::complex_from_json(text) == delta);

  auto j = nlohmann::json::parse(text);
  CHECK(j["vertices"].size() == 6);
  CHECK(j["facets"].size() == 4);
  CHECK(j["f_vector"] == nlohmann::json({1, 6, 8, 2}));

  // degenerate complexes stay distinguishable
  SimplicialComplex void_c = SimplicialComplex::void_of(Universe::two_sided(1));
  SimplicialComplex empty_c = SimplicialComplex::empty_of(Universe::two_sided(1));
  CHECK(io::complex_from_json(io::complex_to_json(void_c)) == void_c);
  CHECK(io::complex_from_json(io::complex_to_json(empty_c)) == empty_c);
  CHECK_FALSE(io::complex_from_json(io::complex_to_json(void_c)) == empty_c);
}

TEST_CASE("analysis bundle schema") {
  auto analysis = analyze(nogo_ruleset(), Board::path(3));
  auto j = nlohmann::json::parse(io::analysis_to_json(*analysis));
  CHECK(j["game"] == "nogo");
  CHECK(j["board"]["vertex_count"] == 3);
  CHECK(j["variables"].size() == 6);
  CHECK(j["legal_ideal"].size() == 8);
  CHECK(j["illegal_ideal"].size() == 9);
  CHECK(j["game_polynomial"] == nlohmann::json({1, 6, 8}));
  CHECK(j["duality"]["legal_ideal_matches_facet_ideal"] == true);
  CHECK(j["duality"]["illegal_ideal_matches_gamma_facet_ideal"] == true);
  CHECK(j["duality"]["illegal_ideal_matches_sr_ideal"] == true);
  CHECK(j["duality"]["mismatches"].empty());

  // the embedded pieces parse back with the dedicated readers
  CHECK(io::board_from_json(j["board"].dump()) == analysis->board);
  CHECK(io::complex_from_json(j["legal_complex"].dump()) ==
        analysis->legal_complex);
  CHECK(io::complex_from_json(j["illegal_complex"].dump()) ==
        analysis->illegal_complex);
}

TEST_CASE("DOT export renders the 1-skeleton") {
  SimplicialComplex gamma = illegal_complex(col_ruleset(), Board::path(3));
  CHECK(io::complex_to_dot(gamma) ==
        "graph complex {\n"
        "  \"x1\";\n"
        "  \"y1\";\n"
        "  \"x2\";\n"
        "  \"y2\";\n"
        "  \"x3\";\n"
        "  \"y3\";\n"
        "  \"x1\" -- \"y1\";\n"
        "  \"x1\" -- \"x2\";\n"
        "  \"y1\" -- \"y2\";\n"
        "  \"x2\" -- \"y2\";\n"
        "  \"x2\" -- \"x3\";\n"
        "  \"y2\" -- \"y3\";\n"
        "  \"x3\" -- \"y3\";\n"
        "}\n");

  // triangles contribute their three edges
  SimplicialComplex triangle(Universe::single_sided(3),
                             monomials({"x1*x2*x3"}));
  std::string dot = io::complex_to_dot(triangle);
  CHECK(dot.find("\"x1\" -- \"x2\";") != std::string::npos);
  CHECK(dot.find("\"x1\" -- \"x3\";") != std::string::npos);
  CHECK(dot.find("\"x2\" -- \"x3\";") != std::string::npos);

  // isolated vertices still show up
  SimplicialComplex dots = SimplicialComplex::empty_of(Universe::single_sided(2));
  CHECK(io::complex_to_dot(dots) ==
        "graph complex {\n  \"x1\";\n  \"x2\";\n}\n");
}

}  // TEST_SUITE

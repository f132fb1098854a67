#include "placement/io.hpp"

#include <set>

#include <json.hpp>

#include "placement/errors.hpp"

namespace placement::io {

namespace {

using nlohmann::json;

json board_json(const Board& board) {
  json j;
  j["vertex_count"] = board.vertex_count();
  json edges = json::array();
  for (const auto& [u, v] : board.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  if (auto shape = board.grid_shape())
    j["grid_shape"] = {shape->rows, shape->cols};
  else
    j["grid_shape"] = nullptr;
  return j;
}

json complex_json(const SimplicialComplex& complex,
                  const EnumerationLimits& limits) {
  json j;
  json vertices = json::array();
  for (const Variable& v : complex.vertices().variables())
    vertices.push_back(v.str());
  j["vertices"] = std::move(vertices);
  json facets = json::array();
  for (const Monomial& f : complex.facets()) {
    json facet = json::array();
    for (const Variable& v : f.variables()) facet.push_back(v.str());
    facets.push_back(std::move(facet));
  }
  j["facets"] = std::move(facets);
  j["f_vector"] = complex.f_vector(limits);
  return j;
}

json ideal_json(const MonomialIdeal& ideal) {
  json gens = json::array();
  for (const Monomial& g : ideal.generators()) gens.push_back(g.str());
  return gens;
}

json parse_json(std::string_view text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded())
    raise(Errc::parse_error, std::string("invalid JSON for ") + what);
  return j;
}

}  // namespace

std::string board_to_json(const Board& board) {
  return board_json(board).dump(2);
}

Board board_from_json(std::string_view text) {
  json j = parse_json(text, "a board");
  if (!j.contains("vertex_count") || !j.contains("edges"))
    raise(Errc::parse_error, "board JSON needs vertex_count and edges");
  std::vector<Board::Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2)
      raise(Errc::parse_error, "board JSON edge must be a pair");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  Board board = Board::from_edges(j["vertex_count"].get<int>(), std::move(edges));
  if (j.contains("grid_shape") && j["grid_shape"].is_array()) {
    const auto& shape = j["grid_shape"];
    Board as_grid = Board::grid(shape[0].get<int>(), shape[1].get<int>());
    if (!(as_grid == board))
      raise(Errc::parse_error, "board JSON grid_shape does not match the edges");
    return as_grid;
  }
  return board;
}

std::string complex_to_json(const SimplicialComplex& complex,
                            const EnumerationLimits& limits) {
  return complex_json(complex, limits).dump(2);
}

SimplicialComplex complex_from_json(std::string_view text) {
  json j = parse_json(text, "a complex");
  if (!j.contains("vertices") || !j.contains("facets"))
    raise(Errc::parse_error, "complex JSON needs vertices and facets");
  std::vector<Variable> vars;
  for (const auto& v : j["vertices"])
    vars.push_back(Variable::parse(v.get<std::string>()));
  Universe universe(std::move(vars));
  std::vector<Monomial> facets;
  for (const auto& f : j["facets"]) {
    std::vector<Variable> face;
    for (const auto& v : f) face.push_back(Variable::parse(v.get<std::string>()));
    facets.push_back(Monomial(std::move(face)));
  }
  return SimplicialComplex(std::move(universe), std::move(facets));
}

std::string analysis_to_json(const GameAnalysis& analysis,
                             const EnumerationLimits& limits) {
  json j;
  j["game"] = analysis.ruleset->name();
  j["board"] = board_json(analysis.board);
  json vars = json::array();
  for (const Variable& v : analysis.universe.variables()) vars.push_back(v.str());
  j["variables"] = std::move(vars);
  j["legal_complex"] = complex_json(analysis.legal_complex, limits);
  j["illegal_complex"] = complex_json(analysis.illegal_complex, limits);
  j["legal_ideal"] = ideal_json(analysis.legal_ideal);
  j["illegal_ideal"] = ideal_json(analysis.illegal_ideal);
  j["game_polynomial"] = analysis.polynomial.coefficients;
  json duality;
  duality["legal_ideal_matches_facet_ideal"] =
      analysis.duality.legal_ideal_matches_facet_ideal;
  duality["illegal_ideal_matches_gamma_facet_ideal"] =
      analysis.duality.illegal_ideal_matches_gamma_facet_ideal;
  duality["illegal_ideal_matches_sr_ideal"] =
      analysis.duality.illegal_ideal_matches_sr_ideal;
  json mismatches = json::array();
  for (const GeneratorMismatch& m : analysis.duality.mismatches) {
    json entry;
    entry["clause"] = m.clause;
    json lhs = json::array();
    for (const Monomial& g : m.only_lhs) lhs.push_back(g.str());
    entry["only_lhs"] = std::move(lhs);
    json rhs = json::array();
    for (const Monomial& g : m.only_rhs) rhs.push_back(g.str());
    entry["only_rhs"] = std::move(rhs);
    mismatches.push_back(std::move(entry));
  }
  duality["mismatches"] = std::move(mismatches);
  j["duality"] = std::move(duality);
  return j.dump(2);
}

std::string complex_to_dot(const SimplicialComplex& complex) {
  // 1-skeleton: all pairs inside some facet.
  std::set<std::pair<Variable, Variable>> edges;
  for (const Monomial& facet : complex.facets()) {
    const auto& vars = facet.variables();
    for (std::size_t i = 0; i < vars.size(); ++i)
      for (std::size_t j = i + 1; j < vars.size(); ++j)
        edges.insert({vars[i], vars[j]});
  }
  std::string out = "graph complex {\n";
  for (const Variable& v : complex.vertices().variables())
    out += "  \"" + v.str() + "\";\n";
  for (const auto& [u, v] : edges)
    out += "  \"" + u.str() + "\" -- \"" + v.str() + "\";\n";
  out += "}\n";
  return out;
}

}  // namespace placement::io

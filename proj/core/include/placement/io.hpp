#pragma once

#include <string>
#include <string_view>

#include "placement/board.hpp"
#include "placement/complex.hpp"
#include "placement/ideal.hpp"
#include "placement/transform.hpp"

namespace placement::io {

// JSON schemas (stable key order, two-space indent):
//   board:    {"vertex_count": n, "edges": [[u,v],...], "grid_shape": [r,c]|null}
//   complex:  {"vertices": [...], "facets": [[...],...], "f_vector": [...]}
//   analysis: {"game", "board", "variables", "legal_complex",
//              "illegal_complex", "legal_ideal", "illegal_ideal",
//              "game_polynomial", "duality"}

std::string board_to_json(const Board& board);
Board board_from_json(std::string_view text);

std::string complex_to_json(const SimplicialComplex& complex,
                            const EnumerationLimits& limits = {});
SimplicialComplex complex_from_json(std::string_view text);

std::string analysis_to_json(const GameAnalysis& analysis,
                             const EnumerationLimits& limits = {});

// Undirected DOT graph of the 1-skeleton: every vertex, plus an edge for
// every 2-element face.
std::string complex_to_dot(const SimplicialComplex& complex);

}  // namespace placement::io

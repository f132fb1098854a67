#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "placement/board.hpp"
#include "placement/complex.hpp"
#include "placement/ideal.hpp"
#include "placement/limits.hpp"
#include "placement/ruleset.hpp"

namespace placement {

// Generating polynomial of the legal positions by piece count:
// coefficient i = number of legal positions with i pieces.
struct GamePolynomial {
  std::vector<std::int64_t> coefficients;

  std::int64_t at_one() const;  // total number of legal positions
  std::string str() const;      // "1 + 6x + 8x^2 + 2x^3"

  friend bool operator==(const GamePolynomial&, const GamePolynomial&) = default;
};

struct GeneratorMismatch {
  std::string clause;
  std::vector<Monomial> only_lhs;
  std::vector<Monomial> only_rhs;
};

// Outcome of checking the three ideal identities of a placement game:
// the legal ideal is the facet ideal of the legal complex, and the illegal
// ideal is both the facet ideal of the illegal complex and the
// Stanley-Reisner ideal of the legal complex.
struct DualityReport {
  bool legal_ideal_matches_facet_ideal = true;
  bool illegal_ideal_matches_gamma_facet_ideal = true;
  bool illegal_ideal_matches_sr_ideal = true;
  std::vector<GeneratorMismatch> mismatches;

  bool all_ok() const {
    return legal_ideal_matches_facet_ideal &&
           illegal_ideal_matches_gamma_facet_ideal &&
           illegal_ideal_matches_sr_ideal;
  }
};

// Everything derived from one enumeration of a game on a board. Built once
// and cached per (ruleset fingerprint, board fingerprint).
struct GameAnalysis {
  std::shared_ptr<const Ruleset> ruleset;
  Board board;
  Universe universe;
  std::vector<BasicPosition> basics;

  // All legal positions as monomials, downward closed, canonical order.
  std::vector<Monomial> legal_positions;

  // Legal complex: facets are the maximal legal positions.
  SimplicialComplex legal_complex;

  // Illegal complex: facets are the minimal illegal positions, found by
  // direct enumeration against the ruleset.
  SimplicialComplex illegal_complex;

  // Minimal non-faces of the legal complex, computed independently from
  // its facet family; cross-checks the illegal complex.
  std::vector<Monomial> legal_complex_minimal_non_faces;

  MonomialIdeal legal_ideal;
  MonomialIdeal illegal_ideal;

  // Coefficients counted directly from the enumerated legal positions by
  // degree; equality with the legal complex's f-vector is a checked
  // consequence, not an implementation shortcut.
  GamePolynomial polynomial;

  DualityReport duality;
};

std::shared_ptr<const GameAnalysis> analyze(std::shared_ptr<const Ruleset> rules,
                                            const Board& board,
                                            const EnumerationLimits& limits = {});

std::vector<Monomial> legal_positions(const std::shared_ptr<const Ruleset>& rules,
                                      const Board& board,
                                      const EnumerationLimits& limits = {});
SimplicialComplex legal_complex(const std::shared_ptr<const Ruleset>& rules,
                                const Board& board,
                                const EnumerationLimits& limits = {});

// Raises Errc::internal_error when the direct enumeration and the
// minimal-non-face route disagree (a symptom of a non-hereditary ruleset
// slipping past the enumeration checks).
SimplicialComplex illegal_complex(const std::shared_ptr<const Ruleset>& rules,
                                  const Board& board,
                                  const EnumerationLimits& limits = {});

MonomialIdeal legal_ideal(const std::shared_ptr<const Ruleset>& rules,
                          const Board& board,
                          const EnumerationLimits& limits = {});
MonomialIdeal illegal_ideal(const std::shared_ptr<const Ruleset>& rules,
                            const Board& board,
                            const EnumerationLimits& limits = {});
GamePolynomial game_polynomial(const std::shared_ptr<const Ruleset>& rules,
                               const Board& board,
                               const EnumerationLimits& limits = {});
DualityReport verify_duality(const std::shared_ptr<const Ruleset>& rules,
                             const Board& board,
                             const EnumerationLimits& limits = {});

}  // namespace placement

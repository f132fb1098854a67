#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "placement/board.hpp"
#include "placement/complex.hpp"
#include "placement/limits.hpp"
#include "placement/ruleset.hpp"

namespace placement {

enum class ArenaKind { BoardPlay, LegalComplexPlay, IllegalComplexPlay };

// A surface a game can be played on. All three arenas identify moves by
// Variable, so sequences transfer verbatim between them:
//   - the board, judged by the ruleset;
//   - the legal complex, where occupied vertices must form a face;
//   - the illegal complex, where occupied vertices may never cover a facet.
class Arena {
public:
  virtual ~Arena() = default;

  virtual ArenaKind kind() const = 0;
  virtual const Universe& universe() const = 0;
  virtual std::string label() const = 0;
  virtual bool admits(const Monomial& occupied) const = 0;
  virtual std::string rule_violation(const Monomial& occupied) const = 0;
};

std::shared_ptr<const Arena> make_board_arena(std::shared_ptr<const Ruleset> rules,
                                              Board board);
std::shared_ptr<const Arena> make_legal_complex_arena(SimplicialComplex delta);
std::shared_ptr<const Arena> make_illegal_complex_arena(SimplicialComplex gamma);

using Move = std::pair<Player, Variable>;

// Immutable match snapshot; apply_move returns a new state.
class MatchState {
public:
  explicit MatchState(std::shared_ptr<const Arena> arena);

  const Arena& arena() const { return *arena_; }
  const std::shared_ptr<const Arena>& arena_ptr() const { return arena_; }
  const std::vector<Move>& history() const { return history_; }
  const Monomial& occupied() const { return occupied_; }

private:
  friend MatchState apply_move(const MatchState&, Player, Variable);

  std::shared_ptr<const Arena> arena_;
  std::vector<Move> history_;
  Monomial occupied_;
};

// Variables of p's side whose placement keeps the position admissible.
std::vector<Variable> legal_moves(const MatchState& state, Player p);

// Raises Errc::illegal_move with the rejection reason (occupied square,
// wrong side, or the arena rule that fails), Errc::domain_error for
// variables outside the arena.
MatchState apply_move(const MatchState& state, Player p, Variable v);

// "L:x1 R:y3 L:x4" -> [(Left,x1), (Right,y3), (Left,x4)]
std::vector<Move> parse_move_sequence(std::string_view text);
std::string render_move_sequence(const std::vector<Move>& moves);

struct EquivalenceReport {
  bool equivalent = true;
  std::vector<Move> counterexample;  // playable on one arena, not another
  std::string playable_on;
  std::string rejected_by;
  std::string detail;
};

// Exhaustively compares which positions are reachable, level by level up to
// `depth` pieces, across arenas sharing one universe. Position sets suffice
// because every arena's admissible family is hereditary; a divergence is
// reported as a concrete move sequence.
EquivalenceReport check_arena_equivalence(const std::vector<const Arena*>& arenas,
                                          int depth);

// The board arena against the legal-complex and illegal-complex arenas of
// the same game. depth < 0 means full depth (the whole variable universe).
EquivalenceReport check_equivalence(const std::shared_ptr<const Ruleset>& rules,
                                    const Board& board, int depth = -1,
                                    const EnumerationLimits& limits = {});

}  // namespace placement

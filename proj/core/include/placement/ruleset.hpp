#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "placement/board.hpp"
#include "placement/limits.hpp"
#include "placement/monomial.hpp"

namespace placement {

// A board with exactly one piece placed: the atom every position is built
// from, and the meaning of one monomial variable.
struct BasicPosition {
  Player player = Player::Left;
  int index = 1;           // per-player, 1-based
  std::vector<int> cells;  // occupied board vertices, sorted

  Variable variable() const { return Variable{player, index}; }

  friend bool operator==(const BasicPosition&, const BasicPosition&) = default;
};

// A set of basic positions. Positions are sets, never multisets, and they
// do not need disjoint cells: overlapping placements are representable and
// simply illegal in every implemented game.
class Position {
public:
  Position() = default;
  explicit Position(std::vector<BasicPosition> pieces);

  const std::vector<BasicPosition>& pieces() const { return pieces_; }
  bool empty() const { return pieces_.empty(); }
  std::size_t size() const { return pieces_.size(); }
  Monomial monomial() const;

private:
  std::vector<BasicPosition> pieces_;  // sorted by variable, unique
};

// A game definition: which single-piece placements exist on a board, and
// which sets of placements are legal. Legality must be a pure function of
// the position; strong placement games additionally keep it hereditary
// (every subset of a legal position is legal), which the enumeration layer
// verifies at runtime.
class Ruleset {
public:
  virtual ~Ruleset() = default;

  virtual std::string name() const = 0;
  virtual std::vector<BasicPosition> basic_positions(const Board& board) const = 0;
  virtual bool is_legal(const Board& board, const Position& pos) const = 0;

  // Cache identity; defaults to a hash of the name. Rulesets whose rules
  // depend on loaded data must fold that data in.
  virtual std::uint64_t fingerprint() const;
};

std::shared_ptr<const Ruleset> trivial_ruleset();
std::shared_ptr<const Ruleset> snort_ruleset();
std::shared_ptr<const Ruleset> col_ruleset();
std::shared_ptr<const Ruleset> nogo_ruleset();
std::shared_ptr<const Ruleset> domineering_ruleset();

// Accepts the builtin names (trivial, snort, col, nogo, domineering) and
// "custom:<path>" for a ruleset file. Unknown names raise
// Errc::domain_error.
std::shared_ptr<const Ruleset> ruleset_by_name(const std::string& name);

// Custom ruleset text: a header "vars: x1..xN y1..yM" declaring the
// variables (ranges or single variables, whitespace separated), then one
// minimal illegal monomial per line. A position is legal iff no listed
// monomial divides it.
std::shared_ptr<const Ruleset> parse_custom_ruleset(std::string_view text,
                                                    std::string name);
std::shared_ptr<const Ruleset> load_custom_ruleset(const std::string& path);

// Binds a ruleset to a board: materializes the basic positions in
// canonical variable order together with the variable universe, and
// resolves monomials back to placements for legality tests.
class GameInstance {
public:
  GameInstance(std::shared_ptr<const Ruleset> rules, Board board);

  const Ruleset& ruleset() const { return *rules_; }
  const std::shared_ptr<const Ruleset>& ruleset_ptr() const { return rules_; }
  const Board& board() const { return board_; }
  const Universe& universe() const { return universe_; }
  const std::vector<BasicPosition>& basics() const { return basics_; }
  const BasicPosition& basic_for(Variable v) const;

  Position position_of(const Monomial& m) const;
  Position position_of_mask(std::uint64_t mask) const;
  bool is_legal(const Monomial& m) const;
  bool is_legal_mask(std::uint64_t mask) const;

private:
  std::shared_ptr<const Ruleset> rules_;
  Board board_;
  std::vector<BasicPosition> basics_;  // aligned with universe_ order
  Universe universe_;
};

struct StrongPlacementReport {
  bool hereditary = true;
  // Witness when not hereditary: a legal position with an illegal
  // one-smaller subposition.
  std::optional<Monomial> legal_position;
  std::optional<Monomial> illegal_subposition;
};

// Exhaustive hereditary check over every subset of the variable universe.
// Refused above limits.max_exhaustive_variables (the sweep is 2^n calls).
StrongPlacementReport check_strong_placement(const Ruleset& rules,
                                             const Board& board,
                                             const EnumerationLimits& limits = {});

}  // namespace placement

#include "placement/play.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "placement/errors.hpp"
#include "placement/transform.hpp"

namespace placement {

namespace {

class BoardArena final : public Arena {
public:
  BoardArena(std::shared_ptr<const Ruleset> rules, Board board)
      : instance_(std::move(rules), std::move(board)) {}

  ArenaKind kind() const override { return ArenaKind::BoardPlay; }
  const Universe& universe() const override { return instance_.universe(); }
  std::string label() const override {
    return "board[" + instance_.ruleset().name() + "]";
  }
  bool admits(const Monomial& occupied) const override {
    return instance_.is_legal(occupied);
  }
  std::string rule_violation(const Monomial& occupied) const override {
    return "ruleset " + instance_.ruleset().name() + " forbids position " +
           occupied.str();
  }

private:
  GameInstance instance_;
};

class LegalComplexArena final : public Arena {
public:
  explicit LegalComplexArena(SimplicialComplex delta) : delta_(std::move(delta)) {}

  ArenaKind kind() const override { return ArenaKind::LegalComplexPlay; }
  const Universe& universe() const override { return delta_.vertices(); }
  std::string label() const override { return "legal-complex"; }
  bool admits(const Monomial& occupied) const override {
    return delta_.is_face(occupied);
  }
  std::string rule_violation(const Monomial& occupied) const override {
    return occupied.str() + " is not a face of the legal complex";
  }

private:
  SimplicialComplex delta_;
};

class IllegalComplexArena final : public Arena {
public:
  explicit IllegalComplexArena(SimplicialComplex gamma) : gamma_(std::move(gamma)) {}

  ArenaKind kind() const override { return ArenaKind::IllegalComplexPlay; }
  const Universe& universe() const override { return gamma_.vertices(); }
  std::string label() const override { return "illegal-complex"; }
  bool admits(const Monomial& occupied) const override {
    std::uint64_t mask = gamma_.vertices().mask_of(occupied);
    for (std::uint64_t facet : gamma_.facet_masks())
      if ((facet & mask) == facet) return false;
    return true;
  }
  std::string rule_violation(const Monomial& occupied) const override {
    std::uint64_t mask = gamma_.vertices().mask_of(occupied);
    for (std::size_t i = 0; i < gamma_.facet_masks().size(); ++i)
      if ((gamma_.facet_masks()[i] & mask) == gamma_.facet_masks()[i])
        return "covers facet " + gamma_.facets()[i].str() +
               " of the illegal complex";
    return "covers a facet of the illegal complex";
  }

private:
  SimplicialComplex gamma_;
};

}  // namespace

std::shared_ptr<const Arena> make_board_arena(std::shared_ptr<const Ruleset> rules,
                                              Board board) {
  return std::make_shared<const BoardArena>(std::move(rules), std::move(board));
}

std::shared_ptr<const Arena> make_legal_complex_arena(SimplicialComplex delta) {
  return std::make_shared<const LegalComplexArena>(std::move(delta));
}

std::shared_ptr<const Arena> make_illegal_complex_arena(SimplicialComplex gamma) {
  return std::make_shared<const IllegalComplexArena>(std::move(gamma));
}

MatchState::MatchState(std::shared_ptr<const Arena> arena)
    : arena_(std::move(arena)) {}

std::vector<Variable> legal_moves(const MatchState& state, Player p) {
  std::vector<Variable> moves;
  for (const Variable& v : state.arena().universe().variables()) {
    if (v.player != p) continue;
    if (state.occupied().contains(v)) continue;
    if (state.arena().admits(state.occupied().with(v))) moves.push_back(v);
  }
  return moves;
}

MatchState apply_move(const MatchState& state, Player p, Variable v) {
  if (!state.arena().universe().contains(v))
    raise(Errc::domain_error,
          "variable " + v.str() + " does not exist in this arena");
  if (v.player != p)
    raise(Errc::illegal_move, std::string(p == Player::Left ? "Left" : "Right") +
                                  " may not play on " + v.str() +
                                  " (wrong side)");
  if (state.occupied().contains(v))
    raise(Errc::illegal_move, v.str() + " is already occupied");
  Monomial next = state.occupied().with(v);
  if (!state.arena().admits(next))
    raise(Errc::illegal_move, state.arena().rule_violation(next));
  MatchState out = state;
  out.history_.emplace_back(p, v);
  out.occupied_ = std::move(next);
  return out;
}

std::vector<Move> parse_move_sequence(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<Move> moves;
  std::string token;
  while (in >> token) {
    if (token.size() < 3 || token[1] != ':' || (token[0] != 'L' && token[0] != 'R'))
      raise(Errc::parse_error,
            "invalid move token '" + token + "' (expected L:<var> or R:<var>)");
    Player p = token[0] == 'L' ? Player::Left : Player::Right;
    moves.emplace_back(p, Variable::parse(std::string_view(token).substr(2)));
  }
  return moves;
}

std::string render_move_sequence(const std::vector<Move>& moves) {
  std::string out;
  for (const Move& m : moves) {
    if (!out.empty()) out += ' ';
    out += m.first == Player::Left ? "L:" : "R:";
    out += m.second.str();
  }
  return out;
}

namespace {

struct Reach {
  std::unordered_set<std::uint64_t> seen;
  std::vector<std::uint64_t> frontier;
  // first-reach predecessor and the variable index added
  std::unordered_map<std::uint64_t, std::pair<std::uint64_t, int>> parent;
};

std::vector<Move> sequence_to(const Reach& reach, const Universe& universe,
                              std::uint64_t target) {
  std::vector<Move> moves;
  std::uint64_t cursor = target;
  while (cursor != 0) {
    auto it = reach.parent.find(cursor);
    Variable v = universe.at(static_cast<std::size_t>(it->second.second));
    moves.emplace_back(v.player, v);
    cursor = it->second.first;
  }
  std::reverse(moves.begin(), moves.end());
  return moves;
}

}  // namespace

EquivalenceReport check_arena_equivalence(const std::vector<const Arena*>& arenas,
                                          int depth) {
  EquivalenceReport report;
  if (arenas.size() < 2) return report;
  const Universe& universe = arenas.front()->universe();
  for (const Arena* arena : arenas)
    if (arena->universe() != universe)
      raise(Errc::domain_error,
            "arenas play over different variable universes");

  const int n = static_cast<int>(universe.size());
  const int max_depth = depth < 0 ? n : std::min(depth, n);

  std::vector<Reach> reach(arenas.size());
  for (Reach& r : reach) {
    r.seen.insert(0);
    r.frontier.push_back(0);
  }

  for (int level = 1; level <= max_depth; ++level) {
    std::vector<std::vector<std::uint64_t>> found(arenas.size());
    for (std::size_t ai = 0; ai < arenas.size(); ++ai) {
      Reach& r = reach[ai];
      std::vector<std::uint64_t> next;
      for (std::uint64_t pos : r.frontier) {
        for (int v = 0; v < n; ++v) {
          std::uint64_t candidate = pos | (std::uint64_t{1} << v);
          if (candidate == pos || r.seen.contains(candidate)) continue;
          if (!arenas[ai]->admits(universe.monomial_of(candidate))) continue;
          r.seen.insert(candidate);
          r.parent[candidate] = {pos, v};
          next.push_back(candidate);
        }
      }
      std::sort(next.begin(), next.end());
      found[ai] = next;
      r.frontier = std::move(next);
    }
    for (std::size_t ai = 1; ai < arenas.size(); ++ai) {
      if (found[ai] == found[0]) continue;
      // First diverging position: smallest mask reachable on one side only.
      std::vector<std::uint64_t> diff;
      std::set_symmetric_difference(found[0].begin(), found[0].end(),
                                    found[ai].begin(), found[ai].end(),
                                    std::back_inserter(diff));
      std::uint64_t witness = diff.front();
      bool in_first = std::binary_search(found[0].begin(), found[0].end(), witness);
      std::size_t has = in_first ? 0 : ai;
      std::size_t lacks = in_first ? ai : 0;
      report.equivalent = false;
      report.counterexample = sequence_to(reach[has], universe, witness);
      report.playable_on = arenas[has]->label();
      report.rejected_by = arenas[lacks]->label();
      report.detail = "position " + universe.monomial_of(witness).str() +
                      " with " + std::to_string(level) +
                      " pieces is reachable on " + report.playable_on +
                      " but not on " + report.rejected_by;
      return report;
    }
  }
  return report;
}

EquivalenceReport check_equivalence(const std::shared_ptr<const Ruleset>& rules,
                                    const Board& board, int depth,
                                    const EnumerationLimits& limits) {
  auto analysis = analyze(rules, board, limits);
  auto board_arena = make_board_arena(rules, board);
  auto legal_arena = make_legal_complex_arena(analysis->legal_complex);
  auto illegal_arena = make_illegal_complex_arena(analysis->illegal_complex);
  return check_arena_equivalence(
      {board_arena.get(), legal_arena.get(), illegal_arena.get()}, depth);
}

}  // namespace placement

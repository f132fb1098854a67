#include <doctest.h>

#include <algorithm>
#include <random>

#include "placement/errors.hpp"
#include "placement/play.hpp"
#include "placement/transform.hpp"

using namespace placement;

namespace {

Monomial m(const char* text) { return Monomial::parse(text); }

std::vector<Variable> vars(std::initializer_list<const char*> texts) {
  std::vector<Variable> out;
  for (const char* t : texts) out.push_back(Variable::parse(t));
  return out;
}

MatchState play_all(MatchState state, const std::vector<Move>& moves) {
  for (const Move& move : moves) state = apply_move(state, move.first, move.second);
  return state;
}

}  // namespace

TEST_SUITE("play") {

TEST_CASE("legal moves on the board arena") {
  auto arena = make_board_arena(col_ruleset(), Board::path(3));
  MatchState start(arena);
  CHECK(legal_moves(start, Player::Left) == vars({"x1", "x2", "x3"}));

  MatchState after = apply_move(start, Player::Left, Variable::parse("x1"));
  CHECK(legal_moves(after, Player::Right) == vars({"y2", "y3"}));
}

TEST_CASE("legal moves on the illegal-complex arena") {
  auto gamma = illegal_complex(col_ruleset(), Board::path(5));
  auto arena = make_illegal_complex_arena(gamma);
  MatchState state = play_all(MatchState(arena),
                              parse_move_sequence("L:x1 R:y3 L:x4"));
  CHECK(legal_moves(state, Player::Right) == vars({"y5"}));
}

TEST_CASE("consecutive moves by one player are fine") {
  auto arena = make_board_arena(col_ruleset(), Board::path(3));
  MatchState state = play_all(MatchState(arena), parse_move_sequence("L:x1 L:x3"));
  CHECK(state.occupied() == m("x1*x3"));
  CHECK(state.history().size() == 2);
}

TEST_CASE("rejections carry a reason") {
  auto delta = legal_complex(col_ruleset(), Board::cycle(3));
  auto arena = make_legal_complex_arena(delta);
  MatchState state = play_all(MatchState(arena), parse_move_sequence("L:x2 R:y3"));

  // {x2, y3, y1} is not a face of the legal complex of Col on C3
  CHECK_THROWS_WITH_AS(apply_move(state, Player::Right, Variable::parse("y1")),
                       "y1*x2*y3 is not a face of the legal complex", Error);

  // replaying an occupied variable
  CHECK_THROWS_WITH_AS(apply_move(state, Player::Left, Variable::parse("x2")),
                       "x2 is already occupied", Error);

  // wrong side
  CHECK_THROWS_WITH_AS(apply_move(state, Player::Left, Variable::parse("y2")),
                       "Left may not play on y2 (wrong side)", Error);

  // unknown variable
  CHECK_THROWS_AS(apply_move(state, Player::Left, Variable::parse("x7")), Error);

  // illegal-complex arenas name the covered facet
  auto gamma_arena =
      make_illegal_complex_arena(illegal_complex(col_ruleset(), Board::path(3)));
  MatchState gamma_state =
      play_all(MatchState(gamma_arena), parse_move_sequence("L:x1"));
  CHECK_THROWS_WITH_AS(
      apply_move(gamma_state, Player::Left, Variable::parse("x2")),
      "covers facet x1*x2 of the illegal complex", Error);
}

TEST_CASE("legal moves never include occupied or wrong-side variables") {
  std::mt19937 rng(808);
  for (const auto& rules : {col_ruleset(), nogo_ruleset(), snort_ruleset()}) {
    auto analysis = analyze(rules, Board::cycle(4));
    std::vector<std::shared_ptr<const Arena>> arenas = {
        make_board_arena(rules, Board::cycle(4)),
        make_legal_complex_arena(analysis->legal_complex),
        make_illegal_complex_arena(analysis->illegal_complex)};
    for (const auto& arena : arenas) {
      MatchState state{arena};
      for (int step = 0; step < 6; ++step) {
        Player p = rng() % 2 == 0 ? Player::Left : Player::Right;
        auto moves = legal_moves(state, p);
        for (const Variable& v : moves) {
          CHECK(v.player == p);
          CHECK_FALSE(state.occupied().contains(v));
        }
        if (moves.empty()) break;
        state = apply_move(state, p, moves[rng() % moves.size()]);
      }
    }
  }
}

TEST_CASE("reachable positions are exactly the faces of the legal complex") {
  auto rules = nogo_ruleset();
  Board board = Board::path(4);
  auto analysis = analyze(rules, board);
  auto arena = make_board_arena(rules, board);

  // breadth-first over match states, collecting every reachable position
  std::vector<MatchState> frontier{MatchState(arena)};
  std::vector<Monomial> reached{m("1")};
  while (!frontier.empty()) {
    std::vector<MatchState> next;
    for (const MatchState& state : frontier) {
      for (Player p : {Player::Left, Player::Right}) {
        for (const Variable& v : legal_moves(state, p)) {
          MatchState after = apply_move(state, p, v);
          if (std::find(reached.begin(), reached.end(), after.occupied()) !=
              reached.end())
            continue;
          reached.push_back(after.occupied());
          next.push_back(after);
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(reached.begin(), reached.end(), canonical_less);
  CHECK(reached == analysis->legal_positions);
}

TEST_CASE("move sequence format") {
  auto moves = parse_move_sequence("L:x1 R:y3 L:x4");
  REQUIRE(moves.size() == 3);
  CHECK(moves[0] == Move{Player::Left, Variable::parse("x1")});
  CHECK(moves[2] == Move{Player::Left, Variable::parse("x4")});
  CHECK(render_move_sequence(moves) == "L:x1 R:y3 L:x4");
  CHECK(parse_move_sequence("").empty());
  CHECK_THROWS_AS(parse_move_sequence("Lx1"), Error);
  CHECK_THROWS_AS(parse_move_sequence("Z:x1"), Error);
  CHECK_THROWS_AS(parse_move_sequence("L:q1"), Error);
}

TEST_CASE("equivalence of board, legal and illegal arenas") {
  CHECK(check_equivalence(col_ruleset(), Board::path(3)).equivalent);
  CHECK(check_equivalence(nogo_ruleset(), Board::path(3)).equivalent);
  CHECK(check_equivalence(domineering_ruleset(), Board::grid(2, 2)).equivalent);
}

TEST_CASE("a mutated legal complex diverges with a short counterexample") {
  auto analysis = analyze(col_ruleset(), Board::path(3));
  // drop the facet {x1, y3}: the pair stays playable on the board but is no
  // longer a face
  std::vector<Monomial> facets;
  for (const Monomial& f : analysis->legal_complex.facets())
    if (!(f == m("x1*y3"))) facets.push_back(f);
  SimplicialComplex mutated(analysis->legal_complex.vertices(), facets);

  auto board_arena = make_board_arena(col_ruleset(), Board::path(3));
  auto mutated_arena = make_legal_complex_arena(mutated);
  auto gamma_arena =
      make_illegal_complex_arena(analysis->illegal_complex);
  EquivalenceReport report = check_arena_equivalence(
      {board_arena.get(), mutated_arena.get(), gamma_arena.get()}, 2);
  REQUIRE_FALSE(report.equivalent);
  CHECK(report.counterexample.size() <= 2);
  CHECK(report.playable_on == "board[col]");
  CHECK(report.rejected_by == "legal-complex");

  // the reported sequence must actually replay on the arena that accepts it
  MatchState replay{board_arena};
  CHECK_NOTHROW(replay = play_all(MatchState(board_arena), report.counterexample));
}

TEST_CASE("sampled orderings agree across arenas") {
  std::mt19937 rng(117);
  for (const auto& rules : {col_ruleset(), snort_ruleset(), nogo_ruleset()}) {
    Board board = Board::path(4);
    auto analysis = analyze(rules, board);
    std::vector<std::shared_ptr<const Arena>> arenas = {
        make_board_arena(rules, board),
        make_legal_complex_arena(analysis->legal_complex),
        make_illegal_complex_arena(analysis->illegal_complex)};
    for (int trial = 0; trial < 50; ++trial) {
      const Monomial& target =
          analysis->legal_positions[rng() % analysis->legal_positions.size()];
      std::vector<Variable> order = target.variables();
      std::shuffle(order.begin(), order.end(), rng);
      for (const auto& arena : arenas) {
        MatchState state{arena};
        for (const Variable& v : order) state = apply_move(state, v.player, v);
        CHECK(state.occupied() == target);
      }
    }
  }
}

TEST_CASE("depth-limited equivalence stops early") {
  EquivalenceReport shallow = check_equivalence(col_ruleset(), Board::path(4), 2);
  CHECK(shallow.equivalent);
}

}  // TEST_SUITE

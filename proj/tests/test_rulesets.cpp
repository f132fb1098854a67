#include <doctest.h>

#include <algorithm>
#include <random>

#include "placement/errors.hpp"
#include "placement/ruleset.hpp"

using namespace placement;

namespace {

Monomial m(const char* text) { return Monomial::parse(text); }

bool legal(const std::shared_ptr<const Ruleset>& rules, const Board& board,
           const char* monomial) {
  GameInstance instance(rules, board);
  return instance.is_legal(m(monomial));
}

// Legal iff the piece count is not exactly one: the canonical example of a
// ruleset that is not a strong placement game.
class NotOnePieceRuleset final : public Ruleset {
public:
  std::string name() const override { return "not-one-piece"; }
  std::vector<BasicPosition> basic_positions(const Board& board) const override {
    return trivial_ruleset()->basic_positions(board);
  }
  bool is_legal(const Board&, const Position& pos) const override {
    return pos.size() != 1;
  }
};

}  // namespace

TEST_SUITE("rulesets") {

TEST_CASE("basic positions of single-vertex games") {
  GameInstance snort(snort_ruleset(), Board::path(3));
  CHECK(snort.universe() == Universe::two_sided(3));
  REQUIRE(snort.basics().size() == 6);
  for (const BasicPosition& piece : snort.basics())
    CHECK(piece.cells == std::vector<int>{piece.index});

  GameInstance col(col_ruleset(), Board::path(1));
  CHECK(col.universe() == Universe::two_sided(1));
}

TEST_CASE("basic positions of domineering") {
  GameInstance game(domineering_ruleset(), Board::grid(2, 2));
  // Left: two vertical dominoes; Right: two horizontal ones.
  REQUIRE(game.basics().size() == 4);
  CHECK(game.basic_for(Variable{Player::Left, 1}).cells == std::vector<int>{1, 3});
  CHECK(game.basic_for(Variable{Player::Left, 2}).cells == std::vector<int>{2, 4});
  CHECK(game.basic_for(Variable{Player::Right, 1}).cells == std::vector<int>{1, 2});
  CHECK(game.basic_for(Variable{Player::Right, 2}).cells == std::vector<int>{3, 4});

  // vertical dominoes are ordered by (row, col) of the upper cell
  GameInstance wide(domineering_ruleset(), Board::grid(3, 2));
  CHECK(wide.basic_for(Variable{Player::Left, 1}).cells == std::vector<int>{1, 3});
  CHECK(wide.basic_for(Variable{Player::Left, 2}).cells == std::vector<int>{2, 4});
  CHECK(wide.basic_for(Variable{Player::Left, 3}).cells == std::vector<int>{3, 5});

  CHECK_THROWS_AS(GameInstance(domineering_ruleset(), Board::path(4)), Error);
}

TEST_CASE("snort legality") {
  Board p3 = Board::path(3);
  CHECK(legal(snort_ruleset(), p3, "x1*x2*x3"));
  CHECK(legal(snort_ruleset(), p3, "x1*y3"));
  CHECK_FALSE(legal(snort_ruleset(), p3, "x1*y2"));  // opposite colors adjacent
  CHECK_FALSE(legal(snort_ruleset(), p3, "x1*y1"));  // double occupancy
  CHECK(legal(snort_ruleset(), p3, "1"));
}

TEST_CASE("col legality") {
  Board p3 = Board::path(3);
  CHECK(legal(col_ruleset(), p3, "x1*y2*x3"));
  CHECK_FALSE(legal(col_ruleset(), p3, "x1*x2"));  // same color adjacent
  CHECK_FALSE(legal(col_ruleset(), p3, "x2*y2"));  // double occupancy
  CHECK(legal(col_ruleset(), p3, "x1*x3"));
  CHECK(legal(col_ruleset(), p3, "1"));
}

TEST_CASE("nogo legality") {
  Board p3 = Board::path(3);
  CHECK_FALSE(legal(nogo_ruleset(), p3, "x1*x2*x3"));  // no liberty anywhere
  CHECK(legal(nogo_ruleset(), p3, "x1*x2"));
  CHECK(legal(nogo_ruleset(), p3, "x1*y3"));
  CHECK_FALSE(legal(nogo_ruleset(), p3, "x1*y2"));  // both groups smothered
  // a lone piece on a one-vertex board has no liberties either
  CHECK_FALSE(legal(nogo_ruleset(), Board::path(1), "x1"));
}

TEST_CASE("trivial and domineering forbid only overlap") {
  CHECK(legal(trivial_ruleset(), Board::path(2), "x1*x2"));
  CHECK(legal(trivial_ruleset(), Board::path(2), "x1*y2"));
  CHECK_FALSE(legal(trivial_ruleset(), Board::path(2), "x1*y1"));

  Board square = Board::grid(2, 2);
  CHECK(legal(domineering_ruleset(), square, "x1*x2"));   // both columns
  CHECK(legal(domineering_ruleset(), square, "y1*y2"));   // both rows
  CHECK_FALSE(legal(domineering_ruleset(), square, "x1*y1"));  // cross at cell 1
}

TEST_CASE("legality is monotone decreasing under supersets") {
  std::mt19937 rng(1234);
  std::vector<std::shared_ptr<const Ruleset>> games = {
      trivial_ruleset(), snort_ruleset(), col_ruleset(), nogo_ruleset()};
  std::vector<Board> boards = {Board::path(4), Board::cycle(4), Board::grid(2, 2)};
  for (const auto& rules : games) {
    for (const Board& board : boards) {
      GameInstance instance(rules, board);
      const auto n = instance.universe().size();
      for (int trial = 0; trial < 200; ++trial) {
        std::uint64_t mask = rng() & ((std::uint64_t{1} << n) - 1);
        if (!instance.is_legal_mask(mask)) continue;
        std::uint64_t sub = mask & rng();
        CHECK(instance.is_legal_mask(sub));
      }
    }
  }
}

TEST_CASE("legality is symmetric under swapping the players") {
  std::mt19937 rng(42);
  std::vector<std::shared_ptr<const Ruleset>> games = {
      trivial_ruleset(), snort_ruleset(), col_ruleset(), nogo_ruleset()};
  Board board = Board::cycle(5);
  for (const auto& rules : games) {
    GameInstance instance(rules, board);
    for (int trial = 0; trial < 300; ++trial) {
      std::uint64_t mask = rng() & ((std::uint64_t{1} << 10) - 1);
      Monomial pos = instance.universe().monomial_of(mask);
      std::vector<Variable> swapped;
      for (const Variable& v : pos.variables())
        swapped.push_back(Variable{opponent(v.player), v.index});
      CHECK(instance.is_legal(pos) ==
            instance.is_legal(Monomial(std::move(swapped))));
    }
  }
}

TEST_CASE("strong placement holds for the shipped games") {
  CHECK(check_strong_placement(*col_ruleset(), Board::path(3)).hereditary);
  CHECK(check_strong_placement(*nogo_ruleset(), Board::path(3)).hereditary);
  CHECK(check_strong_placement(*snort_ruleset(), Board::cycle(4)).hereditary);
  CHECK(check_strong_placement(*domineering_ruleset(), Board::grid(2, 3)).hereditary);
}

TEST_CASE("strong placement fails with a valid counterexample") {
  auto contrived = std::make_shared<const NotOnePieceRuleset>();
  StrongPlacementReport report =
      check_strong_placement(*contrived, Board::path(2));
  REQUIRE_FALSE(report.hereditary);
  REQUIRE(report.legal_position.has_value());
  REQUIRE(report.illegal_subposition.has_value());
  CHECK(report.illegal_subposition->divides(*report.legal_position));
  GameInstance instance(contrived, Board::path(2));
  CHECK(instance.is_legal(*report.legal_position));
  CHECK_FALSE(instance.is_legal(*report.illegal_subposition));
}

TEST_CASE("strong placement check refuses oversized universes") {
  EnumerationLimits tight;
  tight.max_exhaustive_variables = 4;
  CHECK_THROWS_AS(check_strong_placement(*col_ruleset(), Board::path(3), tight),
                  Error);
}

TEST_CASE("custom rulesets") {
  auto rules = parse_custom_ruleset(
      "vars: x1..x3 y1..y3\n"
      "x1*x2\n"
      "x2*x3\n"
      "y1*y2\n"
      "y2*y3\n"
      "x1*y1\n"
      "x2*y2\n"
      "x3*y3\n",
      "custom:col-p3");
  Board p3 = Board::path(3);
  CHECK(legal(rules, p3, "x1*y2*x3"));
  CHECK_FALSE(legal(rules, p3, "x1*x2"));
  CHECK_FALSE(legal(rules, p3, "x1*y1"));
  CHECK(check_strong_placement(*rules, p3).hereditary);

  // board must have room for every declared variable
  CHECK_THROWS_AS(GameInstance(rules, Board::path(2)), Error);

  // bad inputs
  CHECK_THROWS_AS(parse_custom_ruleset("x1*x2\n", "broken"), Error);
  CHECK_THROWS_AS(parse_custom_ruleset("vars: x1..x2\n1\n", "broken"), Error);
  CHECK_THROWS_AS(parse_custom_ruleset("vars: x2..x1\n", "broken"), Error);
  CHECK_THROWS_AS(parse_custom_ruleset("vars: x1..y3\n", "broken"), Error);
  CHECK_THROWS_AS(parse_custom_ruleset("vars: x1 x2\nx3\n", "broken"), Error);
}

TEST_CASE("position rejects conflicting pieces") {
  BasicPosition a{Player::Left, 1, {1}};
  BasicPosition a_conflicting{Player::Left, 1, {2}};
  CHECK_THROWS_AS(Position({a, a_conflicting}), Error);
  // exact duplicates collapse (set semantics)
  Position p({a, a});
  CHECK(p.size() == 1);
}

TEST_CASE("ruleset registry") {
  CHECK(ruleset_by_name("col")->name() == "col");
  CHECK(ruleset_by_name("domineering")->name() == "domineering");
  CHECK_THROWS_AS(ruleset_by_name("chess"), Error);
  CHECK(col_ruleset()->fingerprint() != snort_ruleset()->fingerprint());
}

}  // TEST_SUITE

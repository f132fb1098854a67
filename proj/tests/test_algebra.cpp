#include <doctest.h>

#include <algorithm>
#include <random>

#include "placement/errors.hpp"
#include "placement/ideal.hpp"
#include "placement/monomial.hpp"

using namespace placement;

namespace {

Monomial m(const char* text) { return Monomial::parse(text); }

}  // namespace

TEST_SUITE("algebra") {

TEST_CASE("variable parsing and rendering") {
  CHECK(Variable::parse("x1") == Variable{Player::Left, 1});
  CHECK(Variable::parse("y12") == Variable{Player::Right, 12});
  CHECK(Variable{Player::Right, 3}.str() == "y3");
  CHECK_FALSE(Variable::try_parse("z1").has_value());
  CHECK_FALSE(Variable::try_parse("x0").has_value());
  CHECK_FALSE(Variable::try_parse("x").has_value());
  CHECK_FALSE(Variable::try_parse("x1a").has_value());
}

TEST_CASE("canonical monomial rendering") {
  // index ascending, Left before Right at equal index
  CHECK(m("x3*y2*x1").str() == "x1*y2*x3");
  CHECK(m("y1*x1").str() == "x1*y1");
  CHECK(m("1").str() == "1");
  CHECK(m("x2").degree() == 1);
  CHECK(m("1").is_one());
  CHECK_THROWS_AS(Monomial::parse(""), Error);
  CHECK_THROWS_AS(Monomial::parse("x1**x2"), Error);
  CHECK_THROWS_AS(Monomial::parse("x1*z2"), Error);
}

TEST_CASE("divisibility is subset containment") {
  CHECK(m("x1").divides(m("x1*y2*x3")));
  CHECK_FALSE(m("x1*y3").divides(m("x1*y2*x3")));
  CHECK(m("1").divides(m("x1*y2*x3")));
  CHECK(m("1").divides(m("1")));
  CHECK(m("x1*y2").divides(m("x1*y2")));
}

TEST_CASE("minimal generators") {
  auto basis = minimal_generators({m("x1*x2"), m("x1*x2*x3"), m("y1")});
  CHECK(basis == std::vector<Monomial>{m("y1"), m("x1*x2")});

  CHECK(minimal_generators({}).empty());

  // an antichain is a fixed point
  std::vector<Monomial> antichain = {m("x1*y3"), m("y1*x3"), m("x1*y2*x3"),
                                     m("y1*x2*y3")};
  CHECK(minimal_generators(antichain) == antichain);

  // 1 swallows everything
  CHECK(minimal_generators({m("x1"), m("1"), m("y2")}) ==
        std::vector<Monomial>{m("1")});
}

TEST_CASE("minimal generators are order independent and idempotent") {
  std::mt19937 rng(7);
  std::vector<Monomial> pool = {m("x1"),       m("x1*x2"), m("x2*y2"),
                                m("x1*x2*y2"), m("y1*y2"), m("y1"),
                                m("x3*y3"),    m("x1*y3")};
  auto reference = minimal_generators(pool);
  for (int trial = 0; trial < 20; ++trial) {
    std::shuffle(pool.begin(), pool.end(), rng);
    CHECK(minimal_generators(pool) == reference);
  }
  CHECK(minimal_generators(reference) == reference);
}

TEST_CASE("ideal membership") {
  Universe u = Universe::two_sided(3);
  MonomialIdeal ideal(u, {m("x1*x2"), m("x2*x3"), m("y1*y2"), m("y2*y3")});
  CHECK(ideal.contains(m("x1*x2*x3")));
  CHECK_FALSE(ideal.contains(m("x1*y3")));
  CHECK_FALSE(ideal.contains(m("1")));
  CHECK_THROWS_AS(ideal.contains(m("x4")), Error);  // outside the universe

  // membership is monotone under divisibility
  CHECK(ideal.contains(m("x1*x2*y3")));
}

TEST_CASE("zero and unit ideals") {
  Universe u = Universe::two_sided(2);
  MonomialIdeal zero = MonomialIdeal::zero(u);
  CHECK(zero.is_zero());
  CHECK_FALSE(zero.contains(m("x1")));

  MonomialIdeal unit = MonomialIdeal::unit(u);
  CHECK(unit.is_unit());
  CHECK(unit.contains(m("1")));
  CHECK(unit.contains(m("x1*y2")));

  // a generator list containing 1 collapses to the unit ideal
  MonomialIdeal collapsed(u, {m("x1"), m("1")});
  CHECK(collapsed.is_unit());
}

TEST_CASE("ideal equality") {
  Universe u = Universe::two_sided(3);
  MonomialIdeal a(u, {m("x1*x2")});
  MonomialIdeal b(u, {m("x1*x2"), m("x1*x2*x3")});
  MonomialIdeal c(u, {m("x1")});
  CHECK(ideals_equal(a, b));  // same minimal basis
  CHECK_FALSE(ideals_equal(a, c));
  MonomialIdeal other(Universe::two_sided(2), {m("x1*x2")});
  CHECK_THROWS_AS(ideals_equal(a, other), Error);
}

TEST_CASE("universe masks") {
  Universe u = Universe::two_sided(3);
  CHECK(u.size() == 6);
  // canonical order: x1 y1 x2 y2 x3 y3
  CHECK(u.at(0) == Variable{Player::Left, 1});
  CHECK(u.at(1) == Variable{Player::Right, 1});
  CHECK(u.at(4) == Variable{Player::Left, 3});

  Monomial probe = m("x1*y2*x3");
  CHECK(u.monomial_of(u.mask_of(probe)) == probe);
  CHECK(u.mask_of(m("1")) == 0);
  CHECK_THROWS_AS(u.mask_of(m("y4")), Error);

  CHECK_THROWS_AS(Universe({Variable{Player::Left, 1}, Variable{Player::Left, 1}}),
                  Error);
}

}  // TEST_SUITE

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace placement {

enum class Player : std::uint8_t { Left, Right };

Player opponent(Player p);
char player_prefix(Player p);  // 'x' for Left, 'y' for Right

// One square-free variable: x<index> marks a Left piece, y<index> a Right
// piece, where <index> identifies the basic position it stands for.
struct Variable {
  Player player = Player::Left;
  int index = 1;

  std::string str() const;
  static Variable parse(std::string_view text);
  static std::optional<Variable> try_parse(std::string_view text);

  friend bool operator==(const Variable&, const Variable&) = default;
};

// Canonical variable order: index ascending, Left before Right at equal
// index. This is the order used for rendering, universes and bitmasks.
inline std::strong_ordering operator<=>(const Variable& a, const Variable& b) {
  if (auto c = a.index <=> b.index; c != nullptr) return c;
  return static_cast<int>(a.player) <=> static_cast<int>(b.player);
}

// A square-free monomial, i.e. a set of variables. The empty monomial is
// the unit and renders as "1".
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<Variable> vars);

  static Monomial one() { return Monomial(); }
  static Monomial parse(std::string_view text);

  const std::vector<Variable>& variables() const { return vars_; }
  std::size_t degree() const { return vars_.size(); }
  bool is_one() const { return vars_.empty(); }
  bool contains(Variable v) const;
  bool divides(const Monomial& other) const;  // subset containment
  Monomial with(Variable v) const;
  Monomial without(Variable v) const;
  Monomial times(const Monomial& other) const;  // square-free product

  std::string str() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

private:
  std::vector<Variable> vars_;  // strictly increasing in canonical order
};

// Listing order used throughout: cardinality first, then the rendered text.
bool canonical_less(const Monomial& a, const Monomial& b);

// An ordered set of distinct variables; the ambient vertex/variable set for
// ideals, complexes and game positions. Capped at 64 so subsets fit in a
// machine word.
class Universe {
public:
  static constexpr std::size_t kMaxVariables = 64;

  Universe() = default;
  explicit Universe(std::vector<Variable> vars);

  static Universe single_sided(int n);  // x1..xn
  static Universe two_sided(int n);     // x1..xn and y1..yn

  std::size_t size() const { return vars_.size(); }
  bool empty() const { return vars_.empty(); }
  const std::vector<Variable>& variables() const { return vars_; }
  Variable at(std::size_t i) const { return vars_[i]; }
  std::optional<std::size_t> find(Variable v) const;
  bool contains(Variable v) const { return find(v).has_value(); }

  std::uint64_t bit_of(Variable v) const;
  std::uint64_t mask_of(const Monomial& m) const;
  Monomial monomial_of(std::uint64_t mask) const;

  friend bool operator==(const Universe&, const Universe&) = default;

private:
  std::vector<Variable> vars_;  // canonical order, no duplicates
};

}  // namespace placement

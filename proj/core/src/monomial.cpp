#include "placement/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <bit>

#include "placement/errors.hpp"

namespace placement {

Player opponent(Player p) {
  return p == Player::Left ? Player::Right : Player::Left;
}

char player_prefix(Player p) { return p == Player::Left ? 'x' : 'y'; }

std::string Variable::str() const {
  return std::string(1, player_prefix(player)) + std::to_string(index);
}

std::optional<Variable> Variable::try_parse(std::string_view text) {
  if (text.size() < 2) return std::nullopt;
  Player player;
  if (text[0] == 'x') {
    player = Player::Left;
  } else if (text[0] == 'y') {
    player = Player::Right;
  } else {
    return std::nullopt;
  }
  int index = 0;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return std::nullopt;
    if (index > 100000000) return std::nullopt;
    index = index * 10 + (text[i] - '0');
  }
  if (index < 1) return std::nullopt;
  return Variable{player, index};
}

Variable Variable::parse(std::string_view text) {
  auto v = try_parse(text);
  if (!v) raise(Errc::parse_error, "invalid variable '" + std::string(text) + "'");
  return *v;
}

Monomial::Monomial(std::vector<Variable> vars) : vars_(std::move(vars)) {
  std::sort(vars_.begin(), vars_.end());
  vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
}

namespace {

std::string_view trimmed(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

}  // namespace

Monomial Monomial::parse(std::string_view text) {
  text = trimmed(text);
  if (text.empty()) raise(Errc::parse_error, "empty monomial");
  if (text == "1") return Monomial::one();
  std::vector<Variable> vars;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find('*', start);
    if (stop == std::string_view::npos) stop = text.size();
    auto token = trimmed(text.substr(start, stop - start));
    if (token.empty())
      raise(Errc::parse_error, "empty factor in monomial '" + std::string(text) + "'");
    vars.push_back(Variable::parse(token));
    start = stop + 1;
    if (stop == text.size()) break;
  }
  return Monomial(std::move(vars));
}

bool Monomial::contains(Variable v) const {
  return std::binary_search(vars_.begin(), vars_.end(), v);
}

bool Monomial::divides(const Monomial& other) const {
  return std::includes(other.vars_.begin(), other.vars_.end(), vars_.begin(),
                       vars_.end());
}

Monomial Monomial::with(Variable v) const {
  Monomial out = *this;
  auto it = std::lower_bound(out.vars_.begin(), out.vars_.end(), v);
  if (it == out.vars_.end() || *it != v) out.vars_.insert(it, v);
  return out;
}

Monomial Monomial::without(Variable v) const {
  Monomial out = *this;
  auto it = std::lower_bound(out.vars_.begin(), out.vars_.end(), v);
  if (it != out.vars_.end() && *it == v) out.vars_.erase(it);
  return out;
}

Monomial Monomial::times(const Monomial& other) const {
  std::vector<Variable> merged;
  merged.reserve(vars_.size() + other.vars_.size());
  std::set_union(vars_.begin(), vars_.end(), other.vars_.begin(),
                 other.vars_.end(), std::back_inserter(merged));
  Monomial out;
  out.vars_ = std::move(merged);
  return out;
}

std::string Monomial::str() const {
  if (vars_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (i != 0) out += '*';
    out += vars_[i].str();
  }
  return out;
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.str() < b.str();
}

Universe::Universe(std::vector<Variable> vars) : vars_(std::move(vars)) {
  std::sort(vars_.begin(), vars_.end());
  auto dup = std::adjacent_find(vars_.begin(), vars_.end());
  if (dup != vars_.end())
    raise(Errc::domain_error, "duplicate variable " + dup->str() + " in universe");
  if (vars_.size() > kMaxVariables)
    raise(Errc::size_limit, "universe of " + std::to_string(vars_.size()) +
                                " variables exceeds the cap of " +
                                std::to_string(kMaxVariables));
}

Universe Universe::single_sided(int n) {
  std::vector<Variable> vars;
  vars.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) vars.push_back(Variable{Player::Left, i});
  return Universe(std::move(vars));
}

Universe Universe::two_sided(int n) {
  std::vector<Variable> vars;
  vars.reserve(2 * static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    vars.push_back(Variable{Player::Left, i});
    vars.push_back(Variable{Player::Right, i});
  }
  return Universe(std::move(vars));
}

std::optional<std::size_t> Universe::find(Variable v) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
  if (it == vars_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - vars_.begin());
}

std::uint64_t Universe::bit_of(Variable v) const {
  auto i = find(v);
  if (!i)
    raise(Errc::domain_error, "variable " + v.str() + " is not in the universe");
  return std::uint64_t{1} << *i;
}

std::uint64_t Universe::mask_of(const Monomial& m) const {
  std::uint64_t mask = 0;
  for (const Variable& v : m.variables()) mask |= bit_of(v);
  return mask;
}

Monomial Universe::monomial_of(std::uint64_t mask) const {
  std::vector<Variable> vars;
  vars.reserve(static_cast<std::size_t>(std::popcount(mask)));
  while (mask != 0) {
    int i = std::countr_zero(mask);
    if (static_cast<std::size_t>(i) >= vars_.size())
      raise(Errc::domain_error, "mask bit outside the universe");
    vars.push_back(vars_[static_cast<std::size_t>(i)]);
    mask &= mask - 1;
  }
  return Monomial(std::move(vars));
}

}  // namespace placement

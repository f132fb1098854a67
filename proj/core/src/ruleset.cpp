#include "placement/ruleset.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <fstream>
#include <sstream>

#include "placement/errors.hpp"
#include "placement/ideal.hpp"

namespace placement {

namespace {

constexpr std::uint64_t kFnvOffset = 14695981039346656037ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;

std::uint64_t fnv_text(std::uint64_t h, std::string_view text) {
  for (unsigned char ch : text) {
    h ^= ch;
    h *= kFnvPrime;
  }
  return h;
}

// Per-vertex ownership; kFree marks empty vertices.
constexpr std::uint8_t kFree = 0;
constexpr std::uint8_t kLeft = 1;
constexpr std::uint8_t kRight = 2;

struct Occupancy {
  std::vector<std::uint8_t> owner;  // 1-indexed
  bool overlap = false;
};

Occupancy occupy(const Board& board, const Position& pos) {
  Occupancy occ;
  occ.owner.assign(static_cast<std::size_t>(board.vertex_count()) + 1, kFree);
  for (const BasicPosition& piece : pos.pieces()) {
    for (int cell : piece.cells) {
      if (cell < 1 || cell > board.vertex_count())
        raise(Errc::domain_error,
              "piece " + piece.variable().str() + " occupies vertex " +
                  std::to_string(cell) + " outside this board");
      auto& slot = occ.owner[static_cast<std::size_t>(cell)];
      if (slot != kFree) {
        occ.overlap = true;
        return occ;
      }
      slot = piece.player == Player::Left ? kLeft : kRight;
    }
  }
  return occ;
}

std::vector<BasicPosition> single_vertex_positions(const Board& board) {
  std::vector<BasicPosition> out;
  out.reserve(2 * static_cast<std::size_t>(board.vertex_count()));
  for (int v = 1; v <= board.vertex_count(); ++v) {
    out.push_back(BasicPosition{Player::Left, v, {v}});
    out.push_back(BasicPosition{Player::Right, v, {v}});
  }
  return out;
}

class TrivialRuleset final : public Ruleset {
public:
  std::string name() const override { return "trivial"; }
  std::vector<BasicPosition> basic_positions(const Board& board) const override {
    return single_vertex_positions(board);
  }
  bool is_legal(const Board& board, const Position& pos) const override {
    return !occupy(board, pos).overlap;
  }
};

class SnortRuleset final : public Ruleset {
public:
  std::string name() const override { return "snort"; }
  std::vector<BasicPosition> basic_positions(const Board& board) const override {
    return single_vertex_positions(board);
  }
  bool is_legal(const Board& board, const Position& pos) const override {
    Occupancy occ = occupy(board, pos);
    if (occ.overlap) return false;
    for (const auto& [u, v] : board.edges()) {
      auto a = occ.owner[static_cast<std::size_t>(u)];
      auto b = occ.owner[static_cast<std::size_t>(v)];
      if (a != kFree && b != kFree && a != b) return false;
    }
    return true;
  }
};

class ColRuleset final : public Ruleset {
public:
  std::string name() const override { return "col"; }
  std::vector<BasicPosition> basic_positions(const Board& board) const override {
    return single_vertex_positions(board);
  }
  bool is_legal(const Board& board, const Position& pos) const override {
    Occupancy occ = occupy(board, pos);
    if (occ.overlap) return false;
    for (const auto& [u, v] : board.edges()) {
      auto a = occ.owner[static_cast<std::size_t>(u)];
      auto b = occ.owner[static_cast<std::size_t>(v)];
      if (a != kFree && a == b) return false;
    }
    return true;
  }
};

class NoGoRuleset final : public Ruleset {
public:
  std::string name() const override { return "nogo"; }
  std::vector<BasicPosition> basic_positions(const Board& board) const override {
    return single_vertex_positions(board);
  }
  bool is_legal(const Board& board, const Position& pos) const override {
    Occupancy occ = occupy(board, pos);
    if (occ.overlap) return false;
    // Every maximal connected group of one player's pieces needs a free
    // neighboring vertex.
    const int n = board.vertex_count();
    std::vector<bool> visited(static_cast<std::size_t>(n) + 1, false);
    std::vector<int> stack;
    for (int start = 1; start <= n; ++start) {
      auto color = occ.owner[static_cast<std::size_t>(start)];
      if (color == kFree || visited[static_cast<std::size_t>(start)]) continue;
      bool breathing = false;
      stack.assign(1, start);
      visited[static_cast<std::size_t>(start)] = true;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : board.neighbors(v)) {
          auto wc = occ.owner[static_cast<std::size_t>(w)];
          if (wc == kFree) {
            breathing = true;
          } else if (wc == color && !visited[static_cast<std::size_t>(w)]) {
            visited[static_cast<std::size_t>(w)] = true;
            stack.push_back(w);
          }
        }
      }
      if (!breathing) return false;
    }
    return true;
  }
};

class DomineeringRuleset final : public Ruleset {
public:
  std::string name() const override { return "domineering"; }

  std::vector<BasicPosition> basic_positions(const Board& board) const override {
    auto shape = board.grid_shape();
    if (!shape)
      raise(Errc::unsupported_board,
            "domineering needs a grid board (vertical/horizontal pieces are "
            "undefined otherwise)");
    auto id = [&shape](int r, int c) { return (r - 1) * shape->cols + c; };
    std::vector<BasicPosition> out;
    int index = 0;
    for (int r = 1; r < shape->rows; ++r)  // Left: vertical dominoes
      for (int c = 1; c <= shape->cols; ++c)
        out.push_back(BasicPosition{Player::Left, ++index, {id(r, c), id(r + 1, c)}});
    index = 0;
    for (int r = 1; r <= shape->rows; ++r)  // Right: horizontal dominoes
      for (int c = 1; c < shape->cols; ++c)
        out.push_back(BasicPosition{Player::Right, ++index, {id(r, c), id(r, c + 1)}});
    std::sort(out.begin(), out.end(),
              [](const BasicPosition& a, const BasicPosition& b) {
                return a.variable() < b.variable();
              });
    return out;
  }

  bool is_legal(const Board& board, const Position& pos) const override {
    return !occupy(board, pos).overlap;
  }
};

class CustomRuleset final : public Ruleset {
public:
  CustomRuleset(std::string name, Universe universe,
                std::vector<Monomial> minimal_illegal)
      : name_(std::move(name)),
        universe_(std::move(universe)),
        minimal_illegal_(minimal_generators(std::move(minimal_illegal))) {}

  std::string name() const override { return name_; }

  std::vector<BasicPosition> basic_positions(const Board& board) const override {
    std::vector<BasicPosition> out;
    out.reserve(universe_.size());
    for (const Variable& v : universe_.variables()) {
      if (v.index > board.vertex_count())
        raise(Errc::unsupported_board,
              "custom ruleset variable " + v.str() + " exceeds the board's " +
                  std::to_string(board.vertex_count()) + " vertices");
      out.push_back(BasicPosition{v.player, v.index, {v.index}});
    }
    return out;
  }

  bool is_legal(const Board&, const Position& pos) const override {
    Monomial m = pos.monomial();
    for (const Monomial& g : minimal_illegal_)
      if (g.divides(m)) return false;
    return true;
  }

  std::uint64_t fingerprint() const override {
    std::uint64_t h = fnv_text(kFnvOffset, name_);
    for (const Variable& v : universe_.variables()) h = fnv_text(h, v.str());
    for (const Monomial& g : minimal_illegal_) h = fnv_text(h, g.str());
    return h;
  }

private:
  std::string name_;
  Universe universe_;
  std::vector<Monomial> minimal_illegal_;
};

}  // namespace

Position::Position(std::vector<BasicPosition> pieces) : pieces_(std::move(pieces)) {
  std::sort(pieces_.begin(), pieces_.end(),
            [](const BasicPosition& a, const BasicPosition& b) {
              return a.variable() < b.variable();
            });
  for (std::size_t i = 1; i < pieces_.size(); ++i) {
    if (pieces_[i - 1].variable() != pieces_[i].variable()) continue;
    if (pieces_[i - 1] != pieces_[i])
      raise(Errc::domain_error, "conflicting pieces share variable " +
                                    pieces_[i].variable().str());
  }
  pieces_.erase(std::unique(pieces_.begin(), pieces_.end()), pieces_.end());
}

Monomial Position::monomial() const {
  std::vector<Variable> vars;
  vars.reserve(pieces_.size());
  for (const BasicPosition& p : pieces_) vars.push_back(p.variable());
  return Monomial(std::move(vars));
}

std::uint64_t Ruleset::fingerprint() const {
  return fnv_text(kFnvOffset, name());
}

std::shared_ptr<const Ruleset> trivial_ruleset() {
  static auto instance = std::make_shared<const TrivialRuleset>();
  return instance;
}

std::shared_ptr<const Ruleset> snort_ruleset() {
  static auto instance = std::make_shared<const SnortRuleset>();
  return instance;
}

std::shared_ptr<const Ruleset> col_ruleset() {
  static auto instance = std::make_shared<const ColRuleset>();
  return instance;
}

std::shared_ptr<const Ruleset> nogo_ruleset() {
  static auto instance = std::make_shared<const NoGoRuleset>();
  return instance;
}

std::shared_ptr<const Ruleset> domineering_ruleset() {
  static auto instance = std::make_shared<const DomineeringRuleset>();
  return instance;
}

std::shared_ptr<const Ruleset> ruleset_by_name(const std::string& name) {
  if (name == "trivial") return trivial_ruleset();
  if (name == "snort") return snort_ruleset();
  if (name == "col") return col_ruleset();
  if (name == "nogo") return nogo_ruleset();
  if (name == "domineering") return domineering_ruleset();
  if (name.starts_with("custom:")) return load_custom_ruleset(name.substr(7));
  raise(Errc::domain_error,
        "unknown game '" + name +
            "' (try trivial, snort, col, nogo, domineering, custom:<file>)");
}

namespace {

std::vector<Variable> expand_var_token(std::string_view token) {
  auto dots = token.find("..");
  if (dots == std::string_view::npos) return {Variable::parse(token)};
  Variable lo = Variable::parse(token.substr(0, dots));
  Variable hi = Variable::parse(token.substr(dots + 2));
  if (lo.player != hi.player)
    raise(Errc::parse_error,
          "variable range '" + std::string(token) + "' mixes players");
  if (lo.index > hi.index)
    raise(Errc::parse_error, "empty variable range '" + std::string(token) + "'");
  std::vector<Variable> out;
  out.reserve(static_cast<std::size_t>(hi.index - lo.index) + 1);
  for (int i = lo.index; i <= hi.index; ++i)
    out.push_back(Variable{lo.player, i});
  return out;
}

}  // namespace

std::shared_ptr<const Ruleset> parse_custom_ruleset(std::string_view text,
                                                    std::string name) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool have_header = false;
  std::vector<Variable> vars;
  std::vector<Monomial> gens;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string token;
    if (!(fields >> token)) continue;
    if (!have_header) {
      if (token != "vars:")
        raise(Errc::parse_error, "ruleset line " + std::to_string(line_no) +
                                     ": expected a 'vars:' header first");
      while (fields >> token) {
        auto expanded = expand_var_token(token);
        vars.insert(vars.end(), expanded.begin(), expanded.end());
      }
      if (vars.empty())
        raise(Errc::parse_error, "ruleset declares no variables");
      have_header = true;
      continue;
    }
    std::string extra;
    if (fields >> extra)
      raise(Errc::parse_error, "ruleset line " + std::to_string(line_no) +
                                   ": one monomial per line");
    Monomial m = Monomial::parse(token);
    if (m.is_one())
      raise(Errc::parse_error, "ruleset line " + std::to_string(line_no) +
                                   ": the empty position cannot be illegal");
    gens.push_back(std::move(m));
  }
  if (!have_header) raise(Errc::parse_error, "ruleset text has no 'vars:' header");
  Universe universe(std::move(vars));
  for (const Monomial& g : gens) universe.mask_of(g);  // domain check
  return std::make_shared<const CustomRuleset>(std::move(name), std::move(universe),
                                               std::move(gens));
}

std::shared_ptr<const Ruleset> load_custom_ruleset(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(Errc::parse_error, "cannot read ruleset file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_custom_ruleset(buffer.str(), "custom:" + path);
}

GameInstance::GameInstance(std::shared_ptr<const Ruleset> rules, Board board)
    : rules_(std::move(rules)), board_(std::move(board)) {
  basics_ = rules_->basic_positions(board_);
  std::sort(basics_.begin(), basics_.end(),
            [](const BasicPosition& a, const BasicPosition& b) {
              return a.variable() < b.variable();
            });
  std::vector<Variable> vars;
  vars.reserve(basics_.size());
  for (const BasicPosition& b : basics_) {
    if (b.cells.empty())
      raise(Errc::domain_error,
            "basic position " + b.variable().str() + " occupies no cells");
    for (int cell : b.cells)
      if (cell < 1 || cell > board_.vertex_count())
        raise(Errc::domain_error,
              "basic position " + b.variable().str() + " occupies vertex " +
                  std::to_string(cell) + " outside the board");
    vars.push_back(b.variable());
  }
  universe_ = Universe(std::move(vars));  // rejects duplicate variables
}

const BasicPosition& GameInstance::basic_for(Variable v) const {
  auto i = universe_.find(v);
  if (!i)
    raise(Errc::domain_error,
          "variable " + v.str() + " does not name a piece of this game");
  return basics_[*i];
}

Position GameInstance::position_of(const Monomial& m) const {
  std::vector<BasicPosition> pieces;
  pieces.reserve(m.degree());
  for (const Variable& v : m.variables()) pieces.push_back(basic_for(v));
  return Position(std::move(pieces));
}

Position GameInstance::position_of_mask(std::uint64_t mask) const {
  std::vector<BasicPosition> pieces;
  pieces.reserve(static_cast<std::size_t>(std::popcount(mask)));
  while (mask != 0) {
    pieces.push_back(basics_[static_cast<std::size_t>(std::countr_zero(mask))]);
    mask &= mask - 1;
  }
  return Position(std::move(pieces));
}

bool GameInstance::is_legal(const Monomial& m) const {
  return rules_->is_legal(board_, position_of(m));
}

bool GameInstance::is_legal_mask(std::uint64_t mask) const {
  return rules_->is_legal(board_, position_of_mask(mask));
}

StrongPlacementReport check_strong_placement(const Ruleset& rules,
                                             const Board& board,
                                             const EnumerationLimits& limits) {
  // The ruleset may be arbitrary, so nothing can be pruned: every subset of
  // the variable universe is tested.
  GameInstance instance(
      std::shared_ptr<const Ruleset>(&rules, [](const Ruleset*) {}), board);
  const int n = static_cast<int>(instance.universe().size());
  if (n > limits.max_exhaustive_variables)
    raise(Errc::size_limit,
          "strong-placement check refused: " + std::to_string(n) +
              " variables exceed the exhaustive cap of " +
              std::to_string(limits.max_exhaustive_variables));

  std::vector<bool> legal(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    legal[mask] = instance.is_legal_mask(mask);
    if (!legal[mask]) continue;
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
      std::uint64_t sub = mask ^ (rest & (~rest + 1));
      if (!legal[sub]) {
        StrongPlacementReport report;
        report.hereditary = false;
        report.legal_position = instance.universe().monomial_of(mask);
        report.illegal_subposition = instance.universe().monomial_of(sub);
        return report;
      }
    }
  }
  return StrongPlacementReport{};
}

}  // namespace placement

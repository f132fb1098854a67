#include "placement/transform.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <unordered_set>

#include "placement/errors.hpp"

namespace placement {

std::int64_t GamePolynomial::at_one() const {
  std::int64_t total = 0;
  for (std::int64_t c : coefficients) total += c;
  return total;
}

std::string GamePolynomial::str() const {
  std::string out;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    std::int64_t c = coefficients[i];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c);
    out += "x";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

namespace {

struct Enumeration {
  std::vector<std::vector<std::uint64_t>> levels;  // legal masks by piece count
  std::unordered_set<std::uint64_t> members;
};

// Level-by-level enumeration of the legal positions. Extending each legal
// position only by variables past its highest one visits every member of a
// downward-closed family exactly once; the ruleset contract (strong
// placement) is what makes the family downward closed, and each found
// position is spot-checked against that contract so a non-hereditary
// ruleset fails loudly instead of yielding a silently wrong family.
Enumeration enumerate_legal(const GameInstance& instance) {
  const int n = static_cast<int>(instance.universe().size());
  Enumeration e;
  if (!instance.is_legal_mask(0))
    raise(Errc::ruleset_violation, "ruleset " + instance.ruleset().name() +
                                       " rejects the empty position");
  e.levels.push_back({0});
  e.members.insert(0);
  while (!e.levels.back().empty()) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t base : e.levels.back()) {
      for (int v = std::bit_width(base); v < n; ++v) {
        std::uint64_t candidate = base | (std::uint64_t{1} << v);
        if (!instance.is_legal_mask(candidate)) continue;
        for (std::uint64_t rest = base; rest != 0; rest &= rest - 1) {
          std::uint64_t sub = candidate ^ (rest & (~rest + 1));
          if (e.members.contains(sub)) continue;
          const Universe& u = instance.universe();
          if (!instance.is_legal_mask(sub))
            raise(Errc::ruleset_violation,
                  "ruleset " + instance.ruleset().name() +
                      " is not a strong placement game: position " +
                      u.monomial_of(candidate).str() +
                      " is legal but its subposition " +
                      u.monomial_of(sub).str() + " is not");
          raise(Errc::ruleset_violation,
                "ruleset " + instance.ruleset().name() +
                    " is not a strong placement game: legal position " +
                    u.monomial_of(sub).str() +
                    " is unreachable through legal positions");
        }
        next.push_back(candidate);
        e.members.insert(candidate);
      }
    }
    e.levels.push_back(std::move(next));
  }
  e.levels.pop_back();
  return e;
}

std::vector<Monomial> to_sorted_monomials(const Universe& universe,
                                          const std::vector<std::uint64_t>& masks) {
  std::vector<Monomial> out;
  out.reserve(masks.size());
  for (std::uint64_t m : masks) out.push_back(universe.monomial_of(m));
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

GeneratorMismatch diff_generators(std::string clause, const MonomialIdeal& lhs,
                                  const MonomialIdeal& rhs) {
  GeneratorMismatch out;
  out.clause = std::move(clause);
  for (const Monomial& g : lhs.generators())
    if (std::find(rhs.generators().begin(), rhs.generators().end(), g) ==
        rhs.generators().end())
      out.only_lhs.push_back(g);
  for (const Monomial& g : rhs.generators())
    if (std::find(lhs.generators().begin(), lhs.generators().end(), g) ==
        lhs.generators().end())
      out.only_rhs.push_back(g);
  return out;
}

std::shared_ptr<const GameAnalysis> build_analysis(
    std::shared_ptr<const Ruleset> rules, const Board& board,
    const EnumerationLimits& limits) {
  GameInstance instance(rules, board);
  const Universe& universe = instance.universe();
  const int n = static_cast<int>(universe.size());

  Enumeration legal = enumerate_legal(instance);

  // Maximal legal positions: no single-variable extension stays legal.
  std::vector<std::uint64_t> maximal;
  // Minimal illegal positions: illegal, with every one-smaller subposition
  // legal. Every candidate is one variable above some legal position.
  std::unordered_set<std::uint64_t> minimal_illegal;
  for (const auto& level : legal.levels) {
    for (std::uint64_t pos : level) {
      bool is_maximal = true;
      for (int v = 0; v < n; ++v) {
        std::uint64_t up = pos | (std::uint64_t{1} << v);
        if (up == pos) continue;
        if (legal.members.contains(up)) {
          is_maximal = false;
          continue;
        }
        bool minimal = true;
        for (std::uint64_t rest = pos; rest != 0; rest &= rest - 1) {
          std::uint64_t sub = up ^ (rest & (~rest + 1));
          if (!legal.members.contains(sub)) {
            minimal = false;
            break;
          }
        }
        if (minimal) minimal_illegal.insert(up);
      }
      if (is_maximal) maximal.push_back(pos);
    }
  }

  auto analysis = std::make_shared<GameAnalysis>(GameAnalysis{
      rules,
      board,
      universe,
      instance.basics(),
      {},
      SimplicialComplex(),
      SimplicialComplex(),
      {},
      MonomialIdeal::zero(universe),
      MonomialIdeal::zero(universe),
      {},
      {},
  });

  std::vector<std::uint64_t> all_legal(legal.members.begin(), legal.members.end());
  analysis->legal_positions = to_sorted_monomials(universe, all_legal);

  std::vector<Monomial> facets = to_sorted_monomials(universe, maximal);
  analysis->legal_complex = SimplicialComplex(universe, facets);

  std::vector<std::uint64_t> gamma_masks(minimal_illegal.begin(),
                                         minimal_illegal.end());
  std::vector<Monomial> gamma_facets = to_sorted_monomials(universe, gamma_masks);
  analysis->illegal_complex = SimplicialComplex(universe, gamma_facets);

  analysis->legal_complex_minimal_non_faces =
      analysis->legal_complex.minimal_non_faces(limits);

  analysis->legal_ideal = MonomialIdeal(universe, std::move(facets));
  analysis->illegal_ideal = MonomialIdeal(universe, std::move(gamma_facets));

  analysis->polynomial.coefficients.reserve(legal.levels.size());
  for (const auto& level : legal.levels)
    analysis->polynomial.coefficients.push_back(
        static_cast<std::int64_t>(level.size()));

  DualityReport& duality = analysis->duality;
  MonomialIdeal delta_facet_ideal = facet_ideal(analysis->legal_complex);
  MonomialIdeal gamma_facet_ideal = facet_ideal(analysis->illegal_complex);
  MonomialIdeal delta_sr_ideal =
      MonomialIdeal(universe, analysis->legal_complex_minimal_non_faces);
  duality.legal_ideal_matches_facet_ideal =
      ideals_equal(analysis->legal_ideal, delta_facet_ideal);
  duality.illegal_ideal_matches_gamma_facet_ideal =
      ideals_equal(analysis->illegal_ideal, gamma_facet_ideal);
  duality.illegal_ideal_matches_sr_ideal =
      ideals_equal(analysis->illegal_ideal, delta_sr_ideal);
  if (!duality.legal_ideal_matches_facet_ideal)
    duality.mismatches.push_back(diff_generators(
        "legal ideal vs facet ideal of the legal complex",
        analysis->legal_ideal, delta_facet_ideal));
  if (!duality.illegal_ideal_matches_gamma_facet_ideal)
    duality.mismatches.push_back(diff_generators(
        "illegal ideal vs facet ideal of the illegal complex",
        analysis->illegal_ideal, gamma_facet_ideal));
  if (!duality.illegal_ideal_matches_sr_ideal)
    duality.mismatches.push_back(diff_generators(
        "illegal ideal vs Stanley-Reisner ideal of the legal complex",
        analysis->illegal_ideal, delta_sr_ideal));

  return analysis;
}

struct CacheKey {
  std::uint64_t ruleset;
  std::uint64_t board;

  friend auto operator<=>(const CacheKey&, const CacheKey&) = default;
};

std::map<CacheKey, std::shared_ptr<const GameAnalysis>>& cache() {
  static std::map<CacheKey, std::shared_ptr<const GameAnalysis>> instance;
  return instance;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

std::shared_ptr<const GameAnalysis> analyze(std::shared_ptr<const Ruleset> rules,
                                            const Board& board,
                                            const EnumerationLimits& limits) {
  if (board.vertex_count() > limits.max_board_vertices)
    raise(Errc::size_limit,
          "enumeration refused: board has " +
              std::to_string(board.vertex_count()) +
              " vertices, cap is " + std::to_string(limits.max_board_vertices));
  CacheKey key{rules->fingerprint(), board.fingerprint()};
  {
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto it = cache().find(key);
    if (it != cache().end()) return it->second;
  }
  auto analysis = build_analysis(std::move(rules), board, limits);
  std::lock_guard<std::mutex> lock(cache_mutex());
  return cache().emplace(key, std::move(analysis)).first->second;
}

std::vector<Monomial> legal_positions(const std::shared_ptr<const Ruleset>& rules,
                                      const Board& board,
                                      const EnumerationLimits& limits) {
  return analyze(rules, board, limits)->legal_positions;
}

SimplicialComplex legal_complex(const std::shared_ptr<const Ruleset>& rules,
                                const Board& board,
                                const EnumerationLimits& limits) {
  return analyze(rules, board, limits)->legal_complex;
}

SimplicialComplex illegal_complex(const std::shared_ptr<const Ruleset>& rules,
                                  const Board& board,
                                  const EnumerationLimits& limits) {
  auto analysis = analyze(rules, board, limits);
  if (analysis->illegal_complex.facets() !=
      analysis->legal_complex_minimal_non_faces)
    raise(Errc::internal_error,
          "illegal complex routes disagree: direct enumeration vs minimal "
          "non-faces of the legal complex (ruleset " +
              analysis->ruleset->name() + ")");
  return analysis->illegal_complex;
}

MonomialIdeal legal_ideal(const std::shared_ptr<const Ruleset>& rules,
                          const Board& board, const EnumerationLimits& limits) {
  return analyze(rules, board, limits)->legal_ideal;
}

MonomialIdeal illegal_ideal(const std::shared_ptr<const Ruleset>& rules,
                            const Board& board, const EnumerationLimits& limits) {
  return analyze(rules, board, limits)->illegal_ideal;
}

GamePolynomial game_polynomial(const std::shared_ptr<const Ruleset>& rules,
                               const Board& board,
                               const EnumerationLimits& limits) {
  return analyze(rules, board, limits)->polynomial;
}

DualityReport verify_duality(const std::shared_ptr<const Ruleset>& rules,
                             const Board& board, const EnumerationLimits& limits) {
  return analyze(rules, board, limits)->duality;
}

}  // namespace placement

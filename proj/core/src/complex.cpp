#include "placement/complex.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "placement/errors.hpp"

namespace placement {

namespace {

// Drops every set contained in another; ties (duplicates) collapse to one.
std::vector<std::uint64_t> maximal_antichain(std::vector<std::uint64_t> sets) {
  std::sort(sets.begin(), sets.end(), [](std::uint64_t a, std::uint64_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa > pb : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<std::uint64_t> kept;
  for (std::uint64_t s : sets) {
    bool dominated = false;
    for (std::uint64_t k : kept) {
      if ((s & k) == s) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(s);
  }
  return kept;
}

void check_vertex_cap(const Universe& vertices, const EnumerationLimits& limits,
                      const char* what) {
  if (static_cast<int>(vertices.size()) > limits.max_complex_vertices)
    raise(Errc::size_limit,
          std::string(what) + " refused: " + std::to_string(vertices.size()) +
              " vertices exceed the cap of " +
              std::to_string(limits.max_complex_vertices));
}

}  // namespace

SimplicialComplex::SimplicialComplex(Universe vertices,
                                     std::vector<Monomial> facets)
    : vertices_(std::move(vertices)) {
  std::vector<std::uint64_t> raw;
  raw.reserve(facets.size());
  for (const Monomial& f : facets) raw.push_back(vertices_.mask_of(f));
  masks_ = maximal_antichain(std::move(raw));
  facets_.reserve(masks_.size());
  for (std::uint64_t m : masks_) facets_.push_back(vertices_.monomial_of(m));
  std::vector<std::size_t> order(facets_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [this](std::size_t a, std::size_t b) {
    return canonical_less(facets_[a], facets_[b]);
  });
  std::vector<Monomial> sorted_facets;
  std::vector<std::uint64_t> sorted_masks;
  sorted_facets.reserve(order.size());
  sorted_masks.reserve(order.size());
  for (std::size_t i : order) {
    sorted_facets.push_back(std::move(facets_[i]));
    sorted_masks.push_back(masks_[i]);
  }
  facets_ = std::move(sorted_facets);
  masks_ = std::move(sorted_masks);
}

SimplicialComplex SimplicialComplex::void_of(Universe vertices) {
  return SimplicialComplex(std::move(vertices), {});
}

SimplicialComplex SimplicialComplex::empty_of(Universe vertices) {
  return SimplicialComplex(std::move(vertices), {Monomial::one()});
}

SimplicialComplex SimplicialComplex::full_simplex(Universe vertices) {
  Monomial everything(vertices.variables());
  return SimplicialComplex(std::move(vertices), {std::move(everything)});
}

bool SimplicialComplex::is_empty_complex() const {
  return facets_.size() == 1 && facets_.front().is_one();
}

bool SimplicialComplex::is_face(const Monomial& candidate) const {
  std::uint64_t mask = vertices_.mask_of(candidate);
  for (std::uint64_t f : masks_)
    if ((mask & f) == mask) return true;
  return false;
}

FVector SimplicialComplex::f_vector(const EnumerationLimits& limits) const {
  check_vertex_cap(vertices_, limits, "f-vector");
  FVector counts;
  if (is_void()) return counts;
  const int n = static_cast<int>(vertices_.size());
  std::vector<std::uint64_t> level{0};
  counts.push_back(1);
  while (!level.empty()) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t face : level) {
      for (int v = std::bit_width(face); v < n; ++v) {
        std::uint64_t candidate = face | (std::uint64_t{1} << v);
        for (std::uint64_t f : masks_) {
          if ((candidate & f) == candidate) {
            next.push_back(candidate);
            break;
          }
        }
      }
    }
    if (next.empty()) break;
    counts.push_back(static_cast<std::int64_t>(next.size()));
    level = std::move(next);
  }
  return counts;
}

std::vector<Monomial> SimplicialComplex::minimal_non_faces(
    const EnumerationLimits& limits) const {
  check_vertex_cap(vertices_, limits, "minimal non-faces");
  if (is_void()) return {Monomial::one()};

  const int n = static_cast<int>(vertices_.size());
  auto face = [this](std::uint64_t candidate) {
    for (std::uint64_t f : masks_)
      if ((candidate & f) == candidate) return true;
    return false;
  };

  std::vector<std::uint64_t> result;
  std::vector<std::uint64_t> level{0};
  std::unordered_set<std::uint64_t> level_set{0};
  while (!level.empty()) {
    std::vector<std::uint64_t> next;
    std::unordered_set<std::uint64_t> next_set;
    for (std::uint64_t f : level) {
      for (int v = std::bit_width(f); v < n; ++v) {
        std::uint64_t candidate = f | (std::uint64_t{1} << v);
        if (face(candidate)) {
          next.push_back(candidate);
          next_set.insert(candidate);
          continue;
        }
        // Minimal iff every one-smaller subset is a face. The subset
        // obtained by dropping v is f itself; the rest are looked up in
        // the complete previous level.
        bool minimal = true;
        for (std::uint64_t rest = f; rest != 0; rest &= rest - 1) {
          std::uint64_t lower = candidate ^ (rest & (~rest + 1));
          if (!level_set.contains(lower)) {
            minimal = false;
            break;
          }
        }
        if (minimal) result.push_back(candidate);
      }
    }
    level = std::move(next);
    level_set = std::move(next_set);
  }

  std::vector<Monomial> out;
  out.reserve(result.size());
  for (std::uint64_t m : result) out.push_back(vertices_.monomial_of(m));
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

MonomialIdeal facet_ideal(const SimplicialComplex& complex) {
  return MonomialIdeal(complex.vertices(), complex.facets());
}

SimplicialComplex facet_complex(const MonomialIdeal& ideal) {
  return SimplicialComplex(ideal.universe(), ideal.generators());
}

MonomialIdeal sr_ideal(const SimplicialComplex& complex,
                       const EnumerationLimits& limits) {
  return MonomialIdeal(complex.vertices(), complex.minimal_non_faces(limits));
}

SimplicialComplex sr_complex(const MonomialIdeal& ideal,
                             const EnumerationLimits& limits) {
  check_vertex_cap(ideal.universe(), limits, "Stanley-Reisner complex");
  if (ideal.is_zero()) return SimplicialComplex::full_simplex(ideal.universe());
  if (ideal.is_unit()) return SimplicialComplex::void_of(ideal.universe());

  const Universe& universe = ideal.universe();
  const int n = static_cast<int>(universe.size());
  std::vector<std::uint64_t> gens;
  gens.reserve(ideal.generators().size());
  for (const Monomial& g : ideal.generators())
    gens.push_back(universe.mask_of(g));
  auto outside = [&gens](std::uint64_t candidate) {
    for (std::uint64_t g : gens)
      if ((candidate & g) == g) return false;
    return true;
  };

  // Faces form a downward-closed family, so the level-by-level prefix
  // extension enumerates each exactly once.
  std::vector<std::uint64_t> members{0};
  std::unordered_set<std::uint64_t> member_set{0};
  std::vector<std::uint64_t> level{0};
  while (!level.empty()) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t f : level) {
      for (int v = std::bit_width(f); v < n; ++v) {
        std::uint64_t candidate = f | (std::uint64_t{1} << v);
        if (!outside(candidate)) continue;
        next.push_back(candidate);
        members.push_back(candidate);
        member_set.insert(candidate);
      }
    }
    level = std::move(next);
  }

  std::vector<Monomial> facets;
  for (std::uint64_t m : members) {
    bool maximal = true;
    for (int v = 0; v < n; ++v) {
      std::uint64_t up = m | (std::uint64_t{1} << v);
      if (up != m && member_set.contains(up)) {
        maximal = false;
        break;
      }
    }
    if (maximal) facets.push_back(universe.monomial_of(m));
  }
  return SimplicialComplex(universe, std::move(facets));
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  // Relabel b when the vertex sets overlap: shift each side's indices past
  // a's largest index for that side.
  bool overlap = false;
  for (const Variable& v : b.vertices().variables())
    if (a.vertices().contains(v)) {
      overlap = true;
      break;
    }
  int shift_left = 0, shift_right = 0;
  if (overlap) {
    for (const Variable& v : a.vertices().variables()) {
      if (v.player == Player::Left)
        shift_left = std::max(shift_left, v.index);
      else
        shift_right = std::max(shift_right, v.index);
    }
  }
  auto relabel_var = [&](Variable v) {
    v.index += v.player == Player::Left ? shift_left : shift_right;
    return v;
  };
  auto relabel = [&](const Monomial& m) {
    std::vector<Variable> vars;
    vars.reserve(m.degree());
    for (const Variable& v : m.variables()) vars.push_back(relabel_var(v));
    return Monomial(std::move(vars));
  };

  std::vector<Variable> merged = a.vertices().variables();
  for (const Variable& v : b.vertices().variables())
    merged.push_back(relabel_var(v));
  Universe vertices(std::move(merged));

  if (a.is_void() || b.is_void())
    return SimplicialComplex::void_of(std::move(vertices));

  std::vector<Monomial> facets;
  facets.reserve(a.facets().size() * b.facets().size());
  for (const Monomial& fa : a.facets())
    for (const Monomial& fb : b.facets())
      facets.push_back(fa.times(relabel(fb)));
  return SimplicialComplex(std::move(vertices), std::move(facets));
}

namespace {

constexpr std::size_t kIsomorphismVertexCap = 16;

struct IsomorphismSearch {
  const SimplicialComplex& a;
  const SimplicialComplex& b;
  std::size_t n;
  std::vector<std::vector<std::size_t>> candidates;  // per a-vertex
  std::vector<std::size_t> order;                    // a-vertex visit order
  std::vector<std::vector<std::size_t>> complete_at;  // a-facets by depth
  std::unordered_set<std::uint64_t> b_facets;
  std::vector<int> assignment;  // a-vertex -> b-vertex
  std::vector<bool> used;

  bool dfs(std::size_t depth) {
    if (depth == order.size()) return true;
    std::size_t av = order[depth];
    for (std::size_t bv : candidates[av]) {
      if (used[bv]) continue;
      assignment[av] = static_cast<int>(bv);
      used[bv] = true;
      bool ok = true;
      for (std::size_t fi : complete_at[depth]) {
        std::uint64_t image = 0;
        for (std::uint64_t rest = a.facet_masks()[fi]; rest != 0;
             rest &= rest - 1)
          image |= std::uint64_t{1}
                   << assignment[static_cast<std::size_t>(std::countr_zero(rest))];
        if (!b_facets.contains(image)) {
          ok = false;
          break;
        }
      }
      if (ok && dfs(depth + 1)) return true;
      used[bv] = false;
      assignment[av] = -1;
    }
    return false;
  }
};

// Multiset of facet sizes through each vertex: a cheap bijection-invariant.
std::vector<std::vector<int>> vertex_profiles(const SimplicialComplex& c) {
  std::vector<std::vector<int>> profiles(c.vertices().size());
  for (std::uint64_t f : c.facet_masks()) {
    int size = std::popcount(f);
    for (std::uint64_t rest = f; rest != 0; rest &= rest - 1)
      profiles[static_cast<std::size_t>(std::countr_zero(rest))].push_back(size);
  }
  for (auto& p : profiles) std::sort(p.begin(), p.end());
  return profiles;
}

}  // namespace

IsomorphismResult are_isomorphic(const SimplicialComplex& a,
                                 const SimplicialComplex& b) {
  if (a.vertices().size() > kIsomorphismVertexCap ||
      b.vertices().size() > kIsomorphismVertexCap)
    raise(Errc::size_limit, "isomorphism search is limited to " +
                                std::to_string(kIsomorphismVertexCap) +
                                " vertices");
  IsomorphismResult result;
  if (a.vertices().size() != b.vertices().size()) return result;
  if (a.facets().size() != b.facets().size()) return result;

  auto size_profile = [](const SimplicialComplex& c) {
    std::vector<int> sizes;
    sizes.reserve(c.facets().size());
    for (const Monomial& f : c.facets()) sizes.push_back(static_cast<int>(f.degree()));
    std::sort(sizes.begin(), sizes.end());
    return sizes;
  };
  if (size_profile(a) != size_profile(b)) return result;
  if (a.f_vector() != b.f_vector()) return result;

  const std::size_t n = a.vertices().size();
  auto a_profiles = vertex_profiles(a);
  auto b_profiles = vertex_profiles(b);

  IsomorphismSearch search{a, b, n, {}, {}, {}, {}, {}, {}};
  search.candidates.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      if (a_profiles[i] == b_profiles[j]) search.candidates[i].push_back(j);
    if (search.candidates[i].empty()) return result;
  }

  search.order.resize(n);
  for (std::size_t i = 0; i < n; ++i) search.order[i] = i;
  std::sort(search.order.begin(), search.order.end(),
            [&search](std::size_t lhs, std::size_t rhs) {
              return search.candidates[lhs].size() < search.candidates[rhs].size();
            });

  // Facet fi becomes checkable once its last vertex (in visit order) is
  // assigned.
  std::vector<std::size_t> position(n);
  for (std::size_t d = 0; d < n; ++d) position[search.order[d]] = d;
  search.complete_at.resize(n);
  for (std::size_t fi = 0; fi < a.facet_masks().size(); ++fi) {
    std::uint64_t mask = a.facet_masks()[fi];
    if (mask == 0) continue;  // the empty facet maps to the empty facet
    std::size_t last = 0;
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1)
      last = std::max(last,
                      position[static_cast<std::size_t>(std::countr_zero(rest))]);
    search.complete_at[last].push_back(fi);
  }

  for (std::uint64_t f : b.facet_masks()) search.b_facets.insert(f);
  search.assignment.assign(n, -1);
  search.used.assign(n, false);

  if (n == 0) {
    result.isomorphic = true;
    return result;
  }
  if (!search.dfs(0)) return result;

  result.isomorphic = true;
  result.witness.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    result.witness.emplace_back(
        a.vertices().at(i),
        b.vertices().at(static_cast<std::size_t>(search.assignment[i])));
  return result;
}

}  // namespace placement

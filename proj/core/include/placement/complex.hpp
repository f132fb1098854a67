#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "placement/ideal.hpp"
#include "placement/limits.hpp"
#include "placement/monomial.hpp"

namespace placement {

// Face counts by cardinality, indexed from 0 (the empty face counts once
// for every non-void complex). The void complex has an empty f-vector.
using FVector = std::vector<std::int64_t>;

// A simplicial complex given by its vertex set and its facets (the
// inclusion-maximal faces). Two degenerate complexes are distinguished:
// the void complex has no faces at all, the empty complex has the single
// face {}. Construction normalizes any facet list to an antichain.
class SimplicialComplex {
public:
  SimplicialComplex() = default;  // void complex on the empty universe
  SimplicialComplex(Universe vertices, std::vector<Monomial> facets);

  static SimplicialComplex void_of(Universe vertices);
  static SimplicialComplex empty_of(Universe vertices);
  static SimplicialComplex full_simplex(Universe vertices);

  const Universe& vertices() const { return vertices_; }
  const std::vector<Monomial>& facets() const { return facets_; }
  const std::vector<std::uint64_t>& facet_masks() const { return masks_; }

  bool is_void() const { return facets_.empty(); }
  bool is_empty_complex() const;

  // True iff the candidate set is contained in some facet. Unknown
  // vertices raise Errc::domain_error.
  bool is_face(const Monomial& candidate) const;

  FVector f_vector(const EnumerationLimits& limits = {}) const;

  // All inclusion-minimal non-faces, in canonical listing order. For the
  // void complex this is the empty set itself (the unit monomial).
  std::vector<Monomial> minimal_non_faces(
      const EnumerationLimits& limits = {}) const;

  friend bool operator==(const SimplicialComplex&,
                         const SimplicialComplex&) = default;

private:
  Universe vertices_;
  std::vector<Monomial> facets_;      // antichain, canonical order
  std::vector<std::uint64_t> masks_;  // parallel to facets_
};

// The facet operators: ideal generated by the facets, and complex whose
// facets are the minimal generators. Inverse to each other.
MonomialIdeal facet_ideal(const SimplicialComplex& complex);
SimplicialComplex facet_complex(const MonomialIdeal& ideal);

// The Stanley-Reisner operators: ideal generated by the minimal non-faces,
// and complex whose faces are the monomials outside the ideal. Inverse to
// each other.
MonomialIdeal sr_ideal(const SimplicialComplex& complex,
                       const EnumerationLimits& limits = {});
SimplicialComplex sr_complex(const MonomialIdeal& ideal,
                             const EnumerationLimits& limits = {});

// Facets are all pairwise unions of facets. Overlapping vertex labels in b
// are shifted past a's largest per-player index first.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

struct IsomorphismResult {
  bool isomorphic = false;
  // Vertex bijection a -> b mapping the facet family of a onto that of b;
  // filled only when isomorphic.
  std::vector<std::pair<Variable, Variable>> witness;
};

// Backtracking search for a facet-family-preserving vertex bijection.
// Both complexes must have at most 16 vertices (Errc::size_limit).
IsomorphismResult are_isomorphic(const SimplicialComplex& a,
                                 const SimplicialComplex& b);

}  // namespace placement

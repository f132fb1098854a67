#pragma once

#include <vector>

#include "placement/monomial.hpp"

namespace placement {

// Reduces a set of square-free monomials to the antichain of its minimal
// elements under divisibility. Input order is irrelevant; the result is in
// canonical listing order.
std::vector<Monomial> minimal_generators(std::vector<Monomial> monomials);

// A square-free monomial ideal, represented by its minimal generating set
// over a declared universe. The zero ideal has no generators; the unit
// ideal is generated by 1.
class MonomialIdeal {
public:
  MonomialIdeal(Universe universe, std::vector<Monomial> generators);

  static MonomialIdeal zero(Universe universe);
  static MonomialIdeal unit(Universe universe);

  const Universe& universe() const { return universe_; }
  const std::vector<Monomial>& generators() const { return generators_; }
  bool is_zero() const { return generators_.empty(); }
  bool is_unit() const;

  // Membership: true iff some generator divides m. Variables outside the
  // universe raise Errc::domain_error.
  bool contains(const Monomial& m) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
  Universe universe_;
  std::vector<Monomial> generators_;  // minimal antichain, canonical order
};

// Equality of minimal generating sets. Comparing ideals over different
// universes raises Errc::domain_error.
bool ideals_equal(const MonomialIdeal& a, const MonomialIdeal& b);

}  // namespace placement

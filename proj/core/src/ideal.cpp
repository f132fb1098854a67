#include "placement/ideal.hpp"

#include <algorithm>

#include "placement/errors.hpp"

namespace placement {

std::vector<Monomial> minimal_generators(std::vector<Monomial> monomials) {
  std::sort(monomials.begin(), monomials.end(), canonical_less);
  monomials.erase(std::unique(monomials.begin(), monomials.end()),
                  monomials.end());
  std::vector<Monomial> minimal;
  for (const Monomial& m : monomials) {
    bool dominated = false;
    for (const Monomial& kept : minimal) {
      if (kept.divides(m)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.push_back(m);
  }
  return minimal;
}

MonomialIdeal::MonomialIdeal(Universe universe, std::vector<Monomial> generators)
    : universe_(std::move(universe)) {
  for (const Monomial& g : generators) universe_.mask_of(g);  // domain check
  generators_ = minimal_generators(std::move(generators));
}

MonomialIdeal MonomialIdeal::zero(Universe universe) {
  return MonomialIdeal(std::move(universe), {});
}

MonomialIdeal MonomialIdeal::unit(Universe universe) {
  return MonomialIdeal(std::move(universe), {Monomial::one()});
}

bool MonomialIdeal::is_unit() const {
  return generators_.size() == 1 && generators_.front().is_one();
}

bool MonomialIdeal::contains(const Monomial& m) const {
  universe_.mask_of(m);  // domain check
  for (const Monomial& g : generators_)
    if (g.divides(m)) return true;
  return false;
}

bool ideals_equal(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.universe() != b.universe())
    raise(Errc::domain_error, "cannot compare ideals over different universes");
  return a.generators() == b.generators();
}

}  // namespace placement

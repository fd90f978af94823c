#pragma once

// Cross-section lattice and type map of a J-irreducible monoid, computed from
// the root datum and the set J of simple roots fixing the dominant weight.

#include <cstddef>
#include <utility>
#include <vector>

#include "renner/weyl.hpp"

namespace renner {

  struct CrossSectionEntry {
    std::size_t id      = 0;
    bool        is_zero = false;
    RootSubset  lambda_star;
    RootSubset  lambda_substar;
    RootSubset  lambda;  // unpopulated for the zero entry
    std::size_t d_e = 1;
    Subgroup    W_e;
    Subgroup    W_star;
    Subgroup    W_substar;
  };

  //! Entries are ordered by (|lambda_star|, lambda_star) after the zero entry,
  //! so id 0 is the zero, id 1 the unique minimal non-zero idempotent and the
  //! last id the identity.
  struct CrossSectionLattice {
    RootSubset                     J;
    QVector                        mu;
    std::vector<CrossSectionEntry> entries;
    std::vector<std::vector<bool>> leq;  // leq[a][b] <=> e_a <= e_b

    std::size_t size() const noexcept {
      return entries.size();
    }
    std::size_t zero() const noexcept {
      return 0;
    }
    std::size_t minimal() const noexcept {
      return 1;
    }
    std::size_t one() const noexcept {
      return entries.size() - 1;
    }
    CrossSectionEntry const& operator[](std::size_t i) const {
      return entries[i];
    }
  };

  //! All X such that no connected component of X lies inside J.
  //! Throws Error(BadJ) if J is all of the simple roots or out of range.
  std::vector<RootSubset> lambda_star_sets(RootDatum const& datum,
                                           RootSubset const& J);

  CrossSectionEntry complete_entry(WeylGroup const& W, RootSubset const& J,
                                   RootSubset const& X);

  CrossSectionLattice build_cross_section(WeylGroup const& W, RootSubset J);

  //! The unique (u, v) in W*(e) x W_*(e) with w = u v; throws
  //! Error(NotInWe) if w is not in W(e).
  std::pair<std::size_t, std::size_t>
  projection_components(WeylGroup const& W, CrossSectionEntry const& entry,
                        std::size_t w);

}  // namespace renner

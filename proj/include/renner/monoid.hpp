#pragma once

// The Renner monoid R = W Lambda W of a J-irreducible monoid.  An element is
// stored as a canonical pair (I, w) standing for e_I w, where I is a face of
// the weight polytope and w is the least element of its coset G_I w, G_I being
// the right stabiliser {u in W : e_I u = e_I}.  Maps compose on the right:
// i(st) = (is)t.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "renner/cross_section.hpp"
#include "renner/polytope.hpp"
#include "renner/weyl.hpp"

namespace renner {

  struct RennerElement {
    FaceId        face = 0;  // the domain I; 0 is the empty face
    std::uint32_t weyl = 0;  // index into the WeylGroup

    bool operator==(RennerElement const&) const = default;
    auto operator<=>(RennerElement const&) const = default;

    bool is_zero() const noexcept {
      return face == 0;
    }
  };

  struct Bounds {
    std::size_t max_group  = WeylGroup::default_bound;
    std::size_t max_monoid = 200000;
    //! Multiplication tables are cached up to this many elements.
    std::size_t table_limit = 2048;
  };

  class RennerMonoid {
   public:
    RennerMonoid() = default;

    WeylGroup const& group() const noexcept {
      return _W;
    }
    CrossSectionLattice const& cross_section() const noexcept {
      return _lambda;
    }
    FaceLattice const& faces() const noexcept {
      return _F;
    }

    RennerElement make_element(FaceId I, std::size_t w) const;
    RennerElement zero() const {
      return make_element(0, _W.identity());
    }
    RennerElement one() const {
      return make_element(_F.full_face(), _W.identity());
    }
    RennerElement idempotent(FaceId K) const {
      return make_element(K, _W.identity());
    }
    RennerElement unit(std::size_t w) const {
      return make_element(_F.full_face(), w);
    }

    RennerElement multiply(RennerElement a, RennerElement b) const;
    RennerElement inverse(RennerElement a) const;

    FaceId domain(RennerElement a) const {
      return a.face;
    }
    FaceId range(RennerElement a) const {
      return _F.act(a.weyl, a.face);
    }

    //! image[i] for each vertex i, -1 where undefined.
    std::vector<std::int64_t> vertex_map(RennerElement a) const;

    //! Entry e with a in WeW.
    std::size_t class_of(RennerElement a) const {
      return _F.orbit_label(a.face);
    }

    // Dense numbering: id 0 is the zero, then the classes WeW in entry
    // order, each listed as enumerate_class produces it.
    std::size_t size() const noexcept {
      return _elements.size();
    }
    std::vector<RennerElement> const& elements() const noexcept {
      return _elements;
    }
    RennerElement element(std::size_t id) const {
      return _elements[id];
    }
    std::size_t id_of(RennerElement a) const {
      return static_cast<std::size_t>(_id[a.face * _W.size() + a.weyl]);
    }
    std::vector<std::size_t> const& class_ids(std::size_t entry) const {
      return _class_ids[entry];
    }
    bool has_table() const noexcept {
      return !_table.empty();
    }
    std::size_t mul_id(std::size_t a, std::size_t b) const;

    //! WeW listed as mu_I^- p mu_J for I, J in F(e) and p in W*(e).
    std::vector<RennerElement> enumerate_class(std::size_t entry) const;

    //! (mu_K, mu_K^-) where mu_K maps the standard face L onto K.  Throws
    //! Error(FaceNotInOrbit) unless K is in F(e).
    std::pair<RennerElement, RennerElement> transporter(std::size_t entry,
                                                        FaceId K) const;

    //! mu_I s mu_J^- for s in WeW; throws Error(WrongClass) otherwise.
    RennerElement p_projection(std::size_t entry, RennerElement s) const;

    //! The u in W_{lambda*(e)} with e u = pi, for pi with domain = range = L.
    std::size_t group_element_of(std::size_t entry, RennerElement pi) const;

    //! Right stabiliser G_K of e_K, used for canonical forms.
    std::vector<std::size_t> const& stabiliser(FaceId K) const {
      return _stab[K];
    }

    //! The minimal w with L w = K, L the standard face of K's orbit.
    std::size_t transporter_weyl(FaceId K) const {
      return _trans[K];
    }

    friend RennerMonoid enumerate_monoid(WeylGroup W, CrossSectionLattice lambda,
                                         FaceLattice F, Bounds const& bounds);

   private:
    WeylGroup                             _W;
    CrossSectionLattice                   _lambda;
    FaceLattice                           _F;
    std::vector<std::vector<std::size_t>> _stab;
    std::vector<std::uint32_t>            _canon;  // |F| x |W|
    std::vector<std::size_t>              _trans;
    std::vector<RennerElement>            _elements;
    std::vector<std::int64_t>             _id;  // |F| x |W|, -1 if unused
    std::vector<std::vector<std::size_t>> _class_ids;
    std::vector<std::uint32_t>            _table;
  };

  //! Throws Error(ClosureViolation) if products or inverses leave the
  //! enumerated set, Error(LatticeInconsistent) if |WeW| != d_e^2 |W*(e)|.
  RennerMonoid enumerate_monoid(WeylGroup W, CrossSectionLattice lambda,
                                FaceLattice F, Bounds const& bounds = {});

  //! Whole pipeline from (family, rank, J); J holds 0-based indices.
  RennerMonoid build_monoid(Family family, int rank, RootSubset const& J,
                            Bounds const& bounds = {});

  //! Seed for sampled checks: $RENNER_SEED if set.  Only the choice of
  //! sampled pairs depends on it.
  std::uint64_t sampling_seed();

  //! True when distinct elements have distinct vertex partial maps.
  bool vertex_map_faithful(RennerMonoid const& R);

}  // namespace renner

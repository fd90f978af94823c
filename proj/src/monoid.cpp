#include "renner/monoid.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <random>

#include "renner/error.hpp"

namespace renner {

  RennerElement RennerMonoid::make_element(FaceId I, std::size_t w) const {
    return RennerElement{I, _canon[I * _W.size() + w]};
  }

  RennerElement RennerMonoid::multiply(RennerElement a, RennerElement b) const {
    if (a.face == 0 || b.face == 0) {
      return zero();
    }
    // e_I w e_I' w' = e_I e_{I' w^-1} w w'
    FaceId const pulled = _F.act(_W.inv(a.weyl), b.face);
    return make_element(_F.intersection(a.face, pulled), _W.mul(a.weyl, b.weyl));
  }

  RennerElement RennerMonoid::inverse(RennerElement a) const {
    if (a.face == 0) {
      return zero();
    }
    return make_element(range(a), _W.inv(a.weyl));
  }

  std::vector<std::int64_t> RennerMonoid::vertex_map(RennerElement a) const {
    std::vector<std::int64_t> out(_F.vertices().size(), -1);
    for (VertexId v : _F.face(a.face).vertices) {
      out[v] = _F.vertex_image(a.weyl, v);
    }
    return out;
  }

  std::size_t RennerMonoid::mul_id(std::size_t a, std::size_t b) const {
    if (!_table.empty()) {
      return _table[a * _elements.size() + b];
    }
    return id_of(multiply(_elements[a], _elements[b]));
  }

  std::vector<RennerElement> RennerMonoid::enumerate_class(std::size_t entry) const {
    CrossSectionEntry const& e = _lambda[entry];
    if (e.is_zero) {
      return {zero()};
    }
    FaceId const               L = _F.standard_face(entry);
    std::vector<RennerElement> out;
    for (FaceId I : _F.orbit(entry)) {
      RennerElement const mu_I_minus = transporter(entry, I).second;
      for (FaceId J : _F.orbit(entry)) {
        RennerElement const mu_J = transporter(entry, J).first;
        for (std::size_t p : e.W_star.elements) {
          out.push_back(
              multiply(multiply(mu_I_minus, make_element(L, p)), mu_J));
        }
      }
    }
    return out;
  }

  std::pair<RennerElement, RennerElement>
  RennerMonoid::transporter(std::size_t entry, FaceId K) const {
    if (K >= _F.size() || _F.orbit_label(K) != entry) {
      throw Error(ErrorCode::FaceNotInOrbit,
                  "face is not in the orbit of the requested entry");
    }
    if (_lambda[entry].is_zero) {
      return {zero(), zero()};
    }
    FaceId const      L = _F.standard_face(entry);
    std::size_t const w = _trans[K];
    return {make_element(L, w), make_element(K, _W.inv(w))};
  }

  RennerElement RennerMonoid::p_projection(std::size_t entry,
                                           RennerElement s) const {
    if (class_of(s) != entry) {
      throw Error(ErrorCode::WrongClass, "element is not in WeW");
    }
    RennerElement const mu_I       = transporter(entry, domain(s)).first;
    RennerElement const mu_J_minus = transporter(entry, range(s)).second;
    return multiply(multiply(mu_I, s), mu_J_minus);
  }

  std::size_t RennerMonoid::group_element_of(std::size_t entry,
                                             RennerElement pi) const {
    CrossSectionEntry const& e = _lambda[entry];
    if (e.is_zero) {
      if (!pi.is_zero()) {
        throw Error(ErrorCode::NotProjective, "expected the zero element");
      }
      return _W.identity();
    }
    FaceId const L = _F.standard_face(entry);
    if (pi.face != L || range(pi) != L) {
      throw Error(ErrorCode::NotProjective,
                  "element does not have domain and range L");
    }
    std::size_t u;
    try {
      u = projection_components(_W, e, pi.weyl).first;
    } catch (Error const&) {
      throw Error(ErrorCode::NotProjective, "no lift of the element to W(e)");
    }
    if (make_element(L, u) != pi) {
      throw Error(ErrorCode::NotProjective, "lift does not reproduce the element");
    }
    return u;
  }

  std::uint64_t sampling_seed() {
    char const* s = std::getenv("RENNER_SEED");
    return s == nullptr ? 0x5eed : std::strtoull(s, nullptr, 10);
  }

  RennerMonoid enumerate_monoid(WeylGroup W, CrossSectionLattice lambda,
                                FaceLattice F, Bounds const& bounds) {
    std::size_t expected = 1;
    for (std::size_t e = 1; e < lambda.size(); ++e) {
      expected += lambda[e].d_e * lambda[e].d_e * lambda[e].W_star.order();
    }
    if (expected > bounds.max_monoid) {
      throw Error(ErrorCode::GroupTooLarge,
                  "|R| = " + std::to_string(expected) + " exceeds the bound "
                      + std::to_string(bounds.max_monoid));
    }

    RennerMonoid R;
    R._W      = std::move(W);
    R._lambda = std::move(lambda);
    R._F      = std::move(F);
    WeylGroup const&           G  = R._W;
    FaceLattice const&         FL = R._F;
    CrossSectionLattice const& Lm = R._lambda;
    std::size_t const          nW = G.size();
    std::size_t const          nF = FL.size();

    // Least transporter for every face: scan W in increasing order.
    std::vector<std::size_t> by_rank(nW);
    for (std::size_t w = 0; w < nW; ++w) {
      by_rank[G.order_rank(w)] = w;
    }
    R._trans.assign(nF, nW);
    R._trans[0] = G.identity();
    for (std::size_t w : by_rank) {
      for (std::size_t e = 1; e < Lm.size(); ++e) {
        FaceId K = FL.act(w, FL.standard_face(e));
        if (R._trans[K] == nW) {
          R._trans[K] = w;
        }
      }
    }

    // Canonical representatives of G_K w with G_K = x^-1 W_*(e) x.
    R._stab.resize(nF);
    R._canon.resize(nF * nW);
    R._stab[0] = by_rank;
    for (std::size_t w = 0; w < nW; ++w) {
      R._canon[w] = static_cast<std::uint32_t>(by_rank.front());
    }
    for (FaceId K = 1; K < nF; ++K) {
      Subgroup const G_K = conjugate_subgroup(G, Lm[FL.orbit_label(K)].W_substar,
                                              R._trans[K]);
      R._stab[K] = G_K.elements;
      for (std::size_t w = 0; w < nW; ++w) {
        R._canon[K * nW + w] = static_cast<std::uint32_t>(min_coset_rep(G, G_K, w));
      }
    }

    R._id.assign(nF * nW, -1);
    R._class_ids.resize(Lm.size());
    auto add = [&R, nW](RennerElement a, std::size_t entry) {
      std::int64_t& slot = R._id[a.face * nW + a.weyl];
      if (slot >= 0) {
        throw Error(ErrorCode::ClosureViolation,
                    "class enumeration produced a repeated element");
      }
      slot = static_cast<std::int64_t>(R._elements.size());
      R._class_ids[entry].push_back(R._elements.size());
      R._elements.push_back(a);
    };
    add(R.zero(), 0);
    for (std::size_t e = 1; e < Lm.size(); ++e) {
      for (RennerElement a : R.enumerate_class(e)) {
        if (R.class_of(a) != e) {
          throw Error(ErrorCode::ClosureViolation,
                      "class enumeration left WeW");
        }
        add(a, e);
      }
      std::size_t const want = Lm[e].d_e * Lm[e].d_e * Lm[e].W_star.order();
      if (R._class_ids[e].size() != want) {
        throw Error(ErrorCode::LatticeInconsistent,
                    "|WeW| = " + std::to_string(R._class_ids[e].size())
                        + " but d_e^2 |W*(e)| = " + std::to_string(want));
      }
    }

    std::size_t const n = R._elements.size();
    auto lookup = [&R, nW](RennerElement a) {
      std::int64_t id = R._id[a.face * nW + a.weyl];
      if (id < 0) {
        throw Error(ErrorCode::ClosureViolation,
                    "product or inverse is not an enumerated element");
      }
      return static_cast<std::uint32_t>(id);
    };
    for (std::size_t a = 0; a < n; ++a) {
      lookup(R.inverse(R._elements[a]));
    }
    if (n <= bounds.table_limit) {
      R._table.resize(n * n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          R._table[a * n + b] = lookup(R.multiply(R._elements[a], R._elements[b]));
        }
      }
    } else {
      std::mt19937_64                            rng(sampling_seed());
      std::uniform_int_distribution<std::size_t> pick(0, n - 1);
      for (std::size_t k = 0; k < 100000; ++k) {
        lookup(R.multiply(R._elements[pick(rng)], R._elements[pick(rng)]));
      }
    }
    return R;
  }

  RennerMonoid build_monoid(Family family, int rank, RootSubset const& J,
                            Bounds const& bounds) {
    WeylGroup W = enumerate_group(build_root_datum(family, rank), bounds.max_group);
    CrossSectionLattice lambda = build_cross_section(W, J);
    VertexSet           V      = orbit_vertices(W, lambda.mu);
    FaceLattice         F      = build_face_lattice(W, std::move(V), lambda);
    for (std::size_t a = 0; a < lambda.size(); ++a) {
      for (std::size_t b = 0; b < lambda.size(); ++b) {
        if (lambda.leq[a][b]
            != F.contains(F.standard_face(b), F.standard_face(a))) {
          throw Error(ErrorCode::LatticeInconsistent,
                      "order on Lambda disagrees with standard face inclusion");
        }
      }
    }
    return enumerate_monoid(std::move(W), std::move(lambda), std::move(F), bounds);
  }

  bool vertex_map_faithful(RennerMonoid const& R) {
    std::map<std::vector<std::int64_t>, std::size_t> seen;
    for (std::size_t id = 0; id < R.size(); ++id) {
      if (!seen.emplace(R.vertex_map(R.element(id)), id).second) {
        return false;
      }
    }
    return true;
  }

}  // namespace renner

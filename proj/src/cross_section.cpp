#include "renner/cross_section.hpp"

#include <algorithm>

#include "renner/error.hpp"

namespace renner {

  namespace {
    void validate_J(RootDatum const& datum, RootSubset const& J) {
      for (int j : J) {
        if (j < 0 || j >= datum.rank) {
          throw Error(ErrorCode::BadJ, "index " + std::to_string(j + 1)
                                           + " is not a simple root of "
                                           + datum.name());
        }
      }
      if (static_cast<int>(J.size()) >= datum.rank) {
        throw Error(ErrorCode::BadJ,
                    "J contains every simple root, so the weight is zero");
      }
    }

    RootSubset normalised(RootSubset X) {
      std::sort(X.begin(), X.end());
      X.erase(std::unique(X.begin(), X.end()), X.end());
      return X;
    }

    bool subset_of(RootSubset const& a, RootSubset const& b) {
      return std::includes(b.begin(), b.end(), a.begin(), a.end());
    }
  }  // namespace

  std::vector<RootSubset> lambda_star_sets(RootDatum const& datum,
                                           RootSubset const& J_in) {
    RootSubset const J = normalised(J_in);
    validate_J(datum, J);
    std::vector<RootSubset> out;
    for (unsigned mask = 0; mask < (1u << datum.rank); ++mask) {
      RootSubset X;
      for (int i = 0; i < datum.rank; ++i) {
        if (mask & (1u << i)) {
          X.push_back(i);
        }
      }
      bool ok = true;
      for (auto const& comp : datum.components(X)) {
        if (subset_of(comp, J)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        out.push_back(std::move(X));
      }
    }
    std::sort(out.begin(), out.end(),
              [](RootSubset const& a, RootSubset const& b) {
                return a.size() != b.size() ? a.size() < b.size() : a < b;
              });
    return out;
  }

  CrossSectionEntry complete_entry(WeylGroup const& W, RootSubset const& J_in,
                                   RootSubset const& X_in) {
    RootSubset const J = normalised(J_in);
    RootSubset const X = normalised(X_in);
    CrossSectionEntry e;
    e.lambda_star = X;
    for (int a : J) {
      if (std::binary_search(X.begin(), X.end(), a)) {
        continue;
      }
      std::size_t const sa       = W.generator(a);
      bool              commutes = true;
      for (int b : X) {
        std::size_t const sb = W.generator(b);
        if (W.mul(sa, sb) != W.mul(sb, sa)) {
          commutes = false;
          break;
        }
      }
      if (commutes) {
        e.lambda_substar.push_back(a);
      }
    }
    std::set_union(X.begin(), X.end(), e.lambda_substar.begin(),
                   e.lambda_substar.end(), std::back_inserter(e.lambda));
    e.W_e       = parabolic_subgroup(W, e.lambda);
    e.W_star    = parabolic_subgroup(W, e.lambda_star);
    e.W_substar = parabolic_subgroup(W, e.lambda_substar);
    e.d_e       = W.size() / e.W_e.order();

    // W(e) is the internal direct product W*(e) x W_*(e).
    for (std::size_t u : e.W_star.elements) {
      for (std::size_t v : e.W_substar.elements) {
        if (W.mul(u, v) != W.mul(v, u)) {
          throw Error(ErrorCode::LatticeInconsistent,
                      "W*(e) and W_*(e) do not commute for lambda* = "
                          + to_string(X));
        }
      }
    }
    if (e.W_star.order() * e.W_substar.order() != e.W_e.order()
        || W.size() % e.W_e.order() != 0) {
      throw Error(ErrorCode::LatticeInconsistent,
                  "W(e) is not W*(e) x W_*(e) for lambda* = " + to_string(X));
    }
    return e;
  }

  CrossSectionLattice build_cross_section(WeylGroup const& W, RootSubset J) {
    RootDatum const& datum = W.datum();
    J                      = normalised(std::move(J));
    auto const sets        = lambda_star_sets(datum, J);

    CrossSectionLattice L;
    L.J = J;
    L.mu.assign(datum.ambient_dim, Rational(0));
    for (int i = 0; i < datum.rank; ++i) {
      if (!std::binary_search(J.begin(), J.end(), i)) {
        for (std::size_t k = 0; k < datum.ambient_dim; ++k) {
          L.mu[k] += datum.fundamental_weights[i][k];
        }
      }
    }

    CrossSectionEntry zero;
    zero.is_zero   = true;
    zero.W_e       = parabolic_subgroup(W, {});
    zero.W_star    = zero.W_e;
    zero.W_substar = zero.W_e;
    L.entries.push_back(std::move(zero));
    for (auto const& X : sets) {
      L.entries.push_back(complete_entry(W, J, X));
      L.entries.back().id = L.entries.size() - 1;
    }

    CrossSectionEntry const& e0 = L.entries[1];
    if (!e0.lambda_star.empty() || e0.lambda != J || e0.lambda_substar != J) {
      throw Error(ErrorCode::LatticeInconsistent,
                  "minimal entry does not have lambda* empty and lambda = J");
    }

    std::size_t const n = L.entries.size();
    L.leq.assign(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        L.leq[a][b] = a == 0
                      || (b != 0
                          && subset_of(L.entries[a].lambda_star,
                                       L.entries[b].lambda_star));
      }
    }
    return L;
  }

  std::pair<std::size_t, std::size_t>
  projection_components(WeylGroup const& W, CrossSectionEntry const& entry,
                        std::size_t w) {
    if (!entry.W_e.contains(w)) {
      throw Error(ErrorCode::NotInWe, "element is not in W(e)");
    }
    for (std::size_t u : entry.W_star.elements) {
      std::size_t v = W.mul(W.inv(u), w);
      if (entry.W_substar.contains(v)) {
        return {u, v};
      }
    }
    throw Error(ErrorCode::NotInWe, "element does not factor through W*(e)");
  }

}  // namespace renner

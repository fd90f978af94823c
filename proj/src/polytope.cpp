#include "renner/polytope.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "renner/error.hpp"

namespace renner {

  VertexSet::VertexSet(std::vector<QVector> coords) : _coords(std::move(coords)) {
    std::sort(_coords.begin(), _coords.end(),
              [](QVector const& a, QVector const& b) {
                return lex_compare(a, b) > 0;
              });
    for (std::size_t i = 0; i < _coords.size(); ++i) {
      if (!_index.emplace(_coords[i], i).second) {
        throw Error(ErrorCode::LatticeInconsistent, "repeated vertex");
      }
    }
  }

  std::optional<std::size_t> VertexSet::find(QVector const& v) const {
    auto it = _index.find(v);
    if (it == _index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  VertexSet orbit_vertices(WeylGroup const& W, QVector const& mu) {
    if (std::all_of(mu.begin(), mu.end(),
                    [](Rational const& x) { return sgn(x) == 0; })) {
      throw Error(ErrorCode::ZeroWeight, "the dominant weight is zero");
    }
    std::unordered_map<QVector, std::size_t, QVectorHash> seen;
    std::vector<QVector>                                  orbit{mu};
    seen.emplace(mu, 0);
    for (std::size_t cur = 0; cur < orbit.size(); ++cur) {
      for (int i = 0; i < W.datum().rank; ++i) {
        QVector v = W.act(W.generator(i), orbit[cur]);
        if (seen.emplace(v, orbit.size()).second) {
          orbit.push_back(std::move(v));
        }
      }
    }
    return VertexSet(std::move(orbit));
  }

  bool Face::subset_of(Face const& that) const {
    return std::includes(that.vertices.begin(), that.vertices.end(),
                         vertices.begin(), vertices.end());
  }

  int affine_dim(VertexSet const& V, std::vector<VertexId> const& vertices) {
    if (vertices.empty()) {
      return -1;
    }
    std::vector<QVector> rows;
    QVector const&       base = V[vertices.front()];
    for (std::size_t k = 1; k < vertices.size(); ++k) {
      QVector d = V[vertices[k]];
      for (std::size_t c = 0; c < d.size(); ++c) {
        d[c] -= base[c];
      }
      rows.push_back(std::move(d));
    }
    return static_cast<int>(rank_of(std::move(rows)));
  }

  std::size_t VertexListHash::operator()(std::vector<VertexId> const& v) const {
    std::size_t h = v.size();
    for (auto x : v) {
      h = h * 1000003u ^ x;
    }
    return h;
  }

  std::optional<FaceId> FaceLattice::find(std::vector<VertexId> vertices) const {
    std::sort(vertices.begin(), vertices.end());
    auto it = _index.find(vertices);
    if (it == _index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  bool FaceLattice::contains(FaceId big, FaceId small) const {
    return intersection(big, small) == small;
  }

  std::vector<FaceId> FaceLattice::subfaces(FaceId K) const {
    std::vector<FaceId> out;
    for (FaceId f = 0; f < _faces.size(); ++f) {
      if (contains(K, f)) {
        out.push_back(f);
      }
    }
    return out;
  }

  int FaceLattice::mobius(FaceId J, FaceId K) const {
    if (!contains(K, J)) {
      throw Error(ErrorCode::NotAFacePair, "first face is not contained in the second");
    }
    return (dim(K) - dim(J)) % 2 == 0 ? 1 : -1;
  }

  std::vector<std::size_t> FaceLattice::f_vector() const {
    std::vector<std::size_t> out(static_cast<std::size_t>(dim(full_face())), 0);
    for (auto const& f : _faces) {
      if (f.dim >= 0 && f.dim < dim(full_face())) {
        ++out[static_cast<std::size_t>(f.dim)];
      }
    }
    return out;
  }

  Face standard_face(WeylGroup const& W, VertexSet const& V,
                     CrossSectionLattice const& lambda, std::size_t entry) {
    Face                     L;
    CrossSectionEntry const& e = lambda[entry];
    if (e.is_zero) {
      return L;
    }
    std::set<VertexId> verts;
    for (std::size_t u : e.W_e.elements) {
      auto v = V.find(W.act(u, lambda.mu));
      if (!v) {
        throw Error(ErrorCode::LatticeInconsistent, "mu is not a vertex");
      }
      verts.insert(static_cast<VertexId>(*v));
    }
    L.vertices.assign(verts.begin(), verts.end());
    L.dim = affine_dim(V, L.vertices);
    return L;
  }

  FaceLattice build_face_lattice(WeylGroup const& W, VertexSet V,
                                 CrossSectionLattice const& lambda) {
    FaceLattice F;
    F._vertices         = std::move(V);
    VertexSet const& VV = F._vertices;
    std::size_t const m = VV.size();
    auto              base = VV.find(lambda.mu);
    if (!base) {
      throw Error(ErrorCode::LatticeInconsistent, "mu is not a vertex of P");
    }
    F._basepoint = static_cast<VertexId>(*base);

    F._vertex_act.resize(W.size() * m);
    for (std::size_t w = 0; w < W.size(); ++w) {
      for (std::size_t v = 0; v < m; ++v) {
        auto img = VV.find(W.act(w, VV[v]));
        if (!img) {
          throw Error(ErrorCode::LatticeInconsistent, "vertex orbit is not W-stable");
        }
        F._vertex_act[w * m + v] = static_cast<VertexId>(*img);
      }
    }

    // Collect the orbits of the standard faces.
    std::vector<std::pair<std::vector<VertexId>, std::size_t>> found;
    found.emplace_back(std::vector<VertexId>{}, lambda.zero());
    std::vector<std::vector<VertexId>> standard(lambda.size());
    for (std::size_t e = 1; e < lambda.size(); ++e) {
      standard[e] = standard_face(W, VV, lambda, e).vertices;
      std::set<std::vector<VertexId>> orbit;
      for (std::size_t w = 0; w < W.size(); ++w) {
        std::vector<VertexId> img;
        img.reserve(standard[e].size());
        for (VertexId v : standard[e]) {
          img.push_back(F._vertex_act[w * m + v]);
        }
        std::sort(img.begin(), img.end());
        orbit.insert(std::move(img));
      }
      if (orbit.size() != lambda[e].d_e) {
        throw Error(ErrorCode::LatticeInconsistent,
                    "orbit of the standard face for lambda* = "
                        + to_string(lambda[e].lambda_star) + " has "
                        + std::to_string(orbit.size()) + " faces, expected d_e = "
                        + std::to_string(lambda[e].d_e));
      }
      for (auto const& f : orbit) {
        found.emplace_back(f, e);
      }
    }

    for (auto& [verts, e] : found) {
      Face f;
      f.vertices = verts;
      f.dim      = affine_dim(VV, verts);
      F._faces.push_back(std::move(f));
    }
    std::vector<std::size_t> perm(found.size());
    for (std::size_t k = 0; k < perm.size(); ++k) {
      perm[k] = k;
    }
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
      if (F._faces[a].dim != F._faces[b].dim) {
        return F._faces[a].dim < F._faces[b].dim;
      }
      return F._faces[a].vertices < F._faces[b].vertices;
    });
    std::vector<Face> sorted;
    F._label.clear();
    for (std::size_t k : perm) {
      sorted.push_back(F._faces[k]);
      F._label.push_back(found[k].second);
    }
    F._faces = std::move(sorted);
    std::size_t const n = F._faces.size();

    for (FaceId f = 0; f < n; ++f) {
      if (!F._index.emplace(F._faces[f].vertices, f).second) {
        throw Error(ErrorCode::LatticeInconsistent,
                    "two cross-section entries give the same face");
      }
    }
    if (F._faces.back().vertices.size() != m) {
      throw Error(ErrorCode::LatticeInconsistent, "P itself is not the top face");
    }

    F._orbits.assign(lambda.size(), {});
    F._orbit_pos.resize(n);
    for (FaceId f = 0; f < n; ++f) {
      F._orbit_pos[f] = F._orbits[F._label[f]].size();
      F._orbits[F._label[f]].push_back(f);
    }
    F._standard.resize(lambda.size());
    for (std::size_t e = 0; e < lambda.size(); ++e) {
      F._standard[e] = F._index.at(standard[e]);
    }

    F._meet.resize(n * n);
    for (FaceId a = 0; a < n; ++a) {
      for (FaceId b = a; b < n; ++b) {
        std::vector<VertexId> both;
        auto const&           va = F._faces[a].vertices;
        auto const&           vb = F._faces[b].vertices;
        std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(),
                              std::back_inserter(both));
        auto it = F._index.find(both);
        if (it == F._index.end()) {
          throw Error(ErrorCode::LatticeInconsistent,
                      "faces are not closed under intersection");
        }
        F._meet[a * n + b] = F._meet[b * n + a] = it->second;
        bool const proper = a != b && (it->second == a || it->second == b);
        FaceId const lo   = it->second;
        FaceId const hi   = lo == a ? b : a;
        if (proper && F._faces[lo].dim >= F._faces[hi].dim) {
          throw Error(ErrorCode::LatticeInconsistent,
                      "a proper subface does not have smaller dimension");
        }
      }
    }

    F._face_act.resize(W.size() * n);
    for (std::size_t w = 0; w < W.size(); ++w) {
      for (FaceId f = 0; f < n; ++f) {
        std::vector<VertexId> img;
        for (VertexId v : F._faces[f].vertices) {
          img.push_back(F._vertex_act[w * m + v]);
        }
        std::sort(img.begin(), img.end());
        F._face_act[w * n + f] = F._index.at(img);
      }
    }
    return F;
  }

  Face face_action(FaceLattice const& F, std::size_t w, Face const& K) {
    Face out;
    for (VertexId v : K.vertices) {
      out.vertices.push_back(F.vertex_image(w, v));
    }
    std::sort(out.vertices.begin(), out.vertices.end());
    out.dim = K.dim;
    return out;
  }

}  // namespace renner

#pragma once

// The weight polytope P = conv(W mu), described combinatorially by its vertex
// orbit and its face lattice.  Faces are W-translates of the parabolic orbits
// W_X mu; no convex-hull geometry is involved.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "renner/cross_section.hpp"
#include "renner/weyl.hpp"

namespace renner {

  //! The orbit W mu.  Vertices are numbered by sorting their coordinates in
  //! decreasing lexicographic order, so the dominant weight comes first.
  class VertexSet {
   public:
    VertexSet() = default;
    explicit VertexSet(std::vector<QVector> coords);

    std::size_t size() const noexcept {
      return _coords.size();
    }
    QVector const& operator[](std::size_t i) const {
      return _coords[i];
    }
    std::vector<QVector> const& coords() const noexcept {
      return _coords;
    }
    std::optional<std::size_t> find(QVector const& v) const;

   private:
    std::vector<QVector>                                  _coords;
    std::unordered_map<QVector, std::size_t, QVectorHash> _index;
  };

  //! Throws Error(ZeroWeight) if mu is zero.
  VertexSet orbit_vertices(WeylGroup const& W, QVector const& mu);

  using VertexId = std::uint32_t;

  struct Face {
    std::vector<VertexId> vertices;  // sorted
    int                   dim = -1;

    bool empty() const noexcept {
      return vertices.empty();
    }
    bool operator==(Face const& that) const {
      return vertices == that.vertices;
    }
    bool subset_of(Face const& that) const;
  };

  //! dim of the affine span; -1 for the empty set.
  int affine_dim(VertexSet const& V, std::vector<VertexId> const& vertices);

  using FaceId = std::uint32_t;

  struct VertexListHash {
    std::size_t operator()(std::vector<VertexId> const& v) const;
  };

  class FaceLattice {
   public:
    FaceLattice() = default;

    VertexSet const& vertices() const noexcept {
      return _vertices;
    }
    std::size_t size() const noexcept {
      return _faces.size();
    }
    Face const& face(FaceId f) const {
      return _faces[f];
    }
    std::vector<Face> const& faces() const noexcept {
      return _faces;
    }
    int dim(FaceId f) const {
      return _faces[f].dim;
    }

    FaceId empty_face() const noexcept {
      return 0;
    }
    FaceId full_face() const noexcept {
      return static_cast<FaceId>(_faces.size() - 1);
    }
    VertexId basepoint() const noexcept {
      return _basepoint;
    }

    std::optional<FaceId> find(std::vector<VertexId> vertices) const;

    //! Cross-section entry whose W-orbit contains f (0 for the empty face).
    std::size_t orbit_label(FaceId f) const {
      return _label[f];
    }
    //! F(e), sorted lexicographically by vertex set.
    std::vector<FaceId> const& orbit(std::size_t entry) const {
      return _orbits[entry];
    }
    //! Position of f inside orbit(orbit_label(f)).
    std::size_t orbit_position(FaceId f) const {
      return _orbit_pos[f];
    }
    FaceId standard_face(std::size_t entry) const {
      return _standard[entry];
    }

    bool contains(FaceId big, FaceId small) const;
    FaceId intersection(FaceId a, FaceId b) const {
      return _meet[a * _faces.size() + b];
    }

    //! Right action of w on vertices and faces.
    VertexId vertex_image(std::size_t w, VertexId v) const {
      return _vertex_act[w * _vertices.size() + v];
    }
    FaceId act(std::size_t w, FaceId f) const {
      return _face_act[w * _faces.size() + f];
    }

    //! F(K): every face contained in K, including the empty face and K.
    std::vector<FaceId> subfaces(FaceId K) const;

    //! (-1)^(dim K - dim J); throws Error(NotAFacePair) unless J is in K.
    int mobius(FaceId J, FaceId K) const;

    //! Number of faces of each dimension 0 .. dim P - 1.
    std::vector<std::size_t> f_vector() const;

    friend FaceLattice build_face_lattice(WeylGroup const& W, VertexSet V,
                                          CrossSectionLattice const& lambda);

   private:
    VertexSet                                         _vertices;
    VertexId                                          _basepoint = 0;
    std::vector<Face>                                 _faces;
    std::unordered_map<std::vector<VertexId>, FaceId, VertexListHash> _index;
    std::vector<std::size_t>                          _label;
    std::vector<std::vector<FaceId>>                  _orbits;
    std::vector<std::size_t>                          _orbit_pos;
    std::vector<FaceId>                               _standard;
    std::vector<FaceId>                               _meet;
    std::vector<VertexId>                             _vertex_act;
    std::vector<FaceId>                               _face_act;
  };

  //! W_{lambda(e)} mu as a vertex set; empty for the zero entry.
  Face standard_face(WeylGroup const& W, VertexSet const& V,
                     CrossSectionLattice const& lambda, std::size_t entry);

  //! Throws Error(LatticeInconsistent) if the orbit sizes, intersection
  //! closure or grading checks fail.
  FaceLattice build_face_lattice(WeylGroup const& W, VertexSet V,
                                 CrossSectionLattice const& lambda);

  //! { v w : v in K }
  Face face_action(FaceLattice const& F, std::size_t w, Face const& K);

}  // namespace renner

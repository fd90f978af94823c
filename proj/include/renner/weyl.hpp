#pragma once

// Weyl groups of types A, B, C and D realised as groups of rational matrices
// acting on the right of row vectors in the standard epsilon coordinates.
// Simple roots are indexed from 0 throughout the library.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "renner/rational.hpp"

namespace renner {

  enum class Family { A, B, C, D };

  //! Throws Error(UnsupportedType) for anything other than A, B, C, D.
  Family parse_family(std::string_view name);
  char   to_char(Family f) noexcept;

  //! Sorted list of 0-based simple-root indices.
  using RootSubset = std::vector<int>;

  struct RootDatum {
    Family                        family;
    int                           rank;
    std::size_t                   ambient_dim;
    std::vector<QVector>          simple_roots;
    std::vector<std::vector<int>> cartan;  // cartan[i][j] = <alpha_i, alpha_j^v>
    std::vector<QVector>          fundamental_weights;
    std::vector<QVector>          roots;  // the full root system

    std::string name() const;

    bool adjacent(int i, int j) const {
      return i != j && cartan[i][j] != 0;
    }

    //! Order of s_i s_j read off from the Cartan matrix.
    int coxeter_m(int i, int j) const;

    //! Connected components of X in the Dynkin diagram, each sorted, ordered
    //! by their smallest index.
    std::vector<RootSubset> components(RootSubset const& X) const;

    //! <v, alpha_i^v> = 2 (v, alpha_i) / (alpha_i, alpha_i)
    Rational coroot_pairing(QVector const& v, int i) const;
  };

  //! Bourbaki realisations: A_n in Q^{n+1}, B_n/C_n/D_n in Q^n.
  RootDatum build_root_datum(Family family, int rank);
  RootDatum build_root_datum(std::string_view family, int rank);

  class WeylElement {
   public:
    WeylElement() = default;
    explicit WeylElement(QMatrix m, std::vector<int> word = {})
        : _matrix(std::move(m)), _word(std::move(word)) {}

    QMatrix const& matrix() const noexcept {
      return _matrix;
    }
    //! Diagnostic only; two elements with different words may be equal.
    std::vector<int> const& word() const noexcept {
      return _word;
    }

    //! (v * x) * y == v * (x * y)
    WeylElement operator*(WeylElement const& that) const;
    WeylElement inverse() const;
    QVector     act(QVector const& v) const {
      return row_times(v, _matrix);
    }

    bool operator==(WeylElement const& that) const {
      return _matrix == that._matrix;
    }

    //! The fixed total order on W: flattened matrices compared entrywise,
    //! larger entries first, so the identity is the least element.
    std::strong_ordering operator<=>(WeylElement const& that) const {
      int c = that._matrix.lex_compare(_matrix);
      return c < 0   ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

   private:
    QMatrix          _matrix;
    std::vector<int> _word;
  };

  WeylElement simple_reflection(RootDatum const& datum, int i);

  //! Finite Weyl group with elements addressed by dense indices; index 0 is
  //! the identity.
  class WeylGroup {
   public:
    static constexpr std::size_t default_bound = 100000;

    WeylGroup() = default;

    RootDatum const& datum() const noexcept {
      return _datum;
    }
    std::size_t size() const noexcept {
      return _elements.size();
    }
    WeylElement const& element(std::size_t a) const {
      return _elements[a];
    }
    std::vector<WeylElement> const& elements() const noexcept {
      return _elements;
    }
    std::size_t identity() const noexcept {
      return 0;
    }
    std::size_t generator(int i) const {
      return _generators.at(static_cast<std::size_t>(i));
    }

    std::size_t mul(std::size_t a, std::size_t b) const;
    std::size_t inv(std::size_t a) const {
      return _inverse[a];
    }

    //! Position of a in the total order on W (0 = least).
    std::size_t order_rank(std::size_t a) const {
      return _rank[a];
    }

    //! Throws Error(IndexOutOfRange) if the matrix is not in W.
    std::size_t index_of(WeylElement const& w) const;

    std::vector<std::uint16_t> const& root_permutation(std::size_t a) const {
      return _root_perm[a];
    }

    //! Image of a vector under a (right action).
    QVector act(std::size_t a, QVector const& v) const {
      return _elements[a].act(v);
    }

    std::size_t element_order(std::size_t a) const;

    friend WeylGroup enumerate_group(RootDatum datum, std::size_t bound);

   private:
    using Perm = std::vector<std::uint16_t>;
    struct PermHash {
      std::size_t operator()(Perm const& p) const;
    };

    std::size_t lookup(Perm const& p) const;

    RootDatum                                      _datum;
    std::vector<WeylElement>                       _elements;
    std::vector<Perm>                              _root_perm;
    std::unordered_map<Perm, std::size_t, PermHash> _index;
    std::vector<std::size_t>                       _generators;
    std::vector<std::size_t>                       _inverse;
    std::vector<std::size_t>                       _rank;
    std::vector<std::uint32_t>                     _table;  // empty if too large
  };

  //! Throws Error(GroupTooLarge) if |W| exceeds bound.
  WeylGroup enumerate_group(RootDatum datum,
                            std::size_t bound = WeylGroup::default_bound);

  //! Order of W(family, rank) from the product formula.
  std::size_t weyl_group_order(Family family, int rank);

  //! A subgroup of a WeylGroup stored as a list of element indices.
  struct Subgroup {
    RootSubset                    generators;  // empty unless parabolic
    std::vector<std::size_t>      elements;    // identity first
    std::vector<std::vector<int>> words;       // parallel to elements
    std::vector<std::int32_t>     positions;   // |W| slots, -1 if absent

    std::size_t order() const noexcept {
      return elements.size();
    }
    bool contains(std::size_t w) const {
      return positions[w] >= 0;
    }
    std::size_t position(std::size_t w) const {
      return static_cast<std::size_t>(positions[w]);
    }
  };

  Subgroup parabolic_subgroup(WeylGroup const& W, RootSubset const& X);

  //! { x^-1 h x : h in H }
  Subgroup conjugate_subgroup(WeylGroup const& W, Subgroup const& H,
                              std::size_t x);

  //! Least element of the coset H w in the fixed total order.
  std::size_t min_coset_rep(WeylGroup const& W, Subgroup const& H,
                            std::size_t w);

  //! Classes ordered by first appearance in H.elements; the identity class
  //! comes first.
  std::vector<std::vector<std::size_t>> conjugacy_classes(WeylGroup const& W,
                                                          Subgroup const& H);

  std::string to_string(RootSubset const& X, bool one_based = true);

}  // namespace renner

#pragma once

// Irreducible representations and characters.  Groups W*(e) get integer
// character tables (Dixon's method) and, for components of type A, B or C,
// explicit rational matrix representations (Young's seminormal form and the
// induced construction for signed permutations).  Those induce the
// irreducible representations rho* of the Renner monoid.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "renner/algebra.hpp"
#include "renner/monoid.hpp"
#include "renner/weyl.hpp"

namespace renner {

  struct CharacterTable {
    std::size_t                           group_order = 0;
    std::vector<std::vector<std::size_t>> classes;  // WeylGroup indices
    std::vector<std::vector<long>>        values;   // rows: characters
    std::vector<std::int32_t>             class_index;  // |W| slots, -1 if absent

    std::size_t size() const noexcept {
      return values.size();
    }
    std::size_t class_of(std::size_t w) const {
      return static_cast<std::size_t>(class_index[w]);
    }
    long value(std::size_t row, std::size_t w) const {
      return values[row][class_of(w)];
    }
  };

  //! Rows are sorted by degree, then by their values in class order; the
  //! classes are those of conjugacy_classes(W, H).  Throws
  //! Error(NotIntegerValued) if a character is not integral.
  CharacterTable character_table(WeylGroup const& W, Subgroup const& H);

  using Partition = std::vector<int>;

  //! All partitions of k, in decreasing lexicographic order.
  std::vector<Partition> partitions(int k);
  std::string            partition_label(Partition const& p);

  //! Standard Young tableaux of shape p, each given as the row of 1..k.
  std::vector<std::vector<int>> standard_tableaux(Partition const& p);

  //! Images of an abstract set of Coxeter generators 0, 1, ...  When bound
  //! to a subgroup, generator k stands for the simple root H.generators[k].
  struct MatrixRep {
    std::string          label;
    std::size_t          degree = 0;
    std::vector<QMatrix> generators;
  };

  //! Young's seminormal form; generator i is the transposition (i+1, i+2).
  MatrixRep symmetric_group_irrep(Partition const& lambda);

  //! Irreducible of signed permutations of k = |lambda| + |mu|: generators
  //! 0..k-2 are adjacent transpositions and k-1 negates the last point.
  //! lambda labels the part where sign changes act trivially.
  MatrixRep hyperoctahedral_irrep(Partition const& lambda, Partition const& mu);

  //! A matrix representation evaluated on every element of a subgroup.
  struct BoundRep {
    std::string          label;
    std::size_t          degree = 0;
    std::vector<QMatrix> images;  // by position in the subgroup

    QMatrix const& at(Subgroup const& H, std::size_t w) const {
      return images[H.position(w)];
    }
  };

  //! True when the generator images satisfy (g_i g_j)^m[i][j] = 1.
  bool satisfies_coxeter_relations(MatrixRep const& rep,
                                   std::vector<std::vector<int>> const& m);

  //! Extends generator images along the subgroup's words.
  BoundRep bind(WeylGroup const& W, Subgroup const& H, MatrixRep const& rep);

  //! Full multiplication-table check; throws Error(PropertyViolation).
  void verify_homomorphism(WeylGroup const& W, Subgroup const& H, BoundRep const& rep);

  //! One irreducible of W*(e) per table row; matrices are present unless a
  //! component of lambda*(e) has type D.  Throws Error(UnsupportedComponent)
  //! only when require_matrices is set.
  struct ParabolicIrreps {
    CharacterTable         table;
    std::vector<std::string> labels;  // per table row
    bool                   has_matrices = false;
    std::vector<BoundRep>  reps;  // per table row when has_matrices
  };

  ParabolicIrreps irreps_of_parabolic(WeylGroup const& W, CrossSectionEntry const& e,
                                      bool require_matrices = false);

  //! The shape of rho*(sigma): block row a (a position in F(e)) is either
  //! empty or holds rho(unit[a]) in block column target[a].
  struct InducedShape {
    std::vector<std::int64_t> target;
    std::vector<std::size_t>  unit;
  };

  struct Irreducible {
    std::size_t entry = 0;
    std::size_t row   = 0;  // row of the character table of W*(e)
    std::string label;
    std::size_t degree         = 0;
    std::size_t induced_degree = 0;
  };

  //! Everything needed to evaluate rho* and chi* over one monoid.
  class RepresentationTheory {
   public:
    explicit RepresentationTheory(MonoidAlgebra const& A, bool require_matrices = false);

    MonoidAlgebra const& algebra() const noexcept {
      return *_A;
    }
    RennerMonoid const& monoid() const noexcept {
      return _A->monoid();
    }
    ParabolicIrreps const& parabolic(std::size_t entry) const {
      return _parabolic[entry];
    }
    //! Ordered by entry, then by table row.
    std::vector<Irreducible> const& irreducibles() const noexcept {
      return _irreducibles;
    }

    InducedShape shape(std::size_t entry, std::size_t sigma) const;

    //! rho*(sigma) as a dense matrix of size d_e deg(rho).  Throws
    //! Error(UnsupportedComponent) without matrices.
    QMatrix rho_star(Irreducible const& irr, std::size_t sigma) const;

    //! Sum over K in F(e) with K sigma = K of chi(mu_K sigma mu_K^-).
    long chi_star(std::size_t entry, std::size_t row, std::size_t sigma) const;

    //! chi* of irr on every element id.
    std::vector<long> character_vector(Irreducible const& irr) const;

   private:
    MonoidAlgebra const*          _A;
    std::vector<ParabolicIrreps>  _parabolic;
    std::vector<Irreducible>      _irreducibles;
  };

  struct RhoStarReport {
    std::size_t pairs        = 0;
    std::size_t block_checks = 0;
    bool        sampled      = false;
  };

  //! rho*(st) = rho*(s) rho*(t) for every irreducible with matrices, over
  //! all pairs (or max_pairs random ones).  The product is formed block by
  //! block: rho*(s) has at most one block per block row, so the (a, c)
  //! block of the product is rho(u) rho(u') for the unique path a -> b -> c.
  //! Throws Error(PropertyViolation) with a witness.
  RhoStarReport verify_rho_star(RepresentationTheory const& T,
                                std::size_t max_pairs = 2000000);

  //! {entry, lambda_star, label, degree, induced_degree} per irreducible,
  //! plus the checksum sum of induced_degree^2.
  nlohmann::json irreducible_inventory(RepresentationTheory const& T);

}  // namespace renner

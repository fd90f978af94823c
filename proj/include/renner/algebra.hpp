#pragma once

// The monoid algebra A = QR.  The zero of the monoid is an ordinary basis
// vector 0_R, distinct from the zero of A.  Elements are addressed by the
// dense ids of RennerMonoid.

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "renner/monoid.hpp"
#include "renner/rational.hpp"

namespace renner {

  //! Sparse rational combination of basis elements, sorted by id, with no
  //! zero coefficients stored.
  class AlgebraElement {
   public:
    using Term = std::pair<std::uint32_t, Rational>;

    AlgebraElement() = default;
    //! Sorts and merges; drops zero coefficients.
    explicit AlgebraElement(std::vector<Term> terms);

    static AlgebraElement basis(std::size_t id) {
      AlgebraElement a;
      a._terms.emplace_back(static_cast<std::uint32_t>(id), Rational(1));
      return a;
    }

    std::vector<Term> const& terms() const noexcept {
      return _terms;
    }
    bool is_zero() const noexcept {
      return _terms.empty();
    }
    std::size_t support_size() const noexcept {
      return _terms.size();
    }
    Rational coefficient(std::size_t id) const;

    AlgebraElement operator+(AlgebraElement const& that) const;
    AlgebraElement operator-(AlgebraElement const& that) const;
    AlgebraElement operator*(Rational const& q) const;

    bool operator==(AlgebraElement const& that) const {
      return _terms == that._terms;
    }

   private:
    std::vector<Term> _terms;
  };

  //! d_e x d_e matrix over the group algebra QW*(e).  Rows and columns are
  //! positions in F(e); group elements are WeylGroup indices in W_{lambda*(e)}.
  class GroupAlgebraMatrix {
   public:
    struct Key {
      std::size_t row, col, u;
      auto        operator<=>(Key const&) const = default;
    };

    GroupAlgebraMatrix() = default;
    GroupAlgebraMatrix(std::size_t entry, std::size_t d) : _entry(entry), _d(d) {}

    std::size_t entry() const noexcept {
      return _entry;
    }
    std::size_t dim() const noexcept {
      return _d;
    }
    std::map<Key, Rational> const& terms() const noexcept {
      return _terms;
    }
    bool is_zero() const noexcept {
      return _terms.empty();
    }

    //! Adds q u E_{row,col}.
    void add(std::size_t row, std::size_t col, std::size_t u, Rational const& q);

    bool operator==(GroupAlgebraMatrix const& that) const {
      return _entry == that._entry && _d == that._d && _terms == that._terms;
    }

    //! Throws Error(DimensionMismatch) if the entries or sizes differ.
    GroupAlgebraMatrix multiply(GroupAlgebraMatrix const& that,
                                WeylGroup const&          W) const;

   private:
    std::size_t             _entry = 0;
    std::size_t             _d     = 0;
    std::map<Key, Rational> _terms;
  };

  class MonoidAlgebra {
   public:
    explicit MonoidAlgebra(RennerMonoid const& R);

    RennerMonoid const& monoid() const noexcept {
      return *_R;
    }
    std::size_t dim() const noexcept {
      return _R->size();
    }

    AlgebraElement one() const {
      return AlgebraElement::basis(_R->id_of(_R->one()));
    }
    AlgebraElement zero_element() const {
      return AlgebraElement::basis(_R->id_of(_R->zero()));
    }

    AlgebraElement multiply(AlgebraElement const& a, AlgebraElement const& b) const;
    //! sigma * a and a * sigma for a basis element sigma.
    AlgebraElement left_multiply(std::size_t sigma, AlgebraElement const& a) const;
    AlgebraElement right_multiply(AlgebraElement const& a, std::size_t sigma) const;

    //! eta_K = sum over faces J in K of (-1)^(dim K - dim J) e_J.
    AlgebraElement const& eta_face(FaceId K) const {
      return _eta_face[K];
    }
    //! eta_e = sum of eta_K over K in F(e); eta_0 = 0_R.
    AlgebraElement const& eta_class(std::size_t entry) const {
      return _eta_class[entry];
    }

    //! Position of I(sigma), position of J(sigma) in F(e), and the element
    //! of W_{lambda*(e)} representing p(sigma), for sigma in its class.
    struct Coordinates {
      std::size_t row, col, u;
    };
    Coordinates const& coordinates(std::size_t id) const {
      return _coords[id];
    }

    //! psi_e(a eta_e).
    GroupAlgebraMatrix psi(std::size_t entry, AlgebraElement const& a) const;
    //! psi_e(a) for a already known to lie in A eta_e.  Throws
    //! Error(PropertyViolation) if a has support outside R_*(e).
    GroupAlgebraMatrix psi_projected(std::size_t entry, AlgebraElement const& a) const;
    //! Throws Error(DimensionMismatch) unless m is over W*(e) of size d_e.
    AlgebraElement psi_inverse(std::size_t entry, GroupAlgebraMatrix const& m) const;

   private:
    RennerMonoid const*         _R;
    std::vector<AlgebraElement> _eta_face;
    std::vector<AlgebraElement> _eta_class;
    std::vector<Coordinates>    _coords;
  };

  struct IdempotentReport {
    std::size_t face_pairs      = 0;
    std::size_t class_pairs     = 0;
    std::size_t central_checks  = 0;
    std::size_t inversion_checks = 0;
    bool        partition_of_unity = false;
  };

  //! eta_K eta_J = delta eta_J on all face pairs, the same for the eta_e,
  //! centrality of every eta_e, e_K = sum of eta_J over J in K, and
  //! sum eta_e = 1.  Throws Error(PropertyViolation) with a witness.
  IdempotentReport verify_idempotent_system(MonoidAlgebra const& A);

  struct IdealFilter {
    std::vector<std::size_t> elements;  // R_*(e), sorted ids
    std::size_t              dimension = 0;  // sum of dim A eta_f, f <= e
  };

  //! R_*(e) = union of WfW over f <= e, checked to be a two-sided ideal and
  //! to have the dimension of the sum of A eta_f over f <= e.  Throws
  //! Error(PropertyViolation).
  IdealFilter ideal_filter(MonoidAlgebra const& A, std::size_t entry);

  struct PsiReport {
    std::size_t pairs       = 0;
    std::size_t round_trips = 0;
    bool        sampled     = false;
  };

  //! Multiplicativity of psi_e on pairs of basis vectors sigma eta_e,
  //! tau eta_e (all pairs, or max_pairs random ones when there are more),
  //! and round trips with psi_inverse on both bases.  The products are
  //! formed in A as sigma (eta_e tau eta_e).  Throws
  //! Error(PropertyViolation) with a witness.
  PsiReport verify_psi(MonoidAlgebra const& A, std::size_t entry,
                       std::size_t max_pairs = 1000000);

  //! [{element, numerator, denominator}, ...]
  nlohmann::json to_json(MonoidAlgebra const& A, AlgebraElement const& a);

}  // namespace renner

#pragma once

// Brute-force verifiers.  They rebuild what they check from first
// principles (partial injections, vertex sets, raw multiplication) instead
// of reusing the pipeline's face and idempotent machinery.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "renner/algebra.hpp"
#include "renner/monoid.hpp"
#include "renner/polytope.hpp"

namespace renner {

  //! A partial injective map on {0..n-1}; image[i] = -1 where undefined.
  struct PartialInjection {
    std::vector<int> image;

    //! Right action: i(ab) = (ia)b.
    PartialInjection then(PartialInjection const& b) const;
    bool             is_injective() const;
    std::size_t      rank() const;

    auto operator<=>(PartialInjection const&) const = default;
  };

  //! All partial injections of {0..n-1} with their multiplication table.
  struct RookMonoid {
    int                           n = 0;
    std::vector<PartialInjection> elements;  // sorted
    std::vector<std::uint32_t>    table;     // size^2, row-major

    std::size_t size() const noexcept {
      return elements.size();
    }
    std::size_t mul(std::size_t a, std::size_t b) const {
      return table[a * elements.size() + b];
    }
    std::size_t index_of(PartialInjection const& p) const;
  };

  //! n <= 5.
  RookMonoid rook_monoid(int n);

  struct RookCertificate {
    int                      n = 0;
    std::vector<std::size_t> bijection;  // pipeline id -> rook index
    std::size_t              idempotents = 0;
    std::size_t              products    = 0;
  };

  //! R must come from (A, n-1, J = all simple roots but the first), n <= 4.
  //! Maps each element to its action on the n vertices and checks that this
  //! is a bijection onto the rook monoid respecting multiplication.  Throws
  //! Error(MismatchWitness).
  RookCertificate match_rook(RennerMonoid const& R);

  //! Poset given by leq[x][y] <=> x <= y.  mu(x, y) is 0 unless x <= y.
  std::vector<std::vector<std::int64_t>> mobius_recursive(
      std::vector<std::vector<bool>> const& leq);

  //! Compares the closed form of F.mobius with the recursive values on the
  //! inclusion order of vertex sets.  Returns the number of comparable
  //! pairs; throws Error(MismatchWitness).
  std::size_t verify_mobius(FaceLattice const& F);

  //! sum over X <= L <= K of (-1)^dim L vanishes for every X < K.  Returns
  //! the number of pairs; throws Error(MismatchWitness).
  std::size_t verify_euler_relation(FaceLattice const& F);

  //! Dimension of { x in QR : x s = s x } by exact elimination.  With
  //! all_elements unset only s in {simple reflections} u {e : e in Lambda}
  //! is imposed, which generate R as a monoid.
  std::size_t center_dimension(RennerMonoid const& R, bool all_elements = false);

  //! Rank of { sigma eta_e : sigma in R } by exact elimination.
  std::size_t block_dimension(MonoidAlgebra const& A, std::size_t entry);

  struct SuiteOptions {
    std::size_t exhaustive_bound = 1000;    // |R| up to which pair checks are complete
    std::size_t sample_pairs     = 200000;  // pairs drawn above the bound
  };

  struct SuiteReport {
    nlohmann::json checks = nlohmann::json::array();
    bool           passed = true;
  };

  //! Runs every structural check on R and records
  //! {check, citation, status, witness} per item.  Failures are entries of
  //! the report, never exceptions.
  SuiteReport exhaustive_property_suite(RennerMonoid const& R,
                                        SuiteOptions const& opts = {});

}  // namespace renner

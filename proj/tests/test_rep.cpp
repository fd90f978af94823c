#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "renner/element_io.hpp"
#include "renner/error.hpp"
#include "renner/rep.hpp"

using namespace renner;

namespace {
  WeylGroup group(Family f, int n) {
    return enumerate_group(build_root_datum(f, n));
  }

  // Brute-force class function check: sum over H of chi(h) chi'(h^-1).
  long inner(WeylGroup const& W, Subgroup const& H, CharacterTable const& T,
             std::size_t a, std::size_t b) {
    long s = 0;
    for (std::size_t h : H.elements) {
      s += T.value(a, h) * T.value(b, W.inv(h));
    }
    return s;
  }

  std::size_t hook_count(Partition const& p) {
    int const   k = std::accumulate(p.begin(), p.end(), 0);
    std::size_t f = 1;
    for (int m = 2; m <= k; ++m) {
      f *= static_cast<std::size_t>(m);
    }
    for (std::size_t r = 0; r < p.size(); ++r) {
      for (int c = 0; c < p[r]; ++c) {
        std::size_t below = 0;
        for (std::size_t q = r + 1; q < p.size() && p[q] > c; ++q) {
          ++below;
        }
        f /= static_cast<std::size_t>(p[r] - c - 1) + below + 1;
      }
    }
    return f;
  }
}  // namespace

TEST_CASE("character table of S3") {
  WeylGroup const W = group(Family::A, 2);
  Subgroup const  H = parabolic_subgroup(W, {0, 1});
  CharacterTable  T = character_table(W, H);
  REQUIRE(T.size() == 3);
  CHECK(T.values[0][0] == 1);
  CHECK(T.values[1][0] == 1);
  CHECK(T.values[2][0] == 2);
  // (2,1): 2 on the identity, 0 on transpositions, -1 on 3-cycles.
  std::size_t const t = W.generator(0);
  std::size_t const c = W.mul(W.generator(0), W.generator(1));
  CHECK(T.value(2, t) == 0);
  CHECK(T.value(2, c) == -1);
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) {
      CHECK(inner(W, H, T, a, b) == (a == b ? 6 : 0));
    }
  }
}

TEST_CASE("character tables of Weyl groups") {
  for (auto [f, n, count] : std::vector<std::tuple<Family, int, std::size_t>>{
           {Family::A, 1, 2}, {Family::A, 3, 5}, {Family::C, 2, 5},
           {Family::C, 3, 10}, {Family::B, 3, 10}, {Family::D, 4, 13}}) {
    WeylGroup const W = group(f, n);
    RootSubset      all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    Subgroup const H = parabolic_subgroup(W, all);
    CharacterTable T = character_table(W, H);
    CHECK(T.size() == count);
    long sq = 0;
    for (auto const& row : T.values) {
      sq += row[0] * row[0];
    }
    CHECK(sq == static_cast<long>(W.size()));
    for (std::size_t a = 0; a < T.size(); ++a) {
      CHECK(inner(W, H, T, a, a) == static_cast<long>(W.size()));
    }
  }
}

TEST_CASE("partitions and tableaux") {
  CHECK(partitions(4).size() == 5);
  CHECK(partitions(4).front() == Partition{4});
  CHECK(partitions(4).back() == Partition{1, 1, 1, 1});
  CHECK(partition_label(Partition{2, 1}) == "(2,1)");
  for (int k = 1; k <= 5; ++k) {
    std::size_t sum = 0;
    for (auto const& p : partitions(k)) {
      CHECK(standard_tableaux(p).size() == hook_count(p));
      sum += hook_count(p) * hook_count(p);
    }
    std::size_t fact = 1;
    for (int m = 2; m <= k; ++m) {
      fact *= static_cast<std::size_t>(m);
    }
    CHECK(sum == fact);
  }
}

TEST_CASE("matrix representations satisfy the Coxeter relations") {
  auto type_a = [](int k) {
    std::vector<std::vector<int>> m(static_cast<std::size_t>(k), std::vector<int>(k, 2));
    for (int i = 0; i < k; ++i) {
      m[i][i] = 1;
      if (i + 1 < k) {
        m[i][i + 1] = m[i + 1][i] = 3;
      }
    }
    return m;
  };
  for (int k = 2; k <= 5; ++k) {
    for (auto const& p : partitions(k)) {
      MatrixRep r = symmetric_group_irrep(p);
      CHECK(r.degree == hook_count(p));
      CHECK(satisfies_coxeter_relations(r, type_a(k - 1)));
    }
  }
  for (int k = 1; k <= 3; ++k) {
    auto m = type_a(k);
    if (k >= 2) {
      m[k - 2][k - 1] = m[k - 1][k - 2] = 4;
    }
    for (int a = 0; a <= k; ++a) {
      for (auto const& l : partitions(a)) {
        for (auto const& mu : partitions(k - a)) {
          MatrixRep r = hyperoctahedral_irrep(l, mu);
          std::size_t binom = 1;
          for (int q = 0; q < a; ++q) {
            binom = binom * static_cast<std::size_t>(k - q) / static_cast<std::size_t>(q + 1);
          }
          CHECK(r.degree == binom * hook_count(l) * hook_count(mu));
          CHECK(satisfies_coxeter_relations(r, m));
        }
      }
    }
  }
}

TEST_CASE("irreducibles of parabolic subgroups") {
  RennerMonoid R = build_monoid(Family::C, 3, {1, 2});
  CrossSectionLattice const& L = R.cross_section();
  ParabolicIrreps tri = irreps_of_parabolic(R.group(), L[3], true);
  REQUIRE(tri.has_matrices);
  CHECK(tri.labels == std::vector<std::string>{"(1,1,1)", "(3)", "(2,1)"});
  ParabolicIrreps full = irreps_of_parabolic(R.group(), L[4], true);
  CHECK(full.reps.size() == 10);
  for (std::size_t row = 0; row < full.reps.size(); ++row) {
    CHECK(full.reps[row].degree == static_cast<std::size_t>(full.table.values[row][0]));
  }
  ParabolicIrreps zero = irreps_of_parabolic(R.group(), L[0], true);
  CHECK(zero.labels == std::vector<std::string>{"trivial"});

  WeylGroup const D4 = group(Family::D, 4);
  CrossSectionEntry const e = complete_entry(D4, {}, {0, 1, 2, 3});
  ParabolicIrreps d = irreps_of_parabolic(D4, e);
  CHECK_FALSE(d.has_matrices);
  CHECK(d.labels.size() == 13);
  CHECK_THROWS_AS(irreps_of_parabolic(D4, e, true), Error);
}

TEST_CASE("induced characters on C3") {
  RennerMonoid R = build_monoid(Family::C, 3, {1, 2});
  MonoidAlgebra A(R);
  RepresentationTheory T(A, true);
  CrossSectionLattice const& L = R.cross_section();

  // sigma = (123)(465) on the triangle class.
  std::size_t const sigma =
      R.id_of(parse_element(R, "face=[1,2,3,4,5,6];images=[2,3,1,6,4,5]"));
  CHECK(T.chi_star(3, 0, sigma) == 2);
  CHECK(T.chi_star(3, 1, sigma) == 2);
  CHECK(T.chi_star(3, 2, sigma) == -2);

  std::size_t const one  = R.id_of(R.one());
  std::size_t const zero = R.id_of(R.zero());
  std::size_t       sq   = 0;
  std::set<std::vector<long>> seen;
  for (auto const& irr : T.irreducibles()) {
    CHECK(T.chi_star(irr.entry, irr.row, one)
          == static_cast<long>(L[irr.entry].d_e * irr.degree));
    if (!L[irr.entry].is_zero) {
      CHECK(T.chi_star(irr.entry, irr.row, zero) == 0);
    }
    sq += irr.induced_degree * irr.induced_degree;
    CHECK(seen.insert(T.character_vector(irr)).second);
  }
  CHECK(T.irreducibles().size() == 1 + 1 + 2 + 3 + 10);
  // Sum of squared degrees equals |R| for a semisimple algebra.
  CHECK(sq == R.size());

  for (auto const& irr : T.irreducibles()) {
    for (std::size_t s = 0; s < R.size(); s += 17) {
      CHECK(T.rho_star(irr, s).trace() == T.chi_star(irr.entry, irr.row, s));
    }
  }
}

TEST_CASE("rook monoid degrees") {
  RennerMonoid R = build_monoid(Family::A, 1, {});
  MonoidAlgebra A(R);
  RepresentationTheory T(A, true);
  std::vector<std::size_t> deg;
  for (auto const& irr : T.irreducibles()) {
    deg.push_back(irr.induced_degree);
  }
  CHECK(deg == std::vector<std::size_t>{1, 2, 1, 1});
  nlohmann::json j = irreducible_inventory(T);
  CHECK(j["sum_of_squares"] == 7);
  CHECK(j["monoid_order"] == 7);
}

TEST_CASE("rho* is multiplicative") {
  for (auto [f, n, J] : std::vector<std::tuple<Family, int, RootSubset>>{
           {Family::A, 1, {}}, {Family::A, 2, {1}}, {Family::C, 2, {1}}}) {
    RennerMonoid R = build_monoid(f, n, J);
    MonoidAlgebra A(R);
    RepresentationTheory T(A, true);
    RhoStarReport rep = verify_rho_star(T);
    CHECK(rep.pairs == R.size() * R.size());
    CHECK_FALSE(rep.sampled);
    // Dense cross-check of the block method.
    for (auto const& irr : T.irreducibles()) {
      for (std::size_t s = 0; s < R.size(); ++s) {
        for (std::size_t t = 0; t < R.size(); ++t) {
          CHECK(T.rho_star(irr, s) * T.rho_star(irr, t) == T.rho_star(irr, R.mul_id(s, t)));
        }
      }
    }
  }
  RennerMonoid R = build_monoid(Family::C, 3, {1, 2});
  MonoidAlgebra A(R);
  RepresentationTheory T(A, true);
  CHECK(verify_rho_star(T).pairs == 757 * 757);
}

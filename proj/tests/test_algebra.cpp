#include <algorithm>
#include <random>

#include "doctest.h"
#include "renner/algebra.hpp"
#include "renner/element_io.hpp"
#include "renner/error.hpp"

using namespace renner;

namespace {
  std::vector<VertexId> face(std::initializer_list<int> xs) {
    std::vector<VertexId> v;
    for (int x : xs) {
      v.push_back(static_cast<VertexId>(x - 1));
    }
    std::sort(v.begin(), v.end());
    return v;
  }

  AlgebraElement e_of(RennerMonoid const& R, FaceId K) {
    return AlgebraElement::basis(R.id_of(R.idempotent(K)));
  }
}  // namespace

TEST_CASE("algebra arithmetic") {
  RennerMonoid  R = build_monoid(Family::A, 2, {1});
  MonoidAlgebra A(R);
  for (std::size_t s = 0; s < R.size(); ++s) {
    AlgebraElement a = AlgebraElement::basis(s) * Rational(3, 2)
                       + AlgebraElement::basis((s * 7) % R.size());
    CHECK(A.multiply(a, A.one()) == a);
    CHECK(A.multiply(A.one(), a) == a);
    for (std::size_t t = 0; t < R.size(); ++t) {
      CHECK(A.multiply(AlgebraElement::basis(s), AlgebraElement::basis(t))
            == AlgebraElement::basis(R.mul_id(s, t)));
    }
  }
  FaceLattice const& F = R.faces();
  for (FaceId K : F.orbit(1)) {
    AlgebraElement x = e_of(R, K) - A.zero_element();
    CHECK(A.multiply(x, x) == x);
  }
  AlgebraElement a = AlgebraElement::basis(3) + AlgebraElement::basis(5);
  CHECK((a - a).is_zero());
  CHECK((a * Rational(0)).is_zero());
  CHECK(a.coefficient(3) == 1);
  CHECK(a.coefficient(4) == 0);
}

TEST_CASE("Solomon idempotents") {
  RennerMonoid       R = build_monoid(Family::C, 3, {1, 2});
  MonoidAlgebra      A(R);
  FaceLattice const& F = R.faces();

  CHECK(A.eta_face(F.empty_face()) == A.zero_element());
  FaceId v1 = *F.find(face({1}));
  CHECK(A.eta_face(v1) == e_of(R, v1) - A.zero_element());
  FaceId         tri = *F.find(face({1, 2, 3}));
  AlgebraElement want =
      e_of(R, tri)
      - (e_of(R, *F.find(face({1, 2}))) + e_of(R, *F.find(face({1, 3})))
         + e_of(R, *F.find(face({2, 3}))))
      + (e_of(R, v1) + e_of(R, *F.find(face({2}))) + e_of(R, *F.find(face({3}))))
      - A.zero_element();
  CHECK(A.eta_face(tri) == want);

  CHECK(A.eta_class(4) == A.eta_face(F.full_face()));
  CHECK(A.eta_class(0) == A.zero_element());
  AlgebraElement const& eta = A.eta_class(3);
  CHECK(A.multiply(eta, eta) == eta);

  IdempotentReport rep = verify_idempotent_system(A);
  CHECK(rep.face_pairs == 28 * 28);
  CHECK(rep.class_pairs == 25);
  CHECK(rep.partition_of_unity);
}

TEST_CASE("idempotent system on small contexts") {
  RennerMonoid  R1 = build_monoid(Family::A, 1, {});
  MonoidAlgebra A1(R1);
  CHECK(verify_idempotent_system(A1).face_pairs == 16);
  RennerMonoid  R3 = build_monoid(Family::A, 2, {1});
  MonoidAlgebra A3(R3);
  CHECK(verify_idempotent_system(A3).central_checks == 34 * 4);
}

TEST_CASE("ideal filters") {
  RennerMonoid  R = build_monoid(Family::C, 3, {1, 2});
  MonoidAlgebra A(R);
  CHECK(ideal_filter(A, 0).elements == std::vector<std::size_t>{R.id_of(R.zero())});
  CHECK(ideal_filter(A, 4).elements.size() == 757);
  IdealFilter edge = ideal_filter(A, 2);
  CHECK(edge.elements.size() == 325);
  CHECK(edge.dimension == 325);
}

TEST_CASE("sigma eta_e vanishes off the upper set of e") {
  for (auto [f, n, J] : std::vector<std::tuple<Family, int, RootSubset>>{
           {Family::A, 2, {1}}, {Family::C, 2, {1}}, {Family::C, 3, {1, 2}}}) {
    RennerMonoid               R = build_monoid(f, n, J);
    MonoidAlgebra              A(R);
    CrossSectionLattice const& L = R.cross_section();
    std::size_t                total = 0;
    for (std::size_t e = 0; e < L.size(); ++e) {
      total += R.class_ids(e).size();
      for (std::size_t g = 0; g < L.size(); ++g) {
        if (L.leq[e][g]) {
          continue;
        }
        for (std::size_t s : R.class_ids(g)) {
          CHECK(A.left_multiply(s, A.eta_class(e)).is_zero());
        }
      }
    }
    CHECK(total == R.size());
  }
}

TEST_CASE("psi") {
  RennerMonoid       R = build_monoid(Family::C, 3, {1, 2});
  MonoidAlgebra      A(R);
  WeylGroup const&   W = R.group();
  FaceLattice const& F = R.faces();

  SUBCASE("identity entry recovers the group algebra") {
    for (std::size_t w = 0; w < W.size(); ++w) {
      GroupAlgebraMatrix m = A.psi(4, AlgebraElement::basis(R.id_of(R.unit(w))));
      GroupAlgebraMatrix want(4, 1);
      want.add(0, 0, w, Rational(1));
      CHECK(m == want);
    }
  }
  SUBCASE("zero entry") {
    GroupAlgebraMatrix m = A.psi(0, A.zero_element());
    GroupAlgebraMatrix want(0, 1);
    want.add(0, 0, W.identity(), Rational(1));
    CHECK(m == want);
  }
  SUBCASE("psi_inverse") {
    CHECK(A.psi_inverse(2, GroupAlgebraMatrix(2, 12)).is_zero());
    FaceId const       L = F.standard_face(3);
    GroupAlgebraMatrix m(3, 8);
    m.add(F.orbit_position(L), F.orbit_position(L), W.identity(), Rational(1));
    CHECK(A.psi_inverse(3, m) == A.multiply(e_of(R, L), A.eta_class(3)));
    CHECK_THROWS_AS(A.psi_inverse(3, GroupAlgebraMatrix(3, 7)), Error);
  }
  SUBCASE("random round trips on the edge entry") {
    CrossSectionEntry const& e = R.cross_section()[2];
    std::mt19937             rng(7);
    for (int trial = 0; trial < 20; ++trial) {
      GroupAlgebraMatrix m(2, e.d_e);
      for (int k = 0; k < 6; ++k) {
        m.add(rng() % e.d_e, rng() % e.d_e, e.W_star.elements[rng() % e.W_star.order()],
              Rational(static_cast<int>(rng() % 7) - 3) / (1 + static_cast<int>(rng() % 4)));
      }
      AlgebraElement a = A.psi_inverse(2, m);
      CHECK(A.psi(2, a) == m);
      CHECK(A.psi_inverse(2, A.psi(2, a)) == a);
    }
  }
}

TEST_CASE("psi is an isomorphism on small contexts") {
  for (auto [f, n, J] : std::vector<std::tuple<Family, int, RootSubset>>{
           {Family::A, 1, {}}, {Family::A, 2, {1}}, {Family::C, 2, {1}}}) {
    RennerMonoid  R = build_monoid(f, n, J);
    MonoidAlgebra A(R);
    for (std::size_t e = 0; e < R.cross_section().size(); ++e) {
      PsiReport rep = verify_psi(A, e);
      std::size_t const m = R.class_ids(e).size();
      CHECK(rep.pairs == m * m);
      CHECK(rep.round_trips == 2 * m);
      CHECK_FALSE(rep.sampled);
    }
  }
}

TEST_CASE("JSON and element text") {
  RennerMonoid  R = build_monoid(Family::C, 3, {1, 2});
  MonoidAlgebra A(R);
  auto          j = to_json(A, A.eta_face(*R.faces().find(face({1}))));
  REQUIRE(j.size() == 2);
  CHECK(j[0]["element"] == "zero");
  CHECK(j[0]["numerator"] == "-1");
  CHECK(j[1]["element"] == "face=[1];images=[1]");
  CHECK(j[1]["denominator"] == "1");

  for (std::size_t id = 0; id < R.size(); ++id) {
    CHECK(parse_element(R, format_element(R, R.element(id))) == R.element(id));
  }
  RennerElement s = parse_element(R, "face=[1,2,3,4,5,6]; images=[2,3,1,6,4,5]");
  CHECK(R.domain(s) == R.faces().full_face());
  CHECK(parse_element(R, "zero").is_zero());
  CHECK_THROWS_AS(parse_element(R, "face=[1,6];images=[1,6]"), Error);
  CHECK_THROWS_AS(parse_element(R, "face=[1,2];images=[1,1]"), Error);
  CHECK_THROWS_AS(parse_element(R, "face=[1,2];images=[1,6]"), Error);
  CHECK_THROWS_AS(parse_element(R, "face=[1,2];images=[3,4,5]"), Error);
  CHECK_THROWS_AS(parse_element(R, "face=[9];images=[1]"), Error);
  CHECK_THROWS_AS(parse_element(R, "nonsense"), Error);
  try {
    parse_element(R, "face=[1,6];images=[1,6]");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::BadElement);
  }
}

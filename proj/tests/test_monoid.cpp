#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "renner/error.hpp"
#include "renner/monoid.hpp"

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

  // The unit of W(C3) cycling e1 -> e2 -> e3 -> e1.
  std::size_t cycle_123(WeylGroup const& W) {
    QMatrix m(3, 3);
    m(0, 1) = 1;
    m(1, 2) = 1;
    m(2, 0) = 1;
    return W.index_of(WeylElement(m));
  }

  std::vector<std::int64_t> one_based(std::vector<std::int64_t> v) {
    for (auto& x : v) {
      x = x < 0 ? 0 : x + 1;
    }
    return v;
  }
}  // namespace

TEST_CASE("monoid sizes") {
  CHECK(build_monoid(Family::A, 1, {}).size() == 7);
  CHECK(build_monoid(Family::A, 2, {1}).size() == 34);
  CHECK(build_monoid(Family::A, 3, {1, 2}).size() == 209);
  CHECK(build_monoid(Family::C, 2, {1}).size() == 57);
  RennerMonoid R = build_monoid(Family::C, 3, {1, 2});
  CHECK(R.size() == 757);
  std::vector<std::size_t> sizes;
  for (std::size_t e = 0; e < R.cross_section().size(); ++e) {
    sizes.push_back(R.class_ids(e).size());
  }
  CHECK(sizes == std::vector<std::size_t>{1, 36, 288, 384, 48});
  CHECK_THROWS_AS(build_monoid(Family::C, 3, {1, 2}, Bounds{100000, 100, 2048}),
                  Error);
}

TEST_CASE("elements of the octahedral monoid") {
  RennerMonoid       R = build_monoid(Family::C, 3, {1, 2});
  WeylGroup const&   W = R.group();
  FaceLattice const& F = R.faces();
  std::size_t const  w = cycle_123(W);

  SUBCASE("make_element") {
    CHECK(R.make_element(F.full_face(), W.identity()) == R.one());
    CHECK(R.make_element(F.empty_face(), w).is_zero());
    RennerElement s = R.unit(w);
    CHECK(R.domain(s) == F.full_face());
    CHECK(one_based(R.vertex_map(s)) == std::vector<std::int64_t>{2, 3, 1, 6, 4, 5});
  }
  SUBCASE("multiply") {
    RennerElement s = R.unit(w);
    CHECK(R.multiply(s, R.one()) == s);
    CHECK(R.multiply(R.one(), s) == s);
    CHECK(R.multiply(s, R.zero()).is_zero());
    for (FaceId a = 0; a < F.size(); ++a) {
      for (FaceId b = 0; b < F.size(); ++b) {
        CHECK(R.multiply(R.idempotent(a), R.idempotent(b))
              == R.idempotent(F.intersection(a, b)));
      }
    }
  }
  SUBCASE("inverse") {
    CHECK(R.inverse(R.one()) == R.one());
    for (FaceId K = 0; K < F.size(); ++K) {
      CHECK(R.inverse(R.idempotent(K)) == R.idempotent(K));
    }
    RennerElement si = R.inverse(R.unit(w));
    CHECK(one_based(R.vertex_map(si)) == std::vector<std::int64_t>{3, 1, 2, 5, 6, 4});
  }
  SUBCASE("classes") {
    CHECK(R.enumerate_class(4).size() == 48);
    CHECK(R.enumerate_class(3).size() == 384);
  }
  SUBCASE("transporters") {
    std::size_t const tri = 3;
    FaceId const      L   = F.standard_face(tri);
    auto [mu, mum]        = R.transporter(tri, L);
    CHECK(mu == R.idempotent(L));
    CHECK(mum == R.idempotent(L));
    FaceId const K = *F.find(face({4, 5, 6}));
    auto [muK, muKm] = R.transporter(tri, K);
    CHECK(R.domain(muK) == L);
    CHECK(R.range(muK) == K);
    CHECK(R.domain(muKm) == K);
    CHECK_THROWS_AS(R.transporter(tri, *F.find(face({1, 2}))), Error);
    for (std::size_t e = 1; e < R.cross_section().size(); ++e) {
      FaceId const Le = F.standard_face(e);
      for (FaceId J : F.orbit(e)) {
        auto [m, mm] = R.transporter(e, J);
        CHECK(R.multiply(mm, m) == R.idempotent(J));
        CHECK(R.multiply(m, mm) == R.idempotent(Le));
      }
    }
  }
  SUBCASE("p projection") {
    std::size_t const tri = 3;
    FaceId const      L   = F.standard_face(tri);
    CHECK(R.p_projection(tri, R.idempotent(L)) == R.idempotent(L));
    for (std::size_t u = 0; u < W.size(); ++u) {
      CHECK(R.p_projection(4, R.unit(u)) == R.unit(u));
    }
    FaceId const  K     = *F.find(face({4, 5, 6}));
    RennerElement sigma = R.multiply(R.idempotent(K), R.unit(w));
    RennerElement p     = R.p_projection(tri, sigma);
    // A 3-cycle on {1,2,3}.  With the transporter 1->4, 2->5, 3->6 and maps
    // composed left to right it is 1->3->2->1, conjugate to (123) in S3.
    auto pm = one_based(R.vertex_map(p));
    CHECK((pm == std::vector<std::int64_t>{2, 3, 1, 0, 0, 0}
           || pm == std::vector<std::int64_t>{3, 1, 2, 0, 0, 0}));
    QMatrix m(3, 3);
    m(0, 2) = -1;
    m(1, 1) = -1;
    m(2, 0) = -1;
    std::size_t const x   = W.index_of(WeylElement(m));
    RennerElement     muK = R.make_element(L, x);
    RennerElement     muKm = R.make_element(K, W.inv(x));
    CHECK(R.range(muK) == K);
    CHECK(one_based(R.vertex_map(R.multiply(R.multiply(muK, sigma), muKm)))
          == std::vector<std::int64_t>{3, 1, 2, 0, 0, 0});
    CHECK(one_based(R.vertex_map(R.p_projection(
              tri, R.multiply(R.idempotent(L), R.unit(w)))))
          == std::vector<std::int64_t>{2, 3, 1, 0, 0, 0});
    CHECK_THROWS_AS(R.p_projection(2, sigma), Error);

    std::size_t u = R.group_element_of(tri, p);
    CHECK(R.cross_section()[tri].W_star.contains(u));
    CHECK(R.make_element(L, u) == p);
    CHECK(R.group_element_of(tri, R.idempotent(L)) == W.identity());
    CHECK_THROWS_AS(R.group_element_of(tri, sigma), Error);
  }
  SUBCASE("reconstruction from p") {
    for (std::size_t e = 1; e < R.cross_section().size(); ++e) {
      for (std::size_t id : R.class_ids(e)) {
        RennerElement s = R.element(id);
        RennerElement p = R.p_projection(e, s);
        CHECK(R.domain(p) == F.standard_face(e));
        CHECK(R.range(p) == F.standard_face(e));
        RennerElement back = R.multiply(
            R.multiply(R.transporter(e, R.domain(s)).second, p),
            R.transporter(e, R.range(s)).first);
        CHECK(back == s);
      }
    }
  }
}

TEST_CASE("rook-type group elements") {
  RennerMonoid R = build_monoid(Family::A, 3, {1, 2});
  for (std::size_t e = 1; e < R.cross_section().size(); ++e) {
    FaceId L = R.faces().standard_face(e);
    for (std::size_t id : R.class_ids(e)) {
      RennerElement p = R.p_projection(e, R.element(id));
      std::size_t   u = R.group_element_of(e, p);
      // u restricted to L agrees with p as a vertex map.
      auto pm = R.vertex_map(p);
      for (VertexId v : R.faces().face(L).vertices) {
        CHECK(pm[v] == R.faces().vertex_image(u, v));
      }
    }
  }
}

TEST_CASE("monoid invariants") {
  for (auto [f, n, J] : std::vector<std::tuple<Family, int, RootSubset>>{
           {Family::A, 1, {}}, {Family::A, 2, {1}}, {Family::C, 2, {1}},
           {Family::A, 3, {1, 2}}, {Family::B, 2, {}}}) {
    RennerMonoid       R = build_monoid(f, n, J);
    FaceLattice const& F = R.faces();
    CAPTURE(R.group().datum().name());
    std::size_t const N = R.size();
    REQUIRE(R.has_table());

    // |WeW| = d_e^2 |W*(e)|.
    std::size_t total = 1;
    for (std::size_t e = 1; e < R.cross_section().size(); ++e) {
      auto const& ent = R.cross_section()[e];
      CHECK(R.class_ids(e).size() == ent.d_e * ent.d_e * ent.W_star.order());
      total += R.class_ids(e).size();
    }
    CHECK(total == N);

    // Idempotents are exactly the e_K, ordered as the faces.
    std::set<std::size_t> idem;
    for (std::size_t a = 0; a < N; ++a) {
      if (R.mul_id(a, a) == a) {
        idem.insert(a);
      }
    }
    std::set<std::size_t> faces;
    for (FaceId K = 0; K < F.size(); ++K) {
      faces.insert(R.id_of(R.idempotent(K)));
    }
    CHECK(idem == faces);
    for (FaceId a = 0; a < F.size(); ++a) {
      for (FaceId b = 0; b < F.size(); ++b) {
        RennerElement ea = R.idempotent(a), eb = R.idempotent(b);
        bool below = R.multiply(ea, eb) == eb && R.multiply(eb, ea) == eb;
        CHECK(below == F.contains(a, b));
      }
    }

    // e_K w idempotent implies it equals e_K.
    for (FaceId K = 0; K < F.size(); ++K) {
      for (std::size_t w = 0; w < R.group().size(); ++w) {
        RennerElement s = R.multiply(R.idempotent(K), R.unit(w));
        if (R.multiply(s, s) == s) {
          CHECK(s == R.idempotent(K));
        }
      }
    }

    // Distinct f, f' in one orbit: ff' lies strictly below both.
    for (std::size_t e = 1; e < R.cross_section().size(); ++e) {
      for (FaceId a : F.orbit(e)) {
        for (FaceId b : F.orbit(e)) {
          if (a != b) {
            FaceId m = F.intersection(a, b);
            CHECK(m != a);
            CHECK(m != b);
          }
        }
      }
    }

    // Associativity, and inverses are the unique generalized inverses.
    for (std::size_t a = 0; a < N; ++a) {
      std::size_t const ai = R.id_of(R.inverse(R.element(a)));
      CHECK(R.domain(R.element(ai)) == R.range(R.element(a)));
      std::size_t count = 0;
      for (std::size_t b = 0; b < N; ++b) {
        if (R.mul_id(R.mul_id(a, b), a) == a && R.mul_id(R.mul_id(b, a), b) == b) {
          ++count;
          CHECK(b == ai);
        }
      }
      CHECK(count == 1);
    }
    for (std::size_t a = 0; a < N; a += 3) {
      for (std::size_t b = 0; b < N; ++b) {
        for (std::size_t c = 0; c < N; c += 5) {
          CHECK(R.mul_id(R.mul_id(a, b), c) == R.mul_id(a, R.mul_id(b, c)));
        }
      }
    }

    // Products compose vertex maps.
    for (std::size_t a = 0; a < N; ++a) {
      auto ma = R.vertex_map(R.element(a));
      for (std::size_t b = 0; b < N; ++b) {
        auto                      mb = R.vertex_map(R.element(b));
        std::vector<std::int64_t> comp(ma.size(), -1);
        for (std::size_t v = 0; v < ma.size(); ++v) {
          if (ma[v] >= 0) {
            comp[v] = mb[static_cast<std::size_t>(ma[v])];
          }
        }
        CHECK(R.vertex_map(R.element(R.mul_id(a, b))) == comp);
      }
    }
    CHECK(vertex_map_faithful(R));
  }
}

#include <algorithm>
#include <deque>
#include <set>

#include "doctest.h"
#include "renner/error.hpp"
#include "renner/weyl.hpp"

using namespace renner;

namespace {
  QVector vec(std::initializer_list<int> xs) {
    QVector v;
    for (int x : xs) {
      v.emplace_back(x);
    }
    return v;
  }

  bool has_root(RootDatum const& d, QVector const& v) {
    return std::find(d.roots.begin(), d.roots.end(), v) != d.roots.end();
  }

  std::size_t power_order(WeylGroup const& W, std::size_t x) {
    return W.element_order(x);
  }
}  // namespace

TEST_CASE("root data have the standard shape") {
  SUBCASE("C3 contains the long and short roots") {
    RootDatum d = build_root_datum(Family::C, 3);
    CHECK(d.roots.size() == 18);
    for (int i = 0; i < 3; ++i) {
      QVector v(3);
      v[i] = 2;
      CHECK(has_root(d, v));
      v[i] = -2;
      CHECK(has_root(d, v));
      for (int j = i + 1; j < 3; ++j) {
        for (int si : {-1, 1}) {
          for (int sj : {-1, 1}) {
            QVector w(3);
            w[i] = si;
            w[j] = sj;
            CHECK(has_root(d, w));
          }
        }
      }
    }
  }
  SUBCASE("A1") {
    RootDatum d = build_root_datum(Family::A, 1);
    CHECK(d.simple_roots.size() == 1);
    CHECK(d.cartan == std::vector<std::vector<int>>{{2}});
    CHECK(d.ambient_dim == 2);
  }
  SUBCASE("B2 orientation") {
    RootDatum d = build_root_datum(Family::B, 2);
    CHECK(d.cartan == std::vector<std::vector<int>>{{2, -2}, {-1, 2}});
  }
  SUBCASE("unsupported families and ranks") {
    CHECK_THROWS_AS(build_root_datum("E", 6), Error);
    CHECK_THROWS_AS(build_root_datum(Family::D, 3), Error);
    CHECK_THROWS_AS(build_root_datum(Family::D, 2), Error);
    CHECK_THROWS_AS(build_root_datum(Family::A, 0), Error);
    try {
      build_root_datum("G", 2);
    } catch (Error const& e) {
      CHECK(e.code() == ErrorCode::UnsupportedType);
    }
  }
}

TEST_CASE("root datum invariants hold for every supported small type") {
  std::vector<std::pair<Family, int>> types = {
      {Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::B, 2},
      {Family::B, 3}, {Family::C, 2}, {Family::C, 3}, {Family::D, 4},
      {Family::D, 5}};
  for (auto [f, n] : types) {
    RootDatum d = build_root_datum(f, n);
    CAPTURE(d.name());
    for (int i = 0; i < n; ++i) {
      CHECK(d.cartan[i][i] == 2);
      for (int j = 0; j < n; ++j) {
        if (i != j) {
          CHECK(d.cartan[i][j] <= 0);
        }
        CHECK(d.coroot_pairing(d.fundamental_weights[i], j) == (i == j ? 1 : 0));
      }
    }
    RootSubset all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      all[i] = i;
    }
    CHECK(d.components(all).size() == 1);
  }
}

TEST_CASE("simple reflections") {
  SUBCASE("A1 swaps the coordinates") {
    RootDatum   d = build_root_datum(Family::A, 1);
    WeylElement s = simple_reflection(d, 0);
    CHECK(s.act(vec({1, 0})) == vec({0, 1}));
    CHECK(s.act(vec({0, 1})) == vec({1, 0}));
  }
  SUBCASE("C3 last reflection negates the last coordinate") {
    RootDatum   d = build_root_datum(Family::C, 3);
    WeylElement s = simple_reflection(d, 2);
    CHECK(s.act(vec({0, 0, 1})) == vec({0, 0, -1}));
    CHECK(s.act(vec({1, 0, 0})) == vec({1, 0, 0}));
    CHECK(s.act(vec({0, 1, 0})) == vec({0, 1, 0}));
  }
  SUBCASE("involutions") {
    for (auto [f, n] : std::vector<std::pair<Family, int>>{
             {Family::A, 3}, {Family::B, 3}, {Family::C, 3}, {Family::D, 4}}) {
      RootDatum d = build_root_datum(f, n);
      for (int i = 0; i < n; ++i) {
        WeylElement s = simple_reflection(d, i);
        CHECK((s * s).matrix() == QMatrix::identity(d.ambient_dim));
      }
    }
  }
  SUBCASE("index out of range") {
    RootDatum d = build_root_datum(Family::A, 2);
    CHECK_THROWS_AS(simple_reflection(d, 2), Error);
    CHECK_THROWS_AS(simple_reflection(d, -1), Error);
  }
}

TEST_CASE("group enumeration") {
  CHECK(enumerate_group(build_root_datum(Family::A, 2)).size() == 6);
  CHECK(enumerate_group(build_root_datum(Family::B, 2)).size() == 8);
  WeylGroup W = enumerate_group(build_root_datum(Family::C, 3));
  CHECK(W.size() == 48);
  CHECK(W.element(0).matrix() == QMatrix::identity(3));

  // Independent count: orbit of a regular vector under the generators.
  std::set<QVector>   orbit{vec({3, 2, 1})};
  std::deque<QVector> todo{vec({3, 2, 1})};
  while (!todo.empty()) {
    QVector v = todo.front();
    todo.pop_front();
    for (int i = 0; i < 3; ++i) {
      QVector w = simple_reflection(W.datum(), i).act(v);
      if (orbit.insert(w).second) {
        todo.push_back(w);
      }
    }
  }
  CHECK(orbit.size() == 48);

  CHECK_THROWS_AS(enumerate_group(build_root_datum(Family::C, 3), 10), Error);
  CHECK(weyl_group_order(Family::D, 4) == 192);
  CHECK(enumerate_group(build_root_datum(Family::D, 4)).size() == 192);
}

TEST_CASE("element to root permutation is injective and braid relations hold") {
  for (auto [f, n] : std::vector<std::pair<Family, int>>{
           {Family::A, 3}, {Family::B, 3}, {Family::C, 3}, {Family::D, 4}}) {
    WeylGroup W = enumerate_group(build_root_datum(f, n));
    std::set<std::vector<std::uint16_t>> perms;
    for (std::size_t a = 0; a < W.size(); ++a) {
      perms.insert(W.root_permutation(a));
    }
    CHECK(perms.size() == W.size());
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        std::size_t x = W.mul(W.generator(i), W.generator(j));
        CHECK(power_order(W, x) == static_cast<std::size_t>(W.datum().coxeter_m(i, j)));
      }
    }
  }
}

TEST_CASE("parabolic subgroups") {
  WeylGroup W = enumerate_group(build_root_datum(Family::C, 3));
  CHECK(parabolic_subgroup(W, {}).order() == 1);
  CHECK(parabolic_subgroup(W, {0, 1}).order() == 6);
  CHECK(parabolic_subgroup(W, {1, 2}).order() == 8);
  Subgroup H = parabolic_subgroup(W, {0, 2});
  CHECK(H.order() == 4);
  CHECK(W.size() % H.order() == 0);
  for (std::size_t a : H.elements) {
    CHECK(H.contains(W.inv(a)));
    for (std::size_t b : H.elements) {
      CHECK(H.contains(W.mul(a, b)));
    }
  }
}

TEST_CASE("minimal coset representatives") {
  SUBCASE("trivial subgroup") {
    WeylGroup W = enumerate_group(build_root_datum(Family::A, 2));
    Subgroup  H = parabolic_subgroup(W, {});
    for (std::size_t w = 0; w < W.size(); ++w) {
      CHECK(min_coset_rep(W, H, w) == w);
    }
  }
  SUBCASE("H = W gives one representative, the identity") {
    WeylGroup W = enumerate_group(build_root_datum(Family::B, 2));
    Subgroup  H = parabolic_subgroup(W, {0, 1});
    for (std::size_t w = 0; w < W.size(); ++w) {
      CHECK(min_coset_rep(W, H, w) == W.identity());
    }
  }
  SUBCASE("A1: identity precedes s1") {
    // Flattened: e = (1,0,0,1), s1 = (0,1,1,0); larger leading entry first.
    WeylGroup W = enumerate_group(build_root_datum(Family::A, 1));
    Subgroup  H = parabolic_subgroup(W, {0});
    CHECK(min_coset_rep(W, H, W.generator(0)) == W.identity());
    CHECK(W.element(W.identity()) < W.element(W.generator(0)));
  }
  SUBCASE("constant on cosets and idempotent") {
    WeylGroup W = enumerate_group(build_root_datum(Family::C, 3));
    for (RootSubset X : std::vector<RootSubset>{{0}, {2}, {0, 2}, {1, 2}}) {
      Subgroup H = parabolic_subgroup(W, X);
      for (std::size_t w = 0; w < W.size(); ++w) {
        std::size_t r = min_coset_rep(W, H, w);
        CHECK(min_coset_rep(W, H, r) == r);
        for (std::size_t h : H.elements) {
          CHECK(min_coset_rep(W, H, W.mul(h, w)) == r);
        }
      }
    }
  }
}

TEST_CASE("conjugacy classes") {
  SUBCASE("trivial group") {
    WeylGroup W = enumerate_group(build_root_datum(Family::A, 2));
    CHECK(conjugacy_classes(W, parabolic_subgroup(W, {})).size() == 1);
  }
  SUBCASE("S3") {
    WeylGroup W   = enumerate_group(build_root_datum(Family::A, 2));
    auto      cls = conjugacy_classes(W, parabolic_subgroup(W, {0, 1}));
    REQUIRE(cls.size() == 3);
    CHECK(cls[0] == std::vector<std::size_t>{W.identity()});
    std::multiset<std::size_t> sizes;
    for (auto const& c : cls) {
      sizes.insert(c.size());
    }
    CHECK(sizes == std::multiset<std::size_t>{1, 2, 3});
  }
  SUBCASE("W(B2)") {
    WeylGroup   W   = enumerate_group(build_root_datum(Family::B, 2));
    auto        cls = conjugacy_classes(W, parabolic_subgroup(W, {0, 1}));
    std::size_t total = 0;
    for (auto const& c : cls) {
      total += c.size();
    }
    CHECK(cls.size() == 5);
    CHECK(total == 8);
  }
}

#include "renner/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "renner/algebra.hpp"
#include "renner/element_io.hpp"
#include "renner/error.hpp"
#include "renner/rational.hpp"
#include "renner/rep.hpp"

namespace renner {

  // ---------------------------------------------------------------------
  // Partial injections.

  PartialInjection PartialInjection::then(PartialInjection const& b) const {
    PartialInjection out;
    out.image.assign(image.size(), -1);
    for (std::size_t i = 0; i < image.size(); ++i) {
      if (image[i] >= 0) {
        out.image[i] = b.image[static_cast<std::size_t>(image[i])];
      }
    }
    return out;
  }

  bool PartialInjection::is_injective() const {
    std::set<int> seen;
    for (int x : image) {
      if (x >= 0 && !seen.insert(x).second) {
        return false;
      }
    }
    return true;
  }

  std::size_t PartialInjection::rank() const {
    return static_cast<std::size_t>(std::count_if(image.begin(), image.end(),
                                                  [](int x) { return x >= 0; }));
  }

  std::size_t RookMonoid::index_of(PartialInjection const& p) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), p);
    if (it == elements.end() || *it != p) {
      throw Error(ErrorCode::MismatchWitness, "not a partial injection of the right size");
    }
    return static_cast<std::size_t>(it - elements.begin());
  }

  RookMonoid rook_monoid(int n) {
    if (n < 0 || n > 5) {
      throw Error(ErrorCode::IndexOutOfRange, "rook monoids are built for n <= 5");
    }
    RookMonoid M;
    M.n = n;
    // Every map {0..n-1} -> {-1, 0..n-1}, keeping the injective ones.
    std::size_t total = 1;
    for (int k = 0; k < n; ++k) {
      total *= static_cast<std::size_t>(n + 1);
    }
    for (std::size_t code = 0; code < total; ++code) {
      PartialInjection p;
      std::size_t      c = code;
      for (int k = 0; k < n; ++k) {
        p.image.push_back(static_cast<int>(c % static_cast<std::size_t>(n + 1)) - 1);
        c /= static_cast<std::size_t>(n + 1);
      }
      if (p.is_injective()) {
        M.elements.push_back(std::move(p));
      }
    }
    std::sort(M.elements.begin(), M.elements.end());
    std::size_t const size = M.elements.size();
    M.table.resize(size * size);
    for (std::size_t a = 0; a < size; ++a) {
      for (std::size_t b = 0; b < size; ++b) {
        M.table[a * size + b] =
            static_cast<std::uint32_t>(M.index_of(M.elements[a].then(M.elements[b])));
      }
    }
    return M;
  }

  RookCertificate match_rook(RennerMonoid const& R) {
    RootDatum const&          d = R.group().datum();
    CrossSectionLattice const& L = R.cross_section();
    RootSubset                tail(static_cast<std::size_t>(std::max(d.rank - 1, 0)));
    std::iota(tail.begin(), tail.end(), 1);
    if (d.family != Family::A || L.J != tail || d.rank + 1 > 4) {
      throw Error(ErrorCode::MismatchWitness,
                  "match_rook needs type A_{n-1} with J = {2..n-1} and n <= 4");
    }
    int const        n    = d.rank + 1;
    RookMonoid const rook = rook_monoid(n);
    if (R.faces().vertices().size() != static_cast<std::size_t>(n)) {
      throw Error(ErrorCode::MismatchWitness, "the polytope is not a simplex on n vertices");
    }
    if (rook.size() != R.size()) {
      throw Error(ErrorCode::MismatchWitness,
                  "|R| = " + std::to_string(R.size()) + " but the rook monoid has "
                      + std::to_string(rook.size()) + " elements");
    }
    RookCertificate cert;
    cert.n = n;
    std::vector<bool> hit(rook.size(), false);
    for (std::size_t s = 0; s < R.size(); ++s) {
      PartialInjection p;
      for (std::int64_t x : R.vertex_map(R.element(s))) {
        p.image.push_back(static_cast<int>(x));
      }
      std::size_t const k = rook.index_of(p);
      if (hit[k]) {
        throw Error(ErrorCode::MismatchWitness,
                    "two elements act alike on vertices: " + format_element(R, R.element(s)));
      }
      hit[k] = true;
      cert.bijection.push_back(k);
    }
    for (std::size_t s = 0; s < R.size(); ++s) {
      for (std::size_t t = 0; t < R.size(); ++t) {
        if (cert.bijection[R.mul_id(s, t)]
            != rook.mul(cert.bijection[s], cert.bijection[t])) {
          throw Error(ErrorCode::MismatchWitness,
                      "products disagree at " + format_element(R, R.element(s)) + " * "
                          + format_element(R, R.element(t)));
        }
        ++cert.products;
      }
      cert.idempotents += R.mul_id(s, s) == s;
    }
    std::size_t rook_idem = 0;
    for (std::size_t a = 0; a < rook.size(); ++a) {
      rook_idem += rook.mul(a, a) == a;
    }
    if (cert.idempotents != rook_idem || rook_idem != (std::size_t{1} << n)) {
      throw Error(ErrorCode::MismatchWitness, "idempotent counts differ");
    }
    return cert;
  }

  // ---------------------------------------------------------------------
  // Moebius functions and the Euler relation.

  std::vector<std::vector<std::int64_t>> mobius_recursive(
      std::vector<std::vector<bool>> const& leq) {
    std::size_t const n = leq.size();
    // A linear extension: fewer elements below comes first.
    std::vector<std::size_t> below(n, 0), order(n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        below[y] += leq[x][y];
      }
    }
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
    std::vector<std::vector<std::int64_t>> mu(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y : order) {
        if (!leq[x][y]) {
          continue;
        }
        if (x == y) {
          mu[x][y] = 1;
          continue;
        }
        std::int64_t s = 0;
        for (std::size_t z = 0; z < n; ++z) {
          if (z != y && leq[x][z] && leq[z][y]) {
            s += mu[x][z];
          }
        }
        mu[x][y] = -s;
      }
    }
    return mu;
  }

  namespace {
    std::vector<std::vector<bool>> inclusion_order(FaceLattice const& F) {
      std::size_t const              n = F.size();
      std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
      for (std::size_t a = 0; a < n; ++a) {
        auto const& va = F.face(static_cast<FaceId>(a)).vertices;
        for (std::size_t b = 0; b < n; ++b) {
          auto const& vb = F.face(static_cast<FaceId>(b)).vertices;
          leq[a][b]      = std::includes(vb.begin(), vb.end(), va.begin(), va.end());
        }
      }
      return leq;
    }

    std::string face_text(FaceLattice const& F, FaceId f) {
      std::string s = "{";
      for (VertexId v : F.face(f).vertices) {
        s += (s.size() > 1 ? "," : "") + std::to_string(v + 1);
      }
      return s + "}";
    }
  }  // namespace

  std::size_t verify_mobius(FaceLattice const& F) {
    auto const        leq   = inclusion_order(F);
    auto const        mu    = mobius_recursive(leq);
    std::size_t       pairs = 0;
    for (FaceId J = 0; J < F.size(); ++J) {
      for (FaceId K = 0; K < F.size(); ++K) {
        if (!leq[J][K]) {
          continue;
        }
        if (mu[J][K] != F.mobius(J, K)) {
          throw Error(ErrorCode::MismatchWitness,
                      "mobius" + face_text(F, J) + face_text(F, K) + " = "
                          + std::to_string(mu[J][K]) + " but the closed form gives "
                          + std::to_string(F.mobius(J, K)));
        }
        ++pairs;
      }
    }
    return pairs;
  }

  std::size_t verify_euler_relation(FaceLattice const& F) {
    auto const  leq   = inclusion_order(F);
    std::size_t pairs = 0;
    for (FaceId X = 0; X < F.size(); ++X) {
      for (FaceId K = 0; K < F.size(); ++K) {
        if (X == K || !leq[X][K]) {
          continue;
        }
        long s = 0;
        for (FaceId L = 0; L < F.size(); ++L) {
          if (leq[X][L] && leq[L][K]) {
            s += (F.dim(L) % 2 == 0) ? 1 : -1;
          }
        }
        if (s != 0) {
          throw Error(ErrorCode::MismatchWitness,
                      "Euler sum over " + face_text(F, X) + " .. " + face_text(F, K)
                          + " is " + std::to_string(s));
        }
        ++pairs;
      }
    }
    return pairs;
  }

  // ---------------------------------------------------------------------
  // Exact rank of sparse rational rows.

  namespace {
    using SparseRow = std::vector<std::pair<std::uint32_t, Rational>>;

    //! Incremental echelon basis; rows are kept with a leading 1.
    class EchelonBasis {
     public:
      //! True if the row was independent of the rows added so far.
      bool add(SparseRow row) {
        while (!row.empty()) {
          auto it = _rows.find(row.front().first);
          if (it == _rows.end()) {
            Rational const lead = row.front().second;
            for (auto& [c, q] : row) {
              q /= lead;
            }
            _rows.emplace(row.front().first, std::move(row));
            return true;
          }
          row = subtract(row, it->second, row.front().second);
        }
        return false;
      }
      std::size_t rank() const noexcept {
        return _rows.size();
      }

     private:
      static SparseRow subtract(SparseRow const& a, SparseRow const& b, Rational const& f) {
        SparseRow   out;
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
          if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
          } else if (i == a.size() || b[j].first < a[i].first) {
            Rational q = -f * b[j].second;
            out.emplace_back(b[j].first, q);
            ++j;
          } else {
            Rational q = a[i].second - f * b[j].second;
            if (q != 0) {
              out.emplace_back(a[i].first, q);
            }
            ++i;
            ++j;
          }
        }
        return out;
      }

      std::map<std::uint32_t, SparseRow> _rows;
    };

    SparseRow to_row(std::map<std::uint32_t, Rational> const& m) {
      SparseRow r;
      for (auto const& [c, q] : m) {
        if (q != 0) {
          r.emplace_back(c, q);
        }
      }
      return r;
    }
  }  // namespace

  std::size_t center_dimension(RennerMonoid const& R, bool all_elements) {
    std::size_t const        n = R.size();
    std::vector<std::size_t> gens;
    if (all_elements) {
      gens.resize(n);
      std::iota(gens.begin(), gens.end(), 0);
    } else {
      WeylGroup const& W = R.group();
      for (int i = 0; i < W.datum().rank; ++i) {
        gens.push_back(R.id_of(R.unit(W.generator(i))));
      }
      FaceLattice const& F = R.faces();
      for (std::size_t e = 0; e < R.cross_section().size(); ++e) {
        gens.push_back(R.id_of(R.idempotent(F.standard_face(e))));
      }
    }
    EchelonBasis basis;
    for (std::size_t s : gens) {
      // Coefficient of rho in x s - s x, as a linear form in x.
      std::vector<std::map<std::uint32_t, Rational>> eq(n);
      for (std::size_t t = 0; t < n; ++t) {
        eq[R.mul_id(t, s)][static_cast<std::uint32_t>(t)] += 1;
        eq[R.mul_id(s, t)][static_cast<std::uint32_t>(t)] -= 1;
      }
      for (auto const& m : eq) {
        basis.add(to_row(m));
      }
    }
    return n - basis.rank();
  }

  std::size_t block_dimension(MonoidAlgebra const& A, std::size_t entry) {
    EchelonBasis basis;
    for (std::size_t s = 0; s < A.dim(); ++s) {
      AlgebraElement const v = A.left_multiply(s, A.eta_class(entry));
      SparseRow            row;
      for (auto const& [id, q] : v.terms()) {
        row.emplace_back(id, q);
      }
      basis.add(std::move(row));
    }
    return basis.rank();
  }

  // ---------------------------------------------------------------------
  // The property suite.

  namespace {
    struct Suite {
      SuiteReport report;

      void run(std::string const& check, std::string const& citation,
               std::function<std::string()> const& body) {
        nlohmann::json item = {{"check", check}, {"citation", citation}};
        try {
          std::string detail = body();
          item["status"]     = "pass";
          if (!detail.empty()) {
            item["detail"] = detail;
          }
        } catch (std::exception const& ex) {
          item["status"]  = "fail";
          item["witness"] = ex.what();
          report.passed   = false;
        }
        report.checks.push_back(std::move(item));
      }
    };

    [[noreturn]] void fail(std::string const& what) {
      throw Error(ErrorCode::PropertyViolation, what);
    }

    bool is_idempotent(RennerMonoid const& R, std::size_t s) {
      return R.mul_id(s, s) == s;
    }

    // f <= g in the idempotent order.
    bool below(RennerMonoid const& R, std::size_t f, std::size_t g) {
      return R.mul_id(f, g) == f && R.mul_id(g, f) == f;
    }
  }  // namespace

  SuiteReport exhaustive_property_suite(RennerMonoid const& R, SuiteOptions const& opts) {
    Suite                      suite;
    WeylGroup const&           W = R.group();
    FaceLattice const&         F = R.faces();
    CrossSectionLattice const& L = R.cross_section();
    std::size_t const          n = R.size();
    bool const                 small = n <= opts.exhaustive_bound;
    std::mt19937_64            rng(sampling_seed());
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::string const mode = small ? "exhaustive" : "sampled";

    suite.run("euler_relation", "faces of P: alternating sum over every interval vanishes",
              [&] { return std::to_string(verify_euler_relation(F)) + " intervals"; });
    suite.run("mobius_closed_form",
              "faces of P: Moebius function equals (-1)^(dim K - dim J)",
              [&] { return std::to_string(verify_mobius(F)) + " pairs"; });

    suite.run("face_idempotents_order",
              "K in K' iff e_K e_K' = e_K; e_K e_K' = e_(K meet K')", [&] {
                for (FaceId K = 0; K < F.size(); ++K) {
                  auto const& vk = F.face(K).vertices;
                  std::size_t const eK = R.id_of(R.idempotent(K));
                  for (FaceId K2 = 0; K2 < F.size(); ++K2) {
                    auto const& v2  = F.face(K2).vertices;
                    std::size_t const eK2 = R.id_of(R.idempotent(K2));
                    bool const  sub = std::includes(v2.begin(), v2.end(), vk.begin(), vk.end());
                    if (sub != (R.mul_id(eK, eK2) == eK)) {
                      fail("order mismatch at " + face_text(F, K) + face_text(F, K2));
                    }
                    // The product acts as the identity on the common vertices.
                    auto const m = R.vertex_map(R.element(R.mul_id(eK, eK2)));
                    for (std::size_t v = 0; v < m.size(); ++v) {
                      bool const in_both =
                          std::binary_search(vk.begin(), vk.end(), static_cast<VertexId>(v))
                          && std::binary_search(v2.begin(), v2.end(), static_cast<VertexId>(v));
                      if (m[v] != (in_both ? static_cast<std::int64_t>(v) : -1)) {
                        fail("e_K e_K' is not the meet at " + face_text(F, K)
                             + face_text(F, K2));
                      }
                    }
                  }
                }
                return std::string();
              });

    suite.run("class_sizes", "|WeW| = d_e^2 |W*(e)|, d_e = |W|/|W(e)|, sum + 1 = |R|", [&] {
      std::size_t total = 1;
      for (std::size_t e = 1; e < L.size(); ++e) {
        std::size_t const want = L[e].d_e * L[e].d_e * L[e].W_star.order();
        if (R.class_ids(e).size() != want || F.orbit(e).size() != L[e].d_e
            || W.size() != L[e].d_e * L[e].W_e.order()) {
          fail("size identity fails for entry " + std::to_string(e));
        }
        total += want;
      }
      if (total != n) {
        fail("sum of class sizes " + std::to_string(total) + " != |R|");
      }
      return std::string();
    });

    suite.run("associativity", "R is a monoid", [&] {
      std::size_t const trials = small && n * n * n <= opts.sample_pairs * 10
                                     ? n * n * n
                                     : opts.sample_pairs;
      for (std::size_t k = 0; k < trials; ++k) {
        std::size_t a, b, c;
        if (trials == n * n * n) {
          a = k / (n * n);
          b = (k / n) % n;
          c = k % n;
        } else {
          a = pick(rng);
          b = pick(rng);
          c = pick(rng);
        }
        if (R.mul_id(R.mul_id(a, b), c) != R.mul_id(a, R.mul_id(b, c))) {
          fail("(ab)c != a(bc) for " + format_element(R, R.element(a)) + ", "
               + format_element(R, R.element(b)) + ", " + format_element(R, R.element(c)));
        }
      }
      return std::to_string(trials) + " triples";
    });

    suite.run("inverse_monoid", "each sigma has a unique tau with sigma tau sigma = sigma, "
                                "tau sigma tau = tau", [&] {
      for (std::size_t s = 0; s < n; ++s) {
        std::size_t const t = R.id_of(R.inverse(R.element(s)));
        if (R.mul_id(R.mul_id(s, t), s) != s || R.mul_id(R.mul_id(t, s), t) != t) {
          fail("inverse fails for " + format_element(R, R.element(s)));
        }
        if (!small) {
          continue;
        }
        for (std::size_t u = 0; u < n; ++u) {
          if (u != t && R.mul_id(R.mul_id(s, u), s) == s
              && R.mul_id(R.mul_id(u, s), u) == u) {
            fail("two inverses for " + format_element(R, R.element(s)));
          }
        }
      }
      return mode;
    });

    suite.run("idempotent_times_unit",
              "if e_K w is idempotent for a unit w then e_K w = e_K", [&] {
                for (FaceId K = 0; K < F.size(); ++K) {
                  std::size_t const eK = R.id_of(R.idempotent(K));
                  for (std::size_t w = 0; w < W.size(); ++w) {
                    std::size_t const x = R.mul_id(eK, R.id_of(R.unit(w)));
                    if (is_idempotent(R, x) && x != eK) {
                      fail("e_K w idempotent but not e_K at " + face_text(F, K));
                    }
                  }
                }
                return std::string();
              });

    suite.run("conjugate_idempotents",
              "distinct f, f' in one W-orbit satisfy ff' < f and ff' < f'", [&] {
                for (std::size_t e = 1; e < L.size(); ++e) {
                  for (FaceId K : F.orbit(e)) {
                    for (FaceId K2 : F.orbit(e)) {
                      if (K == K2) {
                        continue;
                      }
                      std::size_t const f  = R.id_of(R.idempotent(K));
                      std::size_t const f2 = R.id_of(R.idempotent(K2));
                      std::size_t const g  = R.mul_id(f, f2);
                      if (g == f || g == f2 || !below(R, g, f) || !below(R, g, f2)) {
                        fail("ff' is not below both at " + face_text(F, K) + face_text(F, K2));
                      }
                    }
                  }
                }
                return std::string();
              });

    suite.run("vertex_maps", "elements act faithfully on vertices, composing on the right",
              [&] {
                if (!vertex_map_faithful(R)) {
                  fail("two elements induce the same vertex map");
                }
                std::size_t const trials = small ? n * n : opts.sample_pairs;
                for (std::size_t k = 0; k < trials; ++k) {
                  std::size_t const a  = small ? k / n : pick(rng);
                  std::size_t const b  = small ? k % n : pick(rng);
                  auto const        ma = R.vertex_map(R.element(a));
                  auto const        mb = R.vertex_map(R.element(b));
                  auto const        mc = R.vertex_map(R.element(R.mul_id(a, b)));
                  for (std::size_t v = 0; v < ma.size(); ++v) {
                    std::int64_t const want = ma[v] < 0 ? -1 : mb[static_cast<std::size_t>(ma[v])];
                    if (mc[v] != want) {
                      fail("vertex map of a product at " + format_element(R, R.element(a))
                           + " * " + format_element(R, R.element(b)));
                    }
                  }
                }
                return mode;
              });

    RootSubset rook_J(static_cast<std::size_t>(std::max(W.datum().rank - 1, 0)));
    std::iota(rook_J.begin(), rook_J.end(), 1);
    if (W.datum().family == Family::A && L.J == rook_J && W.datum().rank <= 3) {
      suite.run("rook_monoid", "the type A Renner monoid with J = {2..n-1} is the rook monoid",
                [&] {
                  RookCertificate c = match_rook(R);
                  return std::to_string(c.products) + " products";
                });
    }

    MonoidAlgebra const A(R);
    suite.run("solomon_idempotents",
              "eta_K orthogonal idempotents, eta_e central, sum of eta_e = 1", [&] {
                IdempotentReport r = verify_idempotent_system(A);
                return std::to_string(r.face_pairs) + " face pairs";
              });

    suite.run("ideal_filters", "R_*(e) is an ideal of dimension sum over f <= e of |WfW|",
              [&] {
                for (std::size_t e = 0; e < L.size(); ++e) {
                  ideal_filter(A, e);
                }
                return std::string();
              });

    suite.run("annihilation", "sigma eta_e = 0 for sigma in WfW unless e <= f", [&] {
      for (std::size_t e = 0; e < L.size(); ++e) {
        for (std::size_t g = 0; g < L.size(); ++g) {
          if (L.leq[e][g]) {
            continue;
          }
          for (std::size_t s : R.class_ids(g)) {
            if (!A.left_multiply(s, A.eta_class(e)).is_zero()) {
              fail("sigma eta_e != 0 for " + format_element(R, R.element(s)));
            }
          }
        }
      }
      return std::string();
    });

    suite.run("block_dimension", "dim A eta_e = |WeW|", [&] {
      if (!small) {
        return std::string("skipped above the exhaustive bound");
      }
      for (std::size_t e = 0; e < L.size(); ++e) {
        std::size_t const d = block_dimension(A, e);
        if (d != R.class_ids(e).size()) {
          fail("dim A eta_e = " + std::to_string(d) + " for entry " + std::to_string(e));
        }
      }
      return std::string();
    });

    suite.run("psi_isomorphism", "psi_e : A eta_e -> M_(d_e)(Q W*(e)) is an isomorphism", [&] {
      bool sampled = false;
      for (std::size_t e = 0; e < L.size(); ++e) {
        sampled = verify_psi(A, e, small ? opts.sample_pairs * 5 : opts.sample_pairs).sampled
                  || sampled;
      }
      return std::string(sampled ? "sampled" : "exhaustive");
    });

    RepresentationTheory const T(A);
    suite.run("irreducible_degrees",
              "deg rho* = d_e deg rho and sum of (deg rho*)^2 = |R|", [&] {
                std::size_t sq = 0;
                for (auto const& irr : T.irreducibles()) {
                  if (irr.induced_degree != L[irr.entry].d_e * irr.degree) {
                    fail("induced degree of " + irr.label);
                  }
                  sq += irr.induced_degree * irr.induced_degree;
                }
                if (sq != n) {
                  fail("sum of squares " + std::to_string(sq));
                }
                return std::to_string(T.irreducibles().size()) + " irreducibles";
              });

    suite.run("character_formula",
              "trace rho*(sigma) = chi*(sigma); distinct irreducibles have distinct "
              "characters; chi*(1) = d_e chi(1)", [&] {
                std::set<std::vector<long>> seen;
                std::size_t const           one = R.id_of(R.one());
                for (auto const& irr : T.irreducibles()) {
                  std::vector<long> chi = T.character_vector(irr);
                  if (!seen.insert(chi).second) {
                    fail("repeated character vector for " + irr.label);
                  }
                  if (chi[one] != static_cast<long>(irr.induced_degree)) {
                    fail("chi*(1) != d_e chi(1) for " + irr.label);
                  }
                  if (!T.parabolic(irr.entry).has_matrices) {
                    continue;
                  }
                  for (std::size_t k = 0; k < (small ? n : 200); ++k) {
                    std::size_t const s = small ? k : pick(rng);
                    if (T.rho_star(irr, s).trace() != chi[s]) {
                      fail("trace rho*(sigma) != chi*(sigma) for " + irr.label + " at "
                           + format_element(R, R.element(s)));
                    }
                  }
                }
                return std::string();
              });

    suite.run("rho_star_multiplicative", "rho*(sigma tau) = rho*(sigma) rho*(tau)", [&] {
      RhoStarReport r = verify_rho_star(T, small ? n * n : opts.sample_pairs);
      return std::to_string(r.pairs) + (r.sampled ? " sampled pairs" : " pairs");
    });

    if (small) {
      suite.run("center_dimension",
                "dim Z(A) = number of irreducibles = sum of #classes of W*(e)", [&] {
                  std::size_t const z = center_dimension(R);
                  std::size_t       classes = 0;
                  for (std::size_t e = 0; e < L.size(); ++e) {
                    classes += T.parabolic(e).table.size();
                  }
                  if (z != classes || z != T.irreducibles().size()) {
                    fail("center has dimension " + std::to_string(z) + ", expected "
                         + std::to_string(classes));
                  }
                  return std::to_string(z);
                });
    }
    return suite.report;
  }

}  // namespace renner

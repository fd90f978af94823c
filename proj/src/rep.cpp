#include "renner/rep.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_set>

#include "renner/element_io.hpp"
#include "renner/error.hpp"

namespace renner {

  // ---------------------------------------------------------------------
  // Character tables over F_p, lifted to Z.

  namespace {
    using i64 = std::int64_t;

    i64 mod(i64 a, i64 p) {
      a %= p;
      return a < 0 ? a + p : a;
    }

    i64 power(i64 b, i64 e, i64 p) {
      i64 r = 1;
      b     = mod(b, p);
      while (e > 0) {
        if (e & 1) {
          r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
      }
      return r;
    }

    i64 inverse(i64 a, i64 p) {
      return power(a, p - 2, p);
    }

    bool is_prime(i64 n) {
      if (n < 2) {
        return false;
      }
      for (i64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
          return false;
        }
      }
      return true;
    }

    using ModMatrix = std::vector<std::vector<i64>>;

    // Basis of the null space of A (k x k) over F_p.
    std::vector<std::vector<i64>> null_space(ModMatrix A, i64 p) {
      std::size_t const        n = A.size();
      std::vector<std::size_t> pivots;
      std::size_t              r = 0;
      for (std::size_t c = 0; c < n && r < n; ++c) {
        std::size_t piv = r;
        while (piv < n && A[piv][c] == 0) {
          ++piv;
        }
        if (piv == n) {
          continue;
        }
        std::swap(A[piv], A[r]);
        i64 const inv = inverse(A[r][c], p);
        for (auto& x : A[r]) {
          x = x * inv % p;
        }
        for (std::size_t i = 0; i < n; ++i) {
          if (i != r && A[i][c] != 0) {
            i64 const f = A[i][c];
            for (std::size_t j = 0; j < n; ++j) {
              A[i][j] = mod(A[i][j] - f * A[r][j], p);
            }
          }
        }
        pivots.push_back(c);
        ++r;
      }
      std::vector<std::vector<i64>> out;
      std::vector<bool>             is_pivot(n, false);
      for (auto c : pivots) {
        is_pivot[c] = true;
      }
      for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) {
          continue;
        }
        std::vector<i64> v(n, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) {
          v[pivots[i]] = mod(-A[i][f], p);
        }
        out.push_back(std::move(v));
      }
      return out;
    }

    // Row-reduces a list of vectors in place; returns pivot columns.
    std::vector<std::size_t> rref(std::vector<std::vector<i64>>& B, i64 p) {
      std::vector<std::size_t> pivots;
      std::size_t const        n = B.empty() ? 0 : B[0].size();
      std::size_t              r = 0;
      for (std::size_t c = 0; c < n && r < B.size(); ++c) {
        std::size_t piv = r;
        while (piv < B.size() && B[piv][c] == 0) {
          ++piv;
        }
        if (piv == B.size()) {
          continue;
        }
        std::swap(B[piv], B[r]);
        i64 const inv = inverse(B[r][c], p);
        for (auto& x : B[r]) {
          x = x * inv % p;
        }
        for (std::size_t i = 0; i < B.size(); ++i) {
          if (i != r && B[i][c] != 0) {
            i64 const f = B[i][c];
            for (std::size_t j = 0; j < n; ++j) {
              B[i][j] = mod(B[i][j] - f * B[r][j], p);
            }
          }
        }
        pivots.push_back(c);
        ++r;
      }
      B.resize(r);
      return pivots;
    }

    // Splits F_p^r into common eigenspaces of the class matrices; empty if
    // some space fails to split into lines.
    std::vector<std::vector<i64>> common_eigenvectors(std::vector<ModMatrix> const& M,
                                                      std::size_t r, i64 p) {
      std::vector<std::vector<std::vector<i64>>> spaces(1);
      for (std::size_t i = 0; i < r; ++i) {
        std::vector<i64> e(r, 0);
        e[i] = 1;
        spaces[0].push_back(std::move(e));
      }
      for (ModMatrix const& Mi : M) {
        std::vector<std::vector<std::vector<i64>>> next;
        for (auto& B : spaces) {
          if (B.size() == 1) {
            next.push_back(std::move(B));
            continue;
          }
          auto const        piv = rref(B, p);
          std::size_t const k   = B.size();
          // Matrix of Mi on span(B): column l holds the coordinates of Mi b_l.
          ModMatrix A(k, std::vector<i64>(k, 0));
          for (std::size_t l = 0; l < k; ++l) {
            for (std::size_t m = 0; m < k; ++m) {
              i64 s = 0;
              for (std::size_t c = 0; c < r; ++c) {
                s = (s + Mi[piv[m]][c] * B[l][c]) % p;
              }
              A[m][l] = s;
            }
          }
          std::size_t found = 0;
          for (i64 lambda = 0; lambda < p && found < k; ++lambda) {
            ModMatrix S = A;
            for (std::size_t m = 0; m < k; ++m) {
              S[m][m] = mod(S[m][m] - lambda, p);
            }
            auto ns = null_space(S, p);
            if (ns.empty()) {
              continue;
            }
            found += ns.size();
            std::vector<std::vector<i64>> sub;
            for (auto const& x : ns) {
              std::vector<i64> v(r, 0);
              for (std::size_t l = 0; l < k; ++l) {
                for (std::size_t c = 0; c < r; ++c) {
                  v[c] = (v[c] + x[l] * B[l][c]) % p;
                }
              }
              sub.push_back(std::move(v));
            }
            next.push_back(std::move(sub));
          }
          if (found != k) {
            return {};
          }
        }
        spaces = std::move(next);
      }
      std::vector<std::vector<i64>> out;
      for (auto& B : spaces) {
        if (B.size() != 1) {
          return {};
        }
        out.push_back(std::move(B[0]));
      }
      return out;
    }
  }  // namespace

  CharacterTable character_table(WeylGroup const& W, Subgroup const& H) {
    CharacterTable T;
    T.group_order = H.order();
    T.classes     = conjugacy_classes(W, H);
    T.class_index.assign(W.size(), -1);
    std::size_t const r = T.classes.size();
    for (std::size_t c = 0; c < r; ++c) {
      for (std::size_t w : T.classes[c]) {
        T.class_index[w] = static_cast<std::int32_t>(c);
      }
    }
    std::vector<i64> h(r);
    for (std::size_t c = 0; c < r; ++c) {
      h[c] = static_cast<i64>(T.classes[c].size());
    }
    std::vector<std::size_t> inv_class(r);
    for (std::size_t c = 0; c < r; ++c) {
      inv_class[c] = T.class_of(W.inv(T.classes[c][0]));
    }

    // c[i][j][k] = #{x in C_i : x^-1 z_k in C_j}, z_k a fixed element of C_k.
    std::vector<std::vector<std::vector<i64>>> cst(
        r, std::vector<std::vector<i64>>(r, std::vector<i64>(r, 0)));
    for (std::size_t k = 0; k < r; ++k) {
      std::size_t const z = T.classes[k][0];
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t x : T.classes[i]) {
          ++cst[i][T.class_of(W.mul(W.inv(x), z))][k];
        }
      }
    }

    i64 exponent = 1;
    for (std::size_t c = 0; c < r; ++c) {
      i64 o    = static_cast<i64>(W.element_order(T.classes[c][0]));
      exponent = std::lcm(exponent, o);
    }
    i64 const n = static_cast<i64>(H.order());

    std::vector<std::vector<i64>> rows;
    i64                           p = exponent + 1;
    for (int attempt = 0; attempt < 50; ++attempt, p += exponent) {
      while (!(p > 2 * n && is_prime(p))) {
        p += exponent;
      }
      std::vector<ModMatrix> M(r, ModMatrix(r, std::vector<i64>(r, 0)));
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
          for (std::size_t k = 0; k < r; ++k) {
            M[i][j][k] = cst[i][j][k] % p;
          }
        }
      }
      auto vecs = common_eigenvectors(M, r, p);
      if (vecs.size() != r) {
        continue;
      }
      rows.clear();
      bool ok = true;
      for (auto& w : vecs) {
        if (w[0] == 0) {
          ok = false;
          break;
        }
        i64 const s = inverse(w[0], p);
        for (auto& x : w) {
          x = x * s % p;
        }
        i64 denom = 0;
        for (std::size_t j = 0; j < r; ++j) {
          denom = (denom + w[j] * w[inv_class[j]] % p * inverse(h[j] % p, p)) % p;
        }
        if (denom == 0) {
          ok = false;
          break;
        }
        i64 const d2 = n % p * inverse(denom, p) % p;
        i64       d  = 0;
        for (i64 t = 1; t * t <= n; ++t) {
          if (t * t % p == d2) {
            d = t;
          }
        }
        if (d == 0) {
          ok = false;
          break;
        }
        std::vector<i64> chi(r);
        for (std::size_t j = 0; j < r; ++j) {
          i64 v  = w[j] * d % p * inverse(h[j] % p, p) % p;
          chi[j] = v > p / 2 ? v - p : v;
        }
        rows.push_back(std::move(chi));
      }
      if (ok) {
        break;
      }
      rows.clear();
    }
    if (rows.size() != r) {
      throw Error(ErrorCode::NotIntegerValued,
                  "the class algebra did not split into integral characters");
    }

    // Both orthogonality relations over Z.
    for (std::size_t a = 0; a < r; ++a) {
      for (std::size_t b = 0; b < r; ++b) {
        i64 s = 0, t = 0;
        for (std::size_t c = 0; c < r; ++c) {
          s += h[c] * rows[a][c] * rows[b][inv_class[c]];
          t += rows[c][a] * rows[c][inv_class[b]];
        }
        if (s != (a == b ? n : 0) || t != (a == b ? n / h[a] : 0)) {
          throw Error(ErrorCode::NotIntegerValued,
                      "lifted table fails the orthogonality relations");
        }
      }
    }
    std::sort(rows.begin(), rows.end(), [](auto const& x, auto const& y) {
      return x[0] != y[0] ? x[0] < y[0] : x < y;
    });
    for (auto const& row : rows) {
      T.values.emplace_back(row.begin(), row.end());
    }
    return T;
  }

  // ---------------------------------------------------------------------
  // Partitions, tableaux and matrix representations.

  std::vector<Partition> partitions(int k) {
    std::vector<Partition> out;
    Partition              cur;
    auto rec = [&](auto&& self, int left, int cap) -> void {
      if (left == 0) {
        out.push_back(cur);
        return;
      }
      for (int part = std::min(left, cap); part >= 1; --part) {
        cur.push_back(part);
        self(self, left - part, part);
        cur.pop_back();
      }
    };
    rec(rec, k, k);
    return out;
  }

  std::string partition_label(Partition const& p) {
    std::ostringstream os;
    os << '(';
    for (std::size_t k = 0; k < p.size(); ++k) {
      os << (k ? "," : "") << p[k];
    }
    os << ')';
    return os.str();
  }

  std::vector<std::vector<int>> standard_tableaux(Partition const& p) {
    int const                     k = std::accumulate(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    std::vector<int>              rows;
    std::vector<int>              filled(p.size(), 0);
    auto rec = [&](auto&& self) -> void {
      if (static_cast<int>(rows.size()) == k) {
        out.push_back(rows);
        return;
      }
      for (std::size_t r = 0; r < p.size(); ++r) {
        if (filled[r] < p[r] && (r == 0 || filled[r - 1] > filled[r])) {
          ++filled[r];
          rows.push_back(static_cast<int>(r));
          self(self);
          rows.pop_back();
          --filled[r];
        }
      }
    };
    rec(rec);
    return out;
  }

  namespace {
    // Column of each entry of a tableau given by its rows.
    std::vector<int> columns_of(std::vector<int> const& rows) {
      std::vector<int> cols(rows.size()), next;
      for (std::size_t m = 0; m < rows.size(); ++m) {
        auto r = static_cast<std::size_t>(rows[m]);
        if (next.size() <= r) {
          next.resize(r + 1, 0);
        }
        cols[m] = next[r]++;
      }
      return cols;
    }

    QMatrix power(QMatrix const& a, int e) {
      QMatrix r = QMatrix::identity(a.rows());
      for (int k = 0; k < e; ++k) {
        r = r * a;
      }
      return r;
    }
  }  // namespace

  MatrixRep symmetric_group_irrep(Partition const& lambda) {
    int const  k    = std::accumulate(lambda.begin(), lambda.end(), 0);
    auto const tabs = standard_tableaux(lambda);
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t t = 0; t < tabs.size(); ++t) {
      index[tabs[t]] = t;
    }
    MatrixRep rep;
    rep.label  = partition_label(lambda);
    rep.degree = tabs.size();
    for (int i = 0; i + 1 < k; ++i) {
      QMatrix m(tabs.size(), tabs.size());
      for (std::size_t t = 0; t < tabs.size(); ++t) {
        auto const& rows = tabs[t];
        auto const  cols = columns_of(rows);
        int const   ri = rows[i], rj = rows[i + 1];
        if (ri == rj) {
          m(t, t) = 1;
        } else if (cols[i] == cols[i + 1]) {
          m(t, t) = -1;
        } else {
          int const r = (cols[i + 1] - rj) - (cols[i] - ri);
          auto      swapped = rows;
          std::swap(swapped[i], swapped[i + 1]);
          std::size_t const u = index.at(swapped);
          Rational const    inv_r = Rational(1) / r;
          m(t, t)                 = inv_r;
          if (ri < rj) {
            m(u, t) = 1;
          } else {
            m(u, t) = 1 - inv_r * inv_r;
          }
        }
      }
      rep.generators.push_back(std::move(m));
    }
    return rep;
  }

  MatrixRep hyperoctahedral_irrep(Partition const& lambda, Partition const& mu) {
    int const a = std::accumulate(lambda.begin(), lambda.end(), 0);
    int const b = std::accumulate(mu.begin(), mu.end(), 0);
    int const k = a + b;
    MatrixRep const rl = symmetric_group_irrep(lambda);
    MatrixRep const rm = symmetric_group_irrep(mu);
    std::size_t const dl = std::max<std::size_t>(rl.degree, 1);
    std::size_t const dm = std::max<std::size_t>(rm.degree, 1);

    // Subsets of {0..k-1} of size a, as membership masks, in lex order.
    std::vector<std::vector<bool>> subsets;
    {
      std::vector<bool> mask(static_cast<std::size_t>(k), false);
      std::fill(mask.begin(), mask.begin() + a, true);
      do {
        subsets.push_back(mask);
      } while (std::prev_permutation(mask.begin(), mask.end()));
    }
    std::map<std::vector<bool>, std::size_t> sindex;
    for (std::size_t s = 0; s < subsets.size(); ++s) {
      sindex[subsets[s]] = s;
    }
    std::size_t const deg = subsets.size() * dl * dm;
    auto idx = [&](std::size_t s, std::size_t x, std::size_t y) {
      return (s * dl + x) * dm + y;
    };
    auto rank_in = [](std::vector<bool> const& mask, int j, bool side) {
      int r = 0;
      for (int q = 0; q < j; ++q) {
        r += mask[static_cast<std::size_t>(q)] == side;
      }
      return r;
    };

    MatrixRep rep;
    rep.label  = "(" + partition_label(lambda) + "," + partition_label(mu) + ")";
    rep.degree = deg;
    for (int j = 0; j + 1 < k; ++j) {
      QMatrix m(deg, deg);
      for (std::size_t s = 0; s < subsets.size(); ++s) {
        auto const& S  = subsets[s];
        bool const  in0 = S[static_cast<std::size_t>(j)];
        bool const  in1 = S[static_cast<std::size_t>(j + 1)];
        for (std::size_t x = 0; x < dl; ++x) {
          for (std::size_t y = 0; y < dm; ++y) {
            std::size_t const col = idx(s, x, y);
            if (in0 && in1) {
              QMatrix const& g = rl.generators[static_cast<std::size_t>(rank_in(S, j, true))];
              for (std::size_t x2 = 0; x2 < dl; ++x2) {
                m(idx(s, x2, y), col) = g(x2, x);
              }
            } else if (!in0 && !in1) {
              QMatrix const& g = rm.generators[static_cast<std::size_t>(rank_in(S, j, false))];
              for (std::size_t y2 = 0; y2 < dm; ++y2) {
                m(idx(s, x, y2), col) = g(y2, y);
              }
            } else {
              auto T = S;
              T[static_cast<std::size_t>(j)]     = in1;
              T[static_cast<std::size_t>(j + 1)] = in0;
              m(idx(sindex.at(T), x, y), col) = 1;
            }
          }
        }
      }
      rep.generators.push_back(std::move(m));
    }
    if (k > 0) {
      QMatrix m(deg, deg);
      for (std::size_t s = 0; s < subsets.size(); ++s) {
        int const sign = subsets[s][static_cast<std::size_t>(k - 1)] ? 1 : -1;
        for (std::size_t x = 0; x < dl; ++x) {
          for (std::size_t y = 0; y < dm; ++y) {
            m(idx(s, x, y), idx(s, x, y)) = sign;
          }
        }
      }
      rep.generators.push_back(std::move(m));
    }
    return rep;
  }

  bool satisfies_coxeter_relations(MatrixRep const& rep,
                                   std::vector<std::vector<int>> const& m) {
    QMatrix const one = QMatrix::identity(rep.degree);
    for (std::size_t i = 0; i < rep.generators.size(); ++i) {
      for (std::size_t j = 0; j < rep.generators.size(); ++j) {
        QMatrix const x = rep.generators[i] * rep.generators[j];
        if (power(x, m[i][j]) != one) {
          return false;
        }
      }
    }
    return true;
  }

  BoundRep bind(WeylGroup const& W, Subgroup const& H, MatrixRep const& rep) {
    BoundRep out;
    out.label  = rep.label;
    out.degree = rep.degree;
    out.images.resize(H.order());
    out.images[0] = QMatrix::identity(rep.degree);
    for (std::size_t k = 1; k < H.order(); ++k) {
      int const         last = H.words[k].back();
      auto const        g    = std::find(H.generators.begin(), H.generators.end(), last)
                      - H.generators.begin();
      std::size_t const parent = H.position(W.mul(H.elements[k], W.generator(last)));
      out.images[k] = out.images[parent] * rep.generators[static_cast<std::size_t>(g)];
    }
    return out;
  }

  void verify_homomorphism(WeylGroup const& W, Subgroup const& H, BoundRep const& rep) {
    for (std::size_t a = 0; a < H.order(); ++a) {
      for (std::size_t b = 0; b < H.order(); ++b) {
        std::size_t const c = H.position(W.mul(H.elements[a], H.elements[b]));
        if (rep.images[a] * rep.images[b] != rep.images[c]) {
          throw Error(ErrorCode::PropertyViolation,
                      "representation " + rep.label + " is not a homomorphism");
        }
      }
    }
  }

  // ---------------------------------------------------------------------
  // Irreducibles of W*(e).

  namespace {
    struct ComponentIrreps {
      RootSubset             path;  // global roots in generator order
      std::vector<MatrixRep> reps;
      bool                   type_d = false;
    };

    ComponentIrreps component_irreps(RootDatum const& d, RootSubset const& comp) {
      ComponentIrreps out;
      std::map<int, int> degree;
      for (int a : comp) {
        for (int b : comp) {
          if (d.adjacent(a, b)) {
            ++degree[a];
          }
        }
      }
      for (int a : comp) {
        if (degree[a] >= 3) {
          out.type_d = true;
          return out;
        }
      }
      int double_a = -1, double_b = -1;
      for (int a : comp) {
        for (int b : comp) {
          if (a < b && d.coxeter_m(a, b) == 4) {
            double_a = a;
            double_b = b;
          }
        }
      }
      // Walk the path from a chosen end.
      int start = comp.front();
      if (comp.size() > 1) {
        std::vector<int> ends;
        for (int a : comp) {
          if (degree[a] == 1) {
            ends.push_back(a);
          }
        }
        start = ends.front();
        if (double_a >= 0) {
          int const flip = (degree[double_b] == 1) ? double_b : double_a;
          start          = ends.front() == flip ? ends.back() : ends.front();
        }
      }
      out.path.push_back(start);
      while (out.path.size() < comp.size()) {
        for (int b : comp) {
          if (d.adjacent(out.path.back(), b)
              && std::find(out.path.begin(), out.path.end(), b) == out.path.end()) {
            out.path.push_back(b);
            break;
          }
        }
      }
      int const k = static_cast<int>(comp.size());
      if (double_a >= 0) {
        for (int a = 0; a <= k; ++a) {
          for (auto const& l : partitions(a)) {
            for (auto const& m : partitions(k - a)) {
              out.reps.push_back(hyperoctahedral_irrep(l, m));
            }
          }
        }
      } else {
        for (auto const& l : partitions(k + 1)) {
          out.reps.push_back(symmetric_group_irrep(l));
        }
      }
      return out;
    }
  }  // namespace

  ParabolicIrreps irreps_of_parabolic(WeylGroup const& W, CrossSectionEntry const& e,
                                      bool require_matrices) {
    ParabolicIrreps out;
    Subgroup const& H = e.W_star;
    out.table         = character_table(W, H);
    std::size_t const r = out.table.size();

    std::vector<ComponentIrreps> comps;
    bool                         type_d = false;
    for (auto const& c : W.datum().components(H.generators)) {
      comps.push_back(component_irreps(W.datum(), c));
      type_d = type_d || comps.back().type_d;
    }
    if (type_d) {
      if (require_matrices) {
        throw Error(ErrorCode::UnsupportedComponent,
                    "lambda*(e) = " + to_string(H.generators)
                        + " has a component of type D; only characters are available");
      }
      for (std::size_t row = 0; row < r; ++row) {
        out.labels.push_back("#" + std::to_string(row + 1));
      }
      return out;
    }

    // Outer tensor products over the components.
    std::vector<MatrixRep> combined(1);
    combined[0].degree = 1;
    combined[0].generators.assign(H.generators.size(), QMatrix());
    std::vector<std::pair<std::size_t, std::size_t>> slot;  // (component, path pos)
    for (int g : H.generators) {
      for (std::size_t c = 0; c < comps.size(); ++c) {
        auto it = std::find(comps[c].path.begin(), comps[c].path.end(), g);
        if (it != comps[c].path.end()) {
          slot.emplace_back(c, static_cast<std::size_t>(it - comps[c].path.begin()));
        }
      }
    }
    for (std::size_t c = 0; c < comps.size(); ++c) {
      std::vector<MatrixRep> next;
      for (auto const& left : combined) {
        for (auto const& right : comps[c].reps) {
          MatrixRep m;
          m.label  = left.label.empty() ? right.label : left.label + " x " + right.label;
          m.degree = left.degree * right.degree;
          QMatrix const Il = QMatrix::identity(left.degree);
          QMatrix const Ir = QMatrix::identity(right.degree);
          for (std::size_t k = 0; k < H.generators.size(); ++k) {
            if (slot[k].first < c) {
              m.generators.push_back(left.generators[k].kron(Ir));
            } else if (slot[k].first == c) {
              m.generators.push_back(Il.kron(right.generators[slot[k].second]));
            } else {
              m.generators.push_back(QMatrix());
            }
          }
          next.push_back(std::move(m));
        }
      }
      combined = std::move(next);
    }
    if (comps.empty()) {
      combined[0].label = "trivial";
    }

    out.has_matrices = true;
    out.reps.resize(r);
    out.labels.resize(r);
    std::vector<bool> seen(r, false);
    if (combined.size() != r) {
      throw Error(ErrorCode::PropertyViolation,
                  "number of constructed irreducibles differs from the class number");
    }
    for (auto const& m : combined) {
      BoundRep b = bind(W, H, m);
      verify_homomorphism(W, H, b);
      std::vector<long> chi(r);
      for (std::size_t c = 0; c < r; ++c) {
        Rational t = b.at(H, out.table.classes[c][0]).trace();
        chi[c]     = t.get_num().get_si();
      }
      auto it = std::find(out.table.values.begin(), out.table.values.end(), chi);
      if (it == out.table.values.end()) {
        throw Error(ErrorCode::PropertyViolation,
                    "representation " + m.label + " is not irreducible");
      }
      std::size_t const row = static_cast<std::size_t>(it - out.table.values.begin());
      if (seen[row]) {
        throw Error(ErrorCode::PropertyViolation,
                    "two constructed representations share a character");
      }
      seen[row]       = true;
      out.labels[row] = m.label;
      out.reps[row]   = std::move(b);
    }
    return out;
  }

  // ---------------------------------------------------------------------
  // Induced representations of the monoid.

  RepresentationTheory::RepresentationTheory(MonoidAlgebra const& A, bool require_matrices)
      : _A(&A) {
    RennerMonoid const&        R = A.monoid();
    CrossSectionLattice const& L = R.cross_section();
    for (std::size_t e = 0; e < L.size(); ++e) {
      _parabolic.push_back(irreps_of_parabolic(R.group(), L[e], require_matrices));
      ParabolicIrreps const& P = _parabolic.back();
      for (std::size_t row = 0; row < P.table.size(); ++row) {
        Irreducible irr;
        irr.entry          = e;
        irr.row            = row;
        irr.label          = P.labels[row];
        irr.degree         = static_cast<std::size_t>(P.table.values[row][0]);
        irr.induced_degree = L[e].d_e * irr.degree;
        _irreducibles.push_back(std::move(irr));
      }
    }
  }

  InducedShape RepresentationTheory::shape(std::size_t entry, std::size_t sigma) const {
    RennerMonoid const& R     = monoid();
    FaceLattice const&  F     = R.faces();
    auto const&         orbit = F.orbit(entry);
    RennerElement const s     = R.element(sigma);
    InducedShape        out;
    out.target.assign(orbit.size(), -1);
    out.unit.assign(orbit.size(), R.group().identity());
    for (std::size_t a = 0; a < orbit.size(); ++a) {
      if (!F.contains(R.domain(s), orbit[a])) {
        continue;
      }
      std::size_t const t = R.id_of(R.multiply(R.idempotent(orbit[a]), s));
      auto const&       c = _A->coordinates(t);
      out.target[a]       = static_cast<std::int64_t>(c.col);
      out.unit[a]         = c.u;
    }
    return out;
  }

  QMatrix RepresentationTheory::rho_star(Irreducible const& irr, std::size_t sigma) const {
    ParabolicIrreps const& P = _parabolic[irr.entry];
    if (!P.has_matrices) {
      throw Error(ErrorCode::UnsupportedComponent,
                  "no matrix representation for entry " + std::to_string(irr.entry));
    }
    BoundRep const&   rho = P.reps[irr.row];
    Subgroup const&   H   = monoid().cross_section()[irr.entry].W_star;
    InducedShape const sh = shape(irr.entry, sigma);
    std::size_t const deg = rho.degree;
    QMatrix           out(sh.target.size() * deg, sh.target.size() * deg);
    for (std::size_t a = 0; a < sh.target.size(); ++a) {
      if (sh.target[a] < 0) {
        continue;
      }
      QMatrix const&    block = rho.at(H, sh.unit[a]);
      std::size_t const b     = static_cast<std::size_t>(sh.target[a]);
      for (std::size_t i = 0; i < deg; ++i) {
        for (std::size_t j = 0; j < deg; ++j) {
          out(a * deg + i, b * deg + j) = block(i, j);
        }
      }
    }
    return out;
  }

  long RepresentationTheory::chi_star(std::size_t entry, std::size_t row,
                                      std::size_t sigma) const {
    RennerMonoid const&   R = monoid();
    FaceLattice const&    F = R.faces();
    CharacterTable const& T = _parabolic[entry].table;
    RennerElement const   s = R.element(sigma);
    long                  sum = 0;
    for (FaceId K : F.orbit(entry)) {
      if (!F.contains(R.domain(s), K) || F.act(s.weyl, K) != K) {
        continue;
      }
      auto const [mu, mum] = R.transporter(entry, K);
      RennerElement const c = R.multiply(R.multiply(mu, s), mum);
      sum += T.value(row, R.group_element_of(entry, c));
    }
    return sum;
  }

  std::vector<long> RepresentationTheory::character_vector(Irreducible const& irr) const {
    std::vector<long> out(monoid().size());
    for (std::size_t s = 0; s < out.size(); ++s) {
      out[s] = chi_star(irr.entry, irr.row, s);
    }
    return out;
  }

  RhoStarReport verify_rho_star(RepresentationTheory const& T, std::size_t max_pairs) {
    RennerMonoid const&        R = T.monoid();
    CrossSectionLattice const& L = R.cross_section();
    std::size_t const          n = R.size();
    RhoStarReport              rep;

    std::vector<std::size_t>               entries;
    std::vector<std::vector<InducedShape>> shapes;
    std::vector<std::unordered_set<std::uint64_t>> verified;
    for (std::size_t e = 0; e < L.size(); ++e) {
      if (!T.parabolic(e).has_matrices) {
        continue;
      }
      entries.push_back(e);
      shapes.emplace_back();
      for (std::size_t s = 0; s < n; ++s) {
        shapes.back().push_back(T.shape(e, s));
      }
      verified.emplace_back();
    }
    std::uint64_t const nW = R.group().size();

    auto check = [&](std::size_t s, std::size_t t) {
      std::size_t const st = R.mul_id(s, t);
      for (std::size_t k = 0; k < entries.size(); ++k) {
        InducedShape const& A = shapes[k][s];
        InducedShape const& B = shapes[k][t];
        InducedShape const& C = shapes[k][st];
        for (std::size_t a = 0; a < A.target.size(); ++a) {
          std::int64_t const b = A.target[a];
          std::int64_t const c = b < 0 ? -1 : B.target[static_cast<std::size_t>(b)];
          if (c != C.target[a]) {
            throw Error(ErrorCode::PropertyViolation,
                        "rho*(st) != rho*(s) rho*(t): block pattern differs for "
                            + format_element(R, R.element(s)) + " and "
                            + format_element(R, R.element(t)));
          }
          if (c < 0) {
            continue;
          }
          std::size_t const u1 = A.unit[a];
          std::size_t const u2 = B.unit[static_cast<std::size_t>(b)];
          std::size_t const u3 = C.unit[a];
          std::uint64_t const key = (u1 * nW + u2) * nW + u3;
          if (verified[k].insert(key).second) {
            ParabolicIrreps const& P = T.parabolic(entries[k]);
            Subgroup const&        H = L[entries[k]].W_star;
            for (auto const& rho : P.reps) {
              if (rho.at(H, u1) * rho.at(H, u2) != rho.at(H, u3)) {
                throw Error(ErrorCode::PropertyViolation,
                            "rho*(st) != rho*(s) rho*(t) for " + rho.label + " at "
                                + format_element(R, R.element(s)) + " and "
                                + format_element(R, R.element(t)));
              }
            }
            ++rep.block_checks;
          }
        }
      }
      ++rep.pairs;
    };
    if (n * n <= max_pairs) {
      for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t t = 0; t < n; ++t) {
          check(s, t);
        }
      }
    } else {
      rep.sampled = true;
      std::mt19937_64                            rng(sampling_seed());
      std::uniform_int_distribution<std::size_t> pick(0, n - 1);
      for (std::size_t k = 0; k < max_pairs; ++k) {
        check(pick(rng), pick(rng));
      }
    }
    return rep;
  }

  nlohmann::json irreducible_inventory(RepresentationTheory const& T) {
    CrossSectionLattice const& L   = T.monoid().cross_section();
    nlohmann::json             out = nlohmann::json::object();
    nlohmann::json             list = nlohmann::json::array();
    std::size_t                sum  = 0;
    for (auto const& irr : T.irreducibles()) {
      std::vector<int> ls;
      for (int a : L[irr.entry].lambda_star) {
        ls.push_back(a + 1);
      }
      list.push_back({{"entry", irr.entry},
                      {"zero_entry", L[irr.entry].is_zero},
                      {"lambda_star", ls},
                      {"label", irr.label},
                      {"degree", irr.degree},
                      {"d_e", L[irr.entry].d_e},
                      {"induced_degree", irr.induced_degree}});
      sum += irr.induced_degree * irr.induced_degree;
    }
    out["irreducibles"]        = std::move(list);
    out["count"]               = T.irreducibles().size();
    out["sum_of_squares"]      = sum;
    out["monoid_order"]        = T.monoid().size();
    return out;
  }

}  // namespace renner

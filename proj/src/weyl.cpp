#include "renner/weyl.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "renner/error.hpp"

namespace renner {

  Family parse_family(std::string_view name) {
    if (name.size() == 1) {
      switch (name[0]) {
        case 'A':
        case 'a': return Family::A;
        case 'B':
        case 'b': return Family::B;
        case 'C':
        case 'c': return Family::C;
        case 'D':
        case 'd': return Family::D;
        default: break;
      }
    }
    throw Error(ErrorCode::UnsupportedType,
                "family '" + std::string(name) + "' is not one of A, B, C, D");
  }

  char to_char(Family f) noexcept {
    switch (f) {
      case Family::A: return 'A';
      case Family::B: return 'B';
      case Family::C: return 'C';
      case Family::D: return 'D';
    }
    return '?';
  }

  std::string RootDatum::name() const {
    return std::string(1, to_char(family)) + std::to_string(rank);
  }

  int RootDatum::coxeter_m(int i, int j) const {
    if (i == j) {
      return 1;
    }
    switch (cartan[i][j] * cartan[j][i]) {
      case 0: return 2;
      case 1: return 3;
      case 2: return 4;
      case 3: return 6;
      default: return 0;
    }
  }

  std::vector<RootSubset> RootDatum::components(RootSubset const& X) const {
    std::vector<RootSubset> out;
    std::vector<bool>       seen(static_cast<std::size_t>(rank), false);
    for (int start : X) {
      if (seen[start]) {
        continue;
      }
      RootSubset      comp;
      std::deque<int> todo{start};
      seen[start] = true;
      while (!todo.empty()) {
        int i = todo.front();
        todo.pop_front();
        comp.push_back(i);
        for (int j : X) {
          if (!seen[j] && adjacent(i, j)) {
            seen[j] = true;
            todo.push_back(j);
          }
        }
      }
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  Rational RootDatum::coroot_pairing(QVector const& v, int i) const {
    QVector const& a = simple_roots[i];
    return 2 * dot(v, a) / dot(a, a);
  }

  namespace {
    QVector unit(std::size_t dim, std::size_t i, Rational const& c = 1) {
      QVector v(dim);
      v[i] = c;
      return v;
    }

    QVector prefix_sum(std::size_t dim, std::size_t upto, Rational const& c) {
      QVector v(dim);
      for (std::size_t k = 0; k <= upto; ++k) {
        v[k] = c;
      }
      return v;
    }
  }  // namespace

  std::size_t weyl_group_order(Family family, int rank) {
    std::size_t fact = 1;
    for (int k = 2; k <= rank; ++k) {
      fact *= static_cast<std::size_t>(k);
    }
    switch (family) {
      case Family::A: return fact * static_cast<std::size_t>(rank + 1);
      case Family::B:
      case Family::C: return fact << rank;
      case Family::D: return fact << (rank - 1);
    }
    return 0;
  }

  RootDatum build_root_datum(Family family, int rank) {
    int const min_rank = family == Family::D ? 4 : 1;
    if (rank < min_rank || rank > 12) {
      throw Error(ErrorCode::UnsupportedType,
                  std::string("rank ") + std::to_string(rank)
                      + " is not supported for type " + to_char(family));
    }
    RootDatum d;
    d.family = family;
    d.rank   = rank;
    auto n   = static_cast<std::size_t>(rank);
    d.ambient_dim = family == Family::A ? n + 1 : n;
    std::size_t const m = d.ambient_dim;

    for (std::size_t i = 0; i + 1 < n; ++i) {
      QVector a = unit(m, i);
      a[i + 1]  = -1;
      d.simple_roots.push_back(std::move(a));
      d.fundamental_weights.push_back(prefix_sum(m, i, 1));
    }
    switch (family) {
      case Family::A: {
        QVector a = unit(m, n - 1);
        a[n]      = -1;
        d.simple_roots.push_back(std::move(a));
        d.fundamental_weights.push_back(prefix_sum(m, n - 1, 1));
        break;
      }
      case Family::B:
        d.simple_roots.push_back(unit(m, n - 1));
        d.fundamental_weights.push_back(prefix_sum(m, n - 1, Rational(1, 2)));
        break;
      case Family::C:
        d.simple_roots.push_back(unit(m, n - 1, 2));
        d.fundamental_weights.push_back(prefix_sum(m, n - 1, 1));
        break;
      case Family::D: {
        QVector a = unit(m, n - 2);
        a[n - 1]  = 1;
        d.simple_roots.push_back(std::move(a));
        // omega_{n-2} and omega_{n-1} are the two spin weights
        QVector spin_minus = prefix_sum(m, n - 1, Rational(1, 2));
        spin_minus[n - 1]  = Rational(-1, 2);
        d.fundamental_weights[n - 2] = std::move(spin_minus);
        d.fundamental_weights.push_back(prefix_sum(m, n - 1, Rational(1, 2)));
        break;
      }
    }

    d.cartan.assign(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Rational c = d.coroot_pairing(d.simple_roots[i], static_cast<int>(j));
        d.cartan[i][j] = static_cast<int>(c.get_num().get_si());
      }
    }

    // Root system as the closure of the simple roots under reflection.
    std::unordered_map<QVector, std::size_t, QVectorHash> seen;
    std::deque<QVector> todo(d.simple_roots.begin(), d.simple_roots.end());
    for (auto const& a : d.simple_roots) {
      seen.emplace(a, 0);
    }
    while (!todo.empty()) {
      QVector v = std::move(todo.front());
      todo.pop_front();
      d.roots.push_back(v);
      for (int i = 0; i < rank; ++i) {
        Rational c = d.coroot_pairing(v, i);
        QVector  w = v;
        for (std::size_t k = 0; k < m; ++k) {
          w[k] -= c * d.simple_roots[i][k];
        }
        if (seen.emplace(w, 0).second) {
          todo.push_back(std::move(w));
        }
      }
    }
    std::sort(d.roots.begin(), d.roots.end(),
              [](QVector const& a, QVector const& b) {
                return lex_compare(a, b) > 0;
              });
    return d;
  }

  RootDatum build_root_datum(std::string_view family, int rank) {
    return build_root_datum(parse_family(family), rank);
  }

  WeylElement WeylElement::operator*(WeylElement const& that) const {
    std::vector<int> w = _word;
    w.insert(w.end(), that._word.begin(), that._word.end());
    return WeylElement(_matrix * that._matrix, std::move(w));
  }

  WeylElement WeylElement::inverse() const {
    // Every realisation used here is orthogonal for the standard form.
    std::vector<int> w(_word.rbegin(), _word.rend());
    return WeylElement(_matrix.transpose(), std::move(w));
  }

  WeylElement simple_reflection(RootDatum const& datum, int i) {
    if (i < 0 || i >= datum.rank) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "simple root index " + std::to_string(i) + " outside [0, "
                      + std::to_string(datum.rank) + ")");
    }
    QVector const&    a = datum.simple_roots[i];
    Rational const    n = dot(a, a);
    std::size_t const m = datum.ambient_dim;
    QMatrix           s = QMatrix::identity(m);
    for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t l = 0; l < m; ++l) {
        s(k, l) -= 2 * a[k] * a[l] / n;
      }
    }
    return WeylElement(std::move(s), {i});
  }

  std::size_t WeylGroup::PermHash::operator()(Perm const& p) const {
    std::size_t h = p.size();
    for (auto x : p) {
      h = h * 1000003u ^ x;
    }
    return h;
  }

  std::size_t WeylGroup::lookup(Perm const& p) const {
    auto it = _index.find(p);
    if (it == _index.end()) {
      throw Error(ErrorCode::IndexOutOfRange, "permutation is not in W");
    }
    return it->second;
  }

  std::size_t WeylGroup::mul(std::size_t a, std::size_t b) const {
    if (!_table.empty()) {
      return _table[a * size() + b];
    }
    Perm const& pa = _root_perm[a];
    Perm const& pb = _root_perm[b];
    Perm        pc(pa.size());
    for (std::size_t r = 0; r < pa.size(); ++r) {
      pc[r] = pb[pa[r]];
    }
    return lookup(pc);
  }

  std::size_t WeylGroup::index_of(WeylElement const& w) const {
    std::unordered_map<QVector, std::size_t, QVectorHash> roots;
    for (std::size_t r = 0; r < _datum.roots.size(); ++r) {
      roots.emplace(_datum.roots[r], r);
    }
    if (w.matrix().rows() != _datum.ambient_dim
        || w.matrix().cols() != _datum.ambient_dim) {
      throw Error(ErrorCode::IndexOutOfRange, "matrix has the wrong shape");
    }
    Perm p(_datum.roots.size());
    for (std::size_t r = 0; r < p.size(); ++r) {
      auto it = roots.find(w.act(_datum.roots[r]));
      if (it == roots.end()) {
        throw Error(ErrorCode::IndexOutOfRange, "matrix does not permute roots");
      }
      p[r] = static_cast<std::uint16_t>(it->second);
    }
    std::size_t a = lookup(p);
    if (!(_elements[a] == w)) {
      throw Error(ErrorCode::IndexOutOfRange, "matrix is not in W");
    }
    return a;
  }

  std::size_t WeylGroup::element_order(std::size_t a) const {
    std::size_t k = 1;
    for (std::size_t x = a; x != identity(); x = mul(x, a)) {
      ++k;
    }
    return k;
  }

  WeylGroup enumerate_group(RootDatum datum, std::size_t bound) {
    std::size_t const expected = weyl_group_order(datum.family, datum.rank);
    if (expected > bound) {
      throw Error(ErrorCode::GroupTooLarge,
                  "|W(" + datum.name() + ")| = " + std::to_string(expected)
                      + " exceeds the bound " + std::to_string(bound));
    }
    WeylGroup W;
    W._datum = std::move(datum);
    RootDatum const& d = W._datum;

    std::unordered_map<QVector, std::size_t, QVectorHash> roots;
    for (std::size_t r = 0; r < d.roots.size(); ++r) {
      roots.emplace(d.roots[r], r);
    }
    std::vector<WeylElement>     gens;
    std::vector<WeylGroup::Perm> gen_perm;
    for (int i = 0; i < d.rank; ++i) {
      gens.push_back(simple_reflection(d, i));
      WeylGroup::Perm p(d.roots.size());
      for (std::size_t r = 0; r < p.size(); ++r) {
        p[r] = static_cast<std::uint16_t>(roots.at(gens.back().act(d.roots[r])));
      }
      gen_perm.push_back(std::move(p));
    }

    WeylGroup::Perm id(d.roots.size());
    std::iota(id.begin(), id.end(), std::uint16_t(0));
    W._elements.emplace_back(QMatrix::identity(d.ambient_dim));
    W._root_perm.push_back(id);
    W._index.emplace(id, 0);
    for (std::size_t cur = 0; cur < W._elements.size(); ++cur) {
      for (int i = 0; i < d.rank; ++i) {
        WeylGroup::Perm p(id.size());
        for (std::size_t r = 0; r < p.size(); ++r) {
          p[r] = gen_perm[i][W._root_perm[cur][r]];
        }
        if (W._index.count(p) != 0) {
          continue;
        }
        if (W._elements.size() >= bound) {
          throw Error(ErrorCode::GroupTooLarge, "enumeration exceeded bound");
        }
        W._index.emplace(p, W._elements.size());
        W._elements.push_back(W._elements[cur] * gens[i]);
        W._root_perm.push_back(std::move(p));
      }
    }

    std::size_t const n = W._elements.size();
    for (int i = 0; i < d.rank; ++i) {
      W._generators.push_back(W._index.at(gen_perm[i]));
    }
    W._inverse.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
      WeylGroup::Perm inv(id.size());
      for (std::size_t r = 0; r < inv.size(); ++r) {
        inv[W._root_perm[a][r]] = static_cast<std::uint16_t>(r);
      }
      W._inverse[a] = W._index.at(inv);
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t(0));
    std::sort(order.begin(), order.end(), [&W](std::size_t a, std::size_t b) {
      return W._elements[a] < W._elements[b];
    });
    W._rank.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
      W._rank[order[k]] = k;
    }
    if (n <= 2048) {
      W._table.resize(n * n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          WeylGroup::Perm p(id.size());
          for (std::size_t r = 0; r < p.size(); ++r) {
            p[r] = W._root_perm[b][W._root_perm[a][r]];
          }
          W._table[a * n + b] = static_cast<std::uint32_t>(W._index.at(p));
        }
      }
    }
    return W;
  }

  Subgroup parabolic_subgroup(WeylGroup const& W, RootSubset const& X) {
    Subgroup H;
    H.generators = X;
    std::sort(H.generators.begin(), H.generators.end());
    H.generators.erase(std::unique(H.generators.begin(), H.generators.end()),
                       H.generators.end());
    for (int i : H.generators) {
      if (i < 0 || i >= W.datum().rank) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "simple root index " + std::to_string(i));
      }
    }
    H.positions.assign(W.size(), -1);
    H.elements.push_back(W.identity());
    H.words.emplace_back();
    H.positions[W.identity()] = 0;
    for (std::size_t cur = 0; cur < H.elements.size(); ++cur) {
      for (int i : H.generators) {
        std::size_t w = W.mul(H.elements[cur], W.generator(i));
        if (H.positions[w] >= 0) {
          continue;
        }
        H.positions[w] = static_cast<std::int32_t>(H.elements.size());
        H.elements.push_back(w);
        auto word = H.words[cur];
        word.push_back(i);
        H.words.push_back(std::move(word));
      }
    }
    return H;
  }

  Subgroup conjugate_subgroup(WeylGroup const& W, Subgroup const& H,
                              std::size_t x) {
    Subgroup out;
    out.positions.assign(W.size(), -1);
    std::size_t const xi = W.inv(x);
    auto const&       wx = W.element(x).word();
    for (std::size_t k = 0; k < H.order(); ++k) {
      std::size_t c = W.mul(W.mul(xi, H.elements[k]), x);
      out.positions[c] = static_cast<std::int32_t>(k);
      out.elements.push_back(c);
      std::vector<int> word(wx.rbegin(), wx.rend());
      word.insert(word.end(), H.words[k].begin(), H.words[k].end());
      word.insert(word.end(), wx.begin(), wx.end());
      out.words.push_back(std::move(word));
    }
    return out;
  }

  std::size_t min_coset_rep(WeylGroup const& W, Subgroup const& H,
                            std::size_t w) {
    std::size_t best = w;
    for (std::size_t h : H.elements) {
      std::size_t c = W.mul(h, w);
      if (W.order_rank(c) < W.order_rank(best)) {
        best = c;
      }
    }
    return best;
  }

  std::vector<std::vector<std::size_t>> conjugacy_classes(WeylGroup const& W,
                                                          Subgroup const& H) {
    std::vector<std::vector<std::size_t>> classes;
    std::vector<bool>                     done(H.order(), false);
    for (std::size_t k = 0; k < H.order(); ++k) {
      if (done[k]) {
        continue;
      }
      std::vector<std::size_t> cls;
      std::size_t const        x = H.elements[k];
      for (std::size_t h : H.elements) {
        std::size_t c   = W.mul(W.mul(h, x), W.inv(h));
        std::size_t pos = H.position(c);
        if (!done[pos]) {
          done[pos] = true;
          cls.push_back(c);
        }
      }
      std::sort(cls.begin(), cls.end(), [&H](std::size_t a, std::size_t b) {
        return H.position(a) < H.position(b);
      });
      classes.push_back(std::move(cls));
    }
    return classes;
  }

  std::string to_string(RootSubset const& X, bool one_based) {
    std::ostringstream os;
    os << '{';
    for (std::size_t k = 0; k < X.size(); ++k) {
      os << (k ? "," : "") << (X[k] + (one_based ? 1 : 0));
    }
    os << '}';
    return os.str();
  }

}  // namespace renner

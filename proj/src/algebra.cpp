#include "renner/algebra.hpp"

#include <algorithm>
#include <random>

#include "renner/element_io.hpp"
#include "renner/error.hpp"

namespace renner {

  namespace {
    void normalise(std::vector<AlgebraElement::Term>& t) {
      std::sort(t.begin(), t.end(),
                [](auto const& a, auto const& b) { return a.first < b.first; });
      std::size_t out = 0;
      for (std::size_t k = 0; k < t.size();) {
        std::size_t j = k + 1;
        while (j < t.size() && t[j].first == t[k].first) {
          t[k].second += t[j].second;
          ++j;
        }
        if (sgn(t[k].second) != 0) {
          if (out != k) {
            t[out] = std::move(t[k]);
          }
          ++out;
        }
        k = j;
      }
      t.resize(out);
    }

    std::string witness(RennerMonoid const& R, std::size_t id) {
      return format_element(R, R.element(id));
    }
  }  // namespace

  AlgebraElement::AlgebraElement(std::vector<Term> terms) : _terms(std::move(terms)) {
    normalise(_terms);
  }

  Rational AlgebraElement::coefficient(std::size_t id) const {
    auto it = std::lower_bound(
        _terms.begin(), _terms.end(), id,
        [](Term const& t, std::size_t x) { return t.first < x; });
    return it != _terms.end() && it->first == id ? it->second : Rational(0);
  }

  AlgebraElement AlgebraElement::operator+(AlgebraElement const& that) const {
    std::vector<Term> t = _terms;
    t.insert(t.end(), that._terms.begin(), that._terms.end());
    return AlgebraElement(std::move(t));
  }

  AlgebraElement AlgebraElement::operator-(AlgebraElement const& that) const {
    return *this + that * Rational(-1);
  }

  AlgebraElement AlgebraElement::operator*(Rational const& q) const {
    if (sgn(q) == 0) {
      return {};
    }
    AlgebraElement out = *this;
    for (auto& [id, c] : out._terms) {
      c *= q;
    }
    return out;
  }

  void GroupAlgebraMatrix::add(std::size_t row, std::size_t col, std::size_t u,
                               Rational const& q) {
    auto [it, fresh] = _terms.try_emplace(Key{row, col, u}, q);
    if (!fresh) {
      it->second += q;
    }
    if (sgn(it->second) == 0) {
      _terms.erase(it);
    }
  }

  GroupAlgebraMatrix GroupAlgebraMatrix::multiply(GroupAlgebraMatrix const& that,
                                                  WeylGroup const&          W) const {
    if (_entry != that._entry || _d != that._d) {
      throw Error(ErrorCode::DimensionMismatch, "matrices over different algebras");
    }
    GroupAlgebraMatrix out(_entry, _d);
    for (auto const& [a, x] : _terms) {
      for (auto const& [b, y] : that._terms) {
        if (a.col == b.row) {
          out.add(a.row, b.col, W.mul(a.u, b.u), x * y);
        }
      }
    }
    return out;
  }

  MonoidAlgebra::MonoidAlgebra(RennerMonoid const& R) : _R(&R) {
    FaceLattice const& F = R.faces();
    _eta_face.resize(F.size());
    for (FaceId K = 0; K < F.size(); ++K) {
      std::vector<AlgebraElement::Term> t;
      for (FaceId J : F.subfaces(K)) {
        t.emplace_back(static_cast<std::uint32_t>(R.id_of(R.idempotent(J))),
                       Rational(F.mobius(J, K)));
      }
      _eta_face[K] = AlgebraElement(std::move(t));
    }
    CrossSectionLattice const& L = R.cross_section();
    _eta_class.resize(L.size());
    for (std::size_t e = 0; e < L.size(); ++e) {
      AlgebraElement sum;
      for (FaceId K : F.orbit(e)) {
        sum = sum + _eta_face[K];
      }
      _eta_class[e] = std::move(sum);
    }
    _coords.resize(R.size());
    for (std::size_t e = 0; e < L.size(); ++e) {
      for (std::size_t id : R.class_ids(e)) {
        RennerElement s = R.element(id);
        _coords[id] = {F.orbit_position(R.domain(s)), F.orbit_position(R.range(s)),
                       R.group_element_of(e, R.p_projection(e, s))};
      }
    }
  }

  AlgebraElement MonoidAlgebra::multiply(AlgebraElement const& a,
                                         AlgebraElement const& b) const {
    std::vector<AlgebraElement::Term> t;
    t.reserve(a.support_size() * b.support_size());
    for (auto const& [x, p] : a.terms()) {
      for (auto const& [y, q] : b.terms()) {
        t.emplace_back(static_cast<std::uint32_t>(_R->mul_id(x, y)), p * q);
      }
    }
    return AlgebraElement(std::move(t));
  }

  AlgebraElement MonoidAlgebra::left_multiply(std::size_t sigma,
                                              AlgebraElement const& a) const {
    std::vector<AlgebraElement::Term> t;
    t.reserve(a.support_size());
    for (auto const& [y, q] : a.terms()) {
      t.emplace_back(static_cast<std::uint32_t>(_R->mul_id(sigma, y)), q);
    }
    return AlgebraElement(std::move(t));
  }

  AlgebraElement MonoidAlgebra::right_multiply(AlgebraElement const& a,
                                               std::size_t sigma) const {
    std::vector<AlgebraElement::Term> t;
    t.reserve(a.support_size());
    for (auto const& [x, p] : a.terms()) {
      t.emplace_back(static_cast<std::uint32_t>(_R->mul_id(x, sigma)), p);
    }
    return AlgebraElement(std::move(t));
  }

  GroupAlgebraMatrix MonoidAlgebra::psi(std::size_t entry,
                                        AlgebraElement const& a) const {
    return psi_projected(entry, multiply(a, _eta_class[entry]));
  }

  // Every sigma eta_e with sigma in WeW equals sigma plus terms from lower
  // classes, so the WeW coefficients of a in A eta_e are its coordinates in
  // the basis { sigma eta_e }.
  GroupAlgebraMatrix MonoidAlgebra::psi_projected(std::size_t entry,
                                                  AlgebraElement const& a) const {
    CrossSectionLattice const& L = _R->cross_section();
    GroupAlgebraMatrix         m(entry, L[entry].d_e);
    for (auto const& [id, q] : a.terms()) {
      std::size_t const f = _R->class_of(_R->element(id));
      if (f == entry) {
        Coordinates const& c = _coords[id];
        m.add(c.row, c.col, c.u, q);
      } else if (!L.leq[f][entry]) {
        throw Error(ErrorCode::PropertyViolation,
                    "element has support outside R_*(e) at " + witness(*_R, id));
      }
    }
    return m;
  }

  AlgebraElement MonoidAlgebra::psi_inverse(std::size_t entry,
                                            GroupAlgebraMatrix const& m) const {
    CrossSectionEntry const& e = _R->cross_section()[entry];
    if (m.entry() != entry || m.dim() != e.d_e) {
      throw Error(ErrorCode::DimensionMismatch,
                  "matrix size " + std::to_string(m.dim()) + " but d_e = "
                      + std::to_string(e.d_e));
    }
    FaceLattice const&                F     = _R->faces();
    auto const&                       orbit = F.orbit(entry);
    FaceId const                      L     = F.standard_face(entry);
    std::vector<AlgebraElement::Term> t;
    for (auto const& [k, q] : m.terms()) {
      if (k.row >= orbit.size() || k.col >= orbit.size() || !e.W_star.contains(k.u)) {
        throw Error(ErrorCode::DimensionMismatch, "entry outside M_d(QW*(e))");
      }
      RennerElement p = e.is_zero ? _R->zero() : _R->make_element(L, k.u);
      RennerElement s = _R->multiply(
          _R->multiply(_R->transporter(entry, orbit[k.row]).second, p),
          _R->transporter(entry, orbit[k.col]).first);
      AlgebraElement const v = left_multiply(_R->id_of(s), _eta_class[entry]);
      for (auto const& [y, c] : v.terms()) {
        t.emplace_back(y, c * q);
      }
    }
    return AlgebraElement(std::move(t));
  }

  IdempotentReport verify_idempotent_system(MonoidAlgebra const& A) {
    RennerMonoid const& R = A.monoid();
    FaceLattice const&  F = R.faces();
    IdempotentReport    rep;
    auto fail = [](std::string const& what) {
      throw Error(ErrorCode::PropertyViolation, what);
    };
    for (FaceId K = 0; K < F.size(); ++K) {
      for (FaceId J = 0; J < F.size(); ++J) {
        AlgebraElement prod = A.multiply(A.eta_face(K), A.eta_face(J));
        if (K == J ? prod != A.eta_face(J) : !prod.is_zero()) {
          fail("eta_K eta_J != delta eta_J for K = " + std::to_string(K)
               + ", J = " + std::to_string(J));
        }
        ++rep.face_pairs;
      }
      AlgebraElement sum;
      for (FaceId J : F.subfaces(K)) {
        sum = sum + A.eta_face(J);
      }
      if (sum != AlgebraElement::basis(R.id_of(R.idempotent(K)))) {
        fail("e_K is not the sum of eta_J over J in K, K = " + std::to_string(K));
      }
      ++rep.inversion_checks;
    }
    std::size_t const n = R.cross_section().size();
    AlgebraElement    total;
    for (std::size_t e = 0; e < n; ++e) {
      for (std::size_t f = 0; f < n; ++f) {
        AlgebraElement prod = A.multiply(A.eta_class(e), A.eta_class(f));
        if (e == f ? prod != A.eta_class(f) : !prod.is_zero()) {
          fail("eta_e eta_f != delta eta_f for entries " + std::to_string(e) + ", "
               + std::to_string(f));
        }
        ++rep.class_pairs;
      }
      for (std::size_t s = 0; s < R.size(); ++s) {
        if (A.left_multiply(s, A.eta_class(e)) != A.right_multiply(A.eta_class(e), s)) {
          fail("eta_" + std::to_string(e) + " does not commute with "
               + witness(R, s));
        }
        ++rep.central_checks;
      }
      total = total + A.eta_class(e);
    }
    if (total != A.one()) {
      fail("the eta_e do not sum to 1");
    }
    rep.partition_of_unity = true;
    return rep;
  }

  IdealFilter ideal_filter(MonoidAlgebra const& A, std::size_t entry) {
    RennerMonoid const&        R = A.monoid();
    CrossSectionLattice const& L = R.cross_section();
    IdealFilter                out;
    std::vector<bool>          in(R.size(), false);
    for (std::size_t f = 0; f < L.size(); ++f) {
      if (L.leq[f][entry]) {
        for (std::size_t id : R.class_ids(f)) {
          in[id] = true;
          out.elements.push_back(id);
        }
      }
    }
    std::sort(out.elements.begin(), out.elements.end());
    for (std::size_t s = 0; s < R.size(); ++s) {
      for (std::size_t t : out.elements) {
        if (!in[R.mul_id(s, t)] || !in[R.mul_id(t, s)]) {
          throw Error(ErrorCode::PropertyViolation,
                      "R_*(e) is not an ideal: " + witness(R, s) + " and "
                          + witness(R, t));
        }
      }
    }
    // Each sigma eta_f (sigma in WfW, f <= e) lies in QR_*(e) and equals
    // sigma plus terms from classes strictly below f, so these |R_*(e)|
    // vectors are independent and span QR_*(e).
    for (std::size_t f = 0; f < L.size(); ++f) {
      if (!L.leq[f][entry]) {
        continue;
      }
      for (std::size_t id : R.class_ids(f)) {
        AlgebraElement v = A.left_multiply(id, A.eta_class(f));
        for (auto const& [y, q] : v.terms()) {
          std::size_t const g = R.class_of(R.element(y));
          bool const        lead = y == id && q == 1;
          if (!in[y] || (!lead && (g == f || !L.leq[g][f]))) {
            throw Error(ErrorCode::PropertyViolation,
                        "sigma eta_f is not triangular for " + witness(R, id));
          }
        }
        ++out.dimension;
      }
    }
    if (out.dimension != out.elements.size()) {
      throw Error(ErrorCode::PropertyViolation,
                  "dimension of the sum of A eta_f differs from |R_*(e)|");
    }
    return out;
  }

  nlohmann::json to_json(MonoidAlgebra const& A, AlgebraElement const& a) {
    nlohmann::json out = nlohmann::json::array();
    for (auto const& [id, q] : a.terms()) {
      out.push_back({{"element", format_element(A.monoid(), A.monoid().element(id))},
                     {"numerator", q.get_num().get_str()},
                     {"denominator", q.get_den().get_str()}});
    }
    return out;
  }

}  // namespace renner

namespace renner {

  PsiReport verify_psi(MonoidAlgebra const& A, std::size_t entry,
                       std::size_t max_pairs) {
    RennerMonoid const& R   = A.monoid();
    WeylGroup const&    W   = R.group();
    auto const&         ids = R.class_ids(entry);
    std::size_t const   n   = ids.size();
    AlgebraElement const& eta = A.eta_class(entry);
    PsiReport           rep;

    std::vector<GroupAlgebraMatrix> image(n);
    std::vector<AlgebraElement>     sandwich(n);
    for (std::size_t k = 0; k < n; ++k) {
      AlgebraElement const se = A.left_multiply(ids[k], eta);
      image[k]                = A.psi_projected(entry, se);
      auto const& c           = A.coordinates(ids[k]);
      GroupAlgebraMatrix expect(entry, image[k].dim());
      expect.add(c.row, c.col, c.u, Rational(1));
      if (image[k] != expect) {
        throw Error(ErrorCode::PropertyViolation,
                    "psi(sigma eta_e) is not p(sigma) E_IJ for "
                        + format_element(R, R.element(ids[k])));
      }
      if (A.psi_inverse(entry, image[k]) != se) {
        throw Error(ErrorCode::PropertyViolation,
                    "psi_inverse(psi(sigma eta_e)) != sigma eta_e for "
                        + format_element(R, R.element(ids[k])));
      }
      ++rep.round_trips;
      sandwich[k] = A.multiply(eta, se);
    }

    // psi(psi_inverse(u E_IJ)) = u E_IJ on the standard basis.
    CrossSectionEntry const& e = R.cross_section()[entry];
    for (std::size_t i = 0; i < e.d_e; ++i) {
      for (std::size_t j = 0; j < e.d_e; ++j) {
        for (std::size_t u : e.W_star.elements) {
          GroupAlgebraMatrix m(entry, e.d_e);
          m.add(i, j, u, Rational(1));
          if (A.psi_projected(entry, A.psi_inverse(entry, m)) != m) {
            throw Error(ErrorCode::PropertyViolation,
                        "psi(psi_inverse(m)) != m for a matrix unit");
          }
          ++rep.round_trips;
        }
      }
    }

    auto check = [&](std::size_t a, std::size_t b) {
      GroupAlgebraMatrix got = A.psi_projected(entry, A.left_multiply(ids[a], sandwich[b]));
      if (got != image[a].multiply(image[b], W)) {
        throw Error(ErrorCode::PropertyViolation,
                    "psi is not multiplicative on "
                        + format_element(R, R.element(ids[a])) + " and "
                        + format_element(R, R.element(ids[b])));
      }
      ++rep.pairs;
    };
    if (n * n <= max_pairs) {
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          check(a, b);
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

}  // namespace renner

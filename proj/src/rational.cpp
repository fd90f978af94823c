#include "renner/rational.hpp"

#include <cassert>
#include <sstream>

#include "renner/error.hpp"

namespace renner {

  std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::UnsupportedType: return "UnsupportedType";
      case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
      case ErrorCode::GroupTooLarge: return "GroupTooLarge";
      case ErrorCode::ZeroWeight: return "ZeroWeight";
      case ErrorCode::LatticeInconsistent: return "LatticeInconsistent";
      case ErrorCode::NotAFacePair: return "NotAFacePair";
      case ErrorCode::BadJ: return "BadJ";
      case ErrorCode::NotInWe: return "NotInWe";
      case ErrorCode::FaceNotInOrbit: return "FaceNotInOrbit";
      case ErrorCode::WrongClass: return "WrongClass";
      case ErrorCode::NotProjective: return "NotProjective";
      case ErrorCode::ClosureViolation: return "ClosureViolation";
      case ErrorCode::PropertyViolation: return "PropertyViolation";
      case ErrorCode::DimensionMismatch: return "DimensionMismatch";
      case ErrorCode::NotIntegerValued: return "NotIntegerValued";
      case ErrorCode::UnsupportedComponent: return "UnsupportedComponent";
      case ErrorCode::MismatchWitness: return "MismatchWitness";
      case ErrorCode::BadElement: return "BadElement";
    }
    return "Unknown";
  }

  QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = 1;
    }
    return m;
  }

  QMatrix QMatrix::operator*(QMatrix const& that) const {
    assert(_cols == that._rows);
    QMatrix  out(_rows, that._cols);
    Rational tmp;
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t k = 0; k < _cols; ++k) {
        Rational const& a = (*this)(i, k);
        if (sgn(a) == 0) {
          continue;
        }
        for (std::size_t j = 0; j < that._cols; ++j) {
          Rational const& b = that(k, j);
          if (sgn(b) == 0) {
            continue;
          }
          mpq_mul(tmp.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
          out(i, j) += tmp;
        }
      }
    }
    return out;
  }

  QMatrix QMatrix::operator+(QMatrix const& that) const {
    QMatrix out(*this);
    out += that;
    return out;
  }

  QMatrix& QMatrix::operator+=(QMatrix const& that) {
    assert(_rows == that._rows && _cols == that._cols);
    for (std::size_t i = 0; i < _data.size(); ++i) {
      _data[i] += that._data[i];
    }
    return *this;
  }

  bool QMatrix::operator==(QMatrix const& that) const {
    return _rows == that._rows && _cols == that._cols && _data == that._data;
  }

  QMatrix QMatrix::transpose() const {
    QMatrix out(_cols, _rows);
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t j = 0; j < _cols; ++j) {
        out(j, i) = (*this)(i, j);
      }
    }
    return out;
  }

  Rational QMatrix::trace() const {
    Rational t;
    for (std::size_t i = 0; i < std::min(_rows, _cols); ++i) {
      t += (*this)(i, i);
    }
    return t;
  }

  bool QMatrix::is_zero() const {
    for (auto const& x : _data) {
      if (sgn(x) != 0) {
        return false;
      }
    }
    return true;
  }

  QMatrix QMatrix::kron(QMatrix const& that) const {
    QMatrix out(_rows * that._rows, _cols * that._cols);
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t j = 0; j < _cols; ++j) {
        Rational const& a = (*this)(i, j);
        if (sgn(a) == 0) {
          continue;
        }
        for (std::size_t k = 0; k < that._rows; ++k) {
          for (std::size_t l = 0; l < that._cols; ++l) {
            out(i * that._rows + k, j * that._cols + l) = a * that(k, l);
          }
        }
      }
    }
    return out;
  }

  int QMatrix::lex_compare(QMatrix const& that) const {
    assert(_data.size() == that._data.size());
    for (std::size_t i = 0; i < _data.size(); ++i) {
      int c = cmp(_data[i], that._data[i]);
      if (c != 0) {
        return c < 0 ? -1 : 1;
      }
    }
    return 0;
  }

  std::size_t hash_rational(Rational const& q) {
    // mpq values are canonical, so hashing the low limbs is consistent with
    // equality.
    std::size_t h = std::hash<long>()(mpz_get_si(q.get_num_mpz_t()));
    h ^= std::hash<long>()(mpz_get_si(q.get_den_mpz_t())) + 0x9e3779b97f4a7c15ULL
         + (h << 6) + (h >> 2);
    return h;
  }

  std::size_t QMatrix::hash() const {
    std::size_t h = _rows * 31 + _cols;
    for (auto const& x : _data) {
      h ^= hash_rational(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

  QVector row_times(QVector const& v, QMatrix const& m) {
    assert(v.size() == m.rows());
    QVector out(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (sgn(v[i]) == 0) {
        continue;
      }
      for (std::size_t j = 0; j < m.cols(); ++j) {
        out[j] += v[i] * m(i, j);
      }
    }
    return out;
  }

  Rational dot(QVector const& a, QVector const& b) {
    assert(a.size() == b.size());
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) {
      s += a[i] * b[i];
    }
    return s;
  }

  std::size_t rank_of(std::vector<QVector> rows) {
    if (rows.empty()) {
      return 0;
    }
    std::size_t const ncols = rows.front().size();
    std::size_t       rank  = 0;
    for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
      std::size_t pivot = rank;
      while (pivot < rows.size() && sgn(rows[pivot][col]) == 0) {
        ++pivot;
      }
      if (pivot == rows.size()) {
        continue;
      }
      std::swap(rows[rank], rows[pivot]);
      for (std::size_t r = rank + 1; r < rows.size(); ++r) {
        if (sgn(rows[r][col]) == 0) {
          continue;
        }
        Rational f = rows[r][col] / rows[rank][col];
        for (std::size_t c = col; c < ncols; ++c) {
          rows[r][c] -= f * rows[rank][c];
        }
      }
      ++rank;
    }
    return rank;
  }

  int lex_compare(QVector const& a, QVector const& b) {
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
      int c = cmp(a[i], b[i]);
      if (c != 0) {
        return c < 0 ? -1 : 1;
      }
    }
    return a.size() < b.size() ? -1 : (a.size() > b.size() ? 1 : 0);
  }

  std::string to_string(QVector const& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
      os << (i ? "," : "") << v[i].get_str();
    }
    os << ')';
    return os.str();
  }

  std::size_t QVectorHash::operator()(QVector const& v) const {
    std::size_t h = v.size();
    for (auto const& x : v) {
      h ^= hash_rational(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

}  // namespace renner

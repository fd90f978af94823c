#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace renner {

  using Rational = mpq_class;
  using QVector  = std::vector<Rational>;

  //! Dense row-major matrix over Q.
  class QMatrix {
   public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols)
        : _rows(rows), _cols(cols), _data(rows * cols) {}

    static QMatrix identity(std::size_t n);
    static QMatrix zero(std::size_t rows, std::size_t cols) {
      return QMatrix(rows, cols);
    }

    std::size_t rows() const noexcept {
      return _rows;
    }
    std::size_t cols() const noexcept {
      return _cols;
    }

    Rational& operator()(std::size_t i, std::size_t j) {
      return _data[i * _cols + j];
    }
    Rational const& operator()(std::size_t i, std::size_t j) const {
      return _data[i * _cols + j];
    }

    std::vector<Rational> const& data() const noexcept {
      return _data;
    }

    QMatrix  operator*(QMatrix const& that) const;
    QMatrix  operator+(QMatrix const& that) const;
    QMatrix& operator+=(QMatrix const& that);
    bool     operator==(QMatrix const& that) const;
    bool     operator!=(QMatrix const& that) const {
      return !(*this == that);
    }

    QMatrix  transpose() const;
    Rational trace() const;
    bool     is_zero() const;

    //! Kronecker product, `this` indexing the outer blocks.
    QMatrix kron(QMatrix const& that) const;

    //! Lexicographic comparison of the flattened row-major entries.
    int lex_compare(QMatrix const& that) const;

    std::size_t hash() const;

   private:
    std::size_t           _rows = 0;
    std::size_t           _cols = 0;
    std::vector<Rational> _data;
  };

  //! Row vector times matrix: v * M.
  QVector row_times(QVector const& v, QMatrix const& m);

  Rational dot(QVector const& a, QVector const& b);

  //! Rank of a list of vectors (exact Gaussian elimination).
  std::size_t rank_of(std::vector<QVector> rows);

  int lex_compare(QVector const& a, QVector const& b);

  std::size_t hash_rational(Rational const& q);

  std::string to_string(QVector const& v);

  struct QVectorHash {
    std::size_t operator()(QVector const& v) const;
  };

}  // namespace renner

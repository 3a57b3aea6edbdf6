#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cliffsyl/multivector.hpp"

namespace cliffsyl {

// Dense row-major square matrix.
template <class T>
class Matrix {
 public:
  explicit Matrix(std::size_t dim) : dim_(dim), data_(dim * dim, T(0)) {}

  static Matrix identity(std::size_t dim) {
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t dim() const noexcept { return dim_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix out(a.dim_);
    for (std::size_t i = 0; i < a.dim_; ++i)
      for (std::size_t k = 0; k < a.dim_; ++k) {
        if (ScalarTraits<T>::is_zero(a(i, k))) continue;
        for (std::size_t j = 0; j < a.dim_; ++j) out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.dim_ == b.dim_ && a.data_ == b.data_;
  }

  std::vector<T> apply(const std::vector<T>& x) const {
    std::vector<T> y(dim_, T(0));
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) y[i] += (*this)(i, j) * x[j];
    return y;
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& v : data_) m = std::max(m, std::fabs(ScalarTraits<T>::to_double(v)));
    return m;
  }

 private:
  std::size_t dim_;
  std::vector<T> data_;
};

enum class Side { Left, Right };

// flatten(a x) = L_a flatten(x), flatten(x b) = R_b flatten(x); flatten is the
// coefficient vector in blade-mask order.
template <class T>
struct MultiplicationMatrix {
  Signature sig;
  Side side;
  Matrix<T> entries;
};

template <class T>
MultiplicationMatrix<T> left_matrix(const Multivector<T>& a);

template <class T>
MultiplicationMatrix<T> right_matrix(const Multivector<T>& b);

template <class T>
std::vector<T> flatten(const Multivector<T>& a) {
  return {a.coeffs().begin(), a.coeffs().end()};
}

enum class OracleStatus { Unique, Underdetermined, Inconsistent };

const char* to_string(OracleStatus s);

template <class T>
struct OracleOutcome {
  OracleStatus status;
  std::optional<Multivector<T>> particular;  // absent iff Inconsistent
  std::size_t rank;
  std::size_t nullity;                         // 2^n - rank
  std::vector<Multivector<T>> nullspace;       // filled only on request
};

struct OracleOptions {
  bool want_nullspace = false;
  // Float mode: pivots below rank_tolerance * max|M| count as zero.
  double rank_tolerance = 1e-10;
};

// Result of eliminating M x = rhs.
template <class T>
struct LinearSolution {
  OracleStatus status;
  std::optional<std::vector<T>> particular;
  std::size_t rank;
  std::vector<std::vector<T>> nullspace;
};

// Rational: fraction-free (Bareiss) elimination on the integer-scaled
// augmented system, exact back substitution. Double: partial pivoting.
template <class T>
LinearSolution<T> solve_linear(const Matrix<T>& m, const std::vector<T>& rhs, const OracleOptions& opts = {});

// Solves (L_a + R_b) x = c over blade coefficients.
template <class T>
OracleOutcome<T> oracle_solve(const Multivector<T>& a, const Multivector<T>& b, const Multivector<T>& c,
                              const OracleOptions& opts = {});

// Solves a x = 1; nullopt when L_a is singular.
template <class T>
std::optional<Multivector<T>> oracle_inverse(const Multivector<T>& a, const OracleOptions& opts = {});

extern template MultiplicationMatrix<Rational> left_matrix(const Multivector<Rational>&);
extern template MultiplicationMatrix<double> left_matrix(const Multivector<double>&);
extern template MultiplicationMatrix<Rational> right_matrix(const Multivector<Rational>&);
extern template MultiplicationMatrix<double> right_matrix(const Multivector<double>&);
template <>
LinearSolution<Rational> solve_linear(const Matrix<Rational>&, const std::vector<Rational>&, const OracleOptions&);
template <>
LinearSolution<double> solve_linear(const Matrix<double>&, const std::vector<double>&, const OracleOptions&);
extern template OracleOutcome<Rational> oracle_solve(const Multivector<Rational>&, const Multivector<Rational>&,
                                                     const Multivector<Rational>&, const OracleOptions&);
extern template OracleOutcome<double> oracle_solve(const Multivector<double>&, const Multivector<double>&,
                                                   const Multivector<double>&, const OracleOptions&);
extern template std::optional<Multivector<Rational>> oracle_inverse(const Multivector<Rational>&,
                                                                    const OracleOptions&);
extern template std::optional<Multivector<double>> oracle_inverse(const Multivector<double>&,
                                                                  const OracleOptions&);

}  // namespace cliffsyl

#include "cliffsyl/oracle.hpp"

#include <cmath>
#include <utility>

namespace cliffsyl {

const char* to_string(OracleStatus s) {
  switch (s) {
    case OracleStatus::Unique: return "unique";
    case OracleStatus::Underdetermined: return "underdetermined";
    case OracleStatus::Inconsistent: return "inconsistent";
  }
  return "?";
}

template <class T>
MultiplicationMatrix<T> left_matrix(const Multivector<T>& a) {
  const Signature& sig = a.signature();
  const std::uint32_t count = sig.blade_count();
  Matrix<T> m(count);
  for (std::uint32_t j = 0; j < count; ++j) {
    const Multivector<T> col = a * Multivector<T>::blade(sig, {j});
    for (std::uint32_t i = 0; i < count; ++i) m(i, j) = col[i];
  }
  return {sig, Side::Left, std::move(m)};
}

template <class T>
MultiplicationMatrix<T> right_matrix(const Multivector<T>& b) {
  const Signature& sig = b.signature();
  const std::uint32_t count = sig.blade_count();
  Matrix<T> m(count);
  for (std::uint32_t j = 0; j < count; ++j) {
    const Multivector<T> col = Multivector<T>::blade(sig, {j}) * b;
    for (std::uint32_t i = 0; i < count; ++i) m(i, j) = col[i];
  }
  return {sig, Side::Right, std::move(m)};
}

namespace {

// Row-echelon form of an augmented system: pivots[r] is the column of the
// pivot in row r.
struct Echelon {
  std::vector<std::size_t> pivots;
  bool consistent = true;
};

// Back substitution with free variables fixed by `free_values` (indexed by
// column; pivot columns are overwritten). `rows` holds the echelon rows, the
// last entry of each row is the right-hand side unless `homogeneous`.
template <class T, class Row>
std::vector<T> back_substitute(const std::vector<Row>& rows, const std::vector<std::size_t>& pivots,
                               std::size_t cols, std::vector<T> x, bool homogeneous, auto&& to_field) {
  for (std::size_t r = pivots.size(); r-- > 0;) {
    const std::size_t pc = pivots[r];
    T acc = homogeneous ? T(0) : T(to_field(rows[r][cols]));
    for (std::size_t j = pc + 1; j < cols; ++j)
      if (!ScalarTraits<T>::is_zero(x[j])) acc -= T(to_field(rows[r][j])) * x[j];
    x[pc] = acc / T(to_field(rows[r][pc]));
  }
  return x;
}

template <class T, class Row>
LinearSolution<T> finish(const std::vector<Row>& rows, const Echelon& ech, std::size_t cols,
                         const OracleOptions& opts, auto&& to_field) {
  LinearSolution<T> out{OracleStatus::Unique, std::nullopt, ech.pivots.size(), {}};
  if (!ech.consistent) {
    out.status = OracleStatus::Inconsistent;
  } else {
    out.status = ech.pivots.size() == cols ? OracleStatus::Unique : OracleStatus::Underdetermined;
    out.particular = back_substitute<T>(rows, ech.pivots, cols, std::vector<T>(cols, T(0)), false, to_field);
  }
  if (opts.want_nullspace) {
    std::vector<bool> is_pivot(cols, false);
    for (auto p : ech.pivots) is_pivot[p] = true;
    for (std::size_t f = 0; f < cols; ++f) {
      if (is_pivot[f]) continue;
      std::vector<T> x(cols, T(0));
      x[f] = T(1);
      out.nullspace.push_back(back_substitute<T>(rows, ech.pivots, cols, std::move(x), true, to_field));
    }
  }
  return out;
}

LinearSolution<Rational> solve_exact(const Matrix<Rational>& m, const std::vector<Rational>& rhs,
                                     const OracleOptions& opts) {
  const std::size_t n = m.dim();
  // Clear denominators row by row so elimination runs over the integers.
  std::vector<std::vector<mpz_class>> rows(n, std::vector<mpz_class>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class lcm = rhs[i].get_den();
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = m(i, j).get_num() * (lcm / m(i, j).get_den());
    rows[i][n] = rhs[i].get_num() * (lcm / rhs[i].get_den());
  }

  Echelon ech;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < n; ++col) {
    std::size_t pivot = r;
    while (pivot < n && rows[pivot][col] == 0) ++pivot;
    if (pivot == n) continue;
    std::swap(rows[pivot], rows[r]);
    for (std::size_t i = r + 1; i < n; ++i) {
      for (std::size_t j = col + 1; j <= n; ++j) {
        mpz_class v = rows[r][col] * rows[i][j] - rows[i][col] * rows[r][j];
        mpz_divexact(rows[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      rows[i][col] = 0;
    }
    prev = rows[r][col];
    ech.pivots.push_back(col);
    ++r;
  }
  for (std::size_t i = r; i < n; ++i)
    if (rows[i][n] != 0) ech.consistent = false;

  return finish<Rational>(rows, ech, n, opts, [](const mpz_class& z) { return Rational(z); });
}

LinearSolution<double> solve_float(const Matrix<double>& m, const std::vector<double>& rhs,
                                   const OracleOptions& opts) {
  const std::size_t n = m.dim();
  std::vector<std::vector<double>> rows(n, std::vector<double>(n + 1));
  double rhs_max = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = m(i, j);
    rows[i][n] = rhs[i];
    rhs_max = std::max(rhs_max, std::fabs(rhs[i]));
  }
  const double pivot_tol = opts.rank_tolerance * m.max_abs();

  Echelon ech;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < n; ++col) {
    std::size_t pivot = r;
    for (std::size_t i = r + 1; i < n; ++i)
      if (std::fabs(rows[i][col]) > std::fabs(rows[pivot][col])) pivot = i;
    if (std::fabs(rows[pivot][col]) <= pivot_tol) {
      for (std::size_t i = r; i < n; ++i) rows[i][col] = 0.0;
      continue;
    }
    std::swap(rows[pivot], rows[r]);
    for (std::size_t i = r + 1; i < n; ++i) {
      const double f = rows[i][col] / rows[r][col];
      for (std::size_t j = col; j <= n; ++j) rows[i][j] -= f * rows[r][j];
      rows[i][col] = 0.0;
    }
    ech.pivots.push_back(col);
    ++r;
  }
  const double rhs_tol = opts.rank_tolerance * (m.max_abs() + rhs_max);
  for (std::size_t i = r; i < n; ++i)
    if (std::fabs(rows[i][n]) > rhs_tol) ech.consistent = false;

  return finish<double>(rows, ech, n, opts, [](double v) { return v; });
}

}  // namespace

template <>
LinearSolution<Rational> solve_linear(const Matrix<Rational>& m, const std::vector<Rational>& rhs,
                                      const OracleOptions& opts) {
  return solve_exact(m, rhs, opts);
}

template <>
LinearSolution<double> solve_linear(const Matrix<double>& m, const std::vector<double>& rhs,
                                    const OracleOptions& opts) {
  return solve_float(m, rhs, opts);
}

template <class T>
OracleOutcome<T> oracle_solve(const Multivector<T>& a, const Multivector<T>& b, const Multivector<T>& c,
                              const OracleOptions& opts) {
  a.require_same_signature(b);
  a.require_same_signature(c);
  const Signature& sig = a.signature();
  const Matrix<T> system = left_matrix(a).entries + right_matrix(b).entries;
  LinearSolution<T> sol = solve_linear(system, flatten(c), opts);

  OracleOutcome<T> out{sol.status, std::nullopt, sol.rank, sig.blade_count() - sol.rank, {}};
  if (sol.particular) out.particular = Multivector<T>(sig, std::move(*sol.particular));
  for (auto& v : sol.nullspace) out.nullspace.emplace_back(sig, std::move(v));
  return out;
}

template <class T>
std::optional<Multivector<T>> oracle_inverse(const Multivector<T>& a, const OracleOptions& opts) {
  const Signature& sig = a.signature();
  LinearSolution<T> sol = solve_linear(left_matrix(a).entries, flatten(Multivector<T>::scalar(sig, T(1))), opts);
  if (sol.status != OracleStatus::Unique) return std::nullopt;
  return Multivector<T>(sig, std::move(*sol.particular));
}

template MultiplicationMatrix<Rational> left_matrix(const Multivector<Rational>&);
template MultiplicationMatrix<double> left_matrix(const Multivector<double>&);
template MultiplicationMatrix<Rational> right_matrix(const Multivector<Rational>&);
template MultiplicationMatrix<double> right_matrix(const Multivector<double>&);
template OracleOutcome<Rational> oracle_solve(const Multivector<Rational>&, const Multivector<Rational>&,
                                              const Multivector<Rational>&, const OracleOptions&);
template OracleOutcome<double> oracle_solve(const Multivector<double>&, const Multivector<double>&,
                                            const Multivector<double>&, const OracleOptions&);
template std::optional<Multivector<Rational>> oracle_inverse(const Multivector<Rational>&, const OracleOptions&);
template std::optional<Multivector<double>> oracle_inverse(const Multivector<double>&, const OracleOptions&);

}  // namespace cliffsyl
